// bct: boolean complex toolkit command line front end.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bct/chain.hpp"
#include "bct/graph.hpp"
#include "bct/homology.hpp"
#include "bct/permutation.hpp"

using namespace bct;
using nlohmann::json;

namespace {

constexpr int kSweepCap = 6;

struct GraphInput {
  std::string file;
  std::vector<std::string> family;  // tag, parameter
};

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int value = std::stoi(s, &pos);
  if (pos != s.size()) throw std::runtime_error("not an integer: \"" + s + "\"");
  return value;
}

void add_graph_input(CLI::App* cmd, GraphInput& in, bool positional = true) {
  CLI::Option* file_opt = positional
                              ? cmd->add_option("file", in.file, "graph file")
                              : cmd->add_option("--graph", in.file, "graph file");
  CLI::Option* fam_opt =
      cmd->add_option("--family", in.family, "graph family tag and parameter, e.g. --family K 4")
          ->expected(2);
  file_opt->excludes(fam_opt);
  fam_opt->excludes(file_opt);
}

bool has_input(const GraphInput& in) { return !in.file.empty() || !in.family.empty(); }

OrderedGraph load_graph(const GraphInput& in) {
  if (!in.family.empty())
    return make_family(parse_family(in.family[0]), parse_int(in.family[1]));
  if (in.file.empty()) throw std::runtime_error("no graph given: pass a file or --family");
  std::ifstream is(in.file);
  if (!is) throw std::runtime_error("cannot open \"" + in.file + "\"");
  std::stringstream buffer;
  buffer << is.rdbuf();
  return parse_graph(buffer.str());
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw std::runtime_error("cannot write \"" + out_path + "\"");
  os << content;
}

json permutation_to_json(const CyclePermutation& w) {
  json cycles = json::array();
  for (const auto& c : w.cycles()) cycles.push_back(c);
  return cycles;
}

json chain_terms_to_json(const ChainF2& chain) {
  json terms = json::array();
  for (const auto& t : chain.terms()) terms.push_back(t);
  return terms;
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "graph: " << r.graph << "\n"
     << "beta: " << r.beta << "\n"
     << "derangements (recursive): " << r.d_count_recursive << "\n"
     << "derangements (criterion): " << r.d_count_criterion << "\n"
     << "kernel dimension: " << r.kernel_dim << "\n"
     << "basis rank: " << r.basis_rank << "\n"
     << "cycles closed: " << (r.cycles_closed ? "yes" : "no") << "\n"
     << "verdict: " << r.verdict() << "\n";
  return os.str();
}

OrderedGraph graph_from_mask(int n, unsigned mask) {
  std::vector<Edge> edges;
  unsigned bit = 0;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v, ++bit)
      if (mask >> bit & 1u) edges.emplace_back(u, v);
  return OrderedGraph::on_vertices(n, edges);
}

int run_beta(const GraphInput& in, const std::string& format, const std::string& out) {
  OrderedGraph g = load_graph(in);
  std::int64_t beta = beta_recursive(g);
  if (format == "json")
    emit(out, json{{"graph", graph_label(g)}, {"beta", beta}}.dump() + "\n");
  else
    emit(out, std::to_string(beta) + "\n");
  return 0;
}

int run_derangements(const GraphInput& in, const std::string& method,
                     std::optional<int> cycles, const std::string& format,
                     const std::string& out) {
  OrderedGraph g = load_graph(in);
  std::vector<CyclePermutation> result;
  bool compared = false;
  bool equal = true;
  if (method == "criterion") {
    result = derangements_by_criterion(g);
  } else {
    result = derangements_recursive(g);
    if (method == "both") {
      compared = true;
      equal = (result == derangements_by_criterion(g));
    }
  }
  if (cycles)
    std::erase_if(result, [&](const CyclePermutation& w) { return w.cycle_count() != *cycles; });

  if (format == "json") {
    json j{{"graph", graph_label(g)}, {"method", method}, {"count", result.size()}};
    json list = json::array();
    for (const auto& w : result) list.push_back(permutation_to_json(w));
    j["derangements"] = std::move(list);
    if (compared) j["equal"] = equal;
    emit(out, j.dump() + "\n");
  } else {
    std::ostringstream os;
    for (const auto& w : result) os << w.str() << "\n";
    if (compared) os << (equal ? "EQUAL" : "DIFFER") << "\n";
    emit(out, os.str());
  }
  return compared && !equal ? 2 : 0;
}

struct SweepGroup {
  int n = 0;
  unsigned graphs = 0;
  unsigned passed = 0;
};

SweepGroup sweep_vertex_count(int n, unsigned jobs) {
  const unsigned total = 1u << (n * (n - 1) / 2);
  std::vector<unsigned char> pass(total, 0);
  std::atomic<unsigned> next{0};
  auto worker = [&] {
    for (;;) {
      unsigned mask = next.fetch_add(1);
      if (mask >= total) return;
      pass[mask] = verify_basis(graph_from_mask(n, mask)).pass ? 1 : 0;
    }
  };
  std::vector<std::thread> threads;
  for (unsigned i = 1; i < jobs; ++i) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  SweepGroup group;
  group.n = n;
  group.graphs = total;
  for (unsigned char p : pass) group.passed += p;
  return group;
}

int run_verify(const GraphInput& in, std::optional<int> sweep, bool unsafe, unsigned jobs,
               const std::string& format, const std::string& out) {
  if (sweep) {
    if (*sweep < 1) throw std::runtime_error("--sweep needs a positive vertex bound");
    if (*sweep > kSweepCap && !unsafe)
      throw std::runtime_error("--sweep above " + std::to_string(kSweepCap) +
                               " vertices needs --unsafe");
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    std::vector<SweepGroup> groups;
    for (int n = 1; n <= *sweep; ++n) groups.push_back(sweep_vertex_count(n, jobs));
    unsigned total = 0, passed = 0;
    for (const auto& g : groups) {
      total += g.graphs;
      passed += g.passed;
    }
    if (format == "json") {
      json rows = json::array();
      for (const auto& g : groups)
        rows.push_back({{"n", g.n}, {"graphs", g.graphs}, {"pass", g.passed}});
      emit(out, json{{"sweep", *sweep},
                     {"groups", rows},
                     {"total_graphs", total},
                     {"total_pass", passed},
                     {"all_pass", total == passed}}
                        .dump() +
                    "\n");
    } else {
      std::ostringstream os;
      for (const auto& g : groups)
        os << "n=" << g.n << ": " << g.graphs << " graphs, " << g.passed << " PASS\n";
      os << "total: " << total << " graphs, " << passed << " PASS\n";
      emit(out, os.str());
    }
    return total == passed ? 0 : 2;
  }
  VerificationReport r = verify_basis(load_graph(in));
  if (format == "json")
    emit(out, report_to_json(r) + "\n");
  else
    emit(out, report_text(r));
  return r.pass ? 0 : 2;
}

int run_tables(const std::string& identity, std::optional<int> max_param,
               const std::string& format, const std::string& out) {
  struct Row {
    int n;
    std::int64_t beta;
    std::int64_t oracle;
  };
  std::vector<Row> rows;
  int cap = 0;
  int first = 1;
  std::string beta_column, oracle_column;
  if (identity == "derangement") {
    cap = 7;
    beta_column = "beta(K_n)";
    oracle_column = "d_n";
  } else if (identity == "genocchi") {
    cap = 4;
    beta_column = "beta(F_r)";
    oracle_column = "|AE_2r|";
  } else {
    cap = 10;
    beta_column = "beta(A_n)";
    oracle_column = "|VP|";
  }
  int limit = max_param.value_or(cap);
  if (limit < first || limit > cap)
    throw std::runtime_error("--max for " + identity + " must lie in " +
                             std::to_string(first) + ".." + std::to_string(cap));
  for (int n = first; n <= limit; ++n) {
    Row row{n, 0, 0};
    if (identity == "derangement") {
      row.beta = beta_recursive(make_family(Family::K, n));
      std::vector<int> values(n);
      for (int i = 0; i < n; ++i) values[i] = i + 1;
      row.oracle = static_cast<std::int64_t>(all_derangements(values).size());
    } else if (identity == "genocchi") {
      row.beta = beta_recursive(make_family(Family::F, n));
      row.oracle = static_cast<std::int64_t>(alternating_excedance_set(n).size());
    } else {
      row.beta = beta_recursive(make_family(Family::A, n));
      std::vector<int> letters(n);
      for (int i = 0; i < n; ++i) letters[i] = i + 1;
      row.oracle = static_cast<std::int64_t>(valid_parsings(letters).size());
    }
    rows.push_back(row);
  }
  if (format == "json") {
    json list = json::array();
    for (const auto& r : rows)
      list.push_back(
          {{"n", r.n}, {"beta", r.beta}, {"oracle", r.oracle}, {"match", r.beta == r.oracle}});
    emit(out, json{{"identity", identity}, {"rows", list}}.dump() + "\n");
  } else {
    std::ostringstream os;
    os << "n\t" << beta_column << "\t" << oracle_column << "\tmatch\n";
    for (const auto& r : rows)
      os << r.n << "\t" << r.beta << "\t" << r.oracle << "\t"
         << (r.beta == r.oracle ? "ok" : "MISMATCH") << "\n";
    emit(out, os.str());
  }
  return 0;
}

int run_phi(const std::string& perm_text, const GraphInput& in, const std::string& format,
            const std::string& out) {
  CyclePermutation w = parse_permutation(perm_text);
  if (!w.is_derangement())
    throw std::runtime_error("phi needs a derangement; \"" + w.str() + "\" has a fixed point");
  ChainF2 chain = has_input(in) ? phi_graph(w, load_graph(in)) : phi_complete(w);
  if (format == "json") {
    emit(out, json{{"permutation", w.str()},
                   {"terms", chain_terms_to_json(chain)},
                   {"count", chain.term_count()}}
                      .dump() +
                  "\n");
  } else {
    std::ostringstream os;
    for (const auto& term : chain.terms()) {
      for (std::size_t i = 0; i < term.size(); ++i) os << (i ? " " : "") << term[i];
      os << "\n";
    }
    os << "terms: " << chain.term_count() << "\n";
    emit(out, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boolean complex toolkit: boolean numbers, derangement sets and "
               "homology bases of graph boolean complexes"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string format = "text";
  std::string out_path;

  auto add_output_options = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("-o,--output", out_path, "write to a file instead of stdout");
  };

  GraphInput beta_in;
  CLI::App* beta_cmd = app.add_subcommand("beta", "boolean number of a graph");
  add_graph_input(beta_cmd, beta_in);
  add_output_options(beta_cmd);
  beta_cmd->callback([&] { exit_code = run_beta(beta_in, format, out_path); });

  GraphInput der_in;
  std::string method = "recursive";
  std::optional<int> cycles_filter;
  CLI::App* der_cmd = app.add_subcommand("derangements", "derangement set of a graph");
  add_graph_input(der_cmd, der_in);
  der_cmd->add_option("--method", method, "construction to use")
      ->check(CLI::IsMember({"recursive", "criterion", "both"}));
  der_cmd->add_option("--cycles", cycles_filter, "keep only members with this many cycles");
  add_output_options(der_cmd);
  der_cmd->callback(
      [&] { exit_code = run_derangements(der_in, method, cycles_filter, format, out_path); });

  GraphInput verify_in;
  std::optional<int> sweep;
  bool unsafe = false;
  unsigned jobs = 0;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "certify the derangement basis of a graph");
  add_graph_input(verify_cmd, verify_in);
  verify_cmd->add_option("--sweep", sweep, "verify all labeled graphs with up to n vertices");
  verify_cmd->add_flag("--unsafe", unsafe, "allow sweeps past the built-in bound");
  verify_cmd->add_option("--jobs", jobs, "worker threads for sweeps (default: all cores)");
  add_output_options(verify_cmd);
  verify_cmd->callback(
      [&] { exit_code = run_verify(verify_in, sweep, unsafe, jobs, format, out_path); });

  std::string identity;
  std::optional<int> max_param;
  CLI::App* tables_cmd = app.add_subcommand("tables", "identity tables for graph families");
  tables_cmd->add_option("--identity", identity, "which identity to tabulate")
      ->check(CLI::IsMember({"derangement", "genocchi", "fibonacci"}))
      ->required();
  tables_cmd->add_option("--max", max_param, "largest family parameter");
  add_output_options(tables_cmd);
  tables_cmd->callback([&] { exit_code = run_tables(identity, max_param, format, out_path); });

  std::string perm_text;
  GraphInput phi_in;
  CLI::App* phi_cmd = app.add_subcommand("phi", "expand a derangement into a homology chain");
  phi_cmd->add_option("permutation", perm_text, "derangement in cycle form, e.g. \"(1 2)(3 4)\"")
      ->required();
  add_graph_input(phi_cmd, phi_in, /*positional=*/false);
  add_output_options(phi_cmd);
  phi_cmd->callback([&] { exit_code = run_phi(perm_text, phi_in, format, out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}

"""Smoke tests for the python module built from the C++ core."""

import bct


def test_graph_construction():
    g = bct.Graph(3, [(1, 2), (2, 3)])
    assert g.n == 3
    assert g.edges == [(1, 2), (2, 3)]
    assert g == bct.parse_graph("3\n1 2\n2 3\n")
    assert bct.parse_graph(bct.write_graph(g)) == g


def test_beta_values():
    assert bct.beta_recursive(bct.make_family("K", 4)) == 9
    assert bct.beta_recursive(bct.make_family("A", 3)) == 1
    assert bct.beta_recursive(bct.Graph(3)) == 0


def test_edge_operations():
    g = bct.Graph(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
    assert bct.maximal_edge(g) == (2, 4)
    assert bct.contract_edge(g, 2, 4).n == 3
    assert bct.extract_edge(g, 2, 4).edges == [(1, 3)]
    assert bct.beta_recursive(g) == 5


def test_derangement_sets_agree():
    g = bct.Graph(4, [(1, 3), (1, 4), (2, 3), (2, 4)])
    rec = bct.derangements_recursive(g)
    assert rec == bct.derangements_by_criterion(g)
    assert len(rec) == 5
    assert bct.Permutation([[1, 3], [2, 4]]) in rec


def test_permutation_normalization():
    w = bct.Permutation("(3 4 1)(2 6)(5 8 7)")
    assert str(w) == "(1 3 4)(2 6)(5 8 7)"
    assert w.image(1) == 3
    lam, rho = bct.canopy(bct.Permutation("(1 3 4 7 2)(5 6)"), 4)
    assert lam == 3
    assert rho == [4, 7]


def test_phi_chains():
    chain = bct.phi_complete(bct.Permutation("(1 2)"))
    assert chain.terms == [[1, 2], [2, 1]]
    assert bct.differential(chain).is_zero()
    k3 = bct.make_family("K", 3)
    assert bct.phi_graph(bct.Permutation("(1 2 3)"), k3).term_count() == 4


def test_verification_report():
    report = bct.verify_basis(bct.make_family("K", 4))
    assert report.passed
    assert report.verdict == "PASS"
    assert (
        report.beta
        == report.d_count_recursive
        == report.d_count_criterion
        == report.kernel_dim
        == report.basis_rank
        == 9
    )


def test_family_oracles():
    assert bct.coxeter_derangement_set("A", 4) == bct.valid_parsings([1, 2, 3, 4])
    assert len(bct.alternating_excedance_set(2)) == 2
    assert bct.kernel_dimension_top(bct.make_family("K", 3)) == 2

import pytest

import covenum


def path(n):
    g = covenum.Graph(n)
    for i in range(n - 1):
        g.add_edge(i, i + 1)
    return g


def test_parse_and_roundtrip():
    g = covenum.parse_graph("4 3\n0 1\n1 2\n2 3\n")
    assert g.n == 4 and g.m == 3
    assert covenum.write_graph(g) == "4 3\n0 1\n1 2\n2 3\n"
    assert g.neighbors(1) == [0, 2]


def test_connected_vertex_covers_p5():
    fam = covenum.connected_vertex_covers(path(5))
    assert fam == [[1, 2, 3]]
    assert covenum.connected_vertex_covers(path(5), mode="quasipoly") == fam


def test_engines_agree_on_cycle():
    g = covenum.Graph(5)
    for i in range(5):
        g.add_edge(i, (i + 1) % 5)
    degree = sorted(map(tuple, covenum.connected_vertex_covers(g)))
    quasi = sorted(map(tuple, covenum.connected_vertex_covers(g, mode="quasipoly")))
    oracle = sorted(map(tuple, covenum.brute_minimal_family(g, "cvc")))
    assert degree == quasi == oracle


def test_dominating_sets_match_oracle():
    g = path(6)
    got = sorted(map(tuple, covenum.connected_dominating_sets(g)))
    want = sorted(map(tuple, covenum.brute_minimal_family(g, "cds")))
    assert got == want


def test_capacitated_triangle():
    g = covenum.Graph(3)
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(0, 2)
    assert covenum.capacitated_covers(g, [1, 1, 1], kind="vc") == [[0, 1, 2]]
    witness = covenum.cap_feasible(g, [2, 2, 2], [0, 1], kind="vc")
    assert witness is not None and len(witness["alpha"]) == 3
    assert covenum.cap_feasible(g, [1, 1, 1], [0, 1], kind="vc") is None


def test_connected_capacitated():
    g = path(4)
    fam = covenum.connected_capacitated_covers(g, [2, 2, 2, 2])
    assert [1, 2] in fam


def test_min_valid_aug():
    fam = covenum.min_valid_aug(2, 2, [(0, 0), (1, 0), (1, 1)])
    assert fam == [[0]]


def test_errors_are_python_exceptions():
    g = covenum.Graph(4)
    g.add_edge(0, 1)
    g.add_edge(2, 3)
    with pytest.raises(covenum.InputError):
        covenum.connected_vertex_covers(g)
    with pytest.raises(covenum.ParseError):
        covenum.parse_graph("not a graph")


def test_reduction_roundtrip():
    ok, lines = covenum.verify_reduction(2, [[0, 1]], "cvc")
    assert ok, lines
    built = covenum.build_reduction(2, [[0, 1]], "capvc")
    assert built["capacities"] is not None
    trans = covenum.brute_transversals(2, [[0, 1]])
    assert trans == [[0], [1]]

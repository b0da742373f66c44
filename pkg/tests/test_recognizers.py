import pytest

from covernum import (
    CapacityError,
    check_witness,
    complement,
    complete,
    cycle,
    in_class,
    is_bipartite,
    is_chi_eq_omega,
    is_cluster,
    is_co_unipolar,
    is_gsp,
    is_perfect,
    is_unipolar,
    make_graph,
    parse_class_spec,
    parse_f_spec,
)
from covernum.generators import all_graphs, kKl, random_graphs
from covernum.recognizers import CLASS_KINDS, FSpec, identity_f, membership_fn
from oracles import naive_perfect, naive_unipolar

ALL_SPECS = [parse_class_spec(t) for t in (
    "bipartite", "chi-le:2", "chi-le:3", "chi-le-f:identity",
    "chi-le-f:plus:1", "chi-eq-omega", "perfect", "unipolar",
    "co-unipolar", "gsp",
)]


def test_f_spec_parsing():
    assert str(parse_f_spec("identity")) == "identity"
    assert parse_f_spec("plus:2")(3) == 5
    assert parse_f_spec("pow:2")(3) == 9
    assert parse_f_spec("const:4")(61) == 4
    with pytest.raises(ValueError):
        parse_f_spec("plus:-1")
    with pytest.raises(ValueError):
        parse_f_spec("cube:2")
    with pytest.raises(ValueError):
        parse_f_spec("const:0")


def test_f_spec_table_form():
    f = FSpec("table", table=(1, 2, 4, 8))
    assert f(3) == 4
    assert f.majorizes_identity
    with pytest.raises(ValueError):
        f(5)  # table too short
    with pytest.raises(ValueError):
        FSpec("table", table=(1, 1, 2))  # falls below identity
    with pytest.raises(ValueError):
        FSpec("table", table=(2, 1))  # decreasing


def test_f_spec_domain():
    f = identity_f()
    assert f(64) == 64
    with pytest.raises(ValueError):
        f(0)
    with pytest.raises(ValueError):
        f(65)
    assert not FSpec("const", value=3).majorizes_identity
    assert FSpec("plus", value=0).majorizes_identity


def test_class_spec_parsing():
    assert parse_class_spec("chi-le:3").k == 3
    assert parse_class_spec("chi-le-f:plus:1").f(2) == 3
    assert str(parse_class_spec("chi-le-f:pow:2")) == "chi-le-f:pow:2"
    for kind in CLASS_KINDS:
        if kind not in ("chi-le", "chi-le-f"):
            assert parse_class_spec(kind).kind == kind
    with pytest.raises(ValueError):
        parse_class_spec("chi-le:0")
    with pytest.raises(ValueError):
        parse_class_spec("split")
    with pytest.raises(ValueError):
        parse_class_spec("chi-le-f")


def test_bipartite_cycles():
    assert is_bipartite(cycle(6)) is not None
    assert is_bipartite(cycle(7)) is None
    sides = is_bipartite(cycle(4))
    assert sides is not None
    assert sides[0] | sides[1] == 0b1111
    assert sides[0] & sides[1] == 0


def test_cluster_recognition():
    assert is_cluster(make_graph(0, [])) == []
    assert is_cluster(kKl(2, 3)) is not None
    assert is_cluster(cycle(4)) is None
    # P3 is the forbidden pattern
    assert is_cluster(make_graph(3, [(0, 1), (1, 2)])) is None


def test_c4_is_unipolar():
    w = is_unipolar(cycle(4))
    assert w is not None
    a, clusters = w
    assert bin(a).count("1") <= 2


def test_c5_is_nothing_nice():
    c5 = cycle(5)
    assert is_unipolar(c5) is None
    assert is_co_unipolar(c5) is None
    assert is_gsp(c5) is None
    assert is_chi_eq_omega(c5) is None
    ok, bad = is_perfect(c5)
    assert not ok
    assert bad == ("odd-hole", (0, 1, 2, 3, 4))


def test_unipolar_against_naive_oracle():
    for n in range(6):
        for g in all_graphs(n):
            assert (is_unipolar(g) is not None) == naive_unipolar(g)


def test_unipolar_examples():
    assert is_unipolar(complete(5)) is not None
    assert is_unipolar(kKl(3, 4)) is not None
    # complete bipartite K23 minus nothing: P3s everywhere, no split
    k23 = make_graph(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)])
    assert is_unipolar(k23) is None


def test_complete_graphs_are_co_unipolar():
    for n in range(2, 13):
        assert is_co_unipolar(complete(n)) is not None


def test_gsp_is_the_union_of_both_branches():
    for g in random_graphs(6, 60, 13):
        u = is_unipolar(g) is not None
        c = is_co_unipolar(g) is not None
        w = is_gsp(g)
        assert (w is not None) == (u or c)
        if w is not None:
            assert w[0] in ("unipolar", "co-unipolar")


def test_perfect_against_hereditary_oracle():
    for n in range(6):
        for g in all_graphs(n):
            assert is_perfect(g)[0] == naive_perfect(g)


def test_perfect_antihole_witness():
    g = complement(cycle(7))
    ok, bad = is_perfect(g)
    assert not ok
    assert bad[0] == "odd-antihole"
    assert len(bad[1]) == 7


def test_perfect_capacity():
    with pytest.raises(CapacityError):
        is_perfect(make_graph(27, []))


def test_chi_eq_omega_witness():
    w = is_chi_eq_omega(complete(4))
    assert w is not None
    coloring, clique = w
    assert coloring.count == 4
    assert clique.size == 4


def test_in_class_and_check_witness_roundtrip():
    for g in list(all_graphs(4)) + random_graphs(5, 30, 17):
        for spec in ALL_SPECS:
            w = in_class(g, spec)
            if w is not None:
                assert check_witness(g, spec, w), (g, str(spec), w)


def test_check_witness_rejects_tampering():
    g = cycle(4)
    spec = parse_class_spec("bipartite")
    w = in_class(g, spec)
    assert w is not None
    bad = dict(w)
    bad["sides"] = [w["sides"][1], w["sides"][0][:-1]]
    assert not check_witness(g, spec, bad)
    bad = dict(w)
    bad["class"] = "unipolar"
    assert not check_witness(g, spec, bad)

    spec = parse_class_spec("chi-le:2")
    w = in_class(g, spec)
    bad = dict(w)
    bad["coloring"] = [0, 0, 1, 0]
    assert not check_witness(g, spec, bad)

    spec = parse_class_spec("unipolar")
    w = in_class(g, spec)
    bad = dict(w)
    bad["clusters"] = w["clusters"][:-1] if w["clusters"] else [[0]]
    assert not check_witness(g, spec, bad)


def test_membership_fn_matches_in_class():
    for g in random_graphs(5, 40, 19):
        for spec in ALL_SPECS:
            fast = membership_fn(spec)(g.n, g.rows)
            assert fast == (in_class(g, spec) is not None), str(spec)


def test_isolated_vertices_do_not_matter():
    # same graphs plus padding vertices; every class must agree
    base = cycle(5)
    padded = make_graph(9, base.edges())
    for spec in ALL_SPECS:
        assert (in_class(base, spec) is None) == (in_class(padded, spec) is None)

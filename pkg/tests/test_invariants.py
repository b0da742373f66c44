import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covernum import (
    ceil_log,
    check_clique,
    check_coloring,
    chromatic_number,
    clique_number,
    is_k_colorable,
    make_graph,
)
from covernum.generators import (
    all_graphs,
    complete,
    cycle,
    random_graphs,
    triangle_free_chromatic,
)
from covernum.invariants import Coloring, induced_chi_omega
from oracles import brute_chromatic, brute_clique


def test_ceil_log_known_values():
    assert ceil_log(2, 1) == 0
    assert ceil_log(2, 2) == 1
    assert ceil_log(2, 3) == 2
    assert ceil_log(2, 8) == 3
    assert ceil_log(2, 9) == 4
    assert ceil_log(3, 9) == 2
    assert ceil_log(3, 10) == 3
    assert ceil_log(10, 1000) == 3


def test_ceil_log_rejects_bad_args():
    with pytest.raises(ValueError):
        ceil_log(1, 4)
    with pytest.raises(ValueError):
        ceil_log(2, 0)


@given(st.integers(2, 12), st.integers(1, 10**9))
@settings(max_examples=300)
def test_ceil_log_is_least_power(b, x):
    t = ceil_log(b, x)
    assert b**t >= x
    if t:
        assert b ** (t - 1) < x


def test_chromatic_known_graphs():
    assert chromatic_number(make_graph(0, []))[0] == 0
    assert chromatic_number(make_graph(3, []))[0] == 1
    assert chromatic_number(complete(7))[0] == 7
    assert chromatic_number(cycle(6))[0] == 2
    assert chromatic_number(cycle(7))[0] == 3


def test_petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    g = make_graph(10, outer + inner + spokes)
    assert chromatic_number(g)[0] == 3
    assert clique_number(g)[0] == 2


def test_grotzsch():
    g = triangle_free_chromatic(4)
    assert g.n == 11
    assert chromatic_number(g)[0] == 4
    assert clique_number(g)[0] == 2


def test_chromatic_against_brute_force():
    for n in range(5):
        for g in all_graphs(n):
            chi, coloring = chromatic_number(g)
            assert chi == brute_chromatic(g)
            assert check_coloring(g, coloring)
    for g in random_graphs(5, 40, 7):
        chi, coloring = chromatic_number(g)
        assert chi == brute_chromatic(g)
        assert check_coloring(g, coloring)


def test_clique_against_brute_force():
    for n in range(5):
        for g in all_graphs(n):
            omega, witness = clique_number(g)
            assert omega == brute_clique(g)
            assert check_clique(g, witness)
    for g in random_graphs(7, 40, 11):
        omega, witness = clique_number(g)
        assert omega == brute_clique(g)
        assert check_clique(g, witness)


def test_clique_witness_is_lexicographically_least():
    # two maximum cliques; {0,2,3} beats {1,2,3}
    g = make_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    omega, witness = clique_number(g)
    assert omega == 3
    assert witness.vertices == (0, 2, 3)


def test_is_k_colorable_threshold():
    for g in random_graphs(6, 25, 3):
        chi, _ = chromatic_number(g)
        if chi:
            assert is_k_colorable(g, chi - 1) is None
        got = is_k_colorable(g, chi)
        assert got is not None
        assert check_coloring(g, got)


def test_check_coloring_rejects_bad():
    g = make_graph(3, [(0, 1), (1, 2)])
    assert not check_coloring(g, Coloring((0, 0, 1), 2))  # improper
    assert not check_coloring(g, Coloring((0, 2, 0), 3))  # skips color 1
    assert not check_coloring(g, Coloring((0, 1), 2))  # wrong length
    assert check_coloring(g, Coloring((0, 1, 0), 2))


def test_check_clique_rejects_bad():
    g = make_graph(4, [(0, 1), (1, 2)])
    from covernum.invariants import CliqueWitness

    assert check_clique(g, CliqueWitness((0, 1), 2))
    assert not check_clique(g, CliqueWitness((0, 2), 2))
    assert not check_clique(g, CliqueWitness((0, 0), 2))


def test_induced_chi_omega():
    g = cycle(5)
    chi, omega = induced_chi_omega(g, 0b11111)
    assert (chi, omega) == (3, 2)
    # any four vertices of C5 induce a path: bipartite
    chi, omega = induced_chi_omega(g, 0b01111)
    assert (chi, omega) == (2, 2)
    assert induced_chi_omega(g, 0) == (0, 0)


def test_coloring_color_count_is_exact():
    for g in random_graphs(7, 30, 5):
        chi, coloring = chromatic_number(g)
        assert coloring.count == chi
        assert len(set(coloring.colors)) == chi

import pytest

from covernum.verify import (
    DEFAULT_SEED,
    SUITES,
    corpus_graphs,
    run_suite,
    suite_arithmetic,
    suite_chain,
    suite_far3,
    suite_hhm,
    suite_hypercube,
    suite_inclusion,
)


def test_corpus_counts():
    assert len(corpus_graphs(3, 0, 1)) == 1 + 1 + 2 + 8
    assert len(corpus_graphs(5, 10, 1)) == 1100
    got = corpus_graphs(6, 10, 1)
    assert len(got) == 1110
    assert all(g.n == 6 for g in got[-10:])


def test_corpus_is_seeded():
    assert corpus_graphs(6, 5, 1) == corpus_graphs(6, 5, 1)
    assert corpus_graphs(6, 5, 1) != corpus_graphs(6, 5, 2)


def test_suite_registry():
    assert set(SUITES) == {
        "hhm", "chibound", "chain", "far3", "hypercube", "arithmetic", "inclusion",
    }
    with pytest.raises(ValueError):
        run_suite("nonsense")


def test_run_suite_passes_params():
    report = run_suite("hhm", n_max=3, samples=0, seed=9)
    assert report["suite"] == "hhm"
    assert report["params"] == {"n_max": 3, "samples": 0, "seed": 9}
    assert report["instances"] == 12
    assert report["passed"] is True


def test_reports_are_deterministic():
    a = suite_hhm(n_max=4, samples=0)
    b = suite_hhm(n_max=4, samples=0)
    assert a == b


def test_workers_do_not_change_reports():
    serial = suite_hhm(n_max=4, samples=0, workers=1)
    parallel = suite_hhm(n_max=4, samples=0, workers=2)
    assert serial == parallel
    serial = suite_inclusion(n_max=4, samples=0, workers=1)
    parallel = suite_inclusion(n_max=4, samples=0, workers=2)
    assert serial == parallel


def test_arithmetic_suite_sweep():
    report = suite_arithmetic()
    assert report["passed"]
    assert report["instances"] == 60
    assert report["params"]["d_max"] == 62


def test_hypercube_suite_records():
    report = suite_hypercube(n_max=4)
    assert report["passed"]
    by_d = {r["d"]: r for r in report["records"] if "parts" in r}
    assert by_d[4]["parts"] == 4
    assert by_d[4]["part_sizes"] == [8, 8, 8, 8]
    bound_rec = [r for r in report["records"] if "max_unipolar_edges" in r]
    assert bound_rec == [{"d": 3, "max_unipolar_edges": 8, "bound": 8}]


def test_far3_suite_asserts_powers_of_two():
    report = suite_far3()
    assert report["passed"]
    recs = {(r["k"], r["l"]): r for r in report["records"]}
    assert recs[(2, 4)]["computed"] == 2
    assert recs[(2, 4)]["asserted"] is True
    assert recs[(1, 4)]["computed"] == 1
    for (k, l), r in recs.items():
        assert r["asserted"] == (l & (l - 1) == 0)
        if not r["asserted"]:
            assert r["expected"] is None


def test_chain_suite_small():
    report = suite_chain(n_max=4, samples=0)
    assert report["passed"]
    assert report["instances"] == 76


def test_failure_reports_carry_instances():
    # force a failure by lying about the formula: not possible through the
    # public api, so instead check the shape on a passing run
    report = suite_hhm(n_max=3, samples=0)
    assert report["failures"] == []
    assert report["failures_total"] == 0
    assert set(report) == {
        "suite", "params", "instances", "failures", "failures_total", "passed",
    }

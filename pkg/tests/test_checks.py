import pytest

from horolib import checks


def test_unknown_suite_and_scope():
    with pytest.raises(ValueError, match="suite"):
        checks.run_checks("nonsense")
    with pytest.raises(ValueError, match="scope"):
        checks.run_checks("structure", scope=["sl3", "bogus"])


def test_scoped_run_filters():
    rep = checks.run_checks("structure", scope=["sl3"])
    assert rep["ok"]
    assert all("sl3" in c["name"] for c in rep["checks"])
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)


def test_rootsys_suite_ignores_scope():
    rep = checks.run_checks("rootsys", scope=["sl3"])
    # global checks run regardless of scope
    assert any(c["name"] == "rootsys.tables" for c in rep["checks"])
    assert rep["ok"]


def test_classification_rows_cover_all_types():
    rows = checks.classification_rows()
    typed = [(r["type"], r["rank"]) for r in rows if "type" in r]
    assert ("A", 1) in typed and ("E", 8) in typed and ("G", 2) in typed
    assert all(r["match"] for r in rows)
    heis = {(r["type"], r["rank"]): r["heisenberg"] for r in rows if "type" in r}
    assert heis[("A", 1)] is None
    assert heis[("C", 3)] == [1]
    sums = [r.get("coefficient_sum") for r in rows
            if "type" in r and r["heisenberg"] is not None]
    assert set(sums) == {2}


def test_seed_threads_through():
    rep = checks.run_checks("tables", scope=["sl4"], seed=11)
    assert rep["seed"] == 11 and rep["ok"]

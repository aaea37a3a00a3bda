import json

import pytest

from sepoly.verify import PROFILES, verify_all


def test_single_cell():
    rep = verify_all(0, 0, "fast")
    assert rep.ok
    assert {r.check for r in rep.results if r.status == "pass"} >= {"double-sum", "gamma", "trees", "ehrhart-dp"}


def test_fast_profile_small_grid():
    rep = verify_all(3, 3, "fast")
    assert rep.ok, rep.render()
    assert rep.counts()["fail"] == 0


def test_closed_profile_runs_only_symbolic_checks():
    rep = verify_all(10, 10, "closed")
    assert rep.ok
    ran = {r.check for r in rep.results if r.status == "pass"}
    assert ran == {"double-sum", "palindromic", "gamma", "recursion", "real-rooted", "interlacing"}


@pytest.mark.slow
def test_full_profile():
    rep = verify_all(3, 3, "full")
    assert rep.ok, rep.render()


def test_deterministic_output():
    assert verify_all(2, 2, "fast").dumps() == verify_all(2, 2, "fast").dumps()


def test_json_shape():
    data = json.loads(verify_all(1, 1, "fast").dumps())
    assert set(data) == {"a_max", "b_max", "profile", "ok", "counts", "results"}
    assert data["ok"] is True
    assert sum(data["counts"].values()) == len(data["results"])
    assert set(data["results"][0]) == {"check", "a", "b", "status", "detail"}


def test_render_summary_line():
    text = verify_all(1, 0, "closed").render()
    assert text.splitlines()[-1].endswith("skipped")
    assert "SKIP" not in text


def test_bad_arguments():
    with pytest.raises(ValueError):
        verify_all(1, 1, "nope")
    with pytest.raises(ValueError):
        verify_all(-1, 1)
    assert set(PROFILES) == {"closed", "fast", "full"}

"""Report layer: suite registry, statuses, determinism, documented conflicts."""

import pytest

from wittkit.verify import (SUITES, Check, VerifyReport, run_all, run_suite)

EXPECTED_CONFLICT_IDS = {"c8-tabulated-f4", "dirac-new-gamma3-matrix"}


@pytest.fixture(scope="module")
def all_reports():
    return run_all(seed=0, samples=10)


class TestSuites:
    def test_registry_names(self):
        assert set(SUITES) == {"table1", "witt-global", "witt-local", "omega",
                               "dirac", "pauli", "negative-g12"}

    def test_unknown_suite_raises(self):
        with pytest.raises(KeyError):
            run_suite("nope")

    def test_no_failures_anywhere(self, all_reports):
        for rep in all_reports:
            assert rep.ok, rep.format_text()
            assert rep.n_fail == 0

    def test_exactly_two_conflicts(self, all_reports):
        conflicts = [c for rep in all_reports for c in rep.checks
                     if c.status == "CONFLICT"]
        assert {c.check_id for c in conflicts} == EXPECTED_CONFLICT_IDS

    def test_conflicts_carry_corrections(self, all_reports):
        by_id = {c.check_id: c for rep in all_reports for c in rep.checks}
        f4 = by_id["c8-tabulated-f4"]
        assert "sqrt(6)" in f4.detail and "-1" in f4.detail
        g3 = by_id["dirac-new-gamma3-matrix"]
        assert "[[0,1],[-1,0]]" in g3.detail

    def test_conflict_does_not_unset_ok(self):
        rep = run_suite("witt-local", seed=0, samples=5)
        assert rep.n_conflict == 1
        assert rep.ok

    def test_table1_is_16_passes(self):
        rep = run_suite("table1")
        assert len(rep.checks) == 16
        assert rep.n_pass == 16

    def test_checks_sorted_by_id(self, all_reports):
        for rep in all_reports:
            ids = [c.check_id for c in rep.checks]
            assert ids == sorted(ids)


class TestDeterminism:
    def test_same_seed_same_report(self):
        a = run_suite("witt-global", seed=7, samples=8)
        b = run_suite("witt-global", seed=7, samples=8)
        assert a.to_json() == b.to_json()

    def test_other_seeds_still_pass(self):
        for seed in (1, 42):
            assert run_suite("dirac", seed=seed, samples=5).ok


class TestReportShape:
    def test_json_layout(self):
        rep = run_suite("table1")
        data = rep.to_json()
        assert data["suite"] == "table1"
        assert data["summary"] == {"pass": 16, "fail": 0, "conflict": 0}
        assert all({"id", "anchor", "status", "detail"} == set(c)
                   for c in data["checks"])

    def test_format_text_lines(self):
        rep = run_suite("negative-g12")
        text = rep.format_text()
        assert text.startswith("suite negative-g12")
        assert "[PASS]" in text
        assert "pass, 0 fail" in text

    def test_counts(self):
        rep = VerifyReport("demo", [
            Check("b", "x", "PASS"), Check("a", "x", "FAIL", "boom"),
            Check("c", "x", "CONFLICT", "doc")])
        assert (rep.n_pass, rep.n_fail, rep.n_conflict) == (1, 1, 1)
        assert not rep.ok
        assert [c.check_id for c in rep.checks] == ["a", "b", "c"]

import pytest

from gottlieb_groups.errors import NotCoveredError
from gottlieb_groups.selfcheck import (
    GOLDEN_CASES,
    SelfCheckReport,
    SuiteReport,
    brute_multiple_order,
    catalog_consistency,
    fga_oracle,
    invariant_chains,
    order_division,
    piecewise_exhaustiveness,
)
from gottlieb_groups.tables import parse_catalog


class TestSuiteReport:
    def test_check_counts(self):
        report = SuiteReport("suite")
        report.check(True, "a")
        report.check(False, "b")
        assert report.passed == 1
        assert report.failures == ["b"]
        assert not report.ok

    def test_run_turns_errors_into_failures(self):
        report = SuiteReport("suite")

        def broken():
            raise NotCoveredError("P_40(S^3)")

        report.run("broken", broken)
        report.run("fine", lambda: True)
        assert report.passed == 1
        assert report.failures[0].startswith("broken: NotCoveredError")

    def test_run_does_not_swallow_everything(self):
        report = SuiteReport("suite")
        with pytest.raises(ZeroDivisionError):
            report.run("division", lambda: 1 / 0 == 0)

    def test_render(self):
        failing = SuiteReport("b", passed=0, failures=[f"f{i}" for i in range(4)])
        text = SelfCheckReport([SuiteReport("a", passed=2), failing]).render(max_failures=2)
        lines = text.splitlines()
        assert lines[0] == "a: 2 passed, 0 failed"
        assert "  FAIL f1" in lines
        assert "  FAIL f2" not in lines
        assert "  ... 2 more" in lines
        assert lines[-1] == "FAILED"
        assert SelfCheckReport([SuiteReport("a", passed=1)]).render().endswith("OK")


class TestOracle:
    def test_invariant_chains(self):
        chains = list(invariant_chains(8))
        assert () in chains
        assert (2, 2, 2) in chains
        assert (2, 4) in chains
        assert (4, 2) not in chains
        assert (3, 3) not in chains
        assert all(b % a == 0 for chain in chains for a, b in zip(chain, chain[1:]))

    def test_brute_force(self):
        assert brute_multiple_order((24,), 8) == 3
        assert brute_multiple_order((2, 4), 2) == 2
        assert brute_multiple_order((), 5) == 1

    def test_small_oracle_passes(self):
        report = fga_oracle(max_order=24, max_multiple=6)
        assert report.ok
        assert report.passed > 0


class TestSuites:
    def test_catalog_consistency(self, catalog):
        report = catalog_consistency(catalog)
        assert report.ok, report.failures

    def test_catalog_consistency_flags_a_bad_stem(self):
        cat = parse_catalog(
            "schema|1\n"
            "stem|5|3|0|24|nu(n)|Toda\n"
            "sphere|6|9|0|12|nu(6)|made up\n"
        )
        report = catalog_consistency(cat)
        assert any("differs from the stable stem" in f for f in report.failures)

    def test_piecewise_rules(self):
        assert piecewise_exhaustiveness(120).ok

    def test_order_division(self):
        report = order_division(40)
        assert report.ok, report.failures

    def test_golden_labels_are_unique(self):
        labels = [case.label for case in GOLDEN_CASES]
        assert len(labels) == len(set(labels))

import pytest

from gottlieb_groups.errors import NotCoveredError
from gottlieb_groups.fga import Annihilated, FgAbGroup, Multiple, Whole, Zero, direct_sum
from gottlieb_groups.generators import parse_expr
from gottlieb_groups.results import (
    InconsistentBoundsError,
    Status,
    answer,
    bounds,
    exact,
    localize,
    lower_bound,
    not_covered,
    restrict,
    upper_bound,
)


@pytest.fixture
def split_ambient():
    """Z_2{γη} ⊕ Z{i_*ι}."""
    return direct_sum(
        FgAbGroup.cyclic(2, parse_expr("gam(eta(3))")).tagged("gam"),
        FgAbGroup.cyclic(0, parse_expr("inc(iota(2))")).tagged("inc"),
    )


class TestConstructors:
    def test_exact_normalizes(self):
        result = exact("X", FgAbGroup.cyclic(24), Multiple(24), "cite")
        assert result.value == Zero()
        assert result.upper == Zero()
        assert result.is_exact

    def test_bounds_collapse_when_equal(self):
        result = bounds("X", FgAbGroup.cyclic(24), Multiple(2), Annihilated(12), "cite")
        assert result.status is Status.EXACT
        assert result.value == Multiple(2)

    def test_bounds_stay_two_sided(self):
        result = bounds("X", FgAbGroup.cyclic(24), Multiple(4), Multiple(2), "cite")
        assert result.status is Status.BOUNDS
        assert result.value_type() == FgAbGroup.cyclic(6)
        assert result.upper_type() == FgAbGroup.cyclic(12)

    def test_inconsistent_bounds(self):
        with pytest.raises(InconsistentBoundsError) as excinfo:
            bounds("G_k(X)", FgAbGroup(1), Whole(), Multiple(2), "cite")
        assert excinfo.value.subject == "G_k(X)"

    def test_one_sided(self):
        low = lower_bound("X", FgAbGroup(1), Multiple(3), "cite")
        assert low.lower == Multiple(3)
        assert low.upper is None
        high = upper_bound("X", FgAbGroup(1), Multiple(3), "cite")
        assert high.lower is None
        assert high.upper_subgroup().index() == 3

    def test_not_covered(self):
        result = not_covered("X", "no rule")
        assert not result.is_covered
        assert result.notes == ("no rule",)
        assert result.value_subgroup() is None
        assert result.value_type() is None

    def test_zero_without_ambient(self):
        assert exact("X", None, Zero(), "cite").value_type() == FgAbGroup.zero()

    def test_with_notes_skips_empty(self):
        result = exact("X", FgAbGroup(1), Whole(), "cite", "first").with_notes("", "second")
        assert result.notes == ("first", "second")


class TestAnswer:
    def test_not_covered_error_becomes_a_result(self):
        def compute():
            raise NotCoveredError("π_40(S^3)", "beyond the tables")

        result = answer("P_40(S^3)", compute)
        assert result.status is Status.NOT_COVERED
        assert result.subject == "P_40(S^3)"
        assert result.notes == ("π_40(S^3): beyond the tables",)

    def test_other_errors_propagate(self):
        def compute():
            raise KeyError("n")

        with pytest.raises(KeyError):
            answer("X", compute)


class TestRestrict:
    def test_restrict_to_a_tag(self, split_ambient):
        full = exact("P", split_ambient, Whole(), "cite")
        gam = restrict(full, "gam", "P′")
        assert gam.subject == "P′"
        assert gam.value_type() == FgAbGroup.cyclic(2)
        inc = restrict(full, "inc", "P″")
        assert inc.value_type() == FgAbGroup(1)

    def test_restrict_keeps_the_status(self, split_ambient):
        full = upper_bound("G", split_ambient, Whole(), "cite")
        assert restrict(full, "inc", "G″").status is Status.UPPER_BOUND

    def test_missing_tag_gives_zero(self):
        full = exact("P", FgAbGroup(1).tagged("inc"), Whole(), "cite")
        assert restrict(full, "gam", "P′").value == Zero()

    def test_not_covered_passes_through(self):
        assert restrict(not_covered("P", "why"), "gam", "P′").subject == "P′"

    def test_untabulated_ambient(self):
        assert restrict(exact("P", None, Zero(), "cite"), "gam", "P′").value == Zero()
        assert restrict(exact("P", None, Whole(), "cite"), "gam", "P′").status is Status.NOT_COVERED


class TestLocalize:
    def test_primary_parts(self):
        full = exact("π", FgAbGroup.cyclic(12), Whole(), "cite")
        two = localize(full, 2, "π;2")
        assert two.value_type() == FgAbGroup.cyclic(4)
        assert "2-primary component" in two.notes
        assert localize(full, 3, "π;3").value_type() == FgAbGroup.cyclic(3)
        assert localize(full, 5, "π;5").value == Zero()

    def test_free_part_is_dropped(self):
        full = exact("π", FgAbGroup(1, (2,)), Whole(), "cite")
        assert localize(full, 3, "π;3").value == Zero()


class TestGenerators:
    def test_named(self, split_ambient):
        result = exact("P", split_ambient, Multiple(2), "cite")
        assert [str(g) for g in result.generators()] == ["mul(2,inc(iota(2)))"]

    def test_unnamed_presentation(self):
        result = exact("P", FgAbGroup.cyclic(4), Multiple(2), "cite")
        assert result.generators() == []

import pytest
from sympy import factorial

from gottlieb_groups.fga import FgAbGroup, Multiple, Whole, Zero, index, resolve
from gottlieb_groups.generators import parse_expr
from gottlieb_groups.gottlieb import (
    RULES,
    all_rules,
    firing_rules,
    g_double_prime,
    g_equals_p_flag,
    g_group,
    g_group_local,
    g_prime,
)
from gottlieb_groups.projspace import Field, p_group
from gottlieb_groups.results import Status


class TestRealProjectiveSpaces:
    def test_fundamental_group(self, catalog):
        assert g_group(Field.R, 2, 1, catalog).value == Zero()
        result = g_group(Field.R, 3, 1, catalog)
        assert result.value == Whole()
        assert str(result.ambient) == "Z_2"

    @pytest.mark.parametrize("n, expected", [(2, Zero()), (3, Whole()), (5, Multiple(2)), (7, Whole())])
    def test_top_cell(self, catalog, n, expected):
        result = g_group(Field.R, n, n, catalog)
        assert result.is_exact
        assert result.value == expected

    @pytest.mark.parametrize("n", [3, 7])
    def test_parallelizable_top_cell_is_central(self, catalog, n):
        g = g_group(Field.R, n, n, catalog)
        p = p_group(Field.R, n, n, catalog)
        assert g.is_exact and p.is_exact
        assert g.value == p.value == Whole()
        assert str(g.ambient) == "Z"

    def test_projective_plane_above_the_bottom(self, catalog):
        assert g_group(Field.R, 2, 5, catalog).value == Whole()

    def test_g7_of_rp4_is_bounded(self, catalog):
        result = g_group(Field.R, 4, 7, catalog)
        assert result.status is Status.BOUNDS
        assert result.value_subgroup() == resolve(Multiple(12), result.ambient)
        upper = result.upper_subgroup()
        assert parse_expr("gam(mul(6,nu(4)))") not in upper
        assert parse_expr("gam(E(nu'(3)))") not in upper
        assert parse_expr("gam(mul(12,nu(4)))") in upper

    def test_stems_eight_to_ten(self, catalog):
        assert g_group(Field.R, 16, 24, catalog).value == Zero()
        assert g_group(Field.R, 11, 20, catalog).value == Whole()

    def test_real_line_is_the_circle(self, catalog):
        result = g_group(Field.R, 1, 1, catalog)
        assert result.value == Whole()
        assert result.notes[-1].startswith("RP^1 = S^1")


class TestComplexProjectiveSpaces:
    def test_low_degrees(self, catalog):
        assert g_group(Field.C, 3, 2, catalog).value == Zero()
        assert g_group(Field.C, 2, 4, catalog).value == Zero()

    def test_top_sphere(self, catalog):
        result = g_group(Field.C, 2, 5, catalog)
        assert result.is_exact
        assert result.value == Multiple(2)

    def test_parity_offsets(self, catalog):
        assert g_group(Field.C, 2, 6, catalog).value == Zero()
        assert g_group(Field.C, 3, 8, catalog).value == Whole()

    @pytest.mark.parametrize("n", range(2, 13))
    def test_top_sphere_index_divides_factorial(self, catalog, n):
        result = g_group(Field.C, n, 2 * n + 1, catalog)
        assert result.is_covered
        assert str(result.ambient) == "Z"
        assert factorial(n) % index(result.ambient, result.value) == 0

    def test_g8_of_cp2_is_bounded(self, catalog):
        result = g_group(Field.C, 2, 8, catalog)
        assert result.status is Status.BOUNDS
        assert result.value == Multiple(2)
        assert result.upper == Whole()

    def test_whole_rule_without_a_presentation(self, catalog):
        result = g_group(Field.C, 2, 11, catalog)
        assert result.is_exact
        assert result.value == Whole()

    def test_firing_rules(self):
        names = [r.name for r in firing_rules(Field.C, 2, 8)]
        assert names == ["G_{2n+4}(CP^n)"]


class TestQuaternionicProjectiveSpaces:
    def test_low_degrees(self, catalog):
        assert g_group(Field.H, 2, 4, catalog).value == Zero()
        assert g_group(Field.H, 3, 2, catalog).value == Zero()

    def test_lower_bound_from_the_connecting_map(self, catalog):
        result = g_group(Field.H, 2, 11, catalog)
        assert result.is_covered
        # (2n+1)! = 120 for n = 2
        assert parse_expr("gam(mul(120,iota(11)))") in result.value_subgroup()

    def test_rules_are_registered(self):
        assert {r.field for rules in RULES.values() for r in rules} == {Field.R, Field.C, Field.H}


class TestPrimedGroups:
    def test_g_prime_of_cp2(self, catalog):
        result = g_prime(Field.C, 2, 5, catalog)
        assert result.subject == "G′_5(CP^2)"
        assert result.value == Multiple(2)

    def test_g_double_prime(self, catalog):
        assert g_double_prime(Field.C, 3, 2, catalog).value == Zero()
        assert g_double_prime(Field.R, 3, 1, catalog).value == Whole()

    def test_hp_g_prime_rule(self, catalog):
        result = g_prime(Field.H, 2, 17, catalog)
        assert result.is_exact
        assert result.value == Zero()

    def test_open_and_undefined_cases(self, catalog):
        assert g_double_prime(Field.H, 2, 11, catalog).status is Status.NOT_COVERED
        assert g_prime(Field.K, 2, 11, catalog).status is Status.NOT_COVERED
        assert g_prime(Field.C, 1, 3, catalog).status is Status.NOT_COVERED

    def test_local_part(self, catalog):
        result = g_group_local(Field.C, 2, 8, 3, catalog)
        assert result.is_exact
        assert result.value_type() == FgAbGroup(0, (3,))
        assert result.subject == "G_8(CP^2;3)"


class TestCenterComparison:
    @pytest.mark.parametrize("field, n, k", [
        (Field.R, 5, 1),
        (Field.R, 6, 6),
        (Field.C, 2, 5),
        (Field.C, 4, 7),
        (Field.K, 2, 11),
        (Field.H, 2, 5),
    ])
    def test_stated_equalities(self, field, n, k):
        assert g_equals_p_flag(field, n, k)

    def test_unknown_without_catalog(self):
        assert not g_equals_p_flag(Field.C, 2, 8)

    def test_with_catalog(self, catalog):
        # P_3(CP^2) = 0
        assert g_equals_p_flag(Field.C, 2, 3, catalog)
        assert not g_equals_p_flag(Field.C, 2, 8, catalog)
        g, p = g_group(Field.R, 3, 3, catalog), p_group(Field.R, 3, 3, catalog)
        assert g.value == p.value

    def test_rules_are_exhaustive(self):
        for name, (r, var, offsets) in all_rules().items():
            for fixed in offsets:
                assert r.check_exhaustive(80, var, **fixed) == [], name

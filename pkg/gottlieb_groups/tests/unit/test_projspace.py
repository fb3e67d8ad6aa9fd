import pytest

from gottlieb_groups.fga import FgAbGroup, Multiple, Whole, Zero
from gottlieb_groups.generators import parse_expr
from gottlieb_groups.projspace import (
    GAM,
    INC,
    Field,
    UnsupportedFieldError,
    all_rules,
    decompose_gamma,
    decompose_pi,
    l_subgroups,
    m_subgroup,
    p_double_prime,
    p_group,
    p_prime,
    p_prime_hp,
    pi_group,
    q_subgroup,
    space_name,
    top_sphere,
)
from gottlieb_groups.results import Status


class TestFields:
    def test_dimensions(self):
        assert [f.d for f in Field] == [1, 2, 4, 8]
        assert top_sphere(Field.R, 4) == 4
        assert top_sphere("C", 2) == 5
        assert top_sphere(Field.H, 2) == 11
        assert top_sphere(Field.K, 2) == 23

    def test_names(self):
        assert Field.C.symbol == "CP"
        assert space_name(Field.H, 3) == "HP^3"


class TestDecomposition:
    def test_complex_pi_2(self, catalog):
        d = decompose_pi(Field.C, 2, 2, catalog)
        assert d.ambient == FgAbGroup(1)
        assert d.ambient.tags == (INC,)

    def test_real_pi_1(self, catalog):
        assert decompose_pi(Field.R, 3, 1, catalog).ambient == FgAbGroup.cyclic(2)
        assert decompose_pi(Field.R, 1, 1, catalog).ambient == FgAbGroup(1)

    def test_quaternionic_splits(self, catalog):
        d = decompose_pi(Field.H, 2, 11, catalog)
        # π_11(S^11) ⊕ π_10(S^3) = Z ⊕ Z_15
        assert d.ambient == FgAbGroup(1, (15,))
        assert set(d.ambient.tags) == {GAM, INC}
        assert str(d.ambient.part(GAM).generators[0]) == "gam(iota(11))"

    def test_gamma_only(self, catalog):
        d = decompose_gamma(Field.H, 2, 11, catalog)
        assert d.ambient == FgAbGroup(1)
        assert d.ambient.tags == (GAM,)

    def test_cayley_plane_is_rejected(self, catalog):
        with pytest.raises(UnsupportedFieldError):
            decompose_pi(Field.K, 2, 8, catalog)

    def test_pi_group(self, catalog):
        result = pi_group(Field.C, 2, 5, catalog)
        assert result.is_exact
        assert result.value == Whole()
        assert str(result.ambient) == "Z"
        assert [str(g) for g in result.generators()] == ["gam(iota(5))"]

    def test_pi_group_of_real_plane(self, catalog):
        # π_4(RP^4) = π_4(S^4) = Z
        assert pi_group(Field.R, 4, 4, catalog).ambient == FgAbGroup(1)
        assert pi_group(Field.R, 2, 3, catalog).ambient == FgAbGroup(1)


class TestAuxiliarySubgroups:
    def test_q_values(self, catalog):
        assert q_subgroup(3, catalog).value == Multiple(12)
        assert q_subgroup(7, catalog).value == Whole()
        assert q_subgroup(19, catalog).status is Status.NOT_COVERED

    def test_l_subgroups(self, catalog):
        l_prime, l_double, ell = l_subgroups(2, 4, catalog)
        assert l_prime.value == Multiple(12)
        assert l_double.value == Multiple(8)
        assert ell.value == Multiple(24)

    def test_l_subgroups_need_n_at_least_two(self, catalog):
        assert all(r.status is Status.NOT_COVERED for r in l_subgroups(1, 4, catalog))

    def test_l_double_prime_beyond_22(self, catalog):
        _, l_double, ell = l_subgroups(2, 23, catalog)
        assert l_double.status is Status.NOT_COVERED
        assert ell.status is Status.NOT_COVERED

    def test_m_real_stable_range(self, catalog):
        m = m_subgroup(Field.R, 6, 9, catalog)
        assert m.is_exact

    def test_m_odd_n(self, catalog):
        assert m_subgroup(Field.C, 3, 9, catalog).value == Whole()

    def test_m_cayley(self, catalog):
        with pytest.raises(UnsupportedFieldError):
            m_subgroup(Field.K, 2, 23, catalog)

    def test_p_prime_hp(self, catalog):
        assert p_prime_hp(2, 0, catalog).value == Multiple(8)
        assert p_prime_hp(1, 0, catalog).status is Status.NOT_COVERED

    def test_rules_are_exhaustive_on_their_domain(self):
        for name, (r, var, offsets) in all_rules().items():
            for fixed in offsets:
                assert r.check_exhaustive(60, var, **fixed) == [], name


class TestComplex:
    def test_bottom_cell(self, catalog):
        assert p_group(Field.C, 2, 2, catalog).value == Multiple(2)
        assert p_group(Field.C, 3, 2, catalog).value == Whole()

    def test_vanishing_range(self, catalog):
        assert p_group(Field.C, 2, 3, catalog).value == Zero()
        assert p_group(Field.C, 2, 7, catalog).value == Zero()

    def test_top_sphere(self, catalog):
        result = p_group(Field.C, 2, 5, catalog)
        assert result.is_exact
        assert result.value == Multiple(2)

    def test_complex_line_is_a_sphere(self, catalog):
        result = p_group(Field.C, 1, 3, catalog)
        assert result.subject == "P_3(CP^1)"
        assert "CP^1 = S^2" in result.notes


class TestReal:
    def test_fundamental_group(self, catalog):
        assert p_group(Field.R, 3, 1, catalog).value == Whole()
        assert p_group(Field.R, 2, 1, catalog).value == Zero()

    def test_projective_plane(self, catalog):
        assert p_group(Field.R, 2, 2, catalog).value == Zero()
        assert p_group(Field.R, 2, 3, catalog).value == Whole()

    def test_cells_of_rp4(self, catalog):
        result = p_group(Field.R, 4, 8, catalog)
        assert result.is_exact
        assert parse_expr("gam(cmp(E(nu'(3)),eta(7)))") in result.value_subgroup()

    def test_odd_n_follows_the_sphere(self, catalog):
        assert p_group(Field.R, 3, 3, catalog).value == Whole()


class TestQuaternionic:
    def test_low_degrees(self, catalog):
        assert p_group(Field.H, 2, 3, catalog).value == Zero()
        result = p_group(Field.H, 2, 4, catalog)
        assert result.value == Multiple(24)
        assert result.ambient == FgAbGroup(1)

    def test_samelson_range(self, catalog):
        assert p_group(Field.H, 2, 5, catalog).value == Zero()
        result = p_group(Field.H, 2, 7, catalog)
        assert result.value == Multiple(3)
        assert result.value_type() == FgAbGroup(0, (4,))

    def test_split_by_p_prime_and_l(self, catalog):
        result = p_group(Field.H, 2, 11, catalog)
        assert result.is_exact
        # 8π_11(S^11) ⊕ 3π_10(S^3)
        assert result.value_type() == FgAbGroup(1, (5,))

    def test_p_prime_and_p_double_prime(self, catalog):
        assert p_prime(Field.H, 2, 11, catalog).subject == "P′_11(HP^2)"
        double = p_double_prime(Field.C, 2, 2, catalog)
        assert double.subject == "P″_2(CP^2)"
        assert double.value == Multiple(2)
        assert p_double_prime(Field.C, 2, 5, catalog).value == Zero()

    def test_quaternionic_line_is_a_sphere(self, catalog):
        assert p_group(Field.H, 1, 7, catalog).value_type() == FgAbGroup(1, (2,))

    def test_not_positive(self, catalog):
        assert p_group(Field.H, 0, 4, catalog).status is Status.NOT_COVERED

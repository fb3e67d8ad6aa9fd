import pytest
from hypothesis import given, settings, strategies as st

from gottlieb_groups.fga import (
    INFINITY,
    Annihilated,
    CyclicSummand,
    DirectSum,
    FgAbGroup,
    InvalidGroupError,
    InvalidMultipleError,
    Multiple,
    UnresolvableSubgroupError,
    Whole,
    Zero,
    describe,
    direct_sum,
    gcd24,
    generated_by,
    index,
    invariant_factors,
    lcm_pair,
    multiple_subgroup,
    normalize,
    p_component,
    resolve,
    subgroup_type,
)
from gottlieb_groups.generators import parse_expr
from gottlieb_groups.selfcheck import brute_multiple_order


def _pi7_s4() -> FgAbGroup:
    """π_7(S^4) = Z{ν_4} ⊕ Z_4{Eν′} ⊕ Z_3{α_1(4)}."""
    return FgAbGroup.from_orders([0, 4, 3], [parse_expr("nu(4)"), parse_expr("E(nu'(3))"), parse_expr("alpha1(4)")])


class TestGroups:
    def test_invariant_factors(self):
        assert invariant_factors([4, 6]) == (2, 12)
        assert invariant_factors([2, 3, 5]) == (30,)
        assert invariant_factors([]) == ()

    def test_invalid_torsion_rejected(self):
        with pytest.raises(InvalidGroupError):
            FgAbGroup(0, (4, 6))
        with pytest.raises(InvalidGroupError):
            FgAbGroup(0, (1,))
        with pytest.raises(InvalidGroupError):
            FgAbGroup(-1)

    @pytest.mark.parametrize("free_rank, torsion, expected", [
        (0, (), "0"),
        (1, (), "Z"),
        (2, (), "Z^2"),
        (1, (12,), "Z + Z_12"),
        (0, (2, 2, 2), "(Z_2)^3"),
        (1, (2, 2, 120), "Z + Z_120 + (Z_2)^2"),
    ])
    def test_describe(self, free_rank, torsion, expected):
        assert describe(free_rank, torsion) == expected
        assert str(FgAbGroup(free_rank, torsion)) == expected

    def test_from_orders_canonicalizes(self):
        g = _pi7_s4()
        assert g.free_rank == 1
        assert g.torsion == (12,)
        assert g == FgAbGroup(1, (12,))
        assert g.order == INFINITY
        assert not g.is_finite

    def test_trivial_summands_are_dropped(self):
        g = FgAbGroup.from_orders([1, 2])
        assert g.torsion == (2,)
        assert len(g.presentation()) == 1

    def test_order_and_exponent(self):
        g = FgAbGroup(0, (2, 24))
        assert g.order == 48
        assert g.exponent == 24
        assert FgAbGroup.zero().exponent == 1
        assert FgAbGroup(1).exponent is None

    def test_direct_sum_keeps_presentations(self):
        a = FgAbGroup.cyclic(4, parse_expr("nu'(3)"))
        b = FgAbGroup.cyclic(3, parse_expr("alpha1(3)"))
        total = direct_sum(a, b)
        assert total.torsion == (12,)
        assert [str(g) for g in total.generators] == ["nu'(3)", "alpha1(3)"]

    def test_multiple_subgroup(self):
        assert multiple_subgroup(FgAbGroup(0, (24,)), 8).torsion == (3,)
        assert multiple_subgroup(FgAbGroup(1, (2,)), 2) == FgAbGroup(1)
        with pytest.raises(InvalidMultipleError):
            multiple_subgroup(FgAbGroup(1), 0)

    def test_p_component(self):
        g = FgAbGroup.from_orders([12, 2])
        assert p_component(g, 2).torsion == (2, 4)
        assert p_component(g, 3).torsion == (3,)
        assert p_component(g, 5).is_trivial

    def test_tags_and_parts(self):
        g = direct_sum(FgAbGroup.cyclic(2).tagged("gam"), FgAbGroup(1).tagged("inc"))
        assert g.tags == ("gam", "inc")
        assert g.part("inc") == FgAbGroup(1)

    def test_gcd_and_lcm(self):
        assert gcd24(24, 10) == 2
        assert lcm_pair(8, 12) == 24


class TestSubgroups:
    def test_index_of_multiples(self):
        assert index(FgAbGroup(0, (24,)), Multiple(8)) == 8
        assert index(FgAbGroup(1), Multiple(3)) == 3
        assert index(FgAbGroup(1), Zero()) == INFINITY
        assert index(FgAbGroup(0, (6,)), Whole()) == 1

    def test_subgroup_type(self):
        assert subgroup_type(FgAbGroup(0, (24,)), Multiple(8)) == FgAbGroup(0, (3,))
        assert subgroup_type(FgAbGroup(0, (2, 12)), Annihilated(2)) == FgAbGroup(0, (2, 2))

    def test_normalize(self):
        g = FgAbGroup(0, (24,))
        assert normalize(Multiple(24), g) == Zero()
        assert normalize(Multiple(48), g) == Zero()
        assert normalize(Multiple(8), g) == Multiple(8)
        assert normalize(Annihilated(24), g) == Whole()
        assert normalize(Multiple(2), FgAbGroup(1)) == Multiple(2)

    def test_invalid_multiple(self):
        with pytest.raises(InvalidMultipleError):
            Multiple(0)
        with pytest.raises(InvalidMultipleError):
            Annihilated(-2)

    def test_membership_by_named_generators(self):
        g = _pi7_s4()
        sub = resolve(Multiple(12), g)
        assert parse_expr("mul(12,nu(4))") in sub
        assert parse_expr("mul(24,nu(4))") in sub
        assert parse_expr("mul(6,nu(4))") not in sub
        assert parse_expr("E(nu'(3))") not in sub
        # 12·Eν′ = 0 and 12·α_1(4) = 0
        assert parse_expr("mul(4,E(nu'(3)))") in sub

    def test_generated_by(self):
        g = _pi7_s4()
        sub = resolve(generated_by("E(nu'(3))", "alpha1(4)"), g)
        assert sub.iso_type() == FgAbGroup(0, (12,))
        assert sub.index() == INFINITY
        assert parse_expr("sum(E(nu'(3)),alpha1(4))") in sub

    def test_meet_and_join(self):
        g = FgAbGroup(0, (24,))
        two, three = resolve(Multiple(2), g), resolve(Multiple(3), g)
        assert two.meet(three) == resolve(Multiple(6), g)
        assert two.join(three).is_whole

    def test_to_spec(self):
        g = FgAbGroup(0, (24,))
        assert resolve(Multiple(24), g).to_spec() == Zero()
        assert resolve(Whole(), g).to_spec() == Whole()
        assert resolve(Multiple(4), g).to_spec() == Multiple(4)

    def test_direct_sum_spec(self):
        g = direct_sum(FgAbGroup.cyclic(2).tagged("gam"), FgAbGroup.cyclic(2).tagged("inc"))
        sub = resolve(DirectSum((("gam", Whole()), ("inc", Zero()))), g)
        assert sub.iso_type() == FgAbGroup(0, (2,))
        with pytest.raises(UnresolvableSubgroupError):
            resolve(DirectSum((("pr", Whole()),)), g)

    def test_unknown_generator(self):
        with pytest.raises(UnresolvableSubgroupError):
            resolve(generated_by("sigma(4)"), _pi7_s4())

    def test_elements_of_whole_group(self):
        g = FgAbGroup.cyclic(2, parse_expr("eps(3)"))
        assert [str(e) for e in resolve(Whole(), g).elements()] == ["eps(3)"]

    def test_summand_equality_is_by_type(self):
        assert CyclicSummand(2, parse_expr("eta(3)")) != CyclicSummand(2)
        assert FgAbGroup.cyclic(2, parse_expr("eta(3)")) == FgAbGroup.cyclic(2)


torsion_orders = st.lists(st.integers(min_value=2, max_value=12), max_size=3)


@settings(max_examples=60, deadline=None)
@given(orders=torsion_orders)
def test_invariant_factors_preserve_order(orders):
    g = FgAbGroup.from_orders(orders)
    product = 1
    for d in orders:
        product *= d
    assert g.order == product
    assert all(b % a == 0 for a, b in zip(g.torsion, g.torsion[1:]))


@settings(max_examples=60, deadline=None)
@given(orders=torsion_orders, m=st.integers(min_value=1, max_value=30))
def test_multiple_subgroup_matches_brute_force(orders, m):
    g = FgAbGroup.from_orders(orders)
    expected = brute_multiple_order(g.torsion, m)
    assert multiple_subgroup(g, m).order == expected
    assert index(g, Multiple(m)) == g.order // expected

import pytest

from gottlieb_groups.errors import NotCoveredError
from gottlieb_groups.fga import INFINITY, FgAbGroup, Multiple, Whole, Zero, resolve
from gottlieb_groups.generators import parse_expr
from gottlieb_groups.results import Status
from gottlieb_groups.whitehead import (
    WHITEHEAD_RULES,
    Family,
    all_rules,
    delta_order,
    delta_vs_whitehead_gap,
    element_shape,
    j_restriction_not_mono,
    lemma_y_bracket,
    p_group_sphere,
    projective_index,
    whitehead_fact,
    whitehead_order_iota,
)


def _order(n: int, text: str):
    return whitehead_order_iota(n, parse_expr(text))


class TestWhiteheadOrders:
    @pytest.mark.parametrize("n, expected", [(1, 1), (3, 1), (7, 1), (5, 2), (9, 2), (2, INFINITY), (4, INFINITY)])
    def test_whitehead_square(self, n, expected):
        assert _order(n, f"iota({n})") == expected

    @pytest.mark.parametrize("n, expected", [(2, 1), (3, 1), (6, 1), (7, 1), (4, 2), (5, 2), (8, 2)])
    def test_eta(self, n, expected):
        assert _order(n, f"eta({n})") == expected

    @pytest.mark.parametrize("n, expected", [
        (4, 12), (5, 1), (6, 12), (7, 1), (8, 24), (9, 2), (10, 12), (11, 2), (12, 12), (13, 1), (16, 24),
    ])
    def test_nu(self, n, expected):
        assert _order(n, f"nu({n})") == expected

    @pytest.mark.parametrize("n, expected", [
        (4, 1), (5, 1), (6, 2), (7, 1), (9, 2), (11, 1), (12, 1), (19, 2), (27, 1),
    ])
    def test_nu_squared(self, n, expected):
        assert _order(n, f"cmp(nu({n}),nu({n + 3}))") == expected

    def test_nu_squared_rule_starts_at_four(self):
        nu2 = WHITEHEAD_RULES["nu2"]
        assert nu2.covers(n=4)
        assert not nu2.covers(n=3)
        assert nu2.check_exhaustive(200, start=4) == []

    @pytest.mark.parametrize("n, expected", [(8, 120), (9, 2), (10, 240), (11, 1), (15, 1), (31, 1)])
    def test_sigma(self, n, expected):
        assert _order(n, f"sigma({n})") == expected

    def test_unstable_elements(self):
        assert _order(4, "E(nu'(3))") == 2
        assert _order(8, "E(sigma'(7))") == 60
        assert _order(6, "wh(iota(6),iota(6))") == 3

    def test_composite_falls_back_to_first_factor(self):
        fact = whitehead_fact(5, parse_expr("cmp(nu(5),eta(8))"))
        assert fact.order == 1
        assert fact.citation.startswith("composition with")

    def test_unknown_element(self):
        with pytest.raises(NotCoveredError):
            _order(4, "kappa(4)")

    def test_shapes(self):
        assert element_shape(4, parse_expr("cmp(E(nu'(3)),eta(7))")) == "Enu'_eta"
        assert element_shape(9, parse_expr("cmp(eta(9),eps(10))")) == "eta_eps"
        assert element_shape(4, parse_expr("nu(5)")) is None
        assert element_shape(4, parse_expr('alias("x",nu(4))')) == "nu"


class TestConnectingMaps:
    def test_real(self):
        assert delta_order(Family.R, 4, parse_expr("nu(4)")) == 12
        assert delta_order(Family.R, 8, parse_expr("sigma(8)")) == 2520
        assert delta_order(Family.R, 6, parse_expr("wh(iota(6),iota(6))")) == 30
        assert delta_order(Family.R, 4, parse_expr("E(nu'(3))")) == 4

    @pytest.mark.parametrize("n, expected", [(5, 2), (7, 6), (9, 24), (11, 120)])
    def test_complex_iota(self, n, expected):
        assert delta_order(Family.C, n, parse_expr(f"iota({n})")) == expected

    def test_complex_nu(self):
        # S^9 = S^{2m+1} with m = 4
        assert delta_order(Family.C, 9, parse_expr("nu(9)")) == 4
        # m = 3
        assert delta_order(Family.C, 7, parse_expr("nu(7)")) == 3

    @pytest.mark.parametrize("n, expected", [(7, 12), (11, 120), (15, 2 * 5040)])
    def test_quaternionic_iota(self, n, expected):
        assert delta_order(Family.H, n, parse_expr(f"iota({n})")) == expected

    def test_quaternionic_nu(self):
        assert delta_order(Family.H, 11, parse_expr("nu(11)")) == 4

    def test_projective_index(self):
        assert projective_index(Family.R, 6) == 6
        assert projective_index(Family.C, 7) == 3
        assert projective_index(Family.H, 11) == 2
        with pytest.raises(NotCoveredError):
            projective_index(Family.C, 4)
        with pytest.raises(NotCoveredError):
            projective_index(Family.H, 9)

    def test_no_rule(self):
        with pytest.raises(NotCoveredError):
            delta_order(Family.H, 11, parse_expr("sigma(11)"))

    def test_gap(self):
        assert delta_vs_whitehead_gap(4, parse_expr("E(nu'(3))"))
        assert delta_vs_whitehead_gap(8, parse_expr("sigma(8)"))
        assert delta_vs_whitehead_gap(13, parse_expr("nu(13)"))
        assert delta_vs_whitehead_gap(4, parse_expr("cmp(nu(4),nu(7))"))
        assert not delta_vs_whitehead_gap(12, parse_expr("cmp(nu(12),nu(15))"))
        assert not delta_vs_whitehead_gap(5, parse_expr("nu(5)"))
        assert not delta_vs_whitehead_gap(9, parse_expr("sigma(9)"))
        with pytest.raises(NotCoveredError):
            delta_vs_whitehead_gap(3, parse_expr("eps(3)"))

    def test_j_restriction(self):
        assert j_restriction_not_mono(4, 3)
        assert j_restriction_not_mono(13, 3)
        assert j_restriction_not_mono(27, 6)
        assert j_restriction_not_mono(8, 7)
        assert not j_restriction_not_mono(5, 3)
        assert not j_restriction_not_mono(9, 7)
        with pytest.raises(NotCoveredError):
            j_restriction_not_mono(9, 8)


class TestBrackets:
    def test_real_vanishes_for_odd_n(self):
        assert lemma_y_bracket("R", 3, parse_expr("eta(3)"), h0_vanishes=True).is_zero

    def test_real_even_n(self):
        value = lemma_y_bracket("R", 4, parse_expr("nu(4)"), h0_vanishes=True)
        assert str(value.expression) == "gam(mul(-2,nu(4)))"
        assert value.multiplier == 2
        assert lemma_y_bracket("R", 4, parse_expr("eta(4)"), h0_vanishes=True, alpha_order=2).is_zero

    def test_complex(self):
        assert lemma_y_bracket("C", 3, parse_expr("iota(7)"), h0_vanishes=True).is_zero
        value = lemma_y_bracket("C", 2, parse_expr("iota(5)"), h0_vanishes=True)
        assert str(value.expression) == "gam(cmp(eta(5),E(iota(5))))"

    def test_quaternionic_multiplier(self):
        assert lemma_y_bracket("H", 23, parse_expr("iota(95)"), h0_vanishes=True).is_zero
        value = lemma_y_bracket("H", 2, parse_expr("iota(11)"), h0_vanishes=False)
        assert value.multiplier == 3
        assert not value.is_zero

    def test_unknown_field(self):
        with pytest.raises(ValueError):
            lemma_y_bracket("K", 2, parse_expr("iota(23)"), h0_vanishes=True)


class TestSphereCenters:
    def test_h_spaces(self, catalog):
        result = p_group_sphere(catalog, 3, 6)
        assert result.is_exact
        assert result.value == Whole()

    def test_top_cell(self, catalog):
        assert p_group_sphere(catalog, 4, 4).value == Zero()
        assert p_group_sphere(catalog, 5, 5).value == Multiple(2)

    def test_catalog_center(self, catalog):
        result = p_group_sphere(catalog, 4, 7)
        assert result.is_exact
        assert result.value_type() == FgAbGroup(1, (2,))
        assert parse_expr("mul(12,nu(4))") in result.value_subgroup()
        assert parse_expr("nu(4)") not in result.value_subgroup()

    def test_from_bracket_orders(self, catalog):
        # [ι_5, η_5] has order 2 and π_6(S^5) = Z_2
        assert p_group_sphere(catalog, 5, 6).value == Zero()
        assert p_group_sphere(catalog, 5, 8).value == Whole()
        result = p_group_sphere(catalog, 8, 11)
        assert resolve(result.value, result.ambient) == resolve(Multiple(24), result.ambient)

    def test_stems_eight_to_ten(self, catalog):
        assert p_group_sphere(catalog, 19, 28).value == Whole()
        assert p_group_sphere(catalog, 40, 49).value == Zero()

    def test_not_covered(self, catalog):
        result = p_group_sphere(catalog, 3, 40)
        assert result.status is Status.NOT_COVERED

    def test_rules_are_named(self):
        rules = all_rules()
        assert "order of [ι_n,ι_n]" in rules
        assert all(var in ("n", "m") for _, var, _ in rules.values())

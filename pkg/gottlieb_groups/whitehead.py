"""
Whitehead products with the identity of a sphere, orders of the connecting
maps of the sphere bundles SO(n+1) -> S^n, SU(n+1) -> S^{2n+1},
Sp(n+1) -> S^{4n+3}, and the Whitehead centers P_k(S^n) = G_k(S^n).

Elements are recognised by shape: an atom such as ``nu(9)``, a composite of
atoms such as ``cmp(eta(8),eps(9))``, or one of the unstable elements
Eν′, Eω, Eσ′, [ι_6,ι_6]. Anything else falls back to the composition rule
[ι_n, α∘β] = 0 whenever [ι_n, α] = 0, or is not covered.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from sympy import factorial

from gottlieb_groups.errors import NotCoveredError
from gottlieb_groups.fga import INFINITY, FgAbGroup, SubgroupSpec, Whole, Zero, gcd24, multiple
from gottlieb_groups.generators import (
    Alias,
    Atom,
    Compose,
    GeneratorExpr,
    HopfInvariant,
    Suspension,
    Whitehead,
    compose,
    degrees,
    Sum,
    pretty,
    push,
    scalar,
)
from gottlieb_groups.logging import setup_logger
from gottlieb_groups.piecewise import (
    AtLeast,
    Congruent,
    Equals,
    Not,
    Otherwise,
    PiecewiseRule,
    PowerOfTwoMinus,
    any_of,
    even,
    every,
    odd,
    rule,
)
from gottlieb_groups.results import GroupResult, answer, exact
from gottlieb_groups.tables import Catalog, center_fact, pi_sphere

logger = setup_logger(__name__)


class Family(str, Enum):
    """Which sphere bundle the connecting map Δ belongs to."""
    R = "R"
    C = "C"
    H = "H"


# ---------------------------------------------------------------------------
# Element shapes
# ---------------------------------------------------------------------------

_COMPOSITES: Dict[Tuple[str, ...], str] = {
    ("eta", "eta"): "eta2",
    ("nu", "nu"): "nu2",
    ("nu", "nu", "nu"): "nu3",
    ("eta", "sigma"): "eta_sigma",
    ("eta", "eps"): "eta_eps",
    ("eta", "eta", "sigma"): "eta2_sigma",
    ("eta", "mu"): "eta_mu",
    ("nu", "eta"): "nu_eta",
    ("nu", "eta", "eta"): "nu_eta2",
    ("Enu'", "eta"): "Enu'_eta",
    ("Enu'", "eta", "eta"): "Enu'_eta2",
}
_SUSPENDED = {("nu'", 4): "Enu'", ("omega", 4): "Eomega", ("sigma'", 8): "Esigma'"}
_STABLE_ATOMS = {"iota", "eta", "nu", "sigma", "eps", "nubar", "mu", "beta1"}


def _part_name(expr: GeneratorExpr) -> Optional[Tuple[str, int]]:
    """(shape, source sphere) of one factor of a composite."""
    if isinstance(expr, Atom) and expr.prime is None and expr.name in _STABLE_ATOMS:
        return expr.name, expr.dim
    if isinstance(expr, Suspension) and isinstance(expr.child, Atom):
        dim = expr.child.dim + 1
        name = _SUSPENDED.get((expr.child.name, dim))
        if name is not None:
            return name, dim
    return None


def element_shape(n: int, element: GeneratorExpr) -> Optional[str]:
    """Name of the shape of an element of π_*(S^n), or None when unrecognised."""
    while isinstance(element, Alias):
        element = element.child
    if isinstance(element, Whitehead):
        if element.left == element.right == Atom("iota", n):
            return "wh_iota"
        return None
    if isinstance(element, Compose):
        names = []
        for part in element.parts:
            found = _part_name(part)
            if found is None:
                return None
            names.append(found[0])
        if _part_name(element.parts[0])[1] != n:
            return None
        return _COMPOSITES.get(tuple(names))
    found = _part_name(element)
    if found is None or found[1] != n:
        return None
    return found[0]


# ---------------------------------------------------------------------------
# Orders of [ι_n, α]
# ---------------------------------------------------------------------------

STEM_J_CITATION = "Whitehead products [ι_8m, α] for the image of J in stems 8 to 10"

WHITEHEAD_RULES: Dict[str, PiecewiseRule] = {
    "iota": rule(
        "order of [ι_n,ι_n]",
        (Equals((1, 3, 7)), 1, "H-space spheres"),
        (every(odd(), Not(Equals((1, 3, 7)))), 2),
        (even(), INFINITY),
        domain=AtLeast(1),
        citation="Whitehead square [ι_n,ι_n] and Hopf invariant one",
    ),
    "eta": rule(
        "order of [ι_n,η_n]",
        (any_of(Congruent((3,), 4), Equals((2, 6))), 1),
        (Otherwise(), 2),
        domain=AtLeast(2),
        citation="Whitehead products [ι_n,η_n]",
    ),
    "eta2": rule(
        "order of [ι_n,η²_n]",
        (Congruent((2, 3), 4), 1),
        (Otherwise(), 2),
        domain=AtLeast(2),
        citation="Whitehead products [ι_n,η²_n]",
    ),
    "nu": rule(
        "order of [ι_n,ν_n]",
        (any_of(Congruent((7,), 8), PowerOfTwoMinus(3, 3)), 1),
        (every(Congruent((1, 3, 5), 8, 9), Not(PowerOfTwoMinus(3, 3))), 2),
        (any_of(Congruent((2,), 4, 6), Equals((4, 12))), 12),
        (every(Congruent((0,), 4, 8), Not(Equals((12,)))), 24),
        domain=AtLeast(4),
        citation="Whitehead products [ι_n,ν_n]",
    ),
    "nu2": rule(
        "order of [ι_n,ν²_n]",
        (any_of(Congruent((4, 5, 7), 8), PowerOfTwoMinus(5, 4)), 1),
        (Otherwise(), 2),
        domain=AtLeast(4),
        citation="Whitehead products [ι_n,ν²_n]",
    ),
    "sigma": rule(
        "order of [ι_n,σ_n]",
        (any_of(Equals((11,)), Congruent((15,), 16)), 1),
        (every(odd(at_least=9), Not(Equals((11,))), Not(Congruent((15,), 16))), 2),
        (Equals((8,)), 120),
        (even(at_least=10), 240),
        domain=AtLeast(8),
        citation="Whitehead products [ι_n,σ_n]",
    ),
    "Eomega": rule("order of [ι_4,Eω]", (Equals((4,)), 6), domain=Equals((4,)),
                   citation="Whitehead product [ι_4,Eω]"),
    "Enu'": rule("order of [ι_4,Eν′]", (Equals((4,)), 2), domain=Equals((4,)),
                 citation="Whitehead product [ι_4,Eν′]"),
    "Esigma'": rule("order of [ι_8,Eσ′]", (Equals((8,)), 60), domain=Equals((8,)),
                    citation="Whitehead product [ι_8,Eσ′]"),
    "wh_iota": rule("order of [ι_6,[ι_6,ι_6]]", (Equals((6,)), 3), domain=Equals((6,)),
                    citation="Whitehead product [ι_6,[ι_6,ι_6]]"),
}

for _shape in ("nu_eta", "nu_eta2", "Enu'_eta", "Enu'_eta2"):
    WHITEHEAD_RULES[_shape] = rule(
        f"order of [ι_4,{_shape}]", (Equals((4,)), 1), domain=Equals((4,)),
        citation="[ι_4,ν_4η_7] = [ι_4,(Eν′)η_7] = 0 and the η²-versions",
    )

for _shape in ("eps", "eta_sigma", "nubar", "mu", "eta_eps", "eta2_sigma", "nu3", "eta_mu"):
    WHITEHEAD_RULES[_shape] = rule(
        f"order of [ι_8m,{_shape}]", (Congruent((0,), 8, 8), 2),
        domain=Congruent((0,), 8, 8), citation=STEM_J_CITATION,
    )
WHITEHEAD_RULES["beta1"] = rule(
    "order of [ι_8m,β_1]", (Congruent((0,), 8, 8), 3),
    domain=Congruent((0,), 8, 8), citation=STEM_J_CITATION,
)


@dataclass(frozen=True)
class WhiteheadOrderFact:
    n: int
    element: GeneratorExpr
    order: object
    citation: str

    def __post_init__(self):
        if self.order != INFINITY and self.order < 1:
            raise ValueError(f"order must be positive, got {self.order}")


def whitehead_fact(n: int, element: GeneratorExpr) -> WhiteheadOrderFact:
    shape = element_shape(n, element)
    rule_ = WHITEHEAD_RULES.get(shape) if shape else None
    if rule_ is not None and rule_.covers(n=n):
        return WhiteheadOrderFact(n, element, rule_.evaluate(n=n), rule_.citation)
    inner = element
    while isinstance(inner, Alias):
        inner = inner.child
    if isinstance(inner, Compose):
        # [ι_n, α∘β] = [ι_n, α]∘β' vanishes with [ι_n, α]
        for cut in range(1, len(inner.parts)):
            head = compose(*inner.parts[:cut])
            try:
                fact = whitehead_fact(n, head)
            except NotCoveredError:
                continue
            if fact.order == 1:
                return WhiteheadOrderFact(n, element, 1, f"composition with {fact.citation}")
    raise NotCoveredError(f"♯[ι_{n},{pretty(element)}]", "no order rule for this element")


def whitehead_order_iota(n: int, element: GeneratorExpr):
    """Order of [ι_n, element]; INFINITY for [ι_n, ι_n] with n even."""
    return whitehead_fact(n, element).order


# ---------------------------------------------------------------------------
# Connecting maps Δ, Δ_C, Δ_H
# ---------------------------------------------------------------------------

_REAL_NU_RULE = rule(
    "order of Δν_n",
    (any_of(Congruent((7,), 8), Equals((5,))), 1),
    (every(odd(at_least=9), Not(Congruent((7,), 8))), 2),
    (any_of(Congruent((2,), 4, 6), Equals((4, 12))), 12),
    (every(Congruent((0,), 4, 8), Not(Equals((12,)))), 24),
    domain=AtLeast(4),
    citation="SO(n+1) -> S^n connecting map on ν_n (Kervaire tables)",
)

DELTA_RULES: Dict[Tuple[Family, str], PiecewiseRule] = {
    (Family.R, "iota"): rule(
        "order of Δι_n",
        (Equals((1, 3, 7)), 1),
        (every(odd(), Not(Equals((1, 3, 7)))), 2),
        (even(), INFINITY),
        domain=AtLeast(1),
        citation="SO(n+1) -> S^n connecting map on ι_n (Kervaire tables)",
    ),
    (Family.R, "eta"): rule(
        "order of Δη_n",
        (any_of(Equals((2, 6)), Congruent((3,), 4)), 1),
        (Otherwise(), 2),
        domain=AtLeast(2),
        citation="SO(n+1) -> S^n connecting map on η_n (Kervaire tables)",
    ),
    (Family.R, "eta2"): rule(
        "order of Δη²_n",
        (Congruent((2, 3), 4), 1),
        (Otherwise(), 2),
        domain=AtLeast(2),
        citation="SO(n+1) -> S^n connecting map on η²_n (Kervaire tables)",
    ),
    (Family.R, "nu"): _REAL_NU_RULE,
    (Family.R, "nu2"): rule(
        "order of Δν²_n",
        (Equals((4,)), 3),
        (Congruent((4, 5, 7), 8, 5), 1),
        (Otherwise(), 2),
        domain=AtLeast(4),
        citation="SO(n+1) -> S^n connecting map on ν²_n; Stiefel manifold V_{n+3,3} for n ≡ 3 mod 8",
    ),
    (Family.R, "sigma"): rule(
        "order of Δσ_n",
        (Congruent((15,), 16), 1),
        (Equals((8,)), 2520),
        (Equals((11,)), 2),
        (every(odd(at_least=9), Not(Equals((11,))), Not(Congruent((15,), 16))), 2),
        (even(at_least=10), 240),
        domain=AtLeast(8),
        citation="SO(n+1) -> S^n connecting map on σ_n; π_14(SO(8)) and Serre's isomorphism",
    ),
    (Family.R, "Enu'"): rule("order of Δ(Eν′)", (Equals((4,)), 4), domain=Equals((4,)),
                             citation="Δι_4 = 2[ι_3] - [η_2]_4 in π_3(SO(4))"),
    (Family.R, "Esigma'"): rule("order of Δ(Eσ′)", (Equals((8,)), 120), domain=Equals((8,)),
                                citation="Δι_8 = 2[ι_7] - [η_6]_8 in π_7(SO(8)); π_14(SO(8))"),
    (Family.R, "wh_iota"): rule("order of Δ[ι_6,ι_6]", (Equals((6,)), 30), domain=Equals((6,)),
                                citation="π_10(SO(6)) = Z_120 + Z_2, π_10(SO(7)) = Z_8"),
    (Family.R, "eps"): rule("order of Δε_n", (Congruent((3,), 4, 3), 1), domain=Congruent((3,), 4, 3),
                            citation="Δε_{4m+3} = 0 (image of J)"),
    (Family.R, "mu"): rule("order of Δμ_n", (Congruent((3,), 4, 3), 1), domain=Congruent((3,), 4, 3),
                           citation="Δμ_{4m+3} = 0 (image of J)"),
}
for _shape in ("nu_eta", "nu_eta2", "Enu'_eta", "Enu'_eta2"):
    DELTA_RULES[(Family.R, _shape)] = rule(
        f"order of Δ({_shape})", (Equals((4,)), 2), domain=Equals((4,)),
        citation="Δ: π_k(S^4) -> π_{k-1}(SO(4)) is an isomorphism for k = 8, 9",
    )

# complex and quaternionic rules are stated in the projective index m of
# S^{2m+1} and S^{4m+3}
DELTA_RULES.update({
    (Family.C, "iota"): rule(
        "order of Δ_C ι_{2m+1}", (AtLeast(1, "m"), lambda m, **_: int(factorial(m))),
        domain=AtLeast(1, "m"), citation="characteristic class ω_m(C) generates π_2m(SU(m)) = Z_m!",
    ),
    (Family.C, "eta"): rule(
        "order of Δ_C η_{2m+1}", (even("m"), 2), (odd("m"), 1),
        domain=AtLeast(1, "m"), citation="SU(m+1) -> S^{2m+1} connecting map on η",
    ),
    (Family.C, "eta2"): rule(
        "order of Δ_C η²_{2m+1}", (even("m"), 2), (odd("m"), 1),
        domain=AtLeast(1, "m"), citation="SU(m+1) -> S^{2m+1} connecting map on η²",
    ),
    (Family.C, "nu"): rule(
        "order of Δ_C ν_{2m+1}",
        (even("m"), lambda m, **_: gcd24(24, m)),
        (odd("m", 3), lambda m, **_: gcd24(24, m + 3) // 2),
        domain=AtLeast(2, "m"), citation="SU(m+1) -> S^{2m+1} connecting map on ν",
    ),
    (Family.C, "nu2"): rule(
        "order of Δ_C ν²_{2m+1}",
        (Congruent((2, 3), 4, 2, "m"), 1),
        (Congruent((0, 1), 4, 4, "m"), 2),
        domain=AtLeast(2, "m"), citation="SU(m+1) -> S^{2m+1} connecting map on ν²",
    ),
    (Family.H, "iota"): rule(
        "order of Δ_H ι_{4m+3}",
        (even("m"), lambda m, **_: int(factorial(2 * m + 1))),
        (odd("m"), lambda m, **_: 2 * int(factorial(2 * m + 1))),
        domain=AtLeast(1, "m"), citation="ω_m(H) generates π_{4m+2}(Sp(m))",
    ),
    (Family.H, "eta"): rule("order of Δ_H η_{4m+3}", (AtLeast(1, "m"), 2), domain=AtLeast(1, "m"),
                            citation="Sp(m+1) -> S^{4m+3} connecting map on η"),
    (Family.H, "eta2"): rule("order of Δ_H η²_{4m+3}", (AtLeast(1, "m"), 2), domain=AtLeast(1, "m"),
                             citation="Sp(m+1) -> S^{4m+3} connecting map on η²"),
    (Family.H, "nu"): rule("order of Δ_H ν_{4m+3}", (AtLeast(1, "m"), lambda m, **_: gcd24(24, m + 2)),
                           domain=AtLeast(1, "m"), citation="Sp(m+1) -> S^{4m+3} connecting map on ν"),
})


def rule_variable(family: Family) -> str:
    return "n" if family is Family.R else "m"


def projective_index(family: Family, n: int) -> int:
    """Sphere dimension n -> index m with n = 2m+1 (C) or n = 4m+3 (H)."""
    if family is Family.R:
        return n
    d = 2 if family is Family.C else 4
    if n < d + 1 or (n + 1) % d:
        raise NotCoveredError(f"Δ_{family.value} on S^{n}", f"S^{n} is not the total sphere of a {family.value}P^m")
    return (n + 1) // d - 1


def delta_order(family: Family, n: int, element: GeneratorExpr):
    """Order of the connecting-map image of element ∈ π_k(S^n)."""
    family = Family(family)
    shape = element_shape(n, element)
    rule_ = DELTA_RULES.get((family, shape)) if shape else None
    subject = f"♯Δ_{family.value}({pretty(element)})"
    if rule_ is None:
        raise NotCoveredError(subject, "no connecting-map rule for this element")
    env = {rule_variable(family): projective_index(family, n)}
    if not rule_.covers(**env):
        raise NotCoveredError(subject, f"outside {rule_.domain}")
    return rule_.evaluate(**env)


_GAP_SHAPES_4 = {"Enu'", "nu_eta", "Enu'_eta", "nu_eta2", "Enu'_eta2", "nu2"}


def delta_vs_whitehead_gap(n: int, element: GeneratorExpr) -> bool:
    """True exactly when ♯Δα exceeds ♯[ι_n, α], for α in stems ≤ 7."""
    k, _ = degrees(element)
    if k - n > 7:
        raise NotCoveredError(f"gap for {pretty(element)}", "only stems up to 7 are classified")
    shape = element_shape(n, element)
    if n == 4 and shape in _GAP_SHAPES_4:
        return True
    if (n, shape) in {(6, "wh_iota"), (8, "Esigma'"), (8, "sigma"), (11, "sigma")}:
        return True
    if shape == "nu" and PowerOfTwoMinus(3, 4).holds({"n": n}):
        return True
    if shape == "nu2" and PowerOfTwoMinus(5, 4).holds({"n": n}):
        return True
    return False


_NOT_MONO = {(3, 4), (4, 4), (5, 4), (6, 4), (5, 6), (7, 8), (7, 11)}


def j_restriction_not_mono(n: int, k: int) -> bool:
    """Whether J restricted to Δπ_{n+k}(S^n) fails to be a monomorphism (k ≤ 7)."""
    if k > 7:
        raise NotCoveredError(f"J on Δπ_{n + k}(S^{n})", "only stems up to 7 are classified")
    if (k, n) in _NOT_MONO:
        return True
    if k == 3 and PowerOfTwoMinus(3, 4).holds({"n": n}):
        return True
    if k == 6 and PowerOfTwoMinus(5, 5).holds({"n": n}):
        return True
    return False


# ---------------------------------------------------------------------------
# [γ_n α, i_F]
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BracketValue:
    """Value of [γ_n α, i_F]; expression is None when the bracket vanishes."""
    expression: Optional[GeneratorExpr]
    multiplier: int
    citation: str

    @property
    def is_zero(self) -> bool:
        return self.expression is None

    def __str__(self) -> str:
        return "0" if self.expression is None else pretty(self.expression)


HOPF_BRACKET_CITATION = "[γ_n α, i_F] via the 0-th Hopf-Hilton invariant"


def lemma_y_bracket(field: str, n: int, alpha: GeneratorExpr, h0_vanishes: bool,
                    alpha_order: Optional[int] = None) -> BracketValue:
    """[γ_n α, i_F] for α ∈ π_k(S^{d(n+1)-1}), signs dropped.

    ``h0_vanishes`` says whether the Hopf-Hilton term H(α) contributes;
    ``alpha_order`` (when known) lets a multiple of α that is zero collapse.
    """
    field = field.upper()
    if field == "R":
        if n % 2:
            return BracketValue(None, 0, HOPF_BRACKET_CITATION)
        main = scalar(-2, alpha)
        h0_term = compose(Whitehead(Atom("iota", n), Atom("iota", n)), HopfInvariant(alpha))
        multiplier = 2
    elif field == "C":
        if n % 2:
            return BracketValue(None, 0, HOPF_BRACKET_CITATION)
        s = 2 * n + 1
        main = compose(Atom("eta", s), Suspension(alpha))
        h0_term = compose(Whitehead(Atom("iota", s), Atom("eta", s)), Suspension(HopfInvariant(alpha)))
        multiplier = 1
    elif field == "H":
        s = 4 * n + 3
        main = compose(Atom("nu", s), Suspension(Suspension(Suspension(alpha))))
        h0_term = compose(Whitehead(Atom("iota", s), Atom("nu", s)),
                          Suspension(Suspension(Suspension(HopfInvariant(alpha)))))
        multiplier = n + 1
        if h0_vanishes and multiplier % 24 == 0:
            # (n+1)ν_{4n+3} = 0 in the stable range
            return BracketValue(None, multiplier, HOPF_BRACKET_CITATION)
        main = scalar(multiplier, main)
        h0_term = scalar(multiplier, h0_term)
    else:
        raise ValueError(f"Unknown field {field}")
    if h0_vanishes:
        if alpha_order is not None and field == "R" and multiplier % alpha_order == 0:
            return BracketValue(None, multiplier, HOPF_BRACKET_CITATION)
        return BracketValue(push("gam", main), multiplier, HOPF_BRACKET_CITATION)
    return BracketValue(push("gam", Sum((main, h0_term))), multiplier, HOPF_BRACKET_CITATION)


# ---------------------------------------------------------------------------
# P_k(S^n) = G_k(S^n)
# ---------------------------------------------------------------------------

CENTER_STEMS_8_10 = rule(
    "P_{n+j}(S^n), 8 ≤ j ≤ 10",
    (Congruent((3,), 4), Whole(), "n ≡ 3 mod 4"),
    (Congruent((0,), 8, 16), Zero(), "n ≡ 0 mod 8, n ≥ 16"),
    domain=any_of(Congruent((3,), 4), Congruent((0,), 8, 16)),
    citation="image of J in stems 8 to 10: Δε_{4m+3} = Δμ_{4m+3} = 0 and brackets [ι_8m, -] of order 2, 3",
)


def _center_from_orders(n: int, k: int, ambient: FgAbGroup) -> Tuple[SubgroupSpec, str]:
    summands = ambient.presentation()
    if any(s.generator is None for s in summands):
        raise NotCoveredError(f"P_{k}(S^{n})", "generators of the ambient group are not named")
    facts = [whitehead_fact(n, s.generator) for s in summands]
    citation = "; ".join(sorted({f.citation for f in facts}))
    if all(f.order == 1 for f in facts):
        return Whole(), citation
    if len(facts) == 1:
        order = facts[0].order
        return (Zero() if order == INFINITY else multiple(order)), citation
    raise NotCoveredError(f"P_{k}(S^{n})", "bracket orders on several summands do not determine the kernel")


def _p_group_sphere(cat: Catalog, n: int, k: int) -> GroupResult:
    subject = f"P_{k}(S^{n})"
    ambient = pi_sphere(cat, n, k).group
    if ambient.is_trivial:
        return exact(subject, ambient, Zero(), "trivial group")
    if n in (1, 3, 7):
        return exact(subject, ambient, Whole(), "S^n is an H-space for n = 1, 3, 7")
    fact = center_fact(cat, n, k)
    if fact is not None:
        return exact(subject, ambient, fact.spec, fact.citation)
    if k == n:
        order = whitehead_order_iota(n, Atom("iota", n))
        spec = Zero() if order == INFINITY else multiple(order)
        return exact(subject, ambient, spec, WHITEHEAD_RULES["iota"].citation)
    if 8 <= k - n <= 10 and CENTER_STEMS_8_10.covers(n=n):
        return exact(subject, ambient, CENTER_STEMS_8_10.evaluate(n=n), CENTER_STEMS_8_10.citation)
    spec, citation = _center_from_orders(n, k, ambient)
    return exact(subject, ambient, spec, f"kernel of [ι_{n}, -]: {citation}")


def p_group_sphere(cat: Catalog, n: int, k: int) -> GroupResult:
    """P_k(S^n) = G_k(S^n) as a subgroup of π_k(S^n)."""
    return answer(f"P_{k}(S^{n})", lambda: _p_group_sphere(cat, n, k))


def all_rules() -> Dict[str, Tuple[PiecewiseRule, str, List[Dict[str, int]]]]:
    """Every rule of this module with the variable it is scanned over."""
    found = {r.name: (r, "n", [{}]) for r in WHITEHEAD_RULES.values()}
    for (family, _), r in DELTA_RULES.items():
        found[r.name] = (r, rule_variable(family), [{}])
    found[CENTER_STEMS_8_10.name] = (CENTER_STEMS_8_10, "n", [{}])
    return found

"""
Gottlieb groups G_k(FP^n).

Every statement about G_k is a GBoundRule: conditions on n and k, a lower
bound and an upper bound. Rules that state an equality are marked ``exact``.
The upper bound defaults to P_k(FP^n) (``INHERIT_P``) because G_k ⊆ P_k.

Combination: an exact rule wins; otherwise the lower bounds of all firing
rules are joined and the upper bounds (P included) are intersected.
"""

from dataclasses import dataclass, replace
from functools import reduce
from typing import Callable, Dict, List, Optional, Tuple, Union

from gottlieb_groups.errors import NotCoveredError
from gottlieb_groups.fga import (
    INFINITY,
    Multiple,
    Subgroup,
    SubgroupSpec,
    Whole,
    Zero,
    generated_by,
    multiple,
    resolve,
)
from gottlieb_groups.generators import parse_expr
from gottlieb_groups.logging import setup_logger
from gottlieb_groups.piecewise import (
    AtLeast,
    AtMost,
    Condition,
    Congruent,
    Equals,
    Not,
    Offset,
    Otherwise,
    PiecewiseRule,
    PowerOfTwoMinus,
    UpTo,
    any_of,
    between,
    even,
    every,
    odd,
    rule,
)
from gottlieb_groups.projspace import (
    GAM,
    INC,
    Field,
    ProjDecomposition,
    decompose_gamma,
    decompose_pi,
    p_group,
    p_prime,
    space_name,
    top_sphere,
)
from gottlieb_groups.results import (
    GroupResult,
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
from gottlieb_groups.tables import Catalog
from gottlieb_groups.whitehead import (
    CENTER_STEMS_8_10,
    Family,
    delta_order,
    j_restriction_not_mono,
    p_group_sphere,
)

logger = setup_logger(__name__)

INHERIT_P = "inherit-P"
CONTAINMENT_CITATION = "G_k(X) ⊆ P_k(X)"
KERNEL_CITATION = "Ker Δ ⊆ G_k for the connecting map of the sphere bundle over FP^n"
SPHERE_CAP_CITATION = "G′_k(FP^n) ⊆ γ_n∗G_k(S^{d(n+1)-1})"


@dataclass(frozen=True)
class BoundContext:
    field: Field
    n: int
    k: int
    decomposition: ProjDecomposition
    cat: Catalog

    @property
    def top(self) -> int:
        return top_sphere(self.field, self.n)

    def on_gam(self, spec: SubgroupSpec) -> SubgroupSpec:
        return self.decomposition.embed(gam=spec)


Bound = Union[SubgroupSpec, Callable[[BoundContext], SubgroupSpec], str, None]


def _realize(bound: Bound, ctx: BoundContext) -> Optional[SubgroupSpec]:
    if bound is None or bound == INHERIT_P:
        return None
    return bound(ctx) if callable(bound) else bound


@dataclass(frozen=True)
class GBoundRule:
    name: str
    field: Field
    n_condition: Condition
    k_condition: Condition
    lower: Bound
    upper: Bound = INHERIT_P
    citation: str = ""
    exact: bool = False

    def applies(self, n: int, k: int) -> bool:
        env = {"n": n, "k": k}
        return self.n_condition.holds(env) and self.k_condition.holds(env)

    def lower_spec(self, ctx: BoundContext) -> Optional[SubgroupSpec]:
        return _realize(self.lower, ctx)

    def upper_spec(self, ctx: BoundContext) -> Optional[SubgroupSpec]:
        if self.exact:
            return self.lower_spec(ctx)
        return _realize(self.upper, ctx)


# ---------------------------------------------------------------------------
# Bound builders
# ---------------------------------------------------------------------------

def on_gam(bound: Bound) -> Callable[[BoundContext], SubgroupSpec]:
    """A bound stated inside γ_n∗π_k(S^{d(n+1)-1})."""
    return lambda ctx: ctx.on_gam(_realize(bound, ctx))


def by_parity(if_even: SubgroupSpec, if_odd: SubgroupSpec) -> Callable[[BoundContext], SubgroupSpec]:
    return lambda ctx: if_odd if ctx.n % 2 else if_even


def from_rule(piecewise: PiecewiseRule) -> Callable[[BoundContext], SubgroupSpec]:
    return lambda ctx: piecewise.evaluate(n=ctx.n)


def delta_kernel(family: Family, template: str) -> Callable[[BoundContext], SubgroupSpec]:
    """(♯Δα)·γ_n∗π_k, with α named by ``template`` on the top sphere S^N."""
    def realize(ctx: BoundContext) -> SubgroupSpec:
        order = delta_order(family, ctx.top, parse_expr(template.format(N=ctx.top)))
        return ctx.on_gam(Zero() if order == INFINITY else multiple(int(order)))
    return realize


def sphere_center(ctx: BoundContext) -> SubgroupSpec:
    """γ_n∗G_k(S^n) = γ_n∗P_k(S^n)."""
    center = p_group_sphere(ctx.cat, ctx.top, ctx.k)
    if not center.is_covered:
        raise NotCoveredError(center.subject, center.notes[0] if center.notes else "not covered")
    return ctx.on_gam(center.value)


# ---------------------------------------------------------------------------
# Conditions on (n, k)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class JRestrictionMono(Condition):
    """1 ≤ k − n ≤ 7 and J is a monomorphism on Δπ_k(S^n)."""
    def holds(self, env) -> bool:
        j = env["k"] - env["n"]
        return 1 <= j <= 7 and not j_restriction_not_mono(env["n"], j)

    def __str__(self) -> str:
        return "1 ≤ k-n ≤ 7, J mono on the image of Δ"


def pair(n: int, k: int) -> Tuple[Condition, Condition]:
    return Equals((n,)), Equals((k,), "k")


ANY_N = AtLeast(2)
ANY_K = Otherwise()


# ---------------------------------------------------------------------------
# F = R
# ---------------------------------------------------------------------------

TOP_CELL_RULE = rule(
    "G_n(RP^n)",
    (even(), Zero()),
    (Equals((3, 7)), Whole()),
    (every(odd(), Not(Equals((1, 3, 7)))), Multiple(2)),
    domain=AtLeast(2),
    citation="G_n(RP^n): 0 for n even, π_n for n = 3, 7, 2π_n otherwise",
)

UPPER_G7_RP4 = generated_by(
    'gam(mul(3,alias("[ι_4,ι_4]",sum(mul(2,nu(4)),mul(-1,E(nu\'(3))),mul(-1,alpha1(4))))))',
    "gam(mul(2,E(nu'(3))))",
)
MAIN_CITATION = "G_{n+j}(RP^n) = γ_n∗G_{n+j}(S^n) for j ≤ 7 outside the pairs where J fails to be mono"

REAL_RULES: Tuple[GBoundRule, ...] = (
    GBoundRule("G_1(RP^n)", Field.R, ANY_N, Equals((1,), "k"), by_parity(Zero(), Whole()),
               citation="G_1(RP^n) = 0 for n even, π_1 for n odd", exact=True),
    GBoundRule("G_n(RP^n)", Field.R, ANY_N, Offset((0,)), from_rule(TOP_CELL_RULE),
               citation=TOP_CELL_RULE.citation, exact=True),
    GBoundRule("G_k(RP^2)", Field.R, Equals((2,)), AtLeast(3, "k"), Whole(),
               citation="G_k(RP^2) = π_k(RP^2) for k ≥ 3", exact=True),
    GBoundRule("G_{n+j}(RP^n), j ≤ 7", Field.R, AtLeast(3), JRestrictionMono(), sphere_center,
               citation=MAIN_CITATION, exact=True),
    GBoundRule("G_7(RP^4)", Field.R, *pair(4, 7), delta_kernel(Family.R, "nu({N})"), UPPER_G7_RP4,
               citation="G_7(RP^4) ⊇ 12π_7 from ♯Δν_4 = 12; 6γ_4ν_4, γ_4Eν′ ∉ G_7(RP^4)"),
    GBoundRule("G_8(RP^4)", Field.R, *pair(4, 8), None,
               citation="J is not mono on Δπ_8(S^4); only G ⊆ P is known"),
    GBoundRule("G_9(RP^4)", Field.R, *pair(4, 9), None,
               citation="J is not mono on Δπ_9(S^4); only G ⊆ P is known"),
    GBoundRule("G_10(RP^4)", Field.R, *pair(4, 10), delta_kernel(Family.R, "cmp(nu({N}),nu(7))"),
               citation="G_10(RP^4) ⊇ 3π_10 from ♯Δν²_4 = 3"),
    GBoundRule("G_11(RP^6)", Field.R, *pair(6, 11), delta_kernel(Family.R, "wh(iota({N}),iota({N}))"),
               citation="G_11(RP^6) ⊇ 30π_11 from ♯Δ[ι_6,ι_6] = 30"),
    GBoundRule("G_15(RP^8)", Field.R, *pair(8, 15), delta_kernel(Family.R, "sigma({N})"),
               citation="G_15(RP^8) ⊇ 2520π_15 = γ_8∗Ker Δ"),
    GBoundRule("G_18(RP^11)", Field.R, *pair(11, 18), delta_kernel(Family.R, "sigma({N})"),
               citation="G_18(RP^11) ⊇ 2π_18 = γ_11∗Ker Δ"),
    GBoundRule("G_{2^i}(RP^{2^i-3})", Field.R, PowerOfTwoMinus(3, 4), Offset((3,)),
               delta_kernel(Family.R, "nu({N})"),
               citation="G_{2^i}(RP^{2^i-3}) ⊇ 2π for i ≥ 4, from ♯Δν = 2"),
    GBoundRule("G_{2^i+1}(RP^{2^i-5})", Field.R, PowerOfTwoMinus(5, 5), Offset((6,)), None,
               citation="J is not mono on Δπ_{n+6}(S^n) for n = 2^i-5; only G ⊆ P is known"),
    GBoundRule("G_{n+j}(RP^n), 8 ≤ j ≤ 10", Field.R, CENTER_STEMS_8_10.domain, Offset((8, 9, 10)),
               on_gam(from_rule(CENTER_STEMS_8_10)),
               citation="G_{n+j}(RP^n) = π for n ≡ 3 mod 4 and 0 for n ≡ 0 mod 8, n ≥ 16 (8 ≤ j ≤ 10)",
               exact=True),
)


# ---------------------------------------------------------------------------
# F = C; offsets j are counted from k = 2n+1
# ---------------------------------------------------------------------------

def complex_offset(*values: int) -> Offset:
    return Offset(values, 2, 1)


C_TWO_PI = any_of(
    every(Congruent((2, 10), 12, 10), Not(PowerOfTwoMinus(2, 1))),
    Congruent((1, 17), 24, 17),
)

COMPLEX_RULES: Tuple[GBoundRule, ...] = (
    GBoundRule("G_k(CP^n), k ≤ 2n", Field.C, ANY_N, UpTo(2, 0), Zero(),
               citation="G_2(CP^n) = 0 and π_k(CP^n) = 0 for 3 ≤ k ≤ 2n", exact=True),
    GBoundRule("G_5(CP^2)", Field.C, *pair(2, 5), Multiple(2),
               citation="G_5(CP^2) = P_5(CP^2) = 2π_5(CP^2)", exact=True),
    GBoundRule("G_{2n+1}(CP^n)", Field.C, ANY_N, complex_offset(0), delta_kernel(Family.C, "iota({N})"),
               citation=f"n!π_{{2n+1}}(CP^n) ⊆ G_{{2n+1}}(CP^n) (Lang); {KERNEL_CITATION}"),
    GBoundRule("G_{2n+2}, G_{2n+3}(CP^n)", Field.C, ANY_N, complex_offset(1, 2), by_parity(Zero(), Whole()),
               citation="G_{2n+1+j}(CP^n) = 0 for n even, π ≅ Z_2 for n odd (j = 1, 2)", exact=True),
    GBoundRule("G_{2n+4}(CP^n)", Field.C, ANY_N, complex_offset(3), delta_kernel(Family.C, "nu({N})"),
               citation=f"G_{{2n+4}}(CP^n) ⊇ (24,n)π for n even, ((24,n+3)/2)π for n odd; {KERNEL_CITATION}"),
    GBoundRule("G_{2n+4}(CP^n) = 2π", Field.C, C_TWO_PI, complex_offset(3), Multiple(2),
               citation="G_{2n+4}(CP^n) = 2π for n ≡ 2,10 mod 12 ≥ 10 (n ≠ 2^i-2) and n ≡ 1,17 mod 24 ≥ 17",
               exact=True),
    GBoundRule("G_{2n+4}(CP^n) = π", Field.C, Congruent((7, 11), 12), complex_offset(3), Whole(),
               citation="G_{2n+4}(CP^n) = π for n ≡ 7,11 mod 12", exact=True),
    GBoundRule("G_{2n+6}(CP^n)", Field.C, ANY_N, complex_offset(5), Whole(),
               citation="G_{2n+6}(CP^n) = π_{2n+6}(CP^n)", exact=True),
    GBoundRule("G_{2n+7}(CP^n)", Field.C, Congruent((2, 3), 4), complex_offset(6), Whole(),
               citation="G_{2n+7}(CP^n) = π_{2n+7}(CP^n) for n ≡ 2,3 mod 4", exact=True),
    GBoundRule("G_k(CP^2), 10 ≤ k ≤ 12", Field.C, Equals((2,)), between(10, 12, "k"), Whole(),
               citation="G_k(CP^2) = π_k(CP^2) for 10 ≤ k ≤ 12", exact=True),
    GBoundRule("G_{8m+11}(CP^{4m+1})", Field.C, Congruent((1,), 4, 9), complex_offset(8), Whole(),
               citation="G_{8m+11}(CP^{4m+1}) = π for m ≥ 2", exact=True),
    GBoundRule("G_{8m+28}, G_{8m+29}(CP^{4m+3})", Field.C, Congruent((3,), 4, 11), complex_offset(21, 22), Whole(),
               citation="G_{8m+k}(CP^{4m+3}) = π for k = 28, 29 and m ≥ 2", exact=True),
)


# ---------------------------------------------------------------------------
# F = H
# ---------------------------------------------------------------------------

def quaternionic_offset(*values: int) -> Offset:
    return Offset(values, 4, 3)


ETA_SIGMA_11 = 'gam(alias("η_11σ_12",sum(nubar(11),eps(11))))'
ETA2_SIGMA_11 = 'gam(alias("η²_11σ_13",sum(cmp(nu(11),nu(14),nu(17)),cmp(eta(11),eps(12)))))'
SP2_KERNEL = "kernel of Δ_H into π_*(Sp(2))"

QUATERNIONIC_RULES: Tuple[GBoundRule, ...] = (
    GBoundRule("G_k(HP^n), k ≤ 4", Field.H, ANY_N, AtMost(4, "k"), Zero(),
               citation="G_4(HP^n) = 0 and π_k(HP^n) = 0 for k ≤ 3", exact=True),
    GBoundRule("G_{4n+3}(HP^n)", Field.H, ANY_N, quaternionic_offset(0), delta_kernel(Family.H, "iota({N})"),
               citation=f"G_{{4n+3}}(HP^n) ⊇ (2n+1)!γπ (n even), 2(2n+1)!γπ (n odd); {KERNEL_CITATION}"),
    GBoundRule("G_{4n+6}(HP^n)", Field.H, ANY_N, quaternionic_offset(3), delta_kernel(Family.H, "nu({N})"),
               citation=f"G_{{4n+6}}(HP^n) ⊇ (24,n+2)γ_n∗π_{{4n+6}}(S^{{4n+3}}); {KERNEL_CITATION}"),
    GBoundRule("G_18(HP^2)", Field.H, *pair(2, 18), on_gam(Multiple(40)),
               citation=f"G_18(HP^2) ⊇ 40γ_2∗π_18(S^11); {SP2_KERNEL}"),
    GBoundRule("G_19(HP^2)", Field.H, *pair(2, 19), generated_by(ETA_SIGMA_11),
               citation="G_19(HP^2) ⊇ {γ_2η_11σ_12} ≅ Z_2, since ε_3σ_11 = 0"),
    GBoundRule("G_20(HP^2)", Field.H, *pair(2, 20), generated_by(ETA2_SIGMA_11),
               citation="G_20(HP^2) ⊇ {γ_2η²_11σ_13} ≅ Z_2, since ε_3σ_11 = 0"),
    GBoundRule("G_21(HP^2)", Field.H, *pair(2, 21), on_gam(Multiple(2)),
               citation=f"G_21(HP^2) ⊇ 2γ_2∗π_21(S^11); {SP2_KERNEL}"),
    GBoundRule("G_22(HP^2)", Field.H, *pair(2, 22), on_gam(Multiple(8)),
               citation=f"G_22(HP^2) ⊇ 8γ_2∗π_22(S^11) ≅ Z_63; {SP2_KERNEL}"),
    GBoundRule("G_22(HP^3)", Field.H, *pair(3, 22), on_gam(Multiple(4)),
               citation="G_22(HP^3) ⊇ 4γ_3∗π_22(S^15) ≅ Z_60; kernel of Δ_H into π_21(Sp(3))"),
)

RULES: Dict[Field, Tuple[GBoundRule, ...]] = {
    Field.R: REAL_RULES,
    Field.C: COMPLEX_RULES,
    Field.H: QUATERNIONIC_RULES,
}

HP_G_PRIME_RULE = rule(
    "G′_{4n+3+j}(HP^n)",
    (every(Equals((6,), "j"), even()), Zero(), "G′_{8m+9}(HP^{2m}) = 0"),
    (every(Equals((6,), "j"), odd()), Whole(), "G′_{8m+13}(HP^{2m+1}) = γπ"),
    (every(Equals((3,), "j"), Congruent((3, 5), 6)), Whole(), "G′_{8m+10}(HP^{2m+1}) = γπ, m ≢ 0 mod 3"),
    (every(Equals((11,), "j"), any_of(Congruent((5, 9), 12, 5), Congruent((15, 23), 24))), Whole(),
     "G′_{4n+14}(HP^n) = γπ"),
    (every(Equals((21,), "j"), Congruent((3,), 4, 3)), Whole(), "G′_{16m+20}(HP^{4m-1}) = γπ"),
    (every(Equals((22,), "j"), Congruent((3,), 4, 7)), Whole(), "G′_{16m+21}(HP^{4m-1}) = γπ, m ≥ 2"),
    domain=any_of(
        every(Equals((6,), "j"), AtLeast(2)),
        every(Equals((3,), "j"), Congruent((3, 5), 6)),
        every(Equals((11,), "j"), any_of(Congruent((5, 9), 12, 5), Congruent((15, 23), 24))),
        every(Equals((21,), "j"), Congruent((3,), 4, 3)),
        every(Equals((22,), "j"), Congruent((3,), 4, 7)),
    ),
    citation="γ-part of the Gottlieb groups of HP^n from Δ_H-kernels in Sp(n)",
)


# ---------------------------------------------------------------------------
# Assembly
# ---------------------------------------------------------------------------

def _prefer(specs: List[SubgroupSpec], combined: Subgroup, ambient) -> SubgroupSpec:
    """Keep a stated description when it already equals the combined subgroup."""
    for spec in specs:
        if resolve(spec, ambient) == combined:
            return spec
    return combined.to_spec()


def _join(specs: List[SubgroupSpec], ambient) -> Optional[SubgroupSpec]:
    if not specs:
        return None
    combined = reduce(Subgroup.join, (resolve(s, ambient) for s in specs))
    return _prefer(specs, combined, ambient)


def _meet(specs: List[SubgroupSpec], ambient) -> Optional[SubgroupSpec]:
    if not specs:
        return None
    combined = reduce(Subgroup.meet, (resolve(s, ambient) for s in specs))
    return _prefer(specs, combined, ambient)


def _combine(subject: str, ambient, lowers: List[SubgroupSpec], uppers: List[SubgroupSpec],
             citations: List[str], *notes: str) -> GroupResult:
    lower, upper = _join(lowers, ambient), _meet(uppers, ambient)
    citation = "; ".join(dict.fromkeys(c for c in citations if c))
    if lower is None and upper is None:
        raise NotCoveredError(subject, "no rule applies and P_k is not covered")
    if lower is None:
        if resolve(upper, ambient).is_zero:
            return exact(subject, ambient, Zero(), citation, *notes)
        return upper_bound(subject, ambient, upper, citation, *notes)
    if upper is None:
        return lower_bound(subject, ambient, lower, citation, *notes)
    return bounds(subject, ambient, lower, upper, citation, *notes)


def firing_rules(field: Field, n: int, k: int) -> List[GBoundRule]:
    return [r for r in RULES.get(Field(field), ()) if r.applies(n, k)]


def _p_upper(field: Field, n: int, k: int, cat: Catalog) -> Optional[GroupResult]:
    p = p_group(field, n, k, cat)
    if not p.is_covered or p.upper is None:
        return None
    return p


def _assemble(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    subject = f"G_{k}({space_name(field, n)})"
    fired = firing_rules(field, n, k)
    try:
        decomposition = decompose_pi(field, n, k, cat)
    except NotCoveredError as e:
        # equalities with π or 0 need no presentation of the ambient group
        for r in fired:
            if r.exact and isinstance(r.lower, (Zero, Whole)):
                return exact(subject, None, r.lower, r.citation, f"{e.subject}: {e.reason}")
        raise
    ctx = BoundContext(field, n, k, decomposition, cat)
    ambient = decomposition.ambient
    for r in fired:
        if not r.exact:
            continue
        try:
            value = r.lower_spec(ctx)
        except NotCoveredError as e:
            logger.debug(f"{subject}: rule {r.name} skipped ({e})")
            continue
        logger.debug(f"{subject}: exact rule {r.name}")
        return exact(subject, ambient, value, r.citation)

    lowers, uppers, citations = [], [], []
    for r in fired:
        try:
            lower, upper = r.lower_spec(ctx), r.upper_spec(ctx)
        except NotCoveredError as e:
            logger.debug(f"{subject}: rule {r.name} skipped ({e})")
            continue
        if lower is not None:
            lowers.append(lower)
        if upper is not None:
            uppers.append(upper)
        citations.append(r.citation)
    p = _p_upper(field, n, k, cat)
    if p is not None:
        uppers.append(p.upper)
        citations.append(f"{CONTAINMENT_CITATION}, P_k: {p.citation}")
    return _combine(subject, ambient, lowers, uppers, citations)


def _sphere_delegate(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    sphere_dim = {Field.R: 1, Field.C: 2, Field.H: 4}[field]
    result = replace(p_group_sphere(cat, sphere_dim, k), subject=f"G_{k}({space_name(field, n)})")
    return result.with_notes(f"{space_name(field, n)} = S^{sphere_dim}; G_k(S^m) = P_k(S^m) in the tabulated range")


def g_group(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """G_k(FP^n): exact value or bounds G_lower ⊆ G ⊆ G_upper."""
    field = Field(field)
    subject = f"G_{k}({space_name(field, n)})"
    if field is Field.K:
        from gottlieb_groups.cayley import g_group_kp2
        if n != 2:
            return not_covered(subject, "the Cayley projective plane exists only for n = 2")
        return g_group_kp2(k, cat)
    if n < 1 or k < 1:
        return not_covered(subject, "n and k must be positive")
    if n == 1:
        return answer(subject, lambda: _sphere_delegate(field, n, k, cat))
    return answer(subject, lambda: _assemble(field, n, k, cat))


# ---------------------------------------------------------------------------
# G′, G″
# ---------------------------------------------------------------------------

def _gamma_context(field: Field, n: int, k: int, cat: Catalog) -> BoundContext:
    return BoundContext(field, n, k, decompose_gamma(field, n, k, cat), cat)


def _sphere_cap(ctx: BoundContext) -> Optional[SubgroupSpec]:
    try:
        return sphere_center(ctx)
    except NotCoveredError:
        return None


def _hp_g_prime(n: int, k: int, cat: Catalog) -> GroupResult:
    subject = f"G′_{k}(HP^{n})"
    j = k - top_sphere(Field.H, n)
    if HP_G_PRIME_RULE.covers(n=n, j=j):
        value = HP_G_PRIME_RULE.evaluate(n=n, j=j)
        try:
            ctx = _gamma_context(Field.H, n, k, cat)
        except NotCoveredError as e:
            return exact(subject, None, value, HP_G_PRIME_RULE.citation, f"{e.subject}: {e.reason}")
        return exact(subject, ctx.decomposition.ambient, value, HP_G_PRIME_RULE.citation)
    ctx = _gamma_context(Field.H, n, k, cat)
    ambient = ctx.decomposition.ambient
    lowers, uppers, citations = [], [], []
    for r in firing_rules(Field.H, n, k):
        try:
            lower = r.lower_spec(ctx)
        except NotCoveredError:
            continue
        if lower is not None:
            lowers.append(lower)
            citations.append(r.citation)
    cap = _sphere_cap(ctx)
    if cap is not None:
        uppers.append(cap)
        citations.append(SPHERE_CAP_CITATION)
    p = p_prime(Field.H, n, k, cat)
    if p.is_covered and p.upper is not None and p.ambient is not None \
            and p.ambient.presentation() == ambient.presentation():
        uppers.append(p.upper)
        citations.append(f"G′ ⊆ P′: {p.citation}")
    return _combine(subject, ambient, lowers, uppers, citations)


def _with_sphere_cap(result: GroupResult, field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    if result.status in (Status.EXACT, Status.NOT_COVERED) or result.ambient is None:
        return result
    ctx = BoundContext(field, n, k, decompose_pi(field, n, k, cat), cat)
    cap = _sphere_cap(ctx)
    if cap is None:
        return result
    uppers = [u for u in (result.upper, cap) if u is not None]
    lowers = [result.value] if result.lower is not None else []
    citations = [result.citation, SPHERE_CAP_CITATION]
    return _combine(result.subject, result.ambient, lowers, uppers, citations, *result.notes)


def g_prime(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """G′_k(FP^n) = G_k ∩ γ_n∗π_k(S^{d(n+1)-1})."""
    field = Field(field)
    subject = f"G′_{k}({space_name(field, n)})"
    if field is Field.K:
        return not_covered(subject, "G′ is defined for F = R, C, H")
    if n < 2 or k < 1:
        return not_covered(subject, "FP^1 is a sphere; ask for G_k instead" if n == 1 else "n and k must be positive")
    if field is Field.H:
        return answer(subject, lambda: _hp_g_prime(n, k, cat))

    def compute() -> GroupResult:
        full = g_group(field, n, k, cat)
        if not full.is_covered:
            return replace(full, subject=subject)
        return _with_sphere_cap(restrict(full, GAM, subject), field, n, k, cat)

    return answer(subject, compute)


def g_double_prime(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """G″_k(FP^n) = G_k ∩ i_F∗Eπ_{k-1}(S^{d-1}); open for HP^n."""
    field = Field(field)
    subject = f"G″_{k}({space_name(field, n)})"
    if field is Field.H:
        return not_covered(subject, "G″_k(HP^n) is an open question: no pair (k, n) with G_k ∩ i_H∗Eπ ≠ 0 is known")
    if field is Field.K or n < 2 or k < 1:
        return not_covered(subject, "defined for RP^n and CP^n with n ≥ 2")
    full = g_group(field, n, k, cat)
    return answer(subject, lambda: restrict(full, INC, subject))


def g_group_local(field: Field, n: int, k: int, p: int, cat: Catalog) -> GroupResult:
    """(G_k(FP^n); p), the p-primary part of the answer."""
    field = Field(field)
    subject = f"G_{k}({space_name(field, n)};{p})"
    if field is Field.C and n == 2 and p % 2:
        full = g_group(field, n, k, cat)
        if full.is_covered and full.ambient is not None:
            part = localize(replace(full, status=Status.EXACT, value=Whole(), upper=Whole()), p, subject)
            return replace(part, citation="G_k(CP^2;p) = π_k(CP^2;p) for an odd prime p")
    return answer(subject, lambda: localize(g_group(field, n, k, cat), p, subject))


# ---------------------------------------------------------------------------
# G = P
# ---------------------------------------------------------------------------

KP2_ZERO_CENTERS = (9, 10, 12, 13, 14, 20)


def g_equals_p_flag(field: Field, n: int, k: int, cat: Optional[Catalog] = None) -> bool:
    """True when a stated result forces G_k(FP^n) = P_k(FP^n).

    Without a catalog only the closed statements are used; with one, cells
    where P_k = 0 or where both groups are known exactly and agree count too.
    """
    field = Field(field)
    if field is Field.R and n >= 1 and k in (1, n):
        return True
    if field is Field.K:
        if n != 2:
            return False
        if k == 11 or k in KP2_ZERO_CENTERS:
            return True
    if field is Field.C and n >= 2 and 3 <= k <= 2 * n:
        return True
    if field is Field.C and (n, k) in ((2, 5), (2, 7)):
        return True
    if field is Field.H and n >= 2 and (k <= 3 or k in (5, 6) or (n >= 3 and k in (12, 13))):
        return True
    if cat is None:
        return False
    if field is Field.K:
        from gottlieb_groups.cayley import g_group_kp2, p_group_kp2
        g, p = g_group_kp2(k, cat), p_group_kp2(k, cat)
    else:
        g, p = g_group(field, n, k, cat), p_group(field, n, k, cat)
    if p.is_exact and p.value_subgroup() is not None and p.value_subgroup().is_zero:
        return True
    if g.is_exact and p.is_exact and g.ambient is not None and p.ambient is not None:
        return resolve(g.value, p.ambient) == p.value_subgroup()
    return False


def all_rules() -> Dict[str, Tuple[PiecewiseRule, str, List[Dict[str, int]]]]:
    """Piecewise rules of this module, scanned over n."""
    return {
        TOP_CELL_RULE.name: (TOP_CELL_RULE, "n", [{}]),
        HP_G_PRIME_RULE.name: (HP_G_PRIME_RULE, "n", [{"j": j} for j in (3, 6, 11, 21, 22)]),
    }

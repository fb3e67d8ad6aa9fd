"""
Homotopy groups and Whitehead center groups of the projective spaces RP^n,
CP^n and HP^n.

Every π_k(FP^n) splits as γ_n∗π_k(S^{d(n+1)-1}) ⊕ i_F∗Eπ_{k-1}(S^{d-1}); the
two summands carry the tags ``gam`` and ``inc`` inside the ambient group so
that P′ = P ∩ γ∗π and P″ = P ∩ i∗Eπ can be cut out of an assembled answer.

The center P_k(FP^n) is assembled from the subgroups

    M_k   elements α of π_k(S^{d(n+1)-1}) with [γ_nα, i_F] = 0
    Q_k   elements β of π_k(S^3) with vanishing Samelson product <ι_3, β>
    L′    elements β with [i_F Eβ, i_F] = 0    (equals Q_{k-1} for n ≥ 2)
    L″    elements β with [i_F Eβ, γ_n] = 0
    L     L′ ∩ L″

following the rule tables below.
"""

from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Dict, List, Optional, Tuple

from gottlieb_groups.errors import GottliebError, NotCoveredError
from gottlieb_groups.fga import (
    Annihilated,
    DirectSum,
    FgAbGroup,
    GeneratedBy,
    Multiple,
    SubgroupSpec,
    Whole,
    Zero,
    direct_sum,
    gcd24,
    generated_by,
    lcm_pair,
    multiple,
)
from gottlieb_groups.generators import Atom, GeneratorExpr, Suspension, push
from gottlieb_groups.logging import setup_logger
from gottlieb_groups.piecewise import (
    AtLeast,
    Congruent,
    Equals,
    Not,
    PiecewiseRule,
    any_of,
    between,
    even,
    every,
    odd,
    rule,
)
from gottlieb_groups.results import (
    GroupResult,
    answer,
    exact,
    not_covered,
    restrict,
    upper_bound,
    whole_or_zero,
)
from gottlieb_groups.tables import Catalog, TableEntry, center_fact, pi_sphere, sphere
from gottlieb_groups.whitehead import p_group_sphere

logger = setup_logger(__name__)

GAM = "gam"
INC = "inc"


class UnsupportedFieldError(GottliebError, ValueError):
    """Raised when the Cayley plane is routed to the projective-space assembly."""
    def __init__(self, field: str):
        self.field = field
        super().__init__(f"Field {field} is handled by the cayley module")


class Field(str, Enum):
    R = "R"
    C = "C"
    H = "H"
    K = "K"

    @property
    def d(self) -> int:
        return {"R": 1, "C": 2, "H": 4, "K": 8}[self.value]

    @property
    def symbol(self) -> str:
        return f"{self.value}P"


def space_name(field: Field, n: int) -> str:
    return f"{Field(field).symbol}^{n}"


def top_sphere(field: Field, n: int) -> int:
    """Dimension of the sphere S^{d(n+1)-1} covering FP^n."""
    return Field(field).d * (n + 1) - 1


# ---------------------------------------------------------------------------
# Decomposition
# ---------------------------------------------------------------------------

SPLITTING_CITATION = "π_k(FP^n) = γ_n∗π_k(S^{d(n+1)-1}) ⊕ i_F∗Eπ_{k-1}(S^{d-1})"


def push_spec(spec: SubgroupSpec, wrap: Callable[[GeneratorExpr], GeneratorExpr]) -> SubgroupSpec:
    """Carry a subgroup description along a map that acts on named elements."""
    if isinstance(spec, GeneratedBy):
        return GeneratedBy(tuple(wrap(e) for e in spec.elements))
    if isinstance(spec, DirectSum):
        return DirectSum(tuple((tag, push_spec(part, wrap)) for tag, part in spec.parts))
    return spec


def _gam(expr: GeneratorExpr) -> GeneratorExpr:
    return push(GAM, expr)


def _inc_suspended(expr: GeneratorExpr) -> GeneratorExpr:
    return push(INC, Suspension(expr))


def _inc(expr: GeneratorExpr) -> GeneratorExpr:
    return push(INC, expr)


@dataclass(frozen=True)
class ProjDecomposition:
    field: Field
    n: int
    k: int
    sphere_part: TableEntry
    fiber_part: TableEntry
    ambient: FgAbGroup
    fiber_push: Callable[[GeneratorExpr], GeneratorExpr] = _inc_suspended

    @property
    def citation(self) -> str:
        return f"{SPLITTING_CITATION}; {self.sphere_part.citation}"

    def embed(self, gam: Optional[SubgroupSpec] = None, inc: Optional[SubgroupSpec] = None) -> SubgroupSpec:
        """Subgroup γ∗(gam) ⊕ i∗E(inc), given by descriptions inside the two factors."""
        tags = self.ambient.tags
        parts = []
        if gam is not None and GAM in tags:
            parts.append((GAM, push_spec(gam, _gam)))
        if inc is not None and INC in tags:
            parts.append((INC, push_spec(inc, self.fiber_push)))
        if not parts:
            return Zero()
        if len(parts) == 1 and len(tags) == 1:
            return parts[0][1]
        return DirectSum(tuple(parts))


def _trivial(n: int, k: int, citation: str = "trivial group") -> TableEntry:
    return TableEntry(sphere(n), k, FgAbGroup.zero(), True, citation)


def _fiber(field: Field, n: int, k: int, cat: Catalog) -> Tuple[TableEntry, Callable]:
    if field is Field.R:
        if k == 1:
            return TableEntry(sphere(1), 1, FgAbGroup.cyclic(0 if n == 1 else 2, Atom("iota", 1)), True,
                              "π_1(RP^n) = Z_2 for n ≥ 2"), _inc
        return _trivial(0, k - 1), _inc
    if field is Field.C:
        if k == 2:
            return TableEntry(sphere(2), 2, FgAbGroup.cyclic(0, Atom("iota", 2)), True,
                              "π_2(CP^n) = Z generated by the bottom cell"), _inc
        return _trivial(1, k - 1), _inc
    if k < 2:
        return _trivial(3, k - 1), _inc_suspended
    return pi_sphere(cat, 3, k - 1), _inc_suspended


def decompose_pi(field: Field, n: int, k: int, cat: Catalog) -> ProjDecomposition:
    """π_k(FP^n) as the direct sum of its γ-part and its bottom-cell part."""
    field = Field(field)
    if field is Field.K:
        raise UnsupportedFieldError(field.value)
    subject = f"π_{k}({space_name(field, n)})"
    if n < 1 or k < 1:
        raise NotCoveredError(subject, "n and k must be positive")
    if field is Field.R and n == 1:
        # RP^1 = S^1; γ_1 has degree 2, so only the bottom cell is used
        sphere_part = _trivial(1, k)
    else:
        sphere_part = pi_sphere(cat, top_sphere(field, n), k)
    fiber_part, fiber_push = _fiber(field, n, k, cat)
    ambient = direct_sum(sphere_part.group.mapped(_gam, tag=GAM),
                         fiber_part.group.mapped(fiber_push, tag=INC))
    logger.debug(f"{subject} = {sphere_part.group} + {fiber_part.group}")
    return ProjDecomposition(field, n, k, sphere_part, fiber_part, ambient, fiber_push)


def decompose_gamma(field: Field, n: int, k: int, cat: Catalog) -> ProjDecomposition:
    """Only the γ-part γ_n∗π_k(S^{d(n+1)-1}); needs no table of the fiber sphere."""
    field = Field(field)
    if field is Field.K:
        raise UnsupportedFieldError(field.value)
    sphere_part = pi_sphere(cat, top_sphere(field, n), k)
    fiber_part = _trivial(max(field.d - 1, 0), k - 1)
    ambient = sphere_part.group.mapped(_gam, tag=GAM)
    return ProjDecomposition(field, n, k, sphere_part, fiber_part, ambient)


def pi_group(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """π_k(FP^n) as a result whose value is the whole group."""
    subject = f"π_{k}({space_name(field, n)})"

    def compute() -> GroupResult:
        decomposition = decompose_pi(field, n, k, cat)
        return exact(subject, decomposition.ambient, whole_or_zero(decomposition.ambient), decomposition.citation)

    return answer(subject, compute)


# ---------------------------------------------------------------------------
# M, Q, L
# ---------------------------------------------------------------------------

BRACKET_CITATION = "[γ_nα, i_F] via the 0-th Hopf-Hilton invariant"

REAL_M_CELLS = {
    (4, 8): generated_by("cmp(E(nu'(3)),eta(7))"),
    (4, 9): generated_by("cmp(E(nu'(3)),eta(7),eta(8))"),
    (4, 10): generated_by(
        "mul(3,cmp(nu(4),nu(7)))",
        'alias("(ν_4-α_1(4))α_1(7)",sum(mul(8,cmp(nu(4),nu(7))),mul(-1,cmp(alpha1(4),alpha1(7)))))',
    ),
    (6, 11): Whole(),
    (6, 12): Whole(),
}

COMPLEX_M_RULE = rule(
    "M_{2n+1+j}(S^{2n+1}), n even",
    (Equals((0,), "j"), Multiple(2)),
    (Equals((1, 2), "j"), Zero()),
    (between(3, 6, "j"), Whole()),
    (every(Equals((7,), "j"), Equals((2,))), Whole()),
    (every(Equals((7,), "j"), Not(Equals((2,)))), Multiple(2)),
    domain=every(even(), between(0, 7, "j")),
    citation=f"{BRACKET_CITATION}, F = C",
)

QUATERNIONIC_M_RULE = rule(
    "M_{4n+3+j}(S^{4n+3})",
    (Equals((0,), "j"), lambda n, **_: multiple(24 // gcd24(24, n + 1))),
    (Equals((3,), "j"), lambda n, **_: multiple(2 // gcd24(2, n + 1))),
    (Equals((1, 2, 4, 5, 8, 9, 10), "j"), Whole()),
    (every(Equals((6,), "j"), odd()), Whole()),
    (every(Equals((6,), "j"), even()), Multiple(2)),
    (Equals((7,), "j"), Whole()),
    domain=every(AtLeast(1), any_of(
        Equals((0, 1, 2, 3, 4, 5, 6, 8, 9, 10), "j"),
        every(Equals((7,), "j"), any_of(Congruent((3,), 4), every(even(), Congruent((2,), 6)))),
    )),
    citation=f"{BRACKET_CITATION}, F = H: (n+1)γ_n(ν_{{4n+3}}∘E³α)",
)


def _m_spec(field: Field, n: int, k: int, cat: Catalog, ambient: FgAbGroup) -> Tuple[SubgroupSpec, str]:
    subject = f"M_{k}(S^{top_sphere(field, n)})"
    if field is Field.R:
        if n % 2:
            return Whole(), f"{BRACKET_CITATION}: zero for n odd"
        if n == 2:
            return (Zero() if k == 2 else Whole()), "[γ_2, i_R] = -2γ_2"
        if (n, k) == (4, 7):
            fact = center_fact(cat, 4, 7)
            if fact is None:
                raise NotCoveredError(subject, "P_7(S^4) is not in the catalog")
            return fact.spec, f"M_7(S^4) = P_7(S^4); {fact.citation}"
        if (n, k) in REAL_M_CELLS:
            return REAL_M_CELLS[(n, k)], f"{BRACKET_CITATION}, unstable cells of S^{n}"
        if k <= 2 * n - 2:
            return (Zero() if ambient.is_trivial else Annihilated(2)), f"{BRACKET_CITATION}: ∓2γ_nα in the stable range"
        raise NotCoveredError(subject, "outside the stable range")
    j = k - top_sphere(field, n)
    if j < 0:
        return whole_or_zero(ambient), "trivial group"
    if field is Field.C:
        if n % 2:
            return Whole(), f"{BRACKET_CITATION}: zero for n odd"
        return COMPLEX_M_RULE.evaluate(n=n, j=j), COMPLEX_M_RULE.citation
    if (n + 1) % 24 == 0 and k <= 8 * n + 4:
        return Whole(), f"{BRACKET_CITATION}: (n+1)ν = 0 for n ≡ 23 mod 24"
    return QUATERNIONIC_M_RULE.evaluate(n=n, j=j), QUATERNIONIC_M_RULE.citation


def m_subgroup(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """M_k(S^{d(n+1)-1}) inside π_k(S^{d(n+1)-1})."""
    field = Field(field)
    subject = f"M_{k}(S^{top_sphere(field, n)})"

    def compute() -> GroupResult:
        if field is Field.K:
            raise UnsupportedFieldError(field.value)
        ambient = pi_sphere(cat, top_sphere(field, n), k).group
        spec, citation = _m_spec(field, n, k, cat, ambient)
        return exact(subject, ambient, spec, citation)

    return answer(subject, compute)


Q_CITATION = "Samelson products <ι_3, β> in π_*(S^3)"

Q_VALUES = {
    3: Multiple(12),
    4: Zero(), 5: Zero(), 11: Zero(), 12: Zero(),
    6: Multiple(3),
    7: Whole(), 8: Whole(), 9: Whole(),
    10: Multiple(3),
    13: generated_by("eps'(3)", "cmp(alpha1(3),alpha2(6))"),
    14: Whole(), 15: Whole(), 17: Whole(),
    16: generated_by("cmp(nu'(3),eta(6),mu(7))"),
    18: Multiple(6),
}


def q_subgroup(k: int, cat: Catalog) -> GroupResult:
    """Q_k(S^3) for 3 ≤ k ≤ 18."""
    subject = f"Q_{k}(S^3)"

    def compute() -> GroupResult:
        if k not in Q_VALUES:
            raise NotCoveredError(subject, "tabulated for 3 <= k <= 18")
        ambient = pi_sphere(cat, 3, k).group
        return exact(subject, ambient, Q_VALUES[k], Q_CITATION)

    return answer(subject, compute)


OPEN_PROBLEM_NOTE = "L″ beyond degree 22 depends on the open question whether ν′E³β = 0 forces ν_4∧β = 0"


def l_subgroups(n: int, k: int, cat: Catalog) -> Tuple[GroupResult, GroupResult, GroupResult]:
    """(L′, L″, L) inside π_{k-1}(S^3) for HP^n."""
    labels = [f"{name}_{k - 1},{n}(S^3)" for name in ("L′", "L″", "L")]
    if n < 2:
        return tuple(not_covered(label, "defined for n >= 2") for label in labels)

    def l_prime() -> GroupResult:
        q = q_subgroup(k - 1, cat)
        if not q.is_covered:
            raise NotCoveredError(labels[0], q.notes[0] if q.notes else "Q not covered")
        return exact(labels[0], q.ambient, q.value, f"L′_{{k-1}} = Q_{{k-1}}(S^3) for n ≥ 2; {Q_CITATION}")

    def l_double_prime() -> GroupResult:
        ambient = pi_sphere(cat, 3, k - 1).group
        if k == 4:
            return exact(labels[1], ambient, multiple(24 // gcd24(24, n + 1)), "L″_{3,n}(S^3) = 24/(24,n+1)π_3(S^3)")
        if 5 <= k <= 22:
            return exact(labels[1], ambient, Whole(), "L″_{k-1,n}(S^3) = π_{k-1}(S^3) for 5 ≤ k ≤ 22")
        raise NotCoveredError(labels[1], OPEN_PROBLEM_NOTE if k > 22 else "defined for k >= 4")

    first = answer(labels[0], l_prime)
    second = answer(labels[1], l_double_prime)
    if not (first.is_covered and second.is_covered):
        return first, second, not_covered(labels[2], "L′ or L″ not covered")
    meet = first.value_subgroup().meet(second.value_subgroup())
    third = answer(labels[2], lambda: exact(labels[2], first.ambient, meet.to_spec(), "L = L′ ∩ L″"))
    return first, second, third


# ---------------------------------------------------------------------------
# P′ for HP^n
# ---------------------------------------------------------------------------

QUATERNIONIC_P_PRIME_RULE = rule(
    "P′_{4n+3+j}(HP^n)",
    (Equals((0,), "j"), lambda n, **_: multiple(lcm_pair(24 // gcd24(24, n + 1), 2))),
    (Equals((1, 2, 4, 5, 8, 9, 10), "j"), Whole()),
    (Equals((3,), "j"), lambda n, **_: multiple((3 + (-1) ** n) // 2)),
    (every(Equals((6,), "j"), odd()), Whole()),
    (every(Equals((6,), "j"), even()), Zero()),
    (every(Equals((7,), "j"), Congruent((0, 1, 2), 4), Not(Equals((2,)))), Multiple(2)),
    (every(Equals((7,), "j"), any_of(Congruent((3,), 4), Equals((2,)))), Whole()),
    (Equals((11,), "j"), Whole(), "[ι_{4n+3}, π_{4n+14}] = 0 unless n ≡ 115 mod 128"),
    domain=any_of(
        every(Equals((0,), "j"), AtLeast(2)),
        every(between(1, 10, "j"), AtLeast(1)),
        every(Equals((11,), "j"), AtLeast(1), Not(Congruent((115,), 128))),
    ),
    citation="Whitehead center of HP^n on the γ_n-part, 0 ≤ j ≤ 10",
)


def p_prime_hp(n: int, k_offset: int, cat: Catalog) -> GroupResult:
    """P′_{4n+3+j}(HP^n) as a subgroup of γ_n∗π_{4n+3+j}(S^{4n+3})."""
    k = 4 * n + 3 + k_offset
    subject = f"P′_{k}(HP^{n})"

    def compute() -> GroupResult:
        rule_ = QUATERNIONIC_P_PRIME_RULE
        if not rule_.covers(n=n, j=k_offset):
            raise NotCoveredError(subject, f"outside {rule_.domain}")
        entry = pi_sphere(cat, 4 * n + 3, k)
        ambient = entry.group.mapped(_gam, tag=GAM)
        return exact(subject, ambient, rule_.evaluate(n=n, j=k_offset), rule_.citation)

    return answer(subject, compute)


# ---------------------------------------------------------------------------
# P
# ---------------------------------------------------------------------------

RC1_CITATION = "P_k(FP^n) = γ_n∗(P_k(S^{d(n+1)-1}) ∩ M_k) for F = R, C and k ≥ d+1"

REAL_P_CELLS = {
    (4, 8): (generated_by("gam(cmp(E(nu'(3)),eta(7)))"), "Whitehead center of RP^4 in degree 8"),
    (4, 9): (generated_by("gam(cmp(E(nu'(3)),eta(7),eta(8)))"), "Whitehead center of RP^4 in degree 9"),
    (4, 10): (push_spec(REAL_M_CELLS[(4, 10)], _gam), "Whitehead center of RP^4 in degree 10"),
    (6, 11): (Multiple(3), "P_11(RP^6) = 3π_11(RP^6)"),
}


def _from_sphere(field: Field, n: int, k: int, cat: Catalog, decomposition: ProjDecomposition) -> GroupResult:
    subject = f"P_{k}({space_name(field, n)})"
    center = p_group_sphere(cat, top_sphere(field, n), k)
    m = m_subgroup(field, n, k, cat)
    for part in (center, m):
        if not part.is_covered:
            raise NotCoveredError(part.subject, part.notes[0] if part.notes else "not covered")
    meet = center.value_subgroup().meet(m.value_subgroup())
    spec = decomposition.embed(gam=meet.to_spec())
    return exact(subject, decomposition.ambient, spec, RC1_CITATION,
                 f"P(S) = {center.value}: {center.citation}", f"M = {m.value}: {m.citation}")


def _sphere_delegate(n_sphere: int, field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    result = replace(p_group_sphere(cat, n_sphere, k), subject=f"P_{k}({space_name(field, n)})")
    return result.with_notes(f"{space_name(field, n)} = S^{n_sphere}")


def _real(n: int, k: int, cat: Catalog) -> GroupResult:
    subject = f"P_{k}(RP^{n})"
    if n == 1:
        return _sphere_delegate(1, Field.R, n, k, cat)
    decomposition = decompose_pi(Field.R, n, k, cat)
    ambient = decomposition.ambient
    if k == 1:
        return exact(subject, ambient, Whole() if n % 2 else Zero(), "P_1(RP^n) = π_1 for n odd, 0 for n even")
    if n == 2:
        return exact(subject, ambient, Zero() if k == 2 else Whole(),
                     "P_2(RP^2) = 0 and P_k(RP^2) = π_k(RP^2) for k ≥ 3")
    if (n, k) in REAL_P_CELLS:
        spec, citation = REAL_P_CELLS[(n, k)]
        return exact(subject, ambient, spec, citation)
    return _from_sphere(Field.R, n, k, cat, decomposition)


def _complex(n: int, k: int, cat: Catalog) -> GroupResult:
    subject = f"P_{k}(CP^{n})"
    if n == 1:
        return _sphere_delegate(2, Field.C, n, k, cat)
    decomposition = decompose_pi(Field.C, n, k, cat)
    ambient = decomposition.ambient
    if k == 2:
        return exact(subject, ambient, Multiple(2) if n % 2 == 0 else Whole(),
                     "P_2(CP^n) = 2π_2 for n even, π_2 for n odd")
    if k <= 2 * n:
        return exact(subject, ambient, Zero(), "π_k(CP^n) = 0 for 3 ≤ k ≤ 2n")
    if (n, k) == (2, 7):
        return exact(subject, ambient, Zero(), "P_7(CP^2) = 0")
    return _from_sphere(Field.C, n, k, cat, decomposition)


def _quaternionic(n: int, k: int, cat: Catalog) -> GroupResult:
    subject = f"P_{k}(HP^{n})"
    if n == 1:
        return _sphere_delegate(4, Field.H, n, k, cat)
    decomposition = decompose_pi(Field.H, n, k, cat)
    ambient = decomposition.ambient
    if k <= 3:
        return exact(subject, ambient, Zero(), "HP^n is 3-connected")
    if k == 4:
        return exact(subject, ambient, multiple(lcm_pair(12, 24 // gcd24(24, n + 1))),
                     "P_4(HP^n) = [[12, 24/(24,n+1)]]π_4(HP^n)")
    q = q_subgroup(k - 1, cat)
    if k <= 4 * n + 2:
        if not q.is_covered:
            raise NotCoveredError(q.subject, q.notes[0])
        return exact(subject, ambient, decomposition.embed(inc=q.value),
                     f"P_k(HP^n) = i_H∗EQ_{{k-1}}(S^3) for 5 ≤ k ≤ 4n+2; {Q_CITATION}")
    j = k - top_sphere(Field.H, n)
    if n % 24 == 23 and q.is_covered:
        center = p_group_sphere(cat, top_sphere(Field.H, n), k)
        if center.is_covered:
            return exact(subject, ambient, decomposition.embed(gam=center.value, inc=q.value),
                         "P_k(HP^n) = γ_n∗P_k(S^{4n+3}) ⊕ i_H∗EQ_{k-1}(S^3) for n ≡ 23 mod 24")
    if 0 <= j <= 10:
        p_prime = p_prime_hp(n, j, cat)
        _, _, ell = l_subgroups(n, k, cat)
        if p_prime.is_covered and ell.is_covered:
            return exact(subject, ambient, decomposition.embed(gam=p_prime.value, inc=ell.value),
                         "P_{4n+3+j}(HP^n) = P′ ⊕ i_H∗EL_{k-1}(S^3) for 0 ≤ j ≤ 10",
                         f"P′ = {p_prime.value}; L = {ell.value}")
    m = m_subgroup(Field.H, n, k, cat)
    l_prime, _, _ = l_subgroups(n, k, cat)
    if m.is_covered and l_prime.is_covered:
        return upper_bound(subject, ambient, decomposition.embed(gam=m.value, inc=l_prime.value),
                           "P_k(HP^n) ⊆ Ker[-, i_H] = γ_n∗M_k ⊕ i_H∗EL′_{k-1}")
    raise NotCoveredError(subject, "no splitting or kernel bound applies")


def p_group(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """P_k(FP^n) for F = R, C, H."""
    field = Field(field)
    subject = f"P_{k}({space_name(field, n)})"
    if field is Field.K:
        raise UnsupportedFieldError(field.value)
    if n < 1 or k < 1:
        return not_covered(subject, "n and k must be positive")
    assemble = {Field.R: _real, Field.C: _complex, Field.H: _quaternionic}[field]
    return answer(subject, lambda: assemble(n, k, cat))


def p_prime(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """P′_k(FP^n) = P_k ∩ γ_n∗π_k(S^{d(n+1)-1})."""
    field = Field(field)
    subject = f"P′_{k}({space_name(field, n)})"
    if field is Field.H and n >= 2 and QUATERNIONIC_P_PRIME_RULE.covers(n=n, j=k - top_sphere(field, n)):
        return p_prime_hp(n, k - top_sphere(field, n), cat)
    full = p_group(field, n, k, cat)
    return answer(subject, lambda: restrict(full, GAM, subject))


def p_double_prime(field: Field, n: int, k: int, cat: Catalog) -> GroupResult:
    """P″_k(FP^n) = P_k ∩ i_F∗Eπ_{k-1}(S^{d-1})."""
    field = Field(field)
    subject = f"P″_{k}({space_name(field, n)})"
    full = p_group(field, n, k, cat)
    return answer(subject, lambda: restrict(full, INC, subject))


def all_rules() -> Dict[str, Tuple[PiecewiseRule, str, List[Dict[str, int]]]]:
    """Rules of this module with the scanned variable and the offsets j they are scanned at."""
    offsets = [{"j": j} for j in range(12)]
    return {r.name: (r, "n", offsets) for r in (COMPLEX_M_RULE, QUATERNIONIC_M_RULE, QUATERNIONIC_P_PRIME_RULE)}

"""
The Cayley projective plane KP² = S⁸ ∪_{σ_8} e¹⁶.

Below degree 22, and in degrees 25, 27 and 28, π_k(KP²) = i_K∗Eπ_{k-1}(S^7)
(homotopy of the fibration S^7 -> S^15 -> S^8 plus the 23-connected pair
(KP², S^8) up to these stems). Degrees 22 to 24 and the 2-component in degree
26 come from the fibration Spin(9) -> F_4 -> KP² and are read from the catalog.
"""

from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from gottlieb_groups.errors import NotCoveredError
from gottlieb_groups.fga import FgAbGroup, Multiple, SubgroupSpec, Whole, Zero, generated_by, resolve
from gottlieb_groups.generators import GeneratorExpr, Suspension, push
from gottlieb_groups.logging import setup_logger
from gottlieb_groups.results import (
    GroupResult,
    answer,
    bounds,
    exact,
    lower_bound,
    upper_bound,
)
from gottlieb_groups.tables import KP2, Catalog, pi_sphere

logger = setup_logger(__name__)

CONNECTIVITY = 7
SUSPENSION_RANGE = set(range(CONNECTIVITY + 1, 22)) | {25, 27, 28}
CATALOG_RANGE = (22, 23, 24)
EXTENSION_DEGREE = 26
CENTER_RANGE = (8, 21)

SUSPENSION_CITATION = "π_k(KP²) = i_K∗Eπ_{k-1}(S^7) ≅ π_{k-1}(S^7)"


@dataclass(frozen=True)
class KP2Entry:
    k: int
    group: FgAbGroup
    generators: Tuple[GeneratorExpr, ...]
    relations: Tuple[str, ...]
    citation: str
    prime: Optional[int] = None

    @property
    def is_local(self) -> bool:
        return self.prime is not None


def _inc_suspended(expr: GeneratorExpr) -> GeneratorExpr:
    return push("inc", Suspension(expr))


def _entry(k: int, group: FgAbGroup, citation: str, relations: Tuple[str, ...] = (),
           prime: Optional[int] = None) -> KP2Entry:
    named = tuple(g for g in group.generators if g is not None)
    return KP2Entry(k, group, named, relations, citation, prime)


def pi_kp2(k: int, cat: Catalog) -> KP2Entry:
    """π_k(KP²) with named generators; raises NotCoveredError outside the known degrees."""
    subject = f"π_{k}(KP^2)"
    if k < 1:
        raise NotCoveredError(subject, "degree must be positive")
    if k <= CONNECTIVITY:
        return _entry(k, FgAbGroup.zero(), "KP² is 7-connected")
    if k in SUSPENSION_RANGE:
        upstairs = pi_sphere(cat, 7, k - 1)
        return _entry(k, upstairs.group.mapped(_inc_suspended), f"{SUSPENSION_CITATION}; {upstairs.citation}")
    if k in CATALOG_RANGE:
        record = cat.get(KP2, k)
        if record is None:
            raise NotCoveredError(subject, "not in the catalog")
        return _entry(k, record.group, record.citation, (record.note,) if record.note else ())
    if k == EXTENSION_DEGREE:
        record = cat.get(KP2, k, 2)
        if record is None:
            raise NotCoveredError(subject, "not in the catalog")
        logger.debug(f"{subject}: only the 2-component is known")
        return _entry(k, record.group, record.citation, (record.note,) if record.note else (), prime=2)
    raise NotCoveredError(subject, "beyond the tabulated degrees of KP²")


def pi_group_kp2(k: int, cat: Catalog) -> GroupResult:
    subject = f"π_{k}(KP^2)"

    def compute() -> GroupResult:
        entry = pi_kp2(k, cat)
        value = Zero() if entry.group.is_trivial else Whole()
        notes = entry.relations + ((f"{entry.prime}-primary component only",) if entry.is_local else ())
        return exact(subject, entry.group, value, entry.citation, *notes)

    return answer(subject, compute)


# ---------------------------------------------------------------------------
# P_k and G_k, 8 ≤ k ≤ 21
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KP2Fact:
    """A statement lower ⊆ X_k(KP²) ⊆ upper; upper None means only the lower bound is known."""
    lower: SubgroupSpec
    upper: Optional[SubgroupSpec]
    citation: str

    @property
    def is_exact(self) -> bool:
        return self.upper is not None and self.upper == self.lower


def _equal(spec: SubgroupSpec, citation: str) -> KP2Fact:
    return KP2Fact(spec, spec, citation)


SIGMA_ETA = "inc(E(cmp(sigma'(7),eta(14))))"
SIGMA_ETA2 = "inc(E(cmp(sigma'(7),eta(14),eta(15))))"
ETA_SIGMA_7 = 'inc(E(alias("η_7σ_8",sum(cmp(sigma\'(7),eta(14)),nubar(7),eps(7)))))'
NU3_ETA_EPS_7 = 'inc(E(alias("ν³_7+η_7ε_8",sum(cmp(nu(7),nu(10),nu(13)),cmp(eta(7),eps(8))))))'

P_FACTS: Dict[int, KP2Fact] = {
    **{k: _equal(Zero(), "P_k(KP²) = 0 for k = 9, 10, 12, 13, 14, 20") for k in (9, 10, 12, 13, 14, 20)},
    11: _equal(Multiple(8), "P_11(KP²) = 8π_11(KP²) ≅ Z_3"),
    16: KP2Fact(generated_by(SIGMA_ETA), generated_by(SIGMA_ETA, ETA_SIGMA_7),
                "{i_K(Eσ′)η_15} ⊆ P_16(KP²) ⊆ {i_K(Eσ′)η_15, i_Kη_8σ_9}"),
    17: KP2Fact(generated_by(SIGMA_ETA2), generated_by(SIGMA_ETA2, NU3_ETA_EPS_7),
                "{i_K(Eσ′)η²_15} ⊆ P_17(KP²) ⊆ {i_K(Eσ′)η²_15, i_K(ν³_8 + η_8ε_9)}"),
    18: _equal(generated_by("inc(E(cmp(nu(7),sigma(10))))", "inc(E(beta1(7)))"),
               "P_18(KP²) = {i_Kν_8σ_11, i_Kβ_1(8)} ≅ Z_24"),
    19: _equal(generated_by("inc(E(cmp(nubar(7),nu(15))))", "inc(E(mul(8,zeta(7))))",
                            "inc(E(mul(8,alpha3'(7))))", "inc(E(mul(8,alpha1(7@7))))"),
               "P_19(KP²) = {i_Kν̄_8ν_16} + 8π_19(KP²)"),
    21: _equal(Whole(), "P_21(KP²) = π_21(KP²) ≅ Z_6"),
}

G_FACTS: Dict[int, KP2Fact] = {
    8: _equal(Zero(), "G_8(KP²) = 0"),
    11: _equal(Multiple(8), "G_11(KP²) = P_11(KP²) = 8π_11(KP²)"),
    15: KP2Fact(Multiple(8), None, "8π_15(KP²) ⊆ G_15(KP²)"),
    18: KP2Fact(Multiple(8), None, "8π_18(KP²) ⊆ G_18(KP²) ⊆ P_18(KP²)"),
    21: KP2Fact(Multiple(2), None, "2π_21(KP²) ⊆ G_21(KP²) ⊆ P_21(KP²)"),
}


def _check_range(subject: str, k: int) -> None:
    low, high = CENTER_RANGE
    if not low <= k <= high:
        raise NotCoveredError(subject, f"P_k and G_k of KP² are stated for {low} ≤ k ≤ {high}")


def _from_fact(subject: str, ambient: FgAbGroup, fact: KP2Fact) -> GroupResult:
    if fact.is_exact:
        return exact(subject, ambient, fact.lower, fact.citation)
    if fact.upper is None:
        return lower_bound(subject, ambient, fact.lower, fact.citation)
    return bounds(subject, ambient, fact.lower, fact.upper, fact.citation)


def p_group_kp2(k: int, cat: Catalog) -> GroupResult:
    """P_k(KP²) for 8 ≤ k ≤ 21, where it is stated."""
    subject = f"P_{k}(KP^2)"

    def compute() -> GroupResult:
        _check_range(subject, k)
        fact = P_FACTS.get(k)
        if fact is None:
            raise NotCoveredError(subject, "no statement about P_k(KP²) in this degree")
        return _from_fact(subject, pi_kp2(k, cat).group, fact)

    return answer(subject, compute)


def g_group_kp2(k: int, cat: Catalog) -> GroupResult:
    """G_k(KP²) for 8 ≤ k ≤ 21: stated bounds, capped by P_k where it is known."""
    subject = f"G_{k}(KP^2)"

    def compute() -> GroupResult:
        _check_range(subject, k)
        ambient = pi_kp2(k, cat).group
        fact = G_FACTS.get(k)
        p = p_group_kp2(k, cat)
        if fact is not None and fact.is_exact:
            return exact(subject, ambient, fact.lower, fact.citation)
        if not p.is_covered:
            if fact is None:
                raise NotCoveredError(subject, "neither G_k nor P_k of KP² is stated in this degree")
            return _from_fact(subject, ambient, fact)
        upper = p.upper
        citation = f"G_k ⊆ P_k: {p.citation}"
        if fact is None:
            if resolve(upper, ambient).is_zero:
                return exact(subject, ambient, Zero(), citation)
            return upper_bound(subject, ambient, upper, citation)
        return bounds(subject, ambient, fact.lower, upper, f"{fact.citation}; {citation}")

    return answer(subject, compute)


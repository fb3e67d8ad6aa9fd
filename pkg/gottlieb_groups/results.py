"""
Answers returned by every group query.

A GroupResult carries a status, the ambient group the answer lives in and one
or two subgroup descriptions: the value (exact answer or lower bound) and the
upper bound. Missing knowledge is reported with status ``not_covered`` rather
than an exception.
"""

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Callable, List, Optional, Tuple

from sympy import multiplicity

from gottlieb_groups.errors import GottliebError, NotCoveredError
from gottlieb_groups.fga import (
    Annihilated,
    DirectSum,
    FgAbGroup,
    Subgroup,
    SubgroupSpec,
    UnresolvableSubgroupError,
    Whole,
    Zero,
    normalize,
    resolve,
)
from gottlieb_groups.generators import GeneratorExpr
from gottlieb_groups.logging import setup_logger

logger = setup_logger(__name__)


class Status(str, Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"
    UPPER_BOUND = "upper_bound"
    BOUNDS = "bounds"
    NOT_COVERED = "not_covered"


class InconsistentBoundsError(GottliebError):
    """Raised when a lower bound does not lie inside the upper bound."""
    def __init__(self, subject: str, lower: SubgroupSpec, upper: SubgroupSpec):
        self.subject = subject
        super().__init__(f"{subject}: lower bound {lower} is not contained in upper bound {upper}")


@dataclass(frozen=True)
class GroupResult:
    status: Status
    subject: str
    ambient: Optional[FgAbGroup] = None
    value: Optional[SubgroupSpec] = None
    upper: Optional[SubgroupSpec] = None
    citation: str = ""
    notes: Tuple[str, ...] = field(default=())

    @property
    def is_covered(self) -> bool:
        return self.status is not Status.NOT_COVERED

    @property
    def is_exact(self) -> bool:
        return self.status is Status.EXACT

    @property
    def lower(self) -> Optional[SubgroupSpec]:
        """Known lower bound; None for a pure upper bound."""
        return self.value if self.status in (Status.EXACT, Status.LOWER_BOUND, Status.BOUNDS) else None

    def value_subgroup(self) -> Optional[Subgroup]:
        if self.value is None or self.ambient is None:
            return None
        return resolve(self.value, self.ambient)

    def upper_subgroup(self) -> Optional[Subgroup]:
        if self.upper is None or self.ambient is None:
            return None
        return resolve(self.upper, self.ambient)

    def value_type(self) -> Optional[FgAbGroup]:
        """Isomorphism type of the value, when it can be resolved."""
        return _spec_type(self.value, self.ambient)

    def upper_type(self) -> Optional[FgAbGroup]:
        return _spec_type(self.upper, self.ambient)

    def generators(self) -> List[GeneratorExpr]:
        sub = self.value_subgroup()
        if sub is None:
            return []
        try:
            return [e for e in sub.elements() if e is not None]
        except GottliebError:
            # the ambient presentation lacks named generators
            return []

    def with_notes(self, *notes: str) -> "GroupResult":
        return replace(self, notes=self.notes + tuple(n for n in notes if n))

    def check(self) -> None:
        """Verify lower ⊆ upper inside the ambient group."""
        if self.status is not Status.BOUNDS or self.ambient is None:
            return
        lower, upper = self.value_subgroup(), self.upper_subgroup()
        if not upper.contains(lower):
            raise InconsistentBoundsError(self.subject, self.value, self.upper)


def _spec_type(spec: Optional[SubgroupSpec], ambient: Optional[FgAbGroup]) -> Optional[FgAbGroup]:
    if spec is None:
        return None
    if isinstance(spec, Zero):
        return FgAbGroup.zero()
    if ambient is None:
        return None
    return resolve(spec, ambient).iso_type()


def exact(subject: str, ambient: Optional[FgAbGroup], value: SubgroupSpec, citation: str,
          *notes: str) -> GroupResult:
    if ambient is not None:
        value = normalize(value, ambient)
    return GroupResult(Status.EXACT, subject, ambient, value, value, citation, tuple(notes))


def lower_bound(subject: str, ambient: Optional[FgAbGroup], value: SubgroupSpec, citation: str,
                *notes: str) -> GroupResult:
    if ambient is not None:
        value = normalize(value, ambient)
    return GroupResult(Status.LOWER_BOUND, subject, ambient, value, None, citation, tuple(notes))


def upper_bound(subject: str, ambient: Optional[FgAbGroup], upper: SubgroupSpec, citation: str,
                *notes: str) -> GroupResult:
    if ambient is not None:
        upper = normalize(upper, ambient)
    return GroupResult(Status.UPPER_BOUND, subject, ambient, None, upper, citation, tuple(notes))


def bounds(subject: str, ambient: FgAbGroup, lower: SubgroupSpec, upper: SubgroupSpec, citation: str,
           *notes: str) -> GroupResult:
    """Two-sided bound; collapses to exact when both sides describe the same subgroup."""
    lower, upper = normalize(lower, ambient), normalize(upper, ambient)
    result = GroupResult(Status.BOUNDS, subject, ambient, lower, upper, citation, tuple(notes))
    result.check()
    if result.value_subgroup() == result.upper_subgroup():
        return GroupResult(Status.EXACT, subject, ambient, lower, lower, citation, tuple(notes))
    return result


def not_covered(subject: str, reason: str, ambient: Optional[FgAbGroup] = None) -> GroupResult:
    return GroupResult(Status.NOT_COVERED, subject, ambient, None, None, "", (reason,))


def whole_or_zero(ambient: FgAbGroup) -> SubgroupSpec:
    return Zero() if ambient.is_trivial else Whole()


def answer(subject: str, compute: Callable[[], GroupResult]) -> GroupResult:
    """Run an assembly step, turning NotCoveredError into a not_covered result."""
    try:
        return compute()
    except NotCoveredError as e:
        logger.debug(f"{subject}: {e}")
        return not_covered(subject, f"{e.subject}: {e.reason}")
    except UnresolvableSubgroupError as e:
        logger.debug(f"{subject}: {e}")
        return not_covered(subject, str(e))


def _cut(result: GroupResult, part: Subgroup, subject: str, *notes: str) -> GroupResult:
    """Intersect value and upper bound of a result with a fixed subgroup of its ambient."""
    ambient = result.ambient

    def cut(spec: Optional[SubgroupSpec]) -> Optional[SubgroupSpec]:
        if spec is None:
            return None
        return resolve(spec, ambient).meet(part).to_spec()

    lower, upper = cut(result.value), cut(result.upper)
    notes = result.notes + notes
    if result.status is Status.EXACT:
        return exact(subject, ambient, lower, result.citation, *notes)
    if result.status is Status.LOWER_BOUND:
        return lower_bound(subject, ambient, lower, result.citation, *notes)
    if result.status is Status.UPPER_BOUND:
        return upper_bound(subject, ambient, upper, result.citation, *notes)
    return bounds(subject, ambient, lower, upper, result.citation, *notes)


def _untabulated(result: GroupResult, subject: str) -> GroupResult:
    if result.is_exact and isinstance(result.value, Zero):
        return replace(result, subject=subject)
    return not_covered(subject, "the ambient group is not tabulated")


def restrict(result: GroupResult, tag: str, subject: str) -> GroupResult:
    """Intersect a result with the summands of its ambient group carrying the given tag."""
    if not result.is_covered:
        return replace(result, subject=subject)
    if result.ambient is None:
        return _untabulated(result, subject)
    ambient = result.ambient
    if tag not in ambient.tags:
        return exact(subject, ambient, Zero(), result.citation, *result.notes)
    return _cut(result, resolve(DirectSum(((tag, Whole()),)), ambient), subject)


def localize(result: GroupResult, p: int, subject: str) -> GroupResult:
    """The p-primary part: intersect with the elements of p-power order."""
    if not result.is_covered:
        return replace(result, subject=subject)
    if result.ambient is None:
        return _untabulated(result, subject)
    exponent = max((multiplicity(p, t) for t in result.ambient.torsion), default=0)
    part = resolve(Annihilated(p ** exponent), result.ambient)
    return _cut(result, part, subject, f"{p}-primary component")

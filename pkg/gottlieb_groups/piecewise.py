"""
Guarded arithmetic rules.

A PiecewiseRule is an ordered list of arms ``(condition, value)`` over integer
variables (usually ``n``, sometimes ``k``). Exactly one arm must fire inside
the rule's domain; ``Otherwise`` may only be the last arm and fires when no
other arm does. Values are integers, subgroup descriptions, or callables of
the variables for formula-valued arms such as ``24/(24, n+1)``.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple

from gottlieb_groups.errors import GottliebError, NotCoveredError
from gottlieb_groups.logging import setup_logger

logger = setup_logger(__name__)


class AmbiguousRuleError(GottliebError):
    """Raised when more than one arm of a rule fires."""
    def __init__(self, rule: str, env: Mapping[str, int], arms: List[str]):
        self.rule = rule
        self.env = dict(env)
        self.arms = arms
        super().__init__(f"Rule {rule} is ambiguous at {self.env}: arms {arms} all fire")


class MisplacedOtherwiseError(GottliebError, ValueError):
    """Raised when an Otherwise arm is not the last arm of a rule."""
    def __init__(self, rule: str):
        self.rule = rule
        super().__init__(f"Rule {rule}: 'otherwise' must be the last arm")


# ---------------------------------------------------------------------------
# Conditions
# ---------------------------------------------------------------------------

class Condition:
    def holds(self, env: Mapping[str, int]) -> bool:
        raise NotImplementedError

    def __and__(self, other: "Condition") -> "Condition":
        return All((self, other))

    def __or__(self, other: "Condition") -> "Condition":
        return AnyOf((self, other))

    def __invert__(self) -> "Condition":
        return Not(self)


def _value(env: Mapping[str, int], var: str) -> int:
    if var not in env:
        raise KeyError(f"condition needs variable '{var}', got {sorted(env)}")
    return env[var]


@dataclass(frozen=True)
class Congruent(Condition):
    """var ≡ r (mod modulus) for some r in residues, optionally with var ≥ at_least."""
    residues: Tuple[int, ...]
    modulus: int
    at_least: Optional[int] = None
    var: str = "n"

    def holds(self, env: Mapping[str, int]) -> bool:
        v = _value(env, self.var)
        if self.at_least is not None and v < self.at_least:
            return False
        return v % self.modulus in {r % self.modulus for r in self.residues}

    def __str__(self) -> str:
        text = f"{self.var} ≡ {','.join(map(str, self.residues))} (mod {self.modulus})"
        return f"{text} ≥ {self.at_least}" if self.at_least is not None else text


@dataclass(frozen=True)
class Equals(Condition):
    values: Tuple[int, ...]
    var: str = "n"

    def holds(self, env: Mapping[str, int]) -> bool:
        return _value(env, self.var) in self.values

    def __str__(self) -> str:
        return f"{self.var} ∈ {{{','.join(map(str, self.values))}}}"


@dataclass(frozen=True)
class PowerOfTwoMinus(Condition):
    """var = 2^i − c for some i ≥ i0."""
    c: int
    i0: int
    var: str = "n"

    def holds(self, env: Mapping[str, int]) -> bool:
        m = _value(env, self.var) + self.c
        if m < 2 ** self.i0 or m & (m - 1):
            return False
        return True

    def __str__(self) -> str:
        return f"{self.var} = 2^i-{self.c}, i ≥ {self.i0}"


@dataclass(frozen=True)
class AtLeast(Condition):
    bound: int
    var: str = "n"

    def holds(self, env: Mapping[str, int]) -> bool:
        return _value(env, self.var) >= self.bound

    def __str__(self) -> str:
        return f"{self.var} ≥ {self.bound}"


@dataclass(frozen=True)
class AtMost(Condition):
    bound: int
    var: str = "n"

    def holds(self, env: Mapping[str, int]) -> bool:
        return _value(env, self.var) <= self.bound

    def __str__(self) -> str:
        return f"{self.var} ≤ {self.bound}"


@dataclass(frozen=True)
class Offset(Condition):
    """var − (scale·base + shift) ∈ values, e.g. k − (2n+1) ∈ {1, 2}."""
    values: Tuple[int, ...]
    scale: int = 1
    shift: int = 0
    var: str = "k"
    base: str = "n"

    def holds(self, env: Mapping[str, int]) -> bool:
        return _value(env, self.var) - (self.scale * _value(env, self.base) + self.shift) in self.values

    def __str__(self) -> str:
        return f"{self.var} - ({self.scale}{self.base}+{self.shift}) ∈ {{{','.join(map(str, self.values))}}}"


@dataclass(frozen=True)
class UpTo(Condition):
    """var ≤ scale·base + shift, e.g. k ≤ 2n."""
    scale: int = 1
    shift: int = 0
    var: str = "k"
    base: str = "n"

    def holds(self, env: Mapping[str, int]) -> bool:
        return _value(env, self.var) <= self.scale * _value(env, self.base) + self.shift

    def __str__(self) -> str:
        return f"{self.var} ≤ {self.scale}{self.base}+{self.shift}"


@dataclass(frozen=True)
class Not(Condition):
    inner: Condition

    def holds(self, env: Mapping[str, int]) -> bool:
        return not self.inner.holds(env)

    def __str__(self) -> str:
        return f"not ({self.inner})"


@dataclass(frozen=True)
class AnyOf(Condition):
    parts: Tuple[Condition, ...]

    def holds(self, env: Mapping[str, int]) -> bool:
        return any(p.holds(env) for p in self.parts)

    def __str__(self) -> str:
        return " or ".join(f"({p})" for p in self.parts)


@dataclass(frozen=True)
class All(Condition):
    parts: Tuple[Condition, ...]

    def holds(self, env: Mapping[str, int]) -> bool:
        return all(p.holds(env) for p in self.parts)

    def __str__(self) -> str:
        return " and ".join(f"({p})" for p in self.parts)


@dataclass(frozen=True)
class Otherwise(Condition):
    def holds(self, env: Mapping[str, int]) -> bool:
        return True

    def __str__(self) -> str:
        return "otherwise"


def odd(var: str = "n", at_least: Optional[int] = None) -> Congruent:
    return Congruent((1,), 2, at_least, var)


def even(var: str = "n", at_least: Optional[int] = None) -> Congruent:
    return Congruent((0,), 2, at_least, var)


def between(low: int, high: int, var: str = "n") -> All:
    return All((AtLeast(low, var), AtMost(high, var)))


def every(*parts: Condition) -> All:
    return All(tuple(parts))


def any_of(*parts: Condition) -> AnyOf:
    return AnyOf(tuple(parts))


# ---------------------------------------------------------------------------
# Rules
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Arm:
    condition: Condition
    value: Any
    label: str = ""

    def describe(self) -> str:
        return self.label or str(self.condition)


@dataclass(frozen=True)
class PiecewiseRule:
    name: str
    arms: Tuple[Arm, ...]
    domain: Condition = field(default_factory=Otherwise)
    citation: str = ""

    def __post_init__(self):
        for arm in self.arms[:-1]:
            if isinstance(arm.condition, Otherwise):
                raise MisplacedOtherwiseError(self.name)

    def covers(self, **env: int) -> bool:
        return self.domain.holds(env)

    def firing_arms(self, **env: int) -> List[Arm]:
        """Arms whose condition holds; Otherwise only when nothing else fires."""
        fired = [arm for arm in self.arms if not isinstance(arm.condition, Otherwise) and arm.condition.holds(env)]
        if not fired and self.arms and isinstance(self.arms[-1].condition, Otherwise):
            fired = [self.arms[-1]]
        return fired

    def evaluate(self, **env: int) -> Any:
        if not self.domain.holds(env):
            raise NotCoveredError(f"{self.name} at {env}", f"outside the domain {self.domain}")
        fired = self.firing_arms(**env)
        if not fired:
            raise NotCoveredError(f"{self.name} at {env}", "no arm applies")
        if len(fired) > 1:
            raise AmbiguousRuleError(self.name, env, [arm.describe() for arm in fired])
        arm = fired[0]
        logger.debug(f"{self.name} at {env}: arm '{arm.describe()}' fires")
        value = arm.value
        return value(**env) if callable(value) else value

    def check_exhaustive(self, limit: int, var: str = "n", start: int = 1,
                         **fixed: int) -> List[Tuple[int, int]]:
        """Scan var = start..limit inside the domain.

        Returns the (value, number of firing arms) pairs where the count is not 1.
        """
        failures = []
        for v in range(start, limit + 1):
            env = {**fixed, var: v}
            if not self.domain.holds(env):
                continue
            count = len(self.firing_arms(**env))
            if count != 1:
                failures.append((v, count))
        return failures


def rule(name: str, *arms: Tuple[Condition, Any], domain: Optional[Condition] = None,
         citation: str = "") -> PiecewiseRule:
    """Shorthand: ``rule("[iota,iota]", (Equals((1, 3, 7)), 1), (odd(), 2), (Otherwise(), INFINITY))``."""
    built = tuple(a if isinstance(a, Arm) else Arm(*a) for a in arms)
    return PiecewiseRule(name, built, domain if domain is not None else Otherwise(), citation)


def exhaustiveness_report(rules: Iterable[PiecewiseRule], limit: int) -> Dict[str, List[Tuple[int, int]]]:
    """Map each rule name to its failures over 1..limit (empty list means the rule is sound)."""
    return {r.name: r.check_exhaustive(limit) for r in rules}

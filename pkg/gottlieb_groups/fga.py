"""
Finitely generated abelian groups and their described subgroups.

An FgAbGroup is an isomorphism type (free rank plus invariant factors)
optionally carrying a presentation: the cyclic summands with their named
generators, e.g. π_7(S^4) = Z{ν_4} ⊕ Z_4{Eν′} ⊕ Z_3{α_1(4)}. Summand orders
need not be invariant factors; equality only looks at the isomorphism type.

Subgroups are described by SubgroupSpec values and resolved against a
presentation into a Subgroup (an integer sublattice), which answers order,
index, isomorphism type, membership, meet and join.
"""

from collections import defaultdict
from dataclasses import dataclass, field
from math import prod
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from sympy import factorint, igcd, ilcm, oo

from gottlieb_groups.errors import GottliebError
from gottlieb_groups.generators import (
    GeneratorExpr,
    combination,
    expand,
    parse_expr,
    pretty,
    scalar,
)
from gottlieb_groups.lattice import SubLattice
from gottlieb_groups.logging import setup_logger

logger = setup_logger(__name__)

INFINITY = oo


class InvalidGroupError(GottliebError, ValueError):
    """Raised when torsion data is not in invariant-factor form."""
    def __init__(self, message: str):
        super().__init__(f"Invalid group: {message}")


class InvalidMultipleError(GottliebError, ValueError):
    """Raised for a non-positive multiplier."""
    def __init__(self, m: int):
        self.m = m
        super().__init__(f"Multiplier must be a positive integer, got {m} (use Zero for the trivial subgroup)")


class UnresolvableSubgroupError(GottliebError):
    """Raised when a subgroup description does not fit the ambient presentation."""
    def __init__(self, spec: "SubgroupSpec", message: str):
        self.spec = spec
        super().__init__(f"Cannot resolve {spec}: {message}")


def gcd24(a: int, b: int) -> int:
    """Greatest common divisor, written (a, b) in the formulas."""
    return int(igcd(a, b))


def lcm_pair(a: int, b: int) -> int:
    """Least common multiple, written [[a, b]] in the formulas."""
    return int(ilcm(a, b))


def invariant_factors(orders: Iterable[int]) -> Tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of ⊕ Z_d over the given finite orders."""
    exponents: Dict[int, List[int]] = defaultdict(list)
    for d in orders:
        if d < 1:
            raise InvalidGroupError(f"cyclic order {d} is not positive")
        for p, e in factorint(d).items():
            exponents[int(p)].append(int(e))
    length = max((len(es) for es in exponents.values()), default=0)
    factors = [1] * length
    for p, es in exponents.items():
        # largest powers go to the last (largest) factors
        for position, e in enumerate(sorted(es, reverse=True)):
            factors[length - 1 - position] *= p ** e
    return tuple(factors)


@dataclass(frozen=True)
class CyclicSummand:
    """One cyclic summand of a presentation; order 0 stands for Z."""
    order: int
    generator: Optional[GeneratorExpr] = None
    tag: str = ""

    @property
    def is_free(self) -> bool:
        return self.order == 0

    def key(self) -> Optional[str]:
        return str(self.generator) if self.generator is not None else None


@dataclass(frozen=True)
class FgAbGroup:
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()
    summands: Tuple[CyclicSummand, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.free_rank < 0:
            raise InvalidGroupError(f"negative free rank {self.free_rank}")
        for d in self.torsion:
            if d < 2:
                raise InvalidGroupError(f"torsion entry {d} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise InvalidGroupError(f"{a} does not divide {b} in {list(self.torsion)}")
        if self.summands:
            free = sum(1 for s in self.summands if s.is_free)
            torsion = invariant_factors(s.order for s in self.summands if not s.is_free)
            if (free, torsion) != (self.free_rank, self.torsion):
                raise InvalidGroupError(
                    f"summand orders {[s.order for s in self.summands]} do not give Z^{self.free_rank} + {list(self.torsion)}"
                )

    @classmethod
    def zero(cls) -> "FgAbGroup":
        return cls()

    @classmethod
    def from_summands(cls, summands: Iterable[CyclicSummand]) -> "FgAbGroup":
        kept = tuple(s for s in summands if s.order != 1)
        for s in kept:
            if s.order < 0:
                raise InvalidGroupError(f"negative cyclic order {s.order}")
        free = sum(1 for s in kept if s.is_free)
        torsion = invariant_factors(s.order for s in kept if not s.is_free)
        return cls(free, torsion, kept)

    @classmethod
    def from_orders(cls, orders: Iterable[int], generators: Optional[Sequence[Optional[GeneratorExpr]]] = None,
                    tag: str = "") -> "FgAbGroup":
        orders = list(orders)
        gens = list(generators) if generators is not None else [None] * len(orders)
        return cls.from_summands(CyclicSummand(o, g, tag) for o, g in zip(orders, gens))

    @classmethod
    def cyclic(cls, order: int, generator: Optional[GeneratorExpr] = None) -> "FgAbGroup":
        return cls.from_orders([order], [generator])

    @property
    def order(self):
        return INFINITY if self.free_rank else prod(self.torsion)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def exponent(self) -> Optional[int]:
        """Largest invariant factor; None when the group is infinite."""
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def presentation(self) -> Tuple[CyclicSummand, ...]:
        if self.summands:
            return self.summands
        return tuple([CyclicSummand(0)] * self.free_rank + [CyclicSummand(d) for d in self.torsion])

    @property
    def generators(self) -> Tuple[Optional[GeneratorExpr], ...]:
        return tuple(s.generator for s in self.presentation())

    def tagged(self, tag: str) -> "FgAbGroup":
        return FgAbGroup.from_summands(CyclicSummand(s.order, s.generator, tag) for s in self.presentation())

    def mapped(self, fn, tag: Optional[str] = None) -> "FgAbGroup":
        """Apply fn to every named generator, e.g. to push along γ_n."""
        return FgAbGroup.from_summands(
            CyclicSummand(s.order, fn(s.generator) if s.generator is not None else None,
                          s.tag if tag is None else tag)
            for s in self.presentation()
        )

    def part(self, tag: str) -> "FgAbGroup":
        return FgAbGroup.from_summands(s for s in self.presentation() if s.tag == tag)

    @property
    def tags(self) -> Tuple[str, ...]:
        seen: List[str] = []
        for s in self.presentation():
            if s.tag not in seen:
                seen.append(s.tag)
        return tuple(seen)

    def __str__(self) -> str:
        return describe(self.free_rank, self.torsion)


def describe(free_rank: int, torsion: Sequence[int]) -> str:
    """ASCII isomorphism type, e.g. ``Z + Z_12``, ``(Z_2)^3``, ``0``."""
    parts = []
    if free_rank == 1:
        parts.append("Z")
    elif free_rank > 1:
        parts.append(f"Z^{free_rank}")
    counts: Dict[int, int] = {}
    for d in torsion:
        counts[d] = counts.get(d, 0) + 1
    for d in sorted(counts, reverse=True):
        parts.append(f"Z_{d}" if counts[d] == 1 else f"(Z_{d})^{counts[d]}")
    return " + ".join(parts) if parts else "0"


def direct_sum(a: FgAbGroup, b: FgAbGroup) -> FgAbGroup:
    """Canonical form of a ⊕ b; presentations are concatenated."""
    return FgAbGroup.from_summands([*a.presentation(), *b.presentation()])


def multiple_subgroup(g: FgAbGroup, m: int) -> FgAbGroup:
    """Isomorphism type of m·g: Z stays Z, Z_d becomes Z_{d/(d,m)}."""
    if m <= 0:
        raise InvalidMultipleError(m)
    summands = []
    for s in g.presentation():
        order = 0 if s.is_free else s.order // gcd24(s.order, m)
        generator = scalar(m, s.generator) if s.generator is not None else None
        summands.append(CyclicSummand(order, generator, s.tag))
    return FgAbGroup.from_summands(summands)


def order(g: FgAbGroup):
    return g.order


def p_component(g: FgAbGroup, p: int) -> FgAbGroup:
    """The p-primary torsion subgroup (free summands are dropped)."""
    summands = []
    for s in g.presentation():
        if s.is_free:
            continue
        power = 1
        rest = s.order
        while rest % p == 0:
            rest //= p
            power *= p
        if power == 1:
            continue
        generator = scalar(rest, s.generator) if s.generator is not None else None
        summands.append(CyclicSummand(power, generator, s.tag))
    return FgAbGroup.from_summands(summands)


# ---------------------------------------------------------------------------
# Subgroup descriptions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Zero:
    def __str__(self) -> str:
        return "0"


@dataclass(frozen=True)
class Whole:
    def __str__(self) -> str:
        return "pi"


@dataclass(frozen=True)
class Multiple:
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidMultipleError(self.m)

    def __str__(self) -> str:
        return f"{self.m}pi"


@dataclass(frozen=True)
class Annihilated:
    """Elements x with m·x = 0."""
    m: int

    def __post_init__(self):
        if self.m < 1:
            raise InvalidMultipleError(self.m)

    def __str__(self) -> str:
        return f"ker({self.m})"


@dataclass(frozen=True)
class GeneratedBy:
    elements: Tuple[GeneratorExpr, ...]

    def __str__(self) -> str:
        return "{" + ", ".join(pretty(e) for e in self.elements) + "}"


@dataclass(frozen=True)
class DirectSum:
    parts: Tuple[Tuple[str, "SubgroupSpec"], ...]

    def __post_init__(self):
        tags = [tag for tag, _ in self.parts]
        if len(set(tags)) != len(tags):
            raise InvalidGroupError(f"repeated direct-sum tags {tags}")

    def __str__(self) -> str:
        return " + ".join(f"{tag}:{spec}" for tag, spec in self.parts)


SubgroupSpec = Union[Zero, Whole, Multiple, Annihilated, GeneratedBy, DirectSum]


def multiple(m: int) -> SubgroupSpec:
    return Whole() if m == 1 else Multiple(m)


def generated_by(*elements: Union[str, GeneratorExpr]) -> GeneratedBy:
    return GeneratedBy(tuple(parse_expr(e) if isinstance(e, str) else e for e in elements))


def direct_sum_spec(**parts: SubgroupSpec) -> DirectSum:
    return DirectSum(tuple(parts.items()))


def normalize(spec: SubgroupSpec, g: FgAbGroup) -> SubgroupSpec:
    """Multiple(1) -> Whole; Multiple(m) -> Zero when the exponent of g divides m."""
    if isinstance(spec, Multiple):
        if spec.m == 1:
            return Whole()
        if g.is_finite and spec.m % g.exponent == 0:
            return Zero()
    if isinstance(spec, Annihilated) and g.is_finite and spec.m % g.exponent == 0:
        return Whole()
    return spec


# ---------------------------------------------------------------------------
# Resolution into lattices
# ---------------------------------------------------------------------------

def relation_lattice(g: FgAbGroup) -> SubLattice:
    summands = g.presentation()
    n = len(summands)
    return SubLattice(n, ([s.order if i == j else 0 for j in range(n)]
                          for i, s in enumerate(summands) if not s.is_free))


def element_vector(expr: GeneratorExpr, g: FgAbGroup) -> List[int]:
    """Coordinates of an element in the presentation of g."""
    summands = g.presentation()
    positions = {s.key(): i for i, s in enumerate(summands) if s.generator is not None}
    vector = [0] * len(summands)
    for key, coef in expand(expr).items():
        if key not in positions:
            # the generator may have been written in a non-canonical form
            canonical = str(parse_expr(key))
            if canonical not in positions:
                raise UnresolvableSubgroupError(GeneratedBy((expr,)), f"{key} is not a named generator of {g}")
            key = canonical
        vector[positions[key]] += coef
    return vector


def _spec_rows(spec: SubgroupSpec, g: FgAbGroup) -> List[List[int]]:
    summands = g.presentation()
    n = len(summands)

    def unit(i: int, c: int) -> List[int]:
        return [c if j == i else 0 for j in range(n)]

    if isinstance(spec, Zero):
        return []
    if isinstance(spec, Whole):
        return [unit(i, 1) for i in range(n)]
    if isinstance(spec, Multiple):
        return [unit(i, spec.m) for i in range(n)]
    if isinstance(spec, Annihilated):
        return [unit(i, s.order // gcd24(s.order, spec.m)) for i, s in enumerate(summands) if not s.is_free]
    if isinstance(spec, GeneratedBy):
        return [element_vector(e, g) for e in spec.elements]
    if isinstance(spec, DirectSum):
        rows = []
        known = set(g.tags)
        for tag, part_spec in spec.parts:
            if tag not in known:
                raise UnresolvableSubgroupError(spec, f"no summands tagged '{tag}' in {g}")
            positions = [i for i, s in enumerate(summands) if s.tag == tag]
            for row in _spec_rows(part_spec, g.part(tag)):
                full = [0] * n
                for position, value in zip(positions, row):
                    full[position] = value
                rows.append(full)
        return rows
    raise TypeError(f"Not a subgroup spec: {spec!r}")


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A resolved subgroup: the lattice S with R ⊆ S ⊆ Z^N for g = Z^N / R."""
    group: FgAbGroup
    lattice: SubLattice

    @property
    def relations(self) -> SubLattice:
        return relation_lattice(self.group)

    def iso_type(self) -> FgAbGroup:
        free, torsion = self.lattice.quotient_invariants(self.relations)
        return FgAbGroup(free, torsion)

    @property
    def order(self):
        return self.iso_type().order

    def index(self):
        value = self.lattice.index()
        return INFINITY if value is None else value

    def contains(self, other: "Subgroup") -> bool:
        return self.lattice.contains_lattice(other.lattice)

    def __contains__(self, element: GeneratorExpr) -> bool:
        return element_vector(element, self.group) in self.lattice

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.lattice == other.lattice

    __hash__ = None

    def meet(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.group, self.lattice.meet(other.lattice))

    def join(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.group, self.lattice.join(other.lattice))

    @property
    def is_zero(self) -> bool:
        return self.relations.contains_lattice(self.lattice)

    @property
    def is_whole(self) -> bool:
        return self.lattice.index() == 1

    def elements(self) -> List[Optional[GeneratorExpr]]:
        """Generating elements (echelon rows outside the relations)."""
        relations = self.relations
        summands = self.group.presentation()
        result = []
        for row in self.lattice.basis:
            if row in relations:
                continue
            pairs = []
            for coef, s in zip(row, summands):
                if coef and s.generator is None:
                    raise UnresolvableSubgroupError(Zero(), f"summand of order {s.order} has no named generator")
                pairs.append((coef, s.generator))
            result.append(combination([(c, gen) for c, gen in pairs if c]))
        return result

    def to_spec(self) -> SubgroupSpec:
        if self.is_zero:
            return Zero()
        if self.is_whole:
            return Whole()
        m = self._multiple_candidate()
        if m > 1 and self == resolve(Multiple(m), self.group):
            return Multiple(m)
        return GeneratedBy(tuple(self.elements()))

    def _multiple_candidate(self) -> int:
        """Least m with m·e_i in the lattice for every free summand (every summand if finite)."""
        summands = self.group.presentation()
        n = len(summands)
        use_all = self.group.is_finite
        m = 1
        for i, s in enumerate(summands):
            if not (use_all or s.is_free):
                continue
            line = SubLattice(n, [[int(i == j) for j in range(n)]])
            on_line = self.lattice.meet(line)
            if not on_line.basis:
                return 0
            m = lcm_pair(m, abs(on_line.basis[0][i]))
        return m


def resolve(spec: SubgroupSpec, g: FgAbGroup) -> Subgroup:
    """Resolve a described subgroup inside the presentation of g."""
    relations = relation_lattice(g)
    lattice = relations.copy()
    for row in _spec_rows(spec, g):
        lattice.add_vector(row)
    return Subgroup(g, lattice)


def index(g: FgAbGroup, sub: SubgroupSpec):
    """[g : sub], INFINITY when sub has smaller free rank."""
    return resolve(sub, g).index()


def subgroup_type(g: FgAbGroup, sub: SubgroupSpec) -> FgAbGroup:
    return resolve(sub, g).iso_type()

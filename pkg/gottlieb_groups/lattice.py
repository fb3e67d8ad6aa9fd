"""
Integer sublattices of Z^N kept in row echelon form.

A subgroup of a presented group Z^N / R is stored as the sublattice S with
R ⊆ S ⊆ Z^N. Rows are reduced with extended-gcd row operations as they are
added, so membership, index and intersection never need a separate
normal-form pass. The isomorphism type of S / R comes from the Smith normal
form of R written in a basis of S.
"""

from bisect import bisect_left
from math import prod
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return (x, y, g) with x*a + y*b == g == ±gcd(a, b)."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    return x, y, g


class SubLattice:
    __slots__ = ("dimension", "basis", "pivots")

    def __init__(self, dimension: int, vectors: Iterable[Sequence[int]] = ()):
        self.dimension = dimension
        self.basis: List[List[int]] = []
        # pivot column of each basis row, strictly increasing
        self.pivots: List[int] = []
        for vector in vectors:
            self.add_vector(vector)

    @classmethod
    def full(cls, dimension: int) -> "SubLattice":
        return cls(dimension, ([int(i == j) for j in range(dimension)] for i in range(dimension)))

    def copy(self) -> "SubLattice":
        other = SubLattice(self.dimension)
        other.basis = [row.copy() for row in self.basis]
        other.pivots = self.pivots.copy()
        return other

    def _pivot_row(self, column: int) -> Optional[int]:
        where = bisect_left(self.pivots, column)
        if where < len(self.pivots) and self.pivots[where] == column:
            return where
        return None

    def add_vector(self, vector: Sequence[int]) -> None:
        if len(vector) != self.dimension:
            raise ValueError(f"Vector of length {len(vector)} added to a lattice in Z^{self.dimension}")
        vec = [int(x) for x in vector]
        for j in range(self.dimension):
            b = vec[j]
            if b == 0:
                continue
            p = self._pivot_row(j)
            if p is None:
                where = bisect_left(self.pivots, j)
                self.basis.insert(where, vec)
                self.pivots.insert(where, j)
                return
            row = self.basis[p]
            a = row[j]
            if b % a == 0:
                q = b // a
                for jj in range(j, self.dimension):
                    vec[jj] -= q * row[jj]
            else:
                x, y, g = xgcd(a, b)
                ag, mbg = a // g, -b // g
                for jj in range(j, self.dimension):
                    aa, bb = row[jj], vec[jj]
                    row[jj] = x * aa + y * bb
                    vec[jj] = mbg * aa + ag * bb

    def coordinates(self, vector: Sequence[int]) -> Optional[List[int]]:
        """Coefficients of vector in the echelon basis, or None if it is not in the lattice."""
        vec = [int(x) for x in vector]
        coefficients = [0] * len(self.basis)
        for j in range(self.dimension):
            b = vec[j]
            if b == 0:
                continue
            p = self._pivot_row(j)
            if p is None:
                return None
            row = self.basis[p]
            a = row[j]
            if b % a:
                return None
            q = b // a
            coefficients[p] = q
            for jj in range(j, self.dimension):
                vec[jj] -= q * row[jj]
        return coefficients

    def __contains__(self, vector: Sequence[int]) -> bool:
        return self.coordinates(vector) is not None

    @property
    def rank(self) -> int:
        return len(self.basis)

    def index(self) -> Optional[int]:
        """[Z^N : self], or None when the index is infinite."""
        if self.rank < self.dimension:
            return None
        return abs(prod(row[j] for row, j in zip(self.basis, self.pivots)))

    def contains_lattice(self, other: "SubLattice") -> bool:
        return all(row in self for row in other.basis)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubLattice) or other.dimension != self.dimension:
            return NotImplemented
        return self.contains_lattice(other) and other.contains_lattice(self)

    __hash__ = None

    def join(self, other: "SubLattice") -> "SubLattice":
        return SubLattice(self.dimension, [*self.basis, *other.basis])

    def meet(self, other: "SubLattice") -> "SubLattice":
        """Intersection, read off the kernel of (x, y) -> x·B_self + y·B_other."""
        n = self.dimension
        stacked = SubLattice(2 * n)
        for row in self.basis:
            stacked.add_vector(row + row)
        for row in other.basis:
            stacked.add_vector(row + [0] * n)
        return SubLattice(n, (row[n:] for row, j in zip(stacked.basis, stacked.pivots) if j >= n))

    def quotient_invariants(self, sub: "SubLattice") -> Tuple[int, Tuple[int, ...]]:
        """Free rank and torsion invariant factors of self / sub (sub must lie in self)."""
        rows = []
        for row in sub.basis:
            coefficients = self.coordinates(row)
            if coefficients is None:
                raise ValueError("quotient_invariants needs sub contained in self")
            rows.append(coefficients)
        free_rank = self.rank - sub.rank
        if not rows or self.rank == 0:
            return free_rank, ()
        factors = (abs(int(f)) for f in invariant_factors(Matrix(rows), domain=ZZ))
        return free_rank, tuple(sorted(f for f in factors if f > 1))

    def __repr__(self) -> str:
        return f"SubLattice({self.dimension}, {self.basis})"

# Copyright 2026 The weyl-subgroups Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""
Exact arithmetic helpers.

Rationals are `fractions.Fraction`; matrix kernels, inverses and determinants
go through `sympy` and are converted back. Integer lattices are kept in row
echelon form over the integers so that membership is an exact test.
"""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

import sympy

from .exceptions import InvalidInputError

Coords = tuple[Fraction, ...]
IntCoords = tuple[int, ...]


def to_fraction(value: object) -> Fraction:
    """Converts ints, Fractions, sympy rationals and "num/den" strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInputError(f"Expected a rational number, got {value!r}.")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except (ValueError, ZeroDivisionError) as e:
            raise InvalidInputError(f"Malformed rational string '{value}'.") from e
    raise InvalidInputError(f"Expected a rational number, got {value!r}.")


def to_coords(values: Iterable[object]) -> Coords:
    return tuple(to_fraction(v) for v in values)


def format_fraction(value: Fraction) -> str:
    """Canonical decimal-free "num/den" rendering."""
    return f"{value.numerator}/{value.denominator}"


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Coords:
    return tuple(Fraction(a) + b for a, b in zip(u, v, strict=True))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Coords:
    return tuple(Fraction(a) - b for a, b in zip(u, v, strict=True))


def scale(c: Fraction | int, u: Sequence[Fraction]) -> Coords:
    return tuple(c * Fraction(a) for a in u)


def zero(n: int) -> Coords:
    return (Fraction(0),) * n


def bilinear(
    u: Sequence[Fraction], gram: Sequence[Sequence[Fraction]], v: Sequence[Fraction]
) -> Fraction:
    """Evaluates u^T G v."""
    total = Fraction(0)
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = gram[i]
        total += ui * sum((row[j] * vj for j, vj in enumerate(v) if vj), Fraction(0))
    return total


def mat_vec(matrix: Sequence[Sequence[Fraction | int]], v: Sequence[Fraction]) -> Coords:
    return tuple(
        sum((Fraction(row[j]) * v[j] for j in range(len(v)) if v[j]), Fraction(0))
        for row in matrix
    )


def _sympy_matrix(rows: Sequence[Sequence[Fraction | int]]) -> sympy.Matrix:
    return sympy.Matrix(
        [
            [sympy.Rational(x.numerator, x.denominator) if isinstance(x, Fraction) else sympy.Integer(x) for x in row]
            for row in rows
        ]
    )


def _from_sympy_matrix(m: sympy.Matrix) -> tuple[Coords, ...]:
    return tuple(tuple(to_fraction(m[i, j]) for j in range(m.cols)) for i in range(m.rows))


def determinant(rows: Sequence[Sequence[Fraction | int]]) -> Fraction:
    if not rows:
        return Fraction(1)
    return to_fraction(_sympy_matrix(rows).det())


def inverse(rows: Sequence[Sequence[Fraction | int]]) -> tuple[Coords, ...]:
    m = _sympy_matrix(rows)
    if m.det() == 0:
        raise InvalidInputError("Matrix is singular.")
    return _from_sympy_matrix(m.inv())


def rank(vectors: Sequence[Sequence[Fraction | int]]) -> int:
    if not vectors:
        return 0
    return int(_sympy_matrix(vectors).rank())


def solve_in_basis(
    basis: Sequence[Sequence[Fraction | int]], target: Sequence[Fraction | int]
) -> Coords | None:
    """
    Coordinates x with Σ x_j basis[j] = target, or None if target is outside
    the span. The basis vectors must be linearly independent.
    """
    if not basis:
        return () if all(t == 0 for t in target) else None
    columns = _sympy_matrix(basis).T
    rhs = _sympy_matrix([[t] for t in target])
    try:
        solution, params = columns.gauss_jordan_solve(rhs)
    except ValueError:
        return None
    if params.shape[0]:
        raise InvalidInputError("Basis vectors are linearly dependent.")
    return tuple(to_fraction(solution[i, 0]) for i in range(solution.rows))


def primitive_integer_vector(values: Sequence[Fraction | int]) -> IntCoords:
    """Scales a rational vector to coprime integers, preserving direction."""
    fracs = [Fraction(v) for v in values]
    denominator = reduce(math.lcm, (f.denominator for f in fracs), 1)
    ints = [int(f * denominator) for f in fracs]
    g = reduce(math.gcd, (abs(x) for x in ints), 0)
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)


def rational_kernel(vectors: Sequence[Sequence[Fraction | int]]) -> list[IntCoords]:
    """
    Basis of the linear relations Σ c_j vectors[j] = 0, each scaled to
    coprime integers.
    """
    if not vectors:
        return []
    relations = _sympy_matrix(vectors).T.nullspace()
    return [
        primitive_integer_vector([to_fraction(r[i, 0]) for i in range(r.rows)])
        for r in relations
    ]


def squarefree_split(n: int) -> tuple[int, int]:
    """Writes a positive integer as outer**2 * r with r squarefree."""
    if n <= 0:
        raise InvalidInputError(f"Expected a positive integer, got {n}.")
    outer, r = 1, 1
    for prime, exponent in sympy.factorint(n).items():
        outer *= prime ** (exponent // 2)
        if exponent % 2:
            r *= prime
    return outer, r


@dataclass(frozen=True)
class QuadVal:
    """
    An exact nonnegative value q·√r with r squarefree.

    Build values through `QuadVal.of` or `QuadVal.sqrt`, which normalize.
    """

    q: Fraction
    r: int = 1

    def __post_init__(self) -> None:
        if self.q < 0:
            raise InvalidInputError("QuadVal coefficient must be nonnegative.")
        if self.r <= 0 or squarefree_split(self.r)[0] != 1:
            raise InvalidInputError(f"QuadVal radicand {self.r} is not squarefree.")
        if self.q == 0 and self.r != 1:
            raise InvalidInputError("A zero QuadVal must have radicand 1.")

    @classmethod
    def of(cls, q: Fraction | int, r: int = 1) -> "QuadVal":
        q = Fraction(q)
        if q == 0:
            return cls(Fraction(0), 1)
        outer, core = squarefree_split(r)
        return cls(q * outer, core)

    @classmethod
    def sqrt(cls, x: Fraction | int) -> "QuadVal":
        """√x for a nonnegative rational x."""
        x = Fraction(x)
        if x < 0:
            raise InvalidInputError("Cannot take the square root of a negative value.")
        if x == 0:
            return cls(Fraction(0), 1)
        # √(n/d) = √(n·d)/d
        return cls.of(Fraction(1, x.denominator), x.numerator * x.denominator)

    def square(self) -> Fraction:
        return self.q * self.q * self.r

    def is_rational(self) -> bool:
        return self.r == 1

    def to_fraction(self) -> Fraction:
        if self.r != 1:
            raise InvalidInputError(f"{self} is irrational.")
        return self.q

    def __mul__(self, other: "QuadVal | Fraction | int") -> "QuadVal":
        if isinstance(other, QuadVal):
            return QuadVal.of(self.q * other.q, self.r * other.r)
        return QuadVal.of(self.q * Fraction(other), self.r)

    __rmul__ = __mul__

    def __truediv__(self, other: "QuadVal | Fraction | int") -> "QuadVal":
        if isinstance(other, QuadVal):
            if other.q == 0:
                raise ZeroDivisionError("QuadVal division by zero")
            # q1√r1 / (q2√r2) = (q1 / (q2 r2)) √(r1 r2)
            return QuadVal.of(self.q / (other.q * other.r), self.r * other.r)
        return QuadVal.of(self.q / Fraction(other), self.r)

    def __lt__(self, other: "QuadVal") -> bool:
        return self.square() < other.square()

    def __float__(self) -> float:
        return float(self.q) * math.sqrt(self.r)

    def __str__(self) -> str:
        return f"{self.q}*sqrt({self.r})"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    # x * a + y * b == g
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class IntegerLattice:
    """
    A sublattice of ℤ^N kept in row echelon form.

    Vectors are added one at a time; membership is decided by reducing
    against the pivots.
    """

    def __init__(self, ambient_dimension: int) -> None:
        self.dimension = ambient_dimension
        self.basis: list[list[int]] = []
        self._pivots: list[int] = []

    @classmethod
    def spanned_by(cls, dimension: int, vectors: Iterable[Sequence[int]]) -> "IntegerLattice":
        lattice = cls(dimension)
        for v in vectors:
            lattice.add_vector(v)
        return lattice

    def _insert(self, vec: list[int], column: int) -> None:
        where = 0
        while where < len(self._pivots) and self._pivots[where] < column:
            where += 1
        if vec[column] < 0:
            vec = [-x for x in vec]
        self.basis.insert(where, vec)
        self._pivots.insert(where, column)

    def add_vector(self, vector: Sequence[int]) -> None:
        vec = [int(x) for x in vector]
        if len(vec) != self.dimension:
            raise InvalidInputError("Vector length does not match lattice dimension.")
        for column in range(self.dimension):
            if not vec[column]:
                continue
            if column not in self._pivots:
                self._insert(vec, column)
                return
            p = self._pivots.index(column)
            row = self.basis[p]
            a, b = row[column], vec[column]
            if b % a == 0:
                q = b // a
                vec = [v - q * r for v, r in zip(vec, row, strict=True)]
                continue
            x, y, g = _xgcd(a, b)
            new_row = [x * r + y * v for r, v in zip(row, vec, strict=True)]
            vec = [(-b // g) * r + (a // g) * v for r, v in zip(row, vec, strict=True)]
            self.basis[p] = new_row

    def __contains__(self, vector: Sequence[int]) -> bool:
        vec = [int(x) for x in vector]
        for row, column in zip(self.basis, self._pivots, strict=True):
            for j in range(column):
                if vec[j]:
                    return False
            a, b = row[column], vec[column]
            if b % a:
                return False
            q = b // a
            vec = [v - q * r for v, r in zip(vec, row, strict=True)]
        return not any(vec)

    @property
    def rank(self) -> int:
        return len(self.basis)


def integer_kernel(rows: Sequence[Sequence[int]], ncols: int) -> list[IntCoords]:
    """
    A ℤ-basis of {z ∈ ℤ^ncols : rows · z = 0}, computed by unimodular column
    operations.
    """
    a = [list(map(int, row)) for row in rows]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def combine(j: int, k: int, x: int, y: int, s: int, t: int) -> None:
        # columns (j, k) <- (x*cj + y*ck, s*cj + t*ck)
        for mat in (a, u):
            for row in mat:
                cj, ck = row[j], row[k]
                row[j], row[k] = x * cj + y * ck, s * cj + t * ck

    pivot = 0
    for r in range(len(a)):
        if pivot >= ncols:
            break
        for k in range(pivot + 1, ncols):
            b = a[r][k]
            if not b:
                continue
            p = a[r][pivot]
            if not p:
                combine(pivot, k, 0, 1, 1, 0)
                continue
            x, y, g = _xgcd(p, b)
            combine(pivot, k, x, y, -b // g, p // g)
        if a[r][pivot]:
            pivot += 1
    return [tuple(u[i][j] for i in range(ncols)) for j in range(pivot, ncols)]


def lattice_index(sub_basis: Sequence[Sequence[Fraction]], super_basis: Sequence[Sequence[Fraction]]) -> int:
    """[L : L'] for full-rank lattices L' ⊆ L given by bases of the same span."""
    change = []
    for v in sub_basis:
        coords = solve_in_basis(super_basis, v)
        if coords is None or any(c.denominator != 1 for c in coords):
            raise InvalidInputError("First lattice is not contained in the second.")
        change.append(coords)
    return abs(int(determinant(change)))

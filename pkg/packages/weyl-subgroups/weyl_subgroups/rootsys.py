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
Finite crystallographic root systems.

Coordinates are taken in the simple-root basis, so roots have integer
coordinates and every inner product is an exact rational read off the Gram
matrix. Long roots of each component have ⟨α,α⟩ = 2.
"""

import logging
import math
import re
from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

from .cache import LruCache
from .data_models.enums import LatticeTag
from .exceptions import (
    AmbientMismatchError,
    CartanTypeError,
    InternalConsistencyError,
    InvalidInputError,
    LatticeMembershipError,
    ResourceLimitError,
)
from .rational import (
    Coords,
    IntCoords,
    add,
    bilinear,
    determinant,
    inverse,
    lattice_index,
    scale,
    solve_in_basis,
    sub,
    zero,
)
from .settings import default_max_weyl_order

logger = logging.getLogger(__name__)

Vector = Coords

_COMPONENT_PATTERN = re.compile(r"^([A-Ga-g])(\d+)$")
_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4}
_E_ORDERS = {6: 51840, 7: 2903040, 8: 696729600}

_systems: LruCache["RootSystem"] = LruCache(capacity=32)
_weyl_groups: LruCache[tuple["WeylElement", ...]] = LruCache(capacity=8)


def _check_component(family: str, rank: int) -> None:
    if family in _MIN_RANK:
        ok = rank >= _MIN_RANK[family]
    elif family == "E":
        ok = rank in _E_ORDERS
    elif family == "F":
        ok = rank == 4
    elif family == "G":
        ok = rank == 2
    else:
        ok = False
    if not ok:
        raise CartanTypeError(f"'{family}{rank}' is not a valid indecomposable Cartan type.")


@dataclass(frozen=True)
class CartanType:
    """A finite Cartan type as a sequence of (family, rank) components."""

    components: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise CartanTypeError("A Cartan type needs at least one component.")
        for family, rank in self.components:
            _check_component(family, rank)

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """Parses strings such as "A2" or "B3xG2"."""
        tokens = [t.strip() for t in text.strip().split("x")] if text else []
        components = []
        for token in tokens:
            match = _COMPONENT_PATTERN.match(token)
            if not match:
                raise CartanTypeError(f"Cannot parse Cartan type '{text}'.")
            components.append((match.group(1).upper(), int(match.group(2))))
        if not components:
            raise CartanTypeError(f"Cannot parse Cartan type '{text}'.")
        return cls(tuple(components))

    @property
    def rank(self) -> int:
        return sum(rank for _, rank in self.components)

    def __str__(self) -> str:
        return "x".join(f"{family}{rank}" for family, rank in self.components)


def predicted_weyl_order(cartan_type: CartanType) -> int:
    order = 1
    for family, n in cartan_type.components:
        if family == "A":
            order *= math.factorial(n + 1)
        elif family in "BC":
            order *= 2**n * math.factorial(n)
        elif family == "D":
            order *= 2 ** (n - 1) * math.factorial(n)
        elif family == "E":
            order *= _E_ORDERS[n]
        elif family == "F":
            order *= 1152
        else:
            order *= 12
    return order


def _component_norms(family: str, n: int) -> list[Fraction]:
    two, one = Fraction(2), Fraction(1)
    if family == "B":
        return [two] * (n - 1) + [one]
    if family == "C":
        return [one] * (n - 1) + [two]
    if family == "F":
        return [two, two, one, one]
    if family == "G":
        return [Fraction(2, 3), two]
    return [two] * n


def _component_edges(family: str, n: int) -> list[tuple[int, int]]:
    if family == "D":
        return [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    if family == "E":
        return [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    return [(i, i + 1) for i in range(n - 1)]


def _gram_matrix(cartan_type: CartanType) -> tuple[list[list[Fraction]], list[tuple[int, ...]]]:
    size = cartan_type.rank
    gram = [[Fraction(0)] * size for _ in range(size)]
    blocks = []
    offset = 0
    for family, n in cartan_type.components:
        norms = _component_norms(family, n)
        for i, norm in enumerate(norms):
            gram[offset + i][offset + i] = norm
        for i, j in _component_edges(family, n):
            value = -max(norms[i], norms[j]) / 2
            gram[offset + i][offset + j] = value
            gram[offset + j][offset + i] = value
        blocks.append(tuple(range(offset, offset + n)))
        offset += n
    return gram, blocks


def _simple_pairing(gram: Sequence[Sequence[Fraction]], beta: Sequence[int], j: int) -> int:
    value = 2 * sum((gram[k][j] * c for k, c in enumerate(beta) if c), Fraction(0)) / gram[j][j]
    if value.denominator != 1:
        raise InternalConsistencyError(f"Non-integral Cartan pairing {value} for {tuple(beta)}.")
    return int(value)


def _closure_of_simple_roots(gram: Sequence[Sequence[Fraction]]) -> list[IntCoords]:
    rank = len(gram)
    simple = [tuple(int(i == j) for i in range(rank)) for j in range(rank)]
    seen = set(simple)
    queue = deque(simple)
    while queue:
        beta = queue.popleft()
        for j in range(rank):
            p = _simple_pairing(gram, beta, j)
            if not p:
                continue
            image = tuple(c - p * int(k == j) for k, c in enumerate(beta))
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return list(seen)


def _root_order_key(coords: IntCoords) -> tuple[int, tuple[int, ...]]:
    return sum(coords), tuple(-c for c in coords)


class RootSystem:
    """
    A finite crystallographic root system with roots indexed 0..2N-1.

    Indices 0..N-1 are the positive roots sorted by height, the simple root
    α_j having index j; index i + N holds the negative of root i.
    """

    def __init__(
        self,
        cartan_type: CartanType,
        gram: Sequence[Sequence[Fraction]],
        positive_roots: Sequence[IntCoords],
        components: Sequence[tuple[int, ...]],
        label: str | None = None,
    ) -> None:
        self.cartan_type = cartan_type
        self.label = label or str(cartan_type)
        self.rank = len(gram)
        self.gram: tuple[Coords, ...] = tuple(tuple(Fraction(x) for x in row) for row in gram)
        self.num_positive = len(positive_roots)
        self.roots: tuple[IntCoords, ...] = tuple(positive_roots) + tuple(
            tuple(-c for c in root) for root in positive_roots
        )
        self.components: tuple[tuple[int, ...], ...] = tuple(components)
        self._index = {root: i for i, root in enumerate(self.roots)}
        self._reflections: dict[int, tuple[int, ...]] = {}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and other.label == self.label

    def __hash__(self) -> int:
        return hash(self.label)

    def __repr__(self) -> str:
        return f"RootSystem({self.label!r})"

    @property
    def simple(self) -> range:
        return range(self.rank)

    @property
    def positive(self) -> range:
        return range(self.num_positive)

    def __len__(self) -> int:
        return len(self.roots)

    def is_positive(self, i: int) -> bool:
        return i < self.num_positive

    def negate(self, i: int) -> int:
        n = self.num_positive
        return i + n if i < n else i - n

    def vector(self, i: int) -> Vector:
        return tuple(Fraction(c) for c in self.roots[i])

    def height(self, i: int) -> int:
        return sum(self.roots[i])

    def index_of(self, v: Sequence[Fraction | int]) -> int | None:
        """Index of the root with coordinates v, or None when v is not a root."""
        if len(v) != self.rank:
            return None
        if any(Fraction(c).denominator != 1 for c in v):
            return None
        return self._index.get(tuple(int(c) for c in v))

    def inner(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
        return bilinear(u, self.gram, v)

    @cached_property
    def _gram_images(self) -> tuple[Coords, ...]:
        return tuple(
            tuple(sum((row[k] * c for k, c in enumerate(root) if c), Fraction(0)) for row in self.gram)
            for root in self.roots
        )

    def root_inner(self, i: int, j: int) -> Fraction:
        """⟨β_i, β_j⟩ for root indices."""
        image = self._gram_images[j]
        return sum((c * image[k] for k, c in enumerate(self.roots[i]) if c), Fraction(0))

    def pair(self, v: Sequence[Fraction], i: int) -> Fraction:
        """⟨v, β_i⟩ for a vector v and a root index."""
        image = self._gram_images[i]
        return sum((Fraction(c) * image[k] for k, c in enumerate(v) if c), Fraction(0))

    def norm(self, i: int) -> Fraction:
        return self.root_inner(i, i)

    def cartan_integer(self, i: int, j: int) -> int:
        """⟨β_i, β̌_j⟩, always an integer."""
        value = 2 * self.root_inner(i, j) / self.norm(j)
        if value.denominator != 1:
            raise InternalConsistencyError(f"Non-integral pairing between roots {i} and {j}.")
        return int(value)

    def coroot(self, i: int) -> Vector:
        """2α/⟨α,α⟩ in the simple-root basis."""
        return scale(2 / self.norm(i), self.vector(i))

    def _check_vector(self, v: Sequence[Fraction]) -> None:
        if len(v) != self.rank:
            raise AmbientMismatchError(
                f"Vector of length {len(v)} does not belong to {self.label} of rank {self.rank}."
            )

    def reflect(self, i: int, v: Sequence[Fraction]) -> Vector:
        """s_α(v) = v − ⟨v, α̌⟩α for the root α with index i."""
        self._check_vector(v)
        if not 0 <= i < len(self.roots):
            raise AmbientMismatchError(f"{i} is not a root index of {self.label}.")
        c = 2 * self.pair(v, i) / self.norm(i)
        return sub(v, scale(c, self.vector(i)))

    def reflection_perm(self, j: int) -> tuple[int, ...]:
        """The permutation of root indices induced by s_{β_j}."""
        perm = self._reflections.get(j)
        if perm is None:
            alpha = self.roots[j]
            images = []
            for i, beta in enumerate(self.roots):
                p = self.cartan_integer(i, j)
                images.append(self._index[tuple(b - p * a for a, b in zip(alpha, beta, strict=True))])
            perm = tuple(images)
            self._reflections[j] = perm
        return perm

    @cached_property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """A_ij = ⟨α_j, α̌_i⟩."""
        return tuple(tuple(self.cartan_integer(j, i) for j in self.simple) for i in self.simple)

    @cached_property
    def root_component(self) -> tuple[int, ...]:
        """For each root index, the index of the component containing it."""
        owner = {}
        for c, block in enumerate(self.components):
            for j in block:
                owner[j] = c
        return tuple(owner[next(k for k, x in enumerate(root) if x)] for root in self.roots)

    @cached_property
    def _component_max_norm(self) -> tuple[Fraction, ...]:
        return tuple(max(self.gram[j][j] for j in block) for block in self.components)

    def is_long(self, i: int) -> bool:
        return self.norm(i) == self._component_max_norm[self.root_component[i]]

    def has_two_lengths(self, component: int) -> bool:
        return len({self.gram[j][j] for j in self.components[component]}) == 2

    def length_ratio(self, component: int) -> int:
        """k_Ψ: ratio of long to short norms in a component (1 if one length)."""
        norms = {self.gram[j][j] for j in self.components[component]}
        ratio = max(norms) / min(norms)
        return int(ratio)

    def _highest(self, component: int, short: bool) -> int:
        candidates = [
            i
            for i in self.positive
            if self.root_component[i] == component and (not short or not self.is_long(i))
        ]
        top = max(self.height(i) for i in candidates)
        best = [i for i in candidates if self.height(i) == top]
        if len(best) != 1:
            raise InternalConsistencyError(f"No unique highest root in component {component}.")
        return best[0]

    def highest_root(self, component: int) -> int:
        return self._highest(component, short=False)

    def highest_short_root(self, component: int) -> int:
        """The root whose coroot is the highest root of the dual component."""
        return self._highest(component, short=self.has_two_lengths(component))

    @cached_property
    def dual(self) -> "RootSystem":
        return dual_root_system(self)


def _check_positive_definite(gram: Sequence[Sequence[Fraction]], label: str) -> None:
    for k in range(1, len(gram) + 1):
        minor = determinant([row[:k] for row in gram[:k]])
        if minor <= 0:
            raise InternalConsistencyError(f"Gram matrix of {label} is not positive definite.")


def _build(cartan_type: CartanType) -> RootSystem:
    gram, blocks = _gram_matrix(cartan_type)
    _check_positive_definite(gram, str(cartan_type))
    roots = _closure_of_simple_roots(gram)
    positives = []
    for root in roots:
        if all(c >= 0 for c in root):
            positives.append(root)
        elif not all(c <= 0 for c in root):
            raise InternalConsistencyError(f"Root {root} has coordinates of both signs.")
    positives.sort(key=_root_order_key)
    if 2 * len(positives) != len(roots):
        raise InternalConsistencyError(f"{cartan_type}: roots are not split by sign.")
    rs = RootSystem(cartan_type, gram, positives, blocks)
    for c in range(len(rs.components)):
        if rs.length_ratio(c) not in (1, 2, 3):
            raise InternalConsistencyError(f"Unexpected norm ratio in {rs.label}.")
    logger.info("Built root system %s: %d roots, rank %d", rs.label, len(rs), rs.rank)
    return rs


def build_root_system(cartan_type: CartanType | str) -> RootSystem:
    """Builds (or returns the cached) root system of a Cartan type."""
    if isinstance(cartan_type, str):
        cartan_type = CartanType.parse(cartan_type)
    return _systems.get_or_build(str(cartan_type), lambda: _build(cartan_type))


def dual_root_system(rs: RootSystem) -> RootSystem:
    """
    The dual system Φ̌ as a RootSystem whose root i is the coroot of root i.

    Coordinates are taken in the basis of simple coroots and each component is
    rescaled so that its long roots have norm 2.
    """
    scale_of = {}
    for block in rs.components:
        dual_norms = [4 / rs.gram[j][j] for j in block]
        factor = 2 / max(dual_norms)
        for j in block:
            scale_of[j] = factor
    gram = [
        [
            4 * rs.gram[i][j] / (rs.gram[i][i] * rs.gram[j][j]) * scale_of[i]
            if rs.gram[i][j]
            else Fraction(0)
            for j in rs.simple
        ]
        for i in rs.simple
    ]
    positives = []
    for i in rs.positive:
        norm = rs.norm(i)
        coords = tuple(c * rs.gram[k][k] / norm for k, c in enumerate(rs.roots[i]))
        if any(c.denominator != 1 for c in coords):
            raise InternalConsistencyError(f"Coroot of root {i} is not integral.")
        positives.append(tuple(int(c) for c in coords))
    return RootSystem(rs.cartan_type, gram, positives, rs.components, label=f"dual:{rs.label}")


def highest_roots(rs: RootSystem) -> list[tuple[int, int]]:
    """Per component, (ω, ω*) where ω*̌ is the highest root of the dual."""
    return [(rs.highest_root(c), rs.highest_short_root(c)) for c in range(len(rs.components))]


@dataclass(frozen=True)
class WeylElement:
    """
    An element of W as a permutation of root indices.

    `matrix` is its action on simple-root coordinates: column j holds w(α_j).
    """

    perm: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...] = field(compare=False, repr=False)

    @classmethod
    def from_perm(cls, rs: RootSystem, perm: Sequence[int]) -> "WeylElement":
        perm = tuple(perm)
        matrix = tuple(tuple(rs.roots[perm[j]][i] for j in rs.simple) for i in rs.simple)
        return cls(perm, matrix)

    @classmethod
    def identity(cls, rs: RootSystem) -> "WeylElement":
        return cls.from_perm(rs, range(len(rs)))

    @classmethod
    def reflection(cls, rs: RootSystem, i: int) -> "WeylElement":
        return cls.from_perm(rs, rs.reflection_perm(i))

    def compose(self, other: "WeylElement", rs: RootSystem) -> "WeylElement":
        """self ∘ other."""
        return WeylElement.from_perm(rs, [self.perm[i] for i in other.perm])

    def inverse(self, rs: RootSystem) -> "WeylElement":
        inv = [0] * len(self.perm)
        for i, image in enumerate(self.perm):
            inv[image] = i
        return WeylElement.from_perm(rs, inv)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        return tuple(
            sum((Fraction(row[j]) * v[j] for j in range(len(v)) if v[j]), Fraction(0))
            for row in self.matrix
        )

    def apply_root(self, i: int) -> int:
        return self.perm[i]

    def is_identity(self) -> bool:
        return all(i == image for i, image in enumerate(self.perm))

    def length(self, rs: RootSystem) -> int:
        return sum(1 for i in rs.positive if not rs.is_positive(self.perm[i]))


def longest_element(rs: RootSystem) -> WeylElement:
    w = WeylElement.identity(rs)
    while True:
        ascent = next((j for j in rs.simple if rs.is_positive(w.perm[j])), None)
        if ascent is None:
            return w
        w = w.compose(WeylElement.reflection(rs, ascent), rs)


def _cap(max_order: int | None) -> int:
    return default_max_weyl_order() if max_order is None else max_order


def weyl_group(rs: RootSystem, max_order: int | None = None) -> tuple[WeylElement, ...]:
    """
    Enumerates W by closure of the simple reflections.

    Raises:
        ResourceLimitError: if |W| exceeds the cap.
    """
    cap = _cap(max_order)
    predicted = predicted_weyl_order(rs.cartan_type)
    if predicted > cap:
        raise ResourceLimitError(
            f"|W({rs.label})| = {predicted} exceeds the enumeration cap {cap}.",
            cap=cap,
            requested=predicted,
        )

    def enumerate_group() -> tuple[WeylElement, ...]:
        generators = [rs.reflection_perm(j) for j in rs.simple]
        start = tuple(range(len(rs)))
        seen = {start[: rs.rank]: start}
        queue = deque([start])
        while queue:
            perm = queue.popleft()
            for gen in generators:
                image = tuple(perm[i] for i in gen)
                key = image[: rs.rank]
                if key not in seen:
                    seen[key] = image
                    queue.append(image)
        simple_systems = {frozenset(key) for key in seen}
        if not len(seen) == predicted == len(simple_systems):
            raise InternalConsistencyError(
                f"W({rs.label}) enumeration found {len(seen)} elements and "
                f"{len(simple_systems)} simple systems, expected {predicted}."
            )
        logger.info("Enumerated W(%s): %d elements", rs.label, len(seen))
        return tuple(WeylElement.from_perm(rs, perm) for perm in seen.values())

    return _weyl_groups.get_or_build((rs.label, cap), enumerate_group)


def weyl_subgroup(
    rs: RootSystem, members: Iterable[int], max_order: int | None = None
) -> tuple[WeylElement, ...]:
    """The subgroup of W generated by the reflections in the given roots."""
    cap = _cap(max_order)
    generators = {rs.reflection_perm(i) for i in members}
    start = tuple(range(len(rs)))
    seen = {start}
    queue = deque([start])
    while queue:
        perm = queue.popleft()
        for gen in generators:
            image = tuple(perm[i] for i in gen)
            if image not in seen:
                seen.add(image)
                if len(seen) > cap:
                    raise ResourceLimitError(
                        f"Reflection subgroup of W({rs.label}) exceeds the enumeration cap {cap}.",
                        cap=cap,
                    )
                queue.append(image)
    return tuple(WeylElement.from_perm(rs, perm) for perm in sorted(seen))


@dataclass(frozen=True)
class LatticeData:
    """A lattice in V given by a basis in simple-root coordinates."""

    basis: tuple[Coords, ...]
    kind: LatticeTag = LatticeTag.INTERMEDIATE
    dimension: int = 0  # ambient rank, needed when the basis is empty

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence[Fraction]) -> Coords | None:
        """Coordinates of v in the basis, or None outside the span."""
        return solve_in_basis(self.basis, v)

    def scaled(self, m: int) -> "LatticeData":
        kind = self.kind if m == 1 else LatticeTag.INTERMEDIATE
        return LatticeData(tuple(scale(m, b) for b in self.basis), kind, self.dimension)

    def element(self, coefficients: Sequence[int | Fraction]) -> Vector:
        dimension = len(self.basis[0]) if self.basis else self.dimension
        total = zero(dimension)
        for c, b in zip(coefficients, self.basis, strict=True):
            if c:
                total = add(total, scale(c, b))
        return total


def lattices(rs: RootSystem) -> tuple[LatticeData, LatticeData, int]:
    """The coroot lattice Q, the coweight lattice P and f = [P:Q] = det(Cartan)."""
    q_basis = tuple(rs.coroot(j) for j in rs.simple)
    g_inverse = inverse(rs.gram)
    # Columns of G⁻¹ pair to δ_ij with the simple roots.
    p_basis = tuple(tuple(g_inverse[i][j] for i in rs.simple) for j in rs.simple)
    f_det = determinant(rs.cartan_matrix)
    f_index = lattice_index(q_basis, p_basis)
    if f_det.denominator != 1 or int(f_det) != f_index:
        raise InternalConsistencyError(
            f"Index of connection mismatch for {rs.label}: det {f_det}, index {f_index}."
        )
    return (
        LatticeData(q_basis, LatticeTag.Q_COROOT, rs.rank),
        LatticeData(p_basis, LatticeTag.P_COWEIGHT, rs.rank),
        f_index,
    )


def index_of_connection(rs: RootSystem) -> int:
    return lattices(rs)[2]


def lattice_membership(lattice: LatticeData, v: Sequence[Fraction]) -> bool:
    coords = lattice.coordinates(v)
    return coords is not None and all(c.denominator == 1 for c in coords)


def coset_reduce(lattice: LatticeData, v: Sequence[Fraction]) -> Vector:
    """
    The representative of v + L whose coordinates in L's basis lie in [0, 1).

    Raises:
        LatticeMembershipError: if v is outside the span of L.
    """
    coords = lattice.coordinates(v)
    if coords is None:
        raise LatticeMembershipError("Vector lies outside the span of the lattice.")
    return lattice.element([c - math.floor(c) for c in coords])


def coweight_basis(rs: RootSystem, simple_indices: Sequence[int]) -> tuple[Vector, ...]:
    """
    Fundamental coweights ω_α of the subsystem with simple system Δ.

    They lie in the span of Δ and satisfy ⟨ω_α, β⟩ = δ_αβ for α, β ∈ Δ.
    """
    if not simple_indices:
        return ()
    local = [[rs.root_inner(a, b) for b in simple_indices] for a in simple_indices]
    local_inverse = inverse(local)
    basis = []
    for col in range(len(simple_indices)):
        v = zero(rs.rank)
        for row, a in enumerate(simple_indices):
            if local_inverse[row][col]:
                v = add(v, scale(local_inverse[row][col], rs.vector(a)))
        basis.append(v)
    return tuple(basis)


def project(rs: RootSystem, v: Sequence[Fraction], spanning: Sequence[int]) -> Vector:
    """Orthogonal projection of v onto the span of linearly independent roots."""
    if not spanning:
        return zero(rs.rank)
    local = [[rs.root_inner(a, b) for b in spanning] for a in spanning]
    rhs = [rs.pair(v, a) for a in spanning]
    coefficients = solve_in_basis(local, rhs)
    if coefficients is None:
        raise InvalidInputError("Projection basis is degenerate.")
    total = zero(rs.rank)
    for c, a in zip(coefficients, spanning, strict=True):
        if c:
            total = add(total, scale(c, rs.vector(a)))
    return total

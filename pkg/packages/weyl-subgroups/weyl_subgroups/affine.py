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
Affine roots, extended affine Weyl group elements and alcoves.

An affine root α + nδ is stored as a finite root index and a level. An
element of W̃ = W ⋉ t_R is stored as a pair (w, γ) standing for w·t_γ, which
acts on affine roots by

    w t_γ (α + mδ) = w(α) + (m + ⟨α, γ⟩)δ.

Points of V are acted on through `point_action`, in either of the two usual
identifications of t_γ with a translation of V.
"""

import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .data_models.enums import Convention
from .exceptions import AmbientMismatchError, InternalConsistencyError, InvalidInputError
from .rational import QuadVal, add, determinant, scale, sub, to_coords, zero
from .rootsys import (
    RootSystem,
    Vector,
    WeylElement,
    lattice_membership,
    lattices,
    predicted_weyl_order,
)

logger = logging.getLogger(__name__)

AffinePoint = Vector


@dataclass(frozen=True, order=True)
class AffRoot:
    """The affine root α + nδ with α = roots[root]."""

    root: int
    level: int

    def is_positive(self, rs: RootSystem) -> bool:
        return self.level > 0 or (self.level == 0 and rs.is_positive(self.root))

    def negate(self, rs: RootSystem) -> "AffRoot":
        return AffRoot(rs.negate(self.root), -self.level)

    def value_at(self, rs: RootSystem, v: Sequence[Fraction]) -> Fraction:
        """The affine function ⟨α, v⟩ + n."""
        return rs.pair(v, self.root) + self.level

    def describe(self, rs: RootSystem) -> str:
        coords = ",".join(str(c) for c in rs.roots[self.root])
        return f"({coords})+{self.level}δ"


@dataclass(frozen=True)
class ExtAffElement:
    """w·t_γ with w ∈ W and γ ∈ V (normally in the coweight lattice)."""

    w: WeylElement
    gamma: Vector

    @classmethod
    def identity(cls, rs: RootSystem) -> "ExtAffElement":
        return cls(WeylElement.identity(rs), zero(rs.rank))

    @classmethod
    def translation(cls, rs: RootSystem, gamma: Sequence[Fraction]) -> "ExtAffElement":
        if len(gamma) != rs.rank:
            raise AmbientMismatchError(f"Translation of length {len(gamma)} in {rs.label}.")
        return cls(WeylElement.identity(rs), to_coords(gamma))

    @classmethod
    def of_weyl(cls, rs: RootSystem, w: WeylElement) -> "ExtAffElement":
        return cls(w, zero(rs.rank))

    @classmethod
    def translate_then(cls, rs: RootSystem, gamma: Sequence[Fraction], w: WeylElement) -> "ExtAffElement":
        """t_γ·w, stored as w·t_{w⁻¹γ}."""
        return cls(w, w.inverse(rs).apply(to_coords(gamma)))

    def compose(self, other: "ExtAffElement", rs: RootSystem) -> "ExtAffElement":
        """self·other = (w₁w₂, w₂⁻¹γ₁ + γ₂)."""
        moved = other.w.inverse(rs).apply(self.gamma)
        return ExtAffElement(self.w.compose(other.w, rs), add(moved, other.gamma))

    def inverse(self, rs: RootSystem) -> "ExtAffElement":
        return ExtAffElement(self.w.inverse(rs), scale(-1, self.w.apply(self.gamma)))

    def translation_part(self) -> Vector:
        """The γ′ with self = t_{γ′}·w."""
        return self.w.apply(self.gamma)

    def is_identity(self) -> bool:
        return self.w.is_identity() and not any(self.gamma)


def act_on_affroot(rs: RootSystem, g: ExtAffElement, x: AffRoot) -> AffRoot:
    """
    Applies w t_γ to α + mδ.

    Raises:
        InvalidInputError: if ⟨α, γ⟩ is not an integer, so the image is not
            an affine root.
    """
    shift = rs.pair(g.gamma, x.root)
    if shift.denominator != 1:
        raise InvalidInputError(
            f"⟨α, γ⟩ = {shift} is not integral; γ does not pair integrally with root {x.root}."
        )
    return AffRoot(g.w.apply_root(x.root), x.level + int(shift))


def affine_reflection_apply(
    rs: RootSystem, alpha: int, m: int | Fraction, v: Sequence[Fraction]
) -> AffinePoint:
    """s_{α,m}(v) = v − (⟨α,v⟩ − m)α̌, the reflection in H_{α,m} = {⟨α,·⟩ = m}."""
    v = to_coords(v)
    c = rs.pair(v, alpha) - m
    return sub(v, scale(c, rs.coroot(alpha)))


def reflection_of_affroot(rs: RootSystem, x: AffRoot) -> ExtAffElement:
    """The reflection in α + nδ: s_α t_{−nα̌}, equal to t_{nα̌} s_α."""
    return ExtAffElement(WeylElement.reflection(rs, x.root), scale(-x.level, rs.coroot(x.root)))


def point_action(
    rs: RootSystem,
    g: ExtAffElement,
    v: Sequence[Fraction],
    convention: Convention = Convention.LINEAR,
) -> AffinePoint:
    """
    The affine map of V attached to g.

    Under LINEAR, t_γ moves points by −γ and the zero set of each affine root
    is carried to the zero set of its image, so v ↦ w(v − γ). Under COSET,
    t_γ moves points by +γ and v ↦ w(v + γ). Both are group actions.
    """
    v = to_coords(v)
    if len(v) != rs.rank:
        raise AmbientMismatchError(f"Point of length {len(v)} in {rs.label}.")
    if convention == Convention.LINEAR:
        return g.w.apply(sub(v, g.gamma))
    return g.w.apply(add(v, g.gamma))


@dataclass(frozen=True)
class Halfspace:
    """{v : ⟨v, normal⟩ + constant ≥ 0}, or > 0 when strict."""

    normal: Vector
    constant: Fraction
    strict: bool = False
    root: int | None = None

    @classmethod
    def of_affroot(cls, rs: RootSystem, x: AffRoot, *, strict: bool = False) -> "Halfspace":
        return cls(rs.vector(x.root), Fraction(x.level), strict, x.root)

    def value(self, rs: RootSystem, v: Sequence[Fraction]) -> Fraction:
        return rs.inner(v, self.normal) + self.constant

    def contains(self, rs: RootSystem, v: Sequence[Fraction]) -> bool:
        value = self.value(rs, v)
        return value > 0 if self.strict else value >= 0


@dataclass(frozen=True)
class Alcove:
    """
    A closed alcove given by its walls.

    `component_vertices` lists the vertices of the simplex factor in each
    component of Φ; the alcove is their orthogonal product.
    """

    walls: tuple[Halfspace, ...]
    simple_affine_roots: tuple[AffRoot, ...]
    component_vertices: tuple[tuple[Vector, ...], ...]

    def contains(self, rs: RootSystem, v: Sequence[Fraction]) -> bool:
        return all(wall.contains(rs, v) for wall in self.walls)

    def vertices(self) -> list[Vector]:
        points: list[Vector] = [()]
        for block in self.component_vertices:
            points = [p + (q,) for p in points for q in block]
        dimension = len(self.component_vertices[0][0])
        result = []
        for combo in points:
            total = zero(dimension)
            for q in combo:
                total = add(total, q)
            result.append(total)
        return result


def _marks(rs: RootSystem, theta: int, block: Sequence[int]) -> dict[int, int]:
    return {j: rs.roots[theta][j] for j in block}


def fundamental_alcove(rs: RootSystem) -> Alcove:
    """
    A = {v : ⟨v,α_j⟩ ≥ 0 for simple α_j, ⟨v,θ⟩ ≤ 1 for each highest root θ}.

    Its walls are the simple affine roots α_j + 0δ and −θ + δ; in each
    component the vertices are 0 and ω_j/c_j where θ = Σ c_j α_j.
    """
    _, p_lattice, _ = lattices(rs)
    simple_affine = [AffRoot(j, 0) for j in rs.simple]
    vertices = []
    for c, block in enumerate(rs.components):
        theta = rs.highest_root(c)
        simple_affine.append(AffRoot(rs.negate(theta), 1))
        marks = _marks(rs, theta, block)
        corners = [zero(rs.rank)] + [scale(Fraction(1, marks[j]), p_lattice.basis[j]) for j in block]
        vertices.append(tuple(corners))
    walls = tuple(Halfspace.of_affroot(rs, x) for x in simple_affine)
    alcove = Alcove(walls, tuple(simple_affine), tuple(vertices))
    for block in alcove.component_vertices:
        for vertex in block:
            if not alcove.contains(rs, vertex):
                raise InternalConsistencyError(f"Claimed vertex {vertex} lies outside the alcove.")
    return alcove


def simplex_volume(rs: RootSystem, vertices: Sequence[Sequence[Fraction]]) -> QuadVal:
    """
    Volume of the simplex with the given k+1 vertices, measured in its own
    span: √det(⟨e_i, e_j⟩) / k! with edges e_i = v_i − v_0.
    """
    if not vertices:
        raise InvalidInputError("A simplex needs at least one vertex.")
    base = to_coords(vertices[0])
    edges = [sub(to_coords(v), base) for v in vertices[1:]]
    gram = [[rs.inner(a, b) for b in edges] for a in edges]
    det = determinant(gram)
    if det < 0:
        raise InternalConsistencyError("Gram determinant of a simplex is negative.")
    return QuadVal.sqrt(det) / math.factorial(len(edges))


def alcove_volume(rs: RootSystem, alcove: Alcove) -> QuadVal:
    volume = QuadVal.of(1)
    for block in alcove.component_vertices:
        volume = volume * simplex_volume(rs, block)
    return volume


def fundamental_volume_oracle(rs: RootSystem) -> QuadVal:
    """Covolume of the coroot lattice divided by |W|."""
    coroots = [rs.coroot(j) for j in rs.simple]
    gram = [[rs.inner(a, b) for b in coroots] for a in coroots]
    return QuadVal.sqrt(determinant(gram)) / predicted_weyl_order(rs.cartan_type)


def is_special_point(rs: RootSystem, v: Sequence[Fraction]) -> bool:
    """
    True iff v lies in the coweight lattice, i.e. on a hyperplane of every
    root direction.
    """
    v = to_coords(v)
    if len(v) != rs.rank:
        raise AmbientMismatchError(f"Point of length {len(v)} in {rs.label}.")
    _, p_lattice, _ = lattices(rs)
    in_lattice = lattice_membership(p_lattice, v)
    by_definition = all(rs.pair(v, i).denominator == 1 for i in rs.positive)
    if in_lattice != by_definition:
        raise InternalConsistencyError(f"Coweight membership of {v} disagrees with its pairings.")
    return in_lattice


def affroots_within(rs: RootSystem, level_bound: int) -> Iterator[AffRoot]:
    """All α + nδ with |n| ≤ level_bound, by level then root index."""
    for level in range(-level_bound, level_bound + 1):
        for i in range(len(rs)):
            yield AffRoot(i, level)

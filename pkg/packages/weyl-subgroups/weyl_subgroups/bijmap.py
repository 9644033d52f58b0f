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
The bijection j between (Γ, f) data and (Ψ, X) data.

`j_forward` reads Ψ, a and X′ off the root formula of a GF pair.
`j_inverse_minimal` recovers (Γ, f) as the canonical simple system of the
roots of a (Ψ, X) datum. `j_inverse_alcove` recovers it through the alcove
geometry of W′ = W_Ψ ⋉ t_{Y′} on the span of Ψ, as the composite of

    h: X ↦ its representative d in the box D,
    k: d ↦ d − y, with y ∈ Y′ moving d into D′, the lower closures of the
       alcoves around 0,
    g: d′ ↦ (Γ, Γ′, f), read from the alcove B around 0 with d′ ∈ B₀,
    q: (Γ, Γ′, f) ↦ (Γ, f).

Alcoves are located exactly: a point v is tracked as v + ερ′ for an
infinitesimal ε, with ρ′ the sum of the coweights of Ψ, and the point
is folded into the fundamental alcove of W′.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .affine import AffRoot, affine_reflection_apply
from .data_models.enums import LatticeKind
from .exceptions import InternalConsistencyError, InvalidInputError, LatticeMembershipError
from .finsub import RootSubset, orthogonal_components, simple_system_of
from .rational import add, scale, sub, to_coords, zero
from .refsub import (
    GFPair,
    LatticeComponent,
    PsiXPair,
    canonical_simple_system,
    chamber_root,
    roots_of_gf,
    roots_of_psix,
    validate_gf,
    validate_psix,
)
from .rootsys import RootSystem, Vector, WeylElement, coweight_basis, lattice_membership

logger = logging.getLogger(__name__)

_MAX_FOLDS = 100_000


def j_forward(pair: GFPair) -> PsiXPair:
    """
    (Γ, f) ↦ (Φ_{Γ′}, v + X′) with v = Σ_{α∈Γ′} f(α)ω_α(Γ′).

    X′ᵢ is 0 on an independent component, Kᵢ·P on a dependent one whose αᵢ is
    long and Kᵢ·P° when αᵢ is short.

    Raises:
        InternalConsistencyError: if the two root descriptions disagree.
    """
    rs = pair.rs
    psi = RootSubset(rs, pair.roots)
    v = zero(rs.rank)
    for comp in pair.decomposition.components:
        for alpha, omega in zip(comp.gamma_prime, coweight_basis(rs, comp.gamma_prime), strict=True):
            v = add(v, scale(pair.f[alpha], omega))
    components = []
    for block in orthogonal_components(rs, simple_system_of(psi)):
        comp = pair.component_of(block[0])
        if not comp.np.dependent:
            components.append(LatticeComponent(LatticeKind.ZERO))
        elif comp.np.alpha_long:
            components.append(LatticeComponent(LatticeKind.P, comp.period))
        else:
            components.append(LatticeComponent(LatticeKind.P_DUAL, comp.period))
    result = validate_psix(psi, v, components)
    bound = max(pair.labels, default=0) + max((c.period for c in pair.components), default=0)
    if roots_of_gf(pair, bound) != roots_of_psix(result, bound):
        raise InternalConsistencyError("Forward map changed the root set of the subgroup.")
    return result


def j_inverse_minimal(pair: PsiXPair) -> GFPair:
    """
    (Ψ, X) ↦ (Γ, f) through the least positive level r′_α ∈ Z_α of each
    α ∈ Ψ and the inclusion-minimal Δ′ ⊆ {α + r′_α δ} spanning it over ℕ.
    """
    rs = pair.rs
    candidates = []
    for beta in pair.psi:
        z = pair.z(beta)
        level = int(z.offset)
        if z.modulus and level == 0 and not rs.is_positive(beta):
            level = z.modulus
        x = AffRoot(beta, level)
        if x.is_positive(rs):
            candidates.append(x)
    delta = canonical_simple_system(rs, candidates)
    gamma = RootSubset(rs, frozenset(x.root for x in delta))
    if len(gamma) != len(delta):
        raise InternalConsistencyError("Canonical simple system repeats a finite root.")
    return validate_gf(gamma, {x.root: x.level for x in delta})


# --- alcove geometry of W′ ---------------------------------------------------


@dataclass(frozen=True)
class ChamberWall:
    """The wall ⟨θ, v⟩ = n_θ of the fundamental alcove in one component."""

    component: int
    root: int
    level: int


@dataclass(frozen=True)
class SubAlcoveContext:
    """The group W′ of a (Ψ, X′) datum acting on the span of Ψ."""

    pair: PsiXPair
    rho: Vector
    chamber_walls: tuple[ChamberWall, ...]

    @classmethod
    def of(cls, pair: PsiXPair) -> "SubAlcoveContext":
        rs = pair.rs
        rho = zero(rs.rank)
        for omega in pair.coweights.values():
            rho = add(rho, omega)
        walls = []
        for i, (block, comp) in enumerate(zip(pair.blocks, pair.xprime, strict=True)):
            if comp.kind == LatticeKind.ZERO:
                continue
            theta = chamber_root(rs, block, short=comp.kind == LatticeKind.P_DUAL)
            walls.append(ChamberWall(i, theta, pair.n[theta]))
        return cls(pair, rho, tuple(walls))

    @property
    def rs(self) -> RootSystem:
        return self.pair.rs

    def in_box(self, v: Sequence[Fraction]) -> bool:
        """Whether v lies in D: 0 ≤ ⟨v, α⟩ < n_α for simple α of nonzero components."""
        pair = self.pair
        if not pair.in_span(v):
            return False
        return all(
            0 <= self.rs.pair(v, alpha) < pair.n[alpha] for alpha in pair.simple if pair.n[alpha]
        )

    def in_star(self, v: Sequence[Fraction]) -> bool:
        """Whether v lies in D′, the union of lower closures of alcoves around 0."""
        return self.pair.in_span(v) and not any(locate_lower_closure(self, v).y)


@dataclass(frozen=True)
class AlcoveWall:
    """{⟨v, root⟩ < constant}, or ≤ when closed; `root` is the outward normal."""

    root: int
    constant: Fraction
    closed: bool

    def admits(self, rs: RootSystem, v: Sequence[Fraction]) -> bool:
        value = rs.pair(v, self.root)
        return value <= self.constant if self.closed else value < self.constant


@dataclass(frozen=True)
class LowerClosedAlcove:
    """
    B₀ for the alcove B = w(B_f) + y, where B_f is the fundamental alcove of
    W′. A wall is closed exactly when its outward normal is a negative root.
    """

    walls: tuple[AlcoveWall, ...]
    w: WeylElement
    y: Vector

    def contains(self, rs: RootSystem, v: Sequence[Fraction]) -> bool:
        return all(wall.admits(rs, v) for wall in self.walls)


def _pairing(rs: RootSystem, point: tuple[Vector, Vector], root: int) -> tuple[Fraction, Fraction]:
    return rs.pair(point[0], root), rs.pair(point[1], root)


def _reflect(
    rs: RootSystem, point: tuple[Vector, Vector], root: int, level: int
) -> tuple[Vector, Vector]:
    return affine_reflection_apply(rs, root, level, point[0]), affine_reflection_apply(rs, root, 0, point[1])


def locate_lower_closure(ctx: SubAlcoveContext, v: Sequence[Fraction]) -> LowerClosedAlcove:
    """
    The alcove B of W′ with v ∈ B₀.

    Raises:
        LatticeMembershipError: if v is outside the span of Ψ.
        InternalConsistencyError: if v is not in the lower closure found.
    """
    rs, pair = ctx.rs, ctx.pair
    v = to_coords(v)
    if not pair.in_span(v):
        raise LatticeMembershipError("Point lies outside the span of Ψ.")
    point = (v, ctx.rho)
    steps: list[tuple[int, int]] = []
    for _ in range(_MAX_FOLDS):
        low = next((a for a in pair.simple if _pairing(rs, point, a) < (0, 0)), None)
        if low is not None:
            step = (low, 0)
        else:
            high = next(
                (w for w in ctx.chamber_walls if _pairing(rs, point, w.root) > (w.level, 0)), None
            )
            if high is None:
                break
            step = (high.root, high.level)
        point = _reflect(rs, point, *step)
        steps.append(step)
    else:
        raise InternalConsistencyError(f"Alcove search did not settle after {_MAX_FOLDS} reflections.")

    w = WeylElement.identity(rs)
    for root, _ in steps:
        w = w.compose(WeylElement.reflection(rs, root), rs)
    y = zero(rs.rank)
    for root, level in reversed(steps):
        y = affine_reflection_apply(rs, root, level, y)

    fundamental = [(rs.negate(a), Fraction(0)) for a in pair.simple]
    fundamental += [(wall.root, Fraction(wall.level)) for wall in ctx.chamber_walls]
    walls = []
    for root, constant in fundamental:
        image = w.apply_root(root)
        walls.append(AlcoveWall(image, constant + rs.pair(y, image), closed=not rs.is_positive(image)))
    alcove = LowerClosedAlcove(tuple(walls), w, y)
    if not alcove.contains(rs, v):
        raise InternalConsistencyError(f"Point {v} is not in the lower closure of its alcove.")
    logger.debug("Located point after %d reflections", len(steps))
    return alcove


def map_h(ctx: SubAlcoveContext, x: Sequence[object]) -> Vector:
    """The representative in D of the coset x + X′."""
    x = to_coords(x)
    if not ctx.pair.in_span(x):
        raise LatticeMembershipError("Coset representative lies outside the span of Ψ.")
    d = ctx.pair.reduce(x)
    if not ctx.in_box(d):
        raise InternalConsistencyError(f"Reduced point {d} is not in the box D.")
    return d


def map_k(ctx: SubAlcoveContext, d: Sequence[Fraction]) -> Vector:
    """d − y for the alcove w(B_f) + y whose lower closure holds d."""
    rs = ctx.rs
    alcove = locate_lower_closure(ctx, d)
    if any(alcove.y) and not lattice_membership(ctx.pair.yprime, alcove.y):
        raise InternalConsistencyError(f"Alcove translation {alcove.y} is not in Y′.")
    result = sub(to_coords(d), alcove.y)
    located = locate_lower_closure(ctx, result)
    if any(located.y) or located.w != alcove.w:
        raise InternalConsistencyError(f"Translated point {result} is not in D′.")
    logger.debug("map_k moved a point of %s by %s", rs.label, alcove.y)
    return result


@dataclass(frozen=True)
class GFTriple:
    """(Γ, Γ′, f) with rational labels."""

    gamma: RootSubset
    gamma_prime: tuple[int, ...]
    f: dict[int, Fraction]

    def to_gf_pair(self) -> GFPair:
        if any(value.denominator != 1 for value in self.f.values()):
            raise InvalidInputError("Labels are not integers; the datum is not over ℤ.")
        return validate_gf(self.gamma, {alpha: int(value) for alpha, value in self.f.items()})


def map_g(ctx: SubAlcoveContext, d: Sequence[Fraction]) -> GFTriple:
    """
    The triple with v_x = d for d ∈ D′.

    The alcove w(B_f) around 0 holding d in its lower closure fixes
    Γ′ = w(Γ′₀); Γ adds −w(θᵢ) on each nonzero component.
    """
    rs, pair = ctx.rs, ctx.pair
    d = to_coords(d)
    alcove = locate_lower_closure(ctx, d)
    if any(alcove.y):
        raise InvalidInputError(f"Point {d} is not in D′.")
    w = alcove.w
    gamma_prime = tuple(w.apply_root(a) for a in pair.simple)
    f = {alpha: rs.pair(d, alpha) for alpha in gamma_prime}
    for wall in ctx.chamber_walls:
        theta = w.apply_root(wall.root)
        m = pair.xprime[wall.component].m
        f[rs.negate(theta)] = m - rs.pair(d, theta)
    gamma = RootSubset(rs, frozenset(f))
    return GFTriple(gamma, gamma_prime, f)


def j_inverse_alcove(pair: PsiXPair) -> GFPair:
    """(Ψ, X) ↦ q(g(k(h(X))))."""
    ctx = SubAlcoveContext.of(pair)
    return map_g(ctx, map_k(ctx, map_h(ctx, pair.a))).to_gf_pair()


def j_inverse(pair: PsiXPair) -> GFPair:
    """
    j⁻¹ through both constructions.

    Raises:
        InternalConsistencyError: if they disagree.
    """
    minimal = j_inverse_minimal(pair)
    geometric = j_inverse_alcove(pair)
    if minimal != geometric:
        raise InternalConsistencyError(
            f"Inverse maps disagree: labels {minimal.f} from roots, {geometric.f} from alcoves."
        )
    return minimal

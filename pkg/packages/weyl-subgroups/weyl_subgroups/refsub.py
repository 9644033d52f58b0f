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
Reflection subgroups of the affine Weyl group W^a.

A subgroup is named either by a `GFPair` (Γ, f), an np subset Γ with labels
f: Γ → ℕ whose affine roots α + f(α)δ form its canonical simple system, or
by a `PsiXPair` (Ψ, X), a subsystem Ψ with a coset X = a + X′ of an
admissible coweight lattice, whose roots are α + nδ for α ∈ Ψ and
n ∈ ⟨α, X⟩.
"""

import itertools
import logging
import math
from collections import deque
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce

from .affine import AffRoot, ExtAffElement, Halfspace, simplex_volume
from .data_models.enums import Compatibility, ComponentKind, LatticeKind, LatticeTag
from .exceptions import (
    AmbientMismatchError,
    ContainmentError,
    InternalConsistencyError,
    InvalidInputError,
    LatticeMembershipError,
    NpViolationError,
    SignViolationError,
)
from .finsub import (
    NpComponent,
    NpDecomposition,
    RootSubset,
    component_type,
    dual_type_name,
    np_decompose,
    np_violation,
    orthogonal_components,
    simple_system_of,
    subsystem_of,
)
from .rational import (
    IntegerLattice,
    QuadVal,
    add,
    determinant,
    integer_kernel,
    lattice_index,
    rational_kernel,
    scale,
    sub,
    to_coords,
    zero,
)
from .rootsys import (
    LatticeData,
    RootSystem,
    Vector,
    coweight_basis,
    lattice_membership,
    lattices,
    project,
    weyl_group,
    weyl_subgroup,
)
from .settings import get_settings

logger = logging.getLogger(__name__)


def _coordinates_over(rs: RootSystem, basis: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """Every root of Φ_basis with its integer coordinates over the basis."""
    found: dict[int, tuple[int, ...]] = {}
    for k, b in enumerate(basis):
        unit = tuple(int(j == k) for j in range(len(basis)))
        found[b] = unit
        found[rs.negate(b)] = tuple(-x for x in unit)
    queue = deque(found)
    while queue:
        beta = queue.popleft()
        for k, gamma in enumerate(basis):
            c = rs.cartan_integer(beta, gamma)
            if not c:
                continue
            image = rs.reflection_perm(gamma)[beta]
            if image not in found:
                coords = list(found[beta])
                coords[k] -= c
                found[image] = tuple(coords)
                queue.append(image)
    return found


def chamber_root(rs: RootSystem, block: Sequence[int], *, short: bool = False) -> int:
    """
    The highest root of Φ_block with respect to the simple system `block`,
    or its highest short root when `short` is set and Φ_block has two lengths.
    """
    coords = _coordinates_over(rs, block)
    candidates = [i for i, c in coords.items() if all(x >= 0 for x in c)]
    norms = {rs.norm(i) for i in candidates}
    if short and len(norms) == 2:
        candidates = [i for i in candidates if rs.norm(i) == min(norms)]
    top = max(sum(coords[i]) for i in candidates)
    best = [i for i in candidates if sum(coords[i]) == top]
    if len(best) != 1:
        raise InternalConsistencyError(f"No unique chamber root for the simple system {tuple(block)}.")
    return best[0]


# --- (Γ, f) data -----------------------------------------------------------


@dataclass(frozen=True)
class GFComponent:
    """One component Γᵢ with its level period Kᵢ and root set Φ_{Γ′ᵢ}."""

    np: NpComponent
    period: int
    roots: frozenset[int]


@dataclass(frozen=True)
class GFPair:
    """
    An np subset Γ with labels f: Γ → ℕ that are positive on negative roots.

    `labels` is aligned with `gamma.sorted()`. Build pairs with `validate_gf`.
    """

    gamma: RootSubset
    labels: tuple[int, ...]

    @property
    def rs(self) -> RootSystem:
        return self.gamma.ambient

    @cached_property
    def f(self) -> dict[int, int]:
        return dict(zip(self.gamma.sorted(), self.labels, strict=True))

    @cached_property
    def decomposition(self) -> NpDecomposition:
        return np_decompose(self.gamma)

    @cached_property
    def _coordinates(self) -> tuple[dict[int, tuple[int, ...]], ...]:
        return tuple(_coordinates_over(self.rs, comp.gamma_prime) for comp in self.decomposition.components)

    @cached_property
    def components(self) -> tuple[GFComponent, ...]:
        result = []
        for comp, coords in zip(self.decomposition.components, self._coordinates, strict=True):
            period = sum(comp.c[g] * self.f[g] for g in comp.gamma) if comp.dependent else 0
            result.append(GFComponent(comp, period, frozenset(coords)))
        return tuple(result)

    @cached_property
    def _owner(self) -> dict[int, int]:
        return {beta: i for i, comp in enumerate(self.components) for beta in comp.roots}

    @property
    def roots(self) -> frozenset[int]:
        """Σ = Φ_{Γ′}, the finite parts of the subgroup's roots."""
        return frozenset(self._owner)

    def _component_index(self, beta: int) -> int:
        try:
            return self._owner[beta]
        except KeyError as e:
            raise InvalidInputError(f"Root {beta} does not lie in Φ_Γ′.") from e

    def component_of(self, beta: int) -> GFComponent:
        return self.components[self._component_index(beta)]

    def r(self, beta: int) -> int:
        """r_β = Σ a_{β,γ} f(γ) where β = Σ a_{β,γ} γ over Γ′."""
        i = self._component_index(beta)
        basis = self.decomposition.components[i].gamma_prime
        coords = self._coordinates[i][beta]
        return sum(a * self.f[g] for a, g in zip(coords, basis, strict=True))

    def k(self, beta: int) -> int:
        """k_{β,Γ}: 1 unless αᵢ is short and β long, then the norm ratio."""
        comp = self.component_of(beta).np
        if not comp.dependent or comp.alpha_long:
            return 1
        return int(self.rs.norm(beta) / self.rs.norm(comp.alpha))

    @property
    def simple_affine_roots(self) -> tuple[AffRoot, ...]:
        """Δ(Γ, f) = {α + f(α)δ}."""
        return tuple(AffRoot(alpha, level) for alpha, level in zip(self.gamma.sorted(), self.labels, strict=True))


def _check_labels(gamma: RootSubset, f: Mapping[int, object]) -> None:
    if set(f) != set(gamma.members):
        raise InvalidInputError(
            f"Labels are given for roots {sorted(f)} but Γ consists of roots {gamma.sorted()}."
        )
    for alpha, value in f.items():
        if isinstance(value, bool) or not isinstance(value, int | Fraction) or int(value) != value:
            raise InvalidInputError(f"Label of root {alpha} is not an integer: {value!r}.")


def validate_gf(gamma: RootSubset, f: Mapping[int, int]) -> GFPair:
    """
    Checks a (Γ, f) datum and returns it as a GFPair.

    Raises:
        NpViolationError: if two members of Γ have positive inner product.
        SignViolationError: if a label is negative, or zero on a negative root.
        InvalidInputError: if the labels do not match Γ or are not integers.
    """
    rs = gamma.ambient
    _check_labels(gamma, f)
    violation = np_violation(gamma)
    if violation is not None:
        a, b = violation
        raise NpViolationError(
            f"Roots {a} and {b} of Γ have positive inner product {rs.root_inner(a, b)}."
        )
    labels = []
    for alpha in gamma.sorted():
        value = int(f[alpha])
        if value < 0:
            raise SignViolationError(f"f({alpha}) = {value} is negative.")
        if value == 0 and not rs.is_positive(alpha):
            raise SignViolationError(f"f({alpha}) must be positive since root {alpha} is negative.")
        labels.append(value)
    pair = GFPair(gamma, tuple(labels))
    for comp in pair.components:
        if comp.np.dependent and comp.period <= 0:
            raise InternalConsistencyError(f"Component {comp.np.gamma} has period {comp.period}.")
    return pair


def fundamental_gf_pair(rs: RootSystem) -> GFPair:
    """(Γ₀, f₀): Π with the negatives of the highest roots, labelled 0 and 1."""
    members = set(rs.simple) | {rs.negate(rs.highest_root(c)) for c in range(len(rs.components))}
    labels = {i: 0 if rs.is_positive(i) else 1 for i in members}
    return validate_gf(RootSubset(rs, frozenset(members)), labels)


def is_compatible(gamma: RootSubset, f: Mapping[int, int]) -> Compatibility:
    """
    Compares the signs of dᵢ = Σ c_γ f(γ) over the dependent components.

    Labels may have any sign. With no dependent component the pair is
    compatible.
    """
    _check_labels(gamma, f)
    decomposition = np_decompose(gamma)
    sums = [sum(comp.c[g] * int(f[g]) for g in comp.gamma) for comp in decomposition.dependent_components]
    if all(d > 0 for d in sums) or all(d < 0 for d in sums):
        return Compatibility.COMPATIBLE
    if all(d != 0 for d in sums):
        return Compatibility.STRONGLY_COMPATIBLE
    return Compatibility.NEITHER


def affine_simple_system(gamma: RootSubset, f: Mapping[int, int]) -> tuple[AffRoot, ...]:
    """
    {α + f(α)δ} for labels of any sign, which is a simple system of a root
    subsystem of Φ^a exactly when (Γ, f) is compatible.

    Raises:
        InvalidInputError: if the pair is not compatible.
    """
    if is_compatible(gamma, f) != Compatibility.COMPATIBLE:
        raise InvalidInputError("The labelled set is not compatible, so it is not a simple system.")
    return tuple(AffRoot(alpha, int(f[alpha])) for alpha in gamma.sorted())


def closure_roots(rs: RootSystem, delta: Iterable[AffRoot], level_bound: int) -> frozenset[AffRoot]:
    """
    Roots with |level| ≤ level_bound of the group generated by the
    reflections in a simple system Δ of positive affine roots.

    Positive roots are reached from Δ by ascending steps s_γ(β) with
    ⟨β, γ̌⟩ < 0; these never lower the level, so pruning at the bound is exact.

    Raises:
        InvalidInputError: if a member of Δ is not a positive affine root.
    """
    delta = tuple(delta)
    for x in delta:
        if not x.is_positive(rs):
            raise InvalidInputError(f"{x.describe(rs)} is not a positive affine root.")
    positives = {x for x in delta if x.level <= level_bound}
    queue = deque(positives)
    while queue:
        beta = queue.popleft()
        for gamma in delta:
            c = rs.cartan_integer(beta.root, gamma.root)
            if c >= 0:
                continue
            image = AffRoot(rs.reflection_perm(gamma.root)[beta.root], beta.level - c * gamma.level)
            if image.level <= level_bound and image not in positives:
                positives.add(image)
                queue.append(image)
    logger.debug("Closure of %d simple roots to level %d: %d positive roots", len(delta), level_bound, len(positives))
    return frozenset(positives | {x.negate(rs) for x in positives})


def canonical_simple_system(rs: RootSystem, roots: Iterable[AffRoot]) -> tuple[AffRoot, ...]:
    """
    The inclusion-minimal set Δ′ of positive members of `roots` such that
    every positive member lies in ℕΔ′.

    Candidates are taken in increasing φ(α + nδ) = ht(α) + H·n, where H
    exceeds twice the largest height, so φ is positive on positive affine
    roots and additive.
    """
    weight = 2 * max((rs.height(i) for i in rs.positive), default=0) + 1

    def phi(v: tuple[int, ...]) -> int:
        return sum(v[:-1]) + weight * v[-1]

    positives = sorted(
        (x for x in set(roots) if x.is_positive(rs)),
        key=lambda x: (rs.height(x.root) + weight * x.level, x),
    )
    chosen: list[tuple[int, ...]] = []
    memo: dict[tuple[tuple[int, ...], int], bool] = {}

    def representable(v: tuple[int, ...], size: int) -> bool:
        if not any(v):
            return True
        if v[-1] < 0 or phi(v) <= 0:
            return False
        key = (v, size)
        if key not in memo:
            memo[key] = any(
                representable(tuple(a - b for a, b in zip(v, chosen[j], strict=True)), size)
                for j in range(size)
            )
        return memo[key]

    result = []
    for x in positives:
        v = rs.roots[x.root] + (x.level,)
        if not representable(v, len(chosen)):
            chosen.append(v)
            result.append(x)
    return tuple(sorted(result))


def roots_of_gf(pair: GFPair, level_bound: int, *, verify: bool = False) -> frozenset[AffRoot]:
    """
    The roots β + (r_β + m·Kᵢ·k_{β,Γ})δ of the subgroup with |level| ≤ level_bound.

    Independent components contribute the single level r_β. With `verify`
    the result is compared against the reflection closure of Δ(Γ, f).

    Raises:
        InternalConsistencyError: if verification fails.
    """
    result = set()
    for comp in pair.components:
        for beta in comp.roots:
            base = pair.r(beta)
            if not comp.np.dependent:
                if abs(base) <= level_bound:
                    result.add(AffRoot(beta, base))
                continue
            step = comp.period * pair.k(beta)
            low = -((level_bound + base) // step)
            high = (level_bound - base) // step
            result.update(AffRoot(beta, base + m * step) for m in range(low, high + 1))
    roots = frozenset(result)
    if verify:
        oracle = closure_roots(pair.rs, pair.simple_affine_roots, level_bound)
        if oracle != roots:
            extra = sorted(roots - oracle)[:3]
            missing = sorted(oracle - roots)[:3]
            raise InternalConsistencyError(
                f"Root formula disagrees with the reflection closure: extra {extra}, missing {missing}."
            )
    return roots


# --- alcoves, volumes and indices -------------------------------------------


@dataclass(frozen=True)
class AlcoveComponent:
    """
    The factor of C(Γ, f) in the span of Γ′ᵢ.

    A dependent component gives the simplex with the listed vertices; an
    independent one gives the cone at `apex` spanned by `rays`.
    """

    gamma: tuple[int, ...]
    apex: Vector
    vertices: tuple[Vector, ...] = ()
    rays: tuple[Vector, ...] = ()


@dataclass(frozen=True)
class GFAlcove:
    """C = {v : ⟨v, γ⟩ + f(γ) ≥ 0 for γ ∈ Γ} = C₀ ⊕ C₁ ⊕ ... ⊕ C_s."""

    walls: tuple[Halfspace, ...]
    flat: tuple[Vector, ...]
    components: tuple[AlcoveComponent, ...]

    @property
    def bounded(self) -> bool:
        return not self.flat and all(not comp.rays for comp in self.components)

    def contains(self, rs: RootSystem, v: Sequence[Fraction]) -> bool:
        return all(wall.contains(rs, v) for wall in self.walls)

    def vertices(self) -> list[Vector]:
        """Vertices of a bounded alcove: sums of one vertex per component."""
        if not self.bounded:
            raise InvalidInputError("An unbounded alcove has no vertex list.")
        points = [zero(len(self.components[0].apex))]
        for comp in self.components:
            points = [add(p, q) for p in points for q in comp.vertices]
        return points


def _orthogonal_complement(rs: RootSystem, members: Sequence[int]) -> tuple[Vector, ...]:
    if not members:
        return tuple(tuple(Fraction(int(i == j)) for j in rs.simple) for i in rs.simple)
    columns = [[rs.pair(tuple(Fraction(int(i == k)) for k in rs.simple), g) for g in members] for i in rs.simple]
    return tuple(to_coords(v) for v in rational_kernel(columns))


def alcove_of_gf(pair: GFPair) -> GFAlcove:
    """
    The closed fundamental alcove of the subgroup.

    In a dependent component the vertices are v₀ = −Σ f(α)ω_α over Γ′ᵢ and
    v₀ + (Kᵢ/c_α)ω_α; each is checked to meet all walls of Γᵢ but one.

    Raises:
        InternalConsistencyError: if a vertex fails its wall pattern.
    """
    rs = pair.rs
    walls = tuple(Halfspace.of_affroot(rs, x) for x in pair.simple_affine_roots)
    components = []
    for comp in pair.components:
        np_comp = comp.np
        coweights = coweight_basis(rs, np_comp.gamma_prime)
        apex = zero(rs.rank)
        for alpha, omega in zip(np_comp.gamma_prime, coweights, strict=True):
            apex = sub(apex, scale(pair.f[alpha], omega))
        if not np_comp.dependent:
            components.append(AlcoveComponent(np_comp.gamma, apex, rays=coweights))
            corners = [apex]
        else:
            top = rs.pair(apex, np_comp.alpha) + pair.f[np_comp.alpha]
            if top != comp.period:
                raise InternalConsistencyError(
                    f"Apex of component {np_comp.gamma} gives {top} on its affine wall, expected {comp.period}."
                )
            corners = [apex] + [
                add(apex, scale(Fraction(comp.period, np_comp.c[alpha]), omega))
                for alpha, omega in zip(np_comp.gamma_prime, coweights, strict=True)
            ]
            components.append(AlcoveComponent(np_comp.gamma, apex, vertices=tuple(corners)))
        for corner in corners:
            values = [rs.pair(corner, g) + pair.f[g] for g in np_comp.gamma]
            if min(values) < 0 or values.count(0) != len(np_comp.gamma_prime):
                raise InternalConsistencyError(f"Claimed vertex {corner} has wall values {values}.")
    flat = _orthogonal_complement(rs, pair.gamma.sorted())
    return GFAlcove(walls, flat, tuple(components))


def volume_of_gf(pair: GFPair) -> QuadVal | None:
    """
    μ(C(Γ, f)), or None when the alcove is unbounded.

    The closed formula √(f_{Γ′}⁻¹ Π 2/⟨β,β⟩) · Π Kᵢ^{rᵢ}/(rᵢ! Π c_α) is
    checked against the product of the simplex volumes of the components.

    Raises:
        InternalConsistencyError: if the two computations disagree.
    """
    rs = pair.rs
    gamma_prime = pair.decomposition.gamma_prime
    if any(not comp.np.dependent for comp in pair.components) or len(gamma_prime) != rs.rank:
        return None
    cartan = [[rs.cartan_integer(a, b) for b in gamma_prime] for a in gamma_prime]
    radicand = 1 / determinant(cartan)
    for beta in gamma_prime:
        radicand *= 2 / rs.norm(beta)
    factor = Fraction(1)
    for comp in pair.components:
        r = len(comp.np.gamma_prime)
        marks = math.prod(comp.np.c[a] for a in comp.np.gamma_prime)
        factor *= Fraction(comp.period**r, math.factorial(r) * marks)
    volume = QuadVal.sqrt(radicand) * factor
    geometric = QuadVal.of(1)
    for comp in alcove_of_gf(pair).components:
        geometric = geometric * simplex_volume(rs, comp.vertices)
    if geometric != volume:
        raise InternalConsistencyError(f"Alcove volume formula gives {volume}, simplices give {geometric}.")
    return volume


def index_of_gf(sub_pair: GFPair, super_pair: GFPair) -> int | None:
    """
    [W^a(super) : W^a(sub)] as a ratio of alcove volumes, None if infinite.

    Containment is decided by Δ(sub) ⊆ roots of super, read up to level
    max f + max K.

    Raises:
        ContainmentError: if sub is not contained in super.
        InvalidInputError: if super has an unbounded alcove and differs from sub.
        InternalConsistencyError: if the ratio is not an integer.
    """
    rs = sub_pair.rs
    if super_pair.rs != rs:
        raise AmbientMismatchError(f"Cannot compare subgroups of {rs.label} and {super_pair.rs.label}.")
    bound = max(sub_pair.labels, default=0) + max((c.period for c in super_pair.components), default=0)
    available = roots_of_gf(super_pair, bound)
    for x in sub_pair.simple_affine_roots:
        if x not in available:
            raise ContainmentError(f"{x.describe(rs)} is not a root of the larger subgroup.")
    if sub_pair == super_pair:
        return 1
    small, big = volume_of_gf(sub_pair), volume_of_gf(super_pair)
    if big is None:
        if small is not None:
            raise InternalConsistencyError("A subgroup of finite covolume lies in one of infinite covolume.")
        raise InvalidInputError("The index is only computed when the larger subgroup has a bounded alcove.")
    if small is None:
        return None
    ratio = small / big
    if not ratio.is_rational() or ratio.q.denominator != 1:
        raise InternalConsistencyError(f"Volume ratio {ratio} is not an integer.")
    return int(ratio.q)


def coset_reps(
    pair: GFPair, lattice: LatticeData, max_order: int | None = None
) -> tuple[ExtAffElement, ...]:
    """
    G = {w t_γ : γ ∈ R, w t_γ Δ(Γ, f) ⊆ Φ^a₊}, left coset representatives of
    the subgroup in W ⋉ t_R.

    w t_γ belongs to G iff ⟨α, γ⟩ ≥ −f(α) for α ∈ Γ with w(α) > 0 and
    ⟨α, γ⟩ ≥ 1 − f(α) otherwise, so γ runs over R ∩ C.

    Raises:
        InvalidInputError: if the index is infinite or R is not between Q and P.
        InternalConsistencyError: if |G| differs from the index times [R : Q].
    """
    rs = pair.rs
    index = index_of_gf(pair, fundamental_gf_pair(rs))
    if index is None:
        raise InvalidInputError("Coset representatives need a subgroup of finite index.")
    q_lattice, p_lattice, _ = lattices(rs)
    if (
        lattice.rank != rs.rank
        or not all(lattice_membership(p_lattice, b) for b in lattice.basis)
        or not all(lattice_membership(lattice, b) for b in q_lattice.basis)
    ):
        raise InvalidInputError("R must be a lattice between the coroot and coweight lattices.")
    coords = [lattice.coordinates(v) for v in alcove_of_gf(pair).vertices()]
    ranges = [
        range(math.ceil(min(c[j] for c in coords)), math.floor(max(c[j] for c in coords)) + 1)
        for j in range(rs.rank)
    ]
    group = weyl_group(rs, max_order)
    members = pair.gamma.sorted()
    reps = []
    for coefficients in itertools.product(*ranges):
        gamma = lattice.element(coefficients)
        values = {alpha: rs.pair(gamma, alpha) + pair.f[alpha] for alpha in members}
        if any(v < 0 for v in values.values()):
            continue
        reps.extend(
            ExtAffElement(w, gamma)
            for w in group
            if all(values[a] >= (0 if rs.is_positive(w.apply_root(a)) else 1) for a in members)
        )
    expected = index * lattice_index(q_lattice.basis, lattice.basis)
    if len(reps) != expected:
        raise InternalConsistencyError(f"Found {len(reps)} coset representatives, expected {expected}.")
    logger.info("Coset representatives of a subgroup of %s: %d", rs.label, len(reps))
    return tuple(sorted(reps, key=lambda g: (g.gamma, g.w.perm)))


def isomorphism_type(pair: GFPair) -> tuple["ComponentDescriptor", ...]:
    """Finite, affine or dual-affine type of each component of the subgroup."""
    rs = pair.rs
    result = []
    for comp in pair.components:
        np_comp = comp.np
        name = component_type(rs, np_comp.gamma_prime)
        if not np_comp.dependent:
            kind = ComponentKind.FINITE
        elif np_comp.alpha_long:
            kind = ComponentKind.AFFINE
        else:
            kind, name = ComponentKind.AFFINE_DUAL, dual_type_name(name)
        result.append(ComponentDescriptor(kind, name, np_comp.gamma))
    return tuple(result)


@dataclass(frozen=True)
class ComponentDescriptor:
    kind: ComponentKind
    type_name: str
    roots: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == ComponentKind.FINITE:
            return self.type_name
        if self.kind == ComponentKind.AFFINE:
            return f"affine {self.type_name}"
        return f"affine {self.type_name} (dual)"


def np_subsets(rs: RootSystem) -> Iterator[tuple[int, ...]]:
    """All np subsets of Φ as sorted index tuples, by backtracking."""
    chosen: list[int] = []

    def extend(start: int) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        for i in range(start, len(rs)):
            if all(rs.root_inner(i, j) <= 0 for j in chosen):
                chosen.append(i)
                yield from extend(i + 1)
                chosen.pop()

    yield from extend(0)


def enumerate_gf_pairs(rs: RootSystem, max_label: int) -> Iterator[GFPair]:
    """Every GF pair of Φ with labels at most max_label."""
    for members in np_subsets(rs):
        ranges = [range(0 if rs.is_positive(i) else 1, max_label + 1) for i in members]
        subset = RootSubset(rs, frozenset(members))
        for labels in itertools.product(*ranges):
            yield validate_gf(subset, dict(zip(members, labels, strict=True)))


# --- (Ψ, X) data -------------------------------------------------------------


@dataclass(frozen=True)
class Progression:
    """offset + modulus·ℤ, or the single value `offset` when modulus is 0."""

    offset: Fraction
    modulus: int = 0

    @classmethod
    def of(cls, offset: Fraction | int, modulus: int = 0) -> "Progression":
        offset, modulus = Fraction(offset), abs(int(modulus))
        if modulus:
            offset %= modulus
        return cls(offset, modulus)

    def __contains__(self, value: object) -> bool:
        value = Fraction(value)
        if not self.modulus:
            return value == self.offset
        return (value - self.offset) % self.modulus == 0

    def shifted(self, c: Fraction | int) -> "Progression":
        return Progression.of(self.offset + c, self.modulus)

    def scaled(self, c: int) -> "Progression":
        return Progression.of(c * self.offset, c * self.modulus)

    def minus(self, other: "Progression") -> "Progression":
        """{x − y : x ∈ self, y ∈ other}."""
        return Progression.of(self.offset - other.offset, math.gcd(self.modulus, other.modulus))

    def issubset(self, other: "Progression") -> bool:
        if self.offset not in other:
            return False
        if not self.modulus:
            return True
        return other.modulus != 0 and self.modulus % other.modulus == 0

    def values_within(self, bound: int) -> list[int]:
        """Integer members n with |n| ≤ bound."""
        if self.offset.denominator != 1:
            return []
        o = int(self.offset)
        if not self.modulus:
            return [o] if abs(o) <= bound else []
        m = self.modulus
        return [o + j * m for j in range(-((bound + o) // m), (bound - o) // m + 1)]

    def __str__(self) -> str:
        if not self.modulus:
            return f"{{{self.offset}}}"
        return f"{self.offset}+{self.modulus}Z"


ZFamily = dict[int, Progression]


def condition_z_violation(rs: RootSystem, family: ZFamily) -> tuple[int, int] | None:
    """The first (α, β) with Z_β − ⟨β, α̌⟩Z_α ⊄ Z_{s_α(β)}, or None."""
    for alpha, z_alpha in family.items():
        perm = rs.reflection_perm(alpha)
        for beta, z_beta in family.items():
            target = family.get(perm[beta])
            if target is None:
                return alpha, beta
            if not z_beta.minus(z_alpha.scaled(rs.cartan_integer(beta, alpha))).issubset(target):
                return alpha, beta
    return None


@dataclass(frozen=True)
class LatticeComponent:
    """One component of an admissible lattice: 0, m·P(Ψᵢ) or m·P(Ψᵢ°)."""

    kind: LatticeKind
    m: int = 0

    def __post_init__(self) -> None:
        if self.kind == LatticeKind.ZERO and self.m:
            raise InvalidInputError("A zero lattice component takes no multiplier.")
        if self.kind != LatticeKind.ZERO and self.m < 1:
            raise InvalidInputError(f"Multiplier of a {self.kind.value} component must be positive, got {self.m}.")

    def __str__(self) -> str:
        return "0" if self.kind == LatticeKind.ZERO else f"{self.m}{self.kind.value}"


@dataclass(frozen=True)
class AdmissibleLattice:
    """X′ = ⊕ X′ᵢ, components listed in the order of Ψ's components."""

    components: tuple[LatticeComponent, ...]

    def __iter__(self) -> Iterator[LatticeComponent]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> LatticeComponent:
        return self.components[i]


@dataclass(frozen=True)
class PsiXPair:
    """
    A subsystem Ψ with the coset a + X′.

    `a` is the canonical representative: its coordinates ⟨a, α⟩ against the
    simple roots of Ψ lie in [0, n_α) on nonzero components. Build pairs
    with `validate_psix`.
    """

    psi: RootSubset
    a: Vector
    xprime: AdmissibleLattice

    @property
    def rs(self) -> RootSystem:
        return self.psi.ambient

    @cached_property
    def simple(self) -> tuple[int, ...]:
        return simple_system_of(self.psi)

    @cached_property
    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(orthogonal_components(self.rs, self.simple))

    @cached_property
    def _block_roots(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(_coordinates_over(self.rs, block)) for block in self.blocks)

    def component_roots(self, i: int) -> frozenset[int]:
        return self._block_roots[i]

    def component_index(self, beta: int) -> int:
        for i, roots in enumerate(self._block_roots):
            if beta in roots:
                return i
        raise InvalidInputError(f"Root {beta} does not lie in Ψ.")

    @cached_property
    def n(self) -> dict[int, int]:
        """n_α for every α ∈ Ψ."""
        rs = self.rs
        result = {}
        for block, roots, comp in zip(self.blocks, self._block_roots, self.xprime, strict=True):
            if comp.kind == LatticeKind.ZERO:
                result.update(dict.fromkeys(roots, 0))
                continue
            norms = [rs.norm(b) for b in block]
            ratio = int(max(norms) / min(norms))
            for beta in roots:
                long = rs.norm(beta) == max(norms)
                result[beta] = comp.m * (ratio if comp.kind == LatticeKind.P_DUAL and long else 1)
        return result

    @cached_property
    def coweights(self) -> dict[int, Vector]:
        """ω′_α for α in the simple system of Ψ."""
        return dict(zip(self.simple, coweight_basis(self.rs, self.simple), strict=True))

    @cached_property
    def yprime(self) -> LatticeData:
        """Y′, spanned by n_α α̌ for simple α on nonzero components."""
        basis = tuple(scale(self.n[a], self.rs.coroot(a)) for a in self.simple if self.n[a])
        return LatticeData(basis, LatticeTag.INTERMEDIATE, self.rs.rank)

    @cached_property
    def xprime_lattice(self) -> LatticeData:
        """X′, spanned by n_α ω′_α for simple α on nonzero components."""
        basis = tuple(scale(self.n[a], self.coweights[a]) for a in self.simple if self.n[a])
        return LatticeData(basis, LatticeTag.INTERMEDIATE, self.rs.rank)

    def z(self, beta: int) -> Progression:
        """Z_β = ⟨β, a⟩ + n_β ℤ."""
        return Progression.of(self.rs.pair(self.a, beta), self.n[beta])

    def family(self) -> ZFamily:
        return {beta: self.z(beta) for beta in self.psi}

    def in_span(self, v: Sequence[Fraction]) -> bool:
        return project(self.rs, v, self.simple) == tuple(v)

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """The representative of v + X′ with ⟨·, α⟩ ∈ [0, n_α) on nonzero components."""
        total = zero(self.rs.rank)
        for alpha in self.simple:
            e = self.rs.pair(v, alpha)
            if self.n[alpha]:
                e -= self.n[alpha] * math.floor(e / self.n[alpha])
            total = add(total, scale(e, self.coweights[alpha]))
        return total

    def in_xprime(self, v: Sequence[Fraction]) -> bool:
        if not self.in_span(v):
            return False
        for alpha in self.simple:
            e = self.rs.pair(v, alpha)
            if self.n[alpha] == 0:
                if e:
                    return False
            elif (e / self.n[alpha]).denominator != 1:
                return False
        return True


def _divisibility_violation(pair: PsiXPair) -> tuple[int, int] | None:
    rs, n = pair.rs, pair.n
    for alpha in pair.psi:
        for beta in pair.psi:
            value = rs.cartan_integer(beta, alpha) * n[alpha]
            if (n[beta] == 0 and value) or (n[beta] and value % n[beta]):
                return alpha, beta
    return None


def validate_psix(
    psi: RootSubset, a: Sequence[object], xprime: AdmissibleLattice | Sequence[LatticeComponent]
) -> PsiXPair:
    """
    Checks a (Ψ, a + X′) datum and returns it with `a` reduced modulo X′.

    A P° component on a one-length component is stored as P.

    Raises:
        InvalidInputError: if Ψ is not a subsystem or X′ has the wrong number
            of components.
        LatticeMembershipError: if a is not a coweight of Ψ.
        InternalConsistencyError: if condition (Z) or divisibility fails.
    """
    rs = psi.ambient
    if subsystem_of(psi).members != psi.members:
        raise InvalidInputError("Ψ is not closed under its own reflections.")
    a = to_coords(a)
    if len(a) != rs.rank:
        raise AmbientMismatchError(f"Vector of length {len(a)} does not belong to {rs.label}.")
    simple = simple_system_of(psi)
    blocks = orthogonal_components(rs, simple)
    components = tuple(xprime)
    if len(components) != len(blocks):
        raise InvalidInputError(f"Ψ has {len(blocks)} components but X′ lists {len(components)}.")
    canonical = []
    for block, comp in zip(blocks, components, strict=True):
        if comp.kind == LatticeKind.P_DUAL and len({rs.norm(b) for b in block}) == 1:
            comp = LatticeComponent(LatticeKind.P, comp.m)
        canonical.append(comp)
    draft = PsiXPair(psi, a, AdmissibleLattice(tuple(canonical)))
    if not draft.in_span(a):
        raise LatticeMembershipError("a does not lie in the span of Ψ.")
    if any(rs.pair(a, alpha).denominator != 1 for alpha in simple):
        raise LatticeMembershipError("a is not a coweight of Ψ.")
    pair = PsiXPair(psi, draft.reduce(a), draft.xprime)
    violation = _divisibility_violation(pair)
    if violation is not None:
        raise InternalConsistencyError(f"X′ is not admissible at the roots {violation}.")
    violation = condition_z_violation(rs, pair.family())
    if violation is not None:
        raise InternalConsistencyError(f"Condition (Z) fails at the roots {violation}.")
    return pair


def roots_of_psix(pair: PsiXPair, level_bound: int) -> frozenset[AffRoot]:
    """{α + nδ : α ∈ Ψ, n ∈ Z_α, |n| ≤ level_bound}."""
    return frozenset(
        AffRoot(beta, level) for beta in pair.psi for level in pair.z(beta).values_within(level_bound)
    )


def act_on_psix(g: ExtAffElement, pair: PsiXPair) -> PsiXPair:
    """
    The datum of g·W^a(Ψ, X)·g⁻¹.

    For g = t_γ w this is Ψ′ = w(Ψ) and X″ = p_{Ψ′}(γ) + w(X).
    """
    rs = pair.rs
    image = pair.psi.image(g.w)
    simple = simple_system_of(image)
    a = add(project(rs, g.translation_part(), simple), g.w.apply(pair.a))
    inverse = g.w.inverse(rs)
    components = [
        pair.xprime[pair.component_index(inverse.apply_root(block[0]))]
        for block in orthogonal_components(rs, simple)
    ]
    return validate_psix(image, a, components)


def elements_of_psix(
    pair: PsiXPair, translation_bound: int | None = None, max_order: int | None = None
) -> tuple[ExtAffElement, ...]:
    """
    Elements t_{b − w(b) + y} w with w ∈ W_Ψ, b = a and y ∈ Y′ whose
    coordinates in the basis n_α α̌ lie in [−bound, bound].
    """
    rs = pair.rs
    bound = get_settings().translation_bound if translation_bound is None else translation_bound
    group = weyl_subgroup(rs, pair.simple, max_order)
    translations = [
        pair.yprime.element(c) for c in itertools.product(range(-bound, bound + 1), repeat=pair.yprime.rank)
    ]
    b = pair.a
    elements = {
        ExtAffElement.translate_then(rs, add(sub(b, w.apply(b)), y), w) for w in group for y in translations
    }
    return tuple(sorted(elements, key=lambda g: (g.w.perm, g.gamma)))


@dataclass(frozen=True)
class PointwiseStabilizer:
    """W_{Φ∩Ψ⊥} ⋉ t_{R∩Ψ⊥}: a simple system and a lattice basis."""

    simple: tuple[int, ...]
    lattice: LatticeData


def pointwise_stabilizer(pair: PsiXPair, lattice: LatticeData) -> PointwiseStabilizer:
    rs = pair.rs
    orthogonal = RootSubset(
        rs, frozenset(i for i in range(len(rs)) if all(rs.root_inner(i, a) == 0 for a in pair.simple))
    )
    rows = []
    for alpha in pair.simple:
        row = [rs.pair(b, alpha) for b in lattice.basis]
        denominator = reduce(math.lcm, (x.denominator for x in row), 1)
        rows.append([int(x * denominator) for x in row])
    kernel = integer_kernel(rows, lattice.rank)
    basis = tuple(lattice.element(z) for z in kernel)
    return PointwiseStabilizer(simple_system_of(orthogonal), LatticeData(basis, LatticeTag.INTERMEDIATE, rs.rank))


def centralizes(g: ExtAffElement, pair: PsiXPair) -> bool:
    """
    Whether g = w t_γ centralises W^a(Ψ, X).

    Per component either w fixes Ψᵢ with ⟨γ, α⟩ = 0, or X′ᵢ = 0, w = −1 on
    Ψᵢ and ⟨γ, α⟩ = −2⟨a, α⟩.
    """
    rs = pair.rs
    for i, comp in enumerate(pair.xprime):
        roots = pair.component_roots(i)
        if all(g.w.apply_root(b) == b and rs.pair(g.gamma, b) == 0 for b in roots):
            continue
        if comp.kind == LatticeKind.ZERO and all(
            g.w.apply_root(b) == rs.negate(b) and rs.pair(g.gamma, b) == -2 * rs.pair(pair.a, b)
            for b in roots
        ):
            continue
        return False
    return True


def normalizes(g: ExtAffElement, pair: PsiXPair) -> bool:
    """Whether t_γ w normalises W^a(Ψ, X): w(Ψ) = Ψ, w(X′) = X′, p_Ψ(γ) ∈ a − w(a) + X′."""
    rs = pair.rs
    w = g.w
    if pair.psi.image(w).members != pair.psi.members:
        return False
    if any(pair.n[w.apply_root(b)] != pair.n[b] for b in pair.psi):
        return False
    shift = project(rs, g.translation_part(), pair.simple)
    return pair.in_xprime(sub(add(shift, w.apply(pair.a)), pair.a))


def same_orbit(
    first: PsiXPair, second: PsiXPair, lattice: LatticeData, max_order: int | None = None
) -> bool:
    """
    Whether the two data lie in one orbit of W ⋉ t_R: some w ∈ W carries Ψ
    and X′ of the first onto the second with a₂ − w(a₁) ∈ p_Ψ(R) + X′.

    Raises:
        ResourceLimitError: if W cannot be enumerated.
    """
    rs = first.rs
    if second.rs != rs:
        raise AmbientMismatchError(f"Cannot compare data of {rs.label} and {second.rs.label}.")
    if len(first.psi) != len(second.psi):
        return False
    simple = second.simple
    if not simple:
        return True
    generators = [[rs.pair(r, alpha) for alpha in simple] for r in lattice.basis]
    for j, alpha in enumerate(simple):
        if second.n[alpha]:
            generators.append([Fraction(second.n[alpha] * int(k == j)) for k in range(len(simple))])
    denominator = reduce(math.lcm, (x.denominator for row in generators for x in row), 1)
    target_lattice = IntegerLattice.spanned_by(
        len(simple), ([int(x * denominator) for x in row] for row in generators)
    )
    for w in weyl_group(rs, max_order):
        if first.psi.image(w).members != second.psi.members:
            continue
        if any(second.n[w.apply_root(b)] != first.n[b] for b in first.psi):
            continue
        u = sub(second.a, w.apply(first.a))
        target = [rs.pair(u, alpha) * denominator for alpha in simple]
        if all(x.denominator == 1 for x in target) and [int(x) for x in target] in target_lattice:
            return True
    return False

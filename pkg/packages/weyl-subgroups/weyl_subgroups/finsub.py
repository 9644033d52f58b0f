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
Root subsystems of a finite root system.

Simple-subsystem and np-subset tests, decomposition of np subsets into
finite and affine components, type identification, Dynkin diagrams,
elementary extensions, classification of subsystems up to W-conjugacy and
stabilisers of np subsets.
"""

import logging
from collections import deque
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .exceptions import InternalConsistencyError, InvalidInputError, ResourceLimitError
from .rational import IntCoords, rank, rational_kernel, solve_in_basis
from .rootsys import RootSystem, WeylElement, index_of_connection, weyl_group

logger = logging.getLogger(__name__)

EMPTY_TYPE = "∅"

_BOND_TO_COXETER = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True)
class RootSubset:
    """A set of roots of an ambient system, given by root indices."""

    ambient: RootSystem
    members: frozenset[int]

    @classmethod
    def of(cls, ambient: RootSystem, members: Iterable[int]) -> "RootSubset":
        members = frozenset(members)
        bad = [i for i in members if not 0 <= i < len(ambient)]
        if bad:
            raise InvalidInputError(f"Root indices {sorted(bad)} are not roots of {ambient.label}.")
        return cls(ambient, members)

    @classmethod
    def everything(cls, ambient: RootSystem) -> "RootSubset":
        return cls(ambient, frozenset(range(len(ambient))))

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: object) -> bool:
        return i in self.members

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def coords(self) -> list[IntCoords]:
        return [self.ambient.roots[i] for i in self]

    def positive_part(self) -> tuple[int, ...]:
        return tuple(i for i in self if self.ambient.is_positive(i))

    def image(self, w: WeylElement) -> "RootSubset":
        return RootSubset(self.ambient, frozenset(w.perm[i] for i in self.members))


def is_linearly_independent(rs: RootSystem, members: Iterable[int]) -> bool:
    members = list(members)
    return rank([rs.roots[i] for i in members]) == len(members)


def is_simple_subsystem(subset: RootSubset) -> bool:
    rs = subset.ambient
    if not is_linearly_independent(rs, subset):
        return False
    return all(rs.cartan_integer(a, b) <= 0 for a in subset for b in subset if a != b)


def is_np_subset(subset: RootSubset) -> bool:
    rs = subset.ambient
    return all(rs.root_inner(a, b) <= 0 for a in subset for b in subset if a < b)


def np_violation(subset: RootSubset) -> tuple[int, int] | None:
    """The first pair of distinct members with positive inner product."""
    rs = subset.ambient
    for a in subset:
        for b in subset:
            if a < b and rs.root_inner(a, b) > 0:
                return a, b
    return None


def orthogonal_components(rs: RootSystem, members: Iterable[int]) -> list[tuple[int, ...]]:
    """Partition into mutually orthogonal indecomposable blocks, ordered by smallest index."""
    remaining = sorted(set(members))
    blocks = []
    while remaining:
        block = {remaining[0]}
        queue = deque([remaining[0]])
        while queue:
            a = queue.popleft()
            for b in remaining:
                if b not in block and rs.root_inner(a, b) != 0:
                    block.add(b)
                    queue.append(b)
        blocks.append(tuple(sorted(block)))
        remaining = [i for i in remaining if i not in block]
    return blocks


def subsystem_of(subset: RootSubset) -> RootSubset:
    """The smallest reflection-closed set of roots containing the subset."""
    rs = subset.ambient
    generators = [rs.reflection_perm(i) for i in subset]
    found = set(subset.members)
    queue = deque(found)
    while queue:
        x = queue.popleft()
        for perm in generators:
            y = perm[x]
            if y not in found:
                found.add(y)
                queue.append(y)
    return RootSubset(rs, frozenset(found))


def is_subsystem(subset: RootSubset) -> bool:
    return subsystem_of(subset).members == subset.members


def simple_system_of(psi: RootSubset) -> tuple[int, ...]:
    """
    The simple system of Ψ inside the positive system Ψ ∩ Φ₊.

    A positive root α of Ψ is simple iff s_α permutes Ψ₊ ∖ {α}.
    """
    rs = psi.ambient
    positives = set(psi.positive_part())
    simple = []
    for a in sorted(positives):
        perm = rs.reflection_perm(a)
        if all(perm[b] in positives for b in positives if b != a):
            simple.append(a)
    return tuple(simple)


def coordinates_in(rs: RootSystem, basis: Sequence[int], i: int) -> tuple[int, ...] | None:
    """Integer coordinates of root i in a simple system, or None outside its span."""
    coords = solve_in_basis([rs.roots[b] for b in basis], rs.roots[i])
    if coords is None or any(c.denominator != 1 for c in coords):
        return None
    return tuple(int(c) for c in coords)


@dataclass(frozen=True)
class NpComponent:
    """
    One indecomposable component Γᵢ of an np subset.

    For a dependent component, Γᵢ = Γ′ᵢ ∪ {αᵢ} and Σ c_γ γ = 0 with coprime
    positive c. `alpha_long` tells whether −αᵢ is the highest root of Φ_{Γ′ᵢ}
    (True) or the coroot of the highest root of its dual (False).
    """

    gamma: tuple[int, ...]
    gamma_prime: tuple[int, ...]
    alpha: int | None = None
    c: dict[int, int] | None = None
    alpha_long: bool | None = None

    @property
    def dependent(self) -> bool:
        return self.alpha is not None


@dataclass(frozen=True)
class NpDecomposition:
    components: tuple[NpComponent, ...]

    @property
    def gamma_prime(self) -> tuple[int, ...]:
        return tuple(sorted(i for comp in self.components for i in comp.gamma_prime))

    @property
    def dependent_components(self) -> tuple[NpComponent, ...]:
        return tuple(comp for comp in self.components if comp.dependent)


def _max_norm(rs: RootSystem, members: Iterable[int]) -> Fraction:
    return max(rs.norm(i) for i in members)


def _decompose_component(rs: RootSystem, block: tuple[int, ...]) -> NpComponent:
    if is_linearly_independent(rs, block):
        return NpComponent(gamma=block, gamma_prime=block)
    relations = rational_kernel([rs.roots[i] for i in block])
    if len(relations) != 1:
        raise InternalConsistencyError(f"Component {block} has {len(relations)} relations.")
    relation = relations[0]
    if relation[0] < 0:
        relation = tuple(-x for x in relation)
    if any(x <= 0 for x in relation):
        raise InternalConsistencyError(f"Relation {relation} on {block} is not positive.")
    c = dict(zip(block, relation, strict=True))
    # θ must carry coefficient 1 in the relation.
    candidates = sorted((i for i in block if c[i] == 1), key=lambda i: (rs.is_positive(i), i))
    for theta in candidates:
        rest = tuple(i for i in block if i != theta)
        if not is_linearly_independent(rs, rest):
            continue
        if theta not in subsystem_of(RootSubset(rs, frozenset(rest))):
            logger.debug("Rejected θ=%d for block %s: not in the closure of the rest", theta, block)
            continue
        alpha_long = rs.norm(theta) == _max_norm(rs, rest)
        logger.debug("Decomposed block %s with θ=%d, c=%s", block, theta, c)
        return NpComponent(gamma=block, gamma_prime=rest, alpha=theta, c=c, alpha_long=alpha_long)
    raise InternalConsistencyError(f"No distinguished root found for dependent component {block}.")


def np_decompose(subset: RootSubset) -> NpDecomposition:
    """
    Splits an np subset into orthogonal indecomposable components.

    Raises:
        InvalidInputError: if the subset is not np.
        InternalConsistencyError: if a dependent component has no valid θ.
    """
    if not is_np_subset(subset):
        raise InvalidInputError("np_decompose requires pairwise nonpositive inner products.")
    rs = subset.ambient
    components = tuple(_decompose_component(rs, block) for block in orthogonal_components(rs, subset))
    for comp in components:
        if comp.c is None:
            continue
        total = [0] * rs.rank
        for i, coefficient in comp.c.items():
            total = [t + coefficient * x for t, x in zip(total, rs.roots[i], strict=True)]
        if any(total):
            raise InternalConsistencyError(f"Relation on {comp.gamma} does not vanish.")
    return NpDecomposition(components)


def _component_type_name(rs: RootSystem, block: Sequence[int]) -> str:
    n = len(block)
    if n == 1:
        return "A1"
    bonds = {}
    degree = dict.fromkeys(block, 0)
    for x, a in enumerate(block):
        for b in block[x + 1 :]:
            m = rs.cartan_integer(a, b) * rs.cartan_integer(b, a)
            if m:
                bonds[(a, b)] = m
                degree[a] += 1
                degree[b] += 1
    multiplicities = set(bonds.values())
    if 3 in multiplicities:
        return "G2"
    if 2 in multiplicities:
        if n == 2:
            return "B2"
        a, b = next(edge for edge, m in bonds.items() if m == 2)
        if degree[a] == 2 and degree[b] == 2:
            return "F4"
        leaf, other = (a, b) if degree[a] == 1 else (b, a)
        return f"B{n}" if rs.norm(leaf) < rs.norm(other) else f"C{n}"
    branch = [a for a in block if degree[a] == 3]
    if not branch:
        return f"A{n}"
    center = branch[0]
    arms = []
    for start in (b for b in block if (min(center, b), max(center, b)) in bonds):
        length, previous, current = 1, center, start
        while True:
            nxt = [
                b
                for b in block
                if b not in (previous, current) and (min(current, b), max(current, b)) in bonds
            ]
            if not nxt:
                break
            previous, current = current, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return f"D{n}"
    if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
        return f"E{n}"
    raise InternalConsistencyError(f"Unrecognized Dynkin diagram on {tuple(block)}.")


def component_type(rs: RootSystem, block: Sequence[int]) -> str:
    """Type of the indecomposable subsystem with simple system `block`, tagged (s) if short."""
    name = _component_type_name(rs, block)
    ambient = rs.root_component[block[0]]
    if rs.has_two_lengths(ambient) and not any(rs.is_long(i) for i in block):
        name += "(s)"
    return name


def cartan_type_of(subset: RootSubset) -> str:
    """Type string of the subsystem generated by the subset, components sorted and joined by 'x'."""
    psi = subsystem_of(subset)
    simple = simple_system_of(psi)
    if not simple:
        return EMPTY_TYPE
    rs = psi.ambient
    names = sorted(component_type(rs, block) for block in orthogonal_components(rs, simple))
    return "x".join(names)


def dual_type_name(name: str) -> str:
    """Type of the dual system: swaps the B and C families."""
    core = name.removesuffix("(s)")
    family, rank_ = core[0], int(core[1:])
    if family == "B" and rank_ >= 3:
        return f"C{rank_}"
    if family == "C":
        return f"B{rank_}"
    return core


@dataclass(frozen=True)
class DynkinEdge:
    a: int
    b: int
    bonds: int
    arrow_to: int | None = None  # the shorter end, for multiple bonds


@dataclass(frozen=True)
class DynkinDiagram:
    """Nodes with norm tags and edges with bond counts; 4 bonds marks an infinite bond."""

    nodes: tuple[tuple[int, str], ...]
    edges: tuple[DynkinEdge, ...]


def dynkin_diagram(subset: RootSubset) -> DynkinDiagram:
    """
    The (possibly completed) Dynkin diagram of a set of roots.

    Raises:
        InvalidInputError: if two members make an acute angle.
    """
    if not is_np_subset(subset):
        raise InvalidInputError("Dynkin diagrams are drawn for np subsets only.")
    rs = subset.ambient
    members = subset.sorted()
    nodes = tuple((i, str(rs.norm(i))) for i in members)
    edges = []
    for x, a in enumerate(members):
        for b in members[x + 1 :]:
            bonds = rs.cartan_integer(a, b) * rs.cartan_integer(b, a)
            if not bonds:
                continue
            arrow = None
            if rs.norm(a) != rs.norm(b):
                arrow = a if rs.norm(a) < rs.norm(b) else b
            edges.append(DynkinEdge(a, b, bonds, arrow))
    return DynkinDiagram(nodes, tuple(edges))


def _root_label(rs: RootSystem, i: int) -> str:
    coords = rs.roots[i]
    return "(" + ",".join(str(c) for c in coords) + ")"


def render_diagram(rs: RootSystem, diagram: DynkinDiagram, title: str = "") -> str:
    bond_glyph = {1: "---", 2: "===", 3: "≡≡≡", 4: "<=>"}
    lines = [title] if title else []
    for i, norm in diagram.nodes:
        lines.append(f"  o{i} {_root_label(rs, i)} |α|²={norm}")
    for edge in diagram.edges:
        glyph = bond_glyph[edge.bonds]
        if edge.arrow_to == edge.b:
            glyph += ">"
        elif edge.arrow_to == edge.a:
            glyph = "<" + glyph
        lines.append(f"  o{edge.a} {glyph} o{edge.b}")
    return "\n".join(lines)


def completed_diagrams(rs: RootSystem) -> list[tuple[str, DynkinDiagram]]:
    """Diagram of Φ, then per component the completions by −ω and −ω*."""
    result = [(f"{rs.label}", dynkin_diagram(RootSubset(rs, frozenset(rs.simple))))]
    for c, block in enumerate(rs.components):
        thetas = [("highest root", rs.highest_root(c))]
        if rs.has_two_lengths(c):
            thetas.append(("highest short root", rs.highest_short_root(c)))
        for label, theta in thetas:
            members = frozenset(block) | {rs.negate(theta)}
            result.append((f"component {c} completed by −{label}", dynkin_diagram(RootSubset(rs, members))))
    return result


def coxeter_matrix(subset: RootSubset) -> tuple[tuple[int | None, ...], ...]:
    """
    Coxeter matrix of the reflections in an np subset; None marks m = ∞.

    Members are taken in index order.
    """
    rs = subset.ambient
    members = subset.sorted()
    rows = []
    for a in members:
        row = []
        for b in members:
            if a == b:
                row.append(1)
                continue
            product = rs.cartan_integer(a, b) * rs.cartan_integer(b, a)
            row.append(_BOND_TO_COXETER.get(product))
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class ElementaryExtension:
    subsystem: RootSubset
    description: str
    theta: int
    deleted: int


def elementary_extensions(
    psi: RootSubset, simple: Sequence[int] | None = None
) -> list[ElementaryExtension]:
    """
    Subsystems of Ψ of which Ψ is an elementary extension.

    For each component Σ of the simple system and each chamber root θ of Σ,
    deletes one node of Σ from the completed system Π ∪ {−θ}.
    """
    rs = psi.ambient
    simple = tuple(simple) if simple is not None else simple_system_of(psi)
    results = []
    for block in orthogonal_components(rs, simple):
        sigma = subsystem_of(RootSubset(rs, frozenset(block)))
        positives = set(sigma.positive_part())
        heights = {
            i: sum(coordinates_in(rs, block, i)) for i in positives
        }
        top = max(heights.values())
        omega = next(i for i, h in heights.items() if h == top)
        max_norm = _max_norm(rs, block)
        short = [i for i in positives if rs.norm(i) != max_norm]
        thetas = [("highest root", omega)]
        if short:
            top_short = max(heights[i] for i in short)
            thetas.append(("highest short root", next(i for i in short if heights[i] == top_short)))
        for label, theta in thetas:
            for deleted in block:
                members = (set(simple) - {deleted}) | {rs.negate(theta)}
                extension = subsystem_of(RootSubset(rs, frozenset(members)))
                smaller = subsystem_of(RootSubset(rs, frozenset(set(simple) - {deleted})))
                if not smaller.members < extension.members:
                    raise InternalConsistencyError(
                        f"Completion by −{label} did not enlarge the deleted diagram."
                    )
                results.append(
                    ElementaryExtension(
                        extension,
                        f"delete root {deleted} from completion of {component_type(rs, block)} by −{label}",
                        theta,
                        deleted,
                    )
                )
    return results


def ascending_step(psi: RootSubset) -> tuple[RootSubset, str]:
    """
    A subsystem Ψ̂ with Ψ ⊊ Ψ̂ in which Ψ is parabolic or of which Ψ̂ is an
    elementary extension. Returns Ψ̂ and "parabolic" or "elementary".
    """
    rs = psi.ambient
    outside = [i for i in range(len(rs)) if i not in psi]
    if not outside:
        raise InvalidInputError("Ψ is the whole root system; nothing to ascend to.")
    simple = simple_system_of(psi)
    alpha = outside[0]
    # Move α into the negative closed chamber of Ψ.
    moved = True
    while moved:
        moved = False
        for g in simple:
            if rs.root_inner(alpha, g) > 0:
                alpha = rs.reflection_perm(g)[alpha]
                moved = True
    extended = tuple(sorted(set(simple) | {alpha}))
    if is_linearly_independent(rs, extended):
        result = subsystem_of(RootSubset(rs, frozenset(extended)))
        kind = "parabolic"
    else:
        decomposition = np_decompose(RootSubset(rs, frozenset(extended)))
        comp = next(c for c in decomposition.components if alpha in c.gamma)
        kept = set(extended) - {comp.alpha} if comp.dependent else set(extended)
        result = subsystem_of(RootSubset(rs, frozenset(kept)))
        kind = "elementary"
    if not psi.members < result.members:
        raise InternalConsistencyError("Ascending step did not enlarge the subsystem.")
    return result, kind


def is_closed(psi: RootSubset) -> bool:
    """True iff α, β ∈ Ψ and α + β ∈ Φ imply α + β ∈ Ψ."""
    rs = psi.ambient
    members = psi.sorted()
    for x, a in enumerate(members):
        for b in members[x:]:
            total = tuple(p + q for p, q in zip(rs.roots[a], rs.roots[b], strict=True))
            k = rs.index_of(total)
            if k is not None and k not in psi.members:
                return False
    return True


def is_dual_closed(psi: RootSubset) -> bool:
    """Closedness of Ψ̌ in Φ̌."""
    return is_closed(RootSubset(psi.ambient.dual, psi.members))


@dataclass
class SubsystemClass:
    """A W-conjugacy class of root subsystems."""

    representative: RootSubset
    type_name: str
    closed: bool
    dual_closed: bool
    maximal: bool = False

    @property
    def size(self) -> int:
        return len(self.representative)


@dataclass
class Classification:
    rs: RootSystem
    classes: list[SubsystemClass]
    fingerprint_only: bool = False
    certified: bool = False
    notes: list[str] = field(default_factory=list)


class _ConjugacyIndex:
    """Deduplicates subsystems up to W-conjugacy, or by fingerprint when W is too large."""

    def __init__(self, rs: RootSystem, max_order: int | None, allow_fingerprint: bool) -> None:
        self.rs = rs
        self.fingerprint_only = False
        self.group: tuple[WeylElement, ...] = ()
        try:
            self.group = weyl_group(rs, max_order)
        except ResourceLimitError:
            if not allow_fingerprint:
                raise
            logger.warning("W(%s) exceeds the cap; classifying by fingerprints only", rs.label)
            self.fingerprint_only = True
        self._keys: dict[frozenset[int], object] = {}

    def key(self, psi: RootSubset) -> object:
        cached = self._keys.get(psi.members)
        if cached is not None:
            return cached
        if self.fingerprint_only:
            norms = tuple(sorted(self.rs.norm(i) for i in psi))
            key = (cartan_type_of(psi), norms)
        else:
            members = list(psi.members)
            key = min(tuple(sorted(w.perm[i] for i in members)) for w in self.group)
        self._keys[psi.members] = key
        return key

    def conjugate_into(self, small: RootSubset, big: RootSubset) -> bool:
        """Whether some w(small) is contained in big."""
        if self.fingerprint_only:
            raise InvalidInputError("Inclusion up to conjugacy needs the Weyl group.")
        members = list(small.members)
        return any(all(w.perm[i] in big.members for i in members) for w in self.group)


def _diagram_moves(psi: RootSubset) -> Iterator[RootSubset]:
    rs = psi.ambient
    simple = simple_system_of(psi)
    for deleted in simple:
        yield subsystem_of(RootSubset(rs, frozenset(set(simple) - {deleted})))
    for extension in elementary_extensions(psi, simple):
        yield extension.subsystem


def _reflection_closed_moves(psi: RootSubset) -> Iterator[RootSubset]:
    rs = psi.ambient
    for beta in rs.positive:
        if beta not in psi:
            yield subsystem_of(RootSubset(rs, psi.members | {beta}))


def _fixpoint(start: RootSubset, moves, index: _ConjugacyIndex) -> dict[object, RootSubset]:
    found = {index.key(start): start}
    queue = deque([start])
    while queue:
        psi = queue.popleft()
        for candidate in moves(psi):
            key = index.key(candidate)
            if key not in found:
                found[key] = candidate
                queue.append(candidate)
    return found


def enumerate_subsystems_oracle(
    rs: RootSystem, max_order: int | None = None
) -> list[RootSubset]:
    """All reflection-closed subsets up to conjugacy, grown from ∅ one root at a time."""
    index = _ConjugacyIndex(rs, max_order, allow_fingerprint=False)
    found = _fixpoint(RootSubset(rs, frozenset()), _reflection_closed_moves, index)
    return sorted(found.values(), key=lambda s: (len(s), cartan_type_of(s), s.sorted()))


def enumerate_subsystems(
    rs: RootSystem,
    max_order: int | None = None,
    *,
    allow_fingerprint: bool = False,
    certify: bool = True,
) -> Classification:
    """
    Conjugacy classes of root subsystems obtained from Φ by node deletion
    and by completion followed by deletion.

    When W is enumerable the result is certified against the brute-force
    oracle and maximal proper classes are marked.

    Raises:
        ResourceLimitError: if W is too large and fingerprints are not allowed.
        InternalConsistencyError: if the oracle disagrees.
    """
    index = _ConjugacyIndex(rs, max_order, allow_fingerprint)
    found = _fixpoint(RootSubset.everything(rs), _diagram_moves, index)
    reps = sorted(found.values(), key=lambda s: (len(s), cartan_type_of(s), s.sorted()))
    classes = [SubsystemClass(s, cartan_type_of(s), is_closed(s), is_dual_closed(s)) for s in reps]
    result = Classification(rs, classes, fingerprint_only=index.fingerprint_only)
    if index.fingerprint_only:
        result.notes.append("classes distinguished by type and norm fingerprints only")
        return result

    full = len(rs)
    for cls in classes:
        if cls.size == full:
            continue
        cls.maximal = not any(
            other.size > cls.size
            and other.size < full
            and index.conjugate_into(cls.representative, other.representative)
            for other in classes
        )
    if certify:
        oracle = enumerate_subsystems_oracle(rs, max_order)
        ours = sorted(c.type_name for c in classes)
        theirs = sorted(cartan_type_of(s) for s in oracle)
        if ours != theirs or {index.key(c.representative) for c in classes} != {
            index.key(s) for s in oracle
        }:
            raise InternalConsistencyError(
                f"Diagram classification of {rs.label} disagrees with the closure oracle: {ours} vs {theirs}."
            )
        result.certified = True
    logger.info("Classified subsystems of %s: %d classes", rs.label, len(classes))
    return result


def _check_completed_simple_system(rs: RootSystem, gamma: RootSubset) -> None:
    if len(rs.components) != 1:
        raise InvalidInputError("The np stabiliser is defined for indecomposable systems.")
    simple = frozenset(rs.simple)
    allowed = {
        simple | {rs.negate(rs.highest_root(0))},
        simple | {rs.negate(rs.highest_short_root(0))},
    }
    if gamma.members not in allowed:
        raise InvalidInputError("Expected Π together with the negative of a chamber root.")


def np_set_stabilizer(gamma: RootSubset, max_order: int | None = None) -> tuple[WeylElement, ...]:
    """Brute force {w ∈ W : w(Γ) = Γ} for any set of roots."""
    return tuple(w for w in weyl_group(gamma.ambient, max_order) if gamma.image(w).members == gamma.members)


def np_stabilizer(gamma: RootSubset, max_order: int | None = None) -> tuple[WeylElement, ...]:
    """
    Setwise stabiliser of Γ = Π ∪ {−θ}; its order is the index of connection.

    Raises:
        InvalidInputError: if Γ is not of that form or Φ is decomposable.
    """
    rs = gamma.ambient
    _check_completed_simple_system(rs, gamma)
    stabilizer = np_set_stabilizer(gamma, max_order)
    f = index_of_connection(rs)
    if len(stabilizer) != f:
        raise InternalConsistencyError(
            f"Stabiliser of the completed simple system of {rs.label} has order {len(stabilizer)}, expected {f}."
        )
    return stabilizer

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
Conversion between library objects and their JSON documents.
"""

import json
import logging
from collections.abc import Iterable, Sequence
from fractions import Fraction
from typing import TypeVar

from pydantic import BaseModel, ValidationError

from .affine import AffRoot, ExtAffElement
from .data_models.schemas import (
    AffRootDocument,
    AlcoveComponentDocument,
    AlcoveDocument,
    ClassificationDocument,
    ComponentTypeDocument,
    ElementDocument,
    ElementsDocument,
    GFPairDocument,
    IndexDocument,
    LatticeComponentDocument,
    PsiXPairDocument,
    RootsDocument,
    StabilizerDocument,
    SubsystemClassDocument,
    TypeDocument,
    VolumeDocument,
    WallDocument,
)
from .exceptions import InvalidInputError
from .finsub import Classification, RootSubset, subsystem_of
from .rational import QuadVal, format_fraction, to_coords
from .refsub import (
    ComponentDescriptor,
    GFAlcove,
    GFPair,
    LatticeComponent,
    PointwiseStabilizer,
    PsiXPair,
    validate_gf,
    validate_psix,
)
from .rootsys import RootSystem, build_root_system

logger = logging.getLogger(__name__)

M = TypeVar("M", bound=BaseModel)

INFINITE = "infinite"


def dump_document(document: BaseModel) -> str:
    """Deterministic JSON: aliases, sorted keys, two-space indent."""
    payload = document.model_dump(mode="json", by_alias=True)
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)


def parse_document(text: str, model: type[M]) -> M:
    """
    Raises:
        InvalidInputError: if the text is not valid JSON for the model.
    """
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise InvalidInputError(f"Invalid {model.__name__}: {e.errors()[0]['msg']}") from e


def fraction_strings(v: Iterable[Fraction]) -> list[str]:
    return [format_fraction(Fraction(x)) for x in v]


def root_coords(rs: RootSystem, roots: Iterable[int]) -> list[list[int]]:
    return [list(rs.roots[i]) for i in roots]


def root_indices(rs: RootSystem, coords: Sequence[Sequence[int]]) -> list[int]:
    """
    Raises:
        InvalidInputError: if a vector is not a root or appears twice.
    """
    indices = []
    for v in coords:
        i = rs.index_of(v)
        if i is None:
            raise InvalidInputError(f"{list(v)} is not a root of {rs.label}.")
        if i in indices:
            raise InvalidInputError(f"Root {list(v)} is listed twice.")
        indices.append(i)
    return indices


def parse_gf(document: GFPairDocument) -> GFPair:
    rs = build_root_system(document.type)
    indices = root_indices(rs, document.gamma)
    return validate_gf(RootSubset(rs, frozenset(indices)), dict(zip(indices, document.f, strict=True)))


def gf_document(pair: GFPair) -> GFPairDocument:
    rs = pair.rs
    return GFPairDocument(type=rs.label, gamma=root_coords(rs, pair.gamma.sorted()), f=list(pair.labels))


def parse_psix(document: PsiXPairDocument) -> PsiXPair:
    rs = build_root_system(document.type)
    psi = subsystem_of(RootSubset(rs, frozenset(root_indices(rs, document.psi))))
    components = [LatticeComponent(c.kind, c.m) for c in document.xprime]
    return validate_psix(psi, to_coords(document.a), components)


def psix_document(pair: PsiXPair) -> PsiXPairDocument:
    rs = pair.rs
    return PsiXPairDocument(
        type=rs.label,
        psi=root_coords(rs, pair.simple),
        a=fraction_strings(pair.a),
        xprime=[LatticeComponentDocument(kind=c.kind, m=c.m) for c in pair.xprime],
    )


def parse_datum(text: str) -> GFPair | PsiXPair:
    """A GF pair when the document has "gamma", a (Ψ, X) pair when it has "psi"."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidInputError(f"Input is not JSON: {e.msg}.") from e
    if not isinstance(raw, dict):
        raise InvalidInputError("Expected a JSON object.")
    if "gamma" in raw:
        return parse_gf(parse_document(text, GFPairDocument))
    if "psi" in raw:
        return parse_psix(parse_document(text, PsiXPairDocument))
    raise InvalidInputError('Expected a document with a "gamma" or a "psi" field.')


def roots_document(rs: RootSystem, roots: Iterable[AffRoot], level_bound: int) -> RootsDocument:
    ordered = sorted(roots, key=lambda x: (x.level, rs.roots[x.root]))
    return RootsDocument(
        type=rs.label,
        level_bound=level_bound,
        roots=[AffRootDocument(root=list(rs.roots[x.root]), level=x.level) for x in ordered],
    )


def alcove_document(rs: RootSystem, alcove: GFAlcove) -> AlcoveDocument:
    return AlcoveDocument(
        type=rs.label,
        walls=[
            WallDocument(normal=fraction_strings(w.normal), constant=format_fraction(w.constant), strict=w.strict)
            for w in alcove.walls
        ],
        flat=[fraction_strings(v) for v in alcove.flat],
        components=[
            AlcoveComponentDocument(
                gamma=root_coords(rs, comp.gamma),
                apex=fraction_strings(comp.apex),
                vertices=[fraction_strings(v) for v in comp.vertices],
                rays=[fraction_strings(v) for v in comp.rays],
            )
            for comp in alcove.components
        ],
    )


def volume_document(rs: RootSystem, volume: QuadVal | None) -> VolumeDocument:
    return VolumeDocument(type=rs.label, volume=INFINITE if volume is None else str(volume))


def index_document(rs: RootSystem, index: int | None) -> IndexDocument:
    return IndexDocument(type=rs.label, index=INFINITE if index is None else index)


def elements_document(rs: RootSystem, elements: Iterable[ExtAffElement]) -> ElementsDocument:
    return ElementsDocument(
        type=rs.label,
        elements=[
            ElementDocument(
                w=root_coords(rs, (g.w.apply_root(j) for j in rs.simple)),
                gamma=fraction_strings(g.gamma),
            )
            for g in elements
        ],
    )


def type_document(rs: RootSystem, descriptors: Iterable[ComponentDescriptor]) -> TypeDocument:
    return TypeDocument(
        type=rs.label,
        components=[
            ComponentTypeDocument(kind=d.kind, type_name=d.type_name, gamma=root_coords(rs, d.roots))
            for d in descriptors
        ],
    )


def stabilizer_document(rs: RootSystem, stabilizer: PointwiseStabilizer) -> StabilizerDocument:
    return StabilizerDocument(
        type=rs.label,
        simple=root_coords(rs, stabilizer.simple),
        lattice=[fraction_strings(v) for v in stabilizer.lattice.basis],
    )


def classification_document(classification: Classification) -> ClassificationDocument:
    rs = classification.rs
    return ClassificationDocument(
        type=rs.label,
        classes=[
            SubsystemClassDocument(
                type_name=c.type_name,
                size=c.size,
                closed=c.closed,
                dual_closed=c.dual_closed,
                maximal=c.maximal,
                representative=root_coords(rs, c.representative.sorted()),
            )
            for c in classification.classes
        ],
        fingerprint_only=classification.fingerprint_only,
        certified=classification.certified,
        notes=list(classification.notes),
    )

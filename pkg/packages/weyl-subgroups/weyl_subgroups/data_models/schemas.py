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
JSON documents read and written by the command line, schema version 1.

Roots are given by their integer coordinates in the simple roots. Rational
numbers are written as "num/den" strings; inputs also accept integers and
plain integer strings.
"""

from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, ValidationInfo, field_validator

from .enums import ComponentKind, Direction, LatticeKind
from .reports import CyclicReport, DescentReport, RealizationReport

SCHEMA_VERSION = 1

Rational = str | int


class Document(BaseModel):
    """Base of every top-level document."""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: Literal[1] = Field(default=SCHEMA_VERSION, alias="schema")
    type: str = Field(description="Cartan type of the ambient root system, e.g. 'B2' or 'A1xA1'")


class GFPairDocument(Document):
    gamma: list[list[int]] = Field(description="Members of Γ")
    f: list[int] = Field(description="Labels f(γ), aligned with gamma")

    @field_validator("f")
    @classmethod
    def check_length(cls, v: list[int], info: ValidationInfo) -> list[int]:
        gamma = info.data.get("gamma")
        if gamma is not None and len(gamma) != len(v):
            raise ValueError(f"gamma has {len(gamma)} members but f has {len(v)} labels")
        return v


class LatticeComponentDocument(BaseModel):
    kind: LatticeKind
    m: int = Field(default=0, ge=0, description="Multiplier; 0 for the zero lattice")


class PsiXPairDocument(Document):
    psi: list[list[int]] = Field(description="Roots generating Ψ; output lists its simple system")
    a: list[Rational] = Field(description="Coset representative in simple-root coordinates")
    xprime: list[LatticeComponentDocument] = Field(
        description="One entry per component of Ψ, in the order of its simple system"
    )


class AffRootDocument(BaseModel):
    root: list[int]
    level: int


class RootsDocument(Document):
    level_bound: int
    roots: list[AffRootDocument]


class WallDocument(BaseModel):
    normal: list[str]
    constant: str
    strict: bool


class AlcoveComponentDocument(BaseModel):
    gamma: list[list[int]]
    apex: list[str]
    vertices: list[list[str]] = Field(default_factory=list)
    rays: list[list[str]] = Field(default_factory=list)


class AlcoveDocument(Document):
    walls: list[WallDocument]
    flat: list[list[str]] = Field(description="Basis of the subspace orthogonal to Γ")
    components: list[AlcoveComponentDocument]


class VolumeDocument(Document):
    volume: str = Field(description="'q*sqrt(r)' or 'infinite'")


class IndexDocument(Document):
    index: int | Literal["infinite"]


class ElementDocument(BaseModel):
    """w·t_γ, with w given by the images of the simple roots."""

    w: list[list[int]]
    gamma: list[str]


class ElementsDocument(Document):
    elements: list[ElementDocument]


class ComponentTypeDocument(BaseModel):
    kind: ComponentKind
    type_name: str
    gamma: list[list[int]]


class TypeDocument(Document):
    components: list[ComponentTypeDocument]


class StabilizerDocument(Document):
    simple: list[list[int]] = Field(description="Simple system of the roots orthogonal to Ψ")
    lattice: list[list[str]] = Field(description="Basis of R ∩ Ψ⊥")


class SubsystemClassDocument(BaseModel):
    type_name: str
    size: int
    closed: bool
    dual_closed: bool
    maximal: bool
    representative: list[list[int]]


class ClassificationDocument(Document):
    classes: list[SubsystemClassDocument]
    fingerprint_only: bool = False
    certified: bool = False
    notes: list[str] = Field(default_factory=list)


class BijectionDocument(Document):
    direction: Direction
    gf: GFPairDocument
    psix: PsiXPairDocument


class IdentityDocument(Document):
    descent: DescentReport
    cyclic: CyclicReport | None = None
    realization: list[RealizationReport] = Field(default_factory=list)

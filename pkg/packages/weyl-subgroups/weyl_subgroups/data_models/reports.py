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
Structured reports produced by the identity checks.
"""

from pydantic import BaseModel, ConfigDict, Field

from .enums import LatticeKind


class IdentityCheck(BaseModel):
    """One evaluation of an identity at a single M."""

    model_config = ConfigDict(populate_by_name=True)

    m: int = Field(alias="M", description="The argument M")
    lhs: str = Field(description="Left hand side, the weighted partition sum, as an exact 'num/den' string")
    rhs: int = Field(description="Right hand side, the closed form")
    passed: bool = Field(alias="pass", description="Whether both sides agree")


class DescentReport(BaseModel):
    """Descent statistics of Π ∪ {−θ} with the identity checks built on them."""

    type: str = Field(description="Cartan type of the root system")
    lattice: LatticeKind = Field(description="P for the highest root, Pdual for the highest short root")
    gamma: list[list[int]] = Field(description="Members of Γ in simple-root coordinates")
    c: list[int] = Field(description="Coefficients of the relation on Γ, aligned with gamma")
    h: int = Field(description="Sum of the coefficients c")
    d: list[int] = Field(description="d_0, ..., d_h")
    f_phi: int = Field(description="Index of connection of the root system")
    checks: list[IdentityCheck] = Field(default_factory=list)
    symmetric: bool = Field(description="Whether d_i = d_{h-i} for all i")
    strictly_unimodal: bool = Field(
        description="Whether d_1 < ... < d_{floor(h/2)}; reported only"
    )


class CyclicReport(BaseModel):
    """Cyclic descents over S_{n+1} and the binomial identity they satisfy."""

    n: int
    d: list[int] = Field(description="Number of permutations with i cyclic descents, i = 0..n+1")
    checks: list[IdentityCheck] = Field(default_factory=list)
    matches_descent_stats: bool = Field(
        description="Whether d agrees with the descent statistics of A_n"
    )


class RealizationReport(BaseModel):
    """Three counts of the subgroups attached to (Φ, X′) with X′ = m·P or m·P°."""

    type: str
    lattice: LatticeKind
    m: int
    box_count: int = Field(description="Number of coweights in the box D")
    formula_count: str = Field(description="Weighted descent sum at M = m, as an exact 'num/den' string")
    distinct_pairs: int = Field(description="Number of distinct (Γ, f) reached from D")
    agrees: bool = Field(description="Whether the three counts coincide")

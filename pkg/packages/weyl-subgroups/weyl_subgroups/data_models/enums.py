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
Enums for data modeling.
Contains enums shared by the library, its JSON documents and the CLI.
"""

from enum import Enum


class OutputFormat(str, Enum):
    """How CLI commands render their results."""

    TABLE = "table"
    JSON = "json"


class LatticeKind(str, Enum):
    """Kind of one component of an admissible coweight lattice."""

    ZERO = "zero"
    P = "P"
    P_DUAL = "Pdual"


class LatticeTag(str, Enum):
    """Tag carried by a lattice between the coroot and coweight lattices."""

    Q_COROOT = "Q_coroot"
    P_COWEIGHT = "P_coweight"
    INTERMEDIATE = "intermediate"


class Compatibility(str, Enum):
    """Result of the compatibility test on an np subset with integer labels."""

    COMPATIBLE = "compatible"
    STRONGLY_COMPATIBLE = "strongly_compatible"
    NEITHER = "neither"


class Convention(str, Enum):
    """Identification of the linear translations t_γ with point translations."""

    LINEAR = "linear"  # t_γ ↔ τ_{-γ}
    COSET = "coset"  # t_γ ↔ τ_γ


class ComponentKind(str, Enum):
    """Isomorphism kind of one component of a reflection subgroup."""

    FINITE = "finite"
    AFFINE = "affine"
    AFFINE_DUAL = "affine_dual"


class SubgroupAction(str, Enum):
    """Actions offered by the `subgroup` CLI command."""

    ROOTS = "roots"
    ALCOVE = "alcove"
    VOLUME = "volume"
    INDEX = "index"
    COSETS = "cosets"
    ELEMENTS = "elements"
    TYPE = "type"
    STABILIZER = "stabilizer"


class Direction(str, Enum):
    """Direction of the bijection between the two parameterisations."""

    FORWARD = "forward"
    INVERSE = "inverse"

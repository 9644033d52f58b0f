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
Pydantic settings for configuring the toolkit.
"""

from pydantic import Field
from pydantic_settings import BaseSettings

from .enums import OutputFormat

_MODEL_CONFIG = {"env_file": ".env", "extra": "ignore"}


class ToolkitSettings(BaseSettings):
    """Enumeration caps, level bounds and output defaults."""

    model_config = _MODEL_CONFIG

    level_bound: int = Field(
        default=6,
        gt=0,
        alias="WS_LEVEL_BOUND",
        description="Default bound on |n| when listing affine roots α + nδ",
    )
    max_weyl_order: int = Field(
        default=1_000_000,
        gt=0,
        alias="WS_MAX_WEYL_ORDER",
        description="Largest Weyl group order that may be enumerated element by element",
    )
    output_format: OutputFormat = Field(
        default=OutputFormat.TABLE,
        alias="WS_OUTPUT_FORMAT",
        description="Default rendering of CLI results",
    )
    max_cyclic_rank: int = Field(
        default=6,
        gt=0,
        alias="WS_MAX_CYCLIC_RANK",
        description="Largest n for the brute-force sweep over the symmetric group S_{n+1}",
    )
    translation_bound: int = Field(
        default=1,
        ge=0,
        alias="WS_TRANSLATION_BOUND",
        description="Bound on translation coefficients when listing subgroup elements",
    )

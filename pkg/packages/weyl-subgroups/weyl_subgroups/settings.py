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
Settings module for the toolkit.
"""

from .data_models.settings import ToolkitSettings


def get_settings(**overrides: object) -> ToolkitSettings:
    """
    Get toolkit settings from environment variables.

    Automatically loads from .env file if present. Keyword overrides take
    precedence over the environment and are given by field alias
    (for example ``WS_LEVEL_BOUND=4``).

    Returns:
        ToolkitSettings object containing the configuration

    Raises:
        pydantic.ValidationError: If a configured value is out of range
    """
    return ToolkitSettings(**overrides)


def default_max_weyl_order() -> int:
    """The configured cap on Weyl group enumeration."""
    return get_settings().max_weyl_order

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


class _ErrorStrMixin:
    """A mixin to provide a descriptive __str__ representation for exceptions."""

    def __str__(self) -> str:
        """Returns a string representation of the exception."""
        message = self.args[0] if self.args else ""
        # Prepend the class name to the message.
        return f"{self.__class__.__name__}: {message}"


class InvalidInputError(_ErrorStrMixin, ValueError):
    """Raised when an input is rejected: bad types, data or preconditions."""


class CartanTypeError(InvalidInputError):
    """Raised when a Cartan type string or (family, rank) pair is invalid."""


class AmbientMismatchError(InvalidInputError):
    """Raised when objects from different root systems are combined."""


class NpViolationError(InvalidInputError):
    """Raised when two distinct members of a root set have positive inner product."""


class SignViolationError(InvalidInputError):
    """Raised when a label map breaks the sign rule of a canonical datum."""


class LatticeMembershipError(InvalidInputError):
    """Raised when a vector is not in the lattice or span it is required to lie in."""


class ContainmentError(InvalidInputError):
    """Raised when a claimed subgroup containment does not hold."""


class InternalConsistencyError(_ErrorStrMixin, Exception):
    """Raised when a mathematical consistency check fails. Always a bug."""


class ResourceLimitError(_ErrorStrMixin, Exception):
    """Raised when an enumeration would exceed its configured cap."""

    def __init__(self, message: str, cap: int, requested: int | None = None) -> None:
        super().__init__(message)
        self.cap = cap
        self.requested = requested

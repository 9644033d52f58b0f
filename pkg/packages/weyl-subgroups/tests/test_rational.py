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
from fractions import Fraction

import pytest
from weyl_subgroups.exceptions import InvalidInputError
from weyl_subgroups.rational import (
    IntegerLattice,
    QuadVal,
    determinant,
    format_fraction,
    integer_kernel,
    lattice_index,
    primitive_integer_vector,
    rational_kernel,
    solve_in_basis,
    squarefree_split,
    to_fraction,
)


class TestToFraction:
    """Tests for parsing exact rationals."""

    @pytest.mark.parametrize(
        ("value", "expected"),
        [(3, Fraction(3)), ("-2", Fraction(-2)), ("3/6", Fraction(1, 2)), (Fraction(2, 3), Fraction(2, 3))],
    )
    def test_accepts(self, value, expected):
        assert to_fraction(value) == expected

    @pytest.mark.parametrize("value", ["1/0", "abc", 0.5, True, None])
    def test_rejects(self, value):
        with pytest.raises(InvalidInputError):
            to_fraction(value)

    def test_format_is_num_over_den(self):
        assert format_fraction(Fraction(4)) == "4/1"
        assert format_fraction(Fraction(-1, 3)) == "-1/3"


class TestLinearAlgebra:
    """Tests for the exact linear algebra helpers."""

    def test_determinant(self):
        assert determinant([[2, -1], [-1, 2]]) == 3
        assert determinant([]) == 1

    def test_solve_in_basis(self):
        assert solve_in_basis([[1, 0], [1, 1]], [3, 2]) == (Fraction(1), Fraction(2))
        assert solve_in_basis([[1, 0, 0]], [0, 1, 0]) is None

    def test_primitive_integer_vector(self):
        assert primitive_integer_vector([Fraction(1, 2), Fraction(-3, 4)]) == (2, -3)
        assert primitive_integer_vector([0, 0]) == (0, 0)

    def test_rational_kernel(self):
        kernel = rational_kernel([[1, 0], [0, 1], [1, 1]])
        assert len(kernel) == 1
        assert kernel[0] in {(1, 1, -1), (-1, -1, 1)}

    def test_integer_kernel(self):
        kernel = integer_kernel([[2, 4]], 2)
        assert len(kernel) == 1
        a, b = kernel[0]
        assert 2 * a + 4 * b == 0
        assert abs(a) == 2
        assert abs(b) == 1

    def test_lattice_index(self):
        sub = [[Fraction(2), Fraction(0)], [Fraction(0), Fraction(3)]]
        sup = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        assert lattice_index(sub, sup) == 6
        with pytest.raises(InvalidInputError):
            lattice_index(sup, sub)


class TestIntegerLattice:
    """Tests for membership in integer sublattices."""

    def test_membership(self):
        lattice = IntegerLattice.spanned_by(2, [[2, 0], [1, 1]])
        assert lattice.rank == 2
        assert (1, 1) in lattice
        assert (3, 1) in lattice
        assert (1, 0) not in lattice

    def test_dependent_vectors_do_not_grow_rank(self):
        lattice = IntegerLattice.spanned_by(3, [[2, 0, 0], [3, 0, 0]])
        assert lattice.rank == 1
        assert (1, 0, 0) in lattice


class TestQuadVal:
    """Tests for exact values q·√r."""

    def test_squarefree_split(self):
        assert squarefree_split(12) == (2, 3)
        assert squarefree_split(1) == (1, 1)

    def test_sqrt_normalizes(self):
        assert QuadVal.sqrt(8) == QuadVal(Fraction(2), 2)
        assert QuadVal.sqrt(Fraction(1, 2)) == QuadVal(Fraction(1, 2), 2)
        assert QuadVal.sqrt(4).to_fraction() == 2

    def test_arithmetic(self):
        half_root_two = QuadVal.of(Fraction(1, 2), 2)
        assert str(half_root_two) == "1/2*sqrt(2)"
        assert half_root_two * QuadVal.sqrt(2) == QuadVal.of(1)
        assert (QuadVal.sqrt(3) / 6) == QuadVal.of(Fraction(1, 6), 3)
        assert half_root_two.square() == Fraction(1, 2)
        assert QuadVal.sqrt(2) < QuadVal.sqrt(3)

    def test_rejects_negative(self):
        with pytest.raises(InvalidInputError):
            QuadVal.sqrt(-1)
        with pytest.raises(InvalidInputError, match="irrational"):
            QuadVal.sqrt(2).to_fraction()

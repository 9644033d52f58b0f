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
import dataclasses

import pytest
from weyl_subgroups.data_models.enums import LatticeKind
from weyl_subgroups.exceptions import InvalidInputError, ResourceLimitError
from weyl_subgroups.identities import (
    count_realization,
    cyclic_descents,
    descent_report,
    descent_stats,
    is_strictly_unimodal,
    partition_p,
    type_a_cyclic,
    verify_identity,
)
from weyl_subgroups.rootsys import build_root_system


class TestDescentStats:
    """Tests for descent statistics over W."""

    @pytest.mark.parametrize(
        ("label", "lattice", "d"),
        [
            ("A1", LatticeKind.P, (0, 2, 0)),
            ("A2", LatticeKind.P, (0, 3, 3, 0)),
            ("B2", LatticeKind.P, (0, 2, 4, 2, 0)),
            ("B2", LatticeKind.P_DUAL, (0, 4, 4, 0)),
        ],
    )
    def test_counts(self, label, lattice, d):
        profile = descent_stats(build_root_system(label), lattice)
        assert profile.d == d
        assert profile.h == len(d) - 1

    def test_rejects_reducible(self):
        with pytest.raises(InvalidInputError, match="irreducible"):
            descent_stats(build_root_system("A1xA1"))

    def test_rejects_zero_lattice(self):
        with pytest.raises(InvalidInputError):
            descent_stats(build_root_system("A2"), LatticeKind.ZERO)

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            descent_stats(build_root_system("A3"), max_order=10)


class TestIdentity:
    """Tests for the weighted partition identity."""

    def test_partition_p(self):
        profile = descent_stats(build_root_system("A2"))
        assert [partition_p(profile, m) for m in range(-1, 4)] == [0, 1, 3, 6, 10]

    @pytest.mark.parametrize(
        ("label", "lattice"),
        [("A2", LatticeKind.P), ("B2", LatticeKind.P), ("B2", LatticeKind.P_DUAL), ("G2", LatticeKind.P_DUAL)],
    )
    def test_identity_holds(self, label, lattice):
        checks = verify_identity(descent_stats(build_root_system(label), lattice), range(1, 8))
        assert all(check.passed for check in checks)

    def test_a2_value(self):
        (check,) = verify_identity(descent_stats(build_root_system("A2")), [3])
        assert check.lhs == "9/1"
        assert check.rhs == 9

    def test_fractional_lhs_is_reported_exactly(self):
        profile = descent_stats(build_root_system("A2"))
        broken = dataclasses.replace(profile, d=(0, 1, 3, 0), partitions={})
        (check,) = verify_identity(broken, [1])
        assert check.lhs == "1/3"
        assert check.rhs == 1
        assert not check.passed

    def test_short_root_rhs(self):
        profile = descent_stats(build_root_system("B2"), LatticeKind.P_DUAL)
        assert profile.rhs(3) == 18

    def test_report(self):
        report = descent_report(descent_stats(build_root_system("B2")), range(1, 4))
        assert report.symmetric
        assert report.strictly_unimodal
        assert report.c == [1, 2, 1]
        assert report.f_phi == 2
        assert len(report.checks) == 3

    def test_unimodality(self):
        assert is_strictly_unimodal([0, 1, 3, 5, 3, 1, 0])
        assert not is_strictly_unimodal([0, 3, 3, 4, 3, 3, 0])


class TestCyclic:
    """Tests for cyclic descents of permutations."""

    def test_cyclic_descents(self):
        assert cyclic_descents(1) == [0, 2, 0]
        assert cyclic_descents(2) == [0, 3, 3, 0]

    def test_report_matches_descent_stats(self):
        report = type_a_cyclic(3, range(1, 6), rs=build_root_system("A3"))
        assert report.matches_descent_stats
        assert all(check.passed for check in report.checks)
        assert sum(report.d) == 24

    def test_rank_cap(self):
        with pytest.raises(ResourceLimitError):
            type_a_cyclic(4, [1], max_rank=3)


class TestRealization:
    """Tests for the three-way count of subgroups."""

    @pytest.mark.parametrize(
        ("label", "lattice", "m", "count"),
        [("A1", LatticeKind.P, 2, 2), ("A2", LatticeKind.P, 2, 4), ("B2", LatticeKind.P_DUAL, 1, 2)],
    )
    def test_counts_agree(self, label, lattice, m, count):
        report = count_realization(build_root_system(label), lattice, m)
        assert report.box_count == count
        assert report.formula_count == f"{count}/1"
        assert report.distinct_pairs == count
        assert report.agrees

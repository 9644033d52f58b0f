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
import pytest
from weyl_subgroups.exceptions import InvalidInputError, ResourceLimitError
from weyl_subgroups.finsub import (
    EMPTY_TYPE,
    RootSubset,
    ascending_step,
    cartan_type_of,
    completed_diagrams,
    coxeter_matrix,
    dual_type_name,
    elementary_extensions,
    enumerate_subsystems,
    is_closed,
    is_dual_closed,
    is_np_subset,
    is_simple_subsystem,
    np_decompose,
    np_stabilizer,
    np_violation,
    render_diagram,
    simple_system_of,
    subsystem_of,
)
from weyl_subgroups.rational import rank
from weyl_subgroups.rootsys import build_root_system


def _subset(label, members):
    rs = build_root_system(label)
    return RootSubset.of(rs, members)


class TestSubsets:
    """Tests for closures, simple systems and the np condition."""

    def test_closure_of_simple_roots_is_everything(self):
        psi = subsystem_of(_subset("B2", [0, 1]))
        assert len(psi) == 8
        assert simple_system_of(psi) == (0, 1)

    def test_short_orthogonal_pair(self):
        rs = build_root_system("B2")
        short_pair = subsystem_of(RootSubset.of(rs, [1, rs.highest_short_root(0)]))
        assert len(short_pair) == 4
        assert cartan_type_of(short_pair) == "A1(s)xA1(s)"
        assert not is_closed(short_pair)
        assert is_dual_closed(short_pair)

    def test_long_orthogonal_pair(self):
        rs = build_root_system("B2")
        long_pair = subsystem_of(RootSubset.of(rs, [0, rs.highest_root(0)]))
        assert cartan_type_of(long_pair) == "A1xA1"
        assert is_closed(long_pair)
        assert not is_dual_closed(long_pair)

    def test_empty_type(self):
        assert cartan_type_of(_subset("A2", [])) == EMPTY_TYPE

    def test_rejects_unknown_index(self):
        with pytest.raises(InvalidInputError, match="not roots"):
            _subset("A1", [7])

    def test_np_violation(self):
        assert np_violation(_subset("B2", [0, 2])) == (0, 2)
        assert np_violation(_subset("B2", [0, 1])) is None

    def test_np_subset(self):
        rs = build_root_system("B2")
        assert not is_np_subset(RootSubset.of(rs, [0, 2]))
        assert is_np_subset(RootSubset.of(rs, [0, 1, rs.negate(3)]))
        assert is_np_subset(RootSubset.of(rs, []))

    def test_simple_subsystem(self):
        rs = build_root_system("G2")
        assert is_simple_subsystem(RootSubset.of(rs, [0, 1]))
        assert is_simple_subsystem(RootSubset.of(rs, [0, rs.index_of((1, 1))]))
        assert not is_simple_subsystem(RootSubset.of(rs, [0, rs.index_of((2, 1))]))
        assert not is_simple_subsystem(RootSubset.of(rs, [0, 1, rs.index_of((1, 1))]))

    def test_dual_type_name(self):
        assert dual_type_name("B3") == "C3"
        assert dual_type_name("C4(s)") == "B4"
        assert dual_type_name("B2") == "B2"
        assert dual_type_name("G2") == "G2"


class TestNpDecompose:
    """Tests for splitting np subsets into components."""

    def test_completed_a2(self):
        rs = build_root_system("A2")
        theta = rs.highest_root(0)
        decomposition = np_decompose(RootSubset.of(rs, [0, 1, rs.negate(theta)]))
        (component,) = decomposition.components
        assert component.dependent
        assert component.alpha == rs.negate(theta)
        assert component.gamma_prime == (0, 1)
        assert component.c == {0: 1, 1: 1, rs.negate(theta): 1}
        assert component.alpha_long

    def test_independent_components(self):
        rs = build_root_system("A1xA1")
        decomposition = np_decompose(RootSubset.of(rs, [0, 1]))
        assert len(decomposition.components) == 2
        assert not decomposition.dependent_components
        assert decomposition.gamma_prime == (0, 1)

    def test_rejects_acute_pair(self):
        with pytest.raises(InvalidInputError):
            np_decompose(_subset("A2", [0, 2]))

    def test_stabilizer_order_is_index_of_connection(self):
        rs = build_root_system("A2")
        gamma = RootSubset.of(rs, [0, 1, rs.negate(rs.highest_root(0))])
        assert len(np_stabilizer(gamma)) == 3

    def test_stabilizer_rejects_other_sets(self):
        with pytest.raises(InvalidInputError):
            np_stabilizer(_subset("A2", [0, 1]))


class TestDiagrams:
    """Tests for Dynkin and Coxeter data."""

    def test_coxeter_matrix(self):
        assert coxeter_matrix(_subset("B2", [0, 1])) == ((1, 4), (4, 1))
        assert coxeter_matrix(_subset("A1", [0, 1])) == ((1, None), (None, 1))

    def test_completed_diagrams(self):
        assert len(completed_diagrams(build_root_system("A2"))) == 2
        assert len(completed_diagrams(build_root_system("B2"))) == 3

    def test_render(self):
        rs = build_root_system("B2")
        title, diagram = completed_diagrams(rs)[0]
        text = render_diagram(rs, diagram, title)
        assert text.splitlines()[0] == "B2"
        assert "o0 (1,0)" in text
        assert "===" in text


class TestEnumerateSubsystems:
    """Tests for the classification of subsystems up to conjugacy."""

    def test_a2(self):
        classification = enumerate_subsystems(build_root_system("A2"))
        assert classification.certified
        assert [c.type_name for c in classification.classes] == [EMPTY_TYPE, "A1", "A2"]
        assert [c.maximal for c in classification.classes] == [False, True, False]

    def test_b2(self):
        classification = enumerate_subsystems(build_root_system("B2"))
        assert [c.type_name for c in classification.classes] == [
            EMPTY_TYPE,
            "A1",
            "A1(s)",
            "A1(s)xA1(s)",
            "A1xA1",
            "B2",
        ]
        assert [c.size for c in classification.classes] == [0, 2, 2, 4, 4, 8]
        assert [c.closed for c in classification.classes] == [True, True, True, False, True, True]
        assert [c.maximal for c in classification.classes] == [False, False, False, True, True, False]

    def test_a3_class_count(self):
        classification = enumerate_subsystems(build_root_system("A3"))
        assert len(classification.classes) == 5

    def test_cap_without_fingerprints(self):
        with pytest.raises(ResourceLimitError):
            enumerate_subsystems(build_root_system("A3"), max_order=10)

    def test_fingerprint_fallback(self):
        classification = enumerate_subsystems(build_root_system("A3"), max_order=10, allow_fingerprint=True)
        assert classification.fingerprint_only
        assert not classification.certified
        assert len(classification.classes) == 5
        assert classification.notes

    @pytest.mark.parametrize(
        ("label", "count"),
        [
            ("A1", 2),
            ("A2", 3),
            ("A3", 5),
            ("A4", 7),
            ("B2", 6),
            ("B3", 13),
            ("B4", None),
            ("C3", 13),
            ("C4", None),
            ("D4", 12),
            ("F4", 37),
            ("G2", 7),
        ],
    )
    def test_maximal_classes_are_closed_or_dual_closed(self, label, count):
        classification = enumerate_subsystems(build_root_system(label))
        assert classification.certified
        if count is not None:
            assert len(classification.classes) == count
        maximal = [c for c in classification.classes if c.maximal]
        assert maximal
        for cls in maximal:
            assert cls.closed or cls.dual_closed, cls.type_name


class TestAscending:
    """Tests for elementary extensions and the ascending walk."""

    def test_elementary_extensions_of_b2(self):
        rs = build_root_system("B2")
        extensions = elementary_extensions(RootSubset.everything(rs))
        assert sorted(len(e.subsystem) for e in extensions) == [4, 4, 8, 8]
        types = {cartan_type_of(e.subsystem) for e in extensions}
        assert {"A1xA1", "A1(s)xA1(s)"} <= types
        assert all(e.deleted in rs.simple for e in extensions)

    @pytest.mark.parametrize("label", ["B2", "G2"])
    def test_walk_from_empty_reaches_everything(self, label):
        rs = build_root_system(label)
        psi = RootSubset.of(rs, [])
        kinds = []
        while len(psi) < len(rs):
            before = rank([rs.roots[i] for i in psi])
            result, kind = ascending_step(psi)
            after = rank([rs.roots[i] for i in result])
            assert psi.members < result.members
            assert after == (before + 1 if kind == "parabolic" else before)
            kinds.append(kind)
            psi = result
        assert kinds[0] == "parabolic"
        assert set(kinds) <= {"parabolic", "elementary"}
        assert rank([rs.roots[i] for i in psi]) == rs.rank

    def test_step_from_everything_fails(self):
        with pytest.raises(InvalidInputError, match="whole root system"):
            ascending_step(RootSubset.everything(build_root_system("A2")))

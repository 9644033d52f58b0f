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
from weyl_subgroups.affine import AffRoot, ExtAffElement
from weyl_subgroups.data_models.enums import Compatibility, ComponentKind, LatticeKind
from weyl_subgroups.exceptions import (
    ContainmentError,
    InvalidInputError,
    LatticeMembershipError,
    NpViolationError,
    SignViolationError,
)
from weyl_subgroups.finsub import RootSubset
from weyl_subgroups.refsub import (
    LatticeComponent,
    Progression,
    act_on_psix,
    affine_simple_system,
    alcove_of_gf,
    canonical_simple_system,
    centralizes,
    chamber_root,
    closure_roots,
    condition_z_violation,
    coset_reps,
    elements_of_psix,
    enumerate_gf_pairs,
    fundamental_gf_pair,
    index_of_gf,
    is_compatible,
    isomorphism_type,
    normalizes,
    np_subsets,
    pointwise_stabilizer,
    roots_of_gf,
    roots_of_psix,
    same_orbit,
    validate_gf,
    validate_psix,
    volume_of_gf,
)
from weyl_subgroups.rootsys import WeylElement, build_root_system, lattices


def _gf(label, labels):
    """A GF pair from {root index: label}."""
    rs = build_root_system(label)
    return validate_gf(RootSubset.of(rs, labels), labels)


def _psix(label, members, a, components):
    rs = build_root_system(label)
    return validate_psix(RootSubset.of(rs, members), a, components)


class TestValidateGf:
    """Tests for checking (Γ, f) data."""

    def test_fundamental_pair(self):
        pair = fundamental_gf_pair(build_root_system("A2"))
        assert pair.gamma.sorted() == (0, 1, 5)
        assert pair.labels == (0, 0, 1)
        (component,) = pair.components
        assert component.period == 1
        assert len(pair.roots) == 6

    def test_rejects_acute_pair(self):
        with pytest.raises(NpViolationError):
            _gf("B2", {0: 0, 2: 0})

    def test_rejects_zero_label_on_negative_root(self):
        with pytest.raises(SignViolationError, match="negative"):
            _gf("A1", {1: 0})

    def test_rejects_negative_label(self):
        with pytest.raises(SignViolationError):
            _gf("A1", {0: -1})

    def test_rejects_mismatched_labels(self):
        rs = build_root_system("A1")
        with pytest.raises(InvalidInputError, match="Labels are given"):
            validate_gf(RootSubset.of(rs, [0, 1]), {0: 0})

    def test_rejects_non_integer_label(self):
        with pytest.raises(InvalidInputError, match="not an integer"):
            _gf("A1", {0: Fraction(1, 2)})

    def test_r_and_k(self):
        rs = build_root_system("B2")
        theta_short = rs.highest_short_root(0)
        pair = _gf("B2", {0: 1, 1: 0, rs.negate(theta_short): 1})
        assert pair.components[0].period == 2
        assert pair.r(theta_short) == 1
        # long roots of a component completed by a short root step by k = 2
        assert pair.k(0) == 2
        assert pair.k(1) == 1


class TestCompatibility:
    """Tests for labelled sets with labels of any sign."""

    def test_compatible(self):
        rs = build_root_system("A1")
        gamma = RootSubset.of(rs, [0, 1])
        assert is_compatible(gamma, {0: 1, 1: -2}) == Compatibility.COMPATIBLE
        assert affine_simple_system(gamma, {0: 1, 1: -2}) == (AffRoot(0, 1), AffRoot(1, -2))

    def test_strongly_compatible_and_neither(self):
        rs = build_root_system("A1xA1")
        gamma = RootSubset.of(rs, [0, 1, 2, 3])
        assert is_compatible(gamma, {0: 1, 2: 0, 1: -1, 3: 0}) == Compatibility.STRONGLY_COMPATIBLE
        assert is_compatible(gamma, {0: 1, 2: -1, 1: 1, 3: 0}) == Compatibility.NEITHER
        with pytest.raises(InvalidInputError, match="not compatible"):
            affine_simple_system(gamma, {0: 1, 2: 0, 1: -1, 3: 0})


class TestRoots:
    """Tests for the roots of a GF pair."""

    def test_fundamental_a1(self):
        pair = fundamental_gf_pair(build_root_system("A1"))
        roots = roots_of_gf(pair, 1, verify=True)
        assert len(roots) == 6

    def test_index_two_subgroup_a1(self):
        roots = roots_of_gf(_gf("A1", {0: 1, 1: 1}), 3, verify=True)
        assert roots == {AffRoot(0, n) for n in (-3, -1, 1, 3)} | {AffRoot(1, n) for n in (-3, -1, 1, 3)}

    @pytest.mark.parametrize("label", ["A1", "A2", "B2", "G2"])
    def test_formula_matches_closure(self, label):
        rs = build_root_system(label)
        for pair in enumerate_gf_pairs(rs, 3):
            roots = roots_of_gf(pair, 6, verify=True)
            assert set(pair.simple_affine_roots) <= roots
            assert all(x.negate(rs) in roots for x in roots)

    def test_short_completion_b2(self):
        rs = build_root_system("B2")
        theta_short = rs.highest_short_root(0)
        pair = _gf("B2", {0: 0, 1: 0, rs.negate(theta_short): 1})
        roots = roots_of_gf(pair, 2, verify=True)
        assert AffRoot(0, 1) not in roots
        assert AffRoot(0, 2) in roots
        assert AffRoot(1, 1) in roots

    def test_independent_component(self):
        roots = roots_of_gf(_gf("A1", {0: 2}), 5)
        assert roots == {AffRoot(0, 2), AffRoot(1, -2)}

    def test_closure_rejects_negative(self):
        rs = build_root_system("A1")
        with pytest.raises(InvalidInputError, match="not a positive affine root"):
            closure_roots(rs, [AffRoot(1, 0)], 2)

    def test_canonical_simple_system(self):
        rs = build_root_system("A2")
        pair = fundamental_gf_pair(rs)
        assert canonical_simple_system(rs, roots_of_gf(pair, 2)) == pair.simple_affine_roots

    def test_chamber_root(self):
        rs = build_root_system("B2")
        assert chamber_root(rs, (0, 1)) == rs.highest_root(0)
        assert chamber_root(rs, (0, 1), short=True) == rs.highest_short_root(0)


class TestAlcovesAndIndices:
    """Tests for alcoves, volumes, indices and coset representatives."""

    def test_volumes(self):
        assert str(volume_of_gf(fundamental_gf_pair(build_root_system("A1")))) == "1/2*sqrt(2)"
        assert str(volume_of_gf(fundamental_gf_pair(build_root_system("A2")))) == "1/6*sqrt(3)"
        assert str(volume_of_gf(_gf("A1", {0: 1, 1: 1}))) == "1*sqrt(2)"

    def test_alcove_vertices(self):
        alcove = alcove_of_gf(_gf("A1", {0: 1, 1: 1}))
        assert alcove.bounded
        assert sorted(alcove.vertices()) == [(Fraction(-1, 2),), (Fraction(1, 2),)]

    def test_unbounded(self):
        pair = _gf("A1", {0: 0})
        alcove = alcove_of_gf(pair)
        assert not alcove.bounded
        assert alcove.components[0].rays == ((Fraction(1, 2),),)
        assert volume_of_gf(pair) is None
        assert index_of_gf(pair, fundamental_gf_pair(pair.rs)) is None
        with pytest.raises(InvalidInputError):
            alcove.vertices()

    def test_flat_directions(self):
        rs = build_root_system("A2")
        alcove = alcove_of_gf(_gf("A2", {0: 0}))
        assert len(alcove.flat) == 1
        (direction,) = alcove.flat
        assert rs.pair(direction, 0) == 0

    @pytest.mark.parametrize(
        ("label", "labels", "index"),
        [("A1", {0: 1, 1: 1}, 2), ("A1", {0: 0, 1: 3}, 3), ("A2", {0: 1, 1: 0, 5: 1}, 4)],
    )
    def test_index(self, label, labels, index):
        pair = _gf(label, labels)
        assert index_of_gf(pair, fundamental_gf_pair(pair.rs)) == index

    def test_index_of_itself(self):
        pair = _gf("A1", {0: 1, 1: 1})
        assert index_of_gf(pair, pair) == 1

    def test_index_between_subgroups(self):
        assert index_of_gf(_gf("A1", {0: 1, 1: 3}), _gf("A1", {0: 1, 1: 1})) == 2

    def test_containment_error(self):
        with pytest.raises(ContainmentError):
            index_of_gf(_gf("A1", {0: 0, 1: 2}), _gf("A1", {0: 1, 1: 1}))

    def test_coset_reps(self):
        rs = build_root_system("A1")
        q_lattice, p_lattice, _ = lattices(rs)
        assert len(coset_reps(fundamental_gf_pair(rs), p_lattice)) == 2
        assert len(coset_reps(_gf("A1", {0: 1, 1: 1}), q_lattice)) == 2
        assert len(coset_reps(_gf("A1", {0: 1, 1: 1}), p_lattice)) == 4

    def test_coset_reps_need_finite_index(self):
        rs = build_root_system("A1")
        with pytest.raises(InvalidInputError, match="finite index"):
            coset_reps(_gf("A1", {0: 0}), lattices(rs)[0])

    @pytest.mark.parametrize(("label", "max_label"), [("A1", 4), ("A2", 3)])
    def test_coset_counts_match_volume_ratio(self, label, max_label):
        rs = build_root_system(label)
        q_lattice, p_lattice, connection = lattices(rs)
        fundamental = fundamental_gf_pair(rs)
        checked = 0
        for pair in enumerate_gf_pairs(rs, max_label):
            index = index_of_gf(pair, fundamental)
            if index is None or index > 4:
                continue
            ratio = (volume_of_gf(pair) / volume_of_gf(fundamental)).to_fraction()
            q_reps = coset_reps(pair, q_lattice)
            assert len(q_reps) == index == ratio
            assert len(coset_reps(pair, p_lattice)) == connection * len(q_reps)
            checked += 1
        assert checked > 1


class TestIsomorphismType:
    """Tests for the type of each component."""

    def test_fundamental_b2(self):
        (component,) = isomorphism_type(fundamental_gf_pair(build_root_system("B2")))
        assert component.kind == ComponentKind.AFFINE
        assert str(component) == "affine B2"

    def test_short_completion_is_dual(self):
        rs = build_root_system("B2")
        pair = _gf("B2", {0: 0, 1: 0, rs.negate(rs.highest_short_root(0)): 1})
        (component,) = isomorphism_type(pair)
        assert component.kind == ComponentKind.AFFINE_DUAL
        assert str(component) == "affine B2 (dual)"

    def test_finite(self):
        (component,) = isomorphism_type(_gf("A2", {0: 0, 1: 2}))
        assert component.kind == ComponentKind.FINITE
        assert component.type_name == "A2"


class TestEnumeration:
    """Tests for np subsets and GF pair enumeration."""

    def test_a1(self):
        rs = build_root_system("A1")
        assert sorted(np_subsets(rs)) == [(), (0,), (0, 1), (1,)]
        assert len(list(enumerate_gf_pairs(rs, 1))) == 6


class TestProgression:
    """Tests for arithmetic progressions."""

    def test_membership(self):
        z = Progression.of(5, 2)
        assert z.offset == 1
        assert 3 in z
        assert 4 not in z
        assert 2 in Progression.of(2)
        assert str(z) == "1+2Z"
        assert str(Progression.of(-1)) == "{-1}"

    def test_minus_and_subset(self):
        z = Progression.of(1, 4).minus(Progression.of(0, 6))
        assert z == Progression.of(1, 2)
        assert Progression.of(1, 4).issubset(Progression.of(1, 2))
        assert not Progression.of(1, 2).issubset(Progression.of(1, 4))
        assert Progression.of(3).issubset(Progression.of(1, 2))

    def test_values_within(self):
        assert Progression.of(1, 2).values_within(3) == [-3, -1, 1, 3]
        assert Progression.of(Fraction(1, 2)).values_within(3) == []

    def test_condition_z(self):
        rs = build_root_system("A1")
        assert condition_z_violation(rs, {0: Progression.of(1), 1: Progression.of(-1)}) is None
        assert condition_z_violation(rs, {0: Progression.of(1), 1: Progression.of(1)}) == (0, 0)


class TestValidatePsix:
    """Tests for checking (Ψ, X) data."""

    def test_reduces_a(self):
        pair = _psix("A1", [0, 1], [Fraction(3, 2)], [LatticeComponent(LatticeKind.P, 2)])
        assert pair.a == (Fraction(1, 2),)
        assert pair.n == {0: 2, 1: 2}

    def test_one_length_dual_is_stored_as_p(self):
        pair = _psix("A2", range(6), [0, 0], [LatticeComponent(LatticeKind.P_DUAL, 1)])
        assert pair.xprime[0].kind == LatticeKind.P

    def test_dual_multiplies_long_roots(self):
        pair = _psix("B2", range(8), [0, 0], [LatticeComponent(LatticeKind.P_DUAL, 1)])
        assert pair.n[0] == 2
        assert pair.n[1] == 1

    def test_rejects_non_coweight(self):
        with pytest.raises(LatticeMembershipError, match="coweight"):
            _psix("A2", range(6), [Fraction(1, 3), 0], [LatticeComponent(LatticeKind.P, 1)])

    def test_rejects_point_outside_span(self):
        rs = build_root_system("A1xA1")
        with pytest.raises(LatticeMembershipError, match="span"):
            validate_psix(RootSubset.of(rs, [0, 2]), [0, 1], [LatticeComponent(LatticeKind.P, 1)])

    def test_rejects_wrong_component_count(self):
        with pytest.raises(InvalidInputError, match="components"):
            _psix("A1", [0, 1], [0], [])

    def test_rejects_non_subsystem(self):
        with pytest.raises(InvalidInputError, match="closed"):
            _psix("A2", [0, 1], [0, 0], [LatticeComponent(LatticeKind.P, 1)])

    def test_zero_component_needs_no_multiplier(self):
        with pytest.raises(InvalidInputError):
            LatticeComponent(LatticeKind.ZERO, 2)
        with pytest.raises(InvalidInputError):
            LatticeComponent(LatticeKind.P, 0)


class TestPsixOperations:
    """Tests for the operations on (Ψ, X) data."""

    def test_roots(self):
        pair = _psix("A1", [0, 1], [0], [LatticeComponent(LatticeKind.P, 2)])
        assert roots_of_psix(pair, 2) == {AffRoot(b, n) for b in (0, 1) for n in (-2, 0, 2)}
        assert roots_of_psix(pair, 2) == roots_of_gf(_gf("A1", {0: 0, 1: 2}), 2)

    def test_roots_of_zero_component(self):
        pair = _psix("A1", [0, 1], [Fraction(1, 2)], [LatticeComponent(LatticeKind.ZERO)])
        assert roots_of_psix(pair, 1) == {AffRoot(0, 1), AffRoot(1, -1)}

    def test_elements(self):
        pair = _psix("A1", [0, 1], [0], [LatticeComponent(LatticeKind.P, 1)])
        elements = elements_of_psix(pair, translation_bound=1)
        assert len(elements) == 6
        assert ExtAffElement.identity(pair.rs) in elements

    def test_act_by_translation(self):
        pair = _psix("A1", [0, 1], [0], [LatticeComponent(LatticeKind.P, 2)])
        g = ExtAffElement.translation(pair.rs, (Fraction(1, 2),))
        moved = act_on_psix(g, pair)
        assert moved.a == (Fraction(1, 2),)
        assert moved.xprime == pair.xprime

    def test_pointwise_stabilizer(self):
        rs = build_root_system("A1xA1")
        pair = validate_psix(RootSubset.of(rs, [0, 2]), [0, 0], [LatticeComponent(LatticeKind.P, 1)])
        stabilizer = pointwise_stabilizer(pair, lattices(rs)[0])
        assert stabilizer.simple == (1,)
        assert stabilizer.lattice.basis == ((Fraction(0), Fraction(1)),)

    def test_centralizes(self):
        rs = build_root_system("A1xA1")
        zero_pair = validate_psix(RootSubset.of(rs, [0, 2]), [0, 0], [LatticeComponent(LatticeKind.ZERO)])
        p_pair = validate_psix(RootSubset.of(rs, [0, 2]), [0, 0], [LatticeComponent(LatticeKind.P, 1)])
        s_alpha = ExtAffElement.of_weyl(rs, WeylElement.reflection(rs, 0))
        s_beta = ExtAffElement.of_weyl(rs, WeylElement.reflection(rs, 1))
        assert centralizes(s_beta, p_pair)
        assert centralizes(s_alpha, zero_pair)
        assert not centralizes(s_alpha, p_pair)

    def test_normalizes(self):
        rs = build_root_system("A1")
        shift = ExtAffElement.translation(rs, (Fraction(1, 2),))
        assert normalizes(shift, _psix("A1", [0, 1], [0], [LatticeComponent(LatticeKind.P, 1)]))
        assert not normalizes(shift, _psix("A1", [0, 1], [0], [LatticeComponent(LatticeKind.P, 2)]))

    def test_same_orbit(self):
        rs = build_root_system("A1")
        q_lattice, p_lattice, _ = lattices(rs)
        first = _psix("A1", [0, 1], [0], [LatticeComponent(LatticeKind.P, 2)])
        second = _psix("A1", [0, 1], [Fraction(1, 2)], [LatticeComponent(LatticeKind.P, 2)])
        assert not same_orbit(first, second, q_lattice)
        assert same_orbit(first, second, p_lattice)
        assert same_orbit(first, first, q_lattice)

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
from weyl_subgroups.affine import (
    AffRoot,
    ExtAffElement,
    Halfspace,
    act_on_affroot,
    affine_reflection_apply,
    affroots_within,
    alcove_volume,
    fundamental_alcove,
    fundamental_volume_oracle,
    is_special_point,
    point_action,
    reflection_of_affroot,
    simplex_volume,
)
from weyl_subgroups.data_models.enums import Convention
from weyl_subgroups.exceptions import AmbientMismatchError, InvalidInputError
from weyl_subgroups.rational import QuadVal
from weyl_subgroups.rootsys import WeylElement, build_root_system


class TestAffRoot:
    """Tests for affine roots."""

    def test_positivity(self):
        rs = build_root_system("A1")
        assert AffRoot(0, 0).is_positive(rs)
        assert not AffRoot(1, 0).is_positive(rs)
        assert AffRoot(1, 1).is_positive(rs)
        assert AffRoot(1, 1).negate(rs) == AffRoot(0, -1)

    def test_value_and_describe(self):
        rs = build_root_system("A2")
        x = AffRoot(2, 1)
        assert x.value_at(rs, (Fraction(1, 3), Fraction(1, 3))) == Fraction(5, 3)
        assert x.describe(rs) == "(1,1)+1δ"

    def test_affroots_within(self):
        rs = build_root_system("A1")
        assert len(list(affroots_within(rs, 2))) == 10


class TestExtAffElement:
    """Tests for elements w·t_γ and their actions."""

    def test_translation_shifts_levels(self):
        rs = build_root_system("A1")
        g = ExtAffElement.translation(rs, (Fraction(1),))
        assert act_on_affroot(rs, g, AffRoot(0, 0)) == AffRoot(0, 2)
        assert act_on_affroot(rs, g, AffRoot(1, 3)) == AffRoot(1, 1)

    def test_non_integral_shift_rejected(self):
        rs = build_root_system("A2")
        g = ExtAffElement.translation(rs, (Fraction(1, 3), Fraction(0)))
        with pytest.raises(InvalidInputError, match="not integral"):
            act_on_affroot(rs, g, AffRoot(0, 0))

    def test_wrong_length_rejected(self):
        rs = build_root_system("A2")
        with pytest.raises(AmbientMismatchError):
            ExtAffElement.translation(rs, (Fraction(1),))

    def test_compose_and_inverse(self):
        rs = build_root_system("B2")
        s = ExtAffElement.of_weyl(rs, WeylElement.reflection(rs, 1))
        t = ExtAffElement.translation(rs, (Fraction(1), Fraction(2)))
        g = s.compose(t, rs)
        assert g.compose(g.inverse(rs), rs).is_identity()
        assert g.inverse(rs).compose(g, rs).is_identity()

    def test_translate_then(self):
        rs = build_root_system("A2")
        w = WeylElement.reflection(rs, 0)
        gamma = (Fraction(1), Fraction(0))
        g = ExtAffElement.translate_then(rs, gamma, w)
        assert g.translation_part() == gamma
        assert g == ExtAffElement.translation(rs, gamma).compose(ExtAffElement.of_weyl(rs, w), rs)

    def test_action_is_compatible_with_composition(self):
        rs = build_root_system("B2")
        g = ExtAffElement(WeylElement.reflection(rs, 0), (Fraction(1), Fraction(1)))
        h = ExtAffElement(WeylElement.reflection(rs, 1), (Fraction(0), Fraction(1)))
        for x in (AffRoot(0, 0), AffRoot(3, -1), AffRoot(6, 2)):
            assert act_on_affroot(rs, g.compose(h, rs), x) == act_on_affroot(rs, g, act_on_affroot(rs, h, x))

    @pytest.mark.parametrize("convention", list(Convention))
    def test_point_action_is_a_group_action(self, convention):
        rs = build_root_system("A2")
        g = ExtAffElement(WeylElement.reflection(rs, 0), (Fraction(1), Fraction(0)))
        h = ExtAffElement(WeylElement.reflection(rs, 1), (Fraction(0), Fraction(1)))
        v = (Fraction(1, 5), Fraction(2, 7))
        composed = point_action(rs, g.compose(h, rs), v, convention)
        assert composed == point_action(rs, g, point_action(rs, h, v, convention), convention)

    def test_reflection_of_affroot_fixes_its_hyperplane(self):
        rs = build_root_system("A1")
        x = AffRoot(0, 1)
        g = reflection_of_affroot(rs, x)
        assert point_action(rs, g, (Fraction(0),)) == (Fraction(-1),)
        assert point_action(rs, g, (Fraction(-1, 2),)) == (Fraction(-1, 2),)
        assert affine_reflection_apply(rs, 0, -1, (Fraction(0),)) == (Fraction(-1),)
        assert act_on_affroot(rs, g, x) == x.negate(rs)


class TestAlcoves:
    """Tests for the fundamental alcove and volumes."""

    def test_a2_alcove(self):
        rs = build_root_system("A2")
        alcove = fundamental_alcove(rs)
        assert alcove.simple_affine_roots == (AffRoot(0, 0), AffRoot(1, 0), AffRoot(5, 1))
        assert alcove.contains(rs, (Fraction(1, 3), Fraction(1, 3)))
        assert not alcove.contains(rs, (Fraction(1), Fraction(1)))
        assert len(alcove.vertices()) == 3

    def test_strict_halfspace(self):
        rs = build_root_system("A1")
        wall = Halfspace.of_affroot(rs, AffRoot(0, 0), strict=True)
        assert not wall.contains(rs, (Fraction(0),))
        assert Halfspace.of_affroot(rs, AffRoot(0, 0)).contains(rs, (Fraction(0),))

    @pytest.mark.parametrize(
        ("label", "volume"),
        [("A1", "1/2*sqrt(2)"), ("A2", "1/6*sqrt(3)")],
    )
    def test_fundamental_volume(self, label, volume):
        rs = build_root_system(label)
        assert str(alcove_volume(rs, fundamental_alcove(rs))) == volume
        assert str(fundamental_volume_oracle(rs)) == volume

    @pytest.mark.parametrize("label", ["B2", "G2", "A1xA1", "B3"])
    def test_volume_matches_oracle(self, label):
        rs = build_root_system(label)
        assert alcove_volume(rs, fundamental_alcove(rs)) == fundamental_volume_oracle(rs)

    def test_simplex_volume_of_point(self):
        rs = build_root_system("A1")
        assert simplex_volume(rs, [(Fraction(0),)]) == QuadVal.of(1)
        with pytest.raises(InvalidInputError):
            simplex_volume(rs, [])

    def test_special_points(self):
        rs = build_root_system("A2")
        assert is_special_point(rs, (Fraction(2, 3), Fraction(1, 3)))
        assert not is_special_point(rs, (Fraction(1, 3), Fraction(1, 3)))

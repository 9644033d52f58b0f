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
Descent statistics and the counting identities they satisfy.

For an irreducible Φ fix Γ = Π ∪ {−θ}, with θ the highest root (lattice P)
or the highest short root (lattice P°), and the relation Σ c_γ γ = 0 with
c_{−θ} = 1. For w ∈ W let i(w) = Σ c_γ over the γ ∈ Γ sent to −Φ₊ and let
d_i count the w with i(w) = i. Counting the subgroups attached to
(Φ, m·P) in two ways gives

    Σ_i (d_i / f_Φ) p(M − i) = M^N        (θ long)
    Σ_i (d_i / f_Φ) p(M − i) = M^N k^{N′}  (θ short)

where p(M) counts f: Γ → ℕ with Σ c_γ f(γ) = M, N is the rank, N′ the
number of long simple roots and k the ratio of squared root lengths.
"""

import itertools
import logging
import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .bijmap import j_inverse_alcove
from .data_models.enums import LatticeKind
from .data_models.reports import CyclicReport, DescentReport, IdentityCheck, RealizationReport
from .exceptions import InternalConsistencyError, InvalidInputError, ResourceLimitError
from .finsub import RootSubset
from .rational import add, format_fraction, scale, zero
from .refsub import LatticeComponent, validate_psix
from .rootsys import RootSystem, index_of_connection, weyl_group
from .settings import get_settings

logger = logging.getLogger(__name__)


@dataclass
class DescentProfile:
    rs: RootSystem
    lattice: LatticeKind
    gamma: tuple[int, ...]
    c: dict[int, int]
    d: tuple[int, ...]
    f_phi: int
    theta_long: bool
    partitions: dict[int, int] = field(default_factory=dict, repr=False)

    @property
    def h(self) -> int:
        return sum(self.c.values())

    @property
    def n_long(self) -> int:
        return sum(1 for j in self.rs.simple if self.rs.is_long(j))

    @property
    def k_phi(self) -> int:
        return self.rs.length_ratio(0)

    def rhs(self, m: int) -> int:
        if self.theta_long:
            return m**self.rs.rank
        return m**self.rs.rank * self.k_phi**self.n_long


def descent_stats(
    rs: RootSystem, lattice: LatticeKind = LatticeKind.P, max_order: int | None = None
) -> DescentProfile:
    """
    Brute force over W.

    Raises:
        InvalidInputError: if Φ is not irreducible or the lattice is zero.
        ResourceLimitError: if W is too large to enumerate.
        InternalConsistencyError: if d_0, d_h, Σ d_i or the divisibility by
            f_Φ come out wrong.
    """
    if len(rs.components) != 1:
        raise InvalidInputError(f"Descent statistics need an irreducible root system, got {rs.label}.")
    if lattice == LatticeKind.ZERO:
        raise InvalidInputError("Descent statistics are defined for the lattices P and Pdual.")
    short = lattice == LatticeKind.P_DUAL and rs.has_two_lengths(0)
    theta = rs.highest_short_root(0) if short else rs.highest_root(0)
    c = {j: rs.roots[theta][j] for j in rs.simple}
    c[rs.negate(theta)] = 1
    gamma = (*rs.simple, rs.negate(theta))
    h = sum(c.values())
    counts = [0] * (h + 1)
    group = weyl_group(rs, max_order)
    for w in group:
        counts[sum(c[g] for g in gamma if not rs.is_positive(w.apply_root(g)))] += 1
    f_phi = index_of_connection(rs)
    if counts[0] or counts[h] or sum(counts) != len(group):
        raise InternalConsistencyError(f"Descent counts {counts} of {rs.label} are malformed.")
    if any(x % f_phi for x in counts):
        raise InternalConsistencyError(f"Descent counts {counts} are not divisible by f = {f_phi}.")
    logger.info("Descent statistics of %s (%s): %s", rs.label, lattice.value, counts)
    return DescentProfile(rs, lattice, gamma, c, tuple(counts), f_phi, theta_long=not short)


def _coin_counts(coins: Sequence[int], top: int) -> list[int]:
    ways = [1] + [0] * top
    for coin in coins:
        for total in range(coin, top + 1):
            ways[total] += ways[total - coin]
    return ways


def partition_p(profile: DescentProfile, m: int) -> int:
    """
    #{f: Γ → ℕ : Σ c_γ f(γ) = M}, also counted as #{f: Γ′ → ℕ : Σ ≤ M}
    with Γ′ = Π.

    Raises:
        InternalConsistencyError: if the two counts differ.
    """
    if m < 0:
        return 0
    if m not in profile.partitions:
        exact = _coin_counts(list(profile.c.values()), m)[m]
        bounded = sum(_coin_counts([profile.c[j] for j in profile.rs.simple], m))
        if exact != bounded:
            raise InternalConsistencyError(f"Partition counts disagree at M = {m}: {exact} and {bounded}.")
        profile.partitions[m] = exact
    return profile.partitions[m]


def verify_identity(profile: DescentProfile, m_values: Iterable[int]) -> list[IdentityCheck]:
    checks = []
    for m in m_values:
        lhs = sum(Fraction(d, profile.f_phi) * partition_p(profile, m - i) for i, d in enumerate(profile.d))
        rhs = profile.rhs(m)
        checks.append(IdentityCheck(m=m, lhs=format_fraction(lhs), rhs=rhs, passed=lhs == rhs))
        if lhs != rhs:
            logger.warning("Identity fails for %s at M = %d: %s != %d", profile.rs.label, m, lhs, rhs)
    return checks


def is_strictly_unimodal(d: Sequence[int]) -> bool:
    """Whether d_1 < d_2 < ... < d_{⌊h/2⌋}."""
    middle = (len(d) - 1) // 2
    return all(d[i] < d[i + 1] for i in range(1, middle))


def symmetry_unimodality_report(profile: DescentProfile) -> tuple[bool, bool]:
    """
    (symmetric, strictly unimodal).

    Raises:
        InternalConsistencyError: if d is not a palindrome.
    """
    symmetric = profile.d == profile.d[::-1]
    if not symmetric:
        raise InternalConsistencyError(f"Descent counts {profile.d} of {profile.rs.label} are not symmetric.")
    return symmetric, is_strictly_unimodal(profile.d)


def descent_report(profile: DescentProfile, m_values: Iterable[int]) -> DescentReport:
    symmetric, unimodal = symmetry_unimodality_report(profile)
    rs = profile.rs
    return DescentReport(
        type=rs.label,
        lattice=profile.lattice,
        gamma=[list(rs.roots[g]) for g in profile.gamma],
        c=[profile.c[g] for g in profile.gamma],
        h=profile.h,
        d=list(profile.d),
        f_phi=profile.f_phi,
        checks=verify_identity(profile, m_values),
        symmetric=symmetric,
        strictly_unimodal=unimodal,
    )


def cyclic_descents(n: int) -> list[int]:
    """
    d_i = #{σ ∈ S_{n+1} with i descents along n+1, 1, 2, ..., n+1}.
    """
    order = [n, *range(n + 1)]
    counts = [0] * (n + 2)
    for sigma in itertools.permutations(range(n + 1)):
        counts[sum(sigma[a] > sigma[b] for a, b in itertools.pairwise(order))] += 1
    return counts


def type_a_cyclic(
    n: int, m_values: Iterable[int], max_rank: int | None = None, rs: RootSystem | None = None
) -> CyclicReport:
    """
    Checks M^n = Σ_i (d_i/(n+1))·C(M+i−1, n) and compares d with the descent
    statistics of A_n when `rs` is given.

    Raises:
        ResourceLimitError: if n exceeds the configured bound.
    """
    cap = get_settings().max_cyclic_rank if max_rank is None else max_rank
    if n < 1:
        raise InvalidInputError(f"Cyclic descents need n ≥ 1, got {n}.")
    if n > cap:
        raise ResourceLimitError(f"S_{n + 1} is too large to sweep.", cap=cap, requested=n)
    d = cyclic_descents(n)
    checks = []
    for m in m_values:
        lhs = sum(Fraction(x, n + 1) * math.comb(m + i - 1, n) for i, x in enumerate(d) if m + i - 1 >= 0)
        checks.append(IdentityCheck(m=m, lhs=format_fraction(lhs), rhs=m**n, passed=lhs == m**n))
    matches = True
    if rs is not None:
        matches = list(descent_stats(rs).d) == d
    return CyclicReport(n=n, d=d, checks=checks, matches_descent_stats=matches)


def count_realization(
    rs: RootSystem, lattice: LatticeKind, m: int, max_order: int | None = None
) -> RealizationReport:
    """
    Counts the subgroups W^a(Φ, X) with X′ = m·P or m·P° three ways: the
    coweights in the box D, the weighted descent sum at M = m, and the
    distinct (Γ, f) obtained by running every box point through j⁻¹.
    """
    component = LatticeComponent(lattice, m)
    base = validate_psix(RootSubset.everything(rs), zero(rs.rank), [component])
    ranges = [range(base.n[alpha]) for alpha in base.simple]
    box_count = math.prod(len(r) for r in ranges)
    profile = descent_stats(rs, lattice, max_order)
    formula = sum(Fraction(d, profile.f_phi) * partition_p(profile, m - i) for i, d in enumerate(profile.d))
    pairs = set()
    for coords in itertools.product(*ranges):
        a = zero(rs.rank)
        for e, alpha in zip(coords, base.simple, strict=True):
            a = add(a, scale(e, base.coweights[alpha]))
        pairs.add(j_inverse_alcove(validate_psix(base.psi, a, base.xprime)))
    return RealizationReport(
        type=rs.label,
        lattice=lattice,
        m=m,
        box_count=box_count,
        formula_count=format_fraction(formula),
        distinct_pairs=len(pairs),
        agrees=box_count == formula == len(pairs),
    )

"""Fixed-point arithmetic for non-symplectic automorphisms of K3 surfaces.

Covers the Euler-phi restriction on the canonical index, the holomorphic
Lefschetz number of an order-6 automorphism evaluated in Q(sqrt(-3)), and the
linear system for the eigenvalue multiplicities on H^2.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .dynkin import FixedProfile
from .exact import QuadExt, SQRT_M3, ZETA6, solve_exact

ZETA = ZETA6  # primitive 6th root of unity acting on the 2-form
ONE = QuadExt(1)

# the value every order-6 holomorphic Lefschetz number must take: 1 + zeta^-1
L_TAU = ONE + ZETA.inverse()


def _local_point(e1: int, e2: int) -> QuadExt:
    """1/det(1 - tau | T_P) for tangent eigenvalues zeta^e1, zeta^e2."""
    return ((ONE - ZETA ** e1) * (ONE - ZETA ** e2)).inverse()


def _local_curve(e: int, genus: int = 0, self_int: int = -2) -> QuadExt:
    """Contribution of a fixed curve with normal eigenvalue zeta^e."""
    t = ZETA ** e
    return (ONE - t).inverse() * (1 - genus) - t * (ONE - t) ** -2 * self_int


A_P = _local_point(2, 5)
A_Q = _local_point(3, 4)
B_C = _local_curve(1)

_HALF = (QuadExt(3) - SQRT_M3)
assert L_TAU == _HALF / 2, "1 + zeta^-1 != (3 - sqrt(-3))/2"
assert A_P == _HALF / 6, "a(P) != (3 - sqrt(-3))/6"
assert A_Q == _HALF / 12, "a(Q) != (3 - sqrt(-3))/12"
assert B_C == -_HALF / 2, "b(C) != -(3 - sqrt(-3))/2"


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def candidate_indices(rank_transcendental: int) -> set[int]:
    """Indices I >= 2 whose primitive I-th roots of unity fit in T, i.e. phi(I) <= rank T."""
    if rank_transcendental < 1:
        raise ValueError("transcendental rank must be positive")
    # phi(I) >= sqrt(I/2), so I <= 2 r^2 covers everything
    bound = 2 * rank_transcendental ** 2 + 2
    return {i for i in range(2, bound + 1) if euler_phi(i) <= rank_transcendental}


def holomorphic_lefschetz_order6(n_p: int, n_q: int, n_c: int) -> QuadExt:
    """Sum of local terms for n_p points of type P, n_q of type Q, n_c fixed curves."""
    if min(n_p, n_q, n_c) < 0:
        raise ValueError("counts must be nonnegative")
    return A_P * n_p + A_Q * n_q + B_C * n_c


def step_one_balance(l: int, c: int) -> bool:
    """Whether 2l points of each type and c curves give exactly 1 + zeta^-1."""
    return holomorphic_lefschetz_order6(2 * l, 2 * l, c) == L_TAU


@dataclass(frozen=True)
class Order6Profile:
    c: int
    p: int
    q: int

    def __post_init__(self):
        if min(self.c, self.p, self.q) < 0:
            raise ValueError("profile entries must be nonnegative")


@dataclass(frozen=True)
class CohomologyMultiplicities:
    """Multiplicities of the eigenvalues 1, -1, zeta3-pair, zeta6-pair on H^2."""

    alpha: int
    beta: int
    gamma: int
    delta: int

    def as_tuple(self):
        return (self.alpha, self.beta, self.gamma, self.delta)

    def nonnegative(self) -> bool:
        return min(self.as_tuple()) >= 0


# rows: total dimension, traces of tau, tau^2, tau^3 (after the 2 + ... bookkeeping)
MULTIPLICITY_SYSTEM = [
    [1, 1, 2, 2],
    [1, -1, -1, 1],
    [1, 1, -1, -1],
    [1, -1, 2, -2],
]


def multiplicity_rhs(pr: Order6Profile) -> list[int]:
    return [20, 6 * pr.c + 1, 6 * pr.c + 6 * pr.p + 5, 6 * pr.c + 6 * pr.q + 4]


def solve_multiplicities(profile: Order6Profile) -> CohomologyMultiplicities:
    sol = solve_exact(MULTIPLICITY_SYSTEM, multiplicity_rhs(profile))
    if any(Fraction(x).denominator != 1 for x in sol):
        raise ArithmeticError("non-integral multiplicities")
    return CohomologyMultiplicities(*(int(x) for x in sol))


def euler_characteristic_check(pr: Order6Profile, m: CohomologyMultiplicities) -> bool:
    """Topological count of the fixed locus against the trace of tau on H^*."""
    return 4 * (pr.c + 1) + 2 * pr.c == 2 + m.alpha - m.beta - m.gamma + m.delta + 1


def feasible_order6_profiles(limit: int = 6) -> list[Order6Profile]:
    """Profiles whose multiplicities are all nonnegative (searched up to ``limit``)."""
    out = []
    for c in range(limit + 1):
        for p in range(limit + 1):
            for q in range(limit + 1):
                pr = Order6Profile(c, p, q)
                if solve_multiplicities(pr).nonnegative():
                    out.append(pr)
    return out


def check_order3_relation(profile: FixedProfile | tuple[int, int]) -> bool:
    n, m = profile
    return m - n == 3

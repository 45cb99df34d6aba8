import sympy
from hypothesis import given, strategies as st

from alv.exact import QuadExt
from alv.lefschetz import (A_P, A_Q, B_C, L_TAU, Order6Profile, candidate_indices,
                           check_order3_relation, euler_characteristic_check, euler_phi,
                           feasible_order6_profiles, holomorphic_lefschetz_order6,
                           solve_multiplicities, step_one_balance)

Z = sympy.exp(2 * sympy.pi * sympy.I / 6)


def as_sympy(x: QuadExt):
    return sympy.Rational(x.a.numerator, x.a.denominator) + \
        sympy.Rational(x.b.numerator, x.b.denominator) * sympy.sqrt(-3)


def same(x: QuadExt, expr) -> bool:
    return sympy.simplify(sympy.expand_complex(as_sympy(x) - expr)) == 0


def test_local_constants_against_sympy():
    assert same(A_P, 1 / ((1 - Z ** 2) * (1 - Z ** 5)))
    assert same(A_Q, 1 / ((1 - Z ** 3) * (1 - Z ** 4)))
    assert same(B_C, 1 / (1 - Z) + 2 * Z / (1 - Z) ** 2)
    assert same(L_TAU, 1 + 1 / Z)


def test_local_constants_closed_form():
    half = QuadExt(3, -1)
    assert A_P == half / 6 and A_Q == half / 12 and B_C == -half / 2 and L_TAU == half / 2


def test_candidate_indices():
    assert candidate_indices(2) == {2, 3, 4, 6}
    assert candidate_indices(1) == {2}
    assert sorted(candidate_indices(4)) == [2, 3, 4, 5, 6, 8, 10, 12]
    assert [euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]


def test_candidate_indices_brute():
    for r in range(1, 7):
        brute = {n for n in range(2, 500) if sympy.totient(n) <= r}
        assert candidate_indices(r) == brute


@given(st.integers(0, 10), st.integers(0, 10))
def test_step_one_balance(l, c):
    assert step_one_balance(l, c) == (l == c + 1)


def test_profiles_and_multiplicities():
    profiles = feasible_order6_profiles()
    assert len(profiles) == 10
    assert {(p.c, p.p, p.q) for p in profiles} == {
        (c, p, q) for c in range(3) for p in range(3) for q in range(3) if c + p + q <= 2}
    for pr in profiles:
        m = solve_multiplicities(pr)
        c, p, q = pr.c, pr.p, pr.q
        assert m.as_tuple() == (5 * c + 2 * p + q + 6, -c + 2 * p - q + 4,
                                -c - p + q + 3, -c - p - q + 2)
        assert m.alpha + m.beta + 2 * m.gamma + 2 * m.delta == 20
        assert euler_characteristic_check(pr, m)
    assert not solve_multiplicities(Order6Profile(3, 0, 0)).nonnegative()


def test_misc():
    assert holomorphic_lefschetz_order6(6, 6, 2) == L_TAU
    assert check_order3_relation((6, 9)) and not check_order3_relation((5, 14))

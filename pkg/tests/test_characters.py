"""Characters, Gauss sums, DFT, and the squares-mod-n machinery."""

import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lincong import arith, characters
from lincong.characters import (
    PeriodicFunction,
    dft,
    gauss_sum_closed,
    gauss_sum_direct,
    gauss_sum_real_prime_power,
    gauss_sum_real_primitive,
    idft,
    legendre_character,
    principal_character,
    product_identity_check,
    sqrt_mod_prime_power,
    square_decomposition_identity,
    square_indicator,
    square_profile,
)
from lincong.errors import DomainError

SQRT3 = math.sqrt(3)


def test_character_invariants():
    chi = principal_character(6)
    assert chi.conductor == 1
    chi = legendre_character(9, 3)
    assert chi.conductor == 3
    with pytest.raises(DomainError):
        legendre_character(10, 3)  # 3 does not divide 10
    with pytest.raises(DomainError):
        legendre_character(9, 9)  # not prime
    with pytest.raises(DomainError):
        legendre_character(4, 2)  # even


def test_chi_eval_examples():
    chi0 = principal_character(6)
    assert characters.chi_eval(chi0, 5) == 1
    assert characters.chi_eval(chi0, 3) == 0
    chi = legendre_character(9, 3)
    assert characters.chi_eval(chi, 2) == -1  # 2 is a nonresidue mod 3
    assert characters.chi_eval(chi, 3) == 0


def test_gauss_direct_examples():
    # principal character: the Gauss sum is the Ramanujan sum
    for n in (4, 6, 9, 10):
        chi0 = principal_character(n)
        for m in range(n):
            assert abs(gauss_sum_direct(chi0, m) - arith.ramanujan_sum(n, m)) < 1e-9
    chi3 = legendre_character(3, 3)
    assert abs(gauss_sum_direct(chi3, 1) - 1j * SQRT3) < 1e-12
    # non-principal character at m = 0: orthogonality
    for n, p in ((9, 3), (15, 3), (25, 5)):
        assert abs(gauss_sum_direct(legendre_character(n, p), 0)) < 1e-9


def test_gauss_real_primitive():
    assert abs(gauss_sum_real_primitive(5) - math.sqrt(5)) < 1e-12
    assert abs(gauss_sum_real_primitive(3) - 1j * SQRT3) < 1e-12
    assert gauss_sum_real_primitive(1) == 1
    with pytest.raises(DomainError):
        gauss_sum_real_primitive(6)
    with pytest.raises(DomainError):
        gauss_sum_real_primitive(9)


def test_gauss_closed_examples():
    chi9 = legendre_character(9, 3)
    assert abs(gauss_sum_closed(chi9, 1)) < 1e-12
    assert abs(gauss_sum_closed(chi9, 3) - 3j * SQRT3) < 1e-12
    chi3 = legendre_character(3, 3)
    assert abs(gauss_sum_closed(chi3, 2) + 1j * SQRT3) < 1e-12
    with pytest.raises(DomainError):
        gauss_sum_closed(principal_character(9), 1)


# conductor p | modulus, moduli up to 375 per the contract
CLOSED_FORM_MODULI = [
    (3, 3), (9, 3), (27, 3), (81, 3), (243, 3),
    (5, 5), (25, 5), (125, 5), (375, 5), (375, 3),
    (7, 7), (49, 7), (343, 7),
    (15, 3), (15, 5), (45, 3), (45, 5), (135, 3), (135, 5),
    (21, 3), (21, 7), (63, 3), (63, 7), (105, 3), (105, 5), (105, 7),
    (35, 5), (35, 7), (175, 5), (175, 7),
]


@pytest.mark.parametrize("n,p", CLOSED_FORM_MODULI)
def test_gauss_closed_equals_direct(n, p):
    chi = legendre_character(n, p)
    for m in range(n):
        direct = gauss_sum_direct(chi, m)
        closed = gauss_sum_closed(chi, m)
        assert abs(direct - closed) < 1e-6, (n, p, m)


@pytest.mark.parametrize("p", (3, 5, 7))
@pytest.mark.parametrize("ell", (1, 2, 3))
def test_gauss_prime_power_equals_direct(p, ell):
    chi = legendre_character(p**ell, p)
    for m in range(p**ell):
        direct = gauss_sum_direct(chi, m)
        closed = gauss_sum_real_prime_power(p, ell, m)
        assert abs(direct - closed) < 1e-6, (p, ell, m)


def test_gauss_prime_power_examples():
    assert abs(gauss_sum_real_prime_power(3, 1, 1) - 1j * SQRT3) < 1e-12
    assert gauss_sum_real_prime_power(3, 2, 1) == 0
    assert abs(gauss_sum_real_prime_power(3, 2, 3) - 1j * 3 * SQRT3) < 1e-12


def test_dft_examples():
    ones5 = PeriodicFunction((1,) * 5)
    assert abs(dft(ones5, 0) - 5) < 1e-12
    assert abs(dft(ones5, 1)) < 1e-12
    units9 = PeriodicFunction(tuple(int(math.gcd(j, 9) == 1) for j in range(9)))
    assert abs(dft(units9, 3) - (-3)) < 1e-9  # equals C_9(3) by evenness


def test_idft_examples():
    ones5 = PeriodicFunction((1,) * 5)
    fhat = PeriodicFunction(tuple(dft(ones5, b) for b in range(5)))
    for b in range(5):
        assert abs(idft(fhat, b) - 1) < 1e-9
    allones4 = PeriodicFunction((1,) * 4)
    assert abs(idft(allones4, 0) - 1) < 1e-12


@given(st.lists(st.integers(-50, 50), min_size=12, max_size=12))
def test_dft_roundtrip_random(values):
    f = PeriodicFunction(tuple(values))
    fhat = PeriodicFunction(tuple(dft(f, b) for b in range(12)))
    for b in range(12):
        assert abs(idft(fhat, b) - values[b]) < 1e-9


def test_sqrt_mod_prime_power_examples():
    assert sqrt_mod_prime_power(1, 3, 3) == frozenset({1, 26})
    assert sqrt_mod_prime_power(9, 3, 3) == frozenset({3, 6, 12, 15, 21, 24})
    assert sqrt_mod_prime_power(0, 3, 3) == frozenset({0, 9, 18})


@pytest.mark.parametrize("p,emax", [(3, 5), (5, 3), (7, 3)])
def test_sqrt_mod_prime_power_exhaustive(p, emax):
    # every prime power up to 343: compare against a full y^2 table
    for e in range(1, emax + 1):
        mod = p**e
        table: dict[int, set[int]] = {}
        for y in range(mod):
            table.setdefault(y * y % mod, set()).add(y)
        for a in range(mod):
            assert sqrt_mod_prime_power(a, p, e) == frozenset(table.get(a, set())), (a, p, e)


def test_square_indicator_examples():
    assert square_indicator(9, 7) == 1
    assert square_indicator(9, 3) == 0
    for n in (1, 2, 5, 8, 9, 12, 27):
        assert square_indicator(n, 0) == 1


def test_square_indicator_even_matches_scan():
    for n in (2, 4, 6, 8, 10, 12, 16, 18, 24):
        scan = {x * x % n for x in range(n)}
        for b in range(n):
            assert square_indicator(n, b) == (1 if b in scan else 0)


def test_square_profile_examples():
    assert square_profile(3).s == 2
    prof9 = square_profile(9)
    assert prof9.square_set == frozenset({0, 1, 4, 7}) and prof9.s == 4
    prof27 = square_profile(27)
    assert prof27.s == 11 and prof27.s == prof27.q + square_profile(3).s


def test_square_profile_multiplicative():
    for n1 in range(1, 51):
        for n2 in range(n1, 51):
            if math.gcd(n1, n2) != 1:
                continue
            a, b, c = square_profile(n1), square_profile(n2), square_profile(n1 * n2)
            assert c.s == a.s * b.s
            assert c.q == a.q * b.q


@pytest.mark.parametrize("p", (3, 5, 7))
def test_square_count_recursion(p):
    for r in range(3, 6):
        s_r = square_profile(p**r)
        s_prev = square_profile(p ** (r - 2))
        assert s_r.s == s_r.q + s_prev.s


@pytest.mark.parametrize("p", (3, 5, 7))
@pytest.mark.parametrize("ell", (1, 2, 3))
def test_square_decomposition_identity(p, ell):
    for m in range(p**ell):
        lhs, rhs = square_decomposition_identity(p, ell, m)
        assert abs(lhs - rhs) < 1e-6, (p, ell, m)


def test_square_decomposition_counting_case():
    lhs, rhs = square_decomposition_identity(3, 1, 0)
    assert abs(lhs - 2) < 1e-9 and abs(rhs - 2) < 1e-9


def test_product_identity_examples():
    assert product_identity_check(4, 1, 0) < 1e-12
    assert product_identity_check(6, 2, 3) < 1e-6
    assert product_identity_check(5, 1, 1) < 1e-6


def test_product_identity_grid():
    for n in range(1, 13):
        for a in range(n):
            for m in range(n):
                assert product_identity_check(n, a, m) < 1e-6, (n, a, m)

"""Exact elementary number theory: factorization, multiplicative functions,
Jacobi symbols, guarded binomials, roots of unity and Ramanujan sums.

Everything here is a pure function of its arguments and returns exact values
(arbitrary-precision ints, or complex doubles for the e(x) = exp(2*pi*i*x)
machinery).  Complex accumulations that represent integers are rounded through
``round_complex_to_int``, which enforces the 1e-6 relative tolerance used
throughout the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import ConsistencyError, DomainError

# Relative tolerance for rounding complex accumulations to exact integers.
ROUND_TOL = 1e-6


def is_prime(n: int) -> bool:
    """Primality by trial division; fine at desk scale (n up to ~10**12)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Factorization:
    """A positive integer with its prime-power decomposition.

    ``factors`` is a tuple of (prime, exponent) pairs with strictly
    increasing primes; their product reproduces ``n``.  factorize(1) carries
    the empty product.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"factorization requires n >= 1, got {self.n}")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if p <= prev or e < 1 or not is_prime(p):
                raise DomainError(f"bad factor ({p}, {e}) in factorization of {self.n}")
            prev = p
            prod *= p**e
        if prod != self.n:
            raise DomainError(f"factors of {self.n} multiply to {prod}")


@lru_cache(maxsize=None)
def factorize(n: int) -> Factorization:
    """Prime factorization by trial division; factorize(1) has no factors."""
    if n < 1:
        raise DomainError(f"cannot factor n = {n}")
    m = n
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def _as_factorization(f: Factorization | int) -> Factorization:
    return f if isinstance(f, Factorization) else factorize(f)


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, in increasing order."""
    divs = [1]
    for p, e in factorize(n).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def euler_phi(f: Factorization | int) -> int:
    """Euler's totient: the number of units modulo n."""
    fac = _as_factorization(f)
    out = 1
    for p, e in fac.factors:
        out *= p ** (e - 1) * (p - 1)
    return out


def moebius(f: Factorization | int) -> int:
    """Moebius function: 0 on non-squarefree n, else (-1)^(number of primes)."""
    fac = _as_factorization(f)
    if any(e > 1 for _, e in fac.factors):
        return 0
    return -1 if len(fac.factors) % 2 else 1


def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1, via quadratic reciprocity.

    For prime n this is the Legendre symbol: 1 for nonzero squares mod n,
    -1 for nonsquares, 0 when n divides a.
    """
    if n < 1 or n % 2 == 0:
        raise DomainError(f"Jacobi symbol needs odd n >= 1, got {n}")
    if n == 1:
        return 1
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def epsilon(n: int) -> complex:
    """Sign of the real Gauss sum: 1 for n = 1 (mod 4), i for n = 3 (mod 4)."""
    if n % 2 == 0:
        raise DomainError(f"epsilon is defined for odd n only, got {n}")
    return (1 + 0j) if n % 4 == 1 else 1j


def binomial_guarded(upper: int, lower: int | Fraction) -> int:
    """Binomial coefficient with integer upper index (negative allowed) and a
    possibly fractional lower index.

    Non-integral or negative lower indices give 0, lower = 0 gives 1; a
    negative upper index follows C(-d, j) = (-1)^j C(d+j-1, j).  The zero
    convention lets divisor-sum evaluators run over all divisors and have the
    degenerate terms vanish on their own.
    """
    if isinstance(lower, Fraction):
        if lower.denominator != 1:
            return 0
        lower = int(lower)
    if lower < 0:
        return 0
    if lower == 0:
        return 1
    if upper < 0:
        sign = -1 if lower % 2 else 1
        return sign * math.comb(-upper + lower - 1, lower)
    if upper < lower:
        return 0
    return math.comb(upper, lower)


def root_of_unity(num: int, den: int) -> complex:
    """e(num/den) = exp(2*pi*i*num/den), computed from the reduced angle."""
    if den < 1:
        raise DomainError(f"root_of_unity needs den >= 1, got {den}")
    r = num % den
    theta = math.tau * r / den
    return complex(math.cos(theta), math.sin(theta))


def round_complex_to_int(z: complex, tol: float = ROUND_TOL) -> tuple[int, float]:
    """Round a complex value that should be an exact integer.

    Returns (integer, relative residual).  The residual compares both the
    imaginary part and the distance to the nearest integer against
    max(1, |Re z|); at or above ``tol`` a ConsistencyError is raised.
    """
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ConsistencyError(f"non-finite value {z!r}")
    n = round(z.real)
    resid = max(abs(z.imag), abs(z.real - n)) / max(1.0, abs(z.real))
    if resid >= tol:
        raise ConsistencyError(f"{z!r} is not an integer (residual {resid:.3g})")
    return n, resid


def ramanujan_sum_direct(n: int, b: int) -> int:
    """C_n(b) summed literally: e(j*b/n) over j in [1, n] coprime to n."""
    if n < 1:
        raise DomainError(f"ramanujan_sum_direct needs n >= 1, got {n}")
    acc = 0j
    for j in range(1, n + 1):
        if math.gcd(j, n) == 1:
            acc += root_of_unity(j * b, n)
    value, _ = round_complex_to_int(acc)
    return value


@lru_cache(maxsize=None)
def _ramanujan_of_gcd(n: int, g: int) -> int:
    # Hoelder's closed form with g = gcd(b, n) already taken.
    m = n // g
    mu = moebius(m)
    if mu == 0:
        return 0
    return euler_phi(n) // euler_phi(m) * mu


def ramanujan_sum(n: int, b: int) -> int:
    """C_n(b) via Hoelder's closed form phi(n)/phi(n/g) * mu(n/g), g = gcd(b, n)."""
    if n < 1:
        raise DomainError(f"ramanujan_sum needs n >= 1, got {n}")
    return _ramanujan_of_gcd(n, math.gcd(b, n))

"""Closed-form counters for restricted solutions of linear congruences.

Each counter returns a CountResult whose count is exact.  Divisor-sum
formulas (strict order, distinct, common-gcd blocks) run in all-integer or
exact-rational arithmetic; the square counter and the general block counter
accumulate complex roots of unity and round at the end, recording the
rounding residual.  Every counter is verified against independent
enumeration oracles in the test suite.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from . import arith, characters, oracles
from .errors import ConsistencyError, DomainError
from .model import (
    COROLLARY,
    FORMULA,
    ORACLE_FALLBACK,
    BlockSpec,
    CongruenceSpec,
    CountResult,
    OracleBudget,
)


def lehmer_count(spec: CongruenceSpec) -> CountResult:
    """Unrestricted solution count: g*n^(k-1) if g | b else 0, where g is the
    gcd of all coefficients and the modulus."""
    g = math.gcd(spec.n, *spec.coeffs)
    if spec.b % g:
        return CountResult(0, FORMULA)
    return CountResult(g * spec.n ** (spec.k - 1), FORMULA)


def _square_term(p: int, ell: int, x: int) -> complex:
    """Sum over even j < ell of C_{p^(ell-j)}(x) plus the real Gauss sum of
    the character mod p^(ell-j) induced by (./p), evaluated at x."""
    acc = 0j
    for j in range(0, ell, 2):
        acc += arith.ramanujan_sum(p ** (ell - j), x)
        acc += characters.gauss_sum_real_prime_power(p, ell - j, x)
    return acc


def _square_count_prime_power(
    p: int, ell: int, coeffs: tuple[int, ...], b: int
) -> tuple[int, float]:
    """Square-solution count modulo p^ell as the subset-expanded average

        (1/p^ell) * ( p^ell*[p^ell | b]
                      + sum over nonempty K of 2^(-|K|) * S_K ),

    S_K = sum_m e(-b*m/p^ell) * prod_{i in K} T_i(m) with T_i the per-variable
    combination of Ramanujan and Gauss sums.  The subset sum runs over all
    nonempty K including the full index set.  The m-independent first term is
    taken in closed form to keep float error out of the dominant part.
    """
    mod = p**ell
    k = len(coeffs)
    terms = [[_square_term(p, ell, a * m) for m in range(1, mod + 1)] for a in coeffs]
    phases = [arith.root_of_unity(-b * m, mod) for m in range(1, mod + 1)]
    acc = complex(mod if b % mod == 0 else 0)
    for size in range(1, k + 1):
        weight = 0.5**size
        for subset in itertools.combinations(range(k), size):
            s_k = 0j
            for idx in range(mod):
                prod = phases[idx]
                for i in subset:
                    prod *= terms[i][idx]
                s_k += prod
            acc += weight * s_k
    value, resid = arith.round_complex_to_int(acc / mod)
    if value < 0:
        raise ConsistencyError(f"negative square count {value} mod {p}^{ell}")
    return value, resid


def square_count(spec: CongruenceSpec) -> CountResult:
    """Count solutions whose coordinates are all squares modulo n.

    For odd n the count multiplies over the prime powers of n, each factor
    evaluated by the Ramanujan/Gauss-sum expansion.  The expansion is proved
    for odd n only, so even moduli silently route to the enumeration oracle
    and are tagged as such.
    """
    if spec.n % 2 == 0:
        count = oracles.oracle_count(spec, "square")
        return CountResult(count, ORACLE_FALLBACK)
    total = 1
    worst = 0.0
    for p, e in arith.factorize(spec.n).factors:
        value, resid = _square_count_prime_power(p, e, spec.coeffs, spec.b)
        total *= value
        worst = max(worst, resid)
    return CountResult(total, FORMULA, worst)


def square_count_corollary(p: int, ell: int, spec: CongruenceSpec) -> CountResult:
    """Square-solution count modulo p^ell on the unit fast path.

    Requires n = p^ell with every coefficient and the target coprime to n.
    S_K then depends on K only through how many chosen coefficients are
    quadratic residues mod p (s+) versus nonresidues (s-):

        S(s+, s-) = (sum over even j < ell of phi(p^(ell-j)))^(s+ + s-)
                    + sum_{m=1..p-1} e(-b*m/p) * B_+(m)^s+ * B_-(m)^s-

        B_sgn(m) = -p^(ell-1) + sum over even j in [2, ell) of phi(p^(ell-j))
                   + sgn * epsilon_p * (m/p) * p^(ell - 1/2)

    and the prime-power factor aggregates the subset counts with binomial
    weights C(k+, s+) * C(k-, s-) * 2^-(s+ + s-).  With every coefficient a
    residue this collapses to an aggregation over subset sizes alone.
    """
    mod = p**ell
    if spec.n != mod:
        raise DomainError(f"spec modulus {spec.n} is not {p}^{ell}")
    if any(math.gcd(a, mod) != 1 for a in spec.coeffs):
        raise DomainError("corollary path needs all coefficients coprime to n")
    if math.gcd(spec.b, mod) != 1:
        raise DomainError("corollary path needs the target coprime to n")
    k_plus = sum(1 for a in spec.coeffs if arith.jacobi_symbol(a % p, p) == 1)
    k_minus = spec.k - k_plus
    unit_part = sum(arith.euler_phi(p ** (ell - j)) for j in range(0, ell, 2))
    tail_part = sum(arith.euler_phi(p ** (ell - j)) for j in range(2, ell, 2))
    gauss_mag = p ** (ell - 1) * math.sqrt(p)
    eps = arith.epsilon(p)
    core = -(p ** (ell - 1)) + tail_part
    acc = 0j
    for s_plus in range(k_plus + 1):
        for s_minus in range(k_minus + 1):
            size = s_plus + s_minus
            if size == 0:
                continue
            s_k = complex(unit_part**size)
            for m in range(1, p):
                swing = eps * arith.jacobi_symbol(m, p) * gauss_mag
                s_k += (
                    arith.root_of_unity(-spec.b * m, p)
                    * (core + swing) ** s_plus
                    * (core - swing) ** s_minus
                )
            weight = math.comb(k_plus, s_plus) * math.comb(k_minus, s_minus)
            acc += weight * 0.5**size * s_k
    value, resid = arith.round_complex_to_int(acc / mod)
    if value < 0:
        raise ConsistencyError(f"negative corollary count {value}")
    return CountResult(value, COROLLARY, resid)


def _verify_square_witness(spec: CongruenceSpec, witness: tuple[int, ...]) -> bool:
    lhs = sum(a * x for a, x in zip(spec.coeffs, witness)) % spec.n
    if lhs != spec.b:
        return False
    return all(characters.square_indicator(spec.n, x) for x in witness)


def square_solution_exists(
    spec: CongruenceSpec, budget: OracleBudget | None = None
) -> tuple[bool, tuple[int, ...] | None]:
    """Decide existence of a square solution, with a witness when one exists.

    For odd n, first tries the sufficient condition per prime power: when the
    target is a unit and some sub-sum s of the coefficients is a unit in the
    same quadratic class ((s/p) = (b/p)), the tuple assigning s^(-1)*b to that
    subset and 0 elsewhere is a square solution mod that prime power; the
    per-prime-power tuples are glued by CRT.  If the condition does not fire
    everywhere, falls back to a budgeted oracle scan.  Returned witnesses are
    always re-verified by substitution, so false positives are impossible.
    """
    n = spec.n
    if n % 2 == 1 and spec.k <= 20:
        partial: list[tuple[int, tuple[int, ...]]] = []
        for p, e in arith.factorize(n).factors:
            mod = p**e
            found = None
            if spec.b % p:
                target_class = arith.jacobi_symbol(spec.b % p, p)
                for size in range(1, spec.k + 1):
                    for subset in itertools.combinations(range(spec.k), size):
                        s = sum(spec.coeffs[i] for i in subset) % mod
                        if s % p == 0:
                            continue
                        if arith.jacobi_symbol(s % p, p) == target_class:
                            val = pow(s, -1, mod) * spec.b % mod
                            found = (mod, tuple(val if i in subset else 0 for i in range(spec.k)))
                            break
                    if found:
                        break
            if found is None:
                partial = []
                break
            partial.append(found)
        if partial:
            witness = []
            for i in range(spec.k):
                residues = [(tup[i], mod) for mod, tup in partial]
                witness.append(_crt(residues, n))
            witness = tuple(witness)
            if _verify_square_witness(spec, witness):
                return True, witness
            raise ConsistencyError(f"constructed witness {witness} failed verification")
    witness = oracles.find_restricted_solution(spec, "square", budget)
    if witness is None:
        return False, None
    if not _verify_square_witness(spec, witness):
        raise ConsistencyError(f"oracle witness {witness} failed verification")
    return True, witness


def _crt(residues: list[tuple[int, int]], n: int) -> int:
    """Glue (value, modulus) pairs with coprime moduli multiplying to n."""
    x = 0
    for val, mod in residues:
        rest = n // mod
        x += val * rest * pow(rest, -1, mod)
    return x % n


def strict_order_count(n: int, k: int, a: int, b: int) -> CountResult:
    """Count solutions of a*(x1+...+xk) = b (mod n) with x1 > x2 > ... > xk
    on the canonical residues [0, n).

    With f = gcd(a, n), the count is 0 unless f | b, and otherwise equals

        ((-1)^k * f / n) * sum over d | gcd(n/f, k) of
            (-1)^(k/d) * C(n/d, k/d) * C_d(b/f)

    evaluated in all-integer arithmetic.  The Ramanujan sum takes b/f: the
    inner exponential sum collapses onto the reduced target, which matters
    exactly when f > 1 (checked against enumeration across full sweeps).
    """
    if n < 1 or k < 1:
        raise DomainError("strict_order_count needs n >= 1 and k >= 1")
    if k > n:
        return CountResult(0, FORMULA)
    f = math.gcd(a, n)
    b %= n
    if b % f:
        return CountResult(0, FORMULA)
    bf = b // f
    total = 0
    for d in arith.divisors(math.gcd(n // f, k)):
        sign = -1 if (k // d) % 2 else 1
        total += sign * arith.binomial_guarded(n // d, k // d) * arith.ramanujan_sum(d, bf)
    if k % 2:
        total = -total
    value, rem = divmod(f * total, n)
    if rem:
        raise ConsistencyError(f"strict order sum {f * total} not divisible by {n}")
    return CountResult(value, FORMULA)


def distinct_count_equal_coeffs(n: int, k: int, a: int, b: int) -> CountResult:
    """Count solutions with all coordinates distinct when every coefficient
    equals a: k! times the strictly ordered count."""
    ordered = strict_order_count(n, k, a, b)
    return CountResult(math.factorial(k) * ordered.count, ordered.method)


def distinct_count_gcd_condition(spec: CongruenceSpec) -> CountResult:
    """Distinct-solution count when every proper nonempty subset of the
    coefficients has sum coprime to n.

    Writing g = gcd(a1+...+ak, n) and F = (n-1)(n-2)...(n-k+1):

        g does not divide b:  (-1)^k (k-1)! + F
        g divides b:          (-1)^(k-1) (k-1)! (g-1) + F

    The subset hypothesis is checked exhaustively (k <= 20 enforced).
    """
    n, k = spec.n, spec.k
    if k > 20:
        raise DomainError(f"subset hypothesis check limited to k <= 20, got {k}")
    for size in range(1, k):
        for subset in itertools.combinations(range(k), size):
            s = sum(spec.coeffs[i] for i in subset)
            if math.gcd(s, n) != 1:
                raise DomainError(
                    f"subset {subset} has sum {s} with gcd({s}, {n}) > 1"
                )
    if k > n:
        return CountResult(0, FORMULA)
    g = math.gcd(sum(spec.coeffs), n)
    falling = math.perm(n - 1, k - 1)
    fact = math.factorial(k - 1)
    if spec.b % g:
        value = (-fact if k % 2 else fact) + falling
    else:
        value = (fact if k % 2 else -fact) * (g - 1) + falling
    return CountResult(value, FORMULA)


def _blocks_common_gcd(n: int, sizes: tuple[int, ...], f: int, b: int) -> CountResult:
    """Single divisor sum for blocks whose coefficients share gcd f with n:

        (f/n) * sum over d | gcd(n/f, k1, ..., kt) of
            n^t / ((n+k1)...(n+kt))
            * prod_i C((n+ki)/d, ki/d) * C_d(b/f)

    computed with exact rationals; 0 when f does not divide b.  As with the
    strict counter, the Ramanujan sum takes the reduced target b/f.
    """
    if b % f:
        return CountResult(0, FORMULA)
    bf = b // f
    t = len(sizes)
    prefactor = Fraction(n**t, math.prod(n + ki for ki in sizes))
    total = Fraction(0)
    for d in arith.divisors(math.gcd(n // f, *sizes)):
        term = Fraction(arith.ramanujan_sum(d, bf))
        for ki in sizes:
            term *= arith.binomial_guarded((n + ki) // d, ki // d)
        total += term
    value = Fraction(f, n) * prefactor * total
    if value.denominator != 1:
        raise ConsistencyError(f"block count {value} is not an integer")
    return CountResult(int(value), FORMULA)


def order_blocks_count(spec: BlockSpec) -> CountResult:
    """Count solutions that are weakly decreasing within each coefficient
    block.

    When all gcd(a_i, n) agree, uses the single divisor sum (exact rational
    arithmetic, integer result).  Otherwise evaluates the general form: for
    every divisor tuple (d_1, ..., d_t) with integral j_i = k_i*d_i/n, the
    weight prod_i d_i/(d_i+j_i) * C(d_i+j_i, j_i) multiplies the exponential
    sum over m in [1, n] with gcd(a_i*m, n) = d_i for every i, and the total
    is divided by n and rounded with a recorded residual.  Divisor tuples with
    a fractional j_i vanish through the guarded binomial and are skipped.
    """
    n, b = spec.n, spec.b
    sizes, coeffs = spec.sizes, spec.coeffs
    gcds = [math.gcd(a, n) for a in coeffs]
    if len(set(gcds)) == 1:
        return _blocks_common_gcd(n, sizes, gcds[0], b)
    t = len(sizes)
    weights: list[dict[int, Fraction]] = []
    for ki in sizes:
        per_block: dict[int, Fraction] = {}
        for d in arith.divisors(n):
            if (ki * d) % n:
                continue
            j = ki * d // n
            per_block[d] = Fraction(d, d + j) * arith.binomial_guarded(d + j, j)
        weights.append(per_block)
    acc = 0j
    for combo in itertools.product(*(sorted(w) for w in weights)):
        weight = math.prod(weights[i][d] for i, d in enumerate(combo))
        if weight == 0:
            continue
        expo = 0j
        for m in range(1, n + 1):
            if all(math.gcd(coeffs[i] * m, n) == combo[i] for i in range(t)):
                expo += arith.root_of_unity(-b * m, n)
        acc += float(weight) * expo
    value, resid = arith.round_complex_to_int(acc / n)
    if value < 0:
        raise ConsistencyError(f"negative block count {value}")
    return CountResult(value, FORMULA, resid)

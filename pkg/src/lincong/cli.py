"""Command-line front end: compute any counter, verify formulas against
oracles over sweeps, and benchmark formula vs oracle evaluation.

Exit codes: 0 success, 1 selftest/verify mismatch, 2 usage error,
3 internal-consistency failure.  Records are JSON lines by default or CSV
with a single header; all output is deterministic for fixed flags (sweep
rows come out in lexicographic grid order, whatever --jobs is).
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import math
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import arith, characters, formulas, oracles
from .errors import BudgetExceededError, ConsistencyError, DomainError
from .model import BlockSpec, CongruenceSpec, OracleBudget

MODES = ("all", "square", "strict", "distinct", "blocks", "ramanujan")

CSV_COLUMNS = (
    "mode",
    "n",
    "k",
    "a",
    "b",
    "blocks",
    "count",
    "method",
    "residual",
    "wall_time_s",
    "oracle_count",
    "oracle_count_alt",
    "match",
    "status",
    "detail",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        raise UsageError(message)


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from exc


def _parse_blocks(text: str) -> tuple[tuple[int, int], ...]:
    out = []
    for piece in text.split(","):
        try:
            size, coeff = piece.split(":")
            out.append((int(size), int(coeff)))
        except ValueError as exc:
            raise UsageError(f"expected size:coeff pairs, got {text!r}") from exc
    return tuple(out)


def build_parser() -> _Parser:
    parser = _Parser(prog="lincong", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("-n", type=int, help="modulus")
        p.add_argument("-k", type=int, help="number of variables")
        p.add_argument("-a", type=str, help="comma-separated coefficients, e.g. 1,1,3")
        p.add_argument("-b", type=int, help="target residue")
        p.add_argument("--blocks", type=str, help="size:coeff pairs, e.g. 2:2,2:3")
        p.add_argument("--mode", choices=MODES, default="all")
        p.add_argument("--n-max", type=int, help="sweep bound on the modulus")
        p.add_argument("--n-list", type=str, help="explicit comma-separated moduli")
        p.add_argument("--k-max", type=int, help="sweep bound on k")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--budget", type=int, default=10**8, help="oracle state budget per case")
        p.add_argument("--jobs", type=int, default=1, help="worker processes for sweeps")

    for name in ("count", "verify", "bench"):
        add_common(sub.add_parser(name))
    sub.add_parser("selftest")
    return parser


class Emitter:
    """Writes records as JSON lines or CSV rows with one header."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout
        self._csv = None

    def record(self, rec: dict) -> None:
        if self.fmt == "json":
            print(json.dumps(rec), file=self.stream)
            return
        if self._csv is None:
            self._csv = csv.writer(self.stream)
            self._csv.writerow(CSV_COLUMNS)
        row = []
        for col in CSV_COLUMNS:
            val = rec.get(col)
            if val is None:
                row.append("")
            elif isinstance(val, (tuple, list)):
                row.append(" ".join(map(str, val)))
            else:
                row.append(val)
        self._csv.writerow(row)

    def summary(self, rec: dict) -> None:
        if self.fmt == "json":
            print(json.dumps(rec), file=self.stream)
        else:
            body = " ".join(f"{key}={value}" for key, value in rec.items())
            print(f"# summary {body}", file=self.stream)


def _blocks_repr(blocks) -> str:
    return ",".join(f"{size}:{coeff}" for size, coeff in blocks)


# ----------------------------------------------------------------------
# count


def cmd_count(args) -> int:
    mode = args.mode
    if args.n is None:
        raise UsageError("count requires -n")
    n = args.n
    t0 = time.perf_counter()
    rec: dict = {"mode": mode, "n": n}
    if mode == "ramanujan":
        if args.b is None:
            raise UsageError("mode ramanujan requires -b")
        rec["b"] = args.b
        rec.update(count=arith.ramanujan_sum(n, args.b), method="formula", residual=0.0)
    elif mode == "blocks":
        if not args.blocks or args.b is None:
            raise UsageError("mode blocks requires --blocks and -b")
        spec = BlockSpec(n, _parse_blocks(args.blocks), args.b)
        result = formulas.order_blocks_count(spec)
        rec.update(
            k=spec.k,
            b=spec.b,
            blocks=_blocks_repr(spec.blocks),
            count=result.count,
            method=result.method,
            residual=result.residual,
        )
    elif mode == "strict":
        if args.k is None or args.a is None or args.b is None:
            raise UsageError("mode strict requires -k, -a (one value) and -b")
        coeffs = _parse_ints(args.a)
        if len(coeffs) != 1:
            raise UsageError("mode strict takes a single shared coefficient")
        result = formulas.strict_order_count(n, args.k, coeffs[0], args.b)
        rec.update(
            k=args.k,
            a=coeffs,
            b=args.b % n,
            count=result.count,
            method=result.method,
            residual=result.residual,
        )
    elif mode == "distinct":
        if args.a is None or args.b is None:
            raise UsageError("mode distinct requires -a and -b")
        coeffs = _parse_ints(args.a)
        if len(coeffs) == 1 and args.k is not None:
            result = formulas.distinct_count_equal_coeffs(n, args.k, coeffs[0], args.b)
            rec.update(k=args.k, a=coeffs)
        else:
            spec = CongruenceSpec(n, coeffs, args.b)
            result = formulas.distinct_count_gcd_condition(spec)
            rec.update(k=spec.k, a=spec.coeffs)
        rec.update(
            b=args.b % n, count=result.count, method=result.method, residual=result.residual
        )
    else:  # all | square
        if args.a is None or args.b is None:
            raise UsageError(f"mode {mode} requires -a and -b")
        spec = CongruenceSpec(n, _parse_ints(args.a), args.b)
        result = formulas.lehmer_count(spec) if mode == "all" else formulas.square_count(spec)
        rec.update(
            k=spec.k,
            a=spec.coeffs,
            b=spec.b,
            count=result.count,
            method=result.method,
            residual=result.residual,
        )
    rec["wall_time_s"] = time.perf_counter() - t0
    Emitter(args.format).record(rec)
    return 0


# ----------------------------------------------------------------------
# verify


def _coeff_multisets(values, k: int):
    return itertools.combinations_with_replacement(values, k)


def _verify_cases(args) -> list[tuple]:
    """Lexicographic case grid for the chosen mode.  Each case checks every
    target b at once (one oracle enumeration per case)."""
    mode = args.mode
    budget = args.budget
    cases: list[tuple] = []
    if mode == "ramanujan":
        n_max = args.n_max or 200
        for n in range(1, n_max + 1):
            cases.append(("ramanujan", n, budget))
    elif mode == "strict":
        n_max = args.n_max or 20
        k_max = args.k_max or 4
        for n in range(1, n_max + 1):
            for k in range(1, k_max + 1):
                for a in range(n):
                    cases.append(("strict", n, k, a, budget))
    elif mode == "square":
        n_list = _parse_ints(args.n_list) if args.n_list else (3, 5, 7, 9, 15, 25, 27, 45)
        k_max = args.k_max or 3
        for n in n_list:
            for k in range(1, k_max + 1):
                for coeffs in _coeff_multisets((1, 2, 3, 5), k):
                    cases.append(("square", n, coeffs, budget))
    elif mode == "distinct":
        n_max = args.n_max or 15
        k_max = args.k_max or 4
        for n in range(1, n_max + 1):
            for k in range(1, k_max + 1):
                for coeffs in _coeff_multisets(range(n), k):
                    if _distinct_hypothesis_holds(n, coeffs):
                        cases.append(("distinct", n, coeffs, budget))
    elif mode == "blocks":
        n_max = args.n_max or 12
        size_max = min(args.k_max or 3, 3)
        pairs = [(s, c) for s in range(1, size_max + 1) for c in (1, 2, 3)]
        for n in range(1, n_max + 1):
            for t in (1, 2, 3):
                for blocks in _coeff_multisets(pairs, t):
                    cases.append(("blocks", n, blocks, budget))
    elif mode == "all":
        n_max = args.n_max or 12
        k_max = args.k_max or 3
        for n in range(1, n_max + 1):
            for k in range(1, k_max + 1):
                for coeffs in _coeff_multisets(range(n), k):
                    cases.append(("all", n, coeffs, budget))
    else:
        raise UsageError(f"mode {mode!r} has no verify sweep")
    return cases


def _distinct_hypothesis_holds(n: int, coeffs) -> bool:
    k = len(coeffs)
    for size in range(1, k):
        for subset in itertools.combinations(coeffs, size):
            if math.gcd(sum(subset), n) != 1:
                return False
    return True


def _case_rows(case: tuple) -> dict:
    """Run one verify case: returns rows plus mismatch/residual/skip tallies."""
    mode = case[0]
    rows: list[dict] = []
    mismatches = 0
    max_residual = 0.0

    def emit(rec, oracle, alt=None):
        nonlocal mismatches, max_residual
        ok = rec["count"] == oracle and (alt is None or rec["count"] == alt)
        rec["oracle_count"] = oracle
        if alt is not None:
            rec["oracle_count_alt"] = alt
        rec["match"] = ok
        rec["status"] = "ok"
        max_residual = max(max_residual, rec.get("residual") or 0.0)
        if not ok:
            mismatches += 1
        rows.append(rec)

    try:
        if mode == "ramanujan":
            _, n, _budget = case
            for b in range(n):
                t0 = time.perf_counter()
                value = arith.ramanujan_sum(n, b)
                dt = time.perf_counter() - t0
                rec = {"mode": mode, "n": n, "b": b, "count": value,
                       "method": "formula", "residual": 0.0, "wall_time_s": dt}
                emit(rec, arith.ramanujan_sum_direct(n, b))
        elif mode == "strict":
            _, n, k, a, budget = case
            hist = oracles.oracle_histogram(
                CongruenceSpec(n, (a,) * k, 0), "strict-order", OracleBudget(budget)
            )
            for b in range(n):
                t0 = time.perf_counter()
                res = formulas.strict_order_count(n, k, a, b)
                dt = time.perf_counter() - t0
                rec = {"mode": mode, "n": n, "k": k, "a": (a,), "b": b,
                       "count": res.count, "method": res.method,
                       "residual": res.residual, "wall_time_s": dt}
                emit(rec, hist[b])
        elif mode == "square":
            _, n, coeffs, budget = case
            hist = oracles.oracle_histogram(
                CongruenceSpec(n, coeffs, 0), "square", OracleBudget(budget)
            )
            conv = oracles.square_convolution_histogram(n, coeffs)
            for b in range(n):
                t0 = time.perf_counter()
                res = formulas.square_count(CongruenceSpec(n, coeffs, b))
                dt = time.perf_counter() - t0
                rec = {"mode": mode, "n": n, "k": len(coeffs), "a": coeffs, "b": b,
                       "count": res.count, "method": res.method,
                       "residual": res.residual, "wall_time_s": dt}
                emit(rec, hist[b], conv[b])
        elif mode == "distinct":
            _, n, coeffs, budget = case
            hist = oracles.oracle_histogram(
                CongruenceSpec(n, coeffs, 0), "distinct", OracleBudget(budget)
            )
            for b in range(n):
                t0 = time.perf_counter()
                res = formulas.distinct_count_gcd_condition(CongruenceSpec(n, coeffs, b))
                dt = time.perf_counter() - t0
                rec = {"mode": mode, "n": n, "k": len(coeffs), "a": coeffs, "b": b,
                       "count": res.count, "method": res.method,
                       "residual": res.residual, "wall_time_s": dt}
                emit(rec, hist[b])
        elif mode == "blocks":
            _, n, blocks, budget = case
            hist = oracles.oracle_histogram(
                BlockSpec(n, blocks, 0), "blocks", OracleBudget(budget)
            )
            for b in range(n):
                t0 = time.perf_counter()
                res = formulas.order_blocks_count(BlockSpec(n, blocks, b))
                dt = time.perf_counter() - t0
                rec = {"mode": mode, "n": n, "k": sum(s for s, _ in blocks),
                       "blocks": _blocks_repr(blocks), "b": b,
                       "count": res.count, "method": res.method,
                       "residual": res.residual, "wall_time_s": dt}
                emit(rec, hist[b])
        else:  # all
            _, n, coeffs, budget = case
            hist = oracles.oracle_histogram(
                CongruenceSpec(n, coeffs, 0), "all", OracleBudget(budget)
            )
            for b in range(n):
                t0 = time.perf_counter()
                res = formulas.lehmer_count(CongruenceSpec(n, coeffs, b))
                dt = time.perf_counter() - t0
                rec = {"mode": mode, "n": n, "k": len(coeffs), "a": coeffs, "b": b,
                       "count": res.count, "method": res.method,
                       "residual": res.residual, "wall_time_s": dt}
                emit(rec, hist[b])
    except BudgetExceededError as exc:
        rows = [{"mode": mode, "n": case[1], "status": "skipped", "detail": str(exc)}]
        return {"rows": rows, "mismatches": 0, "max_residual": 0.0, "skipped": 1}
    return {"rows": rows, "mismatches": mismatches, "max_residual": max_residual, "skipped": 0}


def cmd_verify(args) -> int:
    cases = _verify_cases(args)
    emitter = Emitter(args.format)
    total_rows = 0
    mismatches = 0
    skipped = 0
    max_residual = 0.0
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = pool.map(_case_rows, cases, chunksize=8)
            outcomes = list(results)
    else:
        outcomes = map(_case_rows, cases)
    for outcome in outcomes:
        for row in outcome["rows"]:
            emitter.record(row)
            if row.get("status") == "ok":
                total_rows += 1
        mismatches += outcome["mismatches"]
        skipped += outcome["skipped"]
        max_residual = max(max_residual, outcome["max_residual"])
    emitter.summary(
        {
            "cases": total_rows,
            "mismatches": mismatches,
            "skipped": skipped,
            "max_residual": max_residual,
        }
    )
    return 0 if mismatches == 0 else 1


# ----------------------------------------------------------------------
# bench


def _bench_grid(args) -> list[tuple]:
    mode = args.mode
    if mode == "strict":
        n_list = _parse_ints(args.n_list) if args.n_list else (100, 1000, 10000)
        k_list = (5, 10) if args.k_max is None else tuple(range(5, args.k_max + 1, 5)) or (args.k_max,)
        return [("strict", n, k) for n in n_list for k in k_list]
    if mode == "square":
        n_list = _parse_ints(args.n_list) if args.n_list else (27, 81, 243)
        k_max = args.k_max or 3
        return [("square", n, k) for n in n_list for k in range(2, k_max + 1)]
    if mode == "blocks":
        n_list = _parse_ints(args.n_list) if args.n_list else (8, 12)
        return [("blocks", n, 4) for n in n_list]
    raise UsageError(f"mode {mode!r} has no benchmark grid")


def _bench_case(case: tuple, budget: int) -> dict:
    mode, n, k = case
    if mode == "strict":
        t0 = time.perf_counter()
        formulas.strict_order_count(n, k, 1, 1)
        t_formula = time.perf_counter() - t0
        spec = CongruenceSpec(n, (1,) * k, 1)
        restriction = "strict-order"
    elif mode == "square":
        spec = CongruenceSpec(n, (1,) * k, 1)
        t0 = time.perf_counter()
        formulas.square_count(spec)
        t_formula = time.perf_counter() - t0
        restriction = "square"
    else:
        spec = BlockSpec(n, ((2, 2), (2, 3)), 1)
        t0 = time.perf_counter()
        formulas.order_blocks_count(spec)
        t_formula = time.perf_counter() - t0
        restriction = "blocks"
    rec = {"mode": mode, "n": n, "k": k, "t_formula_s": t_formula}
    try:
        t0 = time.perf_counter()
        oracles.oracle_count(spec, restriction, OracleBudget(budget))
        rec["t_oracle_s"] = time.perf_counter() - t0
        rec["speedup"] = rec["t_oracle_s"] / t_formula if t_formula > 0 else math.inf
    except BudgetExceededError:
        rec["t_oracle_s"] = None
        rec["speedup"] = None
    return rec


def cmd_bench(args) -> int:
    grid = _bench_grid(args)
    writer = csv.writer(sys.stdout)
    writer.writerow(["n", "k", "mode", "t_formula_s", "t_oracle_s", "speedup"])
    for case in grid:
        rec = _bench_case(case, args.budget)
        writer.writerow(
            [
                rec["n"],
                rec["k"],
                rec["mode"],
                f"{rec['t_formula_s']:.6f}",
                "" if rec["t_oracle_s"] is None else f"{rec['t_oracle_s']:.6f}",
                "" if rec["speedup"] is None else f"{rec['speedup']:.2f}",
            ]
        )
    return 0


# ----------------------------------------------------------------------
# selftest


def _selftest_checks():
    import cmath

    sqrt3 = math.sqrt(3)

    def close(x, y, tol=1e-9):
        return abs(x - y) < tol

    def check_epsilon():
        assert arith.epsilon(5) == 1 and arith.epsilon(1) == 1
        assert arith.epsilon(3) == 1j and arith.epsilon(7) == 1j

    def check_gauss_primitive():
        assert close(characters.gauss_sum_real_primitive(3), 1j * sqrt3)
        assert close(characters.gauss_sum_real_primitive(5), math.sqrt(5))
        assert close(characters.gauss_sum_real_primitive(1), 1)

    def check_gauss_closed():
        chi3 = characters.legendre_character(3, 3)
        assert close(characters.gauss_sum_closed(chi3, 2), -1j * sqrt3)
        assert close(characters.gauss_sum_real_prime_power(3, 1, 1), 1j * sqrt3)
        assert close(characters.gauss_sum_real_prime_power(3, 2, 1), 0)
        assert close(characters.gauss_sum_real_prime_power(3, 2, 3), 1j * 3 * sqrt3)
        for p in (3, 5, 7):
            for ell in (1, 2):
                chi = characters.legendre_character(p**ell, p)
                for m in range(p**ell):
                    direct = characters.gauss_sum_direct(chi, m)
                    closed = characters.gauss_sum_real_prime_power(p, ell, m)
                    assert abs(direct - closed) < 1e-6, (p, ell, m)

    def check_ramanujan():
        assert arith.ramanujan_sum(9, 3) == -3
        assert arith.ramanujan_sum_direct(6, 1) == 1
        for n in range(1, 61):
            for b in range(n):
                assert arith.ramanujan_sum(n, b) == arith.ramanujan_sum_direct(n, b)

    def check_square_roots():
        assert characters.sqrt_mod_prime_power(1, 3, 3) == frozenset({1, 26})
        assert characters.sqrt_mod_prime_power(9, 3, 3) == frozenset({3, 6, 12, 15, 21, 24})
        assert characters.sqrt_mod_prime_power(0, 3, 3) == frozenset({0, 9, 18})
        assert characters.square_profile(9).square_set == frozenset({0, 1, 4, 7})
        assert characters.square_profile(3).s == 2
        assert characters.square_profile(27).s == 11

    def check_square_counts():
        assert formulas.square_count(CongruenceSpec(27, (1, 1), 1)).count == 4
        assert formulas.square_count(CongruenceSpec(9, (1, 1), 3)).count == 0
        assert formulas.square_count(CongruenceSpec(9, (1, 1), 2)).count == 3
        corollary = formulas.square_count_corollary(3, 2, CongruenceSpec(9, (1, 1), 2))
        assert corollary.count == 3
        witnesses = oracles.oracle_solutions(CongruenceSpec(27, (1, 1), 1), "square")
        assert set(witnesses) == {(1, 0), (0, 1), (9, 19), (19, 9)}

    def check_blocks():
        assert formulas.order_blocks_count(BlockSpec(6, ((2, 2), (2, 3)), 5)).count == 63
        assert formulas.order_blocks_count(BlockSpec(4, ((2, 1), (2, 3)), 1)).count == 24
        for n, coeffs, b in ((5, (1, 2, 3), 4), (6, (2, 4), 2), (9, (3, 6), 3)):
            blocks = tuple((1, a) for a in coeffs)
            res = formulas.order_blocks_count(BlockSpec(n, blocks, b))
            ref = formulas.lehmer_count(CongruenceSpec(n, coeffs, b))
            assert res.count == ref.count, (n, coeffs, b)

    def check_ordered():
        assert formulas.strict_order_count(5, 2, 1, 0).count == 2
        assert formulas.strict_order_count(12, 1, 3, 6).count == 3
        assert formulas.distinct_count_equal_coeffs(5, 2, 1, 0).count == 4
        assert formulas.distinct_count_equal_coeffs(5, 2, 1, 1).count == 4
        assert formulas.distinct_count_equal_coeffs(9, 3, 1, 0).count == 60
        assert formulas.distinct_count_gcd_condition(CongruenceSpec(5, (1, 4), 0)).count == 0
        assert formulas.distinct_count_gcd_condition(CongruenceSpec(7, (1, 1), 1)).count == 6
        assert formulas.distinct_count_gcd_condition(CongruenceSpec(5, (1, 2, 2), 0)).count == 20

    def check_lehmer():
        assert formulas.lehmer_count(CongruenceSpec(27, (1, 1), 1)).count == 27
        assert formulas.lehmer_count(CongruenceSpec(4, (2,), 3)).count == 0
        assert formulas.lehmer_count(CongruenceSpec(6, (2, 4), 4)).count == 12

    def check_decomposition():
        for p in (3, 5):
            for ell in (1, 2):
                for m in range(p**ell):
                    lhs, rhs = characters.square_decomposition_identity(p, ell, m)
                    assert abs(lhs - rhs) < 1e-6, (p, ell, m)

    def check_product_identity():
        for n in range(1, 9):
            for a in range(n):
                for m in range(n):
                    assert characters.product_identity_check(n, a, m) < 1e-6, (n, a, m)

    def check_dft_roundtrip():
        values = (2, -1, 5, 0, 3, 7, 1, -4, 2, 0, 1, 9)
        f = characters.PeriodicFunction(values)
        fhat = characters.PeriodicFunction(tuple(characters.dft(f, b) for b in range(12)))
        for b in range(12):
            assert abs(characters.idft(fhat, b) - values[b]) < 1e-9
        units9 = characters.PeriodicFunction(tuple(int(math.gcd(j, 9) == 1) for j in range(9)))
        assert abs(characters.dft(units9, 3) - (-3)) < 1e-9
        assert close(cmath.exp(0), arith.root_of_unity(0, 5))

    return [
        ("epsilon-values", check_epsilon),
        ("gauss-real-primitive", check_gauss_primitive),
        ("gauss-closed-forms", check_gauss_closed),
        ("ramanujan-sums", check_ramanujan),
        ("square-roots-and-profiles", check_square_roots),
        ("square-solution-counts", check_square_counts),
        ("block-order-counts", check_blocks),
        ("ordered-and-distinct-counts", check_ordered),
        ("unrestricted-counts", check_lehmer),
        ("square-decomposition-identity", check_decomposition),
        ("exponential-product-identity", check_product_identity),
        ("dft-roundtrip", check_dft_roundtrip),
    ]


def cmd_selftest(_args=None) -> int:
    checks = _selftest_checks()
    for name, fn in checks:
        try:
            fn()
        except Exception as exc:  # first failure wins, with its case
            print(f"FAIL {name}: {exc!r}")
            return 1
        print(f"ok {name}")
    print(f"selftest: {len(checks)} checks passed")
    return 0


# ----------------------------------------------------------------------


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "count":
            return cmd_count(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "bench":
            return cmd_bench(args)
        return cmd_selftest(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

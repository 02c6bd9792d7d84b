"""Command-line front end.

Exit codes: 0 verified, 1 an assertion failed (a reproducer file is written),
2 a precondition does not hold, 3 bad input.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from .bounds import crossing_bound, lower_bounds
from .density import zone_partition
from .errors import PreconditionError
from .generators import gen_asymmetric, gen_freiman_large, gen_random, gen_small_extremal
from .linear_sets import (
    EmptySetError,
    IntervalSet,
    SetParseError,
    as_fraction,
    format_set,
    measure,
    minkowski_sum,
    normalize_to_zero,
    parse_set,
    set_to_json,
)
from .oracle import gap_segments
from .report import dumps, jsonable
from .structure import (
    extremal_large_decompose,
    freiman_verify,
    lemma_mes_check,
    lemma_mes_segments,
    relaxed_verify,
    small_extremal_recognize,
)

EXIT_OK, EXIT_FAILED, EXIT_PRECONDITION, EXIT_INPUT = 0, 1, 2, 3
THEOREMS = ("3k4", "relaxed", "extremal-large", "extremal-small", "lemma-mes")


class InputError(Exception):
    pass


def _read_set(arg: str, stdin) -> IntervalSet:
    if arg == "-":
        line = stdin.readline()
        if not line:
            raise InputError("expected a set on standard input")
        text = line
    elif arg.startswith("@"):
        try:
            text = Path(arg[1:]).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {arg[1:]}: {exc.strerror}") from exc
    else:
        text = arg
    return parse_set(text)


def _read_pair(args, stdin) -> tuple[IntervalSet, IntervalSet]:
    A, B = _read_set(args.A, stdin), _read_set(args.B, stdin)
    if not A or not B:
        raise EmptySetError("both sets must be nonempty")
    return A, B


def _emit(out, payload: dict, args) -> None:
    out.write(dumps(payload, getattr(args, "decimal", None)) + "\n")


def _dump_reproducer(args, payload: dict) -> Path:
    text = dumps(payload)
    digest = hashlib.sha256(text.encode()).hexdigest()[:10]
    directory = Path(args.repro_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"sumsetlab-repro-{payload.get('theorem', 'sweep')}-{digest}.json"
    path.write_text(text + "\n")
    return path


# --- sum ---------------------------------------------------------------------


def cmd_sum(args, out, stdin) -> int:
    A, B = _read_pair(args, stdin)
    S = minkowski_sum(A, B)
    if args.format == "json":
        out.write(json.dumps(jsonable(S, args.decimal)) + "\n")
    else:
        out.write(format_set(S, args.decimal) + "\n")
    return EXIT_OK


# --- analyze -----------------------------------------------------------------


def analyze_payload(A: IntervalSet, B: IntervalSet) -> tuple[dict, list[str]]:
    """The analysis report and a list of guard messages for skipped sections."""
    guards: list[str] = []
    S = minkowski_sum(A, B)
    lamA, lamB = measure(A), measure(B)
    payload: dict = {
        "command": "analyze",
        "A": A, "B": B,
        "lambda_A": lamA, "lambda_B": lamB,
        "diam_A": A.diameter, "diam_B": B.diameter,
        "sumset": S, "lambda_sum": measure(S),
    }
    for name, lam in (("A", lamA), ("B", lamB)):
        if lam == 0:
            guards.append(f"{name} has measure 0: bounds and zones are skipped")
    if guards:
        payload.update(bounds=None, zones=None, guards=guards)
        return payload, guards
    rep = lower_bounds(A, B)
    payload.update(
        ruzsa={"K": rep.params.K, "delta": rep.params.delta, "ratio": rep.params.ratio},
        K_A=rep.K_A, K_A_positive=rep.K_A_positive,
        bounds=[
            {"name": b.name, "value": b.value, "main": b.main, "alternative": b.alternative, "holds": b.holds}
            for b in rep.bounds
        ],
        binding=rep.binding, slack=rep.slack, violations=list(rep.violations),
    )
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    swapped = B0.diameter > A0.diameter
    P, Q = (B0, A0) if swapped else (A0, B0)
    zp = zone_partition(P, Q)
    zones = {"ordered_by_diameter": "B,A" if swapped else "A,B", **zp.summary()}
    zones.update(Z1_set=zp.Z1, Z2_set=zp.Z2, Z3_set=zp.Z3)
    if zp.delta > 0:
        cb = crossing_bound(P, Q, zones=zp)
        zones["crossing_bound"] = {"value": cb.value, "holds": cb.holds}
    else:
        guards.append("Delta <= 0: zone runs and the crossing bound are not defined")
    payload.update(delta=zp.delta, zones=zones, guards=guards)
    return payload, guards


def cmd_analyze(args, out, stdin) -> int:
    A, B = _read_pair(args, stdin)
    payload, guards = analyze_payload(A, B)
    if args.plot:
        from .plotting import write_svg

        A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
        if B0.diameter > A0.diameter:
            A0, B0 = B0, A0
        if measure(A0) > 0 and measure(B0) > 0:
            write_svg(A0, B0, args.plot)
            payload["plot"] = str(args.plot)
    _emit(out, payload, args)
    if payload.get("bounds") is None:
        return EXIT_PRECONDITION
    return EXIT_FAILED if payload["violations"] else EXIT_OK


# --- verify ------------------------------------------------------------------


def _checks_json(checks) -> list[dict]:
    return [{"name": ch.name, "ok": ch.ok, "lhs": ch.lhs, "relation": ch.relation, "rhs": ch.rhs} for ch in checks]


def _verify_one(args, A: IntervalSet, B: IntervalSet) -> tuple[str, dict]:
    """Run one theorem; returns (status, details) with status verified|failed|precondition."""
    th = args.theorem
    if th == "3k4":
        rep = freiman_verify(A, B)
        details = {
            "hyp_i": rep.hyp_i, "hyp_ii": rep.hyp_ii, "I": rep.interval_I, "e": rep.e, "c": rep.c,
            "I_length": rep.I_length, "delta": rep.delta, "checks": _checks_json(rep.checks),
        }
        if args.format == "text":
            details["text"] = rep.render_text()
        if not rep.applies:
            return "precondition", details
        return ("verified" if rep.ok else "failed"), details
    if th == "relaxed":
        rep = relaxed_verify(A, B, args.m)
        details = {
            "m": rep.m, "n": rep.n, "delta": rep.delta, "intervals": list(rep.intervals),
            "assembled": list(rep.assembled), "total": rep.total, "checks": _checks_json(rep.checks),
        }
        return ("verified" if rep.ok else "failed"), details
    if th == "extremal-large":
        dec = extremal_large_decompose(A, B)
        details = {
            "variant": dec.variant, "stable": dec.stable, "swapped": dec.swapped, "b": dec.b, "c": dec.c,
            "A1": dec.A1, "A2": dec.A2, "interior": dec.interior, "B1": dec.B1, "B2": dec.B2, "B_I": dec.B_I,
            "c1": dec.c1, "c2": dec.c2, "sharper_bound_failures": list(dec.sharper_bound_failures),
            "checks": _checks_json(dec.checks),
        }
        return ("verified" if dec.ok else "failed"), details
    if th == "extremal-small":
        rec = small_extremal_recognize(A, B)
        details = {
            "lambda_sum": rec.lambda_sum, "target": rec.target, "strict_regime": rec.strict_regime,
            "recognized": rec.recognized, "mismatch": rec.mismatch,
        }
        if rec.shape is not None:
            s = rec.shape
            details["parameters"] = {
                "K": s.K, "delta": s.delta, "b1": s.b1, "b2": s.b2, "D_B": s.D_B,
                "shiftA": s.shiftA, "shiftB": s.shiftB,
            }
            return "verified", details
        # outside the strict regime the characterization makes no claim
        return ("failed" if rec.strict_regime else "precondition"), details
    if th == "lemma-mes":
        A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
        if args.x is not None:
            res = lemma_mes_check(A0, B0, as_fraction(args.x))
            details = {"x": res.x, "applicable": res.applicable, "first": res.first, "second": res.second}
            if not res.applicable:
                return "precondition", details
            return ("verified" if res.holds else "failed"), details
        S = minkowski_sum(A0, B0)
        segs = gap_segments(S, (0, A0.diameter + B0.diameter), args.q)
        witnesses = lemma_mes_segments(A0, B0, segs) if segs else []
        details = {"q": args.q, "gap_segments": [list(s) for s in segs], "witnesses": witnesses}
        if not segs:
            return "precondition", details
        return ("failed" if witnesses else "verified"), details
    raise InputError(f"unknown theorem {th}")


def cmd_verify(args, out, stdin) -> int:
    if args.sweep is not None:
        return _verify_sweep(args, out)
    if args.A is None or args.B is None:
        raise InputError("verify needs two sets (or --sweep N)")
    if args.theorem is None:
        raise InputError("verify needs --theorem")
    A, B = _read_pair(args, stdin)
    payload = {"command": "verify", "theorem": args.theorem, "A": A, "B": B}
    try:
        status, details = _verify_one(args, A, B)
    except PreconditionError as exc:
        payload.update(status="precondition", reason=str(exc), slack=exc.slack)
        _emit(out, payload, args)
        return EXIT_PRECONDITION
    payload.update(status=status, **details)
    if status == "failed":
        repro = {"theorem": args.theorem, "A": A, "B": B, "m": args.m, "x": args.x, "details": details}
        payload["reproducer"] = str(_dump_reproducer(args, repro))
    if args.format == "text" and "text" in details:
        out.write(details["text"] + "\n")
    else:
        _emit(out, payload, args)
    return {"verified": EXIT_OK, "failed": EXIT_FAILED, "precondition": EXIT_PRECONDITION}[status]


_THEOREM_CHECKS = {
    "3k4": ("structure",), "relaxed": ("structure",), "lemma-mes": ("lemma",),
    None: ("bounds", "structure", "lemma", "torus", "oracle"),
}


def _verify_sweep(args, out) -> int:
    from .sweep import CHECKS, prepare, run_sweep

    if args.checks:
        checks = tuple(c.strip() for c in args.checks.split(","))
        unknown = [c for c in checks if c not in CHECKS]
        if unknown:
            raise InputError(f"unknown checks {unknown}; choose from {sorted(CHECKS)}")
    elif args.theorem in _THEOREM_CHECKS:
        checks = _THEOREM_CHECKS[args.theorem]
    else:
        raise InputError(f"--sweep does not support --theorem {args.theorem}")
    if args.sweep < 0:
        raise InputError("--sweep needs a nonnegative count")
    res = run_sweep(args.sweep, args.seed, checks)
    payload = {
        "command": "verify", "sweep": res.count, "seed": res.base_seed, "checks": list(res.checks),
        "status": "verified" if res.ok else "failed", "stats": dict(sorted(res.stats.items())),
        "failures": [{"seed": s, "check": c, "message": m} for s, c, m in res.failures[:50]],
        "failure_count": len(res.failures),
    }
    if not res.ok:
        seed = res.failures[0][0]
        case = prepare(seed)
        repro = {"theorem": "sweep", "seed": seed, "A": case.A, "B": case.B,
                 "failures": [m for s, _, m in res.failures if s == seed]}
        payload["reproducer"] = str(_dump_reproducer(args, repro))
    _emit(out, payload, args)
    return EXIT_OK if res.ok else EXIT_FAILED


# --- generate ----------------------------------------------------------------


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise InputError(f"family {args.family} needs --{' --'.join(missing)}")
    return [getattr(args, n) for n in names]


def _frac(text: str) -> Fraction:
    try:
        return as_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def cmd_generate(args, out, stdin) -> int:
    fam = args.family
    try:
        if fam == "freiman_large":
            n, m, a1, a2 = _need(args, "n", "m", "a1", "a2")
            A = gen_freiman_large(n, m, a1, a2)
            B = A
            lam_sum = measure(minkowski_sum(A, A))
            check = f"lambda(A+A) = {lam_sum} = D_A + lambda(A) = {A.diameter + measure(A)}"
            params = {"n": n, "m": m, "a1": a1, "a2": a2}
            extra = {}
        elif fam == "asymmetric":
            a, b, eps, n = _need(args, "a", "b", "eps", "n")
            pair = gen_asymmetric(a, b, eps, n)
            A, B = pair
            check = f"lambda(A+B) = {pair.lambda_sum} = D_B + lambda(A) = {B.diameter + measure(A)}"
            params = {"a": a, "b": b, "eps": eps, "n": n}
            extra = {"regime_product": pair.regime_product, "strict_regime": pair.strict_regime}
        elif fam == "small_extremal":
            K, delta, b1, b2, DB = _need(args, "K", "delta", "b1", "b2", "DB")
            pair = gen_small_extremal(K, delta, b1, b2, DB, strict=args.strict)
            A, B = pair
            check = (
                f"lambda(A+B) = {pair.lambda_sum} = lambda(A) + (K+delta) lambda(B) = "
                f"{measure(A) + (K + delta) * measure(B)}"
            )
            params = {"K": K, "delta": delta, "b1": b1, "b2": b2, "D_B": DB}
            extra = {"strict_regime": pair.strict_regime}
        elif fam == "random":
            seed, count = _need(args, "seed", "count")
            scale = args.scale if args.scale is not None else Fraction(1)
            density = args.density if args.density is not None else Fraction(1, 2)
            A = gen_random(seed, count, scale, density)
            B = None
            check = f"canonical set with 0 and {scale}: {A.inf == 0 and A.sup == scale}"
            params = {"seed": seed, "count": count, "scale": scale, "density": density}
            extra = {}
        else:
            raise InputError(f"unknown family {fam}")
    except (ValueError, ArithmeticError) as exc:
        raise InputError(f"{fam}: {exc}") from exc

    if args.format == "json":
        payload = {"command": "generate", "family": fam, "params": params, "A": A, "check": check, **extra}
        if B is not None:
            payload["B"] = B
        _emit(out, payload, args)
    else:
        out.write(f"A = {format_set(A, args.decimal)}\n")
        if B is not None:
            out.write(f"B = {format_set(B, args.decimal)}\n")
        for k, v in extra.items():
            out.write(f"{k} = {v}\n")
        out.write(f"check: {check}\n")
    return EXIT_OK


# --- plot --------------------------------------------------------------------


def cmd_plot(args, out, stdin) -> int:
    from .plotting import write_svg

    A, B = _read_pair(args, stdin)
    path = write_svg(A, B, args.out)
    out.write(f"{path}\n")
    return EXIT_OK


# --- entry point -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="sumsetlab",
        description="Exact analysis of sums of finite unions of real intervals.",
        epilog="Sets: '[0,1/5] U [9/10,1]', '{0}; [1/10,9/10]', '[[0,1]]', JSON, '-' (stdin line) or @file.",
    )
    p.add_argument("--decimal", type=int, default=None, metavar="N",
                   help="render numbers as fixed-point decimals with N digits")
    sub = p.add_subparsers(dest="command", required=True)

    def pair(sp):
        sp.add_argument("A")
        sp.add_argument("B")

    sp = sub.add_parser("sum", help="print A+B")
    pair(sp)
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_sum)

    sp = sub.add_parser("analyze", help="measures, bounds, binding bound and zones as JSON")
    pair(sp)
    sp.add_argument("--plot", type=Path, default=None, help="also write the profile figure (SVG)")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("verify", help="check a theorem on a pair, or sweep random pairs")
    sp.add_argument("A", nargs="?")
    sp.add_argument("B", nargs="?")
    sp.add_argument("--theorem", choices=THEOREMS)
    sp.add_argument("--m", type=int, default=0, help="interval budget for the relaxed theorem")
    sp.add_argument("--x", default=None, help="point outside A+B for lemma-mes")
    sp.add_argument("--q", type=int, default=360, help="grid resolution for lemma-mes gap points")
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.add_argument("--sweep", type=int, default=None, metavar="N", help="check N seeded random pairs")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--checks", default=None, help="comma-separated sweep checks")
    sp.add_argument("--repro-dir", default=".", help="where reproducer files are written")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("generate", help="build a named family of sets")
    sp.add_argument("--family", required=True, choices=("freiman_large", "asymmetric", "small_extremal", "random"))
    for name in ("n", "m", "K", "seed", "count"):
        sp.add_argument(f"--{name}", type=int)
    for name in ("a1", "a2", "a", "b", "eps", "delta", "b1", "b2", "DB", "scale", "density"):
        sp.add_argument(f"--{name}", type=_frac)
    sp.add_argument("--strict", action="store_true", help="require the strict regime for small_extremal")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("plot", help="write the g/h profile figure with zones as SVG")
    pair(sp)
    sp.add_argument("--out", type=Path, required=True)
    sp.set_defaults(func=cmd_plot)
    return p


def main(argv=None, out=None, stdin=None) -> int:
    out = out or sys.stdout
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out, stdin)
    except (SetParseError, EmptySetError, InputError) as exc:
        sys.stderr.write(f"sumsetlab: input error: {exc}\n")
        return EXIT_INPUT
    except PreconditionError as exc:
        sys.stderr.write(f"sumsetlab: precondition not met: {exc}\n")
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())

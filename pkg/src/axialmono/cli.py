"""Command-line front end.

Every subcommand prints one JSON report on stdout.  Exit codes: 0 when all
checks pass, 1 when a check fails, 2 on usage or input errors.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import battery, serialize, specfun
from .axial import (AxialQuadruple, block, decompose_two_sided,
                    extract, vekua_left_residual, vekua_two_sided_residual)
from .ckext import NotTwoSidedData, ck_extend, ck_two_sided, verify
from .mpoly import CliffPoly, dirac_left, dirac_right, laplacian, to_latex
from .planewave import (Exponential, PowerSeries, assemble_profiles, example1_quadruple,
                        i_h_direct_array, i_h_profiles, sphere_rule)
from .primitive import DEFAULT_RECT, Primitive, primitivize
from .spherical import fischer_harmonic, fischer_monogenic, inner_monogenic_basis

COMMANDS = ("basis", "ck-extend", "block", "decompose", "fischer", "vekua", "planewave",
            "funk-hecke-check", "specfun-selftest", "primitivize", "battery")


class UsageError(ValueError):
    pass


def _zero_flag(p) -> str:
    return "0" if p.is_zero() else "nonzero"


def _threads() -> int | None:
    raw = os.environ.get("AXIAL_THREADS")
    if raw is None:
        return None
    try:
        n = int(raw)
    except ValueError:
        raise UsageError("AXIAL_THREADS must be a positive integer") from None
    if n < 1:
        raise UsageError("AXIAL_THREADS must be a positive integer")
    return n


# --- input helpers -------------------------------------------------------------

def _read_json(args, hashes: dict):
    if not args.input:
        raise UsageError("--input is required")
    try:
        with open(args.input, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise UsageError(str(exc)) from None
    hashes[args.input] = hashlib.sha256(raw).hexdigest()
    try:
        return json.loads(raw)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON in {args.input}: {exc}") from None


def _read_poly(args, hashes) -> CliffPoly:
    try:
        return serialize.load_cliffpoly(_read_json(args, hashes))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"not a polynomial: {exc}") from None


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"missing {', '.join(missing)}")


def _basis_element(args):
    _need(args, "m", "k", "ell")
    basis = inner_monogenic_basis(args.m, args.k, args.ell)
    if not basis:
        raise UsageError(f"no inner monogenics for m={args.m}, k={args.k}, ell={args.ell}")
    if not 0 <= args.basis_index < len(basis):
        raise UsageError(f"--basis-index must be in 0..{len(basis) - 1}")
    return basis[args.basis_index]


def _block_poly(args):
    _need(args, "family", "n")
    P = _basis_element(args)
    return block(args.family, P, args.n), P


def _quadruple(args, hashes) -> AxialQuadruple:
    """From ``--input`` JSON, the Bessel example (``--mode bessel``) or a block."""
    if args.mode == "bessel":
        return example1_quadruple(_basis_element(args))
    if args.input:
        try:
            return serialize.load_quadruple(_read_json(args, hashes))
        except (KeyError, TypeError, ValueError) as exc:
            raise UsageError(f"not an axial quadruple: {exc}") from None
    F, P = _block_poly(args)
    return extract(F, P)


def _rect(args):
    rect = tuple(args.rect) if args.rect else DEFAULT_RECT
    a1, b1, a2, b2 = rect
    if not (a1 < b1 and 0 < a2 < b2):
        raise UsageError("--rect needs a1 < b1 and 0 < a2 < b2")
    return rect


def _grid(x0_range, r_range, n0: int, nr: int):
    x0, r = np.meshgrid(np.linspace(*x0_range, n0), np.linspace(*r_range, nr), indexing="ij")
    return x0.ravel(), r.ravel()


# --- subcommands ----------------------------------------------------------------

def cmd_basis(args, hashes):
    _need(args, "m", "k", "ell")
    basis = inner_monogenic_basis(args.m, args.k, args.ell)
    ok = all(dirac_left(P.poly).is_zero() and dirac_right(P.poly).is_zero() for P in basis)
    return ok, {"dimension": len(basis), "degenerate": args.ell in (0, args.m),
                "basis": [P.poly for P in basis], "two_sided": ok}


def cmd_ck_extend(args, hashes):
    g = _read_poly(args, hashes)
    if args.check == "two-sided":
        try:
            f = ck_two_sided(g)
        except NotTwoSidedData as exc:
            return False, {"error": str(exc), "difference": exc.difference}
    elif args.check is None:
        f = ck_extend(g)
    else:
        raise UsageError("--check accepts only 'two-sided'")
    rec = verify(f).as_record()
    ok = rec["left_residual"] == "0" and (args.check is None or rec["right_residual"] == "0")
    return ok, {"extension": f, "latex": to_latex(f), "verification": rec}


def cmd_block(args, hashes):
    F, P = _block_poly(args)
    rec = verify(F).as_record()
    ok = rec["left_residual"] == "0" and rec["right_residual"] == "0"
    return ok, {"block": F, "latex": to_latex(F), "degenerate": P.degenerate,
                "cr_left": rec["left_residual"], "cr_right": rec["right_residual"]}


def cmd_decompose(args, hashes):
    M = _read_poly(args, hashes)
    try:
        dec = decompose_two_sided(M)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return dec.exact, {"S": dec.S, "reconstruction_residual": _zero_flag(dec.residual)}


def cmd_fischer(args, hashes):
    p = _read_poly(args, hashes)
    m = p.m
    try:
        if args.mode in (None, "harmonic"):
            H, Q = fischer_harmonic(p)
            residual = p - H - CliffPoly.norm_sq(m) * Q
            cert = laplacian(H, include_x0=False)
            return residual.is_zero() and cert.is_zero(), {
                "H": H, "Q": Q, "reconstruction_residual": _zero_flag(residual),
                "laplacian_H": _zero_flag(cert)}
        if args.mode == "monogenic":
            M, U, V = fischer_monogenic(p)
            x = CliffPoly.vector_var(m)
            residual = p - M - x * U - V * x
            left, right = dirac_left(M), dirac_right(M)
            ok = residual.is_zero() and left.is_zero() and right.is_zero()
            return ok, {"M": M, "U": U, "V": V, "reconstruction_residual": _zero_flag(residual),
                        "dirac_left_M": _zero_flag(left), "dirac_right_M": _zero_flag(right)}
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    raise UsageError("--mode must be harmonic or monogenic")


def cmd_vekua(args, hashes):
    q = _quadruple(args, hashes)
    names = ("eq1", "eq2", "eq3", "eq4", "c_minus_b")
    res = vekua_two_sided_residual(q)
    if q.polynomial:
        flags = {n: "0" if not f else "nonzero" for n, f in zip(names, res)}
        return all(v == "0" for v in flags.values()), {
            "quadruple": q, "residuals": flags, "degenerate": q.degenerate}
    tol = args.tol if args.tol is not None else 1e-6
    x0s, rs = _grid((-1.0, 1.0), (0.5, 3.0), 9, 11)
    maxima = {n: float(np.max(np.abs(f(x0s, rs)))) for n, f in zip(names, res)}
    return max(maxima.values()) < tol, {"residual_max": maxima, "tol": tol,
                                        "grid": {"x0": [-1.0, 1.0], "r": [0.5, 3.0]}}


def _holo(args):
    if args.h in (None, "exp"):
        return Exponential(), "exp"
    if args.h == "pow":
        _need(args, "pow_degree")
        return PowerSeries.power(args.pow_degree), f"pow{args.pow_degree}"
    raise UsageError("--h must be exp or pow")


def cmd_planewave(args, hashes):
    _need(args, "m", "k", "ell")
    h, label = _holo(args)
    x0 = 0.3 if args.x0 is None else args.x0
    r = 1.2 if args.r is None else args.r
    if r <= 0:
        raise UsageError("--r must be positive")
    tol = args.tol if args.tol is not None else 1e-7
    vals = i_h_profiles(h, args.m, args.k, args.ell, x0, r)
    report = {"h": label, "x0": x0, "r": r, "profiles": dict(zip("ABCD", vals))}
    if args.m != 3:
        report["discrepancy"] = None
        return True, report
    P = _basis_element(args)
    u = np.arange(1.0, args.m + 1.0)
    x = r * u / np.linalg.norm(u)
    direct = i_h_direct_array(h, P, x0, x, sphere_rule(3, 40))
    from_profiles = assemble_profiles(vals, P, x)
    err = float(np.max(np.abs(direct - from_profiles)))
    report.update({"x": x, "discrepancy": err, "tol": tol})
    return err < tol, report


def cmd_funk_hecke(args, hashes):
    crit = battery.funk_hecke(seed=args.seed)
    return crit.passed, crit.as_record(timing=args.timing)


def cmd_specfun(args, hashes):
    rows = specfun.selftest()
    return all(r["passed"] for r in rows), {"rows": rows}


def _sample(f, rect, n: int = 5):
    a1, b1, a2, b2 = (float(v) for v in rect)
    x0s, rs = _grid((a1, b1), (a2, b2), n, n)
    return {"x0": x0s, "r": rs, "values": np.asarray(f(x0s, rs))}


def cmd_primitivize(args, hashes):
    q = _quadruple(args, hashes)
    rect = _rect(args)
    tol = args.tol if args.tol is not None else 1e-6
    pr: Primitive = primitivize(q, rect, check_tol=tol)
    if pr.exact:
        M, N = pr.M, pr.N
        res = vekua_left_residual(M, N, q.k, q.m)
        report = {"M": M, "N": N, "c": pr.c,
                  "residuals": {"left_eq1": "0" if not res[0] else "nonzero",
                                "left_eq2": "0" if not res[1] else "nonzero",
                                "difference": "constant"}}
        return not res[0] and not res[1], report
    report = {"M": _sample(pr.M, rect), "N": _sample(pr.N, rect), "c": pr.c,
              "residuals": pr.residuals, "tol": tol}
    return pr.residuals["left_residual"] < tol and pr.residuals["c_spread"] < tol, report


def cmd_battery(args, hashes):
    results = battery.run_battery(seed=args.seed, quick=args.quick)
    for crit in results:
        print(crit.line(), file=sys.stderr)
    return all(c.passed for c in results), {
        "criteria": [c.as_record(timing=args.timing) for c in results]}


HANDLERS = {
    "basis": cmd_basis, "ck-extend": cmd_ck_extend, "block": cmd_block,
    "decompose": cmd_decompose, "fischer": cmd_fischer, "vekua": cmd_vekua,
    "planewave": cmd_planewave, "funk-hecke-check": cmd_funk_hecke,
    "specfun-selftest": cmd_specfun, "primitivize": cmd_primitivize, "battery": cmd_battery,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--ell", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--family", type=int, choices=(1, 2))
    common.add_argument("--basis-index", type=int, default=0)
    common.add_argument("--input", metavar="PATH")
    common.add_argument("--rect", type=float, nargs=4, metavar=("A1", "B1", "A2", "B2"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--tol", type=float)
    common.add_argument("--quick", action="store_true")
    common.add_argument("--check")
    common.add_argument("--mode")
    common.add_argument("--h")
    common.add_argument("--pow-degree", type=int)
    common.add_argument("--x0", type=float)
    common.add_argument("--r", type=float)
    common.add_argument("--timing", action="store_true",
                        help="add wall-clock seconds to the report (breaks byte stability)")
    parser = argparse.ArgumentParser(prog="axialmono", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None) -> tuple[int, dict]:
    """Parse ``argv``, run the subcommand and return ``(exit code, report)``."""
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), {"command": argv, "error": "usage"}
    hashes: dict[str, str] = {}
    report: dict = {"command": argv}
    t0 = time.perf_counter()
    try:
        threads = _threads()
        if threads is not None:
            report["threads"] = threads
        ok, result = HANDLERS[args.command](args, hashes)
    except ValueError as exc:
        # bad flags or input data that violates a precondition
        report.update({"error": str(exc), "input_sha256": hashes})
        return 2, report
    except ArithmeticError as exc:
        # a numeric tolerance was missed: that is a failed check
        report.update({"error": str(exc), "input_sha256": hashes, "passed": False})
        return 1, report
    report.update({"input_sha256": hashes, "result": result, "passed": bool(ok)})
    if args.timing:
        report["seconds"] = time.perf_counter() - t0
    return (0 if ok else 1), report


def main(argv=None) -> int:
    code, report = run(argv)
    if report.get("error") != "usage":
        print(serialize.dumps(report))
    if "error" in report and report["error"] != "usage":
        print(f"error: {report['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())

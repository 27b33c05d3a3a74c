"""Command-line entry point.

Subcommands expose the exponent tables, the per-parameter coefficient set,
the certificate suite, and the numerics referees (energy monotonicity,
radial solver, Pohozaev balance).  JSON is the canonical output format; CSV
and pretty tables are projections of the same data.  Exit codes follow the
sysexits convention: 0 verified/success, 1 falsified or residual exceeded,
2 inconclusive, 64 usage error, 65 bad input data, 74 I/O failure.

Interval refinement precision is capped by the TRIHARMONIC_MAX_BITS
environment variable (see the intervals module).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction
from typing import Optional

import numpy as np

from . import certifier, energy, exponents, profiles, radial
from .certificates import (
    FALSIFIED,
    INCONCLUSIVE,
    SCHEMA_VERSION,
    VERIFIED,
    bundle_to_json,
    encode_value,
)
from .coefficients import Params, coefficient_set, p_of_k, singular_stability

EX_OK = 0
EX_FALSIFIED = 1
EX_INCONCLUSIVE = 2
EX_USAGE = 64
EX_DATA = 65
EX_IOERR = 74


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"cannot write {out}: {exc}", file=sys.stderr)
        raise SystemExit(EX_IOERR)


def _json(doc: dict) -> str:
    doc.setdefault("schema_version", SCHEMA_VERSION)
    return json.dumps(encode_value(doc), sort_keys=True, separators=(",", ":")) + "\n"


def _parse_fraction(text: str, what: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        print(f"invalid {what}: {text!r}", file=sys.stderr)
        raise SystemExit(EX_USAGE)


def _parse_n_range(args) -> range:
    if args.n is not None:
        return range(args.n, args.n + 1)
    lo, _, hi = args.n_range.partition(":")
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        print(f"invalid range: {args.n_range!r}", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    if hi_i < lo_i:
        print("empty dimension range", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return range(lo_i, hi_i + 1)


def _ev_pretty(ev) -> str:
    if ev.is_infinite:
        return "inf"
    mid = (ev.value.lo + ev.value.hi) / 2
    return f"{float(mid):.10g}"


# ---------------------------------------------------------------- exponents


def cmd_exponents(args) -> int:
    rows = []
    for n in _parse_n_range(args):
        try:
            rows.append(exponents.exponent_chain_report(n, Fraction(args.width)))
        except ValueError as exc:
            print(f"n={n}: {exc}", file=sys.stderr)
            return EX_USAGE
    names = ("serrin", "sobolev", "pc", "pm", "pm1", "pc_harmonic", "pc_biharmonic")
    if args.format == "json":
        doc = {"rows": [exponents.chain_report_to_dict(r) for r in rows]}
        _emit(_json(doc), args.out)
    elif args.format == "csv":
        lines = ["n," + ",".join(names) + ",ordering"]
        for r in rows:
            verdicts = ";".join(f"{v.claim}={v.status}" for v in r.ordering_verdicts)
            lines.append(
                f"{r.n},"
                + ",".join(_ev_pretty(getattr(r, nm)) for nm in names)
                + f",{verdicts}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = []
        header = f"{'n':>4} " + " ".join(f"{nm:>14}" for nm in names)
        lines.append(header)
        for r in rows:
            lines.append(
                f"{r.n:>4} "
                + " ".join(f"{_ev_pretty(getattr(r, nm)):>14}" for nm in names)
            )
            for v in r.ordering_verdicts:
                lines.append(f"     {v.claim}: {v.status}")
        _emit("\n".join(lines) + "\n", args.out)
    worst = EX_OK
    for r in rows:
        for v in r.ordering_verdicts:
            if v.status == FALSIFIED:
                return EX_FALSIFIED
            if v.status == INCONCLUSIVE:
                worst = EX_INCONCLUSIVE
    return worst


# ------------------------------------------------------------------- coeffs


def _params_from_args(args) -> Params:
    if (args.p is None) == (getattr(args, "k", None) is None):
        print("provide exactly one of --p / --k", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    if args.p is not None:
        p = _parse_fraction(args.p, "exponent p")
    else:
        p = p_of_k(_parse_fraction(args.k, "degree k"))
    try:
        return Params(args.n, p)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        raise SystemExit(EX_USAGE)


def cmd_coeffs(args) -> int:
    params = _params_from_args(args)
    cs = coefficient_set(params)
    doc = {"coefficients": encode_value(cs)}
    try:
        doc["singular_stability"] = singular_stability(params)
    except ValueError:
        doc["singular_stability"] = "not-applicable"
    _emit(_json(doc), args.out)
    return EX_OK


# ------------------------------------------------------------------ certify


def cmd_certify(args) -> int:
    lemmas = None
    if args.lemma:
        known = list(certifier._RUNNERS) + ["split-parameter-monotonicity-gates"]
        selected = []
        for want in args.lemma:
            hits = [cid for cid in known if cid == want or cid.startswith(want)]
            if not hits:
                print(f"unknown lemma id: {want}", file=sys.stderr)
                return EX_USAGE
            selected.extend(hits)
        lemmas = tuple(selected)
    config = certifier.CertifierConfig(
        n_max=args.n_max,
        band_n_max=min(args.n_max * 2, 100) if args.n_max < 50 else 100,
        scan_n_max=max(args.n_max, 200),
        lemmas=lemmas,
    )
    certs = certifier.run_all(config)
    if args.tamper and certs:
        # negative-control hook: deliberately corrupt one verdict
        certs[0] = replace(certs[0], status=FALSIFIED,
                           witness={"note": "tamper demo", "mode": args.tamper})
    _emit(bundle_to_json(certs), args.out)
    if any(c.status == FALSIFIED for c in certs):
        return EX_FALSIFIED
    if any(c.status == INCONCLUSIVE for c in certs):
        return EX_INCONCLUSIVE
    return EX_OK


# ------------------------------------------------------------- monotonicity


def _build_profile(args, n: int) -> profiles.HarmonicTestFunction:
    kind = args.profile
    sp = args.shape_param
    if kind == "gaussian":
        shape = profiles.gaussian(sp if sp is not None else 1.0)
    elif kind == "exp_decay":
        shape = profiles.exp_decay(sp if sp is not None else 1.0)
    elif kind == "bump":
        shape = profiles.bump((1.0,), support=sp if sp is not None else 1.0)
    elif kind == "power":
        if sp is None:
            print("power profile needs --shape-param (the decay exponent)",
                  file=sys.stderr)
            raise SystemExit(EX_USAGE)
        shape = profiles.power(sp)
    else:  # pragma: no cover - argparse restricts choices
        raise SystemExit(EX_USAGE)
    return profiles.HarmonicTestFunction(shape, args.lmode, n)


def _parse_lambda_range(text: str):
    parts = text.split(":")
    if len(parts) != 3:
        print(f"invalid lambda range: {text!r} (want a:b:steps)", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    try:
        a, b, steps = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        print(f"invalid lambda range: {text!r}", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    if not (0 < a <= b) or steps < 1:
        print("lambda range must be positive and non-empty", file=sys.stderr)
        raise SystemExit(EX_USAGE)
    return np.linspace(a, b, steps)


def cmd_monotonicity(args) -> int:
    params = _params_from_args(args)
    u = _build_profile(args, args.n)
    lams = _parse_lambda_range(args.lambda_range)
    rows = []
    worst = EX_OK
    try:
        for lam in lams:
            rep = energy.fd_check(u, float(lam), params)
            mono = energy.dE_formula(u, float(lam), params, energy.VARIANT_MONOTONE)
            rich_res = abs(rep.dE_fd_richardson - rep.dE_formula) / max(
                abs(rep.dE_formula), 1e-300
            )
            rows.append(
                {
                    "lam": rep.lam,
                    "E": rep.E,
                    "dE_formula": rep.dE_formula,
                    "dE_fd": rep.dE_fd,
                    "fd_step": rep.fd_step,
                    "order": rep.convergence_order_estimate,
                    "reading": rep.reading,
                    "residual_rel": rich_res,
                    "dE_monotone": mono,
                }
            )
            if rich_res > args.tol:
                worst = EX_FALSIFIED
            if mono < -1e-10:
                worst = EX_FALSIFIED
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EX_DATA
    bound = energy.monotonicity_bound_check(u, params, [float(x) for x in lams])
    if args.format == "csv":
        lines = ["lambda,E,dE_formula,dE_fd"]
        for r in rows:
            lines.append(
                f"{r['lam']:.17g},{r['E']:.17g},"
                f"{r['dE_formula']:.17g},{r['dE_fd']:.17g}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    else:
        doc = {
            "params": {"n": args.n, "p": params.p},
            "profile": {"kind": args.profile, "lmode": args.lmode},
            "rows": rows,
            "ratio_floor": bound["ratio_floor"],
            "skipped_homogeneous": bound["skipped"],
            "residual_tolerance": args.tol,
        }
        _emit(_json(doc), args.out)
    return worst


# ------------------------------------------------------------------- radial


def cmd_radial(args) -> int:
    params = _params_from_args(args)
    try:
        prof = radial.radial_ivp_solve(
            params, args.u0, args.v0, args.w0, r_max=args.rmax, tol=args.tol
        )
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EX_DATA
    doc = {
        "start": {
            "kind": "regular",
            "n": args.n,
            "p": params.p,
            "u0": args.u0,
            "v0": args.v0,
            "w0": args.w0,
            "r_max": args.rmax,
            "tol": args.tol,
        },
        "r_start": prof.r_start,
        "r_end": prof.r_end,
        "blew_up": prof.blew_up,
        "collocation_residual": prof.residual,
        "grid": [float(x) for x in prof.grid],
        "values": [[float(x) for x in row] for row in prof.values],
    }
    _emit(_json(doc), args.out)
    return EX_OK


def _profile_from_file(path: str) -> radial.RadialProfile:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        print(f"cannot read {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_IOERR)
    except json.JSONDecodeError as exc:
        print(f"malformed profile file {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_DATA)
    start = doc.get("start")
    if not start or start.get("kind") != "regular":
        print("profile file lacks a regular start block; cannot reconstruct",
              file=sys.stderr)
        raise SystemExit(EX_DATA)
    try:
        params = Params(int(start["n"]), Fraction(start["p"]))
        return radial.radial_ivp_solve(
            params,
            float(start["u0"]), float(start["v0"]), float(start["w0"]),
            r_max=float(start["r_max"]), tol=float(start["tol"]),
        )
    except (KeyError, ValueError) as exc:
        print(f"bad profile file {path}: {exc}", file=sys.stderr)
        raise SystemExit(EX_DATA)


def cmd_pohozaev(args) -> int:
    prof = _profile_from_file(args.profile_file)
    try:
        sides = radial.pohozaev_sides(prof, args.R)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EX_DATA
    doc = {"R": args.R, **{k: float(v) for k, v in sides.items()}}
    _emit(_json(doc), args.out)
    return EX_OK if sides["residual_rel"] <= args.tol else EX_FALSIFIED


# -------------------------------------------------------------------- main


def build_parser() -> _Parser:
    top = _Parser(prog="triharmonic",
                  description="certified computations for the triharmonic "
                              "Lane-Emden stability thresholds")
    sub = top.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("exponents", help="critical-exponent table")
    g = pe.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--n-range")
    pe.add_argument("--width", default="1/1000000000000",
                    help="enclosure width for finite exponents")
    pe.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    pe.add_argument("--out")
    pe.set_defaults(fn=cmd_exponents)

    pco = sub.add_parser("coeffs", help="coefficient set at one (n, p)")
    pco.add_argument("--n", type=int, required=True)
    pco.add_argument("--p")
    pco.add_argument("--k")
    pco.add_argument("--out")
    pco.set_defaults(fn=cmd_coeffs)

    pc = sub.add_parser("certify", help="run the certificate suite")
    pc.add_argument("--lemma", action="append",
                    help="claim id (or prefix) to run; repeatable")
    pc.add_argument("--n-max", type=int, default=50)
    pc.add_argument("--out")
    pc.add_argument("--tamper", help=argparse.SUPPRESS)
    pc.set_defaults(fn=cmd_certify)

    pm = sub.add_parser("monotonicity", help="energy derivative referee")
    pm.add_argument("--n", type=int, required=True)
    pm.add_argument("--p")
    pm.add_argument("--k")
    pm.add_argument("--profile", choices=profiles.KINDS, default="gaussian")
    pm.add_argument("--shape-param", type=float,
                    help="width / rate / support / decay exponent")
    pm.add_argument("--lmode", type=int, default=0)
    pm.add_argument("--lambda-range", default="0.5:2.0:5")
    pm.add_argument("--tol", type=float, default=1e-6,
                    help="formula-vs-FD relative residual threshold")
    pm.add_argument("--format", choices=("json", "csv"), default="json")
    pm.add_argument("--out")
    pm.set_defaults(fn=cmd_monotonicity)

    pr = sub.add_parser("radial", help="radial initial-value solve")
    pr.add_argument("--n", type=int, required=True)
    pr.add_argument("--p")
    pr.add_argument("--k")
    pr.add_argument("--u0", type=float, required=True)
    pr.add_argument("--v0", type=float, default=0.0)
    pr.add_argument("--w0", type=float, default=0.0)
    pr.add_argument("--rmax", type=float, default=10.0)
    pr.add_argument("--tol", type=float, default=1e-12)
    pr.add_argument("--out")
    pr.set_defaults(fn=cmd_radial)

    pp = sub.add_parser("pohozaev", help="Pohozaev balance referee")
    pp.add_argument("--profile-file", required=True)
    pp.add_argument("--R", type=float, required=True)
    pp.add_argument("--tol", type=float, default=1e-6,
                    help="relative residual threshold")
    pp.add_argument("--out")
    pp.set_defaults(fn=cmd_pohozaev)
    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SystemExit:
        raise
    except BrokenPipeError:
        return EX_IOERR


if __name__ == "__main__":
    sys.exit(main())

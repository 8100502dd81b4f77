"""Command-line surface: build and export operators, verify identities,
sweep cutoffs, print closed-form spectra, and dump phase states.

Exit codes: 0 success, 1 a verification check failed, 2 bad usage or an
invalid configuration, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algebra
from .cmatrix import matrix_to_dict, vector_to_dict
from .qnumerics import AlgebraConfig, primitive_root, q_number
from .verify import run_all, sweep

BUILD_OPS = {
    "a": algebra.annihilation,
    "adag": algebra.creation,
    "n": algebra.number,
    "g": algebra.clock,
    "h": algebra.shift,
    "hdag": algebra.shift_dag,
    "f": algebra.fourier,
    "bigh": algebra.cyclic_shift,
    "atilde": lambda cfg: algebra.fourier_conjugate(algebra.annihilation(cfg), cfg),
    "atildedag": lambda cfg: algebra.fourier_conjugate(algebra.creation(cfg), cfg),
    "ntilde": lambda cfg: algebra.fourier_conjugate(algebra.number(cfg), cfg),
    "braceHdag": lambda cfg: algebra.phase_braces(cfg)[0],
    "braceHdag1": lambda cfg: algebra.phase_braces(cfg)[1],
    "sqrtBraceHdag": lambda cfg: algebra.phase_brace_roots(cfg)[0],
    "sqrtBraceHdag1": lambda cfg: algebra.phase_brace_roots(cfg)[1],
}

SPECTRUM_OPS = ("g", "bigh", "braceHdag", "braceHdag1")


def _write_or_print(payload: str, out: str | None) -> None:
    if out is None:
        print(payload)
    else:
        Path(out).write_text(payload + "\n", encoding="utf-8")


def _cmd_build(args: argparse.Namespace) -> int:
    cfg = AlgebraConfig(s=args.s, k=args.k)
    mat = BUILD_OPS[args.op](cfg)
    _write_or_print(json.dumps(matrix_to_dict(mat), allow_nan=False), args.out)
    return 0


def _format_check_line(check) -> str:
    verdict = "PASS" if check.passed else "FAIL"
    return f"  {check.name:<24} dev={check.deviation:.3e}  thr={check.threshold:.3e}  {verdict}"


def _cmd_verify(args: argparse.Namespace) -> int:
    cfg = AlgebraConfig(s=args.s, k=args.k, tol=args.tol)
    report = run_all(cfg)
    if args.json:
        print(json.dumps(report.to_json_dict(), allow_nan=False))
    else:
        print(f"identity checks for s={cfg.s}, k={cfg.k}, tol={cfg.tol:g}")
        for check in report.checks:
            print(_format_check_line(check))
        passed = sum(c.passed for c in report.checks)
        print(f"overall: {'PASS' if report.overall_pass else 'FAIL'} ({passed}/{len(report.checks)})")
    return 0 if report.overall_pass else 1


def _cmd_sweep(args: argparse.Namespace) -> int:
    reports = sweep(args.s_min, args.s_max, k=args.k, tol=args.tol)
    if args.json:
        print(json.dumps([r.to_json_dict() for r in reports], allow_nan=False))
    else:
        for report in reports:
            passed = sum(c.passed for c in report.checks)
            verdict = "PASS" if report.overall_pass else "FAIL"
            print(f"s={report.config.s:<3} {verdict} ({passed}/{len(report.checks)})")
        good = sum(r.overall_pass for r in reports)
        print(f"passed {good}/{len(reports)}")
    return 0 if all(r.overall_pass for r in reports) else 1


def _fmt_scalar(z: complex) -> str:
    if abs(z.imag) < 1e-15:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _cmd_spectrum(args: argparse.Namespace) -> int:
    cfg = AlgebraConfig(s=args.s, k=args.k)
    q = primitive_root(cfg)
    values = {
        "g": lambda n: q ** n,
        "bigh": lambda n: q ** (-n),
        "braceHdag": lambda n: complex(q_number(n, cfg)),
        "braceHdag1": lambda n: complex(q_number(n + 1, cfg)),
    }[args.op]
    print(", ".join(_fmt_scalar(values(n)) for n in range(cfg.dim)))
    return 0


def _cmd_phase_states(args: argparse.Namespace) -> int:
    cfg = AlgebraConfig(s=args.s, k=args.k)
    states = [vector_to_dict(algebra.phase_state(m, cfg)) for m in range(cfg.dim)]
    _write_or_print(json.dumps(states, allow_nan=False), args.out)
    return 0


def _add_config_flags(parser: argparse.ArgumentParser, with_tol: bool = False) -> None:
    parser.add_argument("--s", type=int, required=True, help="Fock cutoff (dimension is s+1)")
    parser.add_argument("--k", type=int, default=1, help="root index, coprime to s+1 (default 1)")
    if with_tol:
        parser.add_argument("--tol", type=float, default=1e-9,
                            help="base tolerance; checks use tol*(s+1) (default 1e-9)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qboson",
        description="Finite q-boson algebra at a primitive root of unity: "
                    "operators, identity verification, polar decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct one operator and write it as JSON")
    _add_config_flags(p)
    p.add_argument("--op", required=True, choices=sorted(BUILD_OPS),
                   help="operator to build")
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("verify", help="run the identity catalog for one configuration")
    _add_config_flags(p, with_tol=True)
    p.add_argument("--json", action="store_true", help="emit the report as JSON")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("sweep", help="run the identity catalog across a range of cutoffs")
    p.add_argument("--s-min", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true", help="emit all reports as a JSON array")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("spectrum", help="print a closed-form spectrum, ordered by level")
    _add_config_flags(p)
    p.add_argument("--op", required=True, choices=SPECTRUM_OPS,
                   help="operator with a closed-form spectrum")
    p.set_defaults(func=_cmd_spectrum)

    p = sub.add_parser("phase-states", help="write all s+1 phase states as a JSON array")
    _add_config_flags(p)
    p.add_argument("--out", help="output path (stdout when omitted)")
    p.set_defaults(func=_cmd_phase_states)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"qboson: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qboson: error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Subcommands: compose, recover, roundtrip, chardecomp, gen, selftest.
Machine-readable results go to stdout, diagnostics to stderr.  Exit codes:
0 success, 1 malformed input, 2 precondition violation, 3 tolerance
failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .characteristic import (
    NotPositiveSemidefiniteError,
    ZeroTraceError,
    characteristic_decomposition,
    regularity_report,
)
from .linalg import NotHermitianError, eig_hermitian3
from .parametrization import (
    NotUnitaryError,
    RecoveryToleranceError,
    compose_core,
    compose_unitary,
    recover_params,
)
from .documents import (
    MalformedDocumentError,
    parse_matrix,
    parse_params,
    serialize_matrix,
    serialize_params,
)
from .sampling import ALGORITHM, SeededGenerator, generate_haar_unitary
from .selftest import run_selftest

EXIT_OK = 0
EXIT_MALFORMED = 1
EXIT_PRECONDITION = 2
EXIT_TOLERANCE = 3


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MalformedDocumentError(f"cannot read {path}: {exc}") from exc


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _grid(m) -> dict:
    return {
        "re": [[float(m[i, j].real) for j in range(3)] for i in range(3)],
        "im": [[float(m[i, j].imag) for j in range(3)] for i in range(3)],
    }


def _cmd_compose(args) -> int:
    p = parse_params(_read_text(args.params))
    if args.core_only:
        m = compose_core(p.chi, p.mu, p.alpha1, p.alpha2, p.alpha3, p.beta2)
    else:
        m = compose_unitary(p)
    _emit(serialize_matrix(m, kind="unitary"), args.out)
    return EXIT_OK


def _cmd_recover(args) -> int:
    u = parse_matrix(_read_text(args.matrix))
    report = recover_params(u, tolerance=args.tolerance)
    doc = json.loads(serialize_params(report.params))
    doc["residual"] = report.residual
    doc["branch"] = report.branch
    doc["global_phase_alpha1_degenerate"] = report.global_phase_alpha1_degenerate
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_roundtrip(args) -> int:
    u = parse_matrix(_read_text(args.matrix))
    report = recover_params(u, tolerance=args.tolerance)
    residual = float(np.linalg.norm(compose_unitary(report.params) - u))
    sys.stdout.write(json.dumps({"residual": residual, "branch": report.branch}) + "\n")
    return EXIT_OK if residual <= args.tolerance else EXIT_TOLERANCE


def _cmd_chardecomp(args) -> int:
    r = parse_matrix(_read_text(args.matrix))
    c = characteristic_decomposition(r)
    rep = regularity_report(r)
    e = eig_hermitian3(r)
    doc = {
        "trace": c.traceR,
        "eigenvalues": [float(x) for x in e.values],
        "P1": c.purity.P1,
        "P2": c.purity.P2,
        "coefficients": list(c.coefficients),
        "Rp_hat": _grid(c.Rp_hat),
        "Rm_hat": _grid(c.Rm_hat),
        "Ru_hat": _grid(c.Ru_hat),
        "regularity": {
            "m_hat": [rep.m1_hat, rep.m2_hat, rep.m3_hat],
            "chi_m": rep.chi_m,
            "regular": rep.regular,
            "im_norm": rep.im_norm,
        },
    }
    _emit(json.dumps(doc, indent=2) + "\n", args.out)
    return EXIT_OK


def _cmd_gen(args) -> int:
    g = SeededGenerator(args.seed)
    for i in range(args.haar):
        text = serialize_matrix(generate_haar_unitary(g), kind="unitary")
        if args.out_dir:
            path = Path(args.out_dir)
            path.mkdir(parents=True, exist_ok=True)
            (path / f"haar_{args.seed}_{i:04d}.json").write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    return EXIT_OK


def _cmd_selftest(args) -> int:
    ok = run_selftest(write=lambda line: sys.stdout.write(line + "\n"))
    return EXIT_OK if ok else EXIT_TOLERANCE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unitary3",
        description="Nine-parameter composition and recovery of 3x3 unitaries, "
        "characteristic decomposition of coherency matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compose", help="params document to matrix document")
    c.add_argument("--params", required=True)
    c.add_argument("--core-only", action="store_true")
    c.add_argument("--out")
    c.set_defaults(func=_cmd_compose)

    r = sub.add_parser("recover", help="matrix document to params document")
    r.add_argument("--matrix", required=True)
    r.add_argument("--tolerance", type=float, default=1e-10)
    r.add_argument("--out")
    r.set_defaults(func=_cmd_recover)

    t = sub.add_parser("roundtrip", help="recover then recompose; print residual")
    t.add_argument("--matrix", required=True)
    t.add_argument("--tolerance", type=float, default=1e-10)
    t.set_defaults(func=_cmd_roundtrip)

    d = sub.add_parser("chardecomp", help="characteristic decomposition report")
    d.add_argument("--matrix", required=True)
    d.add_argument("--out")
    d.set_defaults(func=_cmd_chardecomp)

    g = sub.add_parser("gen", help=f"emit Haar-random unitaries ({ALGORITHM})")
    g.add_argument("--haar", type=int, required=True)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out-dir")
    g.set_defaults(func=_cmd_gen)

    s = sub.add_parser("selftest", help="run the invariant suite")
    s.set_defaults(func=_cmd_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MalformedDocumentError as exc:
        print(f"error: malformed input: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except (
        NotUnitaryError,
        NotHermitianError,
        ZeroTraceError,
        NotPositiveSemidefiniteError,
        ValueError,
    ) as exc:
        print(f"error: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (RecoveryToleranceError, RuntimeError) as exc:
        print(f"error: tolerance failure: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE


if __name__ == "__main__":
    sys.exit(main())

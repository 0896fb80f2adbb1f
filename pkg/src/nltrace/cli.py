"""Command-line front end.

Subcommands: eig, trace, norm, check, dominate, witness, suite.  All input
and output is JSON (schemas in :mod:`nltrace.io`).  Exit codes: 0 success,
1 suite property failure, 2 parse/usage error, 3 non-Hermitian or not-PSD
input, 4 dimension/range mismatch, 5 witness precondition failure.
"""

import argparse
import sys

import numpy as np

from nltrace import io
from nltrace.errors import (
    DimensionMismatch,
    NLTraceError,
    NonConvergence,
    NonHermitian,
    NotConcave,
    NotDominated,
    NotPSD,
    PreconditionError,
    RangeError,
)
from nltrace.majorization import (
    contraction_factor,
    eigen_dominates,
    majorizes,
    weak_majorizes,
)
from nltrace.measures import alpha_to_coeffs, is_concave
from nltrace.norms import (
    alpha_norm,
    ky_fan_decomposition,
    ky_fan_norm,
    non_two_positive_witness,
)
from nltrace.choquet import choquet_trace
from nltrace.spectral import eig_desc, eig_desc_psd
from nltrace.sugeno import sugeno_trace
from nltrace.suites import run_suites


def _emit(payload: dict) -> int:
    print(io.dumps(payload))
    return 0


def _cmd_eig(args) -> int:
    spec = eig_desc(io.load_matrix(args.matrix))
    return _emit({"eigenvalues": [float(x) for x in spec.eigenvalues]})


def _cmd_trace(args) -> int:
    alpha = io.load_alpha(args.alpha)
    matrix = io.load_matrix(args.matrix)
    fn = choquet_trace if args.kind == "choquet" else sugeno_trace
    return _emit({"value": fn(matrix, alpha)})


def _cmd_norm(args) -> int:
    if args.kyfan is not None:
        if len(args.files) != 1:
            raise PreconditionError("--kyfan takes exactly one matrix file")
        matrix = io.load_matrix(args.files[0])
        return _emit({"value": ky_fan_norm(matrix, args.kyfan)})
    if len(args.files) != 2:
        raise PreconditionError("norm needs an alpha file and a matrix file, or --kyfan K")
    alpha = io.load_alpha(args.files[0])
    matrix = io.load_matrix(args.files[1])
    return _emit({"value": alpha_norm(matrix, alpha)})


def _cmd_check(args) -> int:
    alpha = io.load_alpha(args.alpha)
    concave = is_concave(alpha)
    coeffs = [float(c) for c in alpha_to_coeffs(alpha)]
    weights = (
        [float(w) for w in ky_fan_decomposition(alpha)] if concave else None
    )
    return _emit({"concave": concave, "coeffs": coeffs, "kyfan_weights": weights})


def _cmd_dominate(args) -> int:
    a = io.load_matrix(args.a)
    b = io.load_matrix(args.b)
    dominates = eigen_dominates(b, a)
    la = eig_desc_psd(a).eigenvalues
    lb = eig_desc_psd(b).eigenvalues
    payload = {
        "eigen_dominates": dominates,
        "weak_majorizes": weak_majorizes(lb, la),
        "majorizes": majorizes(lb, la),
        "contraction": None,
        "residual": None,
    }
    if args.factor and dominates:
        c = contraction_factor(a, b)
        payload["contraction"] = io.matrix_to_dict(c)
        payload["residual"] = float(np.linalg.norm(a - c @ b @ c.conj().T, "fro"))
    return _emit(payload)


def _cmd_witness(args) -> int:
    try:
        coeffs = [float(x) for x in args.coeffs.split(",")]
    except ValueError as exc:
        raise PreconditionError(f"bad --coeffs list: {exc}") from exc
    report = non_two_positive_witness(coeffs, args.k, args.t)
    return _emit(
        {
            "a": io.matrix_to_dict(report.a),
            "b": io.matrix_to_dict(report.b),
            "c": io.matrix_to_dict(report.c),
            "s_a": report.s_a,
            "s_b": report.s_b,
            "s_c": report.s_c,
            "determinant": report.determinant,
            "verified": True,
        }
    )


def _cmd_suite(args) -> int:
    reports = run_suites(args.suite, args.n, args.samples, args.seed)
    payload = {
        "seed": args.seed,
        "suites": [r.to_dict() for r in reports],
        "pass": all(r.passed for r in reports),
    }
    _emit(payload)
    return 0 if payload["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nltrace",
        description="Non-linear traces, alpha-norms and positivity checks "
        "on positive semidefinite matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eig", help="eigenvalues of a Hermitian matrix, decreasing")
    p.add_argument("matrix", help="matrix JSON file")
    p.set_defaults(func=_cmd_eig)

    p = sub.add_parser("trace", help="Choquet- or Sugeno-type trace of a PSD matrix")
    p.add_argument("kind", choices=("choquet", "sugeno"))
    p.add_argument("alpha", help="alpha JSON file")
    p.add_argument("matrix", help="matrix JSON file")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("norm", help="alpha-norm or Ky Fan norm of a square matrix")
    p.add_argument("--kyfan", type=int, metavar="K", help="Ky Fan k-norm instead of an alpha file")
    p.add_argument("files", nargs="+", metavar="FILE", help="[alpha JSON file] matrix JSON file")
    p.set_defaults(func=_cmd_norm)

    p = sub.add_parser("check", help="concavity, coefficients and Ky Fan weights of alpha")
    p.add_argument("alpha", help="alpha JSON file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("dominate", help="eigenvalue dominance and contraction factor")
    p.add_argument("a", help="matrix JSON file (candidate dominated side)")
    p.add_argument("b", help="matrix JSON file (candidate dominating side)")
    p.add_argument("--factor", action="store_true", help="emit the contraction when dominance holds")
    p.set_defaults(func=_cmd_dominate)

    p = sub.add_parser("witness", help="certified 2-positivity counterexample")
    p.add_argument("--coeffs", required=True, help="comma-separated nonnegative coefficients")
    p.add_argument("--k", type=int, required=True, help="1-indexed position with coeff[k] < coeff[k+1]")
    p.add_argument("--t", type=float, required=True, help="scale parameter, t > 1 with coeff[k+1] > sqrt(t)*coeff[k]")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("suite", help="run the property suites and report JSON")
    p.add_argument("--n", type=int, default=6, help="maximum matrix dimension (2..8)")
    p.add_argument("--samples", type=int, default=200, help="instances per property")
    p.add_argument("--seed", type=int, default=42, help="master 64-bit seed")
    p.add_argument(
        "--suite",
        default="all",
        choices=("choquet", "sugeno", "majorization", "norms", "all"),
    )
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except io.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5 if args.command == "witness" else 2
    except (NonHermitian, NotPSD, NonConvergence) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (DimensionMismatch, RangeError, NotConcave, NotDominated) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except NLTraceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

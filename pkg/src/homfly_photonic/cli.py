"""Command line front end.

Subcommands: ``eval``, ``word``, ``curve``, ``reconstruct``.

Exit statuses: 0 success, 2 usage, 3 parameter domain, 4 evaluation or
reduction failure, 5 internal error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .braidval import (
    Chirality,
    eval_word,
    framing_normalize,
    framing_normalize_numeric,
    reconstruct_polynomial,
    two_strand_invariant,
)
from .errors import EvaluationError, ParameterDomainError, WordSyntaxError
from .operators import make_params
from .photonics import NoiseModel, curve

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_EVAL, EXIT_INTERNAL = 0, 2, 3, 4, 5

CURVE_FIELDS = ("k", "theory_abs", "p1_norm", "estimated_abs", "std_error")


def fmt_real(x: float) -> str:
    """Fixed-point with 12 digits after the decimal point."""
    s = f"{x:.12f}"
    return "0.000000000000" if s == "-0.000000000000" else s


def fmt_complex(z: complex) -> str:
    return f"{fmt_real(z.real)}{'-' if z.imag < 0 else '+'}{fmt_real(abs(z.imag))}j"


def _params_from(args, parser):
    if args.N is None or args.k is None:
        parser.error("numeric backend requires --N and --k")
    return make_params(args.N, args.k)


def _render(value) -> str:
    return fmt_complex(complex(value)) if isinstance(value, complex) else str(value)


def cmd_eval(args, parser) -> str:
    params = _params_from(args, parser) if args.backend == "numeric" else None
    r = two_strand_invariant(args.n, Chirality(args.chirality), args.backend, params)
    if args.framing_writhe is not None:
        if params is None:
            r = framing_normalize(r, args.framing_writhe)
        else:
            r = framing_normalize_numeric(r, args.framing_writhe, params)
        return _render(r.framing_normalized)
    return _render(r.invariant)


def cmd_word(args, parser) -> str:
    params = _params_from(args, parser) if args.backend == "numeric" else None
    return _render(eval_word(args.word, args.backend, params).invariant)


def curve_rows(points) -> list[dict]:
    return [
        {"k": str(p.k), "theory_abs": fmt_real(p.theory_abs), "p1_norm": fmt_real(p.p1_norm),
         "estimated_abs": fmt_real(p.estimate_abs), "std_error": fmt_real(p.std_error)}
        for p in points
    ]


def write_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CURVE_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue()


def write_json(rows) -> str:
    recs = [{f: (int(r[f]) if f == "k" else float(r[f])) for f in CURVE_FIELDS} for r in rows]
    return json.dumps(recs, indent=1) + "\n"


def cmd_curve(args, parser) -> str:
    noise = NoiseModel(args.sigma_theta, args.sigma_det, args.repeats, args.seed)
    pts = curve(args.n, args.N, args.k_min, args.k_max, Chirality(args.chirality), noise,
                workers=args.workers)
    rows = curve_rows(pts)
    out = write_csv(rows) if args.format == "csv" else write_json(rows)
    return out.rstrip("\n")


def cmd_reconstruct(args, parser) -> str:
    rec = reconstruct_polynomial(args.n, Chirality(args.chirality), full_output=True)
    return f"{rec.value}\n# residual: {rec.residual:.3e}"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="homfly-photonic",
        description="Two-strand HOMFLY-PT invariants and Mach-Zehnder emulation.")
    sub = p.add_subparsers(dest="command", required=True)

    def chirality(sp):
        sp.add_argument("--chirality", choices=["pos", "neg"], default="pos")

    def point(sp):
        sp.add_argument("--backend", choices=["exact", "numeric"], default="exact")
        sp.add_argument("--N", type=int, default=None, help="rank (numeric backend)")
        sp.add_argument("--k", type=int, default=None, help="level (numeric backend)")

    e = sub.add_parser("eval", help="invariant of the n-crossing two-strand closure")
    e.add_argument("--n", type=int, required=True)
    chirality(e)
    point(e)
    e.add_argument("--framing-writhe", type=int, default=None)
    e.set_defaults(func=cmd_eval)

    w = sub.add_parser("word", help="evaluate an explicit operator word")
    w.add_argument("word", help='tokens S Sd T^m Td^m Sb Tb^m Tbd^m Tnd^m Tndd^m, e.g. "S Td^3 Sd"')
    point(w)
    w.set_defaults(func=cmd_word)

    c = sub.add_parser("curve", help="theory vs emulated |matrix element| over a k range")
    c.add_argument("--n", type=int, default=3)
    c.add_argument("--N", type=int, default=2)
    c.add_argument("--k-min", type=int, required=True)
    c.add_argument("--k-max", type=int, required=True)
    chirality(c)
    c.add_argument("--sigma-theta", type=float, default=0.0)
    c.add_argument("--sigma-det", type=float, default=0.0)
    c.add_argument("--repeats", type=int, default=1)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--format", choices=["csv", "json"], default="csv")
    c.add_argument("--workers", type=int, default=None)
    c.set_defaults(func=cmd_curve)

    r = sub.add_parser("reconstruct", help="recover the polynomial from numeric samples")
    r.add_argument("--n", type=int, required=True)
    chirality(r)
    r.set_defaults(func=cmd_reconstruct)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        out = args.func(args, parser)
    except SystemExit as exc:  # parser.error inside a command
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    except WordSyntaxError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParameterDomainError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except EvaluationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_EVAL
    except ValueError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - last resort
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 an orthogonality violation was found, 2 usage or
domain error.
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, cyclo, structure
from . import polyring as pr
from .numtheory import DomainError, divisors
from .polyring import RatPoly

CACHE_ENV = "INVCYCLO_CACHE_DIR"
DISPLAY_CAP = 30

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class UsageError(Exception):
    pass


def default_cache_dir() -> Path:
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "invcyclo"


def resolve_cache_dir(flag: str | None) -> Path:
    if flag:
        return Path(flag)
    if os.environ.get(CACHE_ENV):
        return Path(os.environ[CACHE_ENV])
    return default_cache_dir()


def envelope(command: str, parameters: dict, result) -> dict:
    return {"command": command, "parameters": parameters, "result": result, "version": __version__}


def dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {value}")
    return value


def int_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    a, b = int(m[1]), int(m[2])
    if not 1 <= a <= b:
        raise argparse.ArgumentTypeError(f"need 1 <= A <= B, got {text}")
    return a, b


def parse_coeffs(text: str) -> RatPoly:
    tokens = [t.strip() for t in text.split(",")]
    if not all(_RATIONAL.match(t) for t in tokens):
        raise UsageError(f"cannot parse coefficient list {text!r}; use integers or a/b")
    try:
        return RatPoly([Fraction(t) for t in tokens])
    except ZeroDivisionError:
        raise UsageError(f"zero denominator in {text!r}") from None


def _poly_result(f) -> dict:
    return {"coefficients": [str(c) for c in f.coeffs], "degree": len(f) - 1 if len(f) else "zero"}


def _poly_text(f) -> str:
    return f"coefficients: [{', '.join(str(c) for c in f.coeffs)}]\n{pr.render(f)}\n"


# -- subcommands -------------------------------------------------------------

def cmd_phi(args) -> int:
    f = cyclo.phi(args.n, algorithm=args.algorithm)
    if args.format == "json":
        args.out.write(dump(envelope("phi", {"n": args.n, "algorithm": args.algorithm}, _poly_result(f))))
    else:
        args.out.write(_poly_text(f))
    return 0


def cmd_psi(args) -> int:
    f = cyclo.psi(args.n)
    if args.format == "json":
        args.out.write(dump(envelope("psi", {"n": args.n}, _poly_result(f))))
    else:
        args.out.write(_poly_text(f))
    return 0


def cmd_psind(args) -> int:
    f = cyclo.psi_nd(args.n, args.d)
    if args.format == "json":
        args.out.write(dump(envelope("psind", {"n": args.n, "d": args.d}, _poly_result(f))))
    else:
        args.out.write(_poly_text(f))
    return 0


def _write_certificates(certs, directory: Path) -> None:
    directory.mkdir(parents=True, exist_ok=True)
    for c in certs:
        (directory / f"certificate-{c.n}.json").write_text(dump(c.as_dict(with_timestamp=True)))


def cmd_verify(args) -> int:
    if (args.n is None) == (args.range is None):
        raise UsageError("give exactly one of N or --range A..B")
    start, stop = (args.n, args.n) if args.n is not None else args.range
    certs = structure.verify_range(start, stop, jobs=args.jobs, lemma=args.lemma)
    ok = all(c.passed for c in certs)
    if args.certificate:
        _write_certificates(certs, Path(args.certificate_dir))
    out = args.out
    if args.format == "json":
        if args.n is not None:
            out.write(dump(certs[0].as_dict()))
        else:
            rows = [{"n": c.n, **c.as_dict()["result"]} for c in certs]
            result = {"pass": ok, "checks_performed": sum(c.checks_performed for c in certs), "results": rows}
            out.write(dump(envelope("verify", {"range": [start, stop], "lemma": args.lemma}, result)))
        return 0 if ok else 1
    for c in certs:
        if args.n is not None or not c.passed:
            status = "pass" if c.passed else "FAIL"
            lemma = ", lemma checked" if c.lemma_checked else ""
            out.write(f"n={c.n}: {status} ({c.checks_performed} checks{lemma})\n")
            for v in c.violations:
                out.write(f"  <X^{v.l1} Psi_({c.n},{v.d1}), X^{v.l2} Psi_({c.n},{v.d2})> = {v.value}\n")
    if args.n is None:
        failed = sum(1 for c in certs if not c.passed)
        total = sum(c.checks_performed for c in certs)
        out.write(f"n={start}..{stop}: {len(certs) - failed} pass, {failed} fail, {total} checks\n")
    return 0 if ok else 1


def _gram_text(report) -> str:
    divs = divisors(report.n)
    sizes = [sum(1 for d, _ in report.ordering if d == e) for e in divs]
    width = max(len(str(x)) for row in report.matrix for x in row)
    lines = ["ordering: " + " ".join(f"({d},{l})" for d, l in report.ordering)]

    def split(row):
        out, at = [], 0
        for s in sizes:
            out.append(" ".join(str(x).rjust(width) for x in row[at : at + s]))
            at += s
        return " | ".join(out)

    rule = "-+-".join("-" * (s * (width + 1) - 1) for s in sizes)
    at = 0
    for k, s in enumerate(sizes):
        if k:
            lines.append(rule)
        lines.extend(split(row) for row in report.matrix[at : at + s])
        at += s
    lines.append(f"block diagonal: {'yes' if report.block_diagonal else 'no'}")
    return "\n".join(lines) + "\n"


def cmd_gram(args) -> int:
    if args.format != "json" and args.n > args.max_display:
        raise UsageError(f"n={args.n} exceeds the text display cap {args.max_display}; use --format json")
    report = structure.gram_matrix(args.n)
    if args.format == "json":
        args.out.write(dump(envelope("gram", {"n": args.n}, report.as_dict())))
    else:
        args.out.write(_gram_text(report))
    return 0 if report.block_diagonal else 1


def cmd_decompose(args) -> int:
    f = parse_coeffs(args.coeffs)
    parts = structure.decompose(args.n, f)
    if args.format == "json":
        result = {"components": {str(d): [str(c) for c in g.coeffs] for d, g in parts.items()}}
        args.out.write(dump(envelope("decompose", {"n": args.n, "coeffs": [str(c) for c in f.coeffs]}, result)))
        return 0
    nonzero = [(d, g) for d, g in parts.items() if not g.is_zero()]
    if not nonzero:
        args.out.write("all components zero\n")
    for d, g in nonzero:
        args.out.write(f"d={d}: {pr.render(g)}\n")
    return 0


def cmd_stats(args) -> int:
    ph = cyclo.stats(cyclo.phi(args.n), args.n)
    ps = cyclo.stats(cyclo.psi(args.n), args.n)
    if args.format == "json":
        args.out.write(dump(envelope("stats", {"n": args.n}, {"phi": ph.as_dict(), "psi": ps.as_dict()})))
    else:
        for name, s in (("Phi", ph), ("Psi", ps)):
            args.out.write(
                f"{name}_{args.n}: degree {s.as_dict()['degree']}, height {s.height}, "
                f"nonzero terms {s.nonzero_terms}\n"
            )
    return 0


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument(
        "--cache-dir",
        metavar="PATH",
        help=f"directory holding the Phi cache file; defaults to ${CACHE_ENV}, else {default_cache_dir()}",
    )
    common.add_argument(
        "--jobs", type=positive_int, default=os.cpu_count() or 1, metavar="K", help="verification worker processes"
    )

    parser = argparse.ArgumentParser(
        prog="invcyclo",
        description="Cyclotomic and inverse cyclotomic polynomials, and the orthogonality of their cofactors.",
        epilog=f"The cache directory can also be set with the {CACHE_ENV} environment variable.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi", parents=[common], help="n-th cyclotomic polynomial")
    p.add_argument("n", type=positive_int)
    p.add_argument("--algorithm", choices=cyclo.ALGORITHMS, default="auto")
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("psi", parents=[common], help="n-th inverse cyclotomic polynomial")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("psind", parents=[common], help="(X^n - 1) / Phi_d for d | n")
    p.add_argument("n", type=positive_int)
    p.add_argument("d", type=positive_int)
    p.set_defaults(func=cmd_psind)

    p = sub.add_parser("verify", parents=[common], help="check the orthogonality of the shifted cofactors")
    p.add_argument("n", type=positive_int, nargs="?")
    p.add_argument("--range", type=int_range, metavar="A..B")
    p.add_argument("--lemma", action="store_true", help="also check the tensor-pairing orthogonality")
    p.add_argument("--certificate", action="store_true", help="write one JSON certificate per n")
    p.add_argument("--certificate-dir", default=".", metavar="DIR")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gram", parents=[common], help="Gram matrix of all shifted cofactors")
    p.add_argument("n", type=positive_int)
    p.add_argument("--max-display", type=positive_int, default=DISPLAY_CAP, metavar="N")
    p.set_defaults(func=cmd_gram)

    p = sub.add_parser("decompose", parents=[common], help="split an element of Q[X]/(X^n - 1) by divisor")
    p.add_argument("n", type=positive_int)
    p.add_argument("--coeffs", required=True, help="comma-separated, degree 0 first; integers or a/b")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("stats", parents=[common], help="degree, height and sparsity of Phi_n and Psi_n")
    p.add_argument("n", type=positive_int)
    p.set_defaults(func=cmd_stats)
    return parser


def _open_cache(flag):
    path = resolve_cache_dir(flag) / cyclo.CACHE_FILENAME
    try:
        return cyclo.CycloCache(path)
    except (OSError, cyclo.CacheFormatError) as exc:
        print(f"warning: ignoring cache {path}: {exc}", file=sys.stderr)
        return cyclo.CycloCache()


def _glue_negative_coeffs(argv):
    # "--coeffs -1,2" would otherwise read as an unknown option
    out = list(argv)
    for i in range(len(out) - 1):
        if out[i] == "--coeffs" and out[i + 1].startswith("-"):
            out[i : i + 2] = [f"--coeffs={out[i + 1]}"]
            break
    return out


def main(argv=None, out=None) -> int:
    parser = build_parser()
    argv = _glue_negative_coeffs(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    args.out = out if out is not None else sys.stdout
    cache = _open_cache(args.cache_dir)
    previous = cyclo.default_cache()
    cyclo.set_default_cache(cache)
    try:
        code = args.func(args)
    except (DomainError, UsageError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    finally:
        cyclo.set_default_cache(previous)
    if cache.dirty and cache.path is not None:
        try:
            cache.save()
        except OSError as exc:
            print(f"warning: could not write cache {cache.path}: {exc}", file=sys.stderr)
    return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

"""Command-line surface.

Exit codes: 0 success (including DISAGREE findings), 1 usage error,
2 I/O or format error, 3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .ambient import Shape
from .claims import run_paper_claims, render_claims_record, render_claims_text
from .code import BinaryCode, Code, ZERO_CODE_DISTANCE
from .constructions import (
    ConcatInput,
    TemplateInput,
    build_template,
    concat_lcd,
    kronecker_lcd,
)
from .errors import ConstructionError, EnumerationCapError, ParseError, Z2ZUError
from .formats import (
    parse_binary_matrix,
    parse_matrix,
    render_record,
    serialize_binary_matrix,
    serialize_matrix,
)
from .lcd import analyze, r_independent
from .search import SearchConfig, run_search

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_CAP = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _read_source(path: str):
    if path == "-":
        return sys.stdin.read()
    p = Path(path)
    if not p.exists():
        raise FileNotFoundError(f"no such file: {path}")
    return p


def _load_code(path: str, cap: int) -> Code:
    return Code(parse_matrix(_read_source(path)), cap_exponent=cap)


def _code_record(code: Code, jobs: int) -> dict:
    alpha, beta, k0, k1, k2 = code.type_tuple()
    img = code.gray_image()
    try:
        d = code.min_lee_distance(jobs=jobs)
        gray_d = "zero-code" if d is ZERO_CODE_DISTANCE else int(d)
    except EnumerationCapError as exc:
        gray_d = f"cap-exceeded(upper_bound={exc.upper_bound})"
    rep = analyze(code)
    rec = {
        "alpha": alpha,
        "beta": beta,
        "k0": k0,
        "k1": k1,
        "k2": k2,
        "size": f"2^{code.dimension()}",
        "gray_n": img.n,
        "gray_k": img.dimension,
        "gray_d": gray_d,
    }
    rec.update(rep.as_record())
    return rec


def _emit(rec: dict, fmt: str) -> None:
    if fmt == "record":
        sys.stdout.write(render_record(rec))
    else:
        width = max(len(k) for k in rec)
        for k, v in rec.items():
            print(f"{k:<{width}}  {v}")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "record"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=24, metavar="EXPONENT")
    p.add_argument("--jobs", type=int, default=1)


def build_parser() -> _Parser:
    ap = _Parser(prog="z2zu", description="mixed-alphabet linear code toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="type and binary-image parameters of a code")
    p.add_argument("matrix")
    _add_common(p)

    p = sub.add_parser("check-lcd", help="all LCD criteria for a code")
    p.add_argument("matrix")
    _add_common(p)

    p = sub.add_parser("gray", help="reduced generator of the binary image")
    p.add_argument("matrix")
    _add_common(p)

    p = sub.add_parser("dual", help="generator of the dual code")
    p.add_argument("matrix")
    p.add_argument("--strategy", choices=("gray", "structural"), default="gray")
    _add_common(p)

    p = sub.add_parser("min-distance", help="minimum Lee distance by enumeration")
    p.add_argument("matrix")
    _add_common(p)

    p = sub.add_parser("r-independent", help="exhaustive R-independence of the rows")
    p.add_argument("matrix")
    _add_common(p)

    p = sub.add_parser("construct", help="build and verify a code construction")
    csub = p.add_subparsers(dest="construction", required=True)

    c = csub.add_parser("concat", help="binary LCD generator next to a self-orthogonal one")
    c.add_argument("g1", help="binary matrix file (0/1 tokens)")
    c.add_argument("g2", help="mixed matrix file in standard form")
    c.add_argument("--out", help="write the constructed matrix here instead of stdout")
    _add_common(c)

    c = csub.add_parser("kron", help="Kronecker product of two codes")
    c.add_argument("g1")
    c.add_argument("g2")
    c.add_argument("--out")
    _add_common(c)

    c = csub.add_parser("template", help="(I A | 0 uB) template code")
    c.add_argument("a", help="binary matrix file for A")
    c.add_argument("b", help="binary matrix file scaling the u block")
    c.add_argument("--zero-cols", type=int, default=0)
    c.add_argument("--out")
    _add_common(c)

    p = sub.add_parser("search", help="seeded random search for LCD codes")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--log", help="append-log path")
    p.add_argument("--table", help="compacted table path")
    _add_common(p)

    p = sub.add_parser("paper-claims", help="re-run every checkable claim from the fixtures")
    _add_common(p)
    return ap


def _cmd_params(args) -> int:
    code = _load_code(args.matrix, args.cap)
    _emit(_code_record(code, args.jobs), args.format)
    return EXIT_OK


def _cmd_check_lcd(args) -> int:
    code = _load_code(args.matrix, args.cap)
    rep = analyze(code)
    rec = rep.as_record()
    if rep.r_independence_verified is not None:
        rec["lcd.r_independence_verified"] = rep.r_independence_verified
    for i, note in enumerate(rep.notes):
        rec[f"lcd.note.{i}"] = note
    _emit(rec, args.format)
    return EXIT_OK


def _cmd_gray(args) -> int:
    code = _load_code(args.matrix, args.cap)
    img = code.gray_image()
    sys.stdout.write(serialize_binary_matrix(img.generator))
    return EXIT_OK


def _cmd_dual(args) -> int:
    code = _load_code(args.matrix, args.cap)
    sys.stdout.write(serialize_matrix(code.dual(args.strategy).generator))
    return EXIT_OK


def _cmd_min_distance(args) -> int:
    code = _load_code(args.matrix, args.cap)
    d = code.min_lee_distance(jobs=args.jobs)
    value = "zero-code" if d is ZERO_CODE_DISTANCE else int(d)
    _emit({"min_lee_distance": value}, args.format)
    return EXIT_OK


def _cmd_r_independent(args) -> int:
    m = parse_matrix(_read_source(args.matrix))
    ok = r_independent(m.rows())
    _emit({"r_independent": ok}, args.format)
    return EXIT_OK


def _write_constructed(matrix_text: str, rec: dict, args) -> None:
    if args.out:
        Path(args.out).write_text(matrix_text, encoding="utf-8")
    else:
        sys.stdout.write(matrix_text)
        print()
    _emit(rec, args.format)


def _cmd_construct(args) -> int:
    if args.construction == "concat":
        g1 = parse_binary_matrix(_read_source(args.g1))
        g2 = parse_matrix(_read_source(args.g2))
        code, rep = concat_lcd(ConcatInput(g1, g2))
        rec = {
            "binary_gram_invertible": rep.binary_gram_invertible,
            "combined_gram_u_scaled": rep.combined_gram_u_scaled,
            "r_side_gram_invertible": rep.r_side_gram_invertible,
            "u_annihilates_g2": rep.u_annihilates_g2,
            "lcd": rep.is_lcd,
        }
        if rep.discrepancy:
            rec["discrepancy"] = rep.discrepancy
    elif args.construction == "kron":
        c1 = _load_code(args.g1, args.cap)
        c2 = _load_code(args.g2, args.cap)
        code, rep = kronecker_lcd(c1, c2)
        rec = {
            "gram_factorization": rep.gram_factorization_ok,
            "inputs_lcd": f"{rep.inputs_lcd[0]},{rep.inputs_lcd[1]}",
            "lcd": rep.is_lcd,
            "mixed_extension": rep.mixed_extension,
            "distance_product": rep.distance_product_ok,
        }
    else:
        a = parse_binary_matrix(_read_source(args.a))
        b = parse_binary_matrix(_read_source(args.b))
        code, rep = build_template(TemplateInput(a, b, zero_cols=args.zero_cols))
        rec = {
            "condition_holds": rep.condition_holds,
            "gram_r_invertible": rep.gram_r_invertible,
            "lcd": rep.is_lcd,
        }
    _write_constructed(serialize_matrix(code.generator), rec, args)
    return EXIT_OK


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        shape=Shape(args.alpha, args.beta),
        k=args.rows,
        trials=args.trials,
        seed=args.seed,
        distance_cap=args.cap,
        jobs=args.jobs,
    )
    record, counters = run_search(cfg, log_path=Path(args.log) if args.log else None)
    if args.table:
        record.dump_table(Path(args.table))
    rec = {
        "trials": counters.trials,
        "gram_accepts": counters.gram_accepts,
        "lcd": counters.lcd,
        "distance_skipped": counters.distance_skipped,
        "entries": len(record.entries),
    }
    if args.format == "record":
        _emit(rec, "record")
        for line in record.table_lines():
            print(line)
    else:
        _emit(rec, "text")
        for line in record.table_lines():
            print(line)
    return EXIT_OK


def _cmd_paper_claims(args) -> int:
    claims = run_paper_claims(seed=args.seed if args.seed else 2024)
    if args.format == "record":
        sys.stdout.write(render_claims_record(claims))
    else:
        sys.stdout.write(render_claims_text(claims))
    return EXIT_OK


_HANDLERS = {
    "params": _cmd_params,
    "check-lcd": _cmd_check_lcd,
    "gray": _cmd_gray,
    "dual": _cmd_dual,
    "min-distance": _cmd_min_distance,
    "r-independent": _cmd_r_independent,
    "construct": _cmd_construct,
    "search": _cmd_search,
    "paper-claims": _cmd_paper_claims,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except EnumerationCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ParseError, FileNotFoundError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except (ConstructionError, Z2ZUError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Polynomials are given as comma-separated coefficients in ASCENDING degree
order: "4,0,-3,1" is x^3 - 3x^2 + 4.

Exit codes: 0 success, 1 bad input, 2 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass

from . import oracle
from .errors import InputError, InvariantError
from .instances import worst_shape_instance
from .poly import IntPoly, ceil_log2, content, integer_kth_root, primitive_part
from .rootfind import heuristic_gcd, integer_roots
from .scheduler import find_r_power_divisors, plan, smallest_r_power_divisor

log = logging.getLogger("rpowdiv")

_DIGITS = "0123456789"
_HEX = "0123456789abcdefABCDEF"


@dataclass
class CliConfig:
    command: str
    json: bool = False
    threads: int = 1
    verbose: bool = False
    include_one: bool = False


def parse_int(text: str, what: str = "integer") -> int:
    """Decimal or 0x-prefixed hex; errors name the offending position."""
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if not s:
        raise InputError(f"{what}: empty string")
    i = 0
    neg = s[0] == "-"
    if neg:
        i = 1
    alphabet, base = _DIGITS, 10
    if s[i : i + 2].lower() == "0x":
        alphabet, base = _HEX, 16
        i += 2
    if i == len(s):
        raise InputError(f"{what}: no digits in {text!r}")
    for j in range(i, len(s)):
        if s[j] not in alphabet:
            raise InputError(f"{what}: unexpected {s[j]!r} at position {offset + j} in {text!r}")
    value = int(s[i:], base)
    return -value if neg else value


def parse_poly(text: str) -> IntPoly:
    s = text.strip()
    if not s:
        raise InputError("empty coefficient list")
    coeffs = []
    pos = 0
    for idx, part in enumerate(s.split(",")):
        if not part.strip():
            raise InputError(f"coefficient {idx} (position {pos}) is empty in {text!r}")
        try:
            coeffs.append(parse_int(part, f"coefficient {idx}"))
        except InputError as exc:
            raise InputError(f"{exc} (entry starts at position {pos})") from None
        pos += len(part) + 1
    f = IntPoly(coeffs)
    if f.is_zero():
        raise InputError("the zero polynomial has every integer as a root")
    return f


def _fmt_poly(f: IntPoly) -> str:
    return ",".join(str(a) for a in f.coeffs) or "0"


def _emit(cfg: CliConfig, text_lines: list[str], payload: dict) -> None:
    if cfg.json:
        print(json.dumps(payload))
    elif text_lines:
        print("\n".join(text_lines))


def _check_n(N: int) -> None:
    if N < 2:
        raise InputError(f"N must be >= 2, got {N}")


def cmd_find(cfg: CliConfig, N: int, r: int) -> None:
    _check_n(N)
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    rep = find_r_power_divisors(N, r, workers=cfg.threads, include_one=cfg.include_one)
    log.info("intervals=%d d=%d head_bound=%d ms=%.1f", rep.interval_count, rep.lattice_dim, rep.head_bound, rep.ms)
    _emit(cfg, [str(p) for p in rep.divisors], rep.to_dict())


def cmd_squarefree(cfg: CliConfig, N: int) -> None:
    _check_n(N)
    p = smallest_r_power_divisor(N, 2)
    text = "squarefree" if p is None else f"not squarefree: p={p}"
    _emit(cfg, [text], {"n": N, "squarefree": p is None, "p": p})


def cmd_roots(cfg: CliConfig, f: IntPoly) -> None:
    roots = integer_roots(f)
    _emit(cfg, [str(x) for x in roots], {"roots": list(roots)})


def poly_gcd(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly, IntPoly]:
    """gcd with cofactors for arbitrary nonzero inputs (content handled here)."""
    cf, pf = primitive_part(f)
    cg, pg = primitive_part(g)
    n = max(pf.degree, pg.degree, 1)
    b = max(n, ceil_log2(max(pf.sup_norm(), pg.sup_norm())))
    t = heuristic_gcd(pf, pg, n, b)
    c = content(IntPoly((cf, cg)))
    return t.h * c, t.f_cofactor * (cf // c), t.g_cofactor * (cg // c)


def cmd_gcd(cfg: CliConfig, f: IntPoly, g: IntPoly) -> None:
    h, ft, gt = poly_gcd(f, g)
    _emit(
        cfg,
        [f"h: {_fmt_poly(h)}", f"f/h: {_fmt_poly(ft)}", f"g/h: {_fmt_poly(gt)}"],
        {"h": list(h.coeffs), "f_cofactor": list(ft.coeffs), "g_cofactor": list(gt.coeffs)},
    )


def parse_bits(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise InputError(f"bit range must look like a..b, got {text!r}")
    return parse_int(lo, "bit range start"), parse_int(hi, "bit range end")


def check_bench_args(r: int, lo: int, hi: int, step: int) -> None:
    if step < 1:
        raise InputError(f"step must be >= 1, got {step}")
    if r < 1:
        raise InputError(f"r must be >= 1, got {r}")
    if lo <= hi and (hi > 64 or lo < 2 * r + 4):
        raise InputError(f"bit range must lie within [{2 * r + 4}, 64]")


def bench_rows(r: int, lo: int, hi: int, step: int, *, workers: int = 1, dry_run: bool = False):
    """Yield (bits, intervals, ms, N) for planted worst-shape instances."""
    check_bench_args(r, lo, hi, step)
    for bits in range(lo, hi + 1, step):
        N, p, _ = worst_shape_instance(bits, r)
        if dry_run:
            t0 = time.perf_counter()
            count = plan(N, r).interval_count
            yield bits, count, (time.perf_counter() - t0) * 1e3, N
            continue
        rep = find_r_power_divisors(N, r, workers=workers)
        if p not in rep.divisors:
            raise InvariantError(f"planted p={p} missing for N={N}")
        yield bits, rep.interval_count, rep.ms, N


def cmd_bench(cfg: CliConfig, r: int, bits: str, step: int, dry_run: bool) -> None:
    lo, hi = parse_bits(bits)
    check_bench_args(r, lo, hi, step)
    print("bits,intervals,ms", flush=True)
    for b, count, ms, N in bench_rows(r, lo, hi, step, workers=cfg.threads, dry_run=dry_run):
        log.info("bits=%d N=%d", b, N)
        print(f"{b},{count},{ms:.1f}", flush=True)


def cmd_oracle(cfg: CliConfig, args: argparse.Namespace) -> None:
    which = args.oracle_command
    if which == "divisors":
        N, r = parse_int(args.N, "N"), parse_int(args.r, "r")
        _check_n(N)
        bound = parse_int(args.bound, "bound") if args.bound else integer_kth_root(N, r)
        ps = sorted(oracle.trial_divisors(N, r, bound))
        if cfg.include_one:
            ps = [1] + ps
        _emit(cfg, [str(p) for p in ps], {"n": N, "r": r, "divisors": ps})
    elif which == "roots":
        roots = sorted(oracle.integer_roots_naive(parse_poly(args.coeffs)))
        _emit(cfg, [str(x) for x in roots], {"roots": roots})
    elif which == "gcd":
        h = oracle.gcd_classical(parse_poly(args.f), parse_poly(args.g))
        _emit(cfg, [_fmt_poly(h)], {"h": list(h.coeffs)})
    elif which == "resultant":
        res = oracle.resultant_naive(parse_poly(args.f), parse_poly(args.g))
        _emit(cfg, [str(res)], {"resultant": res})


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _global_flags(p: argparse.ArgumentParser, suppress: bool) -> None:
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    p.add_argument("--json", action="store_true", help="emit JSON", **kw)
    p.add_argument("--threads", type=int, help="worker processes for window searches",
                   **(kw or {"default": 1}))
    p.add_argument("--verbose", action="store_true", help="log progress to stderr", **kw)
    p.add_argument("--include-one", action="store_true",
                   help="also report the trivial divisor p = 1", **kw)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rpowdiv", description="Find all p with p^r | N.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("find", parents=[common], help="all p >= 2 with p^r | N")
    p.add_argument("N")
    p.add_argument("r")
    p = sub.add_parser("squarefree", parents=[common], help="squarefreeness verdict")
    p.add_argument("N")
    p = sub.add_parser("roots", parents=[common], help="integer roots (ascending coefficients)")
    p.add_argument("coeffs")
    p = sub.add_parser("gcd", parents=[common], help="polynomial gcd and cofactors")
    p.add_argument("f")
    p.add_argument("g")
    p = sub.add_parser("bench", parents=[common], help="window-count scaling CSV")
    p.add_argument("--r", required=True)
    p.add_argument("--bits", required=True, help="inclusive range a..b")
    p.add_argument("--step", default="1")
    p.add_argument("--dry-run", action="store_true", help="count windows without searching")

    p = sub.add_parser("oracle", parents=[common], help="brute-force cross-checks")
    osub = p.add_subparsers(dest="oracle_command", required=True, parser_class=_Parser)
    q = osub.add_parser("divisors", parents=[common])
    q.add_argument("N")
    q.add_argument("r")
    q.add_argument("--bound")
    q = osub.add_parser("roots", parents=[common])
    q.add_argument("coeffs")
    for name in ("gcd", "resultant"):
        q = osub.add_parser(name, parents=[common])
        q.add_argument("f")
        q.add_argument("g")
    return parser


def _protect_negatives(argv: list[str]) -> list[str]:
    # argparse would read "-6,-1,1" as an option; a leading space hides it.
    return [" " + a if len(a) > 1 and a[0] == "-" and (a[1].isdigit()) else a for a in argv]


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_protect_negatives(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CliConfig(args.command, args.json, args.threads, args.verbose, args.include_one)
    logging.basicConfig(level=logging.INFO if cfg.verbose else logging.WARNING,
                        format="%(name)s: %(message)s", stream=sys.stderr)
    try:
        if cfg.threads < 1:
            raise InputError(f"--threads must be >= 1, got {cfg.threads}")
        if args.command == "find":
            cmd_find(cfg, parse_int(args.N, "N"), parse_int(args.r, "r"))
        elif args.command == "squarefree":
            cmd_squarefree(cfg, parse_int(args.N, "N"))
        elif args.command == "roots":
            cmd_roots(cfg, parse_poly(args.coeffs))
        elif args.command == "gcd":
            cmd_gcd(cfg, parse_poly(args.f), parse_poly(args.g))
        elif args.command == "bench":
            cmd_bench(cfg, parse_int(args.r, "r"), args.bits, parse_int(args.step, "step"), args.dry_run)
        elif args.command == "oracle":
            cmd_oracle(cfg, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2
    return 0


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()

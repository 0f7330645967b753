"""Command-line front end.

Graphs are given either as a file in the ``n m`` / ``u v s`` edge-list
format or as a family spec such as ``lollipop:n=10,g=4,unbalanced``,
``cycle:n=7,balanced`` or ``path:n=6``.

Exit status: 0 on success, 1 when a verification fails, 2 on usage or
input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from . import enumeration as en
from . import spectral as sp
from .charpoly import (
    DEFAULT_ORACLE_LIMIT,
    ENGINES,
    PairingPropertyError,
    charpoly_sachs,
    engines_agree,
    has_pairing_property,
    quasi_compare,
)
from .core import GraphError, SignedGraph
from .families import build, parse_family
from .graphfile import parse_graph, read_graph
from .matchings import verify_path_union_chain

log = logging.getLogger("signed_energy")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

VERIFY_CHOICES = ("theorem-3.12", "lemma-3.3", "corollary-3.4", "chain-2.5", "engines")

FAMILY_HELP = """\
graph inputs:
  a path to an edge-list file ('-' for stdin):
      n m
      u v s          # m lines, s is + or -
  or a family spec 'tag:key=value,...':
      path:n=6
      cycle:n=7,balanced        cycle:n=8,unbalanced
      lollipop:n=10,g=4,unbalanced
  lollipops put the cycle on 0..g-1 and hang the path off vertex 0;
  the unbalanced variant has its one negative edge at (0, g-1).
"""


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    tol_eigen: float = sp.DEFAULT_EIGEN_TOL
    tol_quad: float = sp.DEFAULT_QUAD_TOL
    workers: int = 1
    format: str = "text"

    def __post_init__(self):
        if self.tol_eigen <= 0 or self.tol_quad <= 0:
            raise UsageError("tolerances must be positive")
        if self.oracle_limit < 1:
            raise UsageError("oracle limit must be positive")
        if self.workers < 1:
            raise UsageError("worker count must be at least 1")


def load_input(text: str) -> SignedGraph:
    if text == "-":
        return parse_graph(sys.stdin.read(), "<stdin>")
    if Path(text).is_file():
        return read_graph(text)
    if ":" in text:
        return build(parse_family(text))
    raise UsageError(f"no such file or family spec: {text!r}")


def parse_range(text: str) -> list[int]:
    """``"4..11"``, ``"4-11"``, ``"4,6,8"`` or ``"8"``."""
    out: list[int] = []
    try:
        for part in text.split(","):
            part = part.strip()
            for sep in ("..", "-"):
                if sep in part:
                    lo, hi = part.split(sep, 1)
                    out.extend(range(int(lo), int(hi) + 1))
                    break
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    if not out:
        raise UsageError(f"empty range {text!r}")
    return out


def _emit(cfg: RunConfig, text: str, record: dict) -> None:
    if cfg.format == "json-lines":
        print(json.dumps(record, sort_keys=True))
    else:
        print(text)


def _fmt(x: float) -> str:
    return f"{x:.10g}"


# ------------------------------------------------------------------ commands


def cmd_charpoly(args, cfg: RunConfig) -> int:
    g = load_input(args.input)
    if args.engine == "all":
        results = engines_agree(g, cfg.oracle_limit)
        agree = len(set(results.values())) == 1
        for name, poly in results.items():
            _emit(cfg, f"{name}: {poly}", {"engine": name, "coefficients": list(poly.coeffs), "poly": str(poly)})
        _emit(cfg, "engines agree" if agree else "ENGINE DISAGREEMENT", {"agree": agree})
        return EXIT_OK if agree else EXIT_FAIL
    if args.engine == "sachs":
        poly = charpoly_sachs(g, cfg.oracle_limit)
    else:
        poly = ENGINES[args.engine](g)
    _emit(cfg, str(poly), {"engine": args.engine, "coefficients": list(poly.coeffs), "poly": str(poly)})
    return EXIT_OK


def cmd_energy(args, cfg: RunConfig) -> int:
    g = load_input(args.input)
    methods = ["eigen", "coulson", "pairing"] if args.method == "all" else [args.method]
    for m in methods:
        if m == "eigen":
            e = sp.energy(g, cfg.tol_eigen)
        elif m == "coulson":
            e = sp.energy_coulson(g, cfg.tol_quad)
        elif has_pairing_property(g):
            e = sp.energy_pairing(g, cfg.tol_quad)
        elif args.method == "all":
            _emit(cfg, "coulson-pairing: n/a (no pairing property)", {"method": "coulson-pairing", "energy": None})
            continue
        else:
            raise PairingPropertyError("pairing method needs a spectrum symmetric about 0")
        _emit(cfg, f"E = {_fmt(e.value)} ({e.method})", {"energy": e.value, "method": e.method})
    return EXIT_OK


def cmd_compare(args, cfg: RunConfig) -> int:
    g1, g2 = load_input(args.input1), load_input(args.input2)
    res = sp.compare_energy(g1, g2)
    e1, e2 = sp.energy(g1, cfg.tol_eigen).value, sp.energy(g2, cfg.tol_eigen).value
    quasi = None
    if has_pairing_property(g1) and has_pairing_property(g2):
        quasi = quasi_compare(g1, g2)
    record = {
        "relation": res.relation.value,
        "method": res.method,
        "note": res.note,
        "energies": [e1, e2],
        "quasi_order": quasi.relation.value if quasi else None,
    }
    text = f"{res}\nE1 = {_fmt(e1)}  E2 = {_fmt(e2)}"
    if quasi is not None:
        text += f"\nquasi-order: {quasi.relation}" + (f" at b_{2 * quasi.index}" if quasi.index is not None else "")
    _emit(cfg, text, record)
    return EXIT_OK


def cmd_enumerate(args, cfg: RunConfig) -> int:
    report = en.verify_max_energy(args.n, workers=cfg.workers, tol=cfg.tol_eigen)
    for r in report.records:
        sign = "+" if r.cycle_sign > 0 else "-"
        b = " ".join(map(str, r.b_sequence)) if r.b_sequence is not None else "-"
        _emit(cfg, f"{r.code}{sign}\tgirth={r.girth}\tE={_fmt(r.energy)}\tb=[{b}]", {"n": args.n, **r.as_dict()})
    summary = {
        "n": report.n,
        "summary": True,
        "trees": report.trees,
        "unicyclic": report.unicyclic,
        "signed_classes": report.signed_classes,
        "argmax": report.argmax.code,
        "argmax_cycle_sign": report.argmax.cycle_sign,
        "argmax_energy": report.argmax.energy,
        "margin": report.margin,
        "ties": [t.code for t in report.ties],
        "expected": report.expected,
        "matches_theorem": report.matches_theorem,
        "notes": report.notes,
    }
    _emit(cfg, report.summary() + "".join(f"\n  note: {x}" for x in report.notes), summary)
    return EXIT_OK


def _verify_one(which: str, n: int, cfg: RunConfig) -> tuple[bool, str]:
    if which == "theorem-3.12":
        if n <= en.UNICYCLIC_CAP:
            r = en.verify_max_energy(n, workers=cfg.workers, tol=cfg.tol_eigen)
            return r.matches_theorem, r.summary()
        ec, el = en.cycle_vs_lollipop(n)
        ok = ec > el + en.ENERGY_TOL if n in (5, 7) else ec < el - en.ENERGY_TOL
        return ok, f"n={n} two-graph comparison only: E(C_n^+)={_fmt(ec)} E(lollipop4-)={_fmt(el)}"
    if which == "lemma-3.3":
        r = en.verify_girth_parity(n, workers=cfg.workers)
        bad = ", ".join(f"{c.code}(g={c.girth})" for c in r.failures)
        return r.passed, f"n={n} classes={len(r.checks)}" + (f" failures: {bad}" if bad else "")
    if which == "corollary-3.4":
        label, _ = en.cycle_bound_reference(n)
        r = en.verify_cycle_bound(n, workers=cfg.workers)
        bad = ", ".join(f"{c.code}{'+' if c.cycle_sign > 0 else '-'} E={_fmt(c.energy)}" for c in r.failures)
        return r.passed, f"n={n} bound={label} checked={len(r.checks)}" + (
            f" exceeding: {bad}" if bad else ""
        )
    if which == "chain-2.5":
        r = verify_path_union_chain(n)
        shapes = " > ".join("u".join(f"P{k}" for k in s) for s in r.chain)
        return r.holds, f"n={n} {shapes}"
    if which == "engines":
        classes = en.all_signed_classes(n)
        mismatched = [c.label for c in classes if len(set(engines_agree(c.graph, cfg.oracle_limit).values())) != 1]
        return not mismatched, f"n={n} classes={len(classes)}" + (f" mismatched: {mismatched}" if mismatched else "")
    raise UsageError(f"unknown verification {which!r}")


def cmd_verify(args, cfg: RunConfig) -> int:
    ok_all = True
    for n in parse_range(args.range):
        start = time.perf_counter()
        ok, detail = _verify_one(args.which, n, cfg)
        ok_all &= ok
        verdict = "PASS" if ok else "FAIL"
        _emit(
            cfg,
            f"{verdict} {args.which} {detail}",
            {"which": args.which, "n": n, "pass": ok, "detail": detail, "seconds": time.perf_counter() - start},
        )
    _emit(cfg, "PASS" if ok_all else "FAIL", {"which": args.which, "pass": ok_all, "summary": True})
    return EXIT_OK if ok_all else EXIT_FAIL


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--oracle-limit", type=int, default=DEFAULT_ORACLE_LIMIT, help="max order for the Sachs engine")
    common.add_argument("--tol-eigen", type=float, default=sp.DEFAULT_EIGEN_TOL, help="Jacobi off-diagonal tolerance")
    common.add_argument("--tol-quad", type=float, default=sp.DEFAULT_QUAD_TOL, help="quadrature tolerance")
    common.add_argument("--workers", type=int, default=1, help="processes for per-class energy evaluation")
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="signed-energy",
        description="Characteristic polynomials, spectra and energy of signed graphs.",
        epilog=FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("charpoly", parents=[common], help="exact characteristic polynomial", epilog=FAMILY_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input")
    p.add_argument("--engine", choices=("recurrence", "sachs", "traces", "all"), default="recurrence")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("energy", parents=[common], help="graph energy", epilog=FAMILY_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input")
    p.add_argument("--method", choices=("eigen", "coulson", "pairing", "all"), default="eigen")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("compare", parents=[common], help="compare energies of two graphs", epilog=FAMILY_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input1")
    p.add_argument("input2")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("enumerate", parents=[common], help="energies of all unicyclic signed classes of order n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run a verification over a range of n")
    p.add_argument("range", help="e.g. 4..11, 4-11, 5,7 or 8")
    p.add_argument("--which", choices=VERIFY_CHOICES, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        cfg = RunConfig(args.oracle_limit, args.tol_eigen, args.tol_quad, args.workers, args.format)
        return args.func(args, cfg)
    except (UsageError, GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (sp.ConvergenceError, sp.QuadratureError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

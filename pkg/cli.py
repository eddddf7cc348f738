"""
Weyl-cells command line
Every library operation as a subcommand, with text or JSON output
"""

import argparse
import json
import sys
from dataclasses import dataclass
from functools import singledispatch
from typing import List, Optional, Tuple

import pandas as pd

from errors import CertificateError, WeylCellsError
from hc_classification import (
    CellSizeTable, Classification, CountIdentityReport, OrbitDescriptor, canonical_elements,
    cell_size_table, classify, count_identity_check, inverse_canonical_mate,
)
from logs import logger
from permutations import Perm, PatternOccurrence, inverse, parse_perm, render_perm
from rsk import RSPair, insertion_tableau, right_cell_members, robinson_schensted
from schubert_cert import Certificate, certify, is_schubert_smooth
from tableaux import Shape, StandardTableau, parse_shape, syt_count, syt_enumerate
from verify_harness import CHECK_NAMES, Report, VerificationSuite
import config


# ============================================
# COMMAND RESULTS
# ============================================

@dataclass(frozen=True)
class SmoothResult:
    w: Perm
    smooth: bool
    occurrence: Optional[PatternOccurrence]

    def to_json(self) -> dict:
        return {"w": render_perm(self.w), "smooth": self.smooth,
                "pattern": None if self.occurrence is None else self.occurrence.to_json()}


@dataclass(frozen=True)
class CellListing:
    w: Perm
    P: StandardTableau
    members: Tuple[Perm, ...]


@dataclass(frozen=True)
class CanonicalResult:
    p: int
    q: int
    m: int
    w: Perm
    sigma: Perm
    mate: Perm  # right-cell equivalent to w^-1

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "m": self.m,
                "w": render_perm(self.w), "sigma": render_perm(self.sigma),
                "w_inverse": render_perm(inverse(self.w)), "mate": render_perm(self.mate)}


@dataclass(frozen=True)
class CountResult:
    table: CellSizeTable
    identity: Optional[CountIdentityReport]

    def to_json(self) -> dict:
        t = self.table
        return {"n": t.n, "p": t.p, "q": t.q,
                "rows": [r.to_json() for r in t.rows],
                "total": t.total, "expected": t.expected, "holds": t.holds,
                "identity": None if self.identity is None else self.identity.to_json()}


@dataclass(frozen=True)
class SYTResult:
    shape: Shape
    count: int
    tableaux: Optional[List[StandardTableau]] = None


# ============================================
# RENDERING
# ============================================

def dumps(data) -> str:
    return json.dumps(data, separators=(",", ":"), ensure_ascii=False)


def _rows_text(tableau: StandardTableau) -> str:
    return dumps([list(r) for r in tableau.rows])


@singledispatch
def render(result, fmt: str = "text") -> str:
    """Text or JSON for any command result"""
    if fmt == "json":
        return dumps(result.to_json())
    return str(result)


@render.register
def _(result: list, fmt: str = "text") -> str:
    return "\n".join(render(item, fmt) for item in result)


@render.register
def _(result: Perm, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps({"w": render_perm(result)})
    return render_perm(result)


@render.register
def _(result: OrbitDescriptor, fmt: str = "text") -> str:
    return dumps(result.to_json()) if fmt == "json" else str(result)


@render.register
def _(result: RSPair, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(result.to_json())
    return f"P={_rows_text(result.P)}\nQ={_rows_text(result.Q)}\nshape={result.shape}"


@render.register
def _(result: Classification, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(result.to_json())
    header = f"w={result.w}  P-shape {result.p_tableau_shape}"
    if not result.is_harish_chandra:
        return f"{header}\nnot a highest-weight Harish-Chandra module for any (p,q)"
    frame = pd.DataFrame(
        [(s.p, s.q, s.m, str(s.orbit), s.cell_size) for s in result.signatures],
        columns=["p", "q", "m", "associated variety", "cell size"],
    )
    return f"{header}\n{frame.to_string(index=False)}"


@render.register
def _(result: Certificate, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(result.to_json())
    line = f"w={result.w}: {result.verdict.value}"
    if result.witness is None:
        return line
    details = ", ".join(f"{k}={v}" for k, v in result.witness.to_json().items())
    return f"{line} ({details})"


@render.register
def _(result: SmoothResult, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(result.to_json())
    if result.smooth:
        return f"w={result.w}: smooth (avoids 3412 and 4231)"
    occ = result.occurrence
    positions = ",".join(map(str, occ.positions))
    values = ",".join(map(str, occ.subword(result.w)))
    return f"w={result.w}: singular, contains {occ.pattern} at positions {positions} (values {values})"


@render.register
def _(result: CellListing, fmt: str = "text") -> str:
    if fmt == "json":
        return render(list(result.members), fmt)
    lines = [f"right cell of w={result.w}: P={_rows_text(result.P)}, "
             f"{len(result.members)} members"]
    lines += [render_perm(u) for u in result.members]
    return "\n".join(lines)


@render.register
def _(result: CanonicalResult, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(result.to_json())
    return (f"w={result.w} σ={result.sigma}\n"
            f"w^-1={inverse(result.w)} ~R {result.mate}")


@render.register
def _(result: CountResult, fmt: str = "text") -> str:
    if fmt == "json":
        return dumps(result.to_json())
    t = result.table
    frame = pd.DataFrame(
        [(r.orbit.m, r.orbit.label, r.orbit.dim, r.cell_size) for r in t.rows],
        columns=["m", "orbit", "dim", "cell_size"],
    )
    verdict = "=" if t.holds else "!="
    lines = [frame.to_string(index=False),
             f"total {t.total} {verdict} {t.n}!/({t.p}!{t.q}!) = {t.expected}"]
    if result.identity is not None:
        ident = result.identity
        lines.append(f"n + sum(m>=2) = {ident.lhs}, {'holds' if ident.holds else 'FAILS'}")
    return "\n".join(lines)


@render.register
def _(result: SYTResult, fmt: str = "text") -> str:
    if result.tableaux is not None:
        if fmt == "json":
            return "\n".join(dumps(t.to_json()) for t in result.tableaux)
        return "\n".join([f"shape {result.shape}: {result.count} standard tableaux"]
                         + [str(t) for t in result.tableaux])
    if fmt == "json":
        return dumps({"shape": list(result.shape.rows), "count": result.count})
    return f"shape {result.shape}: {result.count} standard tableaux"


@render.register
def _(result: Report, fmt: str = "text") -> str:
    return result.dumps() if fmt == "json" else result.to_text()


# ============================================
# COMMANDS
# ============================================

class WeylCellsCLI:
    def __init__(self):
        """Initialize the command table"""
        self.suite = VerificationSuite()
        self.commands = {
            "rs": self.rs_command,
            "classify": self.classify_command,
            "certify": self.certify_command,
            "smooth": self.smooth_command,
            "cells": self.cells_command,
            "canonical": self.canonical_command,
            "count": self.count_command,
            "syt": self.syt_command,
            "verify": self.verify_command,
        }

    def rs_command(self, args):
        return robinson_schensted(parse_perm(args.perm))

    def classify_command(self, args):
        return classify(parse_perm(args.perm))

    def certify_command(self, args):
        return certify(parse_perm(args.perm))

    def smooth_command(self, args):
        w = parse_perm(args.perm)
        smooth, occurrence = is_schubert_smooth(w)
        return SmoothResult(w, smooth, occurrence)

    def cells_command(self, args):
        w = parse_perm(args.perm)
        return CellListing(w, insertion_tableau(w), tuple(right_cell_members(w)))

    def canonical_command(self, args):
        w, sigma = canonical_elements(args.p, args.q, args.m)
        return CanonicalResult(args.p, args.q, args.m, w, sigma,
                               inverse_canonical_mate(args.p + args.q, args.m))

    def count_command(self, args):
        table = cell_size_table(args.n, args.p, args.q)
        identity = None
        if args.p >= 2 and args.q >= 2:
            identity = count_identity_check(args.n, args.p, args.q)
        return CountResult(table, identity)

    def syt_command(self, args):
        shape = parse_shape(args.shape)
        tableaux = syt_enumerate(shape) if args.enumerate else None
        return SYTResult(shape, syt_count(shape), tableaux)

    def verify_command(self, args):
        return self.suite.run_suite(args.n, args.check)

    def execute(self, args) -> Tuple[int, str]:
        """Run one parsed command; (exit code, rendered output)"""
        result = self.commands[args.command](args)
        code = 1 if isinstance(result, Report) and not result.passed else 0
        return code, render(result, args.format)


def _add_output_flags(parser, suppress):
    parser.add_argument("--format", choices=["text", "json"],
                        default=argparse.SUPPRESS if suppress else "text",
                        help="output format (default: text)")
    parser.add_argument("--verbose", action="store_true",
                        default=argparse.SUPPRESS if suppress else False,
                        help="log progress to standard error")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cli.py",
        description="Robinson-Schensted cells and highest weight Harish-Chandra modules",
        epilog=f"WEYL_CELLS_MAX_N overrides the enumeration bound "
               f"(now {config.ENUMERATION_MAX_N})",
    )
    _add_output_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text)
        _add_output_flags(p, suppress=True)
        return p

    for name, help_text in [
        ("rs", "Robinson-Schensted pair (P, Q)"),
        ("classify", "Harish-Chandra signatures of L_w"),
        ("certify", "irreducibility certificate for V(L_w)"),
        ("smooth", "3412/4231 avoidance of w"),
        ("cells", "members of the right cell of w"),
    ]:
        command(name, help_text).add_argument("perm", help='e.g. "4,2,1,3" or "4213"')

    canonical = command("canonical", "w_{p,q,m} and sigma_{p,q,m}")
    for flag in ("--p", "--q", "--m"):
        canonical.add_argument(flag, type=int, required=True)

    count = command("count", "cell sizes per orbit closure and their total")
    for flag in ("--n", "--p", "--q"):
        count.add_argument(flag, type=int, required=True)

    syt = command("syt", "number of standard tableaux of a shape")
    syt.add_argument("--shape", required=True, help="row lengths, e.g. 2,2,1")
    syt.add_argument("--enumerate", action="store_true", help="list every tableau")

    verify = command("verify", "exhaustive verification over S_n")
    verify.add_argument("--n", type=int, default=config.VERIFY_DEFAULT_N)
    verify.add_argument("--check", action="append", choices=CHECK_NAMES, metavar="NAME",
                        help="run only this check (repeatable)")
    verify.add_argument("--json", dest="format", action="store_const", const="json",
                        default=argparse.SUPPRESS, help="same as --format json")
    return parser


def main(argv=None) -> int:
    """Parse, run and print; returns the process exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code  # argparse has already written usage to stderr

    if args.verbose:
        logger.set_level("INFO")

    try:
        code, output = WeylCellsCLI().execute(args)
    except WeylCellsError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except CertificateError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1

    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())

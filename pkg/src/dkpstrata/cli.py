"""Command-line front end.

    dkpstrata [report] --type A2 --w 121 [--format table|json|csv] [--basis]
              [--double] [--hasse out.dot] [--cap 16] [--y 12]
    dkpstrata qcheck [--n 2] [--m 2]
    dkpstrata betas --type A2 --w 121
    dkpstrata lattice --type A2 --y e --w 121
    dkpstrata pairing --type A2 --y 1 --w 121 --lam 1,0 --mu 1,0 --nu 1,0

Exit codes: 0 success, 1 usage error, 2 interval cap exceeded, 3 a qcheck failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .qcheck import QCheckError, run_qcheck
from .rootdata import RootDataError, RootSystem, parse_type
from .strata import (
    StratumRecord,
    commutation_exponent,
    kernel_lattice_basis,
    stratification_report,
    stratum_record,
)
from .weyl import (
    DEFAULT_CAP,
    BruhatInterval,
    CapExceeded,
    WeylElement,
    WeylError,
    beta_sequence,
    bruhat_interval,
    bruhat_leq,
    element_from_word,
    word_label,
)

SUBCOMMANDS = ("report", "qcheck", "betas", "lattice", "pairing")
FORMATS = ("table", "json", "csv")


class UsageError(Exception):
    pass


@dataclass
class RunSpec:
    command: str = "report"
    type: str | None = None
    rs: RootSystem | None = None
    w: tuple[int, ...] | None = None
    y: tuple[int, ...] | None = None
    format: str = "table"
    basis: bool = False
    hasse: str | None = None
    double: bool = False
    cap: int = DEFAULT_CAP
    n: int = 2
    m: int = 2
    lam: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    nu: tuple[int, ...] | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def parse_word(text: str, rank: int) -> tuple[int, ...]:
    """``"121"`` or ``"1,2,1"``; ``""`` and ``"e"`` denote the identity."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    if "," in text:
        tokens = [t.strip() for t in text.split(",")]
    else:
        if rank > 9:
            raise UsageError(f"rank {rank} needs a comma-separated word, got {text!r}")
        tokens = list(text)
    word = []
    for tok in tokens:
        if not tok.isdigit():
            raise UsageError(f"bad word character {tok!r} in {text!r}")
        i = int(tok)
        if i > rank:
            raise UsageError(f"index {i} exceeds rank {rank}")
        if i < 1:
            raise UsageError(f"index {i} out of range 1..{rank}")
        word.append(i)
    return tuple(word)


def parse_vector(text: str, rank: int) -> tuple[int, ...]:
    try:
        vec = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad integer vector {text!r}") from None
    if len(vec) != rank:
        raise UsageError(f"vector {text!r} has length {len(vec)}, expected {rank}")
    return vec


def _build_parser() -> _Parser:
    parser = _Parser(prog="dkpstrata", description="Stratum dimensions over Bruhat intervals and exact U_q checks")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def typed(p, need_w=True, need_y=False):
        p.add_argument("--type", required=True, help="series and rank, e.g. A2, B3, E6")
        p.add_argument("--w", required=need_w, help="word for w: digits (rank <= 9) or comma list")
        p.add_argument("--y", required=need_y, help="word for y")

    rep = sub.add_parser("report", help="stratum dimensions for every y <= w")
    typed(rep)
    rep.add_argument("--format", choices=FORMATS, default="table")
    rep.add_argument("--basis", action="store_true", help="include P_{y,w} lattice bases")
    rep.add_argument("--double", action="store_true", help="include the dim E_{+1}(w^-1 y) column")
    rep.add_argument("--hasse", metavar="PATH", help="write the Bruhat interval as DOT ('-' for stdout)")
    rep.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximal length of w for interval enumeration")

    qc = sub.add_parser("qcheck", help="exact U_q(sl2)/U_q(sl3) relation and R-matrix checks")
    qc.add_argument("--n", type=int, default=2)
    qc.add_argument("--m", type=int, default=2)

    bt = sub.add_parser("betas", help="beta sequence of a reduced word")
    typed(bt)
    bt.add_argument("--format", choices=FORMATS, default="table")

    lt = sub.add_parser("lattice", help="basis of P_{y,w}")
    typed(lt, need_y=True)
    lt.add_argument("--format", choices=FORMATS, default="table")

    pr = sub.add_parser("pairing", help="commutation exponent -<(y+w)lam, nu + w mu>")
    typed(pr, need_y=True)
    for name in ("lam", "mu", "nu"):
        pr.add_argument(f"--{name}", required=True, help="comma-separated weight coordinates")
    return parser


def parse_spec(argv: list[str]) -> RunSpec:
    argv = list(argv)
    if not argv or argv[0] not in SUBCOMMANDS and argv[0] not in ("-h", "--help"):
        argv = ["report"] + argv
    ns = _build_parser().parse_args(argv)
    spec = RunSpec(command=ns.command)
    if ns.command == "qcheck":
        spec.n, spec.m = ns.n, ns.m
        return spec
    try:
        spec.rs = parse_type(ns.type)
    except RootDataError as exc:
        raise UsageError(f"unknown type {ns.type!r}: {exc}") from None
    spec.type = spec.rs.name
    spec.w = parse_word(ns.w, spec.rs.rank)
    if ns.y is not None:
        spec.y = parse_word(ns.y, spec.rs.rank)
    spec.format = getattr(ns, "format", "table")
    if ns.command == "report":
        spec.basis, spec.double, spec.hasse, spec.cap = ns.basis, ns.double, ns.hasse, ns.cap
        if spec.cap < 0:
            raise UsageError("--cap must be non-negative")
        if spec.hasse is not None and spec.y is not None:
            raise UsageError("conflicting flags: --hasse draws the whole interval, drop --y")
        if spec.hasse == "-" and spec.format != "table":
            raise UsageError("conflicting flags: --hasse - would interleave with --format output")
    if ns.command == "pairing":
        r = spec.rs.rank
        spec.lam, spec.mu, spec.nu = (parse_vector(v, r) for v in (ns.lam, ns.mu, ns.nu))
    return spec


# -- rendering ----------------------------------------------------------------

def _basis_text(basis) -> str:
    if not basis:
        return "-"
    return ";".join("(" + ",".join(map(str, v)) + ")" for v in basis)


def _columns(spec: RunSpec) -> list[str]:
    cols = ["y_word", "len", "stratum_dim", "richardson_dim", "leaf_dim"]
    if spec.double:
        cols.append("e1_dim")
    if spec.basis:
        cols.append("basis")
    return cols


def _text_row(rec: StratumRecord, spec: RunSpec) -> list[str]:
    row = [word_label(rec.y.word), str(rec.length_y), str(rec.stratum_dim),
           str(rec.richardson_dim), str(rec.leaf_dim)]
    if spec.double:
        row.append(str(rec.e1_dim))
    if spec.basis:
        row.append(_basis_text(rec.lattice_basis))
    return row


def format_table(header: list[str], rows: list[list[str]]) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) if rows else len(h) for k, h in enumerate(header)]
    lines = [" | ".join(h.ljust(wd) for h, wd in zip(header, widths)).rstrip()]
    lines.append("-+-".join("-" * wd for wd in widths))
    for r in rows:
        lines.append(" | ".join(c.ljust(wd) for c, wd in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def format_csv(header: list[str], rows: list[list[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def report_json(records: list[StratumRecord], spec: RunSpec) -> dict:
    rows = []
    for rec in records:
        row = {
            "y_word": list(rec.y.word),
            "len": rec.length_y,
            "stratum_dim": rec.stratum_dim,
            "richardson_dim": rec.richardson_dim,
            "leaf_dim": rec.leaf_dim,
        }
        if spec.double:
            row["e1_dim"] = rec.e1_dim
        if spec.basis:
            row["basis"] = [list(v) for v in rec.lattice_basis]
        rows.append(row)
    return {"type": spec.type, "w_word": list(spec.w or ()), "rows": rows}


def render_report(records: list[StratumRecord], spec: RunSpec) -> bytes:
    if not records:
        raise ValueError("no records to render")
    if spec.format == "json":
        return (json.dumps(report_json(records, spec), indent=2) + "\n").encode()
    header = _columns(spec)
    rows = [_text_row(rec, spec) for rec in records]
    if spec.format == "csv":
        return format_csv(header, rows).encode()
    return format_table(header, rows).encode()


def render_hasse(interval: BruhatInterval) -> str:
    """DOT digraph of the cover relations, one line per node and per edge."""
    labels = [word_label(x.word) for x in interval.elements]
    lines = [f'digraph "bruhat_{word_label(interval.top.word)}" {{']
    lines += [f'  "{lab}";' for lab in labels]
    for a, b in sorted(interval.covers):
        lines.append(f'  "{labels[a]}" -> "{labels[b]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- commands -----------------------------------------------------------------

def _element(spec: RunSpec, word) -> WeylElement:
    return element_from_word(spec.rs, word)


def run_report(spec: RunSpec, out) -> int:
    w = _element(spec, spec.w)
    if spec.y is not None:
        y = _element(spec, spec.y)
        if not bruhat_leq(y, w):
            raise UsageError(f"y={word_label(y.word)} is not below w={word_label(w.word)}")
        records = [stratum_record(spec.rs, w, y, spec.double)]
    else:
        records = stratification_report(spec.rs, w, cap=spec.cap, double=spec.double)
    spec.w = w.word
    out.write(render_report(records, spec).decode())
    if spec.hasse is not None:
        dot = render_hasse(bruhat_interval(w, spec.cap))
        if spec.hasse == "-":
            out.write(dot)
        else:
            with open(spec.hasse, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(dot)
    return 0


def run_betas(spec: RunSpec, out) -> int:
    try:
        betas = beta_sequence(spec.rs, spec.w)
    except WeylError as exc:
        raise UsageError(str(exc)) from None
    if spec.format == "json":
        payload = {"type": spec.type, "word": list(spec.w), "betas": [list(b) for b in betas]}
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    header = ["j", "i_j", "beta"]
    rows = [[str(j), str(i), "(" + ",".join(map(str, b)) + ")"]
            for j, (i, b) in enumerate(zip(spec.w, betas), start=1)]
    out.write(format_csv(header, rows) if spec.format == "csv" else format_table(header, rows))
    return 0


def run_lattice(spec: RunSpec, out) -> int:
    y, w = _element(spec, spec.y), _element(spec, spec.w)
    basis = kernel_lattice_basis(spec.rs, y, w)
    if spec.format == "json":
        payload = {"type": spec.type, "y_word": list(y.word), "w_word": list(w.word),
                   "basis": [list(v) for v in basis]}
        out.write(json.dumps(payload, indent=2) + "\n")
        return 0
    header = [f"omega_{i}" for i in range(1, spec.rs.rank + 1)]
    rows = [[str(x) for x in v] for v in basis]
    out.write(format_csv(header, rows) if spec.format == "csv" else format_table(header, rows))
    return 0


def run_pairing(spec: RunSpec, out) -> int:
    y, w = _element(spec, spec.y), _element(spec, spec.w)
    value = commutation_exponent(spec.rs, y, w, spec.lam, spec.mu, spec.nu)
    out.write(f"{value}\n")
    return 0


def run_qcheck_cmd(spec: RunSpec, out) -> int:
    try:
        summary = run_qcheck(spec.n, spec.m)
    except QCheckError as exc:
        raise UsageError(str(exc)) from None
    for name, ok in summary.results.items():
        out.write(f"{name}: {'pass' if ok else 'FAIL'}\n")
    return 0 if summary.passed else 3


COMMANDS = {
    "report": run_report,
    "betas": run_betas,
    "lattice": run_lattice,
    "pairing": run_pairing,
    "qcheck": run_qcheck_cmd,
}


def main(argv: list[str] | None = None, out=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    out = sys.stdout if out is None else out
    try:
        spec = parse_spec(argv)
        return COMMANDS[spec.command](spec, out)
    except UsageError as exc:
        print(f"dkpstrata: error: {exc}", file=sys.stderr)
        return 1
    except CapExceeded as exc:
        print(f"dkpstrata: error: {exc} (raise --cap explicitly)", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"dkpstrata: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

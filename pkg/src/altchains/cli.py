"""Command-line front end: classification, chain generation, table rendering.

Exit codes: 0 success, 1 failed verification, 2 malformed input or usage
error.  All numeric cells use the 3-decimal half-up rendering; undefined
ratio cells print as N/A.  Output sticks to ASCII.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .chains import Chain, GrowthRow, MethodTag, growth_table, validate_chain
from .intset import (
    CONWAY_SET,
    DIAMETER_ZERO,
    Density,
    classify,
    diffset,
    format_3dp,
    format_set_literal,
    parse_set_literal,
    profile,
    sumset,
)
from .method1 import generate_chain_m1, search_moduli
from .method2 import build_a1_m2, generate_chain_m2
from .method3 import generate_chain_m3
from .nathanson import build_base

MARKDOWN_HEADER = (
    "Set",
    "Sums",
    "Diffs",
    "Cardinality",
    "Diameter",
    "Card. Ratio",
    "Diam. Ratio",
    "Density",
)
CSV_HEADER = "set,sumcard,diffcard,card,diameter,card_ratio,diam_ratio,density"


class EmptyRows(ValueError):
    """Table rendering needs at least one row."""


def _ratio_text(value: Optional[Fraction]) -> str:
    return "N/A" if value is None else format_3dp(value)


def _density_text(value: Density) -> str:
    return "N/A" if value is DIAMETER_ZERO else format_3dp(value)


def _cells(row: GrowthRow) -> tuple[str, ...]:
    return (
        f"A{row.index}",
        str(row.sum_card),
        str(row.diff_card),
        str(row.card),
        str(row.diameter),
        _ratio_text(row.card_ratio),
        _ratio_text(row.diam_ratio),
        _density_text(row.density),
    )


def render_table(rows: Sequence[GrowthRow], format: str = "markdown") -> str:
    """Render growth rows as a markdown or csv table (deterministic bytes)."""
    if not rows:
        raise EmptyRows("no rows to render")
    body = [_cells(r) for r in rows]
    if format == "csv":
        return "\n".join([CSV_HEADER] + [",".join(cells) for cells in body]) + "\n"
    if format != "markdown":
        raise ValueError(f"unknown table format {format!r}")
    widths = [
        max(len(MARKDOWN_HEADER[c]), *(len(cells[c]) for cells in body))
        for c in range(len(MARKDOWN_HEADER))
    ]
    def line(cells: Sequence[str]) -> str:
        return "| " + " | ".join(c.ljust(w) for c, w in zip(cells, widths)) + " |"
    rule = "|" + "|".join("-" * (w + 2) for w in widths) + "|"
    return "\n".join([line(MARKDOWN_HEADER), rule] + [line(cells) for cells in body]) + "\n"


def chain_to_text(chain: Chain, n: Optional[int] = None) -> str:
    """Line-oriented chain file: a header, then one set literal per line."""
    head = f"# method={chain.method_tag.value} base={format_set_literal(chain.sets[0])}"
    if n is not None:
        head += f" n={n}"
    return "\n".join([head] + [format_set_literal(s) for s in chain.sets]) + "\n"


def parse_chain_text(text: str) -> Chain:
    """Parse the chain file format written by chain_to_text."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith("# method="):
        raise ValueError("chain file must start with a '# method=...' header")
    fields = dict(
        token.split("=", 1) for token in lines[0][2:].split() if "=" in token
    )
    try:
        tag = MethodTag(fields["method"])
    except (KeyError, ValueError):
        raise ValueError(f"unknown method tag in header: {lines[0]!r}") from None
    sets = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            raise ValueError(f"line {lineno}: empty set line in chain file")
        sets.append(parse_set_literal(line))
    if not sets:
        raise ValueError("chain file holds no sets")
    return Chain.from_sets(sets, tag)


def paper_chain(number: int) -> Chain:
    """The example chain behind each published growth table."""
    if number == 1:
        return generate_chain_m1(CONWAY_SET, 17, 7)
    if number == 2:
        return generate_chain_m2(build_base(4, 1, 3), 7)
    if number == 3:
        return generate_chain_m3(9)
    raise ValueError(f"no table numbered {number}")


def _cmd_classify(args: argparse.Namespace) -> int:
    A = parse_set_literal(args.set)
    print(f"{classify(A).value} {len(sumset(A))} {len(diffset(A))}")
    return 0


def _cmd_profile(args: argparse.Namespace) -> int:
    p = profile(parse_set_literal(args.set))
    print(
        f"card={p.card} sumcard={p.sum_card} diffcard={p.diff_card} "
        f"diameter={p.diameter} density={p.density_text}"
    )
    return 0


def _cmd_search_modulus(args: argparse.Namespace) -> int:
    moduli = search_moduli(parse_set_literal(args.set))
    if moduli:
        print(" ".join(str(n) for n in moduli))
    return 0


def _build_chain(args: argparse.Namespace) -> tuple[Chain, Optional[int]]:
    if args.method == 1:
        if args.set is None or args.n is None:
            raise ValueError("method 1 needs --set and --n")
        return generate_chain_m1(parse_set_literal(args.set), args.n, args.steps), args.n
    if args.method == 2:
        if None in (args.m, args.d, args.k):
            raise ValueError("method 2 needs --m, --d and --k")
        return generate_chain_m2(build_base(args.m, args.d, args.k), args.steps), None
    return generate_chain_m3(args.steps), None


def _cmd_chain(args: argparse.Namespace) -> int:
    chain, n = _build_chain(args)
    text = chain_to_text(chain, n)
    if args.out:
        Path(args.out).write_text(text)
    else:
        print(text, end="")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    chain = parse_chain_text(Path(args.file).read_text())
    report = validate_chain(chain)
    if report.ok:
        print(f"ok {len(chain)} sets")
        return 0
    for index, check, witness in report.failures:
        print(f"FAIL index={index} check={check} witness={witness}")
    return 1


def _cmd_table(args: argparse.Namespace) -> int:
    rows = growth_table(paper_chain(args.paper))
    print(render_table(rows, args.format), end="")
    return 0


def _cmd_scan_params(args: argparse.Namespace) -> int:
    if args.method != 2:
        raise ValueError("only --method 2 supports parameter scanning")
    for m in range(4, args.max_m + 1, 4):
        for d in (m // 4, 3 * m // 4):
            k_min = 3 if d < m / 2 else 4
            for k in range(k_min, args.max_k + 1):
                a1 = build_a1_m2(build_base(m, d, k))
                p = profile(a1)
                print(
                    f"m={m} d={d} k={k} sumcard={p.sum_card} "
                    f"diffcard={p.diff_card} card={p.card} diameter={p.diameter}"
                )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="altchains",
        description="Sumset/difference-set arithmetic and alternating MSTD/MDTS chains.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("classify", help="classify a set as MSTD, MDTS or Balanced")
    p.add_argument("--set", required=True, help="set literal, e.g. 0,2,3,4,7,11,12,14")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("profile", help="cardinality/diameter/density profile of a set")
    p.add_argument("--set", required=True)
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("search-modulus", help="admissible copy moduli for a base set")
    p.add_argument("--set", required=True)
    p.set_defaults(handler=_cmd_search_modulus)

    p = sub.add_parser("chain", help="generate an alternating chain")
    p.add_argument("--method", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--set", help="base set literal (method 1)")
    p.add_argument("--n", type=int, help="copy modulus (method 1)")
    p.add_argument("--m", type=int, help="interval length (method 2)")
    p.add_argument("--d", type=int, help="punctured element (method 2)")
    p.add_argument("--k", type=int, help="ladder length (method 2)")
    p.add_argument("--out", help="write the chain file here instead of stdout")
    p.set_defaults(handler=_cmd_chain)

    p = sub.add_parser("verify", help="validate a stored chain file")
    p.add_argument("--file", required=True)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("table", help="regenerate a published growth table")
    p.add_argument("--paper", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--format", choices=("markdown", "csv"), default="markdown")
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("scan-params", help="sweep valid construction parameters")
    p.add_argument("--method", type=int, required=True)
    p.add_argument("--max-m", type=int, default=16)
    p.add_argument("--max-k", type=int, default=6)
    p.set_defaults(handler=_cmd_scan_params)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 0 for --help, 2 for usage errors
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

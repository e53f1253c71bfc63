#!/usr/bin/env python3
"""Tabulate how fast MSTD-member densities approach their analytic limits.

Usage: python scripts/density_convergence.py [--max-probe N]

Probes are odd chain positions; the gap column is |density - limit|.  The
method-2 chain converges the slowest: its gap is 3/(4r+8) at position 2r+1,
which equals 0.01 at position 147 and first drops strictly below it at 149.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from altchains import (  # noqa: E402
    CONWAY_SET,
    build_base,
    generate_chain_m1,
    generate_chain_m2,
    generate_chain_m3,
    limiting_density,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-probe", type=int, default=201)
    args = parser.parse_args()

    # ending on a phase-1 member keeps the method-3 rate average exact
    steps = args.max_probe + (-args.max_probe) % 4 + 1
    probes = [p for p in (11, 21, 51, 101, 147, 151, 201) if p <= args.max_probe]
    cases = [
        ("method 1 (Conway base, modulus 17)", generate_chain_m1(CONWAY_SET, 17, steps)),
        ("method 2 (m=4, d=1, k=3)", generate_chain_m2(build_base(4, 1, 3), steps)),
        ("method 3 (closed form)", generate_chain_m3(steps)),
    ]
    for label, chain in cases:
        print(f"## {label}")
        for probe in probes:
            analytic, numeric = limiting_density(chain, probe)
            gap = abs(numeric - analytic)
            print(
                f"probe {probe:>3}: density {float(numeric):.6f}  "
                f"limit {float(analytic):.6f}  gap {float(gap):.6f}"
            )
        print()


if __name__ == "__main__":
    main()

"""Method-agnostic chain container, validation and growth reporting.

A chain is a nested sequence of integer sets that is supposed to alternate
between sum-dominated (odd positions) and difference-dominated (even
positions), and to never fill a hole: once an integer between a set's min and
max is absent, it stays absent in every later set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from .intset import (
    DIAMETER_ZERO,
    Density,
    IntSet,
    SetClass,
    SumDiffProfile,
    profile,
)

Witness = Union[int, tuple[int, int], None]
Failure = tuple[int, str, Witness]

# Checking consecutive pairs suffices for the full no-filling-in condition:
# hulls are nested, so an element of a later set that fell inside the hull of
# some earlier set also falls inside the hull of every set in between, and
# would already have been flagged at the first pair it violates.
PAIRWISE_SUFFICIENCY = (
    "derivation: pairwise no-filling-in implies the condition against every "
    "earlier set, because the hulls [min, max] are nested along the chain"
)


class MethodTag(enum.Enum):
    METHOD1 = "Method1"
    METHOD2 = "Method2"
    METHOD3 = "Method3"
    EXTERNAL = "External"


def _class_of(p: SumDiffProfile) -> SetClass:
    if p.sum_card > p.diff_card:
        return SetClass.MSTD
    if p.diff_card > p.sum_card:
        return SetClass.MDTS
    return SetClass.BALANCED


@dataclass(frozen=True)
class Chain:
    """Indexed (1-based) sequence of sets with per-index profiles and classes."""

    sets: tuple[IntSet, ...]
    method_tag: MethodTag
    profiles: tuple[SumDiffProfile, ...]
    classes: tuple[SetClass, ...]

    @classmethod
    def from_sets(cls, sets: Iterable[IntSet], method_tag: MethodTag) -> "Chain":
        members = tuple(sets)
        if not members:
            raise ValueError("a chain needs at least one set")
        profiles = tuple(profile(s) for s in members)
        classes = tuple(_class_of(p) for p in profiles)
        return cls(sets=members, method_tag=method_tag, profiles=profiles, classes=classes)

    def __len__(self) -> int:
        return len(self.sets)

    def set_at(self, index: int) -> IntSet:
        """The chain member at 1-based `index`."""
        if not 1 <= index <= len(self.sets):
            raise IndexError(f"chain index {index} outside 1..{len(self.sets)}")
        return self.sets[index - 1]


@dataclass(frozen=True)
class ValidationReport:
    """Verdict of a chain check; ok iff no failures were recorded."""

    ok: bool
    failures: tuple[Failure, ...]
    derivation: str = ""
    notes: tuple[str, ...] = ()

    @classmethod
    def from_failures(
        cls,
        failures: Iterable[Failure],
        derivation: str = "",
        notes: Iterable[str] = (),
    ) -> "ValidationReport":
        fs = tuple(failures)
        return cls(ok=not fs, failures=fs, derivation=derivation, notes=tuple(notes))


def validate_chain(chain: Chain) -> ValidationReport:
    """Check strict inclusion, no filling in, and MSTD/MDTS alternation."""
    failures: list[Failure] = []

    for i, (cls, p) in enumerate(zip(chain.classes, chain.profiles), start=1):
        want = SetClass.MSTD if i % 2 else SetClass.MDTS
        if cls is not want:
            failures.append((i, "alternation", (p.sum_card, p.diff_card)))

    for i in range(1, len(chain.sets)):
        prev, cur = chain.sets[i - 1], chain.sets[i]
        if not prev.is_proper_subset(cur):
            missing = [v for v in prev if v not in cur]
            failures.append((i + 1, "strict-inclusion", missing[0] if missing else None))
            continue
        filled = [v for v in cur.within(prev.min, prev.max) if v not in prev]
        if filled:
            failures.append((i + 1, "no-filling-in", filled[0]))

    return ValidationReport.from_failures(failures, derivation=PAIRWISE_SUFFICIENCY)


@dataclass(frozen=True)
class GrowthRow:
    """One table row: cardinalities, diameter, step ratios and density."""

    index: int
    sum_card: int
    diff_card: int
    card: int
    diameter: int
    card_ratio: Optional[Fraction]
    diam_ratio: Optional[Fraction]
    density: Density


def growth_table(chain: Chain) -> tuple[GrowthRow, ...]:
    """Per-index growth rows with exact rational ratios (None on row 1)."""
    rows: list[GrowthRow] = []
    prev: Optional[SumDiffProfile] = None
    for i, p in enumerate(chain.profiles, start=1):
        card_ratio = Fraction(p.card, prev.card) if prev else None
        diam_ratio = None
        if prev is not None and prev.diameter > 0:
            diam_ratio = Fraction(p.diameter, prev.diameter)
        rows.append(
            GrowthRow(
                index=i,
                sum_card=p.sum_card,
                diff_card=p.diff_card,
                card=p.card,
                diameter=p.diameter,
                card_ratio=card_ratio,
                diam_ratio=diam_ratio,
                density=p.density,
            )
        )
        prev = p
    return tuple(rows)


def _mstd_positions(chain: Chain) -> list[int]:
    return [i for i, c in enumerate(chain.classes, start=1) if c is SetClass.MSTD]


def growth_rates(chain: Chain) -> tuple[Fraction, Fraction]:
    """Average cardinality and diameter deltas between consecutive MSTD sets."""
    positions = _mstd_positions(chain)
    if len(positions) < 3:
        raise ValueError("growth rates need a chain with at least 3 MSTD sets")
    first, last = chain.profiles[positions[0] - 1], chain.profiles[positions[-1] - 1]
    hops = len(positions) - 1
    card_rate = Fraction(last.card - first.card, hops)
    diam_rate = Fraction(last.diameter - first.diameter, hops)
    return card_rate, diam_rate


def limiting_density(chain: Chain, probe_index: int) -> tuple[Optional[Fraction], Fraction]:
    """(analytic limit, observed density) at an odd probe position.

    The analytic limit is card_rate/diam_rate from growth_rates; it is None
    for External chains, which carry no construction to extrapolate.
    """
    if probe_index % 2 == 0 or probe_index < 1:
        raise ValueError(f"probe index must be odd and positive, got {probe_index}")
    if probe_index > len(chain.sets):
        raise ValueError(f"probe index {probe_index} beyond chain length {len(chain.sets)}")
    density = chain.profiles[probe_index - 1].density
    if density is DIAMETER_ZERO:
        raise ValueError("density undefined at a diameter-0 probe")
    analytic: Optional[Fraction] = None
    if chain.method_tag is not MethodTag.EXTERNAL:
        card_rate, diam_rate = growth_rates(chain)
        analytic = card_rate / diam_rate
    assert isinstance(density, Fraction)
    return analytic, density

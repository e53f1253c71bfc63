"""Exact arithmetic on finite sets of integers.

The canonical representation is a strictly increasing tuple of ints.  Sumsets
and difference sets are computed with an offset-bitset kernel: the set is
translated to start at offset 0, packed into one Python int, and shifted/OR-ed
once per element.  The naive double-loop enumeration lives in the test suite
as an independent oracle.
"""

from __future__ import annotations

import enum
import re
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

# Elements are capped so that a+b always fits a signed 64-bit word.
SAFE_BOUND = 2**62 - 1

# Above this diameter the packed masks stop being cheap (2 MiB of bits);
# sparse wide sets take the hash-based path instead.
_BITSET_SPAN_LIMIT = 1 << 24


class OverflowRisk(ValueError):
    """Element magnitude too large to guarantee overflow-free sums."""


class ZeroDilation(ValueError):
    """Affine image with dilation factor 0 is not a set map; refused."""


class EmptyProfile(ValueError):
    """Profile statistics are undefined for the empty set."""


class BadModulus(ValueError):
    """Residue counting needs a modulus of at least 1."""


class SetLiteralError(ValueError):
    """Malformed set-literal text."""


class SetClass(enum.Enum):
    MSTD = "MSTD"
    MDTS = "MDTS"
    BALANCED = "Balanced"


class _DiameterZero:
    """Density marker for single-element sets; never rendered as 0/0."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "DiameterZero"


DIAMETER_ZERO = _DiameterZero()

Density = Union[Fraction, _DiameterZero]


@dataclass(frozen=True)
class IntSet:
    """Finite set of integers, stored sorted and deduplicated."""

    elements: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for v in self.elements:
            if not isinstance(v, int) or isinstance(v, bool):
                raise TypeError(f"set elements must be ints, got {v!r}")
            if abs(v) > SAFE_BOUND:
                raise OverflowRisk(f"|{v}| exceeds the safe element bound 2**62-1")
            if prev is not None and v <= prev:
                raise ValueError("elements must be strictly increasing")
            prev = v

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __bool__(self) -> bool:
        return bool(self.elements)

    def __contains__(self, v: int) -> bool:
        i = bisect_left(self.elements, v)
        return i < len(self.elements) and self.elements[i] == v

    @property
    def min(self) -> int:
        return self.elements[0]

    @property
    def max(self) -> int:
        return self.elements[-1]

    @property
    def diameter(self) -> int:
        return self.elements[-1] - self.elements[0]

    def union(self, other: Iterable[int]) -> "IntSet":
        return make_set([*self.elements, *other])

    def without(self, v: int) -> "IntSet":
        if v not in self:
            return self
        return IntSet(tuple(e for e in self.elements if e != v))

    def within(self, lo: int, hi: int) -> "IntSet":
        """Elements falling in the inclusive interval [lo, hi]."""
        i = bisect_left(self.elements, lo)
        j = bisect_right(self.elements, hi)
        return IntSet(self.elements[i:j])

    def is_proper_subset(self, other: "IntSet") -> bool:
        return set(self.elements) < set(other.elements)


def make_set(values: Iterable[int]) -> IntSet:
    """Deduplicate, sort and bound-check `values` into an IntSet."""
    return IntSet(tuple(sorted(set(values))))


def interval(lo: int, hi: int) -> IntSet:
    """The inclusive integer interval [lo, hi]; empty when lo > hi."""
    return IntSet(tuple(range(lo, hi + 1)))


# The smallest sum-dominated set by cardinality and diameter (Conway's).
CONWAY_SET = IntSet((0, 2, 3, 4, 7, 11, 12, 14))


def _packed(A: IntSet) -> int:
    """Bitmask of A translated to start at 0 (bit i set iff min(A)+i in A)."""
    lo = A.min
    bits = 0
    for a in A.elements:
        bits |= 1 << (a - lo)
    return bits


def _unpack(mask: int, base: int) -> IntSet:
    # bin(mask)[:1:-1] is the bit string least-significant-first.
    return IntSet(tuple(i + base for i, c in enumerate(bin(mask)[:1:-1]) if c == "1"))


def sumset(A: IntSet) -> IntSet:
    """The set {a+b : a, b in A}."""
    if not A:
        return IntSet()
    if A.diameter > _BITSET_SPAN_LIMIT:
        return make_set({a + b for a in A.elements for b in A.elements})
    bits = _packed(A)
    lo = A.min
    acc = 0
    for a in A.elements:
        acc |= bits << (a - lo)
    return _unpack(acc, 2 * lo)


def diffset(A: IntSet) -> IntSet:
    """The set {a-b : a, b in A}; symmetric about 0."""
    if not A:
        return IntSet()
    if A.diameter > _BITSET_SPAN_LIMIT:
        return make_set({a - b for a in A.elements for b in A.elements})
    bits = _packed(A)
    lo, span = A.min, A.diameter
    acc = 0
    for b in A.elements:
        # bit position (a-lo) + span - (b-lo) encodes the difference a-b.
        acc |= bits << (span - (b - lo))
    return _unpack(acc, -span)


def affine(A: IntSet, x: int, y: int) -> IntSet:
    """The image {x*a + y : a in A}; cardinality-preserving for x != 0."""
    if x == 0:
        raise ZeroDilation("dilation factor must be nonzero")
    return make_set(x * a + y for a in A.elements)


def classify(A: IntSet) -> SetClass:
    """MSTD, MDTS or Balanced by comparing |A+A| with |A-A|."""
    if not A:
        return SetClass.BALANCED
    s, d = len(sumset(A)), len(diffset(A))
    if s > d:
        return SetClass.MSTD
    if d > s:
        return SetClass.MDTS
    return SetClass.BALANCED


@dataclass(frozen=True)
class SumDiffProfile:
    """Cardinality statistics of a set together with its sumset and diffset."""

    card: int
    sum_card: int
    diff_card: int
    diameter: int
    density: Density

    @property
    def density_text(self) -> str:
        if isinstance(self.density, _DiameterZero):
            return "N/A"
        return format_3dp(self.density)


def profile(A: IntSet) -> SumDiffProfile:
    """Full profile of a nonempty set; density kept as an exact rational."""
    if not A:
        raise EmptyProfile("cannot profile the empty set")
    diam = A.diameter
    density: Density = DIAMETER_ZERO if diam == 0 else Fraction(len(A), diam)
    return SumDiffProfile(
        card=len(A),
        sum_card=len(sumset(A)),
        diff_card=len(diffset(A)),
        diameter=diam,
        density=density,
    )


def symmetry_point(A: IntSet) -> Optional[int]:
    """min(A)+max(A) if A is a mirror image of itself about it, else None."""
    if not A:
        return None
    a_star = A.min + A.max
    mirrored = tuple(a_star - v for v in reversed(A.elements))
    return a_star if mirrored == A.elements else None


def residue_count(A: IntSet, n: int) -> int:
    """Number of distinct residues of A modulo n (mathematical modulus)."""
    if n < 1:
        raise BadModulus(f"modulus must be >= 1, got {n}")
    return len({v % n for v in A.elements})


def format_3dp(value: Fraction) -> str:
    """Render a nonnegative rational to 3 decimal places, ties rounding up."""
    n, d = value.numerator, value.denominator
    if n < 0:
        raise ValueError("only nonnegative values are rendered")
    scaled = (2000 * n + d) // (2 * d)
    return f"{scaled // 1000}.{scaled % 1000:03d}"


_INT_TOKEN = re.compile(r"^-?\d+$")
_RANGE_TOKEN = re.compile(r"^(-?\d+)\.\.(-?\d+)$")
_RANGE_LIMIT = 1 << 24


def parse_set_literal(text: str) -> IntSet:
    """Parse `-7,0,5,8,15` style literals; `a..b` is the inclusive interval."""
    body = text.strip()
    if not body:
        return IntSet()
    values: list[int] = []
    for token in body.split(","):
        tok = token.strip()
        if _INT_TOKEN.match(tok):
            values.append(int(tok))
            continue
        m = _RANGE_TOKEN.match(tok)
        if m:
            a, b = int(m.group(1)), int(m.group(2))
            if a > b:
                raise SetLiteralError(f"range {tok!r} needs its start <= end")
            if b - a >= _RANGE_LIMIT:
                raise SetLiteralError(f"range {tok!r} spans more than {_RANGE_LIMIT} values")
            values.extend(range(a, b + 1))
            continue
        raise SetLiteralError(f"bad set-literal token {tok!r}")
    return make_set(values)


def format_set_literal(A: IntSet) -> str:
    """Canonical comma-separated rendering; inverse of parse_set_literal."""
    return ",".join(str(v) for v in A.elements)

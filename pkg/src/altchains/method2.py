"""Alternating chain with the minimal growth rate of one element per step.

Starting from a base construction with m divisible by 4 and d in {m/4, 3m/4},
the first chain member is A1 = A union {-d, (k+1)m-d}.  Each round r then
appends one element above and one below:

    A_{2r}   = A_{2r-1} union {(k+r+1)m - d}     (difference-dominated)
    A_{2r+1} = A_{2r}   union {-rm - d}          (sum-dominated)

Removing m from any odd-position member leaves a set symmetric about
a* = (k+1)m - 2d; the verifier checks the four coverage/cardinality
identities that the symmetry argument rests on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import Chain, MethodTag, ValidationReport
from .intset import IntSet, diffset, profile, sumset
from .nathanson import NathansonParams


class ConstraintViolation(ValueError):
    """Parameters outside the m = 0 mod 4, d in {m/4, 3m/4} regime."""


@dataclass(frozen=True)
class Method2Constraint:
    """Evidence that (m, d) sits at a quarter point with m divisible by 4."""

    m: int
    d: int

    @classmethod
    def check(cls, params: NathansonParams) -> "Method2Constraint":
        if params.m % 4 != 0:
            raise ConstraintViolation(f"m must be divisible by 4, got {params.m}")
        if params.d not in (params.m // 4, 3 * params.m // 4):
            raise ConstraintViolation(
                f"d must be m/4 or 3m/4, got d={params.d} for m={params.m}"
            )
        return cls(m=params.m, d=params.d)

    @property
    def quarter(self) -> Fraction:
        """Which quarter point d selects: 1/4 or 3/4."""
        return Fraction(self.d, self.m)


@dataclass(frozen=True)
class Method2State:
    """Position of the generator: `current` after `r` completed rounds."""

    params: NathansonParams
    r: int
    current: IntSet

    @property
    def star(self) -> IntSet:
        """The symmetric core: the current set with m removed."""
        return self.current.without(self.params.m)


def build_a1_m2(params: NathansonParams) -> IntSet:
    """First chain member: the base with its symmetric fringe pair attached."""
    Method2Constraint.check(params)
    m, d, k = params.m, params.d, params.k
    a1 = params.A.union([-d, (k + 1) * m - d])
    p = profile(a1)
    # Guaranteed by construction; a failure means the formulas above are wrong.
    if p.sum_card != p.diff_card + 1:
        raise RuntimeError(
            f"self-check failed: first member for (m={m}, d={d}, k={k}) has "
            f"{p.sum_card} sums vs {p.diff_card} differences"
        )
    return a1


def append_schedule(params: NathansonParams, steps: int) -> tuple[int, ...]:
    """The elements appended after the first member, one per chain step."""
    m, d, k = params.m, params.d, params.k
    out: list[int] = []
    r = 1
    while len(out) < steps - 1:
        out.append((k + r + 1) * m - d)
        if len(out) == steps - 1:
            break
        out.append(-r * m - d)
        r += 1
    return tuple(out)


def generate_chain_m2(params: NathansonParams, steps: int) -> Chain:
    """Generate the first `steps` sets of the one-element-per-step chain."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    current = build_a1_m2(params)
    sets = [current]
    for element in append_schedule(params, steps):
        current = current.union([element])
        sets.append(current)
    return Chain.from_sets(sets, MethodTag.METHOD2)


def verify_star_identities(params: NathansonParams, chain: Chain) -> ValidationReport:
    """Check the four symmetric-core identities at every odd chain position.

    For each odd-position member A with core A* = A minus {m}:

      star-diff-cover:  m - A* is contained in A* - A*
      star-sum-cover:   m + A* is contained in A* + A*
      sum-card-offset:  |A+A| = |A*+A*| + 1
      diff-card-match:  |A-A| = |A*-A*|

    Witnesses are the first uncovered element (coverage checks) or the
    (observed, core) cardinality pair.
    """
    m = params.m
    failures = []
    for idx in range(1, len(chain.sets) + 1, 2):
        state = Method2State(params=params, r=(idx - 1) // 2, current=chain.sets[idx - 1])
        star = state.star
        star_sums, star_diffs = sumset(star), diffset(star)
        for a in star:
            if m - a not in star_diffs:
                failures.append((idx, "star-diff-cover", m - a))
                break
        for a in star:
            if m + a not in star_sums:
                failures.append((idx, "star-sum-cover", m + a))
                break
        p = chain.profiles[idx - 1]
        if p.sum_card != len(star_sums) + 1:
            failures.append((idx, "sum-card-offset", (p.sum_card, len(star_sums))))
        if p.diff_card != len(star_diffs):
            failures.append((idx, "diff-card-match", (p.diff_card, len(star_diffs))))

    notes = []
    odd_sums = [chain.profiles[i].sum_card for i in range(0, len(chain.sets), 2)]
    if len(odd_sums) >= 2:
        deltas = sorted({b - a for a, b in zip(odd_sums, odd_sums[1:])})
        notes.append(
            f"sum cardinality grows by {deltas} between consecutive MSTD members; "
            "the +1 offset holds set-by-set against the symmetric core, not "
            "between consecutive MSTD members"
        )
    return ValidationReport.from_failures(failures, notes=notes)

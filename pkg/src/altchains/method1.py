"""Alternating chain built by copying the base set around a modulus.

With a sum-dominated base A (min 0) and a modulus n > max(A) satisfying the
two admissibility conditions, the chain alternates

    A_{2l}   = A_{2l-1} union {l*n}          (difference-dominated)
    A_{2l+1} = A_{2l-1} union (A + l*n)      (sum-dominated)

Each appended copy lands strictly above everything before it, so no hole is
ever filled.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chains import Chain, MethodTag
from .intset import IntSet, SetClass, classify, diffset, residue_count, sumset


class NotMSTD(ValueError):
    """The base set must be sum-dominated."""


class MissingZero(ValueError):
    """The base set must have 0 as its minimum element."""


class ModulusTooSmall(ValueError):
    """The modulus must exceed the base's maximum element."""


class ConditionsFail(ValueError):
    """The (base, modulus) pair fails an admissibility condition."""


@dataclass(frozen=True)
class Method1Params:
    """Counters behind the two admissibility conditions for (base, n).

    x counts a in base with n+a outside base+base; y counts b in base with
    n-b outside base-base.  cond1 asks for equal residue counts of sumset and
    diffset mod n; cond2 asks 2y-x-1 to beat the sum-difference gap.
    """

    base: IntSet
    n: int
    x: int
    y: int
    sum_residues: int
    diff_residues: int
    cond1: bool
    cond2: bool

    @property
    def valid(self) -> bool:
        return self.cond1 and self.cond2


def _check_base(A: IntSet) -> None:
    if not A or A.min != 0:
        raise MissingZero("base must contain 0 as its minimum element")
    if classify(A) is not SetClass.MSTD:
        raise NotMSTD("base must be sum-dominated")


def analyze_modulus(A: IntSet, n: int) -> Method1Params:
    """Evaluate both admissibility conditions of modulus n for base A."""
    _check_base(A)
    if n <= A.max:
        raise ModulusTooSmall(f"modulus must exceed max(base) = {A.max}, got {n}")
    sums, diffs = sumset(A), diffset(A)
    x = sum(1 for a in A if n + a not in sums)
    y = sum(1 for b in A if n - b not in diffs)
    sum_residues = residue_count(sums, n)
    diff_residues = residue_count(diffs, n)
    return Method1Params(
        base=A,
        n=n,
        x=x,
        y=y,
        sum_residues=sum_residues,
        diff_residues=diff_residues,
        cond1=sum_residues == diff_residues,
        cond2=2 * y - x - 1 > len(sums) - len(diffs),
    )


def search_moduli(A: IntSet) -> list[int]:
    """All admissible moduli in (max A, 2*max A], ascending.

    Above 2*max A the first condition cannot hold (no residues collide), so
    the search range is complete.
    """
    _check_base(A)
    return [n for n in range(A.max + 1, 2 * A.max + 1) if analyze_modulus(A, n).valid]


def generate_chain_m1(A: IntSet, n: int, steps: int) -> Chain:
    """Generate the first `steps` sets of the alternating chain for (A, n)."""
    if steps < 1:
        raise ValueError(f"steps must be >= 1, got {steps}")
    params = analyze_modulus(A, n)
    if not params.cond1:
        raise ConditionsFail(
            f"n={n}: sumset has {params.sum_residues} residues mod n but "
            f"diffset has {params.diff_residues}"
        )
    if not params.cond2:
        raise ConditionsFail(
            f"n={n}: 2y-x-1 = {2 * params.y - params.x - 1} does not exceed "
            f"the sum-difference gap of the base"
        )
    sets = [A]
    prev_odd = A
    l = 1
    while len(sets) < steps:
        sets.append(prev_odd.union([l * n]))
        if len(sets) == steps:
            break
        prev_odd = prev_odd.union(a + l * n for a in A)
        sets.append(prev_odd)
        l += 1
    return Chain.from_sets(sets, MethodTag.METHOD1)

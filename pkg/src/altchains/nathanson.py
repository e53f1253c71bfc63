"""Base MSTD construction from a punctured interval and a symmetric frame.

Given m, d, k the pieces are

    B   = [0, m-1] minus {d}
    L   = {m-d, 2m-d, ..., km-d}
    a*  = (k+1)m - 2d
    A*  = B union L union (a* - B)      (symmetric about a*)
    A   = A* union {m}                  (sum-dominated)

Adding m breaks the symmetry by exactly one sum: 2m lands in A+A but not in
A*+A*, while every difference it creates was already present.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intset import IntSet, SetClass, affine, classify, diffset, interval, make_set, sumset


class BadParams(ValueError):
    """Parameter combination outside the construction's guarantees."""


@dataclass(frozen=True)
class NathansonParams:
    """Validated (m, d, k) bundle with all derived sets populated."""

    m: int
    d: int
    k: int
    B: IntSet
    L: IntSet
    a_star: int
    A_star: IntSet
    A: IntSet


def build_base(m: int, d: int, k: int) -> NathansonParams:
    """Construct and self-check the MSTD base set for (m, d, k)."""
    if m < 4:
        raise BadParams(f"m must be >= 4, got {m}")
    if not 1 <= d <= m - 1:
        raise BadParams(f"d must lie in [1, {m - 1}], got {d}")
    if 2 * d == m:
        raise BadParams(f"d = m/2 is excluded (d={d}, m={m})")
    k_min = 3 if 2 * d < m else 4
    if k < k_min:
        raise BadParams(f"k must be >= {k_min} when d {'<' if k_min == 3 else '>'} m/2, got {k}")

    B = interval(0, m - 1).without(d)
    L = make_set(j * m - d for j in range(1, k + 1))
    a_star = (k + 1) * m - 2 * d
    # a* - B is the affine image of B under x=-1, y=a*: one arithmetic path.
    A_star = B.union(L).union(affine(B, -1, a_star))
    A = A_star.union([m])

    # The construction guarantees both facts; failing here means a bug above.
    if classify(A) is not SetClass.MSTD:
        raise RuntimeError(f"self-check failed: base for (m={m}, d={d}, k={k}) is not MSTD")
    if 2 * m not in sumset(A) or 2 * m in sumset(A_star):
        raise RuntimeError(f"self-check failed: 2m not a fresh sum for (m={m}, d={d}, k={k})")

    return NathansonParams(m=m, d=d, k=k, B=B, L=L, a_star=a_star, A_star=A_star, A=A)


def check_interval_lemma(m: int, r: int) -> bool:
    """Whether [0,m-1] minus {r} has full interval sumset and diffset."""
    if m < 4:
        raise BadParams(f"m must be >= 4, got {m}")
    if not 2 <= r <= m - 3:
        raise BadParams(f"r must lie in [2, {m - 3}], got {r}")
    B = interval(0, m - 1).without(r)
    return sumset(B) == interval(0, 2 * m - 2) and diffset(B) == interval(-(m - 1), m - 1)

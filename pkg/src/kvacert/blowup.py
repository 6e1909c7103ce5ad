"""Divisor arithmetic on blow-ups and the numerical obstruction search.

Classes on the blow-up at r points are written pi^*F - sum m_i E_i with the
usual exceptional relations E_i^2 = -1, E_i.E_j = 0, pi^*F.E_i = 0.  On top
of the arithmetic this module provides:

* the adjoint-style class N = pi^*L - (k+1) sum E_i whose positivity drives
  the k-very-ampleness argument,
* the exact square of the multi-point Seshadri lower bound
  sqrt(L^2/r) * sqrt(1 - 1/(8r)),
* the numerical part of the Beltrametti-Sommese obstruction condition
  N.D - k - 1 <= D^2 < N.D/2 < k+1, and
* a brute-force oracle enumerating every obstruction candidate inside the
  a-priori bounds that the positivity argument provides.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor

from .exactmath import RatLike, as_rat
from .hyperell import DivisorClass, intersect, self_intersection


@dataclass(frozen=True)
class BlowupClass:
    """Class pi^*(base) - sum mults[i] * E_i on the blow-up at r = len(mults) points."""

    base: DivisorClass
    mults: tuple[int, ...]

    def __post_init__(self) -> None:
        if not all(isinstance(m, int) for m in self.mults):
            raise TypeError("multiplicities must be integers")
        object.__setattr__(self, "mults", tuple(self.mults))

    @property
    def r(self) -> int:
        return len(self.mults)


def blowup_intersect(x: BlowupClass, y: BlowupClass) -> int:
    """Intersection on the blow-up: base pairing minus sum of mult products."""
    if x.r != y.r:
        raise ValueError(f"mismatched number of blown-up points: {x.r} vs {y.r}")
    return intersect(x.base, y.base) - sum(m * n for m, n in zip(x.mults, y.mults))


def n_class(l_s: DivisorClass, k: int, r: int) -> BlowupClass:
    """The class pi^*L - (k+1) sum E_i; its square is L^2 - (k+1)^2 r."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if r < 0:
        raise ValueError("r must be nonnegative")
    return BlowupClass(l_s, (k + 1,) * r)


def seshadri_lower_sq(l_s: DivisorClass, r: int) -> Fraction:
    """Exact square of the Seshadri lower bound at r very general points.

    The bound is sqrt(L^2/r) * sqrt(1 - 1/(8r)); its square is the rational
    L^2 * (8r - 1) / (8 r^2), which is what exact comparisons consume.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    l2 = self_intersection(l_s)
    if l2 <= 0:
        raise ValueError("the class must have positive self-intersection")
    return Fraction(l2 * (8 * r - 1), 8 * r * r)


def star_holds(l_s: DivisorClass, r: int, k: int, delta: RatLike) -> bool:
    """Exact test: Seshadri lower bound exceeds k + 1 + delta (squared comparison)."""
    delta = as_rat(delta)
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    threshold = k + 1 + delta
    return seshadri_lower_sq(l_s, r) > threshold * threshold


def bs_condition3(nd: int, d2: int, k: int) -> bool:
    """Numerical obstruction condition: nd - k - 1 <= d2 < nd/2 < k + 1.

    All-integer form; the middle strictness is 2*d2 < nd so no fractions
    appear.  k is assumed nonnegative.
    """
    return nd - k - 1 <= d2 and 2 * d2 < nd and nd < 2 * k + 2


@dataclass(frozen=True)
class ObstructionWitness:
    """A candidate (D_S, multiplicities) whose numbers satisfy the obstruction condition."""

    d_s: DivisorClass
    mults: tuple[int, ...]
    nd: int
    d2: int

    def recheck(self, k: int) -> bool:
        return bs_condition3(self.nd, self.d2, k)


@lru_cache(maxsize=None)
def _square_sum_options(m_sum: int, max_parts: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
    """Distinct values of sum(m_i^2) over partitions of m_sum into <= max_parts parts.

    Returns (value, representative partition) pairs sorted by value; the
    representative is the first partition found in descending-lex order.
    """
    reps: dict[int, tuple[int, ...]] = {}

    def walk(rest: int, max_part: int, parts_left: int, acc: tuple[int, ...], sq: int):
        if rest == 0:
            reps.setdefault(sq, acc)
            return
        if parts_left == 0:
            return
        for first in range(min(rest, max_part), 0, -1):
            walk(rest - first, first, parts_left - 1, acc + (first,), sq + first * first)

    walk(m_sum, m_sum, min(max_parts, m_sum), (), 0)
    return tuple(sorted(reps.items()))


def search_obstruction(
    l_s: DivisorClass,
    k: int,
    r: int,
    delta: RatLike = Fraction(178, 1000),
    formula: str = "paper",
) -> list[ObstructionWitness]:
    """Enumerate all numerical obstruction candidates within the a-priori bounds.

    Candidates are classes D = pi^*D_S - sum m_i E_i with D_S = (alpha, beta)
    in the nonzero effective cone and m_i >= 0.  The positivity argument
    confines any obstruction to

        sum m_i <= (k+1)/delta      and      L.D_S <= (k+1)(1 + sum m_i),

    and ampleness of N forces N.D >= 1; the enumeration covers exactly that
    box and reports every candidate satisfying the numerical condition of
    :func:`bs_condition3`.  An empty result certifies non-existence within
    the bounds.

    Multiplicity vectors are represented up to permutation by sorted
    multisets.  Only sum(m_i) enters N.D; for D^2 the two supported
    conventions differ:

    * ``formula="paper"``: D^2 = D_S^2 - (sum m_i)^2.  Every multiset with
      the same sum is then equivalent, so a single concentrated
      representative (M, 0, ..., 0) is enumerated per sum.
    * ``formula="standard"``: D^2 = D_S^2 - sum m_i^2.  Distinct multisets
      with equal sum now give distinct numbers, so every achievable value
      of sum(m_i^2) (over partitions into at most r parts) is enumerated.

    The discrepancy between the two conventions is deliberate and surfaced
    to callers; it is never resolved silently.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if r < 0:
        raise ValueError("r must be nonnegative")
    delta = as_rat(delta)
    if delta <= 0:
        raise ValueError("delta must be positive (the search bounds are 1/delta-sized)")
    if formula not in ("paper", "standard"):
        raise ValueError(f"unknown D^2 formula variant: {formula!r}")
    a, b = l_s.a, l_s.b
    if a < 1 or b < 1:
        raise ValueError("the polarization must be ample (a >= 1 and b >= 1)")

    t = k + 1
    m_max = floor(Fraction(t) / delta) if r >= 1 else 0

    witnesses: list[ObstructionWitness] = []
    for m_sum in range(0, m_max + 1):
        if m_sum == 0:
            q_options: tuple[tuple[int, tuple[int, ...]], ...] = ((0, ()),)
        elif formula == "paper":
            q_options = ((m_sum * m_sum, (m_sum,)),)
        else:
            q_options = _square_sum_options(m_sum, min(r, m_sum))
        bound = t * (1 + m_sum)  # cap on L.D_S = a*beta + b*alpha
        for alpha in range(0, bound // b + 1):
            rest = bound - b * alpha
            for beta in range(0, rest // a + 1):
                if alpha == 0 and beta == 0:
                    continue
                lds = a * beta + b * alpha
                nd = lds - t * m_sum
                if nd < 1:  # N is ample, so N.D >= 1 for effective D
                    continue
                ds2 = 2 * alpha * beta
                for sq, parts in q_options:
                    d2 = ds2 - sq
                    if bs_condition3(nd, d2, k):
                        mults = parts + (0,) * (r - len(parts))
                        witnesses.append(
                            ObstructionWitness(DivisorClass(alpha, beta), mults, nd, d2)
                        )
    witnesses.sort(key=lambda w: (w.d_s.a, w.d_s.b, sum(w.mults), w.d2, w.mults))
    return witnesses

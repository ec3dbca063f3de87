"""Exact tensor-rank stratification of all codes of one shape.

Rank is the minimal number of rank-1 terms summing to an array, where the
meaning of "sum" is selected by the semiring: exclusive-or for the field
with two elements, inclusive-or for the Boolean case, and inclusive-or
restricted to disjoint supports for the non-negative integer case (a pair
of terms sharing a 1 simply contributes no candidate).

The stratification is computed level by level: the arrays of rank r + 1 are
the sums x + y with x of exact rank r and y of rank 1, minus everything
already assigned a rank at most r + 1.  Membership is tracked with a flat
presence table of one flag per code, so the inner-loop test is O(1); level
expansion is vectorized over (x, y) pairs and candidates are deduplicated
before the presence test, which keeps the result independent of the pair
order.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional

import numpy as np

from .arrays import ArrayCode, Shape, ShapeMismatchError, UnsupportedShapeError, rank_one_codes


class Semiring(enum.Enum):
    """Addition semantics on {0, 1}: 1+1 = 0, 1 or 2 respectively."""

    GF2 = "gf2"
    BOOLEAN = "bool"
    NONNEG = "nat"

    @classmethod
    def from_tag(cls, tag: str) -> "Semiring":
        for member in cls:
            if member.value == tag:
                return member
        raise ValueError(f"unknown semiring tag {tag!r}")


def combine(x: ArrayCode, y: ArrayCode, semiring: Semiring) -> Optional[ArrayCode]:
    """Sum of two codes under the semiring, or None when the pair is rejected.

    Rejection happens only in the non-negative integer case, when the two
    supports overlap; it is a normal outcome, not an error.
    """
    if x.shape != y.shape:
        raise ShapeMismatchError(
            f"cannot combine codes of dimension {x.shape.n} and {y.shape.n}"
        )
    if semiring is Semiring.GF2:
        return ArrayCode(x.code ^ y.code, x.shape)
    if semiring is Semiring.BOOLEAN:
        return ArrayCode(x.code | y.code, x.shape)
    if x.code & y.code:
        return None
    return ArrayCode(x.code | y.code, x.shape)


@dataclass(frozen=True)
class RankTable:
    """Partition of the full code space into exact-rank strata.

    Stratum r holds the sorted codes of exact rank r; stratum 0 is the zero
    array alone and the last stratum is nonempty.
    """

    shape: Shape
    semiring: Semiring
    strata: tuple[tuple[int, ...], ...]

    @property
    def r_max(self) -> int:
        return len(self.strata) - 1

    @property
    def stratum_sizes(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.strata)

    @cached_property
    def _rank_by_code(self) -> dict[int, int]:
        return {code: r for r, stratum in enumerate(self.strata) for code in stratum}

    def rank_of_code(self, code: int) -> int:
        return self._rank_by_code[code]


def rank_of(a: ArrayCode, table: RankTable) -> int:
    """Exact rank of a code, looked up in the stratification."""
    if a.shape != table.shape:
        raise ShapeMismatchError(
            f"code has dimension {a.shape.n}, table has {table.shape.n}"
        )
    return table.rank_of_code(a.code)


def _expand_level(cur: np.ndarray, r1: np.ndarray, semiring: Semiring) -> np.ndarray:
    if semiring is Semiring.GF2:
        cand = np.bitwise_xor.outer(cur, r1).ravel()
    elif semiring is Semiring.BOOLEAN:
        cand = np.bitwise_or.outer(cur, r1).ravel()
    else:
        keep = np.bitwise_and.outer(cur, r1).ravel() == 0
        cand = np.bitwise_or.outer(cur, r1).ravel()[keep]
    return np.unique(cand)


@lru_cache(maxsize=None)
def _stratify(n: int, semiring: Semiring) -> RankTable:
    shape = Shape(n)
    seen = np.zeros(shape.code_count, dtype=bool)
    seen[0] = True
    r1 = np.array(rank_one_codes(shape), dtype=np.uint32)
    seen[r1] = True
    strata = [(0,), tuple(int(c) for c in r1)]
    cur = r1
    while cur.size:
        cand = _expand_level(cur, r1, semiring)
        new = cand[~seen[cand]]
        if new.size == 0:
            break
        seen[new] = True
        strata.append(tuple(int(c) for c in new))
        cur = new
    return RankTable(shape, semiring, tuple(strata))


def stratify(shape: Shape, semiring: Semiring) -> RankTable:
    """Stratify the full code space of a shape by exact rank.

    Only n = 3 and n = 4 are supported: the presence table for n = 5 would
    already need 2**32 flags.
    """
    if shape.n not in (3, 4):
        raise UnsupportedShapeError(
            f"stratification supports dimensions 3 and 4, got {shape.n}"
        )
    return _stratify(shape.n, semiring)


# Decimal places of the percentage column, per dimension; these mirror the
# precision used in the reference tables (whole percentage points for n = 3,
# three decimals for n = 4).
PERCENT_DECIMALS = {3: 0, 4: 3}


def percent_text(count: int, total: int, decimals: int) -> str:
    """count/total as a percentage, rounded half-up; trailing zeros dropped."""
    scaled = (2 * count * 100 * 10**decimals + total) // (2 * total)
    if decimals == 0:
        return str(scaled)
    text = f"{scaled // 10**decimals}.{scaled % 10**decimals:0{decimals}d}"
    return text.rstrip("0").rstrip(".")


@dataclass(frozen=True)
class RankShare:
    """One row of a rank distribution."""

    rank: int
    count: int
    percent: str
    percent_exact: Fraction


def rank_distribution(table: RankTable) -> tuple[RankShare, ...]:
    """Counts per stratum with percentages of the full code space."""
    total = table.shape.code_count
    decimals = PERCENT_DECIMALS[table.shape.n]
    return tuple(
        RankShare(
            rank=r,
            count=len(stratum),
            percent=percent_text(len(stratum), total, decimals),
            percent_exact=Fraction(100 * len(stratum), total),
        )
        for r, stratum in enumerate(table.strata)
    )

"""Symmetry of 0-1 codes over the field with two elements.

The six invertible 2x2 matrices over {0, 1} act along each of the n
directions by changing basis on the 2-vectors of that direction, and the
direction permutations transpose subscripts.  The small symmetry group is
the n-fold direct product of the matrix group; the large symmetry group
extends it by all direction permutations.  Both actions preserve rank.

Orbits are expanded by breadth-first closure under a small generator set
(two matrices per direction, plus the adjacent transpositions for the
large group); the classic full-product expansion over all group elements
is kept as ``small_orbit_naive``/``large_orbit_naive`` and used as a
cross-check oracle in the test suite.  Canonical form of an orbit is its
numerically minimal code.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal

import numpy as np

from .arrays import ArrayCode, Shape, UnsupportedShapeError
from .stratify import RankTable, Semiring

GroupKind = Literal["small", "large"]


@dataclass(frozen=True, order=True)
class GroupElement:
    """An invertible 2x2 matrix over {0, 1}, stored as two rows."""

    rows: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self) -> None:
        (a, b), (c, d) = self.rows
        if {a, b, c, d} - {0, 1}:
            raise ValueError(f"entries must be 0 or 1, got {self.rows}")
        if (a & d) ^ (b & c) != 1:
            raise ValueError(f"matrix {self.rows} is singular mod 2")

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return GroupElement(
            (((a & e) ^ (b & g), (a & f) ^ (b & h)),
             ((c & e) ^ (d & g), (c & f) ^ (d & h)))
        )

    def apply_vec(self, v: tuple[int, int]) -> tuple[int, int]:
        """Image of a column 2-vector under the matrix, mod 2."""
        (a, b), (c, d) = self.rows
        return ((a & v[0]) ^ (b & v[1]), (c & v[0]) ^ (d & v[1]))


#: The six invertible matrices in lexicographic order of their entries.
GL2_F2: tuple[GroupElement, ...] = tuple(
    GroupElement(((a, b), (c, d)))
    for a, b, c, d in itertools.product((0, 1), repeat=4)
    if (a & d) ^ (b & c) == 1
)

#: A generating pair: an order-2 and an order-3 element.
GL2_GENERATORS: tuple[GroupElement, ...] = (GL2_F2[0], GL2_F2[1])


@dataclass(frozen=True)
class AxisPermutation:
    """A bijection of the n directions; perm[j-1] is the image of j."""

    perm: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError(f"{self.perm} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "AxisPermutation":
        return cls(tuple(range(1, n + 1)))


def all_axis_permutations(n: int) -> tuple[AxisPermutation, ...]:
    return tuple(
        AxisPermutation(p) for p in itertools.permutations(range(1, n + 1))
    )


@dataclass(frozen=True)
class OrbitRecord:
    """One orbit: minimal member, rank, cardinality, ones of the minimum."""

    canonical: ArrayCode
    rank: int
    size: int
    ones: int
    group: GroupKind


@dataclass(frozen=True)
class OrbitSplit:
    """How large orbit #index decomposes into small orbits.

    parts holds (count, size) pairs sorted by size ascending; an unsplit
    orbit is reported as a single (1, size) pair.
    """

    index: int
    rank: int
    size: int
    parts: tuple[tuple[int, int], ...]


# ---------------------------------------------------------------------------
# scalar actions
# ---------------------------------------------------------------------------

def _axis_mask(n: int, direction: int) -> int:
    # code bits whose cell has subscript 1 in the given direction
    pos = n - direction
    return sum(1 << b for b in range(1 << n) if (b >> pos) & 1)


def _check_direction(shape: Shape, direction: int) -> None:
    if not 1 <= direction <= shape.n:
        raise ValueError(f"direction must be in 1..{shape.n}, got {direction}")


def act_axis(g: GroupElement, a: ArrayCode, direction: int) -> ArrayCode:
    """Basis change along one direction: each 2-vector of that direction is
    left-multiplied by the matrix, mod 2."""
    _check_direction(a.shape, direction)
    n = a.shape.n
    shift = 1 << (n - direction)
    m1 = _axis_mask(n, direction)
    hi = a.code & m1
    lo = (a.code & (m1 >> shift)) << shift
    (g11, g12), (g21, g22) = g.rows
    new_hi = (hi if g11 else 0) ^ (lo if g12 else 0)
    new_lo = (hi if g21 else 0) ^ (lo if g22 else 0)
    return ArrayCode(new_hi | (new_lo >> shift), a.shape)


def _perm_bit_sources(p: tuple[int, ...], n: int) -> tuple[int, ...]:
    # target code bit b takes the value of source bit sources[b]
    sources = []
    for b in range(1 << n):
        s = 0
        for j in range(1, n + 1):
            s |= ((b >> (n - p[j - 1])) & 1) << (n - j)
        sources.append(s)
    return tuple(sources)


def act_permutation(p: AxisPermutation, a: ArrayCode) -> ArrayCode:
    """Transpose subscripts: the entry at (i_1, ..., i_n) moves from
    position (i_p(1), ..., i_p(n))."""
    n = a.shape.n
    if p.n != n:
        raise ValueError(f"permutation acts on {p.n} directions, code has {n}")
    out = 0
    for b, s in enumerate(_perm_bit_sources(p.perm, n)):
        out |= ((a.code >> s) & 1) << b
    return ArrayCode(out, a.shape)


# ---------------------------------------------------------------------------
# vectorized actions over the whole code space (n = 3, 4)
# ---------------------------------------------------------------------------

def _require_enumerable(shape: Shape) -> None:
    if shape.n not in (3, 4):
        raise UnsupportedShapeError(
            f"orbit expansion supports dimensions 3 and 4, got {shape.n}"
        )


@lru_cache(maxsize=None)
def axis_action_table(g: GroupElement, direction: int, n: int) -> np.ndarray:
    """Image of every code under one matrix acting along one direction."""
    codes = np.arange(1 << (1 << n), dtype=np.uint32)
    shift = 1 << (n - direction)
    m1 = _axis_mask(n, direction)
    hi = codes & m1
    lo = (codes & (m1 >> shift)) << shift
    (g11, g12), (g21, g22) = g.rows
    new_hi = (hi if g11 else 0) ^ (lo if g12 else 0)
    new_lo = (hi if g21 else 0) ^ (lo if g22 else 0)
    out = new_hi | (new_lo >> shift)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def permutation_action_table(p: AxisPermutation, n: int) -> np.ndarray:
    """Image of every code under one direction permutation."""
    codes = np.arange(1 << (1 << n), dtype=np.uint32)
    out = np.zeros_like(codes)
    for b, s in enumerate(_perm_bit_sources(p.perm, n)):
        out |= ((codes >> s) & 1) << np.uint32(b)
    out.flags.writeable = False
    return out


@lru_cache(maxsize=None)
def _generator_tables(n: int, group: GroupKind) -> tuple[np.ndarray, ...]:
    tables = []
    for direction in range(1, n + 1):
        for g in GL2_GENERATORS:
            tables.append(axis_action_table(g, direction, n))
    if group == "large":
        for j in range(1, n):
            perm = list(range(1, n + 1))
            perm[j - 1], perm[j] = perm[j], perm[j - 1]
            tables.append(permutation_action_table(AxisPermutation(tuple(perm)), n))
    return tuple(tables)


def _expand_orbit(code: int, tables: Iterable[np.ndarray], total: int) -> np.ndarray:
    member = np.zeros(total, dtype=bool)
    member[code] = True
    frontier = np.array([code], dtype=np.uint32)
    while frontier.size:
        images = np.unique(np.concatenate([t[frontier] for t in tables]))
        new = images[~member[images]]
        member[new] = True
        frontier = new
    return np.nonzero(member)[0]


def _orbit_codes(code: int, shape: Shape, group: GroupKind) -> np.ndarray:
    return _expand_orbit(
        code, _generator_tables(shape.n, group), shape.code_count
    )


def small_orbit(a: ArrayCode) -> tuple[ArrayCode, ...]:
    """All images of a code under the small group, sorted ascending."""
    _require_enumerable(a.shape)
    codes = _orbit_codes(a.code, a.shape, "small")
    return tuple(ArrayCode(int(c), a.shape) for c in codes)


def large_orbit(a: ArrayCode) -> tuple[ArrayCode, ...]:
    """All images of a code under the large group, sorted ascending."""
    _require_enumerable(a.shape)
    codes = _orbit_codes(a.code, a.shape, "large")
    return tuple(ArrayCode(int(c), a.shape) for c in codes)


def small_orbit_naive(a: ArrayCode) -> tuple[ArrayCode, ...]:
    """Full product expansion over all 6**n matrix tuples, axis by axis."""
    current = {a}
    for direction in range(1, a.shape.n + 1):
        current = {act_axis(g, x, direction) for g in GL2_F2 for x in current}
    return tuple(sorted(current))


def large_orbit_naive(a: ArrayCode) -> tuple[ArrayCode, ...]:
    """Union of naive small orbits over all direction permutations."""
    out: set[ArrayCode] = set()
    for p in all_axis_permutations(a.shape.n):
        out.update(small_orbit_naive(act_permutation(p, a)))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# orbit classification
# ---------------------------------------------------------------------------

def _require_field(table: RankTable) -> None:
    if table.semiring is not Semiring.GF2:
        raise ValueError(
            "orbit classification is defined over the two-element field only; "
            "canonical forms do not exist for the Boolean or integer cases"
        )


@lru_cache(maxsize=None)
def _classify_with_labels(
    table: RankTable, group: GroupKind
) -> tuple[tuple[OrbitRecord, ...], np.ndarray]:
    shape = table.shape
    tables = _generator_tables(shape.n, group)
    labels = np.full(shape.code_count, -1, dtype=np.int32)
    records: list[OrbitRecord] = []
    for rank, stratum in enumerate(table.strata):
        for code in stratum:
            if labels[code] >= 0:
                continue
            orbit = _expand_orbit(code, tables, shape.code_count)
            labels[orbit] = len(records)
            records.append(
                OrbitRecord(
                    canonical=ArrayCode(code, shape),
                    rank=rank,
                    size=int(orbit.size),
                    ones=bin(code).count("1"),
                    group=group,
                )
            )
    labels.flags.writeable = False
    return tuple(records), labels


def classify(table: RankTable, group: GroupKind) -> tuple[OrbitRecord, ...]:
    """Orbit records per rank, in discovery order.

    Within each rank the numerically minimal remaining code seeds the next
    orbit, so records are sorted by (rank, canonical); each orbit's minimal
    member is the seed itself.
    """
    _require_field(table)
    _require_enumerable(table.shape)
    records, _ = _classify_with_labels(table, group)
    return records


def orbit_split(table: RankTable) -> tuple[OrbitSplit, ...]:
    """Decomposition of every large orbit into small orbits.

    Large orbits are numbered 1..K in classification order.  Each small
    orbit lies inside exactly one large orbit, so the (count, size) pairs
    of an entry multiply and sum back to the large orbit's size.
    """
    _require_field(table)
    _require_enumerable(table.shape)
    large_records, large_labels = _classify_with_labels(table, "large")
    small_records, _ = _classify_with_labels(table, "small")
    parts: dict[int, Counter] = {i: Counter() for i in range(len(large_records))}
    for rec in small_records:
        parts[int(large_labels[rec.canonical.code])][rec.size] += 1
    return tuple(
        OrbitSplit(
            index=i + 1,
            rank=rec.rank,
            size=rec.size,
            parts=tuple(
                (count, size) for size, count in sorted(parts[i].items())
            ),
        )
        for i, rec in enumerate(large_records)
    )

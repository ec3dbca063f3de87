"""Bit-coded 0-1 arrays of shape 2 x ... x 2.

An n-dimensional array whose extents are all 2 is packed into an unsigned
integer of 2**n bits.  Entries are linearized in lexicographic order of the
subscript tuples (the last subscript varies fastest), and the first entry of
the linearization occupies the most significant bit.  With that packing,
numeric comparison of codes coincides with lexicographic comparison of the
linearized arrays, so the minimal element of any set of arrays is simply the
smallest code.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence, Tuple

Vec2 = Tuple[int, int]

#: The three nonzero 0-1 vectors of length 2.
NONZERO_VECS: tuple[Vec2, ...] = ((0, 1), (1, 0), (1, 1))


class ShapeMismatchError(ValueError):
    """Codes of different dimension were mixed in a single operation."""


class UnsupportedShapeError(ValueError):
    """The dimension is outside the range an operation supports."""


@dataclass(frozen=True, order=True)
class Shape:
    """Dimension count of a 2 x ... x 2 array (every extent is fixed at 2).

    Full enumeration is only feasible for n = 3, 4; dimensions up to 6 are
    accepted so that orbit-count lower bounds can be evaluated.
    """

    n: int

    def __post_init__(self) -> None:
        if not 3 <= self.n <= 6:
            raise UnsupportedShapeError(f"dimension must be in 3..6, got {self.n}")

    @property
    def m(self) -> int:
        """Cell count 2**n."""
        return 1 << self.n

    @property
    def code_count(self) -> int:
        """Number of distinct 0-1 arrays of this shape, 2**(2**n)."""
        return 1 << self.m

    def subscripts(self) -> Iterator[tuple[int, ...]]:
        """All subscript tuples in lexicographic order."""
        return itertools.product((1, 2), repeat=self.n)


def flat_position(subs: Sequence[int], n: int) -> int:
    """0-based linearization position of a subscript tuple."""
    q = 0
    for i in subs:
        q = (q << 1) | (i - 1)
    return q


@dataclass(frozen=True)
class ArrayCode:
    """A 0-1 array of 2 x ... x 2 shape packed into an unsigned integer."""

    code: int
    shape: Shape

    def __post_init__(self) -> None:
        if not 0 <= self.code < self.shape.code_count:
            raise ValueError(
                f"code {self.code} out of range for dimension {self.shape.n}"
            )

    # Numeric order on codes is the lexicographic order on linearizations;
    # comparing codes of different shapes is a usage error, not False.
    def _same_shape(self, other: "ArrayCode") -> "ArrayCode":
        if not isinstance(other, ArrayCode):
            raise TypeError(f"cannot compare ArrayCode with {type(other).__name__}")
        if other.shape != self.shape:
            raise ShapeMismatchError(
                f"cannot compare codes of dimension {self.shape.n} and {other.shape.n}"
            )
        return other

    def __lt__(self, other: "ArrayCode") -> bool:
        return self.code < self._same_shape(other).code

    def __le__(self, other: "ArrayCode") -> bool:
        return self.code <= self._same_shape(other).code

    def __gt__(self, other: "ArrayCode") -> bool:
        return self.code > self._same_shape(other).code

    def __ge__(self, other: "ArrayCode") -> bool:
        return self.code >= self._same_shape(other).code

    def ones(self) -> int:
        """Number of entries equal to 1."""
        return bin(self.code).count("1")

    def bit(self, subs: Sequence[int]) -> int:
        """Entry at a subscript tuple."""
        q = flat_position(subs, self.shape.n)
        return (self.code >> (self.shape.m - 1 - q)) & 1

    def entries(self) -> tuple[int, ...]:
        """Entries in linearization order."""
        m = self.shape.m
        return tuple((self.code >> (m - 1 - q)) & 1 for q in range(m))

    def text(self) -> str:
        """Linearization as a string of '0'/'1' characters, no separators."""
        return format(self.code, f"0{self.shape.m}b")

    @classmethod
    def from_text(cls, text: str, shape: Shape) -> "ArrayCode":
        """Parse a 0/1 string in linearization order; spaces are ignored."""
        digits = text.replace(" ", "")
        if len(digits) != shape.m or set(digits) - {"0", "1"}:
            raise ValueError(
                f"expected {shape.m} characters '0'/'1', got {text!r}"
            )
        return cls(int(digits, 2), shape)

    @classmethod
    def from_entries(cls, entries: Iterable[int], shape: Shape) -> "ArrayCode":
        """Build from entries given in linearization order."""
        bits = list(entries)
        if len(bits) != shape.m or any(b not in (0, 1) for b in bits):
            raise ValueError(f"expected {shape.m} entries in {{0, 1}}")
        code = 0
        for b in bits:
            code = (code << 1) | b
        return cls(code, shape)


def flatten(cells: Mapping[tuple[int, ...], int], shape: Shape) -> ArrayCode:
    """Pack a subscript-to-entry mapping into a code.

    Every subscript tuple of the shape must be present exactly once and no
    other key may appear.
    """
    expected = set(shape.subscripts())
    given = set(cells)
    if given != expected:
        missing = sorted(expected - given)
        extra = sorted(given - expected)
        raise ValueError(
            f"malformed cell map for dimension {shape.n}: "
            f"missing {missing[:3]}{'...' if len(missing) > 3 else ''}, "
            f"unexpected {extra[:3]}{'...' if len(extra) > 3 else ''}"
        )
    code = 0
    for subs in shape.subscripts():
        v = cells[subs]
        if v not in (0, 1):
            raise ValueError(f"entry at {subs} must be 0 or 1, got {v!r}")
        code = (code << 1) | v
    return ArrayCode(code, shape)


def unflatten(a: ArrayCode) -> dict[tuple[int, ...], int]:
    """Inverse of :func:`flatten`."""
    return {subs: a.bit(subs) for subs in a.shape.subscripts()}


def outer_product(factors: Sequence[Vec2], shape: Shape) -> ArrayCode:
    """Rank-1 array whose entry at (i_1, ..., i_n) is the product of factor
    entries v_{j, i_j}.

    Exactly n factors are required and each must be one of the three nonzero
    0-1 vectors: rank-1 arrays are products of nonzero vectors only.
    """
    if len(factors) != shape.n:
        raise ValueError(f"expected {shape.n} factors, got {len(factors)}")
    for j, v in enumerate(factors, start=1):
        if tuple(v) not in NONZERO_VECS:
            raise ValueError(f"factor {j} must be a nonzero 0-1 pair, got {v!r}")
    code = 0
    for subs in shape.subscripts():
        bit = 1
        for j, i in enumerate(subs):
            bit &= factors[j][i - 1]
        code = (code << 1) | bit
    return ArrayCode(code, shape)


def rank_one_codes(shape: Shape) -> tuple[int, ...]:
    """Sorted raw codes of all rank-1 arrays; there are exactly 3**n."""
    codes = {
        outer_product(f, shape).code
        for f in itertools.product(NONZERO_VECS, repeat=shape.n)
    }
    return tuple(sorted(codes))


def ones_count(a: ArrayCode) -> int:
    """Number of entries equal to 1."""
    return a.ones()


def render_mat(a: ArrayCode) -> str:
    """2 x 4 block display of a 3-dimensional array.

    Row i is [x_i11 x_i21 | x_i12 x_i22]: the third subscript selects the
    left or right block (the two frontal slices).
    """
    if a.shape.n != 3:
        raise UnsupportedShapeError(
            f"matrix display is defined for dimension 3 only, got {a.shape.n}"
        )
    rows = []
    for i in (1, 2):
        left = f"{a.bit((i, 1, 1))} {a.bit((i, 2, 1))}"
        right = f"{a.bit((i, 1, 2))} {a.bit((i, 2, 2))}"
        rows.append(f"[ {left} | {right} ]")
    return "\n".join(rows)

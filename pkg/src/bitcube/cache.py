"""Versioned binary cache for rank tables.

Layout, all little-endian:

    magic            6 bytes  b"BCRKTB"
    format version   u16
    dimension n      u8
    semiring tag     u8       0 = gf2, 1 = bool, 2 = nat
    max rank         u8
    padding          3 zero bytes
    per rank 0..max: u32 count, then count u32 codes sorted ascending
    checksum         u32 crc32 of every preceding byte

The fixed byte order makes cache files portable; the checksum makes
corruption detectable.
"""

from __future__ import annotations

import struct
import zlib
from pathlib import Path

import numpy as np

from .arrays import Shape
from .stratify import RankTable, Semiring

FORMAT_VERSION = 1

_MAGIC = b"BCRKTB"
_HEADER = struct.Struct("<6sHBBB3x")
_U32 = struct.Struct("<I")
_TAG_OF = {Semiring.GF2: 0, Semiring.BOOLEAN: 1, Semiring.NONNEG: 2}
_SEMIRING_OF = {tag: s for s, tag in _TAG_OF.items()}


class CacheError(Exception):
    """The cache file is corrupted or written in an incompatible layout."""


def cache_filename(n: int, semiring: Semiring) -> str:
    return f"strata-v{FORMAT_VERSION}-n{n}-{semiring.value}.bin"


def dump_table(table: RankTable, path: Path) -> None:
    """Write a rank table to its binary cache layout."""
    parts = [
        _HEADER.pack(
            _MAGIC,
            FORMAT_VERSION,
            table.shape.n,
            _TAG_OF[table.semiring],
            table.r_max,
        )
    ]
    for stratum in table.strata:
        parts.append(_U32.pack(len(stratum)))
        parts.append(np.asarray(stratum, dtype="<u4").tobytes())
    body = b"".join(parts)
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(body + _U32.pack(zlib.crc32(body)))


def load_table(path: Path) -> RankTable:
    """Read a rank table back; raises CacheError on any anomaly."""
    raw = Path(path).read_bytes()
    if len(raw) < _HEADER.size + _U32.size:
        raise CacheError(f"{path}: truncated cache file")
    body, (crc,) = raw[:-4], _U32.unpack(raw[-4:])
    if zlib.crc32(body) != crc:
        raise CacheError(f"{path}: checksum mismatch")
    magic, version, n, tag, r_max = _HEADER.unpack_from(body)
    if magic != _MAGIC:
        raise CacheError(f"{path}: not a rank-table cache")
    if version != FORMAT_VERSION:
        raise CacheError(f"{path}: cache format v{version}, expected v{FORMAT_VERSION}")
    if n not in (3, 4) or tag not in _SEMIRING_OF:
        raise CacheError(f"{path}: invalid header fields n={n} tag={tag}")
    shape = Shape(n)
    offset = _HEADER.size
    strata = []
    for _ in range(r_max + 1):
        if offset + 4 > len(body):
            raise CacheError(f"{path}: truncated stratum header")
        (count,) = _U32.unpack_from(body, offset)
        offset += 4
        end = offset + 4 * count
        if end > len(body):
            raise CacheError(f"{path}: truncated stratum data")
        codes = np.frombuffer(body, dtype="<u4", count=count, offset=offset)
        offset = end
        if count == 0 or (count > 1 and not (codes[1:] > codes[:-1]).all()):
            raise CacheError(f"{path}: stratum not a sorted nonempty set")
        strata.append(tuple(int(c) for c in codes))
    if offset != len(body):
        raise CacheError(f"{path}: trailing bytes after last stratum")
    if sum(len(s) for s in strata) != shape.code_count:
        raise CacheError(f"{path}: strata do not cover the code space")
    return RankTable(shape, _SEMIRING_OF[tag], tuple(strata))

import pytest

from bitcube import CacheError, cache_filename, dump_table, load_table
from bitcube.cache import FORMAT_VERSION


def test_round_trip_every_table(tables, tmp_path):
    for (n, tag), table in tables.items():
        path = tmp_path / cache_filename(n, table.semiring)
        dump_table(table, path)
        assert load_table(path) == table


def test_filename_carries_version_and_key():
    from bitcube import Semiring

    name = cache_filename(4, Semiring.GF2)
    assert f"v{FORMAT_VERSION}" in name and "n4" in name and "gf2" in name


def test_checksum_detects_corruption(tables, tmp_path):
    table = tables[(3, "gf2")]
    path = tmp_path / "t.bin"
    dump_table(table, path)
    raw = bytearray(path.read_bytes())
    raw[20] ^= 0xFF
    path.write_bytes(bytes(raw))
    with pytest.raises(CacheError, match="checksum"):
        load_table(path)


def test_truncated_file_rejected(tables, tmp_path):
    table = tables[(3, "bool")]
    path = tmp_path / "t.bin"
    dump_table(table, path)
    path.write_bytes(path.read_bytes()[:10])
    with pytest.raises(CacheError):
        load_table(path)


def test_wrong_magic_rejected(tables, tmp_path):
    path = tmp_path / "t.bin"
    path.write_bytes(b"NOTACACHEFILE" + bytes(64))
    with pytest.raises(CacheError):
        load_table(path)


def test_version_mismatch_rejected(tables, tmp_path):
    import struct
    import zlib

    table = tables[(3, "gf2")]
    path = tmp_path / "t.bin"
    dump_table(table, path)
    raw = bytearray(path.read_bytes())[:-4]
    struct.pack_into("<H", raw, 6, FORMAT_VERSION + 1)
    body = bytes(raw)
    path.write_bytes(body + struct.pack("<I", zlib.crc32(body)))
    with pytest.raises(CacheError, match="format"):
        load_table(path)

#!/usr/bin/env python3
"""Regenerate every result table into an output directory.

Usage:
    python scripts/make_tables.py [--out build/tables] [--format md csv json]

Each table kind is written once per requested format; the run also prints a
short one-line summary per file so diffs against a previous run are easy.
"""

import argparse
import sys
from pathlib import Path

try:
    import bitcube
except ImportError:
    sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
    import bitcube

from bitcube.reporting import TABLE_KINDS, emit_table


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="build/tables", type=Path)
    parser.add_argument(
        "--format", nargs="+", default=["md", "csv", "json"],
        choices=["md", "csv", "json"],
    )
    parser.add_argument("--flat", action="store_true")
    args = parser.parse_args()

    args.out.mkdir(parents=True, exist_ok=True)
    for kind in TABLE_KINDS:
        for fmt in args.format:
            text = emit_table(kind, fmt, flat=args.flat)
            path = args.out / f"{kind}.{fmt}"
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path} ({len(text)} bytes)")
    return 0


if __name__ == "__main__":
    sys.exit(main())

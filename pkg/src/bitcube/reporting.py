"""Lower bounds, rank/ones partitions, table emission and verification.

Table emission is deterministic: a given (kind, format) pair always yields
byte-identical text.  Verification recomputes every classification from
scratch and compares it against the embedded reference dataset; a mismatch
is a reported outcome, never an exception.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import Sequence, Union

from . import expected
from .arrays import ArrayCode, Shape, render_mat
from .groups import (
    OrbitRecord,
    OrbitSplit,
    _classify_with_labels,
    classify,
    orbit_split,
)
from .stratify import RankTable, Semiring, rank_distribution, stratify

Cell = Union[int, str]


def lower_bounds(n: int) -> tuple[int, int]:
    """Orbit-count lower bounds for the small and large symmetry groups.

    Exact integer ceilings of 2**(2**n)/6**n and 2**(2**n)/(6**n n!);
    the n = 6 values exceed 64 bits, hence big-integer arithmetic.
    """
    if not 3 <= n <= 6:
        raise ValueError(f"lower bounds are defined for n in 3..6, got {n}")
    total = 1 << (1 << n)
    small_order = 6**n
    large_order = small_order * math.factorial(n)
    return (-(-total // small_order), -(-total // large_order))


@dataclass(frozen=True)
class PartitionRow:
    """Arrays of one (rank, ones) class: count and minimal representative."""

    rank: int
    ones: int
    count: int
    representative: ArrayCode


def partition_by_ones(table: RankTable) -> tuple[PartitionRow, ...]:
    """Partition each stratum by the number of entries equal to 1.

    Rows are sorted by (rank, ones); empty classes are omitted.  Strata are
    stored ascending, so the first code seen in a class is its minimum.
    """
    rows = []
    for rank, stratum in enumerate(table.strata):
        classes: dict[int, list[int]] = {}
        for code in stratum:
            ones = bin(code).count("1")
            entry = classes.get(ones)
            if entry is None:
                classes[ones] = [1, code]
            else:
                entry[0] += 1
        for ones in sorted(classes):
            count, rep = classes[ones]
            rows.append(
                PartitionRow(rank, ones, count, ArrayCode(rep, table.shape))
            )
    return tuple(rows)


# ---------------------------------------------------------------------------
# table construction
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Table:
    name: str
    columns: tuple[str, ...]
    rows: tuple[tuple[Cell, ...], ...]


FORMATS = ("md", "csv", "json")

#: Emission order of `emit_all_tables` and the CLI's --kind all.
TABLE_KINDS = (
    "strata-3-gf2",
    "strata-3-bool",
    "strata-3-nat",
    "strata-4-gf2",
    "strata-4-bool",
    "strata-4-nat",
    "table1",
    "table2",
    "table3",
    "table4",
    "table5",
    "split-3",
    "split-4",
    "small-split-3",
    "lower-bounds",
)


def mat_compact(a: ArrayCode) -> str:
    """One-line form of the 2 x 4 block display, rows joined by ' / '."""
    rows = render_mat(a).splitlines()
    return "[" + " / ".join(r.strip("[] ") for r in rows) + "]"


def _canon_cell(a: ArrayCode, flat: bool) -> str:
    if flat or a.shape.n != 3:
        return a.text()
    return mat_compact(a)


def distribution_table(table: RankTable, fmt: str = "md") -> Table:
    """Rank distribution of a stratification as an emittable table."""
    dist = rank_distribution(table)
    columns: tuple[str, ...] = ("rank", "count", "percent")
    rows = [(share.rank, share.count, share.percent) for share in dist]
    if fmt in ("csv", "json"):
        columns += ("percent_exact",)
        rows = [
            row
            + (f"{share.percent_exact.numerator}/{share.percent_exact.denominator}",)
            for row, share in zip(rows, dist)
        ]
    return Table(
        f"strata-{table.shape.n}-{table.semiring.value}", columns, tuple(rows)
    )


def orbit_records_table(
    records: Sequence[OrbitRecord], name: str, flat: bool = False
) -> Table:
    return Table(
        name,
        ("orbit", "rank", "size", "ones", "canonical"),
        tuple(
            (i + 1, rec.rank, rec.size, rec.ones, _canon_cell(rec.canonical, flat))
            for i, rec in enumerate(records)
        ),
    )


def partition_table(table: RankTable, name: str, flat: bool = False) -> Table:
    rows = partition_by_ones(table)
    return Table(
        name,
        ("row", "rank", "ones", "count", "representative"),
        tuple(
            (i + 1, row.rank, row.ones, row.count,
             _canon_cell(row.representative, flat))
            for i, row in enumerate(rows)
        ),
    )


def split_rule(split: OrbitSplit) -> str:
    """'x → y·z' line for one large orbit."""
    return f"{split.index} → " + " + ".join(
        f"{count}·{size}" for count, size in split.parts
    )


def split_table(splits: Sequence[OrbitSplit], n: int) -> Table:
    return Table(
        f"split-{n}",
        ("orbit", "rank", "size", "small orbits"),
        tuple(
            (s.index, s.rank, s.size,
             " + ".join(f"{count}·{size}" for count, size in s.parts))
            for s in splits
        ),
    )


def rank2_small_split(flat: bool = False) -> Table:
    """The three small orbits inside the rank-2 size-54 large orbit (n=3)."""
    table = stratify(Shape(3), Semiring.GF2)
    large_records, large_labels = _classify_with_labels(table, "large")
    big = next(rec for rec in large_records if rec.rank == 2 and rec.size == 54)
    target = large_labels[big.canonical.code]
    small_records, _ = _classify_with_labels(table, "small")
    members = [
        rec for rec in small_records
        if large_labels[rec.canonical.code] == target
    ]
    return Table(
        "small-split-3",
        ("canonical", "size"),
        tuple((_canon_cell(rec.canonical, flat), rec.size) for rec in members),
    )


def bounds_table() -> Table:
    return Table(
        "lower-bounds",
        ("n", "small group", "large group"),
        tuple((n,) + lower_bounds(n) for n in range(3, 7)),
    )


def build_table(kind: str, fmt: str = "md", flat: bool = False) -> Table:
    """Assemble one table kind (see TABLE_KINDS)."""
    if kind.startswith("strata-"):
        try:
            _, n_text, tag = kind.split("-")
            n = int(n_text)
            semiring = Semiring.from_tag(tag)
        except ValueError:
            raise ValueError(f"unknown table kind {kind!r}") from None
        if n not in (3, 4):
            raise ValueError(f"unknown table kind {kind!r}")
        return distribution_table(stratify(Shape(n), semiring), fmt)
    if kind in ("table1", "table3"):
        n = 3 if kind == "table1" else 4
        records = classify(stratify(Shape(n), Semiring.GF2), "large")
        return Table(
            kind,
            ("orbit", "rank", "size", "canonical"),
            tuple(
                (i + 1, rec.rank, rec.size, _canon_cell(rec.canonical, flat))
                for i, rec in enumerate(records)
            ),
        )
    if kind in ("table2", "table4", "table5"):
        n, semiring = {
            "table2": (3, Semiring.BOOLEAN),
            "table4": (4, Semiring.BOOLEAN),
            "table5": (4, Semiring.NONNEG),
        }[kind]
        return partition_table(stratify(Shape(n), semiring), kind, flat)
    if kind in ("split-3", "split-4"):
        n = int(kind[-1])
        return split_table(orbit_split(stratify(Shape(n), Semiring.GF2)), n)
    if kind == "small-split-3":
        return rank2_small_split(flat)
    if kind == "lower-bounds":
        return bounds_table()
    raise ValueError(f"unknown table kind {kind!r}")


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _md_cell(cell: Cell) -> str:
    return str(cell).replace("|", "\\|")


def _to_markdown(table: Table) -> str:
    lines = [
        "| " + " | ".join(table.columns) + " |",
        "| " + " | ".join("---" for _ in table.columns) + " |",
    ]
    for row in table.rows:
        lines.append("| " + " | ".join(_md_cell(c) for c in row) + " |")
    return "\n".join(lines) + "\n"


def _to_csv(table: Table) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(table.columns)
    writer.writerows(table.rows)
    return buf.getvalue()


def _to_json(table: Table) -> str:
    return json.dumps(
        {"name": table.name, "columns": list(table.columns),
         "rows": [list(row) for row in table.rows]},
        ensure_ascii=False,
        indent=2,
    ) + "\n"


_RENDERERS = {"md": _to_markdown, "csv": _to_csv, "json": _to_json}


def render_table(table: Table, fmt: str) -> str:
    if fmt not in _RENDERERS:
        raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
    return _RENDERERS[fmt](table)


def emit_table(kind: str, fmt: str = "md", flat: bool = False) -> str:
    """Render one table kind; output is byte-identical across runs."""
    return render_table(build_table(kind, fmt, flat), fmt)


def emit_all_tables(fmt: str = "md", flat: bool = False) -> str:
    """Every table kind in fixed order, as one document."""
    if fmt == "json":
        payload = [
            json.loads(emit_table(kind, "json", flat)) for kind in TABLE_KINDS
        ]
        return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
    sections = []
    for kind in TABLE_KINDS:
        body = emit_table(kind, fmt, flat)
        if fmt == "md":
            sections.append(f"## {kind}\n\n{body}")
        else:
            sections.append(f"{kind}\r\n{body}")
    return "\n".join(sections)


# ---------------------------------------------------------------------------
# verification against the reference dataset
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def mismatches(self) -> tuple[Check, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "ok  " if c.passed else "FAIL"
            line = f"{status} {c.name}"
            if not c.passed and c.detail:
                line += f": {c.detail}"
            out.append(line)
        out.append(
            f"verification: {len(self.checks)} checks, "
            f"{len(self.mismatches)} mismatches"
        )
        return out


def _compare(name: str, computed, reference) -> Check:
    if computed == reference:
        return Check(name, True)
    detail = f"computed {computed!r} != expected {reference!r}"
    if isinstance(computed, tuple) and isinstance(reference, tuple):
        for i, (c, e) in enumerate(zip(computed, reference)):
            if c != e:
                detail = (
                    f"first difference at row {i}: "
                    f"computed {c!r} != expected {e!r}"
                )
                break
        else:
            detail = f"row count {len(computed)} != {len(reference)}"
    return Check(name, False, detail)


def _scope_dimensions(scope: str) -> tuple[int, ...]:
    if scope == "all":
        return (3, 4)
    if scope in ("3", "4"):
        return (int(scope),)
    raise ValueError(f"scope must be '3', '4' or 'all', got {scope!r}")


def verify_all(
    scope: str = "all", data: expected.ReferenceData = expected.DEFAULT
) -> VerifyReport:
    """Recompute every classification in scope and compare with the dataset."""
    checks = []
    for n in _scope_dimensions(scope):
        shape = Shape(n)
        tables = {s: stratify(shape, s) for s in Semiring}
        for s in Semiring:
            checks.append(
                _compare(
                    f"stratum sizes n={n} {s.value}",
                    tables[s].stratum_sizes,
                    data.stratum_sizes[(n, s.value)],
                )
            )
        if n == 3:
            checks.append(
                _compare(
                    "boolean and integer strata identical n=3",
                    tables[Semiring.BOOLEAN].strata
                    == tables[Semiring.NONNEG].strata,
                    data.boolean_equals_nonneg_at_3,
                )
            )
        gf2 = tables[Semiring.GF2]
        checks.append(
            _compare(
                f"large-group orbits n={n}",
                tuple(
                    (r.rank, r.size, r.canonical.text())
                    for r in classify(gf2, "large")
                ),
                data.large_orbits[n],
            )
        )
        checks.append(
            _compare(
                f"small-group orbit count n={n}",
                len(classify(gf2, "small")),
                data.small_orbit_counts[n],
            )
        )
        checks.append(
            _compare(
                f"orbit splitting n={n}",
                tuple((s.index, s.parts) for s in orbit_split(gf2)),
                data.orbit_splits[n],
            )
        )
        if n == 3:
            checks.append(
                _compare(
                    "rank-2 small-group split n=3",
                    rank2_small_split(flat=True).rows,
                    data.rank2_small_split_3,
                )
            )
        partition_keys = [(n, "bool")] if n == 3 else [(n, "bool"), (n, "nat")]
        for key in partition_keys:
            checks.append(
                _compare(
                    f"partition rows n={key[0]} {key[1]}",
                    tuple(
                        (row.rank, row.ones, row.count, row.representative.text())
                        for row in partition_by_ones(
                            tables[Semiring.from_tag(key[1])]
                        )
                    ),
                    data.partitions[key],
                )
            )
    checks.append(
        _compare(
            "lower bounds n=3..6",
            {n: lower_bounds(n) for n in range(3, 7)},
            data.lower_bounds,
        )
    )
    return VerifyReport(tuple(checks))

"""Character-degree tables supplied as data, and the checks that run on them.

A table is one named group with a multiset of character degrees (1 must be
present; lists may be partial supports for large groups), an optional exact
order, optional outer-automorphism-group order, an optional asserted pair of
degrees (alpha, beta) whose extendibility is taken on faith from the data
source, and an optional Fitting-subgroup index.

The on-disk format is TSV, one group per line:

    name <TAB> order <TAB> degrees <TAB> out <TAB> alpha,beta <TAB> fitting

with '#' comment lines, empty optional fields, comma-separated degrees, and
all integers in plain decimal.  A JSON mirror uses the same field names.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

__all__ = [
    "DegreeTable",
    "TableError",
    "parse_table",
    "parse_tables",
    "serialize_table",
    "serialize_tables",
    "table_to_json",
    "table_from_json",
    "load_dir",
    "rat",
    "check_extendible_pair",
    "PairCheck",
    "check_exponent_bound",
]


class TableError(ValueError):
    """Parse or validation failure, with a line number when available."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


@dataclass(frozen=True)
class DegreeTable:
    name: str
    degrees: tuple[int, ...]  # sorted ascending, duplicates preserved
    order: int | None = None
    out_order: int | None = None
    extendible_pair: tuple[int, int] | None = None  # (alpha, beta)
    fitting_index: int | None = None

    def __post_init__(self) -> None:
        if not self.degrees:
            raise TableError(f"{self.name}: empty degree list")
        if any(d < 1 for d in self.degrees):
            raise TableError(f"{self.name}: degrees must be positive")
        if 1 not in self.degrees:
            raise TableError(f"{self.name}: degree 1 missing")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees)))
        if self.extendible_pair is not None:
            a, b = self.extendible_pair
            if a not in self.degrees or b not in self.degrees:
                raise TableError(
                    f"{self.name}: asserted pair ({a},{b}) not among the degrees"
                )


def _parse_int(text: str, what: str, line: int | None) -> int:
    try:
        return int(text)
    except ValueError:
        raise TableError(f"bad {what} {text!r}", line) from None


def parse_table(text: str, line_number: int | None = None) -> DegreeTable:
    """Parse a single TSV line into a DegreeTable."""
    cols = text.rstrip("\n").split("\t")
    if len(cols) < 3:
        raise TableError("expected at least name, order, degrees columns", line_number)
    cols += [""] * (6 - len(cols))
    name, order_s, degrees_s, out_s, pair_s, fit_s = cols[:6]
    name = name.strip()
    if not name:
        raise TableError("empty group name", line_number)
    degrees_s = degrees_s.strip()
    if not degrees_s:
        raise TableError("empty degrees field", line_number)
    degrees = tuple(
        _parse_int(d.strip(), "degree", line_number) for d in degrees_s.split(",")
    )
    order = _parse_int(order_s.strip(), "order", line_number) if order_s.strip() else None
    out = _parse_int(out_s.strip(), "out order", line_number) if out_s.strip() else None
    pair = None
    if pair_s.strip():
        bits = pair_s.split(",")
        if len(bits) != 2:
            raise TableError(f"bad pair {pair_s!r}", line_number)
        pair = (
            _parse_int(bits[0].strip(), "alpha", line_number),
            _parse_int(bits[1].strip(), "beta", line_number),
        )
    fitting = _parse_int(fit_s.strip(), "fitting index", line_number) if fit_s.strip() else None
    try:
        return DegreeTable(name, degrees, order, out, pair, fitting)
    except TableError as exc:
        if exc.line is None and line_number is not None:
            raise TableError(str(exc), line_number) from None
        raise


def parse_tables(text: str) -> list[DegreeTable]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(parse_table(raw, line_number=i))
    return out


def serialize_table(table: DegreeTable) -> str:
    cols = [
        table.name,
        "" if table.order is None else str(table.order),
        ",".join(str(d) for d in table.degrees),
        "" if table.out_order is None else str(table.out_order),
        "" if table.extendible_pair is None else f"{table.extendible_pair[0]},{table.extendible_pair[1]}",
        "" if table.fitting_index is None else str(table.fitting_index),
    ]
    return "\t".join(cols)


def serialize_tables(tables) -> str:
    return "\n".join(serialize_table(t) for t in tables) + "\n"


def table_to_json(table: DegreeTable) -> str:
    doc = {
        "name": table.name,
        "order": None if table.order is None else str(table.order),
        "degrees": [str(d) for d in table.degrees],
        "out_order": table.out_order,
        "extendible_pair": None
        if table.extendible_pair is None
        else [str(table.extendible_pair[0]), str(table.extendible_pair[1])],
        "fitting_index": None if table.fitting_index is None else str(table.fitting_index),
    }
    return json.dumps(doc)


def table_from_json(text: str) -> DegreeTable:
    doc = json.loads(text)
    pair = doc.get("extendible_pair")
    return DegreeTable(
        name=doc["name"],
        degrees=tuple(int(d) for d in doc["degrees"]),
        order=None if doc.get("order") is None else int(doc["order"]),
        out_order=doc.get("out_order"),
        extendible_pair=None if pair is None else (int(pair[0]), int(pair[1])),
        fitting_index=None
        if doc.get("fitting_index") is None
        else int(doc["fitting_index"]),
    )


def load_dir(path: str | Path) -> list[DegreeTable]:
    """All tables from the *.tsv files of a data directory, in filename
    order; raises FileNotFoundError when the directory does not exist."""
    p = Path(path)
    if not p.is_dir():
        raise FileNotFoundError(f"data directory {p} not found")
    tables = []
    for f in sorted(p.glob("*.tsv")):
        tables.extend(parse_tables(f.read_text()))
    return tables


def rat(table: DegreeTable) -> Fraction:
    """max degree / min nonlinear degree; 1 when every degree equals 1."""
    nonlinear = [d for d in table.degrees if d > 1]
    if not nonlinear:
        return Fraction(1)
    return Fraction(max(nonlinear), min(nonlinear))


@dataclass(frozen=True)
class PairCheck:
    name: str
    status: str  # "checked" or "unchecked"
    passed: bool | None
    alpha: int | None
    beta: int | None
    order: int | None
    extendibility: str = "asserted by data"

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "passed": self.passed,
            "alpha": None if self.alpha is None else str(self.alpha),
            "beta": None if self.beta is None else str(self.beta),
            "order": None if self.order is None else str(self.order),
            "extendibility": self.extendibility,
        }


def check_extendible_pair(table: DegreeTable) -> PairCheck:
    """Certify alpha**14 > beta**14 * |G| for the asserted pair (strict).

    Tables without an order or a pair come back "unchecked" rather than
    failed.  A pair whose beta is 1 is rejected: the inequality concerns two
    nonlinear degrees.
    """
    if table.order is None or table.extendible_pair is None:
        return PairCheck(table.name, "unchecked", None, None, None, table.order)
    alpha, beta = table.extendible_pair
    if beta < 2 or alpha < 2:
        raise TableError(f"{table.name}: pair degrees must be nonlinear (>= 2)")
    passed = alpha ** 14 > beta ** 14 * table.order
    return PairCheck(table.name, "checked", passed, alpha, beta, table.order)


def check_exponent_bound(x: int, y: int, num: int, den: int) -> bool:
    """Exact verdict on x <= y**(num/den), i.e. x**den <= y**num."""
    if den < 1:
        raise ValueError("check_exponent_bound requires den >= 1")
    if x < 0 or y < 0 or num < 0:
        raise ValueError("check_exponent_bound requires nonnegative arguments")
    return x ** den <= y ** num

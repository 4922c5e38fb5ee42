"""
Known good examples - the bundled table and its re-verification

Each row is recomputed from x alone: y nearest to x^{3/2}, k = x^3 - y^2,
and r = sqrt(x)/|k| rendered to two decimals.
"""

from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Dict, FrozenSet, List, Optional, Sequence

from .arith.exact import HallPoint, hall_k, ratio_decimal
from .exceptions import StorageError
from .logging_config import get_logger

logger = get_logger(__name__)

TABLE_RESOURCE = "known_hits.tsv"
R_TOLERANCE_HUNDREDTHS = 1


@dataclass(frozen=True)
class KnownHitRow:
    """
    One table row

    Attributes:
        index: Row number 1-44
        x: The x value
        r_printed: Printed ratio, two decimals
        b: Denominator of the cell that finds it, if listed
        c2: 2C of that cell, if listed
        tags: Provenance and family markers
    """

    index: int
    x: int
    r_printed: str
    b: Optional[int] = None
    c2: Optional[int] = None
    tags: FrozenSet[str] = field(default_factory=frozenset)

    @property
    def has_cell(self) -> bool:
        return self.b is not None and self.c2 is not None


def _optional_int(value: str) -> Optional[int]:
    return None if value in ("", "-") else int(value)


def parse_known_table(text: str) -> List[KnownHitRow]:
    rows = []
    for line in text.splitlines():
        if not line.strip() or line.startswith("#") or line.startswith("index"):
            continue
        index, x, r, b, c2, tags = line.split("\t")
        rows.append(
            KnownHitRow(
                index=int(index),
                x=int(x),
                r_printed=r,
                b=_optional_int(b),
                c2=_optional_int(c2),
                tags=frozenset(tag for tag in tags.split(",") if tag and tag != "-"),
            )
        )
    return rows


def load_known_table(path: Optional[Path] = None) -> List[KnownHitRow]:
    """The bundled table, or a file in the same layout"""
    try:
        if path is not None:
            text = Path(path).read_text(encoding="utf-8")
        else:
            text = resources.files("hallsearch").joinpath("data", TABLE_RESOURCE).read_text(encoding="utf-8")
    except OSError as e:
        raise StorageError(f"Cannot read known table: {e}", context={"path": str(path)}) from e
    return parse_known_table(text)


def _hundredths(decimal: str) -> int:
    whole, _, frac = decimal.partition(".")
    return int(whole) * 100 + int((frac + "00")[:2])


@dataclass
class RowCheck:
    """Recomputed values for one row"""

    row: KnownHitRow
    point: HallPoint
    r_computed: str
    within_bound: bool
    r_matches: bool

    @property
    def passed(self) -> bool:
        return self.within_bound and self.r_matches

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            "index": self.row.index,
            "x": self.row.x,
            "k": self.point.k,
            "r_printed": self.row.r_printed,
            "r_computed": self.r_computed,
            "passed": self.passed,
        }


@dataclass
class TableReport:
    """Outcome of verify_table"""

    checks: List[RowCheck] = field(default_factory=list)

    @property
    def total(self) -> int:
        return len(self.checks)

    @property
    def failed(self) -> List[RowCheck]:
        return [check for check in self.checks if not check.passed]

    @property
    def ok(self) -> bool:
        return not self.failed


def check_row(row: KnownHitRow) -> RowCheck:
    point = hall_k(row.x)
    r_computed = ratio_decimal(point.x, point.k, 2)
    return RowCheck(
        row=row,
        point=point,
        r_computed=r_computed,
        within_bound=point.k != 0 and point.k * point.k <= point.x,
        r_matches=abs(_hundredths(r_computed) - _hundredths(row.r_printed)) <= R_TOLERANCE_HUNDREDTHS,
    )


def verify_table(rows: Optional[Sequence[KnownHitRow]] = None) -> TableReport:
    """
    Recompute every row

    Args:
        rows: Rows to check; the bundled table when None

    Returns:
        TableReport listing each row's pass/fail
    """
    rows = load_known_table() if rows is None else rows
    report = TableReport(checks=[check_row(row) for row in rows])
    for check in report.failed:
        logger.warning("table.row_mismatch", **{key: str(value) for key, value in check.to_dict().items()})
    return report

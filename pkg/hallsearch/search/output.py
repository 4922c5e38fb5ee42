"""
Hit files - TSV with a header line, or JSON lines

Both formats carry x, y, k, r, b, C2, a, source with every integer in full
decimal. Cells that do not apply (b, C2, a outside search hits) are "-" in
TSV and null in JSON.
"""

import json
import os
from pathlib import Path
from typing import IO, Iterable, List, Optional, Union

from ..exceptions import OutputWriteError, StorageError
from ..models import Hit, OutputFormat

COLUMNS = ("x", "y", "k", "r", "b", "C2", "a", "source")
TSV_HEADER = "\t".join(COLUMNS)


def format_hit(hit: Hit, fmt: Union[OutputFormat, str] = OutputFormat.TSV) -> str:
    """One output line, without the newline"""
    record = hit.to_dict()
    if OutputFormat(fmt) == OutputFormat.JSONL:
        return json.dumps(record)
    return "\t".join("-" if record[column] is None else str(record[column]) for column in COLUMNS)


def format_hits(hits: Iterable[Hit], fmt: Union[OutputFormat, str] = OutputFormat.TSV) -> str:
    """A complete document, header included for TSV"""
    lines = [format_hit(hit, fmt) for hit in hits]
    if OutputFormat(fmt) == OutputFormat.TSV:
        lines.insert(0, TSV_HEADER)
    return "\n".join(lines) + "\n"


class HitWriter:
    """
    Append-only hit file

    The header is written only into an empty file, so reopening for a
    resumed run continues the same document.
    """

    def __init__(
        self,
        path: Path,
        fmt: Union[OutputFormat, str] = OutputFormat.TSV,
    ):
        self.path = Path(path)
        self.fmt = OutputFormat(fmt)
        self.written = 0
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            self._handle: IO[str] = open(self.path, "a", encoding="utf-8")
            if self.fmt == OutputFormat.TSV and self._handle.tell() == 0:
                self._handle.write(TSV_HEADER + "\n")
        except OSError as e:
            raise OutputWriteError(
                f"Cannot open hit file: {e}",
                context={"path": str(self.path)},
            ) from e

    def write(self, hit: Hit) -> None:
        try:
            self._handle.write(format_hit(hit, self.fmt) + "\n")
        except OSError as e:
            raise OutputWriteError(f"Hit write failed: {e}", context={"path": str(self.path)}) from e
        self.written += 1

    def sync(self) -> None:
        """Flush buffered lines to disk"""
        try:
            self._handle.flush()
            os.fsync(self._handle.fileno())
        except OSError as e:
            raise OutputWriteError(f"Hit sync failed: {e}", context={"path": str(self.path)}) from e

    def close(self) -> None:
        if not self._handle.closed:
            self.sync()
            self._handle.close()

    def __enter__(self) -> "HitWriter":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        self.close()


def parse_hits(text: str) -> List[Hit]:
    """Parse a TSV or JSON-lines document; the format is detected per line"""
    hits: List[Hit] = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line == TSV_HEADER:
            continue
        try:
            if line.startswith("{"):
                hits.append(Hit.from_dict(json.loads(line)))
            else:
                hits.append(Hit.from_dict(dict(zip(COLUMNS, line.split("\t")))))
        except (KeyError, ValueError) as e:
            raise StorageError(
                f"Malformed hit line: {e}",
                context={"line": line_number},
            ) from e
    return hits


def read_hits(path: Union[Path, str]) -> List[Hit]:
    """All hits in a file; a missing file has none"""
    path = Path(path)
    if not path.exists():
        return []
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise StorageError(f"Cannot read hit file: {e}", context={"path": str(path)}) from e
    return parse_hits(text)


def read_hit_keys(path: Optional[Path]) -> List[int]:
    """x values already present in a hit file"""
    if path is None:
        return []
    return [hit.x for hit in read_hits(path)]

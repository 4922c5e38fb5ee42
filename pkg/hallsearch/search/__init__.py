"""
Search Layer - sharded sweep with deduplicated output and resumable progress

- runner: chunking, shards, single-writer commit loop
- checkpoint: atomic JSON progress document
- dedup: first-writer-wins store keyed by x
- output: TSV / JSON-lines hit files
"""

from .checkpoint import Checkpoint, load_checkpoint, save_checkpoint
from .dedup import DedupStats, DedupStore, dedup_key
from .output import COLUMNS, TSV_HEADER, HitWriter, format_hit, format_hits, parse_hits, read_hits
from .runner import (
    ChunkResult,
    SearchResult,
    SearchRunner,
    chunk_bounds,
    chunk_count,
    process_chunk,
    run,
)

__all__ = [
    "Checkpoint",
    "load_checkpoint",
    "save_checkpoint",
    "DedupStats",
    "DedupStore",
    "dedup_key",
    "COLUMNS",
    "TSV_HEADER",
    "HitWriter",
    "format_hit",
    "format_hits",
    "parse_hits",
    "read_hits",
    "ChunkResult",
    "SearchResult",
    "SearchRunner",
    "chunk_bounds",
    "chunk_count",
    "process_chunk",
    "run",
]

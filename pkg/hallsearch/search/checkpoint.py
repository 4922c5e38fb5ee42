"""
Checkpoint - progress of a search run, persisted as one JSON document

Written by atomic replace after every completed chunk, so a crash leaves
either the previous or the new checkpoint on disk, never a partial one.
"""

import json
import os
import tempfile
from datetime import datetime, timezone
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, ValidationError

from ..exceptions import CheckpointCorruptError, StorageError


class Checkpoint(BaseModel):
    """
    Attributes:
        fingerprint: SearchConfig fingerprint the progress belongs to
        shards: Shard count of the run
        completed: Highest b of the last completed chunk, per shard
        seen: x values already written (the dedup store)
    """

    fingerprint: str
    shards: int = Field(ge=1)
    completed: Dict[int, int] = Field(default_factory=dict)
    chunks_done: int = 0
    cells_processed: int = 0
    roots: int = 0
    lifts_failed: int = 0
    candidates_built: int = 0
    hits_emitted: int = 0
    duplicates: int = 0
    near_misses: int = 0
    seen: List[int] = Field(default_factory=list)
    updated_at: Optional[str] = None

    def advance(self, shard: int, b_hi: int) -> None:
        """Mark the chunk ending at b_hi done; progress never moves backwards"""
        self.completed[shard] = max(self.completed.get(shard, b_hi), b_hi)
        self.chunks_done += 1

    def shard_done_through(self, shard: int, default: int) -> int:
        return self.completed.get(shard, default)

    def summary(self) -> Dict[str, int]:
        return self.model_dump(exclude={"fingerprint", "completed", "seen", "updated_at"})


def save_checkpoint(path: Path, checkpoint: Checkpoint) -> None:
    """Write the checkpoint through a temporary file and os.replace"""
    path = Path(path)
    checkpoint.updated_at = datetime.now(timezone.utc).isoformat()
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with tempfile.NamedTemporaryFile(
            "w", dir=path.parent, prefix=f".{path.name}.", suffix=".tmp", delete=False, encoding="utf-8"
        ) as handle:
            json.dump(checkpoint.model_dump(mode="python"), handle, indent=2)
            handle.flush()
            os.fsync(handle.fileno())
            temporary = handle.name
        os.replace(temporary, path)
    except OSError as e:
        raise StorageError(f"Checkpoint write failed: {e}", context={"path": str(path)}) from e


def load_checkpoint(path: Path) -> Optional[Checkpoint]:
    """The stored checkpoint, or None when the file does not exist"""
    path = Path(path)
    if not path.exists():
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
        return Checkpoint.model_validate(data)
    except (json.JSONDecodeError, ValidationError) as e:
        raise CheckpointCorruptError(
            f"Checkpoint is not readable: {e}",
            context={"path": str(path)},
        ) from e
    except OSError as e:
        raise StorageError(f"Checkpoint read failed: {e}", context={"path": str(path)}) from e

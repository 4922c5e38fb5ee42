"""
Search Runner - the sweep over b and C2

Work is cut into contiguous b-chunks. Chunk c belongs to shard c mod shards
and each shard works through its chunks in order, one at a time, so the
highest completed b per shard describes its progress exactly. Workers only
compute; this process is the single writer of the hit file, the dedup store
and the checkpoint.

Commit order for a finished chunk:
1. new hits appended to the output and synced
2. checkpoint advanced and atomically replaced

The hit file is only ever appended to. An existing file is re-read into the
dedup store before any chunk runs, so a repeated chunk (after a crash between
the two steps, or a new run pointed at an old file) adds no duplicate rows.
"""

import time
import uuid
from concurrent.futures import FIRST_COMPLETED, Future, ProcessPoolExecutor, wait
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from ..arith.modular import factorize
from ..config import SearchConfig
from ..exceptions import FingerprintMismatchError
from ..logging_config import PerformanceLogger, bind_run_context, clear_run_context, get_logger
from ..models import Hit
from ..pipeline.candidates import BuilderStats, CandidateBuilder, admissible_cells
from ..pipeline.evaluator import evaluate_window
from .checkpoint import Checkpoint, load_checkpoint, save_checkpoint
from .dedup import DedupStats, DedupStore
from .output import HitWriter, read_hit_keys

logger = get_logger(__name__)


@dataclass
class ChunkResult:
    """What a worker returns for one b-chunk"""

    index: int
    b_lo: int
    b_hi: int
    hits: List[Hit] = field(default_factory=list)
    near_misses: List[Hit] = field(default_factory=list)
    stats: BuilderStats = field(default_factory=BuilderStats)
    elapsed_ms: float = 0.0


def chunk_bounds(config: SearchConfig, index: int) -> Tuple[int, int]:
    """Inclusive b range of chunk `index`"""
    lo = config.b_lo + index * config.chunk_size
    return lo, min(config.b_hi, lo + config.chunk_size - 1)


def chunk_count(config: SearchConfig) -> int:
    return -(-(config.b_hi - config.b_lo + 1) // config.chunk_size)


def process_chunk(config: SearchConfig, index: int) -> ChunkResult:
    """Build and evaluate every candidate of one chunk (runs in a worker)"""
    start = time.perf_counter()
    b_lo, b_hi = chunk_bounds(config, index)
    result = ChunkResult(index=index, b_lo=b_lo, b_hi=b_hi)
    builder = CandidateBuilder(config.n_window)

    for b in range(b_lo, b_hi + 1):
        b2_factors = factorize(b).power(2)
        for cell in admissible_cells(b, config.u, config.c2_cap_override):
            for candidate in builder.build(cell, b2_factors):
                evaluation = evaluate_window(
                    candidate,
                    i_window=config.i_window,
                    theta=config.theta,
                    log_theta=config.log_theta,
                    min_x=config.min_hit_x,
                )
                result.hits.extend(evaluation.hits)
                result.near_misses.extend(evaluation.near_misses)

    result.stats = builder.stats
    result.elapsed_ms = round((time.perf_counter() - start) * 1000, 2)
    return result


@dataclass
class SearchResult:
    """
    Outcome of one invocation

    Attributes:
        hits: Hits written by this invocation, in commit order
        checkpoint: Final checkpoint state
        finished: False when stopped early by max_chunks
        dedup: Unique and duplicate counts, keys already on disk included
    """

    hits: List[Hit]
    checkpoint: Checkpoint
    finished: bool
    dedup: DedupStats = field(default_factory=DedupStats)


class SearchRunner:
    """
    Runs (or resumes) one search

    Example:
        >>> config = SearchConfig(b_lo=26, b_hi=26, c2_cap_override=1)
        >>> result = SearchRunner(config).run()
        >>> [hit.x for hit in result.hits]
        [5234, 421351]
    """

    def __init__(self, config: SearchConfig):
        self.config = config
        self.fingerprint = config.fingerprint()
        self.total_chunks = chunk_count(config)
        self.checkpoint, resumed = self._open_checkpoint()
        self.dedup = DedupStore(self.checkpoint.seen)
        self.dedup.merge(read_hit_keys(config.output_path))
        self.writer: Optional[HitWriter] = None

        if resumed:
            logger.info(
                "search.resume",
                chunks_done=self.checkpoint.chunks_done,
                completed=self.checkpoint.completed,
                known_hits=len(self.dedup),
            )

        if config.output_path is not None:
            self.writer = HitWriter(config.output_path, config.output_format)

    def _open_checkpoint(self) -> Tuple[Checkpoint, bool]:
        path = self.config.checkpoint_path
        stored = load_checkpoint(path) if path is not None else None
        if stored is None:
            return Checkpoint(fingerprint=self.fingerprint, shards=self.config.shards), False
        if stored.fingerprint != self.fingerprint:
            raise FingerprintMismatchError(
                "Checkpoint belongs to a different search configuration",
                context={
                    "path": str(path),
                    "stored": stored.fingerprint,
                    "current": self.fingerprint,
                },
            )
        return stored, True

    def pending_chunks(self, shard: int) -> Iterator[int]:
        """Chunk indices of a shard not yet committed, in order"""
        done_through = self.checkpoint.shard_done_through(shard, self.config.b_lo - 1)
        for index in range(shard, self.total_chunks, self.config.shards):
            if chunk_bounds(self.config, index)[1] > done_through:
                yield index

    def _commit(self, shard: int, result: ChunkResult, emitted: List[Hit]) -> None:
        new_hits = []
        for hit in result.hits:
            if self.dedup.add(hit):
                new_hits.append(hit)
                logger.info("search.hit", x=str(hit.x), k=hit.k, r=hit.r_display, b=hit.b, C2=hit.c2)
            else:
                self.checkpoint.duplicates += 1
        for miss in result.near_misses:
            logger.info("search.near_miss", x=str(miss.x), k=miss.k, r=miss.r_display, b=miss.b, C2=miss.c2)

        if self.writer is not None:
            for hit in new_hits:
                self.writer.write(hit)
            self.writer.sync()
        emitted.extend(new_hits)

        checkpoint = self.checkpoint
        checkpoint.advance(shard, result.b_hi)
        checkpoint.cells_processed += result.stats.cells
        checkpoint.roots += result.stats.roots
        checkpoint.lifts_failed += result.stats.lifts_failed
        checkpoint.candidates_built += result.stats.candidates
        checkpoint.near_misses += len(result.near_misses)
        checkpoint.hits_emitted = len(self.dedup)
        checkpoint.seen = self.dedup.keys()
        if self.config.checkpoint_path is not None:
            save_checkpoint(self.config.checkpoint_path, checkpoint)

        logger.info(
            "search.chunk_done",
            shard=shard,
            b_lo=result.b_lo,
            b_hi=result.b_hi,
            duration_ms=result.elapsed_ms,
            cells=result.stats.cells,
            hits=len(new_hits),
        )

    def run(self, max_chunks: Optional[int] = None) -> SearchResult:
        """
        Process every pending chunk

        Args:
            max_chunks: Stop after committing this many chunks (simulated
                interruption; the checkpoint stays resumable)

        Returns:
            SearchResult
        """
        bind_run_context(run_id=uuid.uuid4().hex[:12], fingerprint=self.fingerprint)
        emitted: List[Hit] = []
        try:
            with PerformanceLogger(
                logger, "search.run", b_lo=self.config.b_lo, b_hi=self.config.b_hi, shards=self.config.shards
            ):
                if self.config.shards == 1:
                    finished = self._run_inline(emitted, max_chunks)
                else:
                    finished = self._run_pool(emitted, max_chunks)
            logger.info("search.dedup", **self.dedup.stats.to_dict())
        finally:
            if self.writer is not None:
                self.writer.close()
            clear_run_context()
        return SearchResult(
            hits=emitted, checkpoint=self.checkpoint, finished=finished, dedup=self.dedup.stats
        )

    def is_complete(self) -> bool:
        return all(next(self.pending_chunks(shard), None) is None for shard in range(self.config.shards))

    def _run_inline(self, emitted: List[Hit], max_chunks: Optional[int]) -> bool:
        for committed, index in enumerate(self.pending_chunks(0)):
            if max_chunks is not None and committed >= max_chunks:
                break
            self._commit(0, process_chunk(self.config, index), emitted)
        return self.is_complete()

    def _run_pool(self, emitted: List[Hit], max_chunks: Optional[int]) -> bool:
        shards = self.config.shards
        queues = {shard: self.pending_chunks(shard) for shard in range(shards)}
        committed = 0

        with ProcessPoolExecutor(max_workers=shards) as pool:
            running: Dict[Future, int] = {}

            def submit_next(shard: int) -> None:
                index = next(queues[shard], None)
                if index is not None:
                    running[pool.submit(process_chunk, self.config, index)] = shard

            for shard in range(shards):
                submit_next(shard)

            while running:
                if max_chunks is not None and committed >= max_chunks:
                    # In-flight chunks are dropped and redone on resume
                    for future in running:
                        future.cancel()
                    break
                done, _ = wait(running, return_when=FIRST_COMPLETED)
                for future in sorted(done, key=lambda f: running[f]):
                    shard = running.pop(future)
                    self._commit(shard, future.result(), emitted)
                    committed += 1
                    submit_next(shard)
        return self.is_complete()


def run(config: SearchConfig, max_chunks: Optional[int] = None) -> SearchResult:
    """Run or resume the search described by config"""
    return SearchRunner(config).run(max_chunks)

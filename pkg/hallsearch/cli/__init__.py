"""
CLI commands for hallsearch
"""

from decimal import Decimal, InvalidOperation
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import typer
from pydantic import ValidationError
from rich import box
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from ..arith.exact import hall_k, ratio_decimal
from ..arith.modular import balanced_residue, factorize
from ..config import PRESETS, SearchConfig, apply_preset, get_settings, parse_rational
from ..exceptions import ExitCode, HallSearchException, TableMismatchError
from ..families import fermat_pell_scan, hall_family_range, scale_member
from ..known import verify_table
from ..logging_config import get_logger, setup_logging
from ..models import FamilyKind, Hit
from ..oracle import brute_scan, write_samples_csv
from ..pipeline import (
    CandidateBuilder,
    SearchCell,
    lift_k0,
    select_n,
    solve_a0,
)
from ..search import SearchRunner, format_hits, read_hits
from ..stats import build_report, ratio_samples_from_hits

app = typer.Typer(
    name="hallsearch",
    help="Search for integers x with x^3 - y^2 small against sqrt(x)",
    add_completion=False,
)

console = Console()
logger = get_logger(__name__)


def parse_int(text: str) -> int:
    """Integer from "1000", "10_000" or "6e8"""
    try:
        value = Decimal(text.replace("_", ""))
    except InvalidOperation as e:
        raise typer.BadParameter(f"not an integer: {text}") from e
    if value != value.to_integral_value():
        raise typer.BadParameter(f"not an integer: {text}")
    return int(value)


def parse_range(text: str) -> Tuple[int, int]:
    """LO:HI into a pair of integers"""
    lo, sep, hi = text.partition(":")
    if not sep:
        raise typer.BadParameter(f"expected LO:HI, got {text}")
    return parse_int(lo), parse_int(hi)


def parse_fraction(text: Optional[str]) -> Optional[Fraction]:
    if text is None:
        return None
    try:
        return parse_rational(text)
    except ValueError as e:
        raise typer.BadParameter(str(e)) from e


def _fail(error: Exception) -> typer.Exit:
    """Report an error and turn it into the matching exit code"""
    if isinstance(error, HallSearchException):
        console.print(f"[red]❌ {error.error_code.value}:[/red] {error.message}")
        for key, value in error.context.items():
            console.print(f"[dim]   {key} = {value}[/dim]")
        logger.error("cli.failed", **error.to_dict())
        return typer.Exit(int(error.exit_code))
    if isinstance(error, ValidationError):
        console.print(f"[red]❌ Invalid configuration:[/red] {error}")
        return typer.Exit(int(ExitCode.BAD_CONFIG))
    if isinstance(error, OSError):
        console.print(f"[red]❌ I/O error:[/red] {error}")
        return typer.Exit(int(ExitCode.IO_FAILURE))
    console.print(f"[red]❌ Error:[/red] {error}")
    logger.exception("cli.internal_error")
    return typer.Exit(int(ExitCode.INTERNAL))


def _hits_table(title: str, hits: List[Hit]) -> Table:
    table = Table(title=title, box=box.ROUNDED)
    table.add_column("x", style="cyan", justify="right")
    table.add_column("k", style="magenta", justify="right")
    table.add_column("r", style="green", justify="right")
    table.add_column("b", justify="right")
    table.add_column("C2", justify="right")
    table.add_column("source", style="yellow")
    for hit in hits:
        table.add_row(
            str(hit.x),
            str(hit.k),
            hit.r_display,
            "-" if hit.b is None else str(hit.b),
            "-" if hit.c2 is None else str(hit.c2),
            hit.source.value,
        )
    return table


def _emit_hits(hits: List[Hit], out: Optional[Path], fmt: str, title: str) -> None:
    if out is not None:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(format_hits(hits, fmt), encoding="utf-8")
        console.print(f"[green]✓[/green] {len(hits)} hits written to {out}")
    else:
        console.print(_hits_table(title, hits))


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING, ERROR"),
    log_format: Optional[str] = typer.Option(None, "--log-format", help="text or json"),
):
    """
    Good examples of Hall's conjecture: search, oracle, families and statistics.
    """
    settings = get_settings().logging
    setup_logging(
        log_level=(log_level or settings.level).upper(),
        log_format=log_format or settings.format,
        log_dir=settings.directory,
    )


@app.command()
def search(
    b: Optional[str] = typer.Option(None, "--b", help="Denominator range LO:HI"),
    u: Optional[str] = typer.Option(None, "--u", help="C cap exponent, C <= b^u (rational)"),
    c2_max: Optional[int] = typer.Option(None, "--c2-max", help="Explicit cap on 2C"),
    theta: Optional[str] = typer.Option(None, "--theta", help="Report sqrt(x)/|k| >= THETA"),
    log_theta: Optional[str] = typer.Option(None, "--log-theta", help="Log near misses down to this ratio"),
    wn: Optional[int] = typer.Option(None, "--wn", help="Offsets around the chosen period index"),
    wi: Optional[int] = typer.Option(None, "--wi", help="Offsets around x0"),
    shards: Optional[int] = typer.Option(None, "--shards", help="Worker processes"),
    chunk_size: Optional[int] = typer.Option(None, "--chunk-size", help="b values per work unit"),
    checkpoint: Optional[Path] = typer.Option(None, "--checkpoint", help="Checkpoint file (resumes if present)"),
    out: Optional[Path] = typer.Option(None, "--out", help="Hit file (always appended; existing hits are kept)"),
    fmt: str = typer.Option("tsv", "--format", help="tsv or jsonl"),
    preset: Optional[str] = typer.Option(None, "--preset", help=f"Operating point: {', '.join(PRESETS)}"),
):
    """
    Sweep b over a range and report every good example found.

    Examples:

        # Desk-scale regression
        hallsearch search --b 2:2000 --u 1/3

        # Resumable sharded run
        hallsearch search --b 2:200000 --shards 8 --checkpoint run.ckpt --out hits.tsv
    """
    try:
        defaults = get_settings().search
        b_range = parse_range(b) if b is not None else None
        overrides: Dict[str, Any] = {
            "b_lo": b_range[0] if b_range else None,
            "b_hi": b_range[1] if b_range else None,
            "u": parse_fraction(u),
            "c2_cap_override": c2_max,
            "theta": parse_fraction(theta),
            "log_theta": parse_fraction(log_theta),
            "n_window": wn,
            "i_window": wi,
            "shards": shards,
            "chunk_size": chunk_size,
        }
        values = apply_preset(preset, overrides) if preset else {k: v for k, v in overrides.items() if v is not None}
        if "b_hi" not in values:
            raise typer.BadParameter("--b is required without --preset")
        values.setdefault("b_lo", 2)
        for key in ("shards", "chunk_size"):
            values.setdefault(key, getattr(defaults, key))

        config = SearchConfig(
            **values,
            checkpoint_path=checkpoint,
            output_path=out,
            output_format=fmt,
        )

        console.print(
            Panel(
                f"b ∈ [{config.b_lo}, {config.b_hi}]   u = {config.u}   "
                f"θ = {config.theta}   Wn = {config.n_window}   Wi = {config.i_window}   "
                f"shards = {config.shards}\nfingerprint {config.fingerprint()}",
                title="🔎 Search",
                box=box.ROUNDED,
            )
        )
        result = SearchRunner(config).run()
    except typer.BadParameter:
        raise
    except Exception as e:
        raise _fail(e)

    stats = Table(title="📊 Run statistics", box=box.ROUNDED)
    stats.add_column("Metric", style="cyan")
    stats.add_column("Value", style="magenta", justify="right")
    for key, value in result.checkpoint.summary().items():
        stats.add_row(key, f"{value:,}")
    console.print(stats)

    if out is None:
        console.print(_hits_table("Hits", result.hits))
    else:
        console.print(f"[green]✓[/green] {len(result.hits)} new hits appended to {out}")


@app.command()
def brute(
    x: str = typer.Option(..., "--x", help="Range LO:HI of x"),
    n_max: Optional[int] = typer.Option(None, "--n-max", help="Sample |k| <= N*sqrt(x)"),
    workers: int = typer.Option(1, "--workers", help="Worker processes (0 = auto)"),
    force: bool = typer.Option(False, "--force", help="Allow ranges beyond the large-scan guard"),
    samples: Optional[Path] = typer.Option(None, "--samples", help="Write samples as CSV"),
    out: Optional[Path] = typer.Option(None, "--out", help="Hit file"),
    fmt: str = typer.Option("tsv", "--format", help="tsv or jsonl"),
):
    """
    Evaluate k(x) for every x in a range (the completeness oracle).

    Examples:

        hallsearch brute --x 2:1e6 --n-max 1
    """
    try:
        x_lo, x_hi = parse_range(x)
        result = brute_scan(
            x_lo,
            x_hi,
            n_max=n_max or get_settings().oracle.n_max,
            workers=workers or None,
            force=force,
        )
        if samples is not None:
            written = write_samples_csv(samples, result.samples)
            console.print(f"[green]✓[/green] {written} samples written to {samples}")
        _emit_hits(result.hits, out, fmt, f"Hits in [{x_lo}, {x_hi}]")
    except typer.BadParameter:
        raise
    except Exception as e:
        raise _fail(e)

    console.print(
        f"[cyan]Evaluated:[/cyan] {result.evaluated:,}   "
        f"[cyan]Samples:[/cyan] {len(result.samples):,}   [cyan]Hits:[/cyan] {len(result.hits)}"
    )


@app.command("verify-table")
def verify_table_command():
    """
    Recompute every row of the bundled table of known good examples.
    """
    try:
        report = verify_table()
        table = Table(title="📋 Known good examples", box=box.ROUNDED)
        table.add_column("#", justify="right")
        table.add_column("x", style="cyan", justify="right")
        table.add_column("k", style="magenta", justify="right")
        table.add_column("r printed", justify="right")
        table.add_column("r computed", justify="right")
        table.add_column("", no_wrap=True)
        for check in report.checks:
            table.add_row(
                str(check.row.index),
                str(check.row.x),
                str(check.point.k),
                check.row.r_printed,
                check.r_computed,
                "[green]✓[/green]" if check.passed else "[red]✗[/red]",
            )
        console.print(table)
        console.print(f"{report.total - len(report.failed)}/{report.total} rows checked")
        if not report.ok:
            raise TableMismatchError(
                "table rows failed re-verification",
                context={"rows": ",".join(str(check.row.index) for check in report.failed)},
            )
    except Exception as e:
        raise _fail(e)


@app.command()
def families(
    kind: FamilyKind = typer.Option(FamilyKind.HALL, "--kind", help="hall, fermat_pell or scaled"),
    t: str = typer.Option("-9:9", "--t", help="Parameter range LO:HI (scale factors for scaled)"),
    x: Optional[str] = typer.Option(None, "--x", help="Base x for scaled"),
    theta: str = typer.Option("1", "--theta", help="Fermat-Pell ratio threshold"),
    workers: int = typer.Option(1, "--workers", help="Worker processes for Fermat-Pell (0 = auto)"),
    out: Optional[Path] = typer.Option(None, "--out", help="Hit file"),
    fmt: str = typer.Option("tsv", "--format", help="tsv or jsonl"),
):
    """
    Members of the parametric families, in the hit schema.

    Examples:

        hallsearch families --kind hall --t -9:9
        hallsearch families --kind fermat_pell --t -20:20
        hallsearch families --kind scaled --x 5853886516781223 --t 2:2
    """
    try:
        t_lo, t_hi = parse_range(t)
        if kind == FamilyKind.HALL:
            members = hall_family_range(range(t_lo, t_hi + 1))
        elif kind == FamilyKind.FERMAT_PELL:
            members = fermat_pell_scan(t_lo, t_hi, parse_fraction(theta), workers or None)
        else:
            if x is None:
                raise typer.BadParameter("--x is required for scaled")
            base = hall_k(parse_int(x))
            members = [scale_member(base, factor) for factor in range(max(t_lo, 1), t_hi + 1)]
        _emit_hits([member.to_hit() for member in members], out, fmt, f"{kind.value} family")
    except typer.BadParameter:
        raise
    except Exception as e:
        raise _fail(e)


@app.command()
def stats(
    x: Optional[str] = typer.Option(None, "--x", help="Oracle range LO:HI to sample"),
    hits: Optional[Path] = typer.Option(None, "--hits", help="Existing hit file to analyse instead"),
    n: int = typer.Option(16, "--n", help="Ratio bound n for |k| <= n*sqrt(x)"),
    workers: int = typer.Option(1, "--workers", help="Oracle worker processes (0 = auto)"),
    base: Optional[float] = typer.Option(None, "--log-base", help="Count-model log base (default e)"),
):
    """
    Distribution of |k|/sqrt(x): mean, Kolmogorov-Smirnov test, count model, histogram.

    Examples:

        hallsearch stats --x 2:1e6 --n 16
        hallsearch stats --hits wide.tsv --n 16
    """
    try:
        if (x is None) == (hits is None):
            raise typer.BadParameter("give exactly one of --x or --hits")
        if x is not None:
            x_lo, x_hi = parse_range(x)
            samples = brute_scan(x_lo, x_hi, n_max=n, workers=workers or None).samples
        else:
            loaded = read_hits(hits)
            samples = ratio_samples_from_hits(loaded, n)
            x_hi = max((hit.x for hit in loaded), default=2)
        report = build_report(samples, n, x_hi, base or get_settings().oracle.log_base or None)
    except typer.BadParameter:
        raise
    except Exception as e:
        raise _fail(e)

    summary = Table(title="📈 Ratio distribution", box=box.ROUNDED)
    summary.add_column("Metric", style="cyan")
    summary.add_column("Value", style="magenta", justify="right")
    summary.add_row("N", f"{report.n:,}")
    summary.add_row("mean |k|/√x", f"{report.mean:.3f}")
    summary.add_row("KS D", f"{report.ks.d:.4f}")
    summary.add_row("KS p", f"{report.ks.p_value:.4f}")
    summary.add_row("model 0.80·n·log X", f"{report.model_count:.1f}")
    summary.add_row("observed / model", f"{report.model_ratio:.2f}")
    console.print(summary)

    bins = Table(title="Histogram (unit bins)", box=box.SIMPLE)
    bins.add_column("bin", justify="right")
    bins.add_column("count", justify="right")
    for lower, count in enumerate(report.histogram):
        bins.add_row(f"[{lower}, {lower + 1})", str(count))
    console.print(bins)


@app.command()
def candidate(
    b: int = typer.Argument(..., help="Denominator b"),
    c2: int = typer.Argument(..., help="2C"),
    wn: int = typer.Option(0, "--wn", help="Offsets around the chosen period index"),
    wi: int = typer.Option(0, "--wi", help="Offsets around x0"),
):
    """
    Print the full pipeline trace for one (b, 2C) cell.

    Examples:

        hallsearch candidate 26 1
    """
    try:
        cell = SearchCell(b, c2)
        b2_factors = factorize(b).power(2)
        roots = solve_a0(cell, b2_factors)
        console.print(f"[cyan]Cell:[/cyan] b = {b}, C2 = {c2}")
        console.print(f"[cyan]Cube roots of C2 mod b²:[/cyan] {roots or 'none'}")

        trace = Table(title="Pipeline trace", box=box.ROUNDED)
        for column in ("a0", "α", "d", "k0", "n*"):
            trace.add_column(column, justify="right")
        for a0 in roots:
            alpha = balanced_residue(a0 * a0, b * b)
            lifted = lift_k0(b, a0, alpha, c2)
            if lifted is None:
                trace.add_row(str(a0), str(alpha), "-", "no lift", "-")
                continue
            d, k0 = lifted
            trace.add_row(str(a0), str(alpha), str(d), str(k0), str(select_n(b, c2, alpha, a0, k0, d)))
        console.print(trace)

        candidates = Table(title="Candidates", box=box.ROUNDED)
        for column in ("a0", "n", "a", "x0", "i", "k", "r"):
            candidates.add_column(column, justify="right")
        for cand in CandidateBuilder(wn).build(cell, b2_factors):
            for i in range(-wi, wi + 1):
                x = cand.x0 + i
                if x < 2:
                    continue
                point = hall_k(x)
                if point.k == 0:
                    ratio = "-"
                else:
                    ratio = ratio_decimal(point.x, point.k, 2)
                    if point.k * point.k <= point.x:
                        ratio += " ★"
                candidates.add_row(
                    str(cand.a0), str(cand.n), str(cand.a), str(cand.x0), str(i), str(point.k), ratio
                )
        console.print(candidates)
    except Exception as e:
        raise _fail(e)


@app.command()
def version():
    """Display version information"""
    from .. import __version__

    console.print(f"[bold cyan]hallsearch[/bold cyan] v{__version__}")


if __name__ == "__main__":
    app()

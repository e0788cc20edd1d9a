"""gamma3 - command-line entry point."""

import functools
import sys
from collections.abc import Callable
from pathlib import Path
from typing import Any, Optional, TypeVar

import click

from app.core.config import settings
from app.core.errors import EXIT_CHECK_FAILURE, EXIT_RESOURCE, EXIT_USAGE, Gamma3Error
from app.core.logging import get_logger, setup_logging
from app.graphs.formats import emit_dot, emit_graph6
from app.graphs.graph import Graph
from app.graphs.invariants import full_report
from app.graphs.isomorphism import are_isomorphic
from app.graphs.staircase import staircase_graph
from app.graphs.tokens import token_graph
from app.harness.checks import THEOREMS
from app.harness.conjecture import conjecture_report
from app.harness.figures import export_figures
from app.harness.orchestrator import run_suite_sync
from app.harness.specs import parse_graph_spec
from app.models.schemas import IsomorphismReport, SuiteConfig, VerificationReport

logger = get_logger(__name__)

F = TypeVar("F", bound=Callable[..., Any])


def _handle_errors(command: F) -> F:
    """Log package errors and exit with their code."""

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except Gamma3Error as exc:
            logger.error("command_failed", command=command.__name__, error=str(exc))
            click.echo(f"error: {exc}", err=True)
            sys.exit(exc.exit_code)
        except OSError as exc:
            logger.error("file_error", command=command.__name__, error=str(exc))
            click.echo(f"file error: {exc}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper  # type: ignore[return-value]


def _render(graph: Graph, fmt: str, name: str) -> str:
    return emit_dot(graph, name) if fmt == "dot" else emit_graph6(graph) + "\n"


@click.group()
@click.option("--log-level", default=None, help="Override LOG_LEVEL.")
def cli(log_level: Optional[str]) -> None:
    """Exact k-token graphs, cubical staircases and their theorem suite."""
    setup_logging(log_level)


@cli.group()
def gen() -> None:
    """Generate a graph and print it."""


@gen.command("token")
@click.option("--graph", "spec", required=True, help="Base graph spec, e.g. path:6.")
@click.option("--k", type=int, required=True, help="Number of tokens.")
@click.option("--format", "fmt", type=click.Choice(["g6", "dot"]), default="g6")
@_handle_errors
def gen_token(spec: str, k: int, fmt: str) -> None:
    built = token_graph(parse_graph_spec(spec), k)
    click.echo(_render(built.graph, fmt, f"T{k}({spec})"), nl=False)


@gen.command("staircase")
@click.option("--n", type=int, required=True)
@click.option("--format", "fmt", type=click.Choice(["g6", "dot"]), default="g6")
@_handle_errors
def gen_staircase(n: int, fmt: str) -> None:
    click.echo(_render(staircase_graph(n).graph, fmt, f"CS_{n}"), nl=False)


@cli.command()
@click.option("--in", "spec", required=True, help="graph6 string or file, or a graph spec.")
@_handle_errors
def invariants(spec: str) -> None:
    """Print the exact invariant report as JSON."""
    click.echo(full_report(parse_graph_spec(spec)).model_dump_json(indent=2))


@cli.command()
@click.option("--g", "g_spec", required=True, help="First graph.")
@click.option("--h", "h_spec", required=True, help="Second graph.")
@_handle_errors
def iso(g_spec: str, h_spec: str) -> None:
    """Search for an isomorphism and print the witness as JSON; exit 1 if there is none."""
    g, h = parse_graph_spec(g_spec), parse_graph_spec(h_spec)
    witness = are_isomorphic(g, h)
    report = IsomorphismReport(
        g_vertices=g.n,
        h_vertices=h.n,
        isomorphic=witness is not None,
        witness=witness.to_pairs() if witness is not None else None,
    )
    click.echo(report.model_dump_json(indent=2))
    if witness is None:
        sys.exit(EXIT_CHECK_FAILURE)


def _exit_code(report: VerificationReport) -> int:
    if report.verdict:
        return 0
    if len(report.resource_failures) == len(report.failures):
        return EXIT_RESOURCE
    return EXIT_CHECK_FAILURE


@cli.command()
@click.option(
    "--suite", "profile", type=click.Choice(["theorems", "conjecture"]), default="theorems"
)
@click.option("--n-min", type=int, default=None)
@click.option("--n-max", type=int, default=None)
@click.option("--seed", type=int, default=None)
@click.option("--json", "json_path", type=click.Path(dir_okay=False), default=None)
@click.option("--timings", is_flag=True, help="Keep runtimes and metrics in the JSON file.")
@click.option("--corrupt", is_flag=True, help="Add a known-bad instance (self-test).")
@_handle_errors
def verify(
    profile: str,
    n_min: Optional[int],
    n_max: Optional[int],
    seed: Optional[int],
    json_path: Optional[str],
    timings: bool,
    corrupt: bool,
) -> None:
    """Run the replication suite; exit 1 on a failed check, 3 on a budget overrun."""
    try:
        cfg = SuiteConfig.from_settings(
            profile=profile,
            n_min=n_min,
            n_max=n_max,
            seed=seed,
            json_path=json_path,
            corrupt=corrupt,
        )
    except ValueError as exc:
        raise click.UsageError(str(exc)) from None
    report = run_suite_sync(cfg)

    for record in report.records:
        status = "ok" if record.verdict else ("FAIL" if record.gating else "note")
        click.echo(f"{status:4} {record.theorem:32} {record.instance}")
        if status == "FAIL":
            click.echo(f"     claim: {THEOREMS.get(record.theorem, record.theorem)}")
            if record.error:
                click.echo(f"     {record.error}")
    click.echo(f"verdict: {'PASS' if report.verdict else 'FAIL'} ({len(report.failures)} failed)")

    if json_path:
        text = report.model_dump_json(indent=2) if timings else report.deterministic_json()
        Path(json_path).write_text(text + "\n", encoding="utf-8")
        logger.info("report_written", path=json_path)
    sys.exit(_exit_code(report))


@cli.command()
@click.option("--n-min", type=int, default=4)
@click.option("--n-max", type=int, default=10)
@_handle_errors
def conjecture(n_min: int, n_max: int) -> None:
    """Print the matching-number conjecture table as JSON."""
    click.echo(conjecture_report(n_min, n_max).model_dump_json(indent=2))


@cli.command("export-figures")
@click.option("--out", "outdir", type=click.Path(file_okay=False), default=None)
@_handle_errors
def export_figures_command(outdir: Optional[str]) -> None:
    """Write DOT and graph6 files for the drawn graphs."""
    for path in export_figures(Path(outdir or settings.output_dir)):
        click.echo(str(path))


if __name__ == "__main__":
    cli()

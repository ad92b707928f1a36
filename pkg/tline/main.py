"""
tline Command-Line Entry Point

    tline simulate --config <path> [--method analytic|bounce|fdtd|all] [--out <dir>] [--emit csv,svg,report]
    tline preset <name> [--out <dir>]
    tline compare --config <path>
    tline bounce --config <path>

Any config key can also be given as a flag, e.g. `--source.zg_ohm 75`.
Exit codes: 0 success, 1 validation error, 2 unsupported formula, 3 I/O error.
"""

import logging
from dataclasses import replace
from datetime import datetime
from pathlib import Path
from typing import Callable, Dict, List, Optional

import typer
from rich.console import Console
from rich.table import Table

from .config import TLINE_CONFIG
from .errors import TlineError, ValidationError
from .model import Trace
from .oracle import bounce_events
from .output import emit_csv, emit_svg
from .presets import PRESETS, run_preset
from .report import ComparisonReport, compare, render_report, write_report
from .runconfig import RunConfig, apply_overrides, parse_config
from .runner import run_methods_timed
from .utils.constraints import ALL_METHODS, METHODS, MethodConstraints
from .utils.logger import RunLogger, scenario_summary

# Get logger for this module
logger = logging.getLogger(__name__)

app = typer.Typer(
    name="tline",
    help="Transient response of lossless transmission lines",
    add_completion=False,
    no_args_is_help=True,
)

EXTRA_ARGS = {"allow_extra_args": True, "ignore_unknown_options": True}


def setup_logging(log_dir: Optional[str] = None, level: Optional[str] = None) -> Optional[Path]:
    """
    Configure console + timestamped file logging once per process.

    Later calls only apply the requested level and return None.
    """
    log_level = getattr(logging, (level or TLINE_CONFIG["log_level"]).upper(), logging.INFO)
    root = logging.getLogger()
    if root.handlers:
        if level is not None:
            root.setLevel(log_level)
        return None

    logs_dir = Path(log_dir or TLINE_CONFIG["log_dir"])
    logs_dir.mkdir(parents=True, exist_ok=True)
    log_filename = logs_dir / f"tline_{datetime.now().strftime('%Y%m%d_%H%M%S')}.log"

    logging.basicConfig(
        level=log_level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S',
        handlers=[
            logging.StreamHandler(),  # Console output
            logging.FileHandler(log_filename),  # File output
        ],
    )

    # Suppress verbose plotting loggers
    logging.getLogger('matplotlib').setLevel(logging.WARNING)
    logging.getLogger('PIL').setLevel(logging.WARNING)
    return log_filename


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="Root log level (default TLINE_LOG_LEVEL)"),
):
    """Simulate, compare and plot transmission-line transients."""
    log_filename = setup_logging(level=log_level)
    if log_filename is not None:
        logger.debug(f"Logging to: {log_filename.absolute()}")


# ==================== Helpers ====================

def parse_extra_flags(args: List[str]) -> Dict[str, str]:
    """
    Read `--dotted.key value` and `--dotted.key=value` pairs left over by typer.

    Raises:
        ValidationError: a token is not a flag, or a flag has no value
    """
    overrides: Dict[str, str] = {}
    tokens = list(args)
    while tokens:
        token = tokens.pop(0)
        if not token.startswith("--"):
            raise ValidationError(token, "unexpected argument (config flags look like --line.zc_ohm 50)")
        key = token[2:]
        if "=" in key:
            key, value = key.split("=", 1)
        elif tokens and not tokens[0].startswith("--"):
            value = tokens.pop(0)
        else:
            raise ValidationError(key, "flag needs a value")
        overrides[key] = value
    return overrides


def load_config(path: Path, overrides: Optional[Dict[str, str]] = None) -> RunConfig:
    """Read a config file and layer command-line overrides over it."""
    text = Path(path).read_text(encoding="utf-8")
    if overrides:
        text = apply_overrides(text, overrides)
    return parse_config(text)


def _guarded(action: Callable[[], None]) -> None:
    """Run a command body, mapping failures to exit codes."""
    try:
        action()
    except TlineError as e:
        logger.error(f"❌ {type(e).__name__}: {e}")
        raise typer.Exit(code=e.exit_code)
    except OSError as e:
        logger.error(f"❌ I/O error: {e}", exc_info=True)
        raise typer.Exit(code=3)


def execute(config: RunConfig, console: Console) -> Dict[str, Path]:
    """
    Run every configured method and write the requested artifacts.

    Returns:
        Artifact kind to written path
    """
    out_dir = Path(config.output_path)
    run_logger = RunLogger(out_dir / "run.log")
    run_logger.log_scenario(config)
    constraints = MethodConstraints(config.scenario)
    for method in METHODS:
        applicable, reason = constraints.validate(method)
        if method not in config.methods and not applicable:
            run_logger.log_skipped(method, reason)

    try:
        traces, timings = run_methods_timed(config)
    except TlineError as e:
        run_logger.log_error(f"{type(e).__name__}: {e}")
        raise
    for method, trace in traces.items():
        run_logger.log_method(method, len(trace), timings[method])

    artifacts: Dict[str, Path] = {}
    if "csv" in config.emit:
        artifacts["csv"] = emit_csv(traces, out_dir / "traces.csv")
    if "svg" in config.emit:
        artifacts["svg"] = emit_svg(traces, out_dir / "traces.svg")
    if "report" in config.emit:
        report = _comparison(traces, config)
        if report is not None:
            render_report(report, console)
            run_logger.log_comparison(report.to_text())
        artifacts["report"] = write_report(out_dir / "report.txt", scenario_summary(config), report)

    for kind, path in artifacts.items():
        run_logger.log_artifact(kind, path)
        console.print(f"[green]✓[/green] {kind}: {path}")
    return artifacts


def _comparison(traces: Dict[str, Trace], config: RunConfig) -> Optional[ComparisonReport]:
    if len(traces) < 2:
        return None
    return compare(traces, config.scenario)


# ==================== Commands ====================

@app.command(context_settings=EXTRA_ARGS)
def simulate(
    ctx: typer.Context,
    config: Path = typer.Option(..., "--config", help="Run-configuration file"),
    method: Optional[str] = typer.Option(None, "--method", help="analytic, bounce, fdtd, all, or a comma list"),
    out: Optional[str] = typer.Option(None, "--out", help="Output directory"),
    emit: Optional[str] = typer.Option(None, "--emit", help="Comma list of csv, svg, report"),
):
    """Simulate a configured scenario and write its artifacts."""
    console = Console()

    def body():
        overrides = parse_extra_flags(ctx.args)
        if method is not None:
            overrides["run.methods"] = method
        if out is not None:
            overrides["run.out"] = out
        if emit is not None:
            overrides["run.emit"] = emit
        run_config = load_config(config, overrides)
        logger.info(f"🚀 Simulating {config} with {', '.join(run_config.methods)}")
        execute(run_config, console)

    _guarded(body)


@app.command()
def preset(
    name: str = typer.Argument(..., help=f"One of {', '.join(PRESETS)}"),
    out: Optional[str] = typer.Option(None, "--out", help="Output directory"),
):
    """Run one of the reference figure scenarios end to end."""
    console = Console()

    def body():
        run_config = run_preset(name)
        if out is not None:
            run_config = replace(run_config, output_path=out)
        logger.info(f"🚀 Preset {name}: {', '.join(run_config.methods)}")
        execute(run_config, console)

    _guarded(body)


@app.command("compare", context_settings=EXTRA_ARGS)
def compare_command(
    ctx: typer.Context,
    config: Path = typer.Option(..., "--config", help="Run-configuration file"),
):
    """Compare every applicable method on a configured scenario."""
    console = Console()

    def body():
        run_config = load_config(config, parse_extra_flags(ctx.args))
        if len(run_config.methods) < 2:
            methods = MethodConstraints(run_config.scenario).resolve([ALL_METHODS])
            run_config = replace(run_config, methods=tuple(methods))
        traces, _ = run_methods_timed(run_config)
        if len(traces) < 2:
            raise ValidationError("run.methods", "comparison needs at least two applicable methods")
        report = compare(traces, run_config.scenario)
        render_report(report, console)
        path = write_report(Path(run_config.output_path) / "report.txt", scenario_summary(run_config), report)
        console.print(f"[green]✓[/green] report: {path}")

    _guarded(body)


@app.command(context_settings=EXTRA_ARGS)
def bounce(
    ctx: typer.Context,
    config: Path = typer.Option(..., "--config", help="Run-configuration file"),
):
    """Print the reflection lattice of a resistive scenario."""
    console = Console()

    def body():
        run_config = load_config(config, parse_extra_flags(ctx.args))
        events = bounce_events(run_config.scenario, run_config.grid.t_end)
        table = Table(title=f"Bounce lattice up to {run_config.grid.t_end:.4g} s")
        table.add_column("#", justify="right")
        table.add_column("Delay after onset (ns)", justify="right")
        table.add_column("Direction")
        table.add_column("Generation", justify="right")
        table.add_column("Amplitude (V)", justify="right")
        for index, event in enumerate(events):
            table.add_row(
                str(index),
                f"{event.arrival_time * 1e9:.4f}",
                event.direction.value,
                str(event.generation),
                f"{event.amplitude:+.6g}",
            )
        console.print(table)
        console.print(f"{len(events)} events")

    _guarded(body)


if __name__ == "__main__":
    app()

# Author: PB
# Date: 2026-10-18
# License: (c) HRDAG, 2026, GPL-2 or newer
#
# ---
# src/grover_maxfind/cli.py

"""
grover-maxfind Command Line Interface

Thin wrapper around the harness, analysis and statevector modules.
Exit codes: 0 ok, 1 a Monte Carlo verdict came out negative,
2 input error, 3 invariant violation.
"""

import dataclasses
import json
import logging
import sys
import tomllib
from pathlib import Path

import click
import numpy as np

from grover_maxfind import analysis, harness, statevector
from grover_maxfind import config as config_module
from grover_maxfind.errors import DomainError, InputError, InvariantViolation, TableFormatError
from grover_maxfind.oracle import Table, load_table
from grover_maxfind.types import RC_CHECK_FAILED, RC_INPUT_ERROR, RC_INVARIANT_VIOLATION, RC_OK


DEFAULT_ANALYZE_NS = (16, 64, 256, 1024, 4096)
DEFAULT_VERIFY_NS = (4, 8, 16, 32)
DEFAULT_SCALING_NS = tuple(2 ** p for p in range(6, 13))


def handle_errors(func):
    """Decorator mapping package errors to exit codes."""
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InvariantViolation as e:
            click.echo(f"Error: invariant violation: {e}", err=True)
            sys.exit(RC_INVARIANT_VIOLATION)
        except TableFormatError as e:
            click.echo(f"Error: table format: {e}", err=True)
            sys.exit(RC_INPUT_ERROR)
        except (InputError, DomainError) as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(RC_INPUT_ERROR)
        except FileNotFoundError as e:
            click.echo(f"Error: {e}", err=True)
            sys.exit(RC_INPUT_ERROR)
        except tomllib.TOMLDecodeError as e:
            click.echo(f"Error: invalid config file: {e}", err=True)
            sys.exit(RC_INPUT_ERROR)
    wrapper.__name__ = func.__name__
    wrapper.__doc__ = func.__doc__
    return wrapper


def _load_config(ctx) -> config_module.ExperimentConfig:
    """Load config from the Click context's --config path."""
    obj = ctx.ensure_object(dict)
    return config_module.load_config(config_path=obj.get("config"))


def _emit(text: str, out: Path) -> None:
    if out:
        out.write_text(text, encoding="utf-8")
        click.echo(f"written to: {out}", err=True)
    else:
        click.echo(text, nl=False)


def _resolve_table(n: int, seed: int, table_path: Path, minimum: bool) -> Table:
    if table_path:
        return load_table(table_path, maximize=not minimum)
    rng = np.random.default_rng(harness.derive_seed(seed, 0))
    return Table.permutation(n, rng, maximize=not minimum)


@click.group()
@click.option(
    "--config",
    type=click.Path(exists=True, path_type=Path),
    default=None,
    help="Path to config.toml (default: ~/.config/grover-maxfind/config.toml)",
)
@click.option("--verbose", "-v", is_flag=True, help="Debug logging to stderr")
@click.pass_context
def cli(ctx, config, verbose):
    """Quantum maximum finding: simulation and query-complexity analysis."""
    ctx.ensure_object(dict)
    ctx.obj["config"] = config
    if verbose:
        logging.basicConfig(
            level=logging.DEBUG,
            format="%(asctime)s %(name)s %(levelname)s: %(message)s",
        )


@cli.command()
@click.option("--n", "n_items", type=int, help="Number of table items")
@click.option("--trials", type=int, help="Independent seeded trials")
@click.option("--seed", "master_seed", type=int, help="Master seed")
@click.option("--mode", type=click.Choice(config_module.MODES), help="Termination mode")
@click.option("--k", "k_repetitions", type=int, help="Repetitions per trial (best of k)")
@click.option("--base", "base_preset", type=click.Choice(config_module.BASE_PRESETS), help="E(N,1) preset for predictions")
@click.option("--gen", type=click.Choice(["permutation"]), help="Generate a random permutation table per trial")
@click.option("--table", "table_path", type=click.Path(exists=True, path_type=Path), help="Table file, one number per line")
@click.option("--budget", "total_query_budget", type=int, help="Total Grover-query budget (default ceil(13.6 sqrt(N)))")
@click.option("--jobs", type=int, help="Parallel worker processes")
@click.option("--minimum", is_flag=True, help="Find the minimum instead of the maximum")
@click.option("--format", "output_format", type=click.Choice(config_module.OUTPUT_FORMATS), help="Output format")
@click.option("--out", type=click.Path(path_type=Path), help="Write output to this file")
@click.pass_context
@handle_errors
def simulate(ctx, n_items, trials, master_seed, mode, k_repetitions, base_preset, gen,
             table_path, total_query_budget, jobs, minimum, output_format, out) -> None:
    """
    Run a seeded ensemble of maximum-finding trials.

    Writes one CSV row per trial, or the full report (records, aggregates,
    predictions, verdicts) as JSON.

    Examples:

        gmf simulate --n 1024 --trials 2000 --mode oracle-terminated

        gmf simulate --n 256 --trials 1000 --k 3 --format json --out boosted.json

        gmf simulate --table values.txt --trials 100 --minimum
    """
    cfg = _load_config(ctx)
    overrides = {
        "n_items": n_items,
        "trials": trials,
        "master_seed": master_seed,
        "mode": mode,
        "k_repetitions": k_repetitions,
        "base_preset": base_preset,
        "total_query_budget": total_query_budget,
        "jobs": jobs,
        "output_format": output_format,
        "maximize": False if minimum else None,
    }
    cfg = dataclasses.replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    if table_path:
        cfg = dataclasses.replace(cfg, table_source="file", table_path=table_path)
    elif gen:
        cfg = dataclasses.replace(cfg, table_source="permutation", table_path=None)

    report = harness.run_experiment(cfg)
    _emit(harness.write_report(report, cfg.output_format), out)

    agg = report.aggregates
    click.echo(
        f"n={report.config['n_items']} trials={agg['trials']} "
        f"mean queries={agg['mean_total_queries']:.2f} success={agg['success_rate']:.4f} "
        f"(bound 6.8 sqrt(N) = {report.predictions['bound_6_8']:.2f})",
        err=True,
    )
    for name, ok in report.verdicts.items():
        click.echo(f"  {'✓' if ok else '✗'} {name}", err=True)
    sys.exit(report.exit_code)


@cli.command()
@click.option("--n", "ns", type=int, multiple=True, help="Table size N (repeatable)")
@click.option("--base", "presets", type=click.Choice(config_module.BASE_PRESETS), multiple=True,
              help="E(N,1) preset (repeatable, default both)")
@click.option("--check", is_flag=True, help="Report algebra, bound and headline checks as JSON")
@click.option("--out", type=click.Path(path_type=Path), help="Write output to this file")
@handle_errors
def analyze(ns, presets, check, out) -> None:
    """
    Evaluate E(N, t) exactly, telescoped and bounded for t = 1..N-1.

    Emits CSV with columns N,t,base_preset,E_exact,E_telescoped,E_bound.
    With --check, emits one JSON object per (N, preset) instead and exits
    3 if a fact that must hold does not.

    Examples:

        gmf analyze --n 1024 --base pi4 --out e1024.csv

        gmf analyze --check
    """
    ns = ns or DEFAULT_ANALYZE_NS
    presets = presets or config_module.BASE_PRESETS

    if check:
        checks = [analysis.check_analysis(n, p) for n in ns for p in presets]
        problems = [msg for c in checks for msg in analysis.check_violations(c)]
        _emit(json.dumps([c.to_dict() for c in checks], indent=2) + "\n", out)
        for c in checks:
            click.echo(
                f"N={c.n:<6} base={c.base_preset:<4} headline={c.headline_coefficient:.4f} sqrt(N) "
                f"gap={c.max_telescoping_gap:.3g} exact<=bound={c.exact_le_bound}",
                err=True,
            )
        for msg in problems:
            click.echo(f"  ✗ {msg}", err=True)
        sys.exit(RC_INVARIANT_VIOLATION if problems else RC_OK)

    parts = []
    for i, (n, p) in enumerate((n, p) for n in ns for p in presets):
        table = analysis.recurrence_table(analysis.RecurrenceParams.preset(n, p), preset=p)
        parts.append(table.to_csv(header=(i == 0)))
    _emit("".join(parts), out)


@cli.command()
@click.option("--n", "ns", type=int, multiple=True, help="Register dimension N, a power of two (repeatable)")
@click.option("--max-j", type=int, default=10, show_default=True, help="Largest Grover iteration count")
@click.option("--out", type=click.Path(path_type=Path), help="Write JSON report to this file")
@handle_errors
def verify(ns, max_j, out) -> None:
    """
    Check simulated Grover success probability against sin^2((2j+1) theta).

    Sweeps every t in 1..N/2 and j in 0..max-j. Exits 3 if any case is off
    by more than 1e-9.
    """
    report = statevector.verify_closed_form(ns or DEFAULT_VERIFY_NS, max_iterations=max_j)
    _emit(report.to_json() + "\n", out)
    click.echo(f"{report.cases} cases, max |error| {report.max_abs_error:.3g}", err=True)
    sys.exit(report.exit_code)


@cli.command()
@click.option("--n", "n_items", type=int, default=100, show_default=True, help="Items in a generated table")
@click.option("--seed", type=int, default=0, show_default=True, help="Seed for a generated table")
@click.option("--gen", type=click.Choice(["permutation"]), default="permutation", show_default=True)
@click.option("--table", "table_path", type=click.Path(exists=True, path_type=Path), help="Table file instead of --gen")
@click.option("--minimum", is_flag=True, help="Scan for the minimum")
@handle_errors
def baseline(n_items, seed, gen, table_path, minimum) -> None:
    """
    Classical left-to-right scan: argmax and number of comparisons.
    """
    table = _resolve_table(n_items, seed, table_path, minimum)
    index, comparisons = harness.classical_baseline(table)
    output = {
        "n": table.n_items,
        "index": index,
        "value": table[index],
        "comparisons": comparisons,
    }
    click.echo(json.dumps(output, indent=2))


@cli.command()
@click.option("--n", "n_items", type=int, required=True, help="Table size N")
@click.option("--t", "t", type=int, required=True, help="Items above the guess")
@click.option("--trials", type=int, default=2000, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@handle_errors
def search(n_items, t, trials, seed) -> None:
    """
    Ensemble of single searches with exactly t marked items.

    Compares mean Grover queries with 6 sqrt(N/t).
    """
    result = harness.search_statistics(n_items, t, trials, master_seed=seed)
    click.echo(result.to_json())
    ok = result.mean_grover_queries <= result.bound
    click.echo(
        f"mean grover queries {result.mean_grover_queries:.2f} vs 6 sqrt(N/t) = {result.bound:.2f} "
        f"{'✓' if ok else '✗'}",
        err=True,
    )
    sys.exit(RC_OK if ok else RC_CHECK_FAILED)


@cli.command()
@click.option("--n", "ns", type=int, multiple=True, help="Table size N (repeatable, default 2^6..2^12)")
@click.option("--trials", type=int, default=200, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--jobs", type=int, default=1, show_default=True)
@click.option("--out", type=click.Path(path_type=Path), help="Write JSON to this file")
@handle_errors
def scaling(ns, trials, seed, jobs, out) -> None:
    """
    Fit mean total queries (oracle-terminated) against c sqrt(N).

    Exits 1 if c > 6.8 or R^2 < 0.99.
    """
    fit, reports = harness.scaling_experiment(ns or DEFAULT_SCALING_NS, trials, master_seed=seed, jobs=jobs)
    output = fit.to_dict()
    output["aggregates"] = {str(r.config["n_items"]): r.aggregates for r in reports}
    _emit(json.dumps(output, indent=2) + "\n", out)
    ok = fit.coefficient <= analysis.BOUND_COEFFICIENT and fit.r_squared >= 0.99
    click.echo(f"c = {fit.coefficient:.3f}, R^2 = {fit.r_squared:.4f} {'✓' if ok else '✗'}", err=True)
    sys.exit(RC_OK if ok else RC_CHECK_FAILED)


@cli.command()
@click.option("--validate-only", is_flag=True, help="Only validate config, don't display it")
@click.pass_context
def config(ctx, validate_only: bool) -> None:
    """
    Display and validate the experiment configuration.
    """
    obj = ctx.ensure_object(dict)
    config_path = obj.get("config") or config_module.DEFAULT_CONFIG

    try:
        cfg = _load_config(ctx)
    except (FileNotFoundError, tomllib.TOMLDecodeError) as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(RC_INPUT_ERROR)

    errors, warnings = cfg.validate()
    if not validate_only:
        click.echo(f"Config file: {config_path}")
        click.echo(json.dumps(cfg.to_dict(), indent=2))
    for e in errors:
        click.echo(f"  ✗ {e}", err=True)
    for w in warnings:
        click.echo(f"  ⚠ {w}")
    if not errors and not warnings:
        click.echo("✓ Config is valid")
    sys.exit(RC_INPUT_ERROR if errors else RC_OK)

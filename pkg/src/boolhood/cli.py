"""Command line interface.

Exit codes: 0 success, 1 usage problems, 2 validation rejections,
3 capability refusals (requests beyond the configured size caps).
"""

import csv
import io
import json
import sys

import click

from .core import true_set_size
from .errors import (BoolhoodError, CapabilityError, DimensionMismatchError,
                     IntegrityError, ValidationError)
from .neighbors import immediate_children, immediate_parents
from .oracle import count_table, counts_to_csv
from .textio import function_payload, parse_function, render_function
from .walker import WalkDirection, random_walk, run_experiment, stats_to_csv, stats_to_json


@click.group()
def cli():
    """Explore monotone Boolean functions represented as antichain covers."""


def _echo_json(payload):
    click.echo(json.dumps(payload, indent=2))


def _neighbor_lines(results):
    for r in results:
        yield f"{r.rule.value} {r.true_set_delta:+d} {render_function(r.neighbor)}"


def _neighbors_cmd(p, fmt, text, generate, direction):
    rep, signs = parse_function(text, p)
    results = generate(rep)
    if fmt == "json":
        from .service import neighborhood_payload
        _echo_json(neighborhood_payload(rep, signs, results, direction))
    elif fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["function", "rule", "delta"])
        for r in results:
            writer.writerow([render_function(r.neighbor), r.rule.value, r.true_set_delta])
        click.echo(buf.getvalue(), nl=False)
    else:
        if not results:
            click.echo("(none)")
        for line in _neighbor_lines(results):
            click.echo(line)


_function_arg = click.argument("function")
_p_option = click.option("--p", "-p", "p", type=int, required=True,
                         help="Number of variables.")


def _format_option(*choices, default):
    return click.option("--format", "fmt", type=click.Choice(choices),
                        default=default, show_default=True)


@cli.command()
@_p_option
@_format_option("text", "json", "csv", default="text")
@_function_arg
def parents(p, fmt, function):
    """Immediate parents of FUNCTION, tagged by rule."""
    _neighbors_cmd(p, fmt, function, immediate_parents, "parent")


@cli.command()
@_p_option
@_format_option("text", "json", "csv", default="text")
@_function_arg
def children(p, fmt, function):
    """Immediate children of FUNCTION, tagged by rule."""
    _neighbors_cmd(p, fmt, function, immediate_children, "child")


@cli.command()
@_p_option
@_format_option("text", "json", default="text")
@_function_arg
def validate(p, fmt, function):
    """Parse FUNCTION and echo its canonical forms."""
    rep, signs = parse_function(function, p)
    if fmt == "json":
        _echo_json({"valid": True, "function": function_payload(rep, signs),
                    "signs": signs.to_string()})
    else:
        click.echo(f"valid: {render_function(rep)}")


@cli.command()
@_p_option
@_format_option("text", "json", default="text")
@_function_arg
def truecount(p, fmt, function):
    """Number of states FUNCTION maps to true."""
    rep, _ = parse_function(function, p)
    size = true_set_size(rep)
    if fmt == "json":
        _echo_json({"function": function_payload(rep), "trueSetSize": size})
    else:
        click.echo(str(size))


@cli.command()
@_p_option
@click.option("--dir", "direction", type=click.Choice(["up", "down"]), default="up",
              show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_format_option("text", "json", default="text")
def walk(p, direction, seed, fmt):
    """One seeded random walk from one end of the order to the other."""
    trace = random_walk(p, WalkDirection(direction), seed)
    if fmt == "json":
        from .service import trace_payload
        _echo_json(trace_payload(trace))
    else:
        click.echo(f"start {render_function(trace.start)}")
        for step in trace.steps:
            r1, r2, r3 = step.rule_counts
            chosen = step.chosen
            click.echo(f"  [{r1}/{r2}/{r3}] -> {chosen.rule.value} "
                       f"{chosen.true_set_delta:+d} {render_function(chosen.neighbor)}")
        click.echo(f"length {trace.length}")


@cli.command()
@click.option("--pmin", type=int, default=2, show_default=True)
@click.option("--pmax", type=int, default=8, show_default=True)
@click.option("--traces", type=int, default=100, show_default=True)
@click.option("--dir", "direction", type=click.Choice(["up", "down"]), default="up",
              show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@_format_option("csv", "json", default="csv")
def experiment(pmin, pmax, traces, direction, seed, fmt):
    """Seeded walk batches per dimension with per-rule statistics."""
    if pmin < 1 or pmax < pmin:
        raise click.UsageError(f"need 1 <= pmin <= pmax, got {pmin}..{pmax}")
    stats = run_experiment(range(pmin, pmax + 1), traces, WalkDirection(direction), seed)
    if fmt == "json":
        click.echo(stats_to_json(stats), nl=False)
    else:
        click.echo(stats_to_csv(stats), nl=False)


@cli.command()
@click.option("--maxp", type=int, required=True)
@click.option("--long", "long_mode", is_flag=True,
              help="Allow the slow p=6 enumeration cross-check.")
@_format_option("csv", "json", "text", default="csv")
def count(maxp, long_mode, fmt):
    """Counts of antichain covers per dimension, recurrence vs enumeration."""
    rows = count_table(maxp, long=long_mode)
    if fmt == "json":
        _echo_json({"rows": [{"p": r.p, "M": str(r.m), "N": str(r.n),
                              "enumerated": r.enumerated} for r in rows]})
    elif fmt == "text":
        for r in rows:
            enum = "-" if r.enumerated is None else str(r.enumerated)
            click.echo(f"p={r.p} M={r.m} N={r.n} enumerated={enum}")
    else:
        click.echo(counts_to_csv(rows), nl=False)


@cli.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the JSON-over-HTTP service."""
    import uvicorn

    from .service import app
    uvicorn.run(app, host=host, port=port)


def main(argv=None):
    """Run the CLI, mapping errors to documented exit codes."""
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.Abort:
        click.echo("aborted", err=True)
        return 1
    except click.ClickException as exc:
        exc.show()
        return 1
    except CapabilityError as exc:
        click.echo(f"error: {exc}", err=True)
        return 3
    except (ValidationError, DimensionMismatchError, IntegrityError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 2
    except BoolhoodError as exc:
        click.echo(f"error: {exc}", err=True)
        return 2


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

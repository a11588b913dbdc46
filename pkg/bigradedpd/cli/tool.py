#!/usr/bin/env python3
"""
The ``bigraded-pd`` command line tool.

Computes generalized persistence diagrams of bifiltration files with the sweep or the
brute-force oracle, compares the two, benchmarks the sweep and renders diagrams as SVG.
"""
import csv
import functools
import io
import logging
import sys
import time
import typing
from pathlib import Path

import click
import numpy as np
import tqdm
from joblib import Parallel, delayed

from bigradedpd.complex.bifiltration import Bifiltration
from bigradedpd.complex.generate import nested_bifiltration, random_bifiltration
from bigradedpd.complex.parser import load_bifiltration, write_bifiltration
from bigradedpd.diagram import SignedDiagram
from bigradedpd.exc import CapExceededError, FieldError, ParseError, ValidationError
from bigradedpd.matrix.field import coerce_field
from bigradedpd.oracle import brute_diagram
from bigradedpd.plot import plot_diagram
from bigradedpd.sweep.sweep import Sweep, compute_diagram

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_CAP = 3

logger = logging.getLogger("bigradedpd.cli")


# code copied from https://stackoverflow.com/a/38739634
class TqdmLoggingHandler(logging.Handler):
    """
    Writes log records through tqdm so that they do not break progress bars.
    """

    def emit(self, record):
        try:
            msg = self.format(record)
            tqdm.tqdm.write(msg, file=sys.stderr)
            self.flush()
        except (KeyboardInterrupt, SystemExit):
            raise
        except Exception:
            self.handleError(record)


def setup_logging(verbose: bool):
    handler = TqdmLoggingHandler()
    handler.setFormatter(logging.Formatter('[%(levelname)s] %(name)s -> %(message)s'))
    root = logging.getLogger("bigradedpd")
    root.handlers = [handler]
    root.setLevel(logging.DEBUG if verbose else logging.WARNING)


class RunConfig(typing.NamedTuple):
    """
    Everything one command needs, collected from the command line.
    """
    command: str
    input: typing.Optional[Path] = None
    dims: typing.Tuple[int, ...] = ()
    field: int = 2
    format: str = "text"
    seed: int = 0
    cap: int = 16
    strict: bool = False
    jobs: int = 1


def handle_errors(func):
    """
    Maps library errors onto exit codes.
    """

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (ParseError, ValidationError) as e:
            click.secho("error: {}".format(e), fg="red", err=True)
            for violation in getattr(e, "violations", ())[1:]:
                click.secho("error: {}".format(violation), fg="red", err=True)
            sys.exit(EXIT_INVALID)
        except CapExceededError as e:
            click.secho("refused: {}".format(e), fg="magenta", err=True)
            sys.exit(EXIT_CAP)

    return wrapper


def _field(ctx, param, value) -> int:
    try:
        return coerce_field(value).p
    except FieldError as e:
        raise click.BadParameter(str(e))


def common_options(func):
    func = click.option("--strict", is_flag=True,
                        help="Refuse degenerate input instead of refining it.")(func)
    func = click.option("--cap", default=16, show_default=True,
                        help="Largest grid the brute-force oracle accepts.")(func)
    func = click.option("--format", "format_", type=click.Choice(["text", "jsonl"]),
                        default="text", show_default=True)(func)
    func = click.option("--field", default=2, show_default=True, callback=_field,
                        help="Prime characteristic of the coefficient field.")(func)
    func = click.option("-d", "--dim", "dims", type=int, multiple=True,
                        help="Homology dimension to report (repeatable; default all).")(func)
    return func


def _config(command: str, path, dims, field, format_, cap, strict, seed=0, jobs=1) -> RunConfig:
    return RunConfig(command, Path(path) if path is not None else None, tuple(dims), field,
                     format_, seed, cap, strict, jobs)


def _load(cfg: RunConfig) -> Bifiltration:
    b = load_bifiltration(cfg.input)
    b.ensure_valid()
    top = b.complex.dimension
    for d in cfg.dims:
        if not 0 <= d <= top:
            raise ValidationError("Dimension {} is outside [0, {}]".format(d, top))
    return b


def _dims(cfg: RunConfig, b: Bifiltration) -> typing.List[int]:
    return list(cfg.dims) if cfg.dims else list(range(b.complex.dimension + 1))


def _emit(cfg: RunConfig, diagram: SignedDiagram, b: Bifiltration):
    if cfg.format == "jsonl":
        lines = diagram.to_json_lines(b.labels)
    else:
        lines = diagram.to_lines(b.labels)
    for line in lines:
        click.echo(line)


def sweep_diagram(cfg: RunConfig, b: Bifiltration) -> SignedDiagram:
    diagram = compute_diagram(b, cfg.field, strict=cfg.strict)
    return diagram.restricted(_dims(cfg, b))


def oracle_diagram(cfg: RunConfig, b: Bifiltration) -> SignedDiagram:
    return brute_diagram(b, _dims(cfg, b), cfg.field, cap=cfg.cap)


@click.group()
@click.option("-v", "--verbose", is_flag=True, help="Log debug output to stderr.")
def cli(verbose: bool):
    setup_logging(verbose)


@cli.command()
@common_options
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def compute(input, dims, field, format_, cap, strict):
    """
    Computes the diagram of INPUT with the sweep.
    """
    cfg = _config("compute", input, dims, field, format_, cap, strict)
    b = _load(cfg)
    _emit(cfg, sweep_diagram(cfg, b), b)


@cli.command()
@common_options
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def oracle(input, dims, field, format_, cap, strict):
    """
    Computes the diagram of INPUT by brute-force Möbius inversion.
    """
    cfg = _config("oracle", input, dims, field, format_, cap, strict)
    b = _load(cfg)
    _emit(cfg, oracle_diagram(cfg, b), b)


def _diff_one(cfg: RunConfig, corrupt: bool):
    b = _load(cfg)
    if cfg.cap is not None and b.n > cfg.cap:
        raise CapExceededError("Grid size {} exceeds the oracle cap {}".format(b.n, cfg.cap))
    mine = sweep_diagram(cfg, b)
    if corrupt:
        mine = _corrupted(mine, b)
    return mine.first_difference(oracle_diagram(cfg, b))


def _corrupted(diagram: SignedDiagram, b: Bifiltration) -> SignedDiagram:
    # test hook: perturb the first entry, or invent one
    result = diagram.restricted(diagram.dimensions)
    entry = next(iter(diagram.items()), None)
    if entry is None:
        result.add(0, b.grid.top, b.grid.top, 1)
    else:
        dim, (lower, upper), _ = entry
        result.add(dim, lower, upper, 1)
    return result


@cli.command()
@common_options
@click.option("-j", "--jobs", default=1, show_default=True, help="Worker processes.")
@click.option("--corrupt", is_flag=True, hidden=True)
@click.argument("inputs", nargs=-1, required=True,
                type=click.Path(exists=True, dir_okay=False))
@handle_errors
def diff(inputs, dims, field, format_, cap, strict, jobs, corrupt):
    """
    Compares the sweep against the oracle on every INPUT.

    Exits with 1 and reports the first differing interval if any diagram disagrees.
    """
    configs = [_config("diff", path, dims, field, format_, cap, strict, jobs=jobs)
               for path in inputs]
    results = Parallel(n_jobs=jobs)(delayed(_diff_one)(cfg, corrupt) for cfg in configs)
    status = EXIT_OK
    for cfg, difference in zip(configs, results):
        if difference is None:
            click.echo("{}: ok".format(cfg.input))
            continue
        dim, interval, mine, theirs = difference
        click.echo("{}: mismatch in dimension {} at {}: sweep {}, oracle {}".format(
            cfg.input, dim, interval, mine, theirs))
        status = EXIT_MISMATCH
    sys.exit(status)


def _bench_instance(seed: int, vertices: int, index: int, multi_critical: bool, nested: bool,
                    with_oracle: bool, cap: int, timings: bool) -> typing.Tuple[dict, str]:
    rng = np.random.default_rng([seed, vertices, index])
    if nested:
        b = nested_bifiltration(rng, vertices)
    else:
        b = random_bifiltration(rng, vertices, multi_critical=multi_critical)
    started = time.perf_counter()
    state = Sweep(b)
    diagram = state.run()
    elapsed = time.perf_counter() - started
    row = {"vertices": vertices, "instance": index, "m": b.m, "n": b.n,
           "C": diagram.support_size, "transpositions": state.rv.counters["transpositions"],
           "sweep_time": "{:.6f}".format(elapsed) if timings else "",
           "oracle_time": ""}
    if with_oracle and b.n <= cap:
        started = time.perf_counter()
        brute_diagram(b)
        if timings:
            row["oracle_time"] = "{:.6f}".format(time.perf_counter() - started)
    return row, write_bifiltration(b)


@cli.command()
@click.option("--vertices", "sizes", type=int, multiple=True, default=(4, 5, 6),
              show_default=True, help="Vertex counts of the random complexes.")
@click.option("--instances", default=5, show_default=True, help="Instances per size.")
@click.option("--seed", default=0, show_default=True)
@click.option("--multi-critical", is_flag=True, help="Allow several corners per simplex.")
@click.option("--nested", is_flag=True, help="Generate totally nested instances.")
@click.option("--oracle/--no-oracle", "with_oracle", default=False,
              help="Also time the brute-force oracle.")
@click.option("--cap", default=16, show_default=True)
@click.option("--timings/--no-timings", default=True,
              help="Leave the time columns empty for byte-identical output.")
@click.option("--emit", type=click.Path(file_okay=False), default=None,
              help="Directory to write the generated instances to.")
@click.option("-j", "--jobs", default=1, show_default=True, help="Worker processes.")
def bench(sizes, instances, seed, multi_critical, nested, with_oracle, cap, timings, emit,
          jobs):
    """
    Times the sweep on seeded random bifiltrations and prints a CSV table.
    """
    tasks = [(vertices, index) for vertices in sizes for index in range(instances)]
    results = Parallel(n_jobs=jobs)(
        delayed(_bench_instance)(seed, vertices, index, multi_critical, nested, with_oracle,
                                 cap, timings)
        for vertices, index in tqdm.tqdm(tasks, desc="Benchmarking", unit="instances",
                                         file=sys.stderr, disable=None))

    out = io.StringIO()
    fields = ["vertices", "instance", "m", "n", "C", "transpositions", "sweep_time",
              "oracle_time"]
    writer = csv.DictWriter(out, fieldnames=fields, lineterminator="\n")
    writer.writeheader()
    for row, text in results:
        writer.writerow(row)
        if emit is not None:
            directory = Path(emit)
            directory.mkdir(parents=True, exist_ok=True)
            (directory / "v{}_{:03d}.bif".format(row["vertices"], row["instance"])) \
                .write_text(text, encoding="utf-8")
    click.echo(out.getvalue(), nl=False)


@cli.command()
@common_options
@click.option("--curves", is_flag=True, help="Overlay the appearance curves of the input.")
@click.option("-o", "--output", type=click.Path(dir_okay=False), default=None,
              help="Write the SVG here instead of standard output.")
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def plot(input, dims, field, format_, cap, strict, curves, output):
    """
    Renders the diagram of INPUT in one dimension (the first --dim, default 0) as SVG.
    """
    cfg = _config("plot", input, dims, field, format_, cap, strict)
    b = _load(cfg)
    dim = cfg.dims[0] if cfg.dims else 0
    svg = plot_diagram(compute_diagram(b, cfg.field, strict=cfg.strict), dim,
                       b if curves else None)
    if output is None:
        click.echo(svg, nl=False)
    else:
        Path(output).write_text(svg, encoding="utf-8")
        logger.info("Wrote {}".format(output))


@cli.command()
@click.argument("input", type=click.Path(exists=True, dir_okay=False))
@handle_errors
def validate(input):
    """
    Checks INPUT and reports every broken invariant.
    """
    b = load_bifiltration(input)
    violations = b.validate()
    for violation in violations:
        click.secho("simplex {}: {} ({})".format(violation.simplex, violation.kind,
                                                 violation.message), fg="red")
    if violations:
        sys.exit(EXIT_INVALID)
    click.echo("valid: m={} n={} {}".format(
        b.m, b.n, "non-degenerate" if b.is_nondegenerate() else "degenerate"))


if __name__ == '__main__':
    cli()

"""Command-line interface for kout_mincut."""

import functools
from pathlib import Path

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.table import Table

from kout_mincut.application.certificate import sparse_certificate
from kout_mincut.application.contraction import amplified_contraction, dense_contraction, derive_seeds
from kout_mincut.application.experiments import (
    calibrate,
    calibrate_band,
    confirm,
    measure_component_count,
    measure_diameter_sum,
    measure_edge_budget,
    measure_preservation,
    measure_runtime_scaling,
)
from kout_mincut.application.factories import solver_factory
from kout_mincut.application.graph import GraphSpec, bundled_corpus, generate_from_spec
from kout_mincut.application.solvers import edge_connectivity, oracle_mincut
from kout_mincut.config import settings
from kout_mincut.domain.exceptions import (
    ConfigurationValidationError,
    InvariantViolationError,
    MinCutError,
    UndefinedConnectivityError,
)
from kout_mincut.domain.models import (
    EdgeReducer,
    GraphFormat,
    InvocationConfig,
    MinCutMethod,
    MinCutResult,
    PipelineVariant,
    SimpleGraph,
    Subcommand,
)
from kout_mincut.infrastructure.io import format_graph, load_graph_file, write_graph_file, write_report
from kout_mincut.observability import setup_logging

app = typer.Typer(
    name="kout-mincut",
    help="Edge connectivity via random 2-out contraction, certificates and voting",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)

_FLAGS = {
    "input_path": "--input",
    "generator": "--gen",
    "output_path": "--output",
    "seed": "--seed",
    "eps": "--eps",
    "gamma": "--gamma",
    "q": "--q",
    "r": "--r",
    "variant": "--variant",
    "reducer": "--reducer",
    "format": "--format",
}

_CONFIRM_KEYS = {"component_count": "ratio", "diameter_sum": "ratio", "edge_budget": "edge_ratio"}
_BAND_MEASURES = {"diameter_sum"}


def _fail(message: str, code: int) -> None:
    err_console.print(f"error: {message}", markup=False, highlight=False)
    raise typer.Exit(code=code)


def handle_errors(command):
    """Map library errors to exit status 2 (input) or 1 (internal) with a one-line diagnostic."""

    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValidationError as e:
            first = e.errors()[0]
            flag = _FLAGS.get(str(first["loc"][0]), "") if first["loc"] else ""
            message = first["msg"].removeprefix("Value error, ")
            _fail(f"{flag}: {message}" if flag else message, 2)
        except InvariantViolationError as e:
            _fail(e.message, 1)
        except MinCutError as e:
            _fail(e.message, 2 if e.is_input_error else 1)
        except OSError as e:
            _fail(f"{e.filename or 'file'}: {e.strerror or e}", 2)

    return wrapper


def _load(invocation: InvocationConfig, fmt: GraphFormat | None) -> SimpleGraph:
    if invocation.input_path is not None:
        return load_graph_file(invocation.input_path, fmt)
    try:
        return generate_from_spec(invocation.generator, seed=invocation.seed)
    except MinCutError as e:
        e.message = f"--gen: {e.message}"
        raise


def _write(record, path: Path) -> None:
    with open(path, "wb") as f:
        write_report(record, f)


def _lambda_line(result: MinCutResult) -> str:
    return f"lambda = {result.value}" + (" (singleton)" if result.is_singleton else "")


@app.callback()
def main(
    log_level: str | None = typer.Option(None, "--log-level", help="Override KOUT_LOG_LEVEL"),
):
    """Configure logging once per invocation."""
    try:
        app_config = settings.app
    except ValidationError as e:
        first = e.errors()[0]
        name = f"KOUT_{str(first['loc'][0]).upper()}" if first["loc"] else "KOUT_*"
        _fail(f"{name}: {first['msg'].removeprefix('Value error, ')}", 2)
    try:
        setup_logging(log_level or app_config.log_level, app_config.log_file)
    except ConfigurationValidationError as e:
        _fail(f"--log-level: {e.message}", 2)


@app.command()
@handle_errors
def gen(
    generator: str = typer.Option(..., "--gen", help="Generator spec, e.g. two_cliques:10,4"),
    seed: int = typer.Option(0, "--seed", help="Master seed (64-bit)"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Graph file; stdout if omitted"),
    fmt: GraphFormat = typer.Option(GraphFormat.EDGE_LIST, "--format", help="Graph file format"),
):
    """Generate a graph file."""
    invocation = InvocationConfig(
        subcommand=Subcommand.GEN, generator=generator, seed=seed, output_path=output, format=fmt
    )
    g = _load(invocation, fmt)
    if output is None:
        typer.echo(format_graph(g, fmt), nl=False)
    else:
        write_graph_file(g, output, fmt)
        console.print(f"wrote n = {g.vertex_count}, m = {g.edge_count} to {output}", markup=False, highlight=False)


@app.command()
@handle_errors
def mincut(
    input_path: Path | None = typer.Option(None, "--input", "-i", help="Graph file"),
    generator: str | None = typer.Option(None, "--gen", help="Generator spec"),
    fmt: GraphFormat | None = typer.Option(None, "--format", help="Input format; inferred from suffix"),
    seed: int = typer.Option(0, "--seed", help="Master seed (64-bit)"),
    eps: float | None = typer.Option(None, "--eps", help="Cut slack in (0, 1]"),
    gamma: float | None = typer.Option(None, "--gamma", help="Failure exponent"),
    q: int | None = typer.Option(None, "--q", help="Repetition count override"),
    r: int | None = typer.Option(None, "--r", help="Vote threshold override"),
    variant: PipelineVariant | None = typer.Option(None, "--variant", help="amplified, dense or direct"),
    reducer: EdgeReducer | None = typer.Option(None, "--reducer", help="certificate or random_sample"),
    solver: str | None = typer.Option(None, "--solver", help="stoer-wagner, exhaustive or maxflow"),
    output: Path = typer.Option(Path("mincut_report.json"), "--output", "-o", help="Witness report path"),
):
    """Compute the edge connectivity and write a witness report."""
    pipeline = settings.pipeline
    try:
        multigraph_solver = solver_factory.create_solver(solver or pipeline.solver)
    except ConfigurationValidationError as e:
        _fail(f"--solver: {e.message}", 2)
    invocation = InvocationConfig(
        subcommand=Subcommand.MINCUT,
        input_path=input_path,
        generator=generator,
        output_path=output,
        seed=seed,
        eps=eps if eps is not None else pipeline.eps,
        gamma=gamma if gamma is not None else pipeline.gamma,
        q=q,
        r=r,
        variant=variant or pipeline.variant,
        reducer=reducer or pipeline.reducer,
    )
    g = _load(invocation, fmt)
    if g.vertex_count < 2:
        console.print("lambda = undefined", markup=False, highlight=False)
        return
    cfg = pipeline.amplification(
        g.vertex_count,
        eps=invocation.eps,
        gamma=invocation.gamma,
        q=invocation.q,
        r=invocation.r,
        dense_q=invocation.q,
        dense_r=invocation.r,
        reducer=invocation.reducer,
    )
    result = edge_connectivity(g, cfg, variant=invocation.variant, seed=invocation.seed, solver=multigraph_solver)
    _write(result, output)
    console.print(_lambda_line(result), markup=False, highlight=False)


@app.command()
@handle_errors
def contract(
    input_path: Path | None = typer.Option(None, "--input", "-i", help="Graph file"),
    generator: str | None = typer.Option(None, "--gen", help="Generator spec"),
    fmt: GraphFormat | None = typer.Option(None, "--format", help="Input format; inferred from suffix"),
    seed: int = typer.Option(0, "--seed", help="Master seed (64-bit)"),
    q: int | None = typer.Option(None, "--q", help="Repetition count override"),
    r: int | None = typer.Option(None, "--r", help="Vote threshold override"),
    variant: PipelineVariant = typer.Option(PipelineVariant.AMPLIFIED, "--variant", help="amplified or dense"),
    output: Path = typer.Option(Path("contraction_report.json"), "--output", "-o", help="Contraction report path"),
):
    """Contract the graph and write the multigraph with its vertex map."""
    invocation = InvocationConfig(
        subcommand=Subcommand.CONTRACT,
        input_path=input_path,
        generator=generator,
        output_path=output,
        seed=seed,
        q=q,
        r=r,
        variant=variant,
    )
    if invocation.variant == PipelineVariant.DIRECT:
        _fail("--variant: contract supports amplified or dense", 2)
    g = _load(invocation, fmt)
    cfg = settings.pipeline.amplification(g.vertex_count, q=q, r=r, dense_q=q, dense_r=r)
    if invocation.variant == PipelineVariant.DENSE:
        mg = dense_contraction(g, cfg, invocation.seed)
    else:
        mg = amplified_contraction(g, cfg, invocation.seed)
    _write(mg, output)
    console.print(f"supernodes = {mg.supernode_count}, edges = {mg.edge_count}", markup=False, highlight=False)


@app.command()
@handle_errors
def certificate(
    k: int = typer.Option(..., "--k", min=1, help="Certificate strength"),
    input_path: Path | None = typer.Option(None, "--input", "-i", help="Graph file"),
    generator: str | None = typer.Option(None, "--gen", help="Generator spec"),
    fmt: GraphFormat | None = typer.Option(None, "--format", help="Input format; inferred from suffix"),
    seed: int = typer.Option(0, "--seed", help="Seed for generated inputs"),
    output: Path = typer.Option(Path("certificate_report.json"), "--output", "-o", help="Certificate report path"),
):
    """Write the edge ids retained by a sparse k-certificate."""
    invocation = InvocationConfig(
        subcommand=Subcommand.CERTIFICATE, input_path=input_path, generator=generator, output_path=output, seed=seed
    )
    g = _load(invocation, fmt)
    forests = sparse_certificate(g.as_multigraph(), k)
    _write(forests, output)
    console.print(f"retained = {forests.retained_count} of {g.edge_count} edges", markup=False, highlight=False)


def _parse_sizes(sizes: list[str]) -> list[tuple[float, ...]]:
    parsed = []
    for size in sizes:
        try:
            parsed.append(tuple(float(p) for p in size.split(",")))
        except ValueError:
            _fail(f"--size: cannot parse '{size}'", 2)
    return parsed


@app.command()
@handle_errors
def stats(
    measure: str = typer.Argument(
        ..., help="component_count, diameter_sum, preservation, edge_budget or runtime_scaling"
    ),
    generator: str = typer.Option(..., "--gen", help="Instance family and parameters"),
    trials: int = typer.Option(100, "--trials", min=0, help="Trials in the batch"),
    seed: int = typer.Option(0, "--seed", help="Master seed (64-bit)"),
    k: int = typer.Option(2, "--k", min=1, help="Draws per vertex"),
    eps: float = typer.Option(1.0, "--eps", help="Cut slack for preservation"),
    q: int | None = typer.Option(None, "--q", help="Repetition count override"),
    r: int | None = typer.Option(None, "--r", help="Vote threshold override"),
    variant: PipelineVariant = typer.Option(PipelineVariant.AMPLIFIED, "--variant", help="Pipeline variant"),
    size: list[str] = typer.Option([], "--size", help="Parameter set for runtime_scaling, repeatable"),
    run_confirmation: bool = typer.Option(False, "--confirm", help="Pilot then fresh-seed confirmation"),
    output: Path = typer.Option(Path("stats_report.json"), "--output", "-o", help="Batch report path"),
):
    """Run a named experiment batch."""
    invocation = InvocationConfig(
        subcommand=Subcommand.STATS, generator=generator, seed=seed, eps=eps, q=q, r=r, output_path=output
    )
    spec = GraphSpec.parse(invocation.generator)

    def run(batch_seed: int, batch_trials: int):
        if measure == "component_count":
            return measure_component_count(spec.kind, spec.params, k, batch_trials, batch_seed)
        if measure == "diameter_sum":
            return measure_diameter_sum(spec.kind, spec.params, batch_trials, batch_seed)
        if measure == "preservation":
            return measure_preservation(spec.kind, spec.params, invocation.eps, batch_trials, batch_seed, k=k)
        if measure == "edge_budget":
            g = generate_from_spec(spec, seed=batch_seed)
            cfg = settings.pipeline.amplification(g.vertex_count, q=q, r=r)
            return measure_edge_budget(spec.kind, spec.params, cfg, batch_trials, batch_seed)
        if measure == "runtime_scaling":
            if not size:
                _fail("--size: runtime_scaling needs at least one --size", 2)
            return measure_runtime_scaling(spec.kind, _parse_sizes(size), variant, batch_seed, q=q, r=r)
        _fail(f"unknown measure '{measure}'", 2)

    batch = run(invocation.seed, trials)
    _write(batch, output)
    summary = batch.summary
    console.print(
        f"{batch.measure}: trials = {batch.trial_count}, mean = {summary.mean:.6g}, max = {summary.max:.6g}",
        markup=False,
        highlight=False,
    )
    if not run_confirmation:
        return
    key = _CONFIRM_KEYS.get(measure)
    if key is None:
        _fail(f"--confirm: {measure} has no calibrated upper bound", 2)
    if measure in _BAND_MEASURES:
        lower, bound = calibrate_band(batch, key=key)
    else:
        lower, bound = None, calibrate(batch, key=key)
    fresh_seed = derive_seeds(invocation.seed, 2)[1]
    report = confirm(run(fresh_seed, settings.harness.confirmation_trials), bound, key=key, lower=lower)
    _write(report, output.with_name(f"{output.stem}.confirmation.json"))
    calibrated = f"band = [{lower:.6g}, {bound:.6g}]" if lower is not None else f"bound = {bound:.6g}"
    console.print(
        f"confirmation: {calibrated}, trials = {report.trials}, violations = {report.violations}",
        markup=False,
        highlight=False,
    )
    if not report.passed:
        raise typer.Exit(code=1)


def _oracle_corpus() -> None:
    table = Table(title="Regression corpus")
    table.add_column("Instance", style="cyan")
    table.add_column("mincut", style="green")
    table.add_column("oracle", style="green")
    disagreements = 0
    for spec in bundled_corpus():
        g = generate_from_spec(spec)
        expected = oracle_mincut(g).value
        found = edge_connectivity(g, settings.pipeline.amplification(g.vertex_count)).value
        disagreements += found != expected
        table.add_row(spec, str(found), str(expected))
    console.print(table)
    if disagreements:
        _fail(f"{disagreements} corpus instance(s) disagree with the oracle", 1)


@app.command()
@handle_errors
def oracle(
    input_path: Path | None = typer.Option(None, "--input", "-i", help="Graph file"),
    generator: str | None = typer.Option(None, "--gen", help="Generator spec"),
    fmt: GraphFormat | None = typer.Option(None, "--format", help="Input format; inferred from suffix"),
    seed: int = typer.Option(0, "--seed", help="Seed for generated inputs"),
    method: str = typer.Option("auto", "--method", help="auto, exhaustive or maxflow"),
    corpus: bool = typer.Option(False, "--corpus", help="Compare mincut with the oracle on the bundled corpus"),
    output: Path | None = typer.Option(None, "--output", "-o", help="Report path"),
):
    """Run the ground-truth solver."""
    if corpus:
        _oracle_corpus()
        return
    invocation = InvocationConfig(
        subcommand=Subcommand.ORACLE, input_path=input_path, generator=generator, output_path=output, seed=seed
    )
    methods = {"auto": None, "exhaustive": MinCutMethod.ORACLE_EXHAUSTIVE, "maxflow": MinCutMethod.ORACLE_MAXFLOW}
    if method not in methods:
        _fail(f"--method: expected one of {', '.join(methods)}", 2)
    g = _load(invocation, fmt)
    try:
        result = oracle_mincut(g, method=methods[method])
    except UndefinedConnectivityError:
        console.print("lambda = undefined", markup=False, highlight=False)
        return
    if output is not None:
        _write(result, output)
    console.print(_lambda_line(result), markup=False, highlight=False)


if __name__ == "__main__":
    app()

"""
flagtwist command line.

Commands:
  flagtwist gen        - Write a seeded random configuration of conics
  flagtwist classify   - Print the classification flags of a configuration
  flagtwist dim        - h0, h1 and chi of I_A(a,b)
  flagtwist member     - Analyze a seeded random member of |I_A(a,b)|
  flagtwist verify     - Run a registered scenario and write its report
  flagtwist scenarios  - List the registered scenarios

Exit codes: 0 ok, 1 error, 2 verification failed, 3 bad input.
"""

import json
from pathlib import Path
from typing import Any, Dict, Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

from src.config_generator import ConfigMode, random_config
from src.config_io import load_config, save_config
from src.errors import BadParams, ConfigParseError, EmptySystem, FlagTwistError, UnknownScenario
from src.flag_geometry import Configuration
from src.harness import run_scenario
from src.linear_system import LinearSystem, random_member
from src.logging_setup import configure_logging
from src.report import FORMATS, render, write_report
from src.scenarios import list_scenarios
from src.settings import get_settings
from src.surface_analysis import analyze_surface
from src.validation import parse_bidegree, parse_checks, validate_mode, validate_seed

console = Console()

app = typer.Typer(
    name="flagtwist",
    help="Exact checks of twistor-fiber configurations on the flag threefold",
    no_args_is_help=True,
)

EXIT_OK, EXIT_ERROR, EXIT_FAILED, EXIT_BAD_INPUT = 0, 1, 2, 3


def _output_json(data: Dict[str, Any], exit_code: Optional[int] = None) -> None:
    """Print structured JSON to stdout and exit.

    Exit codes follow data["status"]: "ok" -> 0, "failed" -> 2, anything
    else -> 1, unless exit_code is given.
    """
    print(json.dumps(data, indent=2, sort_keys=True, default=str))
    if exit_code is not None:
        raise typer.Exit(exit_code)
    status = data.get("status", "ok")
    if status == "ok":
        raise typer.Exit(EXIT_OK)
    elif status == "failed":
        raise typer.Exit(EXIT_FAILED)
    else:
        raise typer.Exit(EXIT_ERROR)


def _fail(command: str, exc: Exception, output_json: bool, exit_code: int) -> None:
    if output_json:
        _output_json({"command": command, "status": "error", "error": str(exc)}, exit_code)
    console.print(f"[red]Error:[/] {exc}")
    raise typer.Exit(exit_code)


def _load(command: str, path: Path, output_json: bool) -> Configuration:
    try:
        return load_config(path)
    except (ConfigParseError, OSError) as exc:
        _fail(command, exc, output_json, EXIT_BAD_INPUT)


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
):
    """Exact checks of twistor-fiber configurations on the flag threefold."""
    try:
        configure_logging(log_level or get_settings().log_level)
    except ValueError as exc:
        console.print(f"[red]Error:[/] {exc}")
        raise typer.Exit(EXIT_BAD_INPUT)


@app.command("gen")
def gen_config(
    n: int = typer.Option(..., "--n", help="Number of conics"),
    mode: str = typer.Option("general", "--mode", help="general or collinear"),
    twistor: bool = typer.Option(False, "--twistor/--no-twistor", help="Draw twistor fibers"),
    seed: int = typer.Option(0, "--seed", help="Unsigned 64-bit seed"),
    out: Path = typer.Option(..., "--out", help="Configuration JSON to write"),
    output_json: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """
    Write a seeded random configuration.

    Examples:
        flagtwist gen --n 4 --mode collinear --twistor --seed 7 --out t4.json
    """
    if n < 1 or not validate_mode(mode) or not validate_seed(seed):
        _fail("gen", BadParams(f"Need n >= 1, mode general|collinear and a u64 seed; "
                               f"got n={n}, mode={mode!r}, seed={seed}"), output_json, EXIT_BAD_INPUT)
    try:
        config = random_config(n, ConfigMode(mode.strip().lower()), twistor, seed)
        save_config(config, out)
    except (FlagTwistError, OSError) as exc:
        _fail("gen", exc, output_json, EXIT_ERROR)

    if output_json:
        _output_json({"command": "gen", "status": "ok", "path": str(out), **config.summary()})
    console.print(f"[green]Wrote[/] {config.n} conics ({config.category()}) to {out}")


@app.command("classify")
def classify_cmd(
    config_path: Path = typer.Option(..., "--config", help="Configuration JSON"),
    output_json: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """
    Print the classification flags and any collinear witness.

    Examples:
        flagtwist classify --config t4.json
    """
    config = _load("classify", config_path, output_json)
    summary = config.summary()
    if output_json:
        _output_json({"command": "classify", "status": "ok", **summary})

    table = Table(show_header=True, header_style="bold", title=str(config_path))
    table.add_column("Flag", style="cyan")
    table.add_column("Value")
    table.add_row("category", summary["category"])
    table.add_row("n", str(summary["n"]))
    table.add_row("pairwise_disjoint", str(summary["pairwise_disjoint"]).lower())
    table.add_row("all_twistor", str(summary["all_twistor"]).lower())
    table.add_row("C*", str(summary["in_c_star"]).lower())
    table.add_row("collinear_witness", summary["collinear_witness"] or "-")
    console.print(table)


@app.command("dim")
def dim_cmd(
    config_path: Path = typer.Option(..., "--config", help="Configuration JSON"),
    bidegree: str = typer.Option(..., "--bidegree", help="a,b"),
    output_json: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """
    h0, h1 and chi of the ideal sheaf twisted by (a,b).

    Examples:
        flagtwist dim --config t4.json --bidegree 1,2
    """
    config = _load("dim", config_path, output_json)
    try:
        system = LinearSystem(config, parse_bidegree(bidegree))
    except BadParams as exc:
        _fail("dim", exc, output_json, EXIT_BAD_INPUT)
    except FlagTwistError as exc:
        _fail("dim", exc, output_json, EXIT_ERROR)

    if output_json:
        _output_json({"command": "dim", "status": "ok", **system.to_record()})
    a, b = system.bidegree
    console.print(f"I_A({a},{b}) for {config.category()}: "
                  f"h0 = {system.h0}, h1 = {system.h1}, chi = {system.chi}")


@app.command("member")
def member_cmd(
    config_path: Path = typer.Option(..., "--config", help="Configuration JSON"),
    bidegree: str = typer.Option(..., "--bidegree", help="a,b with a = 1"),
    seed: int = typer.Option(0, "--seed", help="Unsigned 64-bit seed"),
    check: str = typer.Option("irreducible,singular,contains", "--check",
                              help="Comma-separated: irreducible, singular, contains"),
    output_json: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """
    Draw a random member of |I_A(a,b)| and analyze it.

    Smoothness is sampled: "singular" lists singular points found among
    random surface points and points of contained conics.

    Examples:
        flagtwist member --config t2.json --bidegree 1,2 --seed 3 --check irreducible,singular
    """
    config = _load("member", config_path, output_json)
    try:
        checks = parse_checks(check)
        parsed = parse_bidegree(bidegree)
        if parsed[0] != 1:
            raise BadParams(f"Member analysis needs bidegree (1,d), got {parsed}")
        if not validate_seed(seed):
            raise BadParams(f"seed must be an integer in [0, 2^64), got {seed}")
    except BadParams as exc:
        _fail("member", exc, output_json, EXIT_BAD_INPUT)

    try:
        system = LinearSystem(config, parsed)
        member = random_member(system.basis, seed)
        analysis = analyze_surface(member, config, seed=seed)
    except EmptySystem:
        if output_json:
            _output_json({"command": "member", "status": "error", "h0": 0,
                          "error": "the linear system is empty"}, EXIT_ERROR)
        console.print(f"[yellow]No member:[/] h0(I_A{parsed}) = 0")
        raise typer.Exit(EXIT_ERROR)
    except FlagTwistError as exc:
        _fail("member", exc, output_json, EXIT_ERROR)

    record = analysis.to_record()
    result: Dict[str, Any] = {"form": record["form"], "h0": system.h0}
    if "irreducible" in checks:
        result.update(irreducible=record["irreducible"],
                      vertical_divisor=record["vertical_divisor"],
                      vertical_multiplicity=record["vertical_multiplicity"])
    if "singular" in checks:
        result.update(singular_points_found=record["singular_points_found"],
                      points_checked=record["points_checked"])
    if "contains" in checks:
        result.update(contained_conics=record["contained_conics"])

    if output_json:
        _output_json({"command": "member", "status": "ok", **result})
    lines = [f"[bold]{result['form']}[/]", f"h0 = {system.h0}"]
    for key in sorted(result):
        if key not in ("form", "h0"):
            lines.append(f"{key}: {result[key]}")
    console.print(Panel("\n".join(lines), title="member", style="cyan"))


@app.command("verify")
def verify_cmd(
    scenario: str = typer.Option(..., "--scenario", help="Registered scenario name"),
    d: Optional[int] = typer.Option(None, "--d", help="Second degree of the (1,d) systems"),
    n: Optional[int] = typer.Option(None, "--n", help="Number of conics"),
    trials: Optional[int] = typer.Option(None, "--trials", help="Number of seeded trials"),
    seed: int = typer.Option(0, "--seed", help="Unsigned 64-bit seed"),
    out: Optional[Path] = typer.Option(None, "--out", help="Report file"),
    fmt: str = typer.Option("json", "--format", help="json, text or csv"),
    workers: int = typer.Option(1, "--workers", help="Processes for parallel trials"),
):
    """
    Run a scenario and write its report.

    Exits 0 on pass, 2 on fail or a runtime error, 1 when every trial missed
    its hypothesis and 3 on bad input.

    Examples:
        flagtwist verify --scenario cor1 --d 2 --n 2 --trials 20 --seed 1 --out cor1.json
    """
    if fmt not in FORMATS:
        _fail("verify", BadParams(f"Unknown format {fmt!r}"), False, EXIT_BAD_INPUT)
    try:
        report = run_scenario(scenario, {"d": d, "n": n, "trials": trials}, seed, workers)
    except (BadParams, ConfigParseError, UnknownScenario) as exc:
        _fail("verify", exc, False, EXIT_BAD_INPUT)
    except FlagTwistError as exc:
        _fail("verify", exc, False, EXIT_FAILED)

    status = report.verdict.status
    if out is not None:
        write_report(report, out, fmt)
        style = {"pass": "green", "fail": "bold red"}.get(status, "yellow")
        console.print(f"[{style}]{scenario}: {status}[/] (report written to {out})")
    else:
        print(render(report, fmt), end="")
    raise typer.Exit({"pass": EXIT_OK, "fail": EXIT_FAILED}.get(status, EXIT_ERROR))


@app.command("scenarios")
def scenarios_cmd(
    output_json: bool = typer.Option(False, "--json", help="Output as JSON"),
):
    """List the registered scenarios with their claims."""
    scenarios = list_scenarios()
    if output_json:
        _output_json({
            "command": "scenarios",
            "status": "ok",
            "scenarios": [{"name": s.name, "claim": s.claim} for s in scenarios],
        })

    table = Table(show_header=True, header_style="bold")
    table.add_column("Scenario", style="cyan")
    table.add_column("Claim")
    for s in scenarios:
        table.add_row(s.name, s.claim)
    console.print(table)

"""
Command-line interface for the theta lifting toolkit.

Usage:
    thetalift classgroup --disc -23
    thetalift theta --disc -7 --class 0 --nmax 5
    thetalift vvtheta --disc -23 --a 0 --h 1 --nmax 10
    thetalift lift --disc -23 --class 0 --nmax 10
    thetalift petersson --disc -47 --psi 1 --chi 4 --method both
    thetalift verify --disc -23

Characters are addressed by their index in the canonical list: the trivial
character first, then by exponent vector on the generators in
lexicographic order. JSON goes to stdout (or --output); logs and errors go
to stderr. Exit codes: 0 ok, 1 verification failure, 2 invalid input.
"""

import logging
import os
import sys
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.panel import Panel
from rich.table import Table

app = typer.Typer(
    name="thetalift",
    help="Theta functions, the Weil representation and the theta lift for imaginary quadratic fields",
    add_completion=False,
)

console = Console()
err_console = Console(stderr=True)

EXIT_FAILED = 1
EXIT_INVALID = 2


@app.callback()
def configure_logging():
    """Log level from THETALIFT_LOG_LEVEL, WARNING by default."""
    level = os.environ.get("THETALIFT_LOG_LEVEL", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )


def fail(error: Exception, code: int = EXIT_INVALID):
    """Print the error in a panel on stderr and exit."""
    err_console.print(Panel.fit(f"[red]{type(error).__name__}[/red]: {error}", title="Error"))
    raise typer.Exit(code)


def load_run_config(config: Optional[Path], **overrides):
    """RunConfig from YAML (or defaults) with command-line values on top, validated."""
    from dataclasses import replace

    from thetalift.config import get_config

    base = get_config(str(config)) if config else get_config()
    values = {k: v for k, v in overrides.items() if v is not None}
    if isinstance(values.get("output"), Path):
        values["output"] = str(values["output"])
    return replace(base, **values).validate()


def write(model, run_config):
    """Export a pydantic model as JSON to stdout or the configured file."""
    from thetalift.io import ExportConfig, JsonExporter

    export = ExportConfig(pretty=run_config.pretty, output=run_config.output)
    JsonExporter().export(model, export)


# =============================================================================
# COMMANDS
# =============================================================================

@app.command()
def classgroup(
    disc: Optional[int] = typer.Option(None, "--disc", "-d", help="Odd fundamental discriminant D < 0"),
    prec_bits: Optional[int] = typer.Option(None, "--prec-bits", help="Working precision in bits"),
    json_output: bool = typer.Option(True, "--json/--pretty", help="Compact JSON or indented JSON"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write JSON to file"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML run configuration"),
):
    """
    Reduced forms, structure, characters and CM points of Cl(D).

    Example:
        thetalift classgroup --disc -23
    """
    try:
        from thetalift.classgroup import class_group
        from thetalift.io import class_group_model

        run = load_run_config(
            config, disc=disc, prec_bits=prec_bits, pretty=not json_output, output=output
        )
        model = class_group_model(class_group(run.disc), run.precision())
    except ValueError as e:
        fail(e)
    write(model, run)


@app.command()
def theta(
    disc: Optional[int] = typer.Option(None, "--disc", "-d", help="Odd fundamental discriminant D < 0"),
    cls: int = typer.Option(0, "--class", help="Class index of the form"),
    psi: Optional[int] = typer.Option(None, "--psi", help="Character index: theta_psi instead of theta_a"),
    nmax: Optional[int] = typer.Option(None, "--nmax", help="Largest exponent"),
    json_output: bool = typer.Option(True, "--json/--pretty", help="Compact JSON or indented JSON"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write JSON to file"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML run configuration"),
):
    """
    Scalar theta series theta_a, or theta_psi with --psi.

    Example:
        thetalift theta --disc -7 --class 0 --nmax 5
    """
    try:
        from thetalift.classgroup import character_from_index, class_group
        from thetalift.io import qexpansion_model
        from thetalift.scalartheta import theta_ideal, theta_psi

        run = load_run_config(config, disc=disc, n_max=nmax, pretty=not json_output, output=output)
        G = class_group(run.disc)
        if psi is not None:
            f = theta_psi(character_from_index(G, psi), run.n_max)
        else:
            if not 0 <= cls < G.h:
                raise ValueError(f"Unknown class: {cls}. Valid: 0..{G.h - 1}")
            f = theta_ideal(G, cls, run.n_max)
        model = qexpansion_model(f)
    except ValueError as e:
        fail(e)
    write(model, run)


@app.command()
def vvtheta(
    disc: Optional[int] = typer.Option(None, "--disc", "-d", help="Odd fundamental discriminant D < 0"),
    a: int = typer.Option(0, "--a", help="Class of the lattice P"),
    h: int = typer.Option(0, "--h", help="Acting class"),
    psi: Optional[int] = typer.Option(None, "--psi", help="Character index: Theta_P(tau, psi)"),
    sym: bool = typer.Option(False, "--sym", help="Symmetrize over O(P'/P)"),
    nmax: Optional[int] = typer.Option(None, "--nmax", help="Largest scalar exponent"),
    json_output: bool = typer.Option(True, "--json/--pretty", help="Compact JSON or indented JSON"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write JSON to file"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML run configuration"),
):
    """
    Vector-valued theta function Theta_P(tau, h) or Theta_P(tau, psi).

    Example:
        thetalift vvtheta --disc -23 --a 0 --h 1 --nmax 10
    """
    try:
        from thetalift.classgroup import character_from_index, class_group
        from thetalift.io import vv_form_model
        from thetalift.vvtheta import vv_theta, vv_theta_psi, vv_theta_sym, vv_theta_sym_psi

        run = load_run_config(config, disc=disc, n_max=nmax, pretty=not json_output, output=output)
        G = class_group(run.disc)
        for name, value in (("a", a), ("h", h)):
            if not 0 <= value < G.h:
                raise ValueError(f"Unknown class for --{name}: {value}. Valid: 0..{G.h - 1}")
        if psi is not None:
            character = character_from_index(G, psi)
            F = (vv_theta_sym_psi if sym else vv_theta_psi)(G, a, character, run.n_max)
        else:
            F = vv_theta_sym(G, a, h, run.n_max) if sym else vv_theta(G, a, h, run.n_max).form
        model = vv_form_model(F)
    except ValueError as e:
        fail(e)
    write(model, run)


@app.command()
def lift(
    disc: Optional[int] = typer.Option(None, "--disc", "-d", help="Odd fundamental discriminant D < 0"),
    cls: int = typer.Option(0, "--class", help="Class c of the lifted theta_c"),
    a: int = typer.Option(0, "--a", help="Class of the lattice P"),
    route: Optional[str] = typer.Option(None, "--route", help="parent or extraction"),
    nmax: Optional[int] = typer.Option(None, "--nmax", help="Largest scalar exponent"),
    prec_bits: Optional[int] = typer.Option(None, "--prec-bits", help="Working precision in bits"),
    json_output: bool = typer.Option(True, "--json/--pretty", help="Compact JSON or indented JSON"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write JSON to file"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML run configuration"),
):
    """
    Fourier expansion of S_P(theta_c) for the lattice P of class a.

    Example:
        thetalift lift --disc -23 --class 0 --nmax 10
    """
    try:
        from thetalift.classgroup import class_group
        from thetalift.config import get_tolerance
        from thetalift.io import vv_form_model
        from thetalift.scalartheta import theta_ideal
        from thetalift.weilrep import lift_coefficients

        run = load_run_config(
            config, disc=disc, n_max=nmax, prec_bits=prec_bits, pretty=not json_output, output=output
        )
        G = class_group(run.disc)
        for name, value in (("class", cls), ("a", a)):
            if not 0 <= value < G.h:
                raise ValueError(f"Unknown class for --{name}: {value}. Valid: 0..{G.h - 1}")
        f = theta_ideal(G, cls, run.n_max)
        F = lift_coefficients(f, G, a, ctx=run.precision(), route=route)
        support_ok = F.check_support(tol=get_tolerance("lift"))
        F.meta.update({"class": cls, "a": a, "support_ok": support_ok})
        model = vv_form_model(F, digits=min(run.precision().digits, 30))
    except ValueError as e:
        fail(e)
    write(model, run)


@app.command()
def petersson(
    disc: Optional[int] = typer.Option(None, "--disc", "-d", help="Odd fundamental discriminant D < 0"),
    psi: int = typer.Option(..., "--psi", help="Character index of the first theta function"),
    chi: int = typer.Option(..., "--chi", help="Character index of the second theta function"),
    a: int = typer.Option(0, "--a", help="Class of the lattice P"),
    method: Optional[str] = typer.Option(None, "--method", "-m", help="quadrature, closed_form or both"),
    prec_bits: Optional[int] = typer.Option(None, "--prec-bits", help="Working precision in bits"),
    quad_nodes: Optional[int] = typer.Option(None, "--quad-nodes", help="Gauss-Legendre nodes per direction"),
    height_t: Optional[float] = typer.Option(None, "--height-T", help="Height of the exact strip"),
    json_output: bool = typer.Option(True, "--json/--pretty", help="Compact JSON or indented JSON"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write JSON to file"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML run configuration"),
):
    """
    (Theta_P(., psi), Theta_P(., chi)) by quadrature, in closed form, or both.

    Example:
        thetalift petersson --disc -47 --psi 1 --chi 4 --method both
    """
    try:
        from thetalift.classgroup import character_from_index, class_group
        from thetalift.exceptions import ThetaLiftError
        from thetalift.io import petersson_model
        from thetalift.petersson import closed_form_vv, pairing_truncation, petersson_vv
        from thetalift.vvtheta import vv_theta_psi

        run = load_run_config(
            config,
            disc=disc,
            method=method,
            prec_bits=prec_bits,
            quad_nodes=quad_nodes,
            height_T=height_t,
            pretty=not json_output,
            output=output,
        )
        ctx = run.precision()
        G = class_group(run.disc)
        if not 0 <= a < G.h:
            raise ValueError(f"Unknown class for --a: {a}. Valid: 0..{G.h - 1}")
        first, second = character_from_index(G, psi), character_from_index(G, chi)

        results = {}
        if run.method in ("closed_form", "both"):
            results["closed_form"] = closed_form_vv(first, second, a, ctx)
        if run.method in ("quadrature", "both"):
            K = pairing_truncation()
            value = petersson_vv(vv_theta_psi(G, a, first, K), vv_theta_psi(G, a, second, K), ctx)
            value.meta["pair"] = [psi, chi]
            results["quadrature"] = value
    except (ValueError, ThetaLiftError) as e:
        fail(e)

    if len(results) == 1:
        (value,) = results.values()
        write(petersson_model(value), run)
        return

    from thetalift.config import get_tolerance
    from thetalift.io import PairingComparisonModel

    agree = results["quadrature"].agrees_with(
        results["closed_form"], rel=get_tolerance("closed_form")
    )
    write(
        PairingComparisonModel(
            closed_form=petersson_model(results["closed_form"]),
            quadrature=petersson_model(results["quadrature"]),
            agree=agree,
        ),
        run,
    )


@app.command()
def verify(
    disc: Optional[int] = typer.Option(None, "--disc", "-d", help="Odd fundamental discriminant D < 0"),
    checks: Optional[str] = typer.Option(None, "--checks", help="Comma-separated check names (default: all)"),
    a: Optional[int] = typer.Option(None, "--a", help="Class of the lattice P"),
    nmax: Optional[int] = typer.Option(None, "--nmax", help="Largest scalar exponent"),
    prec_bits: Optional[int] = typer.Option(None, "--prec-bits", help="Working precision in bits"),
    quad_nodes: Optional[int] = typer.Option(None, "--quad-nodes", help="Gauss-Legendre nodes per direction"),
    height_t: Optional[float] = typer.Option(None, "--height-T", help="Height of the exact strip"),
    json_output: bool = typer.Option(True, "--json/--pretty", help="Compact JSON or indented JSON"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write JSON to file"),
    config: Optional[Path] = typer.Option(None, "--config", "-c", help="YAML run configuration"),
):
    """
    Run the verification checks for one discriminant.

    Exits with 0 when every check passes and 1 naming the failing checks otherwise.

    Example:
        thetalift verify --disc -23
    """
    try:
        from services.verification_orchestrator import VerificationOrchestrator

        run_config = load_run_config(
            config,
            disc=disc,
            a_class=a,
            n_max=nmax,
            prec_bits=prec_bits,
            quad_nodes=quad_nodes,
            height_T=height_t,
            pretty=not json_output,
            output=output,
        )
        names = [c.strip() for c in checks.split(",") if c.strip()] if checks else None

        with err_console.status("Verifying...") as status:
            run = VerificationOrchestrator().verify(
                run_config.disc,
                config=run_config,
                checks=names,
                progress_callback=lambda p, step: status.update(f"[{p:.0%}] {step}"),
            )
    except ValueError as e:
        fail(e)

    write(run.to_report(), run_config)
    if not run.passed:
        err_console.print(f"[red]Failed checks:[/red] {', '.join(run.failing)}")
        raise typer.Exit(EXIT_FAILED)


@app.command("checks")
def list_checks():
    """Show available verification checks."""
    from thetalift.verification import CHECK_REGISTRY

    table = Table(title="Available Verification Checks")
    table.add_column("Check", style="cyan")
    table.add_column("Description", style="white")

    for name, check in CHECK_REGISTRY.items():
        table.add_row(name, check.description)

    console.print(table)


@app.command()
def version():
    """Show version information."""
    from thetalift import __version__

    console.print("[bold]thetalift[/bold]")
    console.print(f"Version: {__version__}")
    console.print("Theta lifts and Petersson products for imaginary quadratic fields")


def main():
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()

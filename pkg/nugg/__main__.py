import logging
import os

import typer

from nugg.cli.converge import converge
from nugg.cli.degrees import degrees_command
from nugg.cli.estimate import estimate
from nugg.cli.gen import gen
from nugg.cli.gso import gso
from nugg.utils.analytics import setup_analytics
from nugg.utils.settings import NuggSettings
from nugg.utils.version import resolve_own_package_version

if "__file__" not in globals():
    # typer exception handling using __file__ which is
    # not available when running in pyoxidizer binary mode
    os.environ["_TYPER_STANDARD_TRACEBACK"] = "1"

app = typer.Typer(pretty_exceptions_show_locals=False, pretty_exceptions_short=False)
app.command("gen")(gen)
app.command("gso")(gso)
app.command("converge")(converge)
app.command("degrees")(degrees_command)
app.command("estimate")(estimate)


def version_callback(value: bool) -> None:
    if value:
        typer.echo(resolve_own_package_version())
        raise typer.Exit()


def setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@app.callback()
def version(
    version: bool = typer.Option(
        None, "--version", callback=version_callback, is_eager=True
    ),
    verbose: bool = typer.Option(False, "--verbose", help="log at debug level"),
):
    settings = NuggSettings()
    setup_logging(verbose or settings.verbose == "1")
    if settings.enable_analytics:
        setup_analytics()

    return


def main() -> None:
    app()


if __name__ == "__main__":
    main()

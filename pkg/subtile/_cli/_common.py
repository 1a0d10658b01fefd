import click

verbose_option = click.option(
    "--verbose/--quiet", "-v/-q", help="Enable or disable verbose mode.", default=False
)
cap_option = click.option(
    "--cap",
    type=click.IntRange(min=1),
    default=None,
    help="Largest number of tiles a generated supertile may hold.",
)
out_option = click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Write the result to this file instead of standard output.",
)


def start(verbose):
    from .._log import setup_logging

    setup_logging("INFO" if verbose else None)


def resolve_system(ref):
    """
    Built-in system name, or path to a system file.

    Systems read from files must pass :func:`subtile.core.validate_system`.
    """
    from os.path import exists

    from ..io import load_system
    from ..systems import get_system

    if exists(ref):
        return load_system(ref, validate=True)
    return get_system(ref)


def emit(doc, out=None):
    """Write a JSON document to ``out``, or to standard output."""
    import json

    text = json.dumps(doc, sort_keys=True, indent=2)
    if out is None:
        click.echo(text)
    else:
        with open(out, "w") as f:
            f.write(text + "\n")

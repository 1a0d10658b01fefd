import click

from .._errors import EXIT_VALIDATION
from ._common import emit, out_option, start, verbose_option


@click.command()
@click.pass_context
@click.argument("system")
@click.option(
    "--bound",
    type=click.IntRange(min=1),
    default=12,
    show_default=True,
    help="Substitution levels searched for a parallel copy of each prototile.",
)
@out_option
@verbose_option
def validate(ctx, system, bound, out, verbose):
    """
    Check that SYSTEM is a tiling system.

    The JSON report lists the exact cover verdicts, the prototile geometry issues,
    the radii, primitivity and the parallel copies found. Exits with 2 when a check
    fails.
    """
    from os.path import exists

    from .._display import session_line
    from ..core import validate_system
    from ..io import load_system
    from ..systems import get_system

    start(verbose)
    sys = load_system(system) if exists(system) else get_system(system)
    with session_line(f"Validating {sys.name}... ", disable=not verbose):
        report = validate_system(sys, iii_bound=bound)
    emit(report.to_dict(), out)
    if not report.ok:
        ctx.exit(EXIT_VALIDATION)

import click

from ._common import emit, out_option, resolve_system, start, verbose_option


@click.command()
@click.pass_context
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--R",
    "horizon",
    type=click.FloatRange(min=1),
    default=3.0,
    show_default=True,
    help="Largest radius compared.",
)
@click.option(
    "--eps",
    type=click.FloatRange(min=0, min_open=True),
    default=1e-6,
    show_default=True,
    help="Target width of each bracket.",
)
@click.option(
    "--system",
    default=None,
    help="System name or file of both patches. Defaults to the built-in system.",
)
@out_option
@verbose_option
def metric(ctx, first, second, horizon, eps, system, out, verbose):
    """
    Certified tiling distance between two patch files.
    """
    from .._display import session_line
    from ..io import load_patch
    from ..metric import patch_metric

    start(verbose)
    sys = None if system is None else resolve_system(system)
    x = load_patch(first, sys)
    y = load_patch(second, sys)
    with session_line("Comparing boundaries... ", disable=not verbose):
        value = patch_metric(x, y, horizon, eps, verbose=verbose)
    emit(value.to_dict(), out)

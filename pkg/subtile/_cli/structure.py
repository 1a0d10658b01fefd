import click

from .._errors import EXIT_INCONCLUSIVE
from ._common import (
    cap_option,
    emit,
    out_option,
    resolve_system,
    start,
    verbose_option,
)


@click.command()
@click.pass_context
@click.argument("system")
@click.option(
    "--level",
    "levels",
    type=click.IntRange(min=0),
    multiple=True,
    default=(3,),
    show_default=True,
    help="Supertile level examined. Repeat for several levels.",
)
@click.option(
    "--ratio",
    type=click.FloatRange(min=0, min_open=True),
    default=0.5,
    show_default=True,
    help="Largest displacement searched, relative to the inscribed radius.",
)
@cap_option
@out_option
@verbose_option
def periods(ctx, system, levels, ratio, cap, out, verbose):
    """
    Smallest period displacement of central supertile patches.
    """
    from ..analysis import period_bound_report

    start(verbose)
    sys = resolve_system(system)
    report = period_bound_report(sys, levels, ratio, cap=cap, verbose=verbose)
    emit(report.to_dict(), out)


@click.command()
@click.pass_context
@click.argument("system")
@click.argument("prototile")
@click.option(
    "--level",
    type=click.IntRange(min=0),
    default=2,
    show_default=True,
    help="Largest substitution level.",
)
@click.option(
    "--horizon",
    type=click.IntRange(min=1),
    default=None,
    help="Extra levels searched for predecessors.",
)
@cap_option
@out_option
@verbose_option
def predecessors(ctx, system, prototile, level, horizon, cap, out, verbose):
    """
    Minimal patches whose images cover the images of PROTOTILE.
    """
    from ..analysis import predecessor_sets

    start(verbose)
    sys = resolve_system(system)
    result = predecessor_sets(sys, prototile, level, horizon, cap=cap)
    emit(result.to_dict(), out)


@click.command()
@click.pass_context
@click.argument("system")
@click.option(
    "--level",
    type=click.IntRange(min=2),
    default=None,
    help="Supertile level sampled for recognition.",
)
@click.option(
    "--steps", type=click.IntRange(min=1), default=None, help="Rungs of the ladder."
)
@click.option(
    "--patch",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Patch file to decompose into level-1 parents.",
)
@click.option(
    "--parents",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Patch file to write the recovered parents to.",
)
@cap_option
@out_option
@verbose_option
def recognize(ctx, system, level, steps, patch, parents, cap, out, verbose):
    """
    Recognizability radius and, optionally, the parents of a patch.

    Exits with 4 when no radius on the ladder determines every parent.
    """
    from .._config import config
    from .._display import session_line
    from ..analysis import decompose
    from ..analysis._recognize import _search_radius
    from ..io import load_patch, save_patch

    start(verbose)
    sys = resolve_system(system)
    if level is None:
        level = config["analysis.recognition_level"]
    with session_line("Searching recognition radius... ", disable=not verbose):
        value, table = _search_radius(sys, level, steps, cap, verbose)
    doc = {"system": sys.name, "level": level, "radius": value.to_dict()}
    if not value.finite:
        emit(doc, out)
        ctx.exit(EXIT_INCONCLUSIVE)

    if patch is not None:
        result = decompose(sys, load_patch(patch, sys), table, verbose=verbose)
        doc["decomposition"] = result.to_dict()
        if parents is not None:
            save_patch(result.parents, parents)
    emit(doc, out)

import click

from .._errors import EXIT_INCONCLUSIVE, EXIT_VALIDATION
from ._common import (
    cap_option,
    emit,
    out_option,
    resolve_system,
    start,
    verbose_option,
)

radius_option = click.option(
    "--radius",
    "-r",
    type=click.FloatRange(min=0, min_open=True),
    required=True,
    help="Ball radius.",
)
level_option = click.option(
    "--level",
    type=click.IntRange(min=0),
    default=3,
    show_default=True,
    help="Supertile level sampled.",
)


@click.command()
@click.pass_context
@click.argument("system")
@radius_option
@level_option
@cap_option
@out_option
@verbose_option
def patches(ctx, system, radius, level, cap, out, verbose):
    """
    Count the ball patches of a radius up to Euclidean motion.
    """
    from ..analysis import patch_library

    start(verbose)
    sys = resolve_system(system)
    library = patch_library(sys, radius, level, cap=cap, verbose=verbose)
    emit(library.to_dict(), out)


@click.command()
@click.pass_context
@click.argument("system")
@click.argument("patch", type=click.Path(exists=True, dir_okay=False))
@radius_option
@level_option
@cap_option
@out_option
@verbose_option
def admissible(ctx, system, patch, radius, level, cap, out, verbose):
    """
    Check that every ball patch of PATCH occurs in the supertiles.

    Exits with 2 when some ball patch is missing from the library.
    """
    from ..analysis import local_admissibility, patch_library
    from ..io import load_patch

    start(verbose)
    sys = resolve_system(system)
    P = load_patch(patch, sys)
    library = patch_library(sys, radius, level, cap=cap, verbose=verbose)
    verdict = local_admissibility(sys, P, radius, library)
    emit({"admissible": verdict, "tiles": len(P), "library": library.to_dict()}, out)
    if not verdict:
        ctx.exit(EXIT_VALIDATION)


@click.command()
@click.pass_context
@click.argument("system")
@radius_option
@level_option
@click.option(
    "--steps", type=click.IntRange(min=1), default=None, help="Rungs of the ladder."
)
@cap_option
@out_option
@verbose_option
def repetitivity(ctx, system, radius, level, steps, cap, out, verbose):
    """
    Radius of the balls that contain a copy of every ball patch of RADIUS.

    Exits with 4 when no rung of the ladder passed.
    """
    from ..analysis import repetitivity_radius

    start(verbose)
    sys = resolve_system(system)
    value = repetitivity_radius(sys, radius, level, steps, cap=cap, verbose=verbose)
    emit(dict(value.to_dict(), system=sys.name), out)
    if not value.finite:
        ctx.exit(EXIT_INCONCLUSIVE)


@click.command()
@click.pass_context
@click.argument("system")
@click.option(
    "--n-prime",
    type=click.FloatRange(min=0, min_open=True),
    default=1.0,
    show_default=True,
    help="Radius on which the images must agree.",
)
@click.option(
    "--samples",
    type=click.IntRange(min=1),
    default=100,
    show_default=True,
    help="Number of sampled pairs.",
)
@click.option(
    "--level", type=click.IntRange(min=1), default=None, help="Supertile level."
)
@click.option("--seed", type=int, default=0, show_default=True, help="Sampler seed.")
@click.option(
    "--steps", type=click.IntRange(min=1), default=8, show_default=True, help="Rungs."
)
@cap_option
@out_option
@verbose_option
def code(ctx, system, n_prime, samples, level, seed, steps, cap, out, verbose):
    """
    Radius the substitution code needs to fix its image on a ball.

    Exits with 4 when no rung of the ladder passed.
    """
    from ..analysis import code_radius_profile

    start(verbose)
    sys = resolve_system(system)
    value = code_radius_profile(
        sys, n_prime, samples, level, seed=seed, steps=steps, cap=cap, verbose=verbose
    )
    emit(dict(value.to_dict(), system=sys.name), out)
    if not value.finite:
        ctx.exit(EXIT_INCONCLUSIVE)

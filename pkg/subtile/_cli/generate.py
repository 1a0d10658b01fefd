import click

from ._common import cap_option, emit, resolve_system, start, verbose_option


@click.command()
@click.pass_context
@click.argument("system")
@click.argument("prototile")
@click.argument("level", type=click.IntRange(min=0))
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="Patch file to write the supertile to.",
)
@cap_option
@verbose_option
def generate(ctx, system, prototile, level, out, cap, verbose):
    """
    Build the supertile of PROTOTILE at LEVEL.

    SYSTEM is a built-in name (penrose, pinwheel:m,n, fibonacci, grid) or the path of
    a system file. The tile count and the exact area are printed as JSON.
    """
    from .._display import session_line
    from ..core import patch_area, supertile
    from ..io import save_patch
    from ..io._codec import encode_scalar

    start(verbose)
    sys = resolve_system(system)
    with session_line(f"Building level-{level} supertile... ", disable=not verbose):
        P = supertile(sys, prototile, level, cap=cap, verbose=verbose)
    if out is not None:
        save_patch(P, out)

    area = patch_area(P)
    emit(
        {
            "system": sys.name,
            "prototile": sys.prototile(prototile).name,
            "level": level,
            "tiles": len(P),
            "area": encode_scalar(area),
            "area_float": float(area),
            "out": out,
        }
    )

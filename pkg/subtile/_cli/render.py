import click

from ._common import resolve_system, start, verbose_option


@click.command()
@click.pass_context
@click.argument("patch", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--out",
    "-o",
    type=click.Path(dir_okay=False, writable=True),
    default=None,
    help="SVG file to write. Defaults to standard output.",
)
@click.option(
    "--system",
    default=None,
    help="System name or file the patch refers to. Defaults to the built-in system.",
)
@click.option(
    "--stroke-width",
    type=click.FloatRange(min=0),
    default=0.02,
    show_default=True,
    help="Outline width in tile units.",
)
@click.option(
    "--scale",
    type=click.FloatRange(min=0, min_open=True),
    default=50.0,
    show_default=True,
    help="Pixels per tile unit.",
)
@verbose_option
def render(ctx, patch, out, system, stroke_width, scale, verbose):
    """
    Draw a patch file as SVG.
    """
    from ..io import load_patch, render_svg, svg as svg_io

    start(verbose)
    sys = None if system is None else resolve_system(system)
    P = load_patch(patch, sys)
    if out is None:
        click.echo(render_svg(P, sys, stroke_width, scale), nl=False)
    else:
        svg_io.write(P, out, sys, stroke_width, scale)

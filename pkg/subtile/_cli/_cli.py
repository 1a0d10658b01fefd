import click

from ._click import SubtileGroup
from .analyze import analyze
from .generate import generate
from .render import render
from .validate import validate


def _get_version():
    import re
    from os.path import dirname, join, realpath

    filepath = join(dirname(realpath(__file__)), "..", "__init__.py")
    with open(filepath, "r") as f:
        content = f.read()

    c = re.compile(r"__version__ *= *('[^']+'|\"[^\"]+\")")
    m = c.search(content)
    if m is None:
        return "unknown"
    return m.groups()[0][1:-1]


@click.group(
    name="subtile",
    cls=SubtileGroup,
    context_settings=dict(help_option_names=["-h", "--help"]),
)
@click.pass_context
@click.version_option(_get_version())
def cli(ctx):
    pass


cli.add_command(generate)
cli.add_command(render)
cli.add_command(validate)
cli.add_command(analyze)

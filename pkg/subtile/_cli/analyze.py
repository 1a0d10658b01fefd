import click

from .group import group
from .metric import metric
from .statistics import admissible, code, patches, repetitivity
from .structure import periods, predecessors, recognize


@click.group()
@click.pass_context
def analyze(ctx):
    """ Analyze a tiling system or its patches. """
    pass


analyze.add_command(patches)
analyze.add_command(admissible)
analyze.add_command(repetitivity)
analyze.add_command(code)
analyze.add_command(periods)
analyze.add_command(predecessors)
analyze.add_command(recognize)
analyze.add_command(metric)
analyze.add_command(group)

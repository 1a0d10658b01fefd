import click

from ._common import cap_option, emit, out_option, resolve_system, start, verbose_option


def _orientation_group(ref, compute, radius, level, cap, verbose):
    from os.path import exists

    from .._config import config
    from ..groups import expected_orientation_group, relative_orientation_group

    sys = resolve_system(ref)
    if not compute and not exists(ref):
        G = expected_orientation_group(sys.name)
        if G is not None:
            return sys, G, "catalog"
    r = sys.inner_radius if radius is None else radius
    if level is None:
        level = config["analysis.recognition_level"]
    G = relative_orientation_group(sys, r, level, cap=cap, verbose=verbose)
    return sys, G, "computed"


def _describe(sys, G, source):
    from ..groups import abstract_type, g_rel_descriptor

    return {
        "system": sys.name,
        "source": source,
        "group": G.to_dict(),
        "abstract_type": list(abstract_type(G)),
        "g_rel": g_rel_descriptor(G)._asdict(),
    }


@click.command()
@click.pass_context
@click.argument("system")
@click.option(
    "--compare",
    default=None,
    help="Second system whose orientation group is compared with the first.",
)
@click.option(
    "--compute/--catalog",
    default=False,
    help="Compute the groups from congruent ball patches instead of reading the "
    "catalog. Systems read from files are always computed.",
)
@click.option(
    "--radius",
    "-r",
    type=click.FloatRange(min=0, min_open=True),
    default=None,
    help="Ball radius of the congruence search. Defaults to the inner radius.",
)
@click.option(
    "--level", type=click.IntRange(min=0), default=None, help="Supertile level."
)
@cap_option
@out_option
@verbose_option
def group(ctx, system, compare, compute, radius, level, cap, out, verbose):
    """
    Relative orientation group of SYSTEM, and its relation to another one.
    """
    from ..groups import subgroup_relation

    start(verbose)
    args = (compute, radius, level, cap, verbose)
    sys, G, source = _orientation_group(system, *args)
    doc = _describe(sys, G, source)
    if compare is not None:
        other, H, other_source = _orientation_group(compare, *args)
        rel = subgroup_relation(G, H)
        doc["compare"] = _describe(other, H, other_source)
        doc["relation"] = rel.relation
        doc["n"] = rel.index
        doc["inner"] = rel.inner
        doc["equal"] = rel.relation == "equal"
    emit(doc, out)

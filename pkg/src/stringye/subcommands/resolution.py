import logging

from stringye.algebra import bipoly_to_json, stringy_to_json
from stringye.algebra.text import coefficient_to_json
from stringye.fixtures import load_fixture
from stringye.readers import load_resolution
from stringye.resolution import ResolutionMode, stringy_euler, stringy_value
from stringye.resolution.data import stratum_order
from stringye.subcommands.common import emit

logger = logging.getLogger(__name__)


def _stratum_text(stratum) -> str:
    return "{" + ",".join(sorted(stratum)) + "}"


def _strata_lines(prefix: str, strata) -> list:
    return [f"H({prefix}_{_stratum_text(s)}) = {strata[s]}" for s in sorted(strata, key=stratum_order)]


def _strata_document(strata) -> list:
    return [{"subset": sorted(s), "hodge": bipoly_to_json(strata[s])} for s in sorted(strata, key=stratum_order)]


def run_resolution(args):
    if args.fixture:
        r = load_fixture(args.fixture)
    else:
        r = load_resolution(args.input)
    logger.info("loaded %d components and %d strata", len(r.components), len(r.open_strata))

    value = stringy_value(r)
    label = "E_st" if r.mode is ResolutionMode.FULL_VARIETY else "contribution"
    document = {"mode": str(r.mode), "dimension": r.dimension, label: stringy_to_json(value)}

    if args.contribution:
        lines = [str(value)]
    else:
        lines = [f"mode = {r.mode}", f"dimension = {r.dimension}"]
        if r.description:
            lines.append(f"description = {r.description}")
        lines += [f"a_{c.id} = {c.discrepancy}" for c in r.components]
        lines += _strata_lines("D°", r.open_strata)
        lines.append(f"{label} = {value}")
        document["components"] = [{"id": c.id, "discrepancy": coefficient_to_json(c.discrepancy)} for c in r.components]
        document["open_strata"] = _strata_document(r.open_strata)

    if args.closed:
        closed = r.closed_strata()
        lines += _strata_lines("D", closed)
        document["closed_strata"] = _strata_document(closed)

    if args.euler:
        euler = stringy_euler(r)
        lines.append(f"euler = {euler}")
        document["euler"] = coefficient_to_json(euler)

    emit(args, lines, document)
    return 0

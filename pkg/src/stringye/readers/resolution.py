"""Reading and writing resolution data files.

A file is a JSON or YAML document validated against ``resolution_schema.yaml``::

    dimension: 2
    mode: fullVariety
    strata_kind: open
    components:
      - {id: E, discrepancy: 0}
    strata:
      - {subset: [], hodge: "(uv)^2 - 1"}
      - {subset: [E], hodge: [{i: 1, j: 1, coeff: 1}, {i: 0, j: 0, coeff: 1}]}

``hodge`` is either a polynomial string or an array of monomials; discrepancies
and coefficients are integers or ``"p/q"`` strings.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

import yaml
from cerberus import Validator

from stringye.algebra import BiPoly, bipoly_from_json, bipoly_to_json, parse_bipoly
from stringye.algebra.text import coefficient_to_json, parse_coefficient
from stringye.errors import InvalidResolutionFile, MalformedExpression
from stringye.resolution import Component, ResolutionData, ResolutionMode, StrataKind
from stringye.resolution.data import stratum_order

logger = logging.getLogger(__name__)

SCHEMA_FILE = Path(__file__).parent / "resolution_schema.yaml"


def _load_schema() -> Dict[str, Any]:
    with SCHEMA_FILE.open() as f:
        return yaml.safe_load(f)


def _read_document(path: Path) -> Any:
    try:
        with path.expanduser().resolve().open() as f:
            if path.suffix.lower() == ".json":
                return json.load(f)
            return yaml.safe_load(f)
    except FileNotFoundError as err:
        raise InvalidResolutionFile(f"resolution file {path} does not exist") from err
    except (json.JSONDecodeError, yaml.YAMLError) as err:
        raise InvalidResolutionFile(f"cannot parse {path}: {err}") from err


def _parse_hodge(value: Union[str, list]) -> BiPoly:
    if isinstance(value, str):
        return parse_bipoly(value)
    return bipoly_from_json(value)


def parse_resolution(document: Any) -> ResolutionData:
    """Validate a decoded document and convert it to :class:`ResolutionData`.

    Raises:
        InvalidResolutionFile: when the document does not follow the schema.
    """
    if not isinstance(document, dict):
        raise InvalidResolutionFile("a resolution document must be a mapping")
    validator = Validator(_load_schema())
    if not validator.validate(document):
        raise InvalidResolutionFile(f"Resolution validation errors: {validator.errors}")
    document = validator.document
    try:
        components = [
            Component(entry["id"], parse_coefficient(entry["discrepancy"])) for entry in document["components"]
        ]
        strata = {}
        for entry in document["strata"]:
            stratum = frozenset(entry["subset"])
            if stratum in strata:
                raise InvalidResolutionFile(f"stratum {sorted(stratum)} is listed twice")
            strata[stratum] = _parse_hodge(entry["hodge"])
    except MalformedExpression as err:
        raise InvalidResolutionFile(f"invalid polynomial in resolution data: {err}") from err
    mode = ResolutionMode(document["mode"])
    description = document.get("description", "")
    if StrataKind(document["strata_kind"]) is StrataKind.CLOSED:
        return ResolutionData.from_closed(components, strata, document["dimension"], mode, description)
    return ResolutionData(tuple(components), strata, document["dimension"], mode, description)


def load_resolution(path: Union[str, Path]) -> ResolutionData:
    path = Path(path)
    data = parse_resolution(_read_document(path))
    logger.info("loaded %d components and %d strata from %s", len(data.components), len(data.open_strata), path)
    return data


def resolution_to_document(r: ResolutionData) -> Dict[str, Any]:
    """Open-strata document of ``r``; :func:`parse_resolution` inverts it."""
    document = {
        "dimension": r.dimension,
        "mode": str(r.mode),
        "strata_kind": str(StrataKind.OPEN),
        "components": [
            {"id": component.id, "discrepancy": coefficient_to_json(component.discrepancy)} for component in r.components
        ],
        "strata": [
            {"subset": sorted(stratum), "hodge": bipoly_to_json(poly)}
            for stratum, poly in sorted(r.open_strata.items(), key=lambda item: stratum_order(item[0]))
        ],
    }
    if r.description:
        document["description"] = r.description
    return document


def dump_resolution(r: ResolutionData) -> str:
    return json.dumps(resolution_to_document(r), indent=2, sort_keys=True)

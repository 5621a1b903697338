"""Bundled resolution data of the worked six-dimensional example."""

from importlib.resources import as_file, files
from typing import List

from stringye.readers.resolution import load_resolution
from stringye.resolution import ResolutionData

INFINITY_CHAIN = "infinity_chain"
BIG_DIAGRAM = "big_diagram"


def fixture_names() -> List[str]:
    return sorted(entry.name.removesuffix(".yaml") for entry in files(__name__).iterdir() if entry.name.endswith(".yaml"))


def load_fixture(name: str) -> ResolutionData:
    resource = files(__name__).joinpath(f"{name}.yaml")
    if not resource.is_file():
        raise KeyError(f"unknown fixture {name!r}, expected one of {fixture_names()}")
    with as_file(resource) as path:
        return load_resolution(path)

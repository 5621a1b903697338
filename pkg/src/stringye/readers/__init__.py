from stringye.readers.expression import load_expression
from stringye.readers.resolution import dump_resolution, load_resolution, parse_resolution, resolution_to_document

__all__ = ["dump_resolution", "load_expression", "load_resolution", "parse_resolution", "resolution_to_document"]

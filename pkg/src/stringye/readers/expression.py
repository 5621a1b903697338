from pathlib import Path
from typing import Union

from stringye.algebra import StringyRational, read_expression
from stringye.errors import MalformedExpression


def load_expression(path: Union[str, Path]) -> StringyRational:
    """Read one rational function in canonical rendering from ``path``."""
    path = Path(path).expanduser()
    try:
        content = path.read_text()
    except FileNotFoundError as err:
        raise MalformedExpression(f"expression file {path} does not exist") from err
    return read_expression(content)

import logging
from pathlib import Path
from typing import Optional

LOGGER_NAME = "stringye"
LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None) -> logging.Logger:
    """Configure the ``stringye`` logger that every module logger propagates to.

    Args:
        level (str): Level of the stderr handler.
        log_file (str, optional): When given, DEBUG and above are also appended to this file.

    Returns:
        logging.Logger: The package logger.
    """
    logger = logging.getLogger(LOGGER_NAME)
    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    # repeated runs in one process must not stack handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    formatter = logging.Formatter(LOG_FORMAT)

    stderr = logging.StreamHandler()
    stderr.setFormatter(formatter)
    stderr.setLevel(level.upper())
    logger.addHandler(stderr)

    if log_file:
        path = Path(log_file).expanduser()
        path.parent.mkdir(parents=True, exist_ok=True)
        file_handler = logging.FileHandler(path)
        file_handler.setFormatter(formatter)
        file_handler.setLevel(logging.DEBUG)
        logger.addHandler(file_handler)

    return logger

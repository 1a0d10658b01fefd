import sys

from loguru import logger

from ._config import config

_FORMAT = "{time:HH:mm:ss} {level: <7} {name}: {message}"


def _stderr(message):
    # Looked up on every record so redirected streams are honored.
    sys.stderr.write(message)


def setup_logging(level=None):
    """
    Route subtile's log records to standard error.

    Parameters
    ----------
    level : str, optional
        Minimum level name (``"DEBUG"``, ``"INFO"``, ...). Defaults to
        ``config["log.level"]``.

    Returns
    -------
    int
        Identifier of the installed loguru sink.
    """
    if level is None:
        level = config["log.level"]
    logger.remove()
    return logger.add(_stderr, level=level.upper(), format=_FORMAT)

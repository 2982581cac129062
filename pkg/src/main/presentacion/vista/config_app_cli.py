import logging
import sys

FORMATO = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def config_logging(verbosidad: int = 0) -> None:
    """-v INFO, -vv DEBUG; por defecto WARNING. Siempre a stderr."""
    nivel = {0: logging.WARNING, 1: logging.INFO}.get(verbosidad, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=nivel, format=FORMATO, force=True)

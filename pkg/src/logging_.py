"""
logging_.py — Configuración de logging compartida por el CLI y los pipelines
"""

import logging
import resource
import sys

from src.utils.config import LOG_LEVEL

FORMATO = "%(levelname)s %(name)s %(message)s"


def configurar_logging(nivel: str = LOG_LEVEL):
    """Logs a stderr para que stdout quede estable."""
    logging.basicConfig(
        level=getattr(logging, str(nivel).upper(), logging.WARNING),
        format=FORMATO,
        stream=sys.stderr,
        force=True,
    )


def mem_mb() -> float:
    """Retorna el uso de memoria RSS actual en MB."""
    try:
        usage = resource.getrusage(resource.RUSAGE_SELF)
        return usage.ru_maxrss / 1024  # Linux reporta en KB
    except Exception:
        return 0.0

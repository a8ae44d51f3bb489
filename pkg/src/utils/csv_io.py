"""
csv_io.py — Escritura centralizada de tablas CSV y logs JSON-lines
Salida estable byte a byte: formato de floats fijo y fin de línea "\n".
"""

import json
import logging
import sys
import time
from pathlib import Path
from typing import Iterable

import pandas as pd

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.4f"


def _nativo(valor):
    """Escalares de numpy → tipos nativos para json."""
    if hasattr(valor, "item"):
        return valor.item()
    return str(valor)


def _abrir(destino):
    if destino is None or str(destino) == "-":
        return sys.stdout, False
    path = Path(destino)
    path.parent.mkdir(parents=True, exist_ok=True)
    return open(path, "w", encoding="utf-8", newline=""), True


def escribir_tabla(df: pd.DataFrame, destino=None) -> None:
    """Escribe df como CSV (stdout si destino es None o "-")."""
    t0 = time.time()
    fh, cerrar = _abrir(destino)
    try:
        df.to_csv(fh, index=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    finally:
        if cerrar:
            fh.close()
    logger.info(f"CSV: {len(df)} filas → {destino or 'stdout'} ({time.time() - t0:.2f}s)")


def escribir_jsonl(filas: Iterable[dict], destino) -> int:
    """Una línea JSON por fila, claves ordenadas. Retorna la cantidad escrita."""
    fh, cerrar = _abrir(destino)
    n = 0
    try:
        for fila in filas:
            fh.write(json.dumps(fila, sort_keys=True, ensure_ascii=False, default=_nativo) + "\n")
            n += 1
    finally:
        if cerrar:
            fh.close()
    logger.info(f"JSONL: {n} filas → {destino or 'stdout'}")
    return n

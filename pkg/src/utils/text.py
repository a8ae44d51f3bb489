"""
text.py — Normalización de nombres y formato estable de la salida del CLI
"""

import re
import unicodedata

from src.models import EvalReport


def normalize(txt: str) -> str:
    """Normaliza nombres de heurísticas / podas: sin acentos, lowercase, separador '-'."""
    if not txt:
        return ""
    s = (
        unicodedata.normalize("NFD", str(txt))
        .encode("ascii", "ignore")
        .decode("ascii")
        .lower()
        .strip()
    )
    return re.sub(r"[\s_]+", "-", s)


def render_reporte(rep: EvalReport, field, extra: dict = None) -> str:
    """Bloque `clave: valor`, una línea por campo, en orden fijo."""
    lineas = [f"value: {field.render(rep.value)}"]
    for clave, valor in (extra or {}).items():
        lineas.append(f"{clave}: {valor}")
    for clave, valor in rep.stats().items():
        lineas.append(f"{clave}: {valor}")
    return "\n".join(lineas)


def render_tabla_coeficientes(tabla: dict) -> str:
    """T(x, y) = Σ t_ij x^i y^j como texto, términos por (i, j) creciente."""
    if not tabla:
        return "0"
    terminos = []
    for (i, j), c in sorted(tabla.items()):
        mono = "*".join(
            parte for parte in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
            ) if parte
        )
        if not mono:
            terminos.append(str(c))
        elif c == 1:
            terminos.append(mono)
        else:
            terminos.append(f"{c}*{mono}")
    return " + ".join(terminos)

"""
config.py — Constantes y configuración central
"""

import os

# ─── Entorno ───
# valores mal formados quedan en el default y se reportan en main() con exit 1
ERRORES_ENTORNO: list[str] = []


def _numero_env(nombre: str, defecto, tipo=int):
    crudo = os.environ.get(nombre, "").strip()
    if not crudo:
        return defecto
    try:
        return tipo(crudo)
    except ValueError:
        ERRORES_ENTORNO.append(f"{nombre}={crudo!r}: se esperaba un {tipo.__name__}")
        return defecto


THREADS = _numero_env("TUTTESIM_THREADS", 1)
LOG_LEVEL = os.environ.get("TUTTESIM_LOG_LEVEL", "WARNING")
FLOAT_TOL = _numero_env("TUTTESIM_FLOAT_TOL", 1e-9, float)

# ─── Presupuestos de los oráculos exponenciales ───
MAX_ARISTAS_ORACULO = 24     # multiaristas en la expansión por subconjuntos
MAX_ESPINES_ORACULO = 16     # vértices en sumas de Potts / Ising
MAX_QUBITS_ORACULO = 20      # qubits del statevector
MAX_DIM_GAUSS = 24           # dimensión del código en la suma de Gauss
MAX_DIM_BROWN_BRUTO = 20     # autochequeo por fuerza bruta del invariante de Brown

# ─── Heurísticas (en el orden de las tablas) ───
HEURISTICAS = [
    "non-vertigan",
    "vertex-order",
    "min-degree",
    "max-degree",
    "min-degree-sum",
    "max-degree-sum",
]

# ─── Podas que se pueden apagar desde el CLI (--no-<poda>) ───
PODAS = [
    "components",
    "bicomponents",
    "multicycle",
    "vertigan",
    "planar-fkt",
    "mod-4k-simplify",
]

# ─── Tabla de resultados del bench ───
COLUMNAS_TABLA = [
    "heuristic",    # fila
    "sum",          # suma de hojas
    "mean",         # media por instancia
    "mean_dev",     # desvío medio absoluto
    "empty",        # #Empty
    "vertigan",     # #Vertigan
    "multicycle",   # #Multicycle
    "planar",       # #Planar
]

# ─── Bench ───
K_BENCH = 2                  # θ = π/8
P_SPARSE = 0.5

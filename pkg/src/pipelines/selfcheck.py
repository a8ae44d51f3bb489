"""
selfcheck.py — Identidades Potts / Ising / IQP / Tutte sobre instancias aleatorias chicas
Cada chequeo compara dos rutas independientes y cuenta fallas.
"""

from __future__ import annotations

import cmath
import logging
import math
import time
from typing import Any, Callable, Dict, List

import networkx as nx
import numpy as np

from src.core.clifford import BinaryCode, brown_invariant, tutte_clifford_point
from src.core.escalares import CycloField, quantum_point
from src.core.multigrafo import Multigraph
from src.core.oraculos import (
    OracleBudget,
    brown_invariant_bruto,
    ising_partition,
    potts_partition,
    potts_tutte_point,
    statevector,
    statevector_amplitude,
    tutte_subset_expansion,
)
from src.core.tutte import evaluate
from src.logging_ import mem_mb
from src.models import Circuit, EvalConfig, Gate, WeightedGraph
from src.pipelines.circuitos import amplitude, graph_to_xprogram
from src.utils.config import FLOAT_TOL, MAX_DIM_BROWN_BRUTO

logger = logging.getLogger(__name__)


# ─── Generadores aleatorios ───

def multigrafo_aleatorio(rng: np.random.Generator, max_n: int = 6, max_aristas: int = 8,
                         max_mult: int = 9, p_lazo: float = 0.1) -> Multigraph:
    n = int(rng.integers(1, max_n + 1))
    triples = []
    for _ in range(int(rng.integers(0, max_aristas + 1))):
        u = int(rng.integers(0, n))
        v = u if rng.random() < p_lazo or n == 1 else int(rng.integers(0, n))
        triples.append((u, v, int(rng.integers(1, max_mult + 1))))
    return Multigraph.from_edges(n, triples)


def grafo_ponderado_aleatorio(rng: np.random.Generator, n: int, k: int, p: float = 0.6,
                              pesos_vertices: bool = True) -> WeightedGraph:
    aristas = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                aristas[(u, v)] = int(rng.integers(0, 8 * k))
    vertices = {}
    if pesos_vertices:
        vertices = {v: int(rng.integers(0, 8 * k)) for v in range(n)}
    return WeightedGraph(n, k, aristas, vertices)


def circuito_aleatorio(rng: np.random.Generator, n: int, compuertas: int, k: int,
                       max_h: int = 3) -> Circuit:
    gates = []
    hadamards = 0
    for _ in range(compuertas):
        tipo = rng.choice(["H", "RX", "RXX"] if n > 1 else ["H", "RX"])
        if tipo == "H" and hadamards >= max_h:
            tipo = "RX"
        if tipo == "H":
            hadamards += 1
            gates.append(Gate("H", (int(rng.integers(0, n)),)))
        elif tipo == "RX":
            gates.append(Gate("RX", (int(rng.integers(0, n)),), int(rng.integers(0, 8 * k))))
        else:
            q1, q2 = (int(q) for q in rng.choice(n, size=2, replace=False))
            gates.append(Gate("RXX", (q1, q2), int(rng.integers(0, 8 * k))))
    return Circuit(n, k, tuple(gates))


def codigo_aleatorio(rng: np.random.Generator, max_dim: int = 8, max_largo: int = 12) -> BinaryCode:
    largo = int(rng.integers(1, max_largo + 1))
    filas = rng.integers(0, 2, size=(int(rng.integers(0, max_dim + 1)), largo))
    return BinaryCode.from_generators(filas, largo)


# ─── Chequeos ───

def _cerca(a: complex, b: complex, tol: float = FLOAT_TOL) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def _componentes(wg: WeightedGraph) -> List[List[int]]:
    G = nx.Graph()
    G.add_nodes_from(range(wg.n))
    G.add_edges_from(wg.edges)
    return sorted((sorted(c) for c in nx.connected_components(G)), key=lambda c: c[0])


def _pesos_complejos(rng, claves) -> Dict:
    return {c: complex(rng.normal(0, 0.5), rng.normal(0, 0.5)) for c in claves}


def check_potts_apice(rng: np.random.Generator, q: int | None = None) -> bool:
    """q^{κ(E)} Z_Potts(G; q, Ω, Υ) = Z_Potts(G′; q, Ω ∪ Υ, 0) con un ápice por componente."""
    n = int(rng.integers(1, 6))
    q = q or int(rng.choice([2, 3]))
    wg = grafo_ponderado_aleatorio(rng, n, 1)
    omega = _pesos_complejos(rng, wg.edges)
    upsilon = _pesos_complejos(rng, range(n))
    izquierda = q ** len(_componentes(wg)) * potts_partition(n, omega, upsilon, q)
    aumentado = [(u, v, w) for (u, v), w in omega.items()]
    comps = _componentes(wg)
    for i, comp in enumerate(comps):
        aumentado += [(v, n + i, upsilon[v]) for v in comp]
    derecha = potts_partition(n + len(comps), aumentado, {}, q)
    return _cerca(izquierda, derecha)


def check_potts_tutte(rng: np.random.Generator, q: int | None = None) -> bool:
    """Z_Potts(G; q, w) = q^{κ(E)} (e^w − 1)^{r(G)} T(G; x, y) sobre la hipérbola (x−1)(y−1) = q."""
    g = multigrafo_aleatorio(rng, max_n=5, max_aristas=6, max_mult=3)
    q = q or int(rng.choice([2, 3]))
    w = complex(rng.normal(0, 0.5), rng.normal(0, 0.5))
    x, y = potts_tutte_point(q, w)
    pesos = [(e.u, e.v, e.mult * w) for e in g.edges]
    n = max(g.vertices) + 1
    izquierda = potts_partition(n, pesos, {}, q)
    derecha = q ** g.kappa * (cmath.exp(w) - 1) ** g.rank * tutte_subset_expansion(g, x, y)
    return _cerca(izquierda, derecha)


def check_potts_ising(rng: np.random.Generator) -> bool:
    """Z_Potts(G; 2, Ω, Υ) = w_G · Z_Ising(G; Ω/2, Υ/2)."""
    n = int(rng.integers(1, 7))
    wg = grafo_ponderado_aleatorio(rng, n, 1)
    omega = _pesos_complejos(rng, wg.edges)
    upsilon = _pesos_complejos(rng, range(n))
    w_g = cmath.exp(sum(omega.values()) / 2 + sum(upsilon.values()) / 2)
    izquierda = potts_partition(n, omega, upsilon, 2)
    derecha = w_g * ising_partition(
        n, {c: w / 2 for c, w in omega.items()}, {v: w / 2 for v, w in upsilon.items()}
    )
    return _cerca(izquierda, derecha)


def check_iqp_ising(rng: np.random.Generator) -> bool:
    """ψ_{X_G}(0) = 2^{−|V|} Z_Ising(G; iΩ, iΥ)."""
    n = int(rng.integers(1, 7))
    k = int(rng.integers(1, 4))
    wg = grafo_ponderado_aleatorio(rng, n, k)
    theta = math.pi / (4 * k)
    psi = complex(statevector(graph_to_xprogram(wg))[0])
    z = ising_partition(
        n,
        {c: 1j * theta * m for c, m in wg.edges.items()},
        {v: 1j * theta * m for v, m in wg.vertex_weights.items()},
    )
    return _cerca(psi, z / 2 ** n)


def check_motor_oraculo(rng: np.random.Generator) -> bool:
    """evaluate == expansión por subconjuntos, exacto."""
    k = int(rng.integers(1, 4))
    g = multigrafo_aleatorio(rng, max_aristas=7, max_mult=4 * k + 1)
    point = quantum_point(k, CycloField(k))
    return evaluate(g, EvalConfig(k=k), point).value == tutte_subset_expansion(g, point.x, point.y)


def check_clifford_oraculo(rng: np.random.Generator) -> bool:
    """T(G; −i, i) por invariante de Brown == expansión por subconjuntos."""
    g = multigrafo_aleatorio(rng, max_aristas=7, max_mult=3)
    point = quantum_point(1)
    return tutte_clifford_point(g, point.field) == tutte_subset_expansion(g, point.x, point.y)


def check_brown_bruto(rng: np.random.Generator) -> bool:
    """σ canónico == σ leído de la suma de Gauss."""
    c = codigo_aleatorio(rng)
    return brown_invariant(c) == brown_invariant_bruto(c, OracleBudget(max_dim_gauss=MAX_DIM_BROWN_BRUTO))


def check_amplitud_statevector(rng: np.random.Generator) -> bool:
    """⟨0| C |0⟩ por Tutte == statevector, backend float."""
    k = 2
    c = circuito_aleatorio(rng, int(rng.integers(1, 4)), int(rng.integers(1, 7)), k)
    valor = amplitude(c, EvalConfig(k=k, backend="float")).value
    return _cerca(complex(valor), statevector_amplitude(c))


CHEQUEOS: Dict[str, Callable[[np.random.Generator], bool]] = {
    "potts-apice": check_potts_apice,
    "potts-tutte": check_potts_tutte,
    "potts-ising": check_potts_ising,
    "iqp-ising": check_iqp_ising,
    "motor-oraculo": check_motor_oraculo,
    "clifford-oraculo": check_clifford_oraculo,
    "brown-bruto": check_brown_bruto,
    "amplitud-statevector": check_amplitud_statevector,
}


def ejecutar_selfcheck(casos: int = 20, seed: int = 0) -> Dict[str, Any]:
    """Corre cada chequeo `casos` veces con un stream propio. Retorna resultados y ok global."""
    t0 = time.time()
    logger.info(f"=== SELFCHECK casos={casos} seed={seed} | RAM: {mem_mb():.0f} MB ===")
    resultados = []
    semillas = np.random.SeedSequence(seed).spawn(len(CHEQUEOS))
    for (nombre, chequeo), semilla in zip(CHEQUEOS.items(), semillas):
        rng = np.random.default_rng(semilla)
        fallas = 0
        for _ in range(casos):
            try:
                if not chequeo(rng):
                    fallas += 1
            except Exception:
                logger.exception(f"Error en chequeo {nombre}")
                fallas += 1
        resultados.append({"check": nombre, "casos": casos, "fallas": fallas})
        logger.info(f"  {nombre}: {casos - fallas}/{casos}")
    elapsed = round(time.time() - t0, 2)
    logger.info(f"=== SELFCHECK DONE en {elapsed}s ===")
    return {"checks": resultados, "ok": all(r["fallas"] == 0 for r in resultados), "elapsed": elapsed}

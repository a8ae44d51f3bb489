"""
circuitos.py — Circuitos sobre {H, RX, RXX} → X-programa → grafo ponderado → multigrafo aumentado → amplitud.

⟨0^n| C |0^n⟩ = √2^m · ψ(0^{n+m}), con m la cantidad de Hadamards, y
ψ(0) = e^{iθ·fase} · e^{iθ(r−|E′|)} (i sin θ)^r · T(G′; x, y).
"""

from __future__ import annotations

import logging
import time

import networkx as nx

from src.core.clifford import tutte_clifford_point
from src.core.escalares import CycloField, QuantumPoint, quantum_point
from src.core.multigrafo import Multigraph
from src.core.tutte import evaluate
from src.errores import EntradaInvalida
from src.models import Circuit, EvalConfig, EvalReport, WeightedGraph, XProgram

logger = logging.getLogger(__name__)


# ─── Compilación ───

def compile_circuit(c: Circuit) -> tuple[XProgram, int, tuple]:
    """X-programa equivalente, cantidad de Hadamards y máscara de postselección.

    Cada H sobre el cable t agrega un ancilla a con la compuerta
    e^{iπ/4 (I−X)_t (I−X)_a} = e^{iπ/4} · (−e^{3iπ/4 X_t}) · (−e^{3iπ/4 X_a}) · e^{iπ/4 X_t X_a},
    es decir filas {t}×3k, {a}×3k, {t,a}×k y fase ζ^k. El cable del qubit pasa al ancilla
    y el cable viejo queda postseleccionado en 0.
    """
    k = c.k
    cable = list(range(c.n))
    columnas = c.n
    filas: list[tuple[tuple[int, ...], int]] = []
    fase = 0
    postseleccion = [False] * c.n
    for g in c.gates:
        if g.kind == "RX":
            filas.append(((cable[g.qubits[0]],), g.m))
        elif g.kind == "RXX":
            filas.append(((cable[g.qubits[0]], cable[g.qubits[1]]), g.m))
        else:
            t = cable[g.qubits[0]]
            a = columnas
            columnas += 1
            postseleccion[t] = True
            postseleccion.append(False)
            filas += [((t,), 3 * k), ((a,), 3 * k), ((t, a), k)]
            fase += k
            cable[g.qubits[0]] = a
    xp = XProgram.build(columnas, k, filas, fase)
    return xp, c.hadamards, tuple(postseleccion)


def xprogram_to_graph(xp: XProgram) -> WeightedGraph:
    """Filas de peso 2 → aristas, de peso 1 → vértices; multiplicidades sumadas."""
    aristas: dict[tuple[int, int], int] = {}
    vertices: dict[int, int] = {}
    for fila, m in zip(xp.rows, xp.mults):
        if len(fila) == 1:
            vertices[fila[0]] = vertices.get(fila[0], 0) + m
        elif len(fila) == 2:
            aristas[fila] = aristas.get(fila, 0) + m
        else:
            raise EntradaInvalida(f"fila de peso {len(fila)} no soportada: {fila}")
    return WeightedGraph(xp.n, xp.k, aristas, vertices)


def graph_to_xprogram(wg: WeightedGraph) -> XProgram:
    """X-programa inducido por el grafo: una fila por arista y una por vértice con peso."""
    filas = [(par, m) for par, m in sorted(wg.edges.items()) if m > 0]
    filas += [((v,), m) for v, m in sorted(wg.vertex_weights.items()) if m > 0]
    return XProgram.build(wg.n, wg.k, filas)


def augment_graph(wg: WeightedGraph) -> Multigraph:
    """Un ápice por componente conexa; cada peso de vértice m_v es una multiarista v–ápice."""
    G = nx.Graph()
    G.add_nodes_from(range(wg.n))
    G.add_edges_from(par for par, m in wg.edges.items() if m > 0)
    componentes = sorted((sorted(c) for c in nx.connected_components(G)), key=lambda c: c[0])
    triples = [(u, v, m) for (u, v), m in wg.edges.items() if m > 0]
    for i, comp in enumerate(componentes):
        apice = wg.n + i
        triples += [(v, apice, wg.vertex_weights[v]) for v in comp if wg.vertex_weights.get(v, 0) > 0]
    return Multigraph.from_edges(wg.n + len(componentes), triples)


# ─── Amplitudes ───

def _prefactor(point: QuantumPoint, g: Multigraph, fase: int):
    """ζ^{fase} · ζ^{r−|E|} · (i sin θ)^r."""
    f = point.field
    r = g.rank
    return f.zeta(fase + r - g.total_aristas) * point.i_sin_theta ** r


def xprogram_amplitude(xp: XProgram, cfg: EvalConfig, point: QuantumPoint | None = None) -> EvalReport:
    """ψ_{(P,θ)}(0^n) con estadísticas del árbol."""
    if xp.k != cfg.k:
        raise EntradaInvalida(f"el programa usa k={xp.k} y la configuración k={cfg.k}")
    if point is None:
        point = quantum_point(cfg.k, cfg.cuerpo())
    g = augment_graph(xprogram_to_graph(xp))
    reporte = evaluate(g, cfg, point)
    reporte.value = point.field.check(_prefactor(point, g, xp.phase) * reporte.value)
    return reporte


def amplitude(c: Circuit, cfg: EvalConfig) -> EvalReport:
    """⟨0^n| C |0^n⟩."""
    t0 = time.time()
    if c.k != cfg.k:
        raise EntradaInvalida(f"el circuito usa k={c.k} y la configuración k={cfg.k}")
    point = quantum_point(cfg.k, cfg.cuerpo())
    xp, m, _ = compile_circuit(c)
    reporte = xprogram_amplitude(xp, cfg, point)
    reporte.value = point.field.check(reporte.value * point.field.sqrt2() ** m)
    logger.info(
        f"amplitude: {c.n} qubits, {len(c.gates)} compuertas, {m} H → "
        f"{len(xp.rows)} filas, hojas={reporte.total_leaves}, {time.time() - t0:.2f}s"
    )
    return reporte


def amplitude_for_outcome(xp: XProgram, outcome, cfg: EvalConfig):
    """ψ(x) = −i · ψ_{P ∥ x^{k′}}(0) con k′ = 2k (θ = π/4k = π/2k′)."""
    bits = [int(b) for b in outcome]
    if len(bits) != xp.n:
        raise EntradaInvalida(f"outcome de largo {len(bits)} para {xp.n} columnas")
    if xp.k != cfg.k:
        raise EntradaInvalida(f"grilla incompatible: programa k={xp.k}, configuración k={cfg.k}")
    soporte = [j for j, b in enumerate(bits) if b]
    ampliado = xp.append(soporte, 2 * xp.k)
    point = quantum_point(cfg.k, cfg.cuerpo())
    valor = xprogram_amplitude(ampliado, cfg, point).value
    return point.field.check(valor * point.field.zeta(-2 * xp.k))


def clifford_amplitude(c: Circuit):
    """Amplitud de un circuito con k = 1 directo por la fórmula de Clifford (sin recursión)."""
    if c.k != 1:
        raise EntradaInvalida(f"la ruta Clifford requiere k=1 (recibido k={c.k})")
    point = quantum_point(1, CycloField(1))
    xp, m, _ = compile_circuit(c)
    g = augment_graph(xprogram_to_graph(xp))
    t = tutte_clifford_point(g, point.field)
    return _prefactor(point, g, xp.phase) * t * point.field.sqrt2() ** m

"""
tutte.py — Evaluación de T(G; x, y) en puntos cuánticos por borrado–contracción con podas.

Cada nodo del árbol aplica, en este orden: quitar vértices aislados, reducción
mod 4k, lazos y puentes en lote, hoja vacía, hoja Vertigan, separación en
componentes, hoja multiciclo, hoja planar (FKT) y, si nada aplica, ramifica
sobre la multiarista elegida por la heurística (primero borrado, después
contracción).
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from src.core.clifford import vertigan_reduce
from src.core.escalares import QuantumPoint, quantum_point
from src.core.fkt import planar_value
from src.core.multigrafo import (
    EdgeClass,
    Multigraph,
    biconnected_components,
    classify_edge,
    connected_components,
    contract,
    delete,
    es_multiciclo,
    es_planar,
)
from src.core.reglas import (  # noqa: F401  (reexportadas)
    looped_forest_value,
    multicycle_value,
    reduce_loops_coloops,
    simplify_mod_4k,
)
from src.errores import ContratoViolado
from src.models import EvalConfig, EvalReport, Heuristic

logger = logging.getLogger(__name__)


# ─── Heurísticas ───

def _candidatas(g: Multigraph) -> list:
    ordinarias = [e for e in g.edges if classify_edge(g, e.id) == EdgeClass.ORDINARY]
    if ordinarias:
        return ordinarias
    return [e for e in g.edges if not e.es_lazo]


def select_edge(g: Multigraph, heuristic: Heuristic | str, k: int) -> int:
    """Id de la multiarista a ramificar; desempates por menor vértice y menor id."""
    heuristic = Heuristic(heuristic)
    candidatas = _candidatas(g)
    if not candidatas:
        raise ContratoViolado("no hay multiaristas sobre las que ramificar")

    if heuristic == Heuristic.NON_VERTIGAN:
        no_vertigan = [e for e in candidatas if e.mult % k]
        return (no_vertigan or candidatas)[0].id

    if heuristic == Heuristic.VERTEX_ORDER:
        v = min(w for e in candidatas for w in e.par)
        return min((e for e in candidatas if v in e.par), key=lambda e: e.otro(v)).id

    if heuristic in (Heuristic.MIN_DEGREE, Heuristic.MAX_DEGREE):
        signo = 1 if heuristic == Heuristic.MIN_DEGREE else -1
        vertices = sorted({w for e in candidatas for w in e.par})
        v = min(vertices, key=lambda w: (signo * g.grado(w), w))
        return next(e.id for e in candidatas if v in e.par)

    signo = 1 if heuristic == Heuristic.MIN_DEGREE_SUM else -1
    return min(candidatas, key=lambda e: (signo * (g.grado(e.u) + g.grado(e.v)), e.id)).id


def component_split(g: Multigraph, cfg: EvalConfig | None = None) -> list[Multigraph]:
    """Bloques biconexos (o componentes conexas si sólo esa poda está activa)."""
    if cfg is None or cfg.bicomponents:
        return biconnected_components(g)
    if cfg.components:
        return connected_components(g)
    return [g]


# ─── Motor ───

def _subarbol(g: Multigraph, cfg: EvalConfig) -> EvalReport:
    return evaluate(g, cfg)


class _Motor:
    def __init__(self, cfg: EvalConfig, point: QuantumPoint):
        self.cfg = cfg
        self.point = point
        self.field = point.field
        self.reporte = EvalReport()
        self._paralelo = cfg.threads > 1

    def _es_vertigan(self, g: Multigraph) -> bool:
        return all(e.mult % self.cfg.k == 0 for e in g.edges)

    def nodo(self, g: Multigraph):
        cfg, point, r = self.cfg, self.point, self.reporte
        r.recursion_nodes += 1
        g = g.without_isolated()
        factor = self.field.one()

        if cfg.mod_4k_simplify:
            g, f = simplify_mod_4k(g, point)
            factor = factor * f
            g = g.without_isolated()

        g, f = reduce_loops_coloops(g, point)
        factor = factor * f
        g = g.without_isolated()

        if g.vacio:
            r.leaves_empty += 1
            return factor

        if cfg.vertigan and self._es_vertigan(g):
            r.leaves_vertigan += 1
            return factor * vertigan_reduce(g, point)

        if cfg.components or cfg.bicomponents:
            piezas = component_split(g, cfg)
            if len(piezas) > 1:
                logger.debug(f"separación en {len(piezas)} piezas")
                for pieza in piezas:
                    if cfg.vertigan and self._es_vertigan(pieza):
                        factor = factor * vertigan_reduce(pieza, point)
                    else:
                        factor = factor * self.nodo(pieza)
                return factor

        if cfg.multicycle and es_multiciclo(g):
            r.leaves_multicycle += 1
            return factor * multicycle_value(g, point)

        if cfg.fkt and es_planar(g):
            r.leaves_planar += 1
            return factor * planar_value(g, point)

        eid = select_edge(g, cfg.heuristic, cfg.k)
        peso = point.y_1(g.edge(eid).mult)
        borrado, contraido = delete(g, eid), contract(g, eid)

        if self._paralelo:
            self._paralelo = False
            return factor * self._ramificar_en_paralelo(borrado, contraido, peso)

        valor_borrado = self.nodo(borrado)
        valor_contraido = self.nodo(contraido)
        return factor * (valor_borrado + peso * valor_contraido)

    def _ramificar_en_paralelo(self, borrado: Multigraph, contraido: Multigraph, peso):
        """Ambos subárboles en procesos aparte; la suma se arma en orden fijo."""
        sub_cfg = replace(self.cfg, threads=1)
        logger.debug("ramificación en paralelo (2 procesos)")
        with ProcessPoolExecutor(max_workers=2) as pool:
            fut_borrado = pool.submit(_subarbol, borrado, sub_cfg)
            fut_contraido = pool.submit(_subarbol, contraido, sub_cfg)
            rep_borrado = fut_borrado.result()
            rep_contraido = fut_contraido.result()
        self.reporte.sumar_stats(rep_borrado)
        self.reporte.sumar_stats(rep_contraido)
        return rep_borrado.value + peso * rep_contraido.value


def evaluate(g: Multigraph, cfg: EvalConfig, point: QuantumPoint | None = None) -> EvalReport:
    """T(g; x_k, y_k) con estadísticas del árbol de cómputo."""
    if point is None:
        point = quantum_point(cfg.k, cfg.cuerpo())
    t0 = time.time()
    motor = _Motor(cfg, point)
    valor = motor.nodo(g)
    reporte = motor.reporte
    reporte.value = point.field.check(valor)
    logger.debug(
        f"evaluate: {len(g.edges)} multiaristas, hojas={reporte.total_leaves}, "
        f"nodos={reporte.recursion_nodes}, {time.time() - t0:.3f}s"
    )
    return reporte

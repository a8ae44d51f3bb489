"""
bench.py — Instancias aleatorias densas / ralas y comparación de heurísticas por cantidad de hojas
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from src.core.escalares import quantum_point
from src.core.tutte import evaluate
from src.errores import DesacuerdoHeuristicas
from src.logging_ import mem_mb
from src.models import EvalConfig, Heuristic, InstanceSpec, WeightedGraph
from src.pipelines.circuitos import augment_graph
from src.utils.config import COLUMNAS_TABLA, HEURISTICAS
from src.utils.csv_io import escribir_jsonl, escribir_tabla

logger = logging.getLogger(__name__)


# ─── Generación ───

def _rng(spec: InstanceSpec) -> np.random.Generator:
    """Un stream PCG64 por índice de instancia."""
    return np.random.default_rng(np.random.SeedSequence(entropy=spec.seed, spawn_key=(spec.index,)))


def gen_instance(spec: InstanceSpec) -> WeightedGraph:
    """Grafo ponderado determinista: multiplicadores uniformes en Z/4k por arista presente."""
    rng = _rng(spec)
    periodo = 4 * spec.k
    aristas = {}
    for u in range(spec.n):
        for v in range(u + 1, spec.n):
            if spec.clase == "sparse" and not rng.random() < spec.p:
                continue
            aristas[(u, v)] = int(rng.integers(0, periodo))
    vertices = {}
    if spec.pesos_vertices:
        vertices = {v: int(m) for v, m in enumerate(rng.integers(0, periodo, size=spec.n))}
    return WeightedGraph(spec.n, spec.k, aristas, vertices)


def gen_suite(clase: str, n: int, count: int, seed: int, k: int = 2, p: float = 0.5,
              pesos_vertices: bool = False) -> List[InstanceSpec]:
    return [InstanceSpec(clase, n, seed, i, k, p, pesos_vertices) for i in range(count)]


# ─── Evaluación ───

def _evaluar_instancia(spec: InstanceSpec, heuristicas: List[str], cfg: EvalConfig) -> List[Dict[str, Any]]:
    """Evalúa una instancia con cada heurística; falla si los valores difieren."""
    g = augment_graph(gen_instance(spec))
    cfg = replace(cfg, k=spec.k, threads=1)
    field = cfg.cuerpo()
    point = quantum_point(spec.k, field)
    filas = []
    referencia = None
    for h in heuristicas:
        t0 = time.time()
        rep = evaluate(g, replace(cfg, heuristic=h), point)
        if referencia is None:
            referencia = (h, rep.value)
        elif not field.equal(rep.value, referencia[1]):
            raise DesacuerdoHeuristicas(
                f"instancia {spec.index}: {h} = {field.render(rep.value)} "
                f"vs {referencia[0]} = {field.render(referencia[1])}"
            )
        logger.info(
            f"  instancia {spec.index} [{h}]: hojas={rep.total_leaves} "
            f"({time.time() - t0:.2f}s)"
        )
        filas.append({
            "instance": spec.index,
            "class": spec.clase,
            "n": spec.n,
            "seed": spec.seed,
            "heuristic": Heuristic(h).value,
            "value": field.render(rep.value),
            **rep.stats(),
        })
    return filas


@dataclass
class SuiteStats:
    """Tabla por heurística (columnas COLUMNAS_TABLA) y filas por instancia."""

    tabla: pd.DataFrame
    instancias: pd.DataFrame

    def fila(self, heuristica: str) -> Dict[str, Any]:
        return self.tabla.set_index("heuristic").loc[heuristica].to_dict()


def _agregar(instancias: pd.DataFrame, heuristicas: List[str]) -> pd.DataFrame:
    grupos = instancias.groupby("heuristic", sort=False)
    tabla = grupos.agg(
        sum=("total_leaves", "sum"),
        mean=("total_leaves", "mean"),
        mean_dev=("total_leaves", lambda s: (s - s.mean()).abs().mean()),
        empty=("empty", "sum"),
        vertigan=("vertigan", "sum"),
        multicycle=("multicycle", "sum"),
        planar=("planar", "sum"),
    )
    tabla = tabla.reindex([Heuristic(h).value for h in heuristicas]).reset_index()
    return tabla[COLUMNAS_TABLA]


def run_suite(specs: List[InstanceSpec], heuristicas: List[str] | None = None,
              cfg: EvalConfig | None = None) -> SuiteStats:
    """Evalúa cada instancia con cada heurística y agrega las hojas por heurística."""
    heuristicas = list(heuristicas or HEURISTICAS)
    cfg = cfg or EvalConfig(k=2, backend="exact")
    filas: List[Dict[str, Any]] = []
    if cfg.threads > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            futuros = [pool.submit(_evaluar_instancia, s, heuristicas, cfg) for s in specs]
            for fut in futuros:
                filas += fut.result()
    else:
        for s in specs:
            filas += _evaluar_instancia(s, heuristicas, cfg)
    instancias = pd.DataFrame(filas)
    return SuiteStats(_agregar(instancias, heuristicas), instancias)


# ─── Pipeline ───

def ejecutar_bench(clase: str, n: int, count: int, seed: int, cfg: EvalConfig,
                   heuristicas: List[str] | None = None, out=None, log_instancias=None,
                   p: float = 0.5, pesos_vertices: bool = False) -> Dict[str, Any]:
    """Corre la suite, escribe la tabla CSV y el log por instancia. Retorna stats."""
    t0 = time.time()
    logger.info(f"=== BENCH {clase} n={n} count={count} seed={seed} | RAM: {mem_mb():.0f} MB ===")
    specs = gen_suite(clase, n, count, seed, cfg.k, p, pesos_vertices)
    stats = run_suite(specs, heuristicas, cfg)
    escribir_tabla(stats.tabla, out)
    if log_instancias:
        escribir_jsonl(stats.instancias.to_dict(orient="records"), log_instancias)
    elapsed = round(time.time() - t0, 2)
    logger.info(f"=== BENCH DONE en {elapsed}s | RAM: {mem_mb():.0f} MB ===")
    return {"instancias": count, "heuristicas": len(stats.tabla), "elapsed": elapsed}

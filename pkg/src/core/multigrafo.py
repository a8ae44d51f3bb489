"""
multigrafo.py — Multigrafos inmutables con menores (borrado / contracción) y sondas estructurales.

Vértices: enteros 0..n−1. Cada multiarista guarda {id, u ≤ v, multiplicidad};
un lazo es u == v. Hay a lo sumo un registro por par de extremos. Las
operaciones devuelven grafos nuevos; los ids de arista sobreviven a los
borrados y el desempate es siempre "menor id".
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable

import networkx as nx

from src.errores import EntradaInvalida

logger = logging.getLogger(__name__)


class EdgeClass(str, Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    ORDINARY = "ordinary"


@dataclass(frozen=True)
class Multiedge:
    id: int
    u: int
    v: int
    mult: int

    @property
    def par(self) -> tuple[int, int]:
        return (self.u, self.v)

    @property
    def es_lazo(self) -> bool:
        return self.u == self.v

    def otro(self, w: int) -> int:
        return self.v if w == self.u else self.u


@dataclass(frozen=True)
class Multigraph:
    vertices: frozenset
    edges: tuple  # de Multiedge, ordenadas por id

    def __post_init__(self):
        vistos = set()
        for e in self.edges:
            if e.u > e.v:
                raise EntradaInvalida(f"arista {e.id}: extremos no normalizados ({e.u}, {e.v})")
            if e.u not in self.vertices or e.v not in self.vertices:
                raise EntradaInvalida(f"arista {e.id}: extremo fuera del conjunto de vértices")
            if e.mult < 1:
                raise EntradaInvalida(f"arista {e.id}: multiplicidad {e.mult} < 1")
            if e.par in vistos:
                raise EntradaInvalida(f"arista {e.id}: par {e.par} repetido")
            vistos.add(e.par)

    # ─── Construcción ───

    @classmethod
    def from_edges(cls, vertices: int | Iterable[int], aristas: Iterable) -> "Multigraph":
        """Arma el grafo desde tripletas (u, v, m); los pares repetidos se suman."""
        if isinstance(vertices, int):
            if vertices < 0:
                raise EntradaInvalida(f"cantidad de vértices negativa: {vertices}")
            vertices = range(vertices)
        verts = frozenset(vertices)
        acum: dict[tuple[int, int], int] = {}
        for u, v, m in aristas:
            if m < 0:
                raise EntradaInvalida(f"multiplicidad negativa en ({u}, {v}): {m}")
            if u not in verts or v not in verts:
                raise EntradaInvalida(f"arista ({u}, {v}) con vértice desconocido")
            par = (min(u, v), max(u, v))
            acum[par] = acum.get(par, 0) + m
        edges = []
        for par, m in acum.items():
            if m > 0:
                edges.append(Multiedge(len(edges), par[0], par[1], m))
        return cls(verts, tuple(edges))

    @classmethod
    def from_dict(cls, data: dict) -> "Multigraph":
        """Formato JSON: {"vertices": n, "edges": [[u, v, m], ...]}."""
        return cls.from_edges(data["vertices"], [tuple(t) for t in data["edges"]])

    def to_dict(self) -> dict:
        n = max(self.vertices) + 1 if self.vertices else 0
        return {"vertices": n, "edges": [[e.u, e.v, e.mult] for e in self.edges]}

    # ─── Consultas ───

    @cached_property
    def por_id(self) -> dict:
        return {e.id: e for e in self.edges}

    def edge(self, eid: int) -> Multiedge:
        try:
            return self.por_id[eid]
        except KeyError:
            raise EntradaInvalida(f"arista desconocida: {eid}") from None

    @property
    def vacio(self) -> bool:
        return not self.edges

    @property
    def total_aristas(self) -> int:
        """|E| contando copias paralelas."""
        return sum(e.mult for e in self.edges)

    @cached_property
    def subyacente(self) -> nx.Graph:
        """Grafo simple subyacente sin lazos; nodos = todos los vértices."""
        U = nx.Graph()
        U.add_nodes_from(self.vertices)
        U.add_edges_from((e.u, e.v, {"id": e.id}) for e in self.edges if not e.es_lazo)
        return U

    @cached_property
    def kappa(self) -> int:
        """Componentes conexas de (V, E), vértices aislados incluidos."""
        return nx.number_connected_components(self.subyacente) if self.vertices else 0

    @property
    def rank(self) -> int:
        return len(self.vertices) - self.kappa

    @cached_property
    def puentes(self) -> frozenset:
        return frozenset((min(a, b), max(a, b)) for a, b in nx.bridges(self.subyacente))

    def grado(self, v: int) -> int:
        """Grado en el grafo subyacente."""
        return self.subyacente.degree(v)

    def aislados(self) -> frozenset:
        usados = {w for e in self.edges for w in e.par}
        return self.vertices - usados

    def canonical(self) -> tuple:
        """Lista ordenada (u, v, m) para comparar grafos sin mirar ids."""
        return tuple(sorted((e.u, e.v, e.mult) for e in self.edges))

    # ─── Transformaciones ───

    def without_isolated(self) -> "Multigraph":
        aislados = self.aislados()
        if not aislados:
            return self
        return Multigraph(self.vertices - aislados, self.edges)

    def map_multiplicities(self, fn: Callable[[Multiedge], int]) -> "Multigraph":
        """Reemplaza cada multiplicidad por fn(e); las que quedan en 0 se borran."""
        edges = []
        for e in self.edges:
            m = fn(e)
            if m > 0:
                edges.append(Multiedge(e.id, e.u, e.v, m))
        return Multigraph(self.vertices, tuple(edges))

    def restrict(self, ids: Iterable[int]) -> "Multigraph":
        """Subgrafo inducido por un conjunto de aristas (sus extremos como vértices)."""
        ids = set(ids)
        edges = tuple(e for e in self.edges if e.id in ids)
        return Multigraph(frozenset(w for e in edges for w in e.par), edges)


# ─── Menores ───

def delete(g: Multigraph, eid: int) -> Multigraph:
    """Borra la multiarista entera (todas sus copias); los vértices se conservan."""
    g.edge(eid)
    return Multigraph(g.vertices, tuple(e for e in g.edges if e.id != eid))


def contract(g: Multigraph, eid: int) -> Multigraph:
    """Une los extremos de eid en el menor id; paralelos resultantes se suman."""
    arista = g.edge(eid)
    if arista.es_lazo:
        raise EntradaInvalida(f"no se puede contraer el lazo {eid}")
    a, b = arista.u, arista.v
    fusion: dict[tuple[int, int], list[int]] = {}
    for e in g.edges:
        if e.id == eid:
            continue
        u = a if e.u == b else e.u
        v = a if e.v == b else e.v
        par = (min(u, v), max(u, v))
        if par in fusion:
            previo = fusion[par]
            previo[0] = min(previo[0], e.id)
            previo[1] += e.mult
        else:
            fusion[par] = [e.id, e.mult]
    edges = sorted(
        (Multiedge(i, par[0], par[1], m) for par, (i, m) in fusion.items()),
        key=lambda e: e.id,
    )
    return Multigraph(g.vertices - {b}, tuple(edges))


def classify_edge(g: Multigraph, eid: int) -> EdgeClass:
    e = g.edge(eid)
    if e.es_lazo:
        return EdgeClass.LOOP
    if e.par in g.puentes:
        return EdgeClass.COLOOP
    return EdgeClass.ORDINARY


# ─── Componentes ───

def _orden(piezas: list[Multigraph]) -> list[Multigraph]:
    return sorted(piezas, key=lambda h: h.edges[0].id)


def connected_components(g: Multigraph) -> list[Multigraph]:
    """Componentes conexas sobre vértices no aislados."""
    U = g.subyacente
    comp_de = {}
    for i, comp in enumerate(nx.connected_components(U)):
        for w in comp:
            comp_de[w] = i
    grupos: dict[int, list[int]] = {}
    for e in g.edges:
        grupos.setdefault(comp_de[e.u], []).append(e.id)
    return _orden([g.restrict(ids) for ids in grupos.values()])


def biconnected_components(g: Multigraph) -> list[Multigraph]:
    """Bloques: cada lazo es su propio bloque; un puente es un bloque de una arista."""
    U = g.subyacente
    piezas = []
    for bloque in nx.biconnected_component_edges(U):
        piezas.append(g.restrict(U.edges[a, b]["id"] for a, b in bloque))
    piezas.extend(g.restrict([e.id]) for e in g.edges if e.es_lazo)
    return _orden(piezas)


def components(g: Multigraph) -> tuple[list[Multigraph], list[Multigraph]]:
    """(componentes conexas, componentes biconexas); ambas particionan las aristas."""
    return connected_components(g), biconnected_components(g)


def disjoint_union(a: Multigraph, b: Multigraph) -> Multigraph:
    """Unión disjunta: los vértices y ids de b se corren detrás de los de a."""
    dv = max(a.vertices) + 1 if a.vertices else 0
    de = max((e.id for e in a.edges), default=-1) + 1
    edges = a.edges + tuple(Multiedge(e.id + de, e.u + dv, e.v + dv, e.mult) for e in b.edges)
    return Multigraph(a.vertices | {w + dv for w in b.vertices}, edges)


# ─── Sonda estructural ───

@dataclass(frozen=True)
class ProbeResult:
    is_looped_forest: bool
    is_multicycle: bool
    is_planar: bool
    is_vertigan: bool
    nu: int
    rank: int
    kappa: int
    cycle_rank: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def es_bosque_con_lazos(g: Multigraph) -> bool:
    U = g.subyacente
    return U.number_of_edges() == g.rank


def es_multiciclo(g: Multigraph) -> bool:
    """El subyacente (sin aislados) es un n-ciclo, n ≥ 3, y no hay lazos."""
    if any(e.es_lazo for e in g.edges) or len(g.edges) < 3:
        return False
    h = g.without_isolated()
    U = h.subyacente
    return (
        U.number_of_edges() == U.number_of_nodes()
        and all(d == 2 for _, d in U.degree())
        and nx.is_connected(U)
    )


def es_planar(g: Multigraph) -> bool:
    planar, _ = nx.check_planarity(g.subyacente)
    return planar


def nu(g: Multigraph, k: int) -> int:
    """Cantidad de multiaristas no-Vertigan (multiplicidad no múltiplo de k)."""
    return sum(1 for e in g.edges if e.mult % k)


def structure_probe(g: Multigraph, k: int) -> ProbeResult:
    if k < 1:
        raise EntradaInvalida(f"k debe ser ≥ 1 (recibido {k})")
    n_nu = nu(g, k)
    return ProbeResult(
        is_looped_forest=es_bosque_con_lazos(g),
        is_multicycle=es_multiciclo(g),
        is_planar=es_planar(g),
        is_vertigan=n_nu == 0,
        nu=n_nu,
        rank=g.rank,
        kappa=g.kappa,
        cycle_rank=g.subyacente.number_of_edges() - g.rank,
    )

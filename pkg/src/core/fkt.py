"""
fkt.py — Hoja planar: T(G; x, y) vía Ising a campo nulo, emparejamientos perfectos y Pfaffiano.

Para cada bloque biconexo:
  ψ = 2^{−|V|} Z_Ising(G; iθ·m, 0) = Σ_{A par} Π_{e∈A} i·sin(m_eθ) Π_{e∉A} cos(m_eθ)
La suma sobre subgrafos pares se cuenta como emparejamientos perfectos de un
grafo decorado H (planar), con orientación de Kasteleyn, y se despeja
T = ψ / (e^{iθ(r−|E|)} (i sin θ)^r).
Sólo backend float.
"""

from __future__ import annotations

import cmath
import logging
from collections import defaultdict

import networkx as nx
import numpy as np
from pfapack import pfaffian as pf

from src.core.escalares import QuantumPoint
from src.core.multigrafo import Multigraph, biconnected_components
from src.core.reglas import reduce_loops_coloops
from src.errores import ContratoViolado

logger = logging.getLogger(__name__)


# ─── Grafo decorado ───

def _desdoblar(g: Multigraph, theta: float) -> list[tuple]:
    """Aristas (X, Y, a, b) de un grafo con grados 2 o 3.

    Los vértices de grado d ≥ 4 se abren en una cadena de d−2 vértices de
    grado 3 respetando la rotación del embedding; las aristas de la cadena
    llevan a = b = 1.
    """
    U = g.subyacente
    planar, emb = nx.check_planarity(U)
    if not planar:
        raise ContratoViolado("el grafo subyacente no es planar")

    etiqueta: dict[tuple[int, int], tuple[int, int]] = {}
    aristas: list[tuple] = []
    for v in U.nodes:
        vecinos = list(emb.neighbors_cw_order(v))
        d = len(vecinos)
        for t, w in enumerate(vecinos):
            if d <= 3 or t < 2:
                sub = 0
            elif t >= d - 2:
                sub = d - 3
            else:
                sub = t - 1
            etiqueta[(v, w)] = (v, sub)
        for j in range(max(d - 3, 0)):
            aristas.append(((v, j), (v, j + 1), 1.0 + 0j, 1.0 + 0j))

    for e in g.edges:
        alfa = e.mult * theta
        a = complex(np.cos(alfa))
        b = 1j * np.sin(alfa)
        aristas.append((etiqueta[(e.u, e.v)], etiqueta[(e.v, e.u)], a, b))
    return aristas


def _grafo_decorado(aristas: list[tuple]) -> tuple[nx.Graph, list[tuple[int, int]]]:
    """H: cada arista es un camino puerto–s1–s2–puerto con pesos (a, b, 1); cada vértice un triángulo o arista de puertos.

    Devuelve H (pesos en el atributo "w") y el emparejamiento de referencia
    (extremos de todos los caminos, el subgrafo par vacío).
    """
    H = nx.Graph()
    puertos = defaultdict(list)
    referencia = []
    siguiente = 0
    for X, Y, a, b in aristas:
        p, s1, s2, q = range(siguiente, siguiente + 4)
        siguiente += 4
        H.add_edge(p, s1, w=a)
        H.add_edge(s1, s2, w=b)
        H.add_edge(s2, q, w=1.0 + 0j)
        puertos[X].append(p)
        puertos[Y].append(q)
        referencia += [(p, s1), (s2, q)]
    for X, ps in puertos.items():
        if len(ps) == 2:
            H.add_edge(ps[0], ps[1], w=1.0 + 0j)
        elif len(ps) == 3:
            for i in range(3):
                H.add_edge(ps[i], ps[(i + 1) % 3], w=1.0 + 0j)
        else:
            raise ContratoViolado(f"vértice {X} de grado {len(ps)} en el grafo desdoblado")
    return H, referencia


# ─── Orientación de Kasteleyn ───

def _clave(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def kasteleyn_orientation(H: nx.Graph) -> dict:
    """{clave: (cola, cabeza)} con un número impar de aristas a favor del recorrido en cada cara salvo una."""
    planar, emb = nx.check_planarity(H)
    if not planar:
        raise ContratoViolado("el grafo decorado no es planar")

    caras = []
    marcadas: set = set()
    for u, v in emb.edges():
        if (u, v) not in marcadas:
            nodos = emb.traverse_face(u, v, mark_half_edges=marcadas)
            caras.append(list(zip(nodos, nodos[1:] + nodos[:1])))

    orient = {}
    raiz = next(iter(H.nodes))
    for a, b in nx.bfs_edges(H, raiz):
        orient[_clave(a, b)] = (a, b)

    caras_de = defaultdict(list)
    pendientes = []
    for i, cara in enumerate(caras):
        libres = set()
        for a, b in cara:
            clave = _clave(a, b)
            caras_de[clave].append(i)
            if clave not in orient:
                libres.add(clave)
        pendientes.append(libres)

    externa = max(range(len(caras)), key=lambda i: len(caras[i]))
    cola = [i for i in range(len(caras)) if i != externa and len(pendientes[i]) == 1]
    while cola:
        i = cola.pop()
        if len(pendientes[i]) != 1:
            continue
        clave = next(iter(pendientes[i]))
        a_favor = 0
        medio = None
        for a, b in caras[i]:
            if _clave(a, b) == clave:
                medio = (a, b)
            elif orient[_clave(a, b)] == (a, b):
                a_favor += 1
        orient[clave] = medio if a_favor % 2 == 0 else (medio[1], medio[0])
        for j in caras_de[clave]:
            pendientes[j].discard(clave)
            if j != externa and len(pendientes[j]) == 1:
                cola.append(j)

    if len(orient) != H.number_of_edges():
        raise ContratoViolado("no se pudo completar la orientación de Kasteleyn")
    return orient


def _signo_permutacion(perm: list[int]) -> int:
    visto = [False] * len(perm)
    signo = 1
    for i in range(len(perm)):
        if visto[i]:
            continue
        largo = 0
        j = i
        while not visto[j]:
            visto[j] = True
            j = perm[j]
            largo += 1
        if largo % 2 == 0:
            signo = -signo
    return signo


def perfect_matching_sum(H: nx.Graph, referencia: list[tuple[int, int]]) -> complex:
    """Σ_M Π_{e∈M} w_e sobre emparejamientos perfectos de un H planar."""
    orient = kasteleyn_orientation(H)
    nodos = sorted(H.nodes)
    pos = {v: i for i, v in enumerate(nodos)}
    A = np.zeros((len(nodos), len(nodos)), dtype=complex)
    for clave, (cola, cabeza) in orient.items():
        w = H.edges[clave]["w"]
        A[pos[cola], pos[cabeza]] = w
        A[pos[cabeza], pos[cola]] = -w

    # signo común de todos los términos, leído del emparejamiento de referencia
    perm = []
    signo = 1
    for a, b in referencia:
        i, j = pos[a], pos[b]
        if i > j:
            i, j = j, i
        perm += [i, j]
        if orient[_clave(a, b)] != (nodos[i], nodos[j]):
            signo = -signo
    signo *= _signo_permutacion(perm)
    return signo * complex(pf.pfaffian(A))


# ─── Valor planar ───

def even_subgraph_sum(g: Multigraph, theta: float) -> complex:
    """Σ_{A par} Π_{A} i·sin(mθ) Π_{E∖A} cos(mθ) para un bloque planar sin lazos."""
    H, referencia = _grafo_decorado(_desdoblar(g, theta))
    return perfect_matching_sum(H, referencia)


def planar_value(g: Multigraph, point: QuantumPoint):
    """T(g; x, y) para un g de subyacente planar (backend float)."""
    f = point.field
    if f.exacto:
        raise ContratoViolado("la hoja planar sólo corre con backend float")
    g, factor = reduce_loops_coloops(g.without_isolated(), point)
    g = g.without_isolated()
    theta = point.theta
    valor = complex(factor)
    for bloque in biconnected_components(g):
        psi = even_subgraph_sum(bloque, theta)
        r = bloque.rank
        prefactor = cmath.exp(1j * theta * (r - bloque.total_aristas)) * complex(point.i_sin_theta) ** r
        valor *= psi / prefactor
    logger.debug(f"planar_value: {len(g.edges)} multiaristas → {valor}")
    return f.check(valor)

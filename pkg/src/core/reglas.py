"""
reglas.py — Reglas de reducción y formas cerradas del borrado–contracción
"""

from __future__ import annotations

from src.core.escalares import QuantumPoint
from src.core.multigrafo import (
    Multigraph,
    contract,
    delete,
    es_bosque_con_lazos,
    es_multiciclo,
)
from src.errores import ContratoViolado


def reduce_loops_coloops(g: Multigraph, point: QuantumPoint) -> tuple[Multigraph, object]:
    """Quita lazos (factor y^m) y contrae puentes (factor x + Σ_{i=1}^{m−1} y^i)."""
    factor = point.field.one()
    lazos = [e for e in g.edges if e.es_lazo]
    for e in lazos:
        factor = factor * point.potencia_y(e.mult)
        g = delete(g, e.id)
    # contraer un puente no crea lazos ni puentes nuevos
    for eid in sorted(e.id for e in g.edges if e.par in g.puentes):
        e = g.edge(eid)
        factor = factor * point.y_x(e.mult)
        g = contract(g, eid)
    return g, factor


def looped_forest_value(g: Multigraph, point: QuantumPoint):
    """Forma cerrada para bosques con lazos: Π y^{|e|} · Π (x + Σ_{i=1}^{|e|−1} y^i)."""
    if not es_bosque_con_lazos(g):
        raise ContratoViolado("el grafo subyacente no es un bosque con lazos")
    resto, factor = reduce_loops_coloops(g, point)
    if resto.edges:
        raise ContratoViolado("quedaron aristas tras reducir un bosque con lazos")
    return factor


def simplify_mod_4k(g: Multigraph, point: QuantumPoint) -> tuple[Multigraph, object]:
    """Multiplicidades mod 4k; factor ((y−1)/2)^{κ(E)−κ(E′)} sobre el mismo conjunto de vértices."""
    periodo = 4 * point.k
    if all(e.mult < periodo for e in g.edges):
        return g, point.field.one()
    reducido = g.map_multiplicities(lambda e: e.mult % periodo)
    salto = g.kappa - reducido.kappa
    if salto == 0:
        return reducido, point.field.one()
    return reducido, point.factor_mod_4k ** salto


def multicycle_value(g: Multigraph, point: QuantumPoint):
    """Forma cerrada para multiciclos de n ≥ 3 multiaristas.

    T = Σ_{j=1}^{n−2} Π_{i>j} y_x(|e_i|) · Π_{i<j} y_1(|e_i|)
        + y_x(|e_n| + |e_{n−1}|) · Π_{i≤n−2} y_1(|e_i|)

    T sólo depende del multiconjunto de multiplicidades, así que se indexa por id.
    """
    if not es_multiciclo(g):
        raise ContratoViolado("el grafo subyacente no es un ciclo")
    m = [e.mult for e in g.edges]
    n = len(m)
    one = point.field.one()
    # sufijos[j] = Π_{i≥j} y_x(m_i); prefijos[j] = Π_{i<j} y_1(m_i)  (índices desde 0)
    sufijos = [one] * (n + 1)
    for i in range(n - 1, -1, -1):
        sufijos[i] = sufijos[i + 1] * point.y_x(m[i])
    prefijos = [one] * (n + 1)
    for i in range(n):
        prefijos[i + 1] = prefijos[i] * point.y_1(m[i])
    total = point.field.zero()
    for j in range(n - 2):
        total = total + sufijos[j + 1] * prefijos[j]
    return total + point.y_x(m[n - 1] + m[n - 2]) * prefijos[n - 2]

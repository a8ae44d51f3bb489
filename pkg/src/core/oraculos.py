"""
oraculos.py — Implementaciones de referencia en tiempo exponencial (tests, selfcheck y --oracle)
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from math import comb

import numpy as np

from src.core.clifford import BinaryCode
from src.core.multigrafo import Multigraph
from src.errores import EntradaInvalida
from src.models import Circuit, XProgram
from src.utils.config import (
    MAX_ARISTAS_ORACULO,
    MAX_DIM_GAUSS,
    MAX_ESPINES_ORACULO,
    MAX_QUBITS_ORACULO,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OracleBudget:
    max_aristas: int = MAX_ARISTAS_ORACULO
    max_espines: int = MAX_ESPINES_ORACULO
    max_qubits: int = MAX_QUBITS_ORACULO
    max_dim_gauss: int = MAX_DIM_GAUSS

    def verificar(self, que: str, valor: int, tope: int) -> None:
        if valor > tope:
            raise EntradaInvalida(f"oráculo: {que}={valor} excede el presupuesto ({tope})")


PRESUPUESTO = OracleBudget()


# ─── Tutte por subconjuntos ───

def _polinomio_por_soportes(g: Multigraph) -> dict:
    """Coeficientes enteros de T en X = x−1, Y = y−1: {(a, b): c}.

    Se recorren los 2^{#multiaristas} soportes; las copias paralelas de cada
    multiarista se suman en forma cerrada con Σ_{j≥1} C(m, j)·Y^{j−1}, de modo
    que el exponente de Y queda como nulidad del soporte más grados de esa suma.
    """
    vertices = sorted(g.vertices)
    pos = {v: i for i, v in enumerate(vertices)}
    aristas = [(pos[e.u], pos[e.v], e.mult) for e in g.edges]
    internos = [[comb(m, j) for j in range(1, m + 1)] for _, _, m in aristas]

    coefs: dict[tuple[int, int], int] = {}
    kappa_E = g.kappa

    def raiz(padre, x):
        while padre[x] != x:
            x = padre[x]
        return x

    def recorrer(i, padre, rango, n_sop, poli):
        if i == len(aristas):
            kappa_A = len(vertices) - rango
            a = kappa_A - kappa_E
            nulidad = n_sop - rango
            for grado, c in enumerate(poli):
                if c:
                    clave = (a, nulidad + grado)
                    coefs[clave] = coefs.get(clave, 0) + c
            return
        recorrer(i + 1, padre, rango, n_sop, poli)
        u, v, _ = aristas[i]
        padre2 = list(padre)
        ru, rv = raiz(padre2, u), raiz(padre2, v)
        rango2 = rango
        if ru != rv:
            padre2[ru] = rv
            rango2 += 1
        interno = internos[i]
        prod = [0] * (len(poli) + len(interno) - 1)
        for p, cp in enumerate(poli):
            if cp:
                for q, cq in enumerate(interno):
                    prod[p + q] += cp * cq
        recorrer(i + 1, padre2, rango2, n_sop + 1, prod)

    recorrer(0, list(range(len(vertices))), 0, 0, [1])
    return {clave: c for clave, c in coefs.items() if c}


def tutte_polynomial_coefficients(g: Multigraph, budget: OracleBudget = PRESUPUESTO) -> dict:
    """Tabla {(i, j): t_ij} con T(G; x, y) = Σ t_ij x^i y^j."""
    budget.verificar("multiaristas", len(g.edges), budget.max_aristas)
    tabla: dict[tuple[int, int], int] = {}
    for (a, b), c in _polinomio_por_soportes(g).items():
        # (x−1)^a (y−1)^b
        for i in range(a + 1):
            ci = comb(a, i) * (-1) ** (a - i)
            for j in range(b + 1):
                cj = comb(b, j) * (-1) ** (b - j)
                tabla[(i, j)] = tabla.get((i, j), 0) + c * ci * cj
    return {clave: c for clave, c in sorted(tabla.items()) if c}


def tutte_subset_expansion(g: Multigraph, x, y, budget: OracleBudget = PRESUPUESTO):
    """T(G; x, y) = Σ_{A⊆E} (x−1)^{κ(A)−κ(E)} (y−1)^{κ(A)+|A|−|V|}, copias paralelas distintas."""
    budget.verificar("multiaristas", len(g.edges), budget.max_aristas)
    X, Y = x - 1, y - 1
    pot_x: dict[int, object] = {}
    pot_y: dict[int, object] = {}
    total = None
    for (a, b), c in _polinomio_por_soportes(g).items():
        if a not in pot_x:
            pot_x[a] = X ** a
        if b not in pot_y:
            pot_y[b] = Y ** b
        termino = pot_x[a] * pot_y[b] * c
        total = termino if total is None else total + termino
    return total if total is not None else x ** 0


def evaluar_tabla(tabla: dict, x, y):
    """Evalúa una tabla de coeficientes de tutte_polynomial_coefficients."""
    total = x ** 0 * 0
    for (i, j), c in tabla.items():
        total = total + x ** i * y ** j * c
    return total


# ─── Potts e Ising ───

def _configuraciones(n: int, q: int) -> np.ndarray:
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    rejilla = np.indices((q,) * n).reshape(n, -1).T
    return rejilla.astype(np.int64)


def potts_partition(n: int, edge_weights: dict, vertex_weights: dict, q: int,
                    budget: OracleBudget = PRESUPUESTO) -> complex:
    """Z = Σ_σ Π_{uv} e^{ω_uv δ(σ_u,σ_v)} Π_v e^{υ_v δ(σ_v)}, con δ(σ_v) = [σ_v = 0].

    edge_weights admite pares repetidos como lista de (u, v, ω) o un dict {(u, v): ω}.
    """
    budget.verificar("espines", n, budget.max_espines)
    if q < 1:
        raise EntradaInvalida(f"q debe ser ≥ 1 (recibido {q})")
    sigma = _configuraciones(n, q)
    energia = np.zeros(sigma.shape[0], dtype=complex)
    for u, v, w in _items(edge_weights):
        energia += w * (sigma[:, u] == sigma[:, v])
    for v, w in vertex_weights.items():
        energia += w * (sigma[:, v] == 0)
    return complex(np.exp(energia).sum())


def ising_partition(n: int, edge_weights: dict, vertex_weights: dict,
                    budget: OracleBudget = PRESUPUESTO) -> complex:
    """Z = Σ_{s∈{±1}^V} exp(Σ ω_uv s_u s_v + Σ υ_v s_v)."""
    budget.verificar("espines", n, budget.max_espines)
    s = 1 - 2 * _configuraciones(n, 2)
    energia = np.zeros(s.shape[0], dtype=complex)
    for u, v, w in _items(edge_weights):
        energia += w * (s[:, u] * s[:, v])
    for v, w in vertex_weights.items():
        energia += w * s[:, v]
    return complex(np.exp(energia).sum())


def _items(edge_weights):
    if isinstance(edge_weights, dict):
        return [(u, v, w) for (u, v), w in edge_weights.items()]
    return list(edge_weights)


def potts_tutte_point(q: int, w: complex) -> tuple[complex, complex]:
    """(x, y) sobre la hipérbola (x−1)(y−1) = q con y = e^w."""
    y = cmath.exp(w)
    if abs(y - 1) == 0:
        raise EntradaInvalida("peso nulo: el punto de Tutte no está definido")
    return 1 + q / (y - 1), y


# ─── Statevector ───

def _indice(outcome, n: int) -> int:
    if outcome is None:
        return 0
    bits = [int(b) for b in outcome]
    if len(bits) != n:
        raise EntradaInvalida(f"outcome de largo {len(bits)} para {n} qubits")
    return sum(b << j for j, b in enumerate(bits))


def _mascara(qubits) -> int:
    return sum(1 << q for q in qubits)


def statevector(obj: XProgram | Circuit, budget: OracleBudget = PRESUPUESTO) -> np.ndarray:
    """Estado final desde |0^n⟩; el qubit j es el bit j del índice."""
    n = obj.n
    budget.verificar("qubits", n, budget.max_qubits)
    theta = math.pi / (4 * obj.k)
    idx = np.arange(2 ** n)
    psi = np.zeros(2 ** n, dtype=complex)
    psi[0] = 1.0

    def rotar(psi, mascara, alfa):
        # e^{iα X^mascara}
        return math.cos(alfa) * psi + 1j * math.sin(alfa) * psi[idx ^ mascara]

    if isinstance(obj, XProgram):
        for fila, m in zip(obj.rows, obj.mults):
            psi = rotar(psi, _mascara(fila), m * theta)
        return psi * cmath.exp(1j * theta * obj.phase)

    for g in obj.gates:
        if g.kind == "H":
            bit = 1 << g.qubits[0]
            bajo = (idx & bit) == 0
            a = psi[idx[bajo]]
            b = psi[idx[bajo] | bit]
            nuevo = psi.copy()
            nuevo[idx[bajo]] = (a + b) / math.sqrt(2)
            nuevo[idx[bajo] | bit] = (a - b) / math.sqrt(2)
            psi = nuevo
        else:
            psi = rotar(psi, _mascara(g.qubits), g.m * theta)
    return psi


def statevector_amplitude(obj: XProgram | Circuit, outcome=None,
                          budget: OracleBudget = PRESUPUESTO) -> complex:
    """⟨x| U |0^n⟩ por vector denso; outcome None es 0^n."""
    psi = statevector(obj, budget)
    return complex(psi[_indice(outcome, obj.n)])


# ─── Suma de Gauss ───

def gauss_sum(c: BinaryCode, budget: OracleBudget = PRESUPUESTO) -> complex:
    """Σ_{x∈V} i^{|x|} enumerando las 2^dim palabras (partes enteras exactas)."""
    budget.verificar("dim", c.dim, budget.max_dim_gauss)
    if c.dim == 0:
        return complex(1, 0)
    B = c.basis.astype(np.int64)
    cuentas = np.zeros(4, dtype=np.int64)
    bloque = 1 << min(c.dim, 16)
    bits = np.arange(c.dim, dtype=np.int64)
    for inicio in range(0, 1 << c.dim, bloque):
        ids = np.arange(inicio, inicio + bloque, dtype=np.int64)
        coefs = (ids[:, None] >> bits[None, :]) & 1
        pesos = ((coefs @ B) & 1).sum(axis=1)
        cuentas += np.bincount(pesos % 4, minlength=4)
    return complex(int(cuentas[0] - cuentas[2]), int(cuentas[1] - cuentas[3]))


def brown_invariant_bruto(c: BinaryCode, budget: OracleBudget = PRESUPUESTO) -> int | None:
    """σ leído del argumento de la suma de Gauss; None si la suma se anula."""
    s = gauss_sum(c, budget)
    if s == 0:
        return None
    return round(cmath.phase(s) / (math.pi / 4)) % 8

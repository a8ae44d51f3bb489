"""
clifford.py — Evaluación en tiempo polinomial de T(G; −i, i) vía dimensión bicíclica e invariante de Brown.

T(M(V); −i, i) = √2^{d(V)} · e^{iπ/4 · (2|S| − 3r − σ(V))} si σ(V) está definido, 0 si no.
Con eso se resuelven las hojas Vertigan del motor: multiplicidades múltiplos de k
se dividen por k y el resto es un factor escalar.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from src.core.escalares import CycloField, Field, QuantumPoint
from src.core.multigrafo import Multigraph
from src.errores import ContratoViolado

logger = logging.getLogger(__name__)


# ─── Álgebra lineal sobre GF(2) ───

def rref_gf2(M: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Forma escalonada reducida mod 2; devuelve (filas no nulas, columnas pivote)."""
    M = (np.asarray(M, dtype=np.uint8) & 1).copy()
    if M.ndim != 2:
        raise ValueError("se esperaba una matriz")
    filas, cols = M.shape
    pivotes: list[int] = []
    r = 0
    for c in range(cols):
        if r == filas:
            break
        candidatos = np.flatnonzero(M[r:, c])
        if candidatos.size == 0:
            continue
        p = r + int(candidatos[0])
        if p != r:
            M[[r, p]] = M[[p, r]]
        mascara = M[:, c].astype(bool)
        mascara[r] = False
        M[mascara] ^= M[r]
        pivotes.append(c)
        r += 1
    return M[:r], pivotes


def rango_gf2(M: np.ndarray) -> int:
    return len(rref_gf2(M)[1])


def nucleo_gf2(M: np.ndarray) -> np.ndarray:
    """Base de {x : M·x = 0} como filas."""
    M = np.asarray(M, dtype=np.uint8)
    n = M.shape[1]
    R, pivotes = rref_gf2(M)
    libres = [c for c in range(n) if c not in set(pivotes)]
    base = np.zeros((len(libres), n), dtype=np.uint8)
    for j, f in enumerate(libres):
        base[j, f] = 1
        for i, p in enumerate(pivotes):
            base[j, p] = R[i, f]
    return base


def _peso(x: np.ndarray) -> int:
    return int(np.count_nonzero(x))


def _b(u: np.ndarray, v: np.ndarray) -> int:
    return int(np.count_nonzero(u & v)) & 1


# ─── Código binario ───

@dataclass(frozen=True, eq=False)
class BinaryCode:
    """Subespacio V ⊆ F₂^length dado por una base (filas independientes)."""

    length: int
    basis: np.ndarray

    @classmethod
    def from_generators(cls, filas, length: int) -> "BinaryCode":
        M = np.asarray(filas, dtype=np.uint8).reshape(-1, length)
        R, _ = rref_gf2(M)
        return cls(length, R)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def gram(self) -> np.ndarray:
        B = self.basis.astype(np.int64)
        return ((B @ B.T) & 1).astype(np.uint8)


def graph_to_binary_code(g: Multigraph) -> BinaryCode:
    """Espacio de filas de la matriz de incidencia mod 2, una columna por copia paralela."""
    indice = {v: i for i, v in enumerate(sorted(g.vertices))}
    columnas = []
    for e in g.edges:
        col = np.zeros(len(indice), dtype=np.uint8)
        if not e.es_lazo:
            col[indice[e.u]] = 1
            col[indice[e.v]] = 1
        columnas.extend([col] * e.mult)
    if not columnas:
        return BinaryCode(0, np.zeros((0, 0), dtype=np.uint8))
    M = np.stack(columnas, axis=1)
    return BinaryCode.from_generators(M, M.shape[1])


def bicycle_dimension(c: BinaryCode) -> int:
    """d(V) = dim(V ∩ V⊥) = dim V − rango de la matriz de Gram."""
    if c.dim == 0:
        return 0
    return c.dim - rango_gf2(c.gram())


def brown_invariant(c: BinaryCode) -> int | None:
    """σ(V) ∈ Z/8, o None si algún biciclo tiene peso ≢ 0 (mod 4).

    Se separa el radical V ∩ V⊥ de un complemento W y la forma cuadrática
    x ↦ |x| mod 4 se descompone en W en bloques ortogonales: vectores de peso
    impar (aportan ±1) y pares hiperbólicos (aportan 0 o 4).
    """
    if c.dim == 0:
        return 0
    B = c.basis
    # radical en coordenadas de la base
    rad_coef = nucleo_gf2(c.gram())
    for coef in rad_coef:
        x = (coef.astype(np.int64) @ B.astype(np.int64)) & 1
        if _peso(x) % 4:
            return None

    # completar el radical a una base de V con vectores de la base
    elegidos = [row for row in rad_coef]
    complemento = []
    rango = len(elegidos)
    for i in range(c.dim):
        e_i = np.zeros(c.dim, dtype=np.uint8)
        e_i[i] = 1
        prueba = np.array(elegidos + [e_i], dtype=np.uint8)
        if rango_gf2(prueba) > rango:
            elegidos.append(e_i)
            complemento.append(B[i].copy())
            rango += 1

    sigma = 0
    W = complemento
    while W:
        impar = next((j for j, w in enumerate(W) if _peso(w) % 2), None)
        if impar is not None:
            w = W.pop(impar)
            sigma += 1 if _peso(w) % 4 == 1 else -1
            W = [v ^ w if _b(v, w) else v for v in W]
            continue
        u = W.pop(0)
        j = next((j for j, w in enumerate(W) if _b(u, w)), None)
        if j is None:
            raise ContratoViolado("forma degenerada fuera del radical")
        v = W.pop(j)
        if _peso(u) % 4 == 2 and _peso(v) % 4 == 2:
            sigma += 4
        nuevos = []
        for w in W:
            if _b(w, v):
                w = w ^ u
            if _b(w, u):
                w = w ^ v
            nuevos.append(w)
        W = nuevos
    return sigma % 8


def tutte_clifford_point(g: Multigraph, field: Field | None = None):
    """T(G; −i, i) por la fórmula explícita; 0 cuando σ no está definido."""
    if field is None:
        field = CycloField(1)
    c = graph_to_binary_code(g)
    sigma = brown_invariant(c)
    if sigma is None:
        return field.zero()
    d = bicycle_dimension(c)
    exp8 = (2 * g.total_aristas - 3 * c.dim - sigma) % 8
    # ζ_8 = ζ^k
    return field.sqrt2() ** d * field.zeta(field.k * exp8)


def vertigan_reduce(g: Multigraph, point: QuantumPoint):
    """T(G; x_k, y_k) para un grafo Vertigan: factor^{−r} · T(G/k; −i, i)."""
    k = point.k
    if any(e.mult % k for e in g.edges):
        raise ContratoViolado(f"el grafo no es Vertigan para k={k}")
    reducido = g.map_multiplicities(lambda e: e.mult // k)
    clifford = tutte_clifford_point(reducido, point.field)
    if k == 1:
        return clifford
    return clifford * point.base_vertigan ** (-g.rank)

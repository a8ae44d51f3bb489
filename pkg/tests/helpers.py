"""
helpers.py — Fixtures compartidas de los tests: grafos chicos, RNG con semilla fija, archivos temporales
"""

import cmath
import os
import tempfile
import unittest

import numpy as np

from src.core.multigrafo import Multigraph
from src.pipelines.selfcheck import (  # noqa: F401  (reexportados para los tests)
    circuito_aleatorio,
    codigo_aleatorio,
    grafo_ponderado_aleatorio,
    multigrafo_aleatorio,
)

TOL = 1e-9


def rng(seed: int = 0) -> np.random.Generator:
    return np.random.default_rng(seed)


def ciclo(n: int, mult: int = 1) -> Multigraph:
    return Multigraph.from_edges(n, [(i, (i + 1) % n, mult) for i in range(n)])


def triangulo(mult: int = 1) -> Multigraph:
    return ciclo(3, mult)


def grilla(filas: int, cols: int, mults) -> Multigraph:
    """Grilla filas×cols; mults(i) da la multiplicidad de la i-ésima arista."""
    triples = []
    for r in range(filas):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                triples.append((v, v + 1, mults(len(triples))))
            if r + 1 < filas:
                triples.append((v, v + cols, mults(len(triples))))
    return Multigraph.from_edges(filas * cols, triples)


class TempDirMixin:
    """Directorio temporal por test, borrado al final."""

    def setUp(self):
        super().setUp()
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = self._tmp.name

    def tearDown(self):
        self._tmp.cleanup()
        super().tearDown()

    def escribir(self, nombre: str, contenido: str) -> str:
        path = os.path.join(self.tmp, nombre)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(contenido)
        return path


class ComplexAssertions(unittest.TestCase):
    def assertCercano(self, a, b, tol: float = TOL, msg=None):
        a, b = complex(a), complex(b)
        if abs(a - b) > tol * max(1.0, abs(a), abs(b)):
            self.fail(msg or f"{a} != {b} (tol={tol})")


def expi(t: float) -> complex:
    return cmath.exp(1j * t)

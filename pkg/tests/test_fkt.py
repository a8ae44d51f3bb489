import math
import unittest

from src.core.escalares import ComplexField, quantum_point
from src.core.fkt import even_subgraph_sum, planar_value
from src.core.multigrafo import Multigraph
from src.core.oraculos import ising_partition, tutte_subset_expansion
from src.core.tutte import evaluate
from src.errores import ContratoViolado
from src.models import EvalConfig
from tests.helpers import ComplexAssertions, ciclo, grilla, triangulo

K4 = Multigraph.from_edges(4, [(0, 1, 1), (0, 2, 3), (0, 3, 1), (1, 2, 2), (1, 3, 5), (2, 3, 1)])
RUEDA6 = Multigraph.from_edges(
    7, [(0, i, 1 + i % 3) for i in range(1, 7)] + [(i, i % 6 + 1, 1 + (i * 5) % 4) for i in range(1, 7)]
)


class TestSubgrafosPares(ComplexAssertions):

    def test_triangulo(self):
        theta = math.pi / 8
        esperado = math.cos(theta) ** 3 + (1j * math.sin(theta)) ** 3
        self.assertCercano(even_subgraph_sum(triangulo(), theta), esperado)

    def test_contra_ising(self):
        # ψ = 2^{−|V|} Z_Ising(G; iθm, 0)
        for g in (ciclo(5, 3), K4, RUEDA6):
            theta = math.pi / 12
            n = len(g.vertices)
            pesos = {(e.u, e.v): 1j * theta * e.mult for e in g.edges}
            with self.subTest(grafo=g.canonical()):
                self.assertCercano(even_subgraph_sum(g, theta), ising_partition(n, pesos, {}) / 2 ** n)


class TestValorPlanar(ComplexAssertions):

    def test_contra_oraculo(self):
        for k in (2, 3):
            point = quantum_point(k, ComplexField(k))
            for g in (K4, RUEDA6, grilla(3, 3, lambda i: 1 + i % 5)):
                with self.subTest(k=k, grafo=g.canonical()):
                    exacto = tutte_subset_expansion(g, point.x, point.y)
                    self.assertCercano(planar_value(g, point), exacto, tol=1e-7)

    def test_con_lazos_y_puentes(self):
        point = quantum_point(2, ComplexField(2))
        g = Multigraph.from_edges(6, [(0, 1, 1), (1, 2, 3), (0, 2, 1), (2, 3, 2), (3, 4, 1), (4, 5, 1), (3, 5, 3), (5, 5, 1)])
        self.assertCercano(planar_value(g, point), tutte_subset_expansion(g, point.x, point.y), tol=1e-7)

    def test_backend_exacto(self):
        with self.assertRaises(ContratoViolado):
            planar_value(K4, quantum_point(2))


class TestPodaPlanar(ComplexAssertions):

    def test_grillas_con_y_sin_fkt(self):
        for filas, cols in ((3, 3), (3, 4), (4, 4)):
            g = grilla(filas, cols, lambda i: 1 + (3 * i) % 7)
            con = evaluate(g, EvalConfig(k=2, backend="float"))
            sin = evaluate(g, EvalConfig(k=2, backend="float", planar_fkt=False))
            exacto = evaluate(g, EvalConfig(k=2))
            with self.subTest(grilla=(filas, cols)):
                self.assertEqual(con.leaves_planar, 1)
                self.assertEqual(sin.leaves_planar, 0)
                self.assertCercano(con.value, sin.value, tol=1e-7)
                self.assertCercano(con.value, complex(exacto.value), tol=1e-7)

    def test_no_planar_ramifica(self):
        k5 = Multigraph.from_edges(5, [(u, v, 1 + u) for u in range(5) for v in range(u + 1, 5)])
        rep = evaluate(k5, EvalConfig(k=2, backend="float"))
        self.assertGreater(rep.leaves_planar, 0)
        self.assertGreater(rep.recursion_nodes, 1)
        self.assertCercano(rep.value, complex(evaluate(k5, EvalConfig(k=2)).value), tol=1e-7)


if __name__ == "__main__":
    unittest.main()

import math
import unittest
from fractions import Fraction

from src.core.oraculos import statevector_amplitude
from src.errores import EntradaInvalida
from src.models import Circuit, EvalConfig, Gate, WeightedGraph, XProgram
from src.pipelines.circuitos import (
    amplitude,
    amplitude_for_outcome,
    augment_graph,
    clifford_amplitude,
    compile_circuit,
    graph_to_xprogram,
    xprogram_amplitude,
    xprogram_to_graph,
)
from tests.helpers import ComplexAssertions, circuito_aleatorio, grafo_ponderado_aleatorio, rng


class TestCompilacion(unittest.TestCase):

    def test_hadamard_agrega_ancilla(self):
        c = Circuit(1, 2, (Gate("RX", (0,), 1), Gate("H", (0,)), Gate("RX", (0,), 5)))
        xp, m, post = compile_circuit(c)
        self.assertEqual((xp.n, m), (2, 1))
        self.assertEqual(post, (True, False))
        self.assertEqual(xp.rows, ((0,), (0,), (1,), (0, 1), (1,)))
        self.assertEqual(xp.mults, (1, 6, 6, 2, 5))
        self.assertEqual(xp.phase, 2)

    def test_filas_de_peso_tres(self):
        xp = XProgram.build(3, 1, [((0, 1, 2), 1)])
        with self.assertRaises(EntradaInvalida):
            xprogram_to_graph(xp)

    def test_grafo_y_programa(self):
        wg = WeightedGraph(3, 1, {(0, 1): 2, (1, 2): 0}, {2: 3})
        xp = graph_to_xprogram(wg)
        self.assertEqual(xp.rows, ((0, 1), (2,)))
        vuelta = xprogram_to_graph(xp)
        self.assertEqual(vuelta.edges, {(0, 1): 2})
        self.assertEqual(vuelta.vertex_weights, {2: 3})

    def test_un_apice_por_componente(self):
        wg = WeightedGraph(5, 1, {(0, 1): 1, (2, 3): 2}, {0: 1, 1: 2, 3: 1, 4: 5})
        g = augment_graph(wg)
        self.assertEqual(len(g.vertices), 8)
        self.assertEqual(
            g.canonical(),
            ((0, 1, 1), (0, 5, 1), (1, 5, 2), (2, 3, 2), (3, 6, 1), (4, 7, 5)),
        )


class TestAmplitudes(ComplexAssertions):

    def test_rx_es_coseno(self):
        for k in (1, 2, 3):
            c = Circuit(1, k, (Gate("RX", (0,), 1),))
            with self.subTest(k=k):
                self.assertCercano(amplitude(c, EvalConfig(k=k)).value, math.cos(math.pi / (4 * k)))

    def test_hadamard(self):
        c = Circuit(1, 2, (Gate("H", (0,)),))
        valor = amplitude(c, EvalConfig(k=2)).value
        self.assertEqual(valor * valor, Fraction(1, 2))
        self.assertCercano(valor, 1 / math.sqrt(2))

    def test_dos_hadamards(self):
        c = Circuit(1, 1, (Gate("H", (0,)), Gate("H", (0,))))
        self.assertEqual(amplitude(c, EvalConfig(k=1)).value, 1)

    def test_circuitos_aleatorios(self):
        r = rng(41)
        for _ in range(15):
            k = int(r.integers(1, 4))
            c = circuito_aleatorio(r, int(r.integers(1, 4)), int(r.integers(1, 7)), k)
            esperado = statevector_amplitude(c)
            with self.subTest(circuito=c):
                self.assertCercano(amplitude(c, EvalConfig(k=k)).value, esperado)
                self.assertCercano(amplitude(c, EvalConfig(k=k, backend="float")).value, esperado)

    def test_xprogramas_aleatorios(self):
        r = rng(42)
        for _ in range(15):
            k = int(r.integers(1, 4))
            wg = grafo_ponderado_aleatorio(r, int(r.integers(1, 6)), k)
            xp = graph_to_xprogram(wg)
            with self.subTest(programa=xp):
                self.assertCercano(xprogram_amplitude(xp, EvalConfig(k=k)).value, statevector_amplitude(xp))

    def test_outcome(self):
        r = rng(43)
        for _ in range(10):
            k = int(r.integers(1, 3))
            n = int(r.integers(1, 5))
            xp = graph_to_xprogram(grafo_ponderado_aleatorio(r, n, k))
            unos = r.choice(n, size=int(r.integers(0, min(n, 2) + 1)), replace=False)
            outcome = tuple(int(j in unos) for j in range(n))
            with self.subTest(programa=xp, outcome=outcome):
                self.assertCercano(
                    amplitude_for_outcome(xp, outcome, EvalConfig(k=k)),
                    statevector_amplitude(xp, outcome),
                )

    def test_outcome_de_peso_tres(self):
        xp = XProgram.build(3, 1, [((0, 1), 1)])
        with self.assertRaises(EntradaInvalida):
            amplitude_for_outcome(xp, (1, 1, 1), EvalConfig(k=1))

    def test_normalizacion(self):
        r = rng(45)
        for k in (1, 2, 3):
            xp = graph_to_xprogram(grafo_ponderado_aleatorio(r, 2, k))
            total = sum(
                abs(complex(amplitude_for_outcome(xp, x, EvalConfig(k=k)))) ** 2
                for x in ((0, 0), (0, 1), (1, 0), (1, 1))
            )
            with self.subTest(k=k, programa=xp):
                self.assertAlmostEqual(total, 1.0, places=9)

    def test_clifford_directo(self):
        r = rng(44)
        for _ in range(10):
            c = circuito_aleatorio(r, int(r.integers(1, 4)), int(r.integers(1, 6)), 1)
            with self.subTest(circuito=c):
                self.assertEqual(clifford_amplitude(c), amplitude(c, EvalConfig(k=1)).value)

    def test_k_incompatibles(self):
        c = Circuit(1, 2, (Gate("RX", (0,), 1),))
        with self.assertRaises(EntradaInvalida):
            amplitude(c, EvalConfig(k=1))
        with self.assertRaises(EntradaInvalida):
            clifford_amplitude(c)
        with self.assertRaises(EntradaInvalida):
            amplitude_for_outcome(XProgram.build(2, 1, []), (0, 1, 0), EvalConfig(k=1))


if __name__ == "__main__":
    unittest.main()

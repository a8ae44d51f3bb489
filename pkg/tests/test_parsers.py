import unittest

from src.errores import EntradaInvalida
from src.utils.parsers import (
    parse_circuit_file,
    parse_circuit_text,
    parse_graph_file,
    parse_graph_text,
    parse_outcome,
    parse_xprogram_text,
)
from src.utils.text import normalize, render_tabla_coeficientes
from tests.helpers import TempDirMixin

CIRCUITO = """\
# circuito de prueba
k 2
qubits 3
H q0
RX 1 3
RXX q0 2 5   # entrelazado
"""


class TestGrafos(TempDirMixin, unittest.TestCase):

    def test_valido(self):
        g = parse_graph_text('{"vertices": 3, "edges": [[0, 1, 2], [1, 0, 1], [2, 2, 4]]}')
        self.assertEqual(g.canonical(), ((0, 1, 3), (2, 2, 4)))

    def test_json_invalido_indica_linea(self):
        with self.assertRaisesRegex(EntradaInvalida, r"^g\.json:2:"):
            parse_graph_text('{"vertices": 2,\n "edges": [[0, 1, 1],]}', "g.json")

    def test_claves_faltantes(self):
        with self.assertRaises(EntradaInvalida):
            parse_graph_text('{"vertices": 2}')

    def test_vertice_fuera_de_rango(self):
        with self.assertRaisesRegex(EntradaInvalida, "fuera de rango"):
            parse_graph_text('{"vertices": 2, "edges": [[0, 2, 1]]}')

    def test_multiplicidad_negativa(self):
        with self.assertRaisesRegex(EntradaInvalida, "negativa"):
            parse_graph_text('{"vertices": 2, "edges": [[0, 1, -1]]}')

    def test_arista_invalida_indica_linea(self):
        texto = '{"vertices": 3,\n "edges": [\n  [0, 1, 1],\n  [1, 5, 2]\n ]}'
        with self.assertRaisesRegex(EntradaInvalida, r"^g\.json:4: arista #1: vértice fuera de rango"):
            parse_graph_text(texto, "g.json")
        texto = '{"vertices": 2, "edges": [[0, 1, 1],\n[0, 1, -3]]}'
        with self.assertRaisesRegex(EntradaInvalida, r"^g\.json:2: arista #1: multiplicidad negativa"):
            parse_graph_text(texto, "g.json")

    def test_edges_no_es_lista(self):
        with self.assertRaises(EntradaInvalida):
            parse_graph_text('{"vertices": 2, "edges": 3}')

    def test_tripleta_mal_formada(self):
        with self.assertRaises(EntradaInvalida):
            parse_graph_text('{"vertices": 2, "edges": [[0, 1]]}')
        with self.assertRaises(EntradaInvalida):
            parse_graph_text('{"vertices": 2, "edges": [[0, 1, true]]}')

    def test_archivo(self):
        path = self.escribir("g.json", '{"vertices": 2, "edges": [[0, 1, 1]]}')
        self.assertEqual(len(parse_graph_file(path).edges), 1)

    def test_archivo_inexistente(self):
        with self.assertRaises(EntradaInvalida):
            parse_graph_file(self.tmp + "/no-existe.json")


class TestCircuitos(TempDirMixin, unittest.TestCase):

    def test_valido(self):
        c = parse_circuit_text(CIRCUITO)
        self.assertEqual((c.n, c.k, c.hadamards), (3, 2, 1))
        self.assertEqual([g.kind for g in c.gates], ["H", "RX", "RXX"])
        self.assertEqual(c.gates[2].qubits, (0, 2))
        self.assertEqual(c.gates[2].m, 5)

    def test_archivo(self):
        path = self.escribir("c.txt", CIRCUITO)
        self.assertEqual(len(parse_circuit_file(path).gates), 3)

    def test_compuerta_desconocida(self):
        with self.assertRaisesRegex(EntradaInvalida, r"^c:4: compuerta"):
            parse_circuit_text("k 1\nqubits 2\nH 0\nCZ 0 1\n", "c")

    def test_qubit_fuera_de_rango(self):
        with self.assertRaisesRegex(EntradaInvalida, r"^c:3:"):
            parse_circuit_text("k 1\nqubits 2\nRX 2 1\n", "c")

    def test_rxx_mismo_qubit(self):
        with self.assertRaises(EntradaInvalida):
            parse_circuit_text("k 1\nqubits 2\nRXX 1 1 1\n")

    def test_header_faltante(self):
        with self.assertRaisesRegex(EntradaInvalida, "qubits"):
            parse_circuit_text("k 1\nH 0\n")

    def test_header_despues_del_cuerpo(self):
        with self.assertRaises(EntradaInvalida):
            parse_circuit_text("qubits 1\nH 0\nk 1\n")


class TestXProgramas(unittest.TestCase):

    def test_valido(self):
        xp = parse_xprogram_text("k 1\ncols 3\n110*2\n001\n000*3\n")
        self.assertEqual(xp.rows, ((0, 1), (2,)))
        self.assertEqual(xp.mults, (2, 1))
        self.assertEqual(xp.phase, 3)

    def test_largo_incorrecto(self):
        with self.assertRaisesRegex(EntradaInvalida, r"^x:3:"):
            parse_xprogram_text("k 1\ncols 3\n10\n", "x")

    def test_outcome(self):
        self.assertEqual(parse_outcome(None, 3), (0, 0, 0))
        self.assertEqual(parse_outcome("101", 3), (1, 0, 1))
        with self.assertRaises(EntradaInvalida):
            parse_outcome("10", 3)
        with self.assertRaises(EntradaInvalida):
            parse_outcome("1a1", 3)


class TestTexto(unittest.TestCase):

    def test_normalize(self):
        self.assertEqual(normalize("Min_Degree Sum"), "min-degree-sum")
        self.assertEqual(normalize("  NON-VERTIGAN "), "non-vertigan")
        self.assertEqual(normalize(None), "")

    def test_tabla_de_coeficientes(self):
        self.assertEqual(render_tabla_coeficientes({(0, 1): 1, (1, 0): 1, (2, 0): 1}), "y + x + x^2")
        self.assertEqual(render_tabla_coeficientes({(0, 0): 3, (1, 2): 2}), "3 + 2*x*y^2")
        self.assertEqual(render_tabla_coeficientes({}), "0")


if __name__ == "__main__":
    unittest.main()

import importlib
import io
import os
import unittest
from contextlib import redirect_stderr, redirect_stdout
from unittest import mock

import src.utils.config as config
from src.errores import ErrorAritmetico
from src.main import main
from tests.helpers import TempDirMixin

TRIANGULO = '{"vertices": 3, "edges": [[0, 1, 1], [1, 2, 1], [0, 2, 1]]}'


class TestCLI(TempDirMixin, unittest.TestCase):

    def correr(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            codigo = main(list(argv))
        return codigo, out.getvalue(), err.getvalue()

    def lineas(self, salida: str) -> dict:
        return dict(linea.split(": ", 1) for linea in salida.strip().splitlines())

    # ─── eval ───

    def test_eval_triangulo(self):
        path = self.escribir("g.json", TRIANGULO)
        codigo, out, _ = self.correr("eval", "--graph", path, "--k", "1")
        self.assertEqual(codigo, 0)
        campos = self.lineas(out)
        self.assertEqual(campos["value"], "-1 * z^0")
        self.assertEqual(campos["vertigan"], "1")
        self.assertEqual(campos["cycle_rank"], "1")

    def test_eval_con_oraculo(self):
        path = self.escribir("g.json", TRIANGULO)
        codigo, out, _ = self.correr("eval", "--graph", path, "--k", "2", "--oracle", "--no-multicycle")
        self.assertEqual(codigo, 0)
        campos = self.lineas(out)
        self.assertEqual(campos["oracle_match"], "true")
        self.assertEqual(campos["tutte"], "y + x + x^2")
        self.assertEqual(campos["multicycle"], "0")

    def test_eval_float(self):
        path = self.escribir("g.json", TRIANGULO)
        codigo, out, _ = self.correr("eval", "--graph", path, "--k", "1", "--backend", "float")
        self.assertEqual(codigo, 0)
        self.assertEqual(self.lineas(out)["value"], "-1+0i")

    def test_salida_determinista(self):
        path = self.escribir("g.json", '{"vertices": 4, "edges": [[0, 1, 3], [1, 2, 1], [2, 3, 5], [0, 3, 2], [0, 2, 1]]}')
        a = self.correr("eval", "--graph", path, "--k", "2", "--heuristic", "max-degree-sum")
        b = self.correr("eval", "--graph", path, "--k", "2", "--heuristic", "max_degree_sum")
        self.assertEqual(a[:2], b[:2])

    # ─── amplitude ───

    def test_amplitude_circuito(self):
        path = self.escribir("c.txt", "k 1\nqubits 1\nH 0\nH 0\n")
        codigo, out, _ = self.correr("amplitude", "--circuit", path, "--oracle")
        self.assertEqual(codigo, 0)
        campos = self.lineas(out)
        self.assertEqual(campos["value"], "1 * z^0")
        self.assertEqual(campos["oracle_match"], "true")
        self.assertEqual(campos["hadamards"], "2")

    def test_amplitude_clifford(self):
        path = self.escribir("c.txt", "k 1\nqubits 2\nH 0\nRXX 0 1 1\nH 0\n")
        codigo, out, _ = self.correr("amplitude", "--circuit", path, "--clifford")
        self.assertEqual(codigo, 0)
        self.assertTrue(out.startswith("value: "))

    def test_amplitude_xprograma_outcome(self):
        path = self.escribir("x.txt", "k 2\ncols 2\n11*3\n10\n")
        codigo, out, _ = self.correr("amplitude", "--xprogram", path, "--outcome", "01",
                                     "--backend", "float", "--oracle")
        self.assertEqual(codigo, 0)
        self.assertEqual(self.lineas(out)["oracle_match"], "true")

    def test_amplitude_k_incompatible(self):
        path = self.escribir("c.txt", "k 2\nqubits 1\nRX 0 1\n")
        codigo, _, err = self.correr("amplitude", "--circuit", path, "--k", "3")
        self.assertEqual(codigo, 1)
        self.assertIn("error:", err)

    # ─── bench / selfcheck ───

    def test_bench(self):
        out = os.path.join(self.tmp, "t.csv")
        codigo, _, _ = self.correr("bench", "--class", "sparse", "--n", "4", "--count", "2",
                                   "--seed", "1", "--out", out, "--heuristics", "non-vertigan,vertex-order")
        self.assertEqual(codigo, 0)
        with open(out, encoding="utf-8") as fh:
            cabecera = fh.readline().strip()
        self.assertEqual(cabecera, "heuristic,sum,mean,mean_dev,empty,vertigan,multicycle,planar")

    def test_selfcheck(self):
        codigo, out, _ = self.correr("selfcheck", "--casos", "2", "--seed", "5")
        self.assertEqual(codigo, 0)
        self.assertTrue(all(linea.startswith("PASS") for linea in out.strip().splitlines()))

    # ─── códigos de salida ───

    def test_archivo_malformado(self):
        path = self.escribir("g.json", "{no es json")
        codigo, _, err = self.correr("eval", "--graph", path)
        self.assertEqual(codigo, 1)
        self.assertIn("g.json:1:", err)

    def test_flag_desconocido(self):
        codigo, _, _ = self.correr("eval", "--graph", "x.json", "--turbo")
        self.assertEqual(codigo, 1)

    def test_heuristica_desconocida(self):
        codigo, _, _ = self.correr("eval", "--graph", "x.json", "--heuristic", "random")
        self.assertEqual(codigo, 1)

    def test_error_aritmetico(self):
        path = self.escribir("g.json", TRIANGULO)
        with mock.patch("src.main.evaluate", side_effect=ErrorAritmetico("división por cero")):
            codigo, _, err = self.correr("eval", "--graph", path)
        self.assertEqual(codigo, 2)
        self.assertIn("división por cero", err)

    def test_ayuda(self):
        codigo, out, _ = self.correr("--help")
        self.assertEqual(codigo, 0)
        self.assertIn("eval", out)

    def test_threads_desde_entorno(self):
        with mock.patch.dict(os.environ, {"TUTTESIM_THREADS": "3"}):
            self.assertEqual(importlib.reload(config).THREADS, 3)
        importlib.reload(config)

    def test_threads_invalido_en_entorno(self):
        try:
            with mock.patch.dict(os.environ, {"TUTTESIM_THREADS": "dos"}):
                importlib.reload(config)
            self.assertEqual(config.THREADS, 1)
            codigo, _, err = self.correr("selfcheck", "--casos", "1")
            self.assertEqual(codigo, 1)
            self.assertIn("TUTTESIM_THREADS", err)
        finally:
            importlib.reload(config)


if __name__ == "__main__":
    unittest.main()

"""
parsers.py — Lectura de grafos (JSON), circuitos y X-programas (texto) con diagnósticos archivo:línea
"""

import json
import re
from pathlib import Path
from typing import List, Optional, Tuple

from src.core.multigrafo import Multigraph
from src.errores import EntradaInvalida
from src.models import Circuit, Gate, XProgram

RE_HEADER = re.compile(r"^(k|qubits|cols)\s+(\d+)$", re.IGNORECASE)
RE_QUBIT = r"[qQ]?(\d+)"
RE_H = re.compile(rf"^H\s+{RE_QUBIT}$", re.IGNORECASE)
RE_RX = re.compile(rf"^RX\s+{RE_QUBIT}\s+(\d+)$", re.IGNORECASE)
RE_RXX = re.compile(rf"^RXX\s+{RE_QUBIT}\s+{RE_QUBIT}\s+(\d+)$", re.IGNORECASE)
RE_FILA = re.compile(r"^([01]+)(?:\s*\*\s*(\d+))?$")


def _lineas(texto: str) -> List[Tuple[int, str]]:
    """(número de línea, contenido) sin comentarios ni líneas vacías."""
    out = []
    for i, linea in enumerate(texto.splitlines(), start=1):
        linea = linea.split("#", 1)[0].strip()
        if linea:
            out.append((i, linea))
    return out


def _leer(path) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise EntradaInvalida(f"{path}: no se pudo leer ({e.strerror})") from None


# ─── Grafos ───

RE_EDGES = re.compile(r'"edges"\s*:\s*\[')


def _lineas_de_aristas(texto: str) -> List[int]:
    """Línea de inicio de cada elemento de "edges"; vacía si no se puede ubicar."""
    m = RE_EDGES.search(texto)
    if not m:
        return []
    decoder = json.JSONDecoder()
    lineas = []
    pos = m.end()
    while True:
        while pos < len(texto) and texto[pos] in " \t\r\n,":
            pos += 1
        if pos >= len(texto) or texto[pos] == "]":
            return lineas
        lineas.append(texto.count("\n", 0, pos) + 1)
        try:
            _, pos = decoder.raw_decode(texto, pos)
        except json.JSONDecodeError:
            return lineas


def parse_graph_text(texto: str, nombre: str = "<grafo>") -> Multigraph:
    """{"vertices": n, "edges": [[u, v, m], ...]}; pares repetidos se suman."""
    try:
        data = json.loads(texto)
    except json.JSONDecodeError as e:
        raise EntradaInvalida(f"{nombre}:{e.lineno}: JSON inválido ({e.msg})") from None
    if not isinstance(data, dict) or "vertices" not in data or "edges" not in data:
        raise EntradaInvalida(f"{nombre}:1: se esperaban las claves 'vertices' y 'edges'")
    n = data["vertices"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise EntradaInvalida(f"{nombre}:1: 'vertices' debe ser un entero ≥ 0")
    if not isinstance(data["edges"], list):
        raise EntradaInvalida(f"{nombre}:1: 'edges' debe ser una lista")
    aristas = []
    lineas = _lineas_de_aristas(texto)
    for i, t in enumerate(data["edges"]):
        donde = f"{nombre}:{lineas[i] if i < len(lineas) else 1}: arista #{i}"
        if (not isinstance(t, list) or len(t) != 3
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in t)):
            raise EntradaInvalida(f"{donde}: se esperaba [u, v, m] con enteros")
        u, v, m = t
        if not (0 <= u < n and 0 <= v < n):
            raise EntradaInvalida(f"{donde}: vértice fuera de rango (n={n})")
        if m < 0:
            raise EntradaInvalida(f"{donde}: multiplicidad negativa")
        aristas.append((u, v, m))
    return Multigraph.from_edges(n, aristas)


def parse_graph_file(path) -> Multigraph:
    return parse_graph_text(_leer(path), str(path))


# ─── Circuitos ───

def _headers(lineas, nombre: str, requeridos: Tuple[str, ...]):
    """Separa los headers `clave valor` del cuerpo; exige que vayan primero."""
    valores = {}
    cuerpo = []
    for num, linea in lineas:
        m = RE_HEADER.match(linea)
        if m:
            if cuerpo:
                raise EntradaInvalida(f"{nombre}:{num}: header '{m.group(1)}' después del cuerpo")
            valores[m.group(1).lower()] = int(m.group(2))
        else:
            cuerpo.append((num, linea))
    for clave in requeridos:
        if clave not in valores:
            raise EntradaInvalida(f"{nombre}:1: falta el header '{clave}'")
    return valores, cuerpo


def parse_circuit_text(texto: str, nombre: str = "<circuito>") -> Circuit:
    """Headers `k <int>` y `qubits <int>`; una compuerta por línea: `H q`, `RX q m`, `RXX q1 q2 m`."""
    valores, cuerpo = _headers(_lineas(texto), nombre, ("k", "qubits"))
    k, n = valores["k"], valores["qubits"]
    if k < 1:
        raise EntradaInvalida(f"{nombre}:1: k debe ser ≥ 1")
    gates = []
    for num, linea in cuerpo:
        if m := RE_H.match(linea):
            gate = Gate("H", (int(m.group(1)),))
        elif m := RE_RXX.match(linea):
            gate = Gate("RXX", (int(m.group(1)), int(m.group(2))), int(m.group(3)))
        elif m := RE_RX.match(linea):
            gate = Gate("RX", (int(m.group(1)),), int(m.group(2)))
        else:
            raise EntradaInvalida(f"{nombre}:{num}: compuerta no reconocida: '{linea}'")
        if any(q >= n for q in gate.qubits):
            raise EntradaInvalida(f"{nombre}:{num}: qubit fuera de rango (qubits={n})")
        if gate.kind == "RXX" and gate.qubits[0] == gate.qubits[1]:
            raise EntradaInvalida(f"{nombre}:{num}: RXX con el mismo qubit dos veces")
        gates.append(gate)
    return Circuit(n, k, tuple(gates))


def parse_circuit_file(path) -> Circuit:
    return parse_circuit_text(_leer(path), str(path))


# ─── X-programas ───

def parse_xprogram_text(texto: str, nombre: str = "<xprograma>") -> XProgram:
    """Headers `k` y `cols`; filas como bits con sufijo opcional `*mult`."""
    valores, cuerpo = _headers(_lineas(texto), nombre, ("k", "cols"))
    k, cols = valores["k"], valores["cols"]
    if k < 1:
        raise EntradaInvalida(f"{nombre}:1: k debe ser ≥ 1")
    filas = []
    for num, linea in cuerpo:
        m = RE_FILA.match(linea)
        if not m:
            raise EntradaInvalida(f"{nombre}:{num}: fila no reconocida: '{linea}'")
        bits = m.group(1)
        if len(bits) != cols:
            raise EntradaInvalida(f"{nombre}:{num}: la fila tiene {len(bits)} columnas, se esperaban {cols}")
        mult = int(m.group(2)) if m.group(2) is not None else 1
        filas.append((tuple(j for j, b in enumerate(bits) if b == "1"), mult))
    return XProgram.build(cols, k, filas)


def parse_xprogram_file(path) -> XProgram:
    return parse_xprogram_text(_leer(path), str(path))


def parse_outcome(texto: Optional[str], n: int) -> Tuple[int, ...]:
    """Bitstring de salida; None o vacío es 0^n."""
    if not texto:
        return (0,) * n
    s = texto.strip()
    if not re.fullmatch(r"[01]+", s) or len(s) != n:
        raise EntradaInvalida(f"outcome inválido '{texto}' para {n} columnas")
    return tuple(int(b) for b in s)

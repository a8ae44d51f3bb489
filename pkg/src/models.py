"""
models.py — Dataclasses compartidas entre el motor, los pipelines y el CLI
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable

from src.core.escalares import Field, make_field
from src.errores import EntradaInvalida
from src.utils.config import FLOAT_TOL


# ─── Configuración del motor ───

class Heuristic(str, Enum):
    NON_VERTIGAN = "non-vertigan"
    VERTEX_ORDER = "vertex-order"
    MIN_DEGREE = "min-degree"
    MAX_DEGREE = "max-degree"
    MIN_DEGREE_SUM = "min-degree-sum"
    MAX_DEGREE_SUM = "max-degree-sum"


# nombre de la poda en el CLI → campo de EvalConfig
PODA_A_CAMPO = {
    "components": "components",
    "bicomponents": "bicomponents",
    "multicycle": "multicycle",
    "vertigan": "vertigan",
    "planar-fkt": "planar_fkt",
    "mod-4k-simplify": "mod_4k_simplify",
}


@dataclass(frozen=True)
class EvalConfig:
    k: int = 1
    heuristic: Heuristic = Heuristic.NON_VERTIGAN
    backend: str = "exact"
    components: bool = True
    bicomponents: bool = True
    multicycle: bool = True
    vertigan: bool = True
    planar_fkt: bool | None = None  # None: activo sólo con backend float
    mod_4k_simplify: bool = True
    threads: int = 1
    tol: float = FLOAT_TOL

    def __post_init__(self):
        if self.k < 1:
            raise EntradaInvalida(f"k debe ser ≥ 1 (recibido {self.k})")
        try:
            object.__setattr__(self, "heuristic", Heuristic(self.heuristic))
        except ValueError:
            raise EntradaInvalida(f"heurística desconocida: {self.heuristic!r}") from None
        if self.backend not in ("exact", "float"):
            raise EntradaInvalida(f"backend desconocido: {self.backend!r}")
        if self.planar_fkt and self.backend == "exact":
            raise EntradaInvalida("la poda planar-fkt requiere backend float")
        if self.threads < 1:
            raise EntradaInvalida(f"threads debe ser ≥ 1 (recibido {self.threads})")

    @property
    def fkt(self) -> bool:
        if self.planar_fkt is None:
            return self.backend == "float"
        return self.planar_fkt

    def cuerpo(self) -> Field:
        return make_field(self.k, self.backend, self.tol)

    def sin_podas(self, nombres: Iterable[str]) -> "EvalConfig":
        """Copia con las podas nombradas (nombres del CLI) desactivadas."""
        cambios = {}
        for nombre in nombres:
            if nombre not in PODA_A_CAMPO:
                raise EntradaInvalida(f"poda desconocida: {nombre!r}")
            cambios[PODA_A_CAMPO[nombre]] = False
        return replace(self, **cambios)


# ─── Reporte de evaluación ───

@dataclass
class EvalReport:
    value: object = None
    leaves_empty: int = 0
    leaves_vertigan: int = 0
    leaves_multicycle: int = 0
    leaves_planar: int = 0
    recursion_nodes: int = 0

    @property
    def total_leaves(self) -> int:
        return self.leaves_empty + self.leaves_vertigan + self.leaves_multicycle + self.leaves_planar

    def sumar_stats(self, otro: "EvalReport") -> None:
        self.leaves_empty += otro.leaves_empty
        self.leaves_vertigan += otro.leaves_vertigan
        self.leaves_multicycle += otro.leaves_multicycle
        self.leaves_planar += otro.leaves_planar
        self.recursion_nodes += otro.recursion_nodes

    def stats(self) -> dict:
        return {
            "total_leaves": self.total_leaves,
            "empty": self.leaves_empty,
            "vertigan": self.leaves_vertigan,
            "multicycle": self.leaves_multicycle,
            "planar": self.leaves_planar,
            "recursion_nodes": self.recursion_nodes,
        }

    def to_dict(self, render=str) -> dict:
        return {"value": render(self.value), **self.stats()}


# ─── Circuitos y X-programas ───

ARIDAD = {"H": 1, "RX": 1, "RXX": 2}


@dataclass(frozen=True)
class Gate:
    kind: str            # "H" | "RX" | "RXX"
    qubits: tuple
    m: int = 0           # múltiplo de θ = π/4k (no aplica a H)


@dataclass(frozen=True)
class Circuit:
    n: int
    k: int
    gates: tuple = ()

    def __post_init__(self):
        if self.k < 1:
            raise EntradaInvalida(f"k debe ser ≥ 1 (recibido {self.k})")
        for g in self.gates:
            if g.kind not in ARIDAD:
                raise EntradaInvalida(f"compuerta desconocida: {g.kind}")
            if len(g.qubits) != ARIDAD[g.kind]:
                raise EntradaInvalida(f"{g.kind} espera {ARIDAD[g.kind]} qubit(s): {g}")
            if any(q < 0 or q >= self.n for q in g.qubits):
                raise EntradaInvalida(f"qubit fuera de rango en {g}")
            if g.m < 0:
                raise EntradaInvalida(f"multiplicador negativo en {g}")
            if g.kind == "RXX" and g.qubits[0] == g.qubits[1]:
                raise EntradaInvalida(f"RXX con qubits repetidos: {g}")

    @property
    def hadamards(self) -> int:
        return sum(1 for g in self.gates if g.kind == "H")


@dataclass(frozen=True)
class XProgram:
    """Filas como soportes (tuplas ordenadas de qubits) con multiplicidad en unidades de θ.

    phase es la fase global acumulada en potencias de ζ = e^{iπ/4k}; las filas
    nulas se pliegan ahí y no se guardan.
    """

    n: int
    k: int
    rows: tuple = ()
    mults: tuple = ()
    phase: int = 0

    def __post_init__(self):
        if len(self.rows) != len(self.mults):
            raise EntradaInvalida("filas y multiplicidades de distinto largo")
        for fila, m in zip(self.rows, self.mults):
            if not fila:
                raise EntradaInvalida("fila nula almacenada en el X-programa")
            if any(q < 0 or q >= self.n for q in fila):
                raise EntradaInvalida(f"fila {fila} fuera de rango (n={self.n})")
            if m < 0:
                raise EntradaInvalida(f"multiplicidad negativa en la fila {fila}")

    @classmethod
    def build(cls, n: int, k: int, filas: Iterable, phase: int = 0) -> "XProgram":
        """Arma el programa desde pares (soporte, m); los soportes vacíos van a la fase."""
        rows, mults = [], []
        for soporte, m in filas:
            soporte = tuple(sorted(set(soporte)))
            if not soporte:
                phase += m
            else:
                rows.append(soporte)
                mults.append(m)
        return cls(n, k, tuple(rows), tuple(mults), phase % (8 * k))

    def append(self, soporte: Iterable[int], m: int) -> "XProgram":
        return XProgram.build(self.n, self.k, list(zip(self.rows, self.mults)) + [(tuple(soporte), m)], self.phase)


@dataclass(frozen=True)
class WeightedGraph:
    """Grafo con multiplicadores enteros de θ en aristas (u < v) y vértices."""

    n: int
    k: int
    edges: dict = field(default_factory=dict)
    vertex_weights: dict = field(default_factory=dict)

    def __post_init__(self):
        for (u, v), m in self.edges.items():
            if not (0 <= u < v < self.n):
                raise EntradaInvalida(f"arista ({u}, {v}) inválida para n={self.n}")
            if m < 0:
                raise EntradaInvalida(f"multiplicador negativo en ({u}, {v})")
        for v, m in self.vertex_weights.items():
            if not (0 <= v < self.n) or m < 0:
                raise EntradaInvalida(f"peso de vértice inválido: {v} → {m}")


# ─── Bench ───

@dataclass(frozen=True)
class InstanceSpec:
    clase: str                  # "dense" | "sparse"
    n: int
    seed: int
    index: int = 0
    k: int = 2
    p: float = 0.5
    pesos_vertices: bool = False

    def __post_init__(self):
        if self.clase not in ("dense", "sparse"):
            raise EntradaInvalida(f"clase desconocida: {self.clase!r}")
        if self.n < 2:
            raise EntradaInvalida(f"n debe ser ≥ 2 (recibido {self.n})")
        if not 0.0 <= self.p <= 1.0:
            raise EntradaInvalida(f"probabilidad fuera de rango: {self.p}")

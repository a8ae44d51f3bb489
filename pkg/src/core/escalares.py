"""
escalares.py — Aritmética exacta en el cuerpo ciclotómico Q(ζ_{8k}) y backend complejo.

Los puntos de evaluación x = −i·cot(π/4k), y = e^{iπ/2k} viven en Q(ζ) con
ζ = e^{iπ/4k}. Un CycloScalar guarda 4k coeficientes racionales de Σ c_j ζ^j,
reducidos con ζ^{4k} = −1 y además módulo Φ_{8k} (forma canónica: la igualdad
se decide comparando coeficientes y todo elemento no nulo es invertible).
Internamente los coeficientes van como enteros sobre un denominador común.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field as campo
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Union

import sympy as sp

from src.errores import EntradaInvalida, ErrorAritmetico

Racional = Union[int, Fraction]


# ─── Polinomios ciclotómicos ───

@lru_cache(maxsize=None)
def ciclotomico(n: int) -> tuple:
    """Coeficientes enteros de Φ_n (índice = grado)."""
    phi = sp.cyclotomic_poly(n, polys=True)
    return tuple(int(c) for c in reversed(phi.all_coeffs()))


@lru_cache(maxsize=None)
def _tabla_reduccion(k: int) -> tuple:
    """Fila j = ζ^j reducido módulo Φ_{8k}, como vector de 4k enteros."""
    n = 4 * k
    phi = ciclotomico(8 * k)
    grado = len(phi) - 1
    filas = []
    actual = [0] * n
    actual[0] = 1
    for _ in range(n):
        filas.append(tuple(actual))
        siguiente = [0] + actual[:-1]
        # el coeficiente que sube a ζ^n se reduce con ζ^n = −1
        siguiente[0] -= actual[-1]
        top = siguiente[grado] if grado < n else 0
        if top:
            for j, pj in enumerate(phi):
                siguiente[j] -= top * pj
        actual = siguiente
    return tuple(filas), grado


@lru_cache(maxsize=None)
def _unidades(k: int) -> tuple:
    m = 8 * k
    return tuple(j for j in range(2, m) if gcd(j, m) == 1)


def _reducir(k: int, nums: list) -> list:
    """Pliega ζ^{4k} = −1 y reduce módulo Φ_{8k}."""
    n = 4 * k
    v = [0] * n
    for j, c in enumerate(nums):
        if c:
            q, r = divmod(j, n)
            v[r] += -c if q % 2 else c
    filas, grado = _tabla_reduccion(k)
    if grado == n:
        return v
    out = v[:grado] + [0] * (n - grado)
    for j in range(grado, n):
        c = v[j]
        if c:
            fila = filas[j]
            for t in range(grado):
                if fila[t]:
                    out[t] += c * fila[t]
    return out


# ─── Escalar exacto ───

class CycloScalar:
    """Elemento de Q(ζ_{8k}) con ζ = e^{iπ/4k}."""

    __slots__ = ("k", "nums", "den")

    def __init__(self, k: int, nums, den: int = 1, reducido: bool = False):
        if not reducido:
            nums = _reducir(k, nums)
        nums = list(nums)
        if den < 0:
            den, nums = -den, [-c for c in nums]
        g = den
        for c in nums:
            if c:
                g = gcd(g, c)
                if g == 1:
                    break
        if not any(nums):
            den = 1
        elif g > 1:
            den //= g
            nums = [c // g for c in nums]
        self.k = k
        self.nums = tuple(nums)
        self.den = den

    # ─── Construcción ───

    @classmethod
    def racional(cls, k: int, q: Racional) -> "CycloScalar":
        q = Fraction(q)
        return cls(k, [q.numerator] + [0] * (4 * k - 1), q.denominator, reducido=True)

    @classmethod
    def zeta(cls, k: int, j: int = 1) -> "CycloScalar":
        n = 4 * k
        j %= 2 * n
        nums = [0] * (2 * n)
        nums[j] = 1
        return cls(k, nums)

    @property
    def coeffs(self) -> tuple:
        """Los 4k coeficientes racionales."""
        return tuple(Fraction(c, self.den) for c in self.nums)

    # ─── Coerción ───

    def _coerce(self, otro) -> "CycloScalar":
        if isinstance(otro, CycloScalar):
            if otro.k != self.k:
                raise EntradaInvalida(f"escalares con k distinto: {self.k} vs {otro.k}")
            return otro
        if isinstance(otro, (int, Fraction)):
            return CycloScalar.racional(self.k, otro)
        return NotImplemented

    # ─── Operaciones de cuerpo ───

    def __add__(self, otro):
        o = self._coerce(otro)
        if o is NotImplemented:
            return o
        nums = [a * o.den + b * self.den for a, b in zip(self.nums, o.nums)]
        return CycloScalar(self.k, nums, self.den * o.den, reducido=True)

    __radd__ = __add__

    def __neg__(self):
        return CycloScalar(self.k, [-c for c in self.nums], self.den, reducido=True)

    def __sub__(self, otro):
        o = self._coerce(otro)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, otro):
        o = self._coerce(otro)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, otro):
        o = self._coerce(otro)
        if o is NotImplemented:
            return o
        a, b = self.nums, o.nums
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycloScalar(self.k, prod, self.den * o.den)

    __rmul__ = __mul__

    def galois(self, j: int) -> "CycloScalar":
        """Conjugado ζ ↦ ζ^j (j coprimo con 8k)."""
        m = 8 * self.k
        nums = [0] * m
        for i, c in enumerate(self.nums):
            if c:
                nums[(i * j) % m] += c
        return CycloScalar(self.k, nums, self.den)

    def inverse(self) -> "CycloScalar":
        """a⁻¹ = Π_{σ≠id} σ(a) / N(a), con N(a) la norma racional."""
        if not any(self.nums):
            raise ErrorAritmetico("división por cero en Q(ζ)")
        conj = CycloScalar.racional(self.k, 1)
        for j in _unidades(self.k):
            conj = conj * self.galois(j)
        norma = self * conj
        if any(norma.nums[1:]):
            raise ErrorAritmetico(f"norma no racional para {self}")
        return conj * Fraction(norma.den, norma.nums[0])

    def __truediv__(self, otro):
        o = self._coerce(otro)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, otro):
        o = self._coerce(otro)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        base = self
        if e < 0:
            base, e = self.inverse(), -e
        res = CycloScalar.racional(self.k, 1)
        while e:
            if e & 1:
                res = res * base
            e >>= 1
            if e:
                base = base * base
        return res

    # ─── Comparación y conversión ───

    def __eq__(self, otro):
        if isinstance(otro, (int, Fraction)):
            otro = CycloScalar.racional(self.k, otro)
        if not isinstance(otro, CycloScalar):
            return NotImplemented
        return self.k == otro.k and self.nums == otro.nums and self.den == otro.den

    def __hash__(self):
        return hash((self.k, self.nums, self.den))

    def __bool__(self):
        return any(self.nums)

    def __complex__(self):
        n = 4 * self.k
        total = 0j
        for j, c in enumerate(self.nums):
            if c:
                total += c * cmath.exp(1j * math.pi * j / n)
        return total / self.den

    def __repr__(self):
        return f"CycloScalar(k={self.k}, {self})"

    def __str__(self):
        """Forma `a/b * z^j` ordenada por potencia; z = e^{iπ/4k}."""
        terminos = [
            f"{Fraction(c, self.den)} * z^{j}" for j, c in enumerate(self.nums) if c
        ]
        return " + ".join(terminos) if terminos else "0"


# ─── Backends ───

class CycloField:
    """Backend exacto: Q(ζ_{8k})."""

    nombre = "exact"
    exacto = True

    def __init__(self, k: int):
        if k < 1:
            raise EntradaInvalida(f"k debe ser ≥ 1 (recibido {k})")
        self.k = k

    def of(self, q: Racional) -> CycloScalar:
        return CycloScalar.racional(self.k, q)

    def zero(self) -> CycloScalar:
        return self.of(0)

    def one(self) -> CycloScalar:
        return self.of(1)

    def zeta(self, j: int = 1) -> CycloScalar:
        return CycloScalar.zeta(self.k, j)

    def i(self) -> CycloScalar:
        return self.zeta(2 * self.k)

    def sqrt2(self) -> CycloScalar:
        # √2 = ζ_8 + ζ_8^{-1} con ζ_8 = ζ^k
        return self.zeta(self.k) + self.zeta(-self.k)

    def to_complex(self, a) -> complex:
        return complex(a)

    def is_zero(self, a) -> bool:
        return not a

    def equal(self, a, b) -> bool:
        return a == b

    def check(self, a):
        return a

    def render(self, a) -> str:
        return str(a)

    def __repr__(self):
        return f"CycloField(k={self.k})"


class ComplexField:
    """Backend en doble precisión; los escalares son `complex` de Python."""

    nombre = "float"
    exacto = False

    def __init__(self, k: int, tol: float = 1e-9):
        if k < 1:
            raise EntradaInvalida(f"k debe ser ≥ 1 (recibido {k})")
        self.k = k
        self.tol = tol

    def of(self, q: Racional) -> complex:
        return complex(float(q))

    def zero(self) -> complex:
        return 0j

    def one(self) -> complex:
        return 1 + 0j

    def zeta(self, j: int = 1) -> complex:
        j %= 8 * self.k
        # potencias de i exactas
        if j % (2 * self.k) == 0:
            return (1 + 0j, 1j, -1 + 0j, -1j)[j // (2 * self.k)]
        return cmath.exp(1j * math.pi * j / (4 * self.k))

    def i(self) -> complex:
        return 1j

    def sqrt2(self) -> complex:
        return complex(math.sqrt(2.0))

    def to_complex(self, a) -> complex:
        return complex(a)

    def is_zero(self, a) -> bool:
        return abs(a) <= self.tol

    def equal(self, a, b) -> bool:
        return abs(a - b) <= self.tol * max(1.0, abs(a), abs(b))

    def check(self, a):
        """Invariante: nunca NaN/Inf."""
        a = complex(a)
        if not (math.isfinite(a.real) and math.isfinite(a.imag)):
            raise ErrorAritmetico(f"valor no finito: {a}")
        return a

    def render(self, a) -> str:
        a = complex(a)
        umbral = self.tol * max(1.0, abs(a))
        # ruido de redondeo por debajo de la tolerancia se imprime como 0
        re = 0.0 if abs(a.real) <= umbral else a.real + 0.0
        im = 0.0 if abs(a.imag) <= umbral else a.imag + 0.0
        return f"{re:.15g}{im:+.15g}i"

    def __repr__(self):
        return f"ComplexField(k={self.k})"


Field = Union[CycloField, ComplexField]


def make_field(k: int, backend: str = "exact", tol: float = 1e-9) -> Field:
    if backend == "exact":
        return CycloField(k)
    if backend == "float":
        return ComplexField(k, tol)
    raise EntradaInvalida(f"backend desconocido: {backend!r}")


# ─── Punto cuántico ───

@dataclass(frozen=True)
class QuantumPoint:
    """x = −i·cot(π/4k), y = e^{iπ/2k} y las constantes derivadas que usa el motor."""

    k: int
    field: Field
    x: object
    y: object
    theta_sobre_pi: Fraction
    _pot_y: list = campo(default_factory=list, repr=False, compare=False)

    @property
    def theta(self) -> float:
        return math.pi * float(self.theta_sobre_pi)

    @cached_property
    def i_sin_theta(self):
        # i·sin θ = (ζ − ζ^{-1}) / 2
        f = self.field
        return (f.zeta(1) - f.zeta(-1)) / f.of(2)

    @cached_property
    def sin_theta(self):
        return self.i_sin_theta * self.field.zeta(6 * self.k)

    @cached_property
    def factor_mod_4k(self):
        """i·e^{iθ}·sin θ = (y − 1)/2."""
        return (self.y - self.field.one()) / self.field.of(2)

    @cached_property
    def base_vertigan(self):
        """√2 · e^{iπ(1−k)/4k} · sin θ."""
        f = self.field
        return f.sqrt2() * f.zeta(1 - self.k) * self.sin_theta

    def potencia_y(self, j: int):
        pot = self._pot_y
        if not pot:
            pot.append(self.field.one())
        while len(pot) <= j:
            pot.append(pot[-1] * self.y)
        return pot[j]

    def suma_y(self, desde: int, hasta: int):
        """Σ_{i=desde}^{hasta} y^i (vacía → 0)."""
        total = self.field.zero()
        for i in range(desde, hasta + 1):
            total = total + self.potencia_y(i)
        return total

    def y_x(self, m: int):
        """x + Σ_{i=1}^{m−1} y^i."""
        return self.x + self.suma_y(1, m - 1)

    def y_1(self, m: int):
        """Σ_{i=0}^{m−1} y^i."""
        return self.suma_y(0, m - 1)


def quantum_point(k: int, field: Field | None = None) -> QuantumPoint:
    """Punto (x, y) de la grilla θ = π/4k; k = 1 da el punto de Clifford (−i, i)."""
    if field is None:
        field = CycloField(k)
    if field.k != k:
        raise EntradaInvalida(f"backend con k={field.k} para punto con k={k}")
    y = field.zeta(2)
    x = (y + field.one()) / (y - field.one())
    return QuantumPoint(k=k, field=field, x=x, y=y, theta_sobre_pi=Fraction(1, 4 * k))

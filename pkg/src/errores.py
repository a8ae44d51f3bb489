"""
errores.py — Jerarquía de excepciones de tuttesim.
El CLI traduce cada familia a un código de salida:
  EntradaInvalida → 1, ErrorAritmetico / ContratoViolado → 2.
"""


class TuttesimError(Exception):
    """Base de todos los errores propios."""


class EntradaInvalida(TuttesimError, ValueError):
    """Archivo mal formado, id desconocido, config contradictoria, presupuesto excedido."""


class ErrorAritmetico(TuttesimError, ArithmeticError):
    """División por cero en el cuerpo o valores no finitos."""


class ContratoViolado(TuttesimError):
    """Precondición interna incumplida (p.ej. multiciclo sobre algo que no es ciclo)."""


class DesacuerdoHeuristicas(ErrorAritmetico):
    """Dos heurísticas devolvieron valores distintos para la misma instancia."""

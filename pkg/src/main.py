"""
main.py — Entry point CLI de tuttesim
Subcomandos:
  eval       → T(G; x_k, y_k) de un grafo JSON con estadísticas del árbol
  amplitude  → amplitud de un circuito o X-programa
  bench      → tabla de hojas por heurística sobre instancias aleatorias
  selfcheck  → identidades Potts / Ising / IQP / Tutte contra oráculos
Códigos de salida: 0 ok, 1 entrada inválida, 2 error aritmético / interno.
"""

import argparse
import logging
import sys
import time

from src.core.escalares import ComplexField, quantum_point
from src.core.multigrafo import structure_probe
from src.core.oraculos import (
    statevector_amplitude,
    tutte_polynomial_coefficients,
    tutte_subset_expansion,
)
from src.core.tutte import evaluate
from src.errores import ContratoViolado, EntradaInvalida, ErrorAritmetico
from src.logging_ import configurar_logging, mem_mb
from src.models import EvalConfig
from src.pipelines.bench import ejecutar_bench
from src.pipelines.circuitos import (
    amplitude,
    amplitude_for_outcome,
    clifford_amplitude,
    xprogram_amplitude,
)
from src.pipelines.selfcheck import ejecutar_selfcheck
from src.utils import config
from src.utils.config import FLOAT_TOL, HEURISTICAS, K_BENCH, LOG_LEVEL, P_SPARSE, PODAS, THREADS
from src.utils.parsers import parse_circuit_file, parse_graph_file, parse_outcome, parse_xprogram_file
from src.utils.text import normalize, render_reporte, render_tabla_coeficientes

logger = logging.getLogger("main")


# ─── Parser ───

class _Parser(argparse.ArgumentParser):
    """Los errores de argparse salen como EntradaInvalida (código 1)."""

    def error(self, message):
        raise EntradaInvalida(f"{self.prog}: {message}")


def _heuristica(txt: str) -> str:
    h = normalize(txt)
    if h not in HEURISTICAS:
        raise argparse.ArgumentTypeError(f"heurística desconocida: {txt!r}")
    return h


def _comunes(p: argparse.ArgumentParser, backend: str = "exact"):
    p.add_argument("--heuristic", type=_heuristica, default="non-vertigan")
    p.add_argument("--backend", choices=["exact", "float"], default=backend)
    p.add_argument("--threads", type=int, default=THREADS)
    p.add_argument("--tol", type=float, default=FLOAT_TOL)
    for poda in PODAS:
        p.add_argument(f"--no-{poda}", dest=f"no_{poda.replace('-', '_')}", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tuttesim", description="Amplitudes exactas vía polinomios de Tutte")
    parser.add_argument("--log-level", default=LOG_LEVEL)
    sub = parser.add_subparsers(dest="comando", required=True, parser_class=_Parser)

    p_eval = sub.add_parser("eval", help="evalúa T(G; x_k, y_k)")
    p_eval.add_argument("--graph", required=True)
    p_eval.add_argument("--k", type=int, default=1)
    p_eval.add_argument("--oracle", action="store_true", help="compara con la expansión por subconjuntos")
    _comunes(p_eval)

    p_amp = sub.add_parser("amplitude", help="amplitud de un circuito o X-programa")
    fuente = p_amp.add_mutually_exclusive_group(required=True)
    fuente.add_argument("--circuit")
    fuente.add_argument("--xprogram")
    p_amp.add_argument("--k", type=int, default=None, help="por defecto el k del archivo")
    p_amp.add_argument("--outcome", default=None, help="bitstring de salida (sólo X-programas)")
    p_amp.add_argument("--clifford", action="store_true", help="ruta directa por invariante de Brown (k=1)")
    p_amp.add_argument("--oracle", action="store_true", help="compara con el statevector")
    _comunes(p_amp)

    p_bench = sub.add_parser("bench", help="tabla de hojas por heurística")
    p_bench.add_argument("--class", dest="clase", choices=["dense", "sparse"], required=True)
    p_bench.add_argument("--n", type=int, required=True)
    p_bench.add_argument("--count", type=int, required=True)
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.add_argument("--k", type=int, default=K_BENCH)
    p_bench.add_argument("--p", type=float, default=P_SPARSE)
    p_bench.add_argument("--random-vertex-weights", action="store_true")
    p_bench.add_argument("--heuristics", default=",".join(HEURISTICAS))
    p_bench.add_argument("--out", default="-")
    p_bench.add_argument("--log", default=None, help="log por instancia (JSON lines)")
    _comunes(p_bench, backend="float")

    p_self = sub.add_parser("selfcheck", help="identidades contra oráculos")
    p_self.add_argument("--casos", type=int, default=20)
    p_self.add_argument("--seed", type=int, default=0)
    return parser


def _config(args, k: int) -> EvalConfig:
    sin = [poda for poda in PODAS if getattr(args, f"no_{poda.replace('-', '_')}")]
    planar = None if args.backend == "float" else False
    cfg = EvalConfig(
        k=k, heuristic=args.heuristic, backend=args.backend,
        planar_fkt=planar, threads=args.threads, tol=args.tol,
    )
    return cfg.sin_podas(sin)


# ─── Subcomandos ───

def cmd_eval(args) -> int:
    g = parse_graph_file(args.graph)
    cfg = _config(args, args.k)
    rep = evaluate(g, cfg)
    field = quantum_point(cfg.k, cfg.cuerpo()).field
    probe = structure_probe(g, cfg.k)
    extra = {
        "k": cfg.k,
        "heuristic": cfg.heuristic.value,
        "backend": cfg.backend,
        "nu": probe.nu,
        "rank": probe.rank,
        "cycle_rank": probe.cycle_rank,
    }
    print(render_reporte(rep, field, extra))
    if args.oracle:
        point = quantum_point(cfg.k, field)
        oraculo = tutte_subset_expansion(g, point.x, point.y)
        print(f"oracle: {field.render(oraculo)}")
        print(f"oracle_match: {str(field.equal(oraculo, rep.value)).lower()}")
        print(f"tutte: {render_tabla_coeficientes(tutte_polynomial_coefficients(g))}")
    return 0


def cmd_amplitude(args) -> int:
    if args.circuit:
        c = parse_circuit_file(args.circuit)
        if args.k is not None and args.k != c.k:
            raise EntradaInvalida(f"--k {args.k} no coincide con el k del circuito ({c.k})")
        if args.outcome:
            raise EntradaInvalida("--outcome sólo aplica a X-programas")
        if args.clifford:
            valor = clifford_amplitude(c)
            print(f"value: {valor}")
            return 0
        cfg = _config(args, c.k)
        rep = amplitude(c, cfg)
        field = cfg.cuerpo()
        print(render_reporte(rep, field, {"k": c.k, "qubits": c.n, "hadamards": c.hadamards}))
        valor, objetivo = rep.value, c
    else:
        xp = parse_xprogram_file(args.xprogram)
        if args.k is not None and args.k != xp.k:
            raise EntradaInvalida(f"--k {args.k} no coincide con el k del programa ({xp.k})")
        if args.clifford:
            raise EntradaInvalida("--clifford sólo aplica a circuitos")
        cfg = _config(args, xp.k)
        field = cfg.cuerpo()
        outcome = parse_outcome(args.outcome, xp.n)
        if any(outcome):
            valor = amplitude_for_outcome(xp, outcome, cfg)
            print(f"value: {field.render(valor)}")
        else:
            rep = xprogram_amplitude(xp, cfg)
            valor = rep.value
            print(render_reporte(rep, field, {"k": xp.k, "cols": xp.n}))
        objetivo = xp
    if args.oracle:
        oraculo = statevector_amplitude(objetivo, None if args.circuit else outcome)
        flotante = ComplexField(cfg.k, cfg.tol)
        print(f"oracle: {flotante.render(oraculo)}")
        print(f"oracle_match: {str(flotante.equal(complex(valor), oraculo)).lower()}")
    return 0


def cmd_bench(args) -> int:
    heuristicas = [_heuristica(h) for h in args.heuristics.split(",") if h.strip()]
    cfg = _config(args, args.k)
    ejecutar_bench(
        args.clase, args.n, args.count, args.seed, cfg,
        heuristicas=heuristicas, out=args.out, log_instancias=args.log,
        p=args.p, pesos_vertices=args.random_vertex_weights,
    )
    return 0


def cmd_selfcheck(args) -> int:
    resultado = ejecutar_selfcheck(args.casos, args.seed)
    for r in resultado["checks"]:
        estado = "PASS" if r["fallas"] == 0 else "FAIL"
        print(f"{estado} {r['check']} ({r['casos'] - r['fallas']}/{r['casos']})")
    return 0 if resultado["ok"] else 2


COMANDOS = {
    "eval": cmd_eval,
    "amplitude": cmd_amplitude,
    "bench": cmd_bench,
    "selfcheck": cmd_selfcheck,
}


# ─── Entry point ───

def main(argv=None) -> int:
    if config.ERRORES_ENTORNO:
        for error in config.ERRORES_ENTORNO:
            print(f"error: {error}", file=sys.stderr)
        return 1
    try:
        args = build_parser().parse_args(argv)
    except EntradaInvalida as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)

    configurar_logging(args.log_level)
    logger.info(f"[{args.comando}] START — RSS: {mem_mb():.0f} MB")
    t0 = time.time()
    try:
        codigo = COMANDOS[args.comando](args)
    except EntradaInvalida as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (ErrorAritmetico, ContratoViolado) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception as e:
        logger.exception(f"[{args.comando}] ERROR: {e} — elapsed={time.time() - t0:.2f}s")
        return 2
    logger.info(f"[{args.comando}] DONE en {time.time() - t0:.2f}s — RSS: {mem_mb():.0f} MB")
    return codigo


if __name__ == "__main__":
    sys.exit(main())

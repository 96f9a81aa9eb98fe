"""
Command Line - The grtab front end.

Parses argv into one subcommand, builds the Config the subcommand runs
with, and prints results on stdout (text by default, JSON with --json).
Diagnostics go through the rich logging handler on stderr so stdout stays
byte-for-byte reproducible.

Architecture:
    - build_parser: argparse tree; global flags are accepted before or after
      the subcommand name
    - one handler per subcommand, registered in COMMANDS; a handler returns
      the exit code
    - run: flag overrides, logging setup, dispatch and the mapping of
      errors to exit codes (1 input, 2 refused, 3 frozen denominator left,
      130 interrupted)

Usage Example:
    >>> import io
    >>> buf = io.StringIO()
    >>> run(["ch", "--n", "3", "--m", "6", "1,2,4|3,5,6"], stream=buf)
    0
    >>> buf.getvalue()
    'P124*P356 - P123*P456\\n'

Author: grtab developers
Version: 2.0
Last Modified: October 17, 2026
"""

import argparse
import io
import sys
from typing import Callable, Dict, List, Optional, TextIO

import numpy as np
from rich.console import Console
from rich.table import Table

from catalog.catalog_loader import CatalogLoader
from core.characters import (
    ch,
    compatibility_test,
    immanant_check,
    primeness_test,
    qchar_formula,
    reality_test,
)
from core.cluster import (
    Seed,
    cluster_closure,
    exchange_check,
    format_vertex,
    g_factorization,
    g_vector,
    initial_seed,
    mutated_label,
    mutate_seed,
    parse_vertex,
    vertex_color,
)
from core.config import LOG_LEVELS, Config
from core.errors import FormatError, GrtabError
from core.log import get_logger, setup_logging
from core.monomials import (
    lm_reality,
    monomial_to_multisegment,
    multisegment_to_monomial,
    phi_tilde,
    psi,
    zelevinsky_dual,
)
from core.plucker import random_rational_matrix
from core.tableaux import small_gaps_form

from .formats import (
    dump_json,
    load_json,
    parse_matrix,
    parse_monomial,
    parse_multisegment,
    parse_polynomial,
    parse_tableau,
    read_payload,
    render_grid,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_LOCALIZED = 3
EXIT_INTERRUPTED = 130

KINDS = ("tableau", "monomial", "multisegment")


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors are input errors (exit 1), not exit 2."""

    def error(self, message):
        raise FormatError(message)


class Output:
    """Writes either the text or the JSON form of each result."""

    def __init__(self, console: Console, as_json: bool):
        self.console = console
        self.as_json = as_json

    def emit(self, text: str, data) -> None:
        self.console.out(dump_json(data) if self.as_json else text, highlight=False)


# ==================== PARSER ====================

def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    parser.add_argument("--max-k", type=int, default=default, help="cap on the symmetric group size of ch(T) (default 9)")
    parser.add_argument("--threads", type=int, default=default, help="worker threads for the character sweep")
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=default, help="stderr log level")
    parser.add_argument("--json", action="store_true", default=argparse.SUPPRESS if suppress else False,
                        help="print JSON instead of text")


def _frame(parser: argparse.ArgumentParser, required: bool = True) -> None:
    parser.add_argument("--n", type=int, required=required, help="rows (Gr(n, m))")
    parser.add_argument("--m", type=int, required=required, help="alphabet size (Gr(n, m))")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="grtab", description="Tableaux, characters and cluster seeds of Grassmannians.")
    _global_flags(parser, suppress=False)
    common = _Parser(add_help=False)
    _global_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("convert", parents=[common], help="translate between tableaux, monomials and multisegments")
    _frame(p, required=False)
    p.add_argument("--from", dest="source", choices=KINDS, required=True)
    p.add_argument("--to", dest="target", choices=KINDS, required=True)
    p.add_argument("payload")

    p = sub.add_parser("factor", parents=[common], help="small-gaps factorization T = T'' u T'")
    _frame(p)
    p.add_argument("tableau")

    p = sub.add_parser("ch", parents=[common], help="the character ch(T) in the Plucker ring")
    _frame(p)
    p.add_argument("--no-clear", action="store_true", help="keep the frozen Laurent prefactor as computed")
    p.add_argument("tableau")

    p = sub.add_parser("qchar", parents=[common], help="q-character formula of a dominant monomial")
    p.add_argument("--n", type=int, help="specialize to sl_n (segments of length n become 1)")
    p.add_argument("monomial")

    p = sub.add_parser("reality", parents=[common], help="test ch(T)^2 = ch(T u T)")
    _frame(p)
    p.add_argument("tableau")

    p = sub.add_parser("prime", parents=[common], help="search for a factorization ch(T) = ch(T1) ch(T2)")
    _frame(p)
    p.add_argument("tableau")

    p = sub.add_parser("compatible", parents=[common], help="test ch(S) ch(T) = ch(S u T)")
    _frame(p)
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("zelevinsky", parents=[common], help="Moeglin-Waldspurger dual of a multisegment")
    p.add_argument("multisegment")

    p = sub.add_parser("lm", parents=[common], help="4231/3412 pattern reality test of a regular multisegment")
    p.add_argument("multisegment")

    p = sub.add_parser("gvector", parents=[common], help="g-vector grid of a monomial or tableau")
    _frame(p)
    p.add_argument("--of", dest="kind", choices=("monomial", "tableau"), default="monomial")
    p.add_argument("--factorization", action="store_true", help="print the exponents over the initial seed")
    p.add_argument("payload")

    p = sub.add_parser("seed", parents=[common], help="the initial rectangular seed")
    _frame(p)

    p = sub.add_parser("mutate", parents=[common], help="mutate a seed along a vertex sequence")
    _frame(p)
    p.add_argument("--seed", dest="seed_file", help="seed JSON (default: the initial seed)")
    p.add_argument("--at", action="append", default=[], help="vertex '(i,t)'; repeat for a sequence")
    p.add_argument("--steps", help="JSON list of vertices, appended after --at")
    p.add_argument("--check", action="store_true", help="verify each exchange relation with ch")

    p = sub.add_parser("closure", parents=[common], help="breadth-first exploration of the exchange graph")
    _frame(p)
    p.add_argument("--depth", type=int, help="depth limit (default from config)")

    p = sub.add_parser("immanant-check", parents=[common], help="compare ch(T') with a KL immanant at random points")
    _frame(p)
    p.add_argument("--samples", type=int, help="number of random points")
    p.add_argument("tableau")

    p = sub.add_parser("eval", parents=[common], help="evaluate ch(T) or a polynomial at a matrix")
    _frame(p)
    p.add_argument("--matrix", required=True, help="JSON rows, entries integers or 'p/q'")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--tableau")
    source.add_argument("--poly", help="polynomial JSON")

    p = sub.add_parser("reproduce", parents=[common], help="run the example catalog")
    p.add_argument("--list", action="store_true", help="list the catalog without running it")
    return parser


# ==================== HANDLERS ====================

def _convert(args, config: Config, out: Output) -> int:
    if args.source == "tableau" or args.target == "tableau":
        if args.n is None or args.m is None:
            raise FormatError("--n and --m are required when a tableau is involved")
    if args.source == "tableau":
        T = parse_tableau(args.payload, args.n, args.m)
        M = psi(T)
    elif args.source == "monomial":
        M = parse_monomial(args.payload)
    else:
        M = multisegment_to_monomial(parse_multisegment(args.payload))

    if args.target == "tableau":
        T = phi_tilde(M, args.n, args.m) if args.source != "tableau" else small_gaps_form(T)[0]
        out.emit(str(T), T.to_dict())
    elif args.target == "monomial":
        out.emit(str(M), {"factors": M.to_list()})
    else:
        ms = monomial_to_multisegment(M)
        out.emit(str(ms), {"segments": ms.to_list()})
    return EXIT_OK


def _factor(args, config: Config, out: Output) -> int:
    T = parse_tableau(args.tableau, args.n, args.m)
    T_prime, T_second = small_gaps_form(T)
    out.emit(
        f"T' = {T_prime}\nT'' = {T_second}",
        {
            "small_gaps": T_prime.to_dict(),
            "frozen": {"numerator": T_second.numerator.to_dict(), "denominator": T_second.denominator.to_dict()},
        },
    )
    return EXIT_OK


def _ch(args, config: Config, out: Output) -> int:
    T = parse_tableau(args.tableau, args.n, args.m)
    p = ch(T, config, clear=not args.no_clear)
    out.emit(str(p), p.to_dict())
    return EXIT_OK if p.in_ring else EXIT_LOCALIZED


def _qchar(args, config: Config, out: Output) -> int:
    f = qchar_formula(parse_monomial(args.monomial), args.n, config)
    out.emit(str(f), f.to_dict())
    return EXIT_OK


def _reality(args, config: Config, out: Output) -> int:
    result = reality_test(parse_tableau(args.tableau, args.n, args.m), config)
    text = "real" if result.real else f"nonreal\ncertificate: {result.certificate}"
    out.emit(text, {"real": result.real, "certificate": result.certificate.to_dict()})
    return EXIT_OK


def _prime(args, config: Config, out: Output) -> int:
    result = primeness_test(parse_tableau(args.tableau, args.n, args.m), config)
    if result.prime:
        out.emit("prime", {"prime": True, "factors": None})
    else:
        left, right = result.factors
        out.emit(f"not prime\nfactors: {left} * {right}",
                 {"prime": False, "factors": [left.to_dict(), right.to_dict()]})
    return EXIT_OK


def _compatible(args, config: Config, out: Output) -> int:
    S = parse_tableau(args.first, args.n, args.m)
    T = parse_tableau(args.second, args.n, args.m)
    result = compatibility_test(S, T, config)
    text = "compatible" if result.compatible else f"incompatible\ncertificate: {result.certificate}"
    out.emit(text, {"compatible": result.compatible, "certificate": result.certificate.to_dict()})
    return EXIT_OK


def _zelevinsky(args, config: Config, out: Output) -> int:
    dual = zelevinsky_dual(parse_multisegment(args.multisegment))
    out.emit(str(dual), {"segments": dual.to_list()})
    return EXIT_OK


def _lm(args, config: Config, out: Output) -> int:
    result = lm_reality(parse_multisegment(args.multisegment), config)
    out.emit(result.value, {"result": result.value})
    return EXIT_OK


def _gvector(args, config: Config, out: Output) -> int:
    if args.kind == "tableau":
        target = parse_tableau(args.payload, args.n, args.m)
    else:
        target = parse_monomial(args.payload)
    grid = g_vector(target, args.n, args.m)
    if not args.factorization:
        out.emit(render_grid(grid), {"g": grid.tolist()})
        return EXIT_OK
    T = target if args.kind == "tableau" else phi_tilde(target, args.n, args.m)
    exponents = g_factorization(T)
    lines = [f"{format_vertex(v)}: {e:+d}" for v, e in exponents.items()]
    out.emit("\n".join(lines) or "1",
             {"g": grid.tolist(), "factorization": {format_vertex(v): e for v, e in exponents.items()}})
    return EXIT_OK


def _seed_text(seed: Seed) -> str:
    lines = []
    for v in seed.quiver.vertices:
        if v in seed.quiver.frozen:
            status = "frozen"
        else:
            status = vertex_color(seed, v)
        lines.append(f"{format_vertex(v)} {status} {seed.labels[v]}")
    lines.append("arrows:")
    lines.extend(f"  {format_vertex(a)} -> {format_vertex(b)}" for a, b in seed.quiver.arrows())
    return "\n".join(lines)


def _seed(args, config: Config, out: Output) -> int:
    seed = initial_seed(args.n, args.m)
    out.emit(_seed_text(seed), seed.to_dict())
    return EXIT_OK


def _mutate(args, config: Config, out: Output) -> int:
    if args.seed_file:
        seed = Seed.from_dict(load_json(read_payload(args.seed_file)))
        if (seed.n, seed.m) != (args.n, args.m):
            raise FormatError(f"seed is for Gr({seed.n},{seed.m}), command is for Gr({args.n},{args.m})")
    else:
        seed = initial_seed(args.n, args.m)
    steps = [parse_vertex(text) for text in args.at]
    if args.steps:
        listed = load_json(read_payload(args.steps))
        if not isinstance(listed, list):
            raise FormatError("--steps must be a JSON list of vertices")
        steps.extend(parse_vertex(str(item)) for item in listed)
    if not steps:
        raise FormatError("no mutation requested (use --at or --steps)")

    lines: List[str] = []
    records = []
    failed = False
    for k in steps:
        if k not in seed.quiver.index:
            raise FormatError(f"{format_vertex(k)} is not a vertex of the seed")
        old = seed.labels[k]
        new = mutated_label(seed, k)
        line = f"{format_vertex(k)}: {old} -> {new}"
        record = {"vertex": format_vertex(k), "old": old.to_dict(), "new": new.to_dict()}
        if args.check:
            holds = exchange_check(seed, k, config)
            failed = failed or not holds
            line += " [relation holds]" if holds else " [relation FAILS]"
            record["relation_holds"] = holds
        lines.append(line)
        records.append(record)
        seed = mutate_seed(seed, k)
    out.emit("\n".join(lines), {"steps": records, "seed": seed.to_dict()})
    return EXIT_INPUT if failed else EXIT_OK


def _closure(args, config: Config, out: Output) -> int:
    result = cluster_closure(args.n, args.m, args.depth, config)
    variables = sorted(str(T) for T in result.variables)
    non_plucker = [str(T) for T in result.non_plucker]
    lines = [
        f"clusters: {len(result.clusters)}",
        f"variables: {len(variables)}",
        f"non-Plucker variables: {len(non_plucker)}",
    ]
    lines.extend(f"  {T}" for T in non_plucker)
    lines.append(f"depth: {result.depth}" + (" (truncated)" if result.truncated else ""))
    out.emit("\n".join(lines), {
        "clusters": len(result.clusters),
        "variables": variables,
        "non_plucker": non_plucker,
        "depth": result.depth,
        "truncated": result.truncated,
    })
    return EXIT_OK


def _immanant_check(args, config: Config, out: Output) -> int:
    T_prime, _ = small_gaps_form(parse_tableau(args.tableau, args.n, args.m))
    samples = args.samples or config.EVAL_SAMPLES
    rng = np.random.default_rng(config.RANDOM_SEED)
    mismatches = []
    for index in range(samples):
        X = random_rational_matrix(args.n, args.m, rng)
        if not immanant_check(T_prime, X, config):
            mismatches.append(index)
    if mismatches:
        text = f"mismatch at {len(mismatches)} of {samples} points"
    else:
        text = f"agree at {samples} points"
    out.emit(text, {"samples": samples, "mismatches": mismatches})
    return EXIT_INPUT if mismatches else EXIT_OK


def _eval(args, config: Config, out: Output) -> int:
    X = parse_matrix(args.matrix)
    if args.tableau is not None:
        p = ch(parse_tableau(args.tableau, args.n, args.m), config, clear=False)
    else:
        p = parse_polynomial(args.poly, args.n, args.m)
    value = p.evaluate(X)
    out.emit(str(value), {"value": str(value)})
    return EXIT_OK


def _reproduce(args, config: Config, out: Output) -> int:
    loader = CatalogLoader(config.CATALOG_DIR)
    console = out.console
    if args.list:
        table = Table(title="grtab example catalog")
        table.add_column("#", justify="right")
        table.add_column("Example")
        table.add_column("Command")
        for index, entry in enumerate(loader.entries, start=1):
            table.add_row(str(index), entry.name, "grtab " + " ".join(entry.command))
        console.print(table)
        return EXIT_OK

    table = Table(title="grtab example catalog")
    table.add_column("#", justify="right")
    table.add_column("Example")
    table.add_column("Result")
    failures = 0
    for index, entry in enumerate(loader.entries, start=1):
        buffer = io.StringIO()
        code = run(entry.command, stream=buffer)
        passed = code == EXIT_OK and buffer.getvalue().strip() == entry.expected.strip()
        if not passed:
            failures += 1
            logger.warning("example %d (%s) printed %r with exit code %d", index, entry.name, buffer.getvalue(), code)
        table.add_row(str(index), entry.name, "pass" if passed else "FAIL")
    console.print(table)
    console.out(f"{loader.get_entry_count() - failures}/{loader.get_entry_count()} examples reproduced", highlight=False)
    return EXIT_OK if failures == 0 else EXIT_INPUT


COMMANDS: Dict[str, Callable] = {
    "convert": _convert,
    "factor": _factor,
    "ch": _ch,
    "qchar": _qchar,
    "reality": _reality,
    "prime": _prime,
    "compatible": _compatible,
    "zelevinsky": _zelevinsky,
    "lm": _lm,
    "gvector": _gvector,
    "seed": _seed,
    "mutate": _mutate,
    "closure": _closure,
    "immanant-check": _immanant_check,
    "eval": _eval,
    "reproduce": _reproduce,
}


# ==================== ENTRY ====================

def _config_from(args) -> Config:
    config = Config()
    if args.max_k is not None:
        config.MAX_K = args.max_k
    if args.threads is not None:
        config.THREADS = args.threads
    if args.log_level is not None:
        config.LOG_LEVEL = args.log_level
    config.validate()
    return config


def run(argv: Optional[List[str]] = None, stream: Optional[TextIO] = None) -> int:
    """
    Run one grtab command.

    Args:
        argv: Arguments without the program name (default sys.argv[1:])
        stream: Where results go (default stdout)

    Returns:
        int: The exit code
    """
    console = Console(file=stream or sys.stdout, highlight=False, markup=False, emoji=False, soft_wrap=True)
    errors = Console(stderr=True, highlight=False, markup=False, soft_wrap=True)
    try:
        args = build_parser().parse_args(argv)
        config = _config_from(args)
        setup_logging(config.LOG_LEVEL)
        return COMMANDS[args.command](args, config, Output(console, args.json))
    except SystemExit as exc:
        # --help
        return exc.code if isinstance(exc.code, int) else EXIT_OK
    except KeyboardInterrupt:
        errors.out("interrupted", highlight=False)
        return EXIT_INTERRUPTED
    except GrtabError as exc:
        errors.out(f"error: {type(exc).__name__}: {exc}", highlight=False)
        return exc.exit_code
    except ValueError as exc:
        errors.out(f"error: {type(exc).__name__}: {exc}", highlight=False)
        return EXIT_INPUT
    except Exception as exc:
        logger.exception("unexpected failure: %s", exc)
        errors.out(f"Fatal error: {exc}", highlight=False)
        return EXIT_INPUT

"""
Command-Line Interface for OU Matrix Braid Analysis
"""

import argparse
import json
import logging
import os
import sys
from typing import Any, Dict, List, Optional

from dotenv import load_dotenv

# Add parent directory to path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.core import families
from src.core.braid import BraidParseError, BraidWord, format_word, parse_word
from src.core.checks import PropertyChecker
from src.core.invariants import invariant_report
from src.core.layers import finest_layering
from src.core.permutation import parse_permutation
from src.core.warping import wd_exact, wd_heuristic
from src.utils.config_manager import ConfigManager
from src.utils.performance_metrics import SearchMetrics
from src.utils.validator import ReportValidator, validate_layering

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_REFUSED = 3

FAMILIES = ['weaving', 'fundamental', 'delta-power', 'permutation', 'det-witness',
            'random', 'random-positive', 'random-positive-pure']


class RefusedError(Exception):
    """Exact search refused for the strand count"""


def _print_json(data: Dict[str, Any]):
    print(json.dumps(data, indent=2, sort_keys=True))


def _error(message: str, code: int) -> int:
    print(f"error: {message}", file=sys.stderr)
    return code


def read_word(args: argparse.Namespace) -> BraidWord:
    """Word from --word or --file, on --strands strands when given"""
    if args.word is not None and args.file is not None:
        raise ValueError("Give either --word or --file, not both")
    if args.file is not None:
        try:
            with open(args.file, 'r', encoding='utf-8') as f:
                text = f.read()
        except OSError as e:
            raise ValueError(f"Cannot read {args.file}: {e}")
    elif args.word is not None:
        text = args.word
    else:
        raise ValueError("A braid word is required (--word or --file)")
    return parse_word(text, args.strands)


def _matrix_lines(rows: List[List[int]]) -> List[str]:
    width = max((len(str(v)) for row in rows for v in row), default=1)
    return ["  " + " ".join(str(v).rjust(width) for v in row) for row in rows]


# ============================================================================
# Commands
# ============================================================================

def cmd_analyze(args: argparse.Namespace, config: ConfigManager) -> int:
    """Invariant report for one word"""
    word = read_word(args)
    _check_budget(args.budget)
    pi = parse_permutation(args.pi) if args.pi else None
    warping = 'exact' if args.exact else 'heuristic' if args.heuristic else None
    if warping == 'exact':
        _check_exact_allowed(word, args.budget, config)

    report = invariant_report(word, pi, warping=warping, seed=args.seed, node_budget=args.budget)
    is_valid, message, _ = ReportValidator().validate_report(report)
    if not is_valid:
        logger.warning(f"Report consistency check failed: {message}")

    if args.format == 'json':
        data = report.to_dict()
        if warping == 'heuristic':
            data['seed'] = args.seed
        _print_json(data)
        return EXIT_OK

    lines = [
        f"word: {report.word}",
        f"strands: {report.n}",
        f"length: {report.length}",
        f"rho: {list(report.rho)}",
        f"order: {list(report.order)}",
        "OU matrix:",
        *_matrix_lines(report.ou_matrix.to_lists()),
        f"det: {report.det}",
        f"rank: {report.rank}",
        f"charpoly: {report.charpoly}",
        f"over set: {report.over_set}",
        f"under set: {report.under_set}",
    ]
    if report.wd is not None:
        lines.append(f"wd: {report.wd.value} (order {list(report.wd.order.image)}, exact={report.wd.exact})")
    if warping == 'heuristic':
        lines.append(f"seed: {args.seed}")
    print("\n".join(lines))
    return EXIT_OK


def _check_budget(budget: Optional[int]):
    if budget is not None and budget < 1:
        raise ValueError(f"--budget must be >= 1, got {budget}")


def _check_exact_allowed(word: BraidWord, budget: Optional[int], config: ConfigManager):
    limit = config.get_max_exact_strands()
    if budget is None and word.n > limit:
        raise RefusedError(f"exact search on {word.n} strands exceeds the limit of {limit}; "
                           f"pass --budget to run a bounded search")


def cmd_wd(args: argparse.Namespace, config: ConfigManager) -> int:
    """Warping degree of one word"""
    word = read_word(args)
    _check_budget(args.budget)

    metrics = None
    if args.heuristic:
        result = wd_heuristic(word, args.seed)
    else:
        _check_exact_allowed(word, args.budget, config)
        threads = args.threads if args.threads is not None else config.get_threads()
        metrics = SearchMetrics()
        result = wd_exact(word, node_budget=args.budget, threads=threads, metrics=metrics)

    if args.format == 'json':
        data = result.to_dict()
        data['n'] = word.n
        data['word'] = format_word(word)
        if args.heuristic:
            data['seed'] = args.seed
        _print_json(data)
        return EXIT_OK

    print(f"wd: {result.value}")
    print(f"order: {list(result.order.image)}")
    print(f"exact: {str(result.exact).lower()}")
    if args.heuristic:
        print(f"seed: {args.seed}")
    if metrics is not None:
        summary = metrics.get_summary()
        logger.info(f"nodes={summary['nodes_expanded']} pruned={summary['pruning_rate']} time={summary['time']}")
    return EXIT_OK


def cmd_layers(args: argparse.Namespace, config: ConfigManager) -> int:
    """Finest layering with per-layer determinants"""
    word = read_word(args)
    decomposition = finest_layering(word)
    is_valid, message, _ = validate_layering(word, decomposition)
    if not is_valid:
        logger.warning(f"Layering check failed: {message}")

    dets = decomposition.layer_dets()
    product = decomposition.det_product()
    holds = decomposition.det_product_holds(word)
    if decomposition.is_completely_layered:
        status = 'completely layered'
    elif decomposition.is_layered:
        status = 'layered'
    else:
        status = 'not layered'

    if args.format == 'json':
        _print_json({
            'n': word.n,
            'word': format_word(word),
            'status': status,
            'layers': [list(layer) for layer in decomposition.layers],
            'layer_words': [format_word(w) for w in decomposition.layer_words],
            'layer_dets': [str(d) for d in dets],
            'det_product': str(product),
            'det_product_holds': holds,
        })
        return EXIT_OK

    print(f"layers: {decomposition.k} ({status})")
    for idx, (layer, layer_word, d) in enumerate(zip(decomposition.layers, decomposition.layer_words, dets), 1):
        strands = ",".join(str(s) for s in layer)
        print(f"  layer {idx}: {{{strands}}}  word: \"{format_word(layer_word)}\"  det: {d}")
    print(f"det product: {product} ({'holds' if holds else 'FAILS'})")
    return EXIT_OK


def _int_params(params: List[str], count: int, family: str) -> List[int]:
    if len(params) != count:
        raise ValueError(f"{family} takes {count} integer parameter(s), got {len(params)}")
    try:
        return [int(p) for p in params]
    except ValueError:
        raise ValueError(f"{family} parameters must be integers, got {params}")


def generate(family: str, params: List[str], seed: int) -> BraidWord:
    """Build a word of the named family"""
    if family == 'weaving':
        p, q = _int_params(params, 2, family)
        return families.weaving(p, q)
    if family == 'fundamental':
        (n,) = _int_params(params, 1, family)
        return families.fundamental(n)
    if family == 'delta-power':
        n, r = _int_params(params, 2, family)
        return families.delta_power(n, r)
    if family == 'permutation':
        if len(params) < 1:
            raise ValueError("permutation takes the target braid permutation, e.g. 3,1,2")
        return families.permutation_braid(parse_permutation(" ".join(params)))
    if family == 'det-witness':
        (k,) = _int_params(params, 1, family)
        return families.det_witness(k)
    if family == 'random':
        n, length = _int_params(params, 2, family)
        return families.random_braid(n, length, seed)
    if family == 'random-positive':
        n, length = _int_params(params, 2, family)
        return families.random_positive(n, length, seed)
    if family == 'random-positive-pure':
        n, length = _int_params(params, 2, family)
        return families.random_positive_pure(n, length, seed)
    raise ValueError(f"Unknown family {family!r}; choose from {', '.join(FAMILIES)}")


def cmd_gen(args: argparse.Namespace, config: ConfigManager) -> int:
    """Print a family member in parse_word format"""
    word = generate(args.family, args.params, args.seed)
    randomized = args.family.startswith('random')
    if args.format == 'json':
        data = {'family': args.family, 'n': word.n, 'word': format_word(word)}
        if randomized:
            data['seed'] = args.seed
        _print_json(data)
        return EXIT_OK
    if randomized:
        print(f"seed: {args.seed}", file=sys.stderr)
    print(format_word(word))
    return EXIT_OK


def cmd_check(args: argparse.Namespace, config: ConfigManager) -> int:
    """Run property suites"""
    checker = PropertyChecker(config)
    if args.suite != 'all' and args.suite not in checker.suite_names:
        raise ValueError(f"Unknown suite {args.suite!r}; choose from all, {', '.join(checker.suite_names)}")

    results = checker.run([args.suite], args.seed, args.cases)
    if args.csv:
        checker.save_to_csv(args.csv)

    if args.format == 'json':
        _print_json({
            'seed': args.seed,
            'suites': [{
                'suite': r.suite,
                'cases': r.cases,
                'passed': r.passed,
                'failed': r.failed,
                'counterexample': r.counterexample,
            } for r in results],
        })
    else:
        print(f"seed: {args.seed}")
        for r in results:
            verdict = 'pass' if r.ok else 'FAIL'
            print(f"{r.suite}: {verdict} ({r.passed}/{r.cases})")
            if r.counterexample:
                print(f"  first counterexample: {r.counterexample}")

    return EXIT_OK if all(r.ok for r in results) else EXIT_CHECK_FAILED


# ============================================================================
# Parser
# ============================================================================

def build_parser(config: ConfigManager) -> argparse.ArgumentParser:
    default_seed = config.get_default_seed()
    default_format = config.get_default_format()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=['text', 'json'], default=default_format)
    # also accepted after the subcommand; SUPPRESS keeps a flag given before it
    common.add_argument('--verbose', action='store_true', default=argparse.SUPPRESS, help='log INFO messages to stderr')
    common.add_argument('--debug', action='store_true', default=argparse.SUPPRESS, help='log DEBUG messages to stderr')

    word_input = argparse.ArgumentParser(add_help=False)
    word_input.add_argument('--word', help='braid word, e.g. "1 -2 3^2"')
    word_input.add_argument('--file', help='read the word from a file (newlines count as spaces)')
    word_input.add_argument('--strands', type=int, help='strand count (default: 1 + largest generator)')

    parser = argparse.ArgumentParser(prog='ou-braid', description='OU matrices and warping degrees of braid diagrams')
    parser.add_argument('--config', help='path to a config.ini file')
    parser.add_argument('--verbose', action='store_true', help='log INFO messages to stderr')
    parser.add_argument('--debug', action='store_true', help='log DEBUG messages to stderr')
    sub = parser.add_subparsers(dest='command', required=True)

    analyze = sub.add_parser('analyze', parents=[common, word_input], help='invariant report')
    analyze.add_argument('--pi', help='strand permutation for the displayed matrix, e.g. 1,3,2')
    mode = analyze.add_mutually_exclusive_group()
    mode.add_argument('--exact', action='store_true', help='include the exact warping degree')
    mode.add_argument('--heuristic', action='store_true', help='include the heuristic warping degree')
    analyze.add_argument('--budget', type=int, help='node budget for the exact search')
    analyze.add_argument('--seed', type=int, default=default_seed)
    analyze.set_defaults(handler=cmd_analyze)

    wd = sub.add_parser('wd', parents=[common, word_input], help='warping degree')
    mode = wd.add_mutually_exclusive_group()
    mode.add_argument('--exact', action='store_true', help='branch and bound (default)')
    mode.add_argument('--heuristic', action='store_true', help='greedy + local search')
    wd.add_argument('--budget', type=int, help='node budget; result may be inexact when it runs out')
    wd.add_argument('--seed', type=int, default=default_seed)
    wd.add_argument('--threads', type=int, help='worker processes for the exact search')
    wd.set_defaults(handler=cmd_wd)

    layers = sub.add_parser('layers', parents=[common, word_input], help='finest layer decomposition')
    layers.set_defaults(handler=cmd_layers)

    gen = sub.add_parser('gen', parents=[common], help='generate a braid word')
    gen.add_argument('family', help=f"one of: {', '.join(FAMILIES)}")
    gen.add_argument('params', nargs='*')
    gen.add_argument('--seed', type=int, default=default_seed)
    gen.set_defaults(handler=cmd_gen)

    check = sub.add_parser('check', parents=[common], help='randomized property suites')
    check.add_argument('suite', help='suite name or "all"')
    check.add_argument('--seed', type=int, default=default_seed)
    check.add_argument('--cases', type=int, help='cases per suite')
    check.add_argument('--csv', help='write the suite table to a CSV file')
    check.set_defaults(handler=cmd_check)

    return parser


def _configure_logging(args: argparse.Namespace):
    level = logging.WARNING
    if args.debug:
        level = logging.DEBUG
    elif args.verbose:
        level = logging.INFO
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )
    logging.getLogger().setLevel(level)


def _config_path(argv: List[str]) -> Optional[str]:
    for idx, arg in enumerate(argv):
        if arg == '--config' and idx + 1 < len(argv):
            return argv[idx + 1]
        if arg.startswith('--config='):
            return arg.split('=', 1)[1]
    return None


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI

    Args:
        argv: Arguments without the program name (sys.argv[1:] when None)

    Returns:
        Process exit code
    """
    argv = list(sys.argv[1:] if argv is None else argv)
    load_dotenv()

    # config defaults feed the parser, so the config path is read first
    config = ConfigManager(_config_path(argv))
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_BAD_INPUT
    _configure_logging(args)

    try:
        return args.handler(args, config)
    except RefusedError as e:
        return _error(str(e), EXIT_REFUSED)
    except BraidParseError as e:
        return _error(f"parse error: {e}", EXIT_BAD_INPUT)
    except ValueError as e:
        return _error(str(e), EXIT_BAD_INPUT)


if __name__ == '__main__':
    sys.exit(main())

"""Argument grammar and exit codes of the ``census`` command.

Exit status: 0 on success, 1 for usage errors and out-of-range parameters,
2 when an internal invariant check fails or anything unexpected happens.
"""

import argparse
import logging
import re
import sys
import time
from pathlib import Path
from typing import List, Optional

from common.config import CensusConfig
from common.errors import CensusError, InvariantViolation
from common.logging_config import setup_logging, with_correlation_id
from . import __version__
from .commands import COLUMN_HELP, COMMANDS

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2

_POWER_RANGE = re.compile(r"^2\^(\d+)\.\.2\^(\d+)$")


class CensusArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text}")
    return value


def positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text}")
    return value


def int_grid(text: str) -> List[int]:
    """Comma-separated integers; ``2^a..2^b`` expands to every power of two in between."""
    values: List[int] = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        match = _POWER_RANGE.match(item)
        if match:
            low, high = int(match.group(1)), int(match.group(2))
            if low > high:
                raise argparse.ArgumentTypeError(f"empty power range {item}")
            values.extend(2 ** e for e in range(low, high + 1))
        else:
            try:
                values.append(positive_int(item))
            except ValueError:
                raise argparse.ArgumentTypeError(f"not an integer: {item!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("grid is empty")
    return values


def _columns_epilog(*keys: str) -> str:
    lines = ["CSV columns:"]
    for key in keys:
        lines.append(f"  {key}: {', '.join(COLUMN_HELP[key])}")
    return "\n".join(lines)


def allow_exact_digits(limit: int) -> None:
    """Let exact counts of up to ``limit`` digits be printed and serialized."""
    current = getattr(sys, 'get_int_max_str_digits', lambda: 0)()
    if current and current < limit:
        sys.set_int_max_str_digits(limit)


def build_parser() -> CensusArgumentParser:
    parser = CensusArgumentParser(
        prog="census",
        description="Subgroup census, cover family and hyperbolic bound experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python census.py census --max-index 5
  python census.py family --r 64 --verify-reps
  python census.py diameter-scan --r-grid 2^4..2^12 --samples 10 --seed 1
  python census.py random-graph --n-grid 2^8..2^13 --k 5 --trials 20 --seed 1
  python census.py bounds --n 3 --d 10 --a 1 --b 1
  python census.py nerve --points 10000 --radius 2 --seed 1
        """,
    )
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    parser.add_argument('--output-dir', type=Path, default=None,
                        help='Directory for the CSV and JSON files (default: config general.output_dir)')
    parser.add_argument('--config', type=Path, default=None,
                        help='YAML configuration file (default: config/census_config.yaml)')
    parser.add_argument('--verbose', '-v', action='store_true', help='Log at DEBUG level')
    parser.add_argument('--workers', type=positive_int, default=None,
                        help='Worker processes for the census and random graphs')
    parser.add_argument('--progress', action='store_true', help='Show progress bars')

    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True
    formatter = argparse.RawDescriptionHelpFormatter

    census = sub.add_parser('census', help="Hall's recurrence vs. exhaustive subgroup classes",
                            formatter_class=formatter, epilog=_columns_epilog('census'))
    census.add_argument('--max-index', type=positive_int, required=True, help='Largest index r')
    census.add_argument('--cutoff', type=positive_int, default=None,
                        help='Refuse exhaustive search above this degree')

    family = sub.add_parser('family', help='List the cover family S or verify its representatives',
                            formatter_class=formatter,
                            epilog=_columns_epilog('family', 'family --verify-reps'))
    family.add_argument('--r', type=int, required=True, help='Degree r >= 5')
    family.add_argument('--mode', default=None, help="'all-below-half' or 'even-only'")
    family.add_argument('--verify-reps', action='store_true',
                        help='Check every coset representative against the selected members')
    family.add_argument('--budget', type=non_negative_int, default=None,
                        help='Most members to enumerate or sample')
    family.add_argument('--seed', type=non_negative_int, default=None,
                        help='Sample members uniformly with this seed')
    family.add_argument('--k', type=positive_int, default=None,
                        help='Commensurator index k of the lower-bound count (default from config)')
    family.add_argument('--dominance-grid', type=int_grid, default=None,
                        help='Degrees at which to report ln(count) - r, e.g. 2^4..2^10')

    scan = sub.add_parser('diameter-scan', help='Coset-graph diameters of sampled family members',
                          formatter_class=formatter, epilog=_columns_epilog('diameter-scan'))
    scan.add_argument('--r-grid', type=int_grid, required=True, help='Degrees, e.g. 16,32 or 2^4..2^12')
    scan.add_argument('--samples', type=non_negative_int, required=True, help='Members per degree')
    scan.add_argument('--seed', type=non_negative_int, required=True)
    scan.add_argument('--mode', default=None, help="'all-below-half' or 'even-only'")
    scan.add_argument('--sub-grid-max', type=positive_int, default=2 ** 8,
                      help='Largest degree of the sub-grid the fitted D is compared with')

    graphs = sub.add_parser('random-graph', help='Diameters of random 2k-regular covers',
                            formatter_class=formatter, epilog=_columns_epilog('random-graph'))
    graphs.add_argument('--n-grid', type=int_grid, required=True, help='Vertex counts')
    graphs.add_argument('--k', type=positive_int, default=5, help='Permutations per graph (>= 5)')
    graphs.add_argument('--trials', type=non_negative_int, required=True)
    graphs.add_argument('--seed', type=non_negative_int, required=True)

    bounds = sub.add_parser('bounds', help='Log-space counting bounds for dimension n and diameter d',
                            formatter_class=formatter, epilog=_columns_epilog('bounds'))
    bounds.add_argument('--n', type=int, required=True, help='Dimension (>= 3)')
    bounds.add_argument('--d', type=positive_float, required=True, help='Diameter bound')
    for name in ('a', 'b', 'c', 'c1', 'c2', 'c3', 'c4', 'k'):
        bounds.add_argument(f'--{name}', type=positive_float, default=None,
                            help=f'Constant {name} (default from config)')
    bounds.add_argument('--growth-constant', type=positive_float, default=None,
                        help='Diameter growth constant D; adds the family cover count at diameter d')

    nerve = sub.add_parser('nerve', help='Separated net and nerve of a synthetic cloud',
                           formatter_class=formatter, epilog=_columns_epilog('nerve'))
    nerve.add_argument('--points', type=non_negative_int, required=True)
    nerve.add_argument('--radius', type=positive_float, required=True, help='Radius of the sampled ball')
    nerve.add_argument('--seed', type=non_negative_int, required=True)
    nerve.add_argument('--euclidean', action='store_true', help='Sample and measure in Euclidean space')
    nerve.add_argument('--sep', type=positive_float, default=None,
                       help='Net separation; the nerve radius is 4 * sep')
    nerve.add_argument('--dim', type=int, default=3)

    return parser


@with_correlation_id()
def _execute(args: argparse.Namespace, config: CensusConfig, output_dir: Path) -> int:
    logger.info(f"Running {args.command}")
    start = time.perf_counter()
    record = COMMANDS[args.command](args, config)
    record.duration_ms = (time.perf_counter() - start) * 1000.0
    record.write(output_dir)
    message = record.summary.get('message')
    if message:
        print(message)
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    config = CensusConfig(args.config)
    setup_logging(
        log_level='DEBUG' if args.verbose else config.log_level,
        enable_file=bool(config.get_setting('general', 'log_to_file', False)),
        enable_json=bool(config.get_setting('general', 'log_to_file', False)),
        log_dir=config.get_path('log_dir'),
        service_name='census',
    )
    if args.workers is None:
        args.workers = config.workers
    allow_exact_digits(int(config.get_setting('family', 'exact_digit_limit', 10 ** 6)))
    output_dir = args.output_dir or config.get_path('output_dir')

    try:
        return _execute(args, config, output_dir)
    except InvariantViolation as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_INVARIANT
    except CensusError as e:
        parser.print_usage(sys.stderr)
        logger.error(f"{args.command}: {e}")
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except Exception:
        logger.exception(f"{args.command} failed unexpectedly")
        return EXIT_INVARIANT

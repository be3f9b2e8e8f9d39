import argparse
from typing import List, Optional

from pydantic import ValidationError

from src.cli.commands import (
    EXIT_NEGATIVE,
    EXIT_PARSE,
    cmd_analyze,
    cmd_design,
    cmd_export,
    cmd_search,
    cmd_simulate,
    cmd_verify,
)
from src.config import config
from src.errors import IfcError, ParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ifc",
        description="Design, verify and simulate alignment codes for K-user interference channels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="check a codebook for decodability and efficiency")
    analyze.add_argument("matrix", help="integer channel matrix file")
    analyze.add_argument("codebook", help="codebook file, one comma-separated line per user")
    analyze.set_defaults(handler=cmd_analyze)

    design = sub.add_parser("design", help="build the progression code of a matrix")
    design.add_argument("matrix")
    design.add_argument("-o", "--output", help="codebook file to write (stdout if omitted)")
    design.add_argument("--isolated-size", type=int, default=None, metavar="T",
                        help="give interference-free users {0..T} instead of failing")
    design.set_defaults(handler=cmd_design)

    search = sub.add_parser("search", help="search the equivalence class for the best progression code")
    search.add_argument("matrix")
    search.add_argument("--r-max", type=int, default=None, help=f"largest column scale (default {config['r_max']})")
    search.add_argument("--s-cap", type=int, default=None, help=f"largest set size (default {config['s_cap']})")
    search.add_argument("--time-budget-secs", type=float, default=None)
    search.add_argument("--no-row-division", action="store_true", help="keep every d_i at 1")
    search.add_argument("--config", default=None, help="key = value file with search bounds")
    search.add_argument("-o", "--output", help="certificate JSON to write (stdout if omitted)")
    search.set_defaults(handler=cmd_search)

    verify = sub.add_parser("verify", help="re-check a search certificate from scratch")
    verify.add_argument("certificate")
    verify.set_defaults(handler=cmd_verify)

    export = sub.add_parser("export", help="layered codebook for the source matrix of a certificate")
    export.add_argument("certificate")
    export.add_argument("--depth", type=int, default=2, help="number of layers")
    export.add_argument("-o", "--output")
    export.set_defaults(handler=cmd_export)

    simulate = sub.add_parser("simulate", help="Monte-Carlo sweep of the lattice scheme, CSV output")
    simulate.add_argument("config", help="key = value simulation file")
    simulate.add_argument("-o", "--output", help="CSV file to write (stdout if omitted)")
    simulate.set_defaults(handler=cmd_simulate)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParseError as exc:
        logger.error(f"❌ [CLI] {exc}")
        return EXIT_PARSE
    except ValidationError as exc:
        logger.error(f"❌ [CLI] invalid input: {exc.errors()[0]['msg']}")
        return EXIT_PARSE
    except IfcError as exc:
        logger.error(f"❌ [CLI] {type(exc).__name__}: {exc}")
        return EXIT_NEGATIVE

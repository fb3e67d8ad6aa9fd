from argparse import ArgumentParser, Namespace
from typing import List, Optional

from gottlieb_groups import __version__
from gottlieb_groups.logging import setup_logger

logger = setup_logger(__name__)

WHAT_CHOICES = ["pi", "P", "Pprime", "Pdoubleprime", "G", "Gprime", "Gdoubleprime"]
FIELD_CHOICES = ["R", "C", "H", "K"]
FORMAT_CHOICES = ["text", "machine"]


def _add_cell_arguments(parser: ArgumentParser, ranges: bool) -> None:
    parser.add_argument("--what", required=True, choices=WHAT_CHOICES,
                        help="Which group: homotopy (pi), Whitehead center (P, Pprime, Pdoubleprime) or Gottlieb (G, Gprime, Gdoubleprime)")
    parser.add_argument("--field", required=True, choices=FIELD_CHOICES,
                        help="R, C, H for FP^n; K for the Cayley plane (n = 2)")
    if ranges:
        parser.add_argument("--n", help="Dimension or range a..b (default 1..8, or 2 for K)")
        parser.add_argument("--k", help="Degree or range a..b; an open end stops at GOTTLIEB_DUMP_K_MAX")
    else:
        parser.add_argument("--n", required=True, type=int, help="Projective dimension n of FP^n")
        parser.add_argument("--k", required=True, type=int, help="Homotopy degree k")
    parser.add_argument("--p", type=int, help="Restrict the answer to its p-primary component (odd prime)")
    parser.add_argument("--format", default="text", choices=FORMAT_CHOICES, help="Output format (default: text)")


def build_parser(description: str) -> ArgumentParser:
    parser = ArgumentParser(prog="gottlieb", description=description)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--catalog", help="Catalog file (overrides GOTTLIEB_CATALOG and the bundled catalog)")
    parser.add_argument("--log-level", help="Log level when REAL_LOGGER=true (overrides GOTTLIEB_LOG_LEVEL)")

    verbs = parser.add_subparsers(dest="verb", required=True)
    _add_cell_arguments(verbs.add_parser("query", help="Answer one query"), ranges=False)
    _add_cell_arguments(verbs.add_parser("dump", help="Print every covered cell of a range"), ranges=True)
    selfcheck = verbs.add_parser("selfcheck", help="Run the invariant suites against the catalog")
    selfcheck.add_argument("--limit", type=int, help="Largest n scanned (default: GOTTLIEB_CHECK_LIMIT)")
    selfcheck.add_argument("--verbose", action="store_true", help="List every failure")
    export = verbs.add_parser("export", help="Write the catalog as YAML")
    export.add_argument("--output", help="File to write (default: stdout)")
    return parser


def parse_args(description: str, argv: Optional[List[str]] = None) -> Namespace:
    parser = build_parser(description)
    args = parser.parse_args(argv)

    logger.info(f"Parsed arguments: {args}")

    return args

"""
Command-line front end: ``gottlieb query|dump|selfcheck|export``.

Exit codes: 0 answered (not_covered included), 1 self-check failure,
2 usage error, 3 catalog load error.
"""

import sys
from argparse import Namespace
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from gottlieb_groups.arg_parser import parse_args
from gottlieb_groups.config import get_settings
from gottlieb_groups.logging import set_package_level, setup_logger
from gottlieb_groups.projspace import Field
from gottlieb_groups.query import DumpFilter, Query, dump, evaluate, parse_range
from gottlieb_groups.render import render, render_machine
from gottlieb_groups.selfcheck import run_selfcheck
from gottlieb_groups.tables import Catalog, CatalogError, export_catalog, load_catalog

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_SELFCHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_CATALOG = 3

DEFAULT_N_RANGE = (1, 8)


def _usage_error(message: str) -> int:
    print(f"gottlieb: error: {message}", file=sys.stderr)
    return EXIT_USAGE


def run_query(args: Namespace, cat: Catalog) -> int:
    q = Query(what=args.what, field=args.field, n=args.n, k=args.k, p=args.p, format=args.format)
    print(render(evaluate(q, cat), q.format))
    return EXIT_OK


def run_dump(args: Namespace, cat: Catalog) -> int:
    settings = get_settings()
    default_n = (2, 2) if args.field == Field.K.value else DEFAULT_N_RANGE
    try:
        n_range = parse_range(args.n, default_n)
        k_range = parse_range(args.k, (1, settings.dump_k_max))
    except ValueError as e:
        return _usage_error(f"bad range: {e}")
    flt = DumpFilter(what=args.what, field=args.field, n_range=n_range, k_range=k_range, p=args.p,
                     format=args.format)
    for q, result in dump(flt, cat):
        if flt.format == "machine":
            print(f"{q.field.value}|{q.n}|{q.k}|{render_machine(result)}")
        else:
            print(render(result, "text"))
    return EXIT_OK


def run_selfcheck_verb(args: Namespace, cat: Catalog) -> int:
    limit = args.limit if args.limit is not None else get_settings().check_limit
    report = run_selfcheck(cat, limit)
    print(report.render(max_failures=10 ** 6 if args.verbose else 10))
    return EXIT_OK if report.ok else EXIT_SELFCHECK_FAILED


def run_export(args: Namespace, cat: Catalog) -> int:
    text = export_catalog(cat)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info(f"Exported catalog to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


VERBS = {
    "query": run_query,
    "dump": run_dump,
    "selfcheck": run_selfcheck_verb,
    "export": run_export,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_args("Gottlieb groups, Whitehead center groups and homotopy groups of projective spaces", argv)
    settings = get_settings()
    set_package_level(args.log_level or settings.log_level)

    path = settings.catalog_path(Path(args.catalog) if args.catalog else None)
    try:
        cat = load_catalog(path)
    except (CatalogError, OSError) as e:
        logger.error(f"Failed to load catalog {path}: {str(e)}", exc_info=True)
        print(f"gottlieb: cannot load catalog {path}: {e}", file=sys.stderr)
        return EXIT_CATALOG

    try:
        return VERBS[args.verb](args, cat)
    except ValidationError as e:
        return _usage_error("; ".join(err["msg"] for err in e.errors()))


if __name__ == "__main__":
    sys.exit(main())

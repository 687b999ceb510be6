#!/usr/bin/python3

import argparse
import sys
from os import path
from typing import List, Optional

from src.common import set_verbose
from src.diagram import (
    DiagramError,
    check_structure,
    diagram_of,
    find_sinks,
    format_cells,
    render_chips,
    render_diagram,
    sharp_support_violations,
)
from src.enumerator import BudgetExceededError, enumerate_models
from src.model.constraints import (
    ConstraintsComplianceError,
    SearchSpecConstraints,
    desk_scale_n,
    max_jobs,
)
from src.model.estimation import mle_1d
from src.model.families import one_parameter_family
from src.model.formulas import degree_bound
from src.model.input import SearchSpec, default_budget, pruning_rules
from src.model.model import ModelError, ReducedModel, solve_scalings
from src.model.operations import compose, compose_at, polynomial_model, unsplit
from src.model.serialization import (
    ParseError,
    counts_by_pair,
    entry_order,
    format_catalog,
    format_catalog_json,
    format_model,
    parse_counts,
    parse_model,
    parse_rational,
    parse_support,
)
from src.polynomial import format_rational
from src.verification import (
    CellCatalogs,
    cell_search,
    verify_recursive,
    verify_table,
)
from utils import parse_input, parse_point, read_model, read_text

exit_ok = 0
exit_failure = 1
exit_input_error = 2
exit_budget = 3


class VerificationFailure(Exception):

    """A checked property does not hold"""

    pass


def init_parser(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-v", "--verbose", action="store_true", help="log to stderr"
    )
    parser.add_argument("--config", help="JSON file with default options")
    commands = parser.add_subparsers(dest="command", required=True)

    cmd = commands.add_parser("enumerate", help="enumerate one (n, d) cell")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--count-only", action="store_true")
    cmd.add_argument("--jobs", type=int)
    cmd.add_argument("--out", help="write the catalog to a file")
    cmd.add_argument("--up-to-swap", action="store_true")
    cmd.add_argument("--no-prune", nargs="+", choices=pruning_rules)
    cmd.add_argument("--budget", type=int)
    cmd.add_argument("--long-run", action="store_true")
    cmd.add_argument("--format", choices=("text", "json"))

    cmd = commands.add_parser("table", help="check the table of counts")
    cmd.add_argument("--max-n", type=int, required=True)
    cmd.add_argument("--jobs", type=int)
    cmd.add_argument("--budget", type=int)
    cmd.add_argument("--long-run", action="store_true")

    cmd = commands.add_parser("recursive", help="check the recursive count")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--jobs", type=int)
    cmd.add_argument("--budget", type=int)

    cmd = commands.add_parser("check", help="analyse a model or a support")
    cmd.add_argument("path", nargs="?", help="model file, '-' for stdin")
    cmd.add_argument("--support", help="'nu,mu;nu,mu;...'")

    cmd = commands.add_parser("solve", help="solve a support for scalings")
    cmd.add_argument("--support", required=True)

    cmd = commands.add_parser("compose", help="compose two models")
    cmd.add_argument("first")
    cmd.add_argument("second")
    cmd.add_argument("--at", help="'a,b' point of the first model")

    cmd = commands.add_parser("unsplit", help="apply one unsplitting move")
    cmd.add_argument("path")
    cmd.add_argument("--at", required=True, help="'a,b'")
    cmd.add_argument("--amount", required=True, help="p/q")

    cmd = commands.add_parser("diagram", help="print the Newton diagram")
    cmd.add_argument("path")
    cmd.add_argument("--marks", action="store_true")

    cmd = commands.add_parser("chips", help="print the chip configuration")
    cmd.add_argument("path")
    cmd.add_argument("--stars", action="store_true")

    cmd = commands.add_parser("mle", help="maximum likelihood estimate")
    cmd.add_argument("path")
    cmd.add_argument(
        "--counts", required=True, help="'u0,u1,...' in file line order"
    )

    cmd = commands.add_parser("family", help="one-parameter family member")
    cmd.add_argument("--n", type=int, required=True)
    cmd.add_argument("--d", type=int, required=True)
    cmd.add_argument("--c", required=True, help="p/q in (0, 1)")


def parse_arguments(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        description="Construct, check and enumerate one-dimensional models "
        "of maximum likelihood degree one"
    )
    init_parser(parser)
    return parser.parse_args(argv)


def option(args: argparse.Namespace, config: dict, key: str, default):
    """Command-line value, else configuration value, else default"""
    value = getattr(args, key, None)
    if value is None or value is False:
        value = config.get(key, default if value is None else value)
    return value


def worker_count(args: argparse.Namespace, config: dict) -> int:
    jobs = option(args, config, "jobs", 1)
    if not isinstance(jobs, int) or jobs < 1:
        raise ValueError(f"invalid worker count '{jobs}'")
    cap = max_jobs()
    return jobs if cap is None else min(jobs, cap)


def run_enumerate(args: argparse.Namespace, config: dict) -> int:
    spec = SearchSpec()
    spec.n = args.n
    spec.d = args.d
    spec.mode = "count-only" if args.count_only else "collect"
    spec.symmetry_report = args.up_to_swap
    spec.worker_count = worker_count(args, config)
    spec.budget = option(args, config, "budget", spec.budget)
    spec.long_run = option(args, config, "long_run", False)
    spec.disable(option(args, config, "no_prune", list()))
    SearchSpecConstraints(max_jobs()).validate(spec)
    if args.out is not None:
        folder = path.dirname(path.abspath(args.out))
        if not path.isdir(folder):
            raise ValueError(f"output directory {folder} not found")

    catalog = enumerate_models(spec)
    print(catalog.count)
    if spec.symmetry_report:
        print(f"up to swap: {catalog.count_up_to_swap}")
    if args.out is not None and spec.collect:
        if option(args, config, "format", "text") == "json":
            text = format_catalog_json(
                spec.n, spec.d, catalog.models, catalog.count_up_to_swap
            )
        else:
            text = format_catalog(catalog.models)
        with open(args.out, "w", encoding="utf-8") as fp:
            fp.write(text)
    return exit_ok


def _catalogs(
    args: argparse.Namespace, config: dict, long_run: bool
) -> CellCatalogs:
    search = cell_search(
        workers=worker_count(args, config),
        budget=option(args, config, "budget", default_budget),
        long_run=long_run,
    )
    return CellCatalogs(search)


def run_table(args: argparse.Namespace, config: dict) -> int:
    long_run = option(args, config, "long_run", False)
    if args.max_n > desk_scale_n and not long_run:
        raise ConstraintsComplianceError(
            f"rows beyond n = {desk_scale_n} need --long-run, got "
            f"--max-n {args.max_n}"
        )
    report = verify_table(args.max_n, _catalogs(args, config, long_run))
    for line in report.lines():
        print(line)
    if not report.ok:
        raise VerificationFailure("table mismatch")
    return exit_ok


def run_recursive(args: argparse.Namespace, config: dict) -> int:
    report = verify_recursive(args.n, _catalogs(args, config, False))
    print(report)
    if not report.ok:
        raise VerificationFailure(f"recursive count failed for n = {args.n}")
    return exit_ok


def _print_solving(support) -> Optional[ReducedModel]:
    model, report = solve_scalings(support)
    print(f"status: {report.status.value}")
    print(f"rank: {report.rank}")
    print(f"nullity: {report.nullity}")
    print(f"fundamental: {'yes' if report.fundamental else 'no'}")
    if not report.decided:
        print("positive scalings: undecided")
    elif model is None:
        print("positive scalings: none")
    else:
        print(f"model: {model}")
    return model


def _print_structure(model: ReducedModel) -> None:
    structure = check_structure(model)
    print(f"sinks: {format_cells(structure.sinks)}")
    print(f"sources: {format_cells(structure.sources)}")
    failures = structure.failures()
    print(f"structure: {'ok' if not failures else ', '.join(failures)}")
    if model.n >= 2 and model.degree == degree_bound(model.n):
        violations = sharp_support_violations(model.support, model.degree)
        print(f"sharp support: {' '.join(violations) or 'ok'}")


def _print_residual(model: ReducedModel) -> None:
    residual = "0" if not any(model.identity_residual()) else "nonzero"
    print(f"identity residual: {residual}")


def run_check(args: argparse.Namespace, config: dict) -> int:
    if (args.path is None) == (args.support is None):
        raise ParseError("give either a model file or --support")
    if args.support is not None:
        support = parse_support(args.support)
        print(f"degree: {max(nu + mu for nu, mu in support)}")
        model = _print_solving(support)
        if model is not None:
            _print_residual(model)
            _print_structure(model)
        return exit_ok

    model = read_model(args.path)
    _print_residual(model)
    print(f"degree: {model.degree}")
    _print_solving(model.support)
    _print_structure(model)
    return exit_ok


def run_solve(args: argparse.Namespace, config: dict) -> int:
    _print_solving(parse_support(args.support))
    return exit_ok


def run_compose(args: argparse.Namespace, config: dict) -> int:
    first, second = read_model(args.first), read_model(args.second)
    if args.at is None:
        model = compose(first, second)
    else:
        model = compose_at(first, second, *parse_point(args.at))
    sys.stdout.write(format_model(model))
    return exit_ok


def run_unsplit(args: argparse.Namespace, config: dict) -> int:
    model = read_model(args.path)
    a, b = parse_point(args.at)
    f = unsplit(model.polynomial(), a, b, parse_rational(args.amount))
    sys.stdout.write(format_model(polynomial_model(f)))
    return exit_ok


def run_diagram(args: argparse.Namespace, config: dict) -> int:
    diagram = diagram_of(read_model(args.path))
    report = find_sinks(diagram)
    print(render_diagram(diagram, args.marks))
    print(f"sinks: {format_cells(report.sinks)}")
    print(f"sources: {format_cells(report.sources)}")
    return exit_ok


def run_chips(args: argparse.Namespace, config: dict) -> int:
    print(render_chips(read_model(args.path), args.stars))
    return exit_ok


def run_mle(args: argparse.Namespace, config: dict) -> int:
    text = read_text(args.path)
    model = parse_model(text)
    counts = counts_by_pair(entry_order(text), parse_counts(args.counts))
    print(format_rational(mle_1d(model, counts)))
    return exit_ok


def run_family(args: argparse.Namespace, config: dict) -> int:
    family = one_parameter_family(args.n, args.d)
    model = family.instantiate(parse_rational(args.c))
    sys.stdout.write(format_model(model))
    return exit_ok


commands = {
    "enumerate": run_enumerate,
    "table": run_table,
    "recursive": run_recursive,
    "check": run_check,
    "solve": run_solve,
    "compose": run_compose,
    "unsplit": run_unsplit,
    "diagram": run_diagram,
    "chips": run_chips,
    "mle": run_mle,
    "family": run_family,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = parse_arguments(argv)
    set_verbose(args.verbose)
    try:
        config = parse_input(args.config) if args.config else dict()
        return commands[args.command](args, config)
    except BudgetExceededError as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_budget
    except (VerificationFailure, DiagramError) as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_failure
    except (
        ParseError,
        ModelError,
        ConstraintsComplianceError,
        ValueError,
        OSError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return exit_input_error


if __name__ == "__main__":
    sys.exit(main())

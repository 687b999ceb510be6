from dataclasses import dataclass, field
from functools import partial
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from .common import log
from .diagram import check_structure, sharp_support_violations
from .enumerator import Catalog, enumerate_models
from .model.constraints import desk_scale_n
from .model.families import binomial_model
from .model.formulas import (
    degree_bound,
    degree_window,
    long_run_counts,
    recursive_bound,
    table_counts,
)
from .model.input import SearchSpec, default_budget
from .model.model import ReducedModel, is_fundamental
from .model.operations import (
    compose,
    homogeneous_identity_holds,
    is_ancestor,
    swap_model,
)

_log = partial(log, "verification")

Cell = Tuple[int, int]


class CellCatalogs:
    """Stores catalogs of searched (n, d) cells"""

    def __init__(self, search: Callable[[int, int], Catalog]):
        """Constructor

        Args:
            search (Callable[[int, int], Catalog]): cell search
        """
        self.__search = search
        self.__results: Dict[Cell, Catalog] = dict()

    def __call__(self, cell: Cell) -> Catalog:
        """Search a cell once

        Args:
            cell (Cell): (n, d)

        Returns:
            Catalog: catalog of the cell
        """
        if cell not in self.__results:
            self.__results[cell] = self.__search(*cell)
        return self.__results[cell]

    def result(self, cell: Cell) -> Catalog:
        """Get the catalog of a cell this instance already searched"""
        return self.__results[cell]

    @property
    def results(self) -> Dict[Cell, Catalog]:
        return self.__results


def cell_search(
    workers: int = 1,
    budget: int = default_budget,
    long_run: bool = False,
    window_shortcut: bool = True,
) -> Callable[[int, int], Catalog]:
    """Cell search collecting models with every pruning rule on"""

    def search(n: int, d: int) -> Catalog:
        spec = SearchSpec()
        spec.n = n
        spec.d = d
        spec.worker_count = workers
        spec.budget = budget
        spec.long_run = long_run
        return enumerate_models(spec, window_shortcut)

    return search


@dataclass(frozen=True)
class CellCheck:
    n: int
    d: int
    expected: int
    actual: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"n={self.n} d={self.d}: expected {self.expected}, "
            f"got {self.actual} {verdict}"
        )


@dataclass(frozen=True)
class TableReport:
    cells: List[CellCheck]
    probes: List[CellCheck]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.cells + self.probes)

    def lines(self) -> List[str]:
        lines = [str(c) for c in self.cells]
        lines.extend(f"probe {c}" for c in self.probes)
        return lines


def verify_table(
    max_n: int,
    catalogs: Optional[CellCatalogs] = None,
    probes: Optional[CellCatalogs] = None,
) -> TableReport:
    """Compare enumerated counts with the known table

    Every in-window cell up to max_n is searched, and a few cells outside of
    the window are searched without the window shortcut to confirm they are
    empty.

    Args:
        max_n (int): largest simplex dimension
        catalogs (CellCatalogs, optional): in-window searches
        probes (CellCatalogs, optional): out-of-window searches

    Raises:
        ValueError: max_n below one or beyond the known rows
    """
    known = dict(table_counts)
    known.update(long_run_counts)
    largest = max(n for n, _ in known)
    if not 1 <= max_n <= largest:
        raise ValueError(f"no known counts for max_n = {max_n}")
    if catalogs is None:
        catalogs = CellCatalogs(cell_search(long_run=max_n > desk_scale_n))
    if probes is None:
        probes = CellCatalogs(cell_search(window_shortcut=False))

    cells = list()
    for n in range(1, max_n + 1):
        for d in degree_window(n):
            actual = catalogs((n, d)).count
            cells.append(CellCheck(n, d, known[(n, d)], actual))
            _log(str(cells[-1]))

    probe_cells = [(n, 2 * n) for n in range(1, min(max_n, 3) + 1)]
    probe_cells += [(n, n - 1) for n in range(2, min(max_n, 3) + 1)]
    probe_checks = [
        CellCheck(n, d, 0, probes((n, d)).count) for n, d in probe_cells
    ]
    return TableReport(cells, probe_checks)


def recursive_models(
    n: int, sharp_catalogs: Mapping[int, Sequence[ReducedModel]]
) -> List[ReducedModel]:
    """Almost sharp models built from sharp ones

    Every sharp model in the k-simplex composed with every sharp model in the
    (n - k)-simplex, for k = 1..n-1, together with the swapped compositions.

    Args:
        n (int): simplex dimension of the results
        sharp_catalogs (Mapping[int, Sequence[ReducedModel]]): sharp
            fundamental models per simplex dimension 1..n-1

    Returns:
        List[ReducedModel]: distinct models of degree 2n - 2, sorted
    """
    built = set()
    for k in range(1, n):
        for outer in sharp_catalogs[k]:
            for inner in sharp_catalogs[n - k]:
                model = compose(outer, inner)
                built.add(model)
                built.add(swap_model(model))
    return sorted(built, key=ReducedModel.sort_key)


@dataclass(frozen=True)
class RecursiveReport:
    """Recursive lower bound against the enumerated count

    equality is an observation for the computed n only.
    """

    n: int
    sharp_counts: Tuple[int, ...]
    bound: int
    actual: int
    constructed: int
    members: bool

    @property
    def bound_satisfied(self) -> bool:
        return self.actual >= self.bound

    @property
    def equality(self) -> bool:
        return self.actual == self.bound

    @property
    def ok(self) -> bool:
        return self.bound_satisfied and self.members

    def __str__(self) -> str:
        return (
            f"bound {self.bound}, actual {self.actual}, "
            f"equality: {'yes' if self.equality else 'no'}"
        )


def verify_recursive(
    n: int, catalogs: Optional[CellCatalogs] = None
) -> RecursiveReport:
    """Check the recursive count of almost sharp fundamental models

    Raises:
        ValueError: n below three
    """
    if n < 3:
        raise ValueError(f"recursive count needs n >= 3, got {n}")
    if catalogs is None:
        catalogs = CellCatalogs(cell_search(long_run=n > desk_scale_n))
    sharp = {k: catalogs((k, degree_bound(k))).models for k in range(1, n)}
    sharp_counts = tuple(len(sharp[k]) for k in range(1, n))
    target = catalogs((n, degree_bound(n) - 1))
    built = recursive_models(n, sharp)
    enumerated = set(target.models)
    members = all(m in enumerated and is_fundamental(m) for m in built)
    report = RecursiveReport(
        n,
        sharp_counts,
        recursive_bound(sharp_counts),
        target.count,
        len(built),
        members,
    )
    _log(f"n={n}: {report}")
    return report


@dataclass
class PropertiesReport:
    checked: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, model: ReducedModel, check: str):
        self.failures.append(f"{model}: {check}")


def catalog_properties(cat: Catalog) -> PropertiesReport:
    """Run the model and diagram checks over a collected catalog

    Returns:
        PropertiesReport: one failure line per model and failed check
    """
    report = PropertiesReport()
    supports = [frozenset(m.support) for m in cat.models]
    if len(set(supports)) != len(supports):
        report.failures.append("two models share a support")
    members = set(cat.models)
    sharp = cat.n >= 2 and cat.d == degree_bound(cat.n)
    root = binomial_model(cat.d)
    for model in cat.models:
        report.checked += 1
        if any(model.identity_residual()):
            report.fail(model, "identity residual")
        if model.degree != cat.d or model.n != cat.n:
            report.fail(model, "cell")
        if model.degree > degree_bound(model.n):
            report.fail(model, "degree bound")
        if not homogeneous_identity_holds(model):
            report.fail(model, "homogeneous parts")
        if not is_ancestor(root, model):
            report.fail(model, "binomial ancestry")
        if model.swapped() not in members:
            report.fail(model, "swap closure")
        report.failures.extend(
            f"{model}: {check}"
            for check in check_structure(model).failures()
        )
        if sharp:
            report.failures.extend(
                f"{model}: sharp support {check}"
                for check in sharp_support_violations(model.support, cat.d)
            )
    _log(f"({cat.n},{cat.d}): {report.checked} models checked")
    return report

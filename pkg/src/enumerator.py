from dataclasses import dataclass
from functools import lru_cache, partial
from itertools import combinations
from multiprocessing import Pool
from typing import (
    FrozenSet,
    Iterable,
    Iterator,
    List,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from .common import log
from .diagram import sharp_point_allowed
from .linsys import (
    EchelonBasis,
    SolveStatus,
    expansion_entry,
    expansion_matrix,
    pinned_values,
    solve_exact,
)
from .model.constraints import SearchSpecConstraints
from .model.formulas import degree_bound, in_window
from .model.input import SearchSpec
from .model.model import ReducedModel

_log = partial(log, "enumerator")

Point = Tuple[int, int]


class BudgetExceededError(Exception):

    """The search visited more partial supports than allowed"""

    def __init__(self, n: int, d: int, budget: int):
        super().__init__(
            f"node budget {budget} exceeded in cell (n={n}, d={d})"
        )
        self.n = n
        self.d = d
        self.budget = budget

    def __reduce__(self):
        return BudgetExceededError, (self.n, self.d, self.budget)


@dataclass(frozen=True)
class Catalog:
    """Fundamental models of one (n, d) cell

    models: models in canonical order, empty in count-only mode
    count: number of models, swapped models counted separately
    count_up_to_swap: number of classes under t -> 1 - t
    nodes: partial supports visited
    """

    n: int
    d: int
    models: Tuple[ReducedModel, ...]
    count: int
    count_up_to_swap: int
    nodes: int = 0


class _Config(NamedTuple):
    n: int
    d: int
    rules: FrozenSet[str]
    budget: int
    collect: bool
    spent: int = 0


class _State(NamedTuple):
    chosen: Tuple[Point, ...]
    next: int
    basis: Optional[EchelonBasis]
    has_top: bool
    has_nu0: bool
    has_mu0: bool
    last_nu: int


class _TaskResult(NamedTuple):
    models: Tuple[ReducedModel, ...]
    count: int
    symmetric: int
    nodes: int


def _is_symmetric(support: Sequence[Point]) -> bool:
    pairs = set(tuple(p) for p in support)
    return pairs == {(mu, nu) for nu, mu in pairs}


class _Search:

    """Depth-first search over supports, points visited in (nu, mu) order"""

    def __init__(self, config: _Config):
        self._config = config
        n, d = config.n, config.d
        points = sorted(
            (nu, s - nu) for s in range(1, d + 1) for nu in range(s + 1)
        )
        if "P3" in config.rules and n >= 2 and d == degree_bound(n):
            points = [p for p in points if sharp_point_allowed(p, d)]
        self._points: Tuple[Point, ...] = tuple(points)
        self._columns = tuple(
            tuple(expansion_entry(nu, mu, alpha) for alpha in range(d + 1))
            for nu, mu in points
        )
        # top_after[k]: some point of degree d at index >= k, same for axis
        self._top_after = self._suffix_any(lambda p: sum(p) == d)
        self._axis_after = self._suffix_any(lambda p: p[1] == 0)
        self._nodes = 0

    def _suffix_any(self, predicate) -> Tuple[bool, ...]:
        flags = [False] * (len(self._points) + 1)
        for k in range(len(self._points) - 1, -1, -1):
            flags[k] = flags[k + 1] or predicate(self._points[k])
        return tuple(flags)

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    @property
    def nodes(self) -> int:
        return self._nodes

    def root(self) -> _State:
        basis = EchelonBasis() if "P4" in self._config.rules else None
        return _State(tuple(), 0, basis, False, False, False, 0)

    def _prefix_ok(self, state: _State, nu: int) -> bool:
        """Whether the rows below t^nu, which no later point touches, still
        admit positive scalings"""
        rules = self._config.rules
        if "P2" in rules and not state.has_nu0 and nu > 0:
            return False
        if "P6" not in rules or nu <= state.last_nu:
            return True
        if not state.chosen:
            return False
        system = expansion_matrix(state.chosen, self._config.d).head(nu)
        pinned = pinned_values(system)
        return pinned is not None and all(v > 0 for v in pinned.values())

    def _descend(self, state: _State, k: int) -> Optional[_State]:
        self._nodes += 1
        if self._config.spent + self._nodes > self._config.budget:
            raise BudgetExceededError(
                self._config.n, self._config.d, self._config.budget
            )
        point = self._points[k]
        basis = state.basis
        if basis is not None:
            basis = basis.extended(self._columns[k])
            if basis is None:
                return None
        child = _State(
            state.chosen + (point,),
            k + 1,
            basis,
            state.has_top or sum(point) == self._config.d,
            state.has_nu0 or point[0] == 0,
            state.has_mu0 or point[1] == 0,
            point[0],
        )
        return child if self._feasible(child) else None

    def _feasible(self, state: _State) -> bool:
        rules = self._config.rules
        missing = self._config.n + 1 - len(state.chosen)
        if missing == 0:
            return True
        if "P5" in rules and len(self._points) - state.next < missing:
            return False
        if "P1" in rules and not state.has_top:
            if not self._top_after[state.next]:
                return False
        if "P2" in rules and not state.has_mu0:
            if not self._axis_after[state.next]:
                return False
        return True

    def child_at(self, state: _State, k: int) -> Optional[_State]:
        if not self._prefix_ok(state, self._points[k][0]):
            return None
        return self._descend(state, k)

    def _leaf(self, state: _State) -> Optional[ReducedModel]:
        if not state.has_top:
            return None
        system = expansion_matrix(state.chosen, self._config.d)
        result = solve_exact(system)
        if result.status is not SolveStatus.UNIQUE:
            return None
        if not all(c > 0 for c in result.solution):
            return None
        return ReducedModel(zip(system.columns, result.solution))

    def run(self, state: _State, found: List[ReducedModel]):
        """Collect every model extending a partial support"""
        if len(state.chosen) == self._config.n + 1:
            model = self._leaf(state)
            if model is not None:
                found.append(model)
            return
        checked_nu = state.last_nu
        for k in range(state.next, len(self._points)):
            nu = self._points[k][0]
            if nu > checked_nu:
                # failures persist for every larger nu
                if not self._prefix_ok(state, nu):
                    break
                checked_nu = nu
            child = self._descend(state, k)
            if child is not None:
                self.run(child, found)


@lru_cache(maxsize=8)
def _candidate_points(config: _Config) -> Tuple[Point, ...]:
    return _Search(config).points


def _run_task(task: Tuple[_Config, Tuple[int, int]]) -> _TaskResult:
    """Search below a fixed pair of first points"""
    config, path = task
    search = _Search(config)
    state = search.root()
    for k in path:
        state = search.child_at(state, k)
        if state is None:
            return _TaskResult(tuple(), 0, 0, search.nodes)
    found: List[ReducedModel] = list()
    search.run(state, found)
    symmetric = sum(1 for m in found if _is_symmetric(m.support))
    models = tuple(found) if config.collect else tuple()
    return _TaskResult(models, len(found), symmetric, search.nodes)


def _serial_results(
    tasks: Sequence[Tuple[_Config, Tuple[int, int]]],
) -> Iterator[_TaskResult]:
    """Run tasks in turn, each one limited to the budget left over"""
    spent = 0
    for config, path in tasks:
        result = _run_task((config._replace(spent=spent), path))
        spent += result.nodes
        yield result


def _within_budget(
    results: Iterable[_TaskResult], config: _Config
) -> List[_TaskResult]:
    """Collect task results, stopping once their nodes exceed the budget"""
    collected: List[_TaskResult] = list()
    nodes = 0
    for result in results:
        nodes += result.nodes
        if nodes > config.budget:
            _log(f"({config.n},{config.d}): budget {config.budget} spent")
            raise BudgetExceededError(config.n, config.d, config.budget)
        collected.append(result)
    return collected


def enumerate_models(
    spec: SearchSpec, window_shortcut: bool = True
) -> Catalog:
    """Enumerate the fundamental models of degree d in the n-simplex

    Args:
        spec (SearchSpec): search parameters
        window_shortcut (bool, optional): answer cells outside of
            n <= d <= 2n - 1 without searching

    Raises:
        ConstraintsComplianceError: invalid parameter combination
        BudgetExceededError: the node budget ran out

    Returns:
        Catalog: models sorted by their (nu, mu)-ordered supports
    """
    SearchSpecConstraints().validate(spec)
    n, d = spec.n, spec.d
    if window_shortcut and not in_window(n, d):
        _log(f"({n},{d}) outside of the degree window, nothing to search")
        return Catalog(n, d, tuple(), 0, 0)

    config = _Config(n, d, spec.rules, spec.budget, spec.collect)
    points = _candidate_points(config)
    tasks = [
        (config, path) for path in combinations(range(len(points)), 2)
    ]
    _log(
        f"({n},{d}): {len(points)} points, {len(tasks)} tasks, "
        f"{spec.worker_count} workers, rules {sorted(spec.rules)}"
    )
    if spec.worker_count > 1:
        with Pool(spec.worker_count) as pool:
            results = _within_budget(pool.imap(_run_task, tasks), config)
    else:
        results = _within_budget(_serial_results(tasks), config)

    nodes = sum(r.nodes for r in results)
    count = sum(r.count for r in results)
    symmetric = sum(r.symmetric for r in results)
    models = sorted(
        (m for r in results for m in r.models), key=ReducedModel.sort_key
    )
    _log(f"({n},{d}): {count} models, {nodes} nodes")
    return Catalog(
        n, d, tuple(models), count, (count + symmetric) // 2, nodes
    )


def count_models(n: int, d: int, workers: int = 1) -> int:
    spec = SearchSpec()
    spec.n = n
    spec.d = d
    spec.mode = "count-only"
    spec.worker_count = workers
    return enumerate_models(spec).count


def swap_classes(
    models: Sequence[ReducedModel],
) -> List[Tuple[ReducedModel, ...]]:
    """Group a swap-closed model list into classes under t -> 1 - t

    Returns:
        List[Tuple[ReducedModel, ...]]: classes of one or two models, the
            one with the smaller sort key first
    """
    remaining = {m.sort_key(): m for m in models}
    classes = list()
    for key in sorted(remaining):
        if key not in remaining:
            continue
        model = remaining.pop(key)
        partner = remaining.pop(model.swapped().sort_key(), None)
        classes.append((model,) if partner is None else (model, partner))
    return classes

from dataclasses import dataclass
from fractions import Fraction
from functools import partial
from typing import (
    Dict,
    Iterable,
    Iterator,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

import numpy as np
from scipy.optimize import linprog

from ..common import log
from ..linsys import (
    LinearSystemError,
    SolveStatus,
    expansion_matrix,
    graded_lex_key,
    solve_exact,
)
from ..polynomial import BivarPoly, Scalar, as_fraction, format_rational

_log = partial(log, "model")

# largest denominator tried when rationalising a floating point witness
_WITNESS_DENOMINATOR = 10**6


class ModelError(Exception):

    """Base class of model errors"""

    pass


class InvalidSupportError(ModelError):

    """Support with repeated pairs, negative exponents or the origin"""

    pass


class InvalidModelError(ModelError):

    """Entries which do not define a reduced model"""

    pass


class PreconditionViolatedError(ModelError):

    """Operation applied outside of its domain"""

    pass


class ExponentPair(NamedTuple):
    nu: int
    mu: int

    @property
    def degree(self) -> int:
        return self.nu + self.mu

    def swapped(self) -> "ExponentPair":
        return ExponentPair(self.mu, self.nu)

    def __str__(self) -> str:
        return f"({self.nu},{self.mu})"


def canonical_support(support: Iterable) -> Tuple[ExponentPair, ...]:
    """Validate a support and sort it in graded-lex order

    Args:
        support (Iterable): exponent pairs

    Raises:
        InvalidSupportError: empty support, negative exponents, repeated
            pairs or the origin

    Returns:
        Tuple[ExponentPair, ...]: pairs ordered by degree, then by
            descending nu
    """
    pairs = [ExponentPair(int(nu), int(mu)) for nu, mu in support]
    if not pairs:
        raise InvalidSupportError("empty support")
    for pair in pairs:
        if pair.nu < 0 or pair.mu < 0:
            raise InvalidSupportError(f"negative exponent in {pair}")
        if pair == (0, 0):
            raise InvalidSupportError("support contains the origin")
    if len(set(pairs)) != len(pairs):
        raise InvalidSupportError(f"repeated pairs in support {pairs}")
    return tuple(sorted(pairs, key=graded_lex_key))


class ReducedModel:

    """Reduced R1d model t -> (c_i t^nu_i (1 - t)^mu_i)_i, immutable

    Entries are kept in graded-lex order of their pairs. Construction
    checks reducedness, strict positivity and the identity
    sum_i c_i t^nu_i (1 - t)^mu_i = 1.
    """

    def __init__(
        self,
        entries: Union[
            Mapping[Tuple[int, int], Scalar],
            Iterable[Tuple[Tuple[int, int], Scalar]],
        ],
    ):
        """ReducedModel constructor

        Args:
            entries: pair to scaling map, or (pair, scaling) sequence

        Raises:
            InvalidSupportError: malformed support
            InvalidModelError: nonpositive scaling or broken identity
        """
        if isinstance(entries, Mapping):
            entries = entries.items()
        entries = [(pair, as_fraction(c)) for pair, c in entries]
        support = canonical_support(pair for pair, _ in entries)
        scalings = {ExponentPair(*pair): c for pair, c in entries}
        for pair, c in scalings.items():
            if c <= 0:
                raise InvalidModelError(
                    f"scaling {format_rational(c)} at {pair} is not positive"
                )
        self._entries: Tuple[Tuple[ExponentPair, Fraction], ...] = tuple(
            (pair, scalings[pair]) for pair in support
        )
        if not any(pair.nu == 0 for pair in support):
            raise InvalidModelError("no pair with nu = 0, p(0) sums to 0")
        if not any(pair.mu == 0 for pair in support):
            raise InvalidModelError("no pair with mu = 0, p(1) sums to 0")
        if any(self.identity_residual()):
            raise InvalidModelError(
                f"coordinates of {self} do not sum to one"
            )

    @property
    def entries(self) -> Tuple[Tuple[ExponentPair, Fraction], ...]:
        return self._entries

    @property
    def support(self) -> Tuple[ExponentPair, ...]:
        return tuple(pair for pair, _ in self._entries)

    @property
    def scalings(self) -> Tuple[Fraction, ...]:
        return tuple(c for _, c in self._entries)

    @property
    def n(self) -> int:
        """Dimension of the simplex, entries count minus one"""
        return len(self._entries) - 1

    @property
    def degree(self) -> int:
        return max(pair.degree for pair in self.support)

    def coefficient(self, pair: Tuple[int, int]) -> Fraction:
        return dict(self._entries).get(ExponentPair(*pair), Fraction(0))

    def as_dict(self) -> Dict[ExponentPair, Fraction]:
        return dict(self._entries)

    def identity_residual(self) -> Tuple[Fraction, ...]:
        """Coefficients of sum_i c_i t^nu_i (1 - t)^mu_i - 1 by power of t"""
        system = expansion_matrix(self.support, self.degree)
        return system.residual(self.scalings)

    def polynomial(self) -> BivarPoly:
        """f_M = sum_i c_i x^nu_i y^mu_i"""
        return BivarPoly({pair: c for pair, c in self._entries})

    def swapped(self) -> "ReducedModel":
        """Model after the substitution t -> 1 - t"""
        return ReducedModel({p.swapped(): c for p, c in self._entries})

    def sort_key(self) -> Tuple[Tuple[int, int], ...]:
        """Catalog order key, the (nu, mu)-sorted support"""
        return tuple(sorted(self.support))

    def __iter__(self) -> Iterator[Tuple[ExponentPair, Fraction]]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ReducedModel):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __str__(self) -> str:
        body = ", ".join(
            f"{pair}: {format_rational(c)}" for pair, c in self._entries
        )
        return f"{{{body}}}"

    def __repr__(self) -> str:
        return f"ReducedModel({self})"


@dataclass(frozen=True)
class FundamentalityReport:
    """Outcome of solving for the scalings of a support

    fundamental: the scalings are uniquely determined
    positive: some strictly positive scalings exist, i.e. the support carries
        a reduced model
    decided: False when positivity could not be settled exactly
    """

    status: SolveStatus
    rank: int
    nullity: int
    positive: bool
    decided: bool = True

    @property
    def fundamental(self) -> bool:
        return self.status is SolveStatus.UNIQUE


def _positive_on_line(
    point: Sequence[Fraction], direction: Sequence[Fraction]
) -> Optional[Tuple[Fraction, ...]]:
    """Strictly positive point of point + s * direction, if any"""
    lower: Optional[Fraction] = None
    upper: Optional[Fraction] = None
    for p, v in zip(point, direction):
        if v == 0:
            if p <= 0:
                return None
            continue
        bound = -p / v
        if v > 0:
            lower = bound if lower is None else max(lower, bound)
        else:
            upper = bound if upper is None else min(upper, bound)
    if lower is not None and upper is not None:
        if lower >= upper:
            return None
        s = (lower + upper) / 2
    elif lower is not None:
        s = lower + 1
    elif upper is not None:
        s = upper - 1
    else:
        s = Fraction(0)
    return tuple(p + s * v for p, v in zip(point, direction))


def _positive_by_lp(
    point: Sequence[Fraction], nullspace: Sequence[Sequence[Fraction]]
) -> Tuple[Optional[Tuple[Fraction, ...]], bool]:
    """Search the affine solution space for a strictly positive point

    Maximises the smallest coordinate (capped at one) with a floating point
    linear program, then rationalises the optimiser and re-checks it exactly.

    Returns:
        Tuple[Optional[Tuple[Fraction, ...]], bool]: exact positive point or
            None, and whether that answer is certain
    """
    k = len(nullspace)
    basis = np.array(
        [[float(v[i]) for v in nullspace] for i in range(len(point))]
    )
    # variables: nullspace weights s_1..s_k, then the slack e
    a_ub = np.hstack([-basis, np.ones((len(point), 1))])
    b_ub = np.array([float(p) for p in point])
    cost = np.zeros(k + 1)
    cost[-1] = -1.0
    bounds = [(None, None)] * k + [(None, 1.0)]
    result = linprog(cost, A_ub=a_ub, b_ub=b_ub, bounds=bounds)
    if not result.success:
        _log(f"positivity program failed: {result.message}")
        return None, False
    if result.x[-1] <= 0:
        _log(f"positivity program slack {result.x[-1]:.3e}")
        return None, False
    weights = [
        Fraction(float(s)).limit_denominator(_WITNESS_DENOMINATOR)
        for s in result.x[:-1]
    ]
    candidate = tuple(
        p + sum((w * v[i] for w, v in zip(weights, nullspace)), Fraction(0))
        for i, p in enumerate(point)
    )
    if all(c > 0 for c in candidate):
        return candidate, True
    _log("rationalised positivity witness is not positive")
    return None, False


def solve_scalings(
    support: Iterable,
) -> Tuple[Optional[ReducedModel], FundamentalityReport]:
    """Find scalings turning a support into a reduced model

    Args:
        support (Iterable): exponent pairs

    Raises:
        InvalidSupportError: repeated pairs or the origin

    Returns:
        Tuple[Optional[ReducedModel], FundamentalityReport]: a model when
            strictly positive scalings exist (the unique ones for a
            fundamental support) and the solving report
    """
    pairs = canonical_support(support)
    try:
        system = expansion_matrix(pairs, max(p.degree for p in pairs))
    except LinearSystemError as e:
        raise InvalidSupportError(str(e)) from e
    result = solve_exact(system)
    if result.status is SolveStatus.INCONSISTENT:
        return None, FundamentalityReport(result.status, result.rank, 0, False)

    decided = True
    if result.status is SolveStatus.UNIQUE:
        scalings = result.solution
        if not all(c > 0 for c in scalings):
            scalings = None
    elif result.nullity == 1:
        scalings = _positive_on_line(result.solution, result.nullspace[0])
    else:
        scalings, decided = _positive_by_lp(result.solution, result.nullspace)

    report = FundamentalityReport(
        result.status,
        result.rank,
        result.nullity,
        scalings is not None,
        decided,
    )
    if scalings is None:
        return None, report
    return ReducedModel(zip(system.columns, scalings)), report


def is_fundamental(model: ReducedModel) -> bool:
    """Check that the scalings of a model are forced by its support"""
    return solve_scalings(model.support)[1].fundamental

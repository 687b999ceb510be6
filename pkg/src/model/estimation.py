from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Tuple, Union

import numpy as np

from ..polynomial import Scalar, SparsePoly, as_fraction
from .formulas import degree_bound, mle_closed_form
from .model import InvalidModelError, ModelError, ReducedModel

Counts = Union[Sequence[Scalar], Mapping[Tuple[int, int], Scalar]]


class EstimationError(ModelError):

    """Data without a maximum likelihood estimate"""

    pass


class MultiModel:

    """r-dimensional model with coordinates
    c_i t_1^nu_1i ... t_r^nu_ri (1 - t_1 - ... - t_r)^nu_(r+1)i
    """

    def __init__(
        self, r: int, entries: Iterable[Tuple[Sequence[int], Scalar]]
    ):
        """MultiModel constructor

        Args:
            r (int): dimension, at least one
            entries: (exponents nu_1i..nu_(r+1)i, scaling c_i) pairs

        Raises:
            InvalidModelError: malformed exponents, repeated exponents,
                nonpositive scalings or coordinates not summing to one
        """
        if r < 1:
            raise InvalidModelError(f"invalid dimension '{r}'")
        self._r = r
        self._entries = tuple(
            (tuple(int(e) for e in exps), as_fraction(c))
            for exps, c in entries
        )
        if not self._entries:
            raise InvalidModelError("empty model")
        for exps, c in self._entries:
            if len(exps) != r + 1 or any(e < 0 for e in exps):
                raise InvalidModelError(f"invalid exponents {exps}")
            if c <= 0:
                raise InvalidModelError(f"scaling {c} is not positive")
        if len({exps for exps, _ in self._entries}) != len(self._entries):
            raise InvalidModelError("repeated exponents")
        if self.parameterization_sum() != SparsePoly.constant(1, r):
            raise InvalidModelError("coordinates do not sum to one")

    @classmethod
    def from_reduced(cls, m: ReducedModel) -> "MultiModel":
        return cls(1, [((p.nu, p.mu), c) for p, c in m])

    @property
    def r(self) -> int:
        return self._r

    @property
    def n(self) -> int:
        return len(self._entries) - 1

    @property
    def entries(self) -> Tuple[Tuple[Tuple[int, ...], Fraction], ...]:
        return self._entries

    @property
    def degree(self) -> int:
        return max(sum(exps) for exps, _ in self._entries)

    def parameterization_sum(self) -> SparsePoly:
        """Sum of all coordinates as a polynomial in t_1, ..., t_r"""
        ts = [SparsePoly.variable(a, self._r) for a in range(self._r)]
        rest = 1 - sum(ts, SparsePoly(self._r))
        total = SparsePoly(self._r)
        for exps, c in self._entries:
            term = SparsePoly.constant(c, self._r)
            for t, e in zip(ts, exps):
                term = term * t**e
            total = total + term * rest ** exps[-1]
        return total


def _count_vector(m: ReducedModel, u: Counts) -> Tuple[Fraction, ...]:
    if isinstance(u, Mapping):
        unknown = set(tuple(p) for p in u) - set(m.support)
        if unknown:
            raise EstimationError(f"counts for pairs {unknown} off support")
        u = [u.get(pair, 0) for pair in m.support]
    counts = tuple(as_fraction(v) for v in u)
    if len(counts) != len(m):
        raise EstimationError(
            f"expected {len(m)} counts, {len(counts)} given"
        )
    if any(v < 0 for v in counts):
        raise EstimationError("negative counts")
    if not any(counts):
        raise EstimationError("all counts are zero")
    return counts


def mle_1d(m: ReducedModel, u: Counts) -> Fraction:
    """Maximum likelihood estimate of t

    t = sum u_i nu_i / sum u_i (nu_i + mu_i)

    Args:
        m (ReducedModel): model
        u (Counts): nonnegative counts in the order of m's entries, or a map
            from support pairs to counts

    Raises:
        EstimationError: malformed counts or zero denominator
    """
    counts = _count_vector(m, u)
    numerator, denominator = mle_closed_form(m.support, counts)
    if denominator == 0:
        raise EstimationError("zero denominator")
    return numerator / denominator


def mle_multi(m: MultiModel, u: Sequence[Scalar]) -> Tuple[Fraction, ...]:
    """Maximum likelihood estimate of (t_1, ..., t_r)

    With U_a = sum_i u_i nu_ai, t_a = U_a / (U_1 + ... + U_(r+1)).

    Raises:
        EstimationError: malformed counts or zero total
    """
    counts = tuple(as_fraction(v) for v in u)
    if len(counts) != m.n + 1:
        raise EstimationError(
            f"expected {m.n + 1} counts, {len(counts)} given"
        )
    if any(v < 0 for v in counts):
        raise EstimationError("negative counts")
    weights = [Fraction(0)] * (m.r + 1)
    for (exps, _), v in zip(m.entries, counts):
        for a, e in enumerate(exps):
            weights[a] += v * e
    total = sum(weights)
    if total == 0:
        raise EstimationError("zero total")
    return tuple(w / total for w in weights[:-1])


def stationarity_residual_1d(
    m: ReducedModel, u: Counts, t: Scalar
) -> Fraction:
    """(sum u_i nu_i)(1 - t) - (sum u_i mu_i) t, zero at the estimate"""
    counts = _count_vector(m, u)
    t = as_fraction(t)
    numerator, denominator = mle_closed_form(m.support, counts)
    return numerator * (1 - t) - (denominator - numerator) * t


def stationarity_residuals_multi(
    m: MultiModel, u: Sequence[Scalar], t: Sequence[Scalar]
) -> Tuple[Fraction, ...]:
    """Cleared-denominator partial derivatives of the log-likelihood

    Entry a is sum_i u_i (nu_(r+1)i t_a + nu_ai (t_1 + ... + t_r - 1)).
    """
    t = [as_fraction(v) for v in t]
    counts = [as_fraction(v) for v in u]
    shifted = sum(t, Fraction()) - 1
    return tuple(
        sum(
            (
                v * (exps[-1] * t[a] + exps[a] * shifted)
                for (exps, _), v in zip(m.entries, counts)
            ),
            Fraction(),
        )
        for a in range(m.r)
    )


def multi_degree_bound_ok(m: MultiModel) -> bool:
    """Check the total degree bound, 2n - 1 for curves and n / r otherwise"""
    if m.r == 1:
        return m.degree <= degree_bound(m.n)
    return m.degree * m.r <= m.n


def likelihood_grid_check(
    m: ReducedModel, u: Counts, step: float = 1e-3
) -> bool:
    """Numeric spot-check that no grid point beats the estimate

    Args:
        m (ReducedModel): model
        u (Counts): counts
        step (float, optional): grid step on [0, 1]

    Returns:
        bool: check result
    """
    counts = np.array([float(v) for v in _count_vector(m, u)])
    logc = np.log([float(c) for c in m.scalings])
    nu = np.array([p.nu for p in m.support], dtype=float)
    mu = np.array([p.mu for p in m.support], dtype=float)

    def loglik(t: np.ndarray) -> np.ndarray:
        # 0 * log(0) counts as 0
        with np.errstate(divide="ignore", invalid="ignore"):
            t_part = np.where(
                nu[None, :] > 0, nu[None, :] * np.log(t[:, None]), 0.0
            )
            s_part = np.where(
                mu[None, :] > 0, mu[None, :] * np.log1p(-t[:, None]), 0.0
            )
            terms = (logc[None, :] + t_part + s_part) * counts[None, :]
            terms = np.where(counts[None, :] > 0, terms, 0.0)
        return terms.sum(axis=1)

    grid = np.arange(0.0, 1.0 + step / 2, step)
    best = loglik(np.array([float(mle_1d(m, u))]))[0]
    values = loglik(grid)
    values = values[~np.isnan(values)]
    return bool(np.all(values <= best + 1e-9 * max(1.0, abs(best))))

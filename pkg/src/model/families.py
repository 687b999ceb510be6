from fractions import Fraction
from functools import partial
from typing import Tuple

from ..common import log
from ..polynomial import Scalar, as_fraction, format_rational
from .formulas import (
    binomial_coefficients,
    degree_bound,
    in_window,
    sharp_coefficient,
)
from .model import (
    ExponentPair,
    PreconditionViolatedError,
    ReducedModel,
)
from .operations import compose

_log = partial(log, "families")


def _check_dimension(n: int) -> None:
    if n < 1:
        raise PreconditionViolatedError(f"invalid simplex dimension '{n}'")


def binomial_model(n: int) -> ReducedModel:
    """Binomial model t -> (C(n, i) t^i (1 - t)^(n-i))_i

    Args:
        n (int): simplex dimension, at least one

    Raises:
        PreconditionViolatedError: n < 1

    Returns:
        ReducedModel: homogeneous model of degree n
    """
    _check_dimension(n)
    coefficients = binomial_coefficients(n)
    return ReducedModel({(i, n - i): coefficients[i] for i in range(n + 1)})


def geometric_model(n: int) -> ReducedModel:
    """Truncated geometric model
    t -> (t, t (1 - t), ..., t (1 - t)^(n-1), (1 - t)^n)

    Args:
        n (int): simplex dimension, at least one

    Raises:
        PreconditionViolatedError: n < 1

    Returns:
        ReducedModel: fundamental model of degree n, all scalings one
    """
    _check_dimension(n)
    entries = {(1, j): 1 for j in range(n)}
    entries[(0, n)] = 1
    return ReducedModel(entries)


def sharp_model(n: int) -> ReducedModel:
    """Sharp model of degree 2n - 1

    t -> (t^(2n-1), ((2n-1)/(2i+1) C(n+i-1, 2i) t^(n-i-1) (1-t)^(2i+1))_i)

    Args:
        n (int): simplex dimension, at least one

    Raises:
        PreconditionViolatedError: n < 1
    """
    _check_dimension(n)
    entries = {(degree_bound(n), 0): 1}
    for i in range(n):
        entries[(n - i - 1, 2 * i + 1)] = sharp_coefficient(n, i)
    return ReducedModel(entries)


def fundamental_model(n: int, d: int) -> ReducedModel:
    """A fundamental model in the n-simplex of degree d

    The binomial model for d = n, the sharp model for d = 2n - 1 and the
    composition of the sharp model of degree 2k + 1 with the binomial model
    in the (n - k - 1)-simplex for d = n + k in between. Every result has
    the scaling one at (d, 0).

    Raises:
        PreconditionViolatedError: d outside of [n, 2n - 1]
    """
    _check_dimension(n)
    if not in_window(n, d):
        raise PreconditionViolatedError(
            f"no fundamental model in the {n}-simplex of degree {d}"
        )
    if d == n:
        return binomial_model(n)
    if d == degree_bound(n):
        return sharp_model(n)
    k = d - n
    return compose(sharp_model(k + 1), binomial_model(n - k - 1))


class FamilyModel:

    """One-parameter family of reduced models of a common support

    Every c in (0, 1) gives a model; the base model's scaling one at
    (d - 1, 0) is spread as (1 - c) t^(d-1) + c t^(d-1) (1 - t) + c t^d.
    """

    def __init__(self, base: ReducedModel):
        """FamilyModel constructor

        Args:
            base (ReducedModel): model of degree d - 1 with scaling one at
                (d - 1, 0)

        Raises:
            PreconditionViolatedError: base lacks the unit scaling at
                (d - 1, 0)
        """
        top = base.degree
        if base.coefficient((top, 0)) != 1:
            raise PreconditionViolatedError(
                f"base model has no unit scaling at ({top},0)"
            )
        self._base = base

    @property
    def base(self) -> ReducedModel:
        return self._base

    @property
    def n(self) -> int:
        return self._base.n + 2

    @property
    def degree(self) -> int:
        return self._base.degree + 1

    @property
    def support(self) -> Tuple[ExponentPair, ...]:
        return self.instantiate(Fraction(1, 2)).support

    def instantiate(self, c: Scalar) -> ReducedModel:
        """Member of the family

        Args:
            c (Scalar): family parameter, 0 < c < 1

        Raises:
            PreconditionViolatedError: c outside of (0, 1)
        """
        c = as_fraction(c)
        if not 0 < c < 1:
            raise PreconditionViolatedError(
                f"family parameter {format_rational(c)} outside of (0, 1)"
            )
        top = self._base.degree
        entries = self._base.as_dict()
        entries[ExponentPair(top, 0)] = 1 - c
        entries[ExponentPair(top, 1)] = c
        entries[ExponentPair(top + 1, 0)] = c
        return ReducedModel(entries)


def one_parameter_family(n: int, d: int) -> FamilyModel:
    """Family of non-fundamental reduced models in the n-simplex of degree d

    Args:
        n (int): simplex dimension, at least four
        d (int): degree, n <= d <= 2n - 4

    Raises:
        PreconditionViolatedError: (n, d) out of range
    """
    if n < 4 or not n <= d <= 2 * n - 4:
        raise PreconditionViolatedError(
            f"no one-parameter family construction for n = {n}, d = {d}"
        )
    base = fundamental_model(n - 2, d - 1)
    _log(f"family ({n},{d}) spreads base {base}")
    return FamilyModel(base)

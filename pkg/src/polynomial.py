from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Exponents = Tuple[int, ...]


def as_fraction(value) -> Fraction:
    """Convert an exact scalar to Fraction

    Args:
        value: int, Fraction or a "p/q" string

    Raises:
        TypeError: inexact (floating point) or unsupported value

    Returns:
        Fraction: exact value in lowest terms
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (Rational, str)):
        return Fraction(value)
    raise TypeError(f"inexact or unsupported coefficient '{value!r}'")


def format_rational(value: Fraction) -> str:
    """Render as "p/q", or "p" when the denominator is one"""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class SparsePoly:

    """Sparse polynomial in a fixed number of variables with exact rational
    coefficients, zero coefficients are never stored; instances are immutable
    """

    def __init__(
        self, nvars: int, terms: Optional[Mapping[Exponents, Scalar]] = None
    ):
        """SparsePoly constructor

        Args:
            nvars (int): number of variables
            terms (Mapping[Exponents, Scalar], optional): exponent tuple to
                coefficient map, repeated keys are impossible, zeros dropped

        Raises:
            ValueError: malformed exponent tuple
        """
        if nvars < 1:
            raise ValueError(f"invalid number of variables '{nvars}'")
        self._nvars = nvars
        self._terms: Dict[Exponents, Fraction] = dict()
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"invalid exponents '{exps}'")
            coeff = as_fraction(coeff)
            if coeff != 0:
                self._terms[exps] = coeff

    def _spawn(self, terms: Dict[Exponents, Fraction]) -> "SparsePoly":
        # terms must already be free of zeros
        poly = object.__new__(type(self))
        poly._nvars = self._nvars
        poly._terms = terms
        return poly

    @staticmethod
    def constant(value: Scalar, nvars: int) -> "SparsePoly":
        return SparsePoly(nvars, {(0,) * nvars: value})

    @staticmethod
    def variable(index: int, nvars: int) -> "SparsePoly":
        exps = tuple(1 if i == index else 0 for i in range(nvars))
        return SparsePoly(nvars, {exps: 1})

    @property
    def nvars(self) -> int:
        return self._nvars

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> Optional[int]:
        """Get total degree

        Returns:
            Optional[int]: total degree, None for the zero polynomial which
                has no degree
        """
        if not self._terms:
            return None
        return max(sum(exps) for exps in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, *exponents: int) -> Fraction:
        return self._terms.get(tuple(exponents), Fraction(0))

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable sets")
            return other
        value = as_fraction(other)
        return self._spawn({(0,) * self._nvars: value} if value != 0 else {})

    def __add__(self, other) -> "SparsePoly":
        other = self._coerce(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            value = terms.get(exps, 0) + coeff
            if value == 0:
                terms.pop(exps, None)
            else:
                terms[exps] = value
        return self._spawn(terms)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return self._spawn({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "SparsePoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "SparsePoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            factor = as_fraction(other)
            if factor == 0:
                return self._spawn({})
            return self._spawn({e: c * factor for e, c in self._terms.items()})
        other = self._coerce(other)
        terms: Dict[Exponents, Fraction] = dict()
        for exps0, coeff0 in self._terms.items():
            for exps1, coeff1 in other._terms.items():
                exps = tuple(a + b for a, b in zip(exps0, exps1))
                terms[exps] = terms.get(exps, 0) + coeff0 * coeff1
        return self._spawn({e: c for e, c in terms.items() if c != 0})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "SparsePoly":
        if power < 0:
            raise ValueError("negative powers are not polynomials")
        result = self._coerce(1)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self._nvars == other._nvars and self._terms == other._terms
        try:
            return self == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self) -> int:
        return hash((self._nvars, frozenset(self._terms.items())))

    def homogeneous_parts(self) -> Dict[int, "SparsePoly"]:
        """Split into homogeneous components

        Returns:
            Dict[int, SparsePoly]: total degree to its homogeneous part, only
                nonzero parts are present
        """
        parts: Dict[int, Dict[Exponents, Fraction]] = dict()
        for exps, coeff in self._terms.items():
            parts.setdefault(sum(exps), dict())[exps] = coeff
        return {k: self._spawn(terms) for k, terms in parts.items()}

    def evaluate(self, *point: Scalar) -> Fraction:
        if len(point) != self._nvars:
            raise ValueError(f"expected {self._nvars} coordinates")
        point = [as_fraction(value) for value in point]
        total = Fraction(0)
        for exps, coeff in self._terms.items():
            term = coeff
            for value, e in zip(point, exps):
                term *= value**e
            total += term
        return total

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        """Render with terms in lexicographically descending exponent order,
        e.g. "x^3+3xy+y^3-1"

        Args:
            names (Sequence[str], optional): variable names, x1, x2, ... by
                default
        """
        if names is None:
            names = [f"x{i + 1}" for i in range(self._nvars)]
        if not self._terms:
            return "0"
        out = ""
        for exps in sorted(self._terms, reverse=True):
            coeff = self._terms[exps]
            monomial = "".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exps)
                if e > 0
            )
            magnitude = abs(coeff)
            if monomial and magnitude == 1:
                text = monomial
            else:
                text = format_rational(magnitude) + monomial
            if coeff < 0:
                out += "-" + text
            elif out:
                out += "+" + text
            else:
                out += text
        return out

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.format()})"


class BivarPoly(SparsePoly):

    """Polynomial in x and y, the home of f_M and g_M"""

    def __init__(self, terms: Optional[Mapping[Exponents, Scalar]] = None):
        super(BivarPoly, self).__init__(2, terms)

    @classmethod
    def x(cls) -> "BivarPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivarPoly":
        return cls({(0, 1): 1})

    @classmethod
    def monomial(cls, a: int, b: int, coeff: Scalar = 1) -> "BivarPoly":
        return cls({(a, b): coeff})

    @classmethod
    def line(cls) -> "BivarPoly":
        """x + y - 1"""
        return cls({(1, 0): 1, (0, 1): 1, (0, 0): -1})

    def _coerce(self, other) -> "BivarPoly":
        if isinstance(other, SparsePoly) and not isinstance(other, BivarPoly):
            return BivarPoly(dict(other.terms))
        return super(BivarPoly, self)._coerce(other)

    def swapped(self) -> "BivarPoly":
        """Exchange x and y"""
        return self._spawn({(b, a): c for (a, b), c in self._terms.items()})

    def format(self, names: Optional[Sequence[str]] = None) -> str:
        return super(BivarPoly, self).format(names or ("x", "y"))


def poly_add(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p + q


def poly_mul(p: BivarPoly, q: BivarPoly) -> BivarPoly:
    return p * q


def divide_by_line(f: BivarPoly) -> Tuple[BivarPoly, BivarPoly]:
    """Divide f - 1 by x + y - 1, y being the leading variable

    Every y-bearing term c x^a y^b is traded for c x^a y^(b-1) (x + y - 1),
    so the remainder is a polynomial in x only. It vanishes exactly when f is
    identically one on the line x + y = 1.

    Args:
        f (BivarPoly): dividend

    Returns:
        Tuple[BivarPoly, BivarPoly]: quotient g and remainder r with
            f - 1 = (x + y - 1) g + r
    """
    rest: Dict[Exponents, Fraction] = dict(f.terms)
    rest[(0, 0)] = rest.get((0, 0), Fraction(0)) - 1
    quotient: Dict[Exponents, Fraction] = dict()

    def bump(key: Exponents, delta: Fraction, store: Dict) -> None:
        value = store.get(key, 0) + delta
        if value == 0:
            store.pop(key, None)
        else:
            store[key] = value

    top = max((b for _, b in rest), default=0)
    for b in range(top, 0, -1):
        for a in sorted(a for a, bb in list(rest) if bb == b):
            coeff = rest.pop((a, b))
            bump((a, b - 1), coeff, quotient)
            bump((a + 1, b - 1), -coeff, rest)
            bump((a, b - 1), coeff, rest)
    return BivarPoly(quotient), BivarPoly(rest)

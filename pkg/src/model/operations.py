from fractions import Fraction
from typing import Dict, List, Tuple

from ..polynomial import BivarPoly, Scalar, as_fraction, divide_by_line
from .model import (
    ExponentPair,
    InvalidModelError,
    PreconditionViolatedError,
    ReducedModel,
)

Move = Tuple[int, int, Fraction]


def compose_at(
    m1: ReducedModel, m2: ReducedModel, a: int, b: int
) -> ReducedModel:
    """Composition of two models at a support point of the first one

    One unit of the scaling at (a, b) is replaced by a copy of m2 shifted by
    (a, b), overlapping scalings add up.

    Args:
        m1 (ReducedModel): outer model
        m2 (ReducedModel): grafted model
        a (int): first exponent of the graft point
        b (int): second exponent of the graft point

    Raises:
        PreconditionViolatedError: scaling of m1 at (a, b) below one
    """
    if m1.coefficient((a, b)) < 1:
        raise PreconditionViolatedError(
            f"scaling at ({a},{b}) is {m1.coefficient((a, b))}, at least one "
            "is needed"
        )
    entries: Dict[ExponentPair, Fraction] = m1.as_dict()
    entries[ExponentPair(a, b)] -= 1
    for pair, c in m2:
        shifted = ExponentPair(pair.nu + a, pair.mu + b)
        entries[shifted] = entries.get(shifted, Fraction(0)) + c
    return ReducedModel({p: c for p, c in entries.items() if c != 0})


def compose(m1: ReducedModel, m2: ReducedModel) -> ReducedModel:
    """Composition at (d1, 0), d1 being the degree of m1

    Raises:
        PreconditionViolatedError: m1 has no scaling exactly one at (d1, 0)
    """
    d1 = m1.degree
    if m1.coefficient((d1, 0)) != 1:
        raise PreconditionViolatedError(
            f"composition needs the scaling one at ({d1},0)"
        )
    return compose_at(m1, m2, d1, 0)


def swap_model(m: ReducedModel) -> ReducedModel:
    """Substitute t -> 1 - t, i.e. exchange nu and mu"""
    return m.swapped()


def unsplit(f: BivarPoly, a: int, b: int, c: Scalar) -> BivarPoly:
    """Replace c (x^(a+1) y^b + x^a y^(b+1)) by c x^a y^b

    Raises:
        PreconditionViolatedError: c not positive or one of the two source
            coefficients below c
    """
    c = as_fraction(c)
    if c <= 0:
        raise PreconditionViolatedError(f"unsplit amount {c} not positive")
    for cell in ((a + 1, b), (a, b + 1)):
        if f.coefficient(*cell) < c:
            raise PreconditionViolatedError(
                f"coefficient {f.coefficient(*cell)} at {cell} is below {c}"
            )
    return (
        f
        - BivarPoly.monomial(a + 1, b, c)
        - BivarPoly.monomial(a, b + 1, c)
        + BivarPoly.monomial(a, b, c)
    )


def polynomial_model(f: BivarPoly) -> ReducedModel:
    """Read a polynomial with positive coefficients back as a model

    Raises:
        InvalidModelError: nonpositive coefficient or broken identity
    """
    if any(c <= 0 for c in f.terms.values()):
        raise InvalidModelError(f"{f} has a nonpositive coefficient")
    return ReducedModel(dict(f.terms))


def cofactor(m: ReducedModel) -> BivarPoly:
    """g_M with f_M - 1 = (x + y - 1) g_M

    Raises:
        InvalidModelError: nonzero remainder
    """
    g, remainder = divide_by_line(m.polynomial())
    if not remainder.is_zero():
        raise InvalidModelError(f"{m} is not one on the line x + y = 1")
    return g


def is_ancestor(m_from: ReducedModel, m_to: ReducedModel) -> bool:
    """Check whether unsplitting moves lead from one model to the other

    A move at (a, b) with amount c lowers g by c x^a y^b, so m_from is an
    ancestor of m_to exactly when both have the same degree and
    g_from - g_to has no negative coefficient.
    """
    if m_from.degree != m_to.degree:
        return False
    difference = cofactor(m_from) - cofactor(m_to)
    return all(c > 0 for c in difference.terms.values())


def unsplitting_path(m_from: ReducedModel, m_to: ReducedModel) -> List[Move]:
    """Unsplitting moves turning f of m_from into f of m_to

    Moves are emitted diagonal by diagonal from the top, so every
    intermediate polynomial keeps nonnegative coefficients.

    Raises:
        PreconditionViolatedError: m_from is not an ancestor of m_to
    """
    if not is_ancestor(m_from, m_to):
        raise PreconditionViolatedError(f"{m_from} is no ancestor of {m_to}")
    difference = cofactor(m_from) - cofactor(m_to)
    return [
        (a, b, difference.terms[(a, b)])
        for a, b in sorted(difference.terms, key=lambda p: (-sum(p), p[0]))
    ]


def apply_moves(f: BivarPoly, moves: List[Move]) -> BivarPoly:
    for a, b, c in moves:
        f = unsplit(f, a, b, c)
    return f


def homogeneous_identity_holds(m: ReducedModel) -> bool:
    """Check f_d + (x + y) f_(d-1) + ... + (x + y)^d f_0 = (x + y)^d for the
    homogeneous parts f_k of f_M"""
    d = m.degree
    line = BivarPoly.x() + BivarPoly.y()
    parts = m.polynomial().homogeneous_parts()
    total = sum(
        (line ** (d - k) * part for k, part in parts.items()), BivarPoly()
    )
    return total == line**d

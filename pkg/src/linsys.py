from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .polynomial import as_fraction

Pair = Tuple[int, int]
Vector = Tuple[Fraction, ...]


class LinearSystemError(ValueError):

    """Malformed linear system or support"""

    pass


def graded_lex_key(pair: Pair) -> Tuple[int, int]:
    """Sort key: total degree ascending, then first exponent descending"""
    return (pair[0] + pair[1], -pair[0])


def expansion_entry(nu: int, mu: int, alpha: int) -> int:
    """Coefficient of t^alpha in t^nu (1 - t)^mu"""
    k = alpha - nu
    if 0 <= k <= mu:
        return (-1) ** k * comb(mu, k)
    return 0


class LinSystem:

    """Dense exact system matrix * c = rhs, optionally labelled by the
    support pair behind each column"""

    def __init__(
        self,
        matrix: Sequence[Sequence],
        rhs: Sequence,
        columns: Optional[Sequence[Pair]] = None,
    ):
        """LinSystem constructor

        Args:
            matrix (Sequence[Sequence]): rows of exact scalars
            rhs (Sequence): right-hand side, one entry per row
            columns (Sequence[Pair], optional): column labels

        Raises:
            LinearSystemError: ragged matrix or mismatching sizes
        """
        self._matrix = tuple(
            tuple(as_fraction(v) for v in row) for row in matrix
        )
        self._rhs = tuple(as_fraction(v) for v in rhs)
        widths = {len(row) for row in self._matrix}
        if len(widths) > 1:
            raise LinearSystemError("ragged matrix")
        if len(self._rhs) != len(self._matrix):
            raise LinearSystemError(
                f"{len(self._matrix)} rows but {len(self._rhs)} rhs entries"
            )
        self._cols = widths.pop() if widths else len(columns or ())
        self._columns = tuple(columns) if columns is not None else None
        if self._columns is not None and len(self._columns) != self._cols:
            raise LinearSystemError("column labels do not match the matrix")

    @property
    def matrix(self) -> Tuple[Vector, ...]:
        return self._matrix

    @property
    def rhs(self) -> Vector:
        return self._rhs

    @property
    def columns(self) -> Optional[Tuple[Pair, ...]]:
        return self._columns

    @property
    def rows(self) -> int:
        return len(self._matrix)

    @property
    def cols(self) -> int:
        return self._cols

    def residual(self, solution: Sequence) -> Vector:
        """matrix * solution - rhs"""
        solution = [as_fraction(v) for v in solution]
        if len(solution) != self._cols:
            raise LinearSystemError("solution length differs from columns")
        return tuple(
            sum((a * x for a, x in zip(row, solution)), Fraction(0)) - b
            for row, b in zip(self._matrix, self._rhs)
        )

    def head(self, rows: int) -> "LinSystem":
        """Subsystem of the first rows"""
        return LinSystem(self._matrix[:rows], self._rhs[:rows], self._columns)


def expansion_matrix(support: Iterable[Pair], d: int) -> LinSystem:
    """Coefficient system of sum_i c_i t^nu_i (1 - t)^mu_i = 1

    Row alpha collects the coefficient of t^alpha, columns follow graded-lex
    order of the support.

    Args:
        support (Iterable[Pair]): exponent pairs (nu, mu)
        d (int): number of rows minus one, at least the support degree

    Raises:
        LinearSystemError: duplicate pairs or d below the support degree

    Returns:
        LinSystem: (d + 1) x |support| system with rhs (1, 0, ..., 0)
    """
    pairs = [(int(nu), int(mu)) for nu, mu in support]
    if len(set(pairs)) != len(pairs):
        raise LinearSystemError(f"duplicate pairs in support {pairs}")
    if pairs and d < max(nu + mu for nu, mu in pairs):
        raise LinearSystemError(f"degree {d} below the support degree")
    columns = sorted(pairs, key=graded_lex_key)
    matrix = [
        [expansion_entry(nu, mu, alpha) for nu, mu in columns]
        for alpha in range(d + 1)
    ]
    rhs = [1] + [0] * d
    return LinSystem(matrix, rhs, columns)


class SolveStatus(Enum):
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class SolveResult:
    status: SolveStatus
    rank: int
    solution: Optional[Vector] = None
    nullspace: Tuple[Vector, ...] = ()

    @property
    def nullity(self) -> int:
        return len(self.nullspace)


def _integer_rows(matrix: Sequence[Vector], rhs: Vector) -> List[List[int]]:
    rows = []
    for row, b in zip(matrix, rhs):
        scale = lcm(*(v.denominator for v in row), b.denominator)
        rows.append([int(v * scale) for v in row] + [int(b * scale)])
    return rows


def fraction_free_echelon(
    rows: List[List[int]], ncols: int
) -> Tuple[List[List[int]], List[int]]:
    """Bareiss elimination to row-echelon form over the integers

    Every intermediate entry is a minor of the input, so the division by the
    previous pivot is exact. Columns past ncols (an augmented rhs) are
    carried along but never chosen as pivots.

    Args:
        rows (List[List[int]]): integer rows, left untouched
        ncols (int): number of pivot-eligible columns

    Returns:
        Tuple[List[List[int]], List[int]]: echelon rows and pivot columns
    """
    rows = [list(row) for row in rows]
    height = len(rows)
    width = len(rows[0]) if rows else 0
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == height:
            break
        pivot = next((i for i in range(r, height) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        head = rows[r]
        p = head[c]
        for i in range(r + 1, height):
            row = rows[i]
            factor = row[c]
            for j in range(c + 1, width):
                row[j] = (p * row[j] - factor * head[j]) // previous
            row[c] = 0
        previous = p
        pivots.append(c)
        r += 1
    return rows, pivots


def _reduced(
    echelon: List[List[int]], pivots: List[int]
) -> List[List[Fraction]]:
    """Back-eliminate the pivot rows into reduced row-echelon form"""
    rows = [[Fraction(v) for v in echelon[k]] for k in range(len(pivots))]
    for k in range(len(pivots) - 1, -1, -1):
        c = pivots[k]
        head = rows[k]
        p = head[c]
        rows[k] = head = [v / p for v in head]
        for i in range(k):
            factor = rows[i][c]
            if factor:
                rows[i] = [a - factor * b for a, b in zip(rows[i], head)]
    return rows


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    matrix = [[as_fraction(v) for v in row] for row in matrix]
    if not matrix:
        return 0
    rows = _integer_rows(matrix, tuple(Fraction(0) for _ in matrix))
    return len(fraction_free_echelon(rows, len(matrix[0]))[1])


def solve_exact(system: LinSystem) -> SolveResult:
    """Classify and solve exactly

    Args:
        system (LinSystem): system to solve

    Returns:
        SolveResult: UNIQUE with the solution; UNDERDETERMINED with a
            particular solution (free unknowns zero) and a nullspace basis
            (one vector per free column); INCONSISTENT otherwise
    """
    ncols = system.cols
    rows = _integer_rows(system.matrix, system.rhs)
    echelon, pivots = fraction_free_echelon(rows, ncols)
    rank = len(pivots)
    if any(echelon[i][ncols] for i in range(rank, len(echelon))):
        return SolveResult(SolveStatus.INCONSISTENT, rank)
    reduced = _reduced(echelon, pivots)
    particular = [Fraction(0)] * ncols
    for k, p in enumerate(pivots):
        particular[p] = reduced[k][ncols]
    free = [c for c in range(ncols) if c not in set(pivots)]
    if not free:
        return SolveResult(SolveStatus.UNIQUE, rank, tuple(particular))
    nullspace = []
    for f in free:
        vector = [Fraction(0)] * ncols
        vector[f] = Fraction(1)
        for k, p in enumerate(pivots):
            vector[p] = -reduced[k][f]
        nullspace.append(tuple(vector))
    return SolveResult(
        SolveStatus.UNDERDETERMINED, rank, tuple(particular), tuple(nullspace)
    )


def pinned_values(system: LinSystem) -> Optional[Dict[int, Fraction]]:
    """Unknowns whose value is the same in every solution

    Args:
        system (LinSystem): possibly underdetermined system

    Returns:
        Optional[Dict[int, Fraction]]: column index to its forced value, None
            when the system is inconsistent
    """
    ncols = system.cols
    rows = _integer_rows(system.matrix, system.rhs)
    echelon, pivots = fraction_free_echelon(rows, ncols)
    rank = len(pivots)
    if any(echelon[i][ncols] for i in range(rank, len(echelon))):
        return None
    reduced = _reduced(echelon, pivots)
    free = [c for c in range(ncols) if c not in set(pivots)]
    return {
        p: reduced[k][ncols]
        for k, p in enumerate(pivots)
        if all(reduced[k][f] == 0 for f in free)
    }


class EchelonBasis:

    """Integer row-echelon basis of a growing vector set, copied on extension
    so that search branches never share state"""

    def __init__(self):
        self._rows: Tuple[Tuple[int, Tuple[int, ...]], ...] = tuple()

    def __len__(self) -> int:
        return len(self._rows)

    def extended(self, vector: Sequence[int]) -> Optional["EchelonBasis"]:
        """Add a vector

        Args:
            vector (Sequence[int]): integer vector

        Returns:
            Optional[EchelonBasis]: enlarged basis, None when the vector is
                dependent on the current ones
        """
        v = list(vector)
        for pivot, row in self._rows:
            if v[pivot]:
                a, b = row[pivot], v[pivot]
                v = [a * x - b * y for x, y in zip(v, row)]
                g = gcd(*v)
                if g > 1:
                    v = [x // g for x in v]
        lead = next((i for i, x in enumerate(v) if x), None)
        if lead is None:
            return None
        basis = EchelonBasis()
        basis._rows = self._rows + ((lead, tuple(v)),)
        return basis

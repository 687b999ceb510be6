from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

# number of fundamental models in the n-simplex of degree d
table_counts: Dict[Tuple[int, int], int] = {
    (1, 1): 1,
    (2, 2): 3,
    (2, 3): 1,
    (3, 3): 12,
    (3, 4): 4,
    (3, 5): 2,
    (4, 4): 82,
    (4, 5): 38,
    (4, 6): 10,
    (4, 7): 4,
    (5, 5): 602,
    (5, 6): 254,
    (5, 7): 88,
    (5, 8): 24,
    (5, 9): 2,
}

# rows only reachable with a long-running search
long_run_counts: Dict[Tuple[int, int], int] = {
    (6, 6): 6710,
    (6, 7): 2421,
    (6, 8): 643,
    (6, 9): 198,
    (6, 10): 32,
    (6, 11): 4,
    (7, 7): 83906,
    (7, 8): 23285,
    (7, 9): 6445,
    (7, 10): 1442,
    (7, 11): 332,
    (7, 12): 56,
    (7, 13): 8,
}


def degree_bound(n: int) -> int:
    """Largest degree of a fundamental model in the n-simplex

    Args:
        n (int): simplex dimension

    Returns:
        int: 2n - 1
    """
    return 2 * n - 1


def degree_window(n: int) -> range:
    """Degrees d admitting a fundamental model in the n-simplex"""
    return range(n, degree_bound(n) + 1)


def in_window(n: int, d: int) -> bool:
    return n <= d <= degree_bound(n)


def binomial_coefficients(n: int) -> List[int]:
    """Scalings C(n, i) of the binomial model, i = 0..n"""
    return [comb(n, i) for i in range(n + 1)]


def sharp_coefficient(n: int, i: int) -> Fraction:
    """Scaling of t^(n-i-1) (1 - t)^(2i+1) in the sharp family

    Args:
        n (int): simplex dimension
        i (int): term index, 0 <= i < n

    Raises:
        ValueError: index out of range

    Returns:
        Fraction: (2n - 1) / (2i + 1) * C(n + i - 1, 2i)
    """
    if not 0 <= i < n:
        raise ValueError(f"term index {i} out of range for n = {n}")
    return Fraction(2 * n - 1, 2 * i + 1) * comb(n + i - 1, 2 * i)


def sink_lower_bound(d: int) -> int:
    """Least number of sinks in the Newton diagram of a degree-d model

    Returns:
        int: 2 + ceil((d - 1) / 2)
    """
    return 2 + -(-(d - 1) // 2)


def recursive_bound(sharp_counts: Sequence[int]) -> int:
    """Lower bound on the number of almost sharp fundamental models

    Args:
        sharp_counts (Sequence[int]): a_1, ..., a_(n-1), the number of sharp
            fundamental models in the k-simplex

    Returns:
        int: 2 (a_1 a_(n-1) + a_2 a_(n-2) + ... + a_(n-1) a_1)
    """
    n = len(sharp_counts) + 1
    return 2 * sum(
        sharp_counts[k - 1] * sharp_counts[n - k - 1] for k in range(1, n)
    )


def mle_closed_form(
    pairs: Sequence[Tuple[int, int]], counts: Sequence[Fraction]
) -> Tuple[Fraction, Fraction]:
    """Numerator and denominator of the maximum likelihood estimate

    Returns:
        Tuple[Fraction, Fraction]: sum u_i nu_i and sum u_i (nu_i + mu_i)
    """
    numerator = sum((u * nu for (nu, _), u in zip(pairs, counts)), Fraction())
    denominator = sum(
        (u * (nu + mu) for (nu, mu), u in zip(pairs, counts)), Fraction()
    )
    return numerator, denominator

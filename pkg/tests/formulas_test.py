from fractions import Fraction
import unittest

from src.model.formulas import (
    binomial_coefficients,
    degree_bound,
    degree_window,
    in_window,
    long_run_counts,
    mle_closed_form,
    recursive_bound,
    sharp_coefficient,
    sink_lower_bound,
    table_counts,
)


class TestSimpleFormulas(unittest.TestCase):
    def test_degree_bound(self):
        self.assertEqual(degree_bound(1), 1)
        self.assertEqual(degree_bound(4), 7)
        self.assertEqual(list(degree_window(3)), [3, 4, 5])
        self.assertTrue(in_window(3, 3))
        self.assertTrue(in_window(3, 5))
        self.assertFalse(in_window(3, 6))
        self.assertFalse(in_window(3, 2))

    def test_binomial_coefficients(self):
        self.assertEqual(binomial_coefficients(1), [1, 1])
        self.assertEqual(binomial_coefficients(4), [1, 4, 6, 4, 1])

    def test_sharp_coefficient(self):
        self.assertEqual(sharp_coefficient(1, 0), 1)
        self.assertEqual(sharp_coefficient(2, 0), 3)
        self.assertEqual(sharp_coefficient(2, 1), 1)
        self.assertEqual(
            [sharp_coefficient(3, i) for i in range(3)], [5, 5, 1]
        )
        self.assertEqual(
            [sharp_coefficient(4, i) for i in range(4)],
            [7, 14, 7, 1],
        )
        self.assertRaises(ValueError, lambda: sharp_coefficient(3, 3))
        self.assertRaises(ValueError, lambda: sharp_coefficient(3, -1))

    def test_sink_lower_bound(self):
        self.assertEqual(
            [sink_lower_bound(d) for d in range(1, 9)],
            [2, 3, 3, 4, 4, 5, 5, 6],
        )

    def test_sink_bound_matches_degree_bound(self):
        # n + 1 support points are needed for the sinks of a degree 2n - 1
        for n in range(1, 10):
            self.assertEqual(sink_lower_bound(degree_bound(n)), n + 1)
            self.assertGreater(sink_lower_bound(degree_bound(n) + 1), n + 1)


class TestTable(unittest.TestCase):
    def test_rows_cover_window(self):
        known = dict(table_counts)
        known.update(long_run_counts)
        for n in range(1, 8):
            for d in degree_window(n):
                self.assertIn((n, d), known)
        self.assertEqual(len(known), sum(n for n in range(1, 8)))

    def test_sharp_column(self):
        self.assertEqual(
            [table_counts[(n, degree_bound(n))] for n in range(1, 6)],
            [1, 1, 2, 4, 2],
        )


class TestRecursiveBound(unittest.TestCase):
    def test_values(self):
        self.assertEqual(recursive_bound([1, 1]), 4)
        self.assertEqual(recursive_bound([1, 1, 2]), 10)
        self.assertEqual(recursive_bound([1, 1, 2, 4]), 24)

    def test_matches_almost_sharp_counts(self):
        known = dict(table_counts)
        known.update(long_run_counts)
        for n in range(3, 8):
            sharp = [known[(k, degree_bound(k))] for k in range(1, n)]
            self.assertEqual(
                recursive_bound(sharp), known[(n, degree_bound(n) - 1)]
            )


class TestMleClosedForm(unittest.TestCase):
    def test_sharp(self):
        pairs = [(1, 1), (3, 0), (0, 3)]
        counts = [Fraction(2), Fraction(5), Fraction(7)]
        self.assertEqual(mle_closed_form(pairs, counts), (17, 40))

    def test_zero_counts(self):
        self.assertEqual(
            mle_closed_form([(1, 0), (0, 1)], [Fraction(0), Fraction(0)]),
            (0, 0),
        )

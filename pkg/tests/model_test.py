from fractions import Fraction
import unittest

from src.linsys import SolveStatus
from src.model.model import (
    ExponentPair,
    InvalidModelError,
    InvalidSupportError,
    ReducedModel,
    canonical_support,
    is_fundamental,
    solve_scalings,
)
from src.polynomial import BivarPoly

sharp2 = ReducedModel({(1, 1): 3, (3, 0): 1, (0, 3): 1})
grafted = ReducedModel({(0, 1): 1, (2, 1): 3, (4, 0): 1, (1, 3): 1})
family_support = [(1, 1), (0, 3), (3, 0), (3, 1), (4, 0)]
second_family_support = [(1, 0), (0, 1), (2, 1), (1, 3), (4, 0)]


class TestExponentPair(unittest.TestCase):
    def test_pair(self):
        pair = ExponentPair(2, 5)
        self.assertEqual(pair.degree, 7)
        self.assertEqual(pair.swapped(), (5, 2))
        self.assertEqual(str(pair), "(2,5)")

    def test_canonical_support(self):
        self.assertEqual(
            canonical_support([(0, 3), (3, 0), (1, 1)]),
            ((1, 1), (3, 0), (0, 3)),
        )
        self.assertRaises(InvalidSupportError, lambda: canonical_support([]))
        self.assertRaises(
            InvalidSupportError, lambda: canonical_support([(0, 0), (1, 0)])
        )
        self.assertRaises(
            InvalidSupportError, lambda: canonical_support([(-1, 2)])
        )
        self.assertRaises(
            InvalidSupportError, lambda: canonical_support([(1, 0), (1, 0)])
        )


class TestReducedModel(unittest.TestCase):
    def test_accessors(self):
        self.assertEqual(sharp2.support, ((1, 1), (3, 0), (0, 3)))
        self.assertEqual(sharp2.scalings, (3, 1, 1))
        self.assertEqual(sharp2.n, 2)
        self.assertEqual(len(sharp2), 3)
        self.assertEqual(sharp2.degree, 3)
        self.assertEqual(sharp2.coefficient((1, 1)), 3)
        self.assertEqual(sharp2.coefficient((2, 2)), 0)
        self.assertEqual(list(sharp2), list(sharp2.entries))

    def test_str(self):
        self.assertEqual(str(sharp2), "{(1,1): 3, (3,0): 1, (0,3): 1}")
        half = Fraction(1, 2)
        model = ReducedModel(
            {(1, 0): half, (0, 1): half, (2, 0): half, (1, 1): 1, (0, 2): half}
        )
        self.assertEqual(
            str(model),
            "{(1,0): 1/2, (0,1): 1/2, (2,0): 1/2, (1,1): 1, (0,2): 1/2}",
        )

    def test_polynomial(self):
        x, y = BivarPoly.x(), BivarPoly.y()
        self.assertEqual(sharp2.polynomial(), x**3 + 3 * x * y + y**3)

    def test_identity_residual(self):
        self.assertEqual(grafted.identity_residual(), (0, 0, 0, 0, 0))

    def test_equality(self):
        same = ReducedModel([((0, 3), 1), ((3, 0), 1), ((1, 1), Fraction(3))])
        self.assertEqual(same, sharp2)
        self.assertEqual(hash(same), hash(sharp2))
        self.assertNotEqual(grafted, sharp2)
        self.assertEqual(len({same, sharp2, grafted}), 2)

    def test_swapped(self):
        self.assertEqual(sharp2.swapped(), sharp2)
        self.assertEqual(
            grafted.swapped(),
            ReducedModel({(1, 0): 1, (1, 2): 3, (0, 4): 1, (3, 1): 1}),
        )
        self.assertEqual(grafted.swapped().swapped(), grafted)

    def test_sort_key(self):
        self.assertEqual(sharp2.sort_key(), ((0, 3), (1, 1), (3, 0)))

    def test_invalid_support(self):
        self.assertRaises(InvalidSupportError, lambda: ReducedModel({}))
        self.assertRaises(
            InvalidSupportError,
            lambda: ReducedModel({(0, 0): 1, (1, 0): 1}),
        )
        self.assertRaises(
            InvalidSupportError,
            lambda: ReducedModel([((1, 0), 1), ((1, 0), 1)]),
        )

    def test_invalid_scalings(self):
        self.assertRaisesRegex(
            InvalidModelError,
            "not positive",
            lambda: ReducedModel({(1, 1): -3, (3, 0): 1, (0, 3): 1}),
        )
        self.assertRaisesRegex(
            InvalidModelError,
            "nu = 0",
            lambda: ReducedModel({(1, 0): 1}),
        )
        self.assertRaisesRegex(
            InvalidModelError,
            "mu = 0",
            lambda: ReducedModel({(0, 1): 1}),
        )
        self.assertRaisesRegex(
            InvalidModelError,
            "do not sum to one",
            lambda: ReducedModel({(1, 0): 1, (0, 1): 2}),
        )
        self.assertRaises(
            TypeError, lambda: ReducedModel({(1, 0): 0.5, (0, 1): 0.5})
        )


class TestSolveScalings(unittest.TestCase):
    def test_fundamental(self):
        model, report = solve_scalings([(3, 0), (0, 3), (1, 1)])
        self.assertEqual(model, sharp2)
        self.assertTrue(report.fundamental)
        self.assertTrue(report.positive)
        self.assertTrue(report.decided)
        self.assertEqual((report.rank, report.nullity), (3, 0))

    def test_unique_not_positive(self):
        model, report = solve_scalings([(1, 0), (0, 1), (2, 0)])
        self.assertIsNone(model)
        self.assertTrue(report.fundamental)
        self.assertFalse(report.positive)

    def test_inconsistent(self):
        model, report = solve_scalings([(1, 0), (2, 0)])
        self.assertIsNone(model)
        self.assertEqual(report.status, SolveStatus.INCONSISTENT)
        self.assertFalse(report.fundamental)
        self.assertFalse(report.positive)

    def test_one_parameter(self):
        for support in (family_support, second_family_support):
            model, report = solve_scalings(support)
            self.assertEqual(report.status, SolveStatus.UNDERDETERMINED)
            self.assertEqual(report.nullity, 1)
            self.assertFalse(report.fundamental)
            self.assertTrue(report.positive)
            self.assertEqual(set(model.support), set(support))
            self.assertTrue(all(c > 0 for c in model.scalings))

    def test_second_family_scalings(self):
        # (1,0) and (1,3) trade off, all other scalings follow
        model, _ = solve_scalings(second_family_support)
        e = model.coefficient((1, 3))
        self.assertEqual(model.coefficient((1, 0)), 1 - e)
        self.assertEqual(model.coefficient((0, 1)), 1)
        self.assertEqual(model.coefficient((2, 1)), 3 * e)
        self.assertEqual(model.coefficient((4, 0)), e)

    def test_two_parameters(self):
        support = [(1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
        model, report = solve_scalings(support)
        self.assertEqual(report.nullity, 2)
        self.assertTrue(report.decided)
        self.assertTrue(report.positive)
        self.assertFalse(any(model.identity_residual()))

    def test_invalid(self):
        self.assertRaises(
            InvalidSupportError, lambda: solve_scalings([(1, 0), (1, 0)])
        )

    def test_is_fundamental(self):
        self.assertTrue(is_fundamental(sharp2))
        self.assertTrue(is_fundamental(grafted))
        model, _ = solve_scalings(family_support)
        self.assertFalse(is_fundamental(model))

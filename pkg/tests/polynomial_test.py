from fractions import Fraction
import unittest

from src.polynomial import (
    BivarPoly,
    SparsePoly,
    as_fraction,
    divide_by_line,
    format_rational,
    poly_add,
    poly_mul,
)

x, y = BivarPoly.x(), BivarPoly.y()


class TestScalars(unittest.TestCase):
    def test_as_fraction(self):
        self.assertEqual(as_fraction(3), Fraction(3))
        self.assertEqual(as_fraction("7/2"), Fraction(7, 2))
        self.assertEqual(as_fraction(Fraction(2, 4)), Fraction(1, 2))
        self.assertRaises(TypeError, lambda: as_fraction(0.5))
        self.assertRaises(TypeError, lambda: as_fraction(True))

    def test_format_rational(self):
        self.assertEqual(format_rational(Fraction(7, 2)), "7/2")
        self.assertEqual(format_rational(Fraction(-3)), "-3")


class TestArithmetic(unittest.TestCase):
    def test_zero_coefficients_dropped(self):
        p = BivarPoly({(1, 0): 1, (0, 1): 0})
        self.assertEqual(dict(p.terms), {(1, 0): Fraction(1)})
        self.assertTrue((x - x).is_zero())
        self.assertIsNone(BivarPoly().degree)

    def test_poly_add(self):
        square = BivarPoly({(2, 0): 1, (1, 1): 2, (0, 2): 1})
        cross = BivarPoly({(1, 1): -2})
        self.assertEqual(
            poly_add(square, cross), BivarPoly({(2, 0): 1, (0, 2): 1})
        )
        self.assertEqual(poly_add(x, y), x + y)

    def test_poly_mul(self):
        line = BivarPoly.line()
        self.assertEqual(poly_mul(line, 1 + x + y), (x + y) ** 2 - 1)
        g = 1 + x + y + x**2 - x * y + y**2
        self.assertEqual(
            poly_mul(line, g), x**3 + 3 * x * y + y**3 - 1
        )

    def test_scalar_coercion(self):
        self.assertEqual(x + 1, BivarPoly({(1, 0): 1, (0, 0): 1}))
        self.assertEqual(2 * x, BivarPoly({(1, 0): 2}))
        self.assertEqual(x * 0, BivarPoly())
        self.assertEqual(BivarPoly.constant(1, 2), 1)
        self.assertRaises(ValueError, lambda: x ** -1)

    def test_different_variable_sets(self):
        p = SparsePoly.variable(0, 3)
        q = SparsePoly.variable(0, 2)
        self.assertRaises(ValueError, lambda: p + q)

    def test_invalid_exponents(self):
        self.assertRaises(ValueError, lambda: BivarPoly({(1,): 1}))
        self.assertRaises(ValueError, lambda: BivarPoly({(-1, 0): 1}))
        self.assertRaises(ValueError, lambda: SparsePoly(0))

    def test_homogeneous_parts(self):
        parts = (x**2 + 3 * x * y + x + 1).homogeneous_parts()
        self.assertEqual(sorted(parts), [0, 1, 2])
        self.assertEqual(parts[2], x**2 + 3 * x * y)
        self.assertEqual(parts[0], 1)

    def test_evaluate(self):
        half = Fraction(1, 2)
        self.assertEqual(((x + y) ** 2).evaluate(half, half), 1)
        self.assertEqual((x * y).evaluate(2, "1/3"), Fraction(2, 3))
        self.assertRaises(ValueError, lambda: x.evaluate(1))

    def test_swapped(self):
        self.assertEqual((x**2 * y + 3 * y).swapped(), y**2 * x + 3 * x)


class TestFormat(unittest.TestCase):
    def test_lex_descending(self):
        self.assertEqual((x**3 + 3 * x * y + y**3).format(), "x^3+3xy+y^3")
        self.assertEqual(
            (x**3 + x**2 * y + x * y + y).format(), "x^3+x^2y+xy+y"
        )
        self.assertEqual(((x + y) ** 2 - 1).format(), "x^2+2xy+y^2-1")

    def test_signs_and_fractions(self):
        self.assertEqual(str(BivarPoly()), "0")
        self.assertEqual(str(-x + Fraction(1, 2)), "-x+1/2")
        self.assertEqual(str(BivarPoly({(1, 5): "7/2"})), "7/2xy^5")

    def test_more_variables(self):
        p = SparsePoly.variable(0, 3) * SparsePoly.variable(2, 3)
        self.assertEqual(p.format(), "x1x3")
        self.assertEqual(p.format(("a", "b", "c")), "ac")


class TestDivideByLine(unittest.TestCase):
    def test_binomial(self):
        g, r = divide_by_line((x + y) ** 2)
        self.assertEqual(g, 1 + x + y)
        self.assertTrue(r.is_zero())

    def test_sharp(self):
        g, r = divide_by_line(x**3 + 3 * x * y + y**3)
        self.assertEqual(g, 1 + x + y + x**2 - x * y + y**2)
        self.assertTrue(r.is_zero())

    def test_constant_one(self):
        g, r = divide_by_line(BivarPoly({(0, 0): 1}))
        self.assertTrue(g.is_zero())
        self.assertTrue(r.is_zero())

    def test_remainder(self):
        f = x**2 + 2 * x * y**3 + Fraction(1, 3) * y
        g, r = divide_by_line(f)
        self.assertFalse(r.is_zero())
        self.assertTrue(all(b == 0 for _, b in r.terms))
        self.assertEqual(BivarPoly.line() * g + r + 1, f)

    def test_not_one_on_line(self):
        _, r = divide_by_line(x**2)
        self.assertFalse(r.is_zero())
        self.assertEqual(r, x**2 - 1)

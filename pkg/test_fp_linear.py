#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for fp_linear."""

import random
import unittest

from sympy import Matrix, legendre_symbol, primerange, symbols

from fp_linear import (
    ConicPoint,
    char_poly2,
    char_poly3,
    check_odd_prime,
    conic_points,
    det3,
    format_conic_point,
    inv_mod,
    kernel_mod,
    legendre,
    mat_identity,
    mat_mul,
    mat_order,
    mat_pow,
    mat_vec,
    normalize_point,
    poly_mul,
    solve_unit_form,
    sqrt_mod,
)

SMALL_PRIMES = list(primerange(3, 60))


class ScalarTest(unittest.TestCase):

    def test_check_odd_prime(self):
        self.assertEqual(check_odd_prime(7), 7)
        for bad in (2, 9, 1, 0, -3):
            with self.assertRaises(ValueError):
                check_odd_prime(bad)

    def test_legendre_matches_sympy(self):
        for p in SMALL_PRIMES:
            for n in range(-p, 2 * p):
                self.assertEqual(legendre(n, p), legendre_symbol(n % p, p), (n, p))

    def test_legendre_rejects_composite_modulus(self):
        with self.assertRaises(ValueError):
            legendre(2, 9)

    def test_inv_mod(self):
        for p in SMALL_PRIMES:
            for n in range(1, p):
                self.assertEqual((n * inv_mod(n, p)) % p, 1)
        with self.assertRaises(ZeroDivisionError):
            inv_mod(7, 7)

    def test_sqrt_mod(self):
        for p in SMALL_PRIMES + [97, 193, 257]:
            for n in range(p):
                r = sqrt_mod(n, p)
                if n and legendre(n, p) == -1:
                    self.assertIsNone(r)
                else:
                    self.assertEqual((r * r) % p, n)
                    self.assertLessEqual(r, (p - 1) // 2)

    def test_sqrt_of_minus_one(self):
        self.assertEqual(sqrt_mod(-1, 5), 2)
        self.assertEqual(sqrt_mod(-1, 13), 5)
        self.assertIsNone(sqrt_mod(-1, 7))

    def test_solve_unit_form(self):
        self.assertEqual(solve_unit_form(1, 1, 5), (0, 1))
        self.assertEqual(solve_unit_form(2, 3, 7), (1, 3))
        rng = random.Random(3)
        for _ in range(200):
            p = rng.choice(SMALL_PRIMES)
            a, b = rng.randrange(1, p), rng.randrange(1, p)
            x, y = solve_unit_form(a, b, p)
            self.assertEqual((a * x * x + b * y * y) % p, 1)

    def test_solve_unit_form_rejects_degenerate(self):
        with self.assertRaises(ValueError):
            solve_unit_form(0, 1, 5)
        with self.assertRaises(ValueError):
            solve_unit_form(3, 7, 7)


class ConicTest(unittest.TestCase):

    def test_points_mod_3(self):
        pts = [c.coords for c in conic_points(3)]
        self.assertEqual(pts, [(1, 1, 1), (1, 1, 2), (1, 2, 1), (1, 2, 2)])

    def test_points_mod_5(self):
        pts = [c.coords for c in conic_points(5)]
        self.assertEqual(pts, [(0, 1, 2), (0, 1, 3), (1, 0, 2), (1, 0, 3), (1, 2, 0), (1, 3, 0)])

    def test_point_count_and_membership(self):
        for p in primerange(3, 98):
            pts = conic_points(p)
            self.assertEqual(len(pts), p + 1)
            self.assertEqual(len(set(pts)), p + 1)
            for c in pts:
                self.assertEqual(sum(x * x for x in c.coords) % p, 0)
                self.assertEqual(normalize_point(c.coords, p), c.coords)

    def test_points_match_exhaustive_scan(self):
        for p in primerange(3, 32):
            scanned = set()
            for x in range(p):
                for y in range(p):
                    for z in range(p):
                        if (x, y, z) != (0, 0, 0) and (x * x + y * y + z * z) % p == 0:
                            scanned.add(normalize_point((x, y, z), p))
            self.assertEqual(scanned, {c.coords for c in conic_points(p)}, p)

    def test_conic_point_validation(self):
        with self.assertRaises(ValueError):
            ConicPoint(1, 1, 1, 5)
        with self.assertRaises(ValueError):
            ConicPoint(2, 2, 2, 3)

    def test_format(self):
        c = ConicPoint(1, 2, 0, 5)
        self.assertEqual(format_conic_point(c), "(1:2:0) mod 5")
        self.assertEqual(str(c), "(1:2:0) mod 5")

    def test_normalize_point(self):
        self.assertEqual(normalize_point((0, 3, 6), 7), (0, 1, 2))
        self.assertEqual(normalize_point((4, 1, 2), 7), (1, 2, 4))
        with self.assertRaises(ValueError):
            normalize_point((0, 7, 14), 7)


class MatrixTest(unittest.TestCase):

    def setUp(self):
        self.rng = random.Random(5)

    def _random_matrix(self, n, p):
        return tuple(tuple(self.rng.randrange(p) for _ in range(n)) for _ in range(n))

    def test_identity_is_neutral(self):
        m = self._random_matrix(3, 11)
        self.assertEqual(mat_mul(m, mat_identity(3), 11), m)
        self.assertEqual(mat_mul(mat_identity(3), m, 11), m)

    def test_mat_vec_and_pow_agree_with_sympy(self):
        p = 13
        for _ in range(20):
            m = self._random_matrix(3, p)
            v = tuple(self.rng.randrange(p) for _ in range(3))
            expected = (Matrix(m) * Matrix(v)).applyfunc(lambda x: x % p)
            self.assertEqual(mat_vec(m, v, p), tuple(expected))
            e = self.rng.randrange(0, 20)
            expected = (Matrix(m) ** e).applyfunc(lambda x: x % p)
            self.assertEqual(mat_pow(m, e, p), tuple(tuple(expected.row(i)) for i in range(3)))

    def test_mat_order(self):
        rot = ((0, 6), (1, 0))
        self.assertEqual(mat_order(rot, 7), 4)
        self.assertEqual(mat_order(mat_identity(3), 5), 1)
        with self.assertRaises(ArithmeticError):
            mat_order(((1, 1), (0, 1)), 7, limit=3)

    def test_det_and_charpoly_agree_with_sympy(self):
        x = symbols("x")
        for p in (5, 7, 13, 31):
            for _ in range(20):
                m = self._random_matrix(3, p)
                self.assertEqual(det3(m, p), Matrix(m).det() % p)
                coeffs = tuple(int(c) % p for c in Matrix(m).charpoly(x).all_coeffs())
                self.assertEqual(char_poly3(m, p), coeffs)
                m2 = self._random_matrix(2, p)
                coeffs = tuple(int(c) % p for c in Matrix(m2).charpoly(x).all_coeffs())
                self.assertEqual(char_poly2(m2, p), coeffs)

    def test_char_poly_of_identity(self):
        self.assertEqual(char_poly3(mat_identity(3), 7), (1, 4, 3, 6))

    def test_poly_mul(self):
        # (x - 1)(x^2 + 1) = x^3 - x^2 + x - 1
        self.assertEqual(poly_mul((1, 6), (1, 0, 1), 7), (1, 6, 1, 6))

    def test_kernel(self):
        m = ((1, 2, 3), (2, 4, 6), (1, 1, 1))
        for p in (5, 7, 11):
            basis = kernel_mod(m, p)
            self.assertEqual(len(basis), 1)
            self.assertEqual(mat_vec(m, basis[0], p), (0, 0, 0))
        self.assertEqual(kernel_mod(mat_identity(3), 7), [])
        self.assertEqual(len(kernel_mod(((0, 0, 0),) * 3, 7)), 3)

    def test_kernel_random(self):
        p = 7
        for _ in range(50):
            m = self._random_matrix(3, p)
            for v in kernel_mod(m, p):
                self.assertEqual(mat_vec(m, v, p), (0, 0, 0))
            self.assertEqual(len(kernel_mod(m, p)) == 0, det3(m, p) != 0)


if __name__ == "__main__":
    unittest.main()

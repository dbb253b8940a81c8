#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""Tests for metacommutation."""

import random
import unittest

from sympy import legendre_symbol, primerange

from fp_linear import char_poly2, det3, inv_mod, mat_mul, mat_identity
from hurwitz_core import ONE, HurwitzInt, mul, norm, parse_hurwitz, units
from metacommutation import (
    MetaReport,
    case_tag,
    charpoly_matches,
    eigen_cone_check,
    gamma_u,
    metacommute,
    observe,
    phi_matrix,
    plane_basis,
    plane_rotation,
    plane_rotation_holds,
    predict,
    reduce_coords,
    summarize,
    tau_euclid,
    tau_matrix,
    trace_variant_fixed,
    unit_relations_hold,
)
from permutation import perm_sign
from prime_classes import enumerate_classes
from so2_conic import element_order, sign_criterion

RECORD_KEYS = {
    "p", "q", "Q", "cycle_type", "observed_sign", "predicted_sign",
    "observed_fixed", "predicted_fixed", "case", "paths_agree",
}


def sweep(bound):
    for p in primerange(3, bound + 1):
        for q in primerange(2, bound + 1):
            if q != p:
                for c in enumerate_classes(q):
                    yield p, q, c.rep


class MetacommuteTest(unittest.TestCase):

    def test_example(self):
        P = parse_hurwitz("1+i+j")
        Q = parse_hurwitz("1+2i")
        Qp, Pp = metacommute(P, Q)
        self.assertEqual(mul(Qp, Pp), mul(P, Q))
        self.assertEqual(norm(Qp), 5)
        self.assertEqual(norm(Pp), 3)

    def test_random_pairs(self):
        rng = random.Random(14)
        primes = list(primerange(2, 40))
        for _ in range(100):
            p, q = rng.sample(primes, 2)
            P = mul(rng.choice(units()), rng.choice(enumerate_classes(p)).rep)
            Q = mul(rng.choice(units()), rng.choice(enumerate_classes(q)).rep)
            Qp, Pp = metacommute(P, Q)
            self.assertEqual(mul(Qp, Pp), mul(P, Q))
            self.assertEqual((norm(Qp), norm(Pp)), (q, p))

    def test_preconditions(self):
        P = parse_hurwitz("1+i+j")
        with self.assertRaises(ValueError):
            metacommute(P, parse_hurwitz("1+i-j"))
        with self.assertRaises(ValueError):
            metacommute(HurwitzInt.from_ints(2), P)
        with self.assertRaises(ValueError):
            tau_euclid(parse_hurwitz("1+2i"), 5)
        with self.assertRaises(ValueError):
            tau_euclid(P, 9)


class PermutationTest(unittest.TestCase):

    def test_paths_agree(self):
        for p, q, Q in sweep(13):
            self.assertEqual(tau_euclid(Q, p), tau_matrix(Q, p), (p, q, Q))

    def test_sign_theorem(self):
        for p, q, Q in sweep(17):
            perm = tau_euclid(Q, p)
            self.assertEqual(perm_sign(perm), legendre_symbol(q, p), (p, q, Q))

    def test_phi_is_a_rotation(self):
        for p, q, Q in sweep(11):
            phi = phi_matrix(Q, p)
            self.assertEqual(det3(phi, p), 1)
            transpose = tuple(zip(*phi))
            self.assertEqual(mat_mul(phi, transpose, p), mat_identity(3))

    def test_phi_of_i(self):
        self.assertEqual(phi_matrix(parse_hurwitz("i"), 5), ((1, 0, 0), (0, 4, 0), (0, 0, 4)))

    def test_charpoly_and_eigen_cone(self):
        for p, q, Q in sweep(13):
            self.assertTrue(charpoly_matches(Q, p), (p, q, Q))
            self.assertTrue(eigen_cone_check(Q, p), (p, q, Q))

    def test_gamma(self):
        self.assertTrue(gamma_u(ONE, 7).is_identity())
        with self.assertRaises(ValueError):
            gamma_u(parse_hurwitz("1+i"), 7)

    def test_unit_relations(self):
        rng = random.Random(15)
        for _ in range(8):
            p = rng.choice([3, 5, 7, 11])
            q = rng.choice([x for x in (2, 3, 5, 7, 13) if x != p])
            Q = mul(rng.choice(units()), rng.choice(enumerate_classes(q)).rep)
            self.assertTrue(unit_relations_hold(Q, p), (p, Q))


class PredictionTest(unittest.TestCase):

    def test_case_3_example(self):
        # Q = 1+i+j over 5: fixed-point free 6-cycle
        report = observe(parse_hurwitz("1+i+j"), 5)
        self.assertEqual(report.case_tag, "3")
        self.assertEqual(report.observed_sign, -1)
        self.assertEqual(report.predicted_sign, -1)
        self.assertEqual(report.observed_fixed, 0)
        self.assertEqual(report.cycle_type, (6,))
        self.assertTrue(report.passed)

    def test_case_1a_example(self):
        report = observe(parse_hurwitz("2+3i"), 3)
        self.assertEqual(report.case_tag, "1A")
        self.assertTrue(report.perm.is_identity())
        self.assertEqual(report.observed_fixed, 4)
        self.assertIsNone(report.trace_variant_fixed)
        self.assertTrue(report.passed)

    def test_case_1b_example(self):
        Q = parse_hurwitz("2+i+j+k")
        self.assertEqual(case_tag(Q, 3), "1B")
        report = observe(Q, 3)
        self.assertEqual(report.cycle_type, (1, 3))
        self.assertEqual(predict(Q, 3).cycle_type, (1, 3))
        self.assertTrue(report.passed)

    def test_case_2_example(self):
        Q = parse_hurwitz("i+j+k")
        self.assertEqual(case_tag(Q, 5), "2")
        report = observe(Q, 5)
        self.assertEqual(report.cycle_type, (2, 2, 2))
        self.assertTrue(report.perm.compose(report.perm).is_identity())
        self.assertEqual(report.observed_sign, -1)
        self.assertTrue(report.passed)

    def test_over_two(self):
        report = observe(parse_hurwitz("1+i+j"), 2)
        self.assertTrue(report.perm.is_identity())
        self.assertEqual(len(report.perm), 1)
        self.assertEqual(report.case_tag, "1A")
        self.assertTrue(report.passed)

    def test_sweep_passes(self):
        for p, q, Q in sweep(13):
            report = observe(Q, p)
            self.assertTrue(report.passed, report.to_record())
            self.assertEqual(report.observed_fixed, predict(Q, p).fixed)

    def test_case_2_involutions(self):
        for p, q, Q in sweep(17):
            if case_tag(Q, p) != "2":
                continue
            perm = tau_euclid(Q, p)
            self.assertTrue(perm.compose(perm).is_identity())
            transpositions = sum(1 for c in perm.cycles() if len(c) == 2)
            self.assertEqual(transpositions, (p - legendre_symbol((-q) % p, p)) // 2)

    def test_trace_variant_range(self):
        for p, q, Q in sweep(11):
            self.assertIn(trace_variant_fixed(Q, p), (0, 1, 2))


def dot(u, v, p):
    return sum(x * y for x, y in zip(u, v)) % p


class PlaneRotationTest(unittest.TestCase):

    def rotating(self, bound):
        for p, q, Q in sweep(bound):
            if case_tag(Q, p) in ("2", "3"):
                yield p, q, Q

    def test_basis_is_orthogonal_to_axis(self):
        for p, q, Q in self.rotating(13):
            a, b, c, d = reduce_coords(Q, p)
            axis = (b, c, d)
            e1, e2, t = plane_basis(Q, p)
            self.assertEqual(t, (a * a - q) % p)
            self.assertEqual((dot(e1, axis, p), dot(e2, axis, p)), (0, 0))
            self.assertEqual(dot(e1, e1, p), 1)
            self.assertEqual(dot(e2, e2, p), (-t) % p)
            self.assertEqual(dot(e1, e2, p), 0)

    def test_restriction_parameters(self):
        for p, q, Q in self.rotating(13):
            psi = plane_rotation(Q, p)
            a = reduce_coords(Q, p)[0]
            ratio = (a * a * inv_mod(q, p)) % p
            self.assertEqual(char_poly2(psi.matrix, p), (1, (2 - 4 * ratio) % p, 1), (p, Q))
            self.assertEqual(psi.t, (a * a - q) % p)
            self.assertEqual(psi.v, (4 * ratio) % p)

    def test_sign_matches_tau(self):
        for p, q, Q in self.rotating(13):
            perm = tau_euclid(Q, p)
            if case_tag(Q, p) == "3":
                self.assertEqual(sign_criterion(plane_rotation(Q, p)).observed, perm_sign(perm), (p, Q))
            self.assertTrue(plane_rotation_holds(Q, p, perm_sign(perm)), (p, Q))

    def test_example(self):
        # Q = 1+i+j over 5: t = v = 3, psi has order 6 like the 6-cycle tau_Q
        Q = parse_hurwitz("1+i+j")
        psi = plane_rotation(Q, 5)
        self.assertEqual((psi.alpha, psi.t, psi.v), (3, 3, 3))
        self.assertEqual(element_order(psi), 6)
        self.assertFalse(plane_rotation_holds(Q, 5, 1))
        self.assertTrue(observe(Q, 5).plane_ok)

    def test_case_2_is_half_turn(self):
        psi = plane_rotation(parse_hurwitz("i+j+k"), 5)
        self.assertEqual((psi.alpha, psi.beta), (4, 0))

    def test_isotropic_axis(self):
        with self.assertRaises(ValueError):
            plane_basis(parse_hurwitz("2+3i"), 3)
        with self.assertRaises(ValueError):
            plane_basis(parse_hurwitz("2+i+j+k"), 3)


class ReportTest(unittest.TestCase):

    def test_records_class_of_q(self):
        for c in enumerate_classes(3):
            for u in units():
                report = observe(mul(u, c.rep), 5)
                self.assertEqual(report.q_index, c.index)
                self.assertEqual(report.Q_class, c.rep)
                self.assertTrue(report.passed)

    def test_record_keys(self):
        record = observe(parse_hurwitz("1+i+j"), 5).to_record()
        self.assertEqual(set(record), RECORD_KEYS)
        self.assertEqual(record["Q"], "1+i+j")
        self.assertEqual(record["cycle_type"], [6])
        self.assertEqual(record["case"], "3")

    def test_failed_report(self):
        good = observe(parse_hurwitz("1+i+j"), 5)
        bad = MetaReport(**{**good.__dict__, "predicted_fixed": 3})
        self.assertFalse(bad.passed)

    def test_summarize(self):
        reports = [observe(c.rep, 5) for c in enumerate_classes(3)]
        reports.append(observe(parse_hurwitz("2+3i"), 3))
        s = summarize(reports)
        self.assertEqual(s["records"], 5)
        self.assertEqual(s["passed"], 5)
        self.assertEqual(s["failed"], 0)
        self.assertEqual(sum(s["cases"].values()), 5)
        self.assertEqual(s["trace_variant_checked"], sum(1 for r in reports if r.case_tag != "1A"))
        self.assertGreaterEqual(s["trace_variant_disagreement_rate"], 0.0)
        self.assertLessEqual(s["trace_variant_disagreement_rate"], 1.0)


if __name__ == "__main__":
    unittest.main()

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Metacommutation Demo
Walks through one metacommutation step by step: the classes over p, the
rewriting PQ = Q'P', and the permutation tau_Q with its predictions
"""

from tabulate import tabulate

from fp_linear import char_poly3, legendre
from hurwitz_core import format_hurwitz, mul, norm, parse_hurwitz
from metacommutation import metacommute, observe, phi_matrix, reduce_coords
from prime_classes import enumerate_classes


def show_classes(p):
    print(f"\nPrime classes over {p} ({p + 1 if p > 2 else 1} expected):")
    rows = [
        [c.index, format_hurwitz(c.rep), norm(c.rep), str(c.label) if c.label else "-"]
        for c in enumerate_classes(p)
    ]
    print(tabulate(rows, headers=["index", "canonical rep", "norm", "conic label"]))


def main():
    """Demonstrates one metacommutation and the permutation it induces"""
    print("=" * 60)
    print("Metacommutation Demo")
    print("=" * 60)

    show_classes(3)
    show_classes(5)

    P = parse_hurwitz("1+i+j")
    Q = parse_hurwitz("1+2i")
    p, q = norm(P), norm(Q)

    print("\n" + "=" * 60)
    print(f"Step 1: rewrite PQ as Q'P'  (N(P) = {p}, N(Q) = {q})")
    print("=" * 60)
    Qp, Pp = metacommute(P, Q)
    print(tabulate([
        ["P", format_hurwitz(P)],
        ["Q", format_hurwitz(Q)],
        ["PQ", format_hurwitz(mul(P, Q))],
        ["P' = gcrd(p, PQ)", format_hurwitz(Pp)],
        ["Q' = PQ P'^-1", format_hurwitz(Qp)],
    ]))
    print("✓ Q'P' = PQ" if mul(Qp, Pp) == mul(P, Q) else "❌ Q'P' != PQ")

    print("\n" + "=" * 60)
    print(f"Step 2: tau_Q on the {p + 1} classes over {p}")
    print("=" * 60)
    report = observe(Q, p)
    a, b, c, d = reduce_coords(Q, p)
    print(f"Q mod {p} = ({a}, {b}, {c}, {d}), case {report.case_tag}")
    print(f"tau_Q = {report.perm}")

    phi = phi_matrix(Q, p)
    print("\nphi_Q (conjugation on imaginary quaternions mod p):")
    print(tabulate(phi, tablefmt="plain"))
    print(f"characteristic polynomial coefficients: {char_poly3(phi, p)}")

    print("\n" + "=" * 40)
    print("Predictions")
    print("=" * 40)
    print(tabulate([
        ["sign", report.observed_sign, report.predicted_sign, f"({q}/{p}) = {legendre(q, p)}"],
        ["fixed points", report.observed_fixed, report.predicted_fixed, ""],
        ["cycle type", report.cycle_type, report.predicted_cycle_type, ""],
        ["paths agree", report.paths_agree, True, "Euclid vs. phi_Q"],
    ], headers=["", "observed", "predicted", "note"]))

    print("\n" + ("✓ all predictions hold" if report.passed else "❌ prediction mismatch"))
    return report.passed


if __name__ == "__main__":
    main()

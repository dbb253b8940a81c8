#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Acceptance checks for the metacommutation toolkit
Runs every end-to-end property once; --full uses the full-size bounds
"""

import sys
import time
import random
import argparse

from sympy import legendre_symbol, primerange

from hurwitz_core import factor_modeled, mul, norm, units
from metacommutation import observe, summarize, unit_relations_hold
from permutation import perm_fixed
from prime_classes import enumerate_classes
from so2_conic import run_suite

QUICK = {"class_p": 47, "sweep": 13, "so2": 13, "unit_triples": 10, "factor_pairs": 30}
FULL = {"class_p": 97, "sweep": 47, "so2": 31, "unit_triples": 50, "factor_pairs": 100}


def _section(title):
    print("\n" + "=" * 60)
    print(title)
    print("=" * 60)


def test_class_counts(bound):
    """p + 1 classes over every odd prime, one over 2"""
    _section(f"Class counts, p <= {bound}")
    start = time.time()
    if len(enumerate_classes(2)) != 1:
        print("❌ expected a single class over 2")
        return False
    for p in primerange(3, bound + 1):
        n = len(enumerate_classes(p))
        if n != p + 1:
            print(f"❌ p = {p}: {n} classes")
            return False
    print(f"✓ all class counts correct ({time.time() - start:.2f}s)")
    return True


def test_sweep(bound):
    """Sign, fixed points, path agreement, charpoly, cycle types and psi_Q over a full sweep"""
    _section(f"Sweep p, q <= {bound}")
    start = time.time()
    reports = []
    for p in primerange(3, bound + 1):
        for q in primerange(2, bound + 1):
            if q == p:
                continue
            reports.extend(observe(c.rep, p) for c in enumerate_classes(q))

    ok = True
    checks = [
        ("sign = (q/p)", lambda r: r.observed_sign == r.predicted_sign == legendre_symbol(r.q, r.p)),
        ("fixed points", lambda r: r.observed_fixed == r.predicted_fixed),
        ("tau_euclid = tau_matrix", lambda r: r.paths_agree),
        ("characteristic polynomial", lambda r: r.charpoly_ok),
        ("cycle type", lambda r: r.cycle_type == r.predicted_cycle_type),
        ("rotation plane psi_Q", lambda r: r.plane_ok),
    ]
    for name, check in checks:
        bad = [r for r in reports if not check(r)]
        if bad:
            r = bad[0]
            print(f"❌ {name}: {len(bad)} failures, first at p={r.p} q={r.q} Q={r.Q}")
            ok = False
        else:
            print(f"✓ {name} ({len(reports)} records)")

    for r in reports:
        if r.case_tag == "1B" and r.cycle_type != (1, r.p):
            print(f"❌ case 1B without a p-cycle at p={r.p} Q={r.Q}")
            ok = False
            break
        if r.case_tag == "2":
            transpositions = sum(1 for c in r.perm.cycles() if len(c) == 2)
            if not r.perm.compose(r.perm).is_identity() or \
                    transpositions != (r.p - legendre_symbol((-r.q) % r.p, r.p)) // 2:
                print(f"❌ case 2 is not an involution of the expected shape at p={r.p} Q={r.Q}")
                ok = False
                break
    else:
        print("✓ case 1B p-cycles and case 2 involutions")

    summary = summarize(reports)
    print(f"  cases: {summary['cases']}")
    print(f"  trace-form variant disagrees on {summary['trace_variant_disagreements']}"
          f"/{summary['trace_variant_checked']} records "
          f"({summary['trace_variant_disagreement_rate']:.1%})")
    print(f"  elapsed {time.time() - start:.2f}s")
    return ok


def test_unit_relations(count, seed=7):
    """tau_{Qu} = gamma_u tau_Q and tau_{uQ} = tau_Q gamma_u on random triples"""
    _section(f"Unit relations, {count} random triples")
    rng = random.Random(seed)
    primes = list(primerange(2, 24))
    for _ in range(count):
        p = rng.choice(primes[1:])
        q = rng.choice([x for x in primes if x != p])
        Q = mul(rng.choice(units()), rng.choice(enumerate_classes(q)).rep)
        if not unit_relations_hold(Q, p):
            print(f"❌ unit relations fail for p={p} Q={Q}")
            return False
    print("✓ unit relations hold")
    return True


def test_so2_suite(bound):
    _section(f"SO(g_t) suite, p <= {bound}")
    start = time.time()
    rows = run_suite(bound)
    bad = [row["p"] for row in rows if not row["passed"]]
    if bad:
        print(f"❌ failures at p = {bad}")
        return False
    print(f"✓ order, cyclicity, transitivity and sign criterion ({time.time() - start:.2f}s)")
    return True


def test_factorization(count, seed=11):
    """factor_modeled on random products P1*P2, both model orders"""
    _section(f"Modeled factorization, {count} random products")
    rng = random.Random(seed)
    primes = list(primerange(2, 32))
    for _ in range(count):
        p1, p2 = rng.sample(primes, 2)
        P1 = mul(rng.choice(units()), rng.choice(enumerate_classes(p1)).rep)
        P2 = mul(rng.choice(units()), rng.choice(enumerate_classes(p2)).rep)
        x = mul(P1, P2)
        for model in ((p1, p2), (p2, p1)):
            f = factor_modeled(x, model)
            if f.product() != x or tuple(norm(g) for g in f.factors) != model:
                print(f"❌ factor_modeled({x}, {model}) gave {f.factors}")
                return False
    print("✓ all products reproduced with the modeled norms")
    return True


def test_identity_over_two():
    """Over p = 2 there is one class, fixed by every Q"""
    for q in (3, 5, 7):
        for c in enumerate_classes(q):
            r = observe(c.rep, 2)
            if perm_fixed(r.perm) != 1 or not r.passed:
                print(f"❌ p = 2 not the identity for Q = {c.rep}")
                return False
    print("✓ p = 2 is always the identity")
    return True


def main():
    parser = argparse.ArgumentParser(description="Metacommutation acceptance checks")
    parser.add_argument("--full", action="store_true", help="Use the full-size bounds")
    args = parser.parse_args()
    bounds = FULL if args.full else QUICK

    print("Metacommutation acceptance checks" + (" (full)" if args.full else " (quick)"))

    results = {
        "Class counts": test_class_counts(bounds["class_p"]),
        "Sweep": test_sweep(bounds["sweep"]),
        "p = 2": test_identity_over_two(),
        "Unit relations": test_unit_relations(bounds["unit_triples"]),
        "SO(g_t) suite": test_so2_suite(bounds["so2"]),
        "Factorization": test_factorization(bounds["factor_pairs"]),
    }

    print("\n" + "=" * 60)
    print("Test Summary")
    print("=" * 60)
    for name, passed in results.items():
        print(f"{'✓' if passed else '❌'} {name}")

    success = all(results.values())
    if success:
        print("\n🎉 All checks passed!")
    else:
        print("\n⚠️  Some checks failed")
    return success


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)

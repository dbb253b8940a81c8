#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Hurwitz prime classes over p and their conic labels

A prime P of odd norm p generates a left ideal whose reduction mod p is a
2-dimensional left ideal of H/pH. That ideal contains exactly one trace-zero
line xi + yj + zk, and (x:y:z) is a point of the conic x^2 + y^2 + z^2 = 0.
The map is a bijection between left-associate classes and the p + 1 points.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Optional, Tuple

from sympy import isprime

from fp_linear import ConicPoint, check_odd_prime, conic_points, inv_mod, normalize_point
from hurwitz_core import HurwitzInt, I, J, K, canonicalize, gcrd, mul, norm


@dataclass(frozen=True)
class PrimeClass:
    """A prime of norm p up to left unit multiplication."""

    rep: HurwitzInt
    p: int
    label: Optional[ConicPoint]
    index: int


def _reduce(x: HurwitzInt, p: int, inv2: int) -> Tuple[int, int, int, int]:
    return tuple((d * inv2) % p for d in x.coords)


def _proportional(u, v, p: int) -> bool:
    return all((u[a] * v[b] - u[b] * v[a]) % p == 0 for a in range(4) for b in range(a + 1, 4))


def trace_zero_direction(P: HurwitzInt, p: int) -> ConicPoint:
    """Conic point of the trace-zero line in the reduction of H*P mod p."""
    check_odd_prime(p)
    if norm(P) != p:
        raise ValueError(f"norm({P}) = {norm(P)} is not {p}")

    inv2 = inv_mod(2, p)
    # H/pH is spanned by 1, i, j, k, so these left multiples span the ideal
    r1 = _reduce(P, p, inv2)
    r2 = None
    for e in (I, J, K):
        row = _reduce(mul(e, P), p, inv2)
        if not _proportional(r1, row, p):
            r2 = row
            break
    if r2 is None:
        raise ArithmeticError(f"reduction of H*{P} is not 2-dimensional")

    # r1[0]*r2 - r2[0]*r1 has zero real part and is nonzero
    t = tuple((r1[0] * y - r2[0] * x) % p for x, y in zip(r1, r2))
    x, y, z = normalize_point(t[1:], p)
    return ConicPoint(x, y, z, p)


@lru_cache(maxsize=None)
def conic_index(p: int) -> Dict[ConicPoint, int]:
    return {c: i for i, c in enumerate(conic_points(p))}


def class_from_conic(c: ConicPoint, p: int) -> PrimeClass:
    """The class whose trace-zero line is c, represented by gcrd(p, xi + yj + zk)."""
    check_odd_prime(p)
    if c.p != p:
        raise ValueError(f"{c} is not a point over {p}")
    rep = gcrd(p, HurwitzInt.from_ints(0, c.x, c.y, c.z))
    assert norm(rep) == p, f"lift of {c} produced norm {norm(rep)}"
    return PrimeClass(rep=rep, p=p, label=c, index=conic_index(p)[c])


@lru_cache(maxsize=None)
def enumerate_classes(p: int) -> Tuple[PrimeClass, ...]:
    """The p + 1 classes over odd p in conic order; the single class 1+i over 2."""
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"{p!r} is not prime")
    if p == 2:
        return (PrimeClass(rep=canonicalize(HurwitzInt.from_ints(1, 1)), p=2, label=None, index=0),)
    return tuple(class_from_conic(c, p) for c in conic_points(p))


def class_index_of(P: HurwitzInt, p: int) -> int:
    """Index in enumerate_classes(p) of the class containing P."""
    if p == 2:
        if norm(P) != 2:
            raise ValueError(f"norm({P}) = {norm(P)} is not 2")
        return 0
    return conic_index(p)[trace_zero_direction(P, p)]

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Finite field helpers over F_p

Scalars are plain ints kept in [0, p); the modulus always travels alongside.
Matrices are tuples of row tuples. Covers the Legendre symbol, modular square
roots, the projective conic x^2 + y^2 + z^2 = 0 and small matrix algebra.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from sympy import isprime

Vec = Tuple[int, ...]
Mat = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def check_odd_prime(p: int) -> int:
    """Return p if it is an odd prime, else raise ValueError."""
    if not isinstance(p, int) or p < 3 or not isprime(p):
        raise ValueError(f"modulus must be an odd prime, got {p!r}")
    return p


def legendre(n: int, p: int) -> int:
    """Quadratic character of n modulo the odd prime p (Euler's criterion)."""
    check_odd_prime(p)
    n %= p
    if n == 0:
        return 0
    return 1 if pow(n, (p - 1) // 2, p) == 1 else -1


def inv_mod(n: int, p: int) -> int:
    n %= p
    if n == 0:
        raise ZeroDivisionError(f"0 has no inverse modulo {p}")
    return pow(n, p - 2, p)


def sqrt_mod(n: int, p: int) -> Optional[int]:
    """Square root of n modulo p, or None for a nonresidue.

    Tonelli-Shanks with the p = 3 (mod 4) shortcut. The smaller of the two
    roots (the one <= (p - 1) / 2) is returned.
    """
    check_odd_prime(p)
    n %= p
    if n == 0:
        return 0
    if pow(n, (p - 1) // 2, p) != 1:
        return None

    if p % 4 == 3:
        r = pow(n, (p + 1) // 4, p)
        return min(r, p - r)

    q = p - 1
    s = 0
    while q % 2 == 0:
        s += 1
        q //= 2

    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m = s
    c = pow(z, q, p)
    t = pow(n, q, p)
    r = pow(n, (q + 1) // 2, p)
    while t != 1:
        i = 1
        t2i = (t * t) % p
        while i < m and t2i != 1:
            t2i = (t2i * t2i) % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        r = (r * b) % p
        c = (b * b) % p
        t = (t * c) % p
        m = i

    return min(r, p - r)


def solve_unit_form(alpha: int, beta: int, p: int) -> Tuple[int, int]:
    """First (x, y) in scan order with alpha*x^2 + beta*y^2 = 1 over F_p.

    x runs over [0, p) and the smallest admissible y is taken for it.
    """
    check_odd_prime(p)
    alpha %= p
    beta %= p
    if alpha == 0 or beta == 0:
        raise ValueError("alpha and beta must be nonzero modulo p")
    inv_beta = inv_mod(beta, p)
    for x in range(p):
        rhs = ((1 - alpha * x * x) * inv_beta) % p
        r = sqrt_mod(rhs, p)
        if r is not None:
            return x, r
    # pigeonhole guarantees a solution
    raise ArithmeticError(f"no solution of {alpha}x^2 + {beta}y^2 = 1 mod {p}")


@dataclass(frozen=True, order=True)
class ConicPoint:
    """Normalized projective point on x^2 + y^2 + z^2 = 0 over F_p."""

    x: int
    y: int
    z: int
    p: int

    def __post_init__(self):
        p = self.p
        if (self.x * self.x + self.y * self.y + self.z * self.z) % p != 0:
            raise ValueError(f"({self.x}:{self.y}:{self.z}) is not on the conic mod {p}")
        if normalize_point((self.x, self.y, self.z), p) != (self.x, self.y, self.z):
            raise ValueError(f"({self.x}:{self.y}:{self.z}) is not normalized mod {p}")

    @property
    def coords(self) -> Vec:
        return (self.x, self.y, self.z)

    def __str__(self) -> str:
        return format_conic_point(self)


def format_conic_point(c: ConicPoint) -> str:
    return f"({c.x}:{c.y}:{c.z}) mod {c.p}"


def normalize_point(v: Sequence[int], p: int) -> Vec:
    """Scale v so that its first nonzero coordinate is 1."""
    v = tuple(x % p for x in v)
    for x in v:
        if x:
            s = inv_mod(x, p)
            return tuple((y * s) % p for y in v)
    raise ValueError("the zero vector has no projective point")


@lru_cache(maxsize=None)
def conic_points(p: int) -> Tuple[ConicPoint, ...]:
    """All p + 1 points of x^2 + y^2 + z^2 = 0 in P^2(F_p), sorted."""
    check_odd_prime(p)
    points: List[ConicPoint] = []

    # x = 0, y = 1: z^2 = -1
    r = sqrt_mod(-1, p)
    if r is not None:
        for z in sorted({r, (-r) % p}):
            points.append(ConicPoint(0, 1, z, p))

    # x = 1: z^2 = -(1 + y^2); z = 0 and y = 0 both fail together
    for y in range(p):
        r = sqrt_mod(-(1 + y * y), p)
        if r is None:
            continue
        for z in sorted({r, (-r) % p}):
            points.append(ConicPoint(1, y, z, p))

    points.sort()
    if len(points) != p + 1:
        raise ArithmeticError(f"conic mod {p} has {len(points)} points, expected {p + 1}")
    return tuple(points)


# ---------------------------------------------------------------------------
# matrices

def mat_identity(n: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Mat, b: Mat, p: int) -> Mat:
    cols = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) % p for col in cols)
        for row in a
    )


def mat_vec(a: Mat, v: Sequence[int], p: int) -> Vec:
    return tuple(sum(x * y for x, y in zip(row, v)) % p for row in a)


def mat_pow(a: Mat, e: int, p: int) -> Mat:
    result = mat_identity(len(a))
    base = a
    while e:
        if e & 1:
            result = mat_mul(result, base, p)
        e >>= 1
        if e:
            base = mat_mul(base, base, p)
    return result


def mat_order(a: Mat, p: int, limit: Optional[int] = None) -> int:
    """Multiplicative order of an invertible matrix, by repeated multiplication."""
    ident = mat_identity(len(a))
    limit = limit if limit is not None else p * p * p
    cur = tuple(tuple(x % p for x in row) for row in a)
    k = 1
    while cur != ident:
        k += 1
        if k > limit:
            raise ArithmeticError("matrix order exceeds search limit")
        cur = mat_mul(cur, a, p)
    return k


def det3(m: Mat, p: int) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m
    return (a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)) % p


def char_poly2(m: Mat, p: int) -> Vec:
    """Coefficients (1, c1, c0) of det(xI - M) for a 2x2 matrix."""
    (a, b), (c, d) = m
    return (1, (-(a + d)) % p, (a * d - b * c) % p)


def char_poly3(m: Mat, p: int) -> Vec:
    """Coefficients (1, c2, c1, c0) of the monic cubic det(xI - M)."""
    (a, b, c), (d, e, f), (g, h, i) = m
    trace = a + e + i
    minors = (a * e - b * d) + (a * i - c * g) + (e * i - f * h)
    return (1, (-trace) % p, minors % p, (-det3(m, p)) % p)


def poly_mul(f: Sequence[int], g: Sequence[int], p: int) -> Vec:
    """Product of coefficient lists, highest degree first."""
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        for j, y in enumerate(g):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def kernel_mod(m: Sequence[Sequence[int]], p: int) -> List[Vec]:
    """Basis of the right null space {v : M v = 0} by Gaussian elimination."""
    rows = [[x % p for x in row] for row in m]
    ncols = len(rows[0]) if rows else 0
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        s = inv_mod(rows[r][col], p)
        rows[r] = [(x * s) % p for x in rows[r]]
        for k in range(len(rows)):
            if k != r and rows[k][col]:
                f = rows[k][col]
                rows[k] = [(x - f * y) % p for x, y in zip(rows[k], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break

    basis: List[Vec] = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [0] * ncols
        v[free] = 1
        for k, col in enumerate(pivots):
            v[col] = (-rows[k][free]) % p
        basis.append(tuple(v))
    return basis

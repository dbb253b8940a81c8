#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Exact arithmetic in the Hurwitz order

An element is stored in doubled coordinates (d0, d1, d2, d3), i.e.
x = (d0 + d1*i + d2*j + d3*k) / 2 with all d's of the same parity.
Everything is exact; leaving the signed 64-bit range raises OverflowError.
"""

import re
from dataclasses import dataclass
from functools import lru_cache
from math import prod
from typing import List, Sequence, Tuple

from sympy import isprime

from fp_linear import sqrt_mod

INT64_LIMIT = 2 ** 63


def _check_int64(value: int, what: str) -> int:
    if -INT64_LIMIT <= value < INT64_LIMIT:
        return value
    raise OverflowError(f"{what} {value} leaves the 64-bit range")


@dataclass(frozen=True, order=True)
class HurwitzInt:
    """Hurwitz quaternion (d0 + d1 i + d2 j + d3 k) / 2; ordered by (d0, d1, d2, d3)."""

    d0: int
    d1: int
    d2: int
    d3: int

    def __post_init__(self):
        for d in (self.d0, self.d1, self.d2, self.d3):
            _check_int64(d, "coordinate")
        parity = self.d0 & 1
        if (self.d1 & 1) != parity or (self.d2 & 1) != parity or (self.d3 & 1) != parity:
            raise ValueError(f"mixed parity doubled coordinates {self.coords}")

    @classmethod
    def from_ints(cls, a: int, b: int = 0, c: int = 0, d: int = 0) -> "HurwitzInt":
        """Lipschitz element a + bi + cj + dk."""
        return cls(2 * a, 2 * b, 2 * c, 2 * d)

    @property
    def coords(self) -> Tuple[int, int, int, int]:
        return (self.d0, self.d1, self.d2, self.d3)

    def __bool__(self) -> bool:
        return any(self.coords)

    def __add__(self, other: "HurwitzInt") -> "HurwitzInt":
        return HurwitzInt(*(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other: "HurwitzInt") -> "HurwitzInt":
        return HurwitzInt(*(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> "HurwitzInt":
        return HurwitzInt(-self.d0, -self.d1, -self.d2, -self.d3)

    def __mul__(self, other: "HurwitzInt") -> "HurwitzInt":
        if isinstance(other, int):
            other = HurwitzInt.from_ints(other)
        if not isinstance(other, HurwitzInt):
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other: int) -> "HurwitzInt":
        if isinstance(other, int):
            return mul(HurwitzInt.from_ints(other), self)
        return NotImplemented

    def __str__(self) -> str:
        return format_hurwitz(self)


ZERO = HurwitzInt(0, 0, 0, 0)
ONE = HurwitzInt(2, 0, 0, 0)
I = HurwitzInt(0, 2, 0, 0)
J = HurwitzInt(0, 0, 2, 0)
K = HurwitzInt(0, 0, 0, 2)


def mul(x: HurwitzInt, y: HurwitzInt) -> HurwitzInt:
    """Quaternion product; the numerator products are always even."""
    a, b, c, d = x.coords
    e, f, g, h = y.coords
    r0 = a * e - b * f - c * g - d * h
    r1 = a * f + b * e + c * h - d * g
    r2 = a * g - b * h + c * e + d * f
    r3 = a * h + b * g - c * f + d * e
    if (r0 | r1 | r2 | r3) & 1:
        raise ArithmeticError("non-integral product; parity constraint violated")
    return HurwitzInt(r0 // 2, r1 // 2, r2 // 2, r3 // 2)


def conjugate(x: HurwitzInt) -> HurwitzInt:
    return HurwitzInt(x.d0, -x.d1, -x.d2, -x.d3)


def norm(x: HurwitzInt) -> int:
    return _check_int64(sum(d * d for d in x.coords) // 4, "norm")


def trace(x: HurwitzInt) -> int:
    return x.d0


@lru_cache(maxsize=None)
def units() -> Tuple[HurwitzInt, ...]:
    """The 24 units: +-1, +-i, +-j, +-k and (+-1 +-i +-j +-k)/2, sorted."""
    out: List[HurwitzInt] = []
    for pos in range(4):
        for s in (-2, 2):
            coords = [0, 0, 0, 0]
            coords[pos] = s
            out.append(HurwitzInt(*coords))
    for a in (-1, 1):
        for b in (-1, 1):
            for c in (-1, 1):
                for d in (-1, 1):
                    out.append(HurwitzInt(a, b, c, d))
    out.sort()
    return tuple(out)


def is_unit(x: HurwitzInt) -> bool:
    return norm(x) == 1


# ---------------------------------------------------------------------------
# text form

_TERM = re.compile(r"([+-]?)(?:(\d+)(/2)?)?([ijk]?)")
_BASIS = {"": 0, "i": 1, "j": 2, "k": 3}


def parse_hurwitz(text: str) -> HurwitzInt:
    """Parse "a+bi+cj+dk" with integer or "n/2" coefficients, or "(A+Bi+Cj+Dk)/2"."""
    if re.search(r"[\w/]\s+[\w/]", text or ""):
        raise ValueError(f"malformed quaternion text {text!r}")
    s = re.sub(r"\s+", "", text or "")
    if not s:
        raise ValueError("empty quaternion text")

    halved = False
    if s.startswith("(") and s.endswith(")/2"):
        s = s[1:-3]
        halved = True
        if not s:
            raise ValueError(f"malformed quaternion text {text!r}")

    doubled = [0, 0, 0, 0]
    seen = set()
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, digits, half, basis = m.groups()
        if m.end() == pos or (digits is None and not basis):
            raise ValueError(f"malformed quaternion text {text!r}")
        if pos > 0 and not sign:
            raise ValueError(f"malformed quaternion text {text!r}")
        if half and halved:
            raise ValueError(f"malformed quaternion text {text!r}")
        if basis in seen:
            raise ValueError(f"repeated {basis or 'real'} term in {text!r}")
        seen.add(basis)

        value = int(digits) if digits is not None else 1
        if not (half or halved):
            value *= 2
        doubled[_BASIS[basis]] = -value if sign == "-" else value
        pos = m.end()

    return HurwitzInt(*doubled)


def _format_coeff(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f"{d}/2"


def format_hurwitz(x: HurwitzInt) -> str:
    parts: List[str] = []
    if x.d0:
        parts.append(_format_coeff(x.d0))
    for d, sym in ((x.d1, "i"), (x.d2, "j"), (x.d3, "k")):
        if not d:
            continue
        mag = _format_coeff(abs(d))
        term = sym if mag == "1" else f"{mag}{sym}"
        if d < 0:
            parts.append(f"-{term}")
        else:
            parts.append(f"+{term}" if parts else term)
    return "".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# division and gcd

def left_divmod(a: HurwitzInt, b: HurwitzInt) -> Tuple[HurwitzInt, HurwitzInt]:
    """Return (q, r) with a = q*b + r and norm(r) < norm(b).

    The exact quotient a * conj(b) / N(b) is rounded two ways: every
    coordinate to the nearest integer, and every coordinate to the nearest
    odd multiple of 1/2. The candidate with the smaller remainder norm wins;
    ties go to the lexicographically smaller quotient.
    """
    n = norm(b)
    if n == 0:
        raise ZeroDivisionError("division by the zero quaternion")

    # doubled coordinates of the exact quotient are u / n
    u = mul(a, conjugate(b)).coords
    whole = tuple(2 * ((x + n) // (2 * n)) for x in u)
    half = tuple(2 * (x // (2 * n)) + 1 for x in u)

    best = None
    for cand in (whole, half):
        q = HurwitzInt(*cand)
        r = a - mul(q, b)
        key = (norm(r), q.coords)
        if best is None or key < best[0]:
            best = (key, q, r)

    _, q, r = best
    if norm(r) >= n:
        raise ArithmeticError("Euclidean step failed to reduce the norm")
    return q, r


def canonicalize(x: HurwitzInt) -> HurwitzInt:
    """Lexicographically smallest left associate u*x."""
    if not x:
        return x
    return min(mul(u, x) for u in units())


def canonical_unit(x: HurwitzInt) -> HurwitzInt:
    """The unit u with u*x == canonicalize(x)."""
    return min(units(), key=lambda u: mul(u, x))


def _as_hurwitz(v) -> HurwitzInt:
    return HurwitzInt.from_ints(v) if isinstance(v, int) else v


def gcrd(a, b, canonical: bool = True) -> HurwitzInt:
    """Generator g of the left ideal Ha + Hb (a greatest common right divisor)."""
    a = _as_hurwitz(a)
    b = _as_hurwitz(b)
    if not a and not b:
        raise ValueError("gcrd(0, 0) is undefined")
    while b:
        _, r = left_divmod(a, b)
        a, b = b, r
    return canonicalize(a) if canonical else a


def gcrd_extended(a, b) -> Tuple[HurwitzInt, HurwitzInt, HurwitzInt]:
    """Return (g, s, t) with g = s*a + t*b and g = gcrd(a, b)."""
    a = _as_hurwitz(a)
    b = _as_hurwitz(b)
    if not a and not b:
        raise ValueError("gcrd(0, 0) is undefined")
    r0, s0, t0 = a, ONE, ZERO
    r1, s1, t1 = b, ZERO, ONE
    while r1:
        q, r = left_divmod(r0, r1)
        r0, s0, t0, r1, s1, t1 = r1, s1, t1, r, s0 - mul(q, s1), t0 - mul(q, t1)
    u = canonical_unit(r0)
    return mul(u, r0), mul(u, s0), mul(u, t0)


def _exact_quotient(num, n: int):
    if any(c % n for c in num):
        return None
    q = [c // n for c in num]
    if len({c & 1 for c in q}) != 1:
        return None
    return HurwitzInt(*q)


def div_exact_right(x: HurwitzInt, d: HurwitzInt) -> HurwitzInt:
    """y with y*d == x."""
    n = norm(d)
    if n == 0:
        raise ZeroDivisionError("division by the zero quaternion")
    y = _exact_quotient(mul(x, conjugate(d)).coords, n)
    if y is None:
        raise ArithmeticError(f"{d} does not right-divide {x}")
    return y


def div_exact_left(d: HurwitzInt, x: HurwitzInt) -> HurwitzInt:
    """y with d*y == x."""
    n = norm(d)
    if n == 0:
        raise ZeroDivisionError("division by the zero quaternion")
    y = _exact_quotient(mul(conjugate(d), x).coords, n)
    if y is None:
        raise ArithmeticError(f"{d} does not left-divide {x}")
    return y


def is_left_associate(x: HurwitzInt, y: HurwitzInt) -> bool:
    return any(mul(u, y) == x for u in units())


# ---------------------------------------------------------------------------
# factorization

@lru_cache(maxsize=None)
def prime_over(p: int) -> HurwitzInt:
    """A canonical Hurwitz prime of norm p, from gcrd(p, 1 + ui + vj)."""
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return canonicalize(HurwitzInt.from_ints(1, 1))
    for u in range(p):
        v = sqrt_mod(-1 - u * u, p)
        if v is not None:
            g = gcrd(p, HurwitzInt.from_ints(1, u, v))
            if norm(g) != p:
                raise ArithmeticError(f"prime construction over {p} gave norm {norm(g)}")
            return g
    raise ArithmeticError(f"no solution of 1 + u^2 + v^2 = 0 mod {p}")


@dataclass(frozen=True)
class ModeledFactorization:
    """x = factors[0] * factors[1] * ... with norm(factors[i]) == model[i]."""

    factors: Tuple[HurwitzInt, ...]
    model: Tuple[int, ...]

    def product(self) -> HurwitzInt:
        out = ONE
        for f in self.factors:
            out = mul(out, f)
        return out


def factor_modeled(x: HurwitzInt, model: Sequence[int]) -> ModeledFactorization:
    """Factor x as P1 P2 ... Pn with norm(Pi) = model[i].

    Factors are peeled off the right with gcrd(p, rest). If p divides the
    rest outright, p = conj(P) * P supplies a right factor P of norm p. The
    final unit cofactor is absorbed into the first factor.
    """
    model = tuple(int(p) for p in model)
    for p in model:
        if not isprime(p):
            raise ValueError(f"model entry {p} is not prime")
    if prod(model) != norm(x):
        raise ValueError(f"model product {prod(model)} does not match norm {norm(x)}")
    if not model:
        # norm(x) == 1 here
        return ModeledFactorization(factors=(), model=())

    rest = x
    factors: List[HurwitzInt] = []
    for p in reversed(model):
        g = gcrd(p, rest)
        if norm(g) == p * p:
            g = prime_over(p)
        elif norm(g) != p:
            raise ArithmeticError(f"gcrd({p}, {rest}) has norm {norm(g)}")
        rest = div_exact_right(rest, g)
        factors.append(g)
    factors.reverse()

    if norm(rest) != 1:
        raise ArithmeticError("cofactor after peeling all primes is not a unit")
    factors[0] = mul(rest, factors[0])
    return ModeledFactorization(factors=tuple(factors), model=model)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Metacommutation of Hurwitz primes

For primes P, Q of distinct prime norms p, q, PQ = Q'P' with P' the
generator of Hp + HPQ. Metacommutation by Q permutes the p + 1 classes over
p. The permutation is computed twice: through the Euclidean algorithm on
every class, and through the rotation phi_Q acting on conic labels. Both are
then compared against the predicted sign, fixed points and cycle type. In
cases 2 and 3, phi_Q restricted to the plane orthogonal to its axis is an
element psi_Q of SO(X^2 - t*Y^2), whose sign criterion reproduces the sign
of tau_Q.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from sympy import isprime

from fp_linear import (
    ConicPoint,
    Mat,
    Vec,
    char_poly2,
    char_poly3,
    check_odd_prime,
    inv_mod,
    kernel_mod,
    legendre,
    mat_order,
    mat_vec,
    normalize_point,
    poly_mul,
)
from hurwitz_core import (
    HurwitzInt,
    div_exact_right,
    format_hurwitz,
    gcrd,
    is_unit,
    mul,
    norm,
    trace,
    units,
)
from permutation import Perm, cycle_type, perm_fixed, perm_sign
from prime_classes import class_index_of, conic_index, enumerate_classes
from so2_conic import So2Element, normalize_binary_form, sign_criterion

CASES = ("1A", "1B", "2", "3")


# ---------------------------------------------------------------------------
# Euclidean path

def _checked_prime_norm(x: HurwitzInt, what: str) -> int:
    n = norm(x)
    if not isprime(n):
        raise ValueError(f"{what} = {format_hurwitz(x)} has non-prime norm {n}")
    return n


def metacommute(P: HurwitzInt, Q: HurwitzInt) -> Tuple[HurwitzInt, HurwitzInt]:
    """Return (Q', P') with P*Q == Q'*P', norm(Q') = norm(Q), norm(P') = norm(P)."""
    p = _checked_prime_norm(P, "P")
    q = _checked_prime_norm(Q, "Q")
    if p == q:
        raise ValueError(f"P and Q must have distinct norms, both are {p}")

    pq = mul(P, Q)
    Pp = gcrd(p, pq)
    if norm(Pp) != p:
        raise ArithmeticError(f"gcrd({p}, PQ) has norm {norm(Pp)}")
    Qp = div_exact_right(pq, Pp)
    return Qp, Pp


def _validate_pair(Q: HurwitzInt, p: int) -> int:
    if not isinstance(p, int) or not isprime(p):
        raise ValueError(f"{p!r} is not prime")
    q = _checked_prime_norm(Q, "Q")
    if q == p:
        raise ValueError(f"norm(Q) must differ from p = {p}")
    return q


def tau_euclid(Q: HurwitzInt, p: int) -> Perm:
    """tau_Q from metacommuting every class representative over p past Q."""
    _validate_pair(Q, p)
    classes = enumerate_classes(p)
    if p == 2:
        return Perm.identity(1)
    images = []
    for c in classes:
        Pp = gcrd(p, mul(c.rep, Q), canonical=False)
        if norm(Pp) != p:
            raise ArithmeticError(f"gcrd({p}, PQ) has norm {norm(Pp)}")
        images.append(class_index_of(Pp, p))
    return Perm(tuple(images))


def gamma_u(u: HurwitzInt, p: int) -> Perm:
    """Permutation sending the class of P to the class of P*u."""
    if not is_unit(u):
        raise ValueError(f"{format_hurwitz(u)} is not a unit")
    classes = enumerate_classes(p)
    return Perm(tuple(class_index_of(mul(c.rep, u), p) for c in classes))


# ---------------------------------------------------------------------------
# matrix path

def reduce_coords(Q: HurwitzInt, p: int) -> Tuple[int, int, int, int]:
    """(a, b, c, d) of Q mod p, halving through the inverse of 2."""
    inv2 = inv_mod(2, p)
    return tuple((x * inv2) % p for x in Q.coords)


def phi_matrix(Q: HurwitzInt, p: int) -> Mat:
    """Matrix of t -> Q^-1 t Q on imaginary quaternions mod p."""
    check_odd_prime(p)
    a, b, c, d = reduce_coords(Q, p)
    qbar = (a * a + b * b + c * c + d * d) % p
    if qbar == 0:
        raise ValueError(f"p = {p} divides norm({format_hurwitz(Q)})")
    s = inv_mod(qbar, p)
    rows = (
        (a * a + b * b - c * c - d * d, 2 * a * d + 2 * b * c, -2 * a * c + 2 * b * d),
        (-2 * a * d + 2 * b * c, a * a + c * c - b * b - d * d, 2 * a * b + 2 * c * d),
        (2 * a * c + 2 * b * d, -2 * a * b + 2 * c * d, a * a + d * d - b * b - c * c),
    )
    return tuple(tuple((x * s) % p for x in row) for row in rows)


def tau_matrix(Q: HurwitzInt, p: int) -> Perm:
    """tau_Q from applying phi_Q to each conic label."""
    _validate_pair(Q, p)
    check_odd_prime(p)
    phi = phi_matrix(Q, p)
    index = conic_index(p)
    images = []
    for c in enumerate_classes(p):
        x, y, z = normalize_point(mat_vec(phi, c.label.coords, p), p)
        images.append(index[ConicPoint(x, y, z, p)])
    return Perm(tuple(images))


# ---------------------------------------------------------------------------
# predictions

@dataclass(frozen=True)
class Prediction:
    sign: int
    fixed: int
    case_tag: str
    cycle_type: Tuple[int, ...]


def case_tag(Q: HurwitzInt, p: int) -> str:
    if p == 2:
        return "1A"
    a, b, c, d = reduce_coords(Q, p)
    qbar = norm(Q) % p
    if b == c == d == 0:
        return "1A"
    if qbar == (a * a) % p:
        return "1B"
    if a == 0:
        return "2"
    return "3"


def predict(Q: HurwitzInt, p: int) -> Prediction:
    """Sign, fixed points, case and cycle type that tau_Q must have."""
    q = _validate_pair(Q, p)
    if p == 2:
        return Prediction(sign=1, fixed=1, case_tag="1A", cycle_type=(1,))

    tag = case_tag(Q, p)
    sign = legendre(q, p)
    if tag == "1A":
        return Prediction(sign, p + 1, tag, (1,) * (p + 1))
    if tag == "1B":
        return Prediction(sign, 1, tag, (1, p))

    a = reduce_coords(Q, p)[0]
    fixed = 1 + legendre(a * a - q, p)
    if tag == "2":
        k = 2
    else:
        k = mat_order(phi_matrix(Q, p), p, limit=p + 1)
    moving = p + 1 - fixed
    if moving % k:
        raise ArithmeticError(f"{moving} moving points do not split into {k}-cycles")
    return Prediction(sign, fixed, tag, (1,) * fixed + (k,) * (moving // k))


def trace_variant_fixed(Q: HurwitzInt, p: int) -> int:
    """1 + (tr(Q)^2 - q / p), the alternative fixed-point formula."""
    check_odd_prime(p)
    return 1 + legendre(trace(Q) ** 2 - norm(Q), p)


def expected_charpoly(Q: HurwitzInt, p: int) -> Tuple[int, ...]:
    """(x - 1)(x^2 + 2(1 - 2a^2/qbar)x + 1) as coefficients mod p."""
    a = reduce_coords(Q, p)[0]
    qbar = norm(Q) % p
    mid = (2 * (1 - 2 * a * a * inv_mod(qbar, p))) % p
    return poly_mul((1, p - 1), (1, mid, 1), p)


def charpoly_matches(Q: HurwitzInt, p: int) -> bool:
    return char_poly3(phi_matrix(Q, p), p) == expected_charpoly(Q, p)


def eigen_cone_check(Q: HurwitzInt, p: int) -> bool:
    """Every F_p-rational eigenvector for an eigenvalue other than +-1 lies on the cone."""
    phi = phi_matrix(Q, p)
    cp = char_poly3(phi, p)
    for lam in range(2, p - 1):
        if (((cp[0] * lam + cp[1]) * lam + cp[2]) * lam + cp[3]) % p:
            continue
        shifted = tuple(
            tuple((phi[i][j] - (lam if i == j else 0)) % p for j in range(3)) for i in range(3)
        )
        for v in kernel_mod(shifted, p):
            if sum(x * x for x in v) % p:
                return False
    return True


def unit_relations_hold(Q: HurwitzInt, p: int) -> bool:
    """tau_{Qu} = gamma_u o tau_Q and tau_{uQ} = tau_Q o gamma_u for all 24 units."""
    tau = tau_euclid(Q, p)
    for u in units():
        g = gamma_u(u, p)
        if tau_euclid(mul(Q, u), p) != g.compose(tau):
            return False
        if tau_euclid(mul(u, Q), p) != tau.compose(g):
            return False
    return True


# ---------------------------------------------------------------------------
# rotation plane
#
# phi_Q fixes its axis (b, c, d). On the orthogonal plane the sum of squares
# restricts to a binary form equivalent to X^2 - t*Y^2 with t = a^2 - qbar, so
# phi_Q restricts to an element of SO(X^2 - t*Y^2).

def _dot(u: Vec, v: Vec, p: int) -> int:
    return sum(x * y for x, y in zip(u, v)) % p


def _cross(u: Vec, v: Vec, p: int) -> Vec:
    return (
        (u[1] * v[2] - u[2] * v[1]) % p,
        (u[2] * v[0] - u[0] * v[2]) % p,
        (u[0] * v[1] - u[1] * v[0]) % p,
    )


def _combine(x: int, u: Vec, y: int, v: Vec, p: int) -> Vec:
    return tuple((x * a + y * b) % p for a, b in zip(u, v))


def plane_basis(Q: HurwitzInt, p: int) -> Tuple[Vec, Vec, int]:
    """(e1, e2, t): e1, e2 span the plane orthogonal to the axis of phi_Q and
    x^2 + y^2 + z^2 = X^2 - t*Y^2 at X*e1 + Y*e2, with t = a^2 - qbar."""
    check_odd_prime(p)
    a, b, c, d = reduce_coords(Q, p)
    axis = (b, c, d)
    qbar = norm(Q) % p
    t = (a * a - qbar) % p
    # t = -(b^2 + c^2 + d^2) vanishes in cases 1A and 1B
    if t == 0:
        raise ValueError(f"the axis of {format_hurwitz(Q)} is isotropic mod {p}")

    u, v = kernel_mod((axis,), p)
    w1 = next(w for w in (u, v, _combine(1, u, 1, v, p)) if _dot(w, w, p))
    w2 = _cross(axis, w1, p)
    alpha = _dot(w1, w1, p)
    beta = _dot(w2, w2, p)

    ((x0, y0), (x1, y1)), _ = normalize_binary_form(alpha, beta, p)
    s = inv_mod(alpha, p)
    e1 = _combine(x0, w1, y0, w2, p)
    e2 = _combine(x1 * s, w1, y1 * s, w2, p)
    return e1, e2, t


def plane_rotation(Q: HurwitzInt, p: int) -> So2Element:
    """psi_Q: phi_Q restricted to the plane orthogonal to its axis."""
    e1, e2, t = plane_basis(Q, p)
    phi = phi_matrix(Q, p)
    inv_e2 = inv_mod(-t, p)
    cols = []
    for e in (e1, e2):
        img = mat_vec(phi, e, p)
        cols.append((_dot(img, e1, p), (_dot(img, e2, p) * inv_e2) % p))
    (m00, m10), (m01, m11) = cols
    if m11 != m00 or m01 != (m10 * t) % p:
        raise ArithmeticError(f"phi_Q does not act on the plane of {format_hurwitz(Q)} as a rotation")
    return So2Element(m00, m10, t, p)


def plane_rotation_holds(Q: HurwitzInt, p: int, observed_sign: int) -> bool:
    """psi_Q has charpoly x^2 + 2(1 - 2a^2/qbar)x + 1, t = a^2 - qbar and
    v = 4a^2/qbar; its sign on x^2 - t*y^2 = 1 is the sign of tau_Q, and
    psi_Q = -identity when a = 0."""
    psi = plane_rotation(Q, p)
    a = reduce_coords(Q, p)[0]
    qbar = norm(Q) % p
    ratio = (a * a * inv_mod(qbar, p)) % p
    if char_poly2(psi.matrix, p) != (1, (2 * (1 - 2 * ratio)) % p, 1):
        return False
    if psi.t != (a * a - qbar) % p or psi.v != (4 * ratio) % p:
        return False
    if psi.v == 0:
        return psi.alpha == p - 1 and psi.beta == 0
    check = sign_criterion(psi, u=1)
    return check.ok and check.observed == observed_sign


# ---------------------------------------------------------------------------
# reports

@dataclass(frozen=True)
class MetaReport:
    """Observed versus predicted behaviour of tau_Q on the classes over p."""

    p: int
    q: int
    Q: HurwitzInt
    perm: Perm
    observed_sign: int
    predicted_sign: int
    observed_fixed: int
    predicted_fixed: int
    cycle_type: Tuple[int, ...]
    predicted_cycle_type: Tuple[int, ...]
    paths_agree: bool
    case_tag: str
    charpoly_ok: bool = True
    trace_variant_fixed: Optional[int] = None
    plane_ok: bool = True
    q_index: int = 0
    Q_class: Optional[HurwitzInt] = None

    @property
    def passed(self) -> bool:
        return (
            self.observed_sign == self.predicted_sign
            and self.observed_fixed == self.predicted_fixed
            and self.cycle_type == self.predicted_cycle_type
            and self.paths_agree
            and self.charpoly_ok
            and self.plane_ok
        )

    @property
    def trace_variant_disagrees(self) -> bool:
        return self.trace_variant_fixed is not None and self.trace_variant_fixed != self.observed_fixed

    def to_record(self) -> Dict[str, object]:
        return {
            "p": self.p,
            "q": self.q,
            "Q": format_hurwitz(self.Q),
            "cycle_type": list(self.cycle_type),
            "observed_sign": self.observed_sign,
            "predicted_sign": self.predicted_sign,
            "observed_fixed": self.observed_fixed,
            "predicted_fixed": self.predicted_fixed,
            "case": self.case_tag,
            "paths_agree": self.paths_agree,
        }


def observe(Q: HurwitzInt, p: int) -> MetaReport:
    """Compute tau_Q both ways and compare it against the predictions.

    The report also records the class of Q over q; nothing else depends on it.
    """
    q = _validate_pair(Q, p)
    q_index = class_index_of(Q, q)
    perm = tau_euclid(Q, p)
    pred = predict(Q, p)

    if p == 2:
        agree = True
        charpoly_ok = True
        plane_ok = True
        variant = None
    else:
        agree = tau_matrix(Q, p) == perm
        charpoly_ok = charpoly_matches(Q, p)
        plane_ok = pred.case_tag in ("1A", "1B") or plane_rotation_holds(Q, p, perm_sign(perm))
        # the trace-form statement excludes the identity case
        variant = trace_variant_fixed(Q, p) if pred.case_tag != "1A" else None

    return MetaReport(
        p=p,
        q=q,
        Q=Q,
        perm=perm,
        observed_sign=perm_sign(perm),
        predicted_sign=pred.sign,
        observed_fixed=perm_fixed(perm),
        predicted_fixed=pred.fixed,
        cycle_type=cycle_type(perm),
        predicted_cycle_type=pred.cycle_type,
        paths_agree=agree,
        case_tag=pred.case_tag,
        charpoly_ok=charpoly_ok,
        trace_variant_fixed=variant,
        plane_ok=plane_ok,
        q_index=q_index,
        Q_class=enumerate_classes(q)[q_index].rep,
    )


def summarize(reports: List[MetaReport]) -> Dict[str, object]:
    """Counts over a batch of reports, including the trace-variant disagreement rate."""
    cases = Counter(r.case_tag for r in reports)
    variant = [r for r in reports if r.trace_variant_fixed is not None]
    disagree = sum(1 for r in variant if r.trace_variant_disagrees)
    return {
        "records": len(reports),
        "passed": sum(1 for r in reports if r.passed),
        "failed": sum(1 for r in reports if not r.passed),
        "cases": {tag: cases.get(tag, 0) for tag in CASES},
        "trace_variant_checked": len(variant),
        "trace_variant_disagreements": disagree,
        "trace_variant_disagreement_rate": (disagree / len(variant)) if variant else 0.0,
    }

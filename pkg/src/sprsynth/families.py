"""Interval quartic families, two-endpoint segments, and robust stability.

The interval family K is monic degree 4 with each coefficient in its own
closed interval; its four Kharitonov vertices decide robust stability. A
segment is the convex combination of two monic endpoints of equal degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import kernels
from .errors import InternalContradictionError, InvalidInputError
from .poly import CoefficientLike, Polynomial, as_fraction, hurwitz_stable

VERTEX_NAMES = ("a1", "a2", "a3", "a4")

# sign patterns of the four vertices on the bounds of (a1, a2, a3, a4):
# True picks the upper bound, False the lower one.
_VERTEX_PATTERNS = (
    (True, True, False, False),
    (False, False, True, True),
    (True, False, False, True),
    (False, True, True, False),
)


@dataclass(frozen=True)
class IntervalQuartic:
    """Monic quartic family s^4 + a1 s^3 + a2 s^2 + a3 s + a4, ai in [lower_i, upper_i]."""

    lower: tuple[Fraction, Fraction, Fraction, Fraction]
    upper: tuple[Fraction, Fraction, Fraction, Fraction]

    def __init__(self, lower: Sequence[CoefficientLike], upper: Sequence[CoefficientLike]):
        lo = tuple(as_fraction(v) for v in lower)
        hi = tuple(as_fraction(v) for v in upper)
        if len(lo) != 4 or len(hi) != 4:
            raise InvalidInputError("an interval quartic needs 4 lower and 4 upper bounds")
        for i in range(4):
            if lo[i] <= 0:
                raise InvalidInputError(
                    f"nonpositive lower bound for a{i + 1}: a monic quartic with a "
                    "nonpositive coefficient can never be Hurwitz"
                )
            if lo[i] > hi[i]:
                raise InvalidInputError(f"empty interval for a{i + 1}: {lo[i]} > {hi[i]}")
        object.__setattr__(self, "lower", lo)
        object.__setattr__(self, "upper", hi)

    @property
    def is_point(self) -> bool:
        return self.lower == self.upper

    def member(self, coefficients: Sequence[CoefficientLike]) -> Polynomial:
        """The monic member with the given (a1, a2, a3, a4), bounds-checked."""
        a = tuple(as_fraction(v) for v in coefficients)
        if len(a) != 4:
            raise InvalidInputError("a member needs exactly (a1, a2, a3, a4)")
        for i in range(4):
            if not self.lower[i] <= a[i] <= self.upper[i]:
                raise InvalidInputError(f"a{i + 1}={a[i]} outside [{self.lower[i]}, {self.upper[i]}]")
        return Polynomial([a[3], a[2], a[1], a[0], 1])

    def to_json(self) -> dict:
        return {
            "degree": 4,
            "lower": [str(v) for v in self.lower],
            "upper": [str(v) for v in self.upper],
        }

    @classmethod
    def from_json(cls, obj) -> "IntervalQuartic":
        if not isinstance(obj, dict) or "lower" not in obj or "upper" not in obj:
            raise InvalidInputError('interval JSON needs "lower" and "upper" arrays')
        if obj.get("degree", 4) != 4:
            raise InvalidInputError("only degree-4 interval families are supported")
        return cls(obj["lower"], obj["upper"])


def kharitonov_vertices(family: IntervalQuartic) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
    """The four vertex polynomials (a1, a2, a3, a4), in the fixed documented order.

    a1 takes (upper, upper, lower, lower) on (a1..a4), a2 the complement,
    a3 takes (upper, lower, lower, upper) and a4 its complement. The order is
    part of the certificate format and never changes.
    """
    out = []
    for pattern in _VERTEX_PATTERNS:
        picks = [
            family.upper[i] if up else family.lower[i] for i, up in enumerate(pattern)
        ]
        out.append(Polynomial([picks[3], picks[2], picks[1], picks[0], 1]))
    return tuple(out)


def first_unstable_vertex(family: IntervalQuartic) -> Optional[str]:
    """Name of the first Kharitonov vertex failing the Routh test, if any."""
    for name, vertex in zip(VERTEX_NAMES, kharitonov_vertices(family)):
        if not hurwitz_stable(vertex):
            return name
    return None


def interval_robustly_stable(family: IntervalQuartic) -> bool:
    """Every member of K is Hurwitz iff all four Kharitonov vertices are."""
    return first_unstable_vertex(family) is None


@dataclass(frozen=True)
class Segment:
    """Convex combinations lam * end_a + (1 - lam) * end_b of two monic endpoints."""

    end_a: Polynomial
    end_b: Polynomial

    def __init__(self, end_a: Polynomial, end_b: Polynomial):
        if end_a.is_zero or end_b.is_zero:
            raise InvalidInputError("segment endpoints must be nonzero")
        if end_a.degree != end_b.degree:
            raise InvalidInputError(
                f"segment endpoints must have equal degree, got {end_a.degree} and {end_b.degree}"
            )
        if end_a.degree < 1:
            raise InvalidInputError("segment endpoints need degree >= 1")
        if not (end_a.is_monic and end_b.is_monic):
            raise InvalidInputError("segment endpoints must be monic")
        object.__setattr__(self, "end_a", end_a)
        object.__setattr__(self, "end_b", end_b)

    def member(self, lam: CoefficientLike) -> Polynomial:
        t = as_fraction(lam)
        return self.end_a.scale(t) + self.end_b.scale(1 - t)

    def to_json(self) -> dict:
        return {
            "endA": [str(c) for c in self.end_a.coeffs],
            "endB": [str(c) for c in self.end_b.coeffs],
        }

    @classmethod
    def from_json(cls, obj) -> "Segment":
        if not isinstance(obj, dict) or "endA" not in obj or "endB" not in obj:
            raise InvalidInputError('segment JSON needs "endA" and "endB"')
        return cls(
            Polynomial.from_json_value(obj["endA"]),
            Polynomial.from_json_value(obj["endB"]),
        )


# -- segment stability via the even/odd-part resultant ------------------------
#
# p(jw) = E(w^2) + jw * O(w^2). An imaginary-axis root at some lam requires a
# common real root v >= 0 of E_lam and O_lam (v = 0 is excluded because the
# constant coefficient is affine in lam and positive at both Hurwitz
# endpoints). R(lam) = Res_v(E_lam, O_lam) vanishes exactly when some pair of
# roots of p_lam sums to zero (Orlando), which for a polynomial with positive
# coefficients always means "not Hurwitz". So with Hurwitz endpoints the
# segment is stable iff R has no root in (0, 1).

_LamPoly = tuple[Fraction, ...]


def _lam_trim(p: Sequence[Fraction]) -> _LamPoly:
    c = list(p)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _lam_add(p: _LamPoly, q: _LamPoly) -> _LamPoly:
    n = max(len(p), len(q))
    return _lam_trim(
        [
            (p[i] if i < len(p) else Fraction(0)) + (q[i] if i < len(q) else Fraction(0))
            for i in range(n)
        ]
    )


def _lam_neg(p: _LamPoly) -> _LamPoly:
    return tuple(-x for x in p)


def _lam_mul(p: _LamPoly, q: _LamPoly) -> _LamPoly:
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return _lam_trim(out)


def _lam_div_exact(p: _LamPoly, q: _LamPoly) -> _LamPoly:
    if not q:
        raise InternalContradictionError("division by the zero polynomial in Bareiss")
    rem = list(p)
    quot = [Fraction(0)] * max(1, len(rem) - len(q) + 1)
    while rem and len(rem) >= len(q):
        f = rem[-1] / q[-1]
        d = len(rem) - len(q)
        quot[d] += f
        for i in range(len(q)):
            rem[i + d] -= f * q[i]
        while rem and rem[-1] == 0:
            rem.pop()
    if rem:
        raise InternalContradictionError("nonexact division in Bareiss elimination")
    return _lam_trim(quot)


def _bareiss_det(matrix: list[list[_LamPoly]]) -> _LamPoly:
    """Fraction-free determinant of a matrix of polynomials in lam."""
    size = len(matrix)
    if size == 0:
        return (Fraction(1),)
    m = [row[:] for row in matrix]
    sign = 1
    prev: _LamPoly = (Fraction(1),)
    for k in range(size - 1):
        if not m[k][k]:
            pivot_row = next((r for r in range(k + 1, size) if m[r][k]), None)
            if pivot_row is None:
                return ()
            m[k], m[pivot_row] = m[pivot_row], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = _lam_add(
                    _lam_mul(m[k][k], m[i][j]), _lam_neg(_lam_mul(m[i][k], m[k][j]))
                )
                m[i][j] = _lam_div_exact(num, prev)
            m[i][k] = ()
        prev = m[k][k]
    det = m[size - 1][size - 1]
    return det if sign == 1 else _lam_neg(det)


def _even_odd_parts(p: Polynomial) -> tuple[list[Fraction], list[Fraction]]:
    """E, O with p(jw) = E(w^2) + jw O(w^2), padded to the formal degrees."""
    d = p.degree
    e = [Fraction(0)] * (d // 2 + 1)
    o = [Fraction(0)] * ((d - 1) // 2 + 1)
    for k, c in enumerate(p.coeffs):
        if k % 2 == 0:
            e[k // 2] += c if (k // 2) % 2 == 0 else -c
        else:
            m = (k - 1) // 2
            o[m] += c if m % 2 == 0 else -c
    return e, o


def _lam_pow(p: _LamPoly, n: int) -> _LamPoly:
    out: _LamPoly = (Fraction(1),)
    for _ in range(n):
        out = _lam_mul(out, p)
    return out


def _crossing_resultant(seg: Segment) -> _LamPoly:
    """Res_v(E_lam, O_lam) as a polynomial in lam."""
    ea, oa = _even_odd_parts(seg.end_a)
    eb, ob = _even_odd_parts(seg.end_b)
    # coefficient i of the lam-affine combination: end_b[i] + lam*(end_a[i]-end_b[i])
    e = [_lam_trim((eb[i], ea[i] - eb[i])) for i in range(len(ea))]
    o = [_lam_trim((ob[i], oa[i] - ob[i])) for i in range(len(oa))]
    m, n = len(e) - 1, len(o) - 1
    if n == 0:
        return _lam_pow(o[0], m)
    if m == 0:
        return _lam_pow(e[0], n)
    size = m + n
    zero: _LamPoly = ()
    matrix = [[zero] * size for _ in range(size)]
    for r in range(n):
        for i in range(m + 1):
            matrix[r][r + i] = e[m - i]
    for r in range(m):
        for i in range(n + 1):
            matrix[n + r][r + i] = o[n - i]
    return _bareiss_det(matrix)


def segment_stable(seg: Segment) -> bool:
    """Exact decision: every convex combination of the endpoints is Hurwitz.

    Both endpoints must pass the Routh test, and the even/odd-part resultant
    R(lam) must have no root in (0, 1) (root isolation by Sturm count).
    """
    if not (hurwitz_stable(seg.end_a) and hurwitz_stable(seg.end_b)):
        return False
    r = _crossing_resultant(seg)
    coeffs = kernels.normalized(Polynomial(r).integer_coeffs())
    if not coeffs:
        raise InternalContradictionError(
            "crossing resultant vanished identically on a segment with Hurwitz endpoints"
        )
    if kernels.sign_at(coeffs, 0, 1) == 0 or kernels.sign_at(coeffs, 1, 1) == 0:
        raise InternalContradictionError(
            "crossing resultant vanished at a Hurwitz endpoint"
        )
    chain = kernels.sturm_chain(coeffs)
    return kernels.count_roots_halfopen(chain, 0, 1, 1, 1) == 0

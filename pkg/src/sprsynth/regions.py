"""Feasibility geometry for cubic numerators against a stable monic quartic.

For a Hurwitz quartic a(s) = s^4 + a1 s^3 + a2 s^2 + a3 s + a4, the pairs
(x, y) for which s^3 + x s^2 + y s + eps has strictly positive real-part
ratio against a(s) for all small eps > 0 form a bounded convex region: the
union of an open ellipse interior and a triangle with mixed strict/non-strict
edges. The ellipse is tangent to the y axis, to the line x = a1 and to the
ray a3 y - a4 x = 0; the tangent points are also the triangle's corners.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InternalContradictionError, InvalidInputError
from .poly import CoefficientLike, Polynomial, as_fraction, hurwitz_stable, positive_on_nonneg


@dataclass(frozen=True)
class Point2:
    """A candidate (x, y) for the synthesized cubic s^3 + x s^2 + y s + eps."""

    x: Fraction
    y: Fraction

    def __init__(self, x: CoefficientLike, y: CoefficientLike):
        object.__setattr__(self, "x", as_fraction(x))
        object.__setattr__(self, "y", as_fraction(y))

    def to_json(self) -> dict:
        return {"x": str(self.x), "y": str(self.y)}

    @classmethod
    def from_json(cls, obj) -> "Point2":
        if not isinstance(obj, dict) or "x" not in obj or "y" not in obj:
            raise InvalidInputError('point JSON needs "x" and "y"')
        return cls(obj["x"], obj["y"])


@dataclass(frozen=True)
class Conic:
    """A x^2 + B xy + C y^2 + D x + E y + F = 0 with rational coefficients."""

    A: Fraction
    B: Fraction
    C: Fraction
    D: Fraction
    E: Fraction
    F: Fraction

    def value(self, p: Point2) -> Fraction:
        x, y = p.x, p.y
        return (
            self.A * x * x
            + self.B * x * y
            + self.C * y * y
            + self.D * x
            + self.E * y
            + self.F
        )

    @property
    def discriminant(self) -> Fraction:
        return self.B * self.B - 4 * self.A * self.C

    def center(self) -> Point2:
        det = -self.discriminant
        return Point2(
            (self.B * self.E - 2 * self.C * self.D) / det,
            (self.B * self.D - 2 * self.A * self.E) / det,
        )


# affine form (cx, cy, c0) stands for cx*x + cy*y + c0
_AffineForm = tuple[Fraction, Fraction, Fraction]


@dataclass(frozen=True)
class RegionBundle:
    """Everything the membership tests need for one denominator quartic."""

    conic: Conic
    triangle_forms: tuple[_AffineForm, _AffineForm, _AffineForm]
    source: Polynomial


def _quartic_coefficients(a: Polynomial) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(a1, a2, a3, a4) of a validated monic Hurwitz quartic."""
    if a.is_zero or a.degree != 4 or not a.is_monic:
        raise InvalidInputError("expected a monic quartic denominator")
    if not hurwitz_stable(a):
        raise InvalidInputError(f"denominator is not Hurwitz: {a}")
    return a.coeffs[3], a.coeffs[2], a.coeffs[1], a.coeffs[0]


def conic_of(a: Polynomial) -> Conic:
    """The boundary conic of the ellipse part, by direct substitution."""
    a1, a2, a3, a4 = _quartic_coefficients(a)
    conic = Conic(
        A=a2 * a2 - 4 * a4,
        B=2 * (2 * a3 - a1 * a2),
        C=a1 * a1,
        D=-2 * (a2 * a3 - 2 * a1 * a4),
        E=-2 * a1 * a3,
        F=a3 * a3,
    )
    if conic.discriminant >= 0:
        raise InternalContradictionError(
            "conic of a Hurwitz quartic must be an ellipse"
        )
    return conic


def tangent_points(a: Polynomial) -> tuple[Point2, Point2, Point2]:
    """Tangency with x = 0, with x = a1, and with the ray a3 y - a4 x = 0."""
    a1, a2, a3, a4 = _quartic_coefficients(a)
    w = a2 * a3 - a1 * a4
    if w <= 0:
        raise InternalContradictionError("a2*a3 - a1*a4 must be positive for Hurwitz a")
    return (
        Point2(Fraction(0), a3 / a1),
        Point2(a1, a2 - a3 / a1),
        Point2(a3 * a3 / w, a3 * a4 / w),
    )


def _triangle_forms(a1, a2, a3, a4) -> tuple[_AffineForm, _AffineForm, _AffineForm]:
    return (
        (Fraction(-1), Fraction(0), a1),  # a1 - x          >= 0
        (a2, -a1, -a3),                   # a2 x - a1 y - a3 >= 0
        (-a4, a3, Fraction(0)),           # a3 y - a4 x      > 0
    )


def region_bundle(a: Polynomial) -> RegionBundle:
    conic = conic_of(a)
    a1, a2, a3, a4 = _quartic_coefficients(a)
    bundle = RegionBundle(conic=conic, triangle_forms=_triangle_forms(a1, a2, a3, a4), source=a)
    for point in tangent_points(a):
        if conic.value(point) != 0:
            raise InternalContradictionError("tangent point off the conic")
    return bundle


def in_ellipse_region(a: Polynomial, p: Point2) -> bool:
    """Strict interior of the boundary conic."""
    return conic_of(a).value(p) < 0


def in_triangle_region(a: Polynomial, p: Point2) -> bool:
    """a1 - x >= 0, a2 x - a1 y - a3 >= 0 and a3 y - a4 x > 0, exactly."""
    a1, a2, a3, a4 = _quartic_coefficients(a)
    f1, f2, f3 = _triangle_forms(a1, a2, a3, a4)
    v1 = f1[0] * p.x + f1[1] * p.y + f1[2]
    v2 = f2[0] * p.x + f2[1] * p.y + f2[2]
    v3 = f3[0] * p.x + f3[1] * p.y + f3[2]
    return v1 >= 0 and v2 >= 0 and v3 > 0


def in_feasible_region(a: Polynomial, p: Point2) -> bool:
    """Union of the ellipse interior and the triangle region."""
    return in_ellipse_region(a, p) or in_triangle_region(a, p)


def crossing_quadratic(a: Polynomial, p: Point2) -> Polynomial:
    """q(t) = (a1-x) t^2 + (a2 x - a1 y - a3) t + (a3 y - a4 x)."""
    a1, a2, a3, a4 = _quartic_coefficients(a)
    return Polynomial(
        [a3 * p.y - a4 * p.x, a2 * p.x - a1 * p.y - a3, a1 - p.x]
    )


def in_feasible_region_quadratic(a: Polynomial, p: Point2) -> bool:
    """Equivalent membership test: q(t) > 0 for all t in [0, inf)."""
    q = crossing_quadratic(a, p)
    if q.is_zero:
        return False
    return positive_on_nonneg(q)


def tangent_line_residual(a: Polynomial, u: CoefficientLike, v: CoefficientLike) -> Fraction:
    """u v^2 - a1 v^2 - a2 u v + a3 v + a4 u.

    Vanishes exactly when the line x/u + y/v = 1 is tangent to the ellipse
    region of a; affine both in u and in the quartic's coefficients, which is
    what transfers tangency to every convex combination of denominators.
    """
    uf, vf = as_fraction(u), as_fraction(v)
    if uf == 0:
        raise InvalidInputError("tangent line residual needs u != 0")
    a1, a2, a3, a4 = _quartic_coefficients(a)
    return uf * vf * vf - a1 * vf * vf - a2 * uf * vf + a3 * vf + a4 * uf


def triangle_vertices(a: Polynomial) -> tuple[Point2, Point2, Point2]:
    """Corners of the triangle region (two of them are tangent points)."""
    a1, a2, a3, a4 = _quartic_coefficients(a)
    w = a2 * a3 - a1 * a4
    return (
        Point2(a1, a2 - a3 / a1),
        Point2(a3 * a3 / w, a3 * a4 / w),
        Point2(a1, a1 * a4 / a3),
    )


def ellipse_boundary_points(a: Polynomial, resolution: int = 256) -> list[Point2]:
    """Exact rational boundary points, ordered once around the ellipse.

    Lines through the y-axis tangent point (0, a3/a1) meet the conic in one
    further rational point; sweeping the slope over the projective line in
    two charts walks the whole boundary without any trigonometry.
    """
    if resolution < 4:
        raise InvalidInputError("boundary sampling needs resolution >= 4")
    conic = conic_of(a)
    a1, _, a3, _ = _quartic_coefficients(a)
    p0 = Point2(Fraction(0), a3 / a1)

    def second_intersection(dx: Fraction, dy: Fraction) -> Point2:
        alpha = conic.A * dx * dx + conic.B * dx * dy + conic.C * dy * dy
        beta = (
            2 * conic.A * p0.x * dx
            + conic.B * (p0.x * dy + p0.y * dx)
            + 2 * conic.C * p0.y * dy
            + conic.D * dx
            + conic.E * dy
        )
        if alpha == 0:
            raise InternalContradictionError("ellipse pencil line met no second point")
        s = -beta / alpha
        return Point2(p0.x + s * dx, p0.y + s * dy)

    points = []
    half = resolution // 2
    rest = resolution - half
    for k in range(half):  # slopes in [-1, 1)
        m = Fraction(-1) + Fraction(2 * k, half)
        points.append(second_intersection(Fraction(1), m))
    for k in range(rest):  # slopes in [1, inf) and (-inf, -1), via w = 1/m
        w = Fraction(1) - Fraction(2 * k, rest)
        if w == 0:
            points.append(second_intersection(Fraction(0), Fraction(1)))
        else:
            points.append(second_intersection(w, Fraction(1)))
    return points

"""Constructive synthesis of a single numerator SPR against a whole family.

Pipeline: pick (x, y) in the feasibility region of every denominator, push
the constant term eps of the cubic s^3 + x s^2 + y s + eps as high as strict
positivity allows (then take a fraction of it), do the same for the gain r
of an added s^4 term to make the numerator biproper, and re-verify the
finished certificate from scratch. Both maxima are downward closed, which
is what makes plain bisection sound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .errors import InternalContradictionError, InvalidInputError, PreconditionError
from .families import (
    IntervalQuartic,
    Segment,
    VERTEX_NAMES,
    first_unstable_vertex,
    kharitonov_vertices,
    segment_stable,
)
from .jsonio import dual, fraction_from
from .poly import Polynomial, hurwitz_stable, positive_on_nonneg, real_part_numerator
from .regions import Point2, conic_of, in_ellipse_region, in_feasible_region
from .sprcheck import SprVerdict, is_spr, spr_ok

_REL_TOL = Fraction(1, 2**20)
_BISECT_CAP = 200
_BRACKET_CAP = 80

_S4 = Polynomial([0, 0, 0, 0, 1])


@dataclass(frozen=True)
class SynthesisResult:
    """The full certificate produced by a synthesis run.

    ``numerator`` is r s^4 + s^3 + x s^2 + y s + epsilon; ``denominators``
    are the named polynomials the certificate was verified against (the four
    Kharitonov vertices, or the two segment endpoints), and ``verdicts`` the
    per-denominator SPR verdicts, all true by construction.
    """

    kind: str  # "interval" | "segment"
    point: Point2
    epsilon: Fraction
    epsilon_max: Fraction
    r: Fraction
    r_max: Fraction
    numerator: Polynomial
    denominators: tuple[tuple[str, Polynomial], ...]
    verdicts: tuple[SprVerdict, ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "point": {"x": dual(self.point.x), "y": dual(self.point.y)},
            "epsilon": dual(self.epsilon),
            "epsilon_max": dual(self.epsilon_max),
            "r": dual(self.r),
            "r_max": dual(self.r_max),
            "numerator": {
                "ascending": [dual(c) for c in self.numerator.coeffs],
                "text": self.numerator.to_text(),
            },
            "denominators": [
                {
                    "name": name,
                    "ascending": [dual(c) for c in p.coeffs],
                    "text": p.to_text(),
                }
                for name, p in self.denominators
            ],
            "verdicts": [
                {"denominator": name, **verdict.to_json()}
                for (name, _), verdict in zip(self.denominators, self.verdicts)
            ],
        }

    @classmethod
    def from_json(cls, obj) -> "SynthesisResult":
        return cls(
            kind=obj["kind"],
            point=Point2(
                fraction_from(obj["point"]["x"]), fraction_from(obj["point"]["y"])
            ),
            epsilon=fraction_from(obj["epsilon"]),
            epsilon_max=fraction_from(obj["epsilon_max"]),
            r=fraction_from(obj["r"]),
            r_max=fraction_from(obj["r_max"]),
            numerator=Polynomial(
                [fraction_from(c) for c in obj["numerator"]["ascending"]]
            ),
            denominators=tuple(
                (d["name"], Polynomial([fraction_from(c) for c in d["ascending"]]))
                for d in obj["denominators"]
            ),
            verdicts=tuple(SprVerdict.from_json(v) for v in obj["verdicts"]),
        )


# -- bisection ----------------------------------------------------------------


def _largest_verified(predicate: Callable[[Fraction], bool], hi: Fraction) -> Fraction:
    """Largest verified-true value below a failing upper bracket.

    Sound for downward-closed predicates: every returned value has been
    checked exactly, as has failure at every retained upper bound.
    """
    lo = Fraction(0)
    for _ in range(_BISECT_CAP):
        if hi - lo <= hi * _REL_TOL:
            break
        mid = (lo + hi) / 2
        if predicate(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _grow_until_failing(predicate: Callable[[Fraction], bool], start: Fraction) -> Fraction:
    hi = start
    for _ in range(_BRACKET_CAP):
        if not predicate(hi):
            return hi
        hi *= 2
    raise InternalContradictionError(
        "no failing upper bracket found; the maximum should be finite"
    )


def epsilon_max(point: Point2, denominators: Sequence[Polynomial]) -> Fraction:
    """Largest verified constant term for the cubic at the feasible point.

    For every eps in (0, result] the cubic s^3 + x s^2 + y s + eps has a
    strictly positive real-part numerator against every denominator
    (downward closure in eps); the result is maximal within relative
    tolerance 2^-20.
    """
    dens = list(denominators)
    if not dens:
        raise InvalidInputError("epsilon_max needs at least one denominator")
    for a in dens:
        if not in_feasible_region(a, point):
            raise PreconditionError(
                f"point ({point.x}, {point.y}) is not in the feasibility region of {a}"
            )

    def ok(eps: Fraction) -> bool:
        cubic = Polynomial([eps, point.y, point.x, 1])
        return all(positive_on_nonneg(real_part_numerator(cubic, a)) for a in dens)

    start = 1 + max(a.coeffs[0] for a in dens)
    hi = _grow_until_failing(ok, start)
    best = _largest_verified(ok, hi)
    if best <= 0:
        raise InternalContradictionError(
            "no admissible eps found at a verified feasible point"
        )
    return best


def r_max(b: Polynomial, denominators: Sequence[Polynomial]) -> Fraction:
    """Largest verified gain for the added s^4 term keeping b + r s^4 SPR.

    Downward closed in r because the real-part numerator is affine in r and
    already strictly positive at r = 0.
    """
    dens = list(denominators)
    if not dens:
        raise InvalidInputError("r_max needs at least one denominator")
    for a in dens:
        if b.degree is None or a.degree is None or b.degree > a.degree:
            raise PreconditionError("r_max needs deg b <= deg of each denominator")
        if not positive_on_nonneg(real_part_numerator(b, a)):
            raise PreconditionError(
                f"cubic {b} fails strict real-part positivity against {a}"
            )

    def ok(r: Fraction) -> bool:
        candidate = b + _S4.scale(r)
        return all(spr_ok(candidate, a) for a in dens)

    hi = _grow_until_failing(ok, Fraction(1))
    best = _largest_verified(ok, hi)
    if best <= 0:
        raise InternalContradictionError(
            "no admissible gain found for a cubic with verified positivity"
        )
    return best


# -- feasible points ----------------------------------------------------------


def _bounds_from_vertices(
    vertices: Sequence[Polynomial],
) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
    """Recover (lower, upper) coefficient bounds from canonical vertices."""
    if len(vertices) != 4:
        raise InvalidInputError("expected the four Kharitonov vertices")
    for v in vertices:
        if v.degree != 4 or not v.is_monic:
            raise InvalidInputError("Kharitonov vertices must be monic quartics")

    def paper_coeffs(p: Polynomial) -> tuple[Fraction, ...]:
        return (p.coeffs[3], p.coeffs[2], p.coeffs[1], p.coeffs[0])

    c1, c2, c3, c4 = (paper_coeffs(v) for v in vertices)
    upper = (c1[0], c1[1], c2[2], c2[3])
    lower = (c2[0], c2[1], c1[2], c1[3])
    expected3 = (upper[0], lower[1], lower[2], upper[3])
    expected4 = (lower[0], upper[1], upper[2], lower[3])
    if c3 != expected3 or c4 != expected4 or any(l > u for l, u in zip(lower, upper)):
        raise InvalidInputError(
            "vertex polynomials do not form a canonical Kharitonov quadruple"
        )
    return lower, upper


def feasible_point_interval(vertices: Sequence[Polynomial]) -> Point2:
    """A point in the feasibility region of all four Kharitonov vertices.

    Constructive selection: intersect the two open segments joining the
    y-axis tangent heights to the ray/edge corners; fall back to the closed
    corner candidate and then to a dyadic sweep of the first segment. Every
    candidate is membership-verified before being returned, so the fallback
    ladder affects availability only, never correctness.
    """
    lower, upper = _bounds_from_vertices(vertices)
    verts = list(vertices)
    for name, v in zip(VERTEX_NAMES, verts):
        if not hurwitz_stable(v):
            raise PreconditionError(
                f"family is not robustly stable: vertex {name} fails the Routh test",
                vertex=name,
            )
    l1, l2, l3, _ = lower
    u1, _, u3, u4 = upper

    def member_everywhere(p: Point2) -> bool:
        return all(in_feasible_region(v, p) for v in verts)

    low_height = l3 / u1
    high_height = u3 / l1
    if low_height == high_height:
        # point intervals in a1 and a3: walk in from the common tangent point
        delta = l1 / 2
        for _ in range(64):
            p = Point2(delta, high_height)
            if member_everywhere(p):
                return p
            delta /= 2
        raise InternalContradictionError(
            "no admissible offset from the degenerate tangent point"
        )

    a13 = Point2(Fraction(0), low_height)
    b3 = Point2(u1, u1 * u4 / l3)
    a24 = Point2(Fraction(0), high_height)
    b2 = Point2(l1, l1 * u4 / u3)

    candidates: list[Point2] = []
    slope1 = (b3.y - a13.y) / b3.x
    slope2 = (b2.y - a24.y) / b2.x
    if slope1 != slope2:
        xi = (a24.y - a13.y) / (slope1 - slope2)
        if 0 < xi < min(b3.x, b2.x):
            candidates.append(Point2(xi, a13.y + slope1 * xi))
    # closed-form corner candidate from the complementary construction
    candidates.append(Point2(l1, (l2 / u1 - 2 * l3 / (u1 * u1)) * l1 + l3 / u1))
    # dyadic sweep along the open segment (a13, b3)
    for level in range(1, 11):
        den = 2**level
        for num in range(1, den, 2):
            t = Fraction(num, den)
            candidates.append(
                Point2(a13.x + t * (b3.x - a13.x), a13.y + t * (b3.y - a13.y))
            )
    for p in candidates:
        if member_everywhere(p):
            return p
    raise InternalContradictionError(
        "found no common feasible point for a robustly stable family"
    )


# For the segment search the two ellipse interiors are known to intersect;
# the projection of that intersection onto the x axis is an open interval,
# and for a fixed x the slice of each ellipse is the negativity interval of
# a convex quadratic in y. Overlap of two such intervals is decidable in
# rational arithmetic via the symmetric functions of each quadratic's roots.

_Quad = tuple[Fraction, Fraction, Fraction]  # c2 y^2 + c1 y + c0 with c2 > 0


def _slice_quadratic(conic, x: Fraction) -> _Quad:
    return (
        conic.C,
        conic.B * x + conic.E,
        conic.A * x * x + conic.D * x + conic.F,
    )


def _quad_value(q: _Quad, y: Fraction) -> Fraction:
    return q[0] * y * y + q[1] * y + q[2]


def _quad_disc(q: _Quad) -> Fraction:
    return q[1] * q[1] - 4 * q[0] * q[2]


def _has_negative_value_at_root(f: _Quad, g: _Quad) -> bool:
    """True iff f is negative at some root of g (g assumed to have two roots)."""
    e1 = -g[1] / g[0]
    e2 = g[2] / g[0]
    f2, f1, f0 = f
    power_sum = e1 * e1 - 2 * e2
    total = f2 * power_sum + f1 * e1 + 2 * f0
    product = (
        f2 * f2 * e2 * e2
        + f2 * f1 * e1 * e2
        + f2 * f0 * power_sum
        + f1 * f1 * e2
        + f1 * f0 * e1
        + f0 * f0
    )
    return product < 0 or total < 0


def _slices_overlap(f: _Quad, g: _Quad) -> bool:
    """Do the open negativity intervals of f and g intersect?"""
    if _quad_disc(f) <= 0 or _quad_disc(g) <= 0:
        return False
    vf = -f[1] / (2 * f[0])
    vg = -g[1] / (2 * g[0])
    if _quad_value(g, vf) < 0 or _quad_value(f, vg) < 0:
        return True
    return _has_negative_value_at_root(f, g) or _has_negative_value_at_root(g, f)


def _point_in_slice(f: _Quad, g: _Quad) -> Optional[Fraction]:
    """A rational y with f(y) < 0 and g(y) < 0, given the slices overlap."""
    vf = -f[1] / (2 * f[0])
    vg = -g[1] / (2 * g[0])
    for y in (vf, vg):
        if _quad_value(f, y) < 0 and _quad_value(g, y) < 0:
            return y
    # neither vertex lies in the overlap, so f - g changes sign between them
    # and its crossing sits strictly inside the overlap: bisect towards it.
    lo, hi = (vf, vg) if vf <= vg else (vg, vf)
    sign_lo = _quad_value(f, lo) - _quad_value(g, lo) > 0
    for _ in range(256):
        mid = (lo + hi) / 2
        if _quad_value(f, mid) < 0 and _quad_value(g, mid) < 0:
            return mid
        if (_quad_value(f, mid) - _quad_value(g, mid) > 0) == sign_lo:
            lo = mid
        else:
            hi = mid
    return None


def feasible_point_segment(a: Polynomial, b: Polynomial) -> Point2:
    """A point interior to the ellipse regions of both segment endpoints.

    Ladder: conic centers, the center-connecting segment, then an exact
    slice scan over x (the intersection of the two ellipse interiors is open
    and convex, so some dyadic x admits an overlapping y slice). Every
    returned point is verified by the exact membership predicates.
    """
    seg = Segment(a, b)
    if not segment_stable(seg):
        raise PreconditionError("segment is not robustly stable")
    if a.degree != 4:
        raise PreconditionError("segment feasible points need quartic endpoints")

    conic_a, conic_b = conic_of(a), conic_of(b)

    def member(p: Point2) -> bool:
        return conic_a.value(p) < 0 and conic_b.value(p) < 0

    center_a, center_b = conic_a.center(), conic_b.center()
    candidates = [
        Point2((center_a.x + center_b.x) / 2, (center_a.y + center_b.y) / 2),
        center_a,
        center_b,
    ]
    for j in range(1, 33):
        t = Fraction(j, 33)
        candidates.append(
            Point2(
                center_a.x + t * (center_b.x - center_a.x),
                center_a.y + t * (center_b.y - center_a.y),
            )
        )
    for p in candidates:
        if member(p):
            return p

    x_span = min(a.coeffs[3], b.coeffs[3])  # both ellipses live in 0 < x < a1
    for level in range(1, 14):
        den = 2**level
        for num in range(1, den, 2):
            x = x_span * Fraction(num, den)
            f = _slice_quadratic(conic_a, x)
            g = _slice_quadratic(conic_b, x)
            if not _slices_overlap(f, g):
                continue
            y = _point_in_slice(f, g)
            if y is None:
                continue
            p = Point2(x, y)
            if member(p):
                return p
    raise InternalContradictionError(
        "found no common interior point for a stable segment"
    )


# -- full pipelines -----------------------------------------------------------


def _check_fraction(name: str, value: Fraction) -> Fraction:
    f = Fraction(value)
    if not 0 < f <= 1:
        raise InvalidInputError(f"{name} must be in (0, 1], got {f}")
    return f


def _assemble(
    kind: str,
    point: Point2,
    named_denominators: Sequence[tuple[str, Polynomial]],
    epsilon_fraction: Fraction,
    r_fraction: Fraction,
) -> SynthesisResult:
    dens = [p for _, p in named_denominators]
    eps_star = epsilon_max(point, dens)
    eps = eps_star * epsilon_fraction
    cubic = Polynomial([eps, point.y, point.x, 1])
    r_star = r_max(cubic, dens)
    r = r_star * r_fraction
    numerator = cubic + _S4.scale(r)
    verdicts = tuple(is_spr(numerator, a) for a in dens)
    if not all(v.is_spr for v in verdicts):
        raise InternalContradictionError(
            "assembled certificate failed its own re-verification"
        )
    return SynthesisResult(
        kind=kind,
        point=point,
        epsilon=eps,
        epsilon_max=eps_star,
        r=r,
        r_max=r_star,
        numerator=numerator,
        denominators=tuple(named_denominators),
        verdicts=verdicts,
    )


def synthesize_interval(
    family: IntervalQuartic,
    epsilon_fraction: Fraction = Fraction(1, 2),
    r_fraction: Fraction = Fraction(1, 2),
) -> SynthesisResult:
    """One numerator SPR against every member of a robustly stable family.

    Vertex reduction makes the four verdicts in the result cover the whole
    box: the certificate extends to every member of K.
    """
    epsilon_fraction = _check_fraction("epsilon_fraction", epsilon_fraction)
    r_fraction = _check_fraction("r_fraction", r_fraction)
    bad = first_unstable_vertex(family)
    if bad is not None:
        raise PreconditionError(
            f"family is not robustly stable: vertex {bad} fails the Routh test",
            vertex=bad,
        )
    vertices = kharitonov_vertices(family)
    point = feasible_point_interval(vertices)
    return _assemble(
        "interval", point, tuple(zip(VERTEX_NAMES, vertices)), epsilon_fraction, r_fraction
    )


def synthesize_segment(
    seg: Segment,
    epsilon_fraction: Fraction = Fraction(1, 2),
    r_fraction: Fraction = Fraction(1, 2),
) -> SynthesisResult:
    """One numerator SPR against every convex combination of two endpoints."""
    epsilon_fraction = _check_fraction("epsilon_fraction", epsilon_fraction)
    r_fraction = _check_fraction("r_fraction", r_fraction)
    if seg.end_a.degree != 4:
        raise PreconditionError("segment synthesis needs quartic endpoints")
    if not segment_stable(seg):
        raise PreconditionError("segment is not robustly stable")
    point = feasible_point_segment(seg.end_a, seg.end_b)
    return _assemble(
        "segment",
        point,
        (("endA", seg.end_a), ("endB", seg.end_b)),
        epsilon_fraction,
        r_fraction,
    )

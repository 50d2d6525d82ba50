"""Strict positive realness verdicts, vertex certificates, and the LP probe.

A biproper rational function p/q is SPR when q is Hurwitz and the real part
of p(jw)/q(jw) is strictly positive for all real w; the latter reduces to
strict positivity of the even real-part numerator on t = w^2 in [0, inf).
All verdicts here are exact; the only floating point in the package is the
sampled LP relaxation, whose feasible candidates are always re-verified
exactly before being reported as feasible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import linprog

from .errors import InternalContradictionError, InvalidInputError, PreconditionError
from .jsonio import dual
from .poly import (
    EvenForm,
    Polynomial,
    hurwitz_stable,
    nonpositive_witness,
    positive_on_nonneg,
    real_part_numerator,
)

REASON_OK = "ok"
REASON_NOT_BIPROPER = "not-biproper"
REASON_DENOMINATOR = "denominator-not-hurwitz"
REASON_REAL_PART = "real-part-nonpositive"

LP_MARGIN = 1e-6


@dataclass(frozen=True)
class SprVerdict:
    """Outcome of one SPR check.

    ``witness_t`` is a rational t = w^2 where the real-part numerator is
    nonpositive. It accompanies a real-part failure whenever a rational
    certificate point exists; the only exception is tangential contact at an
    irrational t, where no rational point with N(t) <= 0 exists at all.
    """

    is_spr: bool
    reason: str
    witness_t: Optional[Fraction] = None

    def to_json(self) -> dict:
        return {
            "is_spr": self.is_spr,
            "reason": self.reason,
            "witness_t": None if self.witness_t is None else str(self.witness_t),
        }

    @classmethod
    def from_json(cls, obj) -> "SprVerdict":
        return cls(
            is_spr=bool(obj["is_spr"]),
            reason=obj["reason"],
            witness_t=None if obj.get("witness_t") is None else Fraction(obj["witness_t"]),
        )


def _check_nonzero(p: Polynomial, q: Polynomial) -> None:
    if p.is_zero or q.is_zero:
        raise InvalidInputError("SPR checks need nonzero numerator and denominator")


def spr_ok(p: Polynomial, q: Polynomial) -> bool:
    """Boolean core of is_spr, without witness extraction (hot path)."""
    _check_nonzero(p, q)
    if p.degree != q.degree:
        return False
    if q.degree >= 1 and not hurwitz_stable(q):
        return False
    return positive_on_nonneg(real_part_numerator(p, q))


def is_spr(p: Polynomial, q: Polynomial) -> SprVerdict:
    """Full SPR verdict for p/q, reporting the first violated clause."""
    _check_nonzero(p, q)
    if p.degree != q.degree:
        return SprVerdict(False, REASON_NOT_BIPROPER)
    if q.degree >= 1 and not hurwitz_stable(q):
        return SprVerdict(False, REASON_DENOMINATOR)
    numerator = real_part_numerator(p, q)
    if positive_on_nonneg(numerator):
        return SprVerdict(True, REASON_OK)
    return SprVerdict(False, REASON_REAL_PART, witness_t=nonpositive_witness(numerator))


def re_positive(p: Polynomial, q: Polynomial) -> bool:
    """Clause (ii) alone, for proper ratios: Re[p(jw)/q(jw)] > 0 for all w."""
    _check_nonzero(p, q)
    if p.degree > q.degree:
        raise PreconditionError("re_positive needs deg p <= deg q")
    if not hurwitz_stable(q):
        raise PreconditionError("re_positive needs a Hurwitz denominator")
    return positive_on_nonneg(real_part_numerator(p, q))


@dataclass(frozen=True)
class VertexCertificate:
    """Per-vertex SPR verdicts plus the family verdict they imply.

    With a fixed numerator, the real-part numerator is affine in the
    denominator coefficients, so all-vertices-ok extends to the whole convex
    hull of the vertex set.
    """

    verdicts: tuple[SprVerdict, ...]
    family_ok: bool

    def to_json(self) -> dict:
        return {
            "family_ok": self.family_ok,
            "verdicts": [v.to_json() for v in self.verdicts],
        }


def vertex_certificate(b: Polynomial, vertices: Sequence[Polynomial]) -> VertexCertificate:
    verts = list(vertices)
    if not verts:
        raise InvalidInputError("vertex certificate needs at least one vertex")
    degrees = {v.degree for v in verts}
    if len(degrees) != 1 or None in degrees:
        raise InvalidInputError("vertex polynomials must share one degree")
    verdicts = tuple(is_spr(b, v) for v in verts)
    return VertexCertificate(verdicts=verdicts, family_ok=all(v.is_spr for v in verdicts))


@dataclass(frozen=True)
class LpProbeResult:
    """Outcome of the sampled-LP existence probe for a numerator degree.

    "infeasible" certifies that even the finitely-sampled relaxation admits
    no coefficient vector, which soundly proves that no numerator of that
    degree works for all frequencies. "feasible" means the LP candidate also
    passed exact verification; "inconclusive-feasible" means it did not.
    """

    status: str  # feasible | infeasible | inconclusive-feasible
    candidate: Optional[Polynomial]
    numerator_degree: int
    frequency_samples: int
    margin: float

    def to_json(self) -> dict:
        cand = None
        if self.candidate is not None:
            cand = {
                "ascending": [dual(c) for c in self.candidate.coeffs],
                "text": self.candidate.to_text(),
            }
        return {
            "status": self.status,
            "candidate": cand,
            "numerator_degree": self.numerator_degree,
            "frequency_samples": self.frequency_samples,
            "margin": self.margin,
        }


def lp_probe(
    vertices: Sequence[Polynomial],
    numerator_degree: int,
    frequency_samples: int = 512,
) -> LpProbeResult:
    """Search for numerator coefficients positive against every vertex.

    Builds Re[c(jw_k) conj(a_i(jw_k))] >= margin over a logarithmic grid of
    w_k in [1e-3, 1e3] (margin relative to the constraint row norm; rows are
    normalized to unit norm, so the margin becomes absolute) and solves the
    LP in the numerator coefficients. Free variable scaling makes the margin
    harmless: any exact solution can be scaled to satisfy it, so LP
    infeasibility disproves existence even for the sampled grid.
    """
    verts = list(vertices)
    if not verts:
        raise InvalidInputError("lp_probe needs at least one vertex")
    degrees = {v.degree for v in verts}
    if len(degrees) != 1 or None in degrees:
        raise InvalidInputError("vertex polynomials must share one degree")
    common_degree = verts[0].degree
    if not 0 <= numerator_degree < common_degree:
        raise InvalidInputError("numerator degree must be below the denominator degree")
    if frequency_samples < numerator_degree + 1:
        raise InvalidInputError(
            "degenerate frequency grid: need at least numerator_degree + 1 samples"
        )
    for v in verts:
        if not hurwitz_stable(v):
            raise PreconditionError(f"lp_probe vertex is not Hurwitz: {v}")

    omegas = np.logspace(-3.0, 3.0, frequency_samples)
    unknowns = numerator_degree + 1
    rows = np.empty((len(verts) * frequency_samples, unknowns))
    i = 0
    for vertex in verts:
        for w in omegas:
            jw = 1j * w
            qbar = np.conjugate(vertex.value_complex(jw))
            row = np.array([(jw**k * qbar).real for k in range(unknowns)])
            rows[i] = row / np.linalg.norm(row)
            i += 1
    margins = np.full(rows.shape[0], LP_MARGIN)
    result = linprog(
        c=np.zeros(unknowns),
        A_ub=-rows,
        b_ub=-margins,
        bounds=[(None, None)] * unknowns,
        method="highs",
    )
    if result.status == 2:
        return LpProbeResult(
            status="infeasible",
            candidate=None,
            numerator_degree=numerator_degree,
            frequency_samples=frequency_samples,
            margin=LP_MARGIN,
        )
    if result.status != 0:
        raise InternalContradictionError(f"LP solver failed: {result.message}")
    candidate = Polynomial([Fraction(float(v)) for v in result.x])
    verified = not candidate.is_zero and all(
        positive_on_nonneg(real_part_numerator(candidate, v)) for v in verts
    )
    return LpProbeResult(
        status="feasible" if verified else "inconclusive-feasible",
        candidate=candidate,
        numerator_degree=numerator_degree,
        frequency_samples=frequency_samples,
        margin=LP_MARGIN,
    )

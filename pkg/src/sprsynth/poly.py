"""Exact real-coefficient polynomials and the verdicts built on them.

Coefficients are ``fractions.Fraction`` values stored in ascending order
(index k holds the coefficient of s^k); the human-facing text form is
descending, conversion happens only at the I/O boundary. Floats are rejected
at construction: callers that really mean an exact binary value convert
explicitly, decimal strings are parsed exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Union

from . import kernels
from .errors import InvalidInputError

CoefficientLike = Union[Fraction, int, str]


def as_fraction(value: CoefficientLike) -> Fraction:
    """Exact coercion: ints, Fractions and decimal/rational strings only."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidInputError(f"not an exact number: {value!r}") from exc
    if isinstance(value, float):
        raise InvalidInputError(
            f"refusing float {value!r}: pass a decimal string for an exact value "
            "or convert with Fraction(value) if the binary value is intended"
        )
    raise InvalidInputError(f"cannot interpret {value!r} as an exact number")


@dataclass(frozen=True)
class Polynomial:
    """Immutable univariate polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Iterable[CoefficientLike]):
        c = [as_fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> Optional[int]:
        """Index of the highest nonzero coefficient; None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            raise InvalidInputError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coefficient(self, power: int) -> Fraction:
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(
            [self.coefficient(k) - other.coefficient(k) for k in range(n)]
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def scale(self, factor: CoefficientLike) -> "Polynomial":
        f = as_fraction(factor)
        return Polynomial([f * c for c in self.coeffs])

    def value(self, x: CoefficientLike) -> Fraction:
        xf = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * xf + c
        return acc

    def value_complex(self, z: complex) -> complex:
        """Floating-point Horner evaluation, for oracles and the LP grid."""
        acc = 0j
        for c in reversed(self.coeffs):
            acc = acc * z + float(c)
        return acc

    def integer_coeffs(self) -> list[int]:
        """Coefficients scaled by the positive lcm of denominators."""
        scale = 1
        for c in self.coeffs:
            scale = lcm(scale, c.denominator)
        return [int(c * scale) for c in self.coeffs]

    def to_text(self, var: str = "s") -> str:
        return format_polynomial(self, var)

    def __str__(self) -> str:
        return self.to_text()

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls([])

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        return parse_polynomial(text)

    @classmethod
    def from_json_value(cls, value) -> "Polynomial":
        """Either descending text form or an ascending coefficient array."""
        if isinstance(value, str):
            return parse_polynomial(value)
        if isinstance(value, (list, tuple)):
            return cls(value)
        raise InvalidInputError(
            "polynomial must be a descending text form or an ascending array"
        )


@dataclass(frozen=True)
class EvenForm:
    """Even real part of p(jw) * conj(q(jw)) written in t = w^2.

    ``poly`` satisfies poly(w^2) = Re[p(jw) conj(q(jw))] for all real w,
    which is the numerator of Re[p(jw)/q(jw)] up to the positive factor
    |q(jw)|^2; ``p`` and ``q`` record the provenance.
    """

    poly: Polynomial
    p: Polynomial
    q: Polynomial

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self.poly.coeffs


# -- text form ---------------------------------------------------------------

_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        \(\s*(?P<pcoef>-?\d+(?:\.\d+)?(?:/\d+)?)\s*\)
        | (?P<coef>\d+(?:\.\d+)?(?:/\d+)?)
    )?
    \**
    (?:(?P<var>[A-Za-z])(?:\^(?P<pow>\d+))?)?
    """,
    re.VERBOSE,
)


def parse_polynomial(text: str) -> Polynomial:
    """Parse the descending human syntax, e.g. "s^4+89s^3+56s^2+88s+1".

    Decimal coefficients are parsed as exact rationals; "p/q" and "(p/q)"
    coefficient forms are accepted as well.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise InvalidInputError("empty polynomial text")
    powers: dict[int, Fraction] = {}
    var_seen = None
    pos = 0
    first = True
    while pos < len(compact):
        m = _TERM_RE.match(compact, pos)
        if m is None or m.end() == pos:
            raise InvalidInputError(f"cannot parse polynomial near {compact[pos:]!r}")
        sign, coef = m.group("sign"), m.group("pcoef") or m.group("coef")
        var, pow_ = m.group("var"), m.group("pow")
        if coef is None and var is None:
            raise InvalidInputError(f"cannot parse polynomial near {compact[pos:]!r}")
        if not first and sign is None:
            raise InvalidInputError(f"missing '+' or '-' before {compact[pos:]!r}")
        if var is not None:
            if var_seen is None:
                var_seen = var
            elif var != var_seen:
                raise InvalidInputError(f"mixed variables {var_seen!r} and {var!r}")
        value = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            value = -value
        k = 0
        if var is not None:
            k = int(pow_) if pow_ is not None else 1
        powers[k] = powers.get(k, Fraction(0)) + value
        pos = m.end()
        first = False
    coeffs = [powers.get(k, Fraction(0)) for k in range(max(powers) + 1)]
    return Polynomial(coeffs)


def fraction_to_decimal_text(f: Fraction) -> Optional[str]:
    """Exact decimal rendering when the denominator is of the form 2^a 5^b."""
    num, den = f.numerator, f.denominator
    if den == 1:
        return str(num)
    a = b = 0
    d = den
    while d % 2 == 0:
        d //= 2
        a += 1
    while d % 5 == 0:
        d //= 5
        b += 1
    if d != 1:
        return None
    m = max(a, b)
    digits = abs(num) * 10**m // den
    text = str(digits).rjust(m + 1, "0")
    sign = "-" if num < 0 else ""
    return f"{sign}{text[:-m]}.{text[-m:]}"


def _format_magnitude(mag: Fraction, attached: bool) -> str:
    dec = fraction_to_decimal_text(mag)
    if dec is not None:
        return dec
    return f"({mag})" if attached else str(mag)


def format_polynomial(p: Polynomial, var: str = "s") -> str:
    """Descending text form; exact decimals where possible, (p/q) otherwise."""
    if p.is_zero:
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("" if not parts else "+")
        mag = abs(c)
        if k == 0:
            body = _format_magnitude(mag, attached=False)
        else:
            head = "" if mag == 1 else _format_magnitude(mag, attached=True)
            body = f"{head}{var}" if k == 1 else f"{head}{var}^{k}"
        parts.append(sign + body)
    return "".join(parts)


# -- core verdicts -----------------------------------------------------------


def hurwitz_stable(p: Polynomial) -> bool:
    """Exact Routh decision: all roots of p strictly in the left half-plane.

    A zero in the first column of the Routh table (marginal stability or a
    degenerate row) yields False.
    """
    if p.is_zero or p.degree < 1:
        raise InvalidInputError("Hurwitz stability is defined for degree >= 1")
    return kernels.is_hurwitz(p.integer_coeffs())


def real_part_numerator(p: Polynomial, q: Polynomial) -> EvenForm:
    """The even polynomial N with N(w^2) = Re[p(jw) * conj(q(jw))].

    Since |q(jw)|^2 > 0 away from roots, N is exactly the numerator of
    Re[p(jw)/q(jw)]. N is bilinear in (p, q); its degree in t is at most
    ceil((deg p + deg q) / 2).
    """
    if p.is_zero or q.is_zero:
        raise InvalidInputError("real part numerator needs nonzero polynomials")
    dp, dq = p.degree, q.degree
    out = [Fraction(0)] * ((dp + dq) // 2 + 1)
    for k in range(dp + 1):
        pk = p.coeffs[k]
        if pk == 0:
            continue
        # Re[j^(k-l)] is 0 for odd k-l and (-1)^((k-l)/2) for even k-l.
        for l in range((k % 2), dq + 1, 2):
            ql = q.coeffs[l]
            if ql == 0:
                continue
            term = pk * ql
            if ((k - l) // 2) & 1:
                term = -term
            out[(k + l) // 2] += term
    return EvenForm(poly=Polynomial(out), p=p, q=q)


def _even_form_poly(n: Union[EvenForm, Polynomial]) -> Polynomial:
    return n.poly if isinstance(n, EvenForm) else n


def positive_on_nonneg(n: Union[EvenForm, Polynomial]) -> bool:
    """Exact decision of N(t) > 0 for all t in [0, +inf).

    Sign checks at t = 0 and at +inf plus a Sturm-sequence count showing no
    real root in (0, +inf); a root of any multiplicity (including tangential
    even-order contact) violates strict positivity and yields False.
    """
    poly = _even_form_poly(n)
    if poly.is_zero:
        raise InvalidInputError("positivity of the zero polynomial is undefined")
    return kernels.positive_on_nonneg(poly.integer_coeffs())


def nonpositive_witness(n: Union[EvenForm, Polynomial]) -> Optional[Fraction]:
    """A rational t0 >= 0 with N(t0) <= 0, given positivity fails.

    Returns None only when every nonpositive value of N on [0, inf) sits at
    an irrational tangential root, in which case no rational witness exists.
    """
    poly = _even_form_poly(n)
    c = kernels.normalized(poly.integer_coeffs())
    if not c:
        raise InvalidInputError("the zero polynomial has no positivity witness")
    if c[0] <= 0:
        return Fraction(0)
    lead = c[-1]
    bound = 1 + max(abs(x) for x in c) // abs(lead) + 1
    if lead < 0:
        # beyond every root the sign equals the sign of the leading coefficient
        return Fraction(bound)
    chain = kernels.sturm_chain(c)
    if kernels.count_roots_above(chain, 0, 1) == 0:
        raise InvalidInputError("polynomial is positive on [0, inf); no witness")
    lo, hi = Fraction(0), Fraction(bound)
    for _ in range(220):
        mid = (lo + hi) / 2
        if kernels.sign_at(c, mid.numerator, mid.denominator) <= 0:
            return mid
        in_left = kernels.count_roots_halfopen(
            chain, lo.numerator, lo.denominator, mid.numerator, mid.denominator
        )
        if in_left > 0:
            hi = mid
        else:
            lo = mid
    return None

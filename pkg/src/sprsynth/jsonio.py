"""Dual-rendered JSON numbers: exact rational string plus decimal approximation.

Exactness lives in the "rational" field; the "decimal" field is for humans
and is never read back.
"""

from fractions import Fraction

from .errors import InvalidInputError


def dual(value: Fraction) -> dict:
    return {"rational": str(value), "decimal": float(value)}


def fraction_from(obj) -> Fraction:
    if isinstance(obj, dict) and "rational" in obj:
        return Fraction(obj["rational"])
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, int):
        return Fraction(obj)
    if isinstance(obj, Fraction):
        return obj
    raise InvalidInputError(f"expected an exact number, got {obj!r}")

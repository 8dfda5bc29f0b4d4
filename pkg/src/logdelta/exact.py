"""Exact rationals and affine forms in one boundary parameter.

Everything in the package is computed with :class:`fractions.Fraction`;
no floating point value is ever produced.  An :class:`AffineForm` is the
function ``constant + slope * p`` of a single parameter ``p`` (the boundary
coefficient ``t`` or the numerically trivial value ``b``).  Which parameter a
form refers to is decided by the caller.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]


def rat(value: RationalLike) -> Fraction:
    """Coerce ``value`` to a reduced Fraction.

    Strings must be of the form ``"p"`` or ``"p/q"``; decimal notation is
    rejected so that exactness is never lost on input.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not re.fullmatch(r"[+-]?\d+(/\d+)?", text):
            raise ValueError(f"not a rational of the form p/q: {value!r}")
        result = Fraction(text)
        return result
    raise TypeError(f"cannot interpret {value!r} as a rational")


def fmt_rat(value: Fraction) -> str:
    """Canonical text: ``"p/q"``, or ``"p"`` when the denominator is 1."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class AffineForm:
    constant: Fraction = Fraction(0)
    slope: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "constant", rat(self.constant))
        object.__setattr__(self, "slope", rat(self.slope))

    @classmethod
    def const(cls, value: RationalLike) -> "AffineForm":
        return cls(rat(value), Fraction(0))

    @classmethod
    def param(cls) -> "AffineForm":
        return cls(Fraction(0), Fraction(1))

    @classmethod
    def coerce(cls, value) -> "AffineForm":
        if isinstance(value, AffineForm):
            return value
        return cls.const(value)

    @property
    def is_constant(self) -> bool:
        return self.slope == 0

    def __call__(self, p: RationalLike) -> Fraction:
        return af_eval(self, p)

    def __add__(self, other) -> "AffineForm":
        other = AffineForm.coerce(other)
        return AffineForm(self.constant + other.constant, self.slope + other.slope)

    __radd__ = __add__

    def __neg__(self) -> "AffineForm":
        return AffineForm(-self.constant, -self.slope)

    def __sub__(self, other) -> "AffineForm":
        return self + (-AffineForm.coerce(other))

    def __rsub__(self, other) -> "AffineForm":
        return AffineForm.coerce(other) - self

    def __mul__(self, scalar) -> "AffineForm":
        if isinstance(scalar, AffineForm):
            if scalar.slope != 0 and self.slope != 0:
                raise TypeError("product of two non-constant affine forms is not affine")
            if scalar.slope == 0:
                scalar = scalar.constant
            else:
                return scalar * self.constant
        scalar = rat(scalar)
        return AffineForm(self.constant * scalar, self.slope * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "AffineForm":
        scalar = rat(scalar)
        return AffineForm(self.constant / scalar, self.slope / scalar)

    def to_text(self, symbol: str = "t") -> str:
        """Serialized as ``"u + v*t"``; constant forms serialize as ``"u"``."""
        if self.slope == 0:
            return fmt_rat(self.constant)
        return f"{fmt_rat(self.constant)} + {fmt_rat(self.slope)}*{symbol}"

    def pretty(self, symbol: str = "b") -> str:
        """Human form in the style of diagram labels, e.g. ``13-15b``."""
        if self.slope == 0:
            return fmt_rat(self.constant)
        coef = self.slope
        if coef == 1:
            tail = symbol
        elif coef == -1:
            tail = "-" + symbol
        else:
            tail = fmt_rat(coef) + symbol
        if self.constant == 0:
            return tail
        sign = "" if tail.startswith("-") else "+"
        return f"{fmt_rat(self.constant)}{sign}{tail}"

    def __str__(self) -> str:
        return self.to_text()


class _Marker:
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name


ALL_VALUES = _Marker("AllValues")
NO_SOLUTION = _Marker("NoSolution")


def af_eval(f: AffineForm, p: RationalLike) -> Fraction:
    return f.constant + f.slope * rat(p)


def af_solve_zero(f: AffineForm):
    """Root of ``f``: a Fraction, :data:`ALL_VALUES` or :data:`NO_SOLUTION`."""
    if f.slope != 0:
        return -f.constant / f.slope
    if f.constant == 0:
        return ALL_VALUES
    return NO_SOLUTION


_TERM = re.compile(r"([+-]?)\s*(\d+(?:/\d+)?)?\s*\*?\s*([a-z])?")


def parse_form(text: str, symbols: str = "tbp") -> AffineForm:
    """Parse an affine form such as ``"7/3-2b"``, ``"13 - 15*b"``,
    ``"6(1-b)"`` or the canonical ``"3 + -3*t"``.
    """
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty affine form")
    m = re.fullmatch(r"(\d+(?:/\d+)?)\((.*)\)", src)
    if m:
        return parse_form(m.group(2), symbols) * rat(m.group(1))
    src = src.replace("+-", "-").replace("--", "+")
    pos = 0
    total = AffineForm()
    while pos < len(src):
        m = _TERM.match(src, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse affine form {text!r}")
        sign, number, sym = m.groups()
        if number is None and sym is None:
            raise ValueError(f"cannot parse affine form {text!r}")
        if sym is not None and sym not in symbols:
            raise ValueError(f"unknown parameter symbol {sym!r} in {text!r}")
        value = rat(number) if number is not None else Fraction(1)
        if sign == "-":
            value = -value
        total = total + (AffineForm(0, value) if sym else AffineForm(value, 0))
        pos = m.end()
    return total

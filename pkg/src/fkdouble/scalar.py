"""Exact arithmetic in the degree-3 cyclotomic field.

Every scalar in this package is an element a + b*z of Q(z), where z is a
fixed primitive cube root of unity (z^2 + z + 1 = 0).  Elements are stored
as two ``fractions.Fraction`` values, so all arithmetic is exact and
arbitrary precision; z^2 is always normalised to -1 - z.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

_Rat = Union[int, Fraction]


class Cyc:
    """An element a + b*z of Q(z), z a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a: _Rat = 0, b: _Rat = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("Cyc values are immutable")

    # -- ring structure ------------------------------------------------

    def __add__(self, other: "Cyc | _Rat") -> "Cyc":
        other = _coerce(other)
        return Cyc(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "Cyc":
        return Cyc(-self.a, -self.b)

    def __sub__(self, other: "Cyc | _Rat") -> "Cyc":
        other = _coerce(other)
        return Cyc(self.a - other.a, self.b - other.b)

    def __rsub__(self, other: "Cyc | _Rat") -> "Cyc":
        return _coerce(other) - self

    def __mul__(self, other: "Cyc | _Rat") -> "Cyc":
        other = _coerce(other)
        # (a+bz)(c+dz) = ac + (ad+bc) z + bd z^2,  z^2 = -1-z
        bd = self.b * other.b
        return Cyc(self.a * other.a - bd, self.a * other.b + self.b * other.a - bd)

    __rmul__ = __mul__

    def inv(self) -> "Cyc":
        """Multiplicative inverse; raises ZeroDivisionError on zero."""
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inversion of zero in Q(z)")
        # conjugate a + b z^2 = (a-b) - b z, and x * conj(x) = norm(x)
        return Cyc((self.a - self.b) / n, -self.b / n)

    def __truediv__(self, other: "Cyc | _Rat") -> "Cyc":
        return self * _coerce(other).inv()

    def __rtruediv__(self, other: "Cyc | _Rat") -> "Cyc":
        return _coerce(other) * self.inv()

    def __pow__(self, n: int) -> "Cyc":
        if n < 0:
            return self.inv() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates / hashing ------------------------------------------

    def norm(self) -> Fraction:
        """Field norm a^2 - a*b + b^2; zero exactly on the zero element."""
        return self.a * self.a - self.a * self.b + self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Cyc(other)
        if not isinstance(other, Cyc):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    # -- rendering / parsing -------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return _fmt_rat(self.a)
        zpart = "z" if abs(self.b) == 1 else f"{_fmt_rat(abs(self.b))}*z"
        if self.a == 0:
            return zpart if self.b > 0 else "-" + zpart
        sign = "+" if self.b > 0 else "-"
        return f"{_fmt_rat(self.a)} {sign} {zpart}"

    def __repr__(self) -> str:
        return f"Cyc({self})"

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b)}

    @staticmethod
    def from_json(obj: dict) -> "Cyc":
        return Cyc(Fraction(obj["a"]), Fraction(obj["b"]))


def _coerce(x) -> Cyc:
    if isinstance(x, Cyc):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyc(x)
    raise TypeError(f"cannot coerce {type(x).__name__} into Q(z)")


def _fmt_rat(r: Fraction) -> str:
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


ZERO = Cyc(0)
ONE = Cyc(1)
ZETA = Cyc(0, 1)


def zeta_pow(k: int) -> Cyc:
    """z^k for any integer k (reduced mod 3)."""
    k %= 3
    if k == 0:
        return ONE
    if k == 1:
        return ZETA
    return Cyc(-1, -1)


_TERM = re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*\*\s*z   # coefficient times z
          | (?P<lone>z)                       # bare z
          | (?P<rat>\d+(?:/\d+)?)             # rational constant
        )\s*""",
    re.VERBOSE,
)


def parse(text: str) -> Cyc:
    """Parse the textual rendering produced by ``str(Cyc)``.

    Grammar: sum of terms, each a rational ``p/q``, ``z``, or ``p/q*z``,
    joined by ``+``/``-``.  Raises ValueError on anything else.
    """
    pos, total = 0, Cyc(0)
    text = text.strip()
    if not text:
        raise ValueError("empty scalar")
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.start() != pos:
            raise ValueError(f"bad scalar syntax at {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("lone"):
            total = total + Cyc(0, sign)
        elif m.group("coef"):
            total = total + Cyc(0, sign * Fraction(m.group("coef")))
        else:
            total = total + Cyc(sign * Fraction(m.group("rat")))
        pos = m.end()
    return total

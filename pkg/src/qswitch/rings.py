"""Exact scalar rings: rational quaternions and Gaussian rationals.

Rationals are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]


class NonUnitError(ArithmeticError):
    """Raised when an inverse is requested for a non-unit."""


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class Quaternion:
    """Quaternion ``w + x i + y j + z k`` with rational coefficients."""

    __slots__ = ("w", "x", "y", "z", "_hash")

    def __init__(self, w: Scalar = 0, x: Scalar = 0, y: Scalar = 0, z: Scalar = 0):
        object.__setattr__(self, "w", _frac(w))
        object.__setattr__(self, "x", _frac(x))
        object.__setattr__(self, "y", _frac(y))
        object.__setattr__(self, "z", _frac(z))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    def __reduce__(self):
        return (Quaternion, (self.w, self.x, self.y, self.z))

    @classmethod
    def one(cls) -> "Quaternion":
        return cls(1)

    @classmethod
    def zero(cls) -> "Quaternion":
        return cls(0)

    @classmethod
    def parse(cls, text: str) -> "Quaternion":
        return parse_quaternion(text)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    # ring structure -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __sub__(self, other):
        if isinstance(other, (Quaternion, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a1, b1, c1, d1 = self.w, self.x, self.y, self.z
            a2, b2, c2, d2 = other.w, other.x, other.y, other.z
            return Quaternion(
                a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
                a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
                a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
                a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
            )
        if isinstance(other, (int, Fraction)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise NonUnitError("division by zero")
            return self * (1 / _frac(other))
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self) -> Fraction:
        """Squared norm ``w^2 + x^2 + y^2 + z^2``."""
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def real(self) -> Fraction:
        return self.w

    def pure(self) -> "Quaternion":
        return Quaternion(0, self.x, self.y, self.z)

    def is_real(self) -> bool:
        return not (self.x or self.y or self.z)

    def is_unit(self) -> bool:
        return bool(self)

    def inverse(self) -> "Quaternion":
        n = self.norm2()
        if n == 0:
            raise NonUnitError("zero quaternion is not a unit")
        return self.conjugate() * (1 / n)

    def __bool__(self):
        return bool(self.w or self.x or self.y or self.z)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return (self.w, self.x, self.y, self.z) == (other.w, other.x, other.y, other.z)
        if isinstance(other, (int, Fraction)):
            return self.is_real() and self.w == other
        return NotImplemented

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.w, self.x, self.y, self.z)) if not self.is_real() else hash(self.w)
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_quaternion(self)

    def __repr__(self):
        return f"Quaternion({format_quaternion(self)!r})"


I = Quaternion(0, 1)
J = Quaternion(0, 0, 1)
K = Quaternion(0, 0, 0, 1)


def format_quaternion(q: Quaternion) -> str:
    parts = []
    for coef, letter in zip(q.coefficients(), ("", "i", "j", "k")):
        if coef == 0:
            continue
        sign = "-" if coef < 0 else "+"
        mag = abs(coef)
        if letter and mag == 1:
            body = letter
        else:
            body = format_rational(mag) + letter
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<num>\d+(?:/\d+)?)?\s*(?P<unit>[ijk])(?:/(?P<den>\d+)|(?P<num2>\d+)/(?P<den2>\d+))?
          | (?P<const>\d+(?:/\d+)?)
        )""",
    re.VERBOSE,
)


def parse_quaternion(text: str) -> Quaternion:
    """Parse literals such as ``1+i``, ``-1/2+1/2i+1/2j-1/2k``, ``i/3`` or ``j2/3``."""
    s = text.strip().replace("−", "-")
    if not s:
        raise ValueError("empty quaternion literal")
    coeffs = {"": Fraction(0), "i": Fraction(0), "j": Fraction(0), "k": Fraction(0)}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse quaternion literal {text!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing sign between terms in {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("const") is not None:
            coeffs[""] += sign * Fraction(m.group("const"))
        else:
            value = Fraction(m.group("num")) if m.group("num") else Fraction(1)
            if m.group("den"):
                value /= int(m.group("den"))
            if m.group("num2"):
                if m.group("num"):
                    raise ValueError(f"ambiguous coefficient in {text!r}")
                value = Fraction(int(m.group("num2")), int(m.group("den2")))
            coeffs[m.group("unit")] += sign * value
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        first = False
    return Quaternion(coeffs[""], coeffs["i"], coeffs["j"], coeffs["k"])


class GaussianRational:
    """Complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Scalar = 0, im: Scalar = 0):
        object.__setattr__(self, "re", _frac(re))
        object.__setattr__(self, "im", _frac(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (GaussianRational, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm2()
        if n == 0:
            raise NonUnitError("zero is not a unit")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, GaussianRational):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re / other, self.im / other)
        return NotImplemented

    def __bool__(self):
        return bool(self.re or self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"


def psi(q: Quaternion) -> list[list[GaussianRational]]:
    """Complex 2x2 image of ``q = a + b j``: ``[[a, b], [-conj(b), conj(a)]]``."""
    a = GaussianRational(q.w, q.x)
    b = GaussianRational(q.y, q.z)
    return [[a, b], [-b.conjugate(), a.conjugate()]]

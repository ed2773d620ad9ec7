"""Sparse Laurent polynomials in one or two central variables.

Coefficients may be ``Fraction``, :class:`~qswitch.rings.GaussianRational`
or :class:`~qswitch.rings.Quaternion`; the variables commute with every
coefficient, so products keep coefficient order and add exponents.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from .rings import NonUnitError, Quaternion, format_quaternion, format_rational

Exponent = tuple[int, ...]


def _is_zero(c) -> bool:
    return not c


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_e * vars^e``."""

    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | None = None, variables: tuple[str, ...] = ("t",)):
        clean = {}
        if terms:
            for e, c in terms.items():
                if len(e) != len(variables):
                    raise ValueError(f"exponent {e} does not match variables {variables}")
                if not _is_zero(c):
                    if isinstance(c, int):
                        c = Fraction(c)
                    clean[tuple(e)] = c
        object.__setattr__(self, "variables", tuple(variables))
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __reduce__(self):
        return (LaurentPoly, (self.terms, self.variables))

    # construction -----------------------------------------------------------

    @classmethod
    def constant(cls, c, variables: tuple[str, ...] = ("t",)) -> "LaurentPoly":
        return cls({(0,) * len(variables): c}, variables)

    @classmethod
    def monomial(cls, exps: Exponent, c=Fraction(1), variables: tuple[str, ...] = ("t",)) -> "LaurentPoly":
        return cls({tuple(exps): c}, variables)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable, low: int = 0, var: str = "t") -> "LaurentPoly":
        """One-variable polynomial from ascending coefficients starting at ``var^low``."""
        return cls({(low + n,): c for n, c in enumerate(coeffs)}, (var,))

    def zero(self) -> "LaurentPoly":
        return LaurentPoly({}, self.variables)

    def one(self) -> "LaurentPoly":
        c = next(iter(self.terms.values()), Fraction(1))
        one = Quaternion.one() if isinstance(c, Quaternion) else Fraction(1)
        return LaurentPoly.constant(one, self.variables)

    # inspection ---------------------------------------------------------------

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.nvars}

    def constant_term(self):
        return self.terms.get((0,) * self.nvars, 0)

    def coefficient(self, exps) -> object:
        if isinstance(exps, int):
            exps = (exps,)
        return self.terms.get(tuple(exps), 0)

    def min_exponents(self) -> Exponent:
        return tuple(min(e[v] for e in self.terms) for v in range(self.nvars))

    def max_exponents(self) -> Exponent:
        return tuple(max(e[v] for e in self.terms) for v in range(self.nvars))

    def is_unit(self) -> bool:
        if len(self.terms) != 1:
            return False
        (c,) = self.terms.values()
        return bool(c)

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NonUnitError(f"{self} is not a unit of the Laurent ring")
        ((e, c),) = self.terms.items()
        inv = c.inverse() if hasattr(c, "inverse") else 1 / Fraction(c)
        return LaurentPoly({tuple(-x for x in e): inv}, self.variables)

    def map_coefficients(self, f) -> "LaurentPoly":
        return LaurentPoly({e: f(c) for e, c in self.terms.items()}, self.variables)

    def conjugate(self) -> "LaurentPoly":
        return self.map_coefficients(lambda c: c.conjugate() if hasattr(c, "conjugate") else c)

    def shift(self, exps: Exponent) -> "LaurentPoly":
        return LaurentPoly({tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()}, self.variables)

    def substitute(self, values: Mapping[str, object]):
        """Evaluate at nonzero scalar values of every variable."""
        total = 0
        for e, c in self.terms.items():
            m = Fraction(1)
            for v, k in zip(self.variables, e):
                m *= Fraction(values[v]) ** k
            total = c * m + total
        return total

    # arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                if not other.terms:
                    return LaurentPoly({}, self.variables)
                if not self.terms:
                    return other
                raise ValueError(f"variable mismatch {self.variables} vs {other.variables}")
            return other
        if isinstance(other, (int, Fraction, Quaternion)) or hasattr(other, "conjugate"):
            return LaurentPoly.constant(other, self.variables)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return LaurentPoly(terms, self.variables if self.terms or not o.terms else o.variables)

    def __radd__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + self

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()}, self.variables)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                p = c1 * c2
                terms[e] = terms[e] + p if e in terms else p
        return LaurentPoly(terms, self.variables if self.terms else o.variables)

    def __rmul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(frozenset(self.terms.items()))
            object.__setattr__(self, "_hash", h)
        return h

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r}, variables={self.variables})"


T_VARS = ("t",)
LM_VARS = ("l", "m")


def t_var() -> LaurentPoly:
    return LaurentPoly.monomial((1,), Fraction(1), T_VARS)


def lm_vars() -> tuple[LaurentPoly, LaurentPoly]:
    return (LaurentPoly.monomial((1, 0), Fraction(1), LM_VARS), LaurentPoly.monomial((0, 1), Fraction(1), LM_VARS))


# printing and parsing -------------------------------------------------------


def _format_coeff(c) -> tuple[str, str]:
    """Sign and magnitude text for a coefficient."""
    if isinstance(c, Quaternion):
        body = format_quaternion(c)
        if c.is_real():
            return ("-" if c.w < 0 else "+", format_rational(abs(c.w)))
        return "+", f"({body})"
    if isinstance(c, Fraction):
        return ("-" if c < 0 else "+", format_rational(abs(c)))
    re_, im_ = c.re, c.im
    if im_ == 0:
        return ("-" if re_ < 0 else "+", format_rational(abs(re_)))
    return "+", f"({format_rational(re_)}{'+' if im_ >= 0 else '-'}{format_rational(abs(im_))}i)"


def _format_monomial(e: Exponent, variables) -> str:
    parts = []
    for v, k in zip(variables, e):
        if k == 0:
            continue
        parts.append(v if k == 1 else f"{v}^{k}")
    return "*".join(parts)


def format_laurent(p: LaurentPoly) -> str:
    """Descending (lex) order, caret exponents: ``2t^4+5t^2+2``, ``l*m-m-1``."""
    if not p.terms:
        return "0"
    out = ""
    for e in sorted(p.terms, reverse=True):
        sign, mag = _format_coeff(p.terms[e])
        mono = _format_monomial(e, p.variables)
        if mono:
            sep = "" if p.nvars == 1 else "*"
            body = mono if mag == "1" else f"{mag}{sep}{mono}"
        else:
            body = mag
        if not out:
            out = ("-" if sign == "-" else "") + body
        else:
            out += sign + body
    return out


def parse_laurent(text: str, variables: tuple[str, ...] = T_VARS) -> LaurentPoly:
    """Parse rational Laurent polynomials like ``3/4t^4+3/2t^3+1`` or ``1+m-l*m``."""
    s = text.replace(" ", "").replace("−", "-").replace("λ", "l").replace("μ", "m")
    if not s:
        raise ValueError("empty polynomial")
    var_pat = "|".join(re.escape(v) for v in variables)
    term_re = re.compile(
        rf"([+-]?)(\d+(?:/\d+)?)?\*?((?:(?:{var_pat})(?:\^-?\d+)?\*?)*)"
    )
    mono_re = re.compile(rf"({var_pat})(?:\^(-?\d+))?")
    terms: dict = {}
    pos = 0
    while pos < len(s):
        m = term_re.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse polynomial {text!r} at {s[pos:]!r}")
        coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
        if m.group(1) == "-":
            coef = -coef
        exps = [0] * len(variables)
        for mm in mono_re.finditer(m.group(3) or ""):
            exps[variables.index(mm.group(1))] += int(mm.group(2)) if mm.group(2) else 1
        e = tuple(exps)
        terms[e] = terms.get(e, 0) + coef
        pos = m.end()
    return LaurentPoly(terms, variables)


# dense univariate helpers over Q ------------------------------------------------
# A dense polynomial is a list of Fractions (or ints), ascending, no trailing zeros.


def _trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a: list, b: list) -> tuple[list, list]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = Fraction(b[-1])
    while len(a) >= len(b) and a:
        f = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = f
        for k, bc in enumerate(b):
            a[shift + k] -= f * bc
        a.pop()
        _trim(a)
    return _trim(q), a


def _content_q(a: list) -> Fraction:
    """Positive rational content: gcd of numerators over lcm of denominators."""
    num = 0
    den = 1
    for c in a:
        c = Fraction(c)
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    return Fraction(num, den)


def _primitive(a: list) -> list:
    if not a:
        return []
    c = _content_q(a)
    out = [Fraction(x) / c for x in a]
    if out[-1] < 0:
        out = [-x for x in out]
    return out


def _upoly_gcd(a: list, b: list) -> list:
    """Primitive integer gcd with positive leading coefficient."""
    a, b = _primitive(_trim(list(a))), _primitive(_trim(list(b)))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, _primitive(r)
    return a


def _exact_div_dense(a: list, b: list) -> list:
    q, r = _poly_divmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


# canonical form -----------------------------------------------------------------


@dataclass(frozen=True)
class UnitRecord:
    """``canonical = sign * scale * vars^shift * original``."""

    sign: int
    shift: Exponent
    scale: Fraction


def canonical_form(p: LaurentPoly) -> tuple[LaurentPoly, UnitRecord]:
    """Normalize a rational Laurent polynomial up to ``±vars^n`` and a positive rational.

    The result has lowest exponents zero, coprime integer coefficients, and a
    positive constant term (one variable) or positive lex-leading coefficient
    (two variables).
    """
    if not p.terms:
        return p, UnitRecord(1, (0,) * p.nvars, Fraction(1))
    for c in p.terms.values():
        if not isinstance(c, Fraction):
            raise TypeError("canonical_form expects rational coefficients")
    mins = p.min_exponents()
    shift = tuple(-m for m in mins)
    q = p.shift(shift)
    if q.nvars == 1:
        lead = q.terms[(0,)]
    else:
        lead = q.terms[max(q.terms)]
    sign = 1 if lead > 0 else -1
    num = 0
    den = 1
    for c in q.terms.values():
        num = gcd(num, c.numerator)
        den = lcm(den, c.denominator)
    scale = Fraction(den, num)
    out = LaurentPoly({e: c * scale * sign for e, c in q.terms.items()}, p.variables)
    return out, UnitRecord(sign, shift, scale)


def canonical(p: LaurentPoly) -> LaurentPoly:
    return canonical_form(p)[0]


def rational_content(p: LaurentPoly) -> Fraction:
    """Positive rational content of a rational-coefficient polynomial (0 for 0)."""
    return _content_q(list(p.terms.values())) if p.terms else Fraction(0)


def _to_dense(p: LaurentPoly) -> list:
    lo = p.min_exponents()[0]
    hi = p.max_exponents()[0]
    out = [Fraction(0)] * (hi - lo + 1)
    for (e,), c in p.terms.items():
        out[e - lo] = c
    return out


def laurent_gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Canonical gcd of one-variable rational Laurent polynomials (gcd of zeros is 0)."""
    polys = list(polys)
    if not polys:
        raise ValueError("laurent_gcd needs at least one polynomial")
    var = polys[0].variables
    g: list = []
    for p in polys:
        if not p.terms:
            continue
        d = _to_dense(p)
        g = _primitive(d) if not g else _upoly_gcd(g, d)
        if len(g) == 1:
            break
    if not g:
        return LaurentPoly({}, var)
    return canonical(LaurentPoly.from_coeffs(g, 0, var[0]))


def divides(d: LaurentPoly, p: LaurentPoly) -> bool:
    """Exact divisibility of rational Laurent polynomials (one or two variables)."""
    if not p.terms:
        return True
    if not d.terms:
        return False
    try:
        laurent_exact_div(p, d)
    except ArithmeticError:
        return False
    return True


def laurent_exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Quotient ``p / d`` in the Laurent ring; raises ``ArithmeticError`` if inexact."""
    if not d.terms:
        raise ZeroDivisionError("division by zero polynomial")
    if p.nvars == 1:
        dp = _to_dense(p) if p.terms else []
        dd = _to_dense(d)
        q = _exact_div_dense(dp, dd)
        low = (p.min_exponents()[0] if p.terms else 0) - d.min_exponents()[0]
        return LaurentPoly.from_coeffs(q, low, p.variables[0])
    return _multi_exact_div(p, d)


def _multi_exact_div(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    if not p.terms:
        return LaurentPoly({}, p.variables)
    pl, dl = p.min_exponents(), d.min_exponents()
    r = _to_rec(p)
    dr = _to_rec(d)
    ddeg = max(dr)
    dlead = dr[ddeg]
    quot: dict[int, list] = {}
    while r and max(r) >= ddeg:
        top = max(r)
        qc = _exact_div_dense(r[top], dlead)
        shift = top - ddeg
        quot[shift] = qc
        for k, v in dr.items():
            kk = k + shift
            nv = _dense_sub(r.get(kk, []), _dense_mul(v, qc))
            if nv:
                r[kk] = nv
            else:
                r.pop(kk, None)
    if r:
        raise ArithmeticError("inexact multivariate division")
    terms = {}
    for b, coeff in quot.items():
        for a, c in enumerate(coeff):
            if c:
                terms[(a + pl[0] - dl[0], b + pl[1] - dl[1])] = c
    return LaurentPoly(terms, p.variables)


# two-variable gcd --------------------------------------------------------------
# Q[l, m]: represent as dict m-exponent -> dense list in l.


def _to_rec(p: LaurentPoly) -> dict[int, list]:
    lo = p.min_exponents()
    rec: dict[int, dict[int, Fraction]] = {}
    for (a, b), c in p.terms.items():
        rec.setdefault(b - lo[1], {})[a - lo[0]] = c
    out = {}
    for b, row in rec.items():
        dense = [Fraction(0)] * (max(row) + 1)
        for a, c in row.items():
            dense[a] = c
        out[b] = dense
    return out


def _rec_content(rec: dict[int, list]) -> list:
    g: list = []
    for coeff in rec.values():
        g = _primitive(coeff) if not g else _upoly_gcd(g, coeff)
        if len(g) == 1:
            break
    return g


def _rec_div_content(rec: dict[int, list], c: list) -> dict[int, list]:
    return {b: _exact_div_dense(v, c) for b, v in rec.items()}


def _dense_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _dense_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [Fraction(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return _trim(out)


def _rec_prem(f: dict[int, list], g: dict[int, list]) -> dict[int, list]:
    """Pseudo-remainder of f by g as polynomials in m over Q[l]."""
    dg = max(g)
    lg = g[dg]
    r = {k: list(v) for k, v in f.items()}
    while r and max(r) >= dg:
        dr = max(r)
        lr = r[dr]
        shift = dr - dg
        new: dict[int, list] = {}
        for k, v in r.items():
            new[k] = _dense_mul(v, lg)
        for k, v in g.items():
            kk = k + shift
            new[kk] = _dense_sub(new.get(kk, []), _dense_mul(v, lr))
        r = {k: v for k, v in new.items() if v}
    return r


def _rec_primitive(rec: dict[int, list]) -> dict[int, list]:
    c = _rec_content(rec)
    out = _rec_div_content(rec, c)
    # sign: positive lex-leading (highest l-degree within highest m-degree)
    top = out[max(out)]
    if top[-1] < 0:
        out = {k: [-x for x in v] for k, v in out.items()}
    return out


def laurent2_gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Canonical gcd in Q[l^±, m^±] by content / primitive-part recursion on m."""
    polys = [p for p in polys]
    if not polys:
        raise ValueError("laurent2_gcd needs at least one polynomial")
    variables = polys[0].variables
    nonzero = [p for p in polys if p.terms]
    if not nonzero:
        return LaurentPoly({}, variables)
    g_rec = None
    g_cont: list = []
    for p in nonzero:
        rec = _to_rec(p)
        cont = _rec_content(rec)
        prim = _rec_primitive(_rec_div_content(rec, cont))
        if g_rec is None:
            g_rec, g_cont = prim, cont
            continue
        g_cont = _upoly_gcd(g_cont, cont)
        a, b = g_rec, prim
        if max(a) < max(b):
            a, b = b, a
        while b and max(b) > 0:
            r = _rec_prem(a, b)
            a = b
            b = _rec_primitive(r) if r else {}
        if b:
            # b is free of m: its gcd with the primitive a is 1
            a = {0: [Fraction(1)]}
        g_rec = _rec_primitive(a)
        if max(g_rec) == 0 and len(g_rec[0]) == 1 and len(g_cont) == 1:
            break
    terms = {}
    for b, coeff in g_rec.items():
        for a, c in enumerate(_dense_mul(coeff, g_cont)):
            if c:
                terms[(a, b)] = c
    return canonical(LaurentPoly(terms, variables))


def content_gcd(polys: Iterable[LaurentPoly]) -> Fraction:
    """gcd of rational contents (numerator gcd over denominator lcm)."""
    num, den = 0, 1
    for p in polys:
        if p.terms:
            c = rational_content(p)
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
    return Fraction(num, den)


def polynomial_gcd(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    """Dispatch to the one- or two-variable canonical gcd."""
    polys = list(polys)
    if polys and polys[0].nvars == 2:
        return laurent2_gcd(polys)
    return laurent_gcd(polys)

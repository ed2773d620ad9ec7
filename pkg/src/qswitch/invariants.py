"""Study determinants, elementary ideals and the ideal polynomials Δ_i."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .laurent import (
    LM_VARS,
    T_VARS,
    LaurentPoly,
    canonical,
    content_gcd,
    divides,
    laurent_exact_div,
    polynomial_gcd,
)
from .rings import Quaternion
from .switch import Matrix

RING_QUATERNIONIC = "quaternionic-t"
RING_ALEXANDER = "alexander-lm"


class StudyDeterminantError(ArithmeticError):
    """The complex determinant of a quaternionic matrix had an imaginary part."""


# generic fraction-free elimination ----------------------------------------------------


def bareiss_det(m: Matrix, exact_div, zero, one):
    """Determinant over a commutative domain by Bareiss elimination.

    ``exact_div(a, b)`` must return the exact quotient ``a / b``.
    """
    n = len(m)
    if n == 0:
        return one
    a = [list(row) for row in m]
    sign = 1
    prev = one
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = exact_div(pivot * row_i[j] - aik * row_k[j], prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


# Study determinant ------------------------------------------------------------------


def _as_quaternion_laurent(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, Quaternion):
        return LaurentPoly.constant(x, T_VARS)
    return LaurentPoly.constant(Quaternion(x), T_VARS)


def _row_normalizers(rows: Sequence[Sequence[LaurentPoly]]) -> tuple[list[int], list[int]]:
    """Per row: t-shift clearing negative powers, and a positive integer clearing denominators."""
    shifts, scales = [], []
    for row in rows:
        lows = [min(e[0] for e in p.terms) for p in row if p.terms]
        shifts.append(-min(lows) if lows else 0)
        den = 1
        for p in row:
            for q in p.terms.values():
                for c in q.coefficients():
                    den = lcm(den, c.denominator)
        scales.append(den)
    return shifts, scales


def _unpack_signed(value: int, width: int) -> list[int]:
    base = 1 << width
    half = base >> 1
    out = []
    while value:
        digit = value & (base - 1)
        if digit >= half:
            digit -= base
        out.append(digit)
        value = (value - digit) >> width
    return out


def _gauss_exact_div(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    ar, ai = a
    br, bi = b
    n = br * br + bi * bi
    nr = ar * br + ai * bi
    ni = ai * br - ar * bi
    qr, rr = divmod(nr, n)
    qi, ri = divmod(ni, n)
    if rr or ri:
        raise ArithmeticError("inexact Gaussian division")
    return (qr, qi)


class _GaussInt:
    """Gaussian integer with the operations Bareiss needs."""

    __slots__ = ("re", "im")

    def __init__(self, re: int, im: int):
        self.re = re
        self.im = im

    def __mul__(self, o):
        return _GaussInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __sub__(self, o):
        return _GaussInt(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return _GaussInt(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re or self.im)


def _gauss_div(a: _GaussInt, b: _GaussInt) -> _GaussInt:
    return _GaussInt(*_gauss_exact_div((a.re, a.im), (b.re, b.im)))


def study_det(m: Matrix) -> LaurentPoly:
    """``det(psi(M))`` for a square matrix over quaternion Laurent polynomials in ``t``.

    Rows are first scaled by ``t^k`` and a positive integer so every complex
    entry is a Gaussian-integer polynomial; the scaling is divided out again.
    The fraction-free elimination runs on the Kronecker image ``t = 2^W``,
    where ``W`` exceeds twice the l1-Hadamard bound on every minor, so all
    intermediate values are faithful images of polynomials.
    """
    r = len(m)
    if r == 0:
        return LaurentPoly.constant(Fraction(1), T_VARS)
    if any(len(row) != r for row in m):
        raise ValueError("study_det needs a square matrix")
    rows = [[_as_quaternion_laurent(x) for x in row] for row in m]
    shifts, scales = _row_normalizers(rows)

    # complex rows as dense Gaussian-integer polynomials: (re_coeffs, im_coeffs)
    crow_polys: list[list[tuple[dict, dict]]] = []
    bound_bits = 0
    for row, sh, sc in zip(rows, shifts, scales):
        top: list[tuple[dict, dict]] = []
        bot: list[tuple[dict, dict]] = []
        l1_top = l1_bot = 0
        for p in row:
            a_re, a_im, b_re, b_im = {}, {}, {}, {}
            for (e,), q in p.terms.items():
                k = e + sh
                w, x, y, z = (int(c * sc) for c in q.coefficients())
                a_re[k], a_im[k], b_re[k], b_im[k] = w, x, y, z
            top.append((a_re, a_im))
            top.append((b_re, b_im))
            # second row: [-conj(b), conj(a)]
            bot.append(({k: -v for k, v in b_re.items()}, dict(b_im)))
            bot.append((dict(a_re), {k: -v for k, v in a_im.items()}))
            l1_top += sum(abs(v) for v in a_re.values()) + sum(abs(v) for v in a_im.values())
            l1_top += sum(abs(v) for v in b_re.values()) + sum(abs(v) for v in b_im.values())
        l1_bot = l1_top
        crow_polys.append(top)
        crow_polys.append(bot)
        bound_bits += max(l1_top, 1).bit_length() + max(l1_bot, 1).bit_length()
    width = bound_bits + 2

    def pack(poly: dict) -> int:
        return sum(v << (width * k) for k, v in poly.items())

    big = [[_GaussInt(pack(re), pack(im)) for re, im in row] for row in crow_polys]
    det = bareiss_det(big, _gauss_div, _GaussInt(0, 0), _GaussInt(1, 0))
    re_coeffs = _unpack_signed(det.re, width)
    im_coeffs = _unpack_signed(det.im, width)
    if any(im_coeffs):
        raise StudyDeterminantError("Study determinant has a nonzero imaginary part")
    total_shift = 2 * sum(shifts)
    denom = 1
    for sc in scales:
        denom *= sc * sc
    return LaurentPoly({(k - total_shift,): Fraction(c, denom) for k, c in enumerate(re_coeffs) if c}, T_VARS)


def study_det_direct(m: Matrix) -> LaurentPoly:
    """Same quantity by Bareiss directly over Gaussian-rational Laurent polynomials.

    Slow; kept as an independent route for cross-checking :func:`study_det`.
    """
    from .rings import GaussianRational, psi

    r = len(m)
    rows = [[_as_quaternion_laurent(x) for x in row] for row in m]
    shifts, _ = _row_normalizers(rows)
    big: Matrix = [[None] * (2 * r) for _ in range(2 * r)]
    for i, row in enumerate(rows):
        for j, p in enumerate(row):
            blocks = [[{}, {}], [{}, {}]]
            for (e,), q in p.terms.items():
                im = psi(q)
                for a in range(2):
                    for b in range(2):
                        if im[a][b]:
                            blocks[a][b][(e + shifts[i],)] = im[a][b]
            for a in range(2):
                for b in range(2):
                    big[2 * i + a][2 * j + b] = LaurentPoly(blocks[a][b], T_VARS)
    zero = LaurentPoly({}, T_VARS)
    one = LaurentPoly.constant(GaussianRational(1), T_VARS)
    det = bareiss_det(big, _gaussian_laurent_div, zero, one)
    out = {}
    for e, c in det.terms.items():
        if c.im:
            raise StudyDeterminantError("Study determinant has a nonzero imaginary part")
        out[(e[0] - 2 * sum(shifts),)] = c.re
    return LaurentPoly(out, T_VARS)


def _gaussian_laurent_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division of one-variable polynomials with Gaussian-rational coefficients."""
    if not a.terms:
        return a
    rem = dict(a.terms)
    lead_e = max(b.terms)
    lead_inv = b.terms[lead_e].inverse()
    low_q = min(a.terms)[0] - min(b.terms)[0]
    quot = {}
    while rem:
        e = max(rem)
        qe = e[0] - lead_e[0]
        if qe < low_q:
            raise ArithmeticError("inexact division")
        c = rem[e] * lead_inv
        quot[(qe,)] = c
        for (be,), bc in b.terms.items():
            k = (qe + be,)
            v = rem.get(k, 0) - c * bc
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly(quot, a.variables)


# commutative determinant -----------------------------------------------------------


def commutative_det(m: Matrix) -> LaurentPoly:
    """Ordinary determinant over ``Q[l^±, m^±]`` (or ``Q[t^±]``) by Bareiss."""
    r = len(m)
    variables = next((p.variables for row in m for p in row if isinstance(p, LaurentPoly)), LM_VARS)
    if r == 0:
        return LaurentPoly.constant(Fraction(1), variables)
    nv = len(variables)
    shifts = []
    rows = []
    for row in m:
        nz = [p for p in row if p.terms]
        if nz:
            low = tuple(min(p.min_exponents()[v] for p in nz) for v in range(nv))
        else:
            low = (0,) * nv
        shift = tuple(-x for x in low)
        shifts.append(shift)
        rows.append([p.shift(shift) for p in row])
    zero = LaurentPoly({}, variables)
    one = LaurentPoly.constant(Fraction(1), variables)
    det = bareiss_det(rows, laurent_exact_div, zero, one)
    total = tuple(-sum(s[v] for s in shifts) for v in range(nv))
    return det.shift(total)


def is_quaternionic(m: Matrix) -> bool:
    for row in m:
        for x in row:
            if isinstance(x, Quaternion):
                return True
            if isinstance(x, LaurentPoly) and x.terms:
                return isinstance(next(iter(x.terms.values())), Quaternion)
    return False


def matrix_det(m: Matrix) -> LaurentPoly:
    return study_det(m) if is_quaternionic(m) else commutative_det(m)


# elementary ideals --------------------------------------------------------------


def _submatrix(m: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return [[m[r][c] for c in cols] for r in rows]


def minors(m: Matrix, size: int) -> list[LaurentPoly]:
    """Determinants of all ``size x size`` submatrices in lexicographic (rows, cols) order."""
    r = len(m)
    det = matrix_det
    out = []
    for rows in itertools.combinations(range(r), size):
        for cols in itertools.combinations(range(r), size):
            out.append(det(_submatrix(m, rows, cols)))
    return out


def elementary_ideal_generators(m: Matrix, level: int) -> list[LaurentPoly]:
    """Generators of ``E_level``.

    Quaternionic matrices: Study determinants of ``(r-level)``-square
    submatrices together with every lower-level generator. Commutative
    matrices: ordinary minors of that size.
    """
    r = len(m)
    if not 0 <= level < r:
        raise ValueError(f"level {level} out of range for a {r}x{r} matrix")
    if not is_quaternionic(m):
        return minors(m, r - level)
    gens: list[LaurentPoly] = []
    for lv in range(level + 1):
        gens.extend(minors(m, r - lv))
    return gens


@dataclass(frozen=True)
class IdealPolynomial:
    level: int
    ring: str
    polynomial: LaurentPoly
    raw: LaurentPoly
    generators: int
    seconds: float = field(default=0.0, compare=False)

    @property
    def is_constant(self) -> bool:
        return self.polynomial.is_constant()

    def __str__(self):
        return str(self.polynomial)


def _raw_gcd(gens: Sequence[LaurentPoly], canon: LaurentPoly) -> LaurentPoly:
    """Integer-style gcd: rational content gcd times the canonical primitive gcd."""
    if not canon.terms:
        return canon
    return canon * content_gcd(gens)


MAX_LEVEL = 2


def delta(m: Matrix, level: int) -> IdealPolynomial:
    """``Δ_level`` as the canonical gcd of the elementary ideal generators."""
    start = time.perf_counter()
    gens = elementary_ideal_generators(m, level)
    g = polynomial_gcd(gens)
    ring = RING_QUATERNIONIC if is_quaternionic(m) else RING_ALEXANDER
    return IdealPolynomial(level, ring, g, _raw_gcd(gens, g), len(gens), time.perf_counter() - start)


def deltas(m: Matrix, levels: Sequence[int], max_level: int | None = MAX_LEVEL) -> list[IdealPolynomial]:
    """Several levels, verifying the divisibility chain between consecutive ones.

    Levels above ``max_level`` are refused because the number of minors grows
    like ``binom(r, i)**2``; pass ``max_level=None`` to lift the cap.
    """
    if max_level is not None and any(lv > max_level for lv in levels):
        raise ValueError(f"level above the cap {max_level}; raise max_level to compute it")
    r = len(m)
    results = {}
    out = []
    for lv in sorted(set(levels)):
        if lv >= r:
            one_vars = T_VARS if is_quaternionic(m) else LM_VARS
            one = LaurentPoly.constant(Fraction(1), one_vars)
            res = IdealPolynomial(lv, RING_QUATERNIONIC if is_quaternionic(m) else RING_ALEXANDER, one, one, 0)
        else:
            res = delta(m, lv)
        if lv - 1 in results and not divides(res.polynomial, results[lv - 1].polynomial):
            raise ArithmeticError(f"Δ_{lv} does not divide Δ_{lv - 1}")
        results[lv] = res
    for lv in levels:
        out.append(results[lv])
    return out


def classical_form_check(p: LaurentPoly) -> bool:
    """True iff every monomial ``l^a m^b`` has ``a == b`` (a polynomial in ``l*m``)."""
    return all(e[0] == e[1] for e in p.terms)


def up_to_unit_equal(p: LaurentPoly, q: LaurentPoly) -> bool:
    """Equality up to a nonzero rational scalar and a monomial unit."""
    return canonical(p) == canonical(q)

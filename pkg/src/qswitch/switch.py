"""Linear switches: 2x2 matrices satisfying the Yang-Baxter equations.

Entries live in one of three scalar rings: rational quaternions, Laurent
polynomials in a central ``t`` with quaternion coefficients, or the
commutative Alexander ring ``Q[l^±, m^±]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .laurent import LM_VARS, T_VARS, LaurentPoly, lm_vars
from .rings import NonUnitError, Quaternion, parse_quaternion

Matrix = list[list[Any]]

RING_QUATERNION = "quaternion"
RING_QUATERNION_T = "quaternion-t"
RING_ALEXANDER = "alexander"


class NotInvertibleError(ArithmeticError):
    """Neither branch of the 2x2 block-inversion formula applies."""


class SwitchError(ValueError):
    """A matrix claimed to be a switch failed a consistency check."""


# ring helpers ---------------------------------------------------------------


def ring_of(x) -> str:
    if isinstance(x, Quaternion):
        return RING_QUATERNION
    if isinstance(x, LaurentPoly):
        if x.variables == LM_VARS:
            return RING_ALEXANDER
        return RING_QUATERNION_T
    raise TypeError(f"unsupported scalar {x!r}")


def one_like(x):
    if isinstance(x, LaurentPoly):
        if x.variables == LM_VARS:
            return LaurentPoly.constant(Fraction(1), LM_VARS)
        return LaurentPoly.constant(Quaternion.one(), x.variables)
    return Quaternion.one()


def zero_like(x):
    if isinstance(x, LaurentPoly):
        return LaurentPoly({}, x.variables)
    return Quaternion.zero()


def is_unit(x) -> bool:
    return x.is_unit()


def is_commutative(x) -> bool:
    return isinstance(x, LaurentPoly) and x.variables == LM_VARS


def conj(x):
    return x.conjugate()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = a[i][0] * b[0][j]
            for k in range(1, m):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_eq(a: Matrix, b: Matrix) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))


def identity_matrix(n: int, like) -> Matrix:
    one, zero = one_like(like), zero_like(like)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_apply(m: Matrix, v: list) -> list:
    out = []
    for row in m:
        acc = row[0] * v[0]
        for a, x in zip(row[1:], v[1:]):
            acc = acc + a * x
        out.append(acc)
    return out


def inverse_2x2(a, b, c, d) -> Matrix:
    """Invert ``(a b; c d)`` by block formulas, with an adjugate fallback for commutative rings."""
    if b.is_unit() and d.is_unit():
        bi, di = b.inverse(), d.inverse()
        delta = bi * a - di * c
        if delta.is_unit():
            dl = delta.inverse()
            return [[dl * bi, -(dl * di)], [-(di * c * dl * bi), bi * a * dl * di]]
    if a.is_unit() and c.is_unit():
        ai, ci = a.inverse(), c.inverse()
        delta2 = ci * d - ai * b
        if delta2.is_unit():
            dl = delta2.inverse()
            return [[ci * d * dl * ai, -(ai * b * dl * ci)], [-(dl * ai), dl * ci]]
    if is_commutative(a):
        det = a * d - b * c
        if det.is_unit():
            di = det.inverse()
            return [[d * di, -(b * di)], [-(c * di), a * di]]
    raise NotInvertibleError("block-inversion hypothesis fails on both branches")


# switch type ------------------------------------------------------------------


@dataclass(frozen=True)
class Switch:
    """Candidate linear switch ``(A B; C D)``."""

    a: Any
    b: Any
    c: Any
    d: Any
    name: str = field(default="", compare=False)

    @property
    def ring(self) -> str:
        return ring_of(self.a)

    def entries(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def matrix(self) -> Matrix:
        return [[self.a, self.b], [self.c, self.d]]

    def serialize(self) -> str:
        return ",".join(str(x) for x in self.entries())

    def key(self) -> tuple:
        """Exact sort key over entries A, B, C, D (quaternion switches)."""
        return tuple(c for q in self.entries() for c in q.coefficients())

    def __str__(self):
        return f"({self.a}, {self.b}; {self.c}, {self.d})"


def parse_switch(text: str) -> Switch:
    """Parse ``"A,B,C,D"`` quaternion literals or a catalog name."""
    text = text.strip()
    if "," not in text:
        return named_switch(text)
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError(f"switch literal needs four entries, got {len(parts)}")
    return Switch(*(parse_quaternion(p) for p in parts), name=text)


# Yang-Baxter verification -------------------------------------------------------


def _commutator(x, y):
    return x * y - y * x


@dataclass(frozen=True)
class YangBaxterReport:
    residuals: tuple
    units_bc: bool
    invertible: bool
    braid_3x3: bool

    @property
    def equations_hold(self) -> bool:
        return all(not r for r in self.residuals)

    @property
    def verdict(self) -> bool:
        return self.equations_hold and self.units_bc and self.invertible

    def __bool__(self):
        return self.verdict


def yang_baxter_residuals(a, b, c, d) -> tuple:
    """Left minus right sides of the seven entry equations."""
    return (
        a - (a * a + b * a * c),
        _commutator(b, a) - b * a * d,
        _commutator(c, d) - c * d * a,
        d - (d * d + c * d * b),
        _commutator(a, c) - d * a * c,
        _commutator(d, b) - a * d * b,
        _commutator(c, b) - (a * d * a - d * a * d),
    )


def _braid_3x3(a, b, c, d) -> bool:
    one, zero = one_like(a), zero_like(a)
    s1 = [[a, b, zero], [c, d, zero], [zero, zero, one]]
    s2 = [[one, zero, zero], [zero, a, b], [zero, c, d]]
    return mat_eq(mat_mul(mat_mul(s1, s2), s1), mat_mul(mat_mul(s2, s1), s2))


def _switch_invertible(a, b, c, d) -> bool:
    try:
        inverse_2x2(a, b, c, d)
    except (NotInvertibleError, NonUnitError):
        return False
    return True


def check_yang_baxter(s: Switch | Matrix) -> YangBaxterReport:
    """Evaluate all seven equations, the unit conditions and the full 3x3 identity."""
    if isinstance(s, Switch):
        a, b, c, d = s.entries()
    else:
        (a, b), (c, d) = s
    return YangBaxterReport(
        residuals=yang_baxter_residuals(a, b, c, d),
        units_bc=b.is_unit() and c.is_unit(),
        invertible=_switch_invertible(a, b, c, d),
        braid_3x3=_braid_3x3(a, b, c, d),
    )


def is_switch(s: Switch) -> bool:
    return check_yang_baxter(s).verdict


# derived data -------------------------------------------------------------------


def invert_switch(s: Switch) -> Switch:
    (ia, ib), (ic, id_) = inverse_2x2(*s.entries())
    return Switch(ia, ib, ic, id_, name=f"{s.name}^-1" if s.name else "")


def lambda_of(s: Switch):
    """``B^-1 (1 - A)``, cross-checked against ``(1 - D) lambda = C``."""
    a, b, c, d = s.entries()
    one = one_like(a)
    lam = b.inverse() * (one - a)
    if (one - d) * lam != c:
        raise SwitchError("B^-1(1-A) and (1-D)^-1 C disagree")
    return lam


@dataclass(frozen=True)
class SidewaysPair:
    up: Matrix
    down: Matrix


def sideways(s: Switch) -> SidewaysPair:
    """Sideways matrices ``S^+_-`` and ``S^-_+``."""
    a, b, c, d = s.entries()
    if not (b.is_unit() and c.is_unit()):
        raise NonUnitError("sideways matrices need B and C to be units")
    bi, ci = b.inverse(), c.inverse()
    up = [[d * bi, c - d * bi * a], [bi, -(bi * a)]]
    down = [[-(ci * d), ci], [b - a * ci * d, a * ci]]
    pair = SidewaysPair(up, down)
    inv = invert_switch(s)
    ia, ib, ic, id_ = inv.entries()
    ibi = ib.inverse()
    inv_up = [[id_ * ibi, ic - id_ * ibi * ia], [ibi, -(ibi * ia)]]
    if not mat_eq(mat_mul(inv_up, down), identity_matrix(2, a)):
        raise SwitchError("(S^-1)^+_- is not the inverse of S^-_+")
    return pair


def twist_variant(s: Switch, use_t: bool = True) -> Switch:
    """``S(t) = (A, tB; t^-1 C, D)`` over quaternion Laurent polynomials."""
    if not use_t:
        return s
    if s.ring != RING_QUATERNION:
        raise TypeError("twist_variant expects constant quaternion entries")
    t = LaurentPoly.monomial((1,), Quaternion.one(), T_VARS)
    ti = LaurentPoly.monomial((-1,), Quaternion.one(), T_VARS)
    const = lambda q: LaurentPoly.constant(q, T_VARS)  # noqa: E731
    return Switch(const(s.a), t * s.b, ti * s.c, const(s.d), name=f"{s.name}(t)" if s.name else "")


def dagger(s: Switch) -> Switch:
    return Switch(s.d, s.c, s.b, s.a)


def star(s: Switch) -> Switch:
    return Switch(conj(s.a), conj(s.c), conj(s.b), conj(s.d))


def variants(s: Switch) -> dict[str, Switch]:
    """The switches ``S^-1``, ``S†``, ``S*`` and ``S†*``."""
    return {
        "inverse": invert_switch(s),
        "dagger": dagger(s),
        "star": star(s),
        "dagger-star": star(dagger(s)),
    }


def elementary_factors(s: Switch) -> list[Matrix]:
    """``S = (A 0; 0 1)(1 0; C 1)(1 0; 0 CΔ')(1 A^-1 B; 0 1)`` when ``A`` and ``CΔ'`` are units."""
    a, b, c, d = s.entries()
    one, zero = one_like(a), zero_like(a)
    ai = a.inverse()
    delta2 = c.inverse() * d - ai * b
    cd = c * delta2
    if not cd.is_unit():
        raise NonUnitError("C Δ' is not a unit")
    return [
        [[a, zero], [zero, one]],
        [[one, zero], [c, one]],
        [[one, zero], [zero, cd]],
        [[one, ai * b], [zero, one]],
    ]


# catalog ------------------------------------------------------------------------

Q = parse_quaternion

SWITCH_TABLE_9 = {
    1: ("1+i", "-j", "j", "1+i"),
    2: ("1+i", "-1/2+i/2+j/2-k/2", "-1/2+i/2-j/2+k/2", "1/2+i/2+j/2+k/2"),
    3: ("1/2+i/2+j/2+k/2", "-1/2+i/2-j/2+k/2", "-1/2+i/2+j/2-k/2", "1+i"),
    4: ("1+i", "-1+i-k", "-1/3+i/3+k/3", "1/3+i/3+2j/3"),
}

TABLE_1 = [
    ("1+i", "j", "-j", "1+i"),
    ("1+i", "1/2-1/2i+1/2j+1/2k", "1/2-1/2i-1/2j-1/2k", "1/2+1/2i+1/2j-1/2k"),
    ("1+i", "-1/2+1/2i+1/2j+1/2k", "-1/2+1/2i-1/2j-1/2k", "1/2+1/2i-1/2j+1/2k"),
    ("1/2+1/2i+1/2j+1/2k", "1/2+1/2i-1/2j-1/2k", "1/2-1/2i+1/2j-1/2k", "1+k"),
    ("1/2+1/2i+1/2j+1/2k", "-1/2+1/2i+1/2j-1/2k", "-1/2-1/2i+1/2j+1/2k", "1+j"),
]

TABLE_2 = [
    ("1-j", "-k", "k", "1-j"),
    ("1+i", "1/2j+1/2k", "-j-k", "1+i"),
    ("1+i", "1-i-j-k", "1/4-1/4i+1/4j+1/4k", "1/2+1/2i-1/2j+1/2k"),
    ("1-i", "-j-k", "1/2j+1/2k", "1-i"),
    ("1+j", "1-j-k", "1/3-1/3j+1/3k", "1/3+2/3i+1/3j"),
    ("1-k", "-1-i-j-k", "-1/4+1/4i+1/4j-1/4k", "1/2-1/2i+1/2j-1/2k"),
    ("1-k", "-1-j-k", "-1/3+1/3j-1/3k", "1/3-2/3i-1/3k"),
    ("1/2+1/2i-1/2j-1/2k", "-1/4+1/4i-1/4j+1/4k", "-1-i-j-k", "1-j"),
    ("1/2+1/2i+1/2j-1/2k", "1/4+1/4i-1/4j+1/4k", "1-i-j-k", "1+j"),
    ("1/3+2/3i-1/3j", "-1/3-1/3j+1/3k", "-1-j-k", "1-j"),
    ("1/3-2/3i+1/3k", "1/3+1/3j-1/3k", "1-j-k", "1+k"),
]


def _from_literals(entries, name: str) -> Switch:
    return Switch(*(Q(e) for e in entries), name=name)


def alexander_switch(form: int = 2) -> Switch:
    """Form 1 is ``(1-ml, m; l, 0)``, form 2 is ``(0, m; l, 1-ml)``."""
    l, m = lm_vars()
    one = LaurentPoly.constant(Fraction(1), LM_VARS)
    zero = LaurentPoly({}, LM_VARS)
    if form == 1:
        return Switch(one - m * l, m, l, zero, name="alexander-1")
    return Switch(zero, m, l, one - m * l, name="alexander")


def switch_names() -> list[str]:
    names = ["budapest", "alexander", "alexander-1"]
    names += [f"s9-{k}" for k in SWITCH_TABLE_9]
    names += [f"table1-{k}" for k in range(1, len(TABLE_1) + 1)]
    names += [f"table2-{k}" for k in range(1, len(TABLE_2) + 1)]
    return names


def named_switch(name: str) -> Switch:
    key = name.strip().lower()
    if key == "budapest":
        return _from_literals(SWITCH_TABLE_9[1], "budapest")
    if key in ("alexander", "alexander-2"):
        return alexander_switch(2)
    if key == "alexander-1":
        return alexander_switch(1)
    for prefix, table in (("s9-", SWITCH_TABLE_9), ("table1-", TABLE_1), ("table2-", TABLE_2)):
        if key.startswith(prefix):
            try:
                idx = int(key[len(prefix):])
            except ValueError:
                break
            rows = table if isinstance(table, dict) else dict(enumerate(table, start=1))
            if idx in rows:
                return _from_literals(rows[idx], key)
            break
    raise KeyError(f"unknown switch {name!r}")

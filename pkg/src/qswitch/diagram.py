"""Signed Gauss codes, virtual braid words and their presentation matrices."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .switch import (
    Matrix,
    Switch,
    identity_matrix,
    invert_switch,
    mat_mul,
    one_like,
    twist_variant,
    zero_like,
)


class GaussCodeError(ValueError):
    pass


class BraidWordError(ValueError):
    pass


class ReidemeisterError(ValueError):
    """The requested move has no legal application at the given site."""


@dataclass(frozen=True)
class Pass:
    crossing: int
    role: str  # "O" or "U"
    sign: int  # +1 or -1

    def __str__(self):
        return f"{self.role}{self.crossing}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class GaussCode:
    components: tuple[tuple[Pass, ...], ...]

    def __post_init__(self):
        _validate(self.components)

    @property
    def crossings(self) -> list[int]:
        return sorted({p.crossing for comp in self.components for p in comp})

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_components(self) -> int:
        return len(self.components)

    @property
    def n_semiarcs(self) -> int:
        return sum(len(c) for c in self.components)

    def passes(self) -> list[Pass]:
        return [p for comp in self.components for p in comp]

    def sign(self, crossing: int) -> int:
        for p in self.passes():
            if p.crossing == crossing:
                return p.sign
        raise KeyError(crossing)

    def __str__(self):
        return "/".join("".join(str(p) for p in comp) for comp in self.components)


def _validate(components) -> None:
    if not components:
        raise GaussCodeError("a Gauss code needs at least one component")
    seen: dict[int, dict[str, int]] = {}
    for comp in components:
        if not comp:
            raise GaussCodeError("empty component")
        for p in comp:
            if p.role not in ("O", "U") or p.sign not in (1, -1):
                raise GaussCodeError(f"bad pass {p!r}")
            roles = seen.setdefault(p.crossing, {})
            if p.role in roles:
                raise GaussCodeError(f"crossing {p.crossing} has two {p.role} passes")
            roles[p.role] = p.sign
    for c, roles in seen.items():
        if set(roles) != {"O", "U"}:
            missing = ({"O", "U"} - set(roles)).pop()
            raise GaussCodeError(f"crossing {c} lacks a {missing} pass")
        if roles["O"] != roles["U"]:
            raise GaussCodeError(f"crossing {c} has inconsistent signs")


_PASS_RE = re.compile(r"([OU])(\d+)([+-])")


def parse_gauss_code(text: str) -> GaussCode:
    """Parse ``"O1+O2+U1+U2+"``; components separated by ``/``, passes optionally by commas."""
    comps = []
    for chunk in text.strip().split("/"):
        s = re.sub(r"[\s,]+", "", chunk)
        pos = 0
        passes = []
        while pos < len(s):
            m = _PASS_RE.match(s, pos)
            if not m:
                raise GaussCodeError(f"unknown token at {s[pos:]!r} in {text!r}")
            passes.append(Pass(int(m.group(2)), m.group(1), 1 if m.group(3) == "+" else -1))
            pos = m.end()
        comps.append(tuple(passes))
    return GaussCode(tuple(comps))


@dataclass(frozen=True)
class SemiArcs:
    """Semi-arc ``k`` ends at global pass ``k``; ``out`` of a pass is ``in`` of the next."""

    count: int
    incoming: tuple[int, ...]
    outgoing: tuple[int, ...]


def semi_arcs(code: GaussCode) -> SemiArcs:
    inc, out = [], []
    start = 0
    for comp in code.components:
        m = len(comp)
        for k in range(m):
            inc.append(start + k)
            out.append(start + (k + 1) % m)
        start += m
    return SemiArcs(start, tuple(inc), tuple(out))


def _crossing_passes(code: GaussCode) -> dict[int, dict[str, int]]:
    where: dict[int, dict[str, int]] = {}
    for g, p in enumerate(code.passes()):
        where.setdefault(p.crossing, {})[p.role] = g
    return where


@dataclass(frozen=True)
class PresentationMatrix:
    matrix: Matrix
    labels: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.matrix)


def build_presentation(code: GaussCode, s: Switch, use_t: bool = False) -> PresentationMatrix:
    """Relation matrix ``M`` with ``M x = 0`` over the semi-arc labels ``x``.

    A positive crossing with under-pass ``u`` and over-pass ``o`` gives
    ``A x_in(u) + B x_in(o) = x_out(o)`` and ``C x_in(u) + D x_in(o) = x_out(u)``;
    a negative crossing swaps the roles of incoming and outgoing arcs.
    """
    if use_t:
        s = twist_variant(s)
    a, b, c, d = s.entries()
    one, zero = one_like(a), zero_like(a)
    arcs = semi_arcs(code)
    where = _crossing_passes(code)
    n = arcs.count
    rows: Matrix = []
    for crossing in code.crossings:
        u, o = where[crossing]["U"], where[crossing]["O"]
        sign = code.sign(crossing)
        if sign > 0:
            src_u, src_o, dst_o, dst_u = arcs.incoming[u], arcs.incoming[o], arcs.outgoing[o], arcs.outgoing[u]
        else:
            src_u, src_o, dst_o, dst_u = arcs.outgoing[u], arcs.outgoing[o], arcs.incoming[o], arcs.incoming[u]
        for coef_u, coef_o, dst in ((a, b, dst_o), (c, d, dst_u)):
            row = [zero] * n
            row[src_u] = row[src_u] + coef_u
            row[src_o] = row[src_o] + coef_o
            row[dst] = row[dst] - one
            rows.append(row)
    return PresentationMatrix(rows, tuple(f"x{k + 1}" for k in range(n)))


# braid words ------------------------------------------------------------------


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[tuple[str, int], ...]  # ("s" | "S" | "t", index)

    def __post_init__(self):
        if self.strands < 1:
            raise BraidWordError("need at least one strand")
        for kind, i in self.letters:
            if kind not in ("s", "S", "t"):
                raise BraidWordError(f"unknown generator {kind}")
            if not 1 <= i < self.strands:
                raise BraidWordError(f"index {i} out of range for {self.strands} strands")

    def is_classical(self) -> bool:
        return all(kind != "t" for kind, _ in self.letters)

    def __str__(self):
        return " ".join(f"{k}{i}" for k, i in self.letters)


_LETTER_RE = re.compile(r"([sSt])(\d+)$")


def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Tokens ``s<i>`` (sigma), ``S<i>`` (sigma inverse), ``t<i>`` (virtual)."""
    letters = []
    for tok in text.split():
        m = _LETTER_RE.match(tok)
        if not m:
            raise BraidWordError(f"unknown token {tok!r}")
        letters.append((m.group(1), int(m.group(2))))
    return BraidWord(strands, tuple(letters))


def _embed(block: Matrix, i: int, n: int, like) -> Matrix:
    m = identity_matrix(n, like)
    for r in range(2):
        for c in range(2):
            m[i - 1 + r][i - 1 + c] = block[r][c]
    return m


def generator_matrix(kind: str, i: int, n: int, s: Switch, s_inv: Switch | None = None) -> Matrix:
    a = s.a
    if kind == "s":
        block = s.matrix()
    elif kind == "S":
        block = (s_inv or invert_switch(s)).matrix()
    else:
        one, zero = one_like(a), zero_like(a)
        block = [[zero, one], [one, zero]]
    return _embed(block, i, n, a)


def braid_representation(w: BraidWord, s: Switch, use_t: bool = False) -> Matrix:
    """``rho'(w)``: letters act left to right, so ``rho'(uv) = rho'(v) rho'(u)``."""
    if use_t:
        s = twist_variant(s)
    s_inv = invert_switch(s) if any(k == "S" for k, _ in w.letters) else None
    result = identity_matrix(w.strands, s.a)
    for kind, i in w.letters:
        result = mat_mul(generator_matrix(kind, i, w.strands, s, s_inv), result)
    return result


def braid_closure_presentation(w: BraidWord, s: Switch, use_t: bool = False) -> PresentationMatrix:
    rho = braid_representation(w, s, use_t)
    n = w.strands
    one = one_like(rho[0][0])
    m = [[rho[r][c] - one if r == c else rho[r][c] for c in range(n)] for r in range(n)]
    return PresentationMatrix(m, tuple(f"x{k + 1}" for k in range(n)))


# Reidemeister moves -----------------------------------------------------------
# Sites:
#   R1+  (component, position, first_role, sign): insert a kink before ``position``
#   R1-  crossing id whose two passes are cyclically adjacent on one component
#   R2+  (comp_over, pos_over, comp_under, pos_under, parallel): insert a bigon
#   R2-  (crossing_1, crossing_2) forming a removable bigon
#   R3   index into r3_sites(code)


def _fresh(code: GaussCode, k: int = 1) -> list[int]:
    top = max(code.crossings, default=0)
    return [top + j + 1 for j in range(k)]


def _insert(comps: list[list[Pass]], comp: int, pos: int, passes: Sequence[Pass]) -> None:
    if not 0 <= comp < len(comps) or not 0 <= pos <= len(comps[comp]):
        raise ReidemeisterError(f"no position {pos} on component {comp}")
    comps[comp][pos:pos] = list(passes)


def _adjacent(comp: Sequence[Pass], i: int, j: int) -> bool:
    return (i + 1) % len(comp) == j


def _locate(code: GaussCode) -> dict[tuple[int, str], tuple[int, int]]:
    return {(p.crossing, p.role): (ci, k) for ci, comp in enumerate(code.components) for k, p in enumerate(comp)}


def _remove_crossings(code: GaussCode, crossings: set[int]) -> GaussCode:
    comps = tuple(tuple(p for p in comp if p.crossing not in crossings) for comp in code.components)
    if any(not c for c in comps):
        raise ReidemeisterError("move would leave a crossingless component")
    return GaussCode(comps)


def r2_minus_sites(code: GaussCode) -> list[tuple[int, int]]:
    loc = _locate(code)
    sites = []
    cs = code.crossings
    for x in cs:
        for y in cs:
            if x >= y or code.sign(x) == code.sign(y):
                continue
            ox, oy = loc[(x, "O")], loc[(y, "O")]
            ux, uy = loc[(x, "U")], loc[(y, "U")]
            if ox[0] != oy[0] or ux[0] != uy[0]:
                continue
            oc, uc = code.components[ox[0]], code.components[ux[0]]
            over_adj = _adjacent(oc, ox[1], oy[1]) or _adjacent(oc, oy[1], ox[1])
            under_adj = _adjacent(uc, ux[1], uy[1]) or _adjacent(uc, uy[1], ux[1])
            if over_adj and under_adj:
                sites.append((x, y))
    return sites


def r1_minus_sites(code: GaussCode) -> list[int]:
    loc = _locate(code)
    out = []
    for x in code.crossings:
        (co, ko), (cu, ku) = loc[(x, "O")], loc[(x, "U")]
        comp = code.components[co]
        if co == cu and (_adjacent(comp, ko, ku) or _adjacent(comp, ku, ko)):
            out.append(x)
    return out


def r3_sites(code: GaussCode) -> list[tuple[tuple[int, int], ...]]:
    """Braid-like triangles; each site lists the three adjacent pass pairs to reverse.

    Positive form: ``U_p U_q``, ``O_p U_r``, ``O_q O_r`` (or all three pairs
    reversed); the negative mirror swaps O and U with all signs negative.
    """
    loc = _locate(code)
    sites = []
    cs = code.crossings

    def pair(cx, rx, cy, ry):
        (c1, k1), (c2, k2) = loc[(cx, rx)], loc[(cy, ry)]
        if c1 == c2 and _adjacent(code.components[c1], k1, k2):
            return (c1, k1)
        return None

    for p in cs:
        for q in cs:
            for r in cs:
                if len({p, q, r}) < 3:
                    continue
                signs = {code.sign(p), code.sign(q), code.sign(r)}
                if len(signs) != 1:
                    continue
                sign = signs.pop()
                lo, hi = ("U", "O") if sign > 0 else ("O", "U")
                for forward in (True, False):
                    if forward:
                        pairs = (pair(p, lo, q, lo), pair(p, hi, r, lo), pair(q, hi, r, hi))
                    else:
                        pairs = (pair(q, lo, p, lo), pair(r, lo, p, hi), pair(r, hi, q, hi))
                    if all(pairs):
                        sites.append(tuple(pairs))
    unique = []
    for s in sites:
        key = tuple(sorted(s))
        if key not in [tuple(sorted(u)) for u in unique]:
            unique.append(s)
    return unique


def apply_reidemeister(code: GaussCode, move: str, site) -> GaussCode:
    """Return a Gauss code of an equivalent virtual link after one move."""
    comps = [list(c) for c in code.components]
    if move == "R1+":
        comp, pos, first, sign = site
        if first not in ("O", "U") or sign not in (1, -1):
            raise ReidemeisterError(f"bad R1 site {site!r}")
        (x,) = _fresh(code)
        second = "U" if first == "O" else "O"
        _insert(comps, comp, pos, [Pass(x, first, sign), Pass(x, second, sign)])
        return GaussCode(tuple(tuple(c) for c in comps))
    if move == "R1-":
        if site not in r1_minus_sites(code):
            raise ReidemeisterError(f"crossing {site!r} is not a kink")
        return _remove_crossings(code, {site})
    if move == "R2+":
        c_over, p_over, c_under, p_under, parallel = site
        x, y = _fresh(code, 2)
        over = [Pass(x, "O", 1), Pass(y, "O", -1)]
        under = [Pass(x, "U", 1), Pass(y, "U", -1)] if parallel else [Pass(y, "U", -1), Pass(x, "U", 1)]
        if c_over == c_under and p_over == p_under:
            raise ReidemeisterError("R2 strands must be inserted at distinct positions")
        # insert the later position first so indices stay valid on a shared component
        if c_over == c_under and p_under > p_over:
            _insert(comps, c_under, p_under, under)
            _insert(comps, c_over, p_over, over)
        else:
            _insert(comps, c_over, p_over, over)
            _insert(comps, c_under, p_under, under)
        return GaussCode(tuple(tuple(c) for c in comps))
    if move == "R2-":
        x, y = sorted(site)
        if (x, y) not in r2_minus_sites(code):
            raise ReidemeisterError(f"crossings {site!r} do not bound a bigon")
        return _remove_crossings(code, {x, y})
    if move == "R3":
        sites = r3_sites(code)
        if not isinstance(site, int) or not 0 <= site < len(sites):
            raise ReidemeisterError("no braid-like triangle at this site")
        for comp, k in sites[site]:
            m = len(comps[comp])
            comps[comp][k], comps[comp][(k + 1) % m] = comps[comp][(k + 1) % m], comps[comp][k]
        return GaussCode(tuple(tuple(c) for c in comps))
    raise ReidemeisterError(f"unknown move {move!r}")


def legal_sites(code: GaussCode, move: str) -> Iterator:
    """Enumerate every legal site for ``move`` (used by randomized invariance tests)."""
    if move == "R1+":
        for ci, comp in enumerate(code.components):
            for pos in range(len(comp) + 1):
                for first in ("O", "U"):
                    for sign in (1, -1):
                        yield (ci, pos, first, sign)
    elif move == "R1-":
        yield from r1_minus_sites(code)
    elif move == "R2+":
        for co, comp_o in enumerate(code.components):
            for po in range(len(comp_o) + 1):
                for cu, comp_u in enumerate(code.components):
                    for pu in range(len(comp_u) + 1):
                        if (co, po) != (cu, pu):
                            for parallel in (True, False):
                                yield (co, po, cu, pu, parallel)
    elif move == "R2-":
        for site in r2_minus_sites(code):
            try:
                _remove_crossings(code, set(site))
            except ReidemeisterError:
                continue
            yield site
    elif move == "R3":
        yield from range(len(r3_sites(code)))
    else:
        raise ReidemeisterError(f"unknown move {move!r}")

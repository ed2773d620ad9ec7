from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qswitch.catalog import named_diagram
from qswitch.diagram import BraidWord, braid_closure_presentation, build_presentation, parse_braid_word
from qswitch.invariants import (
    RING_ALEXANDER,
    RING_QUATERNIONIC,
    classical_form_check,
    delta,
    deltas,
    elementary_ideal_generators,
    study_det,
    study_det_direct,
)
from qswitch.laurent import LM_VARS, LaurentPoly, T_VARS, divides, parse_laurent
from qswitch.rings import I, J, K, Quaternion
from qswitch.switch import alexander_switch, mat_mul, named_switch

from conftest import quaternions

BUDAPEST = named_switch("budapest")
ZERO = Quaternion.zero()


def const(q):
    return LaurentPoly.constant(q, T_VARS)


def square(n):
    return st.lists(st.lists(quaternions, min_size=n, max_size=n), min_size=n, max_size=n)


laurent_entries = st.dictionaries(st.integers(-2, 2), quaternions, max_size=2).map(
    lambda d: LaurentPoly({(e,): q for e, q in d.items()}, T_VARS)
)


def conj_transpose(m):
    n = len(m)
    return [[m[c][r].conjugate() for c in range(n)] for r in range(n)]


# examples ---------------------------------------------------------------------------


def test_study_det_examples():
    q = Quaternion(1, 2, -1, 3)
    assert study_det([[q]]) == LaurentPoly.constant(Fraction(15))
    assert study_det(BUDAPEST.matrix()) == LaurentPoly.constant(Fraction(1))
    assert not study_det([[I, J], [I, J]]).terms
    assert not study_det([[I, J], [I * K, J * K]]).terms


def test_generator_counts():
    m = build_presentation(named_diagram("vtrefoil").gauss, BUDAPEST, use_t=True).matrix
    assert len(elementary_ideal_generators(m, 0)) == 1
    top = elementary_ideal_generators(m, 3)
    assert len(top) == 1 + 16 + 36 + 16
    two = [[const(1 + I), const(J)], [const(K), const(2 * I)]]
    gens = elementary_ideal_generators(two, 1)
    assert len(gens) == 5
    norms = sorted(g.terms[(0,)] for g in gens[1:])
    assert norms == [1, 1, 2, 4]
    with pytest.raises(ValueError):
        elementary_ideal_generators(two, 2)


def test_delta_examples():
    vt = named_diagram("vtrefoil").gauss
    d0 = delta(build_presentation(vt, BUDAPEST, use_t=True).matrix, 0)
    assert d0.polynomial == parse_laurent("t^4+2t^2+1")
    assert d0.ring == RING_QUATERNIONIC
    a0 = delta(build_presentation(vt, alexander_switch(2)).matrix, 0)
    assert a0.ring == RING_ALEXANDER
    assert a0.polynomial == parse_laurent("l^2*m^2-l^2*m-l*m^2+l+m-1", LM_VARS)


def test_classical_form_check():
    assert classical_form_check(parse_laurent("l^2*m^2-3l*m+1", LM_VARS))
    assert not classical_form_check(parse_laurent("1+m-l*m", LM_VARS))
    assert classical_form_check(LaurentPoly({}, LM_VARS))


@pytest.mark.parametrize(
    "word,strands,raw",
    [("s1 s1 s1", 2, 9), ("s1 S2 s1 S2", 3, 25), ("s1 s1 s1 s1 s1", 2, 25), ("s1 s1 s1 s2", 3, 9)],
)
def test_budapest_determinant_squares(word, strands, raw):
    m = braid_closure_presentation(parse_braid_word(word, strands), BUDAPEST, use_t=True).matrix
    d0, d1 = deltas(m, [0, 1])
    assert not d0.polynomial.terms
    assert d1.polynomial == LaurentPoly.constant(Fraction(1))
    assert d1.raw == raw


def test_divisibility_chain():
    m = build_presentation(named_diagram("vtrefoil").gauss, named_switch("s9-4"), use_t=True).matrix
    ds = deltas(m, [0, 1, 2])
    for lo, hi in zip(ds, ds[1:]):
        assert divides(hi.polynomial, lo.polynomial)


# properties -------------------------------------------------------------------------


@given(st.integers(1, 3).flatmap(lambda n: st.lists(st.lists(laurent_entries, min_size=n, max_size=n), min_size=n, max_size=n)))
def test_fast_and_direct_routes_agree(m):
    assert study_det(m) == study_det_direct(m)


@given(st.integers(2, 3).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_multiplicative(pair):
    a, b = pair
    assert study_det(mat_mul(a, b)) == study_det(a) * study_det(b)


@given(square(3), quaternions, st.integers(0, 2), st.integers(0, 2))
def test_row_and_column_operations(m, q, i, j):
    base = study_det(m)
    if i != j:
        rows = [list(r) for r in m]
        rows[i] = [rows[i][c] + q * rows[j][c] for c in range(3)]
        assert study_det(rows) == base
        cols = [list(r) for r in m]
        for r in range(3):
            cols[r][i] = cols[r][i] + cols[r][j] * q
        assert study_det(cols) == base
        swapped = [list(r) for r in m]
        swapped[i], swapped[j] = swapped[j], swapped[i]
        assert study_det(swapped) == base


@given(quaternions, quaternions, quaternions, square(2))
def test_block_rule(x, u1, u2, inner):
    m = [[x, u1, u2], [ZERO] + inner[0], [ZERO] + inner[1]]
    assert study_det(m) == study_det(inner) * x.norm2()


@given(square(3))
def test_conjugate_transpose_and_sign(m):
    d = study_det(m)
    assert study_det(conj_transpose(m)) == d
    if d.terms:
        assert d.is_constant() and d.terms[(0,)] > 0


classical_words = st.integers(2, 3).flatmap(
    lambda n: st.lists(st.tuples(st.sampled_from("sS"), st.integers(1, n - 1)), max_size=5).map(
        lambda letters: BraidWord(n, tuple(letters))
    )
)


@given(classical_words, st.sampled_from(["budapest", "s9-2", "s9-4"]))
def test_classical_braids_have_t_free_ideals(word, name):
    m = braid_closure_presentation(word, named_switch(name), use_t=True).matrix
    d0, d1 = deltas(m, [0, 1])
    assert not d0.polynomial.terms
    assert d1.polynomial.is_constant() or not d1.polynomial.terms


def test_level_cap():
    m = build_presentation(named_diagram("kishino1").gauss, named_switch("budapest"), True).matrix
    with pytest.raises(ValueError):
        deltas(m, [3])
    (d3,) = deltas(m, [3], max_level=None)
    assert d3.polynomial.is_constant()

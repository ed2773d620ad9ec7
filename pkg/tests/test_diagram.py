from fractions import Fraction

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from qswitch.catalog import named_diagram
from qswitch.diagram import (
    BraidWord,
    _embed,
    BraidWordError,
    GaussCodeError,
    ReidemeisterError,
    apply_reidemeister,
    braid_closure_presentation,
    braid_representation,
    build_presentation,
    legal_sites,
    parse_braid_word,
    parse_gauss_code,
    r3_sites,
    semi_arcs,
)
from qswitch.invariants import commutative_det, deltas, study_det, up_to_unit_equal
from qswitch.laurent import LM_VARS, LaurentPoly, T_VARS, lm_vars
from qswitch.rings import I, J, K, Quaternion
from qswitch.switch import (
    Switch,
    alexander_switch,
    identity_matrix,
    invert_switch,
    lambda_of,
    mat_apply,
    mat_eq,
    mat_mul,
    named_switch,
    twist_variant,
)

BUDAPEST = named_switch("budapest")


def test_parse_examples():
    vt = parse_gauss_code("O1+O2+U1+U2+")
    assert (vt.n_crossings, vt.n_components, vt.n_semiarcs) == (2, 1, 4)
    tre = parse_gauss_code("O1+U2+O3+U1+O2+U3+")
    assert (tre.n_crossings, tre.n_semiarcs) == (3, 6)
    hopf = parse_gauss_code("O1+U2+/O2+U1+")
    assert hopf.n_components == 2 and hopf.n_semiarcs == 4
    assert parse_gauss_code("O1+, U1+") == parse_gauss_code("O1+U1+")


@pytest.mark.parametrize("bad", ["O1+U2-", "O1+O1+", "O1+U1-", "X1+U1+", "", "O1+U1+/"])
def test_parse_rejects(bad):
    with pytest.raises(GaussCodeError):
        parse_gauss_code(bad)


def test_semi_arcs_cyclic():
    arcs = semi_arcs(parse_gauss_code("O1+U2+/O2+U1+"))
    assert arcs.count == 4
    assert arcs.outgoing == (1, 0, 3, 2)


def test_presentation_rows_have_three_entries():
    pres = build_presentation(named_diagram("kishino1").gauss, BUDAPEST, use_t=True)
    assert pres.size == 8
    for row in pres.matrix:
        assert sum(1 for x in row if x) == 3


def test_alexander_reduced_system():
    """The 4x4 presentation and the hand-eliminated 2x2 system have associate determinants."""
    l, m = lm_vars()
    one = LaurentPoly.constant(Fraction(1), LM_VARS)
    reduced = [
        [m - l * m * m - one, l * m],
        [l * l * m * m - l * m + one, l - l * l * m - one],
    ]
    code = parse_gauss_code("O1+U2+U1+O2+")
    full = build_presentation(code, alexander_switch(2)).matrix
    assert up_to_unit_equal(commutative_det(full), commutative_det(reduced))
    assert up_to_unit_equal(commutative_det(full), (l - one) * (l * m - one) * (m - one))


def test_budapest_reduced_system():
    # Eliminating c = tBa + Ab by hand; the last entry carries t^-2.
    t = LaurentPoly.monomial((1,), Quaternion.one())
    ti = LaurentPoly.monomial((-1,), Quaternion.one())
    c_ = lambda q: LaurentPoly.constant(q)  # noqa: E731
    a, b, c, d = (c_(x) for x in BUDAPEST.entries())
    one = c_(Quaternion.one())
    reduced = [
        [a * d + t * t * b * b, ti * a * c + t * b * a - one],
        [ti * c * d + t * d * b - one, ti * ti * c * c + d * a],
    ]
    full = build_presentation(named_diagram("vtrefoil").gauss, BUDAPEST, use_t=True).matrix
    assert up_to_unit_equal(study_det(full), study_det(reduced))


@pytest.mark.parametrize("s", [BUDAPEST, alexander_switch(2), named_switch("s9-4")])
def test_kink_is_unknotted(s):
    use_t = s.ring == "quaternion"
    (d0,) = deltas(build_presentation(parse_gauss_code("O1+U1+"), s, use_t).matrix, [0])
    assert not d0.polynomial.terms


# braids ----------------------------------------------------------------------------


def test_parse_braid_words():
    assert parse_braid_word("s1 s1 s1", 2).letters == (("s", 1),) * 3
    assert parse_braid_word("t1 t1", 2).letters == (("t", 1), ("t", 1))
    with pytest.raises(BraidWordError):
        parse_braid_word("s1 T1", 2)
    with pytest.raises(BraidWordError):
        parse_braid_word("s2", 2)


def test_braid_representation_examples():
    assert mat_eq(braid_representation(BraidWord(2, ()), BUDAPEST), identity_matrix(2, I))
    zero, one = Quaternion.zero(), Quaternion.one()
    assert braid_representation(parse_braid_word("t1", 2), BUDAPEST) == [[zero, one], [one, zero]]
    s1 = braid_representation(parse_braid_word("s1", 3), BUDAPEST)
    assert s1 == [[1 + I, -J, zero], [J, 1 + I, zero], [zero, zero, one]]


def test_braid_order_of_letters():
    s = BUDAPEST
    w = braid_representation(parse_braid_word("s1 t2", 3), s)
    first = braid_representation(parse_braid_word("s1", 3), s)
    second = braid_representation(parse_braid_word("t2", 3), s)
    assert mat_eq(w, mat_mul(second, first))


def test_closure_examples():
    pres = braid_closure_presentation(BraidWord(1, ()), BUDAPEST)
    assert pres.matrix == [[Quaternion.zero()]]
    m = braid_closure_presentation(parse_braid_word("s1 s1 s1", 2), BUDAPEST).matrix
    assert mat_apply(m, [Quaternion.one(), K]) == [Quaternion.zero(), Quaternion.zero()]
    tm = braid_closure_presentation(parse_braid_word("t1", 2), BUDAPEST, use_t=True).matrix
    assert not study_det(tm).terms


classical_words = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.just(n), st.lists(st.tuples(st.sampled_from("sS"), st.integers(1, n - 1)), max_size=6)
    )
)
virtual_words = st.integers(2, 4).flatmap(
    lambda n: st.tuples(
        st.just(n), st.lists(st.tuples(st.sampled_from("sSt"), st.integers(1, n - 1)), max_size=6)
    )
)
quaternion_switch_names = st.sampled_from(["budapest", "s9-2", "s9-3", "s9-4", "table2-3", "table2-10"])


@given(classical_words, quaternion_switch_names)
def test_fixed_vector(word, name):
    n, letters = word
    s = named_switch(name)
    lam = lambda_of(s)
    z = [Quaternion.one()]
    for _ in range(n - 1):
        z.append(z[-1] * lam)
    m = braid_closure_presentation(BraidWord(n, tuple(letters)), s).matrix
    assert all(not x for x in mat_apply(m, z))


@given(virtual_words, quaternion_switch_names)
def test_lambda_conjugation(word, name):
    """diag(1, t, ..., t^{n-1}) conjugates the constant representation into the twisted one."""
    n, letters = word
    s = named_switch(name)
    const = Switch(*(LaurentPoly.constant(q, T_VARS) for q in s.entries()))
    w = BraidWord(n, tuple(letters))
    plain = braid_representation(w, const)
    t_pow = [LaurentPoly.monomial((k,), Quaternion.one()) for k in range(n)]
    t_inv = [LaurentPoly.monomial((-k,), Quaternion.one()) for k in range(n)]
    conj = [[t_inv[r] * plain[r][c] * t_pow[c] for c in range(n)] for r in range(n)]

    # expected: S(t) for sigma letters and T(t) = (0, t; t^-1, 0) for virtual ones
    tw = twist_variant(s)
    tw_inv = invert_switch(tw)
    zero = LaurentPoly({}, T_VARS)
    t_block = [[zero, t_pow[1]], [t_inv[1], zero]]
    expected = identity_matrix(n, const.a)
    for kind, i in letters:
        block = {"s": tw.matrix(), "S": tw_inv.matrix(), "t": t_block}[kind]
        expected = mat_mul(_embed(block, i, n, const.a), expected)
    assert mat_eq(conj, expected)
    if all(k != "t" for k, _ in letters):
        assert mat_eq(conj, braid_representation(w, s, use_t=True))


def test_gauss_and_braid_trefoil_agree():
    gauss = build_presentation(named_diagram("trefoil-gauss").gauss, BUDAPEST, use_t=True).matrix
    braid = braid_closure_presentation(named_diagram("trefoil").braid, BUDAPEST, use_t=True).matrix
    g = deltas(gauss, [0, 1])
    b = deltas(braid, [0, 1])
    assert [d.polynomial for d in g] == [d.polynomial for d in b]
    assert g[1].raw == b[1].raw == 9
    alex = alexander_switch(2)
    ga = deltas(build_presentation(named_diagram("trefoil-gauss").gauss, alex).matrix, [0, 1])
    ba = deltas(braid_closure_presentation(named_diagram("trefoil").braid, alex).matrix, [0, 1])
    assert [d.polynomial for d in ga] == [d.polynomial for d in ba]


# Reidemeister moves -----------------------------------------------------------------


def test_r1_insertion():
    code = apply_reidemeister(parse_gauss_code("O1+O2+U1+U2+"), "R1+", (0, 2, "U", -1))
    assert code.n_crossings == 3
    assert str(code) == "O1+O2+U3-O3-U1+U2+"
    assert apply_reidemeister(code, "R1-", 3) == parse_gauss_code("O1+O2+U1+U2+")


def test_r2_roundtrip():
    code = parse_gauss_code("O1+O2+U1+U2+")
    for site in [(0, 1, 0, 3, True), (0, 0, 0, 4, False)]:
        bigger = apply_reidemeister(code, "R2+", site)
        assert bigger.n_crossings == 4
        assert apply_reidemeister(bigger, "R2-", (3, 4)) == code


def test_r3_errors_without_triangle():
    code = parse_gauss_code("O1+O2+U1+U2+")
    assert r3_sites(code) == []
    with pytest.raises(ReidemeisterError):
        apply_reidemeister(code, "R3", 0)
    with pytest.raises(ReidemeisterError):
        apply_reidemeister(code, "R2-", (1, 2))


def test_r3_on_braid_triangle():
    # closure of s1 s2 s1 on three strands, written as a Gauss code
    code = parse_gauss_code("U1+U2+/O1+U3+/O2+O3+")
    sites = r3_sites(code)
    assert sites
    moved = apply_reidemeister(code, "R3", 0)
    assert moved != code
    s = named_switch("budapest")
    before = deltas(build_presentation(code, s, True).matrix, [0, 1])
    after = deltas(build_presentation(moved, s, True).matrix, [0, 1])
    assert [d.polynomial for d in before] == [d.polynomial for d in after]


MOVES = ("R1+", "R1-", "R2+", "R2-", "R3")


def random_moves(code, data, count, max_crossings):
    for _ in range(count):
        move = data.draw(st.sampled_from(MOVES))
        sites = list(legal_sites(code, move))
        if move == "R1+" and code.n_crossings + 1 > max_crossings:
            continue
        if move == "R2+" and code.n_crossings + 2 > max_crossings:
            continue
        if not sites:
            continue
        code = apply_reidemeister(code, move, data.draw(st.sampled_from(sites)))
    return code


CASES = [
    ("vtrefoil", "budapest", True, 6),
    ("vtrefoil", "s9-4", True, 6),
    ("trefoil-gauss", "budapest", True, 6),
    ("vtrefoil", "alexander", False, 6),
    ("kishino1", "alexander", False, 6),
]


@pytest.mark.parametrize("diagram,switch,use_t,cap", CASES)
@settings(max_examples=6, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(data=st.data())
def test_reidemeister_invariance(diagram, switch, use_t, cap, data):
    code = named_diagram(diagram).gauss
    s = named_switch(switch)
    count = data.draw(st.integers(1, 3))
    moved = random_moves(code, data, count, cap)
    before = deltas(build_presentation(code, s, use_t).matrix, [0, 1])
    after = deltas(build_presentation(moved, s, use_t).matrix, [0, 1])
    assert [d.polynomial for d in before] == [d.polynomial for d in after], str(moved)

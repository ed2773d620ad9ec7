from fractions import Fraction

import pytest
from hypothesis import given

from qswitch.rings import I, J, K, Quaternion
from qswitch.search import (
    ROTATIONS,
    SearchConfig,
    _rotate_switch,
    canonical_representative,
    classify_budapest_type,
    constraint_filter,
    derive_cd,
    load_config,
    norm_constraints_hold,
    preset_config,
    search,
    theta_residual,
    variant_group,
)
from qswitch.switch import Switch, check_yang_baxter, dagger, invert_switch, named_switch, star, yang_baxter_residuals

from conftest import nonzero_quaternions, verified_switches

HALF = Fraction(1, 2)
BUDAPEST = named_switch("budapest")


def test_constraint_filter_examples():
    assert constraint_filter(1 + I)
    assert not constraint_filter(Quaternion(2))
    xi = Quaternion(HALF, HALF, HALF, HALF)
    assert constraint_filter(xi)
    assert xi.norm2() == 1 and xi.w == HALF
    assert not constraint_filter(Quaternion(1))
    assert not constraint_filter(-1 + I)


def test_derive_cd_examples():
    assert derive_cd(1 + I, -J) == (J, 1 + I)
    assert derive_cd(1 + I, J) == (-J, 1 + I)
    c, d = derive_cd(Quaternion(1), J)
    assert not c
    assert not check_yang_baxter(Switch(Quaternion(1), J, c, d)).verdict


def test_theta_examples():
    assert theta_residual(1 + I, -J) == 0
    assert theta_residual(1 + I, 1 + J) == K
    # A commuting B collapses to the commutative family, where D = 0
    for b in (Quaternion(1), 1 + I):
        assert theta_residual(1 + I, b) == 0
        c, d = derive_cd(1 + I, b)
        assert not d
        assert not norm_constraints_hold(Switch(1 + I, b, c, d))


@given(nonzero_quaternions, nonzero_quaternions)
def test_theta_equivalent_to_last_two_equations(a, b):
    c, d = derive_cd(a, b)
    res = yang_baxter_residuals(a, b, c, d)
    assert not res[0] and not res[1]
    assert (theta_residual(a, b) == 0) == (not res[5] and not res[6])


@given(verified_switches())
def test_theta_vanishes_on_switches(s):
    assert theta_residual(s.a, s.b) == 0
    res = yang_baxter_residuals(*s.entries())
    assert not res[5] and not res[6]


def test_canonical_representative():
    row1 = named_switch("table1-1")
    assert canonical_representative(BUDAPEST) == canonical_representative(row1)
    c = canonical_representative(BUDAPEST)
    assert canonical_representative(c) == c
    assert canonical_representative(dagger(BUDAPEST)) == c
    assert len(ROTATIONS) == 24


@given(verified_switches())
def test_symmetry_soundness(s):
    for v in variant_group(s):
        assert check_yang_baxter(v).verdict
    for rot in ROTATIONS[::5]:
        assert check_yang_baxter(_rotate_switch(s, rot)).verdict
    assert canonical_representative(star(s)) == canonical_representative(s)
    assert canonical_representative(invert_switch(s)) == canonical_representative(s)


def test_classify_budapest_type():
    assert classify_budapest_type(BUDAPEST) == (I, J)
    assert classify_budapest_type(named_switch("s9-4")) is None
    assert classify_budapest_type(named_switch("table2-1")) == (-J, K)


def test_config_validation(tmp_path):
    with pytest.raises(ValueError):
        SearchConfig((), (Fraction(1),))
    with pytest.raises(ValueError):
        SearchConfig((Fraction(1),), (Fraction(1),), ring_filter="gaussian")
    path = tmp_path / "grid.ini"
    path.write_text("[search]\na_coefficients = 0, 1\nb_coefficients = -1, 0, 1\nring_filter = integer\n")
    cfg = load_config(path)
    assert cfg.a_coefficients == (0, 1)
    assert cfg.ring_filter == "integer"
    with pytest.raises(KeyError):
        preset_config("table7")


def test_real_only_grid_is_empty():
    # A with zero imaginary part never passes the filter
    cfg = SearchConfig((Fraction(0),), (Fraction(0), Fraction(1)))
    assert search(cfg) == []


def test_integer_grid_is_budapest_type():
    records = search(preset_config("integer"))
    assert records
    axes = {I, J, K, -I, -J, -K}
    for r in records:
        for s in (r.switch, r.canonical):
            uv = classify_budapest_type(s)
            assert uv is not None and set(uv) <= axes
            assert check_yang_baxter(s).verdict


def test_deterministic_and_parallel_consistent():
    cfg = SearchConfig(
        (Fraction(0), HALF, Fraction(1)), (Fraction(-1), -HALF, Fraction(0), HALF, Fraction(1)), ring_filter="hurwitz"
    )
    first = search(cfg, jobs=1)
    assert [r.serialize() for r in first] == [r.serialize() for r in search(cfg, jobs=1)]
    assert [r.serialize() for r in first] == [r.serialize() for r in search(cfg, jobs=2)]
    for r in first:
        assert check_yang_baxter(r.switch).verdict and check_yang_baxter(r.canonical).verdict
        assert norm_constraints_hold(r.switch)

from fractions import Fraction

from hypothesis import settings, strategies as st

from qswitch.rings import Quaternion
from qswitch.search import ROTATIONS, _rotate_switch, variant_group
from qswitch.switch import Switch, named_switch, switch_names

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small_rationals = st.fractions(min_value=-4, max_value=4, max_denominator=6)
quaternions = st.builds(Quaternion, small_rationals, small_rationals, small_rationals, small_rationals)
nonzero_quaternions = quaternions.filter(bool)

QUATERNION_SWITCHES = [n for n in switch_names() if not n.startswith("alexander")]


@st.composite
def verified_switches(draw):
    """Random images of catalog switches under symmetries, scaling and inner automorphisms."""
    s = named_switch(draw(st.sampled_from(QUATERNION_SWITCHES)))
    s = draw(st.sampled_from(variant_group(s)))
    s = _rotate_switch(s, draw(st.sampled_from(ROTATIONS)))
    t = draw(st.fractions(min_value=Fraction(1, 5), max_value=5, max_denominator=5))
    if draw(st.booleans()):
        t = -t
    q = draw(nonzero_quaternions)
    qi = q.inverse()
    a, b, c, d = (q * x * qi for x in (s.a, s.b * t, s.c / t, s.d))
    return Switch(a, b, c, d)

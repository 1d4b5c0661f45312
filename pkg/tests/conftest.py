from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from epg.cyclo import CycloNum, euler_phi

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ORDERS = [1, 2, 3, 4, 5, 6, 8, 12]

small_fracs = st.fractions(min_value=-20, max_value=20, max_denominator=6)


@st.composite
def cyclonums(draw, order=None):
    n = draw(st.sampled_from(ORDERS)) if order is None else order
    coeffs = draw(st.lists(small_fracs, min_size=euler_phi(n), max_size=euler_phi(n)))
    return CycloNum(n, coeffs)


def frac(x):
    return Fraction(x)

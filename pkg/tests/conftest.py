from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from hyperspinors.hypernum import HyperNumber
from hyperspinors.splitquat import SplitQuaternion

settings.register_profile(
    "default", deadline=None, max_examples=100, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_ints = st.integers(min_value=-50, max_value=50)
fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
hypernums = st.builds(HyperNumber, small_ints, small_ints)
rational_hypernums = st.builds(HyperNumber, fractions, fractions)
quaternions = st.builds(SplitQuaternion, small_ints, small_ints, small_ints, small_ints)


def frac(text: str) -> Fraction:
    return Fraction(text)

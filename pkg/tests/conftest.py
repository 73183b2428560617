from fractions import Fraction

from hypothesis import strategies as st

small_q = st.builds(
    Fraction,
    st.integers(min_value=-40, max_value=40),
    st.integers(min_value=1, max_value=12),
)

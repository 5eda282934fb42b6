from hypothesis import strategies as st

from otplab.bitstring import BitString


@st.composite
def bitstrings(draw, min_len=0, max_len=128):
    n = draw(st.integers(min_value=min_len, max_value=max_len))
    value = draw(st.integers(min_value=0, max_value=(1 << n) - 1)) if n else 0
    return BitString.from_int(value, n)


@st.composite
def equal_length_pairs(draw, min_len=0, max_len=128):
    n = draw(st.integers(min_value=min_len, max_value=max_len))
    top = (1 << n) - 1 if n else 0
    a = draw(st.integers(min_value=0, max_value=top))
    b = draw(st.integers(min_value=0, max_value=top))
    return BitString.from_int(a, n), BitString.from_int(b, n)

import pytest
from hypothesis import given

from otplab.bitstring import BitString, bits_from_text, text_from_bits, xor

from conftest import bitstrings, equal_length_pairs


def test_construct_from_text():
    s = BitString("1011001001")
    assert len(s) == 10
    assert s.to01() == "1011001001"
    assert s.value == 0b1011001001


def test_construct_from_iterable():
    assert BitString([1, 0, 1]).to01() == "101"
    assert BitString(()).to01() == ""


def test_construct_rejects_junk():
    with pytest.raises(ValueError):
        BitString("10x")
    with pytest.raises(ValueError):
        BitString([0, 2])


def test_from_int_bounds():
    assert BitString.from_int(5, 3).to01() == "101"
    with pytest.raises(ValueError):
        BitString.from_int(8, 3)
    with pytest.raises(ValueError):
        BitString.from_int(-1, 3)
    with pytest.raises(ValueError):
        BitString.from_int(1, 0)


def test_indexing_is_leftmost_first():
    s = BitString("100")
    assert s[0] == 1
    assert s[1] == 0
    assert s[-1] == 0
    assert list(s) == [1, 0, 0]
    with pytest.raises(IndexError):
        s[3]


def test_slicing_and_concat():
    s = BitString("101100")
    assert s[:4].to01() == "1011"
    assert s[4:].to01() == "00"
    assert (s[:4] + s[4:]) == s
    assert s[2:2].to01() == ""
    with pytest.raises(ValueError):
        s[::2]


def test_zeros_ones():
    assert BitString.zeros(4).to01() == "0000"
    assert BitString.ones(4).to01() == "1111"
    assert BitString.zeros(0) == BitString("")


def test_equality_includes_length():
    assert BitString("001") != BitString("01")
    assert BitString("001") != BitString("0010")
    assert hash(BitString("001")) == hash(BitString("001"))


def test_xor_worked_example():
    m = BitString("0010110101")
    k = BitString("1011001001")
    assert xor(m, k).to01() == "1001111100"


def test_xor_length_mismatch_is_error():
    with pytest.raises(ValueError):
        xor(BitString("10"), BitString("100"))


@given(equal_length_pairs())
def test_xor_self_inverse_and_commutes(pair):
    a, b = pair
    assert xor(xor(a, b), b) == a
    assert xor(a, b) == xor(b, a)
    assert xor(a, a) == BitString.zeros(len(a))
    assert xor(a, BitString.zeros(len(a))) == a


@given(bitstrings(max_len=64), bitstrings(max_len=64), bitstrings(max_len=64))
def test_xor_associative(a, b, c):
    n = min(len(a), len(b), len(c))
    a, b, c = a[:n], b[:n], c[:n]
    assert xor(xor(a, b), c) == xor(a, xor(b, c))


def test_dunder_xor_matches_function():
    a, b = BitString("0101"), BitString("0011")
    assert (a ^ b) == xor(a, b)


def test_text_codec_round_trip():
    bits = bits_from_text("COME AT 8 PM")
    assert len(bits) == 8 * len("COME AT 8 PM")
    assert text_from_bits(bits) == "COME AT 8 PM"


def test_text_from_bits_needs_whole_bytes():
    with pytest.raises(ValueError):
        text_from_bits(BitString("1010101"))


def test_repr_round_trips():
    s = BitString("0110")
    assert eval(repr(s)) == s

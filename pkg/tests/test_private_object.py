import pytest
from hypothesis import given

from otplab.bitstring import BitString, xor
from otplab.otp import Pad, encrypt
from otplab.private_object import (
    Statement,
    StatementParseError,
    TableObject,
    demo_object,
    encode_statements,
    otp_object,
    statement_from_line,
    statement_to_line,
    verify_statements,
)
from otplab.rng import RandomSource

from conftest import equal_length_pairs

PAD = BitString("1011001001")
MSG = BitString("0010110101")


def test_pad_object_features_are_pad_bits():
    obj = otp_object(PAD)
    assert obj.entropy_bits == 10
    assert obj.feature(1) == 1
    assert obj.feature(3) == 1
    assert obj.feature(10) == 1
    with pytest.raises(ValueError):
        obj.feature(0)
    with pytest.raises(ValueError):
        obj.feature(11)


def test_otp_object_rejects_empty_pad():
    with pytest.raises(ValueError):
        otp_object(BitString(""))


def test_worked_example_claimed_values():
    stmts = encode_statements(MSG, otp_object(PAD))
    claimed = BitString(s.claimed_value for s in stmts)
    assert claimed == BitString("1001111100")
    # The first two statements are true (message bits 0), the tenth is false.
    assert stmts[0].claimed_value == 1
    assert stmts[1].claimed_value == 0
    assert stmts[9].claimed_value == 0
    assert stmts[0].rendering == "bit 1 of the OTP is 1"


def test_statement_truth_against_pad():
    obj = otp_object(PAD)
    assert Statement(1, 1).is_true_of(obj)
    assert not Statement(10, 0).is_true_of(obj)


def test_all_zero_message_makes_true_statements():
    obj = otp_object(PAD)
    stmts = encode_statements(BitString.zeros(10), obj)
    assert all(s.is_true_of(obj) for s in stmts)
    assert BitString(s.claimed_value for s in stmts) == PAD


def test_verify_examples():
    obj = otp_object(PAD)
    assert verify_statements([Statement(1, 1)], obj) == BitString("0")
    assert verify_statements([Statement(10, 0)], obj) == BitString("1")


def test_each_bit_uses_its_own_feature():
    stmts = encode_statements(MSG, otp_object(PAD))
    assert [s.feature_index for s in stmts] == list(range(1, 11))


def test_message_longer_than_entropy_rejected():
    with pytest.raises(ValueError):
        encode_statements(BitString.zeros(11), otp_object(PAD))


@given(equal_length_pairs(min_len=1, max_len=64))
def test_claimed_values_equal_xor_ciphertext(pair):
    m, pad = pair
    stmts = encode_statements(m, otp_object(pad))
    claimed = BitString(s.claimed_value for s in stmts)
    assert claimed == xor(m, pad)
    assert claimed == encrypt(m, Pad(pad))


@given(equal_length_pairs(min_len=0, max_len=64))
def test_round_trip(pair):
    m, pad = pair
    if len(pad) == 0:
        return
    obj = otp_object(pad)
    assert verify_statements(encode_statements(m, obj), obj) == m


def test_table_object_and_demo():
    obj = demo_object()
    assert obj.entropy_bits == 8
    assert obj.feature(1) == 1
    assert obj.feature(3) == 0
    m = BitString("01010101")
    assert verify_statements(encode_statements(m, obj), obj) == m
    with pytest.raises(ValueError):
        TableObject([("broken", 2)])


def test_statement_equality_ignores_rendering():
    assert Statement(3, 1, "bit 3 of the OTP is 1") == Statement(3, 1)
    assert Statement(3, 1) != Statement(3, 0)
    assert Statement(3, 1) != Statement(4, 1)


def test_wire_form_round_trip():
    stmt = Statement(7, 0, "bit 7 of the OTP is 0")
    line = statement_to_line(stmt)
    assert line == "7 0 bit 7 of the OTP is 0"
    assert statement_from_line(line) == stmt
    assert statement_from_line("7 0") == Statement(7, 0)
    # Rendering is ignored for equality, so a tampered rendering is harmless.
    assert statement_from_line("7 0 some other words") == stmt


def test_wire_form_errors():
    for bad in ("", "7", "x 1", "7 2", "0 1", "7 x"):
        with pytest.raises(StatementParseError):
            statement_from_line(bad)


def test_wire_form_survives_random_messages():
    src = RandomSource(17)
    pad = src.bits(32)
    obj = otp_object(pad)
    m = src.bits(32)
    lines = [statement_to_line(s) for s in encode_statements(m, obj)]
    revived = [statement_from_line(line) for line in lines]
    assert verify_statements(revived, obj) == m

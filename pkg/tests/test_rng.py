from fractions import Fraction

import pytest

from otplab.bitstring import BitString
from otplab.rng import MASK64, RandomSource, derive_child_seed, splitmix64_next

# Reference outputs of the canonical splitmix64.c, frozen from a C run.
CANONICAL_WORDS = {
    0: [
        16294208416658607535,
        7960286522194355700,
        487617019471545679,
        17909611376780542444,
    ],
    42: [
        13679457532755275413,
        2949826092126892291,
        5139283748462763858,
        6349198060258255764,
    ],
    1234567: [
        6457827717110365317,
        3203168211198807973,
        9817491932198370423,
        4593380528125082431,
    ],
}


@pytest.mark.parametrize("seed", sorted(CANONICAL_WORDS))
def test_matches_canonical_generator(seed):
    src = RandomSource(seed)
    assert [src.next_word() for _ in range(4)] == CANONICAL_WORDS[seed]


def test_splitmix64_next_is_pure():
    word1, state1 = splitmix64_next(42)
    word2, state2 = splitmix64_next(42)
    assert (word1, state1) == (word2, state2)
    assert word1 == CANONICAL_WORDS[42][0]


def test_same_seed_same_stream():
    a = RandomSource(9001)
    b = RandomSource(9001)
    assert a.bits(64) == b.bits(64)
    assert a.bits(7) == b.bits(7)


def test_bits_golden_vector_seed_42():
    # Frozen after pinning the generator: top 16 bits of the first word.
    assert RandomSource(42).bits(16).to01() == "1011110111010111"
    assert RandomSource(42).bits(16).value == 48599


def test_bits_zero_consumes_nothing():
    src = RandomSource(5)
    assert src.bits(0) == BitString("")
    assert src.next_word() == RandomSource(5).next_word()


def test_bits_word_discipline():
    # bits(n) consumes ceil(n/64) words, MSB-first, truncated to n bits.
    for n in (1, 13, 63, 64, 65, 130):
        src = RandomSource(7)
        got = src.bits(n)
        ref = RandomSource(7)
        nwords = (n + 63) // 64
        acc = 0
        for _ in range(nwords):
            acc = (acc << 64) | ref.next_word()
        assert got.value == acc >> (64 * nwords - n)
        assert len(got) == n


def test_bits_rejects_negative():
    with pytest.raises(ValueError):
        RandomSource(1).bits(-1)


def test_ones_fraction_near_half():
    for seed in (0, 42, 2024):
        bits = RandomSource(seed).bits(1_000_000)
        ones = bin(bits.value).count("1")
        assert 0.497 <= ones / 1_000_000 <= 0.503


def test_randbelow_exact_and_in_range():
    src = RandomSource(11)
    seen = set()
    for _ in range(2000):
        v = src.randbelow(6)
        assert 0 <= v < 6
        seen.add(v)
    assert seen == set(range(6))
    assert RandomSource(0).randbelow(1) == 0
    with pytest.raises(ValueError):
        src.randbelow(0)


def test_choice_rational_exercises_all_weights():
    src = RandomSource(3)
    weights = [Fraction(1, 2), Fraction(1, 4), Fraction(1, 4)]
    counts = [0, 0, 0]
    for _ in range(8000):
        counts[src.choice_rational(weights)] += 1
    assert all(c > 0 for c in counts)
    assert abs(counts[0] / 8000 - 0.5) < 0.05
    assert abs(counts[1] / 8000 - 0.25) < 0.05


def test_choice_rational_rejects_bad_weights():
    src = RandomSource(3)
    with pytest.raises(ValueError):
        src.choice_rational([Fraction(-1, 2), Fraction(3, 2)])
    with pytest.raises(ValueError):
        src.choice_rational([0, 0])


def test_derive_child_seed_is_the_documented_formula():
    seed = 0xDEADBEEF
    for t in range(5):
        expected = (seed ^ ((0x9E3779B97F4A7C15 * (t + 1)) & MASK64)) & MASK64
        assert derive_child_seed(seed, t) == expected


def test_child_seeds_distinct():
    children = {derive_child_seed(77, t) for t in range(1000)}
    assert len(children) == 1000

"""Bit-exact bit strings of arbitrary length.

A :class:`BitString` is an ordered, immutable sequence of bits with an
explicit length that need not be byte-aligned.  Bits are written and indexed
left to right: index 0 is the leftmost bit, ``len(s) - 1`` the last one.
Protocol descriptions that speak of "position p" (1-based) map to index
``p - 1`` here.

Values are hashable and safe to share between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Union

BitsLike = Union[str, Iterable[int], "BitString"]


class BitString:
    """An immutable sequence of 0/1 bits, not necessarily byte-aligned.

    Internally stored as ``(value, length)`` where ``value`` is the integer
    whose binary expansion (MSB first, zero-padded to ``length``) spells the
    bit string.
    """

    __slots__ = ("_value", "_length")

    def __init__(self, bits: BitsLike = ()) -> None:
        if isinstance(bits, BitString):
            value, length = bits._value, bits._length
        elif isinstance(bits, str):
            if not set(bits) <= {"0", "1"}:
                raise ValueError("bit string text may contain only '0' and '1'")
            length = len(bits)
            value = int(bits, 2) if bits else 0
        else:
            value = 0
            length = 0
            for b in bits:
                if b not in (0, 1):
                    raise ValueError(f"bit must be 0 or 1, got {b!r}")
                value = (value << 1) | b
                length += 1
        self._value = value
        self._length = length

    @classmethod
    def from_int(cls, value: int, length: int) -> "BitString":
        """Bit string of ``length`` bits spelling ``value`` MSB-first."""
        if length < 0:
            raise ValueError("length must be >= 0")
        if value < 0 or value >> length:
            raise ValueError(f"value {value} does not fit in {length} bits")
        self = cls.__new__(cls)
        self._value = value
        self._length = length
        return self

    @classmethod
    def zeros(cls, n: int) -> "BitString":
        return cls.from_int(0, n)

    @classmethod
    def ones(cls, n: int) -> "BitString":
        if n < 0:
            raise ValueError("length must be >= 0")
        return cls.from_int((1 << n) - 1, n)

    @property
    def value(self) -> int:
        """The bits read as a binary number (MSB first)."""
        return self._value

    @property
    def length(self) -> int:
        return self._length

    def __len__(self) -> int:
        return self._length

    def __bool__(self) -> bool:
        return self._length > 0

    def __getitem__(self, index) -> Union[int, "BitString"]:
        if isinstance(index, slice):
            start, stop, step = index.indices(self._length)
            if step != 1:
                raise ValueError("BitString slices must be contiguous (step 1)")
            width = max(0, stop - start)
            if width == 0:
                return BitString.from_int(0, 0)
            chunk = (self._value >> (self._length - stop)) & ((1 << width) - 1)
            return BitString.from_int(chunk, width)
        if index < 0:
            index += self._length
        if not 0 <= index < self._length:
            raise IndexError("bit index out of range")
        return (self._value >> (self._length - 1 - index)) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(self._length):
            yield (self._value >> (self._length - 1 - i)) & 1

    def __add__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        return BitString.from_int(
            (self._value << other._length) | other._value,
            self._length + other._length,
        )

    def __xor__(self, other: "BitString") -> "BitString":
        if not isinstance(other, BitString):
            return NotImplemented
        return xor(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitString):
            return NotImplemented
        return self._value == other._value and self._length == other._length

    def __hash__(self) -> int:
        return hash((self._value, self._length))

    def to01(self) -> str:
        """ASCII text form: one '0'/'1' character per bit."""
        return format(self._value, f"0{self._length}b") if self._length else ""

    def __str__(self) -> str:
        return self.to01()

    def __repr__(self) -> str:
        return f"BitString({self.to01()!r})"


def xor(a: BitString, b: BitString) -> BitString:
    """Bitwise XOR of two equal-length bit strings.

    Unequal lengths are an error: silently truncating either operand would
    corrupt pads and ciphertexts.
    """
    if a.length != b.length:
        raise ValueError(
            f"xor requires equal lengths, got {a.length} and {b.length} bits"
        )
    return BitString.from_int(a.value ^ b.value, a.length)


def bits_from_text(text: str) -> BitString:
    """Encode text as bits using 8-bit (Latin-1) character codes, MSB first."""
    try:
        data = text.encode("latin-1")
    except UnicodeEncodeError as exc:
        raise ValueError("text encoding supports 8-bit characters only") from exc
    return BitString.from_int(int.from_bytes(data, "big"), 8 * len(data))


def text_from_bits(bits: BitString) -> str:
    """Inverse of :func:`bits_from_text`; requires a whole number of bytes."""
    if bits.length % 8:
        raise ValueError("bit length must be a multiple of 8 to decode as text")
    nbytes = bits.length // 8
    return bits.value.to_bytes(nbytes, "big").decode("latin-1")

"""Classical one-time-pad encryption: keygen, XOR encrypt, XOR decrypt.

The one-time discipline is advisory: :func:`encrypt` and :func:`decrypt`
refuse a pad whose ``consumed`` flag is set and set it themselves, but the
flag is plain data.  Analysis code that deliberately replays pads works on
raw :class:`~otplab.bitstring.BitString` values instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bitstring import BitString, xor
from .rng import RandomSource


class PadReuseError(ValueError):
    """A pad marked consumed was offered for another operation."""


@dataclass
class Pad:
    """A shared secret pad with a single-use flag."""

    bits: BitString
    consumed: bool = field(default=False)

    def _take(self) -> BitString:
        if self.consumed:
            raise PadReuseError("pad already consumed; a one-time pad is used once")
        self.consumed = True
        return self.bits


def keygen(src: RandomSource, n: int) -> Pad:
    """Generate a fresh n-bit pad (n >= 1) from the given source."""
    if n < 1:
        raise ValueError("pad length must be >= 1")
    return Pad(bits=src.bits(n))


def encrypt(message: BitString, pad: Pad) -> BitString:
    """XOR the message with the pad; marks the pad consumed."""
    if message.length != pad.bits.length:
        raise ValueError(
            f"message is {message.length} bits but pad is {pad.bits.length}"
        )
    return xor(message, pad._take())


def decrypt(ciphertext: BitString, pad: Pad) -> BitString:
    """XOR the ciphertext with the pad; marks the pad consumed."""
    if ciphertext.length != pad.bits.length:
        raise ValueError(
            f"ciphertext is {ciphertext.length} bits but pad is {pad.bits.length}"
        )
    return xor(ciphertext, pad._take())

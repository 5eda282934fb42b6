"""Encryption as statements about a shared secret object.

Instead of XORing bits, the sender emits one True/False assertion about a
mutually known *private object* per message bit: a true statement carries a
0, a false one carries a 1.  The receiver checks each statement against the
object and reads the bits back off.  When the object is a pad and feature
``i`` is "bit i of the pad", the claimed values are exactly the XOR
ciphertext, which is what makes the reinterpretation faithful.

Each message bit must consume its own feature; reusing or correlating
features is what breaks the secrecy argument, so the encoder walks feature
indices 1, 2, 3, ... in order.
"""

from __future__ import annotations

import abc
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from .bitstring import BitString


class StatementParseError(ValueError):
    """A statement line off the wire is malformed."""


class PrivateObject(abc.ABC):
    """An object known only to the two endpoints, read as boolean features.

    Features are indexed 1-based; ``entropy_bits`` is the number of
    independent features and bounds how many message bits the object can
    carry.  Implementations must be deterministic and immutable.
    """

    @property
    @abc.abstractmethod
    def entropy_bits(self) -> int: ...

    @abc.abstractmethod
    def feature(self, index: int) -> int:
        """The bit value of feature ``index`` (1 <= index <= entropy_bits)."""

    def describe(self, index: int, claimed_value: int) -> str:
        """Human rendering of the claim 'feature <index> equals <value>'."""
        return f"feature {index} of the object is {claimed_value}"

    def _check_index(self, index: int) -> None:
        if not 1 <= index <= self.entropy_bits:
            raise ValueError(
                f"feature index {index} outside 1..{self.entropy_bits}"
            )


@dataclass(frozen=True)
class Statement:
    """An assertion that one feature of the object has a particular value.

    Equality and truth are decided by ``(feature_index, claimed_value)``
    alone; the rendering is display-only.
    """

    feature_index: int
    claimed_value: int
    rendering: str = field(default="", compare=False)

    def is_true_of(self, obj: PrivateObject) -> bool:
        obj._check_index(self.feature_index)
        return obj.feature(self.feature_index) == self.claimed_value


class PadObject(PrivateObject):
    """A pad viewed as a private object: feature i is bit i of the pad."""

    def __init__(self, pad: BitString) -> None:
        if pad.length < 1:
            raise ValueError("pad object needs at least one bit")
        self._pad = pad

    @property
    def pad(self) -> BitString:
        return self._pad

    @property
    def entropy_bits(self) -> int:
        return self._pad.length

    def feature(self, index: int) -> int:
        self._check_index(index)
        return self._pad[index - 1]

    def describe(self, index: int, claimed_value: int) -> str:
        return f"bit {index} of the OTP is {claimed_value}"


class TableObject(PrivateObject):
    """A fixed table of named boolean features; stands in for physical objects."""

    def __init__(self, features: Sequence[Tuple[str, int]]) -> None:
        for name, value in features:
            if value not in (0, 1):
                raise ValueError(f"feature {name!r} must be 0 or 1")
        self._features = tuple(features)

    @property
    def entropy_bits(self) -> int:
        return len(self._features)

    def feature(self, index: int) -> int:
        self._check_index(index)
        return self._features[index - 1][1]

    def describe(self, index: int, claimed_value: int) -> str:
        name = self._features[index - 1][0]
        return f"'{name}' is {'true' if claimed_value else 'false'}"


def otp_object(pad: BitString) -> PadObject:
    """Adapter from a pad to the private-object view."""
    return PadObject(pad)


def demo_object() -> TableObject:
    """A small fictional creature with eight independent yes/no features."""
    return TableObject(
        [
            ("the creature has three eyes", 1),
            ("the creature has two hands", 1),
            ("the creature has four legs", 0),
            ("the creature has five legs", 1),
            ("the creature has a tail", 0),
            ("the creature has wings", 1),
            ("the creature has horns", 0),
            ("the creature has fur", 0),
        ]
    )


def encode_statements(message: BitString, obj: PrivateObject) -> List[Statement]:
    """One statement per message bit: true claims carry 0, false carry 1."""
    if message.length > obj.entropy_bits:
        raise ValueError(
            f"message has {message.length} bits but the object offers only "
            f"{obj.entropy_bits} independent features"
        )
    statements = []
    for j, bit in enumerate(message, start=1):
        claimed = obj.feature(j) ^ bit
        statements.append(
            Statement(
                feature_index=j,
                claimed_value=claimed,
                rendering=obj.describe(j, claimed),
            )
        )
    return statements


def verify_statements(
    statements: Iterable[Statement], obj: PrivateObject
) -> BitString:
    """Check each statement against the object: true -> 0, false -> 1."""
    return BitString(0 if stmt.is_true_of(obj) else 1 for stmt in statements)


def statement_to_line(stmt: Statement) -> str:
    """Wire form: ``<index> <claimed_value> <rendering>``."""
    line = f"{stmt.feature_index} {stmt.claimed_value}"
    return f"{line} {stmt.rendering}" if stmt.rendering else line


def statement_from_line(line: str) -> Statement:
    """Parse the wire form; the rendering tail is kept but never compared."""
    parts = line.split(maxsplit=2)
    if len(parts) < 2:
        raise StatementParseError(
            f"statement line needs '<index> <value>': {line!r}"
        )
    try:
        index = int(parts[0])
        claimed = int(parts[1])
    except ValueError as exc:
        raise StatementParseError(f"malformed statement line: {line!r}") from exc
    if claimed not in (0, 1):
        raise StatementParseError(f"claimed value must be 0 or 1: {line!r}")
    if index < 1:
        raise StatementParseError(f"feature index must be >= 1: {line!r}")
    rendering = parts[2] if len(parts) == 3 else ""
    return Statement(feature_index=index, claimed_value=claimed, rendering=rendering)

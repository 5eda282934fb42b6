"""A bit channel built on theoremhood in a tiny formal system.

The two endpoints share a formal system; the sender transmits strings of
that system and each string carries one bit: theorems convey 0,
well-formed non-theorems convey 1.  The receiver decides theoremhood to
read the bit back.

The concrete system here is Hofstadter's pq-system.  Well-formed strings
look like ``--p---q-----``: a group of hyphens, one ``p``, a group of
hyphens, one ``q``, a group of hyphens, with every group nonempty.  Writing
``(x, y, z)`` for the group sizes:

* axioms: ``(a, 1, a+1)`` for every ``a >= 1``;
* inference rule: from ``(a, b, c)`` derive ``(a, b+1, c+1)``.

A string is a theorem exactly when ``x + y == z``, and the decision
procedure :func:`is_theorem` uses that arithmetic shortcut.  The
independent check :func:`derive_oracle` knows nothing about it: it searches
derivations mechanically from the axioms.

The system is decidable and consistent, which is precisely what makes the
receiver's verdict computable; it is also utterly insecure, and nothing
here claims otherwise.  It demonstrates the channel, not a cipher.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass

from .rng import RandomSource


class ParseError(ValueError):
    """Input is not a well-formed string of the system."""


class Verdict(enum.Enum):
    THEOREM = "theorem"
    NON_THEOREM = "non-theorem"
    NOT_WELL_FORMED = "not-well-formed"


@dataclass(frozen=True)
class PqString:
    """A parsed well-formed string: hyphen group sizes around 'p' and 'q'."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z) < 1:
            raise ValueError("all three hyphen groups must be nonempty")

    @property
    def surface_length(self) -> int:
        return self.x + self.y + self.z + 2

    def render(self) -> str:
        return "-" * self.x + "p" + "-" * self.y + "q" + "-" * self.z


def parse_pq(text: str) -> PqString:
    """Parse ``-..-p-..-q-..-``; anything else raises :class:`ParseError`."""
    x = y = z = 0
    seen_p = seen_q = False
    for ch in text:
        if ch == "-":
            if seen_q:
                z += 1
            elif seen_p:
                y += 1
            else:
                x += 1
        elif ch == "p":
            if seen_p or seen_q:
                raise ParseError("exactly one 'p' allowed, before 'q'")
            seen_p = True
        elif ch == "q":
            if seen_q:
                raise ParseError("exactly one 'q' allowed")
            if not seen_p:
                raise ParseError("'q' before 'p'")
            seen_q = True
        else:
            raise ParseError(f"character {ch!r} outside alphabet '-pq'")
    if not seen_p:
        raise ParseError("missing 'p'")
    if not seen_q:
        raise ParseError("missing 'q'")
    if x < 1 or y < 1 or z < 1:
        raise ParseError("every hyphen group must be nonempty")
    return PqString(x, y, z)


def verdict(text: str) -> Verdict:
    """Classify arbitrary text; never raises."""
    try:
        ps = parse_pq(text)
    except ParseError:
        return Verdict.NOT_WELL_FORMED
    return Verdict.THEOREM if is_theorem(ps) else Verdict.NON_THEOREM


def is_theorem(ps: PqString) -> bool:
    """Fast decision procedure: theorem iff x + y == z."""
    return ps.x + ps.y == ps.z


def derive_oracle(ps: PqString, max_steps: int) -> bool:
    """Decide theoremhood by brute-force derivation, ignoring arithmetic.

    Breadth-first search from every axiom ``(a, 1, a+1)`` that fits within
    the target's surface length, applying the inference rule up to
    ``max_steps`` times.  The rule only ever lengthens a string, so pruning
    to the target length keeps the search finite.  With
    ``max_steps >= y - 1`` the answer is exact.
    """
    limit = ps.surface_length
    target = (ps.x, ps.y, ps.z)
    frontier = deque()
    seen = set()
    a = 1
    while a + 1 + (a + 1) + 2 <= limit:
        frontier.append(((a, 1, a + 1), 0))
        a += 1
    while frontier:
        state, depth = frontier.popleft()
        if state in seen:
            continue
        seen.add(state)
        if state == target:
            return True
        if depth >= max_steps:
            continue
        sx, sy, sz = state
        if sx + (sy + 1) + (sz + 1) + 2 <= limit:
            frontier.append(((sx, sy + 1, sz + 1), depth + 1))
    return False


def enumerate_wellformed(max_surface_length: int):
    """Yield every well-formed string with surface length <= the bound."""
    budget = max_surface_length - 2
    for total in range(3, budget + 1):
        for x in range(1, total - 1):
            for y in range(1, total - x):
                yield PqString(x, y, total - x - y)


def _count_theorems(budget: int) -> int:
    # Theorems have x + y = z, so total hyphens 2z; z ranges 2..budget//2
    # and each z admits z - 1 choices of x.
    top = budget // 2
    return max(0, top * (top - 1) // 2)


def _count_wellformed(budget: int) -> int:
    # Compositions of s into 3 positive parts, summed over s <= budget.
    if budget < 3:
        return 0
    return budget * (budget - 1) * (budget - 2) // 6


def _unrank_theorem(rank: int) -> PqString:
    z = 2
    while rank >= z - 1:
        rank -= z - 1
        z += 1
    x = rank + 1
    return PqString(x, z - x, z)


def _unrank_nontheorem(rank: int, budget: int) -> PqString:
    for total in range(3, budget + 1):
        in_total = (total - 1) * (total - 2) // 2
        if total % 2 == 0:
            in_total -= total // 2 - 1
        if rank >= in_total:
            rank -= in_total
            continue
        for x in range(1, total - 1):
            count_y = total - x - 1
            theorem_y = total // 2 - x if total % 2 == 0 else 0
            has_theorem = 1 <= theorem_y <= count_y
            if rank >= count_y - has_theorem:
                rank -= count_y - has_theorem
                continue
            y = rank + 1
            if has_theorem and y >= theorem_y:
                y += 1
            return PqString(x, y, total - x - y)
    raise AssertionError("rank out of range")


def encode_bit(bit: int, src: RandomSource, size_bound: int) -> str:
    """Emit a uniformly random string of surface length <= size_bound that
    carries ``bit`` (0 -> theorem, 1 -> well-formed non-theorem).

    Uniformity within each class keeps the obvious length statistics from
    distinguishing the two classes more than the system already allows; no
    secrecy is claimed either way.
    """
    if bit not in (0, 1):
        raise ValueError("bit must be 0 or 1")
    if size_bound < 6:
        raise ValueError("size bound must be >= 6 (smallest theorem is '-p-q--')")
    budget = size_bound - 2
    if bit == 0:
        total = _count_theorems(budget)
        ps = _unrank_theorem(src.randbelow(total))
    else:
        total = _count_wellformed(budget) - _count_theorems(budget)
        ps = _unrank_nontheorem(src.randbelow(total), budget)
    return ps.render()


def decode_string(text: str) -> int:
    """Read the bit carried by a string: theorem -> 0, non-theorem -> 1."""
    ps = parse_pq(text)
    return 0 if is_theorem(ps) else 1

"""
Parser for the textual braid grammar.

Tokens are separated by whitespace. A token is ``t`` or ``sK`` (K >= 1),
optionally followed by ``^E`` with E a nonzero integer, e.g. ``t s1^3 s2^-1``.
"""

import re
from typing import Iterator, List, Tuple

from lens_alexander.braids.words import BraidLetter, MixedBraidWord, PlainBraidWord
from lens_alexander.errors.exceptions import BraidSyntaxError, IndexOutOfRangeError

_TOKEN = re.compile(r"^(?:(?P<t>t)|s(?P<index>\d+))(?:\^(?P<exp>[+-]?\d+))?$")


def _tokens(text: str) -> Iterator[Tuple[int, str, int, int]]:
    """Yield ``(position, generator, index, exponent)`` per token."""
    for match in re.finditer(r"\S+", text):
        token, position = match.group(), match.start()
        parsed = _TOKEN.match(token)
        if parsed is None:
            raise BraidSyntaxError(position, f"Unrecognised token '{token}'")
        exp = int(parsed.group("exp")) if parsed.group("exp") is not None else 1
        if exp == 0:
            raise BraidSyntaxError(position, f"Zero exponent in '{token}'")
        if parsed.group("t"):
            yield position, "t", 0, exp
        else:
            yield position, "s", int(parsed.group("index")), exp


def parse_braid(text: str, n: int) -> MixedBraidWord:
    """
    Parse a mixed braid word in B_(1,n).

    Raises:
        BraidSyntaxError: On malformed tokens
        IndexOutOfRangeError: On ``sK`` with K outside 1..n-1
    """
    letters: List[BraidLetter] = []
    for position, gen, index, exp in _tokens(text):
        sign = 1 if exp > 0 else -1
        if gen == "t":
            letters.extend([BraidLetter.t(sign)] * abs(exp))
            continue
        if not 1 <= index < n:
            raise IndexOutOfRangeError(
                f"s{index} at position {position} is not a generator of B_(1,{n})"
            )
        letters.extend([BraidLetter.sigma(index, sign)] * abs(exp))
    return MixedBraidWord(n, tuple(letters))


def parse_plain_braid(text: str, m: int) -> PlainBraidWord:
    """
    Parse a classical braid word in B_m; ``t`` is rejected.

    Raises:
        BraidSyntaxError: On malformed tokens or a ``t`` token
        IndexOutOfRangeError: On ``sK`` with K outside 1..m-1
    """
    letters: List[Tuple[int, int]] = []
    for position, gen, index, exp in _tokens(text):
        if gen == "t":
            raise BraidSyntaxError(position, "'t' is not a classical braid generator")
        if not 1 <= index < m:
            raise IndexOutOfRangeError(
                f"s{index} at position {position} is not a generator of B_{m}"
            )
        letters.extend([(index, 1 if exp > 0 else -1)] * abs(exp))
    return PlainBraidWord(m, tuple(letters))

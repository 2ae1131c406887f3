"""Words over the ordered alphabet, variable words, and identities.

A word is a plain tuple. Alphabet letters are positive ints; variables are
short lowercase strings. The two never mix inside one word, but every helper
here works on either kind.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence, Tuple

Letter = int
Variable = str
Word = Tuple[Hashable, ...]


class ParseError(ValueError):
    """Malformed word or identity text."""


def content(w: Sequence) -> Counter:
    """Multiset of letters of `w`; absent letters have no entry."""
    return Counter(w)


def support(w: Sequence) -> tuple:
    """Letters occurring in `w`, increasing."""
    return tuple(sorted(set(w)))


def restrict(w: Sequence, letters: Iterable) -> tuple:
    """Subsequence of `w` made of the letters in `letters`."""
    keep = set(letters)
    return tuple(a for a in w if a in keep)


def check_word(w: Sequence) -> tuple:
    w = tuple(w)
    for a in w:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise ValueError(f"not a letter of the alphabet: {a!r}")
    return w


def parse_word(text: str) -> tuple:
    """Parse "3123" or "3,1,2,3" into a tuple of ints. "ε" and "" are empty."""
    text = text.strip()
    if text in ("", "ε"):
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
        if not all(p.isdigit() for p in parts):
            raise ParseError(f"bad comma-separated word: {text!r}")
        w = tuple(int(p) for p in parts)
    elif text.isdigit():
        w = tuple(int(c) for c in text)
    else:
        raise ParseError(f"bad word: {text!r}")
    if any(a < 1 for a in w):
        raise ParseError(f"letters must be positive: {text!r}")
    return w


def format_word(w: Sequence[int]) -> str:
    if not w:
        return "ε"
    if all(a <= 9 for a in w):
        return "".join(str(a) for a in w)
    return ",".join(str(a) for a in w)


_VAR_SIDE = re.compile(r"[a-z]*")


def parse_variable_word(text: str) -> tuple:
    """Parse a side such as "xyzxty" (spaces ignored) into one-char variables."""
    text = "".join(text.split())
    if text == "ε":
        return ()
    if not _VAR_SIDE.fullmatch(text):
        raise ParseError(f"variables are lowercase letters: {text!r}")
    return tuple(text)


def format_variable_word(w: Sequence[str]) -> str:
    return "".join(w) if w else "ε"


@dataclass(frozen=True)
class Identity:
    lhs: tuple
    rhs: tuple

    def __post_init__(self):
        object.__setattr__(self, "lhs", tuple(self.lhs))
        object.__setattr__(self, "rhs", tuple(self.rhs))

    @classmethod
    def parse(cls, text: str) -> "Identity":
        for sep in ("≈", "="):
            if sep in text:
                left, _, right = text.partition(sep)
                if sep in right:
                    raise ParseError(f"more than one {sep!r} in {text!r}")
                return cls(parse_variable_word(left), parse_variable_word(right))
        raise ParseError(f"identity needs '=': {text!r}")

    @property
    def support(self) -> tuple:
        return support(self.lhs + self.rhs)

    @property
    def length(self) -> int:
        return max(len(self.lhs), len(self.rhs))

    def swapped(self) -> "Identity":
        return Identity(self.rhs, self.lhs)

    def reversed(self) -> "Identity":
        return Identity(self.lhs[::-1], self.rhs[::-1])

    def is_trivial(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self):
        return f"{format_variable_word(self.lhs)} = {format_variable_word(self.rhs)}"


def is_balanced(identity: Identity) -> bool:
    return content(identity.lhs) == content(identity.rhs)

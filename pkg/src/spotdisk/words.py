"""Freely reduced words in a free group of fixed rank.

Letters are nonzero signed integers: ``+i`` is the i-th basis generator
(written ``x_i``), ``-i`` is its inverse (written ``X_i``).  Words are
immutable, always stored freely reduced, and carry their ambient rank;
binary operations refuse mismatched ranks.  The empty word is the
identity.  Everything here is pure and safe for concurrent use.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import ParseError, RankError

__all__ = [
    "Generator",
    "ReducedWord",
    "reduce",
    "concat",
    "inverse",
    "power",
    "subword",
    "subwords",
    "parse",
    "format_word",
    "format_compact",
]


@dataclass(frozen=True)
class Generator:
    """A single basis letter: index in ``1..rank``, sign +1 or -1."""

    index: int
    sign: int

    def __post_init__(self) -> None:
        if self.index < 1:
            raise RankError(f"generator index must be positive, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"generator sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_letter(cls, letter: int) -> "Generator":
        if letter == 0:
            raise RankError("0 is not a letter")
        return cls(abs(letter), 1 if letter > 0 else -1)

    @property
    def letter(self) -> int:
        return self.index * self.sign

    def inverse(self) -> "Generator":
        return Generator(self.index, -self.sign)


@dataclass(frozen=True)
class ReducedWord:
    """A freely reduced word over the rank-``rank`` basis.

    Construction rejects unreduced letter sequences; use :func:`reduce`
    to build a word from an arbitrary sequence.
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 2:
            raise RankError(f"rank must be at least 2, got {self.rank}")
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        for a in letters:
            if a == 0 or abs(a) > self.rank:
                raise RankError(f"letter {a} outside rank {self.rank}")
        for a, b in zip(letters, letters[1:]):
            if a == -b:
                raise ValueError(f"letter sequence {letters} is not freely reduced")

    @classmethod
    def identity(cls, rank: int) -> "ReducedWord":
        return cls(rank, ())

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def generators(self) -> Iterator[Generator]:
        for a in self.letters:
            yield Generator.from_letter(a)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "ReducedWord") -> "ReducedWord":
        return concat(self, other)

    def __invert__(self) -> "ReducedWord":
        return inverse(self)

    def __pow__(self, n: int) -> "ReducedWord":
        return power(self, n)

    def __str__(self) -> str:
        return format_word(self)


def reduce(letters: Iterable[int], rank: int) -> ReducedWord:
    """Freely reduce a raw letter sequence.

    >>> str(reduce([1, -1], 2))
    ''
    >>> str(reduce([1, 2, -2, 1], 2))
    'x1 x1'
    """
    stack: list[int] = []
    for a in letters:
        if a == 0 or abs(a) > rank:
            raise RankError(f"letter {a} outside rank {rank}")
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return ReducedWord(rank, tuple(stack))


def concat(u: ReducedWord, v: ReducedWord) -> ReducedWord:
    """Reduced product ``u v``, read left to right."""
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")
    stack = list(u.letters)
    for a in v.letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return ReducedWord(u.rank, tuple(stack))


def inverse(w: ReducedWord) -> ReducedWord:
    """Reversed sequence with flipped signs; reduced by construction."""
    return ReducedWord(w.rank, tuple(-a for a in reversed(w.letters)))


def power(w: ReducedWord, n: int) -> ReducedWord:
    base = w if n >= 0 else inverse(w)
    out = ReducedWord.identity(w.rank)
    for _ in range(abs(n)):
        out = concat(out, base)
    return out


def subword(w: ReducedWord, start: int, stop: int) -> ReducedWord:
    """Contiguous subword ``w[start:stop]`` (reduced, being a slice of a
    reduced word)."""
    if not 0 <= start <= stop <= len(w):
        raise IndexError(f"subword range [{start}, {stop}) outside word of length {len(w)}")
    return ReducedWord(w.rank, w.letters[start:stop])


def subwords(w: ReducedWord) -> Iterator[tuple[int, int, ReducedWord]]:
    """Enumerate all nonempty contiguous subwords as ``(start, stop, word)``.

    A word of length n yields n(n+1)/2 entries, in lexicographic
    ``(start, stop)`` order.
    """
    n = len(w)
    for start in range(n):
        for stop in range(start + 1, n + 1):
            yield start, stop, subword(w, start, stop)


_TOKEN = re.compile(r"[xX][0-9]+\Z")
_COMPACT = re.compile(r"[A-Za-z]+\Z")


def parse(text: str, rank: int) -> ReducedWord:
    """Parse word text and freely reduce it.

    Two grammars are accepted: whitespace-separated tokens (``x3`` for a
    generator, ``X3`` for its inverse) and compact letter runs
    (``a..z`` for generators 1..26, ``A..Z`` for inverses).  Mixing the
    two forms is rejected.

    >>> parse("x1 X1", 2).is_identity
    True
    >>> str(parse("abA", 2))
    'x1 x2 X1'
    """
    chunks = text.split()
    if not chunks:
        return ReducedWord.identity(rank)
    raw: list[int] = []
    if all(_TOKEN.fullmatch(c) for c in chunks):
        for c in chunks:
            index = int(c[1:])
            if index == 0 or index > rank:
                raise RankError(f"letter index in {c!r} outside 1..{rank}")
            raw.append(index if c[0] == "x" else -index)
    elif all(_COMPACT.fullmatch(c) for c in chunks):
        for c in chunks:
            for ch in c:
                index = ord(ch.lower()) - ord("a") + 1
                if index > rank:
                    raise RankError(f"letter {ch!r} outside rank {rank}")
                raw.append(index if ch.islower() else -index)
    else:
        raise ParseError(f"cannot parse word text {text!r}")
    return reduce(raw, rank)


def format_word(w: ReducedWord) -> str:
    """Token-form rendering; round-trips through :func:`parse`.

    The identity renders as the empty string.
    """
    return " ".join(f"x{a}" if a > 0 else f"X{-a}" for a in w.letters)


def format_compact(w: ReducedWord) -> str:
    """Compact rendering (``a``/``A`` for x1/X1); needs letter indices <= 26."""
    if any(abs(a) > 26 for a in w.letters):
        raise ValueError("compact form only covers letter indices up to 26")
    return "".join(
        chr(ord("a") + a - 1) if a > 0 else chr(ord("A") - a - 1) for a in w.letters
    )

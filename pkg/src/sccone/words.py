"""Reduced words over a signed alphabet.

A letter is a nonzero int: +(g+1) is generator g, -(g+1) its inverse,
where g indexes into the owning presentation's alphabet.  Words are
immutable tuples of letters; all exported operations return reduced
words.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Tuple

Letter = int
Letters = Tuple[int, ...]


def free_reduce(letters: Iterable[int]) -> Letters:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def invert(letters: Iterable[int]) -> Letters:
    return tuple(-x for x in reversed(tuple(letters)))


def is_reduced(letters: Letters) -> bool:
    return all(letters[i] != -letters[i + 1] for i in range(len(letters) - 1))


def is_cyclically_reduced(letters: Letters) -> bool:
    if not is_reduced(letters):
        return False
    return len(letters) < 2 or letters[0] != -letters[-1]


def cyclic_reduce(letters: Letters) -> tuple[Letters, Letters]:
    """Return (core, conjugator) with word = conjugator * core * conjugator^-1.

    The input must be reduced.
    """
    w = tuple(letters)
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi], w[:lo]


def concat(*parts: Iterable[int]) -> Letters:
    merged: list[int] = []
    for p in parts:
        merged.extend(p)
    return free_reduce(merged)


def rotate(letters: Letters, k: int) -> Letters:
    n = len(letters)
    if n == 0:
        return letters
    k %= n
    return letters[k:] + letters[:k]


def letter_sort_key(x: int) -> int:
    # a < a^-1 < b < b^-1 < ...
    g = abs(x) - 1
    return 2 * g + (0 if x > 0 else 1)


def shortlex_key(letters: Letters) -> tuple[int, tuple[int, ...]]:
    return (len(letters), tuple(letter_sort_key(x) for x in letters))


class Word:
    """Immutable reduced word.  Thin wrapper over a tuple of letters."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = (), reduce: bool = True):
        lt = tuple(letters)
        if reduce:
            lt = free_reduce(lt)
        self.letters: Letters = lt

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(concat(self.letters, other.letters), reduce=False)

    def inverse(self) -> "Word":
        return Word(invert(self.letters), reduce=False)

    def cyclic_reduce(self) -> tuple["Word", "Word"]:
        core, conj = cyclic_reduce(self.letters)
        return Word(core, reduce=False), Word(conj, reduce=False)

    def rotated(self, k: int) -> "Word":
        return Word(rotate(self.letters, k), reduce=False)

    def is_cyclically_reduced(self) -> bool:
        return is_cyclically_reduced(self.letters)

    def shortlex_key(self):
        return shortlex_key(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.letters!r})"


EPSILON = Word(())

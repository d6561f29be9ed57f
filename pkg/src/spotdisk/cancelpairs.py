"""Cancelling pairs, nested families, and conjugate-reduced length bounds.

A cancelling pair in a reduced word is a pair of disjoint subword
occurrences of the form ``u``, ``u^-1``.  A family of such pairs is
nested when for any two pairs, one member of the second pair lies
between the two members of the first exactly when the other member
does.  Erasing a family and measuring what is left gives a computable
lower bound for the conjugate-reduced length, which a bounded
decomposition search approximates from above.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import CapExceeded
from .whitehead import simple_length, subword_simple_lengths
from .words import ReducedWord, concat, inverse, subword

__all__ = [
    "CancellingPair",
    "CancellingFamily",
    "ConjugateReducedWitness",
    "validate_family",
    "enumerate_nested_families",
    "erased_simple_length",
    "cr_lower_bound",
    "cr_bruteforce",
]

DEFAULT_FAMILY_CAP = 20
DEFAULT_CR_CAP = 32


@dataclass(frozen=True)
class CancellingPair:
    """Two index ranges ``[i1, j1)``, ``[i2, j2)`` with ``j1 <= i2``; the
    letters of the first range must spell the inverse of the second."""

    first: tuple[int, int]
    second: tuple[int, int]


@dataclass(frozen=True)
class CancellingFamily:
    pairs: tuple[CancellingPair, ...]


@dataclass(frozen=True)
class ConjugateReducedWitness:
    """Conjugate-piece decomposition and its cost.

    ``decomposition`` lists pairs ``(v, u)``; the product of the
    conjugates ``u^-1 v u`` freely reduces to the host word, and
    ``value`` equals (number of factors - 1) plus the sum of the simple
    lengths of the ``v`` pieces.
    """

    value: int
    decomposition: tuple[tuple[ReducedWord, ReducedWord], ...]


def _disjoint(r: tuple[int, int], s: tuple[int, int]) -> bool:
    return r[1] <= s[0] or s[1] <= r[0]


def _between(r: tuple[int, int], host: CancellingPair) -> bool:
    return host.first[1] <= r[0] and r[1] <= host.second[0]


def _compatible(p: CancellingPair, q: CancellingPair) -> bool:
    for r in (q.first, q.second):
        for s in (p.first, p.second):
            if not _disjoint(r, s):
                return False
    return _between(q.first, p) == _between(q.second, p) and _between(
        p.first, q
    ) == _between(p.second, q)


def validate_family(w: ReducedWord, family: CancellingFamily) -> None:
    """Raise ValueError unless ``family`` is a nested cancelling family of ``w``."""
    n = len(w)
    for pair in family.pairs:
        (i1, j1), (i2, j2) = pair.first, pair.second
        if not (0 <= i1 < j1 <= i2 < j2 <= n):
            raise ValueError(f"invalid family: bad ranges in {pair}")
        if j1 - i1 != j2 - i2:
            raise ValueError(f"invalid family: unequal range lengths in {pair}")
        if subword(w, i1, j1) != inverse(subword(w, i2, j2)):
            raise ValueError(f"invalid family: ranges of {pair} are not mutually inverse")
    pairs = family.pairs
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            if not _compatible(pairs[a], pairs[b]):
                raise ValueError(
                    f"invalid family: {pairs[a]} and {pairs[b]} overlap or cross"
                )


def _candidate_pairs(w: ReducedWord) -> list[CancellingPair]:
    letters = w.letters
    n = len(letters)
    out = []
    for length in range(1, n // 2 + 1):
        for i1 in range(n - 2 * length + 1):
            for i2 in range(i1 + length, n - length + 1):
                if all(letters[i1 + t] == -letters[i2 + length - 1 - t] for t in range(length)):
                    out.append(CancellingPair((i1, i1 + length), (i2, i2 + length)))
    out.sort(key=lambda p: (p.first, p.second))
    return out


def enumerate_nested_families(
    w: ReducedWord,
    max_pairs: int | None = None,
    length_cap: int = DEFAULT_FAMILY_CAP,
) -> Iterator[CancellingFamily]:
    """All nested cancelling families of ``w`` with at most ``max_pairs``
    pairs, the empty family first.

    Families are emitted in depth-first order over the candidate pairs
    sorted by their ranges, so the enumeration is deterministic and free
    of duplicates.
    """
    n = len(w)
    if n > length_cap:
        raise CapExceeded(f"word length {n} exceeds family enumeration cap {length_cap}")
    limit = n // 2 if max_pairs is None else max_pairs
    cands = _candidate_pairs(w)

    def walk(start: int, chosen: list[CancellingPair]) -> Iterator[CancellingFamily]:
        yield CancellingFamily(tuple(chosen))
        if len(chosen) >= limit:
            return
        for idx in range(start, len(cands)):
            cand = cands[idx]
            if all(_compatible(cand, p) for p in chosen):
                chosen.append(cand)
                yield from walk(idx + 1, chosen)
                chosen.pop()

    yield from walk(0, [])


def _segments(n: int, family: CancellingFamily) -> list[tuple[int, int]]:
    """Maximal index ranges of the host word left after erasing the family."""
    erased = sorted(
        [p.first for p in family.pairs] + [p.second for p in family.pairs]
    )
    out = []
    pos = 0
    for start, stop in erased:
        if pos < start:
            out.append((pos, start))
        pos = stop
    if pos < n:
        out.append((pos, n))
    return out


def erased_simple_length(w: ReducedWord, family: CancellingFamily) -> int:
    """Number of pairs plus the simple lengths of the leftover segments.

    Segments are measured as they stand, without re-reduction across the
    erased gaps.
    """
    validate_family(w, family)
    total = len(family.pairs)
    for start, stop in _segments(len(w), family):
        total += simple_length(subword(w, start, stop)).value
    return total


def cr_lower_bound(w: ReducedWord, length_cap: int = DEFAULT_FAMILY_CAP) -> Fraction:
    """Erased-family lower bound for the conjugate-reduced length.

    Minimizes max(pairs/2 - 1, erased/5 - 3) over every nested family,
    floored at zero.
    """
    if len(w) > length_cap:
        raise CapExceeded(f"word length {len(w)} exceeds family enumeration cap {length_cap}")
    table = subword_simple_lengths(w)
    n = len(w)
    best: Fraction | None = None
    for family in enumerate_nested_families(w, length_cap=length_cap):
        erased = len(family.pairs) + sum(table[seg] for seg in _segments(n, family))
        score = max(Fraction(len(family.pairs), 2) - 1, Fraction(erased, 5) - 3)
        if best is None or score < best:
            best = score
    assert best is not None  # the empty family is always enumerated
    return max(best, Fraction(0))


def cr_bruteforce(
    w: ReducedWord,
    max_ell: int = 3,
    max_piece: int = 6,
    max_conj: int = 3,
    length_cap: int = DEFAULT_CR_CAP,
) -> ConjugateReducedWitness:
    """Bounded search for a cheap conjugate-piece decomposition.

    Searches splits of ``w`` into at most ``max_ell`` letterwise
    segments, where each segment ``s`` is written as ``u^-1 v u`` by
    peeling matched inverse ends of depth at most ``max_conj`` with
    ``len(v) <= max_piece``.  The result is an upper approximation of
    the true minimum: enlarging any bound can only lower it, and the
    trivial one-factor decomposition (v = w, u empty) is always
    admitted, so the value never exceeds the simple length of ``w``.
    """
    n = len(w)
    if n > length_cap:
        raise CapExceeded(f"word length {n} exceeds decomposition search cap {length_cap}")
    if max_ell < 1:
        raise ValueError(f"max_ell must be at least 1, got {max_ell}")
    if max_piece < 0 or max_conj < 0:
        raise ValueError("search bounds must be nonnegative")
    epsilon = ReducedWord.identity(w.rank)
    if n == 0:
        return ConjugateReducedWitness(0, ((epsilon, epsilon),))

    letters = w.letters
    table = subword_simple_lengths(w)

    def segment_choice(i: int, j: int) -> tuple[int, int] | None:
        """Cheapest (cost, peel depth) for segment [i, j), or None."""
        length = j - i
        best_cost, best_k = None, 0
        depth = 0
        while depth < min(max_conj, (length - 1) // 2) and letters[i + depth] == -letters[j - 1 - depth]:
            depth += 1
        for k in range(depth + 1):
            if length - 2 * k > max_piece:
                continue
            cost = table[(i + k, j - k)]
            if best_cost is None or cost < best_cost:
                best_cost, best_k = cost, k
        return None if best_cost is None else (best_cost, best_k)

    choices = {
        (i, j): segment_choice(i, j) for i in range(n) for j in range(i + 1, n + 1)
    }

    big = None
    cost = [[big] * (max_ell + 1) for _ in range(n + 1)]
    back: dict[tuple[int, int], tuple[int, int]] = {}
    cost[0][0] = 0
    for j in range(1, n + 1):
        for ell in range(1, max_ell + 1):
            for i in range(j):
                prior = cost[i][ell - 1]
                choice = choices[(i, j)]
                if prior is None or choice is None:
                    continue
                if cost[j][ell] is None or prior + choice[0] < cost[j][ell]:
                    cost[j][ell] = prior + choice[0]
                    back[(j, ell)] = (i, choice[1])

    # trivial fallback keeps the value at or below the simple length even
    # when every bounded split is infeasible
    best_value = simple_length(w).value
    best_decomp: tuple[tuple[ReducedWord, ReducedWord], ...] = ((w, epsilon),)
    for ell in range(1, max_ell + 1):
        if cost[n][ell] is None:
            continue
        value = cost[n][ell] + (ell - 1)
        if value < best_value:
            pieces = []
            j, level = n, ell
            while level > 0:
                i, k = back[(j, level)]
                pieces.append((subword(w, i + k, j - k), subword(w, j - k, j)))
                j, level = i, level - 1
            best_value = value
            best_decomp = tuple(reversed(pieces))
    return ConjugateReducedWitness(best_value, best_decomp)


def conjugate_product(
    decomposition: tuple[tuple[ReducedWord, ReducedWord], ...], rank: int
) -> ReducedWord:
    """Reduced product of the conjugates ``u^-1 v u`` of a decomposition."""
    out = ReducedWord.identity(rank)
    for v, u in decomposition:
        out = concat(out, concat(concat(inverse(u), v), u))
    return out

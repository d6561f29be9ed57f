"""Point-pushing calculus on algebraic arc and disk labels.

Everything is modeled at the group level: an arc connecting the two
marked points is a group element, a disk enclosing both points is a
right coset of the cyclic subgroup generated by a distinguished letter,
and a two-sided push expression tags a push word with the side it acts
on.  The boundary reflection acts as the identity on words, so the two
sides carry the same word data and differ only in their tag.

Distance facts are produced exclusively as :class:`BoundTrace` values,
ordered lists of named inference steps with numeric increments.  Only
one-sided bounds are ever derived; no exact graph distance is exposed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import RankError
from .whitehead import simple_length
from .words import ReducedWord, concat, format_word, inverse

__all__ = [
    "ArcLabel",
    "DiskLabel",
    "Side",
    "PushLabel",
    "SplittingLabel",
    "TraceStep",
    "BoundTrace",
    "RULES",
    "push_arc",
    "q_class",
    "disk_normalize",
    "splitting_update",
    "sphere_equiv_bound",
    "precompose_bound",
    "simple_length_lower_bound",
    "format_trace",
]

RULES = ("pointcommute", "crucial2", "distanceestimate", "isometric-relabel", "triangle")


@dataclass(frozen=True)
class ArcLabel:
    """Arc between the two marked points, as an element of the ambient group."""

    word: ReducedWord


@dataclass(frozen=True)
class DiskLabel:
    """Disk enclosing both marked points: a right coset of the cyclic
    subgroup generated by letter ``c_index``, held by its canonical
    representative (no leading power of that letter)."""

    coset_rep: ReducedWord
    c_index: int

    def __post_init__(self) -> None:
        if not 1 <= self.c_index <= self.coset_rep.rank:
            raise RankError(
                f"coset letter index {self.c_index} outside rank {self.coset_rep.rank}"
            )
        if self.coset_rep.letters and abs(self.coset_rep.letters[0]) == self.c_index:
            raise ValueError("coset representative carries a leading coset letter")


class Side(Enum):
    """Which marked point a push expression acts on."""

    SIDE1 = 1
    SIDE2 = 2


@dataclass(frozen=True)
class PushLabel:
    """Two-sided push expression: ``[a, u]_2`` on side 2, ``[a^-1, u]_1``
    on side 1.  The base symbol is determined by the side."""

    side: Side
    word: ReducedWord

    @property
    def base(self) -> str:
        return "a" if self.side is Side.SIDE2 else "a^-1"

    def __str__(self) -> str:
        return f"[{self.base},{format_word(self.word)}]_{self.side.value}"


@dataclass(frozen=True)
class SplittingLabel:
    """Generator of the rank-one factor in a free splitting of the
    one-larger free group: a word ``a u`` whose leading letter is the
    top basis letter, occurring exactly once."""

    z_generator: ReducedWord

    def __post_init__(self) -> None:
        top = self.z_generator.rank
        letters = self.z_generator.letters
        if not letters or letters[0] != top:
            raise ValueError("splitting generator must start with the top letter")
        if sum(1 for a in letters if abs(a) == top) != 1:
            raise ValueError("splitting generator must use the top letter exactly once")

    @classmethod
    def seed(cls, g: int) -> "SplittingLabel":
        """Splitting defined by the base disk: generator ``a`` alone."""
        return cls(ReducedWord(g + 1, (g + 1,)))

    @property
    def base_rank(self) -> int:
        return self.z_generator.rank - 1

    def tail(self) -> ReducedWord:
        """The push history ``u`` with the leading letter stripped."""
        return ReducedWord(self.base_rank, self.z_generator.letters[1:])


@dataclass(frozen=True)
class TraceStep:
    rule: str
    note: str
    increment: int

    def __post_init__(self) -> None:
        if self.rule not in RULES:
            raise ValueError(f"unknown bound rule {self.rule!r}")
        if self.increment < 0:
            raise ValueError(f"negative increment {self.increment}")


@dataclass(frozen=True)
class BoundTrace:
    """Audit log of inequality steps; ``total`` is the derived bound."""

    steps: tuple[TraceStep, ...]
    total: int

    def __post_init__(self) -> None:
        if self.total != sum(step.increment for step in self.steps):
            raise ValueError("trace total differs from the sum of its increments")


def push_arc(arc: ArcLabel, loop: ReducedWord) -> ArcLabel:
    """Push the movable endpoint along ``loop``: right concatenation.

    This is a free and transitive right action, so
    ``push_arc(push_arc(a, u), v) == push_arc(a, u v)``.
    """
    return ArcLabel(concat(arc.word, loop))


def q_class(alpha: ArcLabel, beta: ArcLabel) -> ReducedWord:
    """Class of the loop traversing ``alpha`` backwards, then ``beta``.

    Pushing along it carries ``alpha`` to ``beta``.
    """
    return concat(inverse(alpha.word), beta.word)


def disk_normalize(w: ReducedWord, c_index: int | None = None) -> DiskLabel:
    """Canonical disk label for the coset of ``w``: strip the maximal
    leading power of the coset letter (default: the top basis letter).

    >>> str(disk_normalize(ReducedWord(2, (2, 2, 1)), 2).coset_rep)
    'x1'
    """
    c = w.rank if c_index is None else c_index
    if not 1 <= c <= w.rank:
        raise RankError(f"coset letter index {c} outside rank {w.rank}")
    i = 0
    while i < len(w.letters) and abs(w.letters[i]) == c:
        i += 1
    return DiskLabel(ReducedWord(w.rank, w.letters[i:]), c)


def splitting_update(current: SplittingLabel, pushclass: ReducedWord) -> SplittingLabel:
    """Splitting generator after pushing by ``pushclass``: the push
    history is extended on the right inside the lower-rank subgroup."""
    g = current.base_rank
    if pushclass.rank == g + 1:
        if any(abs(a) == g + 1 for a in pushclass.letters):
            raise ValueError("push class must avoid the top letter")
        pushclass = ReducedWord(g, pushclass.letters)
    elif pushclass.rank != g:
        raise RankError(f"push class rank {pushclass.rank} does not match base rank {g}")
    new_tail = concat(current.tail(), pushclass)
    return SplittingLabel(ReducedWord(g + 1, (g + 1,) + new_tail.letters))


def sphere_equiv_bound(label1: PushLabel, label2: PushLabel) -> BoundTrace | None:
    """Bound for a two-sided pair of push expressions, when a rule applies.

    Equal labels cost nothing.  A pair pushing mutually inverse words on
    opposite sides is bounded by 2.  Anything else has no rule.
    """
    if label1 == label2:
        return BoundTrace((), 0)
    if label1.side is not label2.side and label1.word == inverse(label2.word):
        step = TraceStep(
            "pointcommute",
            f"opposite-side swap between {label1} and {label2}",
            2,
        )
        return BoundTrace((step,), 2)
    return None


def precompose_bound(
    b1: ReducedWord, b2: ReducedWord, prefix: ReducedWord, base_bound: int
) -> BoundTrace:
    """Bound for the pair with a common prefix pushed in front of both words.

    Starting from a known bound for ``([a,b1]_2, [a,b2]_2)``, the pair is
    swapped to the opposite side, relabeled there by the reflected
    inverse prefix at no cost, and swapped back, for a net cost of 8.
    """
    if b1.rank != b2.rank or b1.rank != prefix.rank:
        raise RankError("prefix and base words must share one rank")
    if base_bound < 0:
        raise ValueError(f"base bound must be nonnegative, got {base_bound}")
    steps = (
        TraceStep(
            "triangle",
            f"assumed bound for ([a,{format_word(b1)}]_2, [a,{format_word(b2)}]_2)",
            base_bound,
        ),
        TraceStep("pointcommute", "swap both labels to the opposite side", 4),
        TraceStep(
            "isometric-relabel",
            f"absorb the prefix {format_word(prefix) or 'e'} by pushing the fixed side",
            0,
        ),
        TraceStep("pointcommute", "swap both labels back", 4),
    )
    return BoundTrace(steps, base_bound + 8)


def simple_length_lower_bound(w: ReducedWord) -> Fraction:
    """Certified lower bound for the sphere-graph distance of two
    enclosing spheres whose relative class is ``w``: half the simple
    length, since a connecting path of length n allows simple length at
    most 2n."""
    return Fraction(simple_length(w).value, 2)


def format_trace(trace: BoundTrace) -> str:
    """Human-readable step table with running totals."""
    lines = []
    running = 0
    for i, step in enumerate(trace.steps, 1):
        running += step.increment
        lines.append(f"step {i}: {step.rule} +{step.increment} -> {running}  ({step.note})")
    lines.append(f"total: {trace.total}")
    return "\n".join(lines) + "\n"

"""Lattice embedding certificates for the sphere graph at desk scale.

For each coordinate i a fixed push word ``b_t`` (a product of letter
powers that keeps every single push at bounded cost) moves the base
disk; the lattice point (k_1, .., k_n) maps to the disk pushed along
``b_1^{k_1} .. b_n^{k_n}``.  For a pair of lattice points the certificate
records a lower distance bound (half the simple length of the relative
word) and an upper bound (a per-coordinate transport estimate), plus
their ratio against the lattice displacement.  The multiplicative
constant hiding in the lower bound is reported empirically, never
assumed.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

from .errors import CapExceeded
from .pushcalc import BoundTrace, TraceStep
from .whitehead import simple_length
from .words import ReducedWord, concat, inverse, power

__all__ = [
    "PUSH_STEP_BUDGET",
    "PUSH_STEP_BUDGET_HIGH_RANK",
    "BtFamily",
    "CertificateRow",
    "GridSummary",
    "make_bt",
    "lambda_word",
    "relative_word",
    "upper_bound",
    "certify_grid",
    "summarize",
    "to_csv",
]

# Cost of moving the base disk by one full push word.  The conservative
# budget 6 holds from rank 4 on; ranks >= 6 admit the tighter budget 4.
PUSH_STEP_BUDGET = 6
PUSH_STEP_BUDGET_HIGH_RANK = 4

MIN_RANK = 4
DEFAULT_LENGTH_CAP = 600


@lru_cache(maxsize=256)
def make_bt(g: int, t: int) -> ReducedWord:
    """The t-th push word at rank g: consecutive (t+1)-st powers of the
    generators 1..g followed by powers of 1, 2, 1 again.

    Length is (g+3)(t+1); all letters are positive, so the word is
    reduced as written.
    """
    if g < MIN_RANK:
        raise ValueError(f"push words need rank at least {MIN_RANK}, got {g}")
    if t < 1:
        raise ValueError(f"push word index must be at least 1, got {t}")
    runs = list(range(1, g + 1)) + [1, 2, 1]
    letters = tuple(i for i in runs for _ in range(t + 1))
    return ReducedWord(g, letters)


@dataclass(frozen=True)
class BtFamily:
    """Push words indexed by t, all at one rank."""

    rank: int
    words: dict[int, ReducedWord]

    def __post_init__(self) -> None:
        for t, w in self.words.items():
            if w != make_bt(self.rank, t):
                raise ValueError(f"word at index {t} is not the rank-{self.rank} push word")

    @classmethod
    def standard(cls, g: int, n: int) -> "BtFamily":
        return cls(g, {t: make_bt(g, t) for t in range(1, n + 1)})


def _assignment(n: int, t_assignment: Sequence[int] | None) -> tuple[int, ...]:
    ts = tuple(t_assignment) if t_assignment is not None else tuple(range(1, n + 1))
    if len(ts) != n:
        raise ValueError(f"need {n} push word indices, got {len(ts)}")
    if any(t < 1 for t in ts):
        raise ValueError("push word indices must be at least 1")
    return ts


def lambda_word(
    g: int, n: int, k: Sequence[int], t_assignment: Sequence[int] | None = None
) -> ReducedWord:
    """Reduced push word of the lattice point k: the product of the
    coordinate push words raised to the coordinates."""
    if n < 1:
        raise ValueError(f"need at least one coordinate, got {n}")
    k = tuple(k)
    if len(k) != n:
        raise ValueError(f"lattice point has {len(k)} coordinates, expected {n}")
    ts = _assignment(n, t_assignment)
    out = ReducedWord.identity(g)
    for ki, t in zip(k, ts):
        out = concat(out, power(make_bt(g, t), ki))
    return out


def relative_word(
    g: int,
    n: int,
    k: Sequence[int],
    ell: Sequence[int],
    t_assignment: Sequence[int] | None = None,
) -> ReducedWord:
    """Relative class of the pair (k, ell): inverse push word of k times
    the push word of ell, freely reduced.  Vanishes iff k == ell."""
    return concat(
        inverse(lambda_word(g, n, k, t_assignment)), lambda_word(g, n, ell, t_assignment)
    )


def upper_bound(
    k: Sequence[int], ell: Sequence[int], budget: int = PUSH_STEP_BUDGET
) -> BoundTrace:
    """Upper distance bound between the disks of two lattice points.

    One transport step per coordinate, processed from the last
    coordinate inward: moving coordinate i costs ``budget`` per power
    plus a flat 8 for carrying the move through the untouched prefix.
    The trace total is sum_i (budget*|k_i - ell_i| + 8).
    """
    k, ell = tuple(k), tuple(ell)
    if len(k) != len(ell):
        raise ValueError(f"lattice points differ in length: {len(k)} vs {len(ell)}")
    steps: list[TraceStep] = []
    for i in range(len(k), 0, -1):
        delta = abs(k[i - 1] - ell[i - 1])
        steps.append(
            TraceStep(
                "distanceestimate",
                f"move coordinate {i} by {delta} powers of its push word",
                budget * delta,
            )
        )
        steps.append(
            TraceStep("crucial2", f"carry the coordinate-{i} move through the prefix", 8)
        )
        steps.append(TraceStep("isometric-relabel", f"rebase after coordinate {i}", 0))
    return BoundTrace(tuple(steps), sum(s.increment for s in steps))


@dataclass(frozen=True)
class CertificateRow:
    """One grid pair: lower bound, upper bound, displacement and ratio."""

    k: tuple[int, ...]
    l: tuple[int, ...]
    displacement: int
    relative_word: ReducedWord
    lower: Fraction
    upper: int
    ratio: Fraction | None

    def __post_init__(self) -> None:
        if self.displacement != sum(abs(a - b) for a, b in zip(self.k, self.l)):
            raise ValueError("displacement does not match the coordinate gap")
        want = self.lower / self.displacement if self.displacement else None
        if self.ratio != want:
            raise ValueError("ratio does not match lower/displacement")


@dataclass(frozen=True)
class GridSummary:
    rows: int
    min_ratio: Fraction | None
    max_ratio: Fraction | None


def certify_grid(
    g: int,
    n: int,
    grid_max: int,
    t_assignment: Sequence[int] | None = None,
    budget: int = PUSH_STEP_BUDGET,
    jobs: int = 1,
    length_cap: int = DEFAULT_LENGTH_CAP,
) -> list[CertificateRow]:
    """Certificate rows for every unordered pair of points in
    {0..grid_max}^n, in lexicographic (k, l) order.

    Rows are independent; with ``jobs`` > 1 they are evaluated on a
    thread pool and collected in the same deterministic order.
    """
    if grid_max < 0:
        raise ValueError(f"grid_max must be nonnegative, got {grid_max}")
    ts = _assignment(n, t_assignment)
    worst = 2 * grid_max * sum(len(make_bt(g, t)) for t in ts)
    if worst > length_cap:
        raise CapExceeded(
            f"worst-case relative word length {worst} exceeds cap {length_cap}"
        )
    points = sorted(product(range(grid_max + 1), repeat=n))
    pairs = [(k, l) for idx, k in enumerate(points) for l in points[idx:]]

    def build(pair: tuple[tuple[int, ...], tuple[int, ...]]) -> CertificateRow:
        k, l = pair
        rel = relative_word(g, n, k, l, t_assignment)
        displacement = sum(abs(a - b) for a, b in zip(k, l))
        lower = Fraction(simple_length(rel).value, 2)
        trace = upper_bound(k, l, budget)
        return CertificateRow(
            k=k,
            l=l,
            displacement=displacement,
            relative_word=rel,
            lower=lower,
            upper=trace.total,
            ratio=lower / displacement if displacement else None,
        )

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(build, pairs))
    return [build(pair) for pair in pairs]


def summarize(rows: Iterable[CertificateRow]) -> GridSummary:
    """Row count and the ratio range over rows with positive displacement."""
    rows = list(rows)
    ratios = [r.ratio for r in rows if r.ratio is not None]
    if not ratios:
        return GridSummary(len(rows), None, None)
    return GridSummary(len(rows), min(ratios), max(ratios))


def to_csv(rows: Iterable[CertificateRow], g: int) -> str:
    """CSV rendering; vectors are ';'-joined, rationals print as p/q."""
    lines = ["n,g,k,l,displacement,lower,upper,ratio"]
    for r in rows:
        ratio = "" if r.ratio is None else str(r.ratio)
        lines.append(
            f"{len(r.k)},{g},{_vec(r.k)},{_vec(r.l)},{r.displacement},"
            f"{r.lower},{r.upper},{ratio}"
        )
    return "\n".join(lines) + "\n"


def _vec(v: tuple[int, ...]) -> str:
    return ";".join(str(a) for a in v)

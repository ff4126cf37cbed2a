"""p-ascent sequences: validation, statistics, and exhaustive enumeration.

A p-ascent sequence is a word of nonnegative integers whose first letter is
0 and in which every later letter is at most p plus the number of ascents
of the preceding prefix.  The enumeration here is the ground truth that the
closed-form evaluators in gf and patterns are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .series import MultiPoly, TSeries

STAT_NAMES = ("ascents", "last", "zeros", "run")


def asc(word: Sequence[int]) -> int:
    """Number of positions j with word[j] < word[j+1]."""
    w = tuple(word)
    return sum(1 for i in range(len(w) - 1) if w[i] < w[i + 1])


def is_p_ascent(word: Sequence[int], p: int) -> bool:
    """True iff word is empty, or starts with 0 and respects the ascent bound."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    w = tuple(word)
    if not w:
        return True
    if w[0] != 0 or any(c < 0 for c in w):
        return False
    ascents = 0
    for i in range(1, len(w)):
        if w[i] > p + ascents:
            return False
        if w[i] > w[i - 1]:
            ascents += 1
    return True


@dataclass(frozen=True)
class PAscentSequence:
    """A validated p-ascent sequence together with its allowance p."""

    p: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if not is_p_ascent(self.letters, self.p):
            raise ValueError(f"{self.letters} is not a {self.p}-ascent sequence")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return ",".join(map(str, self.letters))


@dataclass(frozen=True)
class StatProfile:
    """Statistic vector of one sequence.

    last and max are None for the empty sequence; run is 0 for all-zero
    words (including the empty one), otherwise the length of the initial
    block of 0s.
    """

    length: int
    ascents: int
    descents: int
    zeros: int
    last: int | None
    run: int
    max: int | None
    sum: int
    primitive: bool
    up_down: bool


def stats(seq: PAscentSequence) -> StatProfile:
    """Compute the full statistic profile of a sequence."""
    w = seq.letters
    n = len(w)
    ascents = sum(1 for i in range(n - 1) if w[i] < w[i + 1])
    descents = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
    lead = 0
    while lead < n and w[lead] == 0:
        lead += 1
    run = 0 if lead == n else lead
    up_down = all(
        (w[i] < w[i + 1]) if i % 2 == 0 else (w[i] > w[i + 1]) for i in range(n - 1)
    )
    return StatProfile(
        length=n,
        ascents=ascents,
        descents=descents,
        zeros=w.count(0),
        last=w[-1] if n else None,
        run=run,
        max=max(w) if n else None,
        sum=sum(w),
        primitive=all(w[i] != w[i + 1] for i in range(n - 1)),
        up_down=up_down,
    )


def enumerate_sequences(
    p: int,
    n: int,
    pred: Callable[[PAscentSequence], bool] | None = None,
    prefix: Sequence[int] | None = None,
) -> Iterator[PAscentSequence]:
    """Yield every p-ascent sequence of length n, in lexicographic order.

    pred, when given, filters sequences before they are yielded.  prefix
    restricts the walk to extensions of a fixed valid prefix.  Sequences are
    produced one at a time; nothing is materialized.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    start = tuple(prefix) if prefix is not None else ()
    if not is_p_ascent(start, p):
        raise ValueError(f"prefix {start} is not a {p}-ascent sequence")
    if len(start) > n:
        return
    if n == 0:
        seq = PAscentSequence(p, ())
        if pred is None or pred(seq):
            yield seq
        return
    if not start:
        start = (0,)
        if n == 0:
            return

    word = list(start)

    def walk(ascents: int) -> Iterator[PAscentSequence]:
        if len(word) == n:
            seq = PAscentSequence(p, tuple(word))
            if pred is None or pred(seq):
                yield seq
            return
        last = word[-1]
        for c in range(p + ascents + 1):
            word.append(c)
            yield from walk(ascents + (1 if c > last else 0))
            word.pop()

    yield from walk(asc(start))


def count_by_length(
    p: int,
    n_max: int,
    primitive_only: bool = False,
    max_repeat: int | None = None,
) -> list[int]:
    """Counts of p-ascent sequences of each length 0..n_max.

    primitive_only keeps only sequences with no equal adjacent letters;
    max_repeat bounds the length of any block of equal consecutive letters.
    Both restrictions are closed under taking prefixes, so the search tree
    is pruned exactly.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if max_repeat is not None and max_repeat < 1:
        raise ValueError("max_repeat must be at least 1")
    counts = [0] * (n_max + 1)
    counts[0] = 1
    if n_max == 0:
        return counts

    def rec(m: int, ascents: int, last: int, repeat: int) -> None:
        counts[m] += 1
        if m == n_max:
            return
        for c in range(p + ascents + 1):
            if c == last:
                if primitive_only:
                    continue
                if max_repeat is not None and repeat >= max_repeat:
                    continue
                rec(m + 1, ascents, c, repeat + 1)
            else:
                rec(m + 1, ascents + (1 if c > last else 0), c, 1)

    rec(1, 0, 0, 1)
    return counts


def oracle_table(
    p: int,
    n_max: int,
    stat_selector: Sequence[str] = STAT_NAMES,
) -> TSeries:
    """Exhaustive generating-function table for sequences of length <= n_max.

    Each sequence w contributes t^len * u^ascents * v^last * z^zeros * x^run;
    the empty sequence contributes 1.  Statistics absent from stat_selector
    are specialized to 1 (exponent dropped).  Aggregation is incremental, so
    memory stays proportional to the number of distinct monomials.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    sel = set(stat_selector)
    unknown = sel.difference(STAT_NAMES)
    if unknown:
        raise ValueError(f"unknown statistics {sorted(unknown)}; choose from {STAT_NAMES}")
    keep_u = "ascents" in sel
    keep_v = "last" in sel
    keep_z = "zeros" in sel
    keep_x = "run" in sel

    acc: list[dict[int, int]] = [dict() for _ in range(n_max + 1)]
    acc[0][0] = 1

    def rec(m: int, ascents: int, last: int, zeros: int, run: int, allzero: bool) -> None:
        key = 0
        if keep_u:
            key |= ascents << 24
        if keep_v:
            key |= last << 16
        if keep_z:
            key |= zeros << 8
        if keep_x:
            key |= run
        level = acc[m]
        level[key] = level.get(key, 0) + 1
        if m == n_max:
            return
        m1 = m + 1
        rec(m1, ascents, 0, zeros + 1, run, allzero)
        if allzero:
            for c in range(1, p + ascents + 1):
                rec(m1, ascents + 1, c, zeros, m, False)
        else:
            for c in range(1, p + ascents + 1):
                rec(m1, ascents + (1 if c > last else 0), c, zeros, run, False)

    if n_max >= 1:
        rec(1, 0, 0, 1, 0, True)
    return TSeries([MultiPoly(level) for level in acc])

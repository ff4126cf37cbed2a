"""Pattern occurrence and avoidance in p-ascent sequences.

Covers word reduction, classical and vincular occurrence testing, pruned
brute-force avoider counts (the oracle), the known closed-form counts and
generating functions for the short patterns, the embedding of p-ascent
sequences into ordinary ascent sequences, and the block-rewriting bijection
between 10-avoiding and 012-avoiding 2-ascent sequences.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import comb
from typing import Iterator, Sequence

from .core import PAscentSequence, is_p_ascent
from .series import MultiPoly, TSeries


class NoClosedFormError(ValueError):
    """Raised when no closed form is implemented for a (p, pattern) pair."""


def red(word: Sequence[int]) -> tuple[int, ...]:
    """Replace the i-th smallest distinct value by i-1, keeping order and multiplicity."""
    w = tuple(word)
    rank = {value: i for i, value in enumerate(sorted(set(w)))}
    return tuple(rank[c] for c in w)


@dataclass(frozen=True)
class Pattern:
    """A reduced word to search for, with optional adjacency blocks.

    groups partitions the pattern positions into maximal blocks that must
    occupy consecutive positions in the host word (vincular notation writes
    a hyphen between blocks).  A classical pattern has every block of size 1.
    """

    letters: tuple[int, ...]
    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.letters:
            raise ValueError("pattern must be nonempty")
        if red(self.letters) != self.letters:
            raise ValueError(f"pattern letters must be reduced: {self.letters}")
        flat = [i for g in self.groups for i in g]
        if flat != list(range(len(self.letters))):
            raise ValueError("groups must partition the pattern positions in order")
        if any(g[j + 1] != g[j] + 1 for g in self.groups for j in range(len(g) - 1)):
            raise ValueError("each group must consist of consecutive positions")

    @classmethod
    def classical(cls, letters: Sequence[int]) -> "Pattern":
        letters = tuple(letters)
        return cls(letters, tuple((i,) for i in range(len(letters))))

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        """Parse CLI pattern syntax: digits for letters, hyphen between adjacency blocks."""
        if not text or text.startswith("-") or text.endswith("-") or "--" in text:
            raise ValueError(f"malformed pattern {text!r}")
        chunks = text.split("-")
        if any(not chunk.isdigit() for chunk in chunks):
            raise ValueError(f"pattern may contain only digits and hyphens: {text!r}")
        letters = red([int(ch) for chunk in chunks for ch in chunk])
        groups = []
        pos = 0
        for chunk in chunks:
            groups.append(tuple(range(pos, pos + len(chunk))))
            pos += len(chunk)
        if len(chunks) == 1:
            # no hyphen means classical: no adjacency constraints at all
            groups = [(i,) for i in range(len(letters))]
        return cls(letters, tuple(groups))

    @property
    def is_classical(self) -> bool:
        return all(len(g) == 1 for g in self.groups)

    def __str__(self) -> str:
        if self.is_classical:
            return "".join(map(str, self.letters))
        return "-".join(
            "".join(str(self.letters[i]) for i in g) for g in self.groups
        )


def _match_groups(pat: Pattern, w: Sequence[int], starts: list[int]) -> bool:
    picked = [s + j for s, g in zip(starts, pat.groups) for j in range(len(g))]
    return red([w[i] for i in picked]) == pat.letters


def occurs(pat: Pattern, word: Sequence[int]) -> bool:
    """True iff some subsequence, respecting the adjacency blocks, reduces to the pattern."""
    w = tuple(word)
    groups = pat.groups
    sizes = [len(g) for g in groups]
    total = sum(sizes)
    if total > len(w):
        return False

    def place(gi: int, lo: int, starts: list[int]) -> bool:
        if gi == len(groups):
            return _match_groups(pat, w, starts)
        remaining = sum(sizes[gi:])
        for s in range(lo, len(w) - remaining + 1):
            if place(gi + 1, s + sizes[gi], starts + [s]):
                return True
        return False

    return place(0, 0, [])


def _occurs_ending_at_last(pat: Pattern, w: Sequence[int]) -> bool:
    """Occurrence test restricted to occurrences using the final letter of w."""
    groups = pat.groups
    sizes = [len(g) for g in groups]
    last_size = sizes[-1]
    anchor = len(w) - last_size
    if anchor < 0 or sum(sizes) > len(w):
        return False

    def place(gi: int, lo: int, starts: list[int]) -> bool:
        if gi == len(groups) - 1:
            return anchor >= lo and _match_groups(pat, w, starts + [anchor])
        for s in range(lo, anchor - sum(sizes[gi:-1]) + 1):
            if place(gi + 1, s + sizes[gi], starts + [s]):
                return True
        return False

    return place(0, 0, [])


def avoider_counts(
    p: int,
    pat: Pattern,
    n_max: int,
    primitive_only: bool = False,
) -> list[int]:
    """Counts of pattern-avoiding p-ascent sequences of each length 0..n_max.

    Avoidance is closed under prefixes, so the walk extends only prefixes
    that still avoid the pattern, and each extension is tested only against
    occurrences that would use the new final letter.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    counts = [0] * (n_max + 1)
    counts[0] = 1
    if n_max == 0:
        return counts
    word = [0]
    if _occurs_ending_at_last(pat, word):
        return counts

    def rec(m: int, ascents: int) -> None:
        counts[m] += 1
        if m == n_max:
            return
        last = word[-1]
        for c in range(p + ascents + 1):
            if primitive_only and c == last:
                continue
            word.append(c)
            if not _occurs_ending_at_last(pat, word):
                rec(m + 1, ascents + (1 if c > last else 0))
            word.pop()

    rec(1, 0)
    return counts


def count_avoiders(p: int, pat: Pattern, n: int, primitive_only: bool = False) -> int:
    """Brute-force number of pattern-avoiding p-ascent sequences of length n."""
    return avoider_counts(p, pat, n, primitive_only)[n]


def iter_avoiders(
    p: int,
    pat: Pattern,
    n: int,
    primitive_only: bool = False,
) -> Iterator[PAscentSequence]:
    """Yield the pattern-avoiding p-ascent sequences of length n, lexicographically."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield PAscentSequence(p, ())
        return
    word = [0]
    if _occurs_ending_at_last(pat, word):
        return

    def rec(m: int, ascents: int) -> Iterator[PAscentSequence]:
        if m == n:
            yield PAscentSequence(p, tuple(word))
            return
        last = word[-1]
        for c in range(p + ascents + 1):
            if primitive_only and c == last:
                continue
            word.append(c)
            if not _occurs_ending_at_last(pat, word):
                yield from rec(m + 1, ascents + (1 if c > last else 0))
            word.pop()

    yield from rec(1, 0)


@lru_cache(maxsize=None)
def _a012(n: int, p: int) -> int:
    # number of 012-avoiding p-ascent sequences of length n, for p >= 2,
    # via the peel-off-the-smallest-letter recursion seeded at p = 2
    if n == 0:
        return 1
    if p == 2:
        return 1 if n == 1 else (n + 1) << (n - 2)
    return _a012(n, p - 1) + sum(_a012(k - 1, p - 1) << (n - k) for k in range(2, n + 1))


def _exact_shift_div(numerator: int, power: int, divisor: int = 1) -> int:
    # numerator * 2^power / divisor with power possibly negative; must divide exactly
    if power >= 0:
        value, rem = divmod(numerator << power, divisor)
    else:
        value, rem = divmod(numerator, divisor << (-power))
    if rem:
        raise ArithmeticError("closed form did not divide exactly")
    return value


def closed_count(p: int, pat: Pattern, n: int, primitive_only: bool = False) -> int:
    """Closed-form avoider count; raises NoClosedFormError when unsupported.

    Supported: 01 (all p), 10 (all p, plain and primitive), 00 for p in
    {2, 3} (00-avoidance forces primitivity, so both variants coincide),
    and 012 for p = 2, 3, 4 in closed form with a recursion for larger p.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1
    key = str(pat)
    if key == "01":
        return 1 if (n == 1 or not primitive_only) else 0
    if key == "10":
        if primitive_only:
            return comb(p + n - 2, n - 1)
        return sum(comb(n - 1, s) * comb(p + s - 1, s) for s in range(n))
    if key == "00":
        # every 00-avoider is primitive, so the primitive count is the same
        if p == 2:
            return 1 + comb(n, 2)
        if p == 3:
            return comb(n + 1, 2) + 2 * comb(n, 3) + comb(n - 1, 4) + comb(n + 2, 5)
        raise NoClosedFormError(f"no closed form for pattern 00 with p={p}")
    if key == "012":
        if primitive_only:
            raise NoClosedFormError("no closed form for primitive 012-avoiders")
        if p == 2:
            return _exact_shift_div(n + 1, n - 2)
        if p == 3:
            return _exact_shift_div(n * n + 5 * n + 2, n - 4)
        if p == 4:
            return _exact_shift_div(n**3 + 12 * n**2 + 29 * n + 6, n - 5, 3)
        if p >= 5:
            return _a012(n, p)
        raise NoClosedFormError("no closed form for pattern 012 with p=1")
    raise NoClosedFormError(f"no closed form for pattern {key} with p={p}")


def gf_avoiders(p: int, pat: Pattern, order: int, primitive_only: bool = False) -> TSeries:
    """Closed-form avoider generating function as an exact truncated series.

    Supported: 01 (all p), 10 (all p, plain and primitive), and 00 for p=3.
    The constant term counts the empty sequence.
    """
    if p < 1:
        raise ValueError("p must be a positive integer")
    if order < 0:
        raise ValueError("order must be nonnegative")
    key = str(pat)
    one = TSeries.one(order)
    t = TSeries.from_poly(order, MultiPoly.const(1), 1)
    if key == "01":
        if primitive_only:
            return one + t
        return (one - t).invert()
    if key == "10":
        if primitive_only:
            return one + t * ((one - t) ** p).invert()
        return one + t * (one - t) ** (p - 1) * ((one - 2 * t) ** p).invert()
    if key == "00" and p == 3:
        numer = (
            one
            - 3 * t
            + 6 * t**2
            - 5 * t**3
            + 3 * t**4
            - t**5
        )
        return one + t * numer * ((one - t) ** 6).invert()
    raise NoClosedFormError(f"no closed-form generating function for {key} with p={p}")


def embed(seq: PAscentSequence) -> PAscentSequence:
    """Encode a p-ascent sequence as a 1-ascent sequence with a (01)^(p-1) 0 prefix.

    The empty sequence embeds to the empty sequence for every p.
    """
    if not seq.letters:
        return PAscentSequence(1, ())
    return PAscentSequence(1, (0, 1) * (seq.p - 1) + seq.letters)


def project(seq: PAscentSequence, p: int) -> PAscentSequence:
    """Inverse of embed: strip the (01)^(p-1) prefix of a 1-ascent sequence."""
    if p < 1:
        raise ValueError("p must be a positive integer")
    if seq.p != 1:
        raise ValueError("project expects a 1-ascent sequence")
    if not seq.letters:
        return PAscentSequence(p, ())
    prefix = (0, 1) * (p - 1)
    body = seq.letters
    if len(body) < 2 * p - 1 or body[: 2 * p - 2] != prefix or body[2 * p - 2] != 0:
        raise ValueError(
            f"{body} does not start with (01)^{p - 1} 0, so it is not in the image of embed"
        )
    return PAscentSequence(p, body[2 * p - 2 :])


def _run_length_blocks(w: Sequence[int]) -> list[tuple[int, int]]:
    blocks: list[tuple[int, int]] = []
    for c in w:
        if blocks and blocks[-1][0] == c:
            blocks[-1] = (c, blocks[-1][1] + 1)
        else:
            blocks.append((c, 1))
    return blocks


def bijection_10_to_012(seq: PAscentSequence) -> PAscentSequence:
    """Block rewriting from 10-avoiding to 012-avoiding 2-ascent sequences.

    A 10-avoider is weakly increasing with values 0..a, possibly skipping the
    single value a+1 and continuing a+2, a+3, ...  Its image keeps the initial
    zero block, then writes each further block of multiplicity i as the marker
    letter followed by i-1 zeros: marker 2 for blocks below the skip, marker 1
    for blocks above it.
    """
    if seq.p != 2:
        raise ValueError("the bijection is defined for 2-ascent sequences")
    w = seq.letters
    if not w:
        return seq
    if any(w[i] > w[i + 1] for i in range(len(w) - 1)):
        raise ValueError(f"{w} contains the pattern 10")
    blocks = _run_length_blocks(w)
    values = [value for value, _count in blocks]
    gaps = [values[i + 1] - values[i] for i in range(len(values) - 1)]
    if any(g not in (1, 2) for g in gaps) or gaps.count(2) > 1:
        raise ValueError(f"{w} is not a 10-avoiding 2-ascent sequence shape")
    split = next((i + 1 for i, g in enumerate(gaps) if g == 2), len(blocks))
    image = [0] * blocks[0][1]
    for _value, count in blocks[1:split]:
        image.append(2)
        image.extend([0] * (count - 1))
    for _value, count in blocks[split:]:
        image.append(1)
        image.extend([0] * (count - 1))
    return PAscentSequence(2, tuple(image))


def bijection_012_to_10(seq: PAscentSequence) -> PAscentSequence:
    """Inverse block rewriting, from 012-avoiding back to 10-avoiding sequences."""
    if seq.p != 2:
        raise ValueError("the bijection is defined for 2-ascent sequences")
    w = seq.letters
    if not w:
        return seq
    if any(c > 2 for c in w):
        raise ValueError(f"{w} has a letter above 2, so it contains 012")
    lead = 0
    while lead < len(w) and w[lead] == 0:
        lead += 1
    two_counts: list[int] = []
    one_counts: list[int] = []
    i = lead
    while i < len(w):
        marker = w[i]
        i += 1
        count = 1
        while i < len(w) and w[i] == 0:
            count += 1
            i += 1
        if marker == 2:
            if one_counts:
                raise ValueError(f"{w} has a 2 after a 1, so it contains 012")
            two_counts.append(count)
        else:
            one_counts.append(count)
    letters: list[int] = [0] * lead
    value = 0
    for count in two_counts:
        value += 1
        letters.extend([value] * count)
    value += 1  # skip one value before the 1-marked blocks
    for count in one_counts:
        value += 1
        letters.extend([value] * count)
    return PAscentSequence(2, tuple(letters))


def count_vincular_212_ternary(n: int) -> int:
    """Number of words of length n-1 over {1,2,3} avoiding the vincular pattern 21-2.

    Forbidden: positions i, i+1, j with i+1 < j, w[i] = w[j] > w[i+1].
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    length = n - 1
    total = 0
    for w in product((1, 2, 3), repeat=length):
        ok = True
        for i in range(length - 2):
            if w[i] > w[i + 1]:
                top = w[i]
                if any(w[j] == top for j in range(i + 2, length)):
                    ok = False
                    break
        if ok:
            total += 1
    return total

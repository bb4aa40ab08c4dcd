"""Weak order on permutations and its restriction to Baxter permutations.

Inversion sets are packed into integer bitmasks so that order
comparison is one mask test and cover computation stays cheap at desk
scale.  The restriction of the weak order to Baxter permutations is the
lattice whose cover pairs drive the Law-Reading side of the flip
taxonomy.
"""

from __future__ import annotations

from functools import cache
from typing import Iterable

from .permutation import BAXTER, Word, avoids_class, check_word, enumerate_avoiders


def _pair_index(a: int, b: int) -> int:
    # value pairs (a, b) with 1 <= a < b, packed by the larger element
    return (b - 1) * (b - 2) // 2 + (a - 1)


def inversion_mask(word: Word) -> int:
    """Inversion set as a bitmask over value pairs."""
    mask = 0
    for i, b in enumerate(word):
        for a in word[i + 1 :]:
            if a < b:
                mask |= 1 << _pair_index(a, b)
    return mask


def weak_leq(lo: Word, hi: Word) -> bool:
    """Inversion-set inclusion, the weak (Bruhat) order."""
    if len(lo) != len(hi):
        raise ValueError(f"sizes differ: {len(lo)} vs {len(hi)}")
    return inversion_mask(lo) & ~inversion_mask(hi) == 0


def covers_within(words: Iterable[Word]) -> set[tuple[Word, Word]]:
    """Cover pairs of the order the weak order induces on ``words``.

    A pair (lo, hi) is a cover when lo < hi and no third listed word
    lies strictly between.  Candidates below each element are scanned in
    decreasing inversion count, keeping only those not dominated by an
    already-kept candidate; the kept ones are the covers.
    """
    items = [(inversion_mask(w), w) for w in words]
    covers: set[tuple[Word, Word]] = set()
    for hi_mask, hi in items:
        below = [(m, w) for m, w in items if m != hi_mask and m & ~hi_mask == 0]
        below.sort(key=lambda mw: mw[0].bit_count(), reverse=True)
        kept: list[int] = []
        for m, w in below:
            if any(m & ~km == 0 for km in kept):
                continue
            kept.append(m)
            covers.add((w, hi))
    return covers


@cache
def drec_covers(n: int) -> frozenset[tuple[Word, Word]]:
    """Cover pairs of the weak order restricted to Baxter permutations.

    Computed by transitive reduction over the restricted comparability
    relation, independent of any flip machinery, so that comparing the
    two is a genuine cross-check.
    """
    return frozenset(covers_within(enumerate_avoiders(n, BAXTER)))


def is_drec_cover(p: Word, q: Word) -> bool:
    """Whether {p, q} is a cover pair of the Baxter restriction, either way up."""
    for w in (p, q):
        check_word(w)
        if not avoids_class(w, BAXTER):
            raise ValueError(f"not a Baxter permutation: {w}")
    if len(p) != len(q):
        raise ValueError(f"sizes differ: {len(p)} vs {len(q)}")
    pairs = drec_covers(len(p))
    return (p, q) in pairs or (q, p) in pairs

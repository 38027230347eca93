"""Restricted growth functions and their set-partition view.

An RGF is a word r_1 ... r_n of positive integers with r_1 = 1 and
r_i <= 1 + max(r_1, ..., r_{i-1}).  Reading r_i as "the block containing i"
makes RGFs of length n the standard encoding of set partitions of {1..n}.

Pattern containment on words is tie-aware: a subsequence matches a pattern
when equal letters map to equal letters and the strict order is preserved.
Patterns are standardized before matching, so 2231 and 12231 may be written
interchangeably wherever deleting a forced prefix does not matter.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInputError, ResourceLimitError

Rgf = tuple[int, ...]

DEFAULT_RGF_CAP = 12


def is_rgf(seq: Iterable[int]) -> bool:
    t = tuple(seq)
    mx = 0
    for v in t:
        if not isinstance(v, int) or v < 1 or v > mx + 1:
            return False
        mx = max(mx, v)
    return True


def validate(seq: Iterable[int]) -> Rgf:
    """Return seq as an RGF tuple, or raise with the first offending index (1-based)."""
    t = tuple(seq)
    mx = 0
    for i, v in enumerate(t, start=1):
        if not isinstance(v, int) or v < 1 or v > mx + 1:
            raise InvalidInputError(
                f"not a restricted growth function: letter {v!r} at position {i} "
                f"exceeds 1 + running maximum {mx}"
            )
        mx = max(mx, v)
    return t


def parse_rgf(text: str) -> Rgf:
    """Parse "12132" or "1 2 1 3 2" (also comma-separated)."""
    s = text.strip()
    if not s:
        raise InvalidInputError("empty word text")
    if "," in s or any(c.isspace() for c in s):
        parts = s.replace(",", " ").split()
    else:
        parts = list(s)
    try:
        vals = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise InvalidInputError(f"cannot parse word from {text!r}") from exc
    return validate(vals)


def format_rgf(word: Sequence[int]) -> str:
    if word and max(word) > 9:
        return " ".join(str(v) for v in word)
    return "".join(str(v) for v in word)


def word_standardize(word: Sequence[int]) -> tuple[int, ...]:
    """Tie-aware standardization: the i-th smallest distinct value becomes i."""
    rank = {v: i + 1 for i, v in enumerate(sorted(set(word)))}
    return tuple(rank[v] for v in word)


def _sign(a: int, b: int) -> int:
    return (a > b) - (a < b)


def _word_matches(pattern: Sequence[int], vals: Sequence[int]) -> bool:
    n = len(pattern)
    for i in range(n):
        for j in range(i + 1, n):
            if _sign(pattern[i], pattern[j]) != _sign(vals[i], vals[j]):
                return False
    return True


def rgf_contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True iff some subsequence of word standardizes to std(pattern)."""
    if not pattern:
        raise InvalidInputError("empty pattern")
    pat = word_standardize(pattern)
    w = tuple(word)
    k, n = len(pat), len(w)
    if k > n:
        return False

    chosen: list[int] = []

    def extend(start: int) -> bool:
        depth = len(chosen)
        for pos in range(start, n - (k - depth) + 1):
            ok = True
            for d, q in enumerate(chosen):
                if _sign(pat[d], pat[depth]) != _sign(w[q], w[pos]):
                    ok = False
                    break
            if not ok:
                continue
            if depth + 1 == k:
                return True
            chosen.append(pos)
            if extend(pos + 1):
                return True
            chosen.pop()
        return False

    return extend(0)


def rgf_avoids(word: Sequence[int], *patterns: Sequence[int]) -> bool:
    return all(not rgf_contains(word, p) for p in patterns)


def _contains_ending_at_last(w: Sequence[int], pat: Sequence[int]) -> bool:
    # occurrence of pat whose final letter is the final letter of w;
    # used to prune the enumeration tree exactly when a pattern completes
    k, n = len(pat), len(w)
    if k > n:
        return False
    last = n - 1
    chosen: list[int] = []

    def extend(start: int) -> bool:
        depth = len(chosen)
        if depth == k - 1:
            for d, q in enumerate(chosen):
                if _sign(pat[d], pat[k - 1]) != _sign(w[q], w[last]):
                    return False
            return True
        for pos in range(start, last):
            ok = True
            for d, q in enumerate(chosen):
                if _sign(pat[d], pat[depth]) != _sign(w[q], w[pos]):
                    ok = False
                    break
            if not ok:
                continue
            chosen.append(pos)
            if extend(pos + 1):
                return True
            chosen.pop()
        return False

    return extend(0)


def enumerate_rgfs(n: int, cap: int = DEFAULT_RGF_CAP) -> Iterator[Rgf]:
    """All RGFs of length n in lexicographic order (Bell-number many)."""
    if n < 0:
        raise InvalidInputError("length must be nonnegative")
    if n > cap:
        raise ResourceLimitError(f"refusing RGF enumeration at n={n} (cap {cap})")
    if n == 0:
        yield ()
        return

    word = [1]

    def extend() -> Iterator[Rgf]:
        if len(word) == n:
            yield tuple(word)
            return
        top = max(word)
        for letter in range(1, top + 2):
            word.append(letter)
            yield from extend()
            word.pop()

    yield from extend()


def enumerate_avoiders(
    n: int, pattern: Sequence[int], cap: int = DEFAULT_RGF_CAP
) -> list[Rgf]:
    """All length-n RGFs avoiding the (standardized) pattern, lex order.

    The search tree is pruned the moment an appended letter completes an
    occurrence; the naive filter over all RGFs is kept in the test suite as
    the oracle for this shortcut.
    """
    if not pattern:
        raise InvalidInputError("empty pattern")
    if n < 0:
        raise InvalidInputError("length must be nonnegative")
    if n > cap:
        raise ResourceLimitError(f"refusing RGF enumeration at n={n} (cap {cap})")
    pat = word_standardize(pattern)
    out: list[Rgf] = []
    if n == 0:
        return [()]

    word: list[int] = []

    def extend() -> None:
        if len(word) == n:
            out.append(tuple(word))
            return
        top = max(word) if word else 0
        for letter in range(1, top + 2):
            word.append(letter)
            if not _contains_ending_at_last(word, pat):
                extend()
            word.pop()

    extend()
    return out


def rgf_to_partition(word: Iterable[int]) -> tuple[tuple[int, ...], ...]:
    """Blocks of the encoded set partition, ordered by least element."""
    w = validate(word)
    blocks: dict[int, list[int]] = {}
    for i, v in enumerate(w, start=1):
        blocks.setdefault(v, []).append(i)
    # letter j is the j-th block; least elements are automatically increasing
    return tuple(tuple(blocks[j]) for j in sorted(blocks))


def partition_to_rgf(blocks: Iterable[Iterable[int]]) -> Rgf:
    bs = [sorted(b) for b in blocks]
    if any(not b for b in bs):
        raise InvalidInputError("empty block in partition")
    bs.sort(key=lambda b: b[0])
    n = sum(len(b) for b in bs)
    letter_of: dict[int, int] = {}
    for j, b in enumerate(bs, start=1):
        for x in b:
            if x in letter_of:
                raise InvalidInputError(f"element {x} appears in two blocks")
            letter_of[x] = j
    if sorted(letter_of) != list(range(1, n + 1)):
        raise InvalidInputError("blocks do not cover 1..n")
    return validate(letter_of[i] for i in range(1, n + 1))


def format_partition(blocks: Iterable[Iterable[int]]) -> str:
    """ASCII block form: 12134435367 -> "13-2-479-56-8-10-11"."""
    return "-".join("".join(str(x) for x in sorted(b)) for b in blocks)


def w_subword(word: Sequence[int]) -> tuple[int, ...]:
    """The word with the first occurrence of each distinct letter removed."""
    seen: set[int] = set()
    out = []
    for v in word:
        if v in seen:
            out.append(v)
        else:
            seen.add(v)
    return tuple(out)


def strip_ltr_maxima(word: Sequence[int]) -> tuple[int, ...]:
    """Delete the strict left-to-right maxima (on an RGF: the first occurrences)."""
    out = []
    mx = 0
    for v in word:
        if v > mx:
            mx = v
        else:
            out.append(v)
    return tuple(out)


def repeated_ltr_maxima(word: Sequence[int]) -> tuple[int, ...]:
    """1-based positions i >= 2 where the letter equals the maximum of its strict prefix."""
    out = []
    mx = 0
    for i, v in enumerate(word, start=1):
        if i > 1 and v == mx:
            out.append(i)
        mx = max(mx, v)
    return tuple(out)


def alpha(word: Iterable[int]) -> Rgf:
    """Remove the repeated left-to-right maxima; the result is again an RGF."""
    w = validate(word)
    drop = set(repeated_ltr_maxima(w))
    return validate(v for i, v in enumerate(w, start=1) if i not in drop)


def is_weakly_increasing(seq: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(seq, seq[1:]))


def active_sites_1221(word: Iterable[int]) -> range:
    """Letters whose appending keeps the word 1221-avoiding: t..max+1.

    t is the largest letter occurring at least twice, or 1 when every
    letter is distinct.  Input must itself avoid 1221.
    """
    w = validate(word)
    if rgf_contains(w, (1, 2, 2, 1)):
        raise InvalidInputError("word contains 1221; active sites are undefined")
    mx = max(w, default=0)
    repeated = [v for v in set(w) if w.count(v) >= 2]
    t = max(repeated, default=1)
    return range(t, mx + 2)


def max_distribution(
    n: int, pattern: Sequence[int], cap: int = DEFAULT_RGF_CAP
) -> dict[int, int]:
    """Counts of length-n avoiders of pattern grouped by their maximum letter."""
    dist: dict[int, int] = {}
    for w in enumerate_avoiders(n, pattern, cap=cap):
        m = max(w, default=0)
        dist[m] = dist.get(m, 0) + 1
    return dist


def all_words_standardized(length: int) -> Iterator[tuple[int, ...]]:
    """All standardized words of the given length (surjections onto 1..m)."""
    for m in range(1, length + 1):
        for w in itertools.product(range(1, m + 1), repeat=length):
            if len(set(w)) == m:
                yield w

"""Constructive correspondences between sortable permutations, restricted
growth functions, Dyck paths, and labeled Motzkin paths.

Each map comes with its inverse.  Domain conditions are validated up
front with InvalidInputError; defensive replay mismatches (which a
validated input can never trigger) raise MalformedInputError.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .errors import InsertRejected, InvalidInputError, MalformedInputError
from .grid import decompose, insert_cons, insert_min, insert_new_minimum
from .machine import is_sigma_sortable
from .paths import (
    dyck_parent,
    final_descent_length,
    validate_dyck,
    validate_labeled_motzkin,
)
from .perms import Perm, as_perm, contains_classical, ltr_minima
from .rgf import Rgf, rgf_contains, validate


# -- sortable permutations <-> words avoiding 12231 -----------------------

def sortable_to_rgf(pi: Iterable[int], relaxed: bool = False) -> Rgf:
    """Record, per entry, the index of the horizontal strip holding it.

    Letter i gets row j when m_j <= pi_i < m_{j-1} (m_0 infinite), so
    minima map to their own index and the count of ltr-minima becomes
    the maximum letter.  On sortable permutations the result avoids
    12231 and the map is a bijection; relaxed mode skips the
    sortability check and claims nothing about the image.
    """
    p = as_perm(pi)
    if not relaxed and not is_sigma_sortable(p, (1, 3, 2)):
        raise InvalidInputError(f"{p} is not sortable")
    mv = [v for _, v in ltr_minima(p)]
    return tuple(1 + sum(m > x for m in mv) for x in p)


def rgf_to_sortable(word: Iterable[int]) -> Perm:
    """Rebuild the sortable permutation whose strip word is the input.

    A first occurrence inserts a new minimum; any other letter j inserts
    into row j of the last column, choosing between the new-cell-minimum
    and consecutive-ascent insertions by which one is legal there.
    """
    r = validate(word)
    if rgf_contains(r, (1, 2, 2, 3, 1)):
        raise InvalidInputError(f"{r} contains 12231")
    p: Perm = ()
    mx = 0
    try:
        for j in r:
            if j == mx + 1:
                p = insert_new_minimum(p)
                mx = j
                continue
            d = decompose(p)
            cell = d.cell(j, d.k)
            if cell:
                last_row = 1 + sum(m > p[-1] for m in d.minima_values)
                p = insert_min(p, j) if last_row > j else insert_cons(p, j)
            else:
                p = insert_min(p, j)
    except InsertRejected as exc:
        raise MalformedInputError(f"no legal insertion for {r}: {exc}") from exc
    return p


# -- words avoiding 1221 <-> Dyck paths ------------------------------------

def rgf_to_dyck_path(word: Iterable[int]) -> str:
    """Replay the word's growth as peak insertions.

    Appending letter j to a prefix with maximum M and final descent run
    of length r inserts a peak so the new run has length M + 1 - j: at
    the very end when j == M, before the first D of the run when
    j == M + 1, and before the (r+j-M+1)-th D of the run otherwise.
    """
    r = validate(word)
    if rgf_contains(r, (1, 2, 2, 1)):
        raise InvalidInputError(f"{r} contains 1221")
    path = ""
    mx = 0
    for j in r:
        if not path:
            path = "UD"
        elif j == mx + 1:
            idx = len(path) - final_descent_length(path)
            path = path[:idx] + "UD" + path[idx:]
        elif j == mx:
            path += "UD"
        else:
            run = final_descent_length(path)
            q = run + j - mx + 1
            if not 2 <= q <= run:
                raise MalformedInputError(
                    f"letter {j} has no insertion site (run {run}, max {mx})"
                )
            idx = len(path) - run + (q - 1)
            path = path[:idx] + "UD" + path[idx:]
        mx = max(mx, j)
    return path


def dyck_path_to_rgf(path: str) -> Rgf:
    """Peel peaks back to the empty path, then replay the letters.

    Each peel removes the U just before the first D of the final run
    plus that D; the pair (child run length s, parent run length r)
    determines the letter: a new maximum for s == r + 1 and max + 1 - s
    otherwise.
    """
    validate_dyck(path)
    pairs: list[tuple[int, int]] = []
    cur = path
    while cur:
        s = final_descent_length(cur)
        parent = dyck_parent(cur)
        pairs.append((s, final_descent_length(parent)))
        cur = parent

    word: list[int] = []
    mx = 0
    for s, run in reversed(pairs):
        if not word:
            j = 1
        elif s == run + 1:
            j = mx + 1
        else:
            j = mx + 1 - s
        word.append(j)
        mx = max(mx, j)
    out = tuple(word)
    try:
        validate(out)
    except InvalidInputError as exc:
        raise MalformedInputError(f"replay produced a non-word: {out}") from exc
    if rgf_contains(out, (1, 2, 2, 1)):
        raise MalformedInputError(f"replay produced {out} containing 1221")
    return out


# -- labeled Motzkin paths <-> words avoiding 12323 / 12332 ----------------

def _check_mode(mode: str) -> str:
    if mode not in ("stack", "queue"):
        raise InvalidInputError(f"mode must be 'stack' or 'queue', not {mode!r}")
    return mode


def labeled_motzkin_to_rgf(
    steps: Iterable[str], mode: str = "stack", reduced: bool = False
) -> Rgf:
    """Scan the path, growing a word letter by letter from an initial 1.

    U appends a new strict maximum and stores it; D appends the stored
    element currently accessible and removes it; H0 appends a new strict
    maximum without storing; H1 appends 1; H2 appends the accessible
    element without removing it.  The store is a stack or a queue
    depending on mode.  Reduced form requires an H1-free path and
    returns the word minus its leading 1, all letters decremented.
    """
    _check_mode(mode)
    p = validate_labeled_motzkin(steps)
    if reduced and "H1" in p:
        raise InvalidInputError("reduced form is only defined for H1-free paths")
    word = [1]
    store: list[int] = []
    mx = 1
    for step in p:
        if step == "U":
            mx += 1
            word.append(mx)
            store.append(mx)
        elif step == "D":
            word.append(store.pop() if mode == "stack" else store.pop(0))
        elif step == "H0":
            mx += 1
            word.append(mx)
        elif step == "H1":
            word.append(1)
        else:  # H2
            word.append(store[-1] if mode == "stack" else store[0])
    if reduced:
        return tuple(v - 1 for v in word[1:])
    return tuple(word)


def rgf_to_labeled_motzkin(
    word: Iterable[int], mode: str = "stack", reduced: bool = False
) -> tuple[str, ...]:
    """Classify each letter after the first by its occurrence pattern.

    A 1 is H1; a first occurrence is U when the value recurs and H0 when
    it does not; a later occurrence is H2 when the value recurs again
    and D when it is the last.  The result is replayed forward as a
    defensive consistency check.
    """
    _check_mode(mode)
    r = validate(word)
    if reduced:
        r = validate((1,) + tuple(v + 1 for v in r))
    if not r:
        raise InvalidInputError("need a word of length >= 1")
    forbidden = (1, 2, 3, 2, 3) if mode == "stack" else (1, 2, 3, 3, 2)
    if rgf_contains(r, forbidden):
        raise InvalidInputError(
            f"{r} contains {''.join(map(str, forbidden))} ({mode} mode)"
        )
    if r[0] != 1:
        raise InvalidInputError("word must start with 1")

    last = {}
    first = {}
    for i, v in enumerate(r):
        last[v] = i
        first.setdefault(v, i)

    steps: list[str] = []
    for i, v in enumerate(r):
        if i == 0:
            continue
        if v == 1:
            steps.append("H1")
        elif first[v] == i:
            steps.append("U" if last[v] > i else "H0")
        else:
            steps.append("H2" if last[v] > i else "D")

    # replay; a mismatch means the classification cannot be realized
    store: list[int] = []
    check = [1]
    mx = 1
    for step in steps:
        if step == "U":
            mx += 1
            check.append(mx)
            store.append(mx)
        elif step == "D":
            if not store:
                raise MalformedInputError("D with nothing stored")
            check.append(store.pop() if mode == "stack" else store.pop(0))
        elif step == "H0":
            mx += 1
            check.append(mx)
        elif step == "H1":
            check.append(1)
        else:
            if not store:
                raise MalformedInputError("H2 with nothing stored")
            check.append(store[-1] if mode == "stack" else store[0])
    if tuple(check) != r:
        raise MalformedInputError(f"replay of {r} diverged at {tuple(check)}")
    return tuple(steps)


# -- words avoiding 12321 (weakly increasing remainder) <-> Av(321) --------

def _strict_maxima_positions(r: Rgf) -> list[int]:
    out = []
    mx = 0
    for i, v in enumerate(r):
        if v > mx:
            out.append(i)
            mx = v
    return out


def rgf_to_av321(word: Iterable[int]) -> Perm:
    """Turn a word whose non-maxima part is weakly increasing into a
    321-avoiding permutation.

    Strict maxima keep their positions and end up as the permutation's
    ltr-maxima; the remaining letters r_{i_1}, r_{i_2}, ... become the
    strictly increasing values s_1 = r_{i_1}, s_j = s_{j-1} +
    (r_{i_j} - r_{i_{j-1}}) + 1, and the leftover values fill the maxima
    slots in increasing order.
    """
    r = validate(word)
    n = len(r)
    maxpos = set(_strict_maxima_positions(r))
    rest = [(i, v) for i, v in enumerate(r) if i not in maxpos]
    for (ia, va), (ib, vb) in zip(rest, rest[1:]):
        if vb < va:
            raise InvalidInputError(
                f"letter at position {ib + 1} breaks the weakly increasing "
                f"remainder ({vb} after {va})"
            )
    out = [0] * n
    s = 0
    prev = None
    for i, v in rest:
        s = v if prev is None else s + (v - prev) + 1
        out[i] = s
        prev = v
    unused = sorted(set(range(1, n + 1)) - {out[i] for i, _ in rest})
    for i, v in zip(sorted(maxpos), unused):
        out[i] = v
    return tuple(out)


def av321_to_rgf(pi: Iterable[int]) -> Rgf:
    """Inverse of rgf_to_av321, defined on 321-avoiding permutations."""
    p = as_perm(pi)
    if contains_classical(p, (3, 2, 1)):
        raise InvalidInputError(f"{p} contains 321")
    maxpos = []
    mx = 0
    for i, v in enumerate(p):
        if v > mx:
            maxpos.append(i)
            mx = v
    maxset = set(maxpos)
    word = [0] * len(p)
    for rank, i in enumerate(maxpos, start=1):
        word[i] = rank
    prev_s = None
    prev_r = None
    for i, v in enumerate(p):
        if i in maxset:
            continue
        word[i] = v if prev_s is None else prev_r + (v - prev_s) - 1
        prev_s, prev_r = v, word[i]
    out = tuple(word)
    try:
        return validate(out)
    except InvalidInputError as exc:
        raise MalformedInputError(f"inverse produced a non-word: {out}") from exc


# -- words avoiding 12231 <-> words avoiding 12321 -------------------------

class TripleIndex(NamedTuple):
    """1-based occurrence positions; all-0 and all-(n+1) are the
    no-occurrence conventions of the two scans."""

    i1: int
    i2: int
    i3: int


def rightmost_321(word: Iterable[int]) -> TripleIndex:
    """Lexicographically largest positions of a strictly decreasing triple."""
    r = tuple(word)
    n = len(r)
    for i1 in range(n - 2, 0, -1):
        for i2 in range(n - 1, i1, -1):
            if r[i2 - 1] >= r[i1 - 1]:
                continue
            for i3 in range(n, i2, -1):
                if r[i3 - 1] < r[i2 - 1]:
                    return TripleIndex(i1, i2, i3)
    return TripleIndex(0, 0, 0)


def leftmost_repeat_231(word: Iterable[int]) -> TripleIndex:
    """Lexicographically least 231 occurrence whose first letter is a
    repeat (not the first occurrence of its value)."""
    r = tuple(word)
    n = len(r)
    seen: set[int] = set()
    for j1 in range(1, n + 1):
        v1 = r[j1 - 1]
        is_repeat = v1 in seen
        seen.add(v1)
        if not is_repeat:
            continue
        for j2 in range(j1 + 1, n + 1):
            if r[j2 - 1] <= v1:
                continue
            for j3 in range(j2 + 1, n + 1):
                if r[j3 - 1] < v1:
                    return TripleIndex(j1, j2, j3)
    return TripleIndex(n + 1, n + 1, n + 1)


_GAMMA_STEP_LIMIT_POWER = 3


def _swap(r: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    w = list(r)
    w[a - 1], w[b - 1] = w[b - 1], w[a - 1]
    return tuple(w)


def to_12321_avoider(
    word: Iterable[int], with_steps: bool = False
) -> Rgf | tuple[Rgf, list[TripleIndex]]:
    """Swap away strictly decreasing triples, rightmost first.

    Defined on words avoiding 12231 (equivalently, with no repeat-led
    231).  Each swap exchanges the first two letters of the current
    rightmost triple, which strictly decreases that triple in the
    lexicographic order, so the loop terminates in a 321-free word with
    the same letter multiset.
    """
    r = validate(word)
    if leftmost_repeat_231(r) != TripleIndex(len(r) + 1, len(r) + 1, len(r) + 1):
        raise InvalidInputError(f"{r} contains a repeat-led 231")
    steps: list[TripleIndex] = []
    limit = max(1, len(r)) ** _GAMMA_STEP_LIMIT_POWER
    prev = None
    while True:
        t = rightmost_321(r)
        if t == TripleIndex(0, 0, 0):
            break
        if prev is not None and not t < prev:
            raise RuntimeError(f"triple {t} did not decrease below {prev}")
        if len(steps) >= limit:
            raise RuntimeError(f"swap loop exceeded {limit} steps")
        steps.append(t)
        prev = t
        r = _swap(r, t.i1, t.i2)
    validate(r)
    return (r, steps) if with_steps else r


def to_12231_avoider(
    word: Iterable[int], with_steps: bool = False
) -> Rgf | tuple[Rgf, list[TripleIndex]]:
    """Swap repeat-led 231 occurrences back in, leftmost first.

    Defined on 321-free words; inverse of to_12321_avoider.
    """
    r = validate(word)
    if rightmost_321(r) != TripleIndex(0, 0, 0):
        raise InvalidInputError(f"{r} contains 321")
    n = len(r)
    sentinel = TripleIndex(n + 1, n + 1, n + 1)
    steps: list[TripleIndex] = []
    limit = max(1, n) ** _GAMMA_STEP_LIMIT_POWER
    while True:
        t = leftmost_repeat_231(r)
        if t == sentinel:
            break
        if len(steps) >= limit:
            raise RuntimeError(f"swap loop exceeded {limit} steps")
        steps.append(t)
        r = _swap(r, t.i1, t.i2)
    validate(r)
    return (r, steps) if with_steps else r

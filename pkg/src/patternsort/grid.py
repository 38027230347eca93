"""Grid decomposition by left-to-right minima, and the recursive generator.

A permutation splits along its ltr-minima m_1 > ... > m_k: block B_j
holds the non-minima positioned between m_j and the next minimum,
horizontal strip H_i holds the values strictly between m_i and m_{i-1}
(with m_0 infinite), and cell C_{i,j} is their intersection.  The core
is the word of non-minima.  For sortable permutations the last column
carries a notion of active cells, and appending one new element per
active cell (plus a brand new minimum) generates every sortable
permutation of the next length exactly once.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import InsertRejected, InvalidInputError, ResourceLimitError
from .machine import DEFAULT_PERM_CAP, is_sigma_sortable
from .perms import Perm, as_perm, ltr_minima, standardize


@dataclass(frozen=True)
class GridDecomposition:
    perm: Perm
    minima: tuple[tuple[int, int], ...]  # (position, value), values decreasing
    blocks: tuple[Perm, ...]  # B_1..B_k, values in position order
    hstrips: tuple[Perm, ...]  # H_1..H_k, values in position order
    cells: dict[tuple[int, int], Perm] = field(default_factory=dict)  # nonempty only
    core: Perm = ()

    @property
    def k(self) -> int:
        return len(self.minima)

    @property
    def minima_values(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.minima)

    def cell(self, i: int, j: int) -> Perm:
        if not (1 <= i <= self.k and 1 <= j <= self.k):
            raise InvalidInputError(f"cell ({i},{j}) out of range for k={self.k}")
        return self.cells.get((i, j), ())

    def block(self, j: int) -> Perm:
        return self.blocks[j - 1]

    def hstrip(self, i: int) -> Perm:
        return self.hstrips[i - 1]

    def std_cell(self, i: int, j: int) -> Perm:
        return standardize(self.cell(i, j))

    def std_block(self, j: int) -> Perm:
        return standardize(self.block(j))

    def std_hstrip(self, i: int) -> Perm:
        return standardize(self.hstrip(i))

    def std_core(self) -> Perm:
        return standardize(self.core)

    def describe(self) -> list[str]:
        """One line per horizontal strip, nonempty cells delimited."""
        mv = self.minima_values
        lines = []
        for i in range(1, self.k + 1):
            top = "inf" if i == 1 else str(mv[i - 2])
            span = f"({mv[i - 1]}..{top})"
            parts = [
                f"C({i},{j})=" + ",".join(str(v) for v in self.cells[(i, j)])
                for j in range(1, self.k + 1)
                if (i, j) in self.cells
            ]
            lines.append(f"row {i} {span}: " + (" | ".join(parts) or "(no cells)"))
        return lines


def decompose(pi: Iterable[int]) -> GridDecomposition:
    p = as_perm(pi)
    if not p:
        raise InvalidInputError("cannot decompose the empty permutation")
    minima = tuple(ltr_minima(p))
    mpos = [pos for pos, _ in minima]
    mval = [val for _, val in minima]
    k = len(minima)

    blocks: list[list[int]] = [[] for _ in range(k)]
    j = 0
    for q, x in enumerate(p, start=1):
        if j < k and q == mpos[j]:
            j += 1
            continue
        blocks[j - 1].append(x)

    # row i holds values in the open interval (m_i, m_{i-1})
    hstrips: list[list[int]] = [[] for _ in range(k)]
    rows: dict[int, int] = {}
    for x in p:
        if x in set(mval):
            continue
        i = 1 + sum(1 for m in mval if m > x)
        rows[x] = i
        hstrips[i - 1].append(x)

    cells: dict[tuple[int, int], Perm] = {}
    for bj, blk in enumerate(blocks, start=1):
        for x in blk:
            key = (rows[x], bj)
            cells[key] = cells.get(key, ()) + (x,)

    core = tuple(x for x in p if x not in set(mval))
    return GridDecomposition(
        p,
        minima,
        tuple(tuple(b) for b in blocks),
        tuple(tuple(h) for h in hstrips),
        cells,
        core,
    )


class StructuralReport(NamedTuple):
    """Outcome of each necessary condition; passing all of them does not
    imply sortability."""

    conditions: tuple[tuple[str, bool], ...]

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.conditions)

    def failures(self) -> list[str]:
        return [name for name, ok in self.conditions if not ok]


def _is_colayered_word(w: Perm) -> bool:
    from .perms import avoids

    return avoids(standardize(w), (2, 1, 3), (1, 3, 2))


def structural_check(pi: Iterable[int]) -> StructuralReport:
    """Evaluate the necessary conditions for 132-sortability independently."""
    from .perms import avoids

    p = as_perm(pi)
    if not p:
        return StructuralReport((("nonempty", True),))
    d = decompose(p)
    k = d.k

    block_order = all(
        x > y
        for i in range(k)
        for j in range(i + 1, k)
        for x in d.blocks[i]
        for y in d.blocks[j]
    )

    no_switch = True
    for (i, j) in d.cells:
        if any((u, v) in d.cells for u in range(1, i) for v in range(j + 1, k + 1)):
            no_switch = False
            break

    cells_colayered = all(_is_colayered_word(c) for c in d.cells.values())
    strips_colayered = all(_is_colayered_word(h) for h in d.hstrips)
    core_ok = avoids(d.std_core(), (2, 1, 3))

    return StructuralReport(
        (
            ("block-ordering", block_order),
            ("no-switch", no_switch),
            ("cells-colayered", cells_colayered),
            ("strips-colayered", strips_colayered),
            ("core-avoids-213", core_ok),
        )
    )


def _require_sortable(p: Perm) -> None:
    if not is_sigma_sortable(p, (1, 3, 2)):
        raise InvalidInputError(f"{p} is not sortable")


def active_cells(pi: Iterable[int]) -> set[int]:
    """Rows i of the last column where an insertion can stay sortable."""
    p = as_perm(pi)
    _require_sortable(p)
    d = decompose(p)
    k = d.k
    mval = d.minima_values
    last_block = d.blocks[k - 1]

    active: set[int] = set()
    for i in range(1, k + 1):
        below_left = any(
            (u, v) in d.cells
            for u in range(i + 1, k + 1)
            for v in range(1, k)
        )
        if below_left:
            continue
        under = [v for v in last_block if v < mval[i - 1]]
        if all(a < b for a, b in zip(under, under[1:])):
            active.add(i)
    return active


class InsertionKind(NamedTuple):
    """One of "new-min", "min" (cell i), "cons" (cell i); cell indices
    refer to the last column."""

    kind: str
    cell: int | None = None


def insert_new_minimum(pi: Iterable[int]) -> Perm:
    p = as_perm(pi)
    _require_sortable(p)
    return tuple(x + 1 for x in p) + (1,)


def _last_entry_row(d: GridDecomposition) -> int:
    v = d.perm[-1]
    return 1 + sum(1 for m in d.minima_values if m > v)


def insert_min(pi: Iterable[int], i: int) -> Perm:
    """Append a new smallest element of cell (i, k)."""
    p = as_perm(pi)
    _require_sortable(p)
    d = decompose(p)
    if i not in active_cells(p):
        raise InsertRejected("inactive", f"cell ({i},{d.k}) is not active")
    cell = d.cell(i, d.k)
    if cell and _last_entry_row(d) <= i:
        raise InsertRejected(
            "illegal-op", f"last entry sits in row {_last_entry_row(d)} <= {i}"
        )
    pivot = d.minima_values[i - 1]
    return tuple(x if x <= pivot else x + 1 for x in p) + (pivot + 1,)


def insert_cons(pi: Iterable[int], i: int) -> Perm:
    """Append the successor of the last element of cell (i, k)."""
    p = as_perm(pi)
    _require_sortable(p)
    d = decompose(p)
    if i not in active_cells(p):
        raise InsertRejected("inactive", f"cell ({i},{d.k}) is not active")
    cell = d.cell(i, d.k)
    if not cell:
        raise InsertRejected("empty-cell", f"cell ({i},{d.k}) is empty")
    if _last_entry_row(d) > i:
        raise InsertRejected(
            "illegal-op", f"last entry sits in row {_last_entry_row(d)} > {i}"
        )
    pivot = cell[-1]
    return tuple(x if x <= pivot else x + 1 for x in p) + (pivot + 1,)


def insert(pi: Iterable[int], kind: InsertionKind) -> Perm:
    if kind.kind == "new-min":
        return insert_new_minimum(pi)
    if kind.kind == "min":
        if kind.cell is None:
            raise InvalidInputError("min insertion needs a cell index")
        return insert_min(pi, kind.cell)
    if kind.kind == "cons":
        if kind.cell is None:
            raise InvalidInputError("cons insertion needs a cell index")
        return insert_cons(pi, kind.cell)
    raise InvalidInputError(f"unknown insertion kind {kind.kind!r}")


def children(pi: Iterable[int]) -> list[tuple[InsertionKind, Perm]]:
    """The new minimum plus the single legal insertion per active cell."""
    p = as_perm(pi)
    _require_sortable(p)
    d = decompose(p)
    out = [(InsertionKind("new-min"), insert_new_minimum(p))]
    for i in sorted(active_cells(p)):
        cell = d.cell(i, d.k)
        if cell and _last_entry_row(d) <= i:
            out.append((InsertionKind("cons", i), insert_cons(p, i)))
        else:
            out.append((InsertionKind("min", i), insert_min(p, i)))
    return out


def generate_sortable(n: int, cap: int = DEFAULT_PERM_CAP) -> list[Perm]:
    """Sort_n(132) grown level by level from the one-element permutation."""
    if n < 0:
        raise InvalidInputError("length must be nonnegative")
    if n > cap:
        raise ResourceLimitError(f"refusing generation at n={n} (cap {cap})")
    if n == 0:
        return [()]
    level: list[Perm] = [(1,)]
    for _ in range(n - 1):
        nxt: list[Perm] = []
        for p in level:
            nxt.extend(q for _, q in children(p))
        level = nxt
    return sorted(level)


def active_count_distribution(n: int, cap: int = DEFAULT_PERM_CAP) -> Counter[int]:
    """Multiset of active-cell counts over all sortable permutations of
    length n.  Reported empirically; no succession rule is asserted."""
    return Counter(len(active_cells(p)) for p in generate_sortable(n, cap))


def minima_distribution(n: int, cap: int = DEFAULT_PERM_CAP) -> Counter[int]:
    """How many sortable permutations of length n have each ltr-minima count."""
    return Counter(len(ltr_minima(p)) for p in generate_sortable(n, cap))

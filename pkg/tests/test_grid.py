import pytest

from patternsort.errors import InsertRejected, InvalidInputError
from patternsort.grid import (
    active_cells,
    children,
    decompose,
    generate_sortable,
    insert,
    insert_cons,
    insert_min,
    insert_new_minimum,
    minima_distribution,
    structural_check,
    InsertionKind,
)
from patternsort.machine import enumerate_sortable, is_sigma_sortable
from patternsort.perms import all_perms, standardize

WORKED = (13, 14, 15, 10, 12, 6, 7, 8, 11, 9, 3, 1, 4, 5, 2)


def test_worked_decomposition():
    d = decompose(WORKED)
    assert d.minima_values == (13, 10, 6, 3, 1)
    assert d.k == 5
    assert d.cell(1, 1) == (14, 15)
    assert d.cell(2, 2) == (12,)
    assert d.cell(2, 3) == (11,)
    assert d.cell(3, 3) == (7, 8, 9)
    assert d.cell(4, 5) == (4, 5)
    assert d.cell(5, 5) == (2,)
    assert d.cell(1, 2) == ()
    # cells below the diagonal are structurally empty
    with_lower = [(i, j) for (i, j) in d.cells if i > j]
    assert not with_lower
    assert standardize(d.core) == (9, 10, 8, 4, 5, 7, 6, 2, 3, 1)
    assert standardize(d.hstrip(2)) == (2, 1)
    assert standardize(d.cell(3, 3)) == (1, 2, 3)


def test_describe_lines():
    text = decompose(WORKED).describe()
    assert text[0] == "row 1 (13..inf): C(1,1)=14,15"
    assert text[1] == "row 2 (10..13): C(2,2)=12 | C(2,3)=11"


def test_reconstruction():
    for n in range(1, 8):
        for p in all_perms(n):
            d = decompose(p)
            rebuilt = []
            for j, (pos, val) in enumerate(d.minima, 1):
                rebuilt.append(val)
                rebuilt.extend(d.block(j))
            assert tuple(rebuilt) == p, p


def test_structural_check_examples():
    rep = structural_check((2, 3, 1, 4))
    assert not rep.passed and "block-ordering" in rep.failures()
    # 132 satisfies every listed condition yet the machine rejects it
    rep132 = structural_check((1, 3, 2))
    assert rep132.passed
    assert not is_sigma_sortable((1, 3, 2))


def test_structural_necessary_on_sortables():
    for n in range(1, 8):
        for p in enumerate_sortable(n, (1, 3, 2)):
            assert structural_check(p).passed, p


def test_active_cells_small():
    assert active_cells((1,)) == {1}
    assert active_cells((1, 2)) == {1}
    assert active_cells((2, 1)) == {1, 2}
    with pytest.raises(InvalidInputError):
        active_cells((1, 3, 2))


def test_active_cells_blocked_example():
    # cell 1 fails the increasing condition, cells 2 and 3 are active
    assert active_cells((5, 6, 3, 1, 4, 2)) == {2, 3}


def test_insertions_on_blocked_example():
    p = (5, 6, 3, 1, 4, 2)
    assert insert_min(p, 2) == (6, 7, 3, 1, 5, 2, 4)
    assert insert_cons(p, 3) == (6, 7, 4, 1, 5, 2, 3)
    with pytest.raises(InsertRejected) as e:
        insert_min(p, 1)
    assert e.value.reason == "inactive"
    with pytest.raises(InsertRejected) as e:
        insert_cons(p, 2)
    assert e.value.reason == "illegal-op"


def test_insertion_small_examples():
    assert insert_new_minimum((1,)) == (2, 1)
    assert insert_cons((1, 2), 1) == (1, 2, 3)
    with pytest.raises(InsertRejected) as e:
        insert_min((1, 2), 1)
    assert e.value.reason == "illegal-op"
    with pytest.raises(InsertRejected) as e:
        insert_cons((2, 1), 1)
    assert e.value.reason == "empty-cell"


def test_insert_dispatch():
    assert insert((1,), InsertionKind("new-min")) == (2, 1)
    assert insert((1, 2), InsertionKind("cons", 1)) == (1, 2, 3)


def test_children_count_and_legality():
    for n in range(1, 7):
        for p in enumerate_sortable(n, (1, 3, 2)):
            kids = children(p)
            assert len(kids) == len(active_cells(p)) + 1
            values = [q for _, q in kids]
            assert len(set(values)) == len(values)
            for q in values:
                assert is_sigma_sortable(q)
                assert standardize(q[:-1]) == p


def test_generate_matches_machine():
    assert generate_sortable(0) == [()]
    for n in range(1, 8):
        assert generate_sortable(n) == enumerate_sortable(n, (1, 3, 2))


def test_minima_distribution_small():
    assert minima_distribution(3) == {1: 1, 2: 3, 3: 1}
    assert sum(minima_distribution(5).values()) == 51

import pytest
from hypothesis import given, strategies as st

from patternsort.errors import InvalidInputError
from patternsort.perms import (
    MU,
    MeshPattern,
    all_perms,
    avoids,
    complement,
    contains_classical,
    contains_mesh,
    descents_ascents,
    direct_sum,
    format_perm,
    is_colayered,
    is_layered,
    is_perm,
    ltr_extrema,
    ltr_maxima,
    ltr_minima,
    mu_predicate,
    occurrence_of,
    parse_perm,
    reverse,
    skew_sum,
    standardize,
    _is_layered_by_avoidance,
)

perm_lists = st.permutations(list(range(1, 7)))


def test_is_perm():
    assert is_perm((2, 1, 3))
    assert is_perm(())
    assert not is_perm((1, 1, 2))
    assert not is_perm((0, 1))
    assert not is_perm((2, 3))


def test_parse_perm_forms():
    assert parse_perm("2 4 1 3") == (2, 4, 1, 3)
    assert parse_perm("2,4,1,3") == (2, 4, 1, 3)
    assert parse_perm("2413") == (2, 4, 1, 3)
    with pytest.raises(InvalidInputError):
        parse_perm("")
    with pytest.raises(InvalidInputError):
        parse_perm("1 2 x")
    with pytest.raises(InvalidInputError):
        parse_perm("1 1 2")


def test_format_roundtrip():
    assert format_perm((2, 4, 1, 3)) == "2 4 1 3"
    p = tuple(range(1, 13))
    assert parse_perm(format_perm(p)) == p


def test_standardize():
    assert standardize((5, 9, 2)) == (2, 3, 1)
    assert standardize(()) == ()
    with pytest.raises(InvalidInputError):
        standardize((1, 1))


def test_occurrence_of_is_lex_least():
    # positions are 1-based and chosen greedily from the left
    assert occurrence_of((2, 4, 1, 3), (1, 3, 2)) == (1, 2, 4)
    assert occurrence_of((1, 2, 3), (2, 1)) is None


def test_contains_classical_basics():
    assert contains_classical((2, 4, 1, 3), (2, 1))
    assert not contains_classical((1, 2, 3), (3, 2, 1))
    assert avoids((1, 2, 3), (2, 1), (3, 1, 2))
    assert not avoids((3, 1, 2), (2, 1))


def test_mesh_parse_and_str():
    m = MeshPattern.parse("132;(0,2)(2,0)(2,1)")
    assert m == MU
    assert MeshPattern.parse(str(m)) == m


def test_mesh_mu_examples():
    # 3142 contains classical 132 but every occurrence is killed by shading
    assert contains_classical((3, 1, 4, 2), (1, 3, 2))
    assert not contains_mesh((3, 1, 4, 2), MU)
    assert contains_mesh((1, 3, 2), MU)


def test_mesh_vs_predicate_exhaustive():
    for n in range(1, 7):
        for p in all_perms(n):
            assert contains_mesh(p, MU) == mu_predicate(p), p


def test_ltr_extrema():
    p = (3, 4, 1, 7, 6, 2, 5)
    assert ltr_minima(p) == [(1, 3), (3, 1)]
    assert ltr_maxima(p) == [(1, 3), (2, 4), (4, 7)]
    assert ltr_extrema(p) == (ltr_minima(p), ltr_maxima(p))


def test_descents_ascents_worked_example():
    d = descents_ascents((3, 4, 1, 7, 6, 2, 5))
    assert set(d.descents) == {(4, 1), (7, 6), (6, 2)}
    assert d.consecutive_descents == ((7, 6),)
    assert set(d.ascents) == {(3, 4), (1, 7), (2, 5)}
    assert d.consecutive_ascents == ((3, 4),)


def test_symmetries():
    p = (2, 4, 1, 3)
    assert complement(p) == (3, 1, 4, 2)
    assert reverse(p) == (3, 1, 4, 2)
    assert complement(complement(p)) == p
    assert direct_sum((1,), (2, 1)) == (1, 3, 2)
    assert skew_sum((1,), (2, 1)) == (3, 2, 1)


@given(perm_lists)
def test_layered_routes_agree(lst):
    p = tuple(lst)
    assert is_layered(p) == _is_layered_by_avoidance(p)


def test_layered_counts():
    # layered permutations of n are the 2^(n-1) compositions of n
    for n in range(1, 7):
        assert sum(is_layered(p) for p in all_perms(n)) == 2 ** (n - 1)


def test_colayered_is_layered_complement():
    for n in range(1, 6):
        for p in all_perms(n):
            assert is_colayered(p) == is_layered(complement(p))

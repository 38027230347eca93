import pytest

from patternsort.errors import InvalidInputError, MalformedInputError, ResourceLimitError
from patternsort.paths import (
    DEFAULT_LABELED_CAP,
    DEFAULT_PATH_CAP,
    double_rises,
    dyck_children,
    dyck_parent,
    enumerate_dyck,
    enumerate_labeled_motzkin,
    enumerate_motzkin,
    final_descent_length,
    format_steps,
    heights,
    is_dyck,
    is_motzkin,
    parse_steps,
    validate_labeled_motzkin,
)
from patternsort.sequences import catalan, motzkin


def test_is_dyck():
    assert is_dyck("")
    assert is_dyck("UD")
    assert is_dyck("UUDUDD")
    assert not is_dyck("DU")
    assert not is_dyck("UDD")
    assert not is_dyck("UDU")


def test_heights():
    assert heights("UUDD") == [1, 2, 1, 0]


def test_parse_steps():
    assert parse_steps("H0 H1 U U D H2 H0 D H0 H0") == (
        "H0", "H1", "U", "U", "D", "H2", "H0", "D", "H0", "H0"
    )
    assert parse_steps("UUDD") == ("U", "U", "D", "D")
    assert parse_steps("UH1D") == ("U", "H1", "D")
    with pytest.raises(MalformedInputError):
        parse_steps("UX")
    with pytest.raises(MalformedInputError):
        parse_steps("H3")


def test_format_steps():
    assert format_steps(("U", "D")) == "UD"
    assert format_steps(("H0", "U", "D")) == "H0 U D"
    steps = parse_steps("H0 H1 U U D H2 H0 D H0 H0")
    assert parse_steps(format_steps(steps)) == steps


def test_labeled_validation():
    validate_labeled_motzkin(("H0", "H1"))
    validate_labeled_motzkin(("U", "H2", "D"))
    with pytest.raises(InvalidInputError) as e:
        validate_labeled_motzkin(("H2",))
    assert "position 1" in str(e.value)
    with pytest.raises(InvalidInputError):
        validate_labeled_motzkin(("D",))
    with pytest.raises(InvalidInputError):
        validate_labeled_motzkin(("U",))
    with pytest.raises(InvalidInputError):
        validate_labeled_motzkin(("U", "H3", "D"))


def test_enumerate_dyck():
    assert list(enumerate_dyck(0)) == [""]
    assert list(enumerate_dyck(1)) == ["UD"]
    for n in range(1, 8):
        ps = list(enumerate_dyck(n))
        assert len(ps) == catalan(n)
        assert ps == sorted(ps)
        assert all(is_dyck(p) for p in ps)


def test_enumerate_motzkin():
    for n in range(0, 8):
        ms = list(enumerate_motzkin(n))
        assert len(ms) == motzkin(n)
        assert all(is_motzkin(m) for m in ms)


def test_enumerate_labeled():
    # 1, 2, 5, 15, 51: one fewer than the word length they encode
    counts = [sum(1 for _ in enumerate_labeled_motzkin(n)) for n in range(5)]
    assert counts == [1, 2, 5, 15, 51]


def test_caps():
    with pytest.raises(ResourceLimitError):
        list(enumerate_dyck(DEFAULT_PATH_CAP + 1))
    with pytest.raises(ResourceLimitError):
        list(enumerate_labeled_motzkin(DEFAULT_LABELED_CAP + 1))


def test_double_rises():
    assert double_rises("UD") == 0
    assert double_rises("UUDD") == 1
    assert double_rises("UUUDDD") == 2
    assert double_rises("UDUDUD") == 0


def test_final_descent_length():
    assert final_descent_length("UUDD") == 2
    assert final_descent_length("UUDDUD") == 1


def test_children_parent_inverse():
    for n in range(1, 7):
        for p in enumerate_dyck(n):
            kids = dyck_children(p)
            assert len(kids) == final_descent_length(p) + 1
            for q in kids:
                assert dyck_parent(q) == p
    with pytest.raises(InvalidInputError):
        dyck_parent("")


def test_every_path_has_unique_parent():
    for n in range(2, 8):
        for q in enumerate_dyck(n):
            p = dyck_parent(q)
            assert is_dyck(p) and len(p) == 2 * (n - 1)
            assert q in dyck_children(p)

import pytest

from patternsort.checks import SCOPES, check_names, run_checks


def test_scopes_cover_registry():
    assert SCOPES == ("machine", "grid", "rgf", "bijections", "sequences")
    all_names = check_names("all")
    assert len(all_names) == len(set(all_names))
    assert sum(len(check_names(s)) for s in SCOPES) == len(all_names)


def test_run_checks_small():
    results = run_checks("all", 4)
    assert results and all(r.passed for r in results)
    assert all(r.seconds >= 0 for r in results)
    names = [r.name for r in results]
    assert names == list(check_names("all"))


def test_run_checks_scoped():
    results = run_checks("grid", 4)
    assert results and all(r.scope == "grid" for r in results)


def test_run_checks_validates_arguments():
    with pytest.raises(ValueError):
        run_checks("nonsense", 4)
    with pytest.raises(ValueError):
        run_checks("all", 0)

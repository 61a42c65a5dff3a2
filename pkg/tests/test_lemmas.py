"""The self-check suites should all pass, and reject bad suite names/scales."""

import pytest

from lucasdisc.lemmas import SUITES, run_all, run_suite


def test_all_suites_pass_at_scale_1():
    failures = run_all(1)
    assert sorted(failures) == sorted(SUITES)
    assert all(fails == [] for fails in failures.values())


@pytest.mark.parametrize("name", sorted(SUITES))
def test_each_suite_individually(name):
    assert run_suite(name, 1) == []


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suite("no-such-suite", 1)


def test_bad_scale_rejected():
    with pytest.raises(ValueError):
        run_suite("recurrence", 0)

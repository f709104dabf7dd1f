import pytest

from ncshuffle import suites
from ncshuffle.shuffle import moments_character


@pytest.mark.parametrize("name", list(suites.SUITES))
def test_every_suite_passes_quickly(name):
    checks = suites.run_suite(name, seed=11, cases=2)
    assert checks and all(c.passed for c in checks), [c.line() for c in checks if not c.passed]


def test_failure_reports_first_counterexample():
    rec = suites._Recorder("demo")
    a = moments_character([1, 2, 3])
    b = moments_character([1, 2, 4])
    rec.equal("a = b", a, b)
    (check,) = rec.result()
    assert not check.passed and check.counterexample.startswith("aaa: 3 != 4")
    assert check.line().startswith("FAIL demo")


def test_unknown():
    with pytest.raises(KeyError):
        suites.run_suite("nope")

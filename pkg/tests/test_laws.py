import pytest

from ohmrush import laws


@pytest.mark.parametrize("name", sorted(laws.LAWS))
def test_law_holds(name):
    result = laws.run_law(name, seed=0, samples=60)
    assert result.passed, result.counterexample


def test_results_are_reproducible():
    a = laws.run_law("containment", seed=3, samples=30).to_json()
    b = laws.run_law("containment", seed=3, samples=30).to_json()
    assert a == b
    assert "seconds" not in a


def test_failures_are_reported(monkeypatch):
    monkeypatch.setitem(laws.LAWS, "broken", ("content", lambda rng, n: "counterexample"))
    result = laws.run_law("broken")
    assert not result.passed
    assert result.to_json()["counterexample"] == "counterexample"

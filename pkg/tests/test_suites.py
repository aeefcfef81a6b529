import pytest

from tposc import suites


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        suites.run_suite("nope")


def test_coxeter_suite_passes():
    result = suites.run_suite("coxeter")
    assert result.passed
    assert result.checks == 2 * len(suites.COXETER_TYPES)
    assert result.failures == []


def test_dodgson_suite_small():
    result = suites.run_suite("dodgson", seed=5, trials=3)
    assert result.passed
    assert result.checks > 0


def test_gp_suite_small():
    result = suites.run_suite("gp", seed=5, trials=8)
    assert result.passed
    assert result.checks == 3 * 3 * 8


def test_gk_suite_small():
    result = suites.run_suite("gk", seed=5, trials=4)
    assert result.passed


def test_lemma_c_suite_sampled():
    result = suites.run_suite("lemma-c", seed=5, trials=12)
    assert result.passed
    assert result.checks > 0


def test_lemma_c_suite_exhaustive():
    # the default (trials=0) sweeps every (u, v) pair of SL(3) and SL(4)
    result = suites.run_suite("lemma-c", seed=5, jobs=2)
    assert result.passed
    assert result.trials == 0
    assert result.checks > 36 * 24 * 24  # more checks than SL(4) pairs alone


def test_parallel_matches_serial():
    serial = suites.run_suite("gp", seed=11, trials=4, jobs=1)
    parallel = suites.run_suite("gp", seed=11, trials=4, jobs=3)
    assert serial.to_json_dict() == parallel.to_json_dict()


def test_failure_reproducer_shape(monkeypatch):
    # force a failure to confirm the reproducer carries seed/trial/inputs
    import tposc.suites as s

    def broken(x, u, v, i):
        return False

    monkeypatch.setattr(s, "dodgson_identity_holds", broken)
    result = s.run_suite("dodgson", seed=3, trials=1)
    assert not result.passed
    failure = result.failures[0]
    assert failure["seed"] == 3
    assert "trial" in failure and "factorization" in failure and "i" in failure


def test_json_shape():
    result = suites.run_suite("coxeter")
    data = result.to_json_dict()
    assert set(data) == {"suite", "seed", "trials", "passed", "checks", "failures"}

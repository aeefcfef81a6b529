"""Seeded verification suites behind the `verify` command.

Each suite runs an exact property check over seeded trials and reports a
minimal reproducer (seed, trial index, generating inputs) for every
failure.  Trials are independently seeded, so the work partitions over a
process pool with a merge in task order; serial and parallel runs produce
identical results.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from . import hecke, sampling, weyl
from .cartan import cartan_data_from_string
from .tpmatrix import (
    GenMinorSpec,
    bruhat_label,
    corner_minors_positive,
    default_indicators,
    dodgson_identity_holds,
    eval_factorization,
    find_minor_violation,
    generalized_minor,
    is_oscillatory,
    is_totally_positive,
    min_totally_positive_power,
    oscillatory_by_indicators,
    type_a_data,
)
from .weyl import WeylElement

__all__ = ["SuiteResult", "SUITE_NAMES", "DEFAULT_TRIALS", "run_suite"]

SUITE_NAMES = ("dodgson", "gk", "gp", "coxeter", "lemma-c")

DEFAULT_TRIALS = {
    "dodgson": 100,
    "gk": 100,
    "gp": 200,
    "coxeter": 1,
    "lemma-c": 0,  # 0 = exhaustive over the small-rank cell pairs
}

COXETER_TYPES = (
    [f"A{r}" for r in range(1, 9)]
    + [f"B{r}" for r in range(2, 9)]
    + [f"C{r}" for r in range(3, 9)]
    + [f"D{r}" for r in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


@dataclass
class SuiteResult:
    suite: str
    seed: int
    trials: int
    passed: bool
    checks: int
    failures: list[dict] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "trials": self.trials,
            "passed": self.passed,
            "checks": self.checks,
            "failures": self.failures,
        }


def _parallel_map(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    workers = min(jobs, len(tasks))
    chunk = max(1, len(tasks) // (4 * workers))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, tasks, chunksize=chunk))


def _merge(suite: str, seed: int, trials: int, results: list) -> SuiteResult:
    checks = sum(r[0] for r in results)
    failures: list[dict] = []
    for r in results:
        failures.extend(r[1])
    return SuiteResult(suite, seed, trials, not failures, checks, failures)


# ---------------------------------------------------------------------------
# dodgson: the two-term minor identity on seeded SL(n) cell matrices


@lru_cache(maxsize=None)
def _dodgson_cases(n: int) -> tuple[tuple[WeylElement, WeylElement, int], ...]:
    c = type_a_data(n)
    by_length = weyl.elements_up_to_length(c, 4)
    cases = []
    for lu, us in sorted(by_length.items()):
        for lv, vs in sorted(by_length.items()):
            if lu + lv > 4:
                continue
            for u in us:
                for v in vs:
                    for i in range(1, c.rank + 1):
                        si = weyl.simple_reflection(c, i)
                        if (u * si).length() == lu + 1 and (v * si).length() == lv + 1:
                            cases.append((u, v, i))
    return tuple(cases)


def _dodgson_trial(task: tuple[int, int, int]) -> tuple[int, list[dict]]:
    seed, n, trial = task
    rng = sampling.trial_rng(seed, "dodgson", n, trial)
    fac = sampling.random_factorization(rng, n)
    x = eval_factorization(fac)
    checks = 0
    failures: list[dict] = []
    for u, v, i in _dodgson_cases(n):
        checks += 1
        if not dodgson_identity_holds(x, u, v, i):
            failures.append(
                {
                    "seed": seed,
                    "n": n,
                    "trial": trial,
                    "u_prime": list(u.reduced_word()),
                    "v_prime": list(v.reduced_word()),
                    "i": i,
                    "factorization": fac.to_json_dict(),
                }
            )
    return checks, failures


def _run_dodgson(seed: int, trials: int, jobs: int) -> SuiteResult:
    tasks = [(seed, n, t) for n in (2, 3, 4, 5) for t in range(trials)]
    return _merge("dodgson", seed, trials, _parallel_map(_dodgson_trial, tasks, jobs))


# ---------------------------------------------------------------------------
# gp: total nonnegativity of factorizations; corner criterion; big-cell test


def _gp_trial(task: tuple[int, int, int]) -> tuple[int, list[dict]]:
    seed, n, trial = task
    rng = sampling.trial_rng(seed, "gp", n, trial)
    fac = sampling.random_factorization(rng, n)
    x = eval_factorization(fac)
    failures: list[dict] = []

    def fail(reason: str) -> None:
        failures.append(
            {
                "seed": seed,
                "n": n,
                "trial": trial,
                "reason": reason,
                "factorization": fac.to_json_dict(),
            }
        )

    violation = find_minor_violation(x, strict=False)
    if violation is not None:
        fail(f"negative minor at rows={violation.rows} cols={violation.cols}")
    tp = is_totally_positive(x)
    if tp != corner_minors_positive(x):
        fail("corner-minor criterion disagrees with total positivity")
    c = type_a_data(n)
    w0 = weyl.longest_element(c)
    label = bruhat_label(x)
    if tp != (label.u == w0 and label.v == w0):
        fail("big-cell membership disagrees with total positivity")
    return 3, failures


def _run_gp(seed: int, trials: int, jobs: int) -> SuiteResult:
    tasks = [(seed, n, t) for n in (3, 4, 5) for t in range(trials)]
    return _merge("gp", seed, trials, _parallel_map(_gp_trial, tasks, jobs))


# ---------------------------------------------------------------------------
# gk: oscillation criteria and the exact minimal totally positive power


def _gk_full_trial(task: tuple[int, int, int]) -> tuple[int, list[dict]]:
    seed, n, trial = task
    rng = sampling.trial_rng(seed, "gk-full", n, trial)
    c = type_a_data(n)
    u, v = sampling.random_full_support_pair(rng, c)
    fac = sampling.cell_factorization(rng, u, v)
    x = eval_factorization(fac)
    failures: list[dict] = []

    def fail(reason: str) -> None:
        failures.append(
            {
                "seed": seed,
                "n": n,
                "trial": trial,
                "reason": reason,
                "u": list(u.reduced_word()),
                "v": list(v.reduced_word()),
                "factorization": fac.to_json_dict(),
            }
        )

    if not is_oscillatory(x):
        fail("full-support cell element is not oscillatory")
    if not oscillatory_by_indicators(x, default_indicators(c)):
        fail("indicator family disagrees on a full-support cell element")
    brute = min_totally_positive_power(x, cap=n - 1)
    if brute is None:
        fail(f"no totally positive power up to {n - 1}")
    else:
        predicted = hecke.min_tp_exponent(u, v)
        if brute != predicted:
            fail(f"minimal power {brute} differs from the predicted {predicted}")
    return 3, failures


def _gk_incomplete_trial(task: tuple[int, int, int]) -> tuple[int, list[dict]]:
    seed, n, trial = task
    rng = sampling.trial_rng(seed, "gk-inc", n, trial)
    c = type_a_data(n)
    u, v = sampling.random_incomplete_support_pair(rng, c)
    fac = sampling.cell_factorization(rng, u, v)
    x = eval_factorization(fac)
    failures: list[dict] = []
    if is_oscillatory(x):
        failures.append(
            {
                "seed": seed,
                "n": n,
                "trial": trial,
                "reason": "incomplete-support cell element looks oscillatory",
                "factorization": fac.to_json_dict(),
            }
        )
    if min_totally_positive_power(x, cap=2 * n) is not None:
        failures.append(
            {
                "seed": seed,
                "n": n,
                "trial": trial,
                "reason": f"a power up to {2 * n} is totally positive",
                "factorization": fac.to_json_dict(),
            }
        )
    return 2, failures


def _run_gk(seed: int, trials: int, jobs: int) -> SuiteResult:
    full = [(seed, n, t) for n in (4, 5) for t in range(trials)]
    incomplete = [(seed, n, t) for n in (4, 5) for t in range(trials // 2)]
    results = _parallel_map(_gk_full_trial, full, jobs)
    results += _parallel_map(_gk_incomplete_trial, incomplete, jobs)
    return _merge("gk", seed, trials, results)


# ---------------------------------------------------------------------------
# coxeter: length/order facts for Coxeter elements, all simple types rank <= 8


def _coxeter_case(type_name: str) -> tuple[int, list[dict]]:
    c = cartan_data_from_string(type_name)
    failures: list[dict] = []
    h = weyl.coxeter_number(c)
    w0 = weyl.longest_element(c)
    if 2 * w0.length() != h * c.rank:
        failures.append(
            {"type": type_name, "reason": f"2*l(w0)={2 * w0.length()} != h*r={h * c.rank}"}
        )
    if weyl.longest_is_minus_identity(c):
        if h % 2 != 0:
            failures.append({"type": type_name, "reason": "w0=-1 but h is odd"})
        else:
            cox = weyl.from_word(c, tuple(range(1, c.rank + 1)))
            power = weyl.identity(c)
            for _ in range(h // 2):
                power = power * cox
            if power != w0:
                failures.append(
                    {"type": type_name, "reason": "coxeter^(h/2) != w0 despite w0=-1"}
                )
    return 2, failures


def _run_coxeter(seed: int, trials: int, jobs: int) -> SuiteResult:
    results = _parallel_map(_coxeter_case, list(COXETER_TYPES), jobs)
    return _merge("coxeter", seed, trials, results)


# ---------------------------------------------------------------------------
# lemma-c: positivity of all weak-order-prefix generalized minors on a cell


@lru_cache(maxsize=None)
def _all_elements(n: int) -> tuple[WeylElement, ...]:
    c = type_a_data(n)
    by_length = weyl.elements_up_to_length(c, weyl.longest_length(c))
    return tuple(w for _, ws in sorted(by_length.items()) for w in ws)


def _weak_downset(w: WeylElement) -> list[WeylElement]:
    n = w.cartan.rank + 1
    return [x for x in _all_elements(n) if weyl.weak_leq(x, w)]


def _lemma_c_pair(task: tuple[int, int, int, int]) -> tuple[int, list[dict]]:
    seed, n, ui, vi = task
    elements = _all_elements(n)
    u, v = elements[ui], elements[vi]
    rng = sampling.trial_rng(seed, "lemma-c", n, ui, vi)
    fac = sampling.cell_factorization(rng, u, v)
    x = eval_factorization(fac)
    checks = 0
    failures: list[dict] = []
    v_inv = v.inverse()
    for u_prime in _weak_downset(u):
        for v_prime in _weak_downset(v_inv):
            for i in range(1, n):
                checks += 1
                if generalized_minor(x, GenMinorSpec(u_prime, v_prime, i)) <= 0:
                    failures.append(
                        {
                            "seed": seed,
                            "n": n,
                            "u": list(u.reduced_word()),
                            "v": list(v.reduced_word()),
                            "u_prime": list(u_prime.reduced_word()),
                            "v_prime": list(v_prime.reduced_word()),
                            "i": i,
                            "factorization": fac.to_json_dict(),
                        }
                    )
    return checks, failures


def _run_lemma_c(seed: int, trials: int, jobs: int) -> SuiteResult:
    tasks: list[tuple[int, int, int, int]] = []
    for n in (3, 4):
        count = len(_all_elements(n))
        pairs = [(ui, vi) for ui in range(count) for vi in range(count)]
        if trials:
            rng = sampling.trial_rng(seed, "lemma-c-pairs", n)
            pairs = rng.sample(pairs, min(trials, len(pairs)))
        tasks.extend((seed, n, ui, vi) for ui, vi in pairs)
    return _merge("lemma-c", seed, trials, _parallel_map(_lemma_c_pair, tasks, jobs))


# ---------------------------------------------------------------------------


_RUNNERS = {
    "dodgson": _run_dodgson,
    "gk": _run_gk,
    "gp": _run_gp,
    "coxeter": _run_coxeter,
    "lemma-c": _run_lemma_c,
}


def run_suite(
    name: str, seed: int = 0, trials: int | None = None, jobs: int = 1
) -> SuiteResult:
    """Run a named verification suite; unknown names raise ValueError."""
    runner = _RUNNERS.get(name)
    if runner is None:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
    if trials is None:
        trials = DEFAULT_TRIALS[name]
    if trials < 0:
        raise ValueError("trials must be >= 0")
    return runner(seed, trials, max(1, jobs))

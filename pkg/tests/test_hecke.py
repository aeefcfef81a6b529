import random

import pytest

from tposc import hecke, weyl
from tposc.cartan import cartan_data_from_string

from _oracles import GroupTable, brute_contains_w0_subword, dp_contains_w0_subword


def W(name):
    return cartan_data_from_string(name)


def test_demazure_step_examples():
    c = W("A2")
    e = hecke.HeckeElement(weyl.identity(c))
    s1 = hecke.demazure_step(e, 1)
    assert s1.rep == weyl.simple_reflection(c, 1)
    # idempotence
    assert hecke.demazure_step(s1, 1) == s1
    s1s2 = hecke.demazure_step(s1, 2)
    assert hecke.demazure_step(s1s2, 1).rep == weyl.longest_element(c)


def test_demazure_word_examples():
    c = W("A2")
    w0 = weyl.longest_element(c)
    assert hecke.demazure_word(c, (1, 2, 1)).rep == w0
    assert hecke.demazure_word(c, (1, 2, 1, 2)).rep == w0
    assert hecke.demazure_word(c, (1, 1, 1)).rep == weyl.simple_reflection(c, 1)


@pytest.mark.parametrize("name", ["A3", "B3", "G2"])
def test_braid_invariance_on_reduced_words(name):
    c = W(name)
    rng = random.Random(17)
    for _ in range(10):
        word = tuple(rng.randint(1, c.rank) for _ in range(rng.randint(0, 8)))
        w = weyl.from_word(c, word)
        folds = {hecke.demazure_word(c, rw).rep.mat for rw in weyl.all_reduced_words(w)}
        assert len(folds) == 1
        assert folds.pop() == w.mat


def test_fold_length_monotone():
    c = W("B3")
    rng = random.Random(29)
    for _ in range(10):
        word = tuple(rng.randint(1, 3) for _ in range(12))
        prev = 0
        h = hecke.HeckeElement(weyl.identity(c))
        for letter in word:
            h = hecke.demazure_step(h, letter)
            cur = h.rep.length()
            assert cur in (prev, prev + 1)
            prev = cur


def test_contains_w0_subword_examples():
    a2 = W("A2")
    assert hecke.contains_w0_subword(a2, (1, 2, 1, 2))
    assert not hecke.contains_w0_subword(a2, (1, 2))
    a1 = W("A1")
    assert hecke.contains_w0_subword(a1, (1,))


def test_extract_w0_subword_examples():
    a2 = W("A2")
    assert hecke.extract_w0_subword(a2, (1, 2, 1, 2)) == (1, 2, 3)
    assert hecke.extract_w0_subword(a2, (1, 1, 2, 1)) == (1, 3, 4)
    assert hecke.extract_w0_subword(a2, (1, 2)) is None


@pytest.mark.parametrize("name", ["A2", "B2", "A3"])
def test_extract_positions_form_reduced_w0_word(name):
    c = W(name)
    w0 = weyl.longest_element(c)
    rng = random.Random(31)
    found = 0
    for _ in range(40):
        word = tuple(rng.randint(1, c.rank) for _ in range(rng.randint(0, 12)))
        positions = hecke.extract_w0_subword(c, word)
        assert (positions is not None) == hecke.contains_w0_subword(c, word)
        if positions is None:
            continue
        found += 1
        assert len(positions) == w0.length()
        sub = tuple(word[p - 1] for p in positions)
        assert weyl.is_reduced(c, sub)
        assert weyl.from_word(c, sub) == w0
    assert found > 0


@pytest.mark.parametrize("name", ["A2", "B2"])
def test_subword_test_agrees_with_bruteforce_sample(name):
    c = W(name)
    table = GroupTable(c)
    rng = random.Random(41)
    for _ in range(60):
        word = tuple(rng.randint(1, c.rank) for _ in range(rng.randint(0, 9)))
        got = hecke.contains_w0_subword(c, word)
        assert got == brute_contains_w0_subword(c, word)
        assert got == dp_contains_w0_subword(table, word)


def test_hecke_power_examples():
    c = W("A2")
    w0 = weyl.longest_element(c)
    s1 = weyl.simple_reflection(c, 1)
    s1s2 = weyl.from_word(c, (1, 2))
    for m in (1, 2, 5):
        assert hecke.hecke_power(w0, m).rep == w0
        assert hecke.hecke_power(s1, m).rep == s1
    assert hecke.hecke_power(s1s2, 2).rep == w0


def test_hecke_power_independent_of_reduced_word():
    c = W("A3")
    rng = random.Random(53)
    for _ in range(8):
        word = tuple(rng.randint(1, 3) for _ in range(rng.randint(1, 6)))
        w = weyl.from_word(c, word)
        m = rng.randint(1, 4)
        baseline = hecke.hecke_power(w, m).rep
        for rw in weyl.all_reduced_words(w):
            assert hecke.demazure_word(c, rw * m).rep == baseline


def test_min_power_examples():
    c = W("A2")
    w0 = weyl.longest_element(c)
    assert hecke.min_power_to_w0(w0) == 1
    assert hecke.min_power_to_w0(weyl.simple_reflection(c, 1)) is None
    assert hecke.min_power_to_w0(weyl.from_word(c, (1, 2))) == 2


def test_min_tp_exponent():
    c = W("A2")
    w0 = weyl.longest_element(c)
    s1s2 = weyl.from_word(c, (1, 2))
    s2s1 = weyl.from_word(c, (2, 1))
    assert hecke.min_tp_exponent(w0, w0) == 1
    assert hecke.min_tp_exponent(s1s2, s2s1) == 2
    assert hecke.min_tp_exponent(weyl.simple_reflection(c, 1), w0) is None


def test_demazure_product_matches_fold():
    c = W("B3")
    rng = random.Random(67)
    for _ in range(10):
        w1 = weyl.from_word(c, tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 6))))
        w2 = weyl.from_word(c, tuple(rng.randint(1, 3) for _ in range(rng.randint(0, 6))))
        prod = hecke.demazure_product(w1, w2)
        fold = hecke.demazure_word(c, w1.reduced_word() + w2.reduced_word())
        assert prod == fold.rep


@pytest.mark.parametrize(
    "name,expected",
    [("A1", 1), ("A2", 2), ("A3", 3), ("A4", 4), ("B2", 2), ("B3", 3),
     ("C3", 3), ("D4", 3), ("D5", 5), ("G2", 3), ("F4", 6)],
)
def test_oscillatory_exponent_small_types(name, expected):
    report = hecke.oscillatory_exponent(W(name), want_witness=True)
    assert report.exponent == expected
    assert report.witness is not None
    assert hecke.min_copies_to_w0(W(name), report.witness) == expected


def test_batch_engine_matches_scalar_fold():
    import itertools

    for name in ("A3", "B3", "D4"):
        c = W(name)
        report = hecke.oscillatory_exponent(c, per_permutation=True)
        per = dict(report.per_permutation)
        assert len(per) == report.permutations_checked
        for perm in itertools.permutations(range(1, c.rank + 1)):
            assert per[perm] == hecke.min_copies_to_w0(c, perm)
        assert report.exponent == max(per.values())

    # spot-check a sample of E6 permutations against the scalar fold
    c = W("E6")
    rng = random.Random(71)
    perms = [tuple(rng.sample(range(1, 7), 6)) for _ in range(12)]
    report = hecke.oscillatory_exponent(c, per_permutation=True)
    per = dict(report.per_permutation)
    for p in perms:
        assert per[p] == hecke.min_copies_to_w0(c, p)
    assert report.exponent == 8


def test_type_a_permutation_bounds():
    # in A_r every generator permutation reaches w0 within r copies, the
    # maximum r is attained, and the ascending permutation needs exactly r
    # (its (r-1)-fold repeat contains no reduced word for w0)
    import itertools

    for r in (2, 3, 4, 5):
        c = W(f"A{r}")
        counts = [
            hecke.min_copies_to_w0(c, perm)
            for perm in itertools.permutations(range(1, r + 1))
        ]
        assert all(k <= r for k in counts)
        assert max(counts) == r
        ascending = tuple(range(1, r + 1))
        assert hecke.min_copies_to_w0(c, ascending) == r
        assert not hecke.contains_w0_subword(c, ascending * (r - 1))
        assert hecke.contains_w0_subword(c, ascending * r)


@pytest.mark.parametrize("name", ["A3", "B3", "E6"])
def test_cyclic_shift_bound(name):
    # if k copies of a Coxeter word reach w0, any cyclic shift does in k+1;
    # exhaustive over all generator orderings (= all reduced words of all
    # Coxeter elements)
    import itertools

    c = W(name)
    report = hecke.oscillatory_exponent(c, per_permutation=True)
    copies = dict(report.per_permutation)
    for word in itertools.permutations(range(1, c.rank + 1)):
        k = copies[word]
        for shift in range(1, c.rank):
            rotated = word[shift:] + word[:shift]
            assert copies[rotated] <= k + 1


def test_d_type_parity():
    assert hecke.oscillatory_exponent(W("D4")).exponent == 3
    assert hecke.oscillatory_exponent(W("D5")).exponent == 5
    assert hecke.oscillatory_exponent(W("D6")).exponent == 5


def test_jobs_width_does_not_change_report():
    # E7 is the smallest type whose scan actually fans out over a pool
    c = W("E7")
    serial = hecke.oscillatory_exponent(c, want_witness=True, per_permutation=True, jobs=1)
    parallel = hecke.oscillatory_exponent(c, want_witness=True, per_permutation=True, jobs=3)
    assert serial.exponent == parallel.exponent == 9
    assert serial.witness == parallel.witness
    assert serial.per_permutation == parallel.per_permutation
    assert serial.permutations_checked == parallel.permutations_checked == 5040


def test_report_json_shape():
    report = hecke.oscillatory_exponent(W("G2"), want_witness=True)
    data = report.to_json_dict()
    assert data["type"] == "G2"
    assert data["m"] == 3
    assert data["permutations_checked"] == 2
    assert isinstance(data["elapsed_ms"], int)
    assert data["witness"] in ([1, 2], [2, 1])

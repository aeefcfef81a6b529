"""Demazure (0-Hecke) products, the longest-element subword test, and the
universal oscillatory exponent.

The exponent scan folds every permutation of the generators through the
Demazure product until the longest element absorbs it.  A vectorized
integer engine handles the permutation sweep (the state matrices and all
intermediate values are tiny, far inside int64 range); the scalar fold in
this module is the exact reference path and the two are cross-checked in
the tests.
"""
from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import weyl
from .cartan import CartanData
from .weyl import WeylElement, Word

__all__ = [
    "HeckeElement",
    "demazure_step",
    "demazure_word",
    "demazure_product",
    "hecke_power",
    "contains_w0_subword",
    "extract_w0_subword",
    "min_copies_to_w0",
    "min_power_to_w0",
    "min_tp_exponent",
    "ExponentReport",
    "oscillatory_exponent",
]


@dataclass(frozen=True)
class HeckeElement:
    """An element T_w of the 0-Hecke monoid, indexed by its Weyl representative."""

    rep: WeylElement

    def times_gen(self, i: int) -> HeckeElement:
        return demazure_step(self, i)

    def times(self, other: HeckeElement) -> HeckeElement:
        return HeckeElement(demazure_product(self.rep, other.rep))


def demazure_step(h: HeckeElement, i: int) -> HeckeElement:
    """Multiply by the generator T_i: append s_i unless i is already a descent."""
    if h.rep.is_right_descent(i):
        return h
    return HeckeElement(h.rep * weyl.simple_reflection(h.rep.cartan, i))


def demazure_word(c: CartanData, word: Word) -> HeckeElement:
    h = HeckeElement(weyl.identity(c))
    for letter in word:
        h = demazure_step(h, letter)
    return h


def demazure_product(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """Demazure product of two Weyl elements (fold a reduced word of w2 into w1)."""
    w = w1
    for letter in w2.reduced_word():
        if not w.is_right_descent(letter):
            w = w * weyl.simple_reflection(w1.cartan, letter)
    return w


def hecke_power(w: WeylElement, m: int) -> HeckeElement:
    """T_w^m, folded over m copies of the canonical reduced word of w."""
    if m < 1:
        raise ValueError("power must be >= 1")
    word = w.reduced_word()
    return demazure_word(w.cartan, word * m)


def _fold_until_longest(c: CartanData, word: Word) -> tuple[WeylElement, int, list[int]]:
    """Fold a word, returning (state, 1-based stop position or 0, up-positions).

    Stops as soon as the state reaches the longest element (the fold length
    equals the positive-root count exactly then).
    """
    target = weyl.longest_length(c)
    w = weyl.identity(c)
    ups: list[int] = []
    for pos, letter in enumerate(word, start=1):
        if not w.is_right_descent(letter):
            w = w * weyl.simple_reflection(c, letter)
            ups.append(pos)
            if len(ups) == target:
                return w, pos, ups
    return w, 0, ups


def contains_w0_subword(c: CartanData, word: Word) -> bool:
    """True iff the word contains a reduced word for the longest element as a
    subword, i.e. the Demazure fold of the word reaches the longest element."""
    _, stop, _ = _fold_until_longest(c, word)
    return stop > 0


def extract_w0_subword(c: CartanData, word: Word) -> Word | None:
    """1-based positions whose letters form a reduced word for the longest
    element, when the Demazure fold reaches it; None otherwise.

    The positions are exactly the fold steps that increased the length.
    """
    _, stop, ups = _fold_until_longest(c, word)
    if stop == 0:
        return None
    return tuple(ups)


def min_copies_to_w0(c: CartanData, word: Word) -> int | None:
    """Smallest k with the Demazure fold of k copies of ``word`` reaching the
    longest element; None when the word's letters miss some generator."""
    if frozenset(word) != frozenset(range(1, c.rank + 1)):
        return None
    target = weyl.longest_length(c)
    w = weyl.identity(c)
    length = 0
    for k in range(1, target + 1):
        for letter in word:
            if not w.is_right_descent(letter):
                w = w * weyl.simple_reflection(c, letter)
                length += 1
        if length == target:
            return k
    raise RuntimeError("Demazure fold exceeded the longest-element bound")


def min_power_to_w0(w: WeylElement) -> int | None:
    """Smallest m with T_w^m equal to T of the longest element; None iff the
    support of w is not the full generator set."""
    c = w.cartan
    if w.support() != frozenset(range(1, c.rank + 1)):
        return None
    return min_copies_to_w0(c, w.reduced_word())


def min_tp_exponent(u: WeylElement, v: WeylElement) -> int | None:
    """Exact minimal m such that the m-th power of any element of the positive
    part of the double cell labelled (u, v) is totally positive."""
    if u.cartan != v.cartan:
        raise ValueError("elements over different Cartan data")
    mu = min_power_to_w0(u)
    mv = min_power_to_w0(v)
    if mu is None or mv is None:
        return None
    return max(mu, mv)


@dataclass
class ExponentReport:
    """Result of the full permutation scan for one simple type."""

    type_name: str
    exponent: int
    witness: Word | None
    per_permutation: list[tuple[Word, int]] | None
    permutations_checked: int
    elapsed_ms: int

    def to_json_dict(self) -> dict:
        out: dict = {
            "type": self.type_name,
            "m": self.exponent,
            "witness": list(self.witness) if self.witness is not None else None,
            "permutations_checked": self.permutations_checked,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.per_permutation is not None:
            out["per_permutation_min"] = [
                {"i": list(p), "m": k} for p, k in self.per_permutation
            ]
        return out


def _reflection_mats(c: CartanData) -> np.ndarray:
    r = c.rank
    refl = np.empty((r, r, r), dtype=np.int64)
    for i in range(1, r + 1):
        refl[i - 1] = np.array(
            weyl.simple_reflection(c, i).mat, dtype=np.int64
        )
    return refl


def _min_copies_batch(c: CartanData, perms: np.ndarray) -> np.ndarray:
    """Vectorized per-permutation minimal copy counts.

    ``perms`` is a (P, r) array of 1-based letters.  Every permutation has
    full support, so each appended copy strictly increases the fold length
    until the longest element is reached; the copy count is bounded by the
    number of positive roots and exceeding the bound is an internal error.
    Finished rows are compacted away after every copy.
    """
    r = c.rank
    target = weyl.longest_length(c)
    refl = _reflection_mats(c)
    total = perms.shape[0]
    letters = perms.astype(np.int64) - 1
    states = np.broadcast_to(np.eye(r, dtype=np.int64), (total, r, r)).copy()
    lengths = np.zeros(total, dtype=np.int64)
    copies = np.zeros(total, dtype=np.int64)
    origin = np.arange(total)
    for k in range(1, target + 1):
        for pos in range(r):
            col = letters[:, pos]
            # per-row image of the row's own simple root
            images = np.take_along_axis(
                states, col[:, None, None].repeat(r, axis=1), axis=2
            )[:, :, 0]
            ascent = (images > 0).any(axis=1)
            for i in range(r):
                upd = ascent & (col == i)
                if not upd.any():
                    continue
                states[upd] = states[upd] @ refl[i]
            lengths[ascent] += 1
        done = lengths == target
        if done.any():
            copies[origin[done]] = k
            keep = ~done
            states = states[keep]
            letters = letters[keep]
            lengths = lengths[keep]
            origin = origin[keep]
            if states.shape[0] == 0:
                return copies
    raise RuntimeError("Demazure fold exceeded the longest-element bound")


def _scan_permutation_range(
    c: CartanData, start: int, stop: int, want_per: bool
) -> tuple[int, Word, list[tuple[Word, int]] | None, int]:
    perms = list(
        itertools.islice(itertools.permutations(range(1, c.rank + 1)), start, stop)
    )
    copies = _min_copies_batch(c, np.array(perms, dtype=np.int64))
    best = int(copies.max())
    witness = perms[int(np.argmax(copies))]
    per = [(p, int(k)) for p, k in zip(perms, copies)] if want_per else None
    return best, witness, per, len(perms)


def oscillatory_exponent(
    c: CartanData,
    want_witness: bool = False,
    per_permutation: bool = False,
    jobs: int = 1,
) -> ExponentReport:
    """Smallest m such that every generator permutation, repeated m times,
    contains a reduced word for the longest element as a subword.

    Scans all r! permutations in lexicographic order.  The scan partitions
    over contiguous permutation ranges with a deterministic merge (max,
    then first witness in lexicographic order), so any ``jobs`` width gives
    an identical report.
    """
    t0 = time.monotonic()
    r = c.rank
    total = 1
    for k in range(2, r + 1):
        total *= k
    # pool spin-up dominates below E7 scale
    if total < 5040:
        jobs = 1
    jobs = max(1, min(jobs, total))
    bounds = [(total * j) // jobs for j in range(jobs + 1)]
    ranges = [
        (bounds[j], bounds[j + 1])
        for j in range(jobs)
        if bounds[j] < bounds[j + 1]
    ]
    if len(ranges) <= 1:
        results = [
            _scan_permutation_range(c, lo, hi, per_permutation) for lo, hi in ranges
        ]
    else:
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            futures = [
                pool.submit(_scan_permutation_range, c, lo, hi, per_permutation)
                for lo, hi in ranges
            ]
            results = [f.result() for f in futures]
    exponent = max(res[0] for res in results)
    witness = next(res[1] for res in results if res[0] == exponent)
    per: list[tuple[Word, int]] | None = None
    if per_permutation:
        per = []
        for res in results:
            per.extend(res[2] or [])
    checked = sum(res[3] for res in results)
    elapsed_ms = int((time.monotonic() - t0) * 1000)
    return ExponentReport(
        type_name=str(c.dynkin),
        exponent=exponent,
        witness=witness if want_witness else None,
        per_permutation=per,
        permutations_checked=checked,
        elapsed_ms=elapsed_ms,
    )

"""Seeded random generators for factorizations and positive cell elements.

Every generator takes an explicit ``random.Random`` so that trials are
reproducible and independently seedable (the suites derive one RNG per
trial, which is what makes their parallel partitioning deterministic).
Matrices are produced through factorizations with positive parameters, so
membership in a known cell is guaranteed by construction.
"""
from __future__ import annotations

import random
from fractions import Fraction

from . import weyl
from .cartan import CartanData
from .tpmatrix import (
    FactorizationInput,
    RationalMatrix,
    element_from_permutation,
    eval_factorization,
)
from .weyl import WeylElement

__all__ = [
    "trial_rng",
    "random_fraction",
    "random_torus_diag",
    "random_factorization",
    "random_permutation_element",
    "random_full_support_pair",
    "random_incomplete_support_pair",
    "cell_factorization",
    "random_cell_element",
]

PARAM_BOUND = 16


def trial_rng(seed: int, *salts: object) -> random.Random:
    """A deterministic RNG derived from a seed and arbitrary salt values."""
    return random.Random(f"{seed}|" + "|".join(str(s) for s in salts))


def random_fraction(rng: random.Random, bound: int = PARAM_BOUND) -> Fraction:
    """Positive rational with numerator and denominator in 1..bound."""
    return Fraction(rng.randint(1, bound), rng.randint(1, bound))


def random_torus_diag(rng: random.Random, n: int) -> tuple[Fraction, ...]:
    """Positive diagonal with product 1 (a product of one-parameter torus factors)."""
    ts = [random_fraction(rng) for _ in range(n - 1)]
    diag = []
    prev = Fraction(1)
    for i in range(n):
        cur = ts[i] if i < n - 1 else Fraction(1)
        diag.append(cur / prev)
        prev = cur
    return tuple(diag)


def random_factorization(
    rng: random.Random, n: int, max_len: int = 12
) -> FactorizationInput:
    """Random signed word with positive parameters and a positive torus part."""
    length = rng.randint(0, max_len)
    letters = []
    for _ in range(length):
        i = rng.randint(1, n - 1)
        letters.append(i if rng.random() < 0.5 else -i)
    params = tuple(random_fraction(rng) for _ in range(length))
    return FactorizationInput(n, random_torus_diag(rng, n), tuple(letters), params)


def random_permutation_element(rng: random.Random, c: CartanData) -> WeylElement:
    n = c.rank + 1
    p = list(range(1, n + 1))
    rng.shuffle(p)
    return element_from_permutation(c, tuple(p))


def random_full_support_pair(
    rng: random.Random, c: CartanData
) -> tuple[WeylElement, WeylElement]:
    """A pair (u, v) of elements whose reduced words use every generator."""
    full = frozenset(range(1, c.rank + 1))

    def one() -> WeylElement:
        while True:
            w = random_permutation_element(rng, c)
            if w.support() == full:
                return w

    return one(), one()


def random_incomplete_support_pair(
    rng: random.Random, c: CartanData
) -> tuple[WeylElement, WeylElement]:
    """A pair (u, v) where at least one side misses a generator."""
    r = c.rank
    missing = rng.randint(1, r)
    allowed = [i for i in range(1, r + 1) if i != missing]

    def restricted() -> WeylElement:
        word = tuple(rng.choice(allowed) for _ in range(rng.randint(0, 2 * r)))
        return weyl.from_word(c, word)

    deficient_side = rng.randint(0, 1)
    u = restricted() if deficient_side == 0 else random_permutation_element(rng, c)
    v = restricted() if deficient_side == 1 else random_permutation_element(rng, c)
    return u, v


def cell_factorization(
    rng: random.Random, u: WeylElement, v: WeylElement
) -> FactorizationInput:
    """A factorization over a double reduced word of (u, v): the barred
    reduced word of u followed by the unbarred reduced word of v, with a
    seeded torus part and positive parameters."""
    n = u.cartan.rank + 1
    word = tuple(-i for i in u.reduced_word()) + v.reduced_word()
    params = tuple(random_fraction(rng) for _ in range(len(word)))
    return FactorizationInput(n, random_torus_diag(rng, n), word, params)


def random_cell_element(
    rng: random.Random, u: WeylElement, v: WeylElement
) -> RationalMatrix:
    """An exact-rational element of the positive part of the (u, v) cell."""
    return eval_factorization(cell_factorization(rng, u, v))

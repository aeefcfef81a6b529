"""Weyl group arithmetic in the integer reflection representation.

Elements are r x r integer matrices acting on root coordinates (column j
is the image of the j-th simple root), so equality of group elements is
matrix equality and everything works uniformly for all simple types.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanData, positive_roots

__all__ = [
    "Word",
    "SignedWord",
    "WeylElement",
    "identity",
    "simple_reflection",
    "from_word",
    "is_reduced",
    "longest_element",
    "longest_length",
    "weak_leq",
    "coxeter_number",
    "longest_is_minus_identity",
    "all_reduced_words",
    "double_reduced_words",
    "elements_up_to_length",
    "DOUBLE_WORD_GUARD",
]

# letters are 1-based generator indices; a negative letter -i in a signed
# word is the barred letter for the first Coxeter factor
Word = tuple[int, ...]
SignedWord = tuple[int, ...]

Matrix = tuple[tuple[int, ...], ...]

DOUBLE_WORD_GUARD = 12


def _identity_matrix(r: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(r)) for i in range(r))


def _matmul(x: Matrix, y: Matrix) -> Matrix:
    cols = tuple(zip(*y))
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in x
    )


@dataclass(frozen=True)
class WeylElement:
    """A Weyl group element as its action on root-lattice coordinates."""

    cartan: CartanData
    mat: Matrix

    def __mul__(self, other: WeylElement) -> WeylElement:
        if self.cartan is not other.cartan and self.cartan != other.cartan:
            raise ValueError("cannot multiply elements over different Cartan data")
        return WeylElement(self.cartan, _matmul(self.mat, other.mat))

    def apply(self, coords: tuple[int, ...]) -> tuple[int, ...]:
        """Image of a root-coordinate vector."""
        return tuple(
            sum(row[j] * coords[j] for j in range(len(coords))) for row in self.mat
        )

    def is_identity(self) -> bool:
        return self.mat == _identity_matrix(self.cartan.rank)

    def is_right_descent(self, i: int) -> bool:
        """True iff the i-th simple root is sent to a negative root."""
        k = i - 1
        if not 0 <= k < self.cartan.rank:
            raise ValueError(f"generator index {i} out of range")
        return all(row[k] <= 0 for row in self.mat)

    def length(self) -> int:
        """Number of positive roots made negative (the Coxeter length)."""
        count = 0
        for beta in positive_roots(self.cartan):
            if all(x <= 0 for x in self.apply(beta)):
                count += 1
        return count

    def descents(self) -> tuple[int, ...]:
        return tuple(
            i for i in range(1, self.cartan.rank + 1) if self.is_right_descent(i)
        )

    def reduced_word(self) -> Word:
        """Canonical reduced word: strip the smallest right descent, then reverse."""
        w = self
        stripped: list[int] = []
        while True:
            for i in range(1, w.cartan.rank + 1):
                if w.is_right_descent(i):
                    stripped.append(i)
                    w = w * simple_reflection(w.cartan, i)
                    break
            else:
                break
        return tuple(reversed(stripped))

    def inverse(self) -> WeylElement:
        word = self.reduced_word()
        return from_word(self.cartan, tuple(reversed(word)))

    def support(self) -> frozenset[int]:
        """Generator indices occurring in any reduced word."""
        return frozenset(self.reduced_word())


def identity(c: CartanData) -> WeylElement:
    return WeylElement(c, _identity_matrix(c.rank))


@lru_cache(maxsize=None)
def _simple_reflection_matrix(c: CartanData, i: int) -> Matrix:
    r = c.rank
    k = i - 1
    rows = []
    for row_idx in range(r):
        if row_idx != k:
            rows.append(tuple(1 if j == row_idx else 0 for j in range(r)))
        else:
            rows.append(tuple(-c.a[k][j] if j != k else -1 for j in range(r)))
    return tuple(rows)


def simple_reflection(c: CartanData, i: int) -> WeylElement:
    if not 1 <= i <= c.rank:
        raise ValueError(f"generator index {i} out of range 1..{c.rank}")
    return WeylElement(c, _simple_reflection_matrix(c, i))


def from_word(c: CartanData, word: Word) -> WeylElement:
    w = identity(c)
    for letter in word:
        w = w * simple_reflection(c, letter)
    return w


def is_reduced(c: CartanData, word: Word) -> bool:
    return from_word(c, word).length() == len(word)


@lru_cache(maxsize=None)
def longest_element(c: CartanData) -> WeylElement:
    """The longest element, by greedy right ascent from the identity."""
    w = identity(c)
    target = len(positive_roots(c))
    for _ in range(target):
        for i in range(1, c.rank + 1):
            if not w.is_right_descent(i):
                w = w * simple_reflection(c, i)
                break
        else:
            break
    if w.descents() != tuple(range(1, c.rank + 1)):
        raise AssertionError("greedy ascent did not reach the longest element")
    return w


def longest_length(c: CartanData) -> int:
    return len(positive_roots(c))


def weak_leq(u_prime: WeylElement, u: WeylElement) -> bool:
    """Weak order: ell(u) == ell(u') + ell(u'^-1 u), i.e. a reduced word for
    u' extends on the right to one for u."""
    if u_prime.cartan != u.cartan:
        raise ValueError("elements over different Cartan data")
    return u.length() == u_prime.length() + (u_prime.inverse() * u).length()


@lru_cache(maxsize=None)
def coxeter_number(c: CartanData) -> int:
    """Multiplicative order of s_1 s_2 ... s_r."""
    cox = from_word(c, tuple(range(1, c.rank + 1)))
    w = cox
    for order in range(1, 2 * len(positive_roots(c)) + 2):
        if w.is_identity():
            return order
        w = w * cox
    raise AssertionError("Coxeter element order exceeded the root-count bound")


def longest_is_minus_identity(c: CartanData) -> bool:
    w0 = longest_element(c)
    r = c.rank
    return w0.mat == tuple(
        tuple(-1 if i == j else 0 for j in range(r)) for i in range(r)
    )


def all_reduced_words(w: WeylElement) -> list[Word]:
    """Every reduced word of w (exponentially many; callers guard the size)."""
    memo: dict[Matrix, list[Word]] = {}

    def rec(x: WeylElement) -> list[Word]:
        if x.is_identity():
            return [()]
        cached = memo.get(x.mat)
        if cached is not None:
            return cached
        out: list[Word] = []
        for i in x.descents():
            for prefix in rec(x * simple_reflection(x.cartan, i)):
                out.append(prefix + (i,))
        memo[x.mat] = out
        return out

    return rec(w)


def _shuffles(a: SignedWord, b: SignedWord) -> list[SignedWord]:
    if not a:
        return [b]
    if not b:
        return [a]
    return [(a[0],) + rest for rest in _shuffles(a[1:], b)] + [
        (b[0],) + rest for rest in _shuffles(a, b[1:])
    ]


def double_reduced_words(
    u: WeylElement, v: WeylElement, limit: int | None = None
) -> list[SignedWord]:
    """All double reduced words for (u, v): shuffles of a barred reduced word
    of u (letters -i) with an unbarred reduced word of v, over all reduced
    words of each.

    Guarded by DOUBLE_WORD_GUARD on ell(u) + ell(v); pass ``limit`` to
    override the guard and truncate the (sorted, deduplicated) output.
    """
    if u.cartan != v.cartan:
        raise ValueError("elements over different Cartan data")
    total = u.length() + v.length()
    if limit is None and total > DOUBLE_WORD_GUARD:
        raise ValueError(
            f"ell(u)+ell(v) = {total} exceeds the enumeration guard "
            f"{DOUBLE_WORD_GUARD}; pass limit= to override"
        )
    seen: set[SignedWord] = set()
    for wu in all_reduced_words(u):
        barred = tuple(-i for i in wu)
        for wv in all_reduced_words(v):
            for shuffle in _shuffles(barred, wv):
                seen.add(shuffle)
    out = sorted(seen)
    if limit is not None:
        out = out[:limit]
    return out


def elements_up_to_length(c: CartanData, max_length: int) -> dict[int, list[WeylElement]]:
    """Group elements grouped by length, for lengths 0..max_length (BFS)."""
    by_length: dict[int, list[WeylElement]] = {0: [identity(c)]}
    seen = {identity(c).mat}
    for ell in range(max_length):
        nxt: list[WeylElement] = []
        for w in by_length.get(ell, []):
            for i in range(1, c.rank + 1):
                if not w.is_right_descent(i):
                    w2 = w * simple_reflection(c, i)
                    if w2.mat not in seen:
                        seen.add(w2.mat)
                        nxt.append(w2)
        if not nxt:
            break
        by_length[ell + 1] = nxt
    return by_length

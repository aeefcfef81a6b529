"""Exact rational matrix layer for SL(n)/GL(n): minors, total positivity
criteria, oscillation tests, double Bruhat cell labels, factorizations.

Everything here is exact Fraction arithmetic; a minor's sign is the whole
point, so there is no floating point and no tolerance anywhere.  The Weyl
group of type A is identified with the symmetric group (the i-th generator
is the adjacent transposition of i and i+1) and generalized minors are
realized as ordinary minors with row set u({1..i}) and column set
v({1..i}).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import weyl
from .cartan import CartanData, DynkinType, cartan_data
from .weyl import SignedWord, WeylElement

__all__ = [
    "Rational",
    "SingularMatrixError",
    "GaussDecompositionError",
    "RationalMatrix",
    "MinorSpec",
    "GenMinorSpec",
    "CellLabel",
    "FactorizationInput",
    "MINOR_DIMENSION_GUARD",
    "type_a_data",
    "permutation_of",
    "element_from_permutation",
    "elementary_factor",
    "torus_factor",
    "diagonal_matrix",
    "representative_matrix",
    "eval_factorization",
    "minor",
    "generalized_minor",
    "find_minor_violation",
    "is_totally_nonnegative",
    "is_totally_positive",
    "corner_minors_positive",
    "is_oscillatory",
    "min_totally_positive_power",
    "indicator_minor",
    "default_indicators",
    "oscillatory_by_indicators",
    "bruhat_label",
    "dodgson_identity_holds",
    "gauss_decompose",
]

Rational = Fraction

MINOR_DIMENSION_GUARD = 7


class SingularMatrixError(ValueError):
    """Raised when an operation needs an invertible matrix."""


class GaussDecompositionError(ValueError):
    """Raised when a leading principal minor vanishes (no LDU factorization)."""


def _to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError("boolean is not a rational entry")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ZeroDivisionError as exc:
            raise ValueError(f"zero denominator in {value!r}") from exc
    raise ValueError(f"cannot interpret {value!r} as an exact rational")


class RationalMatrix:
    """Immutable n x n matrix of exact rationals with memoized minors."""

    __slots__ = ("n", "rows", "_minors")

    def __init__(self, rows) -> None:
        parsed = tuple(tuple(_to_fraction(x) for x in row) for row in rows)
        n = len(parsed)
        if n == 0 or any(len(row) != n for row in parsed):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", parsed)
        object.__setattr__(self, "_minors", {})

    def __setattr__(self, name, value) -> None:
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        """1-based entry access."""
        return self.rows[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"RationalMatrix({self.n}x{self.n}: {body})"

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        cols = tuple(zip(*other.rows))
        return RationalMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols]
                for row in self.rows
            ]
        )

    def __pow__(self, m: int) -> RationalMatrix:
        if m < 0:
            raise ValueError("negative powers are not supported")
        out = RationalMatrix.identity(self.n)
        base = self
        k = m
        while k:
            if k & 1:
                out = out @ base
            base = base @ base
            k >>= 1
        return out

    def transpose(self) -> RationalMatrix:
        """Matrix transpose; realizes the anti-automorphism swapping the
        upper and lower elementary factors and fixing the torus."""
        return RationalMatrix(tuple(zip(*self.rows)))

    def inverse(self) -> RationalMatrix:
        """Exact inverse by Gauss-Jordan elimination with row pivoting."""
        n = self.n
        work = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
                for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
            if pivot is None:
                raise SingularMatrixError("matrix is singular; no inverse")
            work[col], work[pivot] = work[pivot], work[col]
            inv = 1 / work[col][col]
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                if r != col and work[r][col] != 0:
                    factor = work[r][col]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return RationalMatrix([row[n:] for row in work])

    def minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Fraction:
        """Exact minor on 1-based, strictly increasing row/column sets.

        Minors are memoized per matrix (Laplace expansion along the first
        row), which makes whole-matrix sweeps cheap.
        """
        if len(rows) != len(cols) or not rows:
            raise ValueError("row and column sets must be nonempty and equal-sized")
        for seq in (rows, cols):
            if any(seq[k] >= seq[k + 1] for k in range(len(seq) - 1)):
                raise ValueError("index sets must be strictly increasing")
            if seq[0] < 1 or seq[-1] > self.n:
                raise ValueError(f"index set {seq} out of range 1..{self.n}")
        return self._minor(rows, cols)

    def _minor(self, rows: tuple[int, ...], cols: tuple[int, ...]) -> Fraction:
        key = (rows, cols)
        memo = self._minors
        val = memo.get(key)
        if val is not None:
            return val
        if len(rows) == 1:
            val = self.rows[rows[0] - 1][cols[0] - 1]
        else:
            val = Fraction(0)
            first = rows[0]
            rest = rows[1:]
            sign = 1
            for idx, col in enumerate(cols):
                a = self.rows[first - 1][col - 1]
                if a:
                    val += sign * a * self._minor(rest, cols[:idx] + cols[idx + 1 :])
                sign = -sign
        memo[key] = val
        return val

    def det(self) -> Fraction:
        full = tuple(range(1, self.n + 1))
        return self._minor(full, full)

    def rank(self) -> int:
        return _rank_of(self.rows)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [[str(x) for x in row] for row in self.rows],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> RationalMatrix:
        n = data.get("n")
        entries = data.get("entries")
        if not isinstance(n, int) or not isinstance(entries, list):
            raise ValueError("matrix JSON needs integer 'n' and list 'entries'")
        mat = cls(entries)
        if mat.n != n:
            raise ValueError(f"declared n={n} but entries are {mat.n}x{mat.n}")
        return mat


def _rank_of(rows: tuple[tuple[Fraction, ...], ...]) -> int:
    work = [list(row) for row in rows]
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if work[r][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for r in range(nrows):
            if r != rank and work[r][col] != 0:
                factor = work[r][col]
                work[r] = [x - factor * y for x, y in zip(work[r], work[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


@dataclass(frozen=True)
class MinorSpec:
    """A minor given by 1-based, strictly increasing row and column sets."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.rows) != len(self.cols) or not self.rows:
            raise ValueError("row and column sets must be nonempty and equal-sized")
        for seq in (self.rows, self.cols):
            if any(seq[k] >= seq[k + 1] for k in range(len(seq) - 1)):
                raise ValueError("index sets must be strictly increasing")
            if seq[0] < 1:
                raise ValueError("indices are 1-based")


def minor(x: RationalMatrix, spec: MinorSpec) -> Fraction:
    return x.minor(spec.rows, spec.cols)


def type_a_data(n: int) -> CartanData:
    """Cartan data of the Weyl group acting on n x n matrices (type A, rank n-1)."""
    if n < 2:
        raise ValueError("need n >= 2")
    return cartan_data(DynkinType("A", n - 1))


@lru_cache(maxsize=65536)
def permutation_of(w: WeylElement) -> tuple[int, ...]:
    """One-line permutation realizing a type-A Weyl element on {1..n}."""
    if w.cartan.dynkin.family != "A":
        raise ValueError("permutation realization needs type A")
    n = w.cartan.rank + 1
    p = list(range(1, n + 1))
    for letter in w.reduced_word():
        p[letter - 1], p[letter] = p[letter], p[letter - 1]
    return tuple(p)


def element_from_permutation(c: CartanData, p: tuple[int, ...]) -> WeylElement:
    """Inverse of permutation_of: the Weyl element with the given one-line form."""
    if c.dynkin.family != "A":
        raise ValueError("permutation realization needs type A")
    n = c.rank + 1
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{p} is not a permutation of 1..{n}")
    q = list(p)
    stripped: list[int] = []
    while True:
        for j in range(n - 1):
            if q[j] > q[j + 1]:
                q[j], q[j + 1] = q[j + 1], q[j]
                stripped.append(j + 1)
                break
        else:
            break
    return weyl.from_word(c, tuple(reversed(stripped)))


@dataclass(frozen=True)
class GenMinorSpec:
    """A generalized minor given by (u, v, i): rows u({1..i}), columns v({1..i}).

    Depends only on the two index sets, so specs with equal realizations are
    the same minor.
    """

    u: WeylElement
    v: WeylElement
    i: int

    def __post_init__(self) -> None:
        if self.u.cartan != self.v.cartan:
            raise ValueError("u and v over different Cartan data")
        if not 1 <= self.i <= self.u.cartan.rank:
            raise ValueError("fundamental weight index out of range")

    def realize(self) -> MinorSpec:
        pu = permutation_of(self.u)
        pv = permutation_of(self.v)
        return MinorSpec(
            tuple(sorted(pu[: self.i])), tuple(sorted(pv[: self.i]))
        )


def generalized_minor(x: RationalMatrix, g: GenMinorSpec) -> Fraction:
    spec = g.realize()
    if spec.rows[-1] > x.n or spec.cols[-1] > x.n:
        raise ValueError("generalized minor does not fit the matrix dimension")
    return x.minor(spec.rows, spec.cols)


@dataclass(frozen=True)
class CellLabel:
    """The (u, v) label of a double Bruhat cell."""

    u: WeylElement
    v: WeylElement

    def __post_init__(self) -> None:
        if self.u.cartan != self.v.cartan:
            raise ValueError("u and v over different Cartan data")


# ---------------------------------------------------------------------------
# elementary factors and factorizations


def elementary_factor(n: int, letter: int, t: Fraction | int | str) -> RationalMatrix:
    """One-parameter elementary factor: +i adds t at (i, i+1), -i at (i+1, i)."""
    t = _to_fraction(t)
    i = abs(letter)
    if letter == 0 or not 1 <= i <= n - 1:
        raise ValueError(f"letter {letter} out of range for n={n}")
    rows = [[Fraction(1) if a == b else Fraction(0) for b in range(n)] for a in range(n)]
    if letter > 0:
        rows[i - 1][i] = t
    else:
        rows[i][i - 1] = t
    return RationalMatrix(rows)


def torus_factor(n: int, i: int, t: Fraction | int | str) -> RationalMatrix:
    """Diagonal one-parameter torus factor: t at position i, 1/t at i+1."""
    t = _to_fraction(t)
    if t == 0:
        raise ValueError("torus parameter must be nonzero")
    if not 1 <= i <= n - 1:
        raise ValueError(f"torus index {i} out of range for n={n}")
    diag = [Fraction(1)] * n
    diag[i - 1] = t
    diag[i] = 1 / t
    return diagonal_matrix(diag)


def diagonal_matrix(entries) -> RationalMatrix:
    entries = [_to_fraction(x) for x in entries]
    n = len(entries)
    return RationalMatrix(
        [[entries[a] if a == b else Fraction(0) for b in range(n)] for a in range(n)]
    )


def representative_matrix(w: WeylElement) -> RationalMatrix:
    """The SL(n) representative of a type-A Weyl element, built by multiplying
    the standard (0 -1; 1 0) generator blocks along any reduced word."""
    n = w.cartan.rank + 1
    out = RationalMatrix.identity(n)
    for i in w.reduced_word():
        rows = [
            [Fraction(1) if a == b else Fraction(0) for b in range(n)]
            for a in range(n)
        ]
        rows[i - 1][i - 1] = Fraction(0)
        rows[i][i] = Fraction(0)
        rows[i - 1][i] = Fraction(-1)
        rows[i][i - 1] = Fraction(1)
        out = out @ RationalMatrix(rows)
    return out


@dataclass(frozen=True)
class FactorizationInput:
    """A torus element times an ordered product of elementary factors.

    ``diag`` lists n positive rationals with product 1; ``word`` letters are
    signed generator indices and ``params`` holds one positive rational per
    letter.
    """

    n: int
    diag: tuple[Fraction, ...]
    word: SignedWord
    params: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        diag = tuple(_to_fraction(x) for x in self.diag)
        params = tuple(_to_fraction(x) for x in self.params)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "word", tuple(self.word))
        if self.n < 2:
            raise ValueError("need n >= 2")
        if len(diag) != self.n:
            raise ValueError("diagonal must have n entries")
        if any(d <= 0 for d in diag):
            raise ValueError("diagonal entries must be positive")
        prod = Fraction(1)
        for d in diag:
            prod *= d
        if prod != 1:
            raise ValueError("diagonal must have product 1")
        if len(self.params) != len(self.word):
            raise ValueError("need one parameter per letter")
        if any(t <= 0 for t in self.params):
            raise ValueError("factor parameters must be positive")
        for letter in self.word:
            if letter == 0 or not 1 <= abs(letter) <= self.n - 1:
                raise ValueError(f"letter {letter} out of range for n={self.n}")

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "diag": [str(d) for d in self.diag],
            "word": list(self.word),
            "params": [str(t) for t in self.params],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> FactorizationInput:
        try:
            return cls(
                n=data["n"],
                diag=tuple(data["diag"]),
                word=tuple(data["word"]),
                params=tuple(data["params"]),
            )
        except KeyError as exc:
            raise ValueError(f"factorization JSON is missing {exc}") from exc


def eval_factorization(inp: FactorizationInput) -> RationalMatrix:
    """The ordered product diag * x_{letter_1}(t_1) * ... * x_{letter_m}(t_m)."""
    out = diagonal_matrix(inp.diag)
    for letter, t in zip(inp.word, inp.params):
        out = out @ elementary_factor(inp.n, letter, t)
    return out


# ---------------------------------------------------------------------------
# positivity criteria


def _check_guard(x: RationalMatrix, guard: int) -> None:
    if x.n > guard:
        raise ValueError(
            f"all-minors sweep on n={x.n} exceeds the guard {guard}; "
            "pass a larger guard to override"
        )


def find_minor_violation(
    x: RationalMatrix, strict: bool, guard: int = MINOR_DIMENSION_GUARD
) -> MinorSpec | None:
    """First minor (by size, then lexicographic order) that is negative, or
    merely nonpositive when ``strict``; None when no violation exists."""
    _check_guard(x, guard)
    indices = range(1, x.n + 1)
    for k in range(1, x.n + 1):
        for rows in itertools.combinations(indices, k):
            for cols in itertools.combinations(indices, k):
                val = x._minor(rows, cols)
                if val < 0 or (strict and val == 0):
                    return MinorSpec(rows, cols)
    return None


def is_totally_nonnegative(
    x: RationalMatrix, guard: int = MINOR_DIMENSION_GUARD
) -> bool:
    """True iff every minor of every size is >= 0 (exact, exhaustive)."""
    return find_minor_violation(x, strict=False, guard=guard) is None


def is_totally_positive(x: RationalMatrix, guard: int = MINOR_DIMENSION_GUARD) -> bool:
    """True iff every minor of every size is > 0 (exact, exhaustive)."""
    return find_minor_violation(x, strict=True, guard=guard) is None


def corner_minors_positive(x: RationalMatrix) -> bool:
    """Positivity of the 2n-1 corner solid minors (rows {1..k} against columns
    {n-k+1..n} and the mirror image).  For a totally nonnegative matrix this
    is equivalent to total positivity."""
    n = x.n
    for k in range(1, n + 1):
        top = tuple(range(1, k + 1))
        bottom = tuple(range(n - k + 1, n + 1))
        if x.minor(top, bottom) <= 0:
            return False
        if k < n and x.minor(bottom, top) <= 0:
            return False
    return True


def is_oscillatory(x: RationalMatrix) -> bool:
    """For totally nonnegative x: true iff every entry just above and just
    below the main diagonal is positive."""
    return all(
        x.entry(i, i + 1) > 0 and x.entry(i + 1, i) > 0 for i in range(1, x.n)
    )


def min_totally_positive_power(
    x: RationalMatrix, cap: int, guard: int = MINOR_DIMENSION_GUARD
) -> int | None:
    """Smallest m <= cap with x^m totally positive (exact matrix powers)."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _check_guard(x, guard)
    power = x
    for m in range(1, cap + 1):
        if is_totally_positive(power, guard=guard):
            return m
        if m < cap:
            power = power @ x
    return None


# ---------------------------------------------------------------------------
# indicators


def _diagram_path(c: CartanData, i: int, j: int) -> list[int]:
    """The unique path from i to j along the (tree) Dynkin diagram."""
    r = c.rank
    if not (1 <= i <= r and 1 <= j <= r):
        raise ValueError("indices out of range")
    parent = {i: 0}
    frontier = [i]
    while frontier:
        nxt: list[int] = []
        for a in frontier:
            for b in range(1, r + 1):
                if b != a and c.a[a - 1][b - 1] != 0 and b not in parent:
                    parent[b] = a
                    nxt.append(b)
        frontier = nxt
    if j not in parent:
        raise ValueError(f"indices {i} and {j} lie in different components")
    path = [j]
    while path[-1] != i:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def indicator_minor(c: CartanData, j: int, i: int, barred: bool = False) -> GenMinorSpec:
    """The generalized minor along the diagram path from i to j whose
    positivity on the totally nonnegative set detects oscillation.

    Unbarred: left weight u = s_{i(2)}...s_j on the path, right weight s_i u;
    barred swaps the two.  For j = i the left factor is the identity.
    """
    path = _diagram_path(c, i, j)
    u = weyl.from_word(c, tuple(path[1:]))
    siu = weyl.simple_reflection(c, i) * u
    if barred:
        return GenMinorSpec(siu, u, j)
    return GenMinorSpec(u, siu, j)


def default_indicators(c: CartanData) -> list[GenMinorSpec]:
    """The 2r-element indicator family realized by the entries adjacent to the
    main diagonal in type A (path target j = 1 for every source i)."""
    out: list[GenMinorSpec] = []
    for i in range(1, c.rank + 1):
        out.append(indicator_minor(c, 1, i, barred=False))
        out.append(indicator_minor(c, 1, i, barred=True))
    return out


def oscillatory_by_indicators(
    x: RationalMatrix, specs: list[GenMinorSpec]
) -> bool:
    """Evaluate a full indicator family: requires, for every generator index,
    one unbarred and one barred indicator in ``specs`` (validated), and
    returns True iff all the minors are positive at x."""
    if not specs:
        raise ValueError("empty indicator collection")
    c = specs[0].u.cartan
    r = c.rank
    slots: dict[tuple[tuple[int, ...], tuple[int, ...], int], set[tuple[str, int]]] = {}
    for i in range(1, r + 1):
        for j in range(1, r + 1):
            for barred, tag in ((False, "plain"), (True, "barred")):
                g = indicator_minor(c, j, i, barred)
                spec = g.realize()
                slots.setdefault((spec.rows, spec.cols, g.i), set()).add((tag, i))
    covered: set[tuple[str, int]] = set()
    for g in specs:
        if g.u.cartan != c:
            raise ValueError("mixed Cartan data in the indicator collection")
        spec = g.realize()
        matches = slots.get((spec.rows, spec.cols, g.i))
        if not matches:
            raise ValueError(f"{g} is not an indicator minor")
        covered |= matches
    missing = [
        (tag, i)
        for i in range(1, r + 1)
        for tag in ("plain", "barred")
        if (tag, i) not in covered
    ]
    if missing:
        raise ValueError(f"indicator collection misses {missing}")
    return all(generalized_minor(x, g) > 0 for g in specs)


# ---------------------------------------------------------------------------
# double Bruhat cell labels


def bruhat_label(x: RationalMatrix) -> CellLabel:
    """The unique (u, v) with x in the intersection of the Bruhat cells of u
    (upper Borel) and v (lower Borel).

    u is read off the exact ranks of the lower-left submatrices (rows i..n,
    columns 1..j): u(j) is the unique i where the double difference of that
    rank table is 1.  v is read the same way from the upper-right
    submatrices.  The dictionary is pinned by the representative round-trip
    oracle in the test suite.
    """
    n = x.n
    if n < 2:
        raise ValueError("need n >= 2")
    if x.det() == 0:
        raise SingularMatrixError("matrix is singular; no cell label")
    c = type_a_data(n)

    lower_left = [[0] * (n + 1) for _ in range(n + 2)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sub = tuple(row[:j] for row in x.rows[i - 1 :])
            lower_left[i][j] = _rank_of(sub)
    u_perm = []
    for j in range(1, n + 1):
        img = [
            i
            for i in range(1, n + 1)
            if lower_left[i][j] - lower_left[i + 1][j] - lower_left[i][j - 1] + lower_left[i + 1][j - 1] == 1
        ]
        if len(img) != 1:
            raise AssertionError("rank table did not determine a permutation")
        u_perm.append(img[0])

    upper_right = [[0] * (n + 2) for _ in range(n + 1)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            sub = tuple(row[j - 1 :] for row in x.rows[:i])
            upper_right[i][j] = _rank_of(sub)
    v_perm = []
    for j in range(1, n + 1):
        img = [
            i
            for i in range(1, n + 1)
            if upper_right[i][j] - upper_right[i - 1][j] - upper_right[i][j + 1] + upper_right[i - 1][j + 1] == 1
        ]
        if len(img) != 1:
            raise AssertionError("rank table did not determine a permutation")
        v_perm.append(img[0])

    return CellLabel(
        element_from_permutation(c, tuple(u_perm)),
        element_from_permutation(c, tuple(v_perm)),
    )


# ---------------------------------------------------------------------------
# the generalized Dodgson identity and Gaussian decomposition


def dodgson_identity_holds(
    x: RationalMatrix, u_prime: WeylElement, v_prime: WeylElement, i: int
) -> bool:
    """Exact check of the two-term minor identity at (u', v', i) with
    u'' = u' s_i and v'' = v' s_i.

    Requires the ascent condition on both sides; the exponents of the
    complementary product are read from the Cartan matrix.  Holds on SL(n).
    """
    c = u_prime.cartan
    if c != v_prime.cartan:
        raise ValueError("elements over different Cartan data")
    if c.dynkin.family != "A" or c.rank != x.n - 1:
        raise ValueError("elements must belong to the matrix's type-A Weyl group")
    si = weyl.simple_reflection(c, i)
    u2 = u_prime * si
    v2 = v_prime * si
    if u2.length() != u_prime.length() + 1 or v2.length() != v_prime.length() + 1:
        raise ValueError("need the ascent condition on both u' s_i and v' s_i")
    lhs = generalized_minor(x, GenMinorSpec(u_prime, v_prime, i)) * generalized_minor(
        x, GenMinorSpec(u2, v2, i)
    )
    rhs = generalized_minor(x, GenMinorSpec(u_prime, v2, i)) * generalized_minor(
        x, GenMinorSpec(u2, v_prime, i)
    )
    extra = Fraction(1)
    for j in range(1, c.rank + 1):
        if j == i:
            continue
        exponent = -c.a[j - 1][i - 1]
        if exponent:
            extra *= generalized_minor(x, GenMinorSpec(u_prime, v_prime, j)) ** exponent
    return lhs == rhs + extra


def gauss_decompose(
    x: RationalMatrix,
) -> tuple[RationalMatrix, RationalMatrix, RationalMatrix]:
    """Unique LDU factorization (lower unitriangular, diagonal, upper
    unitriangular); the k-th diagonal entry is the ratio of consecutive
    leading principal minors.  Raises when a leading principal minor is 0."""
    n = x.n
    work = [list(row) for row in x.rows]
    lower = [[Fraction(1) if a == b else Fraction(0) for b in range(n)] for a in range(n)]
    diag = [Fraction(0)] * n
    for k in range(n):
        pivot = work[k][k]
        if pivot == 0:
            raise GaussDecompositionError(
                f"leading principal minor of order {k + 1} vanishes"
            )
        diag[k] = pivot
        for r in range(k + 1, n):
            factor = work[r][k] / pivot
            lower[r][k] = factor
            if factor:
                work[r] = [a - factor * b for a, b in zip(work[r], work[k])]
    upper = [
        [work[a][b] / diag[a] if b >= a else Fraction(0) for b in range(n)]
        for a in range(n)
    ]
    return (
        RationalMatrix(lower),
        diagonal_matrix(diag),
        RationalMatrix(upper),
    )

"""Static data for the simple root systems: Cartan matrices, braid orders, roots.

Node numbering follows the Bourbaki convention for every family (in
particular E6/E7/E8 have the branch node attached to node 4 of the chain
1-3-4-5-...).  Root coordinates are integer vectors in the simple-root
basis; Python integers are unbounded, so coordinate arithmetic can never
wrap around.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

__all__ = [
    "DynkinType",
    "CartanData",
    "cartan_data",
    "cartan_data_from_string",
    "positive_roots",
    "reflect_root",
    "simple_root",
]

_MIN_RANK = {"A": 1, "B": 2, "C": 3, "D": 4, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}

# product a_ij * a_ji  ->  order of s_i s_j
_BRAID_ORDER = {0: 2, 1: 3, 2: 4, 3: 6}

_TYPE_RE = re.compile(r"^([A-Ga-g])\s*(\d+)$")


@dataclass(frozen=True)
class DynkinType:
    """A simple Dynkin type, e.g. A4 or E8."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in _MIN_RANK:
            raise ValueError(f"unknown family {self.family!r}")
        lo = _MIN_RANK[self.family]
        hi = _MAX_RANK.get(self.family)
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(
                f"rank {self.rank} is not admissible for family {self.family}"
            )

    @classmethod
    def parse(cls, text: str) -> DynkinType:
        """Parse a type string such as "A4" or "e8" (case-insensitive)."""
        m = _TYPE_RE.match(text.strip())
        if m is None:
            raise ValueError(f"cannot parse Dynkin type from {text!r}")
        return cls(m.group(1).upper(), int(m.group(2)))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanData:
    """Cartan matrix and braid orders of a simple type.

    ``a[i][j]`` is the pairing of the j-th simple root with the i-th
    coroot (0-based), so the reflection action on root coordinates is
    ``s_i(alpha_j) = alpha_j - a[i][j] * alpha_i``.
    """

    dynkin: DynkinType
    a: tuple[tuple[int, ...], ...]
    m: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    def __str__(self) -> str:
        return str(self.dynkin)


def _cartan_entries(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    r = t.rank
    a = [[0] * r for _ in range(r)]
    for i in range(r):
        a[i][i] = 2

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        # 1-based node labels
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    f = t.family
    if f == "A":
        for i in range(1, r):
            bond(i, i + 1)
    elif f == "B":
        # alpha_r is the short root
        for i in range(1, r - 1):
            bond(i, i + 1)
        bond(r - 1, r, -1, -2)
    elif f == "C":
        # alpha_r is the long root
        for i in range(1, r - 1):
            bond(i, i + 1)
        bond(r - 1, r, -2, -1)
    elif f == "D":
        for i in range(1, r - 1):
            bond(i, i + 1)
        bond(r - 2, r)
    elif f == "E":
        bond(1, 3)
        bond(3, 4)
        bond(4, 5)
        bond(5, 6)
        if r >= 7:
            bond(6, 7)
        if r >= 8:
            bond(7, 8)
        bond(2, 4)
    elif f == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif f == "G":
        bond(1, 2, -1, -3)
    return tuple(tuple(row) for row in a)


def _validate(a: tuple[tuple[int, ...], ...]) -> None:
    r = len(a)
    for i in range(r):
        if a[i][i] != 2:
            raise AssertionError("Cartan diagonal must be 2")
        for j in range(r):
            if i != j:
                if a[i][j] > 0:
                    raise AssertionError("off-diagonal Cartan entries must be <= 0")
                if (a[i][j] == 0) != (a[j][i] == 0):
                    raise AssertionError("Cartan zero pattern must be symmetric")
    # connectivity of the diagram
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(r):
            if j != i and a[i][j] != 0 and j not in seen:
                seen.add(j)
                frontier.append(j)
    if len(seen) != r:
        raise AssertionError("Dynkin diagram must be connected")


@lru_cache(maxsize=None)
def cartan_data(dynkin: DynkinType) -> CartanData:
    """Return the Cartan matrix and braid orders for an admissible type."""
    a = _cartan_entries(dynkin)
    _validate(a)
    r = dynkin.rank
    m = tuple(
        tuple(
            1 if i == j else _BRAID_ORDER[a[i][j] * a[j][i]] for j in range(r)
        )
        for i in range(r)
    )
    return CartanData(dynkin, a, m)


def cartan_data_from_string(text: str) -> CartanData:
    return cartan_data(DynkinType.parse(text))


def simple_root(c: CartanData, i: int) -> tuple[int, ...]:
    """Coordinates of the i-th simple root (i is 1-based)."""
    if not 1 <= i <= c.rank:
        raise ValueError(f"generator index {i} out of range 1..{c.rank}")
    return tuple(1 if k == i - 1 else 0 for k in range(c.rank))


def reflect_root(c: CartanData, i: int, beta: tuple[int, ...]) -> tuple[int, ...]:
    """Apply the simple reflection s_i to a vector in root coordinates."""
    k = i - 1
    new_ck = beta[k] - sum(c.a[k][j] * beta[j] for j in range(c.rank))
    return beta[:k] + (new_ck,) + beta[k + 1 :]


@lru_cache(maxsize=None)
def positive_roots(c: CartanData) -> tuple[tuple[int, ...], ...]:
    """All positive roots, generated by closing the simple roots under reflections.

    The full root system is the reflection closure; the positive roots are
    the members with all coordinates >= 0.  The closure is checked to split
    into positive and negative halves.
    """
    r = c.rank
    simples = [simple_root(c, i) for i in range(1, r + 1)]
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        beta = frontier.pop()
        for i in range(1, r + 1):
            gamma = reflect_root(c, i, beta)
            if gamma not in roots:
                roots.add(gamma)
                frontier.append(gamma)
    pos = sorted(v for v in roots if all(x >= 0 for x in v))
    if len(roots) != 2 * len(pos):
        raise AssertionError("root system did not split into +/- halves")
    for v in pos:
        if tuple(-x for x in v) not in roots:
            raise AssertionError("positive root without a negative mirror")
    return tuple(pos)

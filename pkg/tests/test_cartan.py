import pytest

from tposc import weyl
from tposc.cartan import (
    DynkinType,
    cartan_data,
    cartan_data_from_string,
    positive_roots,
    reflect_root,
    simple_root,
)

ALL_SMALL_TYPES = [
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
    "D4", "D5", "E6", "E7", "E8", "F4", "G2",
]


def test_parse_and_case():
    assert DynkinType.parse("a4") == DynkinType("A", 4)
    assert DynkinType.parse(" E8 ") == DynkinType("E", 8)
    assert str(DynkinType.parse("g2")) == "G2"


@pytest.mark.parametrize("bad", ["Z3", "A0", "B1", "C2", "D3", "E5", "E9", "F5", "G3", "A", "4", ""])
def test_inadmissible_rejected(bad):
    with pytest.raises(ValueError):
        DynkinType.parse(bad)


def test_rank_two_tables():
    a2 = cartan_data_from_string("A2")
    assert a2.a == ((2, -1), (-1, 2))
    assert a2.m[0][1] == 3

    g2 = cartan_data_from_string("G2")
    assert g2.a[0][1] * g2.a[1][0] == 3
    assert g2.m[0][1] == 6

    b2 = cartan_data_from_string("B2")
    assert b2.a[0][1] * b2.a[1][0] == 2
    assert b2.m[0][1] == 4


def test_braid_order_diagonal():
    for name in ALL_SMALL_TYPES:
        c = cartan_data_from_string(name)
        for i in range(c.rank):
            assert c.m[i][i] == 1
            for j in range(c.rank):
                assert c.m[i][j] == c.m[j][i]


def _expected_count(family: str, r: int) -> int:
    if family == "A":
        return r * (r + 1) // 2
    if family in ("B", "C"):
        return r * r
    if family == "D":
        return r * (r - 1)
    return {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6}[f"{family}{r}"]


@pytest.mark.parametrize("name", ALL_SMALL_TYPES)
def test_positive_root_counts(name):
    c = cartan_data_from_string(name)
    assert len(positive_roots(c)) == _expected_count(c.dynkin.family, c.rank)


@pytest.mark.parametrize("name", ["A3", "B3", "D4", "G2", "F4"])
def test_simple_reflection_permutes_positive_roots(name):
    c = cartan_data_from_string(name)
    pos = set(positive_roots(c))
    for i in range(1, c.rank + 1):
        alpha = simple_root(c, i)
        assert reflect_root(c, i, alpha) == tuple(-x for x in alpha)
        others = pos - {alpha}
        assert {reflect_root(c, i, beta) for beta in others} == others


@pytest.mark.parametrize("name", ALL_SMALL_TYPES)
def test_braid_orders_realized_by_reflections(name):
    # the stored m_ij must equal the true order of s_i s_j
    c = cartan_data_from_string(name)
    for i in range(1, c.rank + 1):
        for j in range(i + 1, c.rank + 1):
            prod = weyl.simple_reflection(c, i) * weyl.simple_reflection(c, j)
            w = prod
            order = 1
            while not w.is_identity():
                w = w * prod
                order += 1
                assert order <= 6
            assert order == c.m[i - 1][j - 1]


def test_cartan_data_is_cached():
    assert cartan_data(DynkinType("E", 8)) is cartan_data(DynkinType("E", 8))

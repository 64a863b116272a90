import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from laxdist import (
    discrete_monoid_delooping,
    monads_of,
    ordered_monoid_delooping,
    rel_2category,
    terminal_2category,
    validate_2category,
)
from laxdist.instances import (
    LEFT_ZERO_WITH_UNIT,
    Z2_TABLE,
    chain,
    from_generator,
    labelled,
    ordered_monoid,
)
from laxdist import oracles


@pytest.mark.parametrize("n,count", [(1, 2), (2, 16)])
def test_rel_one_cell_counts(n, count):
    R = rel_2category(n)
    assert R.n_one_cells == count == 2 ** (n * n)
    assert R.id1(0) == oracles.relation_mask(np.eye(n, dtype=bool))


def test_rel_guardrail():
    with pytest.raises(ValueError):
        rel_2category(4)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_monads_of_rel_are_preorders(n):
    found = sorted(F.one(0) for F, _ in monads_of(rel_2category(n)))
    assert found == sorted(oracles.preorders(n))
    assert len(found) == {1: 1, 2: 4, 3: 29}[n]


def test_monads_of_terminal():
    assert len(monads_of(terminal_2category())) == 1


def test_ordered_monoid_max():
    X = ordered_monoid_delooping("max", [0, 1])
    assert validate_2category(X).ok
    assert X.n_two_cells == sum(1 for a in range(2) for b in range(2) if a <= b)
    assert X.id1(0) == 0


def test_non_monotone_op_rejected():
    # xor is not monotone for the natural order on {0, 1}
    with pytest.raises(ValueError, match="monotone"):
        ordered_monoid_delooping("xor", [0, 1])


def test_discrete_monoids():
    Z2 = discrete_monoid_delooping(Z2_TABLE)
    assert validate_2category(Z2).ok
    assert oracles.is_commutative(Z2_TABLE)
    LZ = discrete_monoid_delooping(LEFT_ZERO_WITH_UNIT)
    assert validate_2category(LZ).ok
    assert oracles.is_monoid_table(LEFT_ZERO_WITH_UNIT)
    assert not oracles.is_commutative(LEFT_ZERO_WITH_UNIT)
    single = discrete_monoid_delooping([[0]])
    T = terminal_2category()
    assert (single.n_objects, single.n_one_cells, single.n_two_cells) == (T.n_objects, T.n_one_cells, T.n_two_cells)


@pytest.mark.parametrize(
    "expr",
    [
        "terminal",
        "rel(2)",
        "ordered_monoid(tadd,2)",
        "ordered_monoid(xor,1,chaotic)",
        "discrete_monoid([[0,1],[1,0]])",
        "chain(3)",
        "cyclic(3)",
        "labelled(rel(1),2)",
        "product(chain(2),rel(1))",
    ],
)
def test_generators_by_name_validate(expr):
    assert validate_2category(from_generator(expr)).ok


def test_generators_are_cached():
    assert from_generator("rel(2)") is rel_2category(2)
    assert chain(2) is chain(2)
    assert labelled(rel_2category(1), 2) is labelled(rel_2category(1), 2)


@given(st.sampled_from(["max", "min", "tadd"]), st.integers(0, 3))
def test_ordered_monoid_monads_match_oracle(op, k):
    ops = {"max": max, "min": min, "tadd": lambda a, b: min(a + b, k)}
    X = ordered_monoid(op, k)
    unit = {"max": 0, "min": k, "tadd": 0}[op]
    expected = oracles.ordered_monoid_monads(ops[op], range(k + 1), lambda a, b: a <= b, unit)
    assert [F.one(0) for F, _ in monads_of(X)] == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_monoid_table_search(n):
    tables = oracles.monoid_tables(n)
    assert all(oracles.is_monoid_table(t) for t in tables)
    # counts of monoid tables with a fixed unit, from a plain brute-force scan for small n
    if n <= 3:
        brute = 0
        for rest in itertools.product(range(n), repeat=(n - 1) ** 2):
            t = [[0] * n for _ in range(n)]
            for i in range(n):
                t[0][i] = t[i][0] = i
            it = iter(rest)
            for i in range(1, n):
                for j in range(1, n):
                    t[i][j] = next(it)
            brute += oracles.is_monoid_table(t) and all(t[0][x] == x == t[x][0] for x in range(n))
        assert brute == len(tables)

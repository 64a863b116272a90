import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from laxdist import (
    Budget,
    BudgetExceeded,
    StructuralError,
    TabledTwoCategory,
    product,
    rel_2category,
    tabled,
    terminal_2category,
    validate_2category,
)
from laxdist.core2 import PosetalTwoCategory, dual, hom_category
from laxdist.instances import chain, cyclic_double_delooping, labelled, ordered_monoid
from laxdist import oracles


def corrupted(X, table, i, j, value):
    kw = tabled(X).tables()
    rows = [list(r) for r in kw[table]]
    rows[i][j] = value
    kw[table] = rows
    return TabledTwoCategory(**kw)


SMALL = [
    terminal_2category(),
    rel_2category(1),
    rel_2category(2),
    ordered_monoid("max", 2),
    ordered_monoid("tadd", 2),
    cyclic_double_delooping(3),
    chain(3),
    labelled(rel_2category(1), 2),
]


@pytest.mark.parametrize("X", SMALL, ids=lambda X: X.name)
def test_generators_validate(X):
    assert validate_2category(X).ok


def test_terminal_sizes():
    T = terminal_2category()
    assert (T.n_objects, T.n_one_cells, T.n_two_cells) == (1, 1, 1)
    assert product(T, T).n_two_cells == 1


def test_rel2_composition_matches_boolean_matrices():
    R = rel_2category(2)
    for r, s in itertools.product(range(16), repeat=2):
        expected = oracles.relation_mask(
            oracles.compose(oracles.relation_matrix(r, 2), oracles.relation_matrix(s, 2))
        )
        assert R.comp1(s, r) == expected


def test_rel2_order_is_inclusion():
    R = rel_2category(2)
    for r, s in itertools.product(range(16), repeat=2):
        has_cell = len(R.hom2(r, s)) == 1
        assert has_cell == oracles.included(oracles.relation_matrix(r, 2), oracles.relation_matrix(s, 2))


def test_rel2_corrupted_composition_names_assoc1():
    R = rel_2category(2)
    comp = [list(r) for r in R._comp1]
    comp[3][5] ^= 1
    X = PosetalTwoCategory(1, R.one_cells, [R.id1(0)], comp, R.leq_array())
    report = validate_2category(X)
    assert not report.ok
    assert report.failed[0] == "assoc1"
    assert len(report.violations[0].witness) == 3


def test_product_counts():
    R = rel_2category(2)
    P = product(R, R)
    assert (P.n_objects, P.n_one_cells) == (1, 256)


def test_product_with_terminal_is_isomorphic():
    X = ordered_monoid("max", 2)
    P = product(terminal_2category(), X)
    T = tabled(P).tables()
    U = tabled(X).tables()
    for key in ("one_cells", "id1", "comp1", "two_cells", "id2", "vcomp", "hcomp"):
        assert [list(r) if isinstance(r, (list, tuple)) else r for r in T[key]] == [
            list(r) if isinstance(r, (list, tuple)) else r for r in U[key]
        ]


@pytest.mark.parametrize("pair", [(0, 1), (1, 7), (3, 6), (5, 5)])
def test_product_of_valid_is_valid(pair):
    X, Y = SMALL[pair[0]], SMALL[pair[1]]
    assert validate_2category(product(X, Y)).ok


def test_hom_categories():
    T = hom_category(terminal_2category(), 0, 0)
    assert (len(T.objects), len(T.morphisms)) == (1, 1)
    assert len(hom_category(rel_2category(2), 0, 0).objects) == 16
    H = hom_category(ordered_monoid("max", 2), 0, 0)
    pairs = [(a, b) for a in range(3) for b in range(3) if a <= b]
    assert (len(H.objects), len(H.morphisms)) == (3, len(pairs))


def test_budget_guardrail():
    with pytest.raises(BudgetExceeded):
        validate_2category(rel_2category(2), budget=Budget(10))


def test_out_of_range_ids_are_structural():
    kw = terminal_2category().tables()
    kw["id1"] = [3]
    with pytest.raises(StructuralError):
        TabledTwoCategory(**kw)


def test_inverse_search():
    Z = cyclic_double_delooping(3)
    assert Z.inverse2(1) == 2
    R = rel_2category(2)
    a = R.hom2(0, 15)[0]
    assert R.inverse2(a) is None


def test_dual_reverses_one_cells():
    C = chain(3)
    D = dual(C)
    assert validate_2category(D).ok
    assert D.one_cell_list() == [(t, s) for s, t in C.one_cell_list()]


def test_threads_do_not_change_reports():
    X = corrupted(labelled(rel_2category(1), 2), "hcomp", 0, 1, 0)
    assert validate_2category(X, threads=1).as_dict() == validate_2category(X, threads=4).as_dict()


@given(st.integers(0, 2), st.sampled_from(["max", "min", "tadd", "xor"]))
def test_associativity_and_interchange_by_enumeration(k, op):
    if op == "xor":
        X = tabled(ordered_monoid("xor", 1, "chaotic"))
    else:
        X = tabled(ordered_monoid(op, k))
    n1, n2 = X.n_one_cells, X.n_two_cells
    for h, g, f in itertools.product(range(n1), repeat=3):
        assert X.comp1(X.comp1(h, g), f) == X.comp1(h, X.comp1(g, f))
    for b2, b1, a2, a1 in itertools.product(range(n2), repeat=4):
        if X.src2(b2) != X.tgt2(b1) or X.src2(a2) != X.tgt2(a1):
            continue
        left = X.hcomp(X.vcomp(b2, b1), X.vcomp(a2, a1))
        right = X.vcomp(X.hcomp(b2, a2), X.hcomp(b1, a1))
        assert left == right


def _monotone(leq, table):
    n = len(table)
    return all(
        leq[table[b][a]][table[b][a2]] and leq[table[a][b]][table[a2][b]]
        for a in range(n)
        for a2 in range(n)
        if leq[a][a2]
        for b in range(n)
    )


@given(st.integers(0, (1 << 9) - 1))
def test_posetal_validates_iff_order_is_a_monotone_preorder(mask):
    table = [[max(a, b) for a in range(3)] for b in range(3)]
    leq = oracles.relation_matrix(mask, 3)
    X = PosetalTwoCategory(1, [(0, 0)] * 3, [0], table, leq)
    expected = oracles.is_preorder(leq) and _monotone(leq, table)
    assert validate_2category(X).ok == expected

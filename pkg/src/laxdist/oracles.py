"""Brute-force oracles that never touch the 2-category machinery.

Relations on ``{0..n-1}`` are boolean matrices; ``compose(r, s)`` is "first r,
then s". These are what the generated instances are checked against.
"""

import itertools

import numpy as np


def relation_matrix(mask: int, n: int) -> np.ndarray:
    bits = [(mask >> k) & 1 for k in range(n * n)]
    return np.array(bits, dtype=bool).reshape(n, n)


def relation_mask(m: np.ndarray) -> int:
    flat = np.asarray(m, dtype=bool).reshape(-1)
    return int(sum(1 << k for k, b in enumerate(flat) if b))


def compose(r: np.ndarray, s: np.ndarray) -> np.ndarray:
    """Relational composite ``r ; s``: pairs (i, k) with i r j s k."""
    return (r.astype(np.int64) @ s.astype(np.int64)) > 0


def included(r: np.ndarray, s: np.ndarray) -> bool:
    return bool(np.all(~r | s))


def is_reflexive(r):
    return bool(np.all(np.diag(r)))


def is_transitive(r):
    return included(compose(r, r), r)


def is_preorder(r):
    return is_reflexive(r) and is_transitive(r)


def all_relations(n):
    for mask in range(1 << (n * n)):
        yield relation_matrix(mask, n)


def preorders(n):
    """Masks of every preorder on an n-element set, by exhaustive scan."""
    return [relation_mask(r) for r in all_relations(n) if is_preorder(r)]


def composite_law_exists(s_mask, t_mask, n):
    """A distributive law S T => T S exists in Rel iff T;S contains S;T.

    Read in applicative order: ``S T`` means apply T first, so as a relational
    composite it is ``T ; S``.
    """
    S, T = relation_matrix(s_mask, n), relation_matrix(t_mask, n)
    return included(compose(T, S), compose(S, T))


def composite_relation(s_mask, t_mask, n):
    """The underlying relation of the composite monad ``T S`` (S first)."""
    S, T = relation_matrix(s_mask, n), relation_matrix(t_mask, n)
    return relation_mask(compose(S, T))


def ordered_monoid_monads(op, carrier, leq, unit):
    """Elements t with t*t <= t and unit <= t."""
    return [t for t in carrier if leq(op(t, t), t) and leq(unit, t)]


def is_commutative(table):
    n = len(table)
    return all(table[a][b] == table[b][a] for a in range(n) for b in range(n))


def is_monoid_table(table):
    n = len(table)
    assoc = all(
        table[table[a][b]][c] == table[a][table[b][c]]
        for a, b, c in itertools.product(range(n), repeat=3)
    )
    unit = any(all(table[e][x] == x == table[x][e] for x in range(n)) for e in range(n))
    return assoc and unit


def monoid_tables(n):
    """All monoid tables on ``{0..n-1}`` with unit 0, vectorised search."""
    if n == 1:
        return [[[0]]]
    free = (n - 1) * (n - 1)
    # every assignment of the non-unit products
    grid = np.array(list(itertools.product(range(n), repeat=free)), dtype=np.int64)
    m = len(grid)
    tables = np.zeros((m, n, n), dtype=np.int64)
    tables[:, 0, :] = np.arange(n)
    tables[:, :, 0] = np.arange(n)
    tables[:, 1:, 1:] = grid.reshape(m, n - 1, n - 1)
    rows = np.arange(m)[:, None]
    ok = np.ones(m, dtype=bool)
    for a, b, c in itertools.product(range(1, n), repeat=3):
        ab = tables[:, a, b]
        bc = tables[:, b, c]
        left = tables[rows[:, 0], ab, c]
        right = tables[rows[:, 0], a, bc]
        ok &= left == right
    return [t.tolist() for t in tables[ok]]

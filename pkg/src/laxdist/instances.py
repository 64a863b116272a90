"""Deterministic generators of small 2-categories.

Generated categories are cached, so asking twice for ``rel_2category(2)``
returns the same object (functors compare their domains by identity).
"""

from __future__ import annotations

import functools
import operator
import re
from typing import Callable, Optional

import numpy as np

from .core2 import (
    PosetalTwoCategory,
    StructuralError,
    TabledTwoCategory,
    TwoCategory,
    product,
    terminal_2category,
)

MAX_REL = 3


@functools.lru_cache(maxsize=None)
def rel_2category(n: int, allow_large: bool = False) -> PosetalTwoCategory:
    """Relations on an n-element set, ordered by inclusion (one object).

    The 1-cell with id ``m`` is the relation whose bit ``i * n + j`` says
    whether ``(i, j)`` is related. ``comp1(s, r)`` is "first r, then s".
    """
    if n < 1:
        raise ValueError("rel_2category needs n >= 1")
    if n > MAX_REL and not allow_large:
        raise ValueError(f"rel_2category({n}) exceeds the size guardrail n <= {MAX_REL}")
    count = 1 << (n * n)
    masks = np.arange(count, dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(n * n)) & 1).astype(np.int64).reshape(count, n, n)
    # comp[s, r] = r ; s as a boolean matrix product
    weights = (1 << np.arange(n * n, dtype=np.int64)).reshape(n, n)
    comp = np.empty((count, count), dtype=np.int64)
    for s in range(count):
        prod = np.einsum("rij,jk->rik", bits, bits[s]) > 0
        comp[s] = (prod * weights).sum(axis=(1, 2))
    leq = (masks[:, None] & ~masks[None, :]) == 0
    identity = int(sum(1 << (i * n + i) for i in range(n)))
    return PosetalTwoCategory(
        n_objects=1,
        one_cells=[(0, 0)] * count,
        id1=[identity],
        comp1=comp,
        leq=leq,
        name=f"rel({n})",
    )


_NAMED_OPS = {
    "max": lambda top: max,
    "min": lambda top: min,
    "tadd": lambda top: (lambda a, b: min(a + b, top)),
    "truncated-add": lambda top: (lambda a, b: min(a + b, top)),
    "add": lambda top: operator.add,
    "mul": lambda top: operator.mul,
    "xor": lambda top: operator.xor,
}


def _find_unit(carrier, op):
    for e in carrier:
        if all(op(e, x) == x == op(x, e) for x in carrier):
            return e
    return None


def ordered_monoid_delooping(
    op,
    carrier,
    order: Optional[Callable] = None,
    name: Optional[str] = None,
) -> PosetalTwoCategory:
    """One object; 1-cells are the carrier, 2-cells ``a => b`` iff ``a <= b``.

    ``op`` is a binary callable or one of ``max``, ``min``, ``xor``, ``tadd``
    (addition truncated at the top of the carrier). ``order`` defaults to the
    natural order; ``"chaotic"`` relates everything. ``comp1(b, a)`` is
    ``op(b, a)``. Raises ``ValueError`` unless ``op`` is associative, unital
    and monotone for the order.
    """
    carrier = list(carrier)
    label = op if isinstance(op, str) else getattr(op, "__name__", "op")
    if isinstance(op, str):
        if op not in _NAMED_OPS:
            raise ValueError(f"unknown monoid operation {op!r}")
        op = _NAMED_OPS[op](max(carrier))
    if order is None:
        order = operator.le
    elif order == "chaotic":
        order = lambda a, b: True  # noqa: E731
    index = {x: i for i, x in enumerate(carrier)}
    n = len(carrier)
    table = [[0] * n for _ in range(n)]
    for i, b in enumerate(carrier):
        for j, a in enumerate(carrier):
            c = op(b, a)
            if c not in index:
                raise ValueError(f"op({b}, {a}) = {c} leaves the carrier")
            table[i][j] = index[c]
    for a in carrier:
        for b in carrier:
            for c in carrier:
                if op(op(a, b), c) != op(a, op(b, c)):
                    raise ValueError(f"op is not associative at {(a, b, c)}")
    unit = _find_unit(carrier, op)
    if unit is None:
        raise ValueError("op has no unit element")
    leq = [[bool(order(a, b)) for b in carrier] for a in carrier]
    for a in carrier:
        for a2 in carrier:
            if not order(a, a2):
                continue
            for b in carrier:
                if not (order(op(b, a), op(b, a2)) and order(op(a, b), op(a2, b))):
                    raise ValueError(f"op is not monotone: {a} <= {a2} but not after composing with {b}")
    return PosetalTwoCategory(
        n_objects=1,
        one_cells=[(0, 0)] * n,
        id1=[index[unit]],
        comp1=table,
        leq=leq,
        name=name or f"ordered_monoid({label},{carrier})",
    )


@functools.lru_cache(maxsize=None)
def ordered_monoid(op: str, k: int, order: Optional[str] = None) -> PosetalTwoCategory:
    """``ordered_monoid_delooping`` on ``{0..k}`` with a named operation."""
    return ordered_monoid_delooping(
        op, range(k + 1), order=order, name=f"ordered_monoid({op},{k})" + (f",{order}" if order else "")
    )


def discrete_monoid_delooping(table, name: Optional[str] = None) -> TabledTwoCategory:
    """One object, 1-cells the monoid elements, identity 2-cells only.

    ``table[b][a]`` is ``comp1(b, a)``.
    """
    return _discrete_monoid(tuple(tuple(int(x) for x in row) for row in table), name)


@functools.lru_cache(maxsize=None)
def _discrete_monoid(table, name):
    n = len(table)
    if any(len(row) != n for row in table):
        raise StructuralError("monoid table must be square")
    unit = _find_unit(range(n), lambda b, a: table[b][a])
    if unit is None:
        raise ValueError("table has no unit element")
    return TabledTwoCategory(
        n_objects=1,
        one_cells=[(0, 0)] * n,
        id1=[unit],
        comp1=table,
        two_cells=[(f, f) for f in range(n)],
        id2=list(range(n)),
        vcomp=[[b if b == a else -1 for a in range(n)] for b in range(n)],
        hcomp=[[table[b][a] for a in range(n)] for b in range(n)],
        locally_posetal=True,
        name=name or f"discrete_monoid({[list(r) for r in table]})",
    )


@functools.lru_cache(maxsize=None)
def cyclic_double_delooping(k: int) -> TabledTwoCategory:
    """One object, one 1-cell, and the 2-cells ``Z/k``.

    Vertical and horizontal composition are both addition mod k. Taking a
    product with this category attaches a ``Z/k`` label to every 2-cell,
    which gives non-posetal instances whose equations are not automatic.
    """
    return TabledTwoCategory(
        n_objects=1,
        one_cells=[(0, 0)],
        id1=[0],
        comp1=[[0]],
        two_cells=[(0, 0)] * k,
        id2=[0],
        vcomp=[[(a + b) % k for a in range(k)] for b in range(k)],
        hcomp=[[(a + b) % k for a in range(k)] for b in range(k)],
        locally_posetal=(k == 1),
        name=f"Z{k}",
    )


@functools.lru_cache(maxsize=None)
def chain(n: int) -> TabledTwoCategory:
    """The poset ``0 < 1 < ... < n-1`` as a 2-category with identity 2-cells.

    The 1-cell ``i -> j`` (``i <= j``) has id ``i * n + j - i * (i + 1) // 2``;
    2-cells share the ids of their 1-cells.
    """
    if n < 1:
        raise ValueError("chain needs at least one object")
    cells = [(i, j) for i in range(n) for j in range(i, n)]
    index = {c: k for k, c in enumerate(cells)}
    m = len(cells)
    comp = [[-1] * m for _ in range(m)]
    for g, (j, k) in enumerate(cells):
        for f, (i, j2) in enumerate(cells):
            if j2 == j:
                comp[g][f] = index[(i, k)]
    return TabledTwoCategory(
        n_objects=n,
        one_cells=cells,
        id1=[index[(i, i)] for i in range(n)],
        comp1=comp,
        two_cells=[(k, k) for k in range(m)],
        id2=list(range(m)),
        vcomp=[[b if b == a else -1 for a in range(m)] for b in range(m)],
        hcomp=comp,
        locally_posetal=True,
        name=f"chain({n})",
    )


def labelled(X: TwoCategory, k: int):
    """``X`` with every 2-cell carrying a ``Z/k`` label."""
    return product(X, cyclic_double_delooping(k))


# named generators, as used by the document format ----------------------

Z2_TABLE = [[0, 1], [1, 0]]
LEFT_ZERO_WITH_UNIT = [[0, 1, 2], [1, 1, 1], [2, 2, 2]]


def _parse_args(text):
    out = []
    depth = 0
    cur = ""
    for ch in text:
        if ch == "," and depth == 0:
            out.append(cur.strip())
            cur = ""
            continue
        depth += ch in "([{"
        depth -= ch in ")]}"
        cur += ch
    if cur.strip():
        out.append(cur.strip())
    return out


def from_generator(expr: str, resolve: Optional[Callable] = None) -> TwoCategory:
    """Build a category from an expression such as ``rel(2)``,
    ``ordered_monoid(tadd,2)``, ``discrete_monoid([[0,1],[1,0]])``,
    ``labelled(rel(1),2)`` or ``product(a,b)``.

    ``resolve`` maps bare names to categories (used for product arguments).
    """
    import json

    expr = expr.strip()
    if expr == "terminal":
        return terminal_2category()
    m = re.fullmatch(r"([a-z_]+)\((.*)\)", expr, flags=re.S)
    if not m:
        if resolve is not None:
            return resolve(expr)
        raise ValueError(f"unknown generator {expr!r}")
    head, args = m.group(1), _parse_args(m.group(2))
    if head == "rel":
        return rel_2category(int(args[0]))
    if head == "ordered_monoid":
        order = args[2] if len(args) > 2 else None
        return ordered_monoid(args[0], int(args[1]), order)
    if head == "discrete_monoid":
        return discrete_monoid_delooping(json.loads(args[0]))
    if head == "chain":
        return chain(int(args[0]))
    if head in ("cyclic", "Z"):
        return cyclic_double_delooping(int(args[0]))
    if head == "labelled":
        return labelled(from_generator(args[0], resolve), int(args[1]))
    if head == "product":
        return product(from_generator(args[0], resolve), from_generator(args[1], resolve))
    raise ValueError(f"unknown generator {head!r}")


def monads_of(X: TwoCategory, budget=None) -> list:
    """All lax functors ``terminal -> X``, paired with their monad views."""
    from .functors import enumerate_lax_functors, monad_view

    return [(F, monad_view(F)) for F in enumerate_lax_functors(terminal_2category(), X, budget)]

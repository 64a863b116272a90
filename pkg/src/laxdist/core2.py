"""Finite strict 2-categories given by explicit composition tables.

Cells are dense integer ids. Composition follows the applicative convention:
``comp1(g, f)`` is "first f, then g" and ``hcomp(b, a)`` whiskers ``a`` (on
the earlier 1-cell) with ``b`` (on the later one). ``vcomp(b, a)`` is "first
a, then b".

Three concrete representations share one accessor interface:

* :class:`TabledTwoCategory` stores every table densely.
* :class:`PosetalTwoCategory` stores the 1-cell tables and a preorder on
  parallel 1-cells; the 2-cells are the comparable pairs and their
  compositions are forced. Used for relations and ordered monoids, where the
  2-cell tables would not fit in memory.
* :class:`ProductTwoCategory` computes componentwise from its two factors.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

import numpy as np

from .report import (
    StructuralError,
    ValidationReport,
    as_budget,
    first_witness,
)

AXIOMS_2CAT = (
    "typing",
    "unit1",
    "assoc1",
    "parallel-endpoints",
    "unit2",
    "assoc2",
    "closure",
    "hcomp-functorial",
    "hcomp-unit",
    "hcomp-assoc",
    "interchange",
    "posetal-uniqueness",
)


class NotComposable(StructuralError):
    pass


class TwoCategory:
    """Accessor interface shared by all representations."""

    name: str = ""
    locally_posetal: bool = False

    # sizes -------------------------------------------------------------
    n_objects: int
    n_one_cells: int
    n_two_cells: int

    def src1(self, f: int) -> int:
        raise NotImplementedError

    def tgt1(self, f: int) -> int:
        raise NotImplementedError

    def id1(self, x: int) -> int:
        raise NotImplementedError

    def comp1(self, g: int, f: int) -> int:
        raise NotImplementedError

    def src2(self, a: int) -> int:
        raise NotImplementedError

    def tgt2(self, a: int) -> int:
        raise NotImplementedError

    def id2(self, f: int) -> int:
        raise NotImplementedError

    def vcomp(self, b: int, a: int) -> int:
        raise NotImplementedError

    def hcomp(self, b: int, a: int) -> int:
        raise NotImplementedError

    def hom1(self, x: int, y: int) -> tuple:
        """1-cells ``x -> y`` in increasing id order."""
        raise NotImplementedError

    def hom2(self, f: int, g: int) -> tuple:
        """2-cells ``f => g`` in increasing id order."""
        raise NotImplementedError

    # derived -----------------------------------------------------------
    def composable1(self, g, f):
        return self.tgt1(f) == self.src1(g)

    def c1(self, *fs):
        """``c1(h, g, f) == comp1(h, comp1(g, f))``."""
        return functools.reduce(lambda acc, f: self.comp1(acc, f), fs)

    def vc(self, *cells):
        """``vc(c, b, a)`` is ``a`` then ``b`` then ``c``."""
        return functools.reduce(lambda acc, a: self.vcomp(acc, a), cells)

    def hc(self, *cells):
        """Horizontal composite, outermost (latest) cell first."""
        return functools.reduce(lambda acc, a: self.hcomp(acc, a), cells)

    def one_cell_list(self):
        return [(self.src1(f), self.tgt1(f)) for f in range(self.n_one_cells)]

    def two_cell_list(self):
        return [(self.src2(a), self.tgt2(a)) for a in range(self.n_two_cells)]

    def endpoints2(self, a):
        return self.src2(a), self.tgt2(a)

    def inverse2(self, a: int) -> Optional[int]:
        """Two-sided vertical inverse of ``a``, found by search in its hom."""
        f, g = self.src2(a), self.tgt2(a)
        idf, idg = self.id2(f), self.id2(g)
        for b in self.hom2(g, f):
            if self.vcomp(b, a) == idf and self.vcomp(a, b) == idg:
                return b
        return None

    def is_invertible2(self, a: int) -> bool:
        return self.inverse2(a) is not None

    # materialised arrays used by the validator -------------------------
    @functools.cached_property
    def arrays1(self):
        n1 = self.n_one_cells
        s1 = np.array([self.src1(f) for f in range(n1)], dtype=np.int64)
        t1 = np.array([self.tgt1(f) for f in range(n1)], dtype=np.int64)
        i1 = np.array([self.id1(x) for x in range(self.n_objects)], dtype=np.int64)
        return s1, t1, i1, self._comp1_array()

    def _comp1_array(self):
        n1 = self.n_one_cells
        out = np.full((n1, n1), -1, dtype=np.int64)
        for g in range(n1):
            for f in range(n1):
                if self.composable1(g, f):
                    out[g, f] = self.comp1(g, f)
        return out

    @functools.cached_property
    def arrays2(self):
        n1, n2 = self.n_one_cells, self.n_two_cells
        s2 = np.array([self.src2(a) for a in range(n2)], dtype=np.int64)
        t2 = np.array([self.tgt2(a) for a in range(n2)], dtype=np.int64)
        i2 = np.array([self.id2(f) for f in range(n1)], dtype=np.int64)
        return s2, t2, i2, self._vcomp_array(), self._hcomp_array()

    def _vcomp_array(self):
        n2 = self.n_two_cells
        out = np.full((n2, n2), -1, dtype=np.int64)
        for b in range(n2):
            for a in range(n2):
                if self.src2(b) == self.tgt2(a):
                    out[b, a] = self.vcomp(b, a)
        return out

    def _hcomp_array(self):
        n2 = self.n_two_cells
        out = np.full((n2, n2), -1, dtype=np.int64)
        for b in range(n2):
            for a in range(n2):
                if self.composable1(self.src2(b), self.src2(a)):
                    out[b, a] = self.hcomp(b, a)
        return out

    def leq_array(self):
        """Boolean ``[f, g]`` table: is there a 2-cell ``f => g``."""
        n1 = self.n_one_cells
        out = np.zeros((n1, n1), dtype=bool)
        for a in range(self.n_two_cells):
            out[self.src2(a), self.tgt2(a)] = True
        return out

    def __repr__(self):
        kind = type(self).__name__
        label = f" {self.name}" if self.name else ""
        return (
            f"<{kind}{label}: {self.n_objects} objects, {self.n_one_cells} 1-cells, "
            f"{self.n_two_cells} 2-cells>"
        )


def _check_index(value, bound, what):
    if not (0 <= value < bound):
        raise StructuralError(f"{what}: id {value} out of range [0, {bound})")


class TabledTwoCategory(TwoCategory):
    """All tables stored densely; ``-1`` marks an undefined composite."""

    def __init__(
        self,
        n_objects: int,
        one_cells: Sequence,
        id1: Sequence,
        comp1,
        two_cells: Sequence,
        id2: Sequence,
        vcomp,
        hcomp,
        locally_posetal: bool = False,
        name: str = "",
    ):
        self.name = name
        self.n_objects = int(n_objects)
        self.one_cells = tuple((int(s), int(t)) for s, t in one_cells)
        self.n_one_cells = len(self.one_cells)
        self._id1 = tuple(int(x) for x in id1)
        self._comp1 = [list(map(int, row)) for row in comp1]
        self.two_cells = tuple((int(s), int(t)) for s, t in two_cells)
        self.n_two_cells = len(self.two_cells)
        self._id2 = tuple(int(x) for x in id2)
        self._vcomp = [list(map(int, row)) for row in vcomp]
        self._hcomp = [list(map(int, row)) for row in hcomp]
        self.locally_posetal = bool(locally_posetal)
        self._check_shapes()
        homs1: dict = {}
        for f, st in enumerate(self.one_cells):
            homs1.setdefault(st, []).append(f)
        self._hom1 = {k: tuple(v) for k, v in homs1.items()}
        homs2: dict = {}
        for a, st in enumerate(self.two_cells):
            homs2.setdefault(st, []).append(a)
        self._hom2 = {k: tuple(v) for k, v in homs2.items()}

    def _check_shapes(self):
        n0, n1, n2 = self.n_objects, self.n_one_cells, self.n_two_cells
        for f, (s, t) in enumerate(self.one_cells):
            _check_index(s, n0, f"src of 1-cell {f}")
            _check_index(t, n0, f"tgt of 1-cell {f}")
        if len(self._id1) != n0:
            raise StructuralError("id1 must have one entry per object")
        for x in self._id1:
            _check_index(x, n1, "id1")
        if len(self._comp1) != n1 or any(len(r) != n1 for r in self._comp1):
            raise StructuralError("comp1 must be an n1 x n1 table")
        for a, (s, t) in enumerate(self.two_cells):
            _check_index(s, n1, f"src of 2-cell {a}")
            _check_index(t, n1, f"tgt of 2-cell {a}")
        if len(self._id2) != n1:
            raise StructuralError("id2 must have one entry per 1-cell")
        for x in self._id2:
            _check_index(x, n2, "id2")
        for label, table in (("vcomp", self._vcomp), ("hcomp", self._hcomp)):
            if len(table) != n2 or any(len(r) != n2 for r in table):
                raise StructuralError(f"{label} must be an n2 x n2 table")
        for label, table, bound in (
            ("comp1", self._comp1, n1),
            ("vcomp", self._vcomp, n2),
            ("hcomp", self._hcomp, n2),
        ):
            for row in table:
                for v in row:
                    if v < -1 or v >= bound:
                        raise StructuralError(f"{label}: entry {v} out of range")

    def src1(self, f):
        return self.one_cells[f][0]

    def tgt1(self, f):
        return self.one_cells[f][1]

    def id1(self, x):
        return self._id1[x]

    def comp1(self, g, f):
        r = self._comp1[g][f]
        if r < 0:
            raise NotComposable(f"comp1({g}, {f}) undefined")
        return r

    def src2(self, a):
        return self.two_cells[a][0]

    def tgt2(self, a):
        return self.two_cells[a][1]

    def id2(self, f):
        return self._id2[f]

    def vcomp(self, b, a):
        r = self._vcomp[b][a]
        if r < 0:
            raise NotComposable(f"vcomp({b}, {a}) undefined")
        return r

    def hcomp(self, b, a):
        r = self._hcomp[b][a]
        if r < 0:
            raise NotComposable(f"hcomp({b}, {a}) undefined")
        return r

    def hom1(self, x, y):
        return self._hom1.get((x, y), ())

    def hom2(self, f, g):
        return self._hom2.get((f, g), ())

    def _comp1_array(self):
        return np.array(self._comp1, dtype=np.int64).reshape(self.n_one_cells, self.n_one_cells)

    def _vcomp_array(self):
        return np.array(self._vcomp, dtype=np.int64).reshape(self.n_two_cells, self.n_two_cells)

    def _hcomp_array(self):
        return np.array(self._hcomp, dtype=np.int64).reshape(self.n_two_cells, self.n_two_cells)

    def tables(self) -> dict:
        """Constructor keyword arguments; handy for building corrupted copies."""
        return dict(
            n_objects=self.n_objects,
            one_cells=list(self.one_cells),
            id1=list(self._id1),
            comp1=[list(r) for r in self._comp1],
            two_cells=list(self.two_cells),
            id2=list(self._id2),
            vcomp=[list(r) for r in self._vcomp],
            hcomp=[list(r) for r in self._hcomp],
            locally_posetal=self.locally_posetal,
            name=self.name,
        )


class PosetalTwoCategory(TwoCategory):
    """1-cell tables plus a preorder ``leq`` on each hom-set.

    There is exactly one 2-cell ``f => g`` for every parallel pair with
    ``leq[f][g]``; 2-cells are numbered in lexicographic order of ``(f, g)``.
    """

    locally_posetal = True

    def __init__(self, n_objects, one_cells, id1, comp1, leq, name=""):
        self.name = name
        self.n_objects = int(n_objects)
        self.one_cells = tuple((int(s), int(t)) for s, t in one_cells)
        self.n_one_cells = n1 = len(self.one_cells)
        self._id1 = tuple(int(x) for x in id1)
        comp1 = np.asarray(comp1, dtype=np.int64)
        if comp1.shape != (n1, n1):
            raise StructuralError("comp1 must be an n1 x n1 table")
        if comp1.size and (comp1.min() < -1 or comp1.max() >= n1):
            raise StructuralError("comp1 entry out of range")
        self._comp1_np = comp1
        self._comp1 = comp1.tolist()
        leq = np.asarray(leq, dtype=bool)
        if leq.shape != (n1, n1):
            raise StructuralError("leq must be an n1 x n1 boolean table")
        for f, (s, t) in enumerate(self.one_cells):
            _check_index(s, self.n_objects, f"src of 1-cell {f}")
            _check_index(t, self.n_objects, f"tgt of 1-cell {f}")
        if len(self._id1) != self.n_objects:
            raise StructuralError("id1 must have one entry per object")
        for x in self._id1:
            _check_index(x, n1, "id1")
        s1 = np.array([s for s, _ in self.one_cells], dtype=np.int64)
        t1 = np.array([t for _, t in self.one_cells], dtype=np.int64)
        parallel = (s1[:, None] == s1[None, :]) & (t1[:, None] == t1[None, :])
        self._leq = leq & parallel
        fs, gs = np.nonzero(self._leq)
        self.two_cells = tuple(zip(fs.tolist(), gs.tolist()))
        self.n_two_cells = len(self.two_cells)
        cell_of = np.full((n1, n1), -1, dtype=np.int64)
        cell_of[fs, gs] = np.arange(len(fs))
        self._cell_of_np = cell_of
        self._cell_of = cell_of.tolist()
        self._hom1: dict = {}
        for f, st in enumerate(self.one_cells):
            self._hom1.setdefault(st, []).append(f)

    def src1(self, f):
        return self.one_cells[f][0]

    def tgt1(self, f):
        return self.one_cells[f][1]

    def id1(self, x):
        return self._id1[x]

    def comp1(self, g, f):
        r = self._comp1[g][f]
        if r < 0:
            raise NotComposable(f"comp1({g}, {f}) undefined")
        return r

    def src2(self, a):
        return self.two_cells[a][0]

    def tgt2(self, a):
        return self.two_cells[a][1]

    def leq(self, f, g) -> bool:
        return self._cell_of[f][g] >= 0

    def cell(self, f, g) -> int:
        """The unique 2-cell ``f => g``."""
        r = self._cell_of[f][g]
        if r < 0:
            raise NotComposable(f"no 2-cell {f} => {g}")
        return r

    def id2(self, f):
        return self.cell(f, f)

    def vcomp(self, b, a):
        if self.two_cells[b][0] != self.two_cells[a][1]:
            raise NotComposable(f"vcomp({b}, {a}) undefined")
        return self.cell(self.two_cells[a][0], self.two_cells[b][1])

    def hcomp(self, b, a):
        (f, g), (f2, g2) = self.two_cells[a], self.two_cells[b]
        return self.cell(self.comp1(f2, f), self.comp1(g2, g))

    def hom1(self, x, y):
        return tuple(self._hom1.get((x, y), ()))

    def hom2(self, f, g):
        r = self._cell_of[f][g]
        return () if r < 0 else (r,)

    def _comp1_array(self):
        return self._comp1_np

    def leq_array(self):
        return self._leq


class ProductTwoCategory(TwoCategory):
    """Componentwise product; the cell ``(x, y)`` has id ``x * |Y| + y``."""

    def __init__(self, left: TwoCategory, right: TwoCategory):
        self.left, self.right = left, right
        self.name = f"{left.name or '?'} x {right.name or '?'}"
        self.n_objects = left.n_objects * right.n_objects
        self.n_one_cells = left.n_one_cells * right.n_one_cells
        self.n_two_cells = left.n_two_cells * right.n_two_cells
        self.locally_posetal = left.locally_posetal and right.locally_posetal
        self._o, self._1, self._2 = right.n_objects, right.n_one_cells, right.n_two_cells

    def __eq__(self, other):
        return (
            isinstance(other, ProductTwoCategory)
            and self.left is other.left
            and self.right is other.right
        )

    def __hash__(self):
        return hash((id(self.left), id(self.right)))

    # pairing -----------------------------------------------------------
    def obj(self, x, y):
        return x * self._o + y

    def one(self, f, g):
        return f * self._1 + g

    def two(self, a, b):
        return a * self._2 + b

    def split_obj(self, x):
        return divmod(x, self._o)

    def split1(self, f):
        return divmod(f, self._1)

    def split2(self, a):
        return divmod(a, self._2)

    # accessors ---------------------------------------------------------
    def src1(self, f):
        f1, f2 = divmod(f, self._1)
        return self.left.src1(f1) * self._o + self.right.src1(f2)

    def tgt1(self, f):
        f1, f2 = divmod(f, self._1)
        return self.left.tgt1(f1) * self._o + self.right.tgt1(f2)

    def id1(self, x):
        x1, x2 = divmod(x, self._o)
        return self.left.id1(x1) * self._1 + self.right.id1(x2)

    def comp1(self, g, f):
        g1, g2 = divmod(g, self._1)
        f1, f2 = divmod(f, self._1)
        return self.left.comp1(g1, f1) * self._1 + self.right.comp1(g2, f2)

    def src2(self, a):
        a1, a2 = divmod(a, self._2)
        return self.left.src2(a1) * self._1 + self.right.src2(a2)

    def tgt2(self, a):
        a1, a2 = divmod(a, self._2)
        return self.left.tgt2(a1) * self._1 + self.right.tgt2(a2)

    def id2(self, f):
        f1, f2 = divmod(f, self._1)
        return self.left.id2(f1) * self._2 + self.right.id2(f2)

    def vcomp(self, b, a):
        b1, b2 = divmod(b, self._2)
        a1, a2 = divmod(a, self._2)
        return self.left.vcomp(b1, a1) * self._2 + self.right.vcomp(b2, a2)

    def hcomp(self, b, a):
        b1, b2 = divmod(b, self._2)
        a1, a2 = divmod(a, self._2)
        return self.left.hcomp(b1, a1) * self._2 + self.right.hcomp(b2, a2)

    def hom1(self, x, y):
        x1, x2 = divmod(x, self._o)
        y1, y2 = divmod(y, self._o)
        return tuple(
            f * self._1 + g
            for f in self.left.hom1(x1, y1)
            for g in self.right.hom1(x2, y2)
        )

    def hom2(self, f, g):
        f1, f2 = divmod(f, self._1)
        g1, g2 = divmod(g, self._1)
        return tuple(
            a * self._2 + b
            for a in self.left.hom2(f1, g1)
            for b in self.right.hom2(f2, g2)
        )

    def _comp1_array(self):
        _, _, _, cl = self.left.arrays1
        _, _, _, cr = self.right.arrays1
        n = self._1
        out = cl[:, None, :, None] * n + cr[None, :, None, :]
        undefined = (cl[:, None, :, None] < 0) | (cr[None, :, None, :] < 0)
        out = np.where(undefined, -1, out)
        return out.reshape(self.n_one_cells, self.n_one_cells)

    def _pair_table(self, name):
        _, _, _, vl, hl = self.left.arrays2
        _, _, _, vr, hr = self.right.arrays2
        tl, tr = (vl, vr) if name == "v" else (hl, hr)
        n = self._2
        out = tl[:, None, :, None] * n + tr[None, :, None, :]
        undefined = (tl[:, None, :, None] < 0) | (tr[None, :, None, :] < 0)
        out = np.where(undefined, -1, out)
        return out.reshape(self.n_two_cells, self.n_two_cells)

    def _vcomp_array(self):
        return self._pair_table("v")

    def _hcomp_array(self):
        return self._pair_table("h")

    def leq_array(self):
        lx, ly = self.left.leq_array(), self.right.leq_array()
        out = lx[:, None, :, None] & ly[None, :, None, :]
        return out.reshape(self.n_one_cells, self.n_one_cells)


# ----------------------------------------------------------------------
# constructors


@functools.lru_cache(maxsize=None)
def terminal_2category() -> TabledTwoCategory:
    """One object, one 1-cell and one 2-cell (all identities)."""
    return TabledTwoCategory(
        n_objects=1,
        one_cells=[(0, 0)],
        id1=[0],
        comp1=[[0]],
        two_cells=[(0, 0)],
        id2=[0],
        vcomp=[[0]],
        hcomp=[[0]],
        locally_posetal=True,
        name="terminal",
    )


@functools.lru_cache(maxsize=None)
def _cached_product(left, right):
    return ProductTwoCategory(left, right)


def product(left: TwoCategory, right: TwoCategory) -> ProductTwoCategory:
    """Componentwise product; the same pair of factors gives the same object."""
    return _cached_product(left, right)


def tabled(X: TwoCategory, name: Optional[str] = None) -> TabledTwoCategory:
    """Materialise any representation as dense tables."""
    if isinstance(X, TabledTwoCategory) and name is None:
        return X
    s1, t1, i1, c1 = X.arrays1
    s2, t2, i2, v, h = X.arrays2
    return TabledTwoCategory(
        n_objects=X.n_objects,
        one_cells=list(zip(s1.tolist(), t1.tolist())),
        id1=i1.tolist(),
        comp1=c1.tolist(),
        two_cells=list(zip(s2.tolist(), t2.tolist())),
        id2=i2.tolist(),
        vcomp=v.tolist(),
        hcomp=h.tolist(),
        locally_posetal=X.locally_posetal,
        name=X.name if name is None else name,
    )


def dual(X: TwoCategory, one: bool = True, two: bool = False) -> TabledTwoCategory:
    """``X^op`` (1-cells reversed) and/or ``X^co`` (2-cells reversed).

    Lax transformations between lax functors into ``Y`` are the oplax
    transformations for the ``op`` duals, which is how the lax variant of
    every construction here is obtained.
    """
    T = tabled(X)
    kw = T.tables()
    if one:
        kw["one_cells"] = [(t, s) for s, t in kw["one_cells"]]
        kw["comp1"] = [list(r) for r in zip(*kw["comp1"])]
        kw["hcomp"] = [list(r) for r in zip(*kw["hcomp"])]
    if two:
        kw["two_cells"] = [(t, s) for s, t in kw["two_cells"]]
        kw["vcomp"] = [list(r) for r in zip(*kw["vcomp"])]
    suffix = ("^op" if one else "") + ("^co" if two else "")
    kw["name"] = (X.name or "?") + suffix
    return TabledTwoCategory(**kw)


@dataclass(frozen=True)
class HomCategory:
    objects: tuple
    morphisms: tuple
    src: Callable
    tgt: Callable
    compose: Callable
    identity: Callable


def hom_category(X: TwoCategory, a: int, b: int) -> HomCategory:
    """The category of 1-cells ``a -> b`` and the 2-cells between them."""
    _check_index(a, X.n_objects, "object")
    _check_index(b, X.n_objects, "object")
    objs = X.hom1(a, b)
    morphs = tuple(c for f in objs for g in objs for c in X.hom2(f, g))
    return HomCategory(
        objects=objs,
        morphisms=tuple(sorted(morphs)),
        src=X.src2,
        tgt=X.tgt2,
        compose=X.vcomp,
        identity=X.id2,
    )


# ----------------------------------------------------------------------
# validation


def _estimate(X: TwoCategory) -> int:
    s1, t1, _, _ = X.arrays1
    n0 = X.n_objects
    H = np.zeros((n0, n0), dtype=np.float64)
    np.add.at(H, (s1, t1), 1)
    triples1 = float((H @ H @ H).sum())
    n1 = X.n_one_cells
    if X.locally_posetal and not isinstance(X, TabledTwoCategory):
        L = X.leq_array().astype(np.float64)
        per = float(L.sum())
        # transitivity triples and whiskering pairs
        return int(n1 * n1 + triples1 + float((L @ L).sum()) + 2 * per * n1)
    V = np.zeros((n1, n1), dtype=np.float64)
    s2 = np.array([X.src2(a) for a in range(X.n_two_cells)], dtype=np.int64)
    t2 = np.array([X.tgt2(a) for a in range(X.n_two_cells)], dtype=np.int64)
    np.add.at(V, (s2, t2), 1)
    vpairs = float((V @ V).sum())
    vtriples = float((V @ V @ V).sum())
    # horizontal pairs grouped by object endpoints of the underlying 1-cells
    per_hom = np.zeros((n0, n0), dtype=np.float64)
    np.add.at(per_hom, (s1[s2], t1[s2]), 1)
    hpairs = float((per_hom @ per_hom).sum())
    htriples = float((per_hom @ per_hom @ per_hom).sum())
    vp_hom = np.zeros((n0, n0), dtype=np.float64)
    VV = V @ V
    fs, gs = np.nonzero(VV)
    np.add.at(vp_hom, (s1[fs], t1[fs]), VV[fs, gs])
    interchange = float((vp_hom @ vp_hom).sum())
    n2 = X.n_two_cells
    return int(n1 * n1 + triples1 + n2 * n2 + vtriples + vpairs + hpairs + htriples + interchange)


def validate_2category(X: TwoCategory, budget=None, threads: int = 1) -> ValidationReport:
    """Scan every strict 2-category axiom and report the first witness of each.

    Witnesses are the lexicographically least failing id tuple. Raises
    :class:`StructuralError` for tables with entries where composition is
    undefined (or missing where it is defined) and :class:`BudgetExceeded`
    when the scan would exceed the budget.
    """
    budget = as_budget(budget)
    need = _estimate(X)
    budget.reserve(need, f"validate_2category({X.name or '?'})")
    report = ValidationReport(subject=f"2-category {X.name}".strip())
    _check_one_cells(X, report, threads)
    if X.locally_posetal and not isinstance(X, TabledTwoCategory):
        _check_posetal_two_cells(X, report, threads)
    else:
        _check_tabled_two_cells(X, report, threads)
    budget.spend(need)
    report.checks = need
    return report


def _first_true(mask) -> Optional[tuple]:
    idx = np.argwhere(mask)
    if len(idx) == 0:
        return None
    return tuple(int(v) for v in idx[0])


def _check_one_cells(X, report, threads):
    s1, t1, i1, C = X.arrays1
    n0, n1 = X.n_objects, X.n_one_cells
    composable = t1[None, :] == s1[:, None]  # [g, f]
    bad = composable != (C >= 0)
    w = _first_true(bad)
    if w is not None:
        g, f = w
        state = "missing" if composable[g, f] else "defined for a non-composable pair"
        raise StructuralError(f"comp1({g}, {f}) {state}")
    Cs = np.where(C >= 0, C, 0)
    bad = (C >= 0) & ((s1[Cs] != s1[None, :]) | (t1[Cs] != t1[:, None]))
    w = _first_true(bad)
    report.record("typing", w and ("comp1",) + w, "comp1 result has wrong endpoints", n1 * n1)
    if w is not None:
        return
    # unit1
    w = _first_true((s1[i1] != np.arange(n0)) | (t1[i1] != np.arange(n0)))
    if w is not None:
        report.record("unit1", ("object",) + w, "identity 1-cell has wrong endpoints", n0)
    else:
        f = np.arange(n1)
        right = C[f, i1[s1]] != f
        left = C[i1[t1], f] != f
        w = _first_true(right | left)
        report.record("unit1", w, "identity 1-cell is not a unit for comp1", 2 * n1)
    # assoc1: (h, g, f)
    gs, fs = np.nonzero(C >= 0)
    gf = C[gs, fs]

    def slab(h):
        ok_pairs = t1[gs] == s1[h]
        if not ok_pairs.any():
            return None
        g, f, x = gs[ok_pairs], fs[ok_pairs], gf[ok_pairs]
        left = C[C[h, g], f]
        right = C[h, x]
        bad = left != right
        if bad.any():
            k = int(np.argmax(bad))
            return (h, int(g[k]), int(f[k]))
        return None

    w = first_witness(range(n1), slab, threads)
    report.record("assoc1", w, "(h g) f != h (g f)")


def _check_tabled_two_cells(X, report, threads):
    s1, t1, i1, C = X.arrays1
    s2, t2, i2, V, H = X.arrays2
    n1, n2 = X.n_one_cells, X.n_two_cells
    cells = np.arange(n2)
    # parallel endpoints
    bad = (s1[s2] != s1[t2]) | (t1[s2] != t1[t2])
    w = _first_true(bad)
    report.record("parallel-endpoints", w, "2-cell between non-parallel 1-cells", n2)
    if w is not None:
        return
    # definedness of the partial tables is structural
    vdef = s2[:, None] == t2[None, :]  # [b, a]
    w = _first_true(vdef != (V >= 0))
    if w is not None:
        raise StructuralError(f"vcomp{w} {'missing' if vdef[w] else 'defined for non-composable pair'}")
    hdef = s1[s2][:, None] == t1[s2][None, :]
    w = _first_true(hdef != (H >= 0))
    if w is not None:
        raise StructuralError(f"hcomp{w} {'missing' if hdef[w] else 'defined for non-composable pair'}")
    Vs = np.where(V >= 0, V, 0)
    Hs = np.where(H >= 0, H, 0)
    sb, sa = np.broadcast_arrays(s2[:, None], s2[None, :])
    tb, ta = np.broadcast_arrays(t2[:, None], t2[None, :])
    bad_v = vdef & ((s2[Vs] != sa) | (t2[Vs] != tb))
    w = _first_true(bad_v)
    if w is not None:
        report.record("typing", ("vcomp",) + w, "vcomp result has wrong endpoints", n2 * n2)
        return
    Cst = C[np.where(hdef, sb, 0), np.where(hdef, sa, 0)]
    Ctt = C[np.where(hdef, tb, 0), np.where(hdef, ta, 0)]
    bad_h = hdef & ((s2[Hs] != Cst) | (t2[Hs] != Ctt))
    w = _first_true(bad_h)
    report.record("typing", w and ("hcomp",) + w, "hcomp result has wrong endpoints", n2 * n2)
    if w is not None:
        return
    # unit2
    f = np.arange(n1)
    w = _first_true((s2[i2] != f) | (t2[i2] != f))
    if w is not None:
        report.record("unit2", ("id2",) + w, "identity 2-cell has wrong endpoints", n1)
    else:
        bad = (V[cells, i2[s2]] != cells) | (V[i2[t2], cells] != cells)
        report.record("unit2", _first_true(bad), "identity 2-cell is not a unit for vcomp", 2 * n2)
    # assoc2 (c, b, a)
    bs, as_ = np.nonzero(vdef)
    ba = V[bs, as_]

    def slab_v(c):
        sel = t2[bs] == s2[c]
        if not sel.any():
            return None
        b, a, x = bs[sel], as_[sel], ba[sel]
        bad = V[V[c, b], a] != V[c, x]
        if bad.any():
            k = int(np.argmax(bad))
            return (c, int(b[k]), int(a[k]))
        return None

    report.record("assoc2", first_witness(range(n2), slab_v, threads), "(c b) a != c (b a)")
    # closure is automatic for total tables
    report.record("closure", None)
    # hcomp functorial on identities
    gs, fs = np.nonzero(C >= 0)
    bad = H[i2[gs], i2[fs]] != i2[C[gs, fs]]
    k = _first_true(bad)
    report.record(
        "hcomp-functorial",
        None if k is None else (int(gs[k[0]]), int(fs[k[0]])),
        "id2(g) * id2(f) != id2(g f)",
    )
    # hcomp unit
    unit_left = i2[i1[t1[s2]]]
    unit_right = i2[i1[s1[s2]]]
    bad = (H[unit_left, cells] != cells) | (H[cells, unit_right] != cells)
    report.record("hcomp-unit", _first_true(bad), "identity 2-cell on identity 1-cell is not a unit for hcomp")
    # hcomp assoc (c, b, a)
    hb, ha = np.nonzero(hdef)
    hba = H[hb, ha]

    def slab_h(c):
        sel = t1[s2[hb]] == s1[s2[c]]
        if not sel.any():
            return None
        b, a, x = hb[sel], ha[sel], hba[sel]
        bad = H[H[c, b], a] != H[c, x]
        if bad.any():
            k = int(np.argmax(bad))
            return (c, int(b[k]), int(a[k]))
        return None

    report.record("hcomp-assoc", first_witness(range(n2), slab_h, threads), "(c * b) * a != c * (b * a)")
    # interchange over pairs of vertically composable pairs
    order = np.lexsort((as_, bs))
    pb, pa = bs[order], as_[order]
    pv = V[pb, pa]
    src_obj = s1[s2[pa]]
    tgt_obj = t1[s2[pa]]

    def slab_i(k):
        b2, b1 = int(pb[k]), int(pa[k])  # beta' o beta
        sel = tgt_obj == src_obj[k]
        if not sel.any():
            return None
        a2, a1, av = pb[sel], pa[sel], pv[sel]
        left = H[pv[k], av]
        right = V[H[b2, a2], H[b1, a1]]
        bad = left != right
        if bad.any():
            j = int(np.argmax(bad))
            return (b2, b1, int(a2[j]), int(a1[j]))
        return None

    report.record(
        "interchange",
        first_witness(range(len(pb)), slab_i, threads),
        "(b' o b) * (a' o a) != (b' * a') o (b * a)",
    )
    if X.locally_posetal:
        keys = s2 * n1 + t2
        w = None
        for a in range(n2):
            dup = np.nonzero(keys[a + 1:] == keys[a])[0]
            if len(dup):
                w = (a, a + 1 + int(dup[0]))
                break
        report.record("posetal-uniqueness", w, "two distinct 2-cells between the same 1-cells", n2)


def _check_posetal_two_cells(X, report, threads):
    s1, t1, i1, C = X.arrays1
    L = X.leq_array()
    n1 = X.n_one_cells
    parallel = (s1[:, None] == s1[None, :]) & (t1[:, None] == t1[None, :])
    report.record("parallel-endpoints", None, checks=n1)
    diag = np.diag(L)
    w = _first_true(~diag)
    report.record("unit2", w, "1-cell not below itself: identity 2-cell missing", n1)

    def slab_t(f):
        row = L[f]
        bad = row[:, None] & L & ~row[None, :] & parallel[f][None, :]
        w = _first_true(bad)
        return None if w is None else (f,) + w

    report.record("closure", first_witness(range(n1), slab_t, threads), "preorder not transitive: vertical composite missing")
    fs, gs = np.nonzero(L)

    def slab_w(h):
        # left whiskering by h and right whiskering by h
        sel = s1[h] == t1[fs]
        if sel.any():
            f, g = fs[sel], gs[sel]
            bad = ~L[C[h, f], C[h, g]]
            if bad.any():
                k = int(np.argmax(bad))
                return (h, int(f[k]), int(g[k]))
        sel = t1[h] == s1[fs]
        if sel.any():
            f, g = fs[sel], gs[sel]
            bad = ~L[C[f, h], C[g, h]]
            if bad.any():
                k = int(np.argmax(bad))
                return (h, int(f[k]), int(g[k]))
        return None

    report.record(
        "hcomp-functorial",
        first_witness(range(n1), slab_w, threads),
        "comp1 not monotone: horizontal composite missing",
    )
    for axiom in ("assoc2", "hcomp-unit", "hcomp-assoc", "interchange", "posetal-uniqueness"):
        report.vacuous(axiom)

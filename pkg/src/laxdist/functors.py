"""Lax functors, oplax transformations and modifications.

Each structure is a frozen record of id tables. Its coherence conditions are
listed once as *equations*: ``(axiom, witness, keys)`` triples that depend
only on the domain category. The validators evaluate every equation on a
finished value. The enumerators hand the same equations to
:func:`laxdist.search.backtrack`, which checks each one as soon as the table
entries named in ``keys`` are fixed.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

import numpy as np

from .core2 import TwoCategory, terminal_2category
from .report import StructuralError, ValidationReport, as_budget, scan
from .search import backtrack

LAX_AXIOMS = ("typing", "hom-functoriality", "lax-naturality", "lax-associativity", "lax-unit")
OPLAX_AXIOMS = ("typing", "oplax-composition", "oplax-unit", "oplax-naturality")
MODIFICATION_AXIOMS = ("typing", "modification")


# ----------------------------------------------------------------------
# shape of a domain


class Shape(NamedTuple):
    pairs1: tuple  # composable (g, f), g after f
    triples1: tuple  # (h, g, f)
    vpairs: tuple  # (b, a) with b after a
    hpairs: tuple  # (b, a) on composable 1-cells


@functools.lru_cache(maxsize=None)
def shape(X: TwoCategory) -> Shape:
    """Composable tuples of ``X`` in lexicographic order."""
    s1, t1, _, C = X.arrays1
    gs, fs = np.nonzero(C >= 0)
    pairs = tuple(zip(gs.tolist(), fs.tolist()))
    # (h, g, f) needs src(h) == tgt(g)
    by_tgt: dict = {}
    for g, f in pairs:
        by_tgt.setdefault(int(t1[g]), []).append((g, f))
    triples = tuple(
        (h, g, f) for h in range(X.n_one_cells) for g, f in by_tgt.get(int(s1[h]), ())
    )
    s2 = np.array([X.src2(a) for a in range(X.n_two_cells)], dtype=np.int64)
    t2 = np.array([X.tgt2(a) for a in range(X.n_two_cells)], dtype=np.int64)
    bs, as_ = np.nonzero(s2[:, None] == t2[None, :])
    vpairs = tuple(zip(bs.tolist(), as_.tolist()))
    bs, as_ = np.nonzero(s1[s2][:, None] == t1[s2][None, :])
    hpairs = tuple(zip(bs.tolist(), as_.tolist()))
    return Shape(pairs, triples, vpairs, hpairs)


def trusted(cls, *values):
    """Build a record without re-checking fields already known to be valid
    (results of compositions of validated inputs)."""
    obj = object.__new__(cls)
    names = [f for f in cls.__dataclass_fields__]
    for name, v in zip(names, values):
        object.__setattr__(obj, name, v)
    for name in names[len(values):]:
        object.__setattr__(obj, name, cls.__dataclass_fields__[name].default)
    return obj


def _ints(values, bound, what):
    out = tuple(int(v) for v in values)
    for v in out:
        if not 0 <= v < bound:
            raise StructuralError(f"{what}: id {v} out of range [0, {bound})")
    return out


# ----------------------------------------------------------------------
# lax functors


@dataclass(frozen=True, eq=False)
class LaxFunctor:
    """``(F, gamma, iota)`` with ``gamma[(g, f)]: F(g) F(f) => F(g f)`` and
    ``iota[x]: id => F(id_x)``.

    Two functors are equal when their tables are equal (and their domain and
    codomain are the same categories); ``name`` is a label only.
    """

    dom: TwoCategory
    cod: TwoCategory
    obj_map: tuple
    cell1_map: tuple
    cell2_map: tuple
    compositor: dict
    unitor: tuple
    name: str = ""

    def __post_init__(self):
        X, Y = self.dom, self.cod
        put = functools.partial(object.__setattr__, self)
        put("obj_map", _ints(self.obj_map, Y.n_objects, "obj_map"))
        put("cell1_map", _ints(self.cell1_map, Y.n_one_cells, "cell1_map"))
        put("cell2_map", _ints(self.cell2_map, Y.n_two_cells, "cell2_map"))
        put("unitor", _ints(self.unitor, Y.n_two_cells, "unitor"))
        for label, table, n in (
            ("obj_map", self.obj_map, X.n_objects),
            ("cell1_map", self.cell1_map, X.n_one_cells),
            ("cell2_map", self.cell2_map, X.n_two_cells),
            ("unitor", self.unitor, X.n_objects),
        ):
            if len(table) != n:
                raise StructuralError(f"{label} has {len(table)} entries, expected {n}")
        comp = {(int(g), int(f)): int(c) for (g, f), c in dict(self.compositor).items()}
        pairs = shape(X).pairs1
        missing = [p for p in pairs if p not in comp]
        if missing:
            raise StructuralError(f"compositor entry missing for composable pair {missing[0]}")
        if len(comp) != len(pairs):
            extra = sorted(set(comp) - set(pairs))
            raise StructuralError(f"compositor entry for non-composable pair {extra[0]}")
        _ints(comp.values(), Y.n_two_cells, "compositor")
        put("compositor", {p: comp[p] for p in pairs})

    # accessors used by the equations
    def ob(self, x):
        return self.obj_map[x]

    def one(self, f):
        return self.cell1_map[f]

    def two(self, a):
        return self.cell2_map[a]

    def gamma(self, g, f):
        return self.compositor[(g, f)]

    def iota(self, x):
        return self.unitor[x]

    @functools.cached_property
    def key(self):
        return (
            self.dom,
            self.cod,
            self.obj_map,
            self.cell1_map,
            self.cell2_map,
            tuple(self.compositor.values()),
            self.unitor,
        )

    def __eq__(self, other):
        return isinstance(other, LaxFunctor) and self.key == other.key

    @functools.cached_property
    def _hash(self):
        return hash(self.key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<LaxFunctor{label} {self.dom.name or '?'} -> {self.cod.name or '?'}>"

    def as_dict(self):
        return {
            "obj_map": list(self.obj_map),
            "cell1_map": list(self.cell1_map),
            "cell2_map": list(self.cell2_map),
            "compositor": [[g, f, c] for (g, f), c in self.compositor.items()],
            "unitor": list(self.unitor),
        }


@functools.lru_cache(maxsize=None)
def lax_equations(X: TwoCategory) -> tuple:
    """Coherence equations of a lax functor out of ``X``."""
    sh = shape(X)
    eqs = []
    for f in range(X.n_one_cells):
        eqs.append(("hom-functoriality", ("id2", f), (("2", X.id2(f)),)))
    for b, a in sh.vpairs:
        eqs.append(("hom-functoriality", ("vcomp", b, a), (("2", b), ("2", a), ("2", X.vcomp(b, a)))))
    for b, a in sh.hpairs:
        f1, f2, g1, g2 = X.src2(a), X.tgt2(a), X.src2(b), X.tgt2(b)
        keys = (("2", b), ("2", a), ("2", X.hcomp(b, a)), ("g", (g2, f2)), ("g", (g1, f1)))
        eqs.append(("lax-naturality", (b, a), keys))
    for h, g, f in sh.triples1:
        keys = (
            ("g", (h, X.comp1(g, f))),
            ("g", (g, f)),
            ("g", (X.comp1(h, g), f)),
            ("g", (h, g)),
        )
        eqs.append(("lax-associativity", (h, g, f), keys))
    for f in range(X.n_one_cells):
        x, y = X.src1(f), X.tgt1(f)
        keys = (("g", (f, X.id1(x))), ("g", (X.id1(y), f)), ("i", x), ("i", y))
        eqs.append(("lax-unit", (f,), keys))
    return tuple(eqs)


def lax_holds(F, axiom: str, w: tuple) -> bool:
    """Evaluate one lax-functor equation on ``F`` (any object with the
    ``ob/one/two/gamma/iota`` accessors and ``dom``/``cod``)."""
    X, Y = F.dom, F.cod
    if axiom == "hom-functoriality":
        if w[0] == "id2":
            return F.two(X.id2(w[1])) == Y.id2(F.one(w[1]))
        _, b, a = w
        return F.two(X.vcomp(b, a)) == Y.vcomp(F.two(b), F.two(a))
    if axiom == "lax-naturality":
        b, a = w
        f1, f2, g1, g2 = X.src2(a), X.tgt2(a), X.src2(b), X.tgt2(b)
        left = Y.vcomp(F.gamma(g2, f2), Y.hcomp(F.two(b), F.two(a)))
        right = Y.vcomp(F.two(X.hcomp(b, a)), F.gamma(g1, f1))
        return left == right
    if axiom == "lax-associativity":
        h, g, f = w
        left = Y.vcomp(F.gamma(h, X.comp1(g, f)), Y.hcomp(Y.id2(F.one(h)), F.gamma(g, f)))
        right = Y.vcomp(F.gamma(X.comp1(h, g), f), Y.hcomp(F.gamma(h, g), Y.id2(F.one(f))))
        return left == right
    if axiom == "lax-unit":
        (f,) = w
        x, y = X.src1(f), X.tgt1(f)
        idF = Y.id2(F.one(f))
        right_unit = Y.vcomp(F.gamma(f, X.id1(x)), Y.hcomp(idF, F.iota(x)))
        left_unit = Y.vcomp(F.gamma(X.id1(y), f), Y.hcomp(F.iota(y), idF))
        return right_unit == idF and left_unit == idF
    raise ValueError(f"unknown axiom {axiom!r}")


def _lax_typing(F: LaxFunctor) -> Optional[tuple]:
    X, Y = F.dom, F.cod
    for f in range(X.n_one_cells):
        Ff = F.one(f)
        if Y.src1(Ff) != F.ob(X.src1(f)) or Y.tgt1(Ff) != F.ob(X.tgt1(f)):
            return ("1-cell", f)
    for a in range(X.n_two_cells):
        Fa = F.two(a)
        if Y.src2(Fa) != F.one(X.src2(a)) or Y.tgt2(Fa) != F.one(X.tgt2(a)):
            return ("2-cell", a)
    for (g, f), c in F.compositor.items():
        if Y.src2(c) != Y.comp1(F.one(g), F.one(f)) or Y.tgt2(c) != F.one(X.comp1(g, f)):
            return ("compositor", g, f)
    for x in range(X.n_objects):
        c = F.iota(x)
        if Y.src2(c) != Y.id1(F.ob(x)) or Y.tgt2(c) != F.one(X.id1(x)):
            return ("unitor", x)
    return None


def _run_equations(report, eqs, holds, subject, budget, threads):
    budget.reserve(len(eqs), f"validating {subject}")
    by_axiom: dict = {}
    for axiom, w, _ in eqs:
        by_axiom.setdefault(axiom, []).append((w,))
    for axiom, items in by_axiom.items():
        w = scan(items, lambda w, axiom=axiom: holds(axiom, w), threads)
        report.record(axiom, None if w is None else w[0], f"{axiom} fails", len(items))
    budget.spend(len(eqs))


def validate_lax_functor(F: LaxFunctor, budget=None, threads: int = 1) -> ValidationReport:
    """Check typing, hom-functoriality and the naturality, associativity and
    unit constraints of ``F``. Axioms after a typing failure are skipped."""
    budget = as_budget(budget)
    report = ValidationReport(subject=f"lax functor {F.name}".strip())
    w = _lax_typing(F)
    report.record("typing", w, "a table entry has the wrong endpoints", 1)
    if w is not None:
        return report
    eqs = lax_equations(F.dom)
    _run_equations(report, eqs, lambda ax, w: lax_holds(F, ax, w), report.subject, budget, threads)
    for axiom in LAX_AXIOMS:
        report.results.setdefault(axiom, "ok")
    return report


def is_unitary(F: LaxFunctor) -> bool:
    return all(F.cod.is_invertible2(c) for c in F.unitor)


def is_pseudofunctor(F: LaxFunctor) -> bool:
    return is_unitary(F) and all(F.cod.is_invertible2(c) for c in F.compositor.values())


def identity_lax_functor(X: TwoCategory) -> LaxFunctor:
    return LaxFunctor(
        dom=X,
        cod=X,
        obj_map=range(X.n_objects),
        cell1_map=range(X.n_one_cells),
        cell2_map=range(X.n_two_cells),
        compositor={(g, f): X.id2(X.comp1(g, f)) for g, f in shape(X).pairs1},
        unitor=[X.id2(X.id1(x)) for x in range(X.n_objects)],
        name=f"id({X.name})",
    )


class _PartialView:
    """Accessor view over a partial search assignment."""

    def __init__(self, dom, cod, assign, fixed=None):
        self.dom, self.cod, self.a = dom, cod, assign
        self.fixed = fixed

    def ob(self, x):
        return self.a[("o", x)]

    def one(self, f):
        return self.a[("1", f)]

    def two(self, a):
        return self.a[("2", a)]

    def gamma(self, g, f):
        return self.a[("g", (g, f))]

    def iota(self, x):
        return self.a[("i", x)]


def _lax_variables(X):
    return (
        [("o", x) for x in range(X.n_objects)]
        + [("1", f) for f in range(X.n_one_cells)]
        + [("2", a) for a in range(X.n_two_cells)]
        + [("g", p) for p in shape(X).pairs1]
        + [("i", x) for x in range(X.n_objects)]
    )


def enumerate_lax_functors(dom: TwoCategory, cod: TwoCategory, budget=None) -> Iterator[LaxFunctor]:
    """Every lax functor ``dom -> cod``, lexicographic in
    ``(obj_map, cell1_map, cell2_map, compositor, unitor)``.

    Raises :class:`~laxdist.report.BudgetExceeded` once the search has spent
    its budget of primitive checks.
    """
    budget = as_budget(budget)
    X, Y = dom, cod

    def domain(var, a):
        kind, i = var
        if kind == "o":
            return range(Y.n_objects)
        if kind == "1":
            return Y.hom1(a[("o", X.src1(i))], a[("o", X.tgt1(i))])
        if kind == "2":
            return Y.hom2(a[("1", X.src2(i))], a[("1", X.tgt2(i))])
        if kind == "g":
            g, f = i
            return Y.hom2(Y.comp1(a[("1", g)], a[("1", f)]), a[("1", X.comp1(g, f))])
        return Y.hom2(Y.id1(a[("o", i)]), a[("1", X.id1(i))])

    def constraint(axiom, w):
        def check(a):
            return lax_holds(_PartialView(X, Y, a), axiom, w)

        return check

    cons = [(keys, constraint(ax, w)) for ax, w, keys in lax_equations(X)]
    variables = _lax_variables(X)
    for a in backtrack(variables, domain, cons, budget, "enumerate_lax_functors"):
        yield LaxFunctor(
            dom=X,
            cod=Y,
            obj_map=[a[("o", x)] for x in range(X.n_objects)],
            cell1_map=[a[("1", f)] for f in range(X.n_one_cells)],
            cell2_map=[a[("2", c)] for c in range(X.n_two_cells)],
            compositor={p: a[("g", p)] for p in shape(X).pairs1},
            unitor=[a[("i", x)] for x in range(X.n_objects)],
        )


# ----------------------------------------------------------------------
# monads: lax functors out of the terminal 2-category


class MonadView(NamedTuple):
    obj: int
    t: int
    mu: int
    eta: int


def monad_view(F: LaxFunctor) -> MonadView:
    """``(object, t, mu, eta)`` of a lax functor out of a one-cell domain."""
    X = F.dom
    if X.n_objects != 1 or X.n_one_cells != 1:
        raise StructuralError("monad_view needs a domain with one object and one 1-cell")
    e = X.id1(0)
    return MonadView(F.ob(0), F.one(e), F.gamma(e, e), F.iota(0))


def _only_cell(Y, f, g, what):
    cells = Y.hom2(f, g)
    if len(cells) != 1:
        raise StructuralError(f"{what}: expected a unique 2-cell {f} => {g}, found {len(cells)}")
    return cells[0]


def monad(Y: TwoCategory, t: int, mu: Optional[int] = None, eta: Optional[int] = None, obj: Optional[int] = None) -> LaxFunctor:
    """The lax functor ``terminal -> Y`` with 1-cell ``t``.

    ``mu`` and ``eta`` default to the unique 2-cells of the right type, which
    exist in a locally posetal ``Y`` exactly when ``t`` is a monad.
    """
    obj = Y.src1(t) if obj is None else obj
    if mu is None:
        mu = _only_cell(Y, Y.comp1(t, t), t, "multiplication")
    if eta is None:
        eta = _only_cell(Y, Y.id1(obj), t, "unit")
    one = terminal_2category()
    return LaxFunctor(
        dom=one,
        cod=Y,
        obj_map=[obj],
        cell1_map=[t],
        cell2_map=[Y.id2(t)],
        compositor={(0, 0): mu},
        unitor=[eta],
    )


# ----------------------------------------------------------------------
# oplax transformations


@dataclass(frozen=True, eq=False)
class OplaxTransformation:
    """``rho: F1 => F2`` with 1-cells ``comp1[x]: F1(x) -> F2(x)`` and
    2-cells ``comp2[g]: rho_y F1(g) => F2(g) rho_x`` for ``g: x -> y``."""

    src_f: LaxFunctor
    tgt_f: LaxFunctor
    comp1: tuple
    comp2: tuple
    name: str = ""

    def __post_init__(self):
        F1, F2 = self.src_f, self.tgt_f
        if F1.dom is not F2.dom or F1.cod is not F2.cod:
            raise StructuralError("oplax transformation between functors with different (co)domains")
        X, Y = F1.dom, F1.cod
        put = functools.partial(object.__setattr__, self)
        put("comp1", _ints(self.comp1, Y.n_one_cells, "comp1"))
        put("comp2", _ints(self.comp2, Y.n_two_cells, "comp2"))
        if len(self.comp1) != X.n_objects:
            raise StructuralError(f"comp1 has {len(self.comp1)} entries, expected {X.n_objects}")
        if len(self.comp2) != X.n_one_cells:
            raise StructuralError(f"comp2 has {len(self.comp2)} entries, expected {X.n_one_cells}")

    @property
    def dom(self):
        return self.src_f.dom

    @property
    def cod(self):
        return self.src_f.cod

    def c1(self, x):
        return self.comp1[x]

    def c2(self, g):
        return self.comp2[g]

    def is_icon(self) -> bool:
        Y = self.cod
        return all(Y.src1(r) == Y.tgt1(r) and r == Y.id1(Y.src1(r)) for r in self.comp1)

    @functools.cached_property
    def key(self):
        return (self.src_f.key, self.tgt_f.key, self.comp1, self.comp2)

    def __eq__(self, other):
        return isinstance(other, OplaxTransformation) and self.key == other.key

    @functools.cached_property
    def _hash(self):
        return hash(self.key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<OplaxTransformation {self.name or ''} comp1={self.comp1}>"

    def as_dict(self):
        return {"comp1": list(self.comp1), "comp2": list(self.comp2)}


@functools.lru_cache(maxsize=None)
def oplax_equations(X: TwoCategory) -> tuple:
    eqs = []
    for f, g in shape(X).pairs1:
        keys = (("c2", f), ("c2", g), ("c2", X.comp1(f, g)), ("c1", X.src1(g)), ("c1", X.tgt1(f)))
        eqs.append(("oplax-composition", (f, g), keys))
    for x in range(X.n_objects):
        eqs.append(("oplax-unit", (x,), (("c1", x), ("c2", X.id1(x)))))
    for a in range(X.n_two_cells):
        g, g2 = X.src2(a), X.tgt2(a)
        keys = (("c1", X.src1(g)), ("c1", X.tgt1(g)), ("c2", g), ("c2", g2))
        eqs.append(("oplax-naturality", (a,), keys))
    return tuple(eqs)


def oplax_holds(t, axiom, w) -> bool:
    """Evaluate one oplax equation; ``t`` needs ``src_f, tgt_f, c1, c2``."""
    F1, F2 = t.src_f, t.tgt_f
    X, Y = F1.dom, F1.cod
    if axiom == "oplax-composition":
        f, g = w
        x, z = X.src1(g), X.tgt1(f)
        left = Y.vc(
            Y.hcomp(F2.gamma(f, g), Y.id2(t.c1(x))),
            Y.hcomp(Y.id2(F2.one(f)), t.c2(g)),
            Y.hcomp(t.c2(f), Y.id2(F1.one(g))),
        )
        right = Y.vcomp(t.c2(X.comp1(f, g)), Y.hcomp(Y.id2(t.c1(z)), F1.gamma(f, g)))
        return left == right
    if axiom == "oplax-unit":
        (x,) = w
        left = Y.vcomp(t.c2(X.id1(x)), Y.hcomp(Y.id2(t.c1(x)), F1.iota(x)))
        return left == Y.hcomp(F2.iota(x), Y.id2(t.c1(x)))
    if axiom == "oplax-naturality":
        (a,) = w
        g, g2 = X.src2(a), X.tgt2(a)
        x, y = X.src1(g), X.tgt1(g)
        left = Y.vcomp(t.c2(g2), Y.hcomp(Y.id2(t.c1(y)), F1.two(a)))
        right = Y.vcomp(Y.hcomp(F2.two(a), Y.id2(t.c1(x))), t.c2(g))
        return left == right
    raise ValueError(f"unknown axiom {axiom!r}")


def _oplax_typing(t: OplaxTransformation) -> Optional[tuple]:
    F1, F2 = t.src_f, t.tgt_f
    X, Y = t.dom, t.cod
    for x in range(X.n_objects):
        r = t.c1(x)
        if Y.src1(r) != F1.ob(x) or Y.tgt1(r) != F2.ob(x):
            return ("component1", x)
    for g in range(X.n_one_cells):
        x, y = X.src1(g), X.tgt1(g)
        c = t.c2(g)
        if Y.src2(c) != Y.comp1(t.c1(y), F1.one(g)) or Y.tgt2(c) != Y.comp1(F2.one(g), t.c1(x)):
            return ("component2", g)
    return None


def validate_oplax(t: OplaxTransformation, budget=None, threads: int = 1) -> ValidationReport:
    """Check typing and the composition, unit and naturality axioms of ``t``."""
    budget = as_budget(budget)
    report = ValidationReport(subject=f"oplax transformation {t.name}".strip())
    w = _oplax_typing(t)
    report.record("typing", w, "a component has the wrong endpoints", 1)
    if w is not None:
        return report
    eqs = oplax_equations(t.dom)
    _run_equations(report, eqs, lambda ax, w: oplax_holds(t, ax, w), report.subject, budget, threads)
    for axiom in OPLAX_AXIOMS:
        report.results.setdefault(axiom, "ok")
    return report


def identity_oplax(F: LaxFunctor) -> OplaxTransformation:
    Y = F.cod
    return OplaxTransformation(
        src_f=F,
        tgt_f=F,
        comp1=[Y.id1(F.ob(x)) for x in range(F.dom.n_objects)],
        comp2=[Y.id2(F.one(g)) for g in range(F.dom.n_one_cells)],
        name=f"id({F.name})" if F.name else "",
    )


@functools.lru_cache(maxsize=1 << 18)
def compose_oplax(t2: OplaxTransformation, t1: OplaxTransformation) -> OplaxTransformation:
    """``t2 t1``: first ``t1: F1 => F2`` then ``t2: F2 => F3``."""
    if t1.tgt_f != t2.src_f:
        raise StructuralError("compose_oplax: target of the first is not the source of the second")
    X, Y = t1.dom, t1.cod
    comp1 = [Y.comp1(t2.c1(x), t1.c1(x)) for x in range(X.n_objects)]
    comp2 = []
    for f in range(X.n_one_cells):
        x, y = X.src1(f), X.tgt1(f)
        comp2.append(
            Y.vcomp(
                Y.hcomp(t2.c2(f), Y.id2(t1.c1(x))),
                Y.hcomp(Y.id2(t2.c1(y)), t1.c2(f)),
            )
        )
    return trusted(OplaxTransformation, t1.src_f, t2.tgt_f, tuple(comp1), tuple(comp2))


def enumerate_oplax(F1: LaxFunctor, F2: LaxFunctor, budget=None, icons_only: bool = False) -> Iterator[OplaxTransformation]:
    """Every oplax transformation ``F1 => F2``, lexicographic in
    ``(comp1, comp2)``; ``icons_only`` fixes identity 1-cell components."""
    budget = as_budget(budget)
    X, Y = F1.dom, F1.cod

    class View:
        src_f, tgt_f = F1, F2

        def __init__(self, a):
            self.a = a

        def c1(self, x):
            return self.a[("c1", x)]

        def c2(self, g):
            return self.a[("c2", g)]

    def domain(var, a):
        kind, i = var
        if kind == "c1":
            if icons_only:
                return (Y.id1(F1.ob(i)),) if F1.ob(i) == F2.ob(i) else ()
            return Y.hom1(F1.ob(i), F2.ob(i))
        x, y = X.src1(i), X.tgt1(i)
        return Y.hom2(Y.comp1(a[("c1", y)], F1.one(i)), Y.comp1(F2.one(i), a[("c1", x)]))

    def constraint(axiom, w):
        return lambda a: oplax_holds(View(a), axiom, w)

    cons = [(keys, constraint(ax, w)) for ax, w, keys in oplax_equations(X)]
    variables = [("c1", x) for x in range(X.n_objects)] + [("c2", g) for g in range(X.n_one_cells)]
    for a in backtrack(variables, domain, cons, budget, "enumerate_oplax"):
        yield OplaxTransformation(
            F1,
            F2,
            [a[("c1", x)] for x in range(X.n_objects)],
            [a[("c2", g)] for g in range(X.n_one_cells)],
        )


# ----------------------------------------------------------------------
# modifications


@dataclass(frozen=True, eq=False)
class Modification:
    """``m: rho1 -> rho2`` with 2-cells ``comp[x]: rho1_x => rho2_x``."""

    src_t: OplaxTransformation
    tgt_t: OplaxTransformation
    comp: tuple
    name: str = ""

    def __post_init__(self):
        a, b = self.src_t, self.tgt_t
        if a.src_f != b.src_f or a.tgt_f != b.tgt_f:
            raise StructuralError("modification between non-parallel transformations")
        object.__setattr__(self, "comp", _ints(self.comp, a.cod.n_two_cells, "comp"))
        if len(self.comp) != a.dom.n_objects:
            raise StructuralError(f"comp has {len(self.comp)} entries, expected {a.dom.n_objects}")

    @property
    def dom(self):
        return self.src_t.dom

    @property
    def cod(self):
        return self.src_t.cod

    def m(self, x):
        return self.comp[x]

    @functools.cached_property
    def key(self):
        return (self.src_t.key, self.tgt_t.key, self.comp)

    def __eq__(self, other):
        return isinstance(other, Modification) and self.key == other.key

    @functools.cached_property
    def _hash(self):
        return hash(self.key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<Modification {self.name or ''} comp={self.comp}>"

    def as_dict(self):
        return {"comp": list(self.comp)}


@functools.lru_cache(maxsize=None)
def modification_equations(X: TwoCategory) -> tuple:
    return tuple(
        ("modification", (f,), (("m", X.src1(f)), ("m", X.tgt1(f)))) for f in range(X.n_one_cells)
    )


def modification_holds(m, axiom, w) -> bool:
    r1, r2 = m.src_t, m.tgt_t
    F1, F2 = r1.src_f, r1.tgt_f
    X, Y = F1.dom, F1.cod
    (f,) = w
    x, y = X.src1(f), X.tgt1(f)
    left = Y.vcomp(r2.c2(f), Y.hcomp(m.m(y), Y.id2(F1.one(f))))
    right = Y.vcomp(Y.hcomp(Y.id2(F2.one(f)), m.m(x)), r1.c2(f))
    return left == right


def validate_modification(m: Modification, budget=None, threads: int = 1) -> ValidationReport:
    budget = as_budget(budget)
    report = ValidationReport(subject=f"modification {m.name}".strip())
    Y = m.cod
    w = next(
        (
            ("component", x)
            for x in range(m.dom.n_objects)
            if Y.src2(m.m(x)) != m.src_t.c1(x) or Y.tgt2(m.m(x)) != m.tgt_t.c1(x)
        ),
        None,
    )
    report.record("typing", w, "a component has the wrong endpoints", 1)
    if w is not None:
        return report
    eqs = modification_equations(m.dom)
    _run_equations(report, eqs, lambda ax, w: modification_holds(m, ax, w), report.subject, budget, threads)
    report.results.setdefault("modification", "ok")
    return report


def identity_modification(t: OplaxTransformation) -> Modification:
    Y = t.cod
    return Modification(t, t, [Y.id2(t.c1(x)) for x in range(t.dom.n_objects)])


def vcomp_modification(m2: Modification, m1: Modification) -> Modification:
    """First ``m1`` then ``m2``."""
    if m1.tgt_t != m2.src_t:
        raise StructuralError("vcomp_modification: modifications are not composable")
    Y = m1.cod
    comp = tuple(Y.vcomp(m2.m(x), m1.m(x)) for x in range(m1.dom.n_objects))
    return trusted(Modification, m1.src_t, m2.tgt_t, comp)


def hcomp_modification(m2: Modification, m1: Modification) -> Modification:
    """``m2 * m1`` over ``compose_oplax`` of the sources and of the targets."""
    if m1.src_t.tgt_f != m2.src_t.src_f:
        raise StructuralError("hcomp_modification: modifications are not composable")
    Y = m1.cod
    return trusted(
        Modification,
        compose_oplax(m2.src_t, m1.src_t),
        compose_oplax(m2.tgt_t, m1.tgt_t),
        tuple(Y.hcomp(m2.m(x), m1.m(x)) for x in range(m1.dom.n_objects)),
    )


def enumerate_modifications(t1: OplaxTransformation, t2: OplaxTransformation, budget=None) -> Iterator[Modification]:
    budget = as_budget(budget)
    X, Y = t1.dom, t1.cod

    class View:
        src_t, tgt_t = t1, t2

        def __init__(self, a):
            self.a = a

        def m(self, x):
            return self.a[("m", x)]

    def domain(var, a):
        return Y.hom2(t1.c1(var[1]), t2.c1(var[1]))

    cons = [
        (keys, (lambda ax, w: lambda a: modification_holds(View(a), ax, w))(ax, w))
        for ax, w, keys in modification_equations(X)
    ]
    variables = [("m", x) for x in range(X.n_objects)]
    for a in backtrack(variables, domain, cons, budget, "enumerate_modifications"):
        yield Modification(t1, t2, [a[("m", x)] for x in range(X.n_objects)])

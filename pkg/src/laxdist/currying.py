"""Currying laws into lax functors valued in oplax-functor 2-categories.

The 2-category of lax functors ``C -> D``, oplax transformations and
modifications is far too large to build. Instead a :class:`Fragment` holds
the cells actually needed, closed under identities and all compositions,
and is materialised as a :class:`~laxdist.core2.TabledTwoCategory` whose ids
index its lists of functors, transformations and modifications. Cells are
identified by their tables.

A law ``s`` curries to ``Q: B -> Lax_op(C, D)`` with ``Q(b) = M_b``,
``Q(f)_c = L_c(f)``, ``Q(f)_g = sigma[f][g]``, ``Q(alpha)_c = L_c(alpha)``,
``(gamma^Q_{f',f})_c = gamma^{L_c}_{f',f}`` and ``(iota^Q_b)_c = iota^{L_c}_b``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .core2 import TabledTwoCategory, TwoCategory, product
from .distlaw import (
    Dist2Morphism,
    DistMorphism,
    DistributiveLaw,
    validate_dist_2morphism,
    validate_dist_morphism,
    validate_law,
)
from .functors import (
    LaxFunctor,
    Modification,
    OplaxTransformation,
    compose_oplax,
    hcomp_modification,
    identity_modification,
    identity_oplax,
    shape,
    validate_lax_functor,
    validate_modification,
    validate_oplax,
    vcomp_modification,
)
from .core2 import validate_2category
from .report import StructuralError, ValidationReport

MAX_FRAGMENT_CELLS = 4000


class Fragment:
    """A finite sub-2-category of ``Lax_op(C, D)`` grown from seeds."""

    def __init__(self, C: TwoCategory, D: TwoCategory, max_cells: int = MAX_FRAGMENT_CELLS):
        self.C, self.D = C, D
        self.max_cells = max_cells
        self.objects: list = []
        self.one_cells: list = []
        self.two_cells: list = []
        self._obj_id: dict = {}
        self._one_id: dict = {}
        self._two_id: dict = {}
        self._category = None

    # seeding -------------------------------------------------------------
    def add_object(self, F: LaxFunctor) -> int:
        if F.dom is not self.C or F.cod is not self.D:
            raise StructuralError("fragment object is not a functor C -> D")
        if F not in self._obj_id:
            self._category = None
            self._obj_id[F] = len(self.objects)
            self.objects.append(F)
        return self._obj_id[F]

    def add_one(self, t: OplaxTransformation) -> int:
        if t not in self._one_id:
            self.add_object(t.src_f)
            self.add_object(t.tgt_f)
            self._category = None
            self._one_id[t] = len(self.one_cells)
            self.one_cells.append(t)
        return self._one_id[t]

    def add_two(self, m: Modification) -> int:
        if m not in self._two_id:
            self.add_one(m.src_t)
            self.add_one(m.tgt_t)
            self._category = None
            self._two_id[m] = len(self.two_cells)
            self.two_cells.append(m)
        return self._two_id[m]

    def obj_id(self, F):
        return self._obj_id[F]

    def one_id(self, t):
        return self._one_id[t]

    def two_id(self, m):
        return self._two_id[m]

    def _grow(self):
        if len(self.one_cells) + len(self.two_cells) > self.max_cells:
            raise StructuralError(f"fragment exceeds {self.max_cells} cells; refusing to grow further")

    # closure -----------------------------------------------------------
    def close(self) -> TabledTwoCategory:
        """Close under identities and compositions; return the tables."""
        if self._category is not None:
            return self._category
        comp1: dict = {}
        vcomp: dict = {}
        hcomp: dict = {}
        changed = True
        while changed:
            changed = False
            n_before = (len(self.objects), len(self.one_cells), len(self.two_cells))
            for F in list(self.objects):
                self.add_one(identity_oplax(F))
            for t in list(self.one_cells):
                self.add_two(identity_modification(t))
            ones = list(self.one_cells)
            for i, t1 in enumerate(ones):
                for j, t2 in enumerate(ones):
                    if (j, i) not in comp1 and t1.tgt_f == t2.src_f:
                        comp1[(j, i)] = self.add_one(compose_oplax(t2, t1))
                        self._grow()
            for t in list(self.one_cells):
                self.add_two(identity_modification(t))
            twos = list(self.two_cells)
            for i, a in enumerate(twos):
                for j, b in enumerate(twos):
                    if (j, i) not in vcomp and a.tgt_t == b.src_t:
                        vcomp[(j, i)] = self.add_two(vcomp_modification(b, a))
                        self._grow()
                    if (j, i) not in hcomp and a.src_t.tgt_f == b.src_t.src_f:
                        hcomp[(j, i)] = self.add_two(hcomp_modification(b, a))
                        self._grow()
            if (len(self.objects), len(self.one_cells), len(self.two_cells)) != n_before:
                changed = True
        n1, n2 = len(self.one_cells), len(self.two_cells)
        c1 = [[comp1.get((j, i), -1) for i in range(n1)] for j in range(n1)]
        v = [[vcomp.get((j, i), -1) for i in range(n2)] for j in range(n2)]
        h = [[hcomp.get((j, i), -1) for i in range(n2)] for j in range(n2)]
        self._category = TabledTwoCategory(
            n_objects=len(self.objects),
            one_cells=[(self.obj_id(t.src_f), self.obj_id(t.tgt_f)) for t in self.one_cells],
            id1=[self.one_id(identity_oplax(F)) for F in self.objects],
            comp1=c1,
            two_cells=[(self.one_id(m.src_t), self.one_id(m.tgt_t)) for m in self.two_cells],
            id2=[self.two_id(identity_modification(t)) for t in self.one_cells],
            vcomp=v,
            hcomp=h,
            name=f"Lax_op({self.C.name},{self.D.name}) fragment",
        )
        self._category.fragment = self
        return self._category


@dataclass(frozen=True, eq=False)
class NestedLaxFunctor:
    """A lax functor ``B -> fragment`` together with its fragment."""

    outer: LaxFunctor
    fragment: Fragment

    @property
    def B(self):
        return self.outer.dom

    def Q(self, b) -> LaxFunctor:
        return self.fragment.objects[self.outer.ob(b)]

    def Q1(self, f) -> OplaxTransformation:
        return self.fragment.one_cells[self.outer.one(f)]

    def Q2(self, a) -> Modification:
        return self.fragment.two_cells[self.outer.two(a)]

    def gamma(self, f2, f) -> Modification:
        return self.fragment.two_cells[self.outer.gamma(f2, f)]

    def iota(self, b) -> Modification:
        return self.fragment.two_cells[self.outer.iota(b)]


@dataclass
class CurriedFamily:
    fragment: Fragment
    functors: list = field(default_factory=list)
    transformations: list = field(default_factory=list)
    modifications: list = field(default_factory=list)


# ----------------------------------------------------------------------
# currying


def _Q1(s: DistributiveLaw, f) -> OplaxTransformation:
    B, C = s.B, s.C
    return OplaxTransformation(
        s.M[B.src1(f)],
        s.M[B.tgt1(f)],
        [s.L[c].one(f) for c in range(C.n_objects)],
        [s.s(f, g) for g in range(C.n_one_cells)],
    )


def _seed_law(frag: Fragment, s: DistributiveLaw):
    B, C = s.B, s.C
    Q1 = [_Q1(s, f) for f in range(B.n_one_cells)]
    for F in s.M:
        frag.add_object(F)
    for t in Q1:
        frag.add_one(t)
    Q2 = []
    for a in range(B.n_two_cells):
        m = Modification(Q1[B.src2(a)], Q1[B.tgt2(a)], [s.L[c].two(a) for c in range(C.n_objects)])
        Q2.append(m)
        frag.add_two(m)
    gam = {}
    for f2, f in shape(B).pairs1:
        src = compose_oplax(Q1[f2], Q1[f])
        m = Modification(src, Q1[B.comp1(f2, f)], [s.L[c].gamma(f2, f) for c in range(C.n_objects)])
        gam[(f2, f)] = m
        frag.add_two(m)
    iot = []
    for b in range(B.n_objects):
        m = Modification(
            identity_oplax(s.M[b]),
            Q1[B.id1(b)],
            [s.L[c].iota(b) for c in range(C.n_objects)],
        )
        iot.append(m)
        frag.add_two(m)
    return Q1, Q2, gam, iot


def _theta_hat_cells(m: DistMorphism):
    """``theta^B`` as fragment 1-cells and ``theta-hat_f`` as modifications."""
    s1, s2 = m.src, m.tgt
    B, C = s1.B, s1.C
    out = []
    for f in range(B.n_one_cells):
        b1, b2 = B.src1(f), B.tgt1(f)
        src = compose_oplax(m.thetaB[b2], _Q1(s1, f))
        tgt = compose_oplax(_Q1(s2, f), m.thetaB[b1])
        out.append(Modification(src, tgt, [m.thetaC[c].c2(f) for c in range(C.n_objects)]))
    return out


def curry(
    laws: Sequence[DistributiveLaw],
    morphisms: Sequence[DistMorphism] = (),
    two_morphisms: Sequence[Dist2Morphism] = (),
    check: bool = True,
    max_cells: int = MAX_FRAGMENT_CELLS,
) -> CurriedFamily:
    """Curry laws, morphisms and 2-morphisms into one shared fragment.

    Morphisms and 2-morphisms must run between the given laws.
    """
    laws = list(laws)
    if not laws:
        raise StructuralError("curry needs at least one law")
    if check:
        for s in laws:
            if not validate_law(s).ok:
                raise ValueError("curry: a law does not validate")
        for m in morphisms:
            if not validate_dist_morphism(m).ok:
                raise ValueError("curry: a morphism does not validate")
        for x in two_morphisms:
            if not validate_dist_2morphism(x).ok:
                raise ValueError("curry: a 2-morphism does not validate")
    s0 = laws[0]
    B, C, D = s0.B, s0.C, s0.D
    frag = Fragment(C, D, max_cells)
    seeded = [_seed_law(frag, s) for s in laws]
    hats = []
    for m in morphisms:
        for t in m.thetaB:
            frag.add_one(t)
        cells = _theta_hat_cells(m)
        for c in cells:
            frag.add_two(c)
        hats.append(cells)
    for x in two_morphisms:
        for mod in x.bethB:
            frag.add_two(mod)
    frag.close()
    fam = CurriedFamily(frag)
    for s, (Q1, Q2, gam, iot) in zip(laws, seeded):
        outer = LaxFunctor(
            dom=B,
            cod=frag.close(),
            obj_map=[frag.obj_id(F) for F in s.M],
            cell1_map=[frag.one_id(t) for t in Q1],
            cell2_map=[frag.two_id(m) for m in Q2],
            compositor={p: frag.two_id(m) for p, m in gam.items()},
            unitor=[frag.two_id(m) for m in iot],
        )
        fam.functors.append(NestedLaxFunctor(outer, frag))
    index = {s: i for i, s in enumerate(laws)}
    for m, cells in zip(morphisms, hats):
        q1 = fam.functors[index[m.src]].outer
        q2 = fam.functors[index[m.tgt]].outer
        fam.transformations.append(
            OplaxTransformation(
                q1,
                q2,
                [frag.one_id(t) for t in m.thetaB],
                [frag.two_id(c) for c in cells],
            )
        )
    tindex = {m: i for i, m in enumerate(morphisms)}
    for x in two_morphisms:
        if x.src not in tindex or x.tgt not in tindex:
            raise StructuralError("curry: a 2-morphism runs between morphisms not in the family")
        fam.modifications.append(
            Modification(
                fam.transformations[tindex[x.src]],
                fam.transformations[tindex[x.tgt]],
                [frag.two_id(mod) for mod in x.bethB],
            )
        )
    return fam


def curry_law(s: DistributiveLaw, check: bool = True) -> NestedLaxFunctor:
    return curry([s], check=check).functors[0]


def curry_morphism(m: DistMorphism, check: bool = True) -> OplaxTransformation:
    laws = [m.src] if m.src == m.tgt else [m.src, m.tgt]
    return curry(laws, [m], check=check).transformations[0]


def curry_2morphism(x: Dist2Morphism, check: bool = True) -> Modification:
    m1, m2 = x.src, x.tgt
    laws = [m1.src] if m1.src == m1.tgt else [m1.src, m1.tgt]
    morphs = [m1] if m1 == m2 else [m1, m2]
    return curry(laws, morphs, [x], check=check).modifications[0]


# ----------------------------------------------------------------------
# uncurrying


def uncurry_nested(q: NestedLaxFunctor) -> DistributiveLaw:
    """Read a law back off a nested functor."""
    B = q.B
    frag = q.fragment
    C, D = frag.C, frag.D
    M = [q.Q(b) for b in range(B.n_objects)]
    L = []
    for c in range(C.n_objects):
        L.append(
            LaxFunctor(
                dom=B,
                cod=D,
                obj_map=[q.Q(b).ob(c) for b in range(B.n_objects)],
                cell1_map=[q.Q1(f).c1(c) for f in range(B.n_one_cells)],
                cell2_map=[q.Q2(a).m(c) for a in range(B.n_two_cells)],
                compositor={(f2, f): q.gamma(f2, f).m(c) for f2, f in shape(B).pairs1},
                unitor=[q.iota(b).m(c) for b in range(B.n_objects)],
            )
        )
    sigma = [[q.Q1(f).c2(g) for g in range(C.n_one_cells)] for f in range(B.n_one_cells)]
    return DistributiveLaw(B, C, D, L, M, sigma)


def _fragment_of(category, frag):
    if frag is not None:
        return frag
    frag = getattr(category, "fragment", None)
    if frag is None:
        raise StructuralError("cell does not live in a fragment; pass it explicitly")
    return frag


def uncurry_transformation(t: OplaxTransformation, frag: Optional[Fragment] = None) -> DistMorphism:
    """Read a morphism of laws off an oplax transformation of nested functors."""
    frag = _fragment_of(t.src_f.cod, frag) if frag is None else frag
    q1, q2 = NestedLaxFunctor(t.src_f, frag), NestedLaxFunctor(t.tgt_f, frag)
    s1, s2 = uncurry_nested(q1), uncurry_nested(q2)
    B, C = s1.B, s1.C
    thetaB = [frag.one_cells[t.c1(b)] for b in range(B.n_objects)]
    thetaC = [
        OplaxTransformation(
            s1.L[c],
            s2.L[c],
            [thetaB[b].c1(c) for b in range(B.n_objects)],
            [frag.two_cells[t.c2(f)].m(c) for f in range(B.n_one_cells)],
        )
        for c in range(C.n_objects)
    ]
    return DistMorphism(s1, s2, thetaC, thetaB)


def uncurry_modification(x: Modification, frag: Optional[Fragment] = None) -> Dist2Morphism:
    frag = frag if frag is not None else _fragment_of(x.src_t.src_f.cod, None)
    m1 = uncurry_transformation(x.src_t, frag)
    m2 = uncurry_transformation(x.tgt_t, frag)
    B, C = m1.src.B, m1.src.C
    bethB = [frag.two_cells[x.m(b)] for b in range(B.n_objects)]
    bethC = [
        Modification(m1.thetaC[c], m2.thetaC[c], [bethB[b].m(c) for b in range(B.n_objects)])
        for c in range(C.n_objects)
    ]
    return Dist2Morphism(m1, m2, bethC, bethB)


def uncurry_J(q: NestedLaxFunctor) -> LaxFunctor:
    """The uncurried lax functor ``B x C -> D``, read straight off ``q``.

    ``P(f, g) = Q(b2)(g) Q(f)_{c1}``; the compositor pastes ``Q(f')_g``
    between ``Q(b3)(g')`` and ``Q(f)_{c1}``, then applies the compositor of
    ``Q(b3)`` beside the ``c1`` component of ``gamma^Q``.
    """
    B = q.B
    frag = q.fragment
    C, D = frag.C, frag.D
    BC = product(B, C)
    obj_map = []
    for x in range(BC.n_objects):
        b, c = BC.split_obj(x)
        obj_map.append(q.Q(b).ob(c))
    cell1 = []
    for fg in range(BC.n_one_cells):
        f, g = BC.split1(fg)
        cell1.append(D.comp1(q.Q(B.tgt1(f)).one(g), q.Q1(f).c1(C.src1(g))))
    cell2 = []
    for ab in range(BC.n_two_cells):
        a, beta = BC.split2(ab)
        f, g = B.src2(a), C.src2(beta)
        cell2.append(D.hcomp(q.Q(B.tgt1(f)).two(beta), q.Q2(a).m(C.src1(g))))
    compositor = {}
    for later, earlier in shape(BC).pairs1:
        f2, g2 = BC.split1(later)
        f, g = BC.split1(earlier)
        b3, c1 = B.tgt1(f2), C.src1(g)
        Qb3 = q.Q(b3)
        middle = D.hc(D.id2(Qb3.one(g2)), q.Q1(f2).c2(g), D.id2(q.Q1(f).c1(c1)))
        outer = D.hcomp(Qb3.gamma(g2, g), q.gamma(f2, f).m(c1))
        compositor[(later, earlier)] = D.vcomp(outer, middle)
    unitor = []
    for x in range(BC.n_objects):
        b, c = BC.split_obj(x)
        unitor.append(D.hcomp(q.Q(b).iota(c), q.iota(b).m(c)))
    return LaxFunctor(BC, D, obj_map, cell1, cell2, compositor, unitor)


def validate_nested(q: NestedLaxFunctor, budget=None) -> ValidationReport:
    """The fragment is a 2-category, its cells validate, and the outer
    functor validates against it."""
    frag = q.fragment
    report = ValidationReport(subject="nested lax functor")
    report.merge(validate_2category(frag.close(), budget), prefix="fragment:")
    w = next((("object", i) for i, F in enumerate(frag.objects) if not validate_lax_functor(F, budget).ok), None)
    if w is None:
        w = next((("1-cell", i) for i, t in enumerate(frag.one_cells) if not validate_oplax(t, budget).ok), None)
    if w is None:
        w = next((("2-cell", i) for i, m in enumerate(frag.two_cells) if not validate_modification(m, budget).ok), None)
    report.record("fragment-cells", w, "a fragment cell does not validate", 1)
    report.merge(validate_lax_functor(q.outer, budget), prefix="outer:")
    return report

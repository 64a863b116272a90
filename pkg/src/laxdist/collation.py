"""Collating a distributive law into a lax functor on ``B x C``.

``P(f, g) = M_{b2}(g) L_{c1}(f)`` for ``(f, g): (b1, c1) -> (b2, c2)``. The
compositor of P is evaluated in one fixed order: first the crossing in the
middle, whiskered on both sides, then the two compositors side by side.

    gamma_{(f',g'),(f,g)} = (gamma^M_{g',g} * gamma^L_{f',f}) o (M(g') sigma_{f',g} L(f))
"""

from __future__ import annotations

import functools
from typing import Optional, Sequence

from .core2 import ProductTwoCategory, TwoCategory, product, terminal_2category
from .distlaw import (
    Dist2Morphism,
    DistMorphism,
    DistributiveLaw,
    compose_dist_morphisms,
    enumerate_dist_2morphisms,
    enumerate_dist_morphisms,
    hcomp_dist_2morphisms,
    identity_dist_2morphism,
    identity_dist_morphism,
    monad_law,
    validate_dist_2morphism,
    validate_dist_morphism,
    validate_law,
    vcomp_dist_2morphisms,
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
    trusted,
    validate_lax_functor,
    validate_modification,
    validate_oplax,
    vcomp_modification,
)
from .report import StructuralError, ValidationReport, as_budget


class InvalidInput(ValueError):
    """A construction was handed a value that does not validate."""


def _require(report: ValidationReport, what: str):
    if not report.ok:
        raise InvalidInput(f"{what} does not validate: {report.violations[0]}")


def collate(s: DistributiveLaw, check: bool = True) -> LaxFunctor:
    """The collated lax functor ``B x C -> D`` of a law."""
    if check:
        _require(validate_law(s), "law")
    return _collate(s)


@functools.lru_cache(maxsize=1 << 14)
def _collate(s: DistributiveLaw) -> LaxFunctor:
    B, C, D = s.B, s.C, s.D
    L, M = s.L, s.M
    BC = product(B, C)
    obj_map = [L[BC.split_obj(x)[1]].ob(BC.split_obj(x)[0]) for x in range(BC.n_objects)]
    cell1 = []
    for fg in range(BC.n_one_cells):
        f, g = BC.split1(fg)
        cell1.append(D.comp1(M[B.tgt1(f)].one(g), L[C.src1(g)].one(f)))
    cell2 = []
    for ab in range(BC.n_two_cells):
        alpha, beta = BC.split2(ab)
        f = B.src2(alpha)
        g = C.src2(beta)
        cell2.append(D.hcomp(M[B.tgt1(f)].two(beta), L[C.src1(g)].two(alpha)))
    compositor = {}
    for later, earlier in shape(BC).pairs1:
        f2, g2 = BC.split1(later)
        f, g = BC.split1(earlier)
        b3, c1 = B.tgt1(f2), C.src1(g)
        middle = D.hc(D.id2(M[b3].one(g2)), s.s(f2, g), D.id2(L[c1].one(f)))
        outer = D.hcomp(M[b3].gamma(g2, g), L[c1].gamma(f2, f))
        compositor[(later, earlier)] = D.vcomp(outer, middle)
    unitor = []
    for x in range(BC.n_objects):
        b, c = BC.split_obj(x)
        unitor.append(D.hcomp(M[b].iota(c), L[c].iota(b)))
    return LaxFunctor(BC, D, obj_map, cell1, cell2, compositor, unitor, name=f"collate({s.name})" if s.name else "")


# ----------------------------------------------------------------------
# restrictions of a functor on a product


def _factors(P: LaxFunctor):
    if not isinstance(P.dom, ProductTwoCategory):
        raise StructuralError("expected a lax functor out of a product 2-category")
    return P.dom, P.dom.left, P.dom.right


def restrict_left(P: LaxFunctor, b: int) -> LaxFunctor:
    """``P(b, -): C -> D``."""
    BC, B, C = _factors(P)
    e = B.id1(b)
    ie = B.id2(e)
    return LaxFunctor(
        dom=C,
        cod=P.cod,
        obj_map=[P.ob(BC.obj(b, c)) for c in range(C.n_objects)],
        cell1_map=[P.one(BC.one(e, g)) for g in range(C.n_one_cells)],
        cell2_map=[P.two(BC.two(ie, beta)) for beta in range(C.n_two_cells)],
        compositor={(g2, g): P.gamma(BC.one(e, g2), BC.one(e, g)) for g2, g in shape(C).pairs1},
        unitor=[P.iota(BC.obj(b, c)) for c in range(C.n_objects)],
    )


def restrict_right(P: LaxFunctor, c: int) -> LaxFunctor:
    """``P(-, c): B -> D``."""
    BC, B, C = _factors(P)
    e = C.id1(c)
    ie = C.id2(e)
    return LaxFunctor(
        dom=B,
        cod=P.cod,
        obj_map=[P.ob(BC.obj(b, c)) for b in range(B.n_objects)],
        cell1_map=[P.one(BC.one(f, e)) for f in range(B.n_one_cells)],
        cell2_map=[P.two(BC.two(alpha, ie)) for alpha in range(B.n_two_cells)],
        compositor={(f2, f): P.gamma(BC.one(f2, e), BC.one(f, e)) for f2, f in shape(B).pairs1},
        unitor=[P.iota(BC.obj(b, c)) for b in range(B.n_objects)],
    )


def restrict_transformation_left(t: OplaxTransformation, b: int) -> OplaxTransformation:
    """``t(b, -)``, an oplax transformation ``P1(b, -) => P2(b, -)``."""
    BC, B, C = _factors(t.src_f)
    e = B.id1(b)
    return OplaxTransformation(
        restrict_left(t.src_f, b),
        restrict_left(t.tgt_f, b),
        [t.c1(BC.obj(b, c)) for c in range(C.n_objects)],
        [t.c2(BC.one(e, g)) for g in range(C.n_one_cells)],
    )


def restrict_transformation_right(t: OplaxTransformation, c: int) -> OplaxTransformation:
    BC, B, C = _factors(t.src_f)
    e = C.id1(c)
    return OplaxTransformation(
        restrict_right(t.src_f, c),
        restrict_right(t.tgt_f, c),
        [t.c1(BC.obj(b, c)) for b in range(B.n_objects)],
        [t.c2(BC.one(f, e)) for f in range(B.n_one_cells)],
    )


# ----------------------------------------------------------------------
# the canonical icons


def kappa_B(s: DistributiveLaw, b: int, P: Optional[LaxFunctor] = None) -> OplaxTransformation:
    """The icon ``M_b => P(b, -)`` with components ``M_b(g) iota^L_{c1}(b)``."""
    P = collate(s) if P is None else P
    D, C = s.D, s.C
    return OplaxTransformation(
        s.M[b],
        restrict_left(P, b),
        [D.id1(s.M[b].ob(c)) for c in range(C.n_objects)],
        [D.hcomp(D.id2(s.M[b].one(g)), s.L[C.src1(g)].iota(b)) for g in range(C.n_one_cells)],
        name=f"kappa_B[{b}]",
    )


def kappa_C(s: DistributiveLaw, c: int, P: Optional[LaxFunctor] = None) -> OplaxTransformation:
    """The icon ``L_c => P(-, c)`` with components ``iota^M_{b2}(c) L_c(f)``."""
    P = collate(s) if P is None else P
    D, B = s.D, s.B
    return OplaxTransformation(
        s.L[c],
        restrict_right(P, c),
        [D.id1(s.L[c].ob(b)) for b in range(B.n_objects)],
        [D.hcomp(s.M[B.tgt1(f)].iota(c), D.id2(s.L[c].one(f))) for f in range(B.n_one_cells)],
        name=f"kappa_C[{c}]",
    )


# ----------------------------------------------------------------------
# composite monads


def square_to_terminal(P: LaxFunctor) -> LaxFunctor:
    """Transport a functor out of ``terminal x terminal`` to ``terminal``.

    Both categories have a single cell in each dimension with id 0, so the
    tables carry over unchanged.
    """
    one = terminal_2category()
    if P.dom != product(one, one):
        raise StructuralError("square_to_terminal expects a functor out of terminal x terminal")
    return LaxFunctor(one, P.cod, P.obj_map, P.cell1_map, P.cell2_map, {(0, 0): P.gamma(0, 0)}, P.unitor, P.name)


def composite_monad(S: LaxFunctor, T: LaxFunctor, sigma: Optional[int] = None, check: bool = True) -> LaxFunctor:
    """The monad ``T S`` with multiplication ``(mu^T * mu^S) o (T sigma S)``
    and unit ``eta^T * eta^S``.

    Equal, as tables, to :func:`collate` of the monad law transported to the
    terminal domain; that agreement is checked here rather than assumed.
    """
    s = monad_law(S, T, sigma)
    if check:
        _require(validate_law(s), "monad distributive law")
    D = S.cod
    t, sv = T.one(0), S.one(0)
    mu = D.vcomp(D.hcomp(T.gamma(0, 0), S.gamma(0, 0)), D.hc(D.id2(t), s.s(0, 0), D.id2(sv)))
    eta = D.hcomp(T.iota(0), S.iota(0))
    ts = D.comp1(t, sv)
    F = LaxFunctor(terminal_2category(), D, [S.ob(0)], [ts], [D.id2(ts)], {(0, 0): mu}, [eta])
    if F != square_to_terminal(collate(s, check=False)):
        raise AssertionError("composite monad disagrees with the collated functor")
    return F


# ----------------------------------------------------------------------
# morphisms and 2-morphisms


def collate_morphism(m: DistMorphism, check: bool = True) -> OplaxTransformation:
    """``theta: P1 => P2`` with ``theta_{(f,g)} = (M2(g) thetaC_f) o (thetaB_g L1(f))``."""
    if check:
        _require(validate_dist_morphism(m), "morphism of laws")
    return _collate_morphism(m)


@functools.lru_cache(maxsize=1 << 16)
def _collate_morphism(m: DistMorphism) -> OplaxTransformation:
    s1, s2 = m.src, m.tgt
    B, C, D = s1.B, s1.C, s1.D
    P1, P2 = collate(s1, check=False), collate(s2, check=False)
    BC = P1.dom
    comp1 = []
    for x in range(BC.n_objects):
        b, c = BC.split_obj(x)
        comp1.append(m.thetaB[b].c1(c))
    comp2 = []
    for fg in range(BC.n_one_cells):
        f, g = BC.split1(fg)
        b2, c1 = B.tgt1(f), C.src1(g)
        comp2.append(
            D.vcomp(
                D.hcomp(D.id2(s2.M[b2].one(g)), m.thetaC[c1].c2(f)),
                D.hcomp(m.thetaB[b2].c2(g), D.id2(s1.L[c1].one(f))),
            )
        )
    return OplaxTransformation(P1, P2, comp1, comp2)


def restriction_witness(m: DistMorphism, theta: Optional[OplaxTransformation] = None) -> Optional[tuple]:
    """First object at which ``theta(b,-) kappa1_b = kappa2_b thetaB_b`` (or
    the analogue for C) fails as a table equality, else None."""
    theta = collate_morphism(m, check=False) if theta is None else theta
    s1, s2 = m.src, m.tgt
    P1, P2 = theta.src_f, theta.tgt_f
    for b in range(s1.B.n_objects):
        left = compose_oplax(restrict_transformation_left(theta, b), kappa_B(s1, b, P1))
        right = compose_oplax(kappa_B(s2, b, P2), m.thetaB[b])
        if left != right:
            return ("B", b)
    for c in range(s1.C.n_objects):
        left = compose_oplax(restrict_transformation_right(theta, c), kappa_C(s1, c, P1))
        right = compose_oplax(kappa_C(s2, c, P2), m.thetaC[c])
        if left != right:
            return ("C", c)
    return None


def collate_2morphism(x: Dist2Morphism, check: bool = True) -> Modification:
    if check:
        _require(validate_dist_2morphism(x), "2-morphism of laws")
    t1, t2 = collate_morphism(x.src, check=False), collate_morphism(x.tgt, check=False)
    BC = t1.dom
    comp = []
    for v in range(BC.n_objects):
        b, c = BC.split_obj(v)
        comp.append(x.bethB[b].m(c))
    return trusted(Modification, t1, t2, tuple(comp))


# ----------------------------------------------------------------------
# K as a strict 2-functor


def dist_fragment(laws: Sequence[DistributiveLaw], budget_per_pair: int = 10**7):
    """Morphisms between every ordered pair of ``laws`` and 2-morphisms
    between every parallel pair of those, each search with its own budget.

    Budget exhaustion propagates as :class:`~laxdist.report.BudgetExceeded`.
    """
    morphisms = []
    for s1 in laws:
        for s2 in laws:
            morphisms.extend(enumerate_dist_morphisms(s1, s2, budget_per_pair))
    two = []
    for m1 in morphisms:
        for m2 in morphisms:
            if m1.src == m2.src and m1.tgt == m2.tgt:
                two.extend(enumerate_dist_2morphisms(m1, m2, budget_per_pair))
    return morphisms, two


def _first(pairs, differs):
    """First pair (in order) for which ``differs`` is true, and the count."""
    n = 0
    for pair in pairs:
        n += 1
        if differs(*pair):
            return pair, n
    return None, n


def check_K_is_2functor(
    laws: Sequence[DistributiveLaw],
    morphisms: Optional[Sequence[DistMorphism]] = None,
    two_morphisms: Optional[Sequence[Dist2Morphism]] = None,
    budget_per_pair: int = 10**7,
) -> ValidationReport:
    """Check that collation preserves identities and every composition, as
    table equalities, across a finite family. Morphisms and 2-morphisms are
    enumerated when not supplied. Witnesses index into the family lists."""
    laws = list(laws)
    if morphisms is None or two_morphisms is None:
        morphisms, two_morphisms = dist_fragment(laws, budget_per_pair)
    morphisms, two_morphisms = list(morphisms), list(two_morphisms)
    report = ValidationReport(subject="collation 2-functor")

    def record(axiom, w, n, detail):
        report.record(axiom, None if w is None else tuple(w), detail, n)

    P = [collate(s) for s in laws]
    w, n = _first(((i,) for i in range(len(P))), lambda i: not validate_lax_functor(P[i]).ok)
    record("K-objects-valid", w, n, "collated law does not validate")
    w, n = _first(
        ((i,) for i in range(len(laws))),
        lambda i: collate_morphism(identity_dist_morphism(laws[i])) != identity_oplax(P[i]),
    )
    record("K-identity-1", w, n, "identity morphism not sent to the identity")

    K1 = [collate_morphism(m) for m in morphisms]
    w, n = _first(((i,) for i in range(len(K1))), lambda i: not validate_oplax(K1[i]).ok)
    record("K-morphisms-valid", w, n, "collated morphism does not validate")
    w, n = _first(
        ((i,) for i in range(len(K1))),
        lambda i: restriction_witness(morphisms[i], K1[i]) is not None,
    )
    record("K-restriction", w, n, "restriction identity fails")

    by_src: dict = {}
    for i, m in enumerate(morphisms):
        by_src.setdefault(m.src, []).append(i)
    pairs1 = ((j, i) for i, m1 in enumerate(morphisms) for j in by_src.get(m1.tgt, ()))
    w, n = _first(
        pairs1,
        lambda j, i: collate_morphism(compose_dist_morphisms(morphisms[j], morphisms[i]), check=False)
        != compose_oplax(K1[j], K1[i]),
    )
    record("K-composition-1", w, n, "composite morphism not preserved")

    w, n = _first(
        ((i,) for i in range(len(morphisms))),
        lambda i: collate_2morphism(identity_dist_2morphism(morphisms[i])) != identity_modification(K1[i]),
    )
    record("K-identity-2", w, n, "identity 2-morphism not preserved")

    K2 = [collate_2morphism(x) for x in two_morphisms]
    w, n = _first(((i,) for i in range(len(K2))), lambda i: not validate_modification(K2[i]).ok)
    record("K-2morphisms-valid", w, n, "collated 2-morphism does not validate")

    x_by_src: dict = {}
    x_by_law: dict = {}
    for i, x in enumerate(two_morphisms):
        x_by_src.setdefault(x.src, []).append(i)
        x_by_law.setdefault(x.src.src, []).append(i)
    X = two_morphisms
    vpairs = ((j, i) for i, x1 in enumerate(X) for j in x_by_src.get(x1.tgt, ()))
    w, n = _first(
        vpairs,
        lambda j, i: collate_2morphism(vcomp_dist_2morphisms(X[j], X[i]), check=False)
        != vcomp_modification(K2[j], K2[i]),
    )
    record("K-vcomp-2", w, n, "vertical composite not preserved")
    hpairs = ((j, i) for i, x1 in enumerate(X) for j in x_by_law.get(x1.src.tgt, ()))
    w, n = _first(
        hpairs,
        lambda j, i: collate_2morphism(hcomp_dist_2morphisms(X[j], X[i]), check=False)
        != hcomp_modification(K2[j], K2[i]),
    )
    record("K-hcomp-2", w, n, "horizontal composite not preserved")
    return report

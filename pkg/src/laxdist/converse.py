"""From decomposable unitary lax functors on ``B x C`` back to laws.

A unitary lax functor ``P`` on a product is decomposable when every mixed
compositor ``gamma_{(id,g),(f,id)}: P(id,g) P(f,id) => P(f,g)`` has a
vertical inverse. Then ``P(-, c)`` and ``P(b, -)`` are the two families and
the crossing is

    sigma_{f,g} = gamma^{-1}_{(id,g),(f,id)} o gamma_{(f,id),(id,g)}

Inverses are always exhibited as cells, never assumed.
"""

from __future__ import annotations

import itertools
from typing import Iterator, Optional

from .collation import (
    _factors,
    collate,
    collate_morphism,
    kappa_B,
    kappa_C,
    restrict_left,
    restrict_right,
    restrict_transformation_left,
    restrict_transformation_right,
)
from .core2 import TwoCategory
from .distlaw import (
    Dist2Morphism,
    DistMorphism,
    DistributiveLaw,
    compose_dist_morphisms,
    identity_dist_morphism,
    is_invertible_law,
    validate_dist_morphism,
    validate_law,
    validate_law_assuming_invertible,
)
from .functors import (
    LaxFunctor,
    Modification,
    OplaxTransformation,
    compose_oplax,
    identity_lax_functor,
    identity_oplax,
    is_pseudofunctor,
    is_unitary,
    shape,
    validate_lax_functor,
    validate_oplax,
)
from .report import StructuralError, ValidationReport, as_budget


class NotDecomposable(ValueError):
    """Raised when a construction needs a decomposable unitary input."""


def _mixed(P: LaxFunctor, f: int, g: int):
    """``gamma_{(id,g),(f,id)}``, the compositor splitting ``(f, g)``."""
    BC, B, C = _factors(P)
    b2, c1 = B.tgt1(f), C.src1(g)
    return P.gamma(BC.one(B.id1(b2), g), BC.one(f, C.id1(c1)))


def _swapped(P: LaxFunctor, f: int, g: int):
    """``gamma_{(f,id),(id,g)}``."""
    BC, B, C = _factors(P)
    b1, c2 = B.src1(f), C.tgt1(g)
    return P.gamma(BC.one(f, C.id1(c2)), BC.one(B.id1(b1), g))


def is_decomposable(P: LaxFunctor) -> tuple:
    """``(flag, witness)``; the witness is the first ``(f, g)`` whose mixed
    compositor has no inverse.

    Raises :class:`NotDecomposable` for non-unitary input, where the notion
    is not defined.
    """
    _, B, C = _factors(P)
    if not is_unitary(P):
        raise NotDecomposable("decomposability is only defined for unitary lax functors")
    D = P.cod
    for f in range(B.n_one_cells):
        for g in range(C.n_one_cells):
            if D.inverse2(_mixed(P, f, g)) is None:
                return False, (f, g)
    return True, None


def mixed_inverses(P: LaxFunctor) -> dict:
    """``{(f, g): inverse of gamma_{(id,g),(f,id)}}``; raises if one is missing."""
    ok, w = is_decomposable(P)
    if not ok:
        raise NotDecomposable(f"mixed compositor at (f, g) = {w} is not invertible")
    _, B, C = _factors(P)
    D = P.cod
    return {(f, g): D.inverse2(_mixed(P, f, g)) for f in range(B.n_one_cells) for g in range(C.n_one_cells)}


def collation_mixed_inverse(s: DistributiveLaw, f: int, g: int) -> int:
    """Closed form of the inverse of the mixed compositor of ``collate(s)``:
    ``(M_{b2}(g) iota^{L_{c1}}_{b2}) * (iota^{M_{b2}}_{c1} L_{c1}(f))``.

    It is a two-sided inverse only when the families are unitary.
    """
    B, C, D = s.B, s.C, s.D
    b2, c1 = B.tgt1(f), C.src1(g)
    left = D.hcomp(D.id2(s.M[b2].one(g)), s.L[c1].iota(b2))
    right = D.hcomp(s.M[b2].iota(c1), D.id2(s.L[c1].one(f)))
    return D.hcomp(left, right)


# ----------------------------------------------------------------------
# the extraction T


def extract_law_T(P: LaxFunctor, check: bool = True) -> DistributiveLaw:
    """The law with ``L_c = P(-, c)``, ``M_b = P(b, -)`` and the crossing
    read off the two compositors through ``(f, g)``."""
    _, B, C = _factors(P)
    if check and not validate_lax_functor(P).ok:
        raise ValueError("extract_law_T: input does not validate")
    inv = mixed_inverses(P)
    D = P.cod
    sigma = [
        [D.vcomp(inv[(f, g)], _swapped(P, f, g)) for g in range(C.n_one_cells)]
        for f in range(B.n_one_cells)
    ]
    L = [restrict_right(P, c) for c in range(C.n_objects)]
    M = [restrict_left(P, b) for b in range(B.n_objects)]
    return DistributiveLaw(B, C, D, L, M, sigma, name=f"T({P.name})" if P.name else "")


def T_on_morphisms(theta: OplaxTransformation) -> DistMorphism:
    """Restrict an oplax transformation of bifunctors to both families."""
    s1, s2 = extract_law_T(theta.src_f, check=False), extract_law_T(theta.tgt_f, check=False)
    _, B, C = _factors(theta.src_f)
    return DistMorphism(
        s1,
        s2,
        [restrict_transformation_right(theta, c) for c in range(C.n_objects)],
        [restrict_transformation_left(theta, b) for b in range(B.n_objects)],
    )


def T_on_2morphisms(x: Modification) -> Dist2Morphism:
    m1, m2 = T_on_morphisms(x.src_t), T_on_morphisms(x.tgt_t)
    BC, B, C = _factors(x.src_t.src_f)
    bethC = [
        Modification(m1.thetaC[c], m2.thetaC[c], [x.m(BC.obj(b, c)) for b in range(B.n_objects)])
        for c in range(C.n_objects)
    ]
    bethB = [
        Modification(m1.thetaB[b], m2.thetaB[b], [x.m(BC.obj(b, c)) for c in range(C.n_objects)])
        for b in range(B.n_objects)
    ]
    return Dist2Morphism(m1, m2, bethC, bethB)


# ----------------------------------------------------------------------
# the witnesses of the equivalence


def witness_lambda(P: LaxFunctor) -> OplaxTransformation:
    """``K(T(P)) => P`` with identity 1-cells and the mixed compositors."""
    KT = collate(extract_law_T(P))
    BC, B, C = _factors(P)
    D = P.cod
    comp2 = []
    for fg in range(BC.n_one_cells):
        f, g = BC.split1(fg)
        comp2.append(_mixed(P, f, g))
    return OplaxTransformation(KT, P, [D.id1(P.ob(x)) for x in range(BC.n_objects)], comp2, name="lambda")


def witness_lambda_inverse(P: LaxFunctor) -> OplaxTransformation:
    lam = witness_lambda(P)
    BC, B, C = _factors(P)
    inv = mixed_inverses(P)
    comp2 = [inv[BC.split1(fg)] for fg in range(BC.n_one_cells)]
    return OplaxTransformation(P, lam.src_f, lam.comp1, comp2, name="lambda^-1")


def witness_kappa(s: DistributiveLaw) -> DistMorphism:
    """``s => T(K(s))`` assembled from the canonical icons."""
    P = collate(s)
    TK = extract_law_T(P, check=False)
    return DistMorphism(
        s,
        TK,
        [kappa_C(s, c, P) for c in range(s.C.n_objects)],
        [kappa_B(s, b, P) for b in range(s.B.n_objects)],
        name="kappa",
    )


def _invert_icon(t: OplaxTransformation, src, tgt) -> OplaxTransformation:
    D = t.cod
    inv = []
    for a in t.comp2:
        b = D.inverse2(a)
        if b is None:
            raise NotDecomposable("icon component has no inverse")
        inv.append(b)
    return OplaxTransformation(src, tgt, t.comp1, inv)


def witness_kappa_inverse(s: DistributiveLaw) -> DistMorphism:
    k = witness_kappa(s)
    TK = k.tgt
    return DistMorphism(
        TK,
        s,
        [_invert_icon(t, TK.L[c], s.L[c]) for c, t in enumerate(k.thetaC)],
        [_invert_icon(t, TK.M[b], s.M[b]) for b, t in enumerate(k.thetaB)],
        name="kappa^-1",
    )


def check_lambda(P: LaxFunctor, transformations=()) -> ValidationReport:
    """``lambda_P`` validates, its exhibited inverse is two-sided, and it is
    strictly natural against each ``theta: P => Q`` supplied."""
    report = ValidationReport(subject="lambda witness")
    lam = witness_lambda(P)
    inv = witness_lambda_inverse(P)
    report.merge(validate_oplax(lam), prefix="lambda:")
    report.merge(validate_oplax(inv), prefix="inverse:")
    ok = compose_oplax(inv, lam) == identity_oplax(lam.src_f) and compose_oplax(lam, inv) == identity_oplax(P)
    report.record("lambda-invertible", None if ok else ("inverse",), "inverse is not two-sided", 1)
    w = None
    for i, theta in enumerate(transformations):
        if theta.src_f != P:
            raise StructuralError("transformation does not start at P")
        lamQ = witness_lambda(theta.tgt_f)
        KT_theta = collate_morphism(T_on_morphisms(theta), check=False)
        if compose_oplax(lamQ, KT_theta) != compose_oplax(theta, lam):
            w = ("transformation", i)
            break
    report.record("lambda-naturality", w, "naturality square differs", len(transformations))
    return report


def check_kappa(s: DistributiveLaw, morphisms=()) -> ValidationReport:
    """``kappa_s`` validates, its exhibited inverse is two-sided, and it is
    strictly natural against each morphism ``m: s => s2`` supplied."""
    report = ValidationReport(subject="kappa witness")
    k = witness_kappa(s)
    inv = witness_kappa_inverse(s)
    report.merge(validate_dist_morphism(k), prefix="kappa:")
    report.merge(validate_dist_morphism(inv), prefix="inverse:")
    ok = (
        compose_dist_morphisms(inv, k) == identity_dist_morphism(s)
        and compose_dist_morphisms(k, inv) == identity_dist_morphism(k.tgt)
    )
    report.record("kappa-invertible", None if ok else ("inverse",), "inverse is not two-sided", 1)
    w = None
    for i, m in enumerate(morphisms):
        if m.src != s:
            raise StructuralError("morphism does not start at s")
        k2 = witness_kappa(m.tgt)
        TKm = T_on_morphisms(collate_morphism(m, check=False))
        if compose_dist_morphisms(k2, m) != compose_dist_morphisms(TKm, k):
            w = ("morphism", i)
            break
    report.record("kappa-naturality", w, "naturality square differs", len(morphisms))
    return report


def extract_law_pseudo(P: LaxFunctor) -> tuple:
    """Extract the law of a pseudofunctor; returns ``(law, report)`` where the
    report records the reduced and full validators and their agreement."""
    if not is_pseudofunctor(P):
        raise NotDecomposable("input is not a pseudofunctor")
    s = extract_law_T(P)
    report = ValidationReport(subject="pseudo extraction")
    full = validate_law(s)
    reduced = validate_law_assuming_invertible(s)
    report.merge(full, prefix="full:")
    report.record("sigma-invertible", None if is_invertible_law(s) else ("sigma",), "a crossing is not invertible", 1)
    report.merge(reduced, prefix="reduced:")
    report.record("reduced-agrees", None if reduced.ok == full.ok else ("verdict",), "validators disagree", 1)
    return s, report


# ----------------------------------------------------------------------
# a non-decomposable example


def find_non_decomposable(BC_dom, D: TwoCategory, budget=None) -> Optional[LaxFunctor]:
    """First unitary, non-decomposable lax functor ``BC_dom -> D``."""
    from .functors import enumerate_lax_functors

    for P in enumerate_lax_functors(BC_dom, D, as_budget(budget)):
        if is_unitary(P) and not is_decomposable(P)[0]:
            return P
    return None


# ----------------------------------------------------------------------
# braidings


def _one_object(X: TwoCategory):
    if X.n_objects != 1:
        raise StructuralError("braidings need a one-object 2-category")


def braiding_candidates(X: TwoCategory) -> Iterator[list]:
    """Every table ``c[x][y]`` of 2-cells ``x y => y x``, lexicographic."""
    _one_object(X)
    n = X.n_one_cells
    homs = [X.hom2(X.comp1(x, y), X.comp1(y, x)) for x in range(n) for y in range(n)]
    for flat in itertools.product(*homs):
        yield [list(flat[x * n : (x + 1) * n]) for x in range(n)]


def check_braiding(X: TwoCategory, c) -> ValidationReport:
    """Braiding axioms, checked directly on the tables of ``X``.

    ``x (x) y`` is ``comp1(x, y)`` and ``c[x][y]: x y => y x``.
    """
    _one_object(X)
    n = X.n_one_cells
    report = ValidationReport(subject="braiding")
    w = next(
        (
            (x, y)
            for x in range(n)
            for y in range(n)
            if X.src2(c[x][y]) != X.comp1(x, y) or X.tgt2(c[x][y]) != X.comp1(y, x)
        ),
        None,
    )
    report.record("braid-typing", w, "component has the wrong endpoints", n * n)
    if w is not None:
        return report
    w = next(((x, y) for x in range(n) for y in range(n) if X.inverse2(c[x][y]) is None), None)
    report.record("braid-invertible", w, "component has no inverse", n * n)
    w = None
    for a in range(X.n_two_cells):
        for b in range(X.n_two_cells):
            x, x2 = X.src2(a), X.tgt2(a)
            y, y2 = X.src2(b), X.tgt2(b)
            if X.vcomp(c[x2][y2], X.hcomp(a, b)) != X.vcomp(X.hcomp(b, a), c[x][y]):
                w = (a, b)
                break
        if w:
            break
    report.record("braid-naturality", w, "naturality square differs", X.n_two_cells**2)
    w1 = w2 = None
    for x in range(n):
        for y in range(n):
            for z in range(n):
                idx, idy, idz = X.id2(x), X.id2(y), X.id2(z)
                lhs = c[x][X.comp1(y, z)]
                rhs = X.vcomp(X.hcomp(idy, c[x][z]), X.hcomp(c[x][y], idz))
                if w1 is None and lhs != rhs:
                    w1 = (x, y, z)
                lhs = c[X.comp1(x, y)][z]
                rhs = X.vcomp(X.hcomp(c[x][z], idy), X.hcomp(idx, c[y][z]))
                if w2 is None and lhs != rhs:
                    w2 = (x, y, z)
    report.record("hexagon-1", w1, "c_{x,yz} differs from its two-step form", n**3)
    report.record("hexagon-2", w2, "c_{xy,z} differs from its two-step form", n**3)
    return report


def braiding_to_law(X: TwoCategory, c) -> DistributiveLaw:
    """The law with ``L = M = Id_X`` and crossing ``c``."""
    _one_object(X)
    I = identity_lax_functor(X)
    return DistributiveLaw(X, X, X, [I], [I], [list(row) for row in c], name="braiding law")


def law_to_braiding(s: DistributiveLaw) -> list:
    if not (s.B is s.C is s.D) or s.B.n_objects != 1:
        raise StructuralError("not a law on a one-object 2-category")
    I = identity_lax_functor(s.B)
    if s.L[0] != I or s.M[0] != I:
        raise StructuralError("law families are not the identity")
    n = s.B.n_one_cells
    return [[s.s(x, y) for y in range(n)] for x in range(n)]


def braidings(X: TwoCategory) -> list:
    """All braidings on ``X``, by exhaustive search over candidate tables."""
    return [c for c in braiding_candidates(X) if check_braiding(X, c).ok]


def braiding_agreement(X: TwoCategory) -> Optional[list]:
    """First candidate where the braiding checker and the law validator
    (plus invertibility) disagree, or None."""
    for c in braiding_candidates(X):
        s = braiding_to_law(X, c)
        via_law = validate_law(s).ok and is_invertible_law(s)
        if via_law != check_braiding(X, c).ok:
            return c
    return None

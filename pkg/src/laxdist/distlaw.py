"""Distributive laws of lax functors, their morphisms and 2-morphisms.

A law over ``(B, C, D)`` consists of lax functors ``L[c]: B -> D`` (one per
object of C), ``M[b]: C -> D`` (one per object of B) meeting on objects,
``L[c].ob(b) == M[b].ob(c)``, and crossings

    sigma[f][g]: L_{c2}(f) M_{b1}(g) => M_{b2}(g) L_{c1}(f)

for ``f: b1 -> b2`` in B and ``g: c1 -> c2`` in C. The six coherence axioms
are named ``D1`` .. ``D6``: compatibility with the compositors of M and of L,
with the unitors of M and of L, and naturality in ``g`` and in ``f``.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core2 import TwoCategory, terminal_2category
from .functors import (
    LaxFunctor,
    Modification,
    OplaxTransformation,
    compose_oplax,
    hcomp_modification,
    identity_modification,
    identity_oplax,
    modification_equations,
    modification_holds,
    monad,
    oplax_equations,
    oplax_holds,
    shape,
    trusted,
    validate_lax_functor,
    validate_modification,
    validate_oplax,
    vcomp_modification,
)
from .report import StructuralError, ValidationReport, as_budget, scan
from .search import backtrack

LAW_AXIOMS = ("structure", "grid", "components", "typing", "D1", "D2", "D3", "D4", "D5", "D6")
REDUCED_AXIOMS = ("D1", "D2", "D5", "D6")


class NotInvertible(ValueError):
    """A crossing has no two-sided vertical inverse."""


# ----------------------------------------------------------------------
# laws


@dataclass(frozen=True, eq=False)
class DistributiveLaw:
    B: TwoCategory
    C: TwoCategory
    D: TwoCategory
    L: tuple
    M: tuple
    sigma: tuple  # sigma[f][g]
    name: str = ""

    def __post_init__(self):
        B, C, D = self.B, self.C, self.D
        put = functools.partial(object.__setattr__, self)
        put("L", tuple(self.L))
        put("M", tuple(self.M))
        if len(self.L) != C.n_objects:
            raise StructuralError(f"L needs one functor per object of C ({C.n_objects}), got {len(self.L)}")
        if len(self.M) != B.n_objects:
            raise StructuralError(f"M needs one functor per object of B ({B.n_objects}), got {len(self.M)}")
        for c, F in enumerate(self.L):
            if F.dom is not B or F.cod is not D:
                raise StructuralError(f"L[{c}] is not a functor B -> D")
        for b, F in enumerate(self.M):
            if F.dom is not C or F.cod is not D:
                raise StructuralError(f"M[{b}] is not a functor C -> D")
        sig = self.sigma
        if isinstance(sig, dict):
            try:
                sig = [[sig[(f, g)] for g in range(C.n_one_cells)] for f in range(B.n_one_cells)]
            except KeyError as e:
                raise StructuralError(f"sigma entry missing for {e.args[0]}") from None
        sig = tuple(tuple(int(v) for v in row) for row in sig)
        if len(sig) != B.n_one_cells or any(len(r) != C.n_one_cells for r in sig):
            raise StructuralError("sigma must be a table indexed by (1-cell of B, 1-cell of C)")
        for row in sig:
            for v in row:
                if not 0 <= v < D.n_two_cells:
                    raise StructuralError(f"sigma entry {v} out of range")
        put("sigma", sig)

    def s(self, f, g):
        return self.sigma[f][g]

    @functools.cached_property
    def key(self):
        return (
            tuple(F.key for F in self.L),
            tuple(F.key for F in self.M),
            self.sigma,
        )

    def __eq__(self, other):
        return isinstance(other, DistributiveLaw) and self.key == other.key

    @functools.cached_property
    def _hash(self):
        return hash(self.key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<DistributiveLaw{label} over {self.B.name} x {self.C.name} -> {self.D.name}>"

    def with_sigma(self, sigma, name="") -> "DistributiveLaw":
        return DistributiveLaw(self.B, self.C, self.D, self.L, self.M, sigma, name or self.name)


def crossing_type(B, C, D, L, M, f, g):
    """Source and target 1-cells of ``sigma[f][g]``."""
    b1, b2 = B.src1(f), B.tgt1(f)
    c1, c2 = C.src1(g), C.tgt1(g)
    return (
        D.comp1(L[c2].one(f), M[b1].one(g)),
        D.comp1(M[b2].one(g), L[c1].one(f)),
    )


@functools.lru_cache(maxsize=None)
def law_equations(B: TwoCategory, C: TwoCategory) -> tuple:
    """``(axiom, witness, keys)`` for D1..D6; keys name sigma entries."""
    eqs = []
    pB, pC = shape(B).pairs1, shape(C).pairs1
    for f in range(B.n_one_cells):
        for g2, g in pC:
            eqs.append(("D1", (f, g2, g), ((f, C.comp1(g2, g)), (f, g), (f, g2))))
    for f2, f in pB:
        for g in range(C.n_one_cells):
            eqs.append(("D2", (f2, f, g), ((B.comp1(f2, f), g), (f2, g), (f, g))))
    for f in range(B.n_one_cells):
        for c in range(C.n_objects):
            eqs.append(("D3", (f, c), ((f, C.id1(c)),)))
    for b in range(B.n_objects):
        for g in range(C.n_one_cells):
            eqs.append(("D4", (b, g), ((B.id1(b), g),)))
    for f in range(B.n_one_cells):
        for beta in range(C.n_two_cells):
            eqs.append(("D5", (f, beta), ((f, C.src2(beta)), (f, C.tgt2(beta)))))
    for alpha in range(B.n_two_cells):
        for g in range(C.n_one_cells):
            eqs.append(("D6", (alpha, g), ((B.src2(alpha), g), (B.tgt2(alpha), g))))
    return tuple(eqs)


def law_holds(B, C, D, L, M, s, axiom, w) -> bool:
    """Evaluate one law equation; ``s(f, g)`` returns a crossing."""
    hc, vc, i2 = D.hcomp, D.vcomp, D.id2
    if axiom == "D1":
        f, g2, g = w
        b1, b2 = B.src1(f), B.tgt1(f)
        c1, c3 = C.src1(g), C.tgt1(g2)
        left = vc(s(f, C.comp1(g2, g)), hc(i2(L[c3].one(f)), M[b1].gamma(g2, g)))
        right = D.vc(
            hc(M[b2].gamma(g2, g), i2(L[c1].one(f))),
            hc(i2(M[b2].one(g2)), s(f, g)),
            hc(s(f, g2), i2(M[b1].one(g))),
        )
        return left == right
    if axiom == "D2":
        f2, f, g = w
        b1, b3 = B.src1(f), B.tgt1(f2)
        c1, c2 = C.src1(g), C.tgt1(g)
        left = vc(s(B.comp1(f2, f), g), hc(L[c2].gamma(f2, f), i2(M[b1].one(g))))
        right = D.vc(
            hc(i2(M[b3].one(g)), L[c1].gamma(f2, f)),
            hc(s(f2, g), i2(L[c1].one(f))),
            hc(i2(L[c2].one(f2)), s(f, g)),
        )
        return left == right
    if axiom == "D3":
        f, c = w
        b1, b2 = B.src1(f), B.tgt1(f)
        Lf = i2(L[c].one(f))
        return vc(s(f, C.id1(c)), hc(Lf, M[b1].iota(c))) == hc(M[b2].iota(c), Lf)
    if axiom == "D4":
        b, g = w
        c1, c2 = C.src1(g), C.tgt1(g)
        Mg = i2(M[b].one(g))
        return vc(s(B.id1(b), g), hc(L[c2].iota(b), Mg)) == hc(Mg, L[c1].iota(b))
    if axiom == "D5":
        f, beta = w
        b1, b2 = B.src1(f), B.tgt1(f)
        g, g2 = C.src2(beta), C.tgt2(beta)
        c1, c2 = C.src1(g), C.tgt1(g)
        left = vc(s(f, g2), hc(i2(L[c2].one(f)), M[b1].two(beta)))
        right = vc(hc(M[b2].two(beta), i2(L[c1].one(f))), s(f, g))
        return left == right
    if axiom == "D6":
        alpha, g = w
        f, f2 = B.src2(alpha), B.tgt2(alpha)
        b1, b2 = B.src1(f), B.tgt1(f)
        c1, c2 = C.src1(g), C.tgt1(g)
        left = vc(s(f2, g), hc(L[c2].two(alpha), i2(M[b1].one(g))))
        right = vc(hc(i2(M[b2].one(g)), L[c1].two(alpha)), s(f, g))
        return left == right
    raise ValueError(f"unknown axiom {axiom!r}")


def grid_witness(B, C, L, M) -> Optional[tuple]:
    for b in range(B.n_objects):
        for c in range(C.n_objects):
            if L[c].ob(b) != M[b].ob(c):
                return (b, c)
    return None


def _component_witness(L, M, budget) -> Optional[tuple]:
    for c, F in enumerate(L):
        r = validate_lax_functor(F, budget)
        if not r.ok:
            return ("L", c, r.failed[0]) + r.violations[0].witness
    for b, F in enumerate(M):
        r = validate_lax_functor(F, budget)
        if not r.ok:
            return ("M", b, r.failed[0]) + r.violations[0].witness
    return None


def _typing_witness(s: DistributiveLaw) -> Optional[tuple]:
    B, C, D = s.B, s.C, s.D
    for f in range(B.n_one_cells):
        for g in range(C.n_one_cells):
            src, tgt = crossing_type(B, C, D, s.L, s.M, f, g)
            if D.src2(s.s(f, g)) != src or D.tgt2(s.s(f, g)) != tgt:
                return (f, g)
    return None


def _validate(s, axioms, budget, threads, components=True):
    budget = as_budget(budget)
    report = ValidationReport(subject=f"distributive law {s.name}".strip())
    w = grid_witness(s.B, s.C, s.L, s.M)
    report.record("grid", w, "L_C(B) differs from M_B(C)", 1)
    if w is not None:
        return report
    if components:
        w = _component_witness(s.L, s.M, budget)
        report.record("components", w, "a component lax functor fails to validate", 1)
        if w is not None:
            return report
    w = _typing_witness(s)
    report.record("typing", w, "sigma[f][g] has the wrong endpoints", 1)
    if w is not None:
        return report
    posetal = s.D.locally_posetal
    eqs = law_equations(s.B, s.C)
    budget.reserve(len(eqs), "validate_law")
    for axiom in axioms:
        if posetal and axiom in ("D5", "D6"):
            report.vacuous(axiom)
            continue
        items = [(w,) for ax, w, _ in eqs if ax == axiom]
        bad = scan(items, lambda w, ax=axiom: law_holds(s.B, s.C, s.D, s.L, s.M, s.s, ax, w), threads)
        report.record(axiom, None if bad is None else bad[0], f"{axiom} fails", len(items))
        budget.spend(len(items))
    return report


def validate_law(s: DistributiveLaw, budget=None, threads: int = 1, components: bool = True) -> ValidationReport:
    """Check grid compatibility, the component functors, crossing typing and
    D1..D6 in that order. In a locally posetal ``D`` the naturality axioms
    D5 and D6 are reported as ``vacuous``."""
    return _validate(s, ("D1", "D2", "D3", "D4", "D5", "D6"), budget, threads, components)


def sigma_inverses(s: DistributiveLaw) -> dict:
    """Inverse of every crossing; raises :class:`NotInvertible` otherwise."""
    out = {}
    for f in range(s.B.n_one_cells):
        for g in range(s.C.n_one_cells):
            inv = s.D.inverse2(s.s(f, g))
            if inv is None:
                raise NotInvertible(f"sigma[{f}][{g}] = {s.s(f, g)} has no inverse")
            out[(f, g)] = inv
    return out


def is_invertible_law(s: DistributiveLaw) -> bool:
    try:
        sigma_inverses(s)
    except NotInvertible:
        return False
    return True


def validate_law_assuming_invertible(s: DistributiveLaw, budget=None, threads: int = 1, components: bool = True) -> ValidationReport:
    """The reduced check for invertible crossings: D1, D2, D5 and D6 only.

    Raises :class:`NotInvertible` when some crossing has no inverse.
    """
    sigma_inverses(s)
    return _validate(s, REDUCED_AXIOMS, budget, threads, components)


def enumerate_laws(L: Sequence[LaxFunctor], M: Sequence[LaxFunctor], budget=None, axioms=None) -> Iterator[DistributiveLaw]:
    """Every crossing table making ``(L, M, sigma)`` a law, in lexicographic
    order of the table. ``axioms`` restricts the equations used (the reduced
    set is handy for comparing against the full one)."""
    budget = as_budget(budget)
    L, M = tuple(L), tuple(M)
    if not L or not M:
        raise StructuralError("enumerate_laws needs non-empty families")
    B, C, D = L[0].dom, M[0].dom, L[0].cod
    if grid_witness(B, C, L, M) is not None:
        raise StructuralError(f"families are not grid compatible at {grid_witness(B, C, L, M)}")
    axioms = set(axioms or ("D1", "D2", "D3", "D4", "D5", "D6"))
    if D.locally_posetal:
        axioms -= {"D5", "D6"}
    variables = [(f, g) for f in range(B.n_one_cells) for g in range(C.n_one_cells)]

    def domain(var, a):
        return D.hom2(*crossing_type(B, C, D, L, M, *var))

    def constraint(axiom, w):
        return lambda a: law_holds(B, C, D, L, M, lambda f, g: a[(f, g)], axiom, w)

    cons = [(keys, constraint(ax, w)) for ax, w, keys in law_equations(B, C) if ax in axioms]
    for a in backtrack(variables, domain, cons, budget, "enumerate_laws"):
        sigma = [[a[(f, g)] for g in range(C.n_one_cells)] for f in range(B.n_one_cells)]
        yield DistributiveLaw(B, C, D, L, M, sigma)


# ----------------------------------------------------------------------
# monad laws: both bases terminal


def monad_law(S: LaxFunctor, T: LaxFunctor, sigma: Optional[int] = None, name: str = "") -> DistributiveLaw:
    """The law ``sigma: S T => T S`` between monads on the same object.

    ``sigma`` defaults to the unique 2-cell of the right type (locally
    posetal codomains).
    """
    one = terminal_2category()
    D = S.cod
    if sigma is None:
        cells = D.hom2(D.comp1(S.one(0), T.one(0)), D.comp1(T.one(0), S.one(0)))
        if len(cells) != 1:
            raise StructuralError(f"no unique crossing S T => T S ({len(cells)} candidates)")
        sigma = cells[0]
    return DistributiveLaw(one, one, D, (S,), (T,), [[sigma]], name)


def trivial_law(D: TwoCategory, obj: int = 0) -> DistributiveLaw:
    """Identity monads on ``obj`` crossed by the identity 2-cell."""
    e = D.id1(obj)
    F = monad(D, e, mu=D.id2(e), eta=D.id2(e), obj=obj)
    return monad_law(F, F, D.id2(e), name="trivial")


# ----------------------------------------------------------------------
# morphisms


@dataclass(frozen=True, eq=False)
class DistMorphism:
    """``thetaC[c]: L1_c => L2_c`` and ``thetaB[b]: M1_b => M2_b``."""

    src: DistributiveLaw
    tgt: DistributiveLaw
    thetaC: tuple
    thetaB: tuple
    name: str = ""

    def __post_init__(self):
        s1, s2 = self.src, self.tgt
        if (s1.B, s1.C, s1.D) != (s2.B, s2.C, s2.D):
            raise StructuralError("morphism between laws over different categories")
        put = functools.partial(object.__setattr__, self)
        put("thetaC", tuple(self.thetaC))
        put("thetaB", tuple(self.thetaB))
        if len(self.thetaC) != s1.C.n_objects or len(self.thetaB) != s1.B.n_objects:
            raise StructuralError("morphism needs one transformation per object")
        for c, t in enumerate(self.thetaC):
            if t.src_f != s1.L[c] or t.tgt_f != s2.L[c]:
                raise StructuralError(f"thetaC[{c}] does not go from L1[{c}] to L2[{c}]")
        for b, t in enumerate(self.thetaB):
            if t.src_f != s1.M[b] or t.tgt_f != s2.M[b]:
                raise StructuralError(f"thetaB[{b}] does not go from M1[{b}] to M2[{b}]")

    @functools.cached_property
    def key(self):
        return (self.src.key, self.tgt.key, tuple(t.key for t in self.thetaC), tuple(t.key for t in self.thetaB))

    def __eq__(self, other):
        return isinstance(other, DistMorphism) and self.key == other.key

    @functools.cached_property
    def _hash(self):
        return hash(self.key)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<DistMorphism {self.name or ''}>"


def yang_baxter_holds(s1, s2, tC, tB, f, g) -> bool:
    """The Yang–Baxter equation at ``(f, g)``; ``tC(c)``/``tB(b)`` return
    objects with ``c1``/``c2`` accessors."""
    B, C, D = s1.B, s1.C, s1.D
    hc, i2 = D.hcomp, D.id2
    b1, b2 = B.src1(f), B.tgt1(f)
    c1, c2 = C.src1(g), C.tgt1(g)
    left = D.vc(
        hc(s2.s(f, g), i2(tB(b1).c1(c1))),
        hc(i2(s2.L[c2].one(f)), tB(b1).c2(g)),
        hc(tC(c2).c2(f), i2(s1.M[b1].one(g))),
    )
    right = D.vc(
        hc(i2(s2.M[b2].one(g)), tC(c1).c2(f)),
        hc(tB(b2).c2(g), i2(s1.L[c1].one(f))),
        hc(i2(tB(b2).c1(c2)), s1.s(f, g)),
    )
    return left == right


def validate_dist_morphism(m: DistMorphism, budget=None, threads: int = 1, components: bool = True) -> ValidationReport:
    """Check the component transformations, agreement of their 1-cell
    components and the Yang–Baxter equation for every ``(f, g)``."""
    budget = as_budget(budget)
    s1, s2 = m.src, m.tgt
    B, C = s1.B, s1.C
    report = ValidationReport(subject=f"morphism of laws {m.name}".strip())
    if components:
        w = None
        for label, family in (("thetaC", m.thetaC), ("thetaB", m.thetaB)):
            for i, t in enumerate(family):
                r = validate_oplax(t, budget)
                if not r.ok and w is None:
                    w = (label, i, r.failed[0]) + r.violations[0].witness
        report.record("components", w, "a component oplax transformation fails to validate", 1)
        if w is not None:
            return report
    w = next(
        (
            (b, c)
            for b in range(B.n_objects)
            for c in range(C.n_objects)
            if m.thetaC[c].c1(b) != m.thetaB[b].c1(c)
        ),
        None,
    )
    report.record("agreement", w, "thetaC_C(B) differs from thetaB_B(C)", 1)
    if w is not None:
        return report
    items = [(f, g) for f in range(B.n_one_cells) for g in range(C.n_one_cells)]
    budget.spend(len(items), "validate_dist_morphism")
    bad = scan(
        items,
        lambda f, g: yang_baxter_holds(s1, s2, m.thetaC.__getitem__, m.thetaB.__getitem__, f, g),
        threads,
    )
    report.record("yang-baxter", bad, "Yang-Baxter equation fails", len(items))
    return report


def identity_dist_morphism(s: DistributiveLaw) -> DistMorphism:
    return DistMorphism(s, s, [identity_oplax(F) for F in s.L], [identity_oplax(F) for F in s.M])


@functools.lru_cache(maxsize=1 << 18)
def compose_dist_morphisms(m2: DistMorphism, m1: DistMorphism) -> DistMorphism:
    """First ``m1`` then ``m2``, componentwise."""
    if m1.tgt != m2.src:
        raise StructuralError("compose_dist_morphisms: morphisms are not composable")
    return trusted(
        DistMorphism,
        m1.src,
        m2.tgt,
        tuple(compose_oplax(b, a) for b, a in zip(m2.thetaC, m1.thetaC)),
        tuple(compose_oplax(b, a) for b, a in zip(m2.thetaB, m1.thetaB)),
    )


class _TransformationView:
    def __init__(self, F1, F2, c1, c2):
        self.src_f, self.tgt_f = F1, F2
        self.c1, self.c2 = c1, c2


def enumerate_dist_morphisms(s1: DistributiveLaw, s2: DistributiveLaw, budget=None) -> Iterator[DistMorphism]:
    """Every morphism ``s1 -> s2``.

    The shared 1-cell components ``theta[b, c]`` are single search variables,
    so agreement holds by construction. Order: lexicographic in the shared
    1-cells, then the 2-cells of thetaC, then those of thetaB.
    """
    budget = as_budget(budget)
    B, C, D = s1.B, s1.C, s1.D

    def viewC(a, c):
        return _TransformationView(
            s1.L[c], s2.L[c], lambda b: a[("t", b, c)], lambda f: a[("tc", c, f)]
        )

    def viewB(a, b):
        return _TransformationView(
            s1.M[b], s2.M[b], lambda c: a[("t", b, c)], lambda g: a[("tb", b, g)]
        )

    variables = (
        [("t", b, c) for b in range(B.n_objects) for c in range(C.n_objects)]
        + [("tc", c, f) for c in range(C.n_objects) for f in range(B.n_one_cells)]
        + [("tb", b, g) for b in range(B.n_objects) for g in range(C.n_one_cells)]
    )

    def domain(var, a):
        if var[0] == "t":
            _, b, c = var
            return D.hom1(s1.L[c].ob(b), s2.L[c].ob(b))
        if var[0] == "tc":
            _, c, f = var
            x, y = B.src1(f), B.tgt1(f)
            return D.hom2(D.comp1(a[("t", y, c)], s1.L[c].one(f)), D.comp1(s2.L[c].one(f), a[("t", x, c)]))
        _, b, g = var
        x, y = C.src1(g), C.tgt1(g)
        return D.hom2(D.comp1(a[("t", b, y)], s1.M[b].one(g)), D.comp1(s2.M[b].one(g), a[("t", b, x)]))

    cons = []
    for c in range(C.n_objects):
        for ax, w, keys in oplax_equations(B):
            mapped = [("t", k[1], c) if k[0] == "c1" else ("tc", c, k[1]) for k in keys]
            cons.append((mapped, (lambda c, ax, w: lambda a: oplax_holds(viewC(a, c), ax, w))(c, ax, w)))
    for b in range(B.n_objects):
        for ax, w, keys in oplax_equations(C):
            mapped = [("t", b, k[1]) if k[0] == "c1" else ("tb", b, k[1]) for k in keys]
            cons.append((mapped, (lambda b, ax, w: lambda a: oplax_holds(viewB(a, b), ax, w))(b, ax, w)))
    for f in range(B.n_one_cells):
        for g in range(C.n_one_cells):
            b1, b2 = B.src1(f), B.tgt1(f)
            c1, c2 = C.src1(g), C.tgt1(g)
            keys = [("tc", c2, f), ("tc", c1, f), ("tb", b1, g), ("tb", b2, g)]

            def yb(a, f=f, g=g):
                return yang_baxter_holds(s1, s2, lambda c: viewC(a, c), lambda b: viewB(a, b), f, g)

            cons.append((keys, yb))
    for a in backtrack(variables, domain, cons, budget, "enumerate_dist_morphisms"):
        thetaC = [
            OplaxTransformation(
                s1.L[c],
                s2.L[c],
                [a[("t", b, c)] for b in range(B.n_objects)],
                [a[("tc", c, f)] for f in range(B.n_one_cells)],
            )
            for c in range(C.n_objects)
        ]
        thetaB = [
            OplaxTransformation(
                s1.M[b],
                s2.M[b],
                [a[("t", b, c)] for c in range(C.n_objects)],
                [a[("tb", b, g)] for g in range(C.n_one_cells)],
            )
            for b in range(B.n_objects)
        ]
        yield DistMorphism(s1, s2, thetaC, thetaB)


# ----------------------------------------------------------------------
# 2-morphisms


@dataclass(frozen=True, eq=False)
class Dist2Morphism:
    """Modifications ``bethC[c]: thetaC[c] -> zetaC[c]`` and
    ``bethB[b]: thetaB[b] -> zetaB[b]``."""

    src: DistMorphism
    tgt: DistMorphism
    bethC: tuple
    bethB: tuple
    name: str = ""

    def __post_init__(self):
        m1, m2 = self.src, self.tgt
        if m1.src != m2.src or m1.tgt != m2.tgt:
            raise StructuralError("2-morphism between non-parallel morphisms")
        put = functools.partial(object.__setattr__, self)
        put("bethC", tuple(self.bethC))
        put("bethB", tuple(self.bethB))
        for c, x in enumerate(self.bethC):
            if x.src_t != m1.thetaC[c] or x.tgt_t != m2.thetaC[c]:
                raise StructuralError(f"bethC[{c}] has the wrong source or target")
        for b, x in enumerate(self.bethB):
            if x.src_t != m1.thetaB[b] or x.tgt_t != m2.thetaB[b]:
                raise StructuralError(f"bethB[{b}] has the wrong source or target")

    @functools.cached_property
    def key(self):
        return (self.src.key, self.tgt.key, tuple(x.key for x in self.bethC), tuple(x.key for x in self.bethB))

    def __eq__(self, other):
        return isinstance(other, Dist2Morphism) and self.key == other.key

    @functools.cached_property
    def _hash(self):
        return hash(self.key)

    def __hash__(self):
        return self._hash


def validate_dist_2morphism(x: Dist2Morphism, budget=None, components: bool = True) -> ValidationReport:
    budget = as_budget(budget)
    B, C = x.src.src.B, x.src.src.C
    report = ValidationReport(subject=f"2-morphism of laws {x.name}".strip())
    if components:
        w = None
        for label, family in (("bethC", x.bethC), ("bethB", x.bethB)):
            for i, m in enumerate(family):
                r = validate_modification(m, budget)
                if not r.ok and w is None:
                    w = (label, i, r.failed[0]) + r.violations[0].witness
        report.record("components", w, "a component modification fails to validate", 1)
        if w is not None:
            return report
    w = next(
        (
            (b, c)
            for b in range(B.n_objects)
            for c in range(C.n_objects)
            if x.bethC[c].m(b) != x.bethB[b].m(c)
        ),
        None,
    )
    report.record("beth-agreement", w, "bethC_C(B) differs from bethB_B(C)", B.n_objects * C.n_objects)
    return report


def identity_dist_2morphism(m: DistMorphism) -> Dist2Morphism:
    return Dist2Morphism(m, m, [identity_modification(t) for t in m.thetaC], [identity_modification(t) for t in m.thetaB])


def vcomp_dist_2morphisms(x2: Dist2Morphism, x1: Dist2Morphism) -> Dist2Morphism:
    if x1.tgt != x2.src:
        raise StructuralError("vcomp_dist_2morphisms: not composable")
    return trusted(
        Dist2Morphism,
        x1.src,
        x2.tgt,
        tuple(vcomp_modification(b, a) for b, a in zip(x2.bethC, x1.bethC)),
        tuple(vcomp_modification(b, a) for b, a in zip(x2.bethB, x1.bethB)),
    )


def hcomp_dist_2morphisms(x2: Dist2Morphism, x1: Dist2Morphism) -> Dist2Morphism:
    if x1.src.tgt != x2.src.src:
        raise StructuralError("hcomp_dist_2morphisms: not composable")
    return trusted(
        Dist2Morphism,
        compose_dist_morphisms(x2.src, x1.src),
        compose_dist_morphisms(x2.tgt, x1.tgt),
        tuple(hcomp_modification(b, a) for b, a in zip(x2.bethC, x1.bethC)),
        tuple(hcomp_modification(b, a) for b, a in zip(x2.bethB, x1.bethB)),
    )


def enumerate_dist_2morphisms(m1: DistMorphism, m2: DistMorphism, budget=None) -> Iterator[Dist2Morphism]:
    """Every 2-morphism ``m1 -> m2``; the shared components are single
    search variables."""
    budget = as_budget(budget)
    s = m1.src
    B, C, D = s.B, s.C, s.D

    class View:
        def __init__(self, t1, t2, m):
            self.src_t, self.tgt_t, self.m = t1, t2, m

    variables = [(b, c) for b in range(B.n_objects) for c in range(C.n_objects)]

    def domain(var, a):
        b, c = var
        return D.hom2(m1.thetaC[c].c1(b), m2.thetaC[c].c1(b))

    cons = []
    for c in range(C.n_objects):
        for ax, w, keys in modification_equations(B):
            mapped = [(k[1], c) for k in keys]
            cons.append(
                (
                    mapped,
                    (lambda c, ax, w: lambda a: modification_holds(
                        View(m1.thetaC[c], m2.thetaC[c], lambda b: a[(b, c)]), ax, w
                    ))(c, ax, w),
                )
            )
    for b in range(B.n_objects):
        for ax, w, keys in modification_equations(C):
            mapped = [(b, k[1]) for k in keys]
            cons.append(
                (
                    mapped,
                    (lambda b, ax, w: lambda a: modification_holds(
                        View(m1.thetaB[b], m2.thetaB[b], lambda c: a[(b, c)]), ax, w
                    ))(b, ax, w),
                )
            )
    for a in backtrack(variables, domain, cons, budget, "enumerate_dist_2morphisms"):
        bethC = [
            Modification(m1.thetaC[c], m2.thetaC[c], [a[(b, c)] for b in range(B.n_objects)])
            for c in range(C.n_objects)
        ]
        bethB = [
            Modification(m1.thetaB[b], m2.thetaB[b], [a[(b, c)] for c in range(C.n_objects)])
            for b in range(B.n_objects)
        ]
        yield Dist2Morphism(m1, m2, bethC, bethB)

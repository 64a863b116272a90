"""Single-entry corruptions, one per axiom, each paired with its validator.

Every builder returns the validation report of a structure that differs from
a valid one in exactly one table entry (or one flag). Where the entry was
found by a small deterministic scan, the scan is kept here so the fixture
stays reproducible.
"""

import itertools

from laxdist import (
    DistMorphism,
    Dist2Morphism,
    LaxFunctor,
    Modification,
    OplaxTransformation,
    TabledTwoCategory,
    enumerate_lax_functors,
    enumerate_laws,
    enumerate_modifications,
    enumerate_oplax,
    identity_modification,
    identity_oplax,
    monads_of,
    rel_2category,
    tabled,
    validate_2category,
    validate_dist_2morphism,
    validate_dist_morphism,
    validate_lax_functor,
    validate_law,
    validate_modification,
    validate_oplax,
)
from laxdist.core2 import PosetalTwoCategory, terminal_2category
from laxdist.distlaw import DistributiveLaw, identity_dist_morphism
from laxdist.instances import chain, cyclic_double_delooping, discrete_monoid_delooping, labelled, ordered_monoid

Z3 = [[0, 1, 2], [1, 2, 0], [2, 0, 1]]


def _edit(X, table, i=None, j=None, value=None, **flags):
    kw = tabled(X).tables()
    kw.update(flags)
    if table is not None:
        rows = [list(r) if isinstance(r, (list, tuple)) else r for r in kw[table]]
        if j is None:
            rows[i] = value
        else:
            rows[i][j] = value
        kw[table] = rows
    return TabledTwoCategory(**kw)


def _arrow():
    """Two objects and one non-identity arrow, identity 2-cells only."""
    comp = [[0, -1, -1], [-1, 1, 2], [2, -1, -1]]
    return dict(
        n_objects=2,
        one_cells=[(0, 0), (1, 1), (0, 1)],
        id1=[0, 1],
        comp1=comp,
        two_cells=[(0, 0), (1, 1), (2, 2)],
        id2=[0, 1, 2],
        vcomp=[[0, -1, -1], [-1, 1, -1], [-1, -1, 2]],
        hcomp=comp,
    )


# -- 2-categories ---------------------------------------------------------

def cat_typing():
    return validate_2category(_edit(ordered_monoid("max", 2), "comp1", 1, 1, 0))


def cat_assoc1():
    return validate_2category(_edit(ordered_monoid("max", 2), "comp1", 1, 2, 0))


def cat_unit1():
    return validate_2category(_edit(ordered_monoid("max", 2), "id1", 0, value=1))


def cat_unit2():
    return validate_2category(_edit(ordered_monoid("max", 2), "id2", 1, value=0))


def cat_hcomp_functorial():
    return validate_2category(_edit(ordered_monoid("max", 2), "id2", 2, value=0))


def cat_hcomp_unit():
    return cat_unit1()


def cat_assoc2():
    return validate_2category(_edit(labelled(rel_2category(1), 2), "vcomp", 1, 1, 1))


def cat_hcomp_assoc():
    return validate_2category(_edit(labelled(rel_2category(1), 2), "hcomp", 0, 1, 0))


def cat_interchange():
    return validate_2category(_edit(cyclic_double_delooping(2), "vcomp", 1, 1, 1))


def cat_posetal_uniqueness():
    return validate_2category(_edit(labelled(rel_2category(1), 2), None, locally_posetal=True))


def cat_parallel_endpoints():
    kw = _arrow()
    assert validate_2category(TabledTwoCategory(**kw)).ok
    kw["two_cells"] = [(0, 0), (1, 1), (2, 0)]
    return validate_2category(TabledTwoCategory(**kw))


def cat_closure():
    table = [[max(a, b) for a in range(3)] for b in range(3)]
    leq = [[a <= b for b in range(3)] for a in range(3)]
    leq[0][2] = False
    return validate_2category(PosetalTwoCategory(1, [(0, 0)] * 3, [0], table, leq))


# -- lax functors ---------------------------------------------------------

def _replace(F, **changes):
    fields = dict(
        dom=F.dom,
        cod=F.cod,
        obj_map=F.obj_map,
        cell1_map=F.cell1_map,
        cell2_map=F.cell2_map,
        compositor=F.compositor,
        unitor=F.unitor,
    )
    fields.update(changes)
    return LaxFunctor(**fields)


def _labelled_monad():
    return monads_of(labelled(rel_2category(1), 2))[0][0]


def functor_typing():
    F = _labelled_monad()
    return validate_lax_functor(_replace(F, unitor=(0,)))


def functor_hom_functoriality():
    F = _labelled_monad()
    return validate_lax_functor(_replace(F, cell2_map=(5,)))


def functor_lax_unit():
    F = _labelled_monad()
    return validate_lax_functor(_replace(F, compositor={(0, 0): 5}))


def functor_lax_naturality():
    B = ordered_monoid("xor", 1, "chaotic")
    Bz = discrete_monoid_delooping([[0, 1], [1, 0]])
    for F in itertools.islice(enumerate_lax_functors(B, labelled(Bz, 2)), 20):
        comp = dict(F.compositor)
        comp[(1, 1)] ^= 1
        r = validate_lax_functor(_replace(F, compositor=comp))
        if r.failed == ["lax-naturality"]:
            return r
    raise AssertionError("no isolated naturality corruption in the scan")


def functor_lax_associativity():
    Z = discrete_monoid_delooping(Z3)
    D = labelled(Z, 2)
    zero = [0] * 3
    F = LaxFunctor(Z, D, [0], zero, zero, {(g, f): 0 for g in range(3) for f in range(3)}, [0])
    assert validate_lax_functor(F).ok
    comp = dict(F.compositor)
    comp[(1, 1)] = 1
    return validate_lax_functor(_replace(F, compositor=comp))


# -- oplax transformations and modifications --------------------------------

def _transformations():
    monads = [F for F, _ in monads_of(labelled(rel_2category(1), 2))]
    _, Fs = _z2_family()
    # the chaotic domain has non-identity 2-cells, which naturality needs
    Bz = discrete_monoid_delooping([[0, 1], [1, 0]])
    Gs = list(enumerate_lax_functors(ordered_monoid("xor", 1, "chaotic"), labelled(Bz, 2)))
    pairs = [p for fam in (monads, Fs[:3], Gs[:2]) for p in itertools.product(fam, repeat=2)]
    return [t for F1, F2 in pairs for t in enumerate_oplax(F1, F2)]


def _corrupt_oplax(axiom):
    """First single-entry change to comp2 naming `axiom`, preferring one that names nothing else."""
    first = None
    for t in _transformations():
        D = t.src_f.cod
        for k in range(len(t.comp2)):
            for v in range(D.n_two_cells):
                if v == t.comp2[k]:
                    continue
                comp2 = list(t.comp2)
                comp2[k] = v
                r = validate_oplax(OplaxTransformation(t.src_f, t.tgt_f, t.comp1, comp2))
                if r.failed == [axiom]:
                    return r
                if first is None and axiom in r.failed:
                    first = r
    if first is None:
        raise AssertionError(f"no corruption names {axiom}")
    return first


def oplax_composition():
    return _corrupt_oplax("oplax-composition")


def oplax_unit():
    return _corrupt_oplax("oplax-unit")


def oplax_naturality():
    return _corrupt_oplax("oplax-naturality")


def oplax_typing():
    return _corrupt_oplax("typing")


def modification_axiom():
    F = next(iter(enumerate_lax_functors(chain(2), cyclic_double_delooping(2))))
    m = identity_modification(identity_oplax(F))
    assert validate_modification(m).ok
    return validate_modification(Modification(m.src_t, m.tgt_t, [1, 0]))


def modification_typing():
    for t in _transformations()[:40]:
        m = identity_modification(t)
        D = t.src_f.cod
        for k in range(len(m.comp)):
            for v in range(D.n_two_cells):
                comp = list(m.comp)
                comp[k] = v
                r = validate_modification(Modification(t, t, comp))
                if r.failed == ["typing"]:
                    return r
    raise AssertionError("no corruption names typing")


# -- laws and their morphisms -----------------------------------------------

def _z2_family():
    Bz = discrete_monoid_delooping([[0, 1], [1, 0]])
    return Bz, list(itertools.islice(enumerate_lax_functors(Bz, labelled(Bz, 2)), 6))


def _zz_law():
    _, Fs = _z2_family()
    return next(enumerate_laws((Fs[0],), (Fs[0],)))


def _flip(s, f, g):
    sigma = [list(r) for r in s.sigma]
    sigma[f][g] ^= 1
    return s.with_sigma(sigma)


def _d5_law(mirrored=False):
    Bd = discrete_monoid_delooping([[0, 1], [1, 0]])
    Bc = ordered_monoid("xor", 1, "chaotic")
    B, C = (Bc, Bd) if mirrored else (Bd, Bc)
    D = cyclic_double_delooping(2)
    L = next(F for F in enumerate_lax_functors(B, D) if all(v == 0 for v in F.compositor.values()))
    M = next(F for F in enumerate_lax_functors(C, D) if all(v == 0 for v in F.compositor.values()))
    return next(enumerate_laws((L,), (M,)))


def law_D1():
    return validate_law(_flip(_zz_law(), 1, 0))


def law_D2():
    return validate_law(_flip(_zz_law(), 0, 1))


def law_D3():
    return law_D1()


def law_D4():
    return law_D2()


def law_D5():
    return validate_law(_flip(_d5_law(), 1, 1))


def law_D6():
    return validate_law(_flip(_d5_law(mirrored=True), 1, 1))


def law_grid():
    one, D = terminal_2category(), chain(2)
    at0, at1 = enumerate_lax_functors(one, D)
    return validate_law(DistributiveLaw(one, one, D, (at0,), (at1,), [[D.id2(D.id1(0))]]))


def law_components():
    s = _zz_law()
    L = s.L[0]
    for v in range(s.D.n_two_cells):
        comp = dict(L.compositor)
        comp[(1, 1)] = v
        broken = _replace(L, compositor=comp)
        if not validate_lax_functor(broken).ok:
            break
    return validate_law(DistributiveLaw(s.B, s.C, s.D, (broken,), s.M, s.sigma))


def law_typing():
    s = _zz_law()
    sigma = [list(r) for r in s.sigma]
    sigma[0][0] = 0 if sigma[0][0] != 0 else 2
    return validate_law(s.with_sigma(sigma))


def yang_baxter():
    _, Fs = _z2_family()
    laws = list(enumerate_laws((Fs[0],), (Fs[0],)))
    s1, s2 = laws[0], laws[1]
    tC = next(enumerate_oplax(s1.L[0], s2.L[0]))
    tB = next(enumerate_oplax(s1.M[0], s2.M[0]))
    return validate_dist_morphism(DistMorphism(s1, s2, [tC], [tB]))


def agreement():
    laws = list(enumerate_laws(*[(monads_of(rel_2category(2))[1][0],)] * 2))
    s = laws[0]
    ts = list(enumerate_oplax(s.L[0], s.L[0]))
    for a, b in itertools.product(ts, repeat=2):
        if a.c1(0) != b.c1(0):
            return validate_dist_morphism(DistMorphism(s, s, [a], [b]))
    raise AssertionError("no pair with different 1-cell components")


def beth_agreement():
    s = _zz_law()
    m = identity_dist_morphism(s)
    for a in enumerate_modifications(m.thetaC[0], m.thetaC[0]):
        for b in enumerate_modifications(m.thetaB[0], m.thetaB[0]):
            if a.m(0) != b.m(0):
                return validate_dist_2morphism(Dist2Morphism(m, m, [a], [b]))
    raise AssertionError("no pair of modifications with different components")


# axiom name -> builder; the keys are the names the validators report
REGISTRY = {
    "2-category": {
        "typing": cat_typing,
        "unit1": cat_unit1,
        "assoc1": cat_assoc1,
        "parallel-endpoints": cat_parallel_endpoints,
        "unit2": cat_unit2,
        "assoc2": cat_assoc2,
        "hcomp-functorial": cat_hcomp_functorial,
        "hcomp-unit": cat_hcomp_unit,
        "hcomp-assoc": cat_hcomp_assoc,
        "interchange": cat_interchange,
        "closure": cat_closure,
        "posetal-uniqueness": cat_posetal_uniqueness,
    },
    "lax functor": {
        "typing": functor_typing,
        "hom-functoriality": functor_hom_functoriality,
        "lax-naturality": functor_lax_naturality,
        "lax-associativity": functor_lax_associativity,
        "lax-unit": functor_lax_unit,
    },
    "oplax transformation": {
        "typing": oplax_typing,
        "oplax-composition": oplax_composition,
        "oplax-unit": oplax_unit,
        "oplax-naturality": oplax_naturality,
    },
    "modification": {
        "typing": modification_typing,
        "modification": modification_axiom,
    },
    "law": {
        "grid": law_grid,
        "components": law_components,
        "typing": law_typing,
        "D1": law_D1,
        "D2": law_D2,
        "D3": law_D3,
        "D4": law_D4,
        "D5": law_D5,
        "D6": law_D6,
    },
    "morphism of laws": {
        "agreement": agreement,
        "yang-baxter": yang_baxter,
    },
    "2-morphism of laws": {
        "beth-agreement": beth_agreement,
    },
}


def cases():
    return [(kind, axiom, build) for kind, table in REGISTRY.items() for axiom, build in table.items()]


__all__ = ["REGISTRY", "cases"]

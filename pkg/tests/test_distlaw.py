import itertools

import pytest

from laxdist import (
    DistributiveLaw,
    enumerate_lax_functors,
    DistMorphism,
    Dist2Morphism,
    enumerate_dist_2morphisms,
    enumerate_dist_morphisms,
    enumerate_laws,
    monad,
    rel_2category,
    terminal_2category,
    trivial_law,
    validate_dist_2morphism,
    validate_dist_morphism,
    validate_law,
    validate_law_assuming_invertible,
)
from laxdist.distlaw import (
    NotInvertible,
    compose_dist_morphisms,
    hcomp_dist_2morphisms,
    identity_dist_2morphism,
    identity_dist_morphism,
    is_invertible_law,
    vcomp_dist_2morphisms,
)
from laxdist.docs import Manifest
from laxdist.instances import chain
from laxdist import oracles

import families

LEQ, GEQ, IDENTITY, TOTAL = 11, 13, 9, 15


def test_trivial_law():
    s = trivial_law(terminal_2category())
    assert validate_law(s).ok


@pytest.mark.parametrize("S,T", list(itertools.product([IDENTITY, LEQ, GEQ, TOTAL], repeat=2)))
def test_rel2_monad_law_existence(S, T):
    R = rel_2category(2)
    laws = list(enumerate_laws((monad(R, S),), (monad(R, T),)))
    exists = oracles.composite_law_exists(S, T, 2)
    assert len(laws) == int(exists)
    for s in laws:
        assert validate_law(s).ok


def test_posetal_law_is_forced():
    R = rel_2category(2)
    laws = list(enumerate_laws((monad(R, IDENTITY),), (monad(R, LEQ),)))
    assert len(laws) == 1


def test_posetal_reports_naturality_vacuous():
    s = families.rel2_laws()[0]
    results = validate_law(s).results
    assert results["D5"] == results["D6"] == "vacuous"


def test_d5_only_corruption(fixtures_dir):
    m, _ = Manifest.from_path(fixtures_dir / "d5")
    assert validate_law(m.get("d5_ok", "law")).ok
    report = validate_law(m.get("d5_corrupt", "law"))
    assert report.failed == ["D5"]


def test_grid_mismatch_reported_first():
    one = terminal_2category()
    at0, at1 = enumerate_lax_functors(one, chain(2))
    D = chain(2)
    s = DistributiveLaw(one, one, D, (at0,), (at1,), [[D.id2(D.id1(0))]])
    report = validate_law(s)
    assert report.failed == ["grid"]
    assert list(report.results) == ["grid"]


@pytest.mark.parametrize("family", ["labelled_rel1_laws", "z2_labelled_laws", "chain_laws"])
def test_reduced_validator_agrees_on_invertible_laws(family):
    laws = [s for s in getattr(families, family)() if is_invertible_law(s)]
    assert laws
    for s in laws:
        assert validate_law_assuming_invertible(s).ok == validate_law(s).ok


def test_reduced_validator_needs_invertible_crossings():
    # preorders on three points whose composites are strictly included
    R = rel_2category(3)
    pairs = [
        (S, T)
        for S in oracles.preorders(3)
        for T in oracles.preorders(3)
        if oracles.composite_law_exists(S, T, 3) and not oracles.composite_law_exists(T, S, 3)
    ]
    S, T = pairs[0]
    s = next(enumerate_laws((monad(R, S),), (monad(R, T),)))
    assert not is_invertible_law(s)
    with pytest.raises(NotInvertible):
        validate_law_assuming_invertible(s)


def test_identity_morphism():
    for s in families.labelled_rel1_laws():
        assert validate_dist_morphism(identity_dist_morphism(s)).ok
        assert validate_dist_2morphism(identity_dist_2morphism(identity_dist_morphism(s))).ok


def _morphisms(laws):
    return {(a, b): list(enumerate_dist_morphisms(s1, s2)) for a, s1 in enumerate(laws) for b, s2 in enumerate(laws)}


@pytest.mark.parametrize("family", ["labelled_rel1_laws", "rel2_laws"])
def test_dist_morphisms_compose(family):
    laws = getattr(families, family)()[:6]
    ms = _morphisms(laws)
    n = len(laws)
    for a, b, c in itertools.product(range(n), repeat=3):
        for m1 in ms[(a, b)]:
            assert compose_dist_morphisms(m1, identity_dist_morphism(laws[a])) == m1
            assert compose_dist_morphisms(identity_dist_morphism(laws[b]), m1) == m1
            for m2 in ms[(b, c)]:
                m21 = compose_dist_morphisms(m2, m1)
                assert validate_dist_morphism(m21).ok
                for d in range(n):
                    for m3 in ms[(c, d)][:3]:
                        assert compose_dist_morphisms(m3, m21) == compose_dist_morphisms(
                            compose_dist_morphisms(m3, m2), m1
                        )


def test_swapped_component_breaks_agreement():
    laws = families.rel2_laws()
    for s1, s2 in itertools.product(laws, repeat=2):
        ms = list(enumerate_dist_morphisms(s1, s2))
        for m1, m2 in itertools.product(ms, repeat=2):
            if m1.thetaC[0].c1(0) != m2.thetaB[0].c1(0):
                bad = DistMorphism(s1, s2, m1.thetaC, m2.thetaB)
                assert validate_dist_morphism(bad).failed == ["agreement"]
                return
    pytest.fail("no pair of morphisms with different 1-cell components")


def test_dist_2morphism_interchange():
    laws = families.labelled_rel1_laws()
    ms = _morphisms(laws)
    two = {}
    for key, lst in ms.items():
        for m1, m2 in itertools.product(lst, repeat=2):
            two[(m1, m2)] = list(enumerate_dist_2morphisms(m1, m2))
    checked = 0
    for (a, b), lst in ms.items():
        for c in range(len(laws)):
            for m1, m2, m3 in itertools.product(lst, repeat=3):
                for n1, n2, n3 in itertools.product(ms[(b, c)], repeat=3):
                    for x1, x2, y1, y2 in itertools.product(two[(m1, m2)], two[(m2, m3)], two[(n1, n2)], two[(n2, n3)]):
                        left = hcomp_dist_2morphisms(vcomp_dist_2morphisms(y2, y1), vcomp_dist_2morphisms(x2, x1))
                        right = vcomp_dist_2morphisms(hcomp_dist_2morphisms(y2, x2), hcomp_dist_2morphisms(y1, x1))
                        assert left == right
                        assert validate_dist_2morphism(left).ok
                        checked += 1
    assert checked


def test_dist_2morphism_units():
    for s in families.labelled_rel1_laws():
        for m in enumerate_dist_morphisms(s, s):
            i = identity_dist_2morphism(m)
            for x in enumerate_dist_2morphisms(m, m):
                assert vcomp_dist_2morphisms(x, i) == x == vcomp_dist_2morphisms(i, x)

"""Acceptance criteria 1 to 10.

Every check is exact: the pinned tolerance for each criterion is zero
mismatches. The terminal summary prints one PASS/FAIL line per criterion.
"""

import contextlib
import io
import itertools

import pytest

from laxdist import (
    DistributiveLaw,
    check_K_is_2functor,
    collate,
    composite_monad,
    curry,
    curry_law,
    enumerate_dist_2morphisms,
    enumerate_dist_morphisms,
    enumerate_lax_functors,
    enumerate_laws,
    enumerate_oplax,
    extract_law_T,
    identity_lax_functor,
    is_unitary,
    monads_of,
    rel_2category,
    uncurry_J,
    uncurry_modification,
    uncurry_nested,
    uncurry_transformation,
    validate_lax_functor,
    validate_law,
    validate_law_assuming_invertible,
    validate_oplax,
)
from laxdist import oracles
from laxdist.cli import main
from laxdist.collation import kappa_B, kappa_C
from laxdist.converse import (
    braiding_to_law,
    braidings,
    check_kappa,
    check_lambda,
    witness_kappa,
)
from laxdist.distlaw import crossing_type, is_invertible_law
from laxdist.instances import discrete_monoid_delooping

import families
import mutations

MISMATCHES_ALLOWED = 0
K_BUDGET_PER_PAIR = 10**7


def criterion(n, title):
    return pytest.mark.criterion(n, title)


@criterion(1, "collation of rel(2) and truncated-add laws validates, kappa are icons")
def test_collation_soundness():
    failures = []
    laws = families.criterion_laws()
    assert len(families.rel2_laws()) == 16 and len(families.tadd_laws()) == 4
    for i, s in enumerate(laws):
        P = collate(s)
        if not validate_lax_functor(P).ok:
            failures.append((i, "P"))
        for b in range(s.B.n_objects):
            k = kappa_B(s, b, P)
            if not (k.is_icon() and validate_oplax(k).ok):
                failures.append((i, "kappa_B", b))
        for c in range(s.C.n_objects):
            k = kappa_C(s, c, P)
            if not (k.is_icon() and validate_oplax(k).ok):
                failures.append((i, "kappa_C", c))
    assert len(failures) == MISMATCHES_ALLOWED, failures


@criterion(2, "preorder laws exist iff the composition inclusion holds; composite is a preorder")
def test_composite_monad_oracle():
    failures = []
    for n in (1, 2, 3):
        R = rel_2category(n)
        monads = {F.one(0): F for F, _ in monads_of(R)}
        assert sorted(monads) == sorted(oracles.preorders(n))
        for S, T in itertools.product(sorted(monads), repeat=2):
            laws = list(enumerate_laws((monads[S],), (monads[T],)))
            if bool(laws) != oracles.composite_law_exists(S, T, n):
                failures.append((n, S, T, "existence"))
            if laws:
                TS = composite_monad(monads[S], monads[T])
                rel = oracles.relation_matrix(TS.one(0), n)
                if TS.one(0) != oracles.composite_relation(S, T, n) or not oracles.is_preorder(rel):
                    failures.append((n, S, T, "composite"))
    assert len(failures) == MISMATCHES_ALLOWED, failures


@criterion(3, "discrete homs: a unique identity law exactly when images commute")
def test_degenerate_recovery():
    tables = [t for n in (1, 2, 3) for t in oracles.monoid_tables(n)]
    Xs = [discrete_monoid_delooping(t) for t in tables]
    failures, pairs = [], 0
    for D in Xs:
        functors = {id(X): list(enumerate_lax_functors(X, D)) for X in Xs}
        for B, C in itertools.product(Xs, repeat=2):
            for L, M in itertools.product(functors[id(B)], functors[id(C)]):
                pairs += 1
                commute = all(
                    D.comp1(M.one(g), L.one(f)) == D.comp1(L.one(f), M.one(g))
                    for f in range(B.n_one_cells)
                    for g in range(C.n_one_cells)
                )
                laws = list(enumerate_laws((L,), (M,)))
                identity = all(
                    s.s(f, g) == D.id2(D.src2(s.s(f, g)))
                    for s in laws
                    for f in range(B.n_one_cells)
                    for g in range(C.n_one_cells)
                )
                if (len(laws) == 1) != commute or len(laws) > 1 or not identity:
                    failures.append((tables[Xs.index(D)], L.cell1_map, M.cell1_map))
    assert pairs == 13938
    assert len(failures) == MISMATCHES_ALLOWED, failures[:5]


def _morphisms(laws):
    ms = [m for s1, s2 in itertools.product(laws, repeat=2) for m in enumerate_dist_morphisms(s1, s2)]
    xs = [
        x
        for m1, m2 in itertools.product(ms, repeat=2)
        if m1.src == m2.src and m1.tgt == m2.tgt
        for x in enumerate_dist_2morphisms(m1, m2)
    ]
    return ms, xs


@criterion(4, "curry and uncurry are inverse at three levels; triangle holds")
def test_currying_isomorphism():
    failures = []
    for group in (families.rel2_laws(), families.tadd_laws()):
        laws = list(group)
        for i, s in enumerate(laws):
            q = curry_law(s)
            if uncurry_nested(q) != s:
                failures.append(("law", i))
            if uncurry_J(q) != collate(s):
                failures.append(("triangle", i))
        ms, xs = _morphisms(laws)
        fam = curry(laws, ms, xs)
        failures += [("morphism", i) for i, (t, m) in enumerate(zip(fam.transformations, ms)) if uncurry_transformation(t) != m]
        failures += [("2-morphism", i) for i, (y, x) in enumerate(zip(fam.modifications, xs)) if uncurry_modification(y) != x]
        assert ms and xs
    assert len(failures) == MISMATCHES_ALLOWED, failures


@pytest.mark.slow
@criterion(5, "collation is a strict 2-functor on criterion-1 laws")
def test_K_is_strict_2functor():
    for group in (families.rel2_laws(), families.tadd_laws()):
        report = check_K_is_2functor(list(group), budget_per_pair=K_BUDGET_PER_PAIR)
        assert report.ok, report


def _unitary_groups():
    # the witnesses only exist between unitary laws; the labelled family is
    # all unitary, so it adds naturality squares between distinct laws
    yield [s for s in families.rel2_laws() if families.unitary(s)]
    yield [s for s in families.tadd_laws() if families.unitary(s)]
    yield list(families.labelled_rel1_laws())


@criterion(6, "kappa and lambda witnesses validate, invert and are natural")
def test_converse_round_trips():
    groups = list(_unitary_groups())
    assert all(groups)
    failures = []
    for laws in groups:
        failures += _converse_failures(laws)
    assert len(failures) == MISMATCHES_ALLOWED, failures


def _converse_failures(laws):
    failures = []
    for s in laws:
        targets = laws
        ms = [m for t in targets for m in enumerate_dist_morphisms(s, t)]
        if not check_kappa(s, ms).ok:
            failures.append(("kappa", s))
        k = witness_kappa(s)
        if k.tgt != extract_law_T(collate(s)):
            failures.append(("kappa-target", s))
        P = collate(s)
        ts = [t for u in targets for t in enumerate_oplax(P, collate(u))]
        if not (is_unitary(P) and check_lambda(P, ts).ok):
            failures.append(("lambda", s))
    return failures


def _family_pairs():
    yield from ((s.L, s.M) for s in families.criterion_laws())
    yield from ((s.L, s.M) for s in families.labelled_rel1_laws())
    Fs = families.z2_labelled_functors()
    yield from (((L,), (M,)) for L, M in itertools.product(Fs, repeat=2))
    Z3 = discrete_monoid_delooping(mutations.Z3)
    Gs = list(enumerate_lax_functors(Z3, Z3))
    yield from (((L,), (M,)) for L, M in itertools.product(Gs, repeat=2))


@criterion(7, "reduced and full validators agree on invertible crossing tables")
def test_invertibility_implies_unit_axioms():
    failures, checked, seen = [], 0, set()
    for L, M in _family_pairs():
        key = (L, M)
        if key in seen:
            continue
        seen.add(key)
        B, C, D = L[0].dom, M[0].dom, L[0].cod
        cells = []
        for f in range(B.n_one_cells):
            for g in range(C.n_one_cells):
                src, tgt = crossing_type(B, C, D, L, M, f, g)
                cells.append(D.hom2(src, tgt))
        for flat in itertools.product(*cells):
            n = C.n_one_cells
            sigma = [list(flat[f * n : (f + 1) * n]) for f in range(B.n_one_cells)]
            s = DistributiveLaw(B, C, D, L, M, sigma)
            if not is_invertible_law(s):
                continue
            checked += 1
            if validate_law(s).ok != validate_law_assuming_invertible(s).ok:
                failures.append(sigma)
    assert checked > 100
    assert len(failures) == MISMATCHES_ALLOWED, failures[:5]


@criterion(8, "braiding laws validate exactly on commutative monoids of size at most 4")
def test_braiding_bijection():
    failures = []
    for n in (1, 2, 3, 4):
        for table in oracles.monoid_tables(n):
            X = discrete_monoid_delooping(table)
            commutative = oracles.is_commutative(table)
            found = braidings(X)
            laws_ok = [validate_law(braiding_to_law(X, c)).ok for c in found]
            I = identity_lax_functor(X)
            via_laws = list(enumerate_laws((I,), (I,)))
            if bool(found) != commutative or not all(laws_ok) or bool(via_laws) != commutative:
                failures.append(table)
    assert len(failures) == MISMATCHES_ALLOWED, failures


@criterion(9, "each single-entry corruption is rejected naming its axiom")
def test_mutation_detection():
    missed = []
    for kind, axiom, build in mutations.cases():
        report = build()
        if report.ok or axiom not in report.failed:
            missed.append((kind, axiom, report.failed))
    assert len(missed) == MISMATCHES_ALLOWED, missed


CLI_SUITE = [
    ["validate", "rel2"],
    ["validate", "d5"],
    ["validate", "monoids"],
    ["validate", "trivial"],
    ["check-functor", "rel2/collated_law5.yaml"],
    ["check-law", "d5", "--name", "d5_corrupt"],
    ["check-law", "d5/law_ok.yaml", "--assume-invertible"],
    ["collate", "rel2/laws.yaml", "--name", "rel2.law5"],
    ["curry", "rel2/laws.yaml", "--name", "rel2.law5"],
    ["uncurry", "rel2", "--name", "rel2.law5.curried"],
    ["check-triangle", "rel2/laws.yaml", "--name", "rel2.law5"],
    ["extract-law", "rel2/collated_law5.yaml"],
    ["check-roundtrip", "trivial"],
    ["check-braiding", "monoids", "--name", "z2_labelled"],
    ["enumerate-monads", "rel2/rel2.yaml", "--json"],
    ["enumerate-laws", "rel2/rel2.yaml"],
    ["check-k", "trivial"],
    ["check-k", "d5", "--name", "d5_ok"],
    ["corrupt", "trivial/trivial.yaml", "--seed", "3", "-o", "-"],
    ["enumerate-monads", "rel2/rel2.yaml", "--budget", "10"],
    ["validate", "no-such-file.yaml"],
]


def _cli(argv):
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(out):
        code = main(argv)
    return code, out.getvalue()


@criterion(10, "CLI reports are byte-identical across runs and thread counts")
def test_cli_determinism(fixtures_dir, monkeypatch):
    monkeypatch.chdir(fixtures_dir)
    differing = []
    for argv in CLI_SUITE:
        runs = [_cli(argv + ["--threads", str(t)]) for t in (1, 1, 2, 4)]
        if len(set(runs)) != 1:
            differing.append(argv)
    assert len(differing) == MISMATCHES_ALLOWED, differing

"""Command-line front end.

Every command prints one report: ``ok``, per-axiom results, first
witnesses and budget counters. Exit status is 0 when the report is ok, 1 on
an axiom failure, 2 on unreadable or unresolvable input and 3 when the
budget runs out. Reports carry no timing unless ``--timing`` is given, so
repeated runs, and runs at different ``--threads``, print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from typing import Optional

from . import __version__
from .collation import check_K_is_2functor, collate, kappa_B, kappa_C
from .converse import (
    NotDecomposable,
    braiding_agreement,
    braiding_to_law,
    braidings,
    check_braiding,
    check_kappa,
    check_lambda,
    extract_law_T,
    is_decomposable,
)
from .core2 import validate_2category
from .currying import curry_law, uncurry_J, uncurry_nested, validate_nested
from .distlaw import (
    NotInvertible,
    enumerate_dist_morphisms,
    enumerate_laws,
    validate_dist_2morphism,
    validate_dist_morphism,
    validate_law,
    validate_law_assuming_invertible,
)
from .docs import DocumentError, Manifest, Namer, dumps, functor_doc, law_docs, nested_docs, write_docs
from .functors import (
    is_pseudofunctor,
    is_unitary,
    validate_lax_functor,
    validate_modification,
    validate_oplax,
)
from .instances import monads_of
from .report import DEFAULT_BUDGET, Budget, BudgetExceeded, StructuralError, ValidationReport

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


class Run:
    """State shared by one command: the manifest, budget and flags."""

    def __init__(self, args):
        self.args = args
        self.budget = Budget(args.budget)
        self.threads = max(1, args.threads)
        self.extra: dict = {}
        self.manifest: Optional[Manifest] = None
        self.targets: list = []

    def load(self, path):
        self.manifest, self.targets = Manifest.from_path(path)
        return self.manifest

    def target(self, kind, name=None):
        """The named document, or the only document of ``kind`` in the file."""
        m = self.manifest
        if name is None:
            name = self.args.name
        if name is not None:
            return name, m.get(name, kind)
        hits = [n for n in self.targets if m.kind_of(n) == kind]
        if not hits:
            raise DocumentError(f"no {kind} document in {self.args.doc}")
        if len(hits) > 1:
            raise DocumentError(f"several {kind} documents in {self.args.doc}; pick one with --name")
        return hits[0], m.get(hits[0], kind)

    def namer(self, prefix):
        cats = {n: self.manifest.get(n) for n, d in self.manifest.docs.items() if d["kind"] == "category"}
        return Namer(prefix, cats)

    def emit(self, docs):
        out = self.args.output
        if out is None:
            return
        write_docs(out, docs)
        if out == "-":
            sys.stdout.write(dumps(docs))


# ----------------------------------------------------------------------
# commands


def _validate_one(run, name):
    m = run.manifest
    kind = m.kind_of(name)
    obj = m.get(name)
    b, t = run.budget, run.threads
    if kind == "category":
        return validate_2category(obj, b, t)
    if kind == "functor":
        return validate_lax_functor(obj, b, t)
    if kind == "oplax":
        return validate_oplax(obj, b, t)
    if kind == "modification":
        return validate_modification(obj, b, t)
    if kind == "law":
        return validate_law(obj, b, t)
    if kind == "dist-morphism":
        return validate_dist_morphism(obj, b, t)
    if kind == "dist-2morphism":
        return validate_dist_2morphism(obj, b)
    return validate_nested(obj, b)


def cmd_validate(run):
    run.load(run.args.doc)
    names = [run.args.name] if run.args.name else run.targets
    report = ValidationReport(subject=run.args.doc)
    for n in names:
        report.merge(_validate_one(run, n), prefix=f"{n}:")
    return report


def cmd_check_functor(run):
    run.load(run.args.doc)
    name, F = run.target("functor")
    report = validate_lax_functor(F, run.budget, run.threads)
    report.subject = name
    if report.ok:
        run.extra["unitary"] = is_unitary(F)
        run.extra["pseudofunctor"] = is_pseudofunctor(F)
        if hasattr(F.dom, "left") and run.extra["unitary"]:
            ok, w = is_decomposable(F)
            run.extra["decomposable"] = ok
            if w is not None:
                run.extra["non_invertible_mixed_compositor"] = list(w)
    return report


def cmd_check_law(run):
    run.load(run.args.doc)
    name, s = run.target("law")
    if run.args.assume_invertible:
        report = validate_law_assuming_invertible(s, run.budget, run.threads)
    else:
        report = validate_law(s, run.budget, run.threads)
    report.subject = name
    return report


def cmd_collate(run):
    run.load(run.args.doc)
    name, s = run.target("law")
    report = validate_law(s, run.budget, run.threads)
    report.subject = name
    if not report.ok:
        return report
    P = collate(s, check=False)
    report.merge(validate_lax_functor(P, run.budget, run.threads), prefix="collated:")
    for b in range(s.B.n_objects):
        report.merge(validate_oplax(kappa_B(s, b, P), run.budget, run.threads), prefix=f"kappa_B[{b}]:")
    for c in range(s.C.n_objects):
        report.merge(validate_oplax(kappa_C(s, c, P), run.budget, run.threads), prefix=f"kappa_C[{c}]:")
    namer = run.namer(f"{name}.collated")
    doc = functor_doc(f"{name}.collated", P, namer)
    run.emit(namer.docs + [doc])
    return report


def cmd_curry(run):
    run.load(run.args.doc)
    name, s = run.target("law")
    report = validate_law(s, run.budget, run.threads)
    report.subject = name
    if not report.ok:
        return report
    q = curry_law(s, check=False)
    report.merge(validate_nested(q, run.budget), prefix="curried:")
    run.extra["fragment"] = {
        "objects": len(q.fragment.objects),
        "one_cells": len(q.fragment.one_cells),
        "two_cells": len(q.fragment.two_cells),
    }
    run.emit(nested_docs(f"{name}.curried", q, run.namer(f"{name}.curried")))
    return report


def cmd_uncurry(run):
    run.load(run.args.doc)
    name, q = run.target("nested")
    report = validate_nested(q, run.budget)
    report.subject = name
    s = uncurry_nested(q)
    report.merge(validate_law(s, run.budget, run.threads), prefix="uncurried:")
    run.emit(law_docs(f"{name}.uncurried", s, run.namer(f"{name}.uncurried")))
    return report


def cmd_check_triangle(run):
    run.load(run.args.doc)
    name, s = run.target("law")
    report = validate_law(s, run.budget, run.threads)
    report.subject = name
    if not report.ok:
        return report
    q = curry_law(s, check=False)
    report.record("uncurry-curry", None if uncurry_nested(q) == s else ("law",), "round trip changed the law", 1)
    P, J = collate(s, check=False), uncurry_J(q)
    w = None
    if P != J:
        w = next(
            (("1-cell", i) for i in range(P.dom.n_one_cells) if P.one(i) != J.one(i)),
            ("compositor",),
        )
    report.record("triangle", w, "uncurried functor differs from the collation", 1)
    return report


def cmd_extract_law(run):
    run.load(run.args.doc)
    name, P = run.target("functor")
    report = validate_lax_functor(P, run.budget, run.threads)
    report.subject = name
    if not report.ok:
        return report
    if not is_unitary(P):
        report.record("unitary", ("unitor",), "input is not unitary", 1)
        return report
    ok, w = is_decomposable(P)
    report.record("decomposable", w, "a mixed compositor has no inverse", 1)
    if not ok:
        return report
    s = extract_law_T(P, check=False)
    report.merge(validate_law(s, run.budget, run.threads), prefix="extracted:")
    run.emit(law_docs(f"{name}.extracted", s, run.namer(f"{name}.extracted")))
    return report


def cmd_check_roundtrip(run):
    run.load(run.args.doc)
    name, s = run.target("law")
    report = validate_law(s, run.budget, run.threads)
    report.subject = name
    if not report.ok:
        return report
    if not all(is_unitary(F) for F in list(s.L) + list(s.M)):
        report.record("unitary-families", ("family",), "families are not unitary", 1)
        return report
    morphisms = list(enumerate_dist_morphisms(s, s, run.budget))
    report.merge(check_kappa(s, morphisms), prefix="kappa:")
    report.merge(check_lambda(collate(s, check=False)), prefix="lambda:")
    run.extra["endomorphisms_checked"] = len(morphisms)
    return report


def cmd_check_braiding(run):
    run.load(run.args.doc)
    name, X = run.target("category")
    report = ValidationReport(subject=name)
    found = braidings(X)
    run.extra["braidings"] = found
    w = braiding_agreement(X)
    report.record("braiding-law-agreement", None if w is None else tuple(map(tuple, w)), "checkers disagree", 1)
    report.record("braiding-exists", None if found else ("none",), "no braiding", 1)
    return report


def cmd_enumerate_monads(run):
    run.load(run.args.doc)
    name, X = run.target("category")
    out = monads_of(X, run.budget)
    run.extra["monads"] = [{"t": v.t, "mu": v.mu, "eta": v.eta} for _, v in out]
    report = ValidationReport(subject=name)
    report.record("enumeration", None, "", len(out))
    namer = run.namer(f"{name}.monad")
    for F, _ in out:
        namer.functor(F)
    run.emit(namer.docs)
    return report


def _laws_of(run, name):
    m = run.manifest
    kind = m.kind_of(name)
    if kind == "category":
        ms = [F for F, _ in monads_of(m.get(name), run.budget)]
        return [s for S in ms for T in ms for s in enumerate_laws((S,), (T,), run.budget)]
    if kind == "law":
        d = m.docs[name]
        L = [m.get(n, "functor") for n in d["L"]]
        M = [m.get(n, "functor") for n in d["M"]]
        return list(enumerate_laws(L, M, run.budget))
    raise DocumentError(f"{name!r}: expected a category or a law")


def cmd_enumerate_laws(run):
    run.load(run.args.doc)
    name = run.args.name or (run.targets[0] if len(run.targets) == 1 else None)
    if name is None:
        raise DocumentError("several documents; pick one with --name")
    laws = _laws_of(run, name)
    run.extra["laws"] = [[list(r) for r in s.sigma] for s in laws]
    report = ValidationReport(subject=name)
    report.record("enumeration", None, "", len(laws))
    namer = run.namer(f"{name}.law")
    law_list = [law_docs(f"{name}.law{i}", s, namer)[-1] for i, s in enumerate(laws)]
    run.emit(namer.docs + law_list)
    return report


def cmd_check_k(run):
    run.load(run.args.doc)
    m = run.manifest
    if run.args.name:
        laws = _laws_of(run, run.args.name)
    else:
        names = [n for n in run.targets if m.kind_of(n) == "law"]
        if not names:
            raise DocumentError("no law documents to check")
        laws = [m.get(n, "law") for n in names]
    report = check_K_is_2functor(laws, budget_per_pair=run.args.budget_per_pair)
    run.extra["laws"] = len(laws)
    return report


def cmd_corrupt(run):
    """Change one table entry of a document, chosen by ``--seed``."""
    run.load(run.args.doc)
    name = run.args.name or run.targets[0]
    doc = json.loads(json.dumps(run.manifest.docs[name]))
    slots = []
    for key, value in doc.items():
        if key in ("kind", "name"):
            continue
        stack = [((key,), value)]
        while stack:
            path, v = stack.pop()
            if isinstance(v, list):
                stack.extend((path + (i,), x) for i, x in enumerate(v))
            elif isinstance(v, int) and not isinstance(v, bool) and v >= 0:
                slots.append(path)
    slots.sort(key=lambda p: tuple(map(str, p)))
    if not slots:
        raise DocumentError(f"{name}: nothing to corrupt")
    rng = random.Random(run.args.seed)
    path = rng.choice(slots)
    cell = doc
    for k in path[:-1]:
        cell = cell[k]
    old = cell[path[-1]]
    cell[path[-1]] = old + 1 + rng.randrange(2)
    run.extra["corrupted"] = {"path": list(path), "old": old, "new": cell[path[-1]]}
    run.emit([doc])
    report = ValidationReport(subject=name)
    report.record("corruption-written", None, "", 1)
    return report


COMMANDS = {
    "validate": (cmd_validate, "validate every document in a file"),
    "check-functor": (cmd_check_functor, "validate a lax functor and classify it"),
    "check-law": (cmd_check_law, "validate a distributive law"),
    "collate": (cmd_collate, "collate a law into a lax functor on B x C"),
    "curry": (cmd_curry, "curry a law into a nested lax functor"),
    "uncurry": (cmd_uncurry, "read a law back off a nested lax functor"),
    "check-triangle": (cmd_check_triangle, "compare uncurrying the curried law with collation"),
    "extract-law": (cmd_extract_law, "extract a law from a decomposable unitary functor"),
    "check-roundtrip": (cmd_check_roundtrip, "check the kappa and lambda witnesses for a law"),
    "check-braiding": (cmd_check_braiding, "search braidings and compare with the law validator"),
    "enumerate-monads": (cmd_enumerate_monads, "list all monads in a category"),
    "enumerate-laws": (cmd_enumerate_laws, "list all laws between monads or given families"),
    "check-k": (cmd_check_k, "check that collation is a strict 2-functor on a family"),
    "corrupt": (cmd_corrupt, "write a copy of a document with one entry changed"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="primitive-check ceiling")
    common.add_argument("--threads", type=int, default=1, help="scan width; never changes the output")
    common.add_argument("--seed", type=int, default=0, help="only used by 'corrupt'")
    common.add_argument("--timing", action="store_true", help="add wall-clock seconds to the report")
    common.add_argument("--name", help="document to act on when a file holds several")
    common.add_argument("-o", "--output", help="write resulting documents here ('-' for stdout)")
    p = argparse.ArgumentParser(prog="laxdist", description="Distributive laws of lax functors on finite 2-categories.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for cmd, (_, helptext) in COMMANDS.items():
        sp = sub.add_parser(cmd, parents=[common], help=helptext)
        sp.add_argument("doc", help="a YAML document or manifest directory")
        if cmd == "check-law":
            sp.add_argument("--assume-invertible", action="store_true", help="check D1, D2, D5, D6 and invertibility only")
        if cmd == "check-k":
            sp.add_argument("--budget-per-pair", type=int, default=10**7)
    return p


def _summary(rep: dict) -> str:
    lines = [f"{rep['command']} {rep['subject']}: {'ok' if rep['ok'] else 'FAILED'}"]
    width = max([len(a) for a in rep["axioms"]] + [5])
    for axiom, status in rep["axioms"].items():
        lines.append(f"  {axiom:<{width}}  {status}")
    for v in rep["violations"]:
        lines.append(f"  first witness for {v['axiom']}: {v['witness']}  {v['detail']}".rstrip())
    if rep.get("error"):
        lines.append(f"  error: {rep['error']}")
    lines.append(f"  checks: {rep['checks']}  budget: {rep['budget']['used']}/{rep['budget']['limit']}")
    for k, v in rep.get("extra", {}).items():
        text = json.dumps(v, sort_keys=True)
        lines.append(f"  {k}: {text if len(text) < 200 else text[:197] + '...'}")
    if "seconds" in rep:
        lines.append(f"  seconds: {rep['seconds']:.3f}")
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run = Run(args)
    fn = COMMANDS[args.command][0]
    start = time.perf_counter()
    error = None
    try:
        report = fn(run)
        code = EXIT_OK if report.ok else EXIT_FAIL
    except BudgetExceeded as e:
        report, code, error = ValidationReport(subject=args.doc), EXIT_BUDGET, str(e)
    except (DocumentError, StructuralError, NotDecomposable, NotInvertible, ValueError) as e:
        report, code, error = ValidationReport(subject=args.doc), EXIT_INPUT, f"{type(e).__name__}: {e}"
    rep = {"command": args.command}
    rep.update(report.as_dict())
    if error is not None:
        rep["ok"] = False
        rep["error"] = error
    rep["budget"] = {"limit": run.budget.limit, "used": run.budget.used}
    if run.extra:
        rep["extra"] = run.extra
    if args.timing:
        rep["seconds"] = round(time.perf_counter() - start, 6)
    out = sys.stdout if args.output != "-" else sys.stderr
    if args.json:
        out.write(json.dumps(rep, indent=2, sort_keys=False) + "\n")
    else:
        out.write(_summary(rep))
    return code


if __name__ == "__main__":
    sys.exit(main())

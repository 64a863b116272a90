"""YAML documents for categories, functors, laws and their morphisms.

Every document is a mapping with a ``kind`` and a ``name``. A manifest is a
directory of ``*.yaml`` files (several documents per file are allowed,
separated by ``---``); references between documents are by name. Cells are
always referred to by integer id. The schema is described in
``docs/format.md``.
"""

from __future__ import annotations

import os
from pathlib import Path
from typing import Optional

import yaml

from .core2 import TabledTwoCategory, TwoCategory, terminal_2category
from .distlaw import Dist2Morphism, DistMorphism, DistributiveLaw
from .functors import LaxFunctor, Modification, OplaxTransformation, monad
from .instances import from_generator

KINDS = ("category", "functor", "oplax", "modification", "law", "dist-morphism", "dist-2morphism", "nested")


class DocumentError(ValueError):
    """A document does not parse or a reference does not resolve."""


def _dump(obj) -> str:
    return yaml.safe_dump(obj, sort_keys=False, default_flow_style=None, width=100)


class Manifest:
    """Named documents, built into objects on first use."""

    def __init__(self):
        self.docs: dict = {}
        self.origin: dict = {}
        self._built: dict = {}
        self._building: set = set()

    # loading -------------------------------------------------------------
    @classmethod
    def from_path(cls, path) -> tuple:
        """Load the manifest containing ``path``; return it and the names of
        the documents in ``path`` itself."""
        path = Path(path)
        if not path.exists():
            raise DocumentError(f"no such file or directory: {path}")
        m = cls()
        if path.is_dir():
            for p in sorted(path.glob("*.yaml")):
                m.add_file(p)
            return m, sorted(m.docs)
        for p in sorted(path.parent.glob("*.yaml")):
            if p.resolve() != path.resolve():
                m.add_file(p, strict=False)
        own = m.add_file(path)
        return m, own

    def add_file(self, path, strict=True) -> list:
        try:
            with open(path) as fh:
                docs = [d for d in yaml.safe_load_all(fh) if d is not None]
        except yaml.YAMLError as e:
            if not strict:
                return []
            raise DocumentError(f"{path}: {e}") from None
        names = []
        for i, d in enumerate(docs):
            if not isinstance(d, dict) or "kind" not in d:
                if not strict:
                    continue
                raise DocumentError(f"{path}: document {i} has no 'kind'")
            name = d.get("name") or (Path(path).stem if len(docs) == 1 else f"{Path(path).stem}.{i}")
            self.add(name, d, origin=str(path))
            names.append(name)
        return names

    def add(self, name, doc, origin=""):
        if doc.get("kind") not in KINDS:
            raise DocumentError(f"{name}: unknown kind {doc.get('kind')!r}")
        if name in self.docs and self.docs[name] != doc:
            raise DocumentError(f"duplicate document name {name!r} ({self.origin[name]} and {origin})")
        self.docs[name] = dict(doc, name=name)
        self.origin[name] = origin

    # resolution ----------------------------------------------------------
    def get(self, name, kind=None):
        if name not in self.docs:
            raise DocumentError(f"unresolved reference {name!r}")
        doc = self.docs[name]
        if kind is not None and doc["kind"] != kind:
            raise DocumentError(f"{name!r} is a {doc['kind']}, expected {kind}")
        if name not in self._built:
            if name in self._building:
                raise DocumentError(f"reference cycle through {name!r}")
            self._building.add(name)
            try:
                self._built[name] = BUILDERS[doc["kind"]](self, doc)
            except (KeyError, TypeError, IndexError) as e:
                raise DocumentError(f"{name}: malformed {doc['kind']} document ({e!r})") from None
            finally:
                self._building.discard(name)
        return self._built[name]

    def category(self, ref) -> TwoCategory:
        """A category by document name or generator expression."""
        if isinstance(ref, str) and ref in self.docs:
            return self.get(ref, "category")
        try:
            return from_generator(str(ref), resolve=lambda n: self.get(n, "category"))
        except ValueError as e:
            raise DocumentError(str(e)) from None

    def kind_of(self, name):
        return self.docs[name]["kind"]


# ----------------------------------------------------------------------
# builders


def _category(m: Manifest, d) -> TwoCategory:
    if "generator" in d:
        return m.category(d["generator"])
    if d.get("terminal"):
        return terminal_2category()
    return TabledTwoCategory(
        n_objects=d["objects"],
        one_cells=[tuple(x) for x in d["one_cells"]],
        id1=d["id1"],
        comp1=d["comp1"],
        two_cells=[tuple(x) for x in d["two_cells"]],
        id2=d["id2"],
        vcomp=d["vcomp"],
        hcomp=d["hcomp"],
        locally_posetal=bool(d.get("locally_posetal", False)),
        name=d["name"],
    )


def _functor(m: Manifest, d) -> LaxFunctor:
    cod = m.category(d["cod"])
    if "monad" in d:
        spec = d["monad"]
        F = monad(cod, spec["t"], spec.get("mu"), spec.get("eta"), spec.get("obj"))
        return LaxFunctor(F.dom, F.cod, F.obj_map, F.cell1_map, F.cell2_map, F.compositor, F.unitor, name=d["name"])
    return LaxFunctor(
        dom=m.category(d["dom"]),
        cod=cod,
        obj_map=d["obj"],
        cell1_map=d["one"],
        cell2_map=d["two"],
        compositor={(g, f): c for g, f, c in d["compositor"]},
        unitor=d["unitor"],
        name=d["name"],
    )


def _oplax(m: Manifest, d) -> OplaxTransformation:
    return OplaxTransformation(
        m.get(d["src"], "functor"), m.get(d["tgt"], "functor"), d["comp1"], d["comp2"], name=d["name"]
    )


def _modification(m: Manifest, d) -> Modification:
    return Modification(m.get(d["src"], "oplax"), m.get(d["tgt"], "oplax"), d["comp"], name=d["name"])


def _law(m: Manifest, d) -> DistributiveLaw:
    return DistributiveLaw(
        m.category(d["B"]),
        m.category(d["C"]),
        m.category(d["D"]),
        [m.get(n, "functor") for n in d["L"]],
        [m.get(n, "functor") for n in d["M"]],
        d["sigma"],
        name=d["name"],
    )


def _dist_morphism(m: Manifest, d) -> DistMorphism:
    return DistMorphism(
        m.get(d["src"], "law"),
        m.get(d["tgt"], "law"),
        [m.get(n, "oplax") for n in d["thetaC"]],
        [m.get(n, "oplax") for n in d["thetaB"]],
        name=d["name"],
    )


def _dist_2morphism(m: Manifest, d) -> Dist2Morphism:
    return Dist2Morphism(
        m.get(d["src"], "dist-morphism"),
        m.get(d["tgt"], "dist-morphism"),
        [m.get(n, "modification") for n in d["bethC"]],
        [m.get(n, "modification") for n in d["bethB"]],
    )


def _nested(m: Manifest, d):
    from .currying import Fragment, NestedLaxFunctor

    B = m.category(d["B"])
    objs = [m.get(n, "functor") for n in d["obj"]]
    ones = [m.get(n, "oplax") for n in d["one"]]
    twos = [m.get(n, "modification") for n in d["two"]]
    comp = [(g, f, m.get(n, "modification")) for g, f, n in d["compositor"]]
    unit = [m.get(n, "modification") for n in d["unitor"]]
    if not objs:
        raise DocumentError(f"{d['name']}: nested functor without objects")
    frag = Fragment(objs[0].dom, objs[0].cod)
    for F in objs:
        frag.add_object(F)
    for t in ones:
        frag.add_one(t)
    for x in twos + [c for _, _, c in comp] + unit:
        frag.add_two(x)
    cat = frag.close()
    outer = LaxFunctor(
        dom=B,
        cod=cat,
        obj_map=[frag.obj_id(F) for F in objs],
        cell1_map=[frag.one_id(t) for t in ones],
        cell2_map=[frag.two_id(x) for x in twos],
        compositor={(g, f): frag.two_id(x) for g, f, x in comp},
        unitor=[frag.two_id(x) for x in unit],
        name=d["name"],
    )
    return NestedLaxFunctor(outer, frag)


BUILDERS = {
    "category": _category,
    "functor": _functor,
    "oplax": _oplax,
    "modification": _modification,
    "law": _law,
    "dist-morphism": _dist_morphism,
    "dist-2morphism": _dist_2morphism,
    "nested": _nested,
}


# ----------------------------------------------------------------------
# writers


class Namer:
    """Hands out stable document names for objects being written."""

    def __init__(self, prefix: str, categories: Optional[dict] = None):
        self.prefix = prefix
        self.categories = dict(categories or {})
        self.names: dict = {}
        self.docs: list = []

    def category_ref(self, X: TwoCategory) -> str:
        for ref, Y in self.categories.items():
            if Y is X:
                return ref
        left = getattr(X, "left", None)
        if left is not None:
            return f"product({self.category_ref(left)},{self.category_ref(X.right)})"
        if X is terminal_2category():
            return "terminal"
        ref = f"{self.prefix}.category{len(self.categories)}"
        self.categories[ref] = X
        self.docs.append(category_doc(ref, X))
        return ref

    def _name(self, obj, stem):
        key = (stem, obj)
        if key not in self.names:
            self.names[key] = f"{self.prefix}.{stem}{sum(1 for k in self.names if k[0] == stem)}"
        return self.names[key]

    def functor(self, F: LaxFunctor) -> str:
        new = ("functor", F) not in self.names
        name = self._name(F, "functor")
        if new:
            self.docs.append(functor_doc(name, F, self))
        return name

    def oplax(self, t: OplaxTransformation) -> str:
        new = ("oplax", t) not in self.names
        name = self._name(t, "oplax")
        if new:
            src, tgt = self.functor(t.src_f), self.functor(t.tgt_f)
            self.docs.append(
                {"kind": "oplax", "name": name, "src": src, "tgt": tgt, "comp1": list(t.comp1), "comp2": list(t.comp2)}
            )
        return name

    def modification(self, x: Modification) -> str:
        new = ("modification", x) not in self.names
        name = self._name(x, "modification")
        if new:
            src, tgt = self.oplax(x.src_t), self.oplax(x.tgt_t)
            self.docs.append({"kind": "modification", "name": name, "src": src, "tgt": tgt, "comp": list(x.comp)})
        return name


def category_doc(name, X: TwoCategory) -> dict:
    from .core2 import tabled

    T = X if isinstance(X, TabledTwoCategory) else tabled(X)
    t = T.tables()
    return {
        "kind": "category",
        "name": name,
        "objects": t["n_objects"],
        "one_cells": [list(p) for p in t["one_cells"]],
        "id1": t["id1"],
        "comp1": t["comp1"],
        "two_cells": [list(p) for p in t["two_cells"]],
        "id2": t["id2"],
        "vcomp": t["vcomp"],
        "hcomp": t["hcomp"],
        "locally_posetal": bool(t["locally_posetal"]),
    }


def functor_doc(name, F: LaxFunctor, namer: Namer) -> dict:
    return {
        "kind": "functor",
        "name": name,
        "dom": namer.category_ref(F.dom),
        "cod": namer.category_ref(F.cod),
        "obj": list(F.obj_map),
        "one": list(F.cell1_map),
        "two": list(F.cell2_map),
        "compositor": [[g, f, c] for (g, f), c in sorted(F.compositor.items())],
        "unitor": list(F.unitor),
    }


def law_docs(name, s: DistributiveLaw, namer: Namer) -> list:
    doc = {
        "kind": "law",
        "name": name,
        "B": namer.category_ref(s.B),
        "C": namer.category_ref(s.C),
        "D": namer.category_ref(s.D),
        "L": [namer.functor(F) for F in s.L],
        "M": [namer.functor(F) for F in s.M],
        "sigma": [list(row) for row in s.sigma],
    }
    return namer.docs + [doc]


def nested_docs(name, q, namer: Namer) -> list:
    B = q.B
    from .functors import shape

    doc = {
        "kind": "nested",
        "name": name,
        "B": namer.category_ref(B),
        "obj": [namer.functor(q.Q(b)) for b in range(B.n_objects)],
        "one": [namer.oplax(q.Q1(f)) for f in range(B.n_one_cells)],
        "two": [namer.modification(q.Q2(a)) for a in range(B.n_two_cells)],
        "compositor": [[g, f, namer.modification(q.gamma(g, f))] for g, f in shape(B).pairs1],
        "unitor": [namer.modification(q.iota(b)) for b in range(B.n_objects)],
    }
    return namer.docs + [doc]


def write_docs(path, docs: list):
    text = "\n---\n".join(_dump(d).rstrip("\n") for d in docs) + "\n"
    if str(path) == "-":
        return text
    tmp = f"{path}.tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)
    return text


def dumps(docs: list) -> str:
    return "\n---\n".join(_dump(d).rstrip("\n") for d in docs) + "\n"

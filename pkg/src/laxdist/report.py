"""Validation reports, budgets and the deterministic first-witness scan."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

DEFAULT_BUDGET = 10**8


class StructuralError(ValueError):
    """Malformed input: an id out of range or a missing table entry."""


class BudgetExceeded(RuntimeError):
    """A scan or enumeration would exceed its primitive-check budget."""

    def __init__(self, needed, limit, what=""):
        self.needed = needed
        self.limit = limit
        msg = f"budget exceeded: {what} needs {needed} checks, limit is {limit}"
        super().__init__(msg)


class Budget:
    """Counter of primitive checks with a hard ceiling."""

    def __init__(self, limit=DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, n=1, what=""):
        if self.used + n > self.limit:
            raise BudgetExceeded(self.used + n, self.limit, what)
        self.used += n

    def reserve(self, n, what=""):
        # refuse up front when a whole scan is known to be too large
        if self.used + n > self.limit:
            raise BudgetExceeded(self.used + n, self.limit, what)


def as_budget(budget) -> Budget:
    if isinstance(budget, Budget):
        return budget
    return Budget(DEFAULT_BUDGET if budget is None else budget)


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple
    detail: str = ""

    def as_dict(self):
        return {"axiom": self.axiom, "witness": list(self.witness), "detail": self.detail}


@dataclass
class ValidationReport:
    """Outcome of an axiom scan.

    ``results`` maps every axiom that was considered to ``"ok"``, ``"fail"``
    or ``"vacuous"``, in scan order. ``violations`` holds the first witness of
    each failed axiom.
    """

    subject: str = ""
    violations: list = field(default_factory=list)
    results: dict = field(default_factory=dict)
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    @property
    def failed(self) -> list:
        return [v.axiom for v in self.violations]

    def record(self, axiom, witness=None, detail="", checks=0):
        """Record the outcome of one axiom; ``witness=None`` means it held."""
        self.checks += checks
        if witness is None:
            self.results.setdefault(axiom, "ok")
            return
        self.results[axiom] = "fail"
        if not any(v.axiom == axiom for v in self.violations):
            self.violations.append(Violation(axiom, tuple(witness), detail))

    def vacuous(self, axiom):
        self.results[axiom] = "vacuous"

    def merge(self, other: "ValidationReport", prefix=""):
        for axiom, status in other.results.items():
            key = prefix + axiom
            if status == "fail" or key not in self.results:
                self.results[key] = status
        for v in other.violations:
            self.violations.append(Violation(prefix + v.axiom, v.witness, v.detail))
        self.checks += other.checks
        return self

    def as_dict(self):
        return {
            "subject": self.subject,
            "ok": self.ok,
            "axioms": dict(self.results),
            "violations": [v.as_dict() for v in self.violations],
            "checks": self.checks,
        }

    def __repr__(self):
        if self.ok:
            return f"<ValidationReport {self.subject} ok>"
        return f"<ValidationReport {self.subject} failed {self.failed}>"


def first_witness(
    outer: Sequence,
    slab: Callable[[object], Optional[tuple]],
    threads: int = 1,
) -> Optional[tuple]:
    """Return the first witness found by ``slab`` over ``outer`` in order.

    ``slab(x)`` scans everything whose leading index is ``x`` in lexicographic
    order and returns the first failing tuple or None. With ``threads > 1`` the
    slabs are evaluated concurrently but the earliest slab still wins, so the
    result never depends on the thread count.
    """
    if threads <= 1 or len(outer) < 2:
        for x in outer:
            w = slab(x)
            if w is not None:
                return w
        return None
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for w in pool.map(slab, outer):
            if w is not None:
                return w
    return None


def first_in(items: Iterable, pred: Callable) -> Optional[tuple]:
    """First item of ``items`` for which ``pred`` is false."""
    for item in items:
        if not pred(*item):
            return tuple(item)
    return None


def scan(items: Sequence[tuple], pred: Callable, threads: int = 1) -> Optional[tuple]:
    """First item (in the given order) failing ``pred``.

    Items are grouped into slabs by their leading entry so the scan can be
    split across threads without changing which witness is reported.
    """
    if threads <= 1:
        return first_in(items, pred)
    slabs: list = []
    last = object()
    for item in items:
        if not slabs or item[0] != last:
            slabs.append([])
            last = item[0]
        slabs[-1].append(item)
    return first_witness(slabs, lambda slab: first_in(slab, pred), threads)

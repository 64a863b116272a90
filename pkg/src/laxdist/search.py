"""Backtracking over finite assignments with constraint pruning.

Variables are assigned in a fixed order; candidates come from a callable so a
variable's domain may depend on earlier choices (e.g. the 2-cells available
for a compositor depend on where the 1-cells went). Each constraint is checked
as soon as its last variable is assigned. Solutions come out in lexicographic
order of candidate positions, which makes enumeration order deterministic.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterator, Sequence

from .report import Budget


def backtrack(
    variables: Sequence[Hashable],
    domain: Callable[[Hashable, dict], Sequence],
    constraints: Sequence[tuple],
    budget: Budget,
    what: str = "enumeration",
) -> Iterator[dict]:
    """Yield every assignment ``{variable: value}`` meeting all constraints.

    ``constraints`` holds ``(keys, check)`` pairs; ``check(assignment)``
    returns a bool and may read any variable in ``keys``. Constraints whose
    keys are all outside ``variables`` are checked once before the search.
    """
    position = {v: i for i, v in enumerate(variables)}
    by_last: list = [[] for _ in variables]
    upfront = []
    for keys, check in constraints:
        idx = [position[k] for k in keys if k in position]
        if idx:
            by_last[max(idx)].append(check)
        else:
            upfront.append(check)
    assign: dict = {}
    for check in upfront:
        budget.spend(1, what)
        if not check(assign):
            return
    n = len(variables)
    if n == 0:
        yield {}
        return

    # explicit stack keeps deep searches clear of the recursion limit
    stack = [iter(domain(variables[0], assign))]
    while stack:
        depth = len(stack) - 1
        var = variables[depth]
        advanced = False
        for value in stack[-1]:
            budget.spend(1, what)
            assign[var] = value
            good = True
            for check in by_last[depth]:
                budget.spend(1, what)
                if not check(assign):
                    good = False
                    break
            if not good:
                continue
            if depth + 1 == n:
                yield dict(assign)
                continue
            stack.append(iter(domain(variables[depth + 1], assign)))
            advanced = True
            break
        if not advanced:
            stack.pop()
            assign.pop(var, None)

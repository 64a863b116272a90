"""
Currying, collation and the way back
====================================

A law can be curried into a single lax functor valued in lax functors, and
uncurrying that again lands exactly on the collation. Going the other way, a
unitary lax functor on a product comes from a law precisely when its mixed
compositors are invertible.
"""

# %%
from laxdist import (
    collate,
    curry_law,
    enumerate_laws,
    extract_law_T,
    is_decomposable,
    is_unitary,
    monads_of,
    product,
    rel_2category,
    uncurry_J,
    uncurry_nested,
    validate_law,
)
from laxdist.converse import check_kappa, find_non_decomposable
from laxdist.instances import labelled, ordered_monoid

D = labelled(rel_2category(1), 2)
monads = [F for F, _ in monads_of(D)]
s = next(enumerate_laws((monads[0],), (monads[1],)))

q = curry_law(s)
print("uncurry(curry(s)) == s:", uncurry_nested(q) == s)
print("uncurry_J(curry(s)) == collate(s):", uncurry_J(q) == collate(s))

# %%
# Extracting the law again
# ------------------------
# The unitors here are invertible but not identities, so the extracted law is
# isomorphic to ``s`` rather than equal; the witness is checked directly.

P = collate(s)
print("unitary:", is_unitary(P), " decomposable:", is_decomposable(P))
t = extract_law_T(P)
print("extracted law valid:", validate_law(t).ok, " equal to s:", t == s)
print("kappa witness:", "ok" if check_kappa(s).ok else check_kappa(s).failed)

# %%
# A unitary functor that is not a law
# -----------------------------------
# Over chains of length three the search finds a unitary functor with a
# mixed compositor that is a strict inequality, hence not invertible.

X = ordered_monoid("max", 2)
bad = find_non_decomposable(product(X, X), X)
print("non-decomposable witness:", is_decomposable(bad))

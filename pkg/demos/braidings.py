"""
Braidings as laws
=================

A braiding on a one-object 2-category is the same thing as a law whose two
families are both the identity. On the delooping of a monoid with only
identity 2-cells, a braiding exists exactly when the monoid is commutative.
Here we count both sides over every monoid of size at most four.
"""

# %%
from laxdist import enumerate_laws, identity_lax_functor, oracles, validate_law
from laxdist.converse import braiding_to_law, braidings, check_braiding
from laxdist.instances import discrete_monoid_delooping, labelled

for n in range(1, 5):
    tables = oracles.monoid_tables(n)
    agree = 0
    for table in tables:
        X = discrete_monoid_delooping(table)
        I = identity_lax_functor(X)
        has_law = bool(list(enumerate_laws((I,), (I,))))
        if has_law == oracles.is_commutative(table) == bool(braidings(X)):
            agree += 1
    print(f"size {n}: {len(tables)} monoid tables, {agree} agree")

# %%
# With non-trivial 2-cells
# ------------------------
# Tagging every 2-cell of Z/2 with a Z/2 label leaves two braidings. Breaking
# one crossing shows which hexagon fails, and the law validator agrees.

X = labelled(discrete_monoid_delooping([[0, 1], [1, 0]]), 2)
good = braidings(X)
print("braidings:", good)
bad = [row[:] for row in good[0]]
bad[0][1] ^= 1
print("braiding check:", check_braiding(X, bad).failed)
print("law check:", validate_law(braiding_to_law(X, bad)).failed)

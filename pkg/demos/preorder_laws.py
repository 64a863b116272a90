"""
Laws between preorders
======================

Monads in the 2-category of relations on a finite set are preorders. A law
between two of them is a crossing ``S T => T S``, which in a locally posetal
setting is just an inclusion of relations. This script lists the laws on a
two-point set, builds the composite monads and collates each law into a lax
functor on the product.
"""

# %%
# The monads on rel(2)
# --------------------
# 1-cells of ``rel(2)`` are 4-bit masks, bit ``2*i + j`` meaning ``i ~ j``.

import itertools

from laxdist import (
    collate,
    composite_monad,
    enumerate_laws,
    monads_of,
    rel_2category,
    validate_lax_functor,
)
from laxdist.collation import kappa_B


def show(mask, n=2):
    return "{" + ", ".join(f"{i}{j}" for i in range(n) for j in range(n) if mask >> (i * n + j) & 1) + "}"


R = rel_2category(2)
monads = [F for F, _ in monads_of(R)]
for F in monads:
    print("preorder", show(F.one(0)))

# %%
# Which pairs admit a law?
# ------------------------

for S, T in itertools.product(monads, repeat=2):
    laws = list(enumerate_laws((S,), (T,)))
    if not laws:
        print(f"no law   S={show(S.one(0))}  T={show(T.one(0))}")
        continue
    TS = composite_monad(S, T)
    print(f"law      S={show(S.one(0))}  T={show(T.one(0))}  ->  TS={show(TS.one(0))}")

# %%
# Collation
# ---------
# Each law gives a lax functor on ``terminal x terminal`` whose restriction
# to either factor is one of the two monads, up to a canonical icon.

S, T = monads[1], monads[3]
(s,) = enumerate_laws((S,), (T,))
P = collate(s)
print("collated functor valid:", validate_lax_functor(P).ok)
print("icon components:", kappa_B(s, 0, P).comp2)

"""
Four-dimensional building blocks and sphere bundles
===================================================

E(n), Q, Q*, P and X(n) as lattices with first Chern classes, then the
Chern numbers of S = P(E + C) over them, computed twice: by closed
formulas and by multiplying out in H*(N)[xi] / (xi^2 + c1(E) xi).
"""

from geograph.bundle import product_with_surface, projectivize_chern, projectivize_chern_oracle
from geograph.lattice import building_block, bundle_on_Xn, catalog, elliptic_surface, pair

# the catalog
for blk in catalog((1, 2)):
    rank = blk.lattice.rank if blk.lattice is not None else "-"
    print(f"{blk.name:5}  c1^2={blk.c1sq:4}  c2={blk.c2:4}  rank={rank}")

# E(3): 3 copies of -E8, four hyperbolic-like blocks, one fibre/section block
e3 = elliptic_surface(3)
print("E(3) det:", e3.lattice.det())

# the line bundle on X(n) lives on the tau classes of the -E8 summands
for n in range(1, 6):
    print(f"X({n}): (c1(L)^2, c1(L) c1) = {bundle_on_Xn(n)}")

# Q* with c1(E) = -2 e3, two ways
q = building_block("Q*")
e = (-2) * q.lattice.basis_class("e3")
closed = projectivize_chern(q, pair(q.lattice, e, e), q.c1_dot(e))
ring = projectivize_chern_oracle(q, e)
print("closed:", closed)
print("ring:  ", ring)

# M = S x S^2 gives the j = 0 base quintuple
print("M:", product_with_surface(closed, 0))

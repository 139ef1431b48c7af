"""
Chern numbers and the (a, m, j, k, b) parameters
================================================

The five Chern numbers of a closed almost complex 8-manifold satisfy three
congruences.  Packed into integer parameters they become free, apart from
a + m being divisible by 3.
"""

from geograph import ChernQuintuple, ParamVector, chern_to_params, is_admissible, params_to_chern
from geograph.errors import NotAdmissible

# an admissible quintuple: S^2 bundle over X(1), times S^2
q = ChernQuintuple(60, 108, 96, 12, -336)
print("report:", is_admissible(q).residues)
p = chern_to_params(q)
print("params:", p)

# and back
print("chern: ", params_to_chern(p))

# a single unit of c4 breaks two of the congruences
try:
    chern_to_params(ChernQuintuple(1, 0, 0, 0, 0))
except NotAdmissible as exc:
    print("rejected:", exc)

# any parameters with a + m = 0 (mod 3) give integral Chern numbers, even huge ones
big = ParamVector(2**80, 2**80 + 1, -7, 3**40, -5)
assert chern_to_params(params_to_chern(big)) == big
print("round trip at 2^80 ok")

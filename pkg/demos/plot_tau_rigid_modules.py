"""
tau-rigid modules and their presentations
=========================================

A module M is tau-rigid when Hom(M, tau M) = 0.  Its minimal projective
presentation is then rigid as a two-term complex, and conversely.  We draw
random modules over A3 with radical square zero and compare both sides.
"""

import numpy as np

from tautilt.corpus import linear_a
from tautilt.presentations import e_dim
from tautilt.rep import hom_dim, min_presentation, random_representation, tau
from tautilt.silting import complete_to_tau_tilting

A = linear_a(3, rad_square_zero=True)
rng = np.random.default_rng(0)

for _ in range(8):
    dims = tuple(int(x) for x in rng.integers(0, 3, A.n))
    M = random_representation(A, dims, rng)
    f = min_presentation(M)
    print(f"dims {list(dims)}  Hom(M, tau M) = {hom_dim(M, tau(M))}  E(f, f) = {e_dim(f, f)}")

###############################################################################
# Completing the simple at the middle vertex to a tau-tilting module.

from tautilt.rep import simple
T = complete_to_tau_tilting(simple(A, 1))
print("tau-tilting completion of S1 has dims", list(T.dims))

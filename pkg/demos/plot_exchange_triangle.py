"""
Complements and exchange triangles
==================================

Delete one summand from a silting object and there are exactly two ways
to put something back.  For k[x]/(x^2) the two complements of the empty
object are P[0] and P[1]; the exchange space between them has dimension 2,
so the middle terms of the two triangles differ.
"""

from tautilt.corpus import dual_numbers, linear_a
from tautilt.silting import complements
from tautilt.twoterm import Presentation

A = dual_numbers()
data = complements(Presentation.zero(A))
print("f+ :", data.f_plus.describe())
print("f- :", data.f_minus.describe())
print("d  :", data.d)
print("f' :", data.f_prime.describe())
print("f'':", data.f_double_prime.describe())
for name, ok in data.checks.items():
    print(f"  {name:<20} {ok}")

###############################################################################
# On A2 with P0 kept, the complements are P1 and the presentation of S0.

B = linear_a(2)
data = complements(Presentation.projective(B, 0))
print(data.f_plus.describe(), "|", data.f_minus.describe(), "| d =", data.d)

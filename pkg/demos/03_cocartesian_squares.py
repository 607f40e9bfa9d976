"""Two characterizations of cocartesian squares, compared exhaustively.

A commuting square of F_2 vector spaces is cocartesian iff the counit of
the left Kan extension along the upper-left corner inclusion is
invertible, iff the mediating map out of the direct pushout is an
isomorphism.  Both tests are run on every square with corner dimensions
at most 2.
"""

from kderiv.basecat import VectIso
from kderiv.derivator import (enumerate_squares, is_cocartesian_kan,
                              is_cocartesian_pushout)

base = VectIso(2)
squares = enumerate_squares(base, 2)
n_co = 0
disagreements = 0
for F in squares:
    a = is_cocartesian_kan(base, F)
    b = is_cocartesian_pushout(base, F)
    if a != b:
        disagreements += 1
    n_co += a

print(f"squares with corner dims <= 2: {len(squares)}")
print(f"cocartesian: {n_co}")
print(f"Kan-counit test vs pushout test disagreements: {disagreements}")
assert disagreements == 0

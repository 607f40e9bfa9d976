"""Finite categories and their nerves.

Builds the standard shapes (ordinals, arrow categories, the square),
takes nerves, and reads off fundamental groups through the edge-path
presentation.
"""

from kderiv import fincat
from kderiv.simplicial import abelianize, circle, edge_path, homology, nerve

print("== shapes ==")
for C in (fincat.ordinal(2), fincat.arrow_cat(2), fincat.square_cat()):
    print(f"{C.name}: {len(C.objects)} objects, {len(C.morphisms)} morphisms,"
          f" valid={not fincat.validate(C)}")

print()
print("== nerves and pi_1 ==")
fixtures = [
    ("nerve([1])", nerve(fincat.ordinal(1), 2), ("0",)),
    ("circle", circle(), "v"),
    ("nerve(Z/2)", nerve(fincat.cyclic_group_cat(2), 2), ("*",)),
    ("nerve(Z/3)", nerve(fincat.cyclic_group_cat(3), 2), ("*",)),
]
for name, S, bp in fixtures:
    inv = abelianize(edge_path(S, bp))
    h1 = homology(S, 1)
    print(f"{name}: pi_1^ab = {inv!r}, H_1 = {h1!r}")

# two parallel arrows realize a circle
C = fincat.free_category("pair", ["a", "b"],
                         [("u", "a", "b"), ("v", "a", "b")])
inv = abelianize(edge_path(nerve(C, 2), ("a",)))
print(f"nerve(a => b, two arrows): pi_1^ab = {inv!r}  (a circle)")

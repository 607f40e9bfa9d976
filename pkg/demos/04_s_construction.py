"""The truncated S-construction models.

Builds the four 2-truncated models over F_2 vector spaces: the plain
S-construction of the representable derivator, its bisimplicial
refinement, the nerve-of-isomorphisms model, and the Waldhausen model
with monomorphisms as cofibrations.
"""

from kderiv import sconstruction as sc
from kderiv import simplicial
from kderiv.basecat import VectIso, WaldhausenStructure
from kderiv.derivator import represent

base = VectIso(2)
D = represent(base)

S = sc.build_s(D, 2, 2)
print(f"s-construction, dims <= 2: levels "
      f"{[len(S.levels[k]) for k in range(3)]}, "
      f"identities ok: {not simplicial.verify(S)}")

B = sc.build_Sbis(D, 2, 2, 1)
print(f"bisimplicial S, dims <= 1: "
      f"{ {k: len(v) for k, v in sorted(B.levels.items())} }")
diag = simplicial.diagonal(B)
print(f"diagonal levels: {[len(diag.levels[k]) for k in range(3)]}")

N = sc.build_NisoS(D, 2, 1)
print(f"nerve-of-isomorphisms model, dims <= 1: levels "
      f"{[len(N.levels[k]) for k in range(3)]}")

W = WaldhausenStructure(base, "monos")
WB = sc.build_wald(W, 2, 2, 2)
print(f"Waldhausen model (monos), dims <= 2: "
      f"{ {k: len(v) for k, v in sorted(WB.levels.items())} }")

"""The comparison maps between the models.

iota embeds the S-construction into the diagonal of its bisimplicial
refinement; mu and mu^ob map into the nerve-of-isomorphisms model with
mu^ob = mu . iota; the agreement map identifies the Waldhausen model of
(Vect, all-maps, isos) with the derivator model levelwise; and the
L-construction packages the levelwise K_0 of s(iso_k D) with its
operators.  All verdicts are reported at enumeration bound 1.
"""

from kderiv import ktheory as kt
from kderiv.basecat import VectIso, WaldhausenStructure
from kderiv.derivator import represent

base = VectIso(2)
D = represent(base)

print(f"iota:   {kt.iota(D, 1)!r}")
print(f"mu^ob:  {kt.mu_ob(D, 1)!r}")
print(f"mu:     {kt.mu(D, 1)!r}")
print(f"mu^ob = mu . iota: {kt.mu_factorization_check(D, 1)}")

W = WaldhausenStructure(base, "all-maps")
ag = kt.agreement(W, 1)
print(f"agreement: {ag!r}, levelwise bijection: {ag.levelwise_bijection}")

out = kt.L_construction(D, 1, 1)
print("L-construction:")
for k, res in out["levels"].items():
    print(f"  level {k}: {res!r}")
for rep in out["operators"]:
    print(f"  {rep.name}: {rep.verdict}")
print(f"  iota_F: {out['iota_F'].verdict}")

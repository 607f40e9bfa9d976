"""The derivator axioms, checked exactly on the representable model.

D(X) is the category of X-shaped diagrams of F_2 vector spaces; left Kan
extensions are computed pointwise as colimits over comma categories, and
the axioms Der1-Der5 are verified on a small battery of shapes.
"""

from kderiv import fincat
from kderiv.basecat import PtSetIso, VectIso
from kderiv.derivator import (check_der1, check_der2, check_der3_der4,
                              check_der5, enumerate_diagram_morphisms,
                              represent)

for base in (VectIso(2), PtSetIso()):
    D = represent(base)
    print(f"== base {base.tag} ==")
    I1 = fincat.ordinal(1)
    ul = fincat.ulcorner_cat()

    reports = [check_der1(D, fincat.ordinal(0), fincat.ordinal(0), 1)]

    samples = []
    for F in D.objects(I1, 1):
        for G in D.objects(I1, 1):
            samples.extend(enumerate_diagram_morphisms(base, F, G))
    reports.append(check_der2(D, I1, samples))

    reports.append(check_der3_der4(D, fincat.collapse_functor(I1), "*",
                                   D.objects(I1, 1)))
    reports.append(check_der3_der4(D, fincat.inclusion_ulcorner(), "(1,1)",
                                   D.objects(ul, 1)))

    free_arrow = fincat.free_category("F(a->b)", ["a", "b"],
                                      [("u", "a", "b")])
    reports.append(check_der5(D, free_arrow, 1, [("u", "a", "b")]))

    for r in reports:
        print(f"  {r['axiom']:9s} on {r['shapes']}: "
              f"{'pass' if r['pass'] else 'FAIL'}")
    print()

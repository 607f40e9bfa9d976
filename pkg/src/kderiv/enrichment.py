"""The simplicial enrichment of strict prederivator morphisms: mapping
simplices, composition via the diagonal, the eq-subprederivator, path
objects and homotopies, strong equivalences from initial objects, the
iso_n prederivators, and the truncation to the nerve of strict morphisms.

An n-simplex from D to D' is a strict morphism D -> D'([n] x -), carried
here by a pointwise construction rule (X, F) |-> diagram on [n] x X.
"""

from __future__ import annotations

from . import fincat
from .derivator import (DiagramMorphism, Prederivator, ReprPrederivator,
                        validate_diagram)


class EnrichedSimplex:
    """A level-n simplex of the enriched mapping space between
    prederivators: a strict morphism D -> D'([n] x -)."""

    def __init__(self, n, src, tgt, name, rule, eq=False):
        self.n = n
        self.src = src
        self.tgt = tgt
        self.name = name
        self.rule = rule       # (X, F) -> diagram on [n] x X
        self.eq = eq

    def apply(self, X, F):
        return self.rule(X, F)

    def __repr__(self):
        return f"EnrichedSimplex(level {self.n}, {self.name})"


# ---------------------------------------------------------------------------
# the eq condition

def eq_membership(base, Y, X, F):
    """Is the underlying Y-diagram of F (a diagram on Y x X) valued in weak
    equivalences, i.e. does dia_{Y,X}(F) send every morphism of Y to a
    pointwise weq?"""
    for g in Y.non_identity_morphisms():
        for x in X.objects:
            comp = F.mors[f"({g},{X.identities[x]})"]
            if not base.is_weq(comp):
                return False
    return True


# ---------------------------------------------------------------------------
# simplicial structure on simplices

def simplicial_operator(phi, values):
    """tau* phi for a monotone map tau: [m] -> [n] given by its values."""
    m = len(values) - 1
    tau = fincat.ordinal_map_functor(list(values), m, phi.n)

    def rule(X, F):
        S = phi.tgt.eval_shape(X)
        op = fincat.product_functor(tau, fincat.identity_functor(S))
        return phi.apply(X, F).restrict(op)

    return EnrichedSimplex(m, phi.src, phi.tgt,
                           f"{phi.name}.{list(values)}", rule, eq=phi.eq)


def face(phi, i):
    return simplicial_operator(phi, [k if k < i else k + 1
                                     for k in range(phi.n)])


def degeneracy(phi, i):
    return simplicial_operator(phi, [k if k <= i else k - 1
                                     for k in range(phi.n + 2)])


def zero_simplex(src, tgt, name, plain_rule, eq=False):
    """A level-0 simplex from a plain rule (X, F) -> diagram on X."""

    def rule(X, F):
        G = plain_rule(X, F)
        P = fincat.product(fincat.ordinal(0), X)
        objs = {f"(0,{x})": G.objs[x] for x in X.objects}
        mors = {f"(0=>0,{u})": G.mors[u] for u in X.morphisms}
        return type(G)(P, objs, mors)

    return EnrichedSimplex(0, src, tgt, name, rule, eq=eq)


def identity_simplex(D):
    return zero_simplex(D, D, "id", lambda X, F: F, eq=True)


def alpha_star(src, tgt, G0, G1, nat, eq=None):
    """The 1-simplex induced by a natural transformation nat: G0 => G1 of
    base functors; eq when the components are weak equivalences."""
    base = tgt.base

    def rule(X, F):
        P = fincat.product(fincat.ordinal(1), X)
        objs, mors = {}, {}
        for x in X.objects:
            objs[f"(0,{x})"] = G0.on_obj(F.objs[x])
            objs[f"(1,{x})"] = G1.on_obj(F.objs[x])
        for u, (s, t) in X.morphisms.items():
            mors[f"(0=>0,{u})"] = G0.on_mor(F.mors[u])
            mors[f"(1=>1,{u})"] = G1.on_mor(F.mors[u])
            mors[f"(0=>1,{u})"] = base.compose(G0.on_mor(F.mors[u]),
                                               nat.component(F.objs[t]))
        from .derivator import DiagramObject
        return DiagramObject(P, objs, mors)

    return EnrichedSimplex(1, src, tgt, f"({nat.name})_*", rule,
                           eq=bool(eq) if eq is not None else True)


# ---------------------------------------------------------------------------
# composition via the diagonal

def _diag_nest(n, X):
    """[n] x X -> [n] x ([n] x X), diagonal in the [n]-coordinates."""
    In = fincat.ordinal(n)
    src = fincat.product(In, X)
    tgt = fincat.product(In, fincat.product(In, X))
    obj_map = {f"({i},{x})": f"({i},({i},{x}))"
               for i in In.objects for x in X.objects}
    mor_map = {f"({m},{u})": f"({m},({m},{u}))"
               for m in In.morphisms for u in X.morphisms}
    return fincat.FinFunctor(f"diag[{n}]x{X.name}", src, tgt, obj_map, mor_map)


def compose_simplices(phi, psi):
    """The level-n composite D''(diag x -)* . psi([n] x -) . phi."""
    if phi.n != psi.n:
        raise ValueError("level mismatch")
    if phi.tgt is not psi.src and phi.tgt != psi.src:
        raise ValueError("endpoint mismatch")
    if not isinstance(psi.tgt, ReprPrederivator):
        raise ValueError("composition implemented for representable targets")
    n = phi.n

    def rule(X, F):
        shifted_shape = fincat.product(fincat.ordinal(n), X)
        A = phi.apply(X, F)
        B = psi.apply(shifted_shape, A)
        return B.restrict(_diag_nest(n, X))

    return EnrichedSimplex(n, phi.src, psi.tgt,
                           f"{psi.name}.{phi.name}", rule,
                           eq=phi.eq and psi.eq)


# ---------------------------------------------------------------------------
# homotopies and path objects

def boundary(phi, i):
    """The vertex-i boundary of a 1-simplex (a level-0 simplex);
    boundary(phi, 0) is the 1-end, boundary(phi, 1) the 0-end."""
    return simplicial_operator(phi, [1 - i])


def homotopy_transform(base, Psi, X, F):
    """The natural transformation dia_{[1],X}(0 -> 1) of Psi(F), from the
    0-end value to the 1-end value."""
    G = Psi.apply(X, F)
    S = Psi.tgt.eval_shape(X)
    zero_end = simplicial_operator(Psi, [0]).apply(X, F)
    one_end = simplicial_operator(Psi, [1]).apply(X, F)
    comps = {f"(0,{s})": G.mors[f"(0=>1,{S.identities[s]})"]
             for s in S.objects}
    return DiagramMorphism(zero_end, one_end, comps)


def homotopy_boundaries(base, Psi, battery):
    """(phi0, phi1, transform) of an eq-flagged 1-simplex; the induced
    transformation is verified invertible on the sampled battery
    [(X, [diagrams])]."""
    phi0 = simplicial_operator(Psi, [0])
    phi1 = simplicial_operator(Psi, [1])
    for X, samples in battery:
        for F in samples:
            t = homotopy_transform(base, Psi, X, F)
            for comp in t.components.values():
                if not base.is_weq(comp):
                    raise ValueError(
                        "1-simplex is not eq: transformation not invertible")
    return phi0, phi1, lambda X, F: homotopy_transform(base, Psi, X, F)


def path_object(D):
    """The factorization of the diagonal of D through D([1] x -)_eq:
    returns (s0, (d1, d0)) with (d1, d0) . s0 literally the diagonal."""

    def s0_rule(X, F):
        proj = fincat.projection_functor(fincat.ordinal(1), X, on_left=True)
        return F.restrict(proj)

    s0 = EnrichedSimplex(1, D, D, "s0", s0_rule, eq=True)

    def end(i):
        def rule(X, G):
            emb = fincat.embed_at(fincat.ordinal(1), str(i), X, on_left=True)
            return G.restrict(emb)
        return rule

    return s0, (end(1), end(0))


def is_initial(X, x0):
    return all(len(X.hom(x0, x)) == 1 for x in X.objects)


def _h_times(X, x0, W):
    """(H x W): [1] x (X x W) -> X x W for the unique H: [1] x X -> X with
    H(0,-) constant x0 and H(1,-) the identity."""
    to_x0 = {x: X.hom(x0, x)[0] for x in X.objects}
    P = fincat.product(X, W)
    src = fincat.product(fincat.ordinal(1), P)
    obj_map, mor_map = {}, {}
    for x in X.objects:
        for w in W.objects:
            obj_map[f"(0,({x},{w}))"] = f"({x0},{w})"
            obj_map[f"(1,({x},{w}))"] = f"({x},{w})"
    idx0 = X.identities[x0]
    for u, (xs, xt) in X.morphisms.items():
        for v in W.morphisms:
            mor_map[f"(0=>0,({u},{v}))"] = f"({idx0},{v})"
            mor_map[f"(0=>1,({u},{v}))"] = f"({to_x0[xt]},{v})"
            mor_map[f"(1=>1,({u},{v}))"] = f"({u},{v})"
    return fincat.FinFunctor(f"H[{X.name},{x0}]x{W.name}", src, P,
                             obj_map, mor_map)


def strong_equivalence_from_initial(D, X, x0, battery=None):
    """The strong equivalence D ~ D(X x -)_eq for x0 initial in X.

    Returns (p_star, i_star, Psi, report): p_star(W, F) pulls back along
    the projection, i_star(W, G) evaluates at x0, i_star . p_star is the
    identity literally, and Psi is the eq 1-simplex (H x -)* connecting
    p_star . i_star to the identity.
    """
    if not is_initial(X, x0):
        raise ValueError(f"{x0} is not initial in {X.name}")
    base = D.base

    def p_star(W, F):
        return F.restrict(fincat.projection_functor(X, W, on_left=True))

    def i_star(W, G):
        return G.restrict(fincat.embed_at(X, x0, W, on_left=True))

    Dx = _EqShift(D, X)

    def psi_rule(W, G):
        return G.restrict(_h_times(X, x0, W))

    Psi = EnrichedSimplex(1, Dx, Dx, f"(Hx-)*[{X.name},{x0}]", psi_rule,
                          eq=True)
    report = {"initial": True, "identity_composite": [], "boundaries": []}
    for W, bound in (battery or []):
        for F in D.objects(W, bound):
            report["identity_composite"].append(
                i_star(W, p_star(W, F)) == F)
        P = fincat.product(X, W)
        for G in Dx.objects(W, bound):
            end0 = simplicial_operator(Psi, [0]).apply(W, G)
            end1 = simplicial_operator(Psi, [1]).apply(W, G)
            ok0 = _strip_level(end0, P) == p_star(W, i_star(W, G))
            ok1 = _strip_level(end1, P) == G
            t = homotopy_transform(base, Psi, W, G)
            inv = all(base.is_weq(c) for c in t.components.values())
            report["boundaries"].append(ok0 and ok1 and inv)
    report["pass"] = (all(report["identity_composite"])
                      and all(report["boundaries"]))
    return p_star, i_star, Psi, report


def _strip_level(G, X):
    """Reindex a diagram on [0] x X as a diagram on X."""
    from .derivator import DiagramObject
    return DiagramObject(X, {x: G.objs[f"(0,{x})"] for x in X.objects},
                         {u: G.mors[f"(0=>0,{u})"] for u in X.morphisms})


class _EqShift(Prederivator):
    """D(Y x -)_eq: shifted diagrams whose Y-transitions are weqs."""

    def __init__(self, inner, Y):
        super().__init__(inner.base)
        self.inner = inner
        self.Y = Y

    def eval_shape(self, X):
        return self.inner.eval_shape(fincat.product(self.Y, X))

    def accepts(self, X, F):
        return (self.inner.accepts(fincat.product(self.Y, X), F)
                and eq_membership(self.base, self.Y, X, F))

    def shape_functor(self, f):
        return self.inner.shape_functor(
            fincat.product_functor(fincat.identity_functor(self.Y), f))


def eq_shift(D, Y):
    return _EqShift(D, Y)


# ---------------------------------------------------------------------------
# iso_n D

class IsoPrederivator(Prederivator):
    """iso_n D: diagrams on [n] x X whose [n]-transitions are invertible
    (exact hom-sets required)."""

    def __init__(self, inner, n):
        if not inner.exact_ho:
            raise ValueError("iso_n needs enumerable hom-sets (exact_ho)")
        super().__init__(inner.base)
        self.inner = inner
        self.n = n
        self.Y = fincat.ordinal(n)

    def eval_shape(self, X):
        return self.inner.eval_shape(fincat.product(self.Y, X))

    def accepts(self, X, F):
        if not self.inner.accepts(fincat.product(self.Y, X), F):
            return False
        for g in self.Y.non_identity_morphisms():
            for x in X.objects:
                if not self.base.is_iso(F.mors[f"({g},{X.identities[x]})"]):
                    return False
        return True

    def shape_functor(self, f):
        return self.inner.shape_functor(
            fincat.product_functor(fincat.identity_functor(self.Y), f))

    def simplicial_operator(self, values, X, F):
        """tau* in the [n]-direction for tau: [m] -> [n]."""
        m = len(values) - 1
        tau = fincat.ordinal_map_functor(list(values), m, self.n)
        op = fincat.product_functor(tau, fincat.identity_functor(X))
        return F.restrict(op)


def iso_prederivator(D, n):
    if n == 0:
        return D
    return IsoPrederivator(D, n)


def degeneracy_to_iso(D, n, X, F):
    """The canonical inclusion-of-identities image of F in (iso_n D)(X)."""
    if n == 0:
        return F
    proj = fincat.projection_functor(fincat.ordinal(n), X, on_left=True)
    return F.restrict(proj)


# ---------------------------------------------------------------------------
# truncation to the nerve of strict morphisms

def rho(base, phi, battery):
    """The image of an eq n-simplex in the nerve of strict morphisms: the
    chain of boundary 0-simplices and the connecting invertible
    transformations obtained from dia_{[n],-}."""
    verts = [simplicial_operator(phi, [i]) for i in range(phi.n + 1)]
    transforms = []
    for i in range(phi.n):
        def tr(X, F, i=i):
            G = phi.apply(X, F)
            S = phi.tgt.eval_shape(X)
            src = verts[i].apply(X, F)
            tgt = verts[i + 1].apply(X, F)
            comps = {f"(0,{s})": G.mors[f"({i}=>{i + 1},{S.identities[s]})"]
                     for s in S.objects}
            return DiagramMorphism(src, tgt, comps)
        transforms.append(tr)
    for X, samples in battery:
        for F in samples:
            for tr in transforms:
                t = tr(X, F)
                for comp in t.components.values():
                    if not base.is_weq(comp):
                        raise ValueError("simplex is not eq-valued")
    return verts, transforms


def simplices_agree(phi, psi, battery):
    """Literal equality of two simplices on every sampled evaluation."""
    if phi.n != psi.n:
        return False
    for X, samples in battery:
        for F in samples:
            if phi.apply(X, F) != psi.apply(X, F):
                return False
    return True

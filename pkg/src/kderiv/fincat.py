"""Finite categories presented by total composition tables.

Categories are small enough that every axiom (associativity, unit laws,
functoriality, naturality) is checked by exhaustive enumeration.  All ids
are strings with deterministic naming, so equality of constructed
categories is literal equality of the presentation.

Composition convention: ``compose[(f, g)] = g . f`` (f applied first).
"""

from __future__ import annotations

import itertools
import json


class FinCat:
    """A finite category: object ids, morphism ids with src/tgt, a total
    composition table on composable pairs, and an identity per object."""

    def __init__(self, name, objects, morphisms, compose, identities):
        self.name = name
        self.objects = list(objects)
        self.morphisms = dict(morphisms)      # id -> (src, tgt)
        self.compose = dict(compose)          # (f, g) -> g.f
        self.identities = dict(identities)    # obj -> morphism id

    def src(self, m):
        return self.morphisms[m][0]

    def tgt(self, m):
        return self.morphisms[m][1]

    def is_identity(self, m):
        return self.identities.get(self.src(m)) == m and self.src(m) == self.tgt(m)

    def non_identity_morphisms(self):
        return [m for m in self.morphisms if not self.is_identity(m)]

    def hom(self, a, b):
        return sorted(m for m, (s, t) in self.morphisms.items() if s == a and t == b)

    def compose_pair(self, f, g):
        """g after f."""
        if self.tgt(f) != self.src(g):
            raise ValueError(f"{f} and {g} are not composable in {self.name}")
        return self.compose[(f, g)]

    def __eq__(self, other):
        if not isinstance(other, FinCat):
            return NotImplemented
        return (self.objects == other.objects
                and self.morphisms == other.morphisms
                and self.compose == other.compose
                and self.identities == other.identities)

    def __hash__(self):
        return hash((tuple(self.objects), tuple(sorted(self.morphisms))))

    def __repr__(self):
        return f"FinCat({self.name!r}, {len(self.objects)} objects, {len(self.morphisms)} morphisms)"

    def to_json(self):
        return {
            "name": self.name,
            "objects": list(self.objects),
            "morphisms": [[m, s, t] for m, (s, t) in sorted(self.morphisms.items())],
            "composition": [[f, g, h] for (f, g), h in sorted(self.compose.items())],
            "identities": [[o, self.identities[o]] for o in self.objects],
        }


class FinFunctor:
    def __init__(self, name, src, tgt, obj_map, mor_map):
        self.name = name
        self.src = src
        self.tgt = tgt
        self.obj_map = dict(obj_map)
        self.mor_map = dict(mor_map)

    def obj(self, o):
        return self.obj_map[o]

    def mor(self, m):
        return self.mor_map[m]

    def __eq__(self, other):
        if not isinstance(other, FinFunctor):
            return NotImplemented
        return (self.src == other.src and self.tgt == other.tgt
                and self.obj_map == other.obj_map and self.mor_map == other.mor_map)

    def __hash__(self):
        return hash((tuple(sorted(self.obj_map.items())), tuple(sorted(self.mor_map.items()))))

    def __repr__(self):
        return f"FinFunctor({self.name!r}: {self.src.name} -> {self.tgt.name})"

    def to_json(self):
        return {
            "name": self.name,
            "src": self.src.name,
            "tgt": self.tgt.name,
            "obj_map": [[a, b] for a, b in sorted(self.obj_map.items())],
            "mor_map": [[a, b] for a, b in sorted(self.mor_map.items())],
        }


class FinNatTrans:
    def __init__(self, name, src, tgt, components):
        self.name = name
        self.src = src              # FinFunctor
        self.tgt = tgt              # FinFunctor, parallel to src
        self.components = dict(components)  # object of src.src -> morphism id in src.tgt

    def at(self, o):
        return self.components[o]

    def __repr__(self):
        return f"FinNatTrans({self.name!r}: {self.src.name} => {self.tgt.name})"

    def to_json(self):
        return {
            "name": self.name,
            "src": self.src.name,
            "tgt": self.tgt.name,
            "components": [[o, m] for o, m in sorted(self.components.items())],
        }


class CommaData:
    """The Der4 square for f: X -> Y at an object y: the comma category
    f|y with its source projection j, the collapse p to the point, and the
    structure transformation alpha: f.j => i_y.p."""

    def __init__(self, comma, j, p, alpha):
        self.comma = comma
        self.j = j
        self.p = p
        self.alpha = alpha


# ---------------------------------------------------------------------------
# validation

def validate(C):
    """Diagnostics for the FinCat axioms; empty list iff C is a category."""
    out = []
    for m, (s, t) in C.morphisms.items():
        if s not in C.objects:
            out.append(f"morphism {m}: src {s} is not a declared object")
        if t not in C.objects:
            out.append(f"morphism {m}: tgt {t} is not a declared object")
    for o in C.objects:
        i = C.identities.get(o)
        if i is None or i not in C.morphisms:
            out.append(f"no identity for object {o}")
        elif C.morphisms[i] != (o, o):
            out.append(f"identity {i} of {o} is not an endomorphism of {o}")
    morphs = list(C.morphisms)
    for f in morphs:
        for g in morphs:
            composable = C.tgt(f) == C.src(g)
            present = (f, g) in C.compose
            if composable and not present:
                out.append(f"missing composite for ({f}, {g})")
            if present and not composable:
                out.append(f"composite declared for non-composable ({f}, {g})")
            if present and composable:
                h = C.compose[(f, g)]
                if h not in C.morphisms:
                    out.append(f"composite {h} of ({f}, {g}) not a morphism")
                elif C.morphisms[h] != (C.src(f), C.tgt(g)):
                    out.append(f"composite {h} of ({f}, {g}) has wrong endpoints")
    if out:
        return out
    for f in morphs:
        i_s = C.identities.get(C.src(f))
        i_t = C.identities.get(C.tgt(f))
        if i_s and C.compose.get((i_s, f)) != f:
            out.append(f"left unit law fails for {f}")
        if i_t and C.compose.get((f, i_t)) != f:
            out.append(f"right unit law fails for {f}")
    for f in morphs:
        for g in morphs:
            if C.tgt(f) != C.src(g):
                continue
            for h in morphs:
                if C.tgt(g) != C.src(h):
                    continue
                if C.compose[(C.compose[(f, g)], h)] != C.compose[(f, C.compose[(g, h)])]:
                    out.append(f"associativity fails on triple ({f}, {g}, {h})")
    return out


def validate_functor(F):
    out = []
    for o in F.src.objects:
        if F.obj_map.get(o) not in F.tgt.objects:
            out.append(f"object {o} not mapped to an object")
    for m, (s, t) in F.src.morphisms.items():
        im = F.mor_map.get(m)
        if im not in F.tgt.morphisms:
            out.append(f"morphism {m} not mapped to a morphism")
            continue
        if F.tgt.morphisms[im] != (F.obj_map[s], F.obj_map[t]):
            out.append(f"morphism {m}: image has wrong endpoints")
    if out:
        return out
    for o in F.src.objects:
        if F.mor_map[F.src.identities[o]] != F.tgt.identities[F.obj_map[o]]:
            out.append(f"identity of {o} not preserved")
    for (f, g), h in F.src.compose.items():
        if F.tgt.compose[(F.mor_map[f], F.mor_map[g])] != F.mor_map[h]:
            out.append(f"composition not preserved on ({f}, {g})")
    return out


def validate_nat(alpha):
    F, G = alpha.src, alpha.tgt
    D = F.tgt
    out = []
    for o in F.src.objects:
        c = alpha.components.get(o)
        if c not in D.morphisms:
            out.append(f"component at {o} missing")
        elif D.morphisms[c] != (F.obj_map[o], G.obj_map[o]):
            out.append(f"component at {o} has wrong endpoints")
    if out:
        return out
    for m, (s, t) in F.src.morphisms.items():
        lhs = D.compose[(F.mor_map[m], alpha.at(t))]
        rhs = D.compose[(alpha.at(s), G.mor_map[m])]
        if lhs != rhs:
            out.append(f"naturality square fails at {m}")
    return out


def is_finite_direct(C):
    """True iff the graph of non-identity morphisms is acyclic."""
    adj = {o: set() for o in C.objects}
    for m in C.non_identity_morphisms():
        s, t = C.morphisms[m]
        if s == t:
            return False
        adj[s].add(t)
    seen, stack = set(), set()

    def dfs(v):
        seen.add(v)
        stack.add(v)
        for w in adj[v]:
            if w in stack:
                return False
            if w not in seen and not dfs(w):
                return False
        stack.discard(v)
        return True

    return all(dfs(v) for v in C.objects if v not in seen)


# ---------------------------------------------------------------------------
# construction helpers

def from_poset(name, elements, leq):
    """Category of a finite poset; unique morphism 'a=>b' whenever leq(a, b)."""
    elements = list(elements)
    morphisms = {}
    for a in elements:
        for b in elements:
            if leq(a, b):
                morphisms[f"{a}=>{b}"] = (a, b)
    compose = {}
    for f, (a, b) in morphisms.items():
        for g, (b2, c) in morphisms.items():
            if b == b2:
                compose[(f, g)] = f"{a}=>{c}"
    identities = {a: f"{a}=>{a}" for a in elements}
    return FinCat(name, elements, morphisms, compose, identities)


def terminal_cat():
    return from_poset("e", ["*"], lambda a, b: True)


def ordinal(n):
    if n < 0:
        raise ValueError("ordinal index must be >= 0")
    return from_poset(f"[{n}]", [str(i) for i in range(n + 1)],
                      lambda a, b: int(a) <= int(b))


def arrow_cat(n):
    """Ar[n]: pairs (i,j) with i <= j, ordered componentwise."""
    if n < 0:
        raise ValueError("arrow_cat index must be >= 0")
    elems = [f"({i},{j})" for i in range(n + 1) for j in range(i, n + 1)]

    def leq(a, b):
        i, j = _pair(a)
        k, l = _pair(b)
        return i <= k and j <= l

    return from_poset(f"Ar[{n}]", elems, leq)


def _pair(s):
    i, j = s[1:-1].split(",")
    return int(i), int(j)


def product(C, D):
    objects = [f"({a},{b})" for a in C.objects for b in D.objects]
    morphisms = {}
    for f, (a, b) in C.morphisms.items():
        for g, (c, d) in D.morphisms.items():
            morphisms[f"({f},{g})"] = (f"({a},{c})", f"({b},{d})")
    compose = {}
    for (f1, g1), h1 in C.compose.items():
        for (f2, g2), h2 in D.compose.items():
            compose[(f"({f1},{f2})", f"({g1},{g2})")] = f"({h1},{h2})"
    identities = {f"({a},{b})": f"({C.identities[a]},{D.identities[b]})"
                  for a in C.objects for b in D.objects}
    return FinCat(f"{C.name}x{D.name}", objects, morphisms, compose, identities)


def coproduct(C, D):
    objects = [f"L:{o}" for o in C.objects] + [f"R:{o}" for o in D.objects]
    morphisms = {}
    for m, (s, t) in C.morphisms.items():
        morphisms[f"L:{m}"] = (f"L:{s}", f"L:{t}")
    for m, (s, t) in D.morphisms.items():
        morphisms[f"R:{m}"] = (f"R:{s}", f"R:{t}")
    compose = {}
    for (f, g), h in C.compose.items():
        compose[(f"L:{f}", f"L:{g}")] = f"L:{h}"
    for (f, g), h in D.compose.items():
        compose[(f"R:{f}", f"R:{g}")] = f"R:{h}"
    identities = {f"L:{o}": f"L:{m}" for o, m in C.identities.items()}
    identities.update({f"R:{o}": f"R:{m}" for o, m in D.identities.items()})
    return FinCat(f"{C.name}+{D.name}", objects, morphisms, compose, identities)


def opposite(C):
    """Reverse all morphisms; ids are kept, so opposite is an involution."""
    morphisms = {m: (t, s) for m, (s, t) in C.morphisms.items()}
    compose = {(g, f): h for (f, g), h in C.compose.items()}
    name = C.name[:-3] if C.name.endswith("^op") else C.name + "^op"
    return FinCat(name, list(C.objects), morphisms, compose, dict(C.identities))


def full_subcategory(C, objects, name=None):
    objects = list(objects)
    morphisms = {m: (s, t) for m, (s, t) in C.morphisms.items()
                 if s in objects and t in objects}
    compose = {(f, g): h for (f, g), h in C.compose.items()
               if f in morphisms and g in morphisms}
    identities = {o: C.identities[o] for o in objects}
    return FinCat(name or f"{C.name}|{len(objects)}", objects, morphisms, compose, identities)


def inclusion_functor(sub, C, name=None):
    return FinFunctor(name or f"incl:{sub.name}->{C.name}", sub, C,
                      {o: o for o in sub.objects},
                      {m: m for m in sub.morphisms})


def identity_functor(C):
    return FinFunctor(f"id_{C.name}", C, C,
                      {o: o for o in C.objects},
                      {m: m for m in C.morphisms})


def compose_functors(F, G):
    """G after F."""
    if F.tgt.objects != G.src.objects or F.tgt.morphisms != G.src.morphisms:
        raise ValueError("functors not composable")
    return FinFunctor(f"{G.name}.{F.name}", F.src, G.tgt,
                      {o: G.obj_map[F.obj_map[o]] for o in F.src.objects},
                      {m: G.mor_map[F.mor_map[m]] for m in F.src.morphisms})


def product_functor(F, G):
    src = product(F.src, G.src)
    tgt = product(F.tgt, G.tgt)
    obj_map = {f"({a},{b})": f"({F.obj_map[a]},{G.obj_map[b]})"
               for a in F.src.objects for b in G.src.objects}
    mor_map = {f"({f},{g})": f"({F.mor_map[f]},{G.mor_map[g]})"
               for f in F.src.morphisms for g in G.src.morphisms}
    return FinFunctor(f"({F.name}x{G.name})", src, tgt, obj_map, mor_map)


def point_functor(X, x):
    if x not in X.objects:
        raise ValueError(f"{x} is not an object of {X.name}")
    e = terminal_cat()
    return FinFunctor(f"pt[{X.name},{x}]", e, X,
                      {"*": x}, {"*=>*": X.identities[x]})


def point_nat(X, g):
    """The natural transformation between point functors induced by g: x -> x'."""
    if g not in X.morphisms:
        raise ValueError(f"{g} is not a morphism of {X.name}")
    s, t = X.morphisms[g]
    return FinNatTrans(f"ptnat[{X.name},{g}]",
                       point_functor(X, s), point_functor(X, t), {"*": g})


def collapse_functor(X):
    """The unique functor X -> e."""
    e = terminal_cat()
    return FinFunctor(f"p[{X.name}]", X, e,
                      {o: "*" for o in X.objects},
                      {m: "*=>*" for m in X.morphisms})


def diagonal_functor(n):
    """[n] -> [n] x [n], i |-> (i,i)."""
    C = ordinal(n)
    P = product(C, C)
    return FinFunctor(f"diag[{n}]", C, P,
                      {o: f"({o},{o})" for o in C.objects},
                      {m: f"({m},{m})" for m in C.morphisms})


def embed_at(Y, y, X, on_left=True):
    """X -> Y x X (on_left) or X -> X x Y, embedding at the object y of Y."""
    idy = Y.identities[y]
    if on_left:
        P = product(Y, X)
        return FinFunctor(f"emb[{y}x{X.name}]", X, P,
                          {o: f"({y},{o})" for o in X.objects},
                          {m: f"({idy},{m})" for m in X.morphisms})
    P = product(X, Y)
    return FinFunctor(f"emb[{X.name}x{y}]", X, P,
                      {o: f"({o},{y})" for o in X.objects},
                      {m: f"({m},{idy})" for m in X.morphisms})


def embed_mor_at(Y, g, X, on_left=True):
    """The natural transformation (i_{Y,g} x X) between embeddings."""
    s, t = Y.morphisms[g]
    F = embed_at(Y, s, X, on_left)
    G = embed_at(Y, t, X, on_left)
    if on_left:
        comps = {o: f"({g},{X.identities[o]})" for o in X.objects}
    else:
        comps = {o: f"({X.identities[o]},{g})" for o in X.objects}
    return FinNatTrans(f"embnat[{g}]", F, G, comps)


def projection_functor(Y, X, on_left=True):
    """Y x X -> X (on_left) or X x Y -> X."""
    if on_left:
        P = product(Y, X)
        obj_map = {f"({a},{b})": b for a in Y.objects for b in X.objects}
        mor_map = {f"({f},{g})": g for f in Y.morphisms for g in X.morphisms}
    else:
        P = product(X, Y)
        obj_map = {f"({b},{a})": b for b in X.objects for a in Y.objects}
        mor_map = {f"({g},{f})": g for g in X.morphisms for f in Y.morphisms}
    return FinFunctor(f"proj[{P.name}->{X.name}]", P, X, obj_map, mor_map)


def square_cat():
    return product(ordinal(1), ordinal(1))


def ulcorner_cat():
    return full_subcategory(square_cat(), ["(0,0)", "(0,1)", "(1,0)"], name="ulcorner")


def inclusion_ulcorner():
    return inclusion_functor(ulcorner_cat(), square_cat(), name="i_ulcorner")


def standard_shapes():
    """The named diagram shapes used throughout the toolkit."""
    return {
        "ordinal": ordinal,
        "arrow_cat": arrow_cat,
        "square": square_cat(),
        "ulcorner": ulcorner_cat(),
        "inclusion_ulcorner": inclusion_ulcorner(),
        "diagonal": diagonal_functor,
        "point_functor": point_functor,
        "point_nat": point_nat,
    }


def ordinal_map_functor(values, n, m):
    """The functor [n] -> [m] of a monotone map given by its list of values."""
    if len(values) != n + 1 or any(values[i] > values[i + 1] for i in range(n)):
        raise ValueError("not a monotone map")
    if values and (values[0] < 0 or values[-1] > m):
        raise ValueError("index out of range")
    src, tgt = ordinal(n), ordinal(m)
    obj_map = {str(i): str(values[i]) for i in range(n + 1)}
    mor_map = {f"{i}=>{j}": f"{values[i]}=>{values[j]}"
               for i in range(n + 1) for j in range(i, n + 1)}
    return FinFunctor(f"ord{values}", src, tgt, obj_map, mor_map)


def arrow_map_functor(values, n, m):
    """Ar applied to the monotone map [n] -> [m] with the given values."""
    src, tgt = arrow_cat(n), arrow_cat(m)
    obj_map = {}
    for o in src.objects:
        i, j = _pair(o)
        obj_map[o] = f"({values[i]},{values[j]})"
    mor_map = {f"{a}=>{b}": f"{obj_map[a]}=>{obj_map[b]}"
               for a in src.objects for b in src.objects
               if f"{a}=>{b}" in src.morphisms}
    return FinFunctor(f"Ar{values}", src, tgt, obj_map, mor_map)


def simplicial_face(n, i):
    """delta_i: [n-1] -> [n] (skips i)."""
    return ordinal_map_functor([k if k < i else k + 1 for k in range(n)], n - 1, n)


def simplicial_degeneracy(n, i):
    """sigma_i: [n+1] -> [n] (repeats i)."""
    return ordinal_map_functor([k if k <= i else k - 1 for k in range(n + 2)], n + 1, n)


def free_category(name, vertices, edges):
    """The free category on a finite acyclic graph.

    edges: list of (edge_name, src, tgt).  Morphisms are composable edge
    paths, named 'src' for empty paths (identities) and 'e1*e2*...'
    otherwise.
    """
    adj = {}
    for e, s, t in edges:
        adj.setdefault(s, []).append((e, t))
    paths = {v: [((), v)] for v in vertices}  # start -> list of (edge tuple, end)
    frontier = {v: [((), v)] for v in vertices}
    while any(frontier.values()):
        new = {v: [] for v in vertices}
        for v, items in frontier.items():
            for (p, end) in items:
                for (e, t) in adj.get(end, []):
                    q = (p + (e,), t)
                    paths[v].append(q)
                    new[v].append(q)
                    if len(paths[v]) > 10000:
                        raise ValueError("graph is not acyclic or too large")
        frontier = new
    morphisms, compose = {}, {}

    def mid(v, p):
        return f"id_{v}" if not p else "*".join(p)

    named = []
    for v in vertices:
        for (p, end) in paths[v]:
            morphisms[mid(v, p)] = (v, end)
            named.append((v, p, end))
    for (v1, p1, e1) in named:
        for (v2, p2, e2) in named:
            if e1 == v2:
                compose[(mid(v1, p1), mid(v2, p2))] = mid(v1, p1 + p2)
    identities = {v: f"id_{v}" for v in vertices}
    return FinCat(name, list(vertices), morphisms, compose, identities)


def cyclic_group_cat(n):
    """The cyclic group Z/n as a one-object category (not finite direct;
    used as a nerve fixture)."""
    if n < 1:
        raise ValueError("group order must be >= 1")
    morphisms = {f"g{i}": ("*", "*") for i in range(n)}
    compose = {(f"g{i}", f"g{j}"): f"g{(i + j) % n}"
               for i in range(n) for j in range(n)}
    return FinCat(f"Z/{n}", ["*"], morphisms, compose, {"*": "g0"})


def comma(f, y):
    """The comma category f|y with the Der4 structure (j, p, alpha)."""
    X, Y = f.src, f.tgt
    if y not in Y.objects:
        raise ValueError(f"{y} is not an object of {Y.name}")
    objects = []
    data = {}   # comma object id -> (x, m)
    for x in X.objects:
        for m in Y.hom(f.obj_map[x], y):
            oid = f"<{x}|{m}>"
            objects.append(oid)
            data[oid] = (x, m)
    morphisms = {}
    mdata = {}  # comma morphism id -> underlying u in X
    for a in objects:
        xa, ma = data[a]
        for b in objects:
            xb, mb = data[b]
            for u in X.hom(xa, xb):
                # triangle: ma = mb . f(u)
                if Y.compose[(f.mor_map[u], mb)] == ma:
                    mid_ = f"<{u}|{a}->{b}>"
                    morphisms[mid_] = (a, b)
                    mdata[mid_] = u
    compose = {}
    for m1, (a, b) in morphisms.items():
        for m2, (b2, c) in morphisms.items():
            if b != b2:
                continue
            u = X.compose[(mdata[m1], mdata[m2])]
            compose[(m1, m2)] = f"<{u}|{a}->{c}>"
    identities = {a: f"<{X.identities[data[a][0]]}|{a}->{a}>" for a in objects}
    cat = FinCat(f"({f.name}|{y})", objects, morphisms, compose, identities)
    j = FinFunctor(f"j[{f.name},{y}]", cat, X,
                   {a: data[a][0] for a in objects},
                   {m: mdata[m] for m in morphisms})
    p = collapse_functor(cat)
    alpha = FinNatTrans(f"alpha[{f.name},{y}]",
                        compose_functors(j, f),
                        compose_functors(p, point_functor(Y, y)),
                        {a: data[a][1] for a in objects})
    return CommaData(cat, j, p, alpha)


def dumps(obj):
    """Deterministic JSON for any object exposing to_json()."""
    return json.dumps(obj.to_json() if hasattr(obj, "to_json") else obj,
                      sort_keys=True, separators=(",", ":"))

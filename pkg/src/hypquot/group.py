"""
Affine automorphisms (x, y) -> (alpha*x + beta, gamma*y) of a hyperelliptic
curve, group closure, and the structural data attached to such a group:

- kappa, the hyperelliptic involution (1, 0, -1), generating the kernel of
  the action on the x-line;
- Gbar, the group of induced x-line maps, a semidirect product T x| C_m with
  T the translations (an elementary abelian p-group) and m prime to p;
- Xi, the set of x-line fixed points of the non-translations (empty when
  m = 1, a single Gbar-orbit of size |T| otherwise), and lam, the product of
  its members.

Composition (g*h) applies h first; the action on the root set R of f is
r -> alpha*r + beta.
"""

from . import curve as curve_mod
from .ff import embed, make_field

GROUP_BOUND = 256
LATTICE_BOUND = 64


class AffineAutomorphism(object):
    """The map (x, y) -> (alpha*x + beta, gamma*y); alpha, gamma nonzero."""

    __slots__ = ("alpha", "beta", "gamma")

    def __init__(self, alpha, beta, gamma):
        if alpha.is_zero() or gamma.is_zero():
            raise ValueError("alpha and gamma must be nonzero")
        self.alpha = alpha
        self.beta = beta
        self.gamma = gamma

    @classmethod
    def identity(cls, field):
        return cls(field.one, field.zero, field.one)

    @classmethod
    def kappa(cls, field):
        return cls(field.one, field.zero, -field.one)

    def key(self):
        return (self.alpha.index(), self.beta.index(), self.gamma.index())

    def __eq__(self, other):
        if not isinstance(other, AffineAutomorphism):
            return NotImplemented
        return (self.alpha == other.alpha and self.beta == other.beta
                and self.gamma == other.gamma)

    def __hash__(self):
        return hash((self.alpha, self.beta, self.gamma))

    def __repr__(self):
        return "Auto(%r, %r, %r)" % (self.alpha, self.beta, self.gamma)

    def __mul__(self, other):
        return AffineAutomorphism(self.alpha * other.alpha,
                                  self.alpha * other.beta + self.beta,
                                  self.gamma * other.gamma)

    def inverse(self):
        ai = self.alpha.inverse()
        return AffineAutomorphism(ai, -ai * self.beta,
                                  self.gamma.inverse())

    def is_identity(self):
        return (self.alpha.is_one() and self.beta.is_zero()
                and self.gamma.is_one())

    def is_kappa(self):
        return (self.alpha.is_one() and self.beta.is_zero()
                and self.gamma == -self.gamma.field.one)

    def order(self):
        n, g = 1, self
        while not g.is_identity():
            g = g * self
            n += 1
            assert n <= GROUP_BOUND, "element order exceeds group bound"
        return n

    def on_x(self, x):
        """alpha*x + beta with coefficients moved into the field of x."""
        return embed(self.alpha, x.field) * x + embed(self.beta, x.field)


def validate_auto(C, g):
    """Whether g maps the curve to itself: the x-map permutes the roots of f
    and gamma^2 = alpha^deg."""
    if g.gamma * g.gamma != g.alpha ** C.degree:
        return False
    R = set(C.roots())
    return all(g.on_x(r) in R for r in R)


def apply_auto(g, P, C):
    """Image of the point P under g."""
    if P.is_affine():
        F = P.x.field
        return curve_mod.CurvePoint.affine(
            g.on_x(P.x), embed(g.gamma, F) * P.y)
    if C.degree % 2 == 1:
        return P
    # on the chart at infinity, v -> (gamma / alpha^(deg/2)) * v
    u = g.gamma / g.alpha ** (C.degree // 2)
    sign = +1 if u.is_one() else -1
    assert sign == 1 or u == -u.field.one
    v = None if P.v is None else embed(u, P.v.field) * P.v
    return curve_mod.CurvePoint.infinity(P.sign * sign, v)


def closure(C, generators, bound=GROUP_BOUND):
    """The automorphism group generated by the given maps."""
    field = C.field
    for g in generators:
        if not validate_auto(C, g):
            raise ValueError("generator %r is not an automorphism" % (g,))
    ident = AffineAutomorphism.identity(field)
    els = {ident: None}
    frontier = [ident]
    gens = list(generators)
    while frontier:
        new = []
        for h in frontier:
            for g in gens:
                prod = g * h
                if prod not in els:
                    els[prod] = None
                    new.append(prod)
                    if len(els) > bound:
                        raise ValueError("group closure exceeds bound %d"
                                         % bound)
        frontier = new
    return AutoGroup(C, list(els))


class AutoGroup(object):
    """A closed group of affine automorphisms of a fixed curve."""

    def __init__(self, C, elements, check=True):
        self.curve = C
        self.elements = tuple(sorted(elements, key=lambda g: g.key()))
        self.element_set = frozenset(self.elements)
        self.identity = AffineAutomorphism.identity(C.field)
        if check:
            assert self.identity in self.element_set
            for g in self.elements:
                assert g.inverse() in self.element_set, "inverses missing"
                assert (g.gamma * g.gamma == g.alpha ** C.degree), \
                    "gamma^2 = alpha^deg fails"
            for g in self.elements:
                for h in self.elements:
                    assert g * h in self.element_set, "closure fails"
        self._structure = None
        self._classes = None
        self._quotient = None

    @property
    def order(self):
        return len(self.elements)

    def __contains__(self, g):
        return g in self.element_set

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if not isinstance(other, AutoGroup):
            return NotImplemented
        return (self.curve is other.curve
                and self.element_set == other.element_set)

    def __hash__(self):
        return hash((id(self.curve), self.element_set))

    def __repr__(self):
        return "AutoGroup(order %d)" % self.order

    def subgroup(self, elements):
        return AutoGroup(self.curve, list(elements))

    def structure(self):
        if self._structure is None:
            self._structure = _compute_structure(self)
        return self._structure

    def conjugacy_classes(self):
        if self._classes is None:
            rest = list(self.elements)
            classes = []
            while rest:
                g = rest[0]
                cls = {h * g * h.inverse() for h in self.elements}
                classes.append(tuple(sorted(cls, key=lambda x: x.key())))
                rest = [x for x in rest if x not in cls]
            # order classes by their smallest member
            classes.sort(key=lambda c: c[0].key())
            self._classes = tuple(classes)
        return self._classes


def _compute_structure(G):
    C = G.curve
    field = C.field
    kappa = AffineAutomorphism.kappa(field)
    has_kappa = kappa in G
    xparts = {}
    for g in G:
        xparts.setdefault((g.alpha, g.beta), []).append(g)
    if has_kappa:
        assert all(len(v) == 2 for v in xparts.values())
    else:
        assert all(len(v) == 1 for v in xparts.values())
    gbar = sorted(xparts, key=lambda ab: (ab[0].index(), ab[1].index()))
    T = [ab for ab in gbar if ab[0].is_one()]
    m = len(gbar) // len(T)
    assert len(gbar) == len(T) * m
    assert m % field.p != 0, "m must be prime to the characteristic"
    xi = {beta / (field.one - alpha) for alpha, beta in gbar
          if not alpha.is_one()}
    xi = tuple(sorted(xi, key=lambda a: a.index()))
    assert (m == 1) == (len(xi) == 0)
    if m > 1:
        assert len(xi) == len(T), "fixed points must form one orbit of T"
        orbit = {xi[0] + beta for _, beta in T}
        assert orbit == set(xi)
    lam = field.one
    for a in xi:
        lam = lam * a
    return {
        "kappa": kappa if has_kappa else None,
        "T": tuple(T),
        "m": m,
        "Xi": xi,
        "lam": lam,
        "alpha": {g: g.alpha for g in G},
        "gamma": {g: g.gamma for g in G},
    }


def structure(G):
    """Structural data {kappa, T, m, Xi, lam, alpha, gamma} of the group."""
    return G.structure()


def orbits_on_roots(G, C=None):
    """Partition of the root set into x-line orbits.

    Returns (regular_orbits, irregular_orbit) where the irregular orbit is
    None unless one orbit is strictly smaller than the induced group on the
    x-line; that orbit must then be Xi.  Orbits of the trivial group count
    as regular.
    """
    C = C if C is not None else G.curve
    st = G.structure()
    E = C.splitting_field()
    xmaps = [(embed(a, E), embed(b, E)) for (a, b) in
             {(g.alpha, g.beta) for g in G}]
    nbar = len(xmaps)
    remaining = list(C.roots())
    regular, irregular = [], None
    while remaining:
        r = remaining[0]
        orbit = {a * r + b for a, b in xmaps}
        assert all(x in remaining for x in orbit)
        orbit_t = tuple(sorted(orbit, key=lambda x: x.index()))
        if len(orbit) == nbar:
            regular.append(orbit_t)
        else:
            assert irregular is None, "two non-regular orbits"
            assert len(orbit) == len(st["T"])
            assert orbit == {embed(a, E) for a in st["Xi"]}
            irregular = orbit_t
        remaining = [x for x in remaining if x not in orbit]
    regular.sort(key=lambda o: o[0].index())
    return regular, irregular


def infinity_action(G, C=None):
    """For each g, +1 if it fixes the points at infinity, -1 if it swaps
    them (even degree); odd-degree curves give +1 throughout."""
    C = C if C is not None else G.curve
    out = {}
    for g in G:
        if C.degree % 2 == 1:
            out[g] = +1
        else:
            u = g.gamma / g.alpha ** (C.degree // 2)
            out[g] = +1 if u.is_one() else -1
    return out


def fixed_points_of_auto(C, g):
    """All fixed points of g on the curve over the algebraic closure,
    including points at infinity.  The identity is rejected."""
    if g.is_identity():
        raise ValueError("identity fixes the whole curve")
    field = C.field
    pts = []
    if g.alpha.is_one() and g.beta.is_zero():
        # kappa: y = -y forces y = 0, so exactly the Weierstrass points
        assert g.is_kappa()
        E = C.splitting_field()
        pts = [curve_mod.CurvePoint.affine(r, E.zero) for r in C.roots()]
    elif g.alpha.is_one():
        pts = []  # nontrivial translation: no affine fixed point
    else:
        x0 = g.beta / (field.one - g.alpha)
        v = C.rhs(x0)
        if v.is_zero():
            pts = [curve_mod.CurvePoint.affine(x0, field.zero)]
        elif g.gamma.is_one():
            w = field.sqrt(v)
            if w is None:
                E2 = make_field(field.p, 2 * field.k)
                w = E2.sqrt(embed(v, E2))
                x0 = embed(x0, E2)
            pts = [curve_mod.CurvePoint.affine(x0, w),
                   curve_mod.CurvePoint.affine(x0, -w)]
        else:
            pts = []
    # points at infinity
    if C.degree % 2 == 1:
        pts.append(curve_mod.CurvePoint.infinity(0))
    else:
        u = g.gamma / g.alpha ** (C.degree // 2)
        if u.is_one():
            pts.extend(curve_mod.infinity_points(C))
    return pts


def fixed_point_count(C, g):
    """Number of fixed points of g counted with intersection multiplicity
    (the graph-diagonal intersection number), so that the trace of g on
    degree-1 cohomology is exactly 2 minus this count.

    Affine fixed points are always transversal.  So are fixed points at
    infinity, except for translations (alpha = 1, beta != 0, gamma = 1),
    whose differential is the identity there: the single infinite point of
    an odd-degree curve then counts 3, and each of the two infinite points
    of an even-degree curve counts 2.
    """
    pts = fixed_points_of_auto(C, g)
    wild = (g.alpha.is_one() and not g.beta.is_zero() and g.gamma.is_one())
    if not wild:
        return len(pts)
    n_inf = sum(1 for P in pts if P.is_infinity())
    assert n_inf == len(pts)  # translations fix nothing affine
    return n_inf * (3 if C.degree % 2 == 1 else 2)


def cyclic_subgroups(G):
    """All cyclic subgroups, each as a closed group on the same curve."""
    seen = {}
    for g in G:
        els = [g]
        h = g
        while not h.is_identity():
            h = h * g
            els.append(h)
        key = frozenset(els)
        if key not in seen:
            seen[key] = AutoGroup(G.curve, els, check=False)
    return sorted(seen.values(),
                  key=lambda H: (H.order, [g.key() for g in H.elements]))


def all_subgroups(G):
    """The full subgroup lattice (join-closure of the cyclic subgroups)."""
    if G.order > LATTICE_BOUND:
        raise ValueError("full lattice limited to groups of order <= %d"
                         % LATTICE_BOUND)
    subs = {H.element_set: H for H in cyclic_subgroups(G)}
    changed = True
    while changed:
        changed = False
        current = list(subs.values())
        for A in current:
            for B in current:
                key = A.element_set | B.element_set
                if key in subs:
                    continue
                join = _close_set(G, key)
                if join not in subs:
                    subs[join] = AutoGroup(G.curve, list(join), check=False)
                    changed = True
    return sorted(subs.values(),
                  key=lambda H: (H.order, [g.key() for g in H.elements]))


def _close_set(G, seed):
    els = set(seed)
    frontier = list(els)
    while frontier:
        new = []
        for h in frontier:
            for g in seed:
                prod = g * h
                if prod not in els:
                    els.add(prod)
                    new.append(prod)
        frontier = new
    return frozenset(els)

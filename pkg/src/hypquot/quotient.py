"""
Closed-form quotients of a hyperelliptic curve by a group of affine
automorphisms.

With I the product of the induced x-line maps applied to X, the quotient
C/G falls into exactly one of three cases:

1. G contains the hyperelliptic involution: C/G is a projective line with
   coordinate I.
2. G acts trivially on Y: C/G is y^2 = c * (-1)^(|R| - #orbits) * prod over
   orbits O of (x - prod(O)), reached by x = I, y = Y.
3. Otherwise: C/G is y^2 = c * (-1)^((m-1)(#orbits-1)) * (x - lam^m) * prod
   over regular orbits of (x - prod(O)), reached by x = I and
   y = (I_T - lam)^floor(m/2) * Y.

Every closed-form equation produced here is checked on the spot: the
defining identity between x, y and X, Y is verified as an exact polynomial
identity over the base field, and the genus is compared against the orbit
count formula.
"""

from . import curve as curve_mod
from .ff import Poly, embed, unembed
from .group import orbits_on_roots


class QuotientResult(object):
    """The quotient curve and the data of the quotient map.

    case      1, 2 or 3 as above
    kind      "projective_line" (case 1) or "hyperelliptic"
    curve     the quotient curve, None in case 1
    x_map     polynomial giving the x-coordinate of the quotient map
    y_factor  polynomial u(X) with y = u(X) * Y, None in case 1
    genus     genus of C/G
    """

    __slots__ = ("case", "kind", "curve", "x_map", "y_factor", "genus",
                 "orbit_products", "lam", "m")

    def __init__(self, case, kind, curve, x_map, y_factor, genus,
                 orbit_products, lam, m):
        self.case = case
        self.kind = kind
        self.curve = curve
        self.x_map = x_map
        self.y_factor = y_factor
        self.genus = genus
        self.orbit_products = orbit_products
        self.lam = lam
        self.m = m

    def __repr__(self):
        if self.case == 1:
            return "QuotientResult(projective line)"
        return "QuotientResult(case %d, genus %d)" % (self.case, self.genus)


def invariant_I(G):
    """prod of (alpha*X + beta) over the induced x-line group.

    Degree equals the order of the induced group; the constant term
    vanishes and the leading coefficient is (-1)^(degree - 1).
    """
    field = G.curve.field
    xparts = sorted({(g.alpha, g.beta) for g in G},
                    key=lambda ab: (ab[0].index(), ab[1].index()))
    out = Poly(field, [field.one])
    for alpha, beta in xparts:
        out = out * Poly(field, [beta, alpha])
    n = len(xparts)
    assert out.degree == n
    assert out.coeffs[0].is_zero()
    lead = out.leading()
    assert lead == (-field.one if n % 2 == 0 else field.one)
    return out


def invariant_IT(G):
    """prod of (X + beta) over the translations: monic, invariant under
    the translation subgroup."""
    field = G.curve.field
    betas = sorted({g.beta for g in G if g.alpha.is_one()},
                   key=lambda b: b.index())
    out = Poly(field, [field.one])
    for beta in betas:
        out = out * Poly(field, [beta, field.one])
    assert out.degree == len(betas) and out.leading().is_one()
    return out


def quotient_curve(G):
    if G._quotient is None:
        G._quotient = _compute_quotient(G)
    return G._quotient


def _compute_quotient(G):
    C = G.curve
    field, E = C.field, C.splitting_field()
    st = G.structure()
    I = invariant_I(G)
    # I is invariant: composing with any group element fixes it
    for g in G:
        assert I(Poly(field, [g.beta, g.alpha])) == I
    regular, irregular = orbits_on_roots(G)
    r = len(regular)
    n_orbits = r + (1 if irregular is not None else 0)

    pis = []
    for O in regular:
        prod = E.one
        for x in O:
            prod = prod * x
        pis.append(prod)
    assert len(set(pis)) == len(pis), "orbit products must be distinct"

    if st["kappa"] is not None:
        genus = 0
        res = QuotientResult(1, "projective_line", None, I, None, genus,
                             tuple(pis), st["lam"], st["m"])
    elif all(g.gamma.is_one() for g in G):
        assert irregular is None
        sign = -field.one if (C.degree - n_orbits) % 2 else field.one
        h = _descend(Poly.from_roots(E, pis), field)
        Q = curve_mod.HyperellipticCurve(field, C.c * sign, h)
        yfac = Poly(field, [field.one])
        _check_identity(C, Q, I, yfac)
        genus = (r - 1) // 2
        assert Q.genus == genus
        res = QuotientResult(2, "hyperelliptic", Q, I, yfac, genus,
                             tuple(pis), st["lam"], st["m"])
    else:
        m, lam = st["m"], st["lam"]
        assert m > 1
        delta = (m - 1) * (n_orbits - 1)
        sign = -field.one if delta % 2 else field.one
        pts = [embed(lam ** m, E)] + pis
        assert len(set(pts)) == len(pts)
        h = _descend(Poly.from_roots(E, pts), field)
        Q = curve_mod.HyperellipticCurve(field, C.c * sign, h)
        yfac = (invariant_IT(G) - Poly(field, [lam])) ** (m // 2)
        _check_identity(C, Q, I, yfac)
        genus = r // 2
        assert Q.genus == genus
        res = QuotientResult(3, "hyperelliptic", Q, I, yfac, genus,
                             tuple(pis), lam, m)
    return res


def _descend(h, field):
    """Move a polynomial with base-field coefficients back down."""
    return Poly(field, [unembed(a, field) for a in h.coeffs])


def _check_identity(C, Q, I, yfac):
    # substituting x = I(X), y = yfac(X) * Y into the quotient equation
    # must recover yfac^2 * c * f exactly
    lhs = Poly(C.field, [Q.c]) * Q.f(I)
    rhs = yfac * yfac * Poly(C.field, [C.c]) * C.f
    assert lhs == rhs, "quotient equation fails to pull back"


def push_point(G, P):
    """Image on C/G of an affine point of C.  Cases with a projective-line
    quotient and points at infinity are rejected."""
    res = quotient_curve(G)
    if res.case == 1:
        raise ValueError("quotient is a projective line")
    if not P.is_affine():
        raise ValueError("points at infinity are not handled")
    x = res.x_map(P.x)
    y = res.y_factor(P.x) * P.y
    img = curve_mod.CurvePoint.affine(x, y)
    assert curve_mod.on_curve(res.curve, img)
    return img


def quotient_genus(G):
    """Genus of C/G from the orbit count alone."""
    st = G.structure()
    if st["kappa"] is not None:
        return 0
    regular, _ = orbits_on_roots(G)
    r = len(regular)
    if all(g.gamma.is_one() for g in G):
        return (r - 1) // 2
    return r // 2

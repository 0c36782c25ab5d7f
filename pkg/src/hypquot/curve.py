"""
Hyperelliptic curve models y^2 = c*f(x) with f monic squarefree, their
points (affine and at infinity), genus, and point enumeration.

A curve of even degree has two points at infinity with chart coordinates
(u, v) = (0, +/-sqrt(c)); they are rational over a field exactly when c is a
square there.  A curve of odd degree has a single point at infinity.  Affine
point coordinates may live in any extension of the base field; the curve
object itself always stays over its base field.
"""

import numpy as np

from . import ff
from .ff import Poly, embed, make_field


class HyperellipticCurve(object):
    """y^2 = c*f(x); c nonzero, f monic squarefree of degree >= 1."""

    def __init__(self, field, c, f):
        c = field.element(c)
        if isinstance(f, (list, tuple)):
            f = Poly.from_ints(field, f)
        if f.field is not field:
            raise ValueError("f must be defined over the base field")
        if f.degree < 1:
            raise ValueError("f must have degree at least 1")
        # normalize to the monic form, folding the leading coefficient into c
        lead = f.leading()
        if not lead.is_one():
            c = c * lead
            f = f.monic()
        if c.is_zero():
            raise ValueError("leading constant c must be nonzero")
        if not f.is_squarefree():
            raise ValueError("f must be squarefree")
        self.field = field
        self.c = c
        self.f = f
        self._splitting = None
        self._roots = None
        self._inf = None

    @property
    def degree(self):
        return self.f.degree

    @property
    def genus(self):
        return (self.f.degree - 1) // 2

    def __repr__(self):
        return "HyperellipticCurve(%r, c=%r, deg f=%d)" % (
            self.field, self.c, self.f.degree)

    def __eq__(self, other):
        if not isinstance(other, HyperellipticCurve):
            return NotImplemented
        return (self.field is other.field and self.c == other.c
                and self.f == other.f)

    def __hash__(self):
        return hash((id(self.field), self.c, self.f))

    def rhs(self, x):
        """c*f(x), evaluated in the field of x."""
        val = self.f(x)
        return val * embed(self.c, val.field)

    def splitting_field(self):
        """Smallest extension of the base field containing every root of f."""
        if self._splitting is None:
            d = ff.splitting_degree(self.f)
            F = self.field
            self._splitting = make_field(F.p, F.k * d)
        return self._splitting

    def roots(self):
        """The root set R of f in the splitting field, by element index."""
        if self._roots is None:
            E = self.splitting_field()
            rts = ff.roots_in(self.f, E)
            assert len(rts) == self.f.degree
            self._roots = tuple(sorted(rts, key=lambda r: r.index()))
        return self._roots

    def infinity_field(self):
        """Smallest extension where the points at infinity are rational."""
        if self.degree % 2 == 1:
            return self.field
        F = self.field
        if F.sqrt(self.c) is not None:
            return F
        return make_field(F.p, 2 * F.k)

    def sqrt_c(self):
        """Canonical sqrt(c) (smallest by index) in infinity_field()."""
        E = self.infinity_field()
        v = E.sqrt(embed(self.c, E))
        assert v is not None
        return min(v, -v, key=lambda w: w.index())


class CurvePoint(object):
    """Affine point (x, y) or a point at infinity.

    Infinity points carry sign +1/-1 (the two chart points v = +/-sqrt(c))
    for curves of even degree, and sign 0 for the single point at infinity
    of odd degree; v is the chart coordinate, None in the odd case.
    """

    __slots__ = ("kind", "x", "y", "sign", "v")

    def __init__(self, kind, x=None, y=None, sign=None, v=None):
        self.kind = kind
        self.x = x
        self.y = y
        self.sign = sign
        self.v = v

    @classmethod
    def affine(cls, x, y):
        if x.field is not y.field:
            raise ValueError("coordinates must share a field")
        return cls("affine", x=x, y=y)

    @classmethod
    def infinity(cls, sign=0, v=None):
        return cls("inf", sign=sign, v=v)

    def is_affine(self):
        return self.kind == "affine"

    def is_infinity(self):
        return self.kind == "inf"

    def __eq__(self, other):
        if not isinstance(other, CurvePoint):
            return NotImplemented
        if self.kind != other.kind:
            return False
        if self.kind == "affine":
            return self.x == other.x and self.y == other.y
        return self.sign == other.sign

    def __hash__(self):
        if self.kind == "affine":
            return hash((self.x, self.y))
        return hash(("inf", self.sign))

    def __repr__(self):
        if self.kind == "affine":
            return "(%r, %r)" % (self.x, self.y)
        if self.sign == 0:
            return "inf"
        return "inf%s" % ("+" if self.sign > 0 else "-")


def genus(C):
    """floor((deg f - 1) / 2)."""
    return C.genus


def on_curve(C, P):
    """Whether the defining relation holds exactly at P."""
    if P.is_affine():
        rhs = C.rhs(P.x)
        y = P.y
        if y.field is not rhs.field:
            if y.field.k % rhs.field.k == 0:
                rhs = embed(rhs, y.field)
            else:
                y = embed(y, rhs.field)
        return y * y == rhs
    if C.degree % 2 == 1:
        return P.sign == 0
    if P.sign not in (1, -1):
        return False
    if P.v is not None:
        cc = embed(C.c, P.v.field)
        return P.v * P.v == cc
    return True


def infinity_points(C):
    """One point for odd degree; the two chart points for even degree."""
    if C.degree % 2 == 1:
        return [CurvePoint.infinity(0)]
    v = C.sqrt_c()
    return [CurvePoint.infinity(+1, v), CurvePoint.infinity(-1, -v)]


def infinity_points_over(C, E):
    """The points at infinity that are rational over E (possibly none)."""
    if C.degree % 2 == 1:
        return [CurvePoint.infinity(0)]
    IF = C.infinity_field()
    if E.k % IF.k != 0:
        return []
    v = embed(C.sqrt_c(), E)
    return [CurvePoint.infinity(+1, v), CurvePoint.infinity(-1, -v)]


def points_over(C, E):
    """All E-rational points of C, affine ones sorted by coordinate index."""
    if E.p != C.field.p or E.k % C.field.k != 0:
        raise ValueError("E must be an extension of the base field")
    if E.order > ff.ENUM_LIMIT:
        raise ValueError("field too large to enumerate")
    pts = []
    if E.order <= 4096:
        sqrts = {}
        for y in E.elements():
            sqrts.setdefault((y * y).coeffs, []).append(y)
        for x in E.elements():
            rhs = C.rhs(x)
            for y in sqrts.get(rhs.coeffs, ()):
                pts.append(CurvePoint.affine(x, y))
    else:
        rows = ff._all_rows(E)
        sq = _row_index(E, ff._bulk_mul(E, rows, rows))
        table = {}
        for yi, s in enumerate(sq):
            table.setdefault(int(s), []).append(yi)
        vals = ff._bulk_eval(C.f, rows, E)
        cE = embed(C.c, E)
        if not cE.is_one():
            vals = ff._bulk_scalar_mul(E, vals, cE)
        vals = _row_index(E, vals)
        for xi, vidx in enumerate(vals):
            for yi in table.get(int(vidx), ()):
                pts.append(CurvePoint.affine(E.from_index(xi),
                                             E.from_index(yi)))
    pts.sort(key=lambda P: (P.x.index(), P.y.index()))
    pts.extend(infinity_points_over(C, E))
    return pts


def _row_index(E, rows):
    # map coefficient rows to element indices
    weights = np.array([E.p ** j for j in range(E.k)], dtype=np.int64)
    return rows @ weights


def count_points_over(C, E):
    """|C(E)| by quadratic-character summation (no point objects)."""
    if E.order > ff.ENUM_LIMIT:
        raise ValueError("field too large to enumerate")
    n_inf = len(infinity_points_over(C, E))
    if E.order <= 4096:
        half = (E.order - 1) // 2
        one = E.one
        count = 0
        for x in E.elements():
            rhs = C.rhs(x)
            if rhs.is_zero():
                count += 1
            elif rhs ** half == one:
                count += 2
        return count + n_inf
    rows = ff._all_rows(E)
    vals = ff._bulk_eval(C.f, rows, E)
    cE = embed(C.c, E)
    if not cE.is_one():
        vals = ff._bulk_scalar_mul(E, vals, cE)
    zeros = int((~vals.any(axis=1)).sum())
    chi = ff._bulk_pow(E, vals, (E.order - 1) // 2)
    ones = int(((chi[:, 0] == 1) & (~chi[:, 1:].any(axis=1))).sum())
    return zeros + 2 * ones + n_inf

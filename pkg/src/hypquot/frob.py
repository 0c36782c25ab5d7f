"""
Twisted q-power morphisms X -> a*X^q + b, Y -> d*Y^q on a hyperelliptic
curve: validity, descent to quotient curves, exact fixed-point counts of
iterates, and characteristic polynomials on degree-1 cohomology.

Fixed points of the i-th iterate are counted without enumerating any
extension field: the affine fixed x-coordinates are the roots of
P_i = A_i*X^(q^i) - X + B_i (always squarefree, its derivative is -1), and
the number of y's above each is decided by (c*f)^((q^i-1)/2) mod P_i, so
the total is read off from two gcd degrees plus the chart at infinity.

The characteristic polynomial on H^1 is recovered from the counts a_i via

    P(T) = exp(sum a_i T^i / i) * (1 - T) * (1 - qT),

truncated at degree 2*genus; the coefficients must come out integral, and
the series must reproduce every supplied count.
"""

import warnings
from fractions import Fraction

from sympy import Symbol, factor_list
from sympy import Poly as _SymPoly

from . import curve as curve_mod
from .ff import Poly, embed
from .group import AffineAutomorphism
from .quotient import quotient_curve, push_point
from .repn import h1_character, dim_invariants

ITERATE_BOUND = 2 ** 22


class FrobMorphism(object):
    """The map (x, y) -> (a*x^q + b, d*y^q), q a power of the field
    characteristic."""

    __slots__ = ("field", "a", "b", "d", "q", "e")

    def __init__(self, field, a, b, d, q):
        if a.is_zero() or d.is_zero():
            raise ValueError("a and d must be nonzero")
        p, e = field.p, 0
        n = q
        while n > 1 and n % p == 0:
            n //= p
            e += 1
        if n != 1 or e < 1:
            raise ValueError("q = %r is not a positive power of %d" % (q, p))
        self.field = field
        self.a, self.b, self.d = a, b, d
        self.q = q
        self.e = e

    def __repr__(self):
        return "Frob(x -> %r*x^%d + %r, y -> %r*y^%d)" % (
            self.a, self.q, self.b, self.d, self.q)

    def __eq__(self, other):
        if not isinstance(other, FrobMorphism):
            return NotImplemented
        return (self.field is other.field and self.q == other.q
                and (self.a, self.b, self.d) == (other.a, other.b, other.d))

    def __hash__(self):
        return hash((id(self.field), self.a, self.b, self.d, self.q))

    def iterate_coeffs(self, i):
        """(A, B, D) with the i-th iterate acting as x -> A*x^(q^i) + B,
        y -> D*y^(q^i)."""
        A, B, D = self.a, self.b, self.d
        for _ in range(i - 1):
            A = self.a * A ** self.q
            B = self.a * B ** self.q + self.b
            D = self.d * D ** self.q
        return A, B, D

    def apply(self, P, C, i=1):
        """Image of a point of C under the i-th iterate."""
        A, B, D = self.iterate_coeffs(i)
        Q = self.q ** i
        if P.is_affine():
            F = P.x.field
            return curve_mod.CurvePoint.affine(
                embed(A, F) * P.x ** Q + embed(B, F),
                embed(D, F) * P.y ** Q)
        if C.degree % 2 == 1:
            return P
        u = D / A ** (C.degree // 2)
        if P.v is not None:
            F = P.v.field
            v = embed(u, F) * P.v ** Q
            w = embed(C.sqrt_c(), F)
            assert v == w or v == -w
            return curve_mod.CurvePoint.infinity(1 if v == w else -1, v)
        # no chart value stored: decide the sign from u and c alone
        swap = u * C.c ** ((Q - 1) // 2)
        assert swap == self.field.one or swap == -self.field.one
        return curve_mod.CurvePoint.infinity(
            P.sign if swap.is_one() else -P.sign)


def _spread(f, q):
    """f(X^q)."""
    out = [f.field.zero] * (f.degree * q + 1) if not f.is_zero() else []
    for i, c in enumerate(f.coeffs):
        if not c.is_zero():
            out[i * q] = c
    return Poly(f.field, out)


def validate_frob(C, Phi):
    """Whether Phi maps the curve to itself:
    d^2 * (c*f)(X)^q = c*f(a*X^q + b) identically."""
    if Phi.field is not C.field:
        raise ValueError("morphism field differs from curve field")
    cf = Poly(C.field, [C.c]) * C.f
    lhs = Poly(C.field, [Phi.d * Phi.d]) * _spread(
        cf.frobenius_coeffs(Phi.e), Phi.q)
    rhs = _spread(cf(Poly(C.field, [Phi.b, Phi.a])), Phi.q)
    return lhs == rhs


def _qth_root(x, q):
    # Frobenius is a bijection, so the q-th root is unique
    p, k = x.field.p, x.field.k
    e = 0
    n = q
    while n > 1:
        n //= p
        e += 1
    j = e % k
    if j == 0:
        return x
    return x ** (p ** (k - j))


def normalizes(Phi, G):
    """Whether Phi*G = G*Phi; the witness maps each g to the g' with
    g Phi = Phi g'."""
    a, b, d, q = Phi.a, Phi.b, Phi.d, Phi.q
    witness = {}
    ok = True
    for g in G:
        gp = AffineAutomorphism(
            _qth_root(g.alpha, q),
            _qth_root(((g.alpha - g.alpha.field.one) * b + g.beta) / a, q),
            _qth_root(g.gamma, q))
        # confirm the defining relation symbolically on both coordinates
        assert g.alpha * a == a * gp.alpha ** q
        assert g.alpha * b + g.beta == a * gp.beta ** q + b
        assert g.gamma * d == d * gp.gamma ** q
        if gp in G:
            witness[g] = gp
        else:
            ok = False
    return ok, witness


def descend(Phi, C, G, Q=None):
    """The morphism Psi on C/G with push o Phi = Psi o push:
    Psi x = a^|G| x^q + I(b); Psi y = d y^q, times a^(floor(m/2)|G|/m)
    when the y-character is nontrivial.  Requires that G avoids the
    hyperelliptic involution and that Phi normalizes G."""
    assert G.curve is C
    if Q is None:
        Q = quotient_curve(G)
    if Q.case == 1:
        raise ValueError("no descent to a projective-line quotient")
    ok, _ = normalizes(Phi, G)
    if not ok:
        raise ValueError("the morphism does not normalize the group")
    field = C.field
    a, b, d, q = Phi.a, Phi.b, Phi.d, Phi.q
    Ib = Q.x_map(b)
    if Q.case == 2:
        dpsi = d
    else:
        m = Q.m
        dpsi = a ** ((m // 2) * (G.order // m)) * d
    Psi = FrobMorphism(field, a ** G.order, Ib, dpsi, q)
    assert validate_frob(Q.curve, Psi)
    # the commuting square, as exact polynomial identities in X:
    # x-coordinates: I(a X^q + b) = a^|G| I(X)^q + I(b)
    I = Q.x_map
    shift = Poly(field, [b, a])
    lhs = _spread(I(shift), q)
    rhs = (Poly(field, [Psi.a]) * _spread(I.frobenius_coeffs(Phi.e), q)
           + Poly(field, [Ib]))
    assert lhs == rhs, "x-coordinates do not commute"
    # y-coordinates: d * u(a X^q + b) = dpsi * u(X)^q for y = u(X) Y
    u = Q.y_factor
    lhs = Poly(field, [d]) * _spread(u(shift), q)
    rhs = Poly(field, [dpsi]) * _spread(u.frobenius_coeffs(Phi.e), q)
    assert lhs == rhs, "y-coordinates do not commute"
    # and on actual points over a small extension
    for E in _test_fields(C):
        for P in curve_mod.points_over(C, E):
            if P.is_affine():
                assert push_point(G, Phi.apply(P, C)) == \
                    Psi.apply(push_point(G, P), Q.curve)
    return Psi


def _test_fields(C):
    from .ff import make_field
    out = []
    F = C.field
    for mult in (1, 2):
        if F.order ** mult <= 4096:
            out.append(make_field(F.p, F.k * mult))
    return out


def count_fixed(Phi, C, i=1):
    """Number of points of C (over the algebraic closure, infinity
    included) fixed by the i-th iterate of Phi."""
    if i < 1:
        raise ValueError("iterate must be positive")
    if Phi.q ** i > ITERATE_BOUND:
        raise ValueError("iterate degree %d^%d is too large"
                         % (Phi.q, i))
    field = C.field
    A, B, D = Phi.iterate_coeffs(i)
    Qi = Phi.q ** i
    coeffs = [field.zero] * (Qi + 1)
    coeffs[0] = B
    coeffs[1] = coeffs[1] - field.one
    coeffs[Qi] = coeffs[Qi] + A
    P = Poly(field, coeffs)
    cf = Poly(field, [C.c]) * C.f
    n_weier = P.gcd(cf).degree
    W = cf.powmod((Qi - 1) // 2, P)
    n_sq = P.gcd(W - Poly(field, [D.inverse()])).degree
    count = n_weier + 2 * n_sq
    if C.degree % 2 == 1:
        count += 1
    else:
        stay = C.c ** ((Qi - 1) // 2) * D / A ** (C.degree // 2)
        assert stay == field.one or stay == -field.one
        if stay.is_one():
            count += 2
    return count


class CharPoly(object):
    """det(1 - Phi T) on degree-1 cohomology: integer coefficients,
    constant term 1, degree twice the genus."""

    __slots__ = ("coeffs", "q", "genus")

    def __init__(self, coeffs, q, genus):
        self.coeffs = tuple(int(c) for c in coeffs)
        self.q = q
        self.genus = genus
        assert len(self.coeffs) == 2 * genus + 1
        assert self.coeffs[0] == 1
        assert genus == 0 or self.coeffs[-1] != 0

    def __eq__(self, other):
        if isinstance(other, (list, tuple)):
            return list(self.coeffs) == list(other)
        if not isinstance(other, CharPoly):
            return NotImplemented
        return self.coeffs == other.coeffs and self.q == other.q

    def __hash__(self):
        return hash((self.coeffs, self.q))

    def degree(self):
        return 2 * self.genus

    def power_sums(self, n):
        """s_1..s_n with s_i the sum of i-th powers of the inverse roots."""
        c = list(self.coeffs[1:])
        s = []
        for i in range(1, n + 1):
            acc = -i * (c[i - 1] if i <= len(c) else 0)
            for j in range(1, min(i, len(c) + 1)):
                if j <= len(c) and i - j >= 1:
                    acc -= c[j - 1] * s[i - j - 1]
            s.append(acc)
        return s

    def predicted_count(self, i):
        """The fixed-point count of the i-th iterate this polynomial
        implies: 1 + q^i - s_i."""
        return 1 + self.q ** i - self.power_sums(i)[-1]

    def __str__(self):
        return _plain_str(self.coeffs)

    def factor(self):
        """Factorization over the integers: list of (coefficient tuple,
        multiplicity), low degree first within each factor."""
        T = Symbol("T")
        expr = sum(c * T ** i for i, c in enumerate(self.coeffs))
        lead, factors = factor_list(expr, T)
        assert int(lead) in (1, -1)
        out = []
        for fac, mult in factors:
            fc = [int(x) for x in reversed(_SymPoly(fac, T).all_coeffs())]
            if fc[0] < 0 or (fc[0] == 0 and fc[-1] < 0):
                fc = [-x for x in fc]
            out.append((tuple(fc), int(mult)))
        out.sort(key=lambda fm: (len(fm[0]), fm[0]))
        # re-normalize so the product has constant term 1
        prod_const = 1
        for fc, mult in out:
            prod_const *= fc[0] ** mult
        assert prod_const in (1, -1)
        return out

    def factored_str(self):
        parts = []
        for fc, mult in self.factor():
            part = "(%s)" % _plain_str(fc)
            if mult > 1:
                part += "^%d" % mult
            parts.append(part)
        return "*".join(parts) if parts else "1"


def _plain_str(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            t = "T" if i == 1 else "T^%d" % i
            terms.append(t if c == 1 else "-" + t if c == -1
                         else "%d*%s" % (c, t))
    out = terms[0] if terms else "0"
    for t in terms[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out


def charpoly_h1(Phi, C, counts=None):
    """Characteristic polynomial of Phi on the degree-1 cohomology of C,
    from the fixed-point counts of its first 2*genus iterates.  Extra
    supplied counts are consistency-checked against the result."""
    g = C.genus
    q = Phi.q
    if counts is None:
        counts = [count_fixed(Phi, C, i) for i in range(1, 2 * g + 1)]
    counts = list(counts)
    if len(counts) < 2 * g:
        raise ValueError("need fixed-point counts for iterates 1..%d"
                         % (2 * g))
    # E(T) = exp(sum a_i T^i / i), via  n e_n = sum_{j<=n} a_j e_{n-j}
    e = [Fraction(1)]
    for n in range(1, 2 * g + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            acc += Fraction(counts[j - 1]) * e[n - j]
        e.append(acc / n)
    # multiply by (1 - T)(1 - qT) = 1 - (q+1)T + qT^2
    full = [Fraction(0)] * (2 * g + 1)
    for n in range(2 * g + 1):
        acc = e[n]
        if n >= 1:
            acc -= (q + 1) * e[n - 1]
        if n >= 2:
            acc += q * e[n - 2]
        full[n] = acc
    for cval in full:
        if cval.denominator != 1:
            raise ValueError("fixed-point counts give non-integer "
                             "coefficients: %s" % (full,))
    cp = CharPoly([int(cval) for cval in full], q, g)
    for i, a in enumerate(counts, start=1):
        if cp.predicted_count(i) != a:
            raise ValueError("count a_%d = %d is inconsistent with the "
                             "truncated polynomial" % (i, a))
    for i in range(g + 1):
        if cp.coeffs[2 * g - i] != q ** (g - i) * cp.coeffs[i]:
            warnings.warn("functional equation fails at degree %d" % i)
            break
    return cp


def _divide_exact(num, den):
    """num / den over the integers, little-endian; both with constant
    term 1.  Raises if the division is not exact."""
    out = []
    rem = list(Fraction(c) for c in num)
    dn = len(den) - 1
    for i in range(len(num) - 1, dn - 1, -1):
        qc = rem[i] / den[dn]
        out.append(qc)
        for j in range(dn + 1):
            rem[i - dn + j] -= qc * den[j]
    if any(c != 0 for c in rem) or any(c.denominator != 1 for c in out):
        raise ValueError("characteristic polynomial division is not exact")
    return [int(c) for c in reversed(out)]


def isotypic_split(C, G, Phi):
    """Characteristic polynomial of Phi on C split along the invariants of
    G: the factor on the G-invariant part is the characteristic polynomial
    of the descended morphism on C/G, and it divides the full polynomial
    exactly.  For a group of order 2 the two factors are the complete
    isotypic decomposition."""
    kappa = AffineAutomorphism.kappa(C.field)
    if kappa in G:
        raise ValueError("group contains the hyperelliptic involution")
    Q = quotient_curve(G)
    Psi = descend(Phi, C, G, Q)
    full = charpoly_h1(Phi, C)
    inv = charpoly_h1(Psi, Q.curve)
    cof = _divide_exact(full.coeffs, inv.coeffs)
    cof_genus = (len(cof) - 1) // 2
    assert len(cof) % 2 == 1
    cofactor = CharPoly(cof, Phi.q, cof_genus)
    if G.order == 2:
        return [("triv", inv), ("eta", cofactor)]
    return [("invariants", inv), ("complement", cofactor)]


def tame_conductor_exponent(C, G_inertia):
    """Conductor exponent for tame inertia: dim of the cohomology minus
    the dimension of its inertia invariants."""
    if G_inertia.order % C.field.p == 0:
        raise ValueError("inertia order divisible by the characteristic "
                         "is not supported")
    chi = h1_character(C, G_inertia)
    ident = AffineAutomorphism.identity(C.field)
    return chi(ident).integer_value() - dim_invariants(chi, G_inertia)


def euler_factor_string(cp):
    """ASCII rendering of 1/P(q^-s), collapsing coefficients that are
    powers of q into the exponent."""
    q = cp.q
    terms = ["1"]
    for i, c in enumerate(cp.coeffs):
        if i == 0 or c == 0:
            continue
        mag, j = abs(c), 0
        while mag % q == 0:
            mag //= q
            j += 1
        exp = "%d-%ds" % (j, i) if j else "-%ds" % i
        if mag == 1:
            term = "%d^(%s)" % (q, exp)
        else:
            term = "%d*%d^(%s)" % (mag, q, exp)
        terms.append(("- " if c < 0 else "+ ") + term)
    return "1/(" + " ".join(terms) + ")"

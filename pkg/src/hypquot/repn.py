"""
Exact character computations for the degree-1 cohomology of a hyperelliptic
curve with affine automorphisms.

All values live in cyclotomic fields Q(zeta_N) with exact rational
coefficients; nothing here is numeric.  The central object is the virtual
character

    chi = gamma_tilde (x) (C[R] - triv)  -  epsilon,

where C[R] is the permutation character on the roots of f, gamma_tilde is
the canonical complex lift of the y-coordinate character, and epsilon (only
present for an even number of roots) is the determinant of the first
summand, equal to the lift of alpha^(deg/2) * gamma^(-1).  Its values are
plain integers, it satisfies the Lefschetz relation chi(g) = 2 - #Fix(g),
and its invariants under any subgroup H have dimension 2 * genus(C/H).
"""

from fractions import Fraction
from math import gcd

from sympy import Symbol, cyclotomic_poly, mobius, totient
from sympy import Poly as _SymPoly

from . import curve as curve_mod
from .group import (apply_auto, cyclic_subgroups, all_subgroups,
                    fixed_point_count)
from .quotient import quotient_genus

_PHI_CACHE = {}
_TRACE_CACHE = {}


def _phi(N):
    """Coefficients of the N-th cyclotomic polynomial, low degree first."""
    if N not in _PHI_CACHE:
        x = Symbol("x")
        coeffs = _SymPoly(cyclotomic_poly(N, x), x).all_coeffs()
        _PHI_CACHE[N] = tuple(int(c) for c in reversed(coeffs))
    return _PHI_CACHE[N]


def _traces(N):
    """Tr(zeta_N^i) over Q for i below phi(N)."""
    if N not in _TRACE_CACHE:
        deg = len(_phi(N)) - 1
        vec = []
        for i in range(deg):
            d = N // gcd(N, i)
            vec.append(int(mobius(d)) * deg // int(totient(d)))
        _TRACE_CACHE[N] = tuple(vec)
    return _TRACE_CACHE[N]


class Cyclotomic(object):
    """Element of Q(zeta_N) in the power basis 1, z, ..., z^(phi(N)-1)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N, coeffs):
        # accepts any coefficient list in powers of zeta_N and reduces it
        phi = _phi(N)
        d = len(phi) - 1
        folded = [Fraction(0)] * max(N, d)
        for i, c in enumerate(coeffs):
            folded[i % N] += Fraction(c)
        for i in range(len(folded) - 1, d - 1, -1):
            q = folded[i]
            if q:
                folded[i] = Fraction(0)
                for j in range(d):
                    folded[i - d + j] -= q * phi[j]
        self.N = N
        self.coeffs = tuple(folded[:d])

    @classmethod
    def zeta(cls, N, j=1):
        e = [Fraction(0)] * (j % N + 1)
        e[j % N] = Fraction(1)
        return cls(N, e)

    @classmethod
    def rational(cls, N, r):
        return cls(N, [Fraction(r)])

    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.N != self.N:
                raise ValueError("conductor mismatch")
            return other
        return Cyclotomic.rational(self.N, other)

    def __add__(self, other):
        other = self._coerce(other)
        return Cyclotomic(self.N, [a + b for a, b
                                   in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.N, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        out = [Fraction(0)] * (2 * len(self.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Cyclotomic(self.N, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        if other.N != self.N:
            return self.lift(lcm(self.N, other.N)) == \
                other.lift(lcm(self.N, other.N))
        return self.coeffs == other.coeffs

    def __hash__(self):
        # equal elements may sit in different fields, so hash the average of
        # the Galois conjugates: a rational invariant of the element alone
        # whose hash also matches equal plain ints and Fractions
        avg = sum(c * t for c, t in zip(self.coeffs, _traces(self.N)))
        return hash(avg / len(self.coeffs))

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("power must be a non-negative integer")
        out = Cyclotomic.rational(self.N, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self):
        out = [Fraction(0)] * self.N
        for i, c in enumerate(self.coeffs):
            out[(self.N - i) % self.N] += c
        return Cyclotomic(self.N, out)

    def lift(self, M):
        assert M % self.N == 0
        step = M // self.N
        out = [Fraction(0)] * (len(self.coeffs) * step + 1)
        for i, c in enumerate(self.coeffs):
            out[i * step] = c
        return Cyclotomic(M, out)

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def is_rational(self):
        return all(c == 0 for c in self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("%s is irrational" % (self,))
        return self.coeffs[0]

    def integer_value(self):
        v = self.rational_value()
        if v.denominator != 1:
            raise ValueError("%s is not an integer" % (self,))
        return int(v)

    def __str__(self):
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z%d" % self.N if i == 1 else "z%d^%d" % (self.N, i)
                if c == 1:
                    terms.append(z)
                elif c == -1:
                    terms.append("-" + z)
                else:
                    terms.append("%s*%s" % (c, z))
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += " - " + t[1:] if t.startswith("-") else " + " + t
        return out

    def __repr__(self):
        return "Cyclotomic(%d, %s)" % (self.N, self)


def lcm(a, b):
    return a * b // gcd(a, b)


def conductor(G):
    """lcm of the orders of the alpha and gamma value groups, and 2."""
    N = 2
    for g in G:
        N = lcm(N, g.alpha.multiplicative_order())
        N = lcm(N, g.gamma.multiplicative_order())
    return N


class ClassFunction(object):
    """Cyclotomic-valued function on a group, constant on conjugacy
    classes; stores one value per class."""

    __slots__ = ("group", "N", "values")

    def __init__(self, group, N, values):
        self.group = group
        self.N = N
        self.values = tuple(values)
        classes = group.conjugacy_classes()
        assert len(self.values) == len(classes)
        # the multiplicity of the trivial character must be integral
        total = Cyclotomic.rational(N, 0)
        for c, v in zip(classes, self.values):
            total = total + len(c) * v
        avg = Fraction(1, group.order) * total
        assert avg.is_rational() and avg.rational_value().denominator == 1, \
            "inner product with the trivial character is not an integer"

    @classmethod
    def from_callable(cls, G, N, fn):
        vals = []
        for c in G.conjugacy_classes():
            v = fn(c[0])
            if not isinstance(v, Cyclotomic):
                v = Cyclotomic.rational(N, v)
            vals.append(v)
        return cls(G, N, vals)

    def __call__(self, g):
        idx = _class_index(self.group)
        return self.values[idx[g]]

    def _align(self, other):
        assert isinstance(other, ClassFunction)
        assert other.group is self.group, "class functions on different groups"
        M = lcm(self.N, other.N)
        a = self if self.N == M else ClassFunction(
            self.group, M, [v.lift(M) for v in self.values])
        b = other if other.N == M else ClassFunction(
            other.group, M, [v.lift(M) for v in other.values])
        return a, b

    def __add__(self, other):
        a, b = self._align(other)
        return ClassFunction(a.group, a.N,
                             [x + y for x, y in zip(a.values, b.values)])

    def __sub__(self, other):
        a, b = self._align(other)
        return ClassFunction(a.group, a.N,
                             [x - y for x, y in zip(a.values, b.values)])

    def __mul__(self, other):
        if isinstance(other, int):
            return ClassFunction(self.group, self.N,
                                 [v * other for v in self.values])
        a, b = self._align(other)
        return ClassFunction(a.group, a.N,
                             [x * y for x, y in zip(a.values, b.values)])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        if other.group is not self.group:
            return False
        a, b = self._align(other)
        return a.values == b.values

    def __hash__(self):
        return hash((id(self.group), self.values))

    def inner(self, other):
        """(1/|G|) sum over g of self(g) * conjugate(other(g))."""
        a, b = self._align(other)
        total = Cyclotomic.rational(a.N, 0)
        for c, x, y in zip(self.group.conjugacy_classes(),
                           a.values, b.values):
            total = total + len(c) * (x * y.conj())
        return Fraction(1, self.group.order) * total

    def __repr__(self):
        return "ClassFunction(%s)" % ", ".join(str(v) for v in self.values)


def _class_index(G):
    idx = getattr(G, "_class_index_cache", None)
    if idx is None:
        idx = {}
        for i, c in enumerate(G.conjugacy_classes()):
            for g in c:
                idx[g] = i
        G._class_index_cache = idx
    return idx


def trivial_character(G, N=None):
    N = conductor(G) if N is None else N
    return ClassFunction.from_callable(G, N, lambda g: 1)


def perm_character(G, points, act):
    """Character of the permutation action of G on the given points:
    chi(g) = number of fixed points.  The action must stay inside the
    point set."""
    pts = list(points)
    pset = set(pts)
    for g in G:
        for x in pts:
            if act(g, x) not in pset:
                raise ValueError("action is not closed")
    N = conductor(G)
    return ClassFunction.from_callable(
        G, N, lambda g: sum(1 for x in pts if act(g, x) == x))


def _value_lift(G, value_of, embed_exp):
    """Canonical lift of a multiplicative character G -> k* to a complex
    character, via the designated generator of k*."""
    field = G.curve.field
    q = field.order
    d = 1
    for g in G:
        d = lcm(d, value_of(g).multiplicative_order())
    N = conductor(G)
    assert N % d == 0
    assert gcd(embed_exp, d) == 1, "embedding exponent must be primitive"

    def fn(g):
        j = field.dlog(value_of(g))
        e = j * d // (q - 1)
        assert e * (q - 1) == j * d, "value outside the order-d subgroup"
        return Cyclotomic.zeta(N, (embed_exp * e * (N // d)) % N)

    return ClassFunction.from_callable(G, N, fn)


def gamma_tilde(G, embed_exp=1):
    """Lift of the y-coordinate character g -> gamma(g), with the same
    kernel.  The designated generator omega of the base field maps to
    zeta_d^embed_exp on the order-d value group."""
    return _value_lift(G, lambda g: g.gamma, embed_exp)


def alpha_tilde(G, embed_exp=1):
    """Lift of the x-scaling character g -> alpha(g)."""
    return _value_lift(G, lambda g: g.alpha, embed_exp)


def _perm_sign(points, image_of):
    pts = list(points)
    where = {x: i for i, x in enumerate(pts)}
    perm = [where[image_of(x)] for x in pts]
    seen = [False] * len(pts)
    sign = 1
    for i in range(len(pts)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def epsilon_character(C, G, embed_exp=1):
    """The determinant character of gamma_tilde (x) C[R]: computed both as
    gamma_tilde^(|R|-1) times the sign of g on R and as the lift of
    alpha^(|R|/2) * gamma^(-1); the two must agree, and triv + epsilon must
    be the permutation character on the points at infinity."""
    if C.degree % 2 == 1:
        raise ValueError("epsilon exists only for an even number of roots")
    assert G.curve is C
    n = C.degree
    N = conductor(G)
    gt = gamma_tilde(G, embed_exp)
    at = alpha_tilde(G, embed_exp)
    roots = C.roots()

    def via_det(g):
        v = Cyclotomic.rational(N, _perm_sign(roots, lambda r: g.on_x(r)))
        for _ in range(n - 1):
            v = v * gt(g)
        return v

    def via_quotient(g):
        v = Cyclotomic.rational(N, 1)
        for _ in range(n // 2):
            v = v * at(g)
        return v * gt(g).conj()

    eps = ClassFunction.from_callable(G, N, via_det)
    eps2 = ClassFunction.from_callable(G, N, via_quotient)
    assert eps == eps2, "the two constructions of epsilon disagree"
    inf = curve_mod.infinity_points(C)
    chi_inf = perm_character(G, inf, lambda g, P: apply_auto(g, P, C))
    assert trivial_character(G, N) + eps == chi_inf, \
        "triv + epsilon is not the infinity permutation character"
    return eps


def h1_character(C, G, embed_exp=1):
    """The character of the group action on the degree-1 cohomology of C:
    gamma_tilde (x) (C[R] - triv), minus its determinant when the root
    count is even.  Integer-valued; value at the identity is 2*genus."""
    assert G.curve is C
    gt = gamma_tilde(G, embed_exp)
    chi_R = perm_character(G, C.roots(), lambda g, r: g.on_x(r))
    V = gt * (chi_R - trivial_character(G, gt.N))
    if C.degree % 2 == 0:
        chi = V - epsilon_character(C, G, embed_exp)
    else:
        chi = V
    for v in chi.values:
        assert v.is_rational() and v.rational_value().denominator == 1, \
            "cohomology character must be integral"
    assert chi(G.identity) == 2 * C.genus
    return chi


def dim_invariants(chi, H):
    """Dimension of the H-invariant subspace: the average of chi over H,
    which must come out a rational integer."""
    G = chi.group
    for h in H:
        assert h in G, "H is not a subgroup"
    total = Cyclotomic.rational(chi.N, 0)
    for h in H:
        total = total + chi(h)
    val = (Fraction(1, H.order) * total).rational_value()
    assert val.denominator == 1, "invariant dimension is not an integer"
    return int(val)


def verify_h1(C, G, subgroups="cyclic"):
    """Cross-check the cohomology character against geometry: invariant
    dimensions against quotient genera, integrality, and Lefschetz fixed
    points.  Returns a report dict; report["ok"] is the verdict."""
    chi = h1_character(C, G)
    checks = []
    subs = cyclic_subgroups(G) if subgroups == "cyclic" else all_subgroups(G)
    for H in subs:
        want = 2 * quotient_genus(H)
        got = dim_invariants(chi, H)
        checks.append({
            "kind": "invariant_dimension",
            "subgroup": [g.key() for g in H.elements],
            "got": got,
            "expected": want,
            "ok": got == want,
        })
    for g in G:
        v = chi(g)
        ok = v.is_rational() and v.rational_value().denominator == 1
        checks.append({"kind": "integrality", "element": g.key(),
                       "got": str(v), "ok": ok})
    for g in G:
        if g.is_identity():
            continue
        want = 2 - fixed_point_count(C, g)
        got = chi(g).integer_value()
        checks.append({"kind": "lefschetz", "element": g.key(),
                       "got": got, "expected": want, "ok": got == want})
    return {"ok": all(c["ok"] for c in checks), "checks": checks}


def _is_abelian(G):
    return all(g * h == h * g for g in G for h in G)


def _exponent(G):
    e = 1
    for g in G:
        e = lcm(e, g.order())
    return e


def _abelian_characters(G, M):
    """All |G| one-dimensional characters, as exponent maps g -> e with
    character value zeta_M^e."""
    ident = G.identity
    chars = [{ident: 0}]
    covered = {ident}
    for g in sorted(G.elements, key=lambda x: x.key()):
        if g in covered:
            continue
        s = 1
        p = g
        while p not in covered:
            p = p * g
            s += 1
        assert M % s == 0
        new_chars = []
        for ch in chars:
            t = ch[p]
            assert t % s == 0
            for j in range(s):
                u = t // s + j * (M // s)
                ext = dict(ch)
                h_pow = ident
                e = 0
                for i in range(1, s):
                    h_pow = h_pow * g
                    e = (e + u) % M
                    for h, eh in ch.items():
                        ext[h * h_pow] = (eh + e) % M
                new_chars.append(ext)
        chars = new_chars
        covered = set(chars[0])
    assert len(chars) == G.order
    assert all(len(ch) == G.order for ch in chars)
    return chars


def abelian_decomposition(chi):
    """Write chi as an integer combination of the 1-dimensional characters
    of its (abelian) group.  Returns (label, character, multiplicity)
    triples for the nonzero multiplicities, trivial character first."""
    G = chi.group
    if not _is_abelian(G):
        raise ValueError("decomposition requires an abelian group")
    M = lcm(chi.N, _exponent(G))
    order = sorted(G.elements, key=lambda g: g.key())
    exps = _abelian_characters(G, M)
    exps.sort(key=lambda ch: [ch[g] for g in order])  # trivial sorts first
    out = []
    total = None
    n_nontriv = 0
    for ch in exps:
        psi = ClassFunction.from_callable(
            G, M, lambda g: Cyclotomic.zeta(M, ch[g]))
        mult = chi.inner(psi).integer_value()
        if all(e == 0 for e in ch.values()):
            label = "triv"
        else:
            n_nontriv += 1
            label = "eta" if G.order == 2 else "chi%d" % n_nontriv
        if mult != 0:
            out.append((label, psi, mult))
            part = mult * psi
            total = part if total is None else total + part
    assert total is not None and total == chi, "decomposition incomplete"
    return out

"""
Exact arithmetic in finite fields F_{p^k} of odd characteristic, and dense
univariate polynomials over them.

Representation conventions:

- A field F_{p^k} is presented as F_p[x]/(modulus) with modulus monic
  irreducible of degree k over the prime field.  Towers are always flattened:
  every field sits directly over F_p, and `embed` moves elements between
  compatible fields.
- Elements carry a coefficient tuple over F_p of length k, little-endian by
  degree.  The "index" of an element is sum(c_i * p^i); element orderings
  (smallest root, generator search, non-residue search) are by index.
- Polynomials over a field are dense tuples of FieldElement, little-endian,
  with a nonzero leading coefficient; the zero polynomial has no coefficients
  and degree -1.
- When no modulus is supplied, the modulus is the first monic irreducible of
  degree k in lexicographic order on (c_0, ..., c_{k-1}).  This makes every
  derived constant (designated generator, embeddings, square roots)
  reproducible across runs.

Heavy kernels (exhaustive evaluation over a field, large-degree polynomial
products and gcds) are backed by numpy int64 arrays where one row is one
coefficient vector; everything else is plain Python integers.
"""

import itertools
from fractions import Fraction
from math import gcd, lcm

import numpy as np

# Exhaustive enumeration is allowed up to this many field elements; larger
# fields fall back to gcd-based root finding.
ENUM_LIMIT = 2 ** 20


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n):
    """Prime factorization as a dict prime -> exponent (trial division)."""
    fac = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            fac[d] = fac.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        fac[n] = fac.get(n, 0) + 1
    return fac


def divisors(n):
    ds = [1]
    for q, e in factorize(n).items():
        ds = [d * q ** i for d in ds for i in range(e + 1)]
    return sorted(ds)


# ---------------------------------------------------------------------------
# Integer polynomials over F_p (used before any field object exists, e.g. to
# select and certify the defining modulus).  Little-endian int lists.

def _ip_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _ip_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ip_trim(out)


def _ip_rem(a, b, p):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv = pow(lb, -1, p)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        sh = len(a) - 1 - db
        for j, bj in enumerate(b):
            a[sh + j] = (a[sh + j] - c * bj) % p
        _ip_trim(a)
    return a


def _ip_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _ip_rem(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _ip_powmod_x(e, f, p):
    """X^e mod f over F_p by square and multiply."""
    result = [1]
    base = _ip_rem([0, 1], f, p) if len(f) <= 2 else [0, 1]
    while e:
        if e & 1:
            result = _ip_rem(_ip_mul(result, base, p), f, p)
        base = _ip_rem(_ip_mul(base, base, p), f, p)
        e >>= 1
    return result


def _ip_is_irreducible(f, p):
    """Rabin test: f (monic, deg k >= 1) irreducible over F_p."""
    k = len(f) - 1
    if k == 1:
        return True
    xq = _ip_powmod_x(p ** k, f, p)
    # X^{p^k} must reduce to X mod f
    if _ip_trim([(c1 - c2) % p for c1, c2 in
                 itertools.zip_longest(xq, [0, 1], fillvalue=0)]):
        return False
    for ell in factorize(k):
        xd = _ip_powmod_x(p ** (k // ell), f, p)
        diff = _ip_trim([(c1 - c2) % p for c1, c2 in
                         itertools.zip_longest(xd, [0, 1], fillvalue=0)])
        if len(_ip_gcd(f, diff, p)) > 1:
            return False
    return True


def _default_modulus(p, k):
    # first monic irreducible in lex order on (c_0, ..., c_{k-1});
    # c_0 = 0 would be divisible by x, so that block is skipped outright
    if k == 1:
        return (0, 1)
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=k - 1):
            f = [c0] + list(rest) + [1]
            if _ip_is_irreducible(f, p):
                return tuple(f)
    raise AssertionError("no irreducible polynomial found")


# ---------------------------------------------------------------------------

_FIELD_CACHE = {}


def make_field(p, k=1, modulus=None):
    """The field F_{p^k} as F_p[x]/(modulus); interned per (p, k, modulus)."""
    if not is_prime(p):
        raise ValueError("characteristic %r is not prime" % (p,))
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    if k < 1:
        raise ValueError("extension degree must be positive")
    if modulus is not None:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if not _ip_is_irreducible(list(modulus), p):
            raise ValueError("modulus is reducible over F_%d" % p)
    key = (p, k, modulus)
    field = _FIELD_CACHE.get(key)
    if field is None:
        field = FiniteField(p, k, modulus)
        _FIELD_CACHE[key] = field
        _FIELD_CACHE[(p, k, field.modulus)] = field
    return field


class FiniteField(object):
    """F_{p^k} with a fixed monic irreducible modulus over F_p."""

    def __init__(self, p, k, modulus=None):
        self.p = p
        self.k = k
        self.order = p ** k
        if modulus is None:
            modulus = _default_modulus(p, k)
        self.modulus = tuple(modulus)
        # rows for reducing X^k .. X^{2k-2} modulo the defining polynomial
        rows = []
        if k >= 2:
            cur = [(-c) % p for c in self.modulus[:-1]]  # X^k
            rows.append(tuple(cur))
            for _ in range(k - 2):
                top = cur[-1]
                cur = [0] + cur[:-1]
                cur = [(cur[j] + top * rows[0][j]) % p for j in range(k)]
                rows.append(tuple(cur))
        self._redrows = tuple(rows)
        self.zero = FieldElement(self, (0,) * k)
        self.one = FieldElement(self, (1,) + (0,) * (k - 1))
        self._gen = None
        self._dlog = None
        self._frob_mats = {}

    def __repr__(self):
        if self.k == 1:
            return "F_%d" % self.p
        return "F_%d^%d" % (self.p, self.k)

    def element(self, value):
        """Coerce an int (prime-field value) or coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.field is self:
                return value
            raise ValueError("element of %r given to %r; use embed" %
                             (value.field, self))
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) > self.k:
            raise ValueError("coefficient vector longer than field degree")
        return FieldElement(self, coeffs + (0,) * (self.k - len(coeffs)))

    __call__ = element

    def from_index(self, n):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(n % self.p)
            n //= self.p
        return FieldElement(self, tuple(coeffs))

    def elements(self):
        """All field elements in index order."""
        for n in range(self.order):
            yield self.from_index(n)

    def random_element(self, rng):
        return self.from_index(rng.randrange(self.order))

    @property
    def gen(self):
        """Designated multiplicative generator: first full-order element."""
        if self._gen is None:
            n = self.order - 1
            primes = list(factorize(n))
            for x in self.elements():
                if x.is_zero():
                    continue
                if all(x ** (n // ell) != self.one for ell in primes):
                    self._gen = x
                    break
        return self._gen

    def dlog(self, x):
        """Discrete log of x base the designated generator."""
        if self._dlog is None:
            if self.order > ENUM_LIMIT:
                raise ValueError("dlog table too large for this field")
            table = {}
            w = self.one
            for e in range(self.order - 1):
                table[w.coeffs] = e
                w = w * self.gen
            self._dlog = table
        if x.is_zero():
            raise ValueError("dlog of zero")
        return self._dlog[x.coeffs]

    def frob_matrix(self, j):
        """k x k matrix over F_p of x -> x^(p^j) on coefficient rows."""
        j %= self.k
        mat = self._frob_mats.get(j)
        if mat is None:
            rows = []
            for i in range(self.k):
                basis = self.from_index(self.p ** i)
                rows.append((basis ** (self.p ** j)).coeffs)
            mat = np.array(rows, dtype=np.int64)
            self._frob_mats[j] = mat
        return mat

    def sqrt(self, x):
        """A square root of x, or None; Tonelli-Shanks, deterministic."""
        x = self.element(x)
        if x.is_zero():
            return self.zero
        q = self.order
        if x ** ((q - 1) // 2) != self.one:
            return None
        s, m = q - 1, 0
        while s % 2 == 0:
            s //= 2
            m += 1
        # first quadratic non-residue in index order
        z = None
        for cand in self.elements():
            if not cand.is_zero() and cand ** ((q - 1) // 2) != self.one:
                z = cand
                break
        c = z ** s
        t = x ** s
        r = x ** ((s + 1) // 2)
        while t != self.one:
            t2 = t
            i = 0
            while t2 != self.one:
                t2 = t2 * t2
                i += 1
            b = c ** (2 ** (m - i - 1))
            r = r * b
            c = b * b
            t = t * c
            m = i
        return r


class FieldElement(object):

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def __repr__(self):
        F = self.field
        if F.k == 1:
            return "%d" % self.coeffs[0]
        return "%r(%s)" % (F, ",".join(str(c) for c in self.coeffs))

    def index(self):
        n = 0
        for c in reversed(self.coeffs):
            n = n * self.field.p + c
        return n

    def is_zero(self):
        return not any(self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise ValueError("elements of different fields; use embed")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        F = self.field
        k, p = F.k, F.p
        if k == 1:
            return FieldElement(F, (self.coeffs[0] * other.coeffs[0] % p,))
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(self.coeffs):
            if ai:
                bc = other.coeffs
                for j in range(k):
                    prod[i + j] += ai * bc[j]
        res = prod[:k]
        for t in range(k, 2 * k - 1):
            ct = prod[t]
            if ct:
                row = F._redrows[t - k]
                for j in range(k):
                    res[j] += ct * row[j]
        return FieldElement(F, tuple(c % p for c in res))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid on int polynomials over F_p
        p = self.field.p
        a = _ip_trim(list(self.coeffs))
        b = list(self.field.modulus)
        s0, s1 = [1], []
        while b:
            db, lb = len(b) - 1, b[-1]
            inv = pow(lb, -1, p)
            rem, quo = list(a), [0] * max(len(a) - db, 1)
            while rem and len(rem) - 1 >= db:
                c = rem[-1] * inv % p
                sh = len(rem) - 1 - db
                quo[sh] = c
                for j, bj in enumerate(b):
                    rem[sh + j] = (rem[sh + j] - c * bj) % p
                _ip_trim(rem)
            a, b = b, rem
            s0, s1 = s1, _ip_trim([
                (x - y) % p for x, y in itertools.zip_longest(
                    s0, _ip_mul(quo, s1, p), fillvalue=0)])
        linv = pow(a[-1] if a else 0, -1, p)
        s0 = [c * linv % p for c in s0]
        return self.field.element(s0)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def multiplicative_order(self):
        if self.is_zero():
            raise ValueError("zero has no multiplicative order")
        n = self.field.order - 1
        for q, e in factorize(n).items():
            while n % q == 0 and self ** (n // q) == self.field.one:
                n //= q
        return n


# ---------------------------------------------------------------------------
# Embeddings between compatible fields.

_EMBED_CACHE = {}


def _embedding_data(src, tgt):
    key = (id(src), id(tgt))
    data = _EMBED_CACHE.get(key)
    if data is None:
        lifted = Poly(tgt, [tgt.element(c) for c in src.modulus])
        rts = roots_in(lifted, tgt)
        if not rts:
            raise AssertionError("no root of source modulus in target")
        rho = min(set(rts), key=lambda r: r.index())
        rows = []
        w = tgt.one
        for _ in range(src.k):
            rows.append(w.coeffs)
            w = w * rho
        data = (rho, tuple(rows))
        _EMBED_CACHE[key] = data
    return data


def embed(x, target):
    """Image of x under the canonical embedding of its field into target."""
    src = x.field
    if src is target:
        return x
    if src.p != target.p:
        raise ValueError("incompatible characteristics")
    if target.k % src.k != 0:
        raise ValueError("no embedding: %d does not divide %d" %
                         (src.k, target.k))
    _, rows = _embedding_data(src, target)
    p = target.p
    acc = [0] * target.k
    for c, row in zip(x.coeffs, rows):
        if c:
            for j in range(target.k):
                acc[j] += c * row[j]
    return FieldElement(target, tuple(a % p for a in acc))


def unembed(x, src):
    """Preimage of x under embed(., target=x.field); error if not in image."""
    tgt = x.field
    if src is tgt:
        return x
    _, rows = _embedding_data(src, tgt)
    sol = _solve_mod_p(rows, x.coeffs, tgt.p)
    if sol is None:
        raise ValueError("element does not lie in the subfield")
    return src.element(sol)


def _solve_mod_p(rows, rhs, p):
    """Solve y * rows = rhs over F_p; rows is a tuple of row vectors."""
    nr, nc = len(rows), len(rows[0])
    aug = [[rows[i][j] for i in range(nr)] + [rhs[j]] for j in range(nc)]
    piv_cols = []
    r = 0
    for c in range(nr):
        piv = next((i for i in range(r, nc) if aug[i][c] % p), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][c], -1, p)
        aug[r] = [v * inv % p for v in aug[r]]
        for i in range(nc):
            if i != r and aug[i][c] % p:
                f = aug[i][c]
                aug[i] = [(v - f * w) % p for v, w in zip(aug[i], aug[r])]
        piv_cols.append(c)
        r += 1
    for i in range(r, nc):
        if aug[i][-1] % p:
            return None
    sol = [0] * nr
    for i, c in enumerate(piv_cols):
        sol[c] = aug[i][-1] % p
    return sol


# ---------------------------------------------------------------------------
# Dense univariate polynomials over a field.

class Poly(object):
    """Dense polynomial; coeffs little-endian, leading coefficient nonzero."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        while coeffs and coeffs[-1].is_zero():
            coeffs = coeffs[:-1]
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.element(c) for c in ints])

    @classmethod
    def x(cls, field):
        return cls(field, [field.zero, field.one])

    @classmethod
    def constant(cls, field, c):
        return cls(field, [field.element(c)])

    @classmethod
    def monomial(cls, field, deg, coeff=1):
        c = field.element(coeff)
        return cls(field, [field.zero] * deg + [c])

    @classmethod
    def from_roots(cls, field, roots):
        out = cls(field, [field.one])
        for r in roots:
            out = out * cls(field, [-r, field.one])
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1]

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c.is_zero():
                terms.append("%r*X^%d" % (c, i))
        return "Poly(%s)" % " + ".join(terms)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.field is not self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, (int, FieldElement)):
            return Poly(self.field, [self.field.element(other)])
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            c = self.field.element(other)
            return Poly(self.field, [a * c for a in self.coeffs])
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly(self.field, [])
        a, b = self.coeffs, other.coeffs
        if len(a) > 64 and len(b) > 64:
            return _arr_to_poly(self.field,
                               _arr_mul(self.field, _poly_to_arr(self),
                                        _poly_to_arr(other)))
        # iterate over the sparser factor
        na = sum(1 for c in a if not c.is_zero())
        nb = sum(1 for c in b if not c.is_zero())
        if na > nb:
            a, b = b, a
        zero = self.field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai.is_zero():
                for j, bj in enumerate(b):
                    if not bj.is_zero():
                        out[i + j] = out[i + j] + ai * bj
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.degree < other.degree:
            return Poly(self.field, []), self
        if other.degree > 0 and self.degree > 128:
            qa, ra = _arr_divmod(self.field, _poly_to_arr(self),
                                 _poly_to_arr(other))
            return (_arr_to_poly(self.field, qa),
                    _arr_to_poly(self.field, ra))
        zero = self.field.zero
        rem = list(self.coeffs)
        db = other.degree
        inv = other.leading().inverse()
        quo = [zero] * (len(rem) - db)
        bc = other.coeffs
        top = len(rem) - 1
        while top >= db:
            c = rem[top]
            if not c.is_zero():
                c = c * inv
                quo[top - db] = c
                sh = top - db
                for j in range(db + 1):
                    rem[sh + j] = rem[sh + j] - c * bc[j]
            top -= 1
        return Poly(self.field, quo), Poly(self.field, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        result = Poly(self.field, [self.field.one])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def powmod(self, e, modulus):
        """self^e mod modulus by square and multiply."""
        result = Poly(self.field, [self.field.one]) % modulus
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def monic(self):
        if self.is_zero() or self.leading().is_one():
            return self
        return self * self.leading().inverse()

    def gcd(self, other):
        a, b = self, self._coerce(other)
        if a.degree > 128 and b.degree > 128:
            arr = _arr_gcd(self.field, _poly_to_arr(a), _poly_to_arr(b))
            return _arr_to_poly(self.field, arr)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def derivative(self):
        F = self.field
        return Poly(F, [F.element(i) * c
                        for i, c in enumerate(self.coeffs)][1:])

    def is_squarefree(self):
        if self.degree < 1:
            return not self.is_zero()
        return self.gcd(self.derivative()).degree == 0

    def __call__(self, x):
        """Evaluate at a field element (coefficients embed if x is in an
        extension) or at another polynomial (composition)."""
        if isinstance(x, Poly):
            return self._compose(x)
        if isinstance(x, int):
            x = self.field.element(x)
        if x.field is not self.field:
            if x.field.k % self.field.k == 0:
                return self.map_field(x.field)(x)
            x = embed(x, self.field)
        acc = x.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def _compose(self, other):
        F = other.field
        if F is not self.field:
            return self.map_field(F)._compose(other)
        acc = Poly(F, [])
        for c in reversed(self.coeffs):
            acc = acc * other + Poly(F, [c])
        return acc

    def map_field(self, target):
        if target is self.field:
            return self
        return Poly(target, [embed(c, target) for c in self.coeffs])

    def frobenius_coeffs(self, e=1):
        """Apply x -> x^(p^e) to each coefficient."""
        pe = self.field.p ** e
        return Poly(self.field, [c ** pe for c in self.coeffs])


# ---------------------------------------------------------------------------
# Root finding and splitting degrees.

def _decimate(f):
    # f with zero derivative is a polynomial in X^p
    p = f.field.p
    return Poly(f.field, list(f.coeffs[::p]))


def roots_in(f, E):
    """All roots of f lying in E, with multiplicity."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    f = f.map_field(E)
    distinct = _distinct_roots(f, E)
    out = []
    for r in distinct:
        g, mult = f, 0
        while True:
            q, rem = divmod(g, Poly(E, [-r, E.one]))
            if not rem.is_zero():
                break
            g, mult = q, mult + 1
        out.extend([r] * mult)
    return out


def _distinct_roots(f, E):
    out = []
    nz = 0
    while nz <= f.degree and f.coeffs[nz].is_zero():
        nz += 1
    if nz:
        out.append(E.zero)
        f = Poly(E, list(f.coeffs[nz:]))
    if f.degree < 1:
        return out
    if f.degree == 1:
        return out + [-f.coeffs[0] / f.coeffs[1]]
    if E.order <= ENUM_LIMIT:
        return out + _roots_exhaustive(f, E)
    return out + _roots_gcd(f, E)


def _roots_exhaustive(f, E):
    if E.order <= 4096:
        return [x for x in E.elements() if f(x).is_zero()]
    rows = _all_rows(E)
    vals = _bulk_eval(f, rows, E)
    idx = np.nonzero(~vals.any(axis=1))[0]
    return [E.from_index(int(i)) for i in idx]


def _roots_gcd(f, E):
    # linear-factor part: gcd(f, X^|E| - X), then deterministic splitting
    xq = Poly.x(E).powmod(E.order, f)
    g = f.gcd(xq - Poly.x(E))
    out = []
    stack = [g.monic()]
    half = (E.order - 1) // 2
    while stack:
        h = stack.pop()
        if h.degree == 0:
            continue
        if h.degree == 1:
            out.append(-h.coeffs[0] / h.coeffs[1])
            continue
        split = None
        for delta in E.elements():
            t = Poly(E, [delta, E.one]).powmod(half, h) - Poly(E, [E.one])
            d = h.gcd(t)
            if 0 < d.degree < h.degree:
                split = d
                break
        if split is None:
            raise AssertionError("splitting sweep exhausted")
        stack.append(split)
        stack.append((h // split).monic())
    return out


def splitting_degree(f):
    """Least d with every root of f in F_{q^d}; lcm of factor degrees."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree < 1:
        return 1
    fp = f.derivative()
    if fp.is_zero():
        return splitting_degree(_decimate(f))
    u = f.gcd(fp)
    w = (f // u).monic()
    d = _splitting_degree_squarefree(w)
    while True:
        g = u.gcd(w)
        if g.degree == 0:
            break
        u = u // g
    if u.degree > 0:
        d = lcm(d, splitting_degree(u))
    return d


def _splitting_degree_squarefree(w, limit=None):
    E = w.field
    q = E.order
    d, out = 0, 1
    h = Poly.x(E) % w
    while w.degree > 0:
        d += 1
        if limit is not None and d > limit:
            return None
        h = h.powmod(q, w)
        g = w.gcd(h - Poly.x(E))
        if g.degree > 0:
            out = lcm(out, d)
            w = (w // g).monic()
            h = h % w if w.degree > 0 else h
    return out


# ---------------------------------------------------------------------------
# numpy kernels.  A batch of n field elements is an (n, k) int64 array of
# coefficient rows; a polynomial of degree d is a (d+1, k) array.

def _all_rows(E):
    """(q, k) array of every element's coefficients, in index order."""
    idx = np.arange(E.order, dtype=np.int64)
    rows = np.empty((E.order, E.k), dtype=np.int64)
    for j in range(E.k):
        rows[:, j] = idx % E.p
        idx //= E.p
    return rows


def _red_matrix(F):
    # (k-1, k) reduction rows for X^k .. X^{2k-2}
    return np.array(F._redrows, dtype=np.int64).reshape(F.k - 1, F.k)


def _bulk_mul(F, A, B):
    """Rowwise products of two (n, k) batches."""
    k, p = F.k, F.p
    if k == 1:
        return (A * B) % p
    n = A.shape[0]
    prod = np.zeros((n, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        prod[:, i:i + k] += A[:, i:i + 1] * B
    prod %= p
    out = prod[:, :k] + prod[:, k:] @ _red_matrix(F)
    return out % p


def _bulk_scalar_mul(F, A, c):
    """(n, k) batch times one field element c."""
    mat = _mult_matrix(F, c)
    return (A @ mat) % F.p


def _mult_matrix(F, c):
    # rows: c * x^i as coefficient vectors
    rows = []
    w = c
    xgen = F.from_index(F.p) if F.k > 1 else None
    for i in range(F.k):
        rows.append(w.coeffs)
        if xgen is not None:
            w = w * xgen
    return np.array(rows, dtype=np.int64)


def _bulk_pow(F, A, e):
    """Rowwise e-th powers of an (n, k) batch."""
    n = A.shape[0]
    result = np.zeros((n, F.k), dtype=np.int64)
    result[:, 0] = 1
    base = A % F.p
    if e > 4096 and F.k > 1:
        # write e in base p; x -> x^p is a matrix on coefficient rows, so
        # each digit costs one matmul plus a few rowwise products
        frob = F.frob_matrix(1)
        while e:
            d = e % F.p
            if d:
                t = base
                for _ in range(d - 1):
                    t = _bulk_mul(F, t, base)
                result = _bulk_mul(F, result, t)
            base = (base @ frob) % F.p
            e //= F.p
        return result
    while e:
        if e & 1:
            result = _bulk_mul(F, result, base)
        base = _bulk_mul(F, base, base)
        e >>= 1
    return result


def _bulk_eval(f, rows, E):
    """Evaluate f at every row of an (n, k) batch over E."""
    f = f.map_field(E)
    n = rows.shape[0]
    acc = np.zeros((n, E.k), dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = _bulk_mul(E, acc, rows)
        acc[:, :] += np.array(c.coeffs, dtype=np.int64)
    return acc % E.p


def _poly_to_arr(f):
    if f.is_zero():
        return np.zeros((0, f.field.k), dtype=np.int64)
    return np.array([c.coeffs for c in f.coeffs], dtype=np.int64)


def _arr_to_poly(F, arr):
    return Poly(F, [FieldElement(F, tuple(int(v) for v in row))
                    for row in arr])


def _arr_trim(arr):
    n = arr.shape[0]
    while n > 0 and not arr[n - 1].any():
        n -= 1
    return arr[:n]


def _arr_mul(F, A, B):
    """Polynomial product of coefficient arrays (rows are coefficients)."""
    A, B = _arr_trim(A), _arr_trim(B)
    if A.shape[0] == 0 or B.shape[0] == 0:
        return np.zeros((0, F.k), dtype=np.int64)
    k, p = F.k, F.p
    n = A.shape[0] + B.shape[0] - 1
    comp = np.zeros((n, 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            comp[:, i + j] += np.convolve(A[:, i] % p, B[:, j] % p)
    comp %= p
    if k == 1:
        return _arr_trim(comp)
    out = comp[:, :k] + comp[:, k:] @ _red_matrix(F)
    return _arr_trim(out % p)


def _arr_divmod(F, A, B):
    """Quotient and remainder of coefficient arrays; B nonzero."""
    A, B = _arr_trim(A).copy(), _arr_trim(B)
    p = F.p
    db = B.shape[0] - 1
    if db < 0:
        raise ZeroDivisionError("polynomial division by zero")
    da = A.shape[0] - 1
    if da < db:
        return np.zeros((0, F.k), dtype=np.int64), A
    lead = FieldElement(F, tuple(int(v) for v in B[db]))
    inv_mat = _mult_matrix(F, lead.inverse())
    quo = np.zeros((da - db + 1, F.k), dtype=np.int64)
    body = B[:db]
    nz = np.nonzero(body.any(axis=1))[0] if db else np.empty(0, dtype=int)
    bodynz = body[nz]
    for top in range(da, db - 1, -1):
        row = A[top]
        if not row.any():
            continue
        c = (row @ inv_mat) % p
        quo[top - db] = c
        if len(nz):
            cmat = _mult_matrix(F, FieldElement(F, tuple(int(v) for v in c)))
            A[nz + (top - db)] -= (bodynz @ cmat) % p
            A[nz + (top - db)] %= p
        A[top] = 0
    return _arr_trim(quo), _arr_trim(A[:db].copy() if db else A[:0])


def _arr_gcd(F, A, B):
    A, B = _arr_trim(A), _arr_trim(B)
    while B.shape[0] > 0:
        A, B = B, _arr_divmod(F, A, B)[1]
    if A.shape[0] > 0:
        lead = FieldElement(F, tuple(int(v) for v in A[-1]))
        A = (A @ _mult_matrix(F, lead.inverse())) % F.p
    return A


def _arr_powmod(F, base, e, modulus):
    """base^e mod modulus on coefficient arrays."""
    result = np.zeros((1, F.k), dtype=np.int64)
    result[0, 0] = 1
    base = _arr_divmod(F, base, modulus)[1]
    while e:
        if e & 1:
            result = _arr_divmod(F, _arr_mul(F, result, base), modulus)[1]
        base = _arr_divmod(F, _arr_mul(F, base, base), modulus)[1]
        e >>= 1
    return result

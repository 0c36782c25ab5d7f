import pytest
from hypothesis import given, settings, strategies as st

from hypquot.ff import (ENUM_LIMIT, FieldElement, Poly, embed, make_field,
                        roots_in, splitting_degree, unembed)

F3 = make_field(3)
F9 = make_field(3, 2)
F25 = make_field(5, 2)
F27 = make_field(3, 3)


def test_make_field_basics():
    assert F3.order == 3 and F9.order == 9 and F27.order == 27
    assert make_field(3, 2) is F9
    assert F9.modulus == (1, 0, 1)          # x^2 + 1, lex-first irreducible
    assert F27.modulus == (1, 0, 2, 1)      # x^3 + 2x^2 + 1
    with pytest.raises(ValueError):
        make_field(4)
    with pytest.raises(ValueError):
        make_field(2)
    with pytest.raises(ValueError):
        make_field(3, 0)
    with pytest.raises(ValueError):
        make_field(3, 2, (1, 1, 1))        # x^2 + x + 1 = (x-1)^2 over F3


def test_element_coercion():
    assert F9(5) == F9(2) == -F9.one
    assert F9([1, 2]).coeffs == (1, 2)
    assert F9([-2, 5]).coeffs == (1, 2)
    with pytest.raises(ValueError):
        F9([1, 2, 3])
    with pytest.raises(ValueError):
        F9(F3.one)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 24), st.integers(0, 24), st.integers(0, 24))
def test_field_ring_axioms(i, j, k):
    F = F25
    a, b, c = F.from_index(i), F.from_index(j), F.from_index(k)
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == F.zero
    assert a * F.one == a


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 26))
def test_inverse_and_power(i):
    x = F27.from_index(i)
    assert x * x.inverse() == F27.one
    assert x / x == F27.one
    assert x ** 26 == F27.one
    assert x ** 27 == x


def test_generator_and_dlog():
    for F in (F3, F9, F25, F27):
        g = F.gen
        assert g.multiplicative_order() == F.order - 1
        # designated generator is the first full-order element by index
        for n in range(1, g.index()):
            assert F.from_index(n).multiplicative_order() < F.order - 1
        x = g ** 5
        assert F.dlog(x) == 5 % (F.order - 1)
        assert g ** F.dlog(x) == x


def test_sqrt():
    for F in (F3, F9, F25, F27):
        squares = 0
        for x in F.elements():
            r = F.sqrt(x)
            if r is not None:
                assert r * r == x
                squares += 1
        assert squares == (F.order - 1) // 2 + 1


def test_embed_unembed():
    for x in F3.elements():
        y = embed(x, F9)
        assert unembed(y, F3) == x
    a, b = F3(2), F3.one
    assert embed(a, F27) * embed(b, F27) == embed(a * b, F27)
    assert embed(a, F27) + embed(b, F27) == embed(a + b, F27)
    F81 = make_field(3, 4)
    for x in F9.elements():
        y = embed(x, F81)
        assert unembed(y, F9) == x
        assert embed(x, F81) ** 9 + y == y + y ** 9  # Frobenius commutes
    with pytest.raises(ValueError):
        embed(F9.gen, F27)          # 2 does not divide 3
    with pytest.raises(ValueError):
        unembed(F81.gen, F9)        # generator of F81 is not in F9


def test_embedding_is_canonical():
    # embedding through a tower agrees with the direct embedding
    F81 = make_field(3, 4)
    for x in F3.elements():
        assert embed(embed(x, F9), F81) == embed(x, F81)


def test_poly_arithmetic():
    f = Poly.from_ints(F3, [1, 2, 0, 1])
    g = Poly.from_ints(F3, [2, 1])
    assert (f + g) - g == f
    assert (f * g).degree == 4
    q, r = divmod(f, g)
    assert q * g + r == f and r.degree < g.degree
    assert f % f == Poly(F3, [])
    assert (f * f).gcd(f * g).monic() == f.monic()
    assert f(F3(2)) == F3(1 + 2 * 2 + 8)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=8),
       st.lists(st.integers(0, 2), min_size=1, max_size=8))
def test_poly_mul_commutes(a, b):
    f, g = Poly.from_ints(F3, a), Poly.from_ints(F3, b)
    assert f * g == g * f
    if not g.is_zero():
        q, r = divmod(f, g)
        assert q * g + r == f


def test_poly_compose_and_spread():
    f = Poly.from_ints(F9, [1, 0, 2, 1])
    s = Poly.from_ints(F9, [2, 1])           # X + 2
    comp = f(s)
    for x in list(F9.elements())[:6]:
        assert comp(x) == f(s(x))
    assert f(Poly.from_ints(F9, [0, 1])) == f


def test_poly_pow_and_powmod():
    f = Poly.from_ints(F3, [1, 1])
    assert f ** 3 == Poly.from_ints(F3, [1, 0, 0, 1])   # Frobenius
    m = Poly.from_ints(F3, [1, 0, 1])
    assert f.powmod(9, m) == (f ** 9) % m
    assert f.powmod(0, m) == Poly.from_ints(F3, [1])


def test_frobenius_coeffs():
    f = Poly(F9, [F9.gen, F9.one, F9.gen ** 3])
    fr = f.frobenius_coeffs()
    assert fr.coeffs[0] == F9.gen ** 3 and fr.coeffs[2] == F9.gen ** 9
    assert f.frobenius_coeffs(2) == f


def test_squarefree_and_derivative():
    f = Poly.from_ints(F3, [0, 1]) * Poly.from_ints(F3, [1, 1])
    assert f.is_squarefree()
    assert not (f * f).is_squarefree()
    # derivative kills p-th powers
    g = Poly.from_ints(F3, [1, 0, 0, 2])
    assert g.derivative() == Poly(F3, [])


def test_from_roots_and_roots_in():
    rts = [F9.from_index(i) for i in (2, 5, 7)]
    f = Poly.from_roots(F9, rts)
    assert f.degree == 3 and f.leading().is_one()
    assert sorted(r.index() for r in roots_in(f, F9)) == [2, 5, 7]
    # roots counted with multiplicity
    g = f * Poly.from_roots(F9, [rts[0]])
    assert sorted(r.index() for r in roots_in(g, F9)).count(2) == 2
    # x^2 + 1 over F3: no roots in F3, both in F9
    h = Poly.from_ints(F3, [1, 0, 1])
    assert roots_in(h, F3) == []
    assert len(roots_in(h, F9)) == 2
    assert splitting_degree(h) == 2
    assert splitting_degree(Poly.from_ints(F3, [1, 1])) == 1


def test_splitting_degree_mixed():
    # (x^2+1)(x^3+2x+1): irreducible of degrees 2 and 3 -> lcm 6
    f = Poly.from_ints(F3, [1, 0, 1]) * Poly.from_ints(F3, [1, 2, 0, 1])
    assert splitting_degree(f) == 6
    E = make_field(3, 6)
    assert len(roots_in(f, E)) == 5


def test_big_field_guards():
    F = make_field(3, 2)
    assert F.order < ENUM_LIMIT
    big = make_field(3, 20)
    assert big.order > ENUM_LIMIT
    x = big.gen ** 3
    assert x * x.inverse() == big.one
    with pytest.raises(ValueError):
        big.dlog(x)


def test_element_hash_and_index():
    seen = {x: x.index() for x in F27.elements()}
    assert len(seen) == 27
    for x, n in seen.items():
        assert F27.from_index(n) == x

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hypquot.curve import HyperellipticCurve, infinity_points
from hypquot.ff import Poly, make_field
from hypquot.group import (AffineAutomorphism, closure, cyclic_subgroups,
                           fixed_point_count)
from hypquot.quotient import quotient_genus
from hypquot.repn import (ClassFunction, Cyclotomic, abelian_decomposition,
                          alpha_tilde, conductor, dim_invariants,
                          epsilon_character, gamma_tilde, h1_character,
                          perm_character, trivial_character, verify_h1)

F3 = make_field(3)
F9 = make_field(3, 2)
F7 = make_field(7)

C8 = HyperellipticCurve(F9, F9.one, Poly.from_ints(F9, [-1] + [0] * 7 + [1]))
NEG = AffineAutomorphism(-F9.one, F9.zero, F9.one)


def test_cyclotomic_basics():
    z8 = Cyclotomic.zeta(8)
    assert z8 * z8 == Cyclotomic.zeta(4).lift(8)
    assert z8 * z8.conj() == 1
    assert Cyclotomic.zeta(4) * Cyclotomic.zeta(4) == -1
    z6 = Cyclotomic.zeta(6)
    assert z6 * z6 == z6 - 1            # reduction mod the 6th cyclotomic
    total = Cyclotomic.rational(8, 0)
    cur = Cyclotomic.rational(8, 1)
    for _ in range(8):
        total = total + cur
        cur = cur * z8
    assert total.is_zero()
    assert Cyclotomic.rational(8, Fraction(3, 2)).rational_value() == \
        Fraction(3, 2)
    assert Cyclotomic.zeta(12, 4) == Cyclotomic.zeta(3).lift(12)
    assert str(Cyclotomic.zeta(8)) == "z8"


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 7), st.integers(0, 7), st.integers(0, 7))
def test_cyclotomic_ring_axioms(i, j, k):
    a, b, c = (Cyclotomic.zeta(8, i), Cyclotomic.zeta(8, j),
               Cyclotomic.zeta(8, k))
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a - a).is_zero()
    assert (a * b) * c == a * (b * c)


def test_cyclotomic_cross_conductor_equality():
    assert Cyclotomic.zeta(4) == Cyclotomic.zeta(8, 2)
    assert Cyclotomic.rational(2, 5) == Cyclotomic.rational(6, 5)
    assert hash(Cyclotomic.zeta(4)) == hash(Cyclotomic.zeta(8, 2))


def test_conductor():
    assert conductor(closure(C8, [NEG])) == 2
    s = AffineAutomorphism(F7(2), F7.zero, F7(4))
    fx = Poly.from_ints(F7, [0, 1])
    f = fx * Poly.from_ints(F7, [-1, 0, 0, 1]) * Poly.from_ints(F7, [-2, 0, 0, 1])
    C7 = HyperellipticCurve(F7, F7.one, f)
    assert conductor(closure(C7, [s])) == 6


def test_octic_character_values():
    G = closure(C8, [NEG])
    chi = h1_character(C8, G)
    assert chi(G.identity) == 6
    assert chi(NEG) == -2
    dec = abelian_decomposition(chi)
    assert [(lbl, m) for lbl, _, m in dec] == [("triv", 2), ("eta", 4)]
    assert dim_invariants(chi, G) == 2
    eps = epsilon_character(C8, G)
    assert eps(NEG) == 1 and eps(G.identity) == 1
    assert verify_h1(C8, G)["ok"]


def test_kappa_acts_by_minus_one():
    kap = AffineAutomorphism.kappa(F9)
    GK = closure(C8, [kap])
    chi = h1_character(C8, GK)
    assert chi(kap) == -6
    assert epsilon_character(C8, GK)(kap) == -1
    assert dim_invariants(chi, GK) == 0
    assert verify_h1(C8, GK)["ok"]


def test_character_values_rational_integers():
    G = closure(C8, [NEG, AffineAutomorphism.kappa(F9)])
    chi = h1_character(C8, G)
    for g in G:
        assert chi(g).is_rational()
        assert chi(g).rational_value().denominator == 1


def test_cubic_action_decomposition():
    fx = Poly.from_ints(F7, [0, 1])
    f = fx * Poly.from_ints(F7, [-1, 0, 0, 1]) * Poly.from_ints(F7, [-2, 0, 0, 1])
    C7 = HyperellipticCurve(F7, F7.one, f)
    s = AffineAutomorphism(F7(2), F7.zero, F7(4))
    G = closure(C7, [s])
    gt = gamma_tilde(G)
    assert gt(s) == Cyclotomic.zeta(6, 4)
    chi = h1_character(C7, G)
    assert chi(G.identity) == 6 and chi(s) == 0 and chi(s * s) == 0
    dec = abelian_decomposition(chi)
    assert [(lbl, m) for lbl, _, m in dec] == \
        [("triv", 2), ("chi1", 2), ("chi2", 2)]
    assert verify_h1(C7, G)["ok"]
    with pytest.raises(ValueError):
        epsilon_character(C7, G)     # odd degree has no epsilon


def test_embedding_choice_invariance():
    fx = Poly.from_ints(F7, [0, 1])
    f = fx * Poly.from_ints(F7, [-1, 0, 0, 1]) * Poly.from_ints(F7, [-2, 0, 0, 1])
    C7 = HyperellipticCurve(F7, F7.one, f)
    G = closure(C7, [AffineAutomorphism(F7(2), F7.zero, F7(4))])
    assert h1_character(C7, G) == h1_character(C7, G, embed_exp=5)
    G2 = closure(C8, [AffineAutomorphism(F9.gen ** 2, F9.zero, -F9.one)])
    for u in (3, 5, 7):
        assert h1_character(C8, G2) == h1_character(C8, G2, embed_exp=u)


def test_epsilon_constructions_agree_and_extend_infinity():
    # even degree: triv + eps must be the permutation character at infinity
    G = closure(C8, [AffineAutomorphism(F9.gen ** 2, F9.zero, -F9.one)])
    eps = epsilon_character(C8, G)
    at = alpha_tilde(G)
    gt = gamma_tilde(G)
    n = C8.degree
    for g in G:
        assert eps(g) * eps(g) == 1
        assert eps(g) == at(g) ** (n // 2) * gt(g).conj()


def test_wild_translation_lefschetz():
    C3 = HyperellipticCurve(F3, F3.one, Poly.from_ints(F3, [0, -1, 0, 1]))
    t = AffineAutomorphism(F3.one, F3.one, F3.one)
    GT = closure(C3, [t])
    chi = h1_character(C3, GT)
    assert chi(t) == -1
    assert fixed_point_count(C3, t) == 3
    assert 2 - fixed_point_count(C3, t) == chi(t).integer_value()
    assert verify_h1(C3, GT)["ok"]

    f6 = Poly.from_ints(F3, [0, -1, 0, 1])
    C6 = HyperellipticCurve(F3, F3.one, f6 * f6 - Poly.from_ints(F3, [1]))
    G6 = closure(C6, [AffineAutomorphism(F3.one, F3.one, F3.one)])
    t6 = [h for h in G6 if not h.is_identity()][0]
    chi6 = h1_character(C6, G6)
    assert chi6(G6.identity) == 4 and chi6(t6) == -2
    assert dim_invariants(chi6, G6) == 0 == 2 * quotient_genus(G6)
    assert verify_h1(C6, G6)["ok"]


def test_order72_integration():
    C9 = HyperellipticCurve(F9, F9.one,
                            Poly.from_ints(F9, [0, -1] + [0] * 7 + [1]))
    G = closure(C9, [AffineAutomorphism(F9.one, F9.one, F9.one),
                     AffineAutomorphism(F9.gen ** 2, F9.zero, F9.gen)])
    assert G.order == 72
    chi = h1_character(C9, G)
    assert chi(G.identity) == 8
    assert chi(AffineAutomorphism.kappa(F9)) == -8
    assert verify_h1(C9, G)["ok"]
    with pytest.raises(ValueError):
        abelian_decomposition(chi)
    for H in cyclic_subgroups(G):
        assert dim_invariants(chi, H) == 2 * quotient_genus(H)


def test_perm_character_infinity():
    G = closure(C8, [AffineAutomorphism(F9.gen ** 2, F9.zero, -F9.one)])
    inf = infinity_points(C8)
    from hypquot.group import apply_auto
    chi_inf = perm_character(G, inf, lambda g, P: apply_auto(g, P, C8))
    eps = epsilon_character(C8, G)
    assert chi_inf == trivial_character(G, eps.N) + eps


def test_perm_character_rejects_unclosed_action():
    G = closure(C8, [NEG])
    with pytest.raises(ValueError):
        perm_character(G, [C8.roots()[0]], lambda g, r: g.on_x(r))


def test_class_function_integrality_enforced():
    G = closure(C8, [NEG])
    with pytest.raises(AssertionError):
        ClassFunction(G, 2, [Cyclotomic.rational(2, 1),
                             Cyclotomic.rational(2, Fraction(1, 2))])

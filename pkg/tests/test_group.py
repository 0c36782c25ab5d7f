import random

import pytest

from hypquot.curve import CurvePoint, HyperellipticCurve, on_curve, points_over
from hypquot.ff import Poly, make_field
from hypquot.group import (AffineAutomorphism, all_subgroups, apply_auto,
                           closure, cyclic_subgroups, fixed_point_count,
                           fixed_points_of_auto, infinity_action,
                           orbits_on_roots, validate_auto)

F3 = make_field(3)
F9 = make_field(3, 2)
F7 = make_field(7)

C8 = HyperellipticCurve(F9, F9.one, Poly.from_ints(F9, [-1] + [0] * 7 + [1]))
NEG = AffineAutomorphism(-F9.one, F9.zero, F9.one)

C3 = HyperellipticCurve(F3, F3.one, Poly.from_ints(F3, [0, -1, 0, 1]))
T3 = AffineAutomorphism(F3.one, F3.one, F3.one)

C9 = HyperellipticCurve(F9, F9.one, Poly.from_ints(F9, [0, -1] + [0] * 7 + [1]))


def test_composition_and_inverse():
    rng = random.Random(0)
    autos = []
    for _ in range(6):
        a = F9.from_index(rng.randrange(1, 9))
        b = F9.from_index(rng.randrange(9))
        g = AffineAutomorphism(a, b, F9.one)
        autos.append(g)
    ident = AffineAutomorphism.identity(F9)
    for g in autos:
        assert g * g.inverse() == ident
        assert g.inverse() * g == ident
        for h in autos:
            gh = g * h
            # composition acts as g after h on the x-line
            for x in list(F9.elements())[:4]:
                assert gh.on_x(x) == g.on_x(h.on_x(x))


def test_validate_auto():
    assert validate_auto(C8, NEG)
    assert validate_auto(C3, T3)
    assert validate_auto(C8, AffineAutomorphism.kappa(F9))
    # x -> 2x does not permute the roots of x^3 - x ... it does; but
    # gamma^2 = alpha^3 = 8 = 2 forces gamma outside F_3
    assert not validate_auto(C3, AffineAutomorphism(F3(2), F3.zero, F3.one))
    # wrong gamma
    assert not validate_auto(C8, AffineAutomorphism(-F9.one, F9.zero, F9.gen))
    # x-map does not permute the roots
    assert not validate_auto(C8, AffineAutomorphism(F9.one, F9.one, F9.one))


def test_order_and_kappa():
    kap = AffineAutomorphism.kappa(F9)
    assert kap.order() == 2 and kap.is_kappa()
    assert NEG.order() == 2
    s = AffineAutomorphism(F9.gen ** 2, F9.zero, F9.gen)
    assert s.order() == 8
    assert (s * s * s * s) == kap


def test_closure_small():
    G = closure(C8, [NEG])
    assert G.order == 2
    st = G.structure()
    assert st["kappa"] is None and st["m"] == 2 and len(st["T"]) == 1
    assert st["Xi"] == (F9.zero,) and st["lam"] == F9.zero
    G4 = closure(C8, [NEG, AffineAutomorphism.kappa(F9)])
    assert G4.order == 4
    assert G4.structure()["kappa"] is not None


def test_closure_translations():
    GT = closure(C3, [T3])
    assert GT.order == 3
    st = GT.structure()
    assert st["m"] == 1 and len(st["T"]) == 3 and st["Xi"] == ()
    assert st["lam"] == F3.one     # empty product convention


def test_closure_order72_with_forced_kappa():
    s = AffineAutomorphism(F9.gen ** 2, F9.zero, F9.gen)
    t = AffineAutomorphism(F9.one, F9.one, F9.one)
    G = closure(C9, [t, s])
    # s^4 = kappa, so the closure doubles over T x| C_4
    assert G.order == 72
    st = G.structure()
    assert st["kappa"] is not None
    assert len(st["T"]) == 9 and st["m"] == 4
    assert len(st["Xi"]) == 9 and st["lam"] == F9.zero
    classes = G.conjugacy_classes()
    assert sum(len(c) for c in classes) == 72
    assert min(len(c) for c in classes) == 1
    with pytest.raises(ValueError):
        closure(C9, [t, s], bound=20)


def test_orbits_on_roots():
    reg, irr = orbits_on_roots(closure(C8, [NEG]))
    assert len(reg) == 4 and irr is None
    assert all(len(o) == 2 and o[0] == -o[1] for o in reg)
    reg, irr = orbits_on_roots(closure(C3, [T3]))
    assert len(reg) == 1 and len(reg[0]) == 3 and irr is None
    s = AffineAutomorphism(F9.gen ** 2, F9.zero, F9.gen)
    t = AffineAutomorphism(F9.one, F9.one, F9.one)
    reg, irr = orbits_on_roots(closure(C9, [t, s]))
    assert reg == [] and irr is not None and len(irr) == 9


def test_infinity_action():
    G = closure(C8, [NEG])
    ia = infinity_action(G)
    assert ia[NEG] == 1 and ia[G.identity] == 1
    # (ix, -y) has gamma/alpha^4 = -1/1 = ... swaps the two points
    s4 = AffineAutomorphism(F9.gen ** 2, F9.zero, -F9.one)
    G4 = closure(C8, [s4])
    assert infinity_action(G4)[s4] == -1


def test_fixed_points_scaling():
    fx = fixed_points_of_auto(C8, NEG)
    assert len(fx) == 4
    affine = [P for P in fx if P.is_affine()]
    assert len(affine) == 2 and all(P.x.is_zero() for P in affine)
    assert {P.y for P in affine} == {F9.gen ** 2, -(F9.gen ** 2)}
    assert fixed_point_count(C8, NEG) == 4
    with pytest.raises(ValueError):
        fixed_points_of_auto(C8, AffineAutomorphism.identity(F9))


def test_fixed_points_kappa():
    fk = fixed_points_of_auto(C8, AffineAutomorphism.kappa(F9))
    assert len(fk) == 8 and all(P.y.is_zero() for P in fk)
    assert fixed_point_count(C8, AffineAutomorphism.kappa(F9)) == 8


def test_fixed_points_translation_tame_vs_wild():
    # translations fix only infinity; as intersection numbers the single
    # odd-degree point counts with multiplicity 3, even-degree ones with 2
    assert fixed_points_of_auto(C3, T3) == [CurvePoint.infinity(0)]
    assert fixed_point_count(C3, T3) == 3
    f6 = Poly.from_ints(F3, [0, -1, 0, 1])
    C6 = HyperellipticCurve(F3, F3.one, f6 * f6 - Poly.from_ints(F3, [1]))
    t6 = AffineAutomorphism(F3.one, F3.one, F3.one)
    assert len(fixed_points_of_auto(C6, t6)) == 2
    assert fixed_point_count(C6, t6) == 4
    # kappa * translation is tame again: gamma = -1 fixes Weierstrass x's
    kt = AffineAutomorphism(F3.one, F3.one, -F3.one)
    assert validate_auto(C3, kt)
    assert fixed_point_count(C3, kt) == len(fixed_points_of_auto(C3, kt))


def test_fixed_points_match_enumeration():
    # brute enumeration over a splitting extension sees the same points
    E = make_field(3, 4)
    pts = points_over(C8, E)
    brute = [P for P in pts if apply_auto(NEG, P, C8) == P]
    assert sorted((P.kind, P.x.index() if P.is_affine() else P.sign)
                  for P in brute) == \
        sorted((P.kind, P.x.index() if P.is_affine() else P.sign)
               for P in fixed_points_of_auto(C8, NEG))


def test_apply_auto_preserves_curve():
    G = closure(C8, [NEG, AffineAutomorphism.kappa(F9)])
    for P in points_over(C8, F9):
        for g in G:
            Q = apply_auto(g, P, C8)
            assert on_curve(C8, Q)
            assert apply_auto(g.inverse(), Q, C8) == P


def test_subgroup_lattices():
    G4 = closure(C8, [NEG, AffineAutomorphism.kappa(F9)])
    assert [H.order for H in all_subgroups(G4)] == [1, 2, 2, 2, 4]
    assert [H.order for H in cyclic_subgroups(G4)] == [1, 2, 2, 2]
    # C_3 x C_3 of translations: 1 + 4 + 1 subgroups, found by join closure
    t1 = AffineAutomorphism(F9.one, F9.one, F9.one)
    tw = AffineAutomorphism(F9.one, F9.gen ** 2, F9.one)
    G9 = closure(C9, [t1, tw])
    assert G9.order == 9
    assert sorted(H.order for H in all_subgroups(G9)) == [1, 3, 3, 3, 3, 9]
    s = AffineAutomorphism(F9.gen ** 2, F9.zero, F9.gen)
    G72 = closure(C9, [t1, s])
    with pytest.raises(ValueError):
        all_subgroups(G72)
    assert all(72 % H.order == 0 for H in cyclic_subgroups(G72))

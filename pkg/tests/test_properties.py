import pytest

from hypquot.curve import on_curve, points_over
from hypquot.ff import Poly, embed, make_field
from hypquot.frob import charpoly_h1, isotypic_split, normalizes
from hypquot.group import (AffineAutomorphism, all_subgroups, apply_auto,
                           orbits_on_roots)
from hypquot.quotient import (invariant_I, invariant_IT, push_point,
                              quotient_curve, quotient_genus)
from hypquot.repn import alpha_tilde, epsilon_character, gamma_tilde, verify_h1

from instance_gen import make_instance

SEEDS = range(60)
CHARPOLY_LIMIT = 6561
_CACHE = {}


def inst(seed):
    if seed not in _CACHE:
        _CACHE[seed] = make_instance(seed)
    return _CACHE[seed]


@pytest.mark.parametrize("seed", SEEDS)
def test_invariant_dimensions_and_lefschetz(seed):
    ins = inst(seed)
    rep = verify_h1(ins.C, ins.G)
    assert rep["ok"], [c for c in rep["checks"] if not c["ok"]]


@pytest.mark.parametrize("seed", SEEDS)
def test_push_point_constant_on_orbits(seed):
    ins = inst(seed)
    Q = quotient_curve(ins.G)
    pts = [P for P in points_over(ins.C, make_field(ins.C.field.p,
                                                    2 * ins.C.field.k))
           if P.is_affine()]
    if Q.case == 1:
        if pts:
            with pytest.raises(ValueError):
                push_point(ins.G, pts[0])
        return
    for P in pts[:150]:
        img = push_point(ins.G, P)
        assert on_curve(Q.curve, img)
        for g in ins.G:
            assert push_point(ins.G, apply_auto(g, P, ins.C)) == img


@pytest.mark.parametrize("seed", SEEDS)
def test_quotient_genus_formula_matches_model(seed):
    ins = inst(seed)
    for H in all_subgroups(ins.G):
        assert quotient_genus(H) == quotient_curve(H).genus


@pytest.mark.parametrize("seed", SEEDS)
def test_orbit_product_identities(seed):
    ins = inst(seed)
    C, G = ins.C, ins.G
    I = invariant_I(G)
    E = C.splitting_field()
    regular, _ = orbits_on_roots(G)
    sign = (-E.one) ** (I.degree - 1)
    for O in regular:
        lhs = Poly.from_roots(E, [embed(r, E) for r in O])
        pi = E.one
        for r in O:
            pi = pi * embed(r, E)
        assert lhs == Poly(E, [sign]) * (I.map_field(E) - Poly(E, [pi]))
    st = G.structure()
    if st["m"] > 1:
        lhs = Poly.from_roots(C.field, list(st["Xi"]))
        assert lhs == invariant_IT(G) - Poly(C.field, [st["lam"]])


@pytest.mark.parametrize("seed", SEEDS)
def test_determinant_twist_constructions_agree(seed):
    ins = inst(seed)
    C, G = ins.C, ins.G
    if C.degree % 2:
        with pytest.raises(ValueError):
            epsilon_character(C, G)
        return
    eps = epsilon_character(C, G)
    at = alpha_tilde(G)
    gt = gamma_tilde(G)
    for g in G:
        assert eps(g) == at(g) ** (C.degree // 2) * gt(g).conj()


@pytest.mark.parametrize("seed", SEEDS)
def test_quotient_charpoly_divides_full_charpoly(seed):
    ins = inst(seed)
    C, G, Phi = ins.C, ins.G, ins.Phi
    if ins.meta["kappa"] or ins.meta["case"] == 1:
        with pytest.raises(ValueError):
            isotypic_split(C, G, Phi)
        return
    ok, _ = normalizes(Phi, G)
    assert ok
    if Phi.q ** (2 * C.genus) > CHARPOLY_LIMIT:
        return
    split = isotypic_split(C, G, Phi)
    prod = [1]
    for _, part in split:
        out = [0] * (len(prod) + len(part.coeffs) - 1)
        for i, a in enumerate(prod):
            for j, b in enumerate(part.coeffs):
                out[i + j] += a * b
        prod = out
    assert tuple(prod) == charpoly_h1(Phi, C).coeffs


def test_instance_variety():
    metas = [inst(s).meta for s in SEEDS]
    assert len(metas) >= 50
    assert {m["p"] for m in metas} == {3, 5, 7}
    assert {m["k"] for m in metas} == {1, 2}
    assert {m["case"] for m in metas} == {1, 2, 3}
    assert any(m["kappa"] for m in metas)
    assert any(not m["kappa"] for m in metas)
    assert any(m["wild"] for m in metas)
    assert any(m["m"] > 1 for m in metas)
    assert any(m["ext_roots"] for m in metas)
    assert any(m["deg"] % 2 for m in metas)
    assert any(m["deg"] % 2 == 0 for m in metas)
    assert all(m["deg"] <= 10 and m["order"] <= 12 for m in metas)
    # enough instances actually reach the exact-division check
    eligible = [m for m in metas
                if not m["kappa"] and m["case"] != 1
                and (m["p"] ** m["k"]) ** (2 * ((m["deg"] - 1) // 2))
                <= CHARPOLY_LIMIT]
    assert len(eligible) >= 10

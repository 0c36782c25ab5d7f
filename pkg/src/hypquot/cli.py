"""
Command-line interface: one declarative TOML job file per invocation,
five subcommands (quotient, cohomology, frobenius, zeta, verify), and
deterministic JSON reports under a versioned schema.

Field elements in the job file are written as plain integers (prime-field
values), little-endian coefficient lists, or powers of the designated
generator ("w^3", "-w^2", "w").
"""

import argparse
import json
import sys

try:
    import tomllib as tomli
except ImportError:
    import tomli

from . import curve as curve_mod
from .curve import HyperellipticCurve
from .ff import Poly, make_field
from .frob import (FrobMorphism, charpoly_h1, count_fixed, descend,
                   euler_factor_string, isotypic_split, normalizes,
                   tame_conductor_exponent, validate_frob)
from .group import (AffineAutomorphism, all_subgroups, apply_auto, closure,
                    cyclic_subgroups)
from .quotient import push_point, quotient_curve
from .repn import (abelian_decomposition, dim_invariants, h1_character,
                   verify_h1)

SCHEMA = 1


class ConfigError(Exception):
    pass


def _parse_elem(spec, F, where):
    if isinstance(spec, bool):
        raise ConfigError("%s: booleans are not field elements" % where)
    if isinstance(spec, int):
        return F.element(spec)
    if isinstance(spec, list):
        if not all(isinstance(c, int) and not isinstance(c, bool)
                   for c in spec):
            raise ConfigError("%s: coefficient lists must hold integers"
                              % where)
        try:
            return F.element(spec)
        except ValueError as exc:
            raise ConfigError("%s: %s" % (where, exc))
    if isinstance(spec, str):
        s = spec.strip()
        neg = s.startswith("-")
        if neg:
            s = s[1:].strip()
        if s == "w":
            e = 1
        elif s.startswith("w^"):
            try:
                e = int(s[2:])
            except ValueError:
                raise ConfigError("%s: bad generator power %r"
                                  % (where, spec))
        else:
            raise ConfigError("%s: unrecognized element %r" % (where, spec))
        x = F.gen ** (e % (F.order - 1))
        return -x if neg else x
    raise ConfigError("%s: unrecognized element %r" % (where, spec))


def _require(table, key, where):
    if key not in table:
        raise ConfigError("%s: missing key %r" % (where, key))
    return table[key]


def load_job(path):
    """Parse a TOML job file into (field, curve, group, frobenius, options)."""
    try:
        with open(path, "rb") as fh:
            data = tomli.load(fh)
    except OSError as exc:
        raise ConfigError(str(exc))
    except tomli.TOMLDecodeError as exc:
        raise ConfigError("%s: %s" % (path, exc))

    fld = _require(data, "field", path)
    p = _require(fld, "p", "field")
    k = fld.get("k", 1)
    modulus = fld.get("modulus")
    try:
        F = make_field(p, k, tuple(modulus) if modulus else None)
    except ValueError as exc:
        raise ConfigError("field: %s" % exc)

    cv = _require(data, "curve", path)
    c = _parse_elem(_require(cv, "c", "curve"), F, "curve.c")
    fspec = _require(cv, "f", "curve")
    if not isinstance(fspec, list) or not fspec:
        raise ConfigError("curve.f: expected a non-empty coefficient list")
    coeffs = [_parse_elem(s, F, "curve.f[%d]" % i)
              for i, s in enumerate(fspec)]
    try:
        C = HyperellipticCurve(F, c, Poly(F, coeffs))
    except (ValueError, AssertionError) as exc:
        raise ConfigError("curve: %s" % exc)

    gens = []
    for i, triple in enumerate(data.get("group", {}).get("generators", [])):
        if not isinstance(triple, list) or len(triple) != 3:
            raise ConfigError("group.generators[%d]: expected a triple" % i)
        w = "group.generators[%d]" % i
        gens.append(AffineAutomorphism(
            _parse_elem(triple[0], F, w + "[0]"),
            _parse_elem(triple[1], F, w + "[1]"),
            _parse_elem(triple[2], F, w + "[2]")))
    try:
        G = closure(C, gens)
    except ValueError as exc:
        raise ConfigError("group: %s" % exc)

    Phi = None
    if "frobenius" in data:
        fb = data["frobenius"]
        q = _require(fb, "q", "frobenius")
        if not isinstance(q, int):
            raise ConfigError("frobenius.q: expected an integer")
        try:
            Phi = FrobMorphism(
                F,
                _parse_elem(_require(fb, "a", "frobenius"), F, "frobenius.a"),
                _parse_elem(_require(fb, "b", "frobenius"), F, "frobenius.b"),
                _parse_elem(_require(fb, "d", "frobenius"), F, "frobenius.d"),
                q)
        except ValueError as exc:
            raise ConfigError("frobenius: %s" % exc)

    options = data.get("options", {})
    return F, C, G, Phi, options


def _elem_json(x):
    return list(x.coeffs)


def _poly_json(f):
    return [_elem_json(c) for c in f.coeffs]


def _elem_str(x):
    if all(c == 0 for c in x.coeffs[1:]):
        return str(x.coeffs[0])
    return "(" + ",".join(str(c) for c in x.coeffs) + ")"


def _poly_str(f, var="x"):
    if f.is_zero():
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c.is_zero():
            continue
        if i == 0:
            terms.append(_elem_str(c))
            continue
        xs = var if i == 1 else "%s^%d" % (var, i)
        terms.append(xs if c.is_one() else "%s*%s" % (_elem_str(c), xs))
    return " + ".join(terms)


def _curve_json(C):
    rhs = Poly(C.field, [C.c]) * C.f
    return {
        "c": _elem_json(C.c),
        "f": _poly_json(C.f),
        "genus": C.genus,
        "equation": "y^2 = " + _poly_str(rhs),
    }


def _auto_json(g):
    return [_elem_json(g.alpha), _elem_json(g.beta), _elem_json(g.gamma)]


def cmd_quotient(F, C, G, Phi, options, args):
    Q = quotient_curve(G)
    out = {
        "case": Q.case,
        "kind": Q.kind,
        "group_order": G.order,
        "x_map": _poly_json(Q.x_map),
    }
    if Q.case == 1:
        out["note"] = ("quotient is a projective line; its function field "
                       "is generated by a square root of the x-coordinate "
                       "map")
    else:
        out["curve"] = _curve_json(Q.curve)
        out["y_factor"] = _poly_json(Q.y_factor)
        out["genus"] = Q.genus
        out["orbit_products"] = sorted(
            _elem_json(t) for t in Q.orbit_products)
        if Q.case == 3:
            out["m"] = Q.m
            out["irregular_product"] = _elem_json(Q.lam)
    return out, True


def cmd_cohomology(F, C, G, Phi, options, args):
    chi = h1_character(C, G)
    classes = []
    for cls in G.conjugacy_classes():
        rep = cls[0]
        classes.append({
            "representative": _auto_json(rep),
            "size": len(cls),
            "value": str(chi(rep)),
        })
    ident = AffineAutomorphism.identity(F)
    out = {
        "conductor": chi.N,
        "dimension": chi(ident).integer_value(),
        "classes": classes,
    }
    try:
        decomp = abelian_decomposition(chi)
        out["decomposition"] = [
            {"label": lbl, "multiplicity": mult,
             "values": [str(psi(cls[0])) for cls in G.conjugacy_classes()]}
            for lbl, psi, mult in decomp]
    except ValueError:
        out["decomposition"] = None
    subs = (cyclic_subgroups(G) if args.subgroups == "cyclic"
            else all_subgroups(G))
    dims = []
    for H in subs:
        dims.append({
            "subgroup_order": H.order,
            "generators": [_auto_json(g) for g in H],
            "invariant_dim": dim_invariants(chi, H),
        })
    out["invariant_dims"] = dims
    return out, True


def cmd_frobenius(F, C, G, Phi, options, args):
    if Phi is None:
        raise ConfigError("frobenius: section required for this subcommand")
    valid = validate_frob(C, Phi)
    out = {
        "morphism": {"a": _elem_json(Phi.a), "b": _elem_json(Phi.b),
                     "d": _elem_json(Phi.d), "q": Phi.q},
        "valid": valid,
    }
    if not valid:
        return out, False
    ok, witness = normalizes(Phi, G)
    out["normalizes_group"] = ok
    if ok and G.order > 1:
        kappa = AffineAutomorphism.kappa(F)
        if kappa in G:
            out["descends"] = False
            out["note"] = "group contains the hyperelliptic involution"
        else:
            Psi = descend(Phi, C, G)
            out["descends"] = True
            out["psi"] = {"a": _elem_json(Psi.a), "b": _elem_json(Psi.b),
                          "d": _elem_json(Psi.d), "q": Psi.q}
            out["commuting_square"] = "checked"
    return out, True


def cmd_zeta(F, C, G, Phi, options, args):
    if Phi is None:
        raise ConfigError("frobenius: section required for this subcommand")
    if not validate_frob(C, Phi):
        return {"valid": False}, False
    g2 = 2 * C.genus
    counts = [count_fixed(Phi, C, i) for i in range(1, g2 + 1)]
    cp = charpoly_h1(Phi, C, counts)
    out = {
        "fixed_point_counts": counts,
        "charpoly": list(cp.coeffs),
        "charpoly_str": str(cp),
        "factored": cp.factored_str(),
        "euler_factor": euler_factor_string(cp),
    }
    kappa = AffineAutomorphism.kappa(F)
    if G.order > 1 and kappa not in G:
        ok, _ = normalizes(Phi, G)
        if ok:
            split = isotypic_split(C, G, Phi)
            out["isotypic"] = [
                {"label": lbl, "charpoly": list(f.coeffs),
                 "charpoly_str": str(f),
                 "euler_factor": euler_factor_string(f)}
                for lbl, f in split]
    if G.order > 1 and G.order % F.p != 0:
        out["tame_conductor_exponent"] = tame_conductor_exponent(C, G)
    return out, True


def cmd_verify(F, C, G, Phi, options, args):
    max_order = 2 ** args.max_field_bits
    if F.order > max_order:
        raise ConfigError("field has %d elements; raise --max-field-bits"
                          % F.order)
    report = verify_h1(C, G, subgroups=args.subgroups)
    checks = list(report["checks"])
    ok = report["ok"]

    Q = quotient_curve(G)
    checks.append({"name": "quotient_construction", "ok": True,
                   "detail": "case %d, kind %s" % (Q.case, Q.kind)})
    if Q.case != 1:
        sq_ok = True
        E = C.field
        if E.order <= 4096:
            for P in curve_mod.points_over(C, E):
                if not P.is_affine():
                    continue
                base = push_point(G, P)
                for g in G:
                    if push_point(G, apply_auto(g, P, C)) != base:
                        sq_ok = False
        checks.append({"name": "pushforward_constant_on_orbits",
                       "ok": sq_ok})
        ok = ok and sq_ok

    if Phi is not None:
        fv = validate_frob(C, Phi)
        checks.append({"name": "frobenius_on_curve", "ok": fv})
        ok = ok and fv
        if fv:
            nz, _ = normalizes(Phi, G)
            checks.append({"name": "frobenius_normalizes_group", "ok": nz})
            kappa = AffineAutomorphism.kappa(F)
            if nz and kappa not in G and G.order > 1:
                try:
                    split = isotypic_split(C, G, Phi)
                    checks.append({"name": "isotypic_divisibility",
                                   "ok": True,
                                   "detail": " | ".join(
                                       "%s: %s" % (lbl, f)
                                       for lbl, f in split)})
                except (ValueError, AssertionError) as exc:
                    checks.append({"name": "isotypic_divisibility",
                                   "ok": False, "detail": str(exc)})
                    ok = False
    return {"ok": ok, "checks": checks}, ok


COMMANDS = {
    "quotient": cmd_quotient,
    "cohomology": cmd_cohomology,
    "frobenius": cmd_frobenius,
    "zeta": cmd_zeta,
    "verify": cmd_verify,
}


def _print_human(out, indent=0):
    pad = "  " * indent
    if isinstance(out, dict):
        for key in out:
            val = out[key]
            if isinstance(val, (dict, list)) and val and not _is_flat(val):
                print("%s%s:" % (pad, key))
                _print_human(val, indent + 1)
            else:
                print("%s%s: %s" % (pad, key, _flat_str(val)))
    elif isinstance(out, list):
        for item in out:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                print("%s-" % pad)
                _print_human(item, indent + 1)
            else:
                print("%s- %s" % (pad, _flat_str(item)))


def _is_flat(val):
    if isinstance(val, dict):
        return False
    return all(not isinstance(v, (dict, list)) for v in val)


def _flat_str(val):
    if isinstance(val, list):
        return "[" + ", ".join(_flat_str(v) for v in val) + "]"
    return str(val)


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="hypquot",
        description="Quotients, cohomology, and zeta functions of "
                    "hyperelliptic curves with affine automorphisms.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", required=True, metavar="PATH",
                        help="TOML job description")
    parser.add_argument("--json", action="store_true",
                        help="emit the JSON report instead of text")
    parser.add_argument("--subgroups", choices=["cyclic", "all"],
                        default="cyclic",
                        help="subgroup scope for invariant checks")
    parser.add_argument("--max-field-bits", type=int, default=24,
                        metavar="N",
                        help="refuse enumeration beyond 2^N elements")
    args = parser.parse_args(argv)

    try:
        F, C, G, Phi, options = load_job(args.config)
        out, ok = COMMANDS[args.command](F, C, G, Phi, options, args)
    except ConfigError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (ValueError, AssertionError) as exc:
        print("error: %s: %s" % (args.command, exc), file=sys.stderr)
        return 2

    report = {"schema": SCHEMA, "command": args.command}
    report.update(out)
    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        _print_human(report)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

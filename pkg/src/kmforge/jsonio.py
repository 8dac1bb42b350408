"""JSON encodings for every value type.

All arbitrary-precision integers travel as decimal strings (rationals as
["num", "den"] pairs); structural integers (levels, exponents, orders) stay
native.  Encoders are deterministic: combined with sorted keys this makes
identical inputs produce byte-identical documents.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .catalog import catalog_for
from .errors import InvalidInputError
from .field import CyclotomicNumber, field_degree
from .invariants import FirstKindInvariant, SecondKindInvariant
from .liealg import AlgebraElement, FiniteAutomorphism, builtin_algebra, exp_curve
from .loop import LoopElement, TwistContext
from .standard import (
    ConstantCurve,
    ExpCurve,
    ScalingAutomorphism,
    standard_automorphism,
)


def enc_rational(q):
    q = Fraction(q)
    return [str(q.numerator), str(q.denominator)]


def dec_rational(obj):
    try:
        num, den = obj
        return Fraction(int(num), int(den))
    except (TypeError, ValueError) as exc:
        raise InvalidInputError(f"bad rational encoding: {obj!r}") from exc


def enc_cyclo(x, min_level=None):
    if min_level:
        x = x.lift(math.lcm(x.level, min_level))
    return {"level": x.level, "coords": [enc_rational(c) for c in x.coords]}


def dec_cyclo(obj):
    try:
        level = int(obj["level"])
        coords = [dec_rational(c) for c in obj["coords"]]
    except (KeyError, TypeError) as exc:
        raise InvalidInputError(f"bad cyclotomic encoding: {obj!r}") from exc
    if len(coords) != field_degree(level):
        raise InvalidInputError("coordinate count does not match the level")
    return CyclotomicNumber(level, coords)


def enc_element(x, min_level=None):
    return {"algebra": x.algebra.name,
            "coords": [enc_cyclo(c, min_level) for c in x.coords]}


def dec_element(obj):
    algebra = builtin_algebra(obj["algebra"])
    coords = [dec_cyclo(c) for c in obj["coords"]]
    if len(coords) != algebra.dim:
        raise InvalidInputError("element length does not match the algebra")
    return AlgebraElement(algebra, tuple(coords))


def enc_automorphism(a, min_level=None):
    out = {
        "algebra": a.algebra.name,
        "matrix": [[enc_cyclo(x, min_level) for x in row] for row in a.matrix],
        "antilinear": a.antilinear,
    }
    name = _catalog_name(a)
    if name:
        out["name"] = name
    return out


def _catalog_name(a):
    try:
        cat = catalog_for(a.algebra.name)
    except Exception:
        return None
    for entry in cat.entries.values():
        if entry.auto == a:
            return entry.name
    if cat.omega() == a:
        return "omega"
    return None


def dec_automorphism(obj):
    algebra = builtin_algebra(obj["algebra"])
    if "matrix" not in obj and "name" in obj:
        cat = catalog_for(algebra.name)
        if obj["name"] == "omega":
            return cat.omega()
        return cat.named(obj["name"])
    rows = [[dec_cyclo(x) for x in row] for row in obj["matrix"]]
    return FiniteAutomorphism(algebra, rows, antilinear=bool(obj.get("antilinear", False)))


def enc_context(ctx, min_level=None):
    return {"algebra": ctx.algebra.name,
            "sigma": enc_automorphism(ctx.sigma, min_level),
            "D": ctx.D}


def dec_context(obj):
    algebra = builtin_algebra(obj["algebra"])
    sigma = dec_automorphism(obj["sigma"])
    return TwistContext(algebra, sigma, D=int(obj["D"]))


def enc_loop(u, min_level=None):
    return {
        "context": enc_context(u.context, min_level),
        "terms": [{"k": k, "coeff": enc_element(x, min_level)} for k, x in u.terms],
    }


def dec_loop(obj):
    ctx = dec_context(obj["context"])
    terms = {int(t["k"]): dec_element(t["coeff"]) for t in obj["terms"]}
    return LoopElement(ctx, terms)


def enc_affine(x, min_level=None):
    return {"loop": enc_loop(x.loop, min_level),
            "c": enc_cyclo(x.c_coef, min_level),
            "d": enc_cyclo(x.d_coef, min_level)}


def dec_affine(obj):
    from .affine import AffineElement

    return AffineElement(dec_loop(obj["loop"]), dec_cyclo(obj["c"]), dec_cyclo(obj["d"]))


def enc_standard(phi, min_level=None):
    if isinstance(phi.curve, ConstantCurve):
        curve = {"kind": "constant", "base": enc_automorphism(phi.curve.base, min_level)}
    else:
        curve = {
            "kind": "exp",
            "generator": enc_element(phi.curve.data.generator, min_level),
            "eigenvalues": [enc_rational(q) for q, _ in phi.curve.data.eigenpairs],
            "base": enc_automorphism(phi.curve.base, min_level),
        }
    return {
        "type": "standard",
        "epsilon": phi.epsilon,
        "shift": enc_rational(phi.shift),
        "antilinear": phi.antilinear,
        "curve": curve,
        "source": enc_context(phi.source, min_level),
        "target": enc_context(phi.target, min_level),
    }


def dec_standard(obj):
    source = dec_context(obj["source"])
    curve_obj = obj["curve"]
    base = dec_automorphism(curve_obj["base"])
    if curve_obj["kind"] == "constant":
        curve = ConstantCurve(base)
    elif curve_obj["kind"] == "exp":
        gen = dec_element(curve_obj["generator"])
        qs = [dec_rational(q) for q in curve_obj["eigenvalues"]]
        curve = ExpCurve(exp_curve(gen, qs), base)
    else:
        raise InvalidInputError(f"unknown curve kind {curve_obj.get('kind')!r}")
    target = dec_context(obj["target"]) if "target" in obj else None
    phi = standard_automorphism(int(obj["epsilon"]), dec_rational(obj["shift"]),
                                curve, source, target)
    if bool(obj.get("antilinear", False)) != phi.antilinear:
        raise InvalidInputError("antilinear flag disagrees with the curve base")
    return phi


def dec_loop_map(obj):
    """A standard automorphism, optionally composed with a scaling tau_r."""
    phi = dec_standard(obj)
    if "tau_r" in obj:
        r = dec_rational(obj["tau_r"])
        if r != 1:
            from .standard import ComposedLoopMap

            return ComposedLoopMap((ScalingAutomorphism(r), phi))
    return phi


def enc_invariant(inv, min_level=None):
    if isinstance(inv, FirstKindInvariant):
        return {"kind": "first", "algebra": inv.algebra, "q": inv.q,
                "p": inv.p, "rho": inv.rho, "beta_class": inv.beta_class}
    if isinstance(inv, SecondKindInvariant):
        out = {"kind": "second", "algebra": inv.algebra, "q": inv.q}
        if inv.plus_name and inv.minus_name:
            out["plus"] = inv.plus_name
            out["minus"] = inv.minus_name
        else:
            out["plus_matrix"] = enc_automorphism(inv.plus, min_level)
            out["minus_matrix"] = enc_automorphism(inv.minus, min_level)
        return out
    raise InvalidInputError(f"cannot encode invariant {inv!r}")


def dec_invariant(obj):
    if obj.get("kind") == "first":
        return FirstKindInvariant(obj["algebra"], int(obj["q"]), int(obj["p"]),
                                  obj["rho"], obj["beta_class"])
    if obj.get("kind") == "second":
        cat = catalog_for(obj["algebra"])
        if "plus" in obj:
            plus, minus = cat.named(obj["plus"]), cat.named(obj["minus"])
            names = (obj["plus"], obj["minus"])
        else:
            plus = dec_automorphism(obj["plus_matrix"])
            minus = dec_automorphism(obj["minus_matrix"])
            names = (None, None)
        return SecondKindInvariant(obj["algebra"], int(obj["q"]), plus, minus, *names)
    raise InvalidInputError(f"unknown invariant kind {obj.get('kind')!r}")


def enc_involution_descriptor(desc, min_level=None):
    return {
        "kind": desc.kind,
        "algebra": desc.algebra,
        "data": dict(desc.data),
        "order": 2,
        "twist": enc_automorphism(desc.sigma, min_level),
        "invariant": enc_invariant(desc.invariant, min_level),
    }


def enc_real_form(desc, min_level=None):
    out = {
        "kind": desc.kind,
        "algebra": desc.algebra,
        "label": desc.label,
        "invariant": enc_invariant(desc.invariant, min_level),
        "hat_adjoin": desc.hat_adjoin,
        "split_tag": desc.split_tag,
        "twist_order": desc.context.twist_order,
        "D": desc.context.D,
    }
    if desc.involution is not None:
        out["data"] = dict(desc.involution.data)
    return out


def enc_table(table):
    return {
        "name": table.name,
        "dim": table.dim,
        "basis": list(table.basis_names),
        "base_field": table.base_field_tag,
        "compact": table.compact_flag,
        "structure_constants": [
            [[enc_rational(c) for c in row] for row in plane] for plane in table.structure
        ],
        "killing": [[enc_rational(c) for c in row] for row in table.killing],
    }

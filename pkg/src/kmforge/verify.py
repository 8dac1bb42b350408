"""Verification suites behind the CLI and the acceptance tests.

Every suite is deterministic given (config, seed); all checks are exact.
Reports are plain dicts: a list of named checks, a pass flag, and witnesses
for anything that failed.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .affine import (
    AffineElement,
    affine_bracket,
    center_and_derived_check,
    extend_to_hat,
    finite_order_extension,
    hat_order,
    hat_preserves_bracket,
)
from .catalog import catalog_for
from .field import imaginary_unit
from .invariants import (
    extract_invariant_first,
    extract_invariant_second,
    invariants_equal_second,
    realize_first,
    realize_second,
)
from .liealg import FiniteAutomorphism, automorphism_order, builtin_algebra, exp_curve
from .loop import LoopElement, TwistContext, loop_bracket, cocycle, tau_r_apply, validate
from .realforms import (
    cartan_decomposition,
    enumerate_real_forms,
    real_forms_equivalent,
    verify_cartan as verify_cartan_report,
    verify_real_form,
)
from .standard import (
    ComposedLoopMap,
    ExpCurve,
    ScalingAutomorphism,
    apply,
    conjugate,
    identity_automorphism,
    loop_map_order,
    pointwise,
    standard_automorphism,
    standard_order,
)


def _twists_for(algebra_name):
    cat = catalog_for(algebra_name)
    second = "tau" if algebra_name == "sl2C" else "theta"
    return [("id", cat.named("id"), 1), (second, cat.named(second), 2)]


def random_loop(rng, ctx, max_degree=6, max_terms=3):
    acc = {}
    for _ in range(rng.randint(1, max_terms)):
        k = rng.randint(-max_degree, max_degree)
        basis = ctx.eigenbasis_for_exponent(k)
        if not basis:
            continue
        x = ctx.algebra.zero_element()
        for b in basis:
            c = Fraction(rng.randint(-2, 2), rng.randint(1, 2))
            if rng.random() < 0.25:
                x = x + (imaginary_unit() * c) * b
            else:
                x = x + c * b
        acc[k] = acc.get(k, ctx.algebra.zero_element()) + x
    return LoopElement(ctx, acc)


def random_affine(rng, ctx, max_degree=6):
    return AffineElement(
        random_loop(rng, ctx, max_degree),
        Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
        Fraction(rng.randint(-2, 2), rng.randint(1, 2)),
    )


def _report(suite, config, checks):
    return {
        "suite": suite,
        "config": config,
        "checks": checks,
        "passed": sum(1 for c in checks if c["pass"]),
        "failed": sum(1 for c in checks if not c["pass"]),
        "ok": all(c["pass"] for c in checks),
    }


def verify_jacobi(algebra="sl2C", N=6, trials=100, seed=7):
    """Exact Jacobi identity for the hat bracket on seeded random triples."""
    rng = random.Random(seed)
    checks = []
    for twist_name, sigma, D in _twists_for(algebra):
        ctx = TwistContext(builtin_algebra(algebra), sigma, D=D)
        bad = 0
        witness = None
        for _ in range(trials):
            x, y, z = (random_affine(rng, ctx, N) for _ in range(3))
            total = (
                affine_bracket(x, affine_bracket(y, z))
                + affine_bracket(y, affine_bracket(z, x))
                + affine_bracket(z, affine_bracket(x, y))
            )
            if total:
                bad += 1
                witness = witness or repr(total)
        checks.append({
            "name": f"jacobi:{algebra}:{twist_name}",
            "pass": bad == 0,
            "trials": trials,
            "witness": witness,
        })
    return _report("jacobi", {"algebra": algebra, "N": N, "trials": trials, "seed": seed}, checks)


def verify_cocycle(algebra="sl2C", N=6, trials=100, seed=11):
    """Antisymmetry and the 2-cocycle identity, exact, on seeded triples."""
    rng = random.Random(seed)
    checks = []
    for twist_name, sigma, D in _twists_for(algebra):
        ctx = TwistContext(builtin_algebra(algebra), sigma, D=D)
        anti_bad = cocyc_bad = 0
        witness = None
        for _ in range(trials):
            u, v, w = (random_loop(rng, ctx, N) for _ in range(3))
            if cocycle(u, v) != -cocycle(v, u):
                anti_bad += 1
                witness = witness or "antisymmetry"
            total = (
                cocycle(loop_bracket(u, v), w)
                + cocycle(loop_bracket(v, w), u)
                + cocycle(loop_bracket(w, u), v)
            )
            if total:
                cocyc_bad += 1
                witness = witness or "cocycle identity"
        checks.append({
            "name": f"cocycle:{algebra}:{twist_name}",
            "pass": anti_bad == 0 and cocyc_bad == 0,
            "trials": trials,
            "witness": witness,
        })
    return _report("cocycle", {"algebra": algebra, "N": N, "trials": trials, "seed": seed}, checks)


def first_kind_catalog(algebra, q):
    """All catalog first-kind invariant triples (p, rho, beta_label) of order q."""
    cat = catalog_for(algebra)
    out = []
    for p in range(0, q // 2 + 1):
        r = math.gcd(p, q)
        for entry in cat.rho_reps(r):
            for label, _rep in cat.pi0_class_reps(entry.name):
                out.append((p, entry.name, label))
    return out


def verify_roundtrip(algebra="sl2C", qs=(2, 3, 4, 6), bound=48):
    """Realize/extract round trips with a brute-force order oracle."""
    checks = []
    for q in qs:
        for p, rho, label in first_kind_catalog(algebra, q):
            sigma, phi = realize_first(algebra, p, rho, label, q)
            closed = standard_order(phi, bound)
            brute = loop_map_order(phi.apply, phi.source, bound)
            inv = extract_invariant_first(phi, q)
            ok = (closed == q and brute == q
                  and inv.as_tuple() == (p, rho, label) and inv.q == q)
            checks.append({
                "name": f"first:{algebra}:q={q}:p={p}:rho={rho}:beta={label}",
                "pass": ok,
                "order_closed_form": closed,
                "order_bruteforce": brute,
                "extracted": [inv.p, inv.rho, inv.beta_class],
            })
    cat = catalog_for(algebra)
    pairs = list(cat.second_kind_pairs())
    if algebra == "sl2C":
        pairs += [("tau", "tau"), ("tau", "id")]
    for pn, mn in pairs:
        sigma, phi = realize_second(algebra, pn, mn)
        plus = cat.named(pn)
        expected = 2 * automorphism_order(plus.power(2))
        order = standard_order(phi, bound)
        brute = loop_map_order(phi.apply, phi.source, bound)
        inv = extract_invariant_second(phi, order)
        _swap_sigma, swap_phi = realize_second(algebra, mn, pn)
        swap_inv = extract_invariant_second(swap_phi, order)
        ok = (order == expected and brute == expected
              and inv.plus == plus and inv.minus == cat.named(mn)
              and invariants_equal_second(inv, swap_inv))
        checks.append({
            "name": f"second:{algebra}:plus={pn}:minus={mn}",
            "pass": ok,
            "order": order,
            "order_bruteforce": brute,
            "swap_equivalent": invariants_equal_second(inv, swap_inv),
        })
    return _report("roundtrip", {"algebra": algebra, "qs": list(qs), "bound": bound}, checks)


def golden_first_kind(algebra):
    if algebra != "sl2C":
        return None
    return {(1, 0, "id", "id"), (2, 0, "mu", "id"), (2, 0, "mu", "tau"), (2, 1, "id", "id")}


def golden_second_kind(algebra):
    if algebra != "sl2C":
        return None
    return {("id", "id"), ("mu", "mu"), ("mu", "id")}


def verify_realforms(algebra="sl2C", N=4):
    """Golden catalog: enumeration, invariants, distinctness, truncation checks."""
    forms = enumerate_real_forms(algebra)
    checks = []
    if algebra == "sl2C":
        checks.append({"name": "count:7", "pass": len(forms) == 7, "count": len(forms)})
        first = {(f.invariant.q, f.invariant.p, f.invariant.rho, f.invariant.beta_class)
                 for f in forms if f.kind in ("compact", "1a", "1b")}
        second = {(f.invariant.plus_name, f.invariant.minus_name) for f in forms if f.kind == "2"}
        checks.append({"name": "golden:first-kind", "pass": first == golden_first_kind(algebra),
                       "found": sorted(map(list, first))})
        checks.append({"name": "golden:second-kind", "pass": second == golden_second_kind(algebra),
                       "found": sorted(map(list, second))})
    distinct = all(
        real_forms_equivalent(a, b) == (i == j)
        for i, a in enumerate(forms) for j, b in enumerate(forms)
    )
    checks.append({"name": "pairwise-distinct", "pass": distinct})
    for f in forms:
        report = verify_real_form(f, N)
        checks.append({
            "name": f"realform:{f.label}:N={N}",
            "pass": report["passed"],
            "basis_size": report["basis_size"],
            "witness": report["closure_witness"],
        })
    return _report("realforms", {"algebra": algebra, "N": N}, checks)


def verify_cartan(algebra="sl2C", N=3):
    """Cartan decompositions of every noncompact form at the truncation."""
    checks = []
    for f in enumerate_real_forms(algebra):
        if f.kind == "compact":
            continue
        dec = cartan_decomposition(f, N)
        report = verify_cartan_report(dec)
        checks.append({
            "name": f"cartan:{f.label}:N={N}",
            "pass": report["passed"],
            "dim_k": report["dim_k"],
            "dim_m": report["dim_m"],
        })
    return _report("cartan", {"algebra": algebra, "N": N}, checks)


def _exp_conjugator(ctx):
    i = imaginary_unit()
    alg = ctx.algebra
    h_idx = 1 if alg.name == "sl2C" else 6
    coords = [0] * alg.dim
    coords[h_idx] = 1
    x = alg.element(coords) * (i * Fraction(1, 2))
    if alg.name == "sl2C":
        curve = exp_curve(x, [Fraction(1), Fraction(0), Fraction(-1)])
    else:
        curve = exp_curve(x, [Fraction(1), Fraction(-1), Fraction(1, 2),
                              Fraction(-1, 2), Fraction(0)])
    return standard_automorphism(
        1, Fraction(0), ExpCurve(curve, FiniteAutomorphism.identity(alg)), ctx)


def verify_hat(algebra="sl2C", seed=13, trials=10):
    """Finite-order hat extensions of exp-conjugated involutions, with the
    wrong-constant negative control, plus center/derived-algebra checks."""
    rng = random.Random(seed)
    cat = catalog_for(algebra)
    checks = []
    involutions = ["tau", "mu"] if algebra == "sl2C" else ["theta", "mu"]
    for name in involutions:
        ctx = TwistContext(builtin_algebra(algebra), cat.named("id"), D=2)
        psi = _exp_conjugator(ctx)
        phi = conjugate(psi, pointwise(ctx, cat.named(name)))
        data = finite_order_extension(phi)
        order_ok = hat_order(data, bound=4) == 2
        pairs = [(random_affine(rng, ctx, 3), random_affine(rng, ctx, 3)) for _ in range(trials)]
        bracket_ok = hat_preserves_bracket(data, pairs)
        entry = {
            "name": f"hat-extension:{algebra}:{name}",
            "pass": order_ok and bracket_ok,
            "shadow_nonzero": bool(data.shadow),
        }
        if data.shadow:
            bad = extend_to_hat(phi, nu=0)
            control = hat_order(bad, bound=8)
            entry["negative_control_order"] = control
            entry["pass"] = entry["pass"] and control != 2
        checks.append(entry)
    for twist_name, sigma, D in _twists_for(algebra):
        ctx = TwistContext(builtin_algebra(algebra), sigma, D=D)
        report = center_and_derived_check(ctx, 3)
        checks.append({
            "name": f"center-derived:{algebra}:{twist_name}",
            "pass": report["passed"],
        })
    return _report("hat", {"algebra": algebra, "seed": seed, "trials": trials}, checks)


def verify_tau_r(algebra="sl2C", r=Fraction(2), trials=50, seed=17, bound=48):
    """Scaling maps: exact bracket homomorphism and unbounded order."""
    rng = random.Random(seed)
    cat = catalog_for(algebra)
    ctx = TwistContext(builtin_algebra(algebra), cat.named("id"), D=1)
    bad = 0
    for _ in range(trials):
        u, v = random_loop(rng, ctx), random_loop(rng, ctx)
        if tau_r_apply(r, loop_bracket(u, v)) != loop_bracket(tau_r_apply(r, u), tau_r_apply(r, v)):
            bad += 1
    composed = ComposedLoopMap((ScalingAutomorphism(Fraction(r)), identity_automorphism(ctx)))
    order = loop_map_order(composed.apply, ctx, bound)
    checks = [
        {"name": f"tau_r:homomorphism:r={r}", "pass": bad == 0, "trials": trials},
        {"name": f"tau_r:unbounded:r={r}", "pass": order is None, "order": order},
    ]
    return _report("tau_r", {"algebra": algebra, "r": str(r), "trials": trials,
                             "seed": seed, "bound": bound}, checks)


def verify_untwisting(seed=19, trials=6):
    """Exponential-curve isomorphism from the twisted onto the untwisted
    algebra: monodromy inverse to the twist, validity, exact brackets."""
    rng = random.Random(seed)
    alg = builtin_algebra("sl2C")
    cat = catalog_for("sl2C")
    ctx = TwistContext(alg, cat.named("tau"), D=2)
    i = imaginary_unit()
    x = alg.element([0, i * Fraction(1, 4), 0])
    curve = exp_curve(x, [Fraction(1, 2), Fraction(0), Fraction(-1, 2)])
    psi = standard_automorphism(1, Fraction(0),
                                ExpCurve(curve, FiniteAutomorphism.identity(alg)), ctx)
    monodromy_ok = psi.target.sigma.is_identity()
    all_ok = True
    for _ in range(trials):
        u, v = random_loop(rng, ctx, 4), random_loop(rng, ctx, 4)
        pu, pv = apply(psi, u), apply(psi, v)
        if not (validate(pu) and validate(pv)):
            all_ok = False
        if apply(psi, loop_bracket(u, v)) != loop_bracket(pu, pv):
            all_ok = False
    checks = [
        {"name": "untwist:monodromy", "pass": monodromy_ok},
        {"name": "untwist:validity-and-bracket", "pass": all_ok, "trials": trials},
    ]
    return _report("untwist", {"seed": seed, "trials": trials}, checks)


SUITES = {
    "jacobi": verify_jacobi,
    "cocycle": verify_cocycle,
    "roundtrip": verify_roundtrip,
    "realforms": verify_realforms,
    "cartan": verify_cartan,
    "hat": verify_hat,
}

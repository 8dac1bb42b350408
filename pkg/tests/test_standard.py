import random
from fractions import Fraction

import pytest

from kmforge.catalog import catalog_for
from kmforge.errors import (
    IncompatibleDataError,
    InvalidInputError,
    NotFirstKindError,
    OrderMismatchError,
    SquareMismatchError,
    TwistMismatchError,
)
from kmforge.field import imaginary_unit
from kmforge.invariants import (
    FirstKindInvariant,
    extract_invariant_first,
    extract_invariant_second,
    invariants_equal_first,
    invariants_equal_second,
    realize_first,
    realize_second,
)
from kmforge.liealg import FiniteAutomorphism, builtin_algebra, exp_ad, exp_curve
from kmforge.loop import (
    TwistContext,
    constant_loop,
    loop_bracket,
    single_term,
    validate,
)
from kmforge.standard import (
    ComposedLoopMap,
    ExpCurve,
    ScalingAutomorphism,
    apply,
    compose,
    conjugate,
    identity_automorphism,
    inverse,
    loop_map_order,
    pointwise,
    reflection,
    rotation,
    standard_automorphism,
    standard_order,
)

SL2 = builtin_algebra("sl2C")
E, H, F = SL2.basis_element(0), SL2.basis_element(1), SL2.basis_element(2)
CAT = catalog_for("sl2C")


def untwisted(D=1):
    return TwistContext(SL2, FiniteAutomorphism.identity(SL2), D=D)


def tau_context(D=2):
    return TwistContext(SL2, CAT.named("tau"), D=D)


def random_loop(rng, ctx, max_degree=4, terms=3):
    acc = {}
    for _ in range(terms):
        k = rng.randint(-max_degree, max_degree)
        basis = ctx.eigenbasis_for_exponent(k)
        if not basis:
            continue
        x = ctx.algebra.zero_element()
        for b in basis:
            x = x + Fraction(rng.randint(-2, 2), rng.randint(1, 2)) * b
        acc[k] = acc.get(k, ctx.algebra.zero_element()) + x
    return type(constant_loop(ctx, H))(ctx, acc)


def half_h_exp_curve(scale=Fraction(1, 2)):
    i = imaginary_unit()
    X = SL2.element([0, i * scale, 0])
    return exp_curve(X, [2 * scale, Fraction(0), -2 * scale])


def test_apply_shift_example():
    ctx = untwisted()
    phi = rotation(ctx, Fraction(1, 2))
    assert apply(phi, single_term(ctx, 1, H)) == single_term(ctx, 1, -1 * H)


def test_apply_identity():
    ctx = tau_context()
    phi = identity_automorphism(ctx)
    rng = random.Random(0)
    u = random_loop(rng, ctx)
    assert apply(phi, u) == u


def test_apply_reflection():
    ctx = untwisted()
    phi = reflection(ctx)
    assert apply(phi, single_term(ctx, 1, H)) == single_term(phi.target, -1, H)


def test_apply_rejects_invalid_input():
    ctx = tau_context()
    phi = identity_automorphism(ctx)
    with pytest.raises(InvalidInputError):
        apply(phi, single_term(ctx, 1, H))  # h is not in the -1 eigenspace


def test_compose_matches_pointwise_application():
    rng = random.Random(1)
    ctx = tau_context()
    maps = [
        rotation(ctx, Fraction(1, 3)),
        pointwise(ctx, CAT.named("tau")),
        reflection(ctx),
    ]
    for a in maps:
        for b in maps:
            if b.target != a.source:
                continue
            ab = compose(a, b)
            for _ in range(4):
                u = random_loop(rng, b.source)
                assert apply(ab, u) == apply(a, apply(b, u))


def test_compose_exp_curves_with_pointwise_check():
    ctx = tau_context()
    psi = standard_automorphism(
        1, Fraction(0), ExpCurve(half_h_exp_curve(), FiniteAutomorphism.identity(SL2)), ctx)
    rng = random.Random(2)
    phi = pointwise(ctx, CAT.named("tau"))
    comp = compose(psi, phi)
    for _ in range(4):
        u = random_loop(rng, ctx)
        assert apply(comp, u) == apply(psi, apply(phi, u))
    inv = inverse(psi)
    for _ in range(4):
        u = random_loop(rng, ctx)
        assert apply(inv, apply(psi, u)) == u


def test_rotation_composed_thrice_is_identity():
    ctx = untwisted()
    phi = rotation(ctx, Fraction(1, 3))
    assert standard_order(phi) == 3
    cubed = compose(phi, compose(phi, phi))
    rng = random.Random(3)
    u = random_loop(rng, ctx)
    assert apply(cubed, u) == u


def test_reflection_squares_to_identity():
    ctx = untwisted()
    phi = reflection(ctx)
    sq = compose(phi, inverse(phi))
    rng = random.Random(4)
    u = random_loop(rng, ctx)
    assert apply(sq, u) == u


def test_standard_order_examples():
    assert standard_order(rotation(untwisted(), Fraction(1, 3))) == 3
    # u(t) -> tau(u(t + pi)) on the untwisted algebra: phi0^2 sigma = tau^2 = id
    phi = pointwise(untwisted(2), CAT.named("tau"), shift=Fraction(1, 2))
    assert standard_order(phi) == 2


def test_standard_order_second_kind():
    sigma, phi = realize_second("sl2C", "mu", "id")
    assert standard_order(phi) == 2


def test_tau_r_composed_map_is_unbounded():
    ctx = untwisted()
    composed = ComposedLoopMap((ScalingAutomorphism(Fraction(2)), identity_automorphism(ctx)))
    assert loop_map_order(composed.apply, ctx, 48) is None


def test_apply_preserves_bracket_constant_and_exp():
    rng = random.Random(5)
    ctx = tau_context()
    maps = [
        pointwise(ctx, CAT.named("tau"), shift=Fraction(1, 2)),
        reflection(ctx),
        standard_automorphism(
            1, Fraction(0), ExpCurve(half_h_exp_curve(), FiniteAutomorphism.identity(SL2)), ctx),
        pointwise(ctx, CAT.omega()),  # antilinear compact conjugation
    ]
    for phi in maps:
        for _ in range(5):
            u, v = random_loop(rng, ctx), random_loop(rng, ctx)
            lhs = apply(phi, loop_bracket(u, v))
            rhs = loop_bracket(apply(phi, u), apply(phi, v))
            assert lhs == rhs
            assert validate(apply(phi, u))


def test_exp_curve_isomorphism_untwists_tau():
    # psi_t = e^{ad tX} with psi_{2pi} = tau^{-1} maps L(g,tau) onto L(g,id)
    ctx = tau_context()
    curve = half_h_exp_curve(Fraction(1, 4))  # X = (i/4) h, monodromy tau
    psi = standard_automorphism(
        1, Fraction(0), ExpCurve(curve, FiniteAutomorphism.identity(SL2)), ctx)
    assert psi.target.sigma.is_identity()
    rng = random.Random(6)
    for _ in range(6):
        u, v = random_loop(rng, ctx), random_loop(rng, ctx)
        pu, pv = apply(psi, u), apply(psi, v)
        assert validate(pu) and validate(pv)
        assert apply(psi, loop_bracket(u, v)) == loop_bracket(pu, pv)


def test_realize_first_golden_examples():
    sigma, phi = realize_first("sl2C", 0, "mu", "id", 2)
    assert sigma.is_identity()
    inv = extract_invariant_first(phi)
    assert inv == FirstKindInvariant("sl2C", 2, 0, "mu", "id")

    sigma, phi = realize_first("sl2C", 0, "mu", "tau", 2)
    assert sigma == CAT.named("tau")
    inv = extract_invariant_first(phi)
    assert inv == FirstKindInvariant("sl2C", 2, 0, "mu", "tau")

    sigma, phi = realize_first("sl2C", 1, "id", "id", 2)
    assert sigma.is_identity()
    assert phi.shift == Fraction(1, 2)
    inv = extract_invariant_first(phi)
    assert inv == FirstKindInvariant("sl2C", 2, 1, "id", "id")


def test_identity_invariant():
    phi = identity_automorphism(untwisted())
    inv = extract_invariant_first(phi)
    assert inv == FirstKindInvariant("sl2C", 1, 0, "id", "id")


def test_beta_outside_class_rep_lands_on_class_label():
    # beta = tau with rho = id: the centralizer of id is connected, so the
    # component class of tau collapses to the identity label
    sigma, phi = realize_first("sl2C", 1, "id", "tau", 2)
    assert sigma.is_identity()  # tau^2
    inv = extract_invariant_first(phi)
    assert inv.beta_class == "id"
    other = extract_invariant_first(realize_first("sl2C", 1, "id", "id", 2)[1])
    assert invariants_equal_first(inv, other)


def test_first_kind_round_trip_all_catalog():
    for q in (2, 3, 4, 6):
        for p in range(0, q // 2 + 1):
            import math

            r = math.gcd(p, q)
            for entry in CAT.rho_reps(r):
                for label, beta in CAT.pi0_class_reps(entry.name):
                    sigma, phi = realize_first("sl2C", p, entry.name, label, q)
                    assert standard_order(phi) == q
                    inv = extract_invariant_first(phi, q)
                    assert inv == FirstKindInvariant("sl2C", q, p, entry.name, label)


def test_normalization_flip():
    for q, p in ((4, 3), (3, 2), (6, 5)):
        import math

        r = math.gcd(p, q)
        [entry] = CAT.rho_reps(r)[:1]
        _, phi_hi = realize_first("sl2C", p, entry.name, "id", q)
        _, phi_lo = realize_first("sl2C", q - p, entry.name, "id", q)
        inv_hi = extract_invariant_first(phi_hi, q)
        inv_lo = extract_invariant_first(phi_lo, q)
        assert inv_hi == inv_lo
        assert inv_hi.p == q - p if 2 * p > q else p


def test_second_kind_round_trips():
    pairs = [("id", "id"), ("tau", "tau"), ("tau", "id"), ("mu", "mu"), ("mu", "id")]
    for pn, mn in pairs:
        sigma, phi = realize_second("sl2C", pn, mn)
        assert standard_order(phi) == 2
        inv = extract_invariant_second(phi, 2)
        assert inv.plus == CAT.named(pn)
        assert inv.minus == CAT.named(mn)


def test_second_kind_swap_and_conjugation_equivalence():
    _, phi_a = realize_second("sl2C", "tau", "id")
    _, phi_b = realize_second("sl2C", "id", "tau")
    inv_a = extract_invariant_second(phi_a, 2)
    inv_b = extract_invariant_second(phi_b, 2)
    assert invariants_equal_second(inv_a, inv_b)
    # [tau, tau] and [mu, mu] are conjugate pairs
    inv_tt = extract_invariant_second(realize_second("sl2C", "tau", "tau")[1], 2)
    inv_mm = extract_invariant_second(realize_second("sl2C", "mu", "mu")[1], 2)
    assert invariants_equal_second(inv_tt, inv_mm)
    inv_ii = extract_invariant_second(realize_second("sl2C", "id", "id")[1], 2)
    assert not invariants_equal_second(inv_tt, inv_ii)
    assert not invariants_equal_second(inv_mm, extract_invariant_second(
        realize_second("sl2C", "mu", "id")[1], 2))


def test_second_kind_conjugated_partner():
    # [mu, mu] vs [mu, g mu g^{-1}] for g in the diagonal torus
    g = exp_ad(half_h_exp_curve(), Fraction(1, 8))
    mu = CAT.named("mu")
    conj_mu = g.compose(mu).compose(g.inverse())
    assert conj_mu != mu
    _, phi_a = realize_second("sl2C", "mu", "mu")
    sigma, phi_b = realize_second("sl2C", mu, conj_mu)
    inv_a = extract_invariant_second(phi_a, 2)
    inv_b = extract_invariant_second(phi_b, 2)
    assert invariants_equal_second(inv_a, inv_b)


def test_extract_errors():
    with pytest.raises(NotFirstKindError):
        extract_invariant_first(reflection(untwisted()))
    with pytest.raises(OrderMismatchError):
        extract_invariant_first(rotation(untwisted(), Fraction(1, 3)), q=2)


def test_realize_errors():
    with pytest.raises(IncompatibleDataError):
        realize_first("sl2C", 0, "id", "id", 2)  # rho order must be gcd(0,2)=2
    with pytest.raises(SquareMismatchError):
        realize_second("sl2C", "mu", "r3")


def test_twist_mismatch_on_compose():
    a = identity_automorphism(untwisted())
    b = identity_automorphism(tau_context())
    with pytest.raises(TwistMismatchError):
        compose(a, b)


def test_conjugation_by_exp_curve_keeps_invariant():
    ctx = untwisted(2)
    psi = standard_automorphism(
        1, Fraction(0), ExpCurve(half_h_exp_curve(), FiniteAutomorphism.identity(SL2)), ctx)
    phi = pointwise(ctx, CAT.named("mu"))
    moved = conjugate(psi, phi)
    assert not moved.is_constant
    assert standard_order(moved) == 2


def test_incompatible_curve_denominator_rejected():
    from kmforge.errors import IncompatibleDenominatorError
    from kmforge.field import imaginary_unit as iu

    ctx = untwisted(2)
    X = SL2.element([0, iu() * Fraction(1, 6), 0])  # ad eigenvalues +-i/3
    curve = exp_curve(X, [Fraction(1, 3), Fraction(0), Fraction(-1, 3)])
    with pytest.raises(IncompatibleDenominatorError):
        standard_automorphism(
            1, Fraction(0), ExpCurve(curve, FiniteAutomorphism.identity(SL2)), ctx)


def test_antilinear_standard_json_round_trip():
    from kmforge import jsonio

    ctx = tau_context()
    theta = pointwise(ctx, CAT.omega())
    back = jsonio.dec_standard(jsonio.enc_standard(theta))
    assert back.antilinear
    u = single_term(ctx, 1, E)
    assert apply(back, u) == apply(theta, u)


def test_inverse_of_shifted_exp_curve():
    ctx = tau_context()
    psi = standard_automorphism(
        1, Fraction(1, 3), ExpCurve(half_h_exp_curve(), FiniteAutomorphism.identity(SL2)), ctx)
    inv = inverse(psi)
    rng = random.Random(11)
    for _ in range(5):
        u = random_loop(rng, ctx)
        assert apply(inv, apply(psi, u)) == u
        assert apply(psi, apply(inv, u)) == u


def test_second_kind_extraction_normalizes_shift():
    from kmforge.standard import rotation as _rotation

    sigma, phi = realize_second("sl2C", "mu", "id")
    rot = _rotation(phi.source, Fraction(1, 4))
    moved = compose(rot, compose(phi, inverse(rot)))
    assert moved.shift != 0
    inv_moved = extract_invariant_second(moved, 2)
    inv_orig = extract_invariant_second(phi, 2)
    assert invariants_equal_second(inv_moved, inv_orig)


def test_compose_corner_cases_against_pointwise():
    ctx = tau_context()
    psi = standard_automorphism(
        1, Fraction(0), ExpCurve(half_h_exp_curve(), FiniteAutomorphism.identity(SL2)), ctx)
    psi_shift = standard_automorphism(
        1, Fraction(1, 4), ExpCurve(half_h_exp_curve(), FiniteAutomorphism.identity(SL2)), ctx)
    rng = random.Random(21)
    cases = [
        (pointwise(psi.target, CAT.omega()), psi),     # antilinear after exp
        (reflection(psi.target), psi),                 # orientation flip after exp
        (psi, pointwise(ctx, CAT.omega())),            # exp after antilinear
        (psi_shift, psi),                              # shifted exp after exp
    ]
    for outer, inner in cases:
        comp = compose(outer, inner)
        for _ in range(5):
            u = random_loop(rng, inner.source)
            assert apply(comp, u) == apply(outer, apply(inner, u))


def test_non_commuting_curve_composition_falls_back():
    from kmforge.errors import CurveCompositionError
    from kmforge.liealg import exp_curve as _exp_curve

    ctx = untwisted(2)
    rot_curve = _exp_curve(E - F, [Fraction(2), Fraction(0), Fraction(-2)])
    a = standard_automorphism(
        1, Fraction(0), ExpCurve(half_h_exp_curve(), FiniteAutomorphism.identity(SL2)), ctx)
    b = standard_automorphism(
        1, Fraction(0), ExpCurve(rot_curve, FiniteAutomorphism.identity(SL2)), ctx)
    with pytest.raises(CurveCompositionError):
        compose(a, b)
    # a map whose square leaves the supported family: the base moves the
    # generator off its own centralizer, so order falls back to the
    # spanning-slice iteration
    _entry, alpha = CAT.match(CAT.named("tau"))
    assert not alpha.is_identity()
    phi = standard_automorphism(
        1, Fraction(0), ExpCurve(half_h_exp_curve(), alpha), ctx)
    assert standard_order(phi, 8) is None


def test_rank_two_round_trips():
    from kmforge.verify import verify_roundtrip

    report = verify_roundtrip("sl3C", qs=(2, 3))
    assert report["ok"], [c for c in report["checks"] if not c["pass"]]

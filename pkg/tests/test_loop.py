import random
from fractions import Fraction

import pytest

from kmforge.catalog import catalog_for
from kmforge.errors import ContextMismatchError, InvalidInputError
from kmforge.field import imaginary_unit
from kmforge.liealg import FiniteAutomorphism, builtin_algebra
from kmforge.loop import (
    LoopElement,
    TwistContext,
    cocycle,
    constant_loop,
    loop_bracket,
    loop_derivative,
    loop_inner,
    single_term,
    tau_r_apply,
    validate,
    zero_loop,
)

SL2 = builtin_algebra("sl2C")
E, H, F = SL2.basis_element(0), SL2.basis_element(1), SL2.basis_element(2)


def untwisted(D=1):
    return TwistContext(SL2, FiniteAutomorphism.identity(SL2), D=D)


def tau_context():
    return TwistContext(SL2, catalog_for("sl2C").named("tau"), D=2)


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
        if rng.random() < 0.3:
            x = imaginary_unit() * x
        if k in acc:
            acc[k] = acc[k] + x
        else:
            acc[k] = x
    return LoopElement(ctx, acc)


def test_validate_examples():
    assert validate(constant_loop(untwisted(), H))
    ctx = tau_context()
    assert validate(single_term(ctx, 1, E))  # tau(e) = -e = zeta_2^1 e
    assert not validate(single_term(ctx, 1, H))  # tau(h) = h != -h


def test_validate_random_constructions():
    rng = random.Random(4)
    for ctx in (untwisted(), tau_context()):
        for _ in range(10):
            assert validate(random_loop(rng, ctx))


def test_loop_bracket_examples():
    ctx = untwisted()
    assert loop_bracket(single_term(ctx, 1, H), single_term(ctx, 1, E)) == single_term(ctx, 2, 2 * E)
    assert loop_bracket(single_term(ctx, 1, E), single_term(ctx, -1, F)) == constant_loop(ctx, H)
    rng = random.Random(5)
    u = random_loop(rng, ctx)
    assert not loop_bracket(u, u)


def test_loop_bracket_jacobi():
    rng = random.Random(6)
    for ctx in (untwisted(), tau_context()):
        for _ in range(8):
            u, v, w = (random_loop(rng, ctx) for _ in range(3))
            total = (
                loop_bracket(u, loop_bracket(v, w))
                + loop_bracket(v, loop_bracket(w, u))
                + loop_bracket(w, loop_bracket(u, v))
            )
            assert not total


def test_context_mismatch():
    with pytest.raises(ContextMismatchError):
        loop_bracket(constant_loop(untwisted(), H), constant_loop(tau_context(), H))


def test_loop_derivative_examples():
    ctx = untwisted()
    i = imaginary_unit()
    assert not loop_derivative(constant_loop(ctx, H))
    assert loop_derivative(single_term(ctx, 1, H)) == single_term(ctx, 1, i * H)
    ctx2 = tau_context()
    assert loop_derivative(single_term(ctx2, 1, E)) == single_term(ctx2, 1, (i * Fraction(1, 2)) * E)


def test_derivative_is_a_derivation():
    rng = random.Random(7)
    ctx = tau_context()
    for _ in range(8):
        u, v = random_loop(rng, ctx), random_loop(rng, ctx)
        lhs = loop_derivative(loop_bracket(u, v))
        rhs = loop_bracket(loop_derivative(u), v) + loop_bracket(u, loop_derivative(v))
        assert lhs == rhs


def test_loop_inner_examples():
    ctx = untwisted()
    assert loop_inner(constant_loop(ctx, H), constant_loop(ctx, H)) == 8
    assert loop_inner(single_term(ctx, 1, H), constant_loop(ctx, H)) == 0
    assert loop_inner(single_term(ctx, 1, H), single_term(ctx, -1, H)) == 8


def test_cocycle_examples():
    ctx = untwisted()
    i = imaginary_unit()
    u = single_term(ctx, 1, H)
    v = single_term(ctx, -1, H)
    assert cocycle(u, v) == 8 * i
    assert cocycle(u, u) == 0
    assert cocycle(constant_loop(ctx, H), constant_loop(ctx, E)) == 0


def test_cocycle_antisymmetry_and_identity():
    rng = random.Random(8)
    for ctx in (untwisted(), tau_context()):
        for _ in range(8):
            u, v, w = (random_loop(rng, ctx) for _ in range(3))
            assert cocycle(u, v) == -cocycle(v, u)
            total = (
                cocycle(loop_bracket(u, v), w)
                + cocycle(loop_bracket(v, w), u)
                + cocycle(loop_bracket(w, u), v)
            )
            assert not total


def test_tau_r_examples():
    ctx = untwisted()
    u = single_term(ctx, 1, H)
    assert tau_r_apply(Fraction(1), u) == u
    assert tau_r_apply(Fraction(2), u) == single_term(ctx, 1, 2 * H)
    assert tau_r_apply(Fraction(2), single_term(ctx, -1, H)) == single_term(ctx, -1, Fraction(1, 2) * H)
    with pytest.raises(InvalidInputError):
        tau_r_apply(Fraction(-1), u)


def test_tau_r_is_bracket_homomorphism():
    rng = random.Random(9)
    ctx = tau_context()
    for _ in range(8):
        u, v = random_loop(rng, ctx), random_loop(rng, ctx)
        assert tau_r_apply(2, loop_bracket(u, v)) == loop_bracket(tau_r_apply(2, u), tau_r_apply(2, v))


def test_twist_preserved_by_operations():
    rng = random.Random(10)
    ctx = tau_context()
    for _ in range(5):
        u, v = random_loop(rng, ctx), random_loop(rng, ctx)
        assert validate(loop_bracket(u, v))
        assert validate(loop_derivative(u))
        assert validate(tau_r_apply(Fraction(3, 2), u))


def test_context_requires_multiple_of_order():
    with pytest.raises(InvalidInputError):
        TwistContext(SL2, catalog_for("sl2C").named("tau"), D=3)


def test_zero_loop():
    assert not zero_loop(untwisted())
    assert zero_loop(untwisted()).degree() == 0

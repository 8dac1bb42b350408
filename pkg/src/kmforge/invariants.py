"""Classification invariants of finite-order standard automorphisms.

First kind (epsilon = +1): a triple (p, rho, [beta]) with 0 <= p <= q/2,
rho a catalog representative of order gcd(p, q), and [beta] a component
class inside the centralizer of rho.  Second kind (epsilon = -1): a pair
of automorphisms with a common square, taken modulo swapping and coupled
conjugation.  Extraction uses the closed forms available for constant
curves; realization inverts it and lands on a loop algebra whose twist is
built from the data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .catalog import catalog_for
from .errors import (
    ClassifierUnavailableError,
    IncompatibleDataError,
    InvalidInputError,
    NotFiniteOrderError,
    NotFirstKindError,
    NotSecondKindError,
    OrderMismatchError,
    SquareMismatchError,
)
from .liealg import FiniteAutomorphism, automorphism_order
from .loop import TwistContext
from .standard import (
    compose,
    conjugate,
    pointwise,
    reflection,
    rotation,
    standard_order,
)


@dataclass(frozen=True)
class FirstKindInvariant:
    algebra: str
    q: int
    p: int
    rho: str
    beta_class: str

    def as_tuple(self):
        return (self.p, self.rho, self.beta_class)


@dataclass(frozen=True)
class SecondKindInvariant:
    algebra: str
    q: int
    plus: FiniteAutomorphism
    minus: FiniteAutomorphism
    plus_name: str | None = None
    minus_name: str | None = None


def _resolve(cat, auto_or_name):
    if isinstance(auto_or_name, str):
        return cat.named(auto_or_name)
    return auto_or_name


def _bezout(p1, q1):
    """l, m with l*p1 + m*q1 = 1 and 0 <= l < q1 (q1 >= 1, gcd = 1)."""
    if q1 == 1:
        return 0, 1
    l = pow(p1 % q1, -1, q1)
    m = (1 - l * p1) // q1
    return l, m


def extract_invariant_first(phi, q=None, bound=48):
    """Invariant (p, rho, [beta]) of a first-kind constant-curve map."""
    if phi.epsilon != 1:
        raise NotFirstKindError("map is of the second kind")
    if not phi.is_constant:
        raise InvalidInputError("extraction needs a constant curve; quasiconjugate first")
    order = standard_order(phi, bound)
    if order is None:
        raise NotFiniteOrderError(f"no finite order within bound {bound}")
    if q is not None and q != order:
        raise OrderMismatchError(f"declared order {q} but computed {order}")
    q = order
    p = phi.shift * q
    if p.denominator != 1:
        raise InvalidInputError("shift is not a multiple of 2*pi/q")
    p = int(p)
    if 2 * p > q:
        flipped = conjugate(reflection(phi.source), phi)
        return extract_invariant_first(flipped, q, bound)
    cat = catalog_for(phi.source.algebra.name)
    r = math.gcd(p, q)  # r = q when p = 0
    p1, q1 = p // r, q // r
    l, m = _bezout(p1, q1)
    base = phi.curve.base
    sigma = phi.source.sigma
    rho_t = base.power(q1).compose(sigma.power(p1))
    lam = base.power(l).compose(sigma.power(-m))
    entry, alpha = cat.match(rho_t, bound)
    beta_bar = alpha.inverse().compose(lam.inverse()).compose(alpha)
    label = cat.component_class(entry.name, beta_bar)
    return FirstKindInvariant(phi.source.algebra.name, q, p, entry.name, label)


def realize_first(algebra_name, p, rho, beta, q, D=None):
    """Representative automorphism with the given first-kind invariant.

    Returns (sigma, phi) with sigma = rho^l beta^{q'} and
    phi: u(t) -> phi_0(u(t + 2*pi*p/q)) for phi_0 = rho^m beta^{-p'}.
    """
    cat = catalog_for(algebra_name)
    rho = _resolve(cat, rho)
    beta = _resolve(cat, beta)
    if not 0 <= p <= q:
        raise IncompatibleDataError("p must lie in [0, q]")
    r = math.gcd(p, q)
    if automorphism_order(rho) != r:
        raise IncompatibleDataError(f"rho must have order gcd(p,q) = {r}")
    if rho.compose(beta) != beta.compose(rho):
        raise IncompatibleDataError("beta must commute with rho")
    p1, q1 = p // r, q // r
    l, m = _bezout(p1, q1)
    sigma = rho.power(l).compose(beta.power(q1))
    phi0 = rho.power(m).compose(beta.power(-p1))
    if not phi0.power(q).compose(sigma.power(p)).is_identity():
        raise IncompatibleDataError("phi_0^q sigma^p is not the identity")
    ctx = TwistContext(algebra_name_to_table(algebra_name), sigma, D=D)
    phi = pointwise(ctx, phi0, epsilon=1, shift=Fraction(p, q))
    if phi.target != ctx:
        raise IncompatibleDataError("realization does not preserve its twist")
    return sigma, phi


def algebra_name_to_table(name):
    from .liealg import builtin_algebra

    return builtin_algebra(name)


def extract_invariant_second(phi, q=None, bound=48):
    """Invariant [phi_plus, phi_minus] of a second-kind constant-curve map."""
    if phi.epsilon != -1:
        raise NotSecondKindError("map is of the first kind")
    if not phi.is_constant:
        raise InvalidInputError("extraction needs a constant curve; quasiconjugate first")
    if phi.shift:
        rot = rotation(phi.source, phi.shift / 2)
        return extract_invariant_second(conjugate(rot, phi), q, bound)
    order = standard_order(phi, bound)
    if order is None:
        raise NotFiniteOrderError(f"no finite order within bound {bound}")
    if q is not None and q != order:
        raise OrderMismatchError(f"declared order {q} but computed {order}")
    q = order
    base = phi.curve.base
    sigma = phi.source.sigma
    plus = base
    minus = base.compose(sigma.inverse())
    if plus.power(2) != minus.power(2):
        raise SquareMismatchError("extracted pair has no common square")
    if automorphism_order(plus.power(2), bound) != q // 2:
        raise OrderMismatchError("common square does not have order q/2")
    cat = catalog_for(phi.source.algebra.name)
    return SecondKindInvariant(
        phi.source.algebra.name, q, plus, minus,
        _catalog_name(cat, plus), _catalog_name(cat, minus))


def _catalog_name(cat, auto):
    for entry in cat.entries.values():
        if entry.auto == auto:
            return entry.name
    return None


def realize_second(algebra_name, plus, minus, D=None, bound=48):
    """Representative u(t) -> phi_plus(u(-t)) on the twist phi_minus^{-1} phi_plus."""
    cat = catalog_for(algebra_name)
    plus = _resolve(cat, plus)
    minus = _resolve(cat, minus)
    if plus.power(2) != minus.power(2):
        raise SquareMismatchError("phi_plus^2 must equal phi_minus^2")
    sigma = minus.inverse().compose(plus)
    if automorphism_order(sigma, bound) is None:
        raise NotFiniteOrderError("twist phi_minus^{-1} phi_plus has no finite order in bound")
    ctx = TwistContext(algebra_name_to_table(algebra_name), sigma, D=D)
    if sigma.compose(plus).compose(sigma) != plus:
        raise IncompatibleDataError("pair violates the reflection periodicity")
    phi = pointwise(ctx, plus, epsilon=-1, shift=Fraction(0))
    return sigma, phi


def invariants_equal_first(a, b):
    if not isinstance(a, FirstKindInvariant) or not isinstance(b, FirstKindInvariant):
        raise InvalidInputError("first-kind invariants expected")
    return (a.algebra == b.algebra and a.q == b.q and a.p == b.p
            and a.rho == b.rho and a.beta_class == b.beta_class)


def invariants_equal_second(a, b, bound=48):
    """Equality modulo the generated relation (swap, coupled conjugation)."""
    if not isinstance(a, SecondKindInvariant) or not isinstance(b, SecondKindInvariant):
        raise InvalidInputError("second-kind invariants expected")
    if a.algebra != b.algebra or a.q != b.q:
        return False
    cat = catalog_for(a.algebra)
    square = a.plus.power(2)
    for c_plus, c_minus in ((b.plus, b.minus), (b.minus, b.plus)):
        if a.plus == c_plus and a.minus == c_minus:
            return True
        if square.is_identity():
            # for both built-ins the involution centralizers meet every
            # component, so coupled conjugation reduces to factorwise conjugacy
            if (cat.conjugate_in_aut(a.plus, c_plus, bound)
                    and cat.conjugate_in_aut(a.minus, c_minus, bound)):
                return True
    if not square.is_identity():
        raise ClassifierUnavailableError(
            "second-kind coupling beyond involution pairs is decided only by equality")
    return False


def invariant_of_descriptor(kind, algebra_name, data, bound=48):
    """Invariant of one of the three involution shapes, via realize+extract."""
    if kind == "1a":
        sigma, phi = realize_first(algebra_name, 0, data["rho"], data["beta"], 2)
        return extract_invariant_first(phi, 2, bound)
    if kind == "1b":
        sigma, phi = realize_first(algebra_name, 1, "id", data["phi"], 2)
        return extract_invariant_first(phi, 2, bound)
    if kind == "2":
        sigma, phi = realize_second(algebra_name, data["plus"], data["minus"])
        return extract_invariant_second(phi, 2, bound)
    raise InvalidInputError(f"unknown involution kind {kind!r}")

"""Twisted algebraic loop algebras.

A loop element is a finite sum of terms x * e^{i*k*t/D} with x in the
complexified algebra and k an integer on the 1/D exponent lattice.  The twist
condition ties each exponent to an eigenspace of the twist automorphism:
sigma(u_k) = zeta_D^k * u_k.  All operations are exact and term-wise.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import ContextMismatchError, InvalidInputError, NotFiniteOrderError
from .field import CyclotomicNumber, imaginary_unit, zeta_power
from .liealg import (
    automorphism_order,
    bracket,
    eigenspace_decomposition,
    killing_form,
)


class TwistContext:
    """Algebra + linear finite-order twist + exponent denominator D."""

    def __init__(self, algebra, sigma, D=None, order_bound=48):
        if sigma.antilinear:
            raise InvalidInputError("twist automorphism must be linear")
        if sigma.algebra is not algebra:
            raise InvalidInputError("twist lives over a different algebra")
        order = automorphism_order(sigma, order_bound)
        if order is None:
            raise NotFiniteOrderError("twist automorphism has no finite order within bound")
        self.algebra = algebra
        self.sigma = sigma
        self.twist_order = order
        self.D = order if D is None else int(D)
        if self.D % order:
            raise InvalidInputError(f"D={self.D} must be a multiple of the twist order {order}")
        self._eigenbases = None

    def __eq__(self, other):
        if not isinstance(other, TwistContext):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.D == other.D
            and self.sigma == other.sigma
        )

    __hash__ = None

    def __repr__(self):
        return f"TwistContext({self.algebra.name}, order {self.twist_order}, D={self.D})"

    def term_ok(self, k, x):
        """Twist condition for one term: sigma(x) = zeta_D^k x."""
        if not x:
            return True
        return self.sigma.apply(x) == zeta_power(self.D, k) * x

    def eigenbasis_for_exponent(self, k):
        """Basis of the sigma-eigenspace attached to exponent residue k."""
        if self._eigenbases is None:
            eig = eigenspace_decomposition(self.sigma, order=self.twist_order)
            table = {}
            for r in range(self.D):
                lam = zeta_power(self.D, r)
                table[r] = ()
                for val, basis in eig:
                    if val == lam:
                        table[r] = basis
            self._eigenbases = table
        return self._eigenbases[k % self.D]


class LoopElement:
    """Finite Laurent element of a twisted loop algebra."""

    __slots__ = ("context", "terms")

    def __init__(self, context, terms):
        object.__setattr__(self, "context", context)
        clean = {}
        for k, x in (terms.items() if isinstance(terms, dict) else terms):
            if x:
                clean[int(k)] = clean[int(k)] + x if int(k) in clean else x
        clean = {k: x for k, x in clean.items() if x}
        object.__setattr__(self, "terms", tuple(sorted(clean.items())))

    def __setattr__(self, name, value):
        raise AttributeError("LoopElement is immutable")

    def terms_dict(self):
        return dict(self.terms)

    def support(self):
        return [k for k, _ in self.terms]

    def degree(self):
        return max((abs(k) for k, _ in self.terms), default=0)

    def _check(self, other):
        if self.context != other.context:
            raise ContextMismatchError("loop elements from different twist contexts")

    def __add__(self, other):
        self._check(other)
        acc = self.terms_dict()
        for k, x in other.terms:
            acc[k] = acc[k] + x if k in acc else x
        return LoopElement(self.context, acc)

    def __neg__(self):
        return LoopElement(self.context, {k: -x for k, x in self.terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return LoopElement(self.context, {k: x * scalar for k, x in self.terms})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self.context == other.context and not (self - other)

    __hash__ = None

    def __repr__(self):
        D = self.context.D
        parts = [f"({x!r})*e^{{{k}it/{D}}}" for k, x in self.terms]
        return " + ".join(parts) if parts else "0"


def constant_loop(context, x):
    return LoopElement(context, {0: x})


def single_term(context, k, x):
    return LoopElement(context, {k: x})


def zero_loop(context):
    return LoopElement(context, {})


def validate(u):
    """True iff every term satisfies the twist eigenspace condition."""
    return all(u.context.term_ok(k, x) for k, x in u.terms)


def loop_bracket(u, v):
    """Pointwise bracket, computed as an exponent convolution."""
    u._check(v)
    acc = {}
    for k1, x in u.terms:
        for k2, y in v.terms:
            w = bracket(x, y)
            if w:
                k = k1 + k2
                acc[k] = acc[k] + w if k in acc else w
    return LoopElement(u.context, acc)


def loop_derivative(u):
    """Term k picks up the factor i*k/D."""
    D = u.context.D
    i_unit = imaginary_unit()
    out = {}
    for k, x in u.terms:
        if k:
            out[k] = (i_unit * Fraction(k, D)) * x
    return LoopElement(u.context, out)


def loop_inner(u, v):
    """Mean over a period of the pointwise Killing form: sum of kappa(u_k, v_{-k})."""
    u._check(v)
    vd = v.terms_dict()
    acc = CyclotomicNumber.zero()
    for k, x in u.terms:
        if -k in vd:
            acc = acc + killing_form(x, vd[-k])
    return acc


def cocycle(u, v):
    """The central 2-cocycle: inner product of u' with v."""
    return loop_inner(loop_derivative(u), v)


def tau_r_apply(r, u):
    """Scaling map of the algebraic category: term k picks up r^k."""
    r = Fraction(r)
    if r <= 0:
        raise InvalidInputError("scaling parameter must be positive")
    return LoopElement(u.context, {k: x * (r ** k) for k, x in u.terms})


def context_level(context, *shift_denominators):
    """A field level absorbing the context and any reparametrization shifts."""
    return math.lcm(4, context.D, *[context.D * d for d in shift_denominators])

"""The two-dimensional extension of a twisted loop algebra.

Elements carry a loop part plus central and derivation coordinates.  The
bracket adds the central cocycle term and lets the derivation coordinate act
by the loop derivative; brackets never produce a derivation component.
Loop-algebra automorphisms extend to the hat algebra by the closed formulas
for the scaling constants, the shadow loop, and the central correction, with
exactly one choice of the free constant giving a finite-order extension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContextMismatchError, NotFiniteOrderError, OrderMismatchError
from .field import CyclotomicNumber, field_degree
from .linalg import in_span, rref
from .loop import (
    LoopElement,
    cocycle,
    constant_loop,
    loop_bracket,
    loop_derivative,
    loop_inner,
    zero_loop,
)
from .standard import ConstantCurve, apply, standard_order


class AffineElement:
    """Loop part plus central (c) and derivation (d) coordinates."""

    __slots__ = ("loop", "c_coef", "d_coef")

    def __init__(self, loop, c_coef=0, d_coef=0):
        object.__setattr__(self, "loop", loop)
        object.__setattr__(self, "c_coef", _scal(c_coef))
        object.__setattr__(self, "d_coef", _scal(d_coef))

    def __setattr__(self, name, value):
        raise AttributeError("AffineElement is immutable")

    @property
    def context(self):
        return self.loop.context

    def __add__(self, other):
        self._check(other)
        return AffineElement(self.loop + other.loop, self.c_coef + other.c_coef,
                             self.d_coef + other.d_coef)

    def __neg__(self):
        return AffineElement(-self.loop, -self.c_coef, -self.d_coef)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        return AffineElement(self.loop * scalar, self.c_coef * scalar, self.d_coef * scalar)

    __rmul__ = __mul__

    def _check(self, other):
        if self.context != other.context:
            raise ContextMismatchError("affine elements from different contexts")

    def __bool__(self):
        return bool(self.loop) or bool(self.c_coef) or bool(self.d_coef)

    def __eq__(self, other):
        if not isinstance(other, AffineElement):
            return NotImplemented
        return self.context == other.context and not (self - other)

    __hash__ = None

    def __repr__(self):
        return f"AffineElement(loop={self.loop!r}, c={self.c_coef!r}, d={self.d_coef!r})"


def _scal(x):
    if isinstance(x, CyclotomicNumber):
        return x
    return CyclotomicNumber.from_rational(Fraction(x))


def from_loop(u):
    return AffineElement(u)


def c_element(context):
    return AffineElement(zero_loop(context), c_coef=1)


def d_element(context):
    return AffineElement(zero_loop(context), d_coef=1)


def affine_bracket(x, y):
    """[u + a c + b d, v + a' c + b' d] = [u,v]_0 + b v' - b' u' + w(u,v) c."""
    x._check(y)
    loop_part = loop_bracket(x.loop, y.loop)
    if x.d_coef:
        loop_part = loop_part + loop_derivative(y.loop) * x.d_coef
    if y.d_coef:
        loop_part = loop_part - loop_derivative(x.loop) * y.d_coef
    return AffineElement(loop_part, cocycle(x.loop, y.loop), 0)


@dataclass(frozen=True)
class HatExtensionData:
    """Extension of a standard automorphism to the hat algebra.

    Scaling constants on c and d both equal epsilon; ``shadow`` is the loop
    whose adjoint action matches the curve's logarithmic derivative (zero for
    constant curves, -epsilon * X for exponential ones); ``nu`` is the free
    central coordinate of the image of d.
    """

    phi: object  # StandardAutomorphism
    shadow: LoopElement
    nu: CyclotomicNumber

    @property
    def epsilon(self):
        return self.phi.epsilon

    def alpha(self, u):
        """Central correction of a loop image: -epsilon * (phi u, shadow)."""
        return loop_inner(apply(self.phi, u), self.shadow) * (-self.epsilon)

    def apply(self, x):
        """Hat action: c and d scale by epsilon, d picks up the shadow loop."""
        if x.context != self.phi.source:
            raise ContextMismatchError("element is not in the source context")
        loop_part = apply(self.phi, x.loop)
        c_part = x.c_coef * self.epsilon + self.alpha(x.loop)
        d_part = x.d_coef * self.epsilon
        if x.d_coef:
            loop_part = loop_part + self.shadow * x.d_coef
            c_part = c_part + self.nu * x.d_coef
        return AffineElement(loop_part, c_part, d_part)


def extend_to_hat(phi, nu=0):
    """Hat extension of a standard automorphism with free central constant."""
    if isinstance(phi.curve, ConstantCurve):
        shadow = zero_loop(phi.target)
    else:
        x = phi.curve.data.generator
        shadow = constant_loop(phi.target, x * Fraction(-phi.epsilon))
    return HatExtensionData(phi, shadow, _scal(nu))


def finite_order_extension(phi, bound=48, probe_depth=None):
    """The unique finite-order hat extension: nu = -eps*|shadow|^2/2.

    The order of the extension is verified by iterating the hat action on c,
    d, and a spanning slice of loops; it must equal the order of phi.
    """
    q = standard_order(phi, bound)
    if q is None:
        raise NotFiniteOrderError("map has no finite order within the bound")
    data = extend_to_hat(phi, 0)
    nu = loop_inner(data.shadow, data.shadow) * Fraction(-phi.epsilon, 2)
    data = HatExtensionData(phi, data.shadow, nu)
    order = hat_order(data, bound=q, probe_depth=probe_depth)
    if order != q:
        raise OrderMismatchError(f"hat extension has order {order}, expected {q}")
    return data


def hat_order(data, bound=48, probe_depth=None):
    """Order of the hat action on {c, d} + a spanning slice, or None."""
    ctx = data.phi.source
    if data.phi.source != data.phi.target:
        raise ContextMismatchError("order needs matching source and target")
    depth = probe_depth if probe_depth is not None else 2 * ctx.D
    tests = [c_element(ctx), d_element(ctx)]
    for k in range(-depth, depth + 1):
        for b in ctx.eigenbasis_for_exponent(k):
            tests.append(AffineElement(LoopElement(ctx, {k: b})))
    current = [data.apply(t) for t in tests]
    for n in range(1, bound + 1):
        if all(c == t for c, t in zip(current, tests)):
            return n
        current = [data.apply(c) for c in current]
    return None


def hat_preserves_bracket(data, pairs):
    """Check the extension against the affine bracket on given element pairs."""
    for x, y in pairs:
        lhs = data.apply(affine_bracket(x, y))
        rhs = affine_bracket(data.apply(x), data.apply(y))
        if lhs != rhs:
            return False
    return True


def center_and_derived_check(context, N):
    """Desk-scale check that brackets avoid d, c is central, and d is not
    spanned by brackets of the degree <= N slice."""
    slice_elems = [c_element(context), d_element(context)]
    loops = []
    for k in range(-N, N + 1):
        for b in context.eigenbasis_for_exponent(k):
            loops.append(AffineElement(LoopElement(context, {k: b})))
    slice_elems.extend(loops)
    results = []
    c_ok = True
    d_free = True
    c = c_element(context)
    for x in slice_elems:
        if affine_bracket(c, x) or affine_bracket(x, c):
            c_ok = False
    for i, x in enumerate(slice_elems):
        for y in slice_elems[i:]:
            w = affine_bracket(x, y)
            if w.d_coef:
                d_free = False
            if w:
                results.append(w)
    lev = math.lcm(4, *[cf.level for w in results for cf in _affine_scalars(w)])
    support = sorted({k for w in results for k in w.loop.support()} | {0})
    flat = [_flatten_affine(w, support, lev) for w in results]
    rr, piv = rref(flat)
    d_vec = _flatten_affine(d_element(context), support, lev)
    d_in_derived = in_span(rr, piv, d_vec)
    return {
        "context": repr(context),
        "N": N,
        "bracket_count": len(results),
        "no_d_component": d_free,
        "c_central": c_ok,
        "d_outside_derived_span": not d_in_derived,
        "passed": d_free and c_ok and not d_in_derived,
    }


def _affine_scalars(w):
    for _, x in w.loop.terms:
        yield from x.coords
    yield w.c_coef
    yield w.d_coef


def _flatten_affine(w, support, lev):
    n = field_degree(lev)
    d = w.context.algebra.dim
    out = []
    terms = w.loop.terms_dict()
    zero = [Fraction(0)] * n
    for k in support:
        if k in terms:
            for cf in terms[k].coords:
                out.extend(cf.lift(lev).coords)
        else:
            for _ in range(d):
                out.extend(zero)
    out.extend(w.c_coef.lift(lev).coords)
    out.extend(w.d_coef.lift(lev).coords)
    return out

"""Finite-dimensional simple Lie algebras by structure constants.

Tables hold exact rational structure constants in a fixed basis; elements
carry cyclotomic coordinate vectors over the table, so one table serves both
a real form and its complexification.  Automorphisms are matrices plus an
antilinearity flag: an antilinear map acts by conjugating coordinates first,
then applying the matrix.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction

from . import linalg
from .errors import (
    AlgebraMismatchError,
    IncompatibleDenominatorError,
    NotFiniteOrderError,
    UnknownAlgebraError,
)
from .field import CyclotomicNumber, field_degree, imaginary_unit, zeta_of, zeta_power

BUILTIN_NAMES = ("sl2C", "sl3C", "su2", "su3")


class LieAlgebraTable:
    """Simple Lie algebra with exact structure constants and Killing form."""

    def __init__(self, name, structure, basis_names, base_field_tag, compact_flag):
        self.name = name
        self.dim = len(structure)
        self.structure = structure  # structure[i][j][k] = coefficient of x_k in [x_i, x_j]
        self.basis_names = tuple(basis_names)
        self.base_field_tag = base_field_tag
        self.compact_flag = compact_flag
        self.killing = self._killing_matrix()
        self._validate()

    def _killing_matrix(self):
        d = self.dim
        out = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = Fraction(0)
                for a in range(d):
                    for b in range(d):
                        if self.structure[i][a][b] and self.structure[j][b][a]:
                            acc += self.structure[i][a][b] * self.structure[j][b][a]
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def _validate(self):
        d = self.dim
        s = self.structure
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    if s[i][j][k] != -s[j][i][k]:
                        raise ValueError(f"{self.name}: antisymmetry fails at {i},{j},{k}")
        for i in range(d):
            for j in range(d):
                for k in range(d):
                    for n in range(d):
                        acc = Fraction(0)
                        for m in range(d):
                            acc += s[j][k][m] * s[i][m][n]
                            acc += s[k][i][m] * s[j][m][n]
                            acc += s[i][j][m] * s[k][m][n]
                        if acc:
                            raise ValueError(f"{self.name}: Jacobi fails at {i},{j},{k}")
        for i in range(d):
            for j in range(d):
                if self.killing[i][j] != self.killing[j][i]:
                    raise ValueError(f"{self.name}: Killing form not symmetric")
        if _determinant([list(r) for r in self.killing]) == 0:
            raise ValueError(f"{self.name}: Killing form degenerate")
        if self.compact_flag and not _negative_definite(self.killing):
            raise ValueError(f"{self.name}: compact table must have negative definite Killing form")

    def basis_element(self, i, level=4):
        coords = [CyclotomicNumber.zero(level) for _ in range(self.dim)]
        coords[i] = CyclotomicNumber.one(level)
        return AlgebraElement(self, tuple(coords))

    def zero_element(self, level=4):
        return AlgebraElement(self, tuple(CyclotomicNumber.zero(level) for _ in range(self.dim)))

    def element(self, coords):
        return AlgebraElement(self, tuple(_as_scalar(c) for c in coords))

    def basis(self, level=4):
        return [self.basis_element(i, level) for i in range(self.dim)]

    def __repr__(self):
        return f"LieAlgebraTable({self.name}, dim={self.dim})"


def _as_scalar(c):
    if isinstance(c, CyclotomicNumber):
        return c
    return CyclotomicNumber.from_rational(Fraction(c))


def _determinant(m):
    n = len(m)
    m = [row[:] for row in m]
    det = Fraction(1)
    for c in range(n):
        pivot = None
        for r in range(c, n):
            if m[r][c]:
                pivot = r
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        inv = 1 / m[c][c]
        for r in range(c + 1, n):
            if m[r][c]:
                f = m[r][c] * inv
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def _negative_definite(matrix):
    n = len(matrix)
    for k in range(1, n + 1):
        minor = [[matrix[i][j] for j in range(k)] for i in range(k)]
        if (-1) ** k * _determinant(minor) <= 0:
            return False
    return True


class AlgebraElement:
    """Coordinate vector over a LieAlgebraTable, scalars in Q(zeta_L)."""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra, coords):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "coords", tuple(coords))
        if len(self.coords) != algebra.dim:
            raise ValueError("coordinate length does not match algebra dimension")

    def __setattr__(self, name, value):
        raise AttributeError("AlgebraElement is immutable")

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatchError("elements live over different algebras")

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.algebra, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.coords))

    def __mul__(self, scalar):
        scalar = _as_scalar(scalar) if not isinstance(scalar, CyclotomicNumber) else scalar
        return AlgebraElement(self.algebra, tuple(scalar * a for a in self.coords))

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.coords)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.algebra is other.algebra and all(a == b for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def conj(self):
        return AlgebraElement(self.algebra, tuple(a.conj() for a in self.coords))

    def __repr__(self):
        names = self.algebra.basis_names
        terms = [f"({c})*{n}" for c, n in zip(self.coords, names) if c]
        return " + ".join(terms) if terms else "0"


def bracket(x, y):
    """Lie bracket from the structure constants."""
    x._check(y)
    alg = x.algebra
    d = alg.dim
    out = [CyclotomicNumber.zero() for _ in range(d)]
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            row = alg.structure[i][j]
            prod = xi * yj
            for k in range(d):
                if row[k]:
                    out[k] = out[k] + row[k] * prod
    return AlgebraElement(alg, tuple(out))


def killing_form(x, y):
    """Killing form, extended bilinearly over the cyclotomic scalars."""
    x._check(y)
    kappa = x.algebra.killing
    acc = CyclotomicNumber.zero()
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        for j, yj in enumerate(y.coords):
            if yj and kappa[i][j]:
                acc = acc + xi * yj * kappa[i][j]
    return acc


def ad_matrix(x):
    """Matrix of ad(x) in the table basis (columns are [x, e_j])."""
    alg = x.algebra
    d = alg.dim
    cols = []
    for j in range(d):
        col = [CyclotomicNumber.zero() for _ in range(d)]
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            row = alg.structure[i][j]
            for k in range(d):
                if row[k]:
                    col[k] = col[k] + xi * row[k]
        cols.append(col)
    return [[cols[j][i] for j in range(d)] for i in range(d)]


class FiniteAutomorphism:
    """(Anti)linear bracket-preserving map, stored as matrix + flag."""

    __slots__ = ("algebra", "matrix", "antilinear", "declared_order")

    def __init__(self, algebra, matrix, antilinear=False, declared_order=None):
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "matrix", tuple(tuple(_as_scalar(x) for x in row) for row in matrix))
        object.__setattr__(self, "antilinear", bool(antilinear))
        object.__setattr__(self, "declared_order", declared_order)
        if len(self.matrix) != algebra.dim or any(len(r) != algebra.dim for r in self.matrix):
            raise ValueError("matrix shape does not match algebra dimension")

    def __setattr__(self, name, value):
        raise AttributeError("FiniteAutomorphism is immutable")

    @classmethod
    def identity(cls, algebra):
        d = algebra.dim
        rows = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
        return cls(algebra, rows, antilinear=False, declared_order=1)

    @classmethod
    def from_basis_images(cls, algebra, images, antilinear=False, declared_order=None):
        """Build from the images of the basis vectors (given as elements)."""
        cols = [img.coords for img in images]
        d = algebra.dim
        rows = [[cols[j][i] for j in range(d)] for i in range(d)]
        return cls(algebra, rows, antilinear=antilinear, declared_order=declared_order)

    def apply(self, x):
        if x.algebra is not self.algebra:
            raise AlgebraMismatchError("element is over a different algebra")
        coords = [c.conj() for c in x.coords] if self.antilinear else list(x.coords)
        return AlgebraElement(self.algebra, tuple(linalg.mat_vec(self.matrix, coords)))

    def compose(self, other):
        """self after other."""
        if other.algebra is not self.algebra:
            raise AlgebraMismatchError("automorphisms over different algebras")
        m2 = other.matrix
        if self.antilinear:
            m2 = [[x.conj() for x in row] for row in m2]
        return FiniteAutomorphism(
            self.algebra,
            linalg.mat_mul(self.matrix, m2),
            antilinear=self.antilinear != other.antilinear,
        )

    def inverse(self):
        inv = linalg.invert([list(r) for r in self.matrix])
        if self.antilinear:
            inv = [[x.conj() for x in row] for row in inv]
        return FiniteAutomorphism(self.algebra, inv, antilinear=self.antilinear)

    def power(self, n):
        if n < 0:
            return self.inverse().power(-n)
        acc = FiniteAutomorphism.identity(self.algebra)
        for _ in range(n):
            acc = self.compose(acc)
        return acc

    def is_identity(self):
        if self.antilinear:
            return False
        d = self.algebra.dim
        return all(self.matrix[i][j] == (1 if i == j else 0) for i in range(d) for j in range(d))

    def __eq__(self, other):
        if not isinstance(other, FiniteAutomorphism):
            return NotImplemented
        return (
            self.algebra is other.algebra
            and self.antilinear == other.antilinear
            and all(a == b for ra, rb in zip(self.matrix, other.matrix) for a, b in zip(ra, rb))
        )

    __hash__ = None

    def __repr__(self):
        kind = "antilinear" if self.antilinear else "linear"
        return f"FiniteAutomorphism({self.algebra.name}, {kind})"


def check_automorphism(auto):
    """True iff the map is invertible and preserves the bracket."""
    alg = auto.algebra
    d = alg.dim
    try:
        linalg.invert([list(r) for r in auto.matrix])
    except ValueError:
        return False
    cols = [AlgebraElement(alg, tuple(auto.matrix[i][j] for i in range(d))) for j in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            lhs = auto.apply(bracket(alg.basis_element(i), alg.basis_element(j)))
            rhs = bracket(cols[i], cols[j])
            if lhs != rhs:
                return False
    return True


def automorphism_order(auto, bound=48):
    """Least n <= bound with auto^n = id, else None."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    acc = auto
    for n in range(1, bound + 1):
        if acc.is_identity():
            return n
        acc = auto.compose(acc)
    return None


def eigenspace_decomposition(auto, order=None, bound=48):
    """Eigenspaces of a linear finite-order map; eigenvalues are zeta_n^k."""
    if auto.antilinear:
        raise NotFiniteOrderError("eigenspace decomposition needs a linear map")
    n = order or auto.declared_order or automorphism_order(auto, bound)
    if n is None:
        raise NotFiniteOrderError(f"no order within bound {bound}")
    alg = auto.algebra
    d = alg.dim
    lev = math.lcm(4, n, *[x.level for row in auto.matrix for x in row])
    matrix = [[x.lift(lev) for x in row] for row in auto.matrix]
    zero = CyclotomicNumber.zero(lev)
    one = CyclotomicNumber.one(lev)
    out = []
    total = 0
    for k in range(n):
        lam = zeta_power(n, k).lift(lev)
        shifted = [
            [matrix[i][j] - (lam if i == j else zero) for j in range(d)]
            for i in range(d)
        ]
        basis = linalg.kernel_basis(shifted, zero, one)
        if basis:
            out.append((lam, tuple(AlgebraElement(alg, tuple(v)) for v in basis)))
            total += len(basis)
    if total != d:
        raise NotFiniteOrderError("eigenspaces do not span; map is not of the declared order")
    return out


def fixed_subalgebra(auto, bound=48):
    """Basis of the fixed-point set; rational-span basis for antilinear maps."""
    if automorphism_order(auto, bound) is None:
        raise NotFiniteOrderError(f"no order within bound {bound}")
    alg = auto.algebra
    d = alg.dim
    if not auto.antilinear:
        lev = math.lcm(4, *[x.level for row in auto.matrix for x in row])
        zero = CyclotomicNumber.zero(lev)
        one = CyclotomicNumber.one(lev)
        shifted = [
            [auto.matrix[i][j].lift(lev) - (one if i == j else zero) for j in range(d)]
            for i in range(d)
        ]
        basis = [AlgebraElement(alg, tuple(v)) for v in linalg.kernel_basis(shifted, zero, one)]
        _check_bracket_closed_field(basis)
        return basis
    lev = math.lcm(4, *[x.level for row in auto.matrix for x in row])
    n = field_degree(lev)
    big = []
    for i in range(d):
        for j in range(n):
            z = zeta_power(lev, j)
            e = [CyclotomicNumber.zero(lev)] * d
            e[i] = z
            image = auto.apply(AlgebraElement(alg, tuple(e)))
            col = []
            for ip in range(d):
                col.extend(image.coords[ip].lift(lev).coords)
            big.append(col)
    size = d * n
    mat = [[big[c][r] - (1 if r == c else 0) for c in range(size)] for r in range(size)]
    kern = linalg.kernel_basis(mat, Fraction(0), Fraction(1))
    basis = []
    for v in kern:
        coords = []
        for i in range(d):
            coords.append(CyclotomicNumber(lev, v[i * n:(i + 1) * n]))
        basis.append(AlgebraElement(alg, tuple(coords)))
    _check_bracket_closed_rational(basis, lev)
    return basis


def _check_bracket_closed_field(basis):
    if not basis:
        return
    alg = basis[0].algebra
    rows = [list(b.coords) for b in basis]
    rr, piv = linalg.rref(rows)
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            w = bracket(basis[i], basis[j])
            if w and not linalg.in_span(rr, piv, list(w.coords)):
                raise ArithmeticError("fixed set is not bracket closed")


def _flatten_rational(elem, lev):
    out = []
    for c in elem.coords:
        out.extend(c.lift(lev).coords)
    return out


def _check_bracket_closed_rational(basis, lev):
    if not basis:
        return
    rows = [_flatten_rational(b, lev) for b in basis]
    rr, piv = linalg.rref(rows)
    for i in range(len(basis)):
        for j in range(i, len(basis)):
            w = bracket(basis[i], basis[j])
            if w and not linalg.in_span(rr, piv, _flatten_rational(w, lev)):
                raise ArithmeticError("fixed set is not bracket closed over Q")


class ExpCurveData:
    """Generator X with the eigenspace data of ad(X).

    ad(X) acts on the eigenspace attached to rational q as multiplication by
    i*q; the eigenspaces must span the algebra.
    """

    def __init__(self, generator, eigenpairs):
        self.generator = generator
        self.eigenpairs = tuple((Fraction(q), tuple(vs)) for q, vs in eigenpairs)
        alg = generator.algebra
        d = alg.dim
        cols = []
        self._labels = []
        for q, vs in self.eigenpairs:
            for v in vs:
                cols.append(v)
                self._labels.append(q)
        if len(cols) != d:
            raise ValueError("eigenspaces do not span the algebra")
        lev = math.lcm(4, *[c.level for v in cols for c in v.coords])
        cmat = [[cols[j].coords[i].lift(lev) for j in range(d)] for i in range(d)]
        self._cmat = cmat
        self._cinv = linalg.invert(cmat)
        self.validate()

    def validate(self):
        adX = ad_matrix(self.generator)
        i_unit = imaginary_unit()
        span_rows = {}
        for q, vs in self.eigenpairs:
            for v in vs:
                img = AlgebraElement(v.algebra, tuple(linalg.mat_vec(adX, list(v.coords))))
                if img != (i_unit * q) * v:
                    raise ValueError(f"ad(X) does not act as i*{q} on a supplied vector")
            span_rows[q] = linalg.rref([list(c for c in v.coords) for v in vs])
        qset = {q for q, _ in self.eigenpairs}
        for q1, vs1 in self.eigenpairs:
            for q2, vs2 in self.eigenpairs:
                for v1 in vs1:
                    for v2 in vs2:
                        w = bracket(v1, v2)
                        if not w:
                            continue
                        if q1 + q2 not in qset:
                            raise ValueError("bracket escapes the eigenspace grading")
                        rr, piv = span_rows[q1 + q2]
                        if not linalg.in_span(rr, piv, list(w.coords)):
                            raise ValueError("bracket escapes the eigenspace grading")

    def decompose(self, x):
        """Split x into its ad(X)-eigencomponents, keyed by q."""
        y = linalg.mat_vec(self._cinv, list(x.coords))
        parts = {}
        d = x.algebra.dim
        for idx, q in enumerate(self._labels):
            if not y[idx]:
                continue
            coords = [y[idx] * self._cmat[i][idx] for i in range(d)]
            if q in parts:
                parts[q] = parts[q] + AlgebraElement(x.algebra, tuple(coords))
            else:
                parts[q] = AlgebraElement(x.algebra, tuple(coords))
        return parts

    def scaled(self, c):
        c = Fraction(c)
        return ExpCurveData(self.generator * c, [(q * c, vs) for q, vs in self.eigenpairs])

    def transformed(self, auto):
        """Push the curve data through an automorphism of the algebra."""
        sign = -1 if auto.antilinear else 1
        pairs = [(q * sign, tuple(auto.apply(v) for v in vs)) for q, vs in self.eigenpairs]
        return ExpCurveData(auto.apply(self.generator), pairs)

    def __repr__(self):
        qs = sorted(q for q, _ in self.eigenpairs)
        return f"ExpCurveData(qs={qs})"


def exp_curve(x, candidate_qs):
    """Eigenspace data for ad(x) computed from candidate rational eigenvalues."""
    alg = x.algebra
    adX = ad_matrix(x)
    lev = math.lcm(4, *[c.level for row in adX for c in row])
    i_unit = imaginary_unit(lev)
    d = alg.dim
    zero = CyclotomicNumber.zero(lev)
    one = CyclotomicNumber.one(lev)
    pairs = []
    seen = set()
    for q in candidate_qs:
        q = Fraction(q)
        if q in seen:
            continue
        seen.add(q)
        lam = i_unit * q
        shifted = [
            [adX[i][j].lift(lev) - (lam if i == j else zero) for j in range(d)]
            for i in range(d)
        ]
        basis = linalg.kernel_basis(shifted, zero, one)
        if basis:
            pairs.append((q, tuple(AlgebraElement(alg, tuple(v)) for v in basis)))
    return ExpCurveData(x, pairs)


def exp_ad(data, s, lattice=None):
    """The automorphism e^{ad tX} at t = 2*pi*s, evaluated exactly.

    When ``lattice`` is given, every eigenvalue q must satisfy q*lattice in Z,
    so that exponent bookkeeping on the 1/lattice grid stays integral.
    """
    s = Fraction(s)
    if lattice is not None:
        for q, _ in data.eigenpairs:
            if (q * lattice).denominator != 1:
                raise IncompatibleDenominatorError(
                    f"eigenvalue {q} does not fit exponent denominator {lattice}")
    alg = data.generator.algebra
    d = alg.dim
    scaled_cols = []
    for idx, q in enumerate(data._labels):
        z = zeta_of(q * s)
        scaled_cols.append([z * data._cmat[i][idx] for i in range(d)])
    cd = [[scaled_cols[j][i] for j in range(d)] for i in range(d)]
    m = linalg.mat_mul(cd, data._cinv)
    return FiniteAutomorphism(alg, m, antilinear=False)


# -- built-in tables --------------------------------------------------------


def _mat(rows, level=4):
    return tuple(tuple(_entry(x, level) for x in row) for row in rows)


def _entry(x, level):
    if isinstance(x, CyclotomicNumber):
        return x.lift(level)
    if x == "i":
        return imaginary_unit(level)
    if x == "-i":
        return -imaginary_unit(level)
    return CyclotomicNumber.from_rational(Fraction(x), level)


def _commutator(a, b):
    m = len(a)
    prod1 = [[sum((a[i][k] * b[k][j] for k in range(m)), CyclotomicNumber.zero()) for j in range(m)]
             for i in range(m)]
    prod2 = [[sum((b[i][k] * a[k][j] for k in range(m)), CyclotomicNumber.zero()) for j in range(m)]
             for i in range(m)]
    return tuple(tuple(prod1[i][j] - prod2[i][j] for j in range(m)) for i in range(m))


def _flatten_matrix(mat):
    out = []
    for row in mat:
        for x in row:
            x4 = x.lift(4) if x.level != 4 else x
            out.extend(x4.coords)
    return out


def _structure_from_matrices(basis_mats):
    d = len(basis_mats)
    columns = [_flatten_matrix(m) for m in basis_mats]
    solver = [[columns[j][r] for j in range(d)] for r in range(len(columns[0]))]
    structure = []
    for i in range(d):
        row_i = []
        for j in range(d):
            comm = _commutator(basis_mats[i], basis_mats[j])
            sol = linalg.solve(solver, _flatten_matrix(comm))
            if sol is None:
                raise ValueError("commutator leaves the span of the basis")
            row_i.append(tuple(Fraction(c) for c in sol))
        structure.append(tuple(row_i))
    return tuple(structure)


def _e(m, i, j):
    return [[1 if (r, c) == (i, j) else 0 for c in range(m)] for r in range(m)]


def _mat_sum(*pairs):
    """Linear combination of matrices given as (coeff, matrix) pairs."""
    m = len(pairs[0][1])
    acc = [[CyclotomicNumber.zero() for _ in range(m)] for _ in range(m)]
    for coeff, mat in pairs:
        c = _entry(coeff, 4)
        for r in range(m):
            for s in range(m):
                acc[r][s] = acc[r][s] + c * _entry(mat[r][s], 4)
    return tuple(tuple(row) for row in acc)


@functools.cache
def builtin_algebra(name):
    """Validated built-in table; names: sl2C, sl3C, su2, su3."""
    if name == "sl2C":
        e, h, f = _e(2, 0, 1), [[1, 0], [0, -1]], _e(2, 1, 0)
        mats = [_mat(e), _mat(h), _mat(f)]
        return LieAlgebraTable("sl2C", _structure_from_matrices(mats),
                               ("e", "h", "f"), "complex", False)
    if name == "su2":
        e, f, h = _e(2, 0, 1), _e(2, 1, 0), [[1, 0], [0, -1]]
        mats = [
            _mat_sum((1, e), (-1, f)),          # e - f
            _mat_sum(("i", e), ("i", f)),       # i(e + f)
            _mat_sum(("i", h)),                 # i h
        ]
        return LieAlgebraTable("su2", _structure_from_matrices(mats),
                               ("u1", "u2", "u3"), "real", True)
    if name == "sl3C":
        names = ("e12", "e13", "e23", "e21", "e31", "e32", "h1", "h2")
        mats = [
            _mat(_e(3, 0, 1)), _mat(_e(3, 0, 2)), _mat(_e(3, 1, 2)),
            _mat(_e(3, 1, 0)), _mat(_e(3, 2, 0)), _mat(_e(3, 2, 1)),
            _mat_sum((1, _e(3, 0, 0)), (-1, _e(3, 1, 1))),
            _mat_sum((1, _e(3, 1, 1)), (-1, _e(3, 2, 2))),
        ]
        return LieAlgebraTable("sl3C", _structure_from_matrices(mats),
                               names, "complex", False)
    if name == "su3":
        names = ("a12", "a13", "a23", "b12", "b13", "b23", "c1", "c2")
        mats = []
        for (i, j) in ((0, 1), (0, 2), (1, 2)):
            mats.append(_mat_sum((1, _e(3, i, j)), (-1, _e(3, j, i))))
        for (i, j) in ((0, 1), (0, 2), (1, 2)):
            mats.append(_mat_sum(("i", _e(3, i, j)), ("i", _e(3, j, i))))
        mats.append(_mat_sum(("i", _e(3, 0, 0)), ("-i", _e(3, 1, 1))))
        mats.append(_mat_sum(("i", _e(3, 1, 1)), ("-i", _e(3, 2, 2))))
        return LieAlgebraTable("su3", _structure_from_matrices(mats),
                               names, "real", True)
    raise UnknownAlgebraError(f"unknown algebra {name!r}; built-ins: {BUILTIN_NAMES}")

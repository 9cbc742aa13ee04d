"""The scalar-times-derivation family B(x, y) = g(y) F(x).

Here g is a rational polynomial function of the frozen argument and F a
linear map. Such a map is a right biderivation iff F is a derivation
(given g not identically zero: a vanishing g makes B the zero map, which
is a right biderivation no matter what F is). The family is closed under
the right bracket, with

    rhd(B1, B2) = (g1 g2, [F1, F2]),

and it integrates: for a derivation F, s -> exp(sF) is a one-parameter
curve of automorphisms whose derivative at 0, scaled by g(y), recovers
B(x, y). `exp_curve_check` verifies that numerically with central
differences; it is the only floating-point code in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .algebras import Algebra
from .brackets import MultiIndex, PolyRightMap, monomial_value, rhd
from .derivations import commutator, is_derivation
from .linalg import Matrix, Vector, basis_vector

_ZERO = Fraction(0)
_ONE = Fraction(1)


class ScalarPoly:
    """Polynomial function Q^n -> Q with rational coefficients.

    Stored sparsely as multi-index -> coefficient; zero coefficients are
    never kept.
    """

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping[MultiIndex, Fraction]):
        clean: dict[MultiIndex, Fraction] = {}
        for a, v in coeffs.items():
            if len(a) != dim or any(e < 0 for e in a):
                raise ValueError(f"bad multi-index {a} for dim {dim}")
            v = Fraction(v)
            if v:
                clean[tuple(a)] = v
        self.dim = dim
        self.coeffs = clean

    @classmethod
    def zero(cls, dim: int) -> "ScalarPoly":
        return cls(dim, {})

    @classmethod
    def constant(cls, dim: int, value) -> "ScalarPoly":
        return cls(dim, {(0,) * dim: Fraction(value)})

    @classmethod
    def coordinate(cls, dim: int, i: int) -> "ScalarPoly":
        """The projection y -> y_{i+1} (0-based argument)."""
        return cls(dim, {tuple(1 if j == i else 0 for j in range(dim)): _ONE})

    def evaluate(self, y: Sequence[Fraction]) -> Fraction:
        if len(y) != self.dim:
            raise ValueError("dimension mismatch")
        return sum((v * monomial_value(a, y) for a, v in self.coeffs.items()), _ZERO)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, ScalarPoly):
            return NotImplemented
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        acc = dict(self.coeffs)
        for a, v in other.coeffs.items():
            acc[a] = acc.get(a, _ZERO) + v
        return ScalarPoly(self.dim, acc)

    def __mul__(self, other):
        if isinstance(other, ScalarPoly):
            if self.dim != other.dim:
                raise ValueError("dimension mismatch")
            acc: dict[MultiIndex, Fraction] = {}
            for a, va in self.coeffs.items():
                for b, vb in other.coeffs.items():
                    g = tuple(x + y for x, y in zip(a, b))
                    acc[g] = acc.get(g, _ZERO) + va * vb
            return ScalarPoly(self.dim, acc)
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return ScalarPoly(self.dim, {a: f * v for a, v in self.coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, ScalarPoly) and self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.dim, frozenset(self.coeffs.items())))

    def __repr__(self):
        return f"ScalarPoly(dim={self.dim}, terms={len(self.coeffs)})"


@dataclass(frozen=True)
class ScalarTimesDerivation:
    """The pair (g, F) representing B(x, y) = g(y) F(x).

    F is not required to be a derivation at construction time; the whole
    point of `iff_derivation_check` is to ask.
    """

    g: ScalarPoly
    F: Matrix

    def __post_init__(self):
        if self.F.rows != self.F.cols or self.F.rows != self.g.dim:
            raise ValueError("F must be square with the same dimension as g")

    @property
    def dim(self) -> int:
        return self.g.dim

    def evaluate(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        f = self.g.evaluate(y)
        return tuple(f * v for v in self.F.apply(x))


def to_poly_right(s: ScalarTimesDerivation) -> PolyRightMap:
    """Expand g(y) F(x) into monomial terms: one coefficient c_a F per monomial."""
    return PolyRightMap(s.dim, {a: c * s.F for a, c in s.g.coeffs.items()})


def decompose_by_basis(P: PolyRightMap) -> list[list[ScalarPoly]]:
    """The n frozen-first-argument maps f_i(y) = B(e_i, y).

    Returned as an n x n grid of scalar polynomials: entry [i][l] is the
    e_{l+1} coordinate of f_i. Linearity in the first argument means
    B(x, y) = sum_i x_i f_i(y) reconstructs B exactly, and the f_i are the
    unique maps doing so.
    """
    n = P.dim
    out = []
    for i in range(n):
        comps = []
        for l in range(n):
            coeffs = {a: m.data[l][i] for a, m in P.terms.items() if m.data[l][i]}
            comps.append(ScalarPoly(n, coeffs))
        out.append(comps)
    return out


def evaluate_decomposition(fs: list[list[ScalarPoly]], x: Sequence[Fraction],
                           y: Sequence[Fraction]) -> Vector:
    """sum_i x_i f_i(y), the reconstruction of the decomposed map."""
    n = len(fs)
    out = [_ZERO] * n
    for i in range(n):
        if not x[i]:
            continue
        for l in range(n):
            v = fs[i][l].evaluate(y)
            if v:
                out[l] += x[i] * v
    return tuple(out)


def iff_derivation_check(A: Algebra, s: ScalarTimesDerivation) -> bool:
    """Equivalence test: B = g(y)F(x) is a right biderivation iff F derives A.

    Requires g not identically zero; with g = 0 the map is identically zero
    and the right-hand side of the equivalence carries no information.
    """
    if s.g.is_zero():
        raise ValueError("g must not be identically zero (degenerate case)")
    if A.dim != s.dim:
        raise ValueError("dimension mismatch")
    from .brackets import is_right_bider_poly
    return is_right_bider_poly(A, to_poly_right(s)) == is_derivation(A, s.F)


def class_bracket(s1: ScalarTimesDerivation, s2: ScalarTimesDerivation) -> ScalarTimesDerivation:
    """The bracket stays in the family: (g1 g2, [F1, F2])."""
    if s1.dim != s2.dim:
        raise ValueError("dimension mismatch")
    return ScalarTimesDerivation(s1.g * s2.g, commutator(s1.F, s2.F))


def bracket_matches_poly_form(s1: ScalarTimesDerivation, s2: ScalarTimesDerivation) -> bool:
    """Diagram check: class_bracket then expand == expand then rhd, exactly."""
    return to_poly_right(class_bracket(s1, s2)) == rhd(to_poly_right(s1), to_poly_right(s2))


def exp_nilpotent_exact(F: Matrix, s: Fraction) -> Matrix:
    """exp(sF) as a terminating rational series; F must be nilpotent.

    For a nilpotent derivation this is an honest algebra automorphism in
    exact arithmetic, which is what makes it usable as a side oracle for
    the floating-point curve check.
    """
    n = F.rows
    s = Fraction(s)
    acc = Matrix.identity(n)
    power = Matrix.identity(n)
    coeff = _ONE
    for k in range(1, n + 1):
        power = power * F
        if power.is_zero():
            return acc
        coeff = coeff * s / k
        acc = acc + coeff * power
    raise ValueError("matrix is not nilpotent")


# ---------------------------------------------------------------------------
# floating-point one-parameter curve check
# ---------------------------------------------------------------------------

def _to_float_matrix(m: Matrix) -> list[list[float]]:
    return [[float(x) for x in row] for row in m.data]


def _mat_mul_f(a: list[list[float]], b: list[list[float]]) -> list[list[float]]:
    n = len(a)
    return [[sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)] for r in range(n)]


def _mat_vec_f(a: list[list[float]], v: list[float]) -> list[float]:
    return [sum(r[k] * v[k] for k in range(len(v))) for r in a]


def expm_float(m: list[list[float]]) -> list[list[float]]:
    """Matrix exponential by scaling-and-squaring with a Taylor core."""
    n = len(m)
    norm = max((sum(abs(x) for x in row) for row in m), default=0.0)
    nsquare = max(0, math.ceil(math.log2(norm)) + 1) if norm > 0 else 0
    scale = 1.0 / (2 ** nsquare)
    sm = [[x * scale for x in row] for row in m]
    acc = [[1.0 if r == c else 0.0 for c in range(n)] for r in range(n)]
    term = [[1.0 if r == c else 0.0 for c in range(n)] for r in range(n)]
    for k in range(1, 30):
        term = _mat_mul_f(term, sm)
        term = [[x / k for x in row] for row in term]
        acc = [[a + t for a, t in zip(ra, rt)] for ra, rt in zip(acc, term)]
        if max(abs(t) for row in term for t in row) < 1e-18:
            break
    for _ in range(nsquare):
        acc = _mat_mul_f(acc, acc)
    return acc


@dataclass(frozen=True)
class ExpCurveReport:
    """Central-difference derivative check of s -> g(y) exp(sF) x at s = 0."""

    errors: tuple[tuple[float, float], ...]   # (h, max relative error)
    orders: tuple[float, ...]                 # observed decay orders between steps
    tol: float
    tol_ok: bool
    decay_ok: bool
    exact: bool                               # errors at rounding level throughout

    @property
    def ok(self) -> bool:
        return self.tol_ok and self.decay_ok


_EXACT_FLOOR = 1e-10


def exp_curve_check(A: Algebra, s: ScalarTimesDerivation,
                    h_list: Sequence[float] = (1e-2, 1e-3, 1e-4),
                    tol: float = 1e-6) -> ExpCurveReport:
    """Compare the derivative of the automorphism curve against g(y) F x.

    The derivative at 0 of s -> g(y) exp(sF) x is approximated by central
    differences at each step in `h_list` and compared with the exact value
    g(y) F x over a deterministic grid of sample points (basis vectors and
    the all-ones vector in both slots). Reports the max relative error per
    step (absolute when the reference vector vanishes), whether the
    smallest step meets `tol`, and whether errors decay at second order
    across the sweep. Whenever F^3 = 0 the central difference is exact up
    to rounding, so an all-below-floor sweep also counts as passing decay.

    Raises for non-derivation F and for non-Lie algebras: the curve is an
    automorphism curve only in that setting.
    """
    if A.kind != "lie":
        raise ValueError("the one-parameter curve check needs a Lie algebra")
    if not is_derivation(A, s.F):
        raise ValueError("F must be a derivation")
    if A.dim != s.dim:
        raise ValueError("dimension mismatch")
    n = A.dim
    hs = sorted(set(float(h) for h in h_list), reverse=True)
    if not hs:
        raise ValueError("h_list must not be empty")
    f_mat = _to_float_matrix(s.F)
    samples = [basis_vector(i, n) for i in range(n)] + [(Fraction(1),) * n]
    points = [(x, y) for x in samples for y in samples]
    errors = []
    for h in hs:
        eplus = expm_float([[x * h for x in row] for row in f_mat])
        eminus = expm_float([[-x * h for x in row] for row in f_mat])
        worst = 0.0
        for x, y in points:
            g_val = float(s.g.evaluate(y))
            xf = [float(v) for v in x]
            diff = [(p - q) * g_val / (2.0 * h)
                    for p, q in zip(_mat_vec_f(eplus, xf), _mat_vec_f(eminus, xf))]
            ref = [g_val * float(v) for v in s.F.apply(x)]
            err = math.sqrt(sum((d - r) ** 2 for d, r in zip(diff, ref)))
            ref_norm = math.sqrt(sum(r * r for r in ref))
            worst = max(worst, err / ref_norm if ref_norm > 0 else err)
        errors.append((h, worst))
    orders = []
    for (h1, e1), (h2, e2) in zip(errors, errors[1:]):
        if e2 <= _EXACT_FLOOR or e1 <= _EXACT_FLOOR:
            orders.append(float("inf") if e1 <= _EXACT_FLOOR else 2.0)
        else:
            orders.append(math.log(e1 / e2) / math.log(h1 / h2))
    exact = all(e <= _EXACT_FLOOR for _, e in errors)
    tol_ok = errors[-1][1] <= tol
    decay_ok = exact or all(p >= 1.5 for p in orders)
    return ExpCurveReport(tuple(errors), tuple(orders), tol, tol_ok, decay_ok, exact)

"""Q-divisors on the projective line and section rings of their multiples.

Divisors are supported at the three points 0, 1, infinity of P^1 with exact
rational coefficients.  Riemann-Roch in genus 0 gives h^0(D) = deg(floor D)
+ 1 when nonnegative, with the explicit basis t^(m-a) (t-1)^(-b) for
m = 0 .. deg, where floor(D) = a(0) + b(1) + c(inf).

The presentation engine builds the graded section ring of a Q-divisor
degree by degree: products of previously chosen generators are evaluated
as exact coefficient vectors (every such product is t^M (t-1)^B up to the
degree's common denominator, so the vectors are signed binomial rows),
new generators are drawn from the Riemann-Roch basis to fill the
complement, and kernel vectors of the monomial-evaluation map are reported
as relations once consequences of earlier relations are quotiented away.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .ffarith import WorkBoundError

PRESENTATION_WORK_BUDGET = 50_000


class QPoint(enum.Enum):
    ZERO = "0"
    ONE = "1"
    INFINITY = "inf"


POINT_ORDER = (QPoint.ZERO, QPoint.ONE, QPoint.INFINITY)


class QDivisor:
    """A divisor with exact rational coefficients at 0, 1, infinity."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        store = {}
        if coeffs:
            for pt, val in coeffs.items():
                if not isinstance(pt, QPoint):
                    raise TypeError("divisor points must be QPoint values")
                val = Fraction(val)
                if val != 0:
                    store[pt] = val
        self._coeffs = store

    def coeff(self, pt):
        return self._coeffs.get(pt, Fraction(0))

    def support(self):
        return tuple(pt for pt in POINT_ORDER if pt in self._coeffs)

    def items(self):
        return tuple((pt, self._coeffs[pt]) for pt in self.support())

    def degree(self):
        return sum(self._coeffs.values(), Fraction(0))

    def is_integral(self):
        return all(v.denominator == 1 for v in self._coeffs.values())

    def __add__(self, other):
        if not isinstance(other, QDivisor):
            return NotImplemented
        out = {pt: self.coeff(pt) + other.coeff(pt) for pt in POINT_ORDER}
        return QDivisor(out)

    def __sub__(self, other):
        if not isinstance(other, QDivisor):
            return NotImplemented
        out = {pt: self.coeff(pt) - other.coeff(pt) for pt in POINT_ORDER}
        return QDivisor(out)

    def __neg__(self):
        return QDivisor({pt: -v for pt, v in self._coeffs.items()})

    def __mul__(self, scalar):
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        return QDivisor({pt: v * scalar for pt, v in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, QDivisor) and self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self.items())

    def __repr__(self):
        if not self._coeffs:
            return "0"
        names = {QPoint.ZERO: "(0)", QPoint.ONE: "(1)", QPoint.INFINITY: "(inf)"}
        return " + ".join("%s%s" % (v, names[pt]) for pt, v in self.items())


def floor_div(D):
    """Componentwise floor; idempotent."""
    out = {}
    for pt, v in D.items():
        out[pt] = Fraction(v.numerator // v.denominator)
    return QDivisor(out)


def h0(D):
    """Genus-0 Riemann-Roch: deg(floor D) + 1, clipped at 0."""
    deg = floor_div(D).degree()
    assert deg.denominator == 1
    deg = int(deg)
    return deg + 1 if deg >= 0 else 0


@dataclass(frozen=True)
class SectionBasis:
    """Basis of H^0(floor D): functions t^(m-a) (t-1)^(-b), m in exps.

    a, b, c are the floor's coefficients at 0, 1, infinity.
    """

    a: int
    b: int
    c: int
    exps: tuple

    @property
    def div(self):
        return QDivisor(
            {QPoint.ZERO: self.a, QPoint.ONE: self.b, QPoint.INFINITY: self.c}
        )

    @property
    def size(self):
        return len(self.exps)

    def label(self, m):
        parts = []
        if m - self.a:
            parts.append("t^%d" % (m - self.a))
        if self.b:
            parts.append("(t-1)^%d" % (-self.b))
        return "*".join(parts) if parts else "1"


def rr_basis(D):
    """The explicit section basis of floor(D)."""
    fd = floor_div(D)
    a = int(fd.coeff(QPoint.ZERO))
    b = int(fd.coeff(QPoint.ONE))
    c = int(fd.coeff(QPoint.INFINITY))
    deg = a + b + c
    exps = tuple(range(deg + 1)) if deg >= 0 else ()
    return SectionBasis(a=a, b=b, c=c, exps=exps)


def best_lower_approximations(alpha):
    """Fractions floor(b*alpha)/b, b = 1, 2, ..., keeping strict improvements.

    a/b qualifies iff a/b <= alpha and a/b exceeds every lower approximation
    with smaller denominator; the sequence ends at alpha itself (reached at
    b = denominator of alpha).
    """
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("alpha must be nonnegative")
    out = []
    for b in range(1, alpha.denominator + 1):
        cand = Fraction(alpha.numerator * b // alpha.denominator, b)
        if not out or cand > out[-1]:
            out.append(cand)
    return out


def log_canonical_divisor(inv):
    """-2(inf) + sum over elliptic points (1 - 1/e) + sum over cusps (1 + 1/e).

    The elliptic point sits at coordinate 1; one cusp sits at infinity and
    a second, when present, at 0.  Stabilizer orders are those of the
    curve's own group (the square-determinant one for the presets).
    """
    if inv.genus != 0:
        raise ValueError("only genus 0 is supported")
    if len(inv.elliptic_points) > 1 or inv.cusps.count > 2:
        raise ValueError("more than 3 special points")
    coeffs = {QPoint.INFINITY: Fraction(-2)}
    for ep in inv.elliptic_points:
        e = ep.stab_order_sq
        coeffs[QPoint.ONE] = coeffs.get(QPoint.ONE, Fraction(0)) + 1 - Fraction(1, e)
    if inv.cusps.count == 1:
        spots = (QPoint.INFINITY,)
    else:
        spots = (QPoint.ZERO, QPoint.INFINITY)
    for spot, e in zip(spots, inv.cusp_stab_orders):
        coeffs[spot] = coeffs.get(spot, Fraction(0)) + 1 + Fraction(1, e)
    return QDivisor(coeffs)


def h0_weighted(preset, q, k, l):
    """Weight-k type-l section count on the Gamma_0(T) square-determinant curve.

    Uses the endpoint alpha = (2k - 2l - kq) / (k(q-1)) of the divisor
    family and evaluates k*alpha + k + 1 exactly; the value is the
    dimension 1 + (k-2l)/(q-1) whenever that is a positive integer, and the
    space is 0 otherwise.
    """
    if preset != "Gamma0T_2":
        raise ValueError("unknown preset %r" % (preset,))
    if k <= 0 or k % 2 != 0:
        raise ValueError("weight must be even and positive")
    if not 0 <= l < q - 1:
        raise ValueError("type must be reduced mod q-1")
    alpha = Fraction(2 * k - 2 * l - k * q, k * (q - 1))
    value = k * alpha + k + 1
    if value.denominator == 1 and value > 0:
        return int(value)
    return 0


@dataclass(frozen=True)
class Generator:
    """A chosen section x_m of H^0(floor(d*D)): the function t^t_exp (t-1)^s_exp."""

    degree: int
    section_index: int
    t_exp: int
    s_exp: int

    @property
    def weight(self):
        return 2 * self.degree


@dataclass(frozen=True)
class Relation:
    """A kernel vector of the monomial-evaluation map at one weight.

    combo lists (exponent tuple over the generators, coefficient); the
    support is the set of monomials with nonzero coefficient.
    """

    weight: int
    combo: tuple

    def support(self):
        return tuple(exps for exps, coeff in self.combo if coeff != 0)


@dataclass(frozen=True)
class DegreeLog:
    """Exact bookkeeping for one internal degree of the presentation run."""

    weight: int
    h0: int
    monomial_count: int
    span_rank: int
    kernel_count: int
    absorbed_count: int
    new_generators: tuple
    new_relations: tuple


@dataclass(frozen=True)
class RingPresentation:
    generators: tuple
    relations: tuple
    truncation_weight: int
    degree_logs: tuple

    def generator_weights(self):
        return tuple(g.weight for g in self.generators)

    def relation_weights(self):
        return tuple(r.weight for r in self.relations)


class _Rref:
    """Incremental exact row reduction with optional expression tracking."""

    def __init__(self, dim):
        self.dim = dim
        self.rows = []  # (normalized vector, expr dict or None, pivot column)

    @property
    def rank(self):
        return len(self.rows)

    def _reduce(self, vec, expr):
        vec = [Fraction(x) for x in vec]
        expr = dict(expr) if expr is not None else None
        for rvec, rexpr, piv in self.rows:
            f = vec[piv]
            if f:
                for i in range(piv, self.dim):
                    if rvec[i]:
                        vec[i] -= f * rvec[i]
                if expr is not None and rexpr is not None:
                    for key, val in rexpr.items():
                        expr[key] = expr.get(key, Fraction(0)) - f * val
        return vec, expr

    def try_add(self, vec, expr=None):
        """Insert if independent.  Returns (added, residual expression)."""
        vec, expr = self._reduce(vec, expr)
        piv = next((i for i, x in enumerate(vec) if x), None)
        if piv is None:
            return False, expr
        inv = Fraction(1) / vec[piv]
        vec = [x * inv for x in vec]
        if expr is not None:
            expr = {k: v * inv for k, v in expr.items()}
        self.rows.append((vec, expr, piv))
        return True, expr


def _monomials(degrees, total):
    """Exponent tuples with sum(e_i * degrees_i) = total, lex descending."""
    out = []

    def rec(i, remaining, prefix):
        if i == len(degrees):
            if remaining == 0:
                out.append(tuple(prefix))
            return
        step = degrees[i]
        for e in range(remaining // step, -1, -1):
            prefix.append(e)
            rec(i + 1, remaining - e * step, prefix)
            prefix.pop()

    rec(0, total, [])
    return out


def _pad(exps, n):
    return exps + (0,) * (n - len(exps))


def presentation(D, max_weight):
    """Generators and relations of the section ring of D up to max_weight.

    Internal degree d carries weight 2d.  Per degree: evaluate all products
    of chosen generators of total degree d as vectors in H^0(floor(d*D)),
    track kernel vectors, quotient them by shifts of earlier relations, add
    Riemann-Roch basis sections (ascending index) until the span fills the
    space, and log the exact rank bookkeeping.
    """
    if max_weight < 2 or max_weight % 2 != 0:
        raise ValueError("max_weight must be an even integer >= 2")
    gens = []
    relations = []
    logs = []
    budget = 0
    for d in range(1, max_weight // 2 + 1):
        basis = rr_basis(d * D)
        dim_h0 = basis.size
        degrees = [g.degree for g in gens]
        monos = _monomials(degrees, d) if gens else []
        budget += (len(monos) + dim_h0) * max(1, dim_h0)
        if budget > PRESENTATION_WORK_BUDGET:
            raise WorkBoundError(
                "presentation work budget exceeded at weight %d" % (2 * d)
            )
        if dim_h0 == 0:
            if monos:
                raise AssertionError("products found in an empty graded piece")
            logs.append(
                DegreeLog(2 * d, 0, 0, 0, 0, 0, (), ())
            )
            continue
        dim = dim_h0
        span = _Rref(dim)
        kernels = []  # (expr over monomial indices)
        for idx, exps in enumerate(monos):
            t_total = sum(e * g.t_exp for e, g in zip(exps, gens))
            s_total = sum(e * g.s_exp for e, g in zip(exps, gens))
            m_exp = t_total + basis.a
            b_exp = s_total + basis.b
            if m_exp < 0 or b_exp < 0 or m_exp + b_exp >= dim:
                raise AssertionError("product left its graded piece")
            vec = [0] * dim
            sign = -1 if b_exp % 2 else 1
            for i in range(b_exp + 1):
                vec[m_exp + i] = sign * comb(b_exp, i)
                sign = -sign
            added, expr = span.try_add(vec, {idx: Fraction(1)})
            if not added:
                kernel = {idx: Fraction(1)}
                for key, val in expr.items():
                    if key != idx:
                        kernel[key] = kernel.get(key, Fraction(0)) + val
                kernel = {k: v for k, v in kernel.items() if v}
                kernels.append(kernel)
        span_rank = span.rank
        # consequences of earlier relations at this degree
        mono_index = {exps: i for i, exps in enumerate(monos)}
        cons = _Rref(len(monos)) if monos else None
        for rel in relations:
            shift = d - rel.weight // 2
            if shift < 0:
                continue
            for mu in _monomials(degrees, shift):
                vec = [Fraction(0)] * len(monos)
                for exps, coeff in rel.combo:
                    shifted = tuple(
                        a + b for a, b in zip(_pad(exps, len(gens)), mu)
                    )
                    vec[mono_index[shifted]] += coeff
                cons.try_add(vec)
        absorbed = 0
        new_rels = []
        for kernel in kernels:
            vec = [Fraction(0)] * len(monos)
            for key, val in kernel.items():
                vec[key] = val
            added, _ = cons.try_add(vec)
            if added:
                combo = tuple(
                    (monos[key], kernel[key]) for key in sorted(kernel)
                )
                rel = Relation(weight=2 * d, combo=combo)
                relations.append(rel)
                new_rels.append(rel)
            else:
                absorbed += 1
        # fill the complement with Riemann-Roch sections
        new_gens = []
        if span.rank < dim_h0:
            for m in basis.exps:
                vec = [0] * dim
                vec[m] = 1
                added, _ = span.try_add(vec)
                if added:
                    gen = Generator(
                        degree=d,
                        section_index=m,
                        t_exp=m - basis.a,
                        s_exp=-basis.b,
                    )
                    gens.append(gen)
                    new_gens.append(gen)
                if span.rank == dim_h0:
                    break
        if span.rank != dim_h0:
            raise AssertionError("section basis failed to fill the graded piece")
        logs.append(
            DegreeLog(
                weight=2 * d,
                h0=dim_h0,
                monomial_count=len(monos),
                span_rank=span_rank,
                kernel_count=len(kernels),
                absorbed_count=absorbed,
                new_generators=tuple(new_gens),
                new_relations=tuple(new_rels),
            )
        )
    return RingPresentation(
        generators=tuple(gens),
        relations=tuple(relations),
        truncation_weight=max_weight,
        degree_logs=tuple(logs),
    )

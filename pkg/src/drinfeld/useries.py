"""Truncated formal series in the parameter u with weight and type metadata.

A series carries exact coefficients a_0 .. a_{prec-1} in K = F_q(T), a
weight, and an optional type residue l mod q-1.  Scaling models the
substitution u -> alpha^{-1} u, so a form of even weight k with constant
scaling factor has all support in the two exponent classes solving
2n = k (mod q-1); the splitting operator sorts coefficients into those two
classes and assigns the matching types.  Everything here is formal: no
named form's coefficients are computed, and the registry records metadata
only (weight, type, group).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .congruence import GroupSpec
from .ffarith import ParseError, PolyA, RatK, format_poly, parse_poly
from .weights import WeightType, decompose_gamma2, graded_mult_type

DEFAULT_USERIES_PREC = 64


class SupportError(ValueError):
    """A coefficient sits at an exponent outside the allowed classes."""

    def __init__(self, exponent, message=None):
        self.exponent = exponent
        if message is None:
            message = "unsupported exponent %d" % exponent
        super().__init__(message)


def _as_ratk(field, value):
    x = RatK.from_value(field, value)
    if x.field is not field and x.field != field:
        raise ValueError("coefficient from a different field")
    return x


class USeries:
    """Exact truncated series sum a_n u^n, 0 <= n < prec."""

    __slots__ = ("field", "coeffs", "weight", "type_residue")

    def __init__(self, field, coeffs, weight=0, type_residue=None, prec=None):
        coeffs = [_as_ratk(field, c) for c in coeffs]
        if prec is not None:
            if prec < len(coeffs):
                raise ValueError("precision below the given coefficients")
            zero = RatK.from_value(field, 0)
            coeffs = coeffs + [zero] * (prec - len(coeffs))
        if not coeffs:
            raise ValueError("a series needs at least one coefficient")
        if type_residue is not None:
            type_residue = type_residue % (field.q - 1)
        self.field = field
        self.coeffs = tuple(coeffs)
        self.weight = weight
        self.type_residue = type_residue

    @classmethod
    def zero(cls, field, weight=0, type_residue=None, prec=DEFAULT_USERIES_PREC):
        return cls(field, [], weight=weight, type_residue=type_residue, prec=prec)

    @classmethod
    def from_terms(cls, field, terms, weight=0, type_residue=None, prec=None):
        """Build from a mapping exponent -> coefficient."""
        if prec is None:
            top = max(terms, default=0)
            prec = max(DEFAULT_USERIES_PREC, top + 1)
        zero = RatK.from_value(field, 0)
        coeffs = [zero] * prec
        for n, c in terms.items():
            if not 0 <= n < prec:
                raise ValueError("exponent %d outside precision window" % n)
            coeffs[n] = coeffs[n] + _as_ratk(field, c)
        return cls(field, coeffs, weight=weight, type_residue=type_residue)

    @property
    def prec(self):
        return len(self.coeffs)

    def coeff(self, n):
        return self.coeffs[n]

    def support(self):
        return tuple(n for n, c in enumerate(self.coeffs) if not c.is_zero())

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def truncate(self, prec):
        if not 1 <= prec <= self.prec:
            raise ValueError("cannot extend precision")
        return USeries(
            self.field, self.coeffs[:prec], self.weight, self.type_residue
        )

    def _check_mate(self, other):
        if not isinstance(other, USeries):
            raise TypeError("expected a series")
        if other.field is not self.field and other.field != self.field:
            raise ValueError("series over different fields")

    def __add__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        self._check_mate(other)
        if self.weight != other.weight:
            raise ValueError("cannot add series of different weights")
        prec = min(self.prec, other.prec)
        coeffs = [self.coeffs[i] + other.coeffs[i] for i in range(prec)]
        l = self.type_residue if self.type_residue == other.type_residue else None
        return USeries(self.field, coeffs, self.weight, l)

    def __neg__(self):
        return USeries(
            self.field, [-c for c in self.coeffs], self.weight, self.type_residue
        )

    def __sub__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return mul(self, other)

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        return (
            self.field == other.field
            and self.weight == other.weight
            and self.type_residue == other.type_residue
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.weight, self.type_residue, self.coeffs))

    def __repr__(self):
        terms = []
        for n, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            terms.append(format_useries_term(c, n))
        return " + ".join(terms) if terms else "0"


def format_useries_term(coeff, n):
    if coeff.den.degree == 0 and coeff.den.is_monic():
        s = format_poly(coeff.num)
        plain = re.fullmatch(r"-?[a-zA-Z0-9^*]+", s) is not None
    else:
        s = repr(coeff)
        plain = True
    if not plain:
        s = "(%s)" % s
    if n == 0:
        return s
    upart = "u" if n == 1 else "u^%d" % n
    if s == "1":
        return upart
    return "%s*%s" % (s, upart)


def scale_u(f, alpha):
    """Coefficientwise a_n -> a_n alpha^{-n}; models u -> alpha^{-1} u."""
    field = f.field
    alpha = field.elem(alpha)
    if alpha.is_zero():
        raise ValueError("scaling constant must be nonzero")
    inv = alpha.inverse()
    power = field.elem(1)
    coeffs = []
    for c in f.coeffs:
        coeffs.append(c * RatK(PolyA(field, [power])))
        power = power * inv
    return USeries(field, coeffs, f.weight, f.type_residue)


def check_support(f, k, q):
    """True iff every nonzero a_n has 2n = k (mod q-1)."""
    if k % 2 != 0:
        raise ValueError("weight must be even")
    if q != f.field.q:
        raise ValueError("field size mismatch")
    return all((2 * n - k) % (q - 1) == 0 for n in f.support())


def split(f, k, q):
    """Sort coefficients into the classes n = k/2 and k/2 + (q-1)/2 (mod q-1).

    Returns (f1, f2) with f = f1 + f2 exactly and types per the ordered
    decomposition; raises SupportError at the first exponent violating
    2n = k (mod q-1) rather than dropping it.
    """
    if k % 2 != 0:
        raise ValueError("weight must be even")
    if q != f.field.q:
        raise ValueError("field size mismatch")
    for n in f.support():
        if (2 * n - k) % (q - 1) != 0:
            raise SupportError(n)
    l_arg = f.type_residue if f.type_residue is not None else k // 2
    l1, l2 = decompose_gamma2(k, l_arg, q)
    zero = RatK.from_value(f.field, 0)
    half = k // 2 % (q - 1)
    c1 = [c if n % (q - 1) == half else zero for n, c in enumerate(f.coeffs)]
    c2 = [zero if n % (q - 1) == half else c for n, c in enumerate(f.coeffs)]
    f1 = USeries(f.field, c1, k, l1)
    f2 = USeries(f.field, c2, k, l2)
    return f1, f2


def mul(f, g):
    """Cauchy product to the shared precision; weights and types add."""
    f._check_mate(g)
    prec = min(f.prec, g.prec)
    zero = RatK.from_value(f.field, 0)
    coeffs = [zero] * prec
    for i, a in enumerate(f.coeffs[:prec]):
        if a.is_zero():
            continue
        for j in range(prec - i):
            b = g.coeffs[j]
            if not b.is_zero():
                coeffs[i + j] = coeffs[i + j] + a * b
    q = f.field.q
    if f.type_residue is not None and g.type_residue is not None:
        wt = graded_mult_type(
            WeightType(f.weight, f.type_residue, q),
            WeightType(g.weight, g.type_residue, q),
        )
        weight, l = wt.k, wt.l
    else:
        weight, l = f.weight + g.weight, None
    return USeries(f.field, coeffs, weight, l)


@dataclass(frozen=True)
class FormRegistryEntry:
    """Metadata for a named form: weight, optional type, home group."""

    name: str
    weight: int
    type_residue: object
    group: GroupSpec


def form_registry(field):
    """The named forms with their weights, types, and groups.

    Type entries satisfy k = 2l (mod q-1); the two weight-(q-1) level-T
    forms have undetermined type (either 0 or (q-1)/2 is consistent), left
    as None.
    """
    q = field.q
    full = GroupSpec("full", None)
    gamma0_t = GroupSpec("gamma0", PolyA.T(field))
    entries = [
        FormRegistryEntry("g", q - 1, 0, full),
        FormRegistryEntry("h", q + 1, 1, full),
        FormRegistryEntry("Delta", q * q - 1, 0, full),
        FormRegistryEntry("E_T", 2, 1, gamma0_t),
        FormRegistryEntry("Delta_T", q - 1, None, gamma0_t),
        FormRegistryEntry("Delta_W", q - 1, None, gamma0_t),
    ]
    for e in entries:
        if e.type_residue is not None and (e.weight - 2 * e.type_residue) % (q - 1):
            raise AssertionError("registry entry %s violates k = 2l" % e.name)
    return {e.name: e for e in entries}


def _strip_parens(text):
    while text.startswith("(") and text.endswith(")"):
        depth = 0
        ok = True
        for i, ch in enumerate(text):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(text) - 1:
                    ok = False
                    break
        if not ok:
            break
        text = text[1:-1]
    return text


_TERM_RE = re.compile(r"(?:(?P<c>.+)\*)?u(?:\^(?P<e>[0-9]+))?$")


def parse_useries(text, field, weight=0, type_residue=None, prec=None):
    """Parse a sum of c*u^n terms; coefficients use the polynomial grammar.

    Examples: "u^2+3*u^4", "(T+1)*u - 2", "0".
    """
    src = text.replace(" ", "")
    if not src:
        raise ParseError("empty series", 0)
    pieces = []  # (sign, chunk)
    depth = 0
    sign = 1
    start = 0
    if src[0] in "+-":
        sign = -1 if src[0] == "-" else 1
        start = 1
    cur = start
    for i in range(start, len(src)):
        ch = src[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced parentheses", i)
        elif ch in "+-" and depth == 0:
            pieces.append((sign, src[cur:i]))
            sign = -1 if ch == "-" else 1
            cur = i + 1
    if depth != 0:
        raise ParseError("unbalanced parentheses", len(src))
    pieces.append((sign, src[cur:]))
    terms = {}
    for sgn, chunk in pieces:
        if not chunk:
            raise ParseError("empty term", 0)
        m = _TERM_RE.fullmatch(chunk)
        if m is None:
            coeff = RatK(parse_poly(_strip_parens(chunk), field))
            n = 0
        else:
            ctext = m.group("c")
            if ctext is None:
                coeff = RatK.from_value(field, 1)
            else:
                coeff = RatK(parse_poly(_strip_parens(ctext), field))
            n = int(m.group("e")) if m.group("e") is not None else 1
        if sgn < 0:
            coeff = -coeff
        terms[n] = terms.get(n, RatK.from_value(field, 0)) + coeff
    if prec is None:
        prec = max(DEFAULT_USERIES_PREC, max(terms, default=0) + 1)
    return USeries.from_terms(
        field, terms, weight=weight, type_residue=type_residue, prec=prec
    )

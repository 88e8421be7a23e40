"""Exact arithmetic for the tower F_q < A = F_q[T] < K = F_q(T) < K_inf = F_q((1/T)).

All values are immutable and exact.  F_q is realized in a polynomial basis
over its prime field F_p for a recorded modulus, elements of A are dense
coefficient tuples (lowest degree first, no trailing zeros), elements of K
are kept in lowest terms with monic denominator, and elements of K_inf carry
a finite window of Laurent coefficients in the uniformizer 1/T.

Valuation convention: v(T) = -1, so v(a) = -deg(a) for nonzero a in A and
|f| = q^(-v(f)).  The zero series is a distinguished value whose valuation
reads as +infinity.
"""

from __future__ import annotations

import math

DEFAULT_PREC = 32


class ParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message, pos):
        super().__init__("%s (at position %d)" % (message, pos))
        self.pos = pos


class PrecisionError(ArithmeticError):
    """Raised when a series computation runs out of known coefficients."""


class WorkBoundError(RuntimeError):
    """Raised when a computation would exceed its configured work budget."""


def _factor_prime_power(q):
    if q < 3:
        raise ValueError("q must be an odd prime power >= 3")
    p = None
    for cand in range(2, q + 1):
        if q % cand == 0:
            p = cand
            break
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError("q = %d is not a prime power" % q)
    if p == 2:
        raise ValueError("characteristic 2 is not supported")
    return p, e


class Fq:
    """The finite field with q = p^e elements, q odd.

    For e > 1 elements are coordinate vectors over F_p in the basis
    1, a, ..., a^(e-1) where a is a root of the (monic, irreducible)
    modulus.  A multiplicative generator is located at construction and
    nonzero elements print as powers of it.
    """

    def __init__(self, q, modulus=None, generator=None):
        p, e = _factor_prime_power(q)
        self.q = q
        self.p = p
        self.e = e
        if e == 1:
            if modulus is not None:
                raise ValueError("modulus only applies to non-prime q")
            self.modulus = None
        else:
            if modulus is None:
                modulus = self._default_modulus()
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or modulus[-1] != 1:
                raise ValueError("modulus must be monic of degree e")
            if not _fp_irreducible(modulus, p):
                raise ValueError("modulus is reducible over F_%d" % p)
            self.modulus = modulus
            self._reduction = self._power_reductions()
        self.zero = FqElem(self, (0,) * e)
        self.one = FqElem(self, tuple([1] + [0] * (e - 1)))
        if generator is None:
            generator = self._find_generator()
        else:
            generator = self.elem(generator)
            if _mult_order(generator) != q - 1:
                raise ValueError("given generator does not have order q-1")
        self.gen = generator
        self._dlog = {}
        x = self.one
        for k in range(q - 1):
            self._dlog[x.coords] = k
            x = x * self.gen

    def _default_modulus(self):
        # Smallest monic irreducible of degree e over F_p, by ascending
        # coefficient tuples.
        p, e = self.p, self.e
        total = p**e
        for idx in range(total):
            coeffs = []
            m = idx
            for _ in range(e):
                coeffs.append(m % p)
                m //= p
            cand = tuple(coeffs) + (1,)
            if _fp_irreducible(cand, p):
                return cand
        raise AssertionError("no irreducible modulus found")

    def _power_reductions(self):
        # Coordinates of a^k for k = e .. 2e-2, reduced by the modulus.
        p, e, mod = self.p, self.e, self.modulus
        red = {}
        cur = [(-mod[i]) % p for i in range(e)]  # a^e
        red[e] = tuple(cur)
        for k in range(e + 1, 2 * e - 1):
            nxt = [0] * e
            for i in range(e - 1):
                nxt[i + 1] = cur[i]
            if cur[e - 1]:
                c = cur[e - 1]
                for i in range(e):
                    nxt[i] = (nxt[i] - c * mod[i]) % p
            red[k] = tuple(nxt)
            cur = nxt
        return red

    def _find_generator(self):
        for x in self.elements():
            if x.is_zero():
                continue
            if _mult_order(x) == self.q - 1:
                return x
        raise AssertionError("no multiplicative generator found")

    def elem(self, value):
        """Coerce an int, coordinate list, or FqElem into this field."""
        if isinstance(value, FqElem):
            if value.field is not self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, int):
            coords = [value % self.p] + [0] * (self.e - 1)
            return FqElem(self, tuple(coords))
        coords = tuple(c % self.p for c in value)
        if len(coords) != self.e:
            raise ValueError("expected %d coordinates" % self.e)
        return FqElem(self, coords)

    def elements(self):
        """All q elements, prime-field digits in ascending order."""
        p, e = self.p, self.e
        for idx in range(self.q):
            coords = []
            m = idx
            for _ in range(e):
                coords.append(m % p)
                m //= p
            yield FqElem(self, tuple(coords))

    def nonzero_elements(self):
        return (x for x in self.elements() if not x.is_zero())

    def dlog(self, x):
        """Discrete log of nonzero x with respect to the stored generator."""
        if x.is_zero():
            raise ValueError("dlog of zero")
        return self._dlog[x.coords]

    def format_elem(self, x):
        if self.e == 1:
            return str(x.coords[0])
        if x.is_zero():
            return "0"
        k = self.dlog(x)
        if k == 0:
            return "1"
        if k == 1:
            return "a"
        return "a^%d" % k

    def __repr__(self):
        return "Fq(%d)" % self.q

    def __eq__(self, other):
        return (
            isinstance(other, Fq)
            and self.q == other.q
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash(("Fq", self.q, self.modulus))


def _mult_order(x):
    n = 1
    y = x
    while not y.is_one():
        y = y * x
        n += 1
        if n > x.field.q:
            raise AssertionError("order computation ran away")
    return n


def _fp_irreducible(coeffs, p):
    """Irreducibility of a monic polynomial over F_p by trial division."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    half = deg // 2
    # Enumerate monic divisors of degree 1..half.
    for d in range(1, half + 1):
        for idx in range(p**d):
            div = []
            m = idx
            for _ in range(d):
                div.append(m % p)
                m //= p
            div.append(1)
            if _fp_mod(list(coeffs), div, p) == [0]:
                return False
    return True


def _fp_mod(num, den, p):
    num = list(num)
    dd = len(den) - 1
    while len(num) - 1 >= dd and any(num):
        if num[-1] == 0:
            num.pop()
            continue
        shift = len(num) - 1 - dd
        c = num[-1]
        for i in range(dd + 1):
            num[shift + i] = (num[shift + i] - c * den[i]) % p
        while len(num) > 1 and num[-1] == 0:
            num.pop()
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num if any(num) else [0]


class FqElem:
    """An element of Fq; immutable coordinate vector over the prime field."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_one(self):
        return self.coords == self.field.one.coords

    def __bool__(self):
        return not self.is_zero()

    def _coerce(self, other):
        if isinstance(other, FqElem):
            return other
        if isinstance(other, int):
            return self.field.elem(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(
            self.field,
            tuple((a + b) % p for a, b in zip(self.coords, o.coords)),
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(
            self.field,
            tuple((a - b) % p for a, b in zip(self.coords, o.coords)),
        )

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        f = self.field
        p, e = f.p, f.e
        if e == 1:
            return FqElem(f, ((self.coords[0] * o.coords[0]) % p,))
        prod = [0] * (2 * e - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(o.coords):
                prod[i + j] = (prod[i + j] + a * b) % p
        out = list(prod[:e])
        for k in range(e, 2 * e - 1):
            if prod[k]:
                red = f._reduction[k]
                c = prod[k]
                for i in range(e):
                    out[i] = (out[i] + c * red[i]) % p
        return FqElem(f, tuple(out))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.elem(other)
        return (
            isinstance(other, FqElem)
            and self.field == other.field
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((self.field.q, self.coords))

    def __repr__(self):
        return self.field.format_elem(self)


class PolyA:
    """A polynomial in A = F_q[T]; coefficients lowest degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.elem(c) for c in ints])

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    @classmethod
    def one(cls, field):
        return cls(field, [field.one])

    @classmethod
    def const(cls, field, c):
        return cls(field, [field.elem(c)])

    @classmethod
    def T(cls, field):
        return cls(field, [field.zero, field.one])

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def constant_value(self):
        """The value of a constant polynomial as an FqElem."""
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return self.coeffs[0] if self.coeffs else self.field.zero

    def leading_coeff(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1].is_one()

    def coeff(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero

    def _coerce(self, other):
        if isinstance(other, PolyA):
            return other
        if isinstance(other, (FqElem, int)):
            return PolyA(self.field, [self.field.elem(other)])
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyA(self.field, [self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyA(self.field, [self.coeff(i) - o.coeff(i) for i in range(n)])

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return PolyA(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return PolyA.zero(self.field)
        out = [self.field.zero] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyA(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = PolyA.one(self.field)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by T^k."""
        if self.is_zero():
            return self
        return PolyA(self.field, [self.field.zero] * k + list(self.coeffs))

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = o.degree
        lc_inv = o.leading_coeff().inverse()
        quot = [self.field.zero] * max(0, len(rem) - dd)
        while len(rem) - 1 >= dd and rem:
            if rem[-1].is_zero():
                rem.pop()
                continue
            shift = len(rem) - 1 - dd
            c = rem[-1] * lc_inv
            quot[shift] = c
            for i in range(dd + 1):
                rem[shift + i] = rem[shift + i] - c * o.coeffs[i]
            while rem and rem[-1].is_zero():
                rem.pop()
        return PolyA(self.field, quot), PolyA(self.field, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self):
        if self.is_zero():
            return self
        return self * self.leading_coeff().inverse()

    def gcd(self, other):
        """Monic greatest common divisor."""
        a, b = self, self._coerce(other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def sort_key(self):
        return tuple(c.coords for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (FqElem, int)):
            other = self._coerce(other)
        return (
            isinstance(other, PolyA)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.q, tuple(c.coords for c in self.coeffs)))

    def __repr__(self):
        return format_poly(self)


class RatK:
    """An element of K = F_q(T) in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = PolyA.one(num.field)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if not g.is_zero() and g.degree > 0:
            num = num // g
            den = den // g
        if not den.is_monic():
            c = den.leading_coeff().inverse()
            num = num * c
            den = den * c
        if num.is_zero():
            den = PolyA.one(num.field)
        self.num = num
        self.den = den

    @classmethod
    def from_value(cls, field, value):
        """Coerce a PolyA, FqElem, or int into K."""
        if isinstance(value, RatK):
            return value
        if isinstance(value, PolyA):
            return cls(value)
        return cls(PolyA(field, [field.elem(value)]))

    @property
    def field(self):
        return self.num.field

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def valuation(self):
        """v(x) = deg(den) - deg(num); raises on zero."""
        if self.is_zero():
            raise ValueError("the zero element has no finite valuation")
        return self.den.degree - self.num.degree

    def _coerce(self, other):
        if isinstance(other, RatK):
            return other
        if isinstance(other, (PolyA, FqElem, int)):
            return RatK.from_value(self.field, other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatK(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatK(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatK(-self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatK(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero in K")
        return RatK(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n):
        if n < 0:
            return (RatK(self.den, self.num)) ** (-n)
        out = RatK(PolyA.one(self.field))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (PolyA, FqElem, int)):
            other = self._coerce(other)
        return (
            isinstance(other, RatK)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def __repr__(self):
        if self.den == PolyA.one(self.field):
            return format_poly(self.num)
        return "(%s)/(%s)" % (format_poly(self.num), format_poly(self.den))


class LaurentKInf:
    """A truncated Laurent series at the place 1/T.

    `val` is the valuation of the leading term and `coeffs[i]` is the
    coefficient of (1/T)^(val + i); coeffs[0] is nonzero.  The zero series
    is represented with an empty window and valuation +infinity.  Operations
    never extend the known window: a product or sum knows only as many
    coefficients as its inputs justify.
    """

    __slots__ = ("field", "val", "coeffs")

    def __init__(self, field, val, coeffs):
        coeffs = list(coeffs)
        while coeffs and coeffs[0].is_zero():
            coeffs.pop(0)
            val += 1
        if not coeffs:
            val = None
        self.field = field
        self.val = val
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, None, [])

    def is_zero(self):
        return not self.coeffs

    @property
    def v(self):
        """Valuation; +infinity for the zero series."""
        return math.inf if self.is_zero() else self.val

    @property
    def prec(self):
        return len(self.coeffs)

    def leading_coeff(self):
        if self.is_zero():
            raise ValueError("zero series has no leading coefficient")
        return self.coeffs[0]

    def _at(self, pos):
        if self.is_zero() or pos < self.val or pos >= self.val + len(self.coeffs):
            return self.field.zero
        return self.coeffs[pos - self.val]

    def truncate(self, n):
        if self.is_zero():
            return self
        return LaurentKInf(self.field, self.val, self.coeffs[:n])

    def __add__(self, other):
        if not isinstance(other, LaurentKInf):
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        start = min(self.val, other.val)
        end = min(self.val + len(self.coeffs), other.val + len(other.coeffs))
        if end <= start:
            raise PrecisionError("known windows do not overlap")
        window = [self._at(p) + other._at(p) for p in range(start, end)]
        return LaurentKInf(self.field, start, window)

    def __neg__(self):
        return LaurentKInf(self.field, self.val, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, LaurentKInf):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FqElem):
            if other.is_zero():
                return LaurentKInf.zero(self.field)
            return LaurentKInf(self.field, self.val, [c * other for c in self.coeffs])
        if not isinstance(other, LaurentKInf):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentKInf.zero(self.field)
        n = min(len(self.coeffs), len(other.coeffs))
        out = []
        for k in range(n):
            acc = self.field.zero
            for i in range(k + 1):
                a = self.coeffs[i] if i < len(self.coeffs) else self.field.zero
                j = k - i
                b = other.coeffs[j] if j < len(other.coeffs) else self.field.zero
                if not (a.is_zero() or b.is_zero()):
                    acc = acc + a * b
            out.append(acc)
        return LaurentKInf(self.field, self.val + other.val, out)

    __rmul__ = __mul__

    def sqrt(self):
        """A square root with the same window; raises ValueError if none exists."""
        if self.is_zero():
            return self
        if self.val % 2 != 0:
            raise ValueError("odd valuation, not a square")
        y0 = sqrt_fq(self.coeffs[0])
        if y0 is None:
            raise ValueError("leading coefficient is not a square")
        inv = (y0 + y0).inverse()
        ys = [y0]
        for n in range(1, len(self.coeffs)):
            acc = self.coeffs[n]
            for i in range(1, n):
                acc = acc - ys[i] * ys[n - i]
            ys.append(acc * inv)
        return LaurentKInf(self.field, self.val // 2, ys)

    def __eq__(self, other):
        return (
            isinstance(other, LaurentKInf)
            and self.field == other.field
            and self.val == other.val
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field.q, self.val, tuple(c.coords for c in self.coeffs)))

    def __repr__(self):
        if self.is_zero():
            return "O(nothing)"
        parts = []
        for i, c in enumerate(self.coeffs[:8]):
            if c.is_zero():
                continue
            parts.append("%r*s^%d" % (c, self.val + i))
        tail = " + ..." if len(self.coeffs) > 8 else ""
        return " + ".join(parts) + tail + "  [s = 1/T]"


# ---------------------------------------------------------------------------
# polynomial text grammar


def _tokenize(src):
    tokens = []
    i = 0
    while i < len(src):
        ch = src[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(("int", int(src[i:j]), i))
            i = j
            continue
        if ch in "aT^*+-":
            tokens.append((ch, ch, i))
            i += 1
            continue
        raise ParseError("unexpected character %r" % ch, i)
    tokens.append(("end", None, len(src)))
    return tokens


def parse_poly(src, field):
    """Parse polynomial text like "4*T+3", "T^2+1", or "a^2*T+a" into a PolyA.

    Terms are joined by + or -.  Within a term, factors separated by * may be
    integer literals 0..p-1, the field generator a (with optional ^k, only
    when e > 1), or T (with optional ^k).
    """
    tokens = _tokenize(src)
    pos = 0

    def peek():
        return tokens[pos]

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_factor():
        kind, value, at = advance()
        if kind == "int":
            if value >= field.p:
                raise ParseError(
                    "coefficient %d out of range 0..%d" % (value, field.p - 1), at
                )
            return field.elem(value), 0
        if kind == "a":
            if field.e == 1:
                raise ParseError("symbol 'a' is only valid for non-prime q", at)
            exp = 1
            if peek()[0] == "^":
                advance()
                k2, v2, at2 = advance()
                if k2 != "int":
                    raise ParseError("expected integer exponent", at2)
                exp = v2
            return field.gen**exp, 0
        if kind == "T":
            exp = 1
            if peek()[0] == "^":
                advance()
                k2, v2, at2 = advance()
                if k2 != "int":
                    raise ParseError("expected integer exponent", at2)
                exp = v2
            return field.one, exp
        raise ParseError("expected a coefficient, 'a', or 'T'", at)

    def parse_term():
        coeff, texp = parse_factor()
        while peek()[0] == "*":
            advance()
            c2, e2 = parse_factor()
            coeff = coeff * c2
            texp += e2
        return coeff, texp

    acc = {}
    sign = field.one
    kind, _, at = peek()
    if kind in ("+", "-"):
        advance()
        if kind == "-":
            sign = -field.one
    elif kind == "end":
        raise ParseError("empty polynomial", at)
    while True:
        coeff, texp = parse_term()
        acc[texp] = acc.get(texp, field.zero) + sign * coeff
        kind, _, at = advance()
        if kind == "end":
            break
        if kind == "+":
            sign = field.one
        elif kind == "-":
            sign = -field.one
        else:
            raise ParseError("expected '+' or '-' between terms", at)
    if not acc:
        return PolyA.zero(field)
    deg = max(acc)
    return PolyA(field, [acc.get(i, field.zero) for i in range(deg + 1)])


def format_poly(poly):
    """Canonical text: terms in decreasing degree with explicit * and ^."""
    field = poly.field
    if poly.is_zero():
        return "0"
    parts = []
    for d in range(poly.degree, -1, -1):
        c = poly.coeff(d)
        if c.is_zero():
            continue
        cstr = field.format_elem(c)
        if d == 0:
            parts.append(cstr)
        else:
            var = "T" if d == 1 else "T^%d" % d
            parts.append(var if c.is_one() else "%s*%s" % (cstr, var))
    return "+".join(parts)


# ---------------------------------------------------------------------------
# squares and series expansion


def is_square_fq(x):
    """Euler criterion: nonzero x is a square iff x^((q-1)/2) = 1."""
    if x.is_zero():
        raise ValueError("squareness of zero is not defined here")
    return (x ** ((x.field.q - 1) // 2)).is_one()


def sqrt_fq(x):
    """A square root of x in F_q, or None; found by exhaustive search."""
    for y in x.field.elements():
        if y * y == x:
            return y
    return None


def laurent_expand(x, prec=DEFAULT_PREC):
    """Expand x in K as a Laurent series in 1/T with `prec` coefficients.

    The valuation of the result is deg(den) - deg(num); zero maps to the
    zero series.
    """
    if isinstance(x, PolyA):
        x = RatK(x)
    if not isinstance(x, RatK):
        raise TypeError("expected an element of K or A")
    if x.is_zero():
        return LaurentKInf.zero(x.field)
    if prec < 1:
        raise PrecisionError("precision must be at least 1")
    field = x.field
    num, den = x.num, x.den
    dn, dd = num.degree, den.degree
    nrev = [num.coeff(dn - i) for i in range(dn + 1)]
    drev = [den.coeff(dd - i) for i in range(dd + 1)]
    inv0 = drev[0].inverse()
    out = []
    for k in range(prec):
        acc = nrev[k] if k < len(nrev) else field.zero
        for j in range(1, min(k, dd) + 1):
            acc = acc - drev[j] * out[k - j]
        out.append(acc * inv0)
    return LaurentKInf(field, dd - dn, out)


def is_square_kinf(f, require_prec=2):
    """Squareness of a nonzero truncated series in K_inf = F_q((1/T)).

    True iff the valuation is even and the leading coefficient is a square
    in F_q; for odd q these conditions are exact.  The square root is lifted
    over the full window and multiplied back as a consistency check.
    """
    if f.is_zero():
        raise ValueError("squareness of the zero series is not defined")
    if f.prec < require_prec:
        raise PrecisionError("need at least %d coefficients" % require_prec)
    if f.val % 2 != 0:
        return False
    if sqrt_fq(f.leading_coeff()) is None:
        return False
    y = f.sqrt()
    if (y * y) != f.truncate((y * y).prec):
        raise AssertionError("square-root refinement lost consistency")
    return True


def quad_irreducible_kinf(b, c, prec=DEFAULT_PREC):
    """Whether z^2 + b*z + c (b, c in K) has no root in K_inf.

    Decided by the discriminant: the quadratic is irreducible over K_inf
    iff b^2 - 4c is not a square there (characteristic is odd).
    """
    disc = b * b - RatK.from_value(b.field, 4) * c
    if disc.is_zero():
        return False
    return not is_square_kinf(laurent_expand(disc, prec))


def poly_sqrt(poly):
    """The exact square root of a polynomial in A, or None."""
    if poly.is_zero():
        return PolyA.zero(poly.field)
    deg = poly.degree
    if deg % 2 != 0:
        return None
    top = sqrt_fq(poly.leading_coeff())
    if top is None:
        return None
    half = deg // 2
    r = [poly.field.zero] * (half + 1)
    r[half] = top
    inv = (top + top).inverse()
    for j in range(half - 1, -1, -1):
        acc = poly.coeff(half + j)
        for i in range(j + 1, half):
            acc = acc - r[i] * r[half + j - i]
        r[j] = acc * inv
    cand = PolyA(poly.field, r)
    if cand * cand == poly:
        return cand
    return None


def is_square_k(x):
    """Squareness of x in K, decided exactly (num*den a polynomial square)."""
    if x.is_zero():
        return True
    return poly_sqrt(x.num * x.den) is not None


def poly_ext_gcd(a, b):
    """Extended gcd in A: returns (g, s, t) with g monic and s*a + t*b = g."""
    field = a.field
    r0, r1 = a, b
    s0, s1 = PolyA.one(field), PolyA.zero(field)
    t0, t1 = PolyA.zero(field), PolyA.one(field)
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    if r0.is_zero():
        return r0, s0, t0
    lc = r0.leading_coeff().inverse()
    return r0 * lc, s0 * lc, t0 * lc

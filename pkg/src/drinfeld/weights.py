"""Weight and type arithmetic for Drinfeld modular forms.

A form has an integer weight k >= 0 and a type l, a residue mod (q-1);
nonzero spaces satisfy k = 2l (mod q-1).  This module solves that
congruence, decomposes graded pieces between a group and its
determinant-restricted subgroups, evaluates the dimension formula for
Gamma_0(T), and checks the valence formula in exact rational arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class WeightType:
    """A (weight, type) pair for a fixed q; the type is canonical mod q-1."""

    k: int
    l: int
    q: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("weight must be nonnegative")
        if self.q < 3 or self.q % 2 == 0:
            raise ValueError("q must be an odd prime power")
        object.__setattr__(self, "l", self.l % (self.q - 1))

    def is_consistent(self):
        """Whether k = 2l (mod q-1), the nonzero-space constraint."""
        return (self.k - 2 * self.l) % (self.q - 1) == 0


@dataclass(frozen=True)
class VanishingProfile:
    """Vanishing orders of a level-one form: at infinity, at the elliptic
    point, and at the remaining (unweighted) points."""

    k: int
    v_inf: int = 0
    v_e: int = 0
    v_other: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "v_other", tuple(self.v_other))


def type_solutions(k, q):
    """All types l mod (q-1) with 2l = k (mod q-1).

    For odd k there are none (gcd(2, q-1) = 2 does not divide k); for even
    k exactly the pair {k/2, k/2 + (q-1)/2} mod (q-1).
    """
    if q < 3 or q % 2 == 0:
        raise ValueError("q must be an odd prime power")
    if k % 2 != 0:
        return set()
    half = k // 2
    m = q - 1
    return {half % m, (half + m // 2) % m}


def decompose_gamma2(k, l2, q):
    """The ordered pair of types (l1, l2') lifting a square-subgroup type.

    l2 is a residue mod (q-1)/2 compatible with k; the lifts are the two
    solutions of 2l = k (mod q-1), returned as (k/2, k/2 + (q-1)/2) reduced
    mod q-1.  Encodes the graded splitting of the square-determinant
    subgroup's forms into the two type pieces of the full group.
    """
    if k % 2 != 0:
        raise ValueError("no solutions for odd weight")
    m = q - 1
    half_m = m // 2
    if (l2 - k // 2) % half_m != 0:
        raise ValueError("type %d incompatible with weight %d" % (l2, k))
    l1 = (k // 2) % m
    l2_lift = (l1 + half_m) % m
    return (l1, l2_lift)


def idempotent_decomposition(k, l, n, n_prime, q):
    """Type residues [l + i*n' mod (q-1)] for i = 0 .. n/n' - 1.

    n and n' are the determinant-image orders of the outer and inner
    groups; the list indexes the idempotent pieces of the inner group's
    weight-k space inside the outer group's graded algebra.
    """
    if k < 0:
        raise ValueError("weight must be nonnegative")
    m = q - 1
    if n_prime < 1 or n < 1 or n % n_prime != 0 or m % n != 0:
        raise ValueError("need n' | n | q-1")
    return [(l + i * n_prime) % m for i in range(n // n_prime)]


def dim_gamma0T(k, l, q):
    """dim of the weight-k type-l forms on Gamma_0(T).

    Equals 1 + (k - 2l)/(q-1) when (q-1) | (k - 2l) and k >= 2l, else 0.
    The type l must be the canonical representative in [0, q-1).
    """
    if not 0 <= l < q - 1:
        raise ValueError("type must be reduced mod q-1")
    if k < 0:
        return 0
    if (k - 2 * l) % (q - 1) != 0 or k < 2 * l:
        return 0
    return 1 + (k - 2 * l) // (q - 1)


def valence_check(prof, q):
    """Exact test of the valence formula.

    sum(other orders) + v_e/(q+1) + v_inf/(q-1) = k/(q^2-1).
    """
    lhs = (
        Fraction(sum(prof.v_other))
        + Fraction(prof.v_e, q + 1)
        + Fraction(prof.v_inf, q - 1)
    )
    return lhs == Fraction(prof.k, q * q - 1)


def graded_mult_type(wt1, wt2):
    """Weight/type of a product of forms: weights add, types add mod q-1."""
    if wt1.q != wt2.q:
        raise ValueError("mismatched q")
    return WeightType(wt1.k + wt2.k, wt1.l + wt2.l, wt1.q)

"""Invariants of Drinfeld modular curves for congruence subgroups.

Three computations feed the divisor construction downstream:

  * cusps: orbits of primitive vectors in (A/N)^2 under the group's image
    mod N together with scalar rescaling, found by breadth-first closure
    under an explicit, inverse-closed generating set per family;
  * elliptic witnesses: exhaustive search of a family-shaped parameter box
    for non-scalar members whose fixed-point quadratic
    z^2 + ((d-a)/c) z - b/c is irreducible over K (equivalently, whose
    discriminant is not a square in K), each recorded with its determinant;
  * parity: square / non-square classification of the group from the
    witness determinants, which fixes the stabilizer index [G_e : (G_2)_e].

Two preset curves bundle the invariants (genus, cusps, stabilizer orders)
with hard values where only the final numbers are published: the full-group
square-determinant curve and the Gamma_0(T) square-determinant curve.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .congruence import GroupSpec, Mat2, member
from .ffarith import (
    Fq,
    FqElem,
    PolyA,
    RatK,
    WorkBoundError,
    is_square_fq,
    is_square_k,
    poly_ext_gcd,
)

ELLIPTIC_BOX_LIMIT = 500_000
CUSP_LEVEL_DEG_LIMIT = 2

PRESETS = ("GL2A_2", "Gamma0T_2")


@dataclass(frozen=True)
class CuspSet:
    """Orbit representatives of primitive vectors mod the level."""

    reps: tuple
    sizes: tuple
    total: int

    @property
    def count(self):
        return len(self.reps)


@dataclass(frozen=True)
class EllipticWitness:
    """A non-scalar group element with K-irreducible fixed-point quadratic.

    quad_b = (d-a)/c and quad_c = -b/c are the coefficients of the monic
    quadratic z^2 + quad_b*z + quad_c fixed by gamma; the discriminant
    quad_b^2 - 4*quad_c is nonzero and not a square in K.
    """

    gamma: Mat2
    quad_b: RatK
    quad_c: RatK
    det: FqElem
    det_is_square: bool

    def disc(self):
        return self.quad_b * self.quad_b - self.quad_c * 4


@dataclass(frozen=True)
class Parity:
    """Square / non-square classification, honest about the search bound.

    kind is "Square", "NonSquare", or "NoWitnessFound"; a NonSquare result
    stores a witness with non-square determinant.
    """

    kind: str
    bound: int
    witness: EllipticWitness | None = None

    def __post_init__(self):
        if self.kind not in ("Square", "NonSquare", "NoWitnessFound"):
            raise ValueError("unknown parity kind %r" % (self.kind,))
        if self.kind == "NonSquare":
            if self.witness is None or self.witness.det_is_square:
                raise ValueError("NonSquare requires a non-square-det witness")


@dataclass(frozen=True)
class EllipticPointRecord:
    """One elliptic point with its stabilizer orders (modulo scalars) in the
    group and in its square-determinant subgroup."""

    witness: EllipticWitness | None
    stab_order: int
    stab_order_sq: int


@dataclass(frozen=True)
class CurveInvariants:
    q: int
    group: GroupSpec
    genus: int
    cusps: CuspSet
    cusp_stab_orders: tuple
    elliptic_points: tuple
    parity: Parity


def _residues(N):
    """All residues mod N, as reduced polynomials of degree < deg N."""
    field = N.field
    deg = N.degree
    elems = list(field.elements())
    out = []
    for combo in itertools.product(elems, repeat=deg):
        out.append(PolyA(field, list(combo)))
    return out


def primitive_vectors(N, *_ignored):
    """All (u, v) in (A/N)^2 with gcd(u, v, N) = 1."""
    if N.is_zero() or N.is_constant():
        raise ValueError("level must be nonconstant")
    field = N.field
    if field.q ** (2 * N.degree) > ELLIPTIC_BOX_LIMIT:
        raise WorkBoundError("residue space too large")
    res = _residues(N)
    one = PolyA.one(field)
    out = []
    for u in res:
        gu = u.gcd(N)
        if gu == one:
            out.extend((u, v) for v in res)
            continue
        for v in res:
            if gu.gcd(v) == one:
                out.append((u, v))
    return out


def _mod_n_generators(G, N):
    """An inverse-closed generating set of <image of G mod N, scalars>.

    Matrices are (a, b, c, d) tuples of residues.  Scalars realize the
    F_q^x rescaling of primitive vectors; the rest generate the group's
    image mod N: elementary matrices compatible with the congruence shape,
    diagonal torus elements, and determinant-coset representatives.
    """
    field = N.field
    zero = PolyA.zero(field)
    one = PolyA.one(field)
    res = _residues(N)
    nonzero = [r for r in res if not r.is_zero()]
    units = []
    for r in res:
        g, s, _ = poly_ext_gcd(r, N)
        if g == one:
            units.append((r, s % N))
    gens = []
    for alpha in field.nonzero_elements():
        ap = PolyA.const(field, alpha)
        gens.append((ap, zero, zero, ap))
    if G.family == "gammaN":
        return gens
    det_vals = G.det_values(field)
    for x in nonzero:
        gens.append((one, x, zero, one))
    if G.family == "gamma1":
        for delta in det_vals:
            gens.append((one, zero, zero, PolyA.const(field, delta)))
        return gens
    for r, rinv in units:
        gens.append((r, zero, zero, rinv))
    for delta in det_vals:
        gens.append((PolyA.const(field, delta), zero, zero, one))
    if G.family == "full":
        for x in nonzero:
            gens.append((one, zero, x, one))
    return gens


def cusps(G, field=None):
    """Cusp orbits: primitive vectors mod the group image and scalars.

    The full group uses the internal level T (any level gives one orbit
    since the action is transitive).  Levels of degree > 2 exceed the
    work bound.
    """
    field = G.field_for(field)
    N = G.level if G.level is not None else PolyA.T(field)
    if N.degree > CUSP_LEVEL_DEG_LIMIT:
        raise WorkBoundError("cusp computation limited to levels of degree <= 2")
    prim = primitive_vectors(N)
    gens = _mod_n_generators(G, N)
    seen = set()
    orbits = []
    for start in prim:
        if start in seen:
            continue
        seen.add(start)
        stack = [start]
        orbit = [start]
        while stack:
            u, v = stack.pop()
            for a, b, c, d in gens:
                w = ((a * u + b * v) % N, (c * u + d * v) % N)
                if w not in seen:
                    seen.add(w)
                    orbit.append(w)
                    stack.append(w)
        orbits.append(orbit)
    keyed = []
    for orbit in orbits:
        rep = min(orbit, key=lambda w: (w[0].sort_key(), w[1].sort_key()))
        keyed.append((rep, len(orbit)))
    keyed.sort(key=lambda item: (item[0][0].sort_key(), item[0][1].sort_key()))
    return CuspSet(
        reps=tuple(rep for rep, _ in keyed),
        sizes=tuple(size for _, size in keyed),
        total=len(prim),
    )


def _polys_up_to(field, deg_bound):
    """All polynomials of degree <= deg_bound, ascending enumeration."""
    elems = list(field.elements())
    out = []
    for combo in itertools.product(elems, repeat=deg_bound + 1):
        out.append(PolyA(field, list(combo)))
    return out


def elliptic_search(G, deg_bound, field=None):
    """Exhaustive witness search over the family's parameter box.

    Box shapes (parameters range over all polynomials of degree <=
    deg_bound): full (a, b; c, d); gamma1 (aN+1, b; cN, d); gamma0
    (a1*N+a0, b; cN, d) with linear level N.  A member is kept as a witness
    when its lower-left entry is nonzero and the fixed-point discriminant
    is nonzero and not a square in K.  Output is sorted lexicographically
    on matrix entries.
    """
    field = G.field_for(field)
    if G.family == "gammaN":
        raise ValueError("witness search is not defined for identity-congruence groups")
    if G.family in ("gamma1", "gamma0"):
        if G.level.degree != 1:
            raise ValueError("witness search requires a linear level")
    n_params = {"full": 4, "gamma1": 4, "gamma0": 5}[G.family]
    per = field.q ** (deg_bound + 1)
    if per**n_params > ELLIPTIC_BOX_LIMIT:
        raise WorkBoundError("elliptic search box too large")
    polys = _polys_up_to(field, deg_bound)
    one = PolyA.one(field)
    N = G.level
    seen = set()
    witnesses = []
    if G.family == "full":
        combos = ((a, b, c, d) for a, b, c, d in itertools.product(polys, repeat=4))
    elif G.family == "gamma1":
        combos = (
            (a * N + one, b, c * N, d)
            for a, b, c, d in itertools.product(polys, repeat=4)
        )
    else:
        combos = (
            (a1 * N + a0, b, c * N, d)
            for a1, a0, b, c, d in itertools.product(polys, repeat=5)
        )
    four = RatK.from_value(field, 4)
    for a, b, c, d in combos:
        if c.is_zero():
            continue
        gamma = Mat2.if_unit(a, b, c, d)
        if gamma is None or not member(gamma, G):
            continue
        key = gamma.entries()
        if key in seen:
            continue
        seen.add(key)
        quad_b = RatK(d - a, c)
        quad_c = RatK(-b, c)
        disc = quad_b * quad_b - four * quad_c
        if disc.is_zero() or is_square_k(disc):
            continue
        witnesses.append(
            EllipticWitness(
                gamma=gamma,
                quad_b=quad_b,
                quad_c=quad_c,
                det=gamma.det,
                det_is_square=is_square_fq(gamma.det),
            )
        )
    witnesses.sort(key=lambda w: w.gamma.sort_key())
    return witnesses


def parity(G, deg_bound, field=None):
    """Square / non-square classification from the witness determinants."""
    witnesses = elliptic_search(G, deg_bound, field)
    if not witnesses:
        return Parity("NoWitnessFound", deg_bound)
    for w in witnesses:
        if not w.det_is_square:
            return Parity("NonSquare", deg_bound, w)
    return Parity("Square", deg_bound)


def stabilizer_index(p):
    """[G_e : (G_2)_e]: 1 for square groups, 2 for non-square ones."""
    if p.kind == "Square":
        return 1
    if p.kind == "NonSquare":
        return 2
    raise ValueError("parity undecided at bound %d" % p.bound)


def elliptic_point_classes(witnesses):
    """Witnesses merged by fixed-point quadratic (the elliptic points)."""
    classes = {}
    order = []
    for w in witnesses:
        key = (w.quad_b, w.quad_c)
        if key not in classes:
            classes[key] = []
            order.append(key)
        classes[key].append(w)
    return [(key[0], key[1], tuple(classes[key])) for key in order]


def assemble_invariants(preset, field):
    """Invariants of the two preset square-determinant curves.

    GL2A_2: the curve of the square-determinant subgroup of GL2(A); one
    cusp of stabilizer order (q-1)/2 and one elliptic point of stabilizer
    order q+1 in the full group, (q+1)/2 in the subgroup.

    Gamma0T_2: the curve of the square-determinant subgroup of
    Gamma_0(T); two stacky cusps of stabilizer order (q-1)/2 each and no
    elliptic points.
    """
    q = field.q
    if preset == "GL2A_2":
        base = GroupSpec("full", None)
        curve_group = GroupSpec("full", None, 2)
        par = parity(base, 0, field)
        witnesses = elliptic_search(base, 0, field)
        rep = witnesses[0] if witnesses else None
        return CurveInvariants(
            q=q,
            group=curve_group,
            genus=0,
            cusps=cusps(curve_group, field),
            cusp_stab_orders=((q - 1) // 2,),
            elliptic_points=(EllipticPointRecord(rep, q + 1, (q + 1) // 2),),
            parity=par,
        )
    if preset == "Gamma0T_2":
        t = PolyA.T(field)
        base = GroupSpec("gamma0", t)
        curve_group = GroupSpec("gamma0", t, 2)
        par = parity(base, 0, field)
        return CurveInvariants(
            q=q,
            group=curve_group,
            genus=0,
            cusps=cusps(curve_group, field),
            cusp_stab_orders=((q - 1) // 2, (q - 1) // 2),
            elliptic_points=(),
            parity=par,
        )
    raise ValueError("unknown preset %r" % (preset,))

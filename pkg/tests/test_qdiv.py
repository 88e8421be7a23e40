"""Q-divisors, Riemann-Roch sections, and graded section-ring presentations."""

from __future__ import annotations

import dataclasses
import random
from fractions import Fraction

import pytest

from drinfeld import (
    CuspSet,
    QDivisor,
    QPoint,
    WorkBoundError,
    assemble_invariants,
    best_lower_approximations,
    dim_gamma0T,
    floor_div,
    h0,
    h0_weighted,
    log_canonical_divisor,
    presentation,
    rr_basis,
)
from conftest import SEED, get_field

Z, O, I = QPoint.ZERO, QPoint.ONE, QPoint.INFINITY


def qdiv(z=0, o=0, i=0):
    return QDivisor({Z: Fraction(z), O: Fraction(o), I: Fraction(i)})


# ---------------------------------------------------------------- divisors


def test_divisor_arithmetic_and_accessors():
    D = qdiv(z=Fraction(3, 2), i=-2)
    E = qdiv(z=Fraction(1, 2), o=1)
    assert (D + E).items() == ((Z, Fraction(2)), (O, Fraction(1)), (I, Fraction(-2)))
    assert (D - E).coeff(Z) == 1
    assert (-D).coeff(I) == 2
    assert D.degree() == Fraction(-1, 2)
    assert D.support() == (Z, I)
    assert not D.is_integral()
    assert (D + E).coeff(O) == 1
    assert qdiv(z=2, o=-1).is_integral()


def test_divisor_scalar_multiplication_on_both_sides():
    D = qdiv(z=Fraction(3, 2), i=-2)
    assert (2 * D).coeff(Z) == 3
    assert (D * 2).coeff(I) == -4
    half = Fraction(1, 2) * D
    assert half.coeff(Z) == Fraction(3, 4)
    with pytest.raises(TypeError):
        D * 0.5


def test_divisor_drops_zero_coefficients_and_compares_by_value():
    assert qdiv(z=0, o=2).support() == (O,)
    assert qdiv(o=2) == QDivisor({O: Fraction(4, 2)})
    assert hash(qdiv(o=2)) == hash(QDivisor({O: 2, Z: 0}))
    assert qdiv(o=1) != qdiv(z=1)
    with pytest.raises(TypeError):
        QDivisor({"inf": 1})


def test_divisor_repr_is_ordered_and_exact():
    assert repr(QDivisor()) == "0"
    assert repr(qdiv(z=Fraction(3, 2), i=Fraction(-1, 2))) == "3/2(0) + -1/2(inf)"
    assert repr(qdiv(o=Fraction(1, 2))) == "1/2(1)"


def test_floor_is_componentwise_and_idempotent():
    D = qdiv(z=Fraction(3, 2), o=Fraction(-1, 2), i=Fraction(1, 2))
    F = floor_div(D)
    assert F == qdiv(z=1, o=-1)  # floor(1/2) = 0 leaves the support
    assert floor_div(F) == F
    assert F.is_integral()


# ------------------------------------------------------- h0 and rr_basis


def test_h0_known_values():
    assert h0(QDivisor()) == 1
    assert h0(qdiv(i=2)) == 3
    assert h0(qdiv(z=-1)) == 0
    assert h0(qdiv(z=Fraction(1, 2), o=Fraction(1, 2))) == 1


def test_rr_basis_known_labels():
    b = rr_basis(qdiv(i=2))
    assert b.size == 3
    assert [b.label(m) for m in b.exps] == ["1", "t^1", "t^2"]

    b = rr_basis(qdiv(z=1))
    assert b.size == 2
    assert [b.label(m) for m in b.exps] == ["t^-1", "1"]

    b = rr_basis(qdiv(z=1, o=1))
    assert b.size == 3
    assert [b.label(m) for m in b.exps] == [
        "t^-1*(t-1)^-1",
        "(t-1)^-1",
        "t^1*(t-1)^-1",
    ]

    assert rr_basis(qdiv(i=-1)).size == 0


def test_rr_basis_matches_h0_on_random_divisors():
    rng = random.Random(SEED)
    for _ in range(500):
        coeffs = {}
        for pt in (Z, O, I):
            den = rng.randint(1, 6)
            coeffs[pt] = Fraction(rng.randint(-5, 5), den)
        D = QDivisor(coeffs)
        basis = rr_basis(D)
        assert basis.size == h0(D)
        deg = int(floor_div(D).degree())
        # each section t^(m-a) (t-1)^(-b) lies in the space: pole orders at
        # 0, 1, inf are a-m <= a, b <= b, m-a-(-b)+... i.e. 0 <= m <= deg
        for m in basis.exps:
            assert 0 <= m <= deg
        assert len(set(basis.exps)) == basis.size


def test_h0_is_monotone_under_effective_additions():
    rng = random.Random(SEED + 1)
    for _ in range(200):
        D = QDivisor(
            {pt: Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for pt in (Z, O, I)}
        )
        E = QDivisor({pt: rng.randint(0, 3) for pt in (Z, O, I)})
        assert h0(D + E) >= h0(D)
        for pt in (Z, O, I):
            bump = h0(D + QDivisor({pt: 1}))
            assert h0(D) <= bump <= h0(D) + 1


# ------------------------------------------- best lower approximations


def test_best_lower_approximations_known_sequences():
    assert best_lower_approximations(Fraction(5, 3)) == [
        Fraction(1),
        Fraction(3, 2),
        Fraction(5, 3),
    ]
    assert best_lower_approximations(7) == [Fraction(7)]
    assert best_lower_approximations(Fraction(1, 2)) == [Fraction(0), Fraction(1, 2)]
    with pytest.raises(ValueError):
        best_lower_approximations(Fraction(-1, 3))


def test_best_lower_approximations_are_denominatorwise_records():
    rng = random.Random(SEED + 2)
    for _ in range(200):
        alpha = Fraction(rng.randint(0, 60), rng.randint(1, 24))
        seq = best_lower_approximations(alpha)
        # oracle: running maxima of floor(alpha*b)/b over b = 1..den(alpha)
        records = []
        best = None
        for b in range(1, alpha.denominator + 1):
            cand = Fraction((alpha.numerator * b) // alpha.denominator, b)
            if best is None or cand > best:
                best = cand
                records.append(cand)
        assert seq == records
        assert seq[0] == Fraction(alpha.numerator // alpha.denominator)
        assert seq[-1] == alpha
        assert all(x < y for x, y in zip(seq, seq[1:]))


# --------------------------------------------------- log-canonical divisors


@pytest.mark.parametrize(
    "preset,q,text",
    [
        ("GL2A_2", 5, "2/3(1) + -1/2(inf)"),
        ("GL2A_2", 3, "1/2(1)"),
        ("Gamma0T_2", 5, "3/2(0) + -1/2(inf)"),
        ("Gamma0T_2", 3, "2(0)"),
    ],
)
def test_log_canonical_divisors_of_the_presets(preset, q, text):
    inv = assemble_invariants(preset, get_field(q))
    assert repr(log_canonical_divisor(inv)) == text


def test_log_canonical_rejects_unsupported_shapes():
    inv = assemble_invariants("GL2A_2", get_field(5))
    with pytest.raises(ValueError):
        log_canonical_divisor(dataclasses.replace(inv, genus=1))
    ep = inv.elliptic_points[0]
    with pytest.raises(ValueError):
        log_canonical_divisor(
            dataclasses.replace(inv, elliptic_points=(ep, ep))
        )
    crowded = CuspSet(reps=((0,), (1,), (2,)), sizes=(1, 1, 1), total=3)
    with pytest.raises(ValueError):
        log_canonical_divisor(dataclasses.replace(inv, cusps=crowded))


# -------------------------------------------------------- weighted h0


def test_weighted_h0_known_row():
    assert [h0_weighted("Gamma0T_2", 5, 8, l) for l in range(4)] == [3, 0, 2, 0]


def test_weighted_h0_validates_arguments():
    with pytest.raises(ValueError):
        h0_weighted("GL2A_2", 5, 8, 0)
    with pytest.raises(ValueError):
        h0_weighted("Gamma0T_2", 5, 7, 0)
    with pytest.raises(ValueError):
        h0_weighted("Gamma0T_2", 5, 0, 0)
    with pytest.raises(ValueError):
        h0_weighted("Gamma0T_2", 5, 8, 4)
    with pytest.raises(ValueError):
        h0_weighted("Gamma0T_2", 5, 8, -1)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_weighted_h0_agrees_with_dimension_formula_and_divisor(q):
    inv = assemble_invariants("Gamma0T_2", get_field(q))
    D = log_canonical_divisor(inv)
    for k in range(2, 42, 2):
        total = 0
        for l in range(q - 1):
            val = h0_weighted("Gamma0T_2", q, k, l)
            assert val == dim_gamma0T(k, l, q)
            total += val
        assert total == h0(Fraction(k, 2) * D)


# -------------------------------------------------------- presentations


def check_bookkeeping(pres):
    for log in pres.degree_logs:
        assert log.span_rank + len(log.new_generators) == log.h0
        assert log.kernel_count == log.absorbed_count + len(log.new_relations)
        assert log.monomial_count >= log.span_rank
        assert log.span_rank <= log.h0
    collected = tuple(g for log in pres.degree_logs for g in log.new_generators)
    assert collected == pres.generators
    collected = tuple(r for log in pres.degree_logs for r in log.new_relations)
    assert collected == pres.relations


@pytest.mark.parametrize("q", [3, 5, 7])
def test_full_group_curve_ring_is_free_on_two_generators(q):
    inv = assemble_invariants("GL2A_2", get_field(q))
    D = log_canonical_divisor(inv)
    pres = presentation(D, max_weight=2 * (q + 1))
    assert pres.generator_weights() == (q - 1, q + 1)
    assert pres.relations == ()
    check_bookkeeping(pres)


def test_gamma0_curve_ring_q3_has_three_generators_and_one_relation():
    inv = assemble_invariants("Gamma0T_2", get_field(3))
    D = log_canonical_divisor(inv)
    pres = presentation(D, max_weight=12)
    assert pres.generator_weights() == (2, 2, 2)
    assert pres.relation_weights() == (4,)
    rel = pres.relations[0]
    assert rel.combo == (((1, 0, 1), Fraction(-1)), ((0, 2, 0), Fraction(1)))
    assert set(rel.support()) == {(1, 0, 1), (0, 2, 0)}
    check_bookkeeping(pres)


def test_gamma0_curve_ring_q5_has_one_relation_in_weight_eight():
    inv = assemble_invariants("Gamma0T_2", get_field(5))
    D = log_canonical_divisor(inv)
    pres = presentation(D, max_weight=16)
    assert pres.generator_weights() == (2, 4, 4)
    labels = [
        rr_basis(g.degree * D).label(g.section_index) for g in pres.generators
    ]
    assert labels == ["t^-1", "t^-3", "t^-1"]
    assert pres.relation_weights() == (8,)
    assert set(pres.relations[0].support()) == {(4, 0, 0), (0, 1, 1)}
    check_bookkeeping(pres)


def test_presentation_is_invariant_under_swapping_zero_and_one():
    inv = assemble_invariants("GL2A_2", get_field(5))
    D = log_canonical_divisor(inv)
    swapped = QDivisor(
        {Z: D.coeff(O), O: D.coeff(Z), I: D.coeff(I)}
    )
    a = presentation(D, max_weight=12)
    b = presentation(swapped, max_weight=12)
    assert a.generator_weights() == b.generator_weights()
    assert a.relation_weights() == b.relation_weights()


def test_presentation_validates_truncation_weight():
    D = qdiv(i=1)
    for bad in (0, 3, -2):
        with pytest.raises(ValueError):
            presentation(D, max_weight=bad)


def test_presentation_enforces_work_budget():
    inv = assemble_invariants("Gamma0T_2", get_field(3))
    D = log_canonical_divisor(inv)
    with pytest.raises(WorkBoundError):
        presentation(D, max_weight=400)


def test_presentation_of_a_free_ring_on_a_half_integer_divisor():
    pres = presentation(qdiv(i=Fraction(1, 2)), max_weight=10)
    # degree d has h0 = 1 + floor(d/2): the degree-1 constant and one
    # degree-2 section generate freely
    assert pres.generator_weights() == (2, 4)
    assert pres.relations == ()
    for log in pres.degree_logs:
        assert log.h0 == 1 + (log.weight // 2) // 2

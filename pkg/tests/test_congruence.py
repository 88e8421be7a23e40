"""Congruence subgroup descriptors, membership, indices, and cosets."""

from __future__ import annotations

import random

import pytest

from drinfeld import (
    GroupSpec,
    Mat2,
    ParseError,
    PolyA,
    coset_rep_nonsquare,
    det_image_order,
    gamma2_of,
    index_gamma2,
    is_square_fq,
    member,
    parse_group,
    parse_poly,
    quotient_order,
)
from conftest import SEED, get_field, is_square_mod, sample_unit_matrices


def mat(field, a, b, c, d):
    return Mat2(
        parse_poly(a, field),
        parse_poly(b, field),
        parse_poly(c, field),
        parse_poly(d, field),
    )


# --- matrices ---------------------------------------------------------------


def test_matrix_requires_constant_unit_determinant():
    F5 = get_field(5)
    with pytest.raises(ValueError):
        mat(F5, "T", "0", "0", "T")  # det T^2
    with pytest.raises(ValueError):
        mat(F5, "1", "1", "1", "1")  # det 0
    assert Mat2.if_unit(PolyA.T(F5), PolyA.zero(F5), PolyA.zero(F5), PolyA.T(F5)) is None


def test_matrix_inverse_and_product():
    F7 = get_field(7)
    g = mat(F7, "4*T+4", "1", "5*T+2", "3")
    assert g.det == F7.elem(3)
    assert g * g.inverse() == Mat2.identity(F7)
    assert (g.inverse() * g) == Mat2.identity(F7)
    assert not g.is_scalar()
    assert Mat2.diagonal(F7, F7.elem(2), F7.elem(2)).is_scalar()


# --- membership -------------------------------------------------------------


def test_membership_congruence_shapes():
    F7 = get_field(7)
    N = parse_poly("4*T+3", F7)
    g = mat(F7, "4*T+4", "1", "5*T+2", "3")
    assert member(g, GroupSpec("gamma1", N)) is True
    assert member(g, GroupSpec("gamma1", N, det_index=2)) is False  # det 3 non-square
    assert member(g, GroupSpec("gamma0", N)) is True
    assert member(g, GroupSpec("gammaN", N)) is False
    assert member(g, GroupSpec("full", None)) is True
    for family, level in (("full", None), ("gamma0", N), ("gamma1", N), ("gammaN", N)):
        assert member(Mat2.identity(F7), GroupSpec(family, level)) is True


def test_membership_distinguishes_families():
    F5 = get_field(5)
    t = PolyA.T(F5)
    g_upper = mat(F5, "1", "3", "0", "2")  # c = 0, a = 1, det 2
    assert member(g_upper, GroupSpec("gamma0", t)) is True
    assert member(g_upper, GroupSpec("gamma1", t)) is True
    assert member(g_upper, GroupSpec("gammaN", t)) is False  # d = 2 not 1
    g_lower = mat(F5, "2", "0", "T", "3")  # c = T = 0 mod T but a = 2
    assert member(g_lower, GroupSpec("gamma0", t)) is True
    assert member(g_lower, GroupSpec("gamma1", t)) is False


def test_group_spec_validation():
    F5 = get_field(5)
    with pytest.raises(ValueError):
        GroupSpec("gamma0", None)  # level required
    with pytest.raises(ValueError):
        GroupSpec("full", PolyA.T(F5))  # no level allowed
    with pytest.raises(ValueError):
        GroupSpec("gamma0", PolyA.const(F5, F5.elem(2)))  # constant level
    with pytest.raises(ValueError):
        GroupSpec("bogus", PolyA.T(F5))


# --- determinant images and indices ----------------------------------------


def test_det_image_orders():
    F7 = get_field(7)
    t = PolyA.T(F7)
    assert det_image_order(GroupSpec("gamma0", t), F7) == 6
    assert det_image_order(GroupSpec("gamma0", t, det_index=2), F7) == 3
    assert det_image_order(GroupSpec("gamma0", t, det_index=6), F7) == 1
    assert det_image_order(GroupSpec("full", None), F7) == 6
    assert det_image_order(GroupSpec("gamma1", t), F7) == 6
    assert det_image_order(GroupSpec("gammaN", t), F7) == 1


def test_index_of_square_determinant_subgroup():
    F7 = get_field(7)
    t = PolyA.T(F7)
    assert index_gamma2(GroupSpec("full", None), F7) == 2
    assert index_gamma2(GroupSpec("gamma0", t), F7) == 2
    assert index_gamma2(GroupSpec("gamma1", t), F7) == 2
    with pytest.raises(ValueError):
        index_gamma2(GroupSpec("gammaN", t), F7)
    with pytest.raises(ValueError):
        index_gamma2(GroupSpec("gamma0", t, det_index=2), F7)


def test_gamma2_of_restricts_determinants():
    F5 = get_field(5)
    t = PolyA.T(F5)
    G2 = gamma2_of(GroupSpec("gamma0", t))
    assert G2.det_index == 2
    assert det_image_order(G2, F5) == 2


def test_coset_representative():
    F7 = get_field(7)
    rep = coset_rep_nonsquare(F7)
    assert rep == Mat2.diagonal(F7, F7.elem(3), F7.elem(1))
    assert is_square_fq((rep * rep).det)
    F5 = get_field(5)
    rep5 = coset_rep_nonsquare(F5)
    assert rep5 == Mat2.diagonal(F5, F5.elem(2), F5.elem(1))


def test_quotient_orders():
    F7 = get_field(7)
    t = PolyA.T(F7)
    G = GroupSpec("gamma0", t)
    assert quotient_order(G, gamma2_of(G), F7) == 2
    assert quotient_order(G, G, F7) == 1
    assert quotient_order(G, GroupSpec("gamma0", t, det_index=6), F7) == 6
    with pytest.raises(ValueError):
        quotient_order(gamma2_of(G), G, F7)  # containment reversed
    with pytest.raises(ValueError):
        quotient_order(G, GroupSpec("gamma1", t), F7)  # family mismatch
    with pytest.raises(ValueError):
        quotient_order(G, GroupSpec("gamma0", parse_poly("T+1", F7)), F7)


# --- descriptor parsing ------------------------------------------------------


def test_parse_group_descriptors():
    F7 = get_field(7)
    G = parse_group("gamma1:4*T+3", F7)
    assert G.family == "gamma1" and G.det_index == 1
    assert G.level == parse_poly("4*T+3", F7)
    assert parse_group("full", F7).family == "full"
    assert parse_group("gamma0:T!sq", F7).det_index == 2
    assert parse_group("gamma0:T!one", F7).det_index == 6
    assert parse_group("gamma0:T!idx3", F7).det_index == 3
    assert parse_group("gamma0", F7, "T").level == PolyA.T(F7)
    assert str(parse_group("gamma1:4*T+3!sq", F7)) == "gamma1:4*T+3!sq"


def test_parse_group_errors():
    F7 = get_field(7)
    for bad in ("bogus", "gamma0", "gamma0:1", "gamma0:T!wat", "full:T", "gamma0:T!idx5"):
        with pytest.raises((ParseError, ValueError)):
            parse_group(bad, F7)


# --- sampled group laws ------------------------------------------------------


@pytest.mark.parametrize("family", ["full", "gamma0"])
def test_square_determinant_subgroup_is_normal(family):
    rng = random.Random(SEED)
    F5 = get_field(5)
    c_times_t = family == "gamma0"
    level = PolyA.T(F5) if c_times_t else None
    G = GroupSpec(family, level)
    G2 = gamma2_of(G)
    gammas = sample_unit_matrices(rng, F5, 200, deg=2, c_times_t=c_times_t)
    deltas = sample_unit_matrices(
        rng, F5, 200, deg=2, det_pred=lambda x: is_square_mod(x, 5), c_times_t=c_times_t
    )
    for g, d in zip(gammas, deltas):
        assert member(g, G)
        assert member(d, G2)
        assert member(g * d * g.inverse(), G2)


@pytest.mark.parametrize("family", ["full", "gamma0"])
def test_membership_closed_under_product_and_inverse(family):
    rng = random.Random(SEED + 1)
    F5 = get_field(5)
    c_times_t = family == "gamma0"
    level = PolyA.T(F5) if c_times_t else None
    G = GroupSpec(family, level)
    ms = sample_unit_matrices(rng, F5, 100, deg=2, c_times_t=c_times_t)
    for g, h in zip(ms[::2], ms[1::2]):
        assert member(g * h, G)
        assert member(g.inverse(), G)
        assert (g * h).det == g.det * h.det


def test_nonsquare_coset_translates_into_square_subgroup():
    rng = random.Random(SEED + 2)
    F5 = get_field(5)
    G2 = gamma2_of(GroupSpec("full", None))
    rep_inv = coset_rep_nonsquare(F5).inverse()
    outside = sample_unit_matrices(
        rng, F5, 200, deg=2, det_pred=lambda x: not is_square_mod(x, 5)
    )
    for g in outside:
        assert not member(g, G2)
        assert member(rep_inv * g, G2)

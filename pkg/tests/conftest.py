"""Shared fixtures: a fixed seed, a field cache, and fast matrix samplers.

Matrix sampling works on integer coefficient lists (prime fields only) so
the unit-determinant rejection loop avoids object construction until a
candidate passes; entries have degree <= deg, and a multiple-of-T lower
left corner or a determinant predicate can be requested.
"""

from __future__ import annotations

import random

import pytest

from drinfeld import Fq, Mat2, PolyA

SEED = 20250814

_FIELDS = {}


def get_field(q):
    if q not in _FIELDS:
        _FIELDS[q] = Fq(q)
    return _FIELDS[q]


@pytest.fixture
def rng():
    return random.Random(SEED)


@pytest.fixture(scope="session")
def field_cache():
    return get_field


def _int_mul(f, g, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x:
            for j, y in enumerate(g):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_square_mod(x, p):
    return pow(x, (p - 1) // 2, p) == 1


def sample_unit_matrices(rng, field, count, deg=2, det_pred=None, c_times_t=False):
    """Random members of GL_2(A) with entries of degree <= deg.

    Rejection sampling on the determinant being a nonzero constant, with an
    optional predicate on its value and an optional constraint that the
    lower-left entry be a multiple of T.  Prime fields only.
    """
    assert field.e == 1, "integer sampler needs a prime field"
    p = field.q
    out = []
    while len(out) < count:
        a = [rng.randrange(p) for _ in range(deg + 1)]
        b = [rng.randrange(p) for _ in range(deg + 1)]
        d = [rng.randrange(p) for _ in range(deg + 1)]
        if c_times_t:
            c = [0] + [rng.randrange(p) for _ in range(deg)]
        else:
            c = [rng.randrange(p) for _ in range(deg + 1)]
        det = _int_mul(a, d, p)
        for k, v in enumerate(_int_mul(b, c, p)):
            det[k] = (det[k] - v) % p
        if det[0] == 0 or any(det[1:]):
            continue
        if det_pred is not None and not det_pred(det[0]):
            continue
        out.append(
            Mat2(
                PolyA.from_ints(field, a),
                PolyA.from_ints(field, b),
                PolyA.from_ints(field, c),
                PolyA.from_ints(field, d),
            )
        )
    return out


@pytest.fixture(scope="session")
def matrix_sampler():
    return sample_unit_matrices

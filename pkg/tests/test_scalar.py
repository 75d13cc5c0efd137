"""Scalar ring checked against a floating-point complex embedding."""
import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qwreath.scalar import Params, cyclotomic_poly, is_prime_power, ring

RINGS = [(4, 5), (6, 7), (12, 13), (2, 3)]


def embed(x):
    """zeta_m -> exp(2 pi i / m), s -> +sqrt(q)."""
    K = x.ring
    z = cmath.exp(2j * cmath.pi / K.m)
    phi = K.phi
    one = sum(c * z ** i for i, c in enumerate(x.num[:phi]))
    s = sum(c * z ** i for i, c in enumerate(x.num[phi:]))
    return (one + s * K.q ** 0.5) / x.den


def scalars(K):
    coef = st.integers(-6, 6)
    return st.builds(
        lambda a, b, den: K.from_json({"one": a, "s": b, "den": den}),
        st.lists(coef, min_size=K.phi, max_size=K.phi),
        st.lists(coef, min_size=K.phi, max_size=K.phi),
        st.integers(1, 5))


def close(a, b):
    return abs(a - b) < 1e-6 * (1 + abs(a) + abs(b))


@pytest.mark.parametrize("m,q", RINGS)
def test_defining_relations(m, q):
    K = ring(m, q)
    s = K.sqrt_q()
    assert s * s == K(q)
    assert K.root(m) == K.one
    assert (1 + s) * (1 - s) == K(1 - q)
    for k in range(m):
        tot = sum((K.root(j * k) for j in range(m)), K.zero) * K.rational(1, m)
        assert tot == (K.one if k == 0 else K.zero)


@pytest.mark.parametrize("m,q", RINGS)
def test_roots_multiply(m, q):
    K = ring(m, q)
    for a in range(m):
        for b in range(m):
            assert K.root(a) * K.root(b) == K.root(a + b)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == [-1, 1]
    assert cyclotomic_poly(4) == [1, 0, 1]
    assert cyclotomic_poly(6) == [1, -1, 1]
    assert cyclotomic_poly(12) == [1, 0, -1, 0, 1]


def test_prime_powers():
    assert [q for q in range(2, 30) if is_prime_power(q)] == \
        [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]


@pytest.mark.parametrize("m,q", RINGS)
def test_invert_restricted(m, q):
    K = ring(m, q)
    s = K.sqrt_q()
    assert s.invert_restricted() == s * K.rational(1, q)
    assert K.root(1).invert_restricted() == K.root(m - 1)
    assert K(2).invert_restricted() == K.rational(1, 2)
    x = K.rational(-3, 7) * K.root(m // 2 + 1) * s
    assert x * x.invert_restricted() == K.one
    with pytest.raises(ValueError):
        (K.one + s).invert_restricted()


@pytest.mark.parametrize("m,q", [(4, 5), (6, 7)])
@given(data=st.data())
def test_ring_axioms_against_embedding(m, q, data):
    K = ring(m, q)
    a, b, c = (data.draw(scalars(K)) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a
    assert close(embed(a * b), embed(a) * embed(b))
    assert close(embed(a + b), embed(a) + embed(b))
    assert close(embed(a - b), embed(a) - embed(b))


@given(st.integers(-50, 50), st.integers(1, 30))
def test_rationals(p, r):
    K = ring(6, 7)
    x = K.rational(p, r)
    assert x.is_rational() and x.as_fraction() == Fraction(p, r)


@pytest.mark.parametrize("m,q", RINGS)
def test_json_round_trip_and_canonical(m, q):
    K = ring(m, q)
    x = (K.sqrt_q() + K.root(1)) * K.rational(3, 4)
    assert K.from_json(x.to_json()) == x
    # normalizing twice is normalizing once
    y = K.from_json(K.from_json(x.to_json()).to_json())
    assert y.to_json() == x.to_json()
    assert K.from_json(3) == K(3) and K.from_json("-2/6") == K.rational(-1, 3)
    with pytest.raises(ZeroDivisionError):
        K.from_json({"one": [1] * K.phi, "s": [0] * K.phi, "den": 0})


def test_params_validation():
    assert Params(q=5, n=2, k=2).nbar == 1
    assert Params(q=7, n=3).nbar == 3
    for kw in (dict(q=6), dict(q=5, n=4), dict(q=7, n=2, k=1), dict(q=4),
               dict(q=7, n=3, xi_exp=3), dict(q=5, d=0)):
        with pytest.raises(ValueError):
            Params(**kw)
    assert Params(q=5, n=1, k=3).k == 3  # any k in the Yokonuma case

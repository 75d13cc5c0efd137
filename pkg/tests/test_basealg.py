"""Base algebra A^{(x)d}: twisted multiplication, sigma, rho and the t' basis."""
import pytest
from hypothesis import given, strategies as st

from qwreath.basealg import BaseAlgebra
from qwreath.qwp import WreathAlgebra
from qwreath.scalar import Params, ring

PARAMS = [Params(q=5, n=1), Params(q=5, n=2), Params(q=5, n=2, k=2), Params(q=7, n=3), Params(q=13, n=2)]


def base(p, d=2):
    return WreathAlgebra(p.replace(d=d)).base


def laurent(B, lo=-2, hi=2, torus=True):
    """Hypothesis strategy for small elements of B."""
    mono = st.tuples(
        st.tuples(*[st.integers(0, B.mt - 1 if torus else 0)] * B.d),
        st.tuples(*[st.integers(lo, hi)] * B.d),
        st.integers(-3, 3))
    return st.lists(mono, max_size=4).map(
        lambda ms: sum((B.monomial(a, l, c) for a, l, c in ms), B.elt()))


def test_rho_examples_skew():
    B = base(Params(q=7, n=3))
    x1, x2 = B.x(1), B.x(2)
    S = B.S(1)
    # rho(x1^2) = x1^2 S^(-2) + x1 x2 S^(-1), S^(r) = psi^r on the first slot
    assert B.rho(x1 * x1, 1) == x1 * x1 * B.shift_delta(S, -2) + x1 * x2 * B.shift_delta(S, -1)
    assert B.rho(x1 * x2, 1).is_zero()
    assert B.rho(B.x(1, -1), 1) == -(B.x(2, -1) * S)
    assert B.rho(B.one(), 1).is_zero()


@pytest.mark.parametrize("q", [5, 13])
def test_rho_demazure_oracle_untwisted(q):
    # with trivial twist: (x1 - x2) rho(P) = x1 (P - sigma P) S
    B = BaseAlgebra(ring(q - 1, q), 3, q - 1, 0)
    for i in (1, 2):
        for lam in [(2, 0, 1), (-1, 3, 0), (0, -2, 2), (1, 1, 0), (4, -3, 1)]:
            P = B.x(1, lam[0]) * B.x(2, lam[1]) * B.x(3, lam[2])
            lhs = (B.x(i) - B.x(i + 1)) * B.rho(P, i)
            rhs = B.x(i) * (P - B.sigma(P, i)) * B.S(i)
            assert lhs == rhs


@pytest.mark.parametrize("p", PARAMS)
@given(data=st.data())
def test_rho_leibniz(p, data):
    B = base(p, 3)
    f = data.draw(laurent(B))
    g = data.draw(laurent(B))
    for i in (1, 2):
        assert B.rho(f * g, i) == B.rho(f, i) * g + B.sigma(f, i) * B.rho(g, i)


@pytest.mark.parametrize("p", PARAMS)
@given(data=st.data())
def test_rho_torus_linear(p, data):
    B = base(p, 2)
    f = data.draw(laurent(B, 0, 0))  # torus only
    P = data.draw(laurent(B, torus=False))
    assert B.rho(f, 1).is_zero()
    assert B.rho(f * P, 1) == B.sigma(f, 1) * B.rho(P, 1)


@pytest.mark.parametrize("p", PARAMS)
def test_skew_commutation(p):
    B = base(p)
    lhs = B.x(1) * B.t(1)
    rhs = B.t(1) * B.x(1) * B.K.root(B.psi_exp)
    assert lhs == rhs
    assert B.x(1) * B.t(2) == B.t(2) * B.x(1)
    # xi^2 has order nbar
    assert B.K.root(B.psi_exp * p.nbar) == B.K.one


@pytest.mark.parametrize("p", PARAMS)
def test_idempotents(p):
    B = base(p, 3)
    for i in (1, 2):
        e = B.e(i)
        assert e * e == e
        assert B.S(i) * B.S(i) == B.S(i) * (B.K.q - 1)
        for j in range(B.mt):
            # S_i t^a = t^{sigma a} S_i on the torus
            t = B.t(i, j) * B.t(3, 1)
            assert B.S(i) * t == B.sigma(t, i) * B.S(i)
    eps = B.epsilon_I()
    assert eps * eps == eps


@pytest.mark.parametrize("p", PARAMS)
def test_tprime_orthogonal_and_complete(p):
    B = base(p)
    for slot in (1, 2):
        total = B.elt()
        for j in range(B.mt):
            tj = B.tprime(slot, j)
            total = total + tj
            for jj in range(B.mt):
                assert tj * B.tprime(slot, jj) == (tj if j == jj else B.elt())
            # t acts on t'_j by u^-j
            assert B.t(slot) * tj == tj * B.K.root(-B.u_exp * j)
        assert total == B.one()


def test_tprime_m2_example():
    B = BaseAlgebra(ring(2, 3), 1, 2)
    half = B.K.rational(1, 2)
    assert B.tprime(1, 0) == (B.one() + B.t(1)) * half
    assert B.tprime(1, 1) == (B.one() - B.t(1)) * half
    assert B.to_tprime(B.t(1)) == {(0,): B.K.one, (1,): -B.K.one}


@pytest.mark.parametrize("p", PARAMS[:3])
@given(data=st.data())
def test_tprime_round_trip(p, data):
    B = base(p)
    b = data.draw(laurent(B, 0, 0))
    coeffs = B.tprime_convert(b)
    assert B.tprime_convert(coeffs, "t'->t") == b
    with pytest.raises(ValueError):
        B.to_tprime(B.x(1))


@pytest.mark.parametrize("p", PARAMS)
@given(data=st.data())
def test_sigma_is_algebra_map(p, data):
    B = base(p, 3)
    f, g = data.draw(laurent(B)), data.draw(laurent(B))
    assert B.sigma(f * g, 1) == B.sigma(f, 1) * B.sigma(g, 1)
    assert B.sigma(B.sigma(f, 2), 2) == f


def test_json_round_trip():
    B = base(Params(q=7, n=3))
    b = B.x(1, -2) * B.t(2, 3) * B.K.sqrt_q() + B.S(1)
    assert B.from_json(B.to_json(b)) == b
    with pytest.raises(ValueError):
        B.from_json({"terms": [{"t": [0], "x": [0, 0], "c": 1}]})

"""Wreath product multiplication: spec examples, Hecke oracle, algebra laws."""
from itertools import product

import pytest
from hypothesis import given, strategies as st

from qwreath import symgroup as sg
from qwreath.qwp import Flavor, WreathAlgebra
from qwreath.scalar import Params

MATRIX = [(5, 1, 0), (5, 2, 0), (5, 2, 2), (7, 3, 0)]


def alg(q, n, k, d=2, flavor=None):
    return WreathAlgebra(Params(q=q, n=n, k=k, d=d), flavor)


@pytest.mark.parametrize("qnk", MATRIX)
def test_quadratic_and_wreath_examples(qnk):
    W = alg(*qnk)
    H1 = W.H(1)
    assert H1 * H1 == W.from_base(W.S(1)) * H1 + W.from_base(W.R(1))
    assert H1 * W.x(1) == W.x(2) * H1 + W.from_base(W.base.rho(W.base.x(1), 1))
    if qnk[1] == 1:
        assert H1 * W.x(1) == W.x(2) * H1 + W.from_base(W.S(1)) * W.x(1)


@pytest.mark.parametrize("qnk", MATRIX)
def test_splitting(qnk):
    W = alg(*qnk, d=3)
    for i in (1, 2):
        g, gb = W.from_base(W.gamma(i)), W.from_base(W.gamma_bar(i))
        assert ((W.H(i) + g) * (W.H(i) - gb)).is_zero()
        assert ((W.H(i) - gb) * (W.H(i) + g)).is_zero()
        # gamma_bar = sigma(gamma) + (q - 1) e
        assert W.gamma_bar(i) == W.base.sigma(W.gamma(i), i) + W.base.e(i) * (W.K.q - 1)


def _hecke_oracle(u, v, q, d):
    """T_u T_v in the finite Iwahori-Hecke algebra, as {w: int}."""
    cur = {u: 1}
    for i in sg.reduced_word(v):
        s = sg.s(i, d)
        nxt = {}
        for w, c in cur.items():
            ws = sg.mul(w, s)
            if sg.length(ws) > sg.length(w):
                nxt[ws] = nxt.get(ws, 0) + c
            else:
                nxt[w] = nxt.get(w, 0) + (q - 1) * c
                nxt[ws] = nxt.get(ws, 0) + q * c
        cur = {w: c for w, c in nxt.items() if c}
    return cur


@pytest.mark.parametrize("q", [3, 5])
def test_affine_hecke_finite_part_matches_oracle(q):
    W = WreathAlgebra(Params(q=q, n=1, d=3), Flavor.affine_hecke())
    for u in sg.all_perms(3):
        for v in sg.all_perms(3):
            want = W.elt()
            for w, c in _hecke_oracle(u, v, q, 3).items():
                want = want + W.Hw(w) * c
            assert W.Hw(u) * W.Hw(v) == want


def test_affine_hecke_lusztig_relation():
    q = 5
    W = WreathAlgebra(Params(q=q, n=1, d=2), Flavor.affine_hecke())
    # T x^lam - x^{s lam} T = (q-1)(x^lam - x^{s lam})/(1 - x^{-alpha})
    assert W.H(1) * W.x(1) - W.x(2) * W.H(1) == W.x(1) * (q - 1)
    assert W.H(1) * W.x(2) - W.x(1) * W.H(1) == W.x(1) * (1 - q)
    lhs = W.H(1) * W.Y((2, 0)) - W.Y((0, 2)) * W.H(1)
    assert lhs == (W.Y((2, 0)) + W.Y((1, 1))) * (q - 1)


@pytest.mark.parametrize("qnk", MATRIX)
def test_braid(qnk):
    W = alg(*qnk, d=3)
    assert W.H(1) * W.H(2) * W.H(1) == W.H(2) * W.H(1) * W.H(2)
    assert W.Hw(sg.longest(3)) == W.H(1) * W.H(2) * W.H(1)


@pytest.mark.parametrize("qnk", MATRIX)
def test_gamma_word_independence(qnk):
    W = alg(*qnk, d=4)
    assert W.gamma_word([1, 3]) == W.gamma_word([3, 1])
    assert W.gamma_word([1, 2]) == W.gamma(2) * W.base.sigma(W.gamma(1), 2)
    assert W.gamma_w(sg.s(2, 4)) == W.gamma(2)
    # both reduced words of the longest element of Sigma_3
    assert W.gamma_word([1, 2, 1]) == W.gamma_word([2, 1, 2])


@pytest.mark.parametrize("qnk", MATRIX)
def test_y_elements(qnk):
    W = alg(*qnk, d=3)
    assert W.y((1, 1, 1)) == W.one()
    W2 = alg(*qnk, d=2)
    assert W2.y((2,)) == W2.H(1) + W2.from_base(W2.gamma(1))
    for lam in [(2, 1), (1, 2), (3,)]:
        y = W.y(lam)
        for i in range(1, 3):
            if sg.s(i, 3) in sg.parabolic(lam):
                assert y * W.H(i) == y * W.from_base(W.gamma_bar(i))
    with pytest.raises(ValueError):
        W.y((1, 1))


def test_y_printed_convention_is_not_a_hom():
    W = alg(5, 1, 0, d=3)
    W.y_convention = "printed"
    y = W.y((3,))
    assert y * W.H(1) != y * W.from_base(W.gamma_bar(1))
    W.y_convention = "bogus"
    with pytest.raises(ValueError):
        W.y((3,))


def monomials(W, E=2):
    return st.builds(
        lambda a, lam, w: W.monomial(a, lam, w),
        st.tuples(*[st.integers(0, W.base.mt - 1)] * W.d),
        st.tuples(*[st.integers(-E, E)] * W.d),
        st.sampled_from(sg.all_perms(W.d)))


FLAVORS = [alg(5, 1, 0, 3), alg(5, 2, 2, 3), alg(7, 3, 0, 3),
           WreathAlgebra(Params(q=7, n=3, d=3), Flavor.coarse(Params(q=7, n=3)))]


@pytest.mark.parametrize("W", FLAVORS, ids=["yok5", "skew5k2", "skew7", "coarse7"])
@given(data=st.data())
def test_associativity(W, data):
    a, b, c = (data.draw(monomials(W, 1)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("W", FLAVORS[:3], ids=["yok5", "skew5k2", "skew7"])
@given(data=st.data())
def test_right_form_round_trip(W, data):
    h = data.draw(monomials(W)) + data.draw(monomials(W)) * 3
    assert W.from_right_form(W.to_right_form(h)) == h


def test_subalgebra_project():
    W = alg(5, 1, 0, 3)
    h = W.H(1) * W.t(2) * W.H(2)
    assert W.subalgebra_project(h) == h
    with pytest.raises(ValueError, match="not in finite subalgebra"):
        W.subalgebra_project(W.H(1) * W.x(1))
    with pytest.raises(ValueError):
        W.subalgebra_project(h, "other")


@pytest.mark.parametrize("qnk", [(5, 2, 0), (7, 3, 0)])
def test_corner_upsilon(qnk):
    W = alg(*qnk)
    p = W.params
    C = WreathAlgebra(p, Flavor.coarse(p))
    eps = W.epsilon_I()
    assert W.corner_upsilon(C.one()) == eps
    U = W.corner_upsilon(C.H(1))
    assert U * U == U * (W.K.q - 1) + eps * W.K.q
    a, b = C.x(1) * C.H(1), C.H(1) * C.x(2, -1) + C.one()
    assert W.corner_upsilon(a * b) == W.corner_upsilon(a) * W.corner_upsilon(b)
    assert W.corner_upsilon(W.corner_upsilon(a), "inverse", C) == a
    if p.nbar > 1:
        assert (eps * W.x(1) * eps).is_zero()
    with pytest.raises(ValueError):
        W.corner_upsilon(W.H(1), "inverse")
    with pytest.raises(ValueError):
        W.corner_upsilon(W.H(1))


@pytest.mark.parametrize("qnk", MATRIX)
def test_bernstein(qnk):
    W = alg(*qnk)
    for lam in [(0, 0), (1, 0), (1, 1), (2, 0)]:
        assert W.bernstein_residual(1, lam, 6).is_zero()
    with pytest.raises(ValueError, match="window too small"):
        W.bernstein_residual(1, (3, 0), 2)


def test_flavor_mismatch_and_json():
    W = alg(7, 3, 0)
    V = alg(5, 1, 0)
    with pytest.raises(ValueError):
        W.mul(W.H(1), V.H(1))
    h = W.H(1) * W.x(1, -2) * W.t(2) + W.scalar(W.K.sqrt_q())
    assert W.from_json(W.to_json(h)) == h
    with pytest.raises(ValueError):
        V.from_json(W.to_json(h))


def test_canonical_term_order():
    W = alg(5, 1, 0, 3)
    h = sum((W.monomial(a, l, w) for a, l, w in product([(0, 0, 1)], [(1, 0, 0), (0, 0, -1)],
                                                       sg.all_perms(3))), W.elt())
    ws = [t["w"] for t in W.to_json(h)["terms"]]
    lens = [sg.length(tuple(w)) for w in ws]
    assert lens == sorted(lens)

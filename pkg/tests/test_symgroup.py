from itertools import permutations
from math import factorial

import pytest
from hypothesis import given, strategies as st

from qwreath import symgroup as sg


def test_perm_basics():
    assert sg.perm_basics(sg.identity(4)) == (0, [], set())
    g = (1, 3, 4, 2)
    assert sg.length(g) == 2 and sg.reduced_word(g) == [2, 3]
    assert sg.from_word([2, 3], 4) == g
    assert sg.length(sg.longest(4)) == 6


@given(st.permutations(list(range(1, 6))))
def test_reduced_words(w):
    w = tuple(w)
    word = sg.reduced_word(w)
    assert len(word) == sg.length(w)
    assert sg.from_word(word, 5) == w


def test_coset_reps_from_example():
    reps = sg.min_coset_reps((2, 2))
    words = [sg.reduced_word(w) for w in reps]
    expected = [[], [2], [2, 1], [2, 3], [2, 1, 3], [2, 1, 3, 2]]
    assert sorted(map(tuple, words)) == sorted(
        tuple(sg.reduced_word(sg.from_word(w, 4))) for w in expected)
    within = sg.min_coset_reps((1, 2, 1), within=(3, 1))
    assert sorted(within) == sorted(sg.from_word(w, 4) for w in ([], [1], [1, 2]))
    assert sg.min_coset_reps((4,)) == [sg.identity(4)]


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_parabolic_index(d):
    for lam in sg.compositions(3, d):
        assert len(sg.min_coset_reps(lam)) * len(sg.parabolic(lam)) == factorial(d)


@pytest.mark.parametrize("d", [3, 4])
def test_factorize_coset_exhaustive(d):
    for lam in sg.compositions(2, d):
        reps = set(sg.min_coset_reps(lam))
        par = set(sg.parabolic(lam))
        for w in permutations(range(1, d + 1)):
            u, eta = sg.factorize_coset(w, lam)
            assert sg.mul(u, eta) == w and u in par and eta in reps
            assert sg.length(w) == sg.length(u) + sg.length(eta)


def _brute_double_cosets(lam, mu, d):
    """Minimal double coset reps by brute force."""
    par_l, par_m = sg.parabolic(lam), sg.parabolic(mu)
    seen, reps = set(), []
    for w in sg.all_perms(d):
        if w in seen:
            continue
        orbit = {sg.mul(sg.mul(a, w), b) for a in par_l for b in par_m}
        seen |= orbit
        reps.append(min(orbit, key=lambda v: (sg.length(v), v)))
    return sorted(reps)


@pytest.mark.parametrize("N,d", [(2, 2), (2, 3), (3, 3), (2, 4)])
def test_matrix_triple_bijection(N, d):
    seen = {}
    for A in sg.theta_matrices(N, d):
        lam, g, mu, dl = sg.matrix_to_triple(A)
        assert sg.triple_to_matrix(lam, g, mu) == A
        seen.setdefault((lam, mu), set()).add(g)
        # Sigma_delta = g^-1 Sigma_lam g  cap  Sigma_mu
        conj = {sg.mul(sg.mul(sg.inverse(g), u), g) for u in sg.parabolic(lam)}
        assert conj & set(sg.parabolic(mu)) == set(sg.parabolic(dl))
        w_lam, w_prime, w_A = sg.longest_elements(A)
        assert sg.length(w_prime) == sg.length(sg.longest_parabolic(mu)) - sg.length(sg.longest_parabolic(dl))
        assert sg.length(w_A) == sg.length(w_lam) + sg.length(g) + sg.length(w_prime)
    for (lam, mu), gs in seen.items():
        assert sorted(gs) == _brute_double_cosets(lam, mu, d)


def test_matrix_examples():
    lam, g, mu, dl = sg.matrix_to_triple([[1, 1], [2, 0]])
    assert (lam, mu, dl) == ((2, 2), (3, 1), (1, 2, 1))
    assert g == sg.from_word([2, 3], 4)
    assert sg.longest_elements([[1, 1], [2, 0]])[2] == sg.from_word([1, 3, 2, 3, 1, 2], 4)
    assert sg.matrix_to_triple([[0, 1], [1, 0]]) == ((1, 1), (2, 1), (1, 1), (1, 1))
    assert sg.longest_elements([[0, 1], [1, 0]])[2] == (2, 1)
    assert sg.matrix_to_triple([[2, 0], [0, 1]])[1] == sg.identity(3)
    assert sg.longest_elements([[2, 0], [0, 1]])[2] == sg.longest_parabolic((2, 1))


@pytest.mark.parametrize("d", [3, 4])
def test_factorize_double(d):
    for N in (2, 3):
        for A in sg.theta_matrices(N, d):
            lam, g, mu, dl = sg.matrix_to_triple(A)
            vs = set(sg.min_coset_reps(dl, within=mu))
            for u0 in sg.parabolic(lam):
                for v0 in vs:
                    w = sg.mul(sg.mul(u0, g), v0)
                    u, g2, v = sg.factorize_double(w, lam, mu)
                    assert g2 == g and sg.mul(sg.mul(u, g2), v) == w
                    assert v in vs and u in sg.parabolic(lam)


def test_place_action():
    w = (2, 3, 1)
    assert sg.act(w, "abc") == ("c", "a", "b")
    u = (1, 3, 2)
    assert sg.act(sg.mul(w, u), "abc") == sg.act(w, sg.act(u, "abc"))
    with pytest.raises(ValueError):
        sg.validate([1, 1, 2])

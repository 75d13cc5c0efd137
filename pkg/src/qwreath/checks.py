"""Executable identity checks with pass/fail reports.

Each check is a function ``(params, budget, rng) -> (ok, witness, info)``;
``run_check`` wraps it into a :class:`CheckReport`.  A failing check always
returns a witness: the first offending input and the exact residual.
"""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product

from . import symgroup as sg
from .basealg import BaseElt
from .modules import (GaussFamily, FiniteGGElt, TensorModule, WreathModule, coarse_module,
                      finite_gg_act, gauss_rescale, gg_dictionary, gg_vector,
                      iwahori_descent_xi, rescaled_act)
from .qwp import Flavor, QwpElt, WreathAlgebra
from .scalar import Params
from . import schur as sch

DEFAULT_MATRIX = [(5, 1, 0), (5, 2, 0), (5, 2, 2), (7, 3, 0), (13, 2, 0)]


@dataclass
class Budget:
    """Size bounds for a check run."""

    samples: int = 100
    exp_bound: int = 2
    J: int = 6
    flavor: str = "fine"  # fine | affine_hecke | coarse (associativity_fuzz)
    lam: tuple | None = None  # idemlem_b: a single exponent vector
    heights: int | None = None  # kms_iwahori: max height, default 3 N nbar
    variants: tuple = ("sgn", "triv")


@dataclass
class CheckReport:
    name: str
    params: dict
    status: str
    witness: dict | None = None
    wall_time: float = 0.0
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return asdict(self)

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


# ---- helpers ------------------------------------------------------------------

def _res(x) -> object:
    """JSON form of a residual element."""
    if isinstance(x, QwpElt):
        return x.alg.to_json(x)
    if isinstance(x, BaseElt):
        return x.alg.to_json(x)
    if hasattr(x, "mod") and hasattr(x, "terms"):
        return x.mod.to_json(x)
    if hasattr(x, "mod") and hasattr(x, "b"):
        return x.b.alg.to_json(x.b)
    return repr(x)


def _fail(inp, residual):
    return False, {"input": inp, "residual": _res(residual)}, {}


def _torus_gens(d: int) -> list[tuple]:
    out = [(0,) * d]
    for i in range(d):
        a = [0] * d
        a[i] = 1
        out.append(tuple(a))
    return out


def _rand_monomial(W: WreathAlgebra, rng: random.Random, E: int) -> QwpElt:
    d = W.d
    a = tuple(rng.randrange(W.base.mt) for _ in range(d))
    lam = tuple(rng.randint(-E, E) for _ in range(d))
    w = rng.choice(sg.all_perms(d))
    return W.monomial(a, lam, w)


def _alg(params: Params, d: int | None = None) -> WreathAlgebra:
    return WreathAlgebra(params if d is None else params.replace(d=d))


# ---- algebra checks -----------------------------------------------------------

def check_splitting(params, budget, rng):
    W = _alg(params)
    for i in range(1, W.d):
        H = W.H(i)
        g, gb = W.from_base(W.gamma(i)), W.from_base(W.gamma_bar(i))
        for label, r in (("(H+g)(H-gb)", (H + g) * (H - gb)), ("(H-gb)(H+g)", (H - gb) * (H + g))):
            if not r.is_zero():
                return _fail({"i": i, "product": label}, r)
    return True, None, {"d": W.d}


def _pbw_monomials(B, E):
    for a in _torus_gens(B.d):
        for lam in product(range(-E, E + 1), repeat=B.d):
            yield B.monomial(a, lam)


def check_pbw_p4(params, budget, rng):
    W = _alg(params, 2)
    B = W.base
    S, R = W.S(1), W.R(1)
    count = 0
    for P in _pbw_monomials(B, budget.exp_bound):
        sP, rP = B.sigma(P, 1), B.rho(P, 1)
        r1 = P * S + B.rho(sP, 1) + B.sigma(rP, 1) - S * sP
        if not r1.is_zero():
            return _fail({"P": _res(P), "identity": "r_S+rho sigma+sigma rho=l_S sigma"}, r1)
        r2 = P * R + B.rho(rP, 1) - S * rP - R * P
        if not r2.is_zero():
            return _fail({"P": _res(P), "identity": "r_R+rho^2=l_S rho+l_R"}, r2)
        count += 1
    return True, None, {"monomials": count}


def check_pbw_p6(params, budget, rng):
    W = _alg(params, 3)
    B = W.base
    S2 = W.S(2)
    s2 = lambda b: B.sigma(b, 2)  # noqa: E731
    r1 = lambda b: B.rho(b, 1)  # noqa: E731
    r2 = lambda b: B.rho(b, 2)  # noqa: E731
    count = 0
    for P in _pbw_monomials(B, budget.exp_bound):
        lhs = r1(s2(r1(P)))
        rhs = s2(r1(s2(P))) * S2 + r2(r1(s2(P))) + s2(r1(r2(P)))
        if lhs != rhs:
            return _fail({"P": _res(P)}, lhs - rhs)
        count += 1
    return True, None, {"monomials": count}


def check_pbw_p7(params, budget, rng):
    W = _alg(params, 3)
    B = W.base
    R1, R2 = W.R(1), W.R(2)
    s1 = lambda b: B.sigma(b, 1)  # noqa: E731
    s2 = lambda b: B.sigma(b, 2)  # noqa: E731
    r1 = lambda b: B.rho(b, 1)  # noqa: E731
    r2 = lambda b: B.rho(b, 2)  # noqa: E731
    count = 0
    for P in _pbw_monomials(B, budget.exp_bound):
        lhs = r1(r2(r1(P))) + s1(r2(s1(P))) * R1
        rhs = r2(r1(r2(P))) + s2(r1(s2(P))) * R2
        if lhs != rhs:
            return _fail({"P": _res(P)}, lhs - rhs)
        count += 1
    return True, None, {"monomials": count}


def _flavored(params: Params, name: str, d: int) -> WreathAlgebra:
    p = params.replace(d=d)
    if name == "fine":
        return WreathAlgebra(p)
    if name == "affine_hecke":
        return WreathAlgebra(p, Flavor.affine_hecke(), d)
    if name == "coarse":
        return WreathAlgebra(p, Flavor.coarse(p), d)
    raise ValueError(f"unknown flavor {name!r}")


def check_associativity_fuzz(params, budget, rng):
    W = _flavored(params, budget.flavor, max(params.d, 3))
    for s in range(budget.samples):
        a, b, c = (_rand_monomial(W, rng, budget.exp_bound) for _ in range(3))
        r = (a * b) * c - a * (b * c)
        if not r.is_zero():
            return _fail({"sample": s, "a": _res(a), "b": _res(b), "c": _res(c)}, r)
    return True, None, {"samples": budget.samples, "flavor": W.flavor.kind}


def _generator_relations(W: WreathAlgebra):
    """(label, lhs, rhs) for the defining relations on generators."""
    d = W.d
    H = W.H
    out = []
    for i in range(1, d):
        out.append((f"quadratic {i}", H(i) * H(i), W.from_base(W.S(i)) * H(i) + W.from_base(W.R(i))))
        for j in range(1, d + 1):
            for gen, name in ((W.x(j), "x"), (W.x(j, -1), "x^-1"), (W.t(j), "t")):
                b = next(iter(gen.terms))
                bb = W.base.monomial(b[0], b[1])
                rhs = W.from_base(W.base.sigma(bb, i)) * H(i) + W.from_base(W.base.rho(bb, i))
                out.append((f"wreath H{i} {name}{j}", H(i) * gen, rhs))
    for i in range(1, d - 1):
        out.append((f"braid {i}", H(i) * H(i + 1) * H(i), H(i + 1) * H(i) * H(i + 1)))
    for i in range(1, d):
        for j in range(i + 2, d):
            out.append((f"commute {i},{j}", H(i) * H(j), H(j) * H(i)))
    return out


def check_braid_on_algebra(params, budget, rng):
    W = _alg(params, max(params.d, 3))
    n = 0
    for label, lhs, rhs in _generator_relations(W):
        if label.startswith(("braid", "commute")):
            n += 1
            if lhs != rhs:
                return _fail({"relation": label}, lhs - rhs)
    return True, None, {"relations": n}


def _module_vectors(T: TensorModule, rng, samples=None):
    vecs = list(T.window(1, T.N, torus=True))
    if samples is not None and samples < len(vecs):
        vecs = rng.sample(vecs, samples)
    return vecs


def _relation_words(W):
    """Relations as (label, lhs, rhs) with lhs/rhs lists of algebra factors applied in turn."""
    d = W.d
    out = []
    for i in range(1, d):
        out.append((f"quadratic {i}", [W.H(i), W.H(i)],
                    [W.from_base(W.S(i)) * W.H(i) + W.from_base(W.R(i))]))
        for j in range(1, d + 1):
            for gen, name in ((W.x(j), "x"), (W.x(j, -1), "x^-1"), (W.t(j), "t")):
                (a, lam, _w), = gen.terms
                bb = W.base.monomial(a, lam)
                rhs = W.from_base(W.base.sigma(bb, i)) * W.H(i) + W.from_base(W.base.rho(bb, i))
                out.append((f"wreath H{i} {name}{j}", [W.H(i), gen], [rhs]))
    for i in range(1, d - 1):
        out.append((f"braid {i}", [W.H(i), W.H(i + 1), W.H(i)], [W.H(i + 1), W.H(i), W.H(i + 1)]))
    return out


def _apply(v, factors):
    for h in factors:
        v = v * h
    return v


def _module_check(params, budget, rng, kinds):
    d = max(params.d, 3)
    W = _alg(params, d)
    rels = [r for r in _relation_words(W) if r[0].startswith(kinds)]
    n = 0
    for var in budget.variants:
        T = TensorModule(W, params.N, var)
        for v in _module_vectors(T, rng):
            for label, lhs, rhs in rels:
                r = _apply(v, lhs) - _apply(v, rhs)
                n += 1
                if not r.is_zero():
                    return _fail({"variant": var, "v": _res(v), "relation": label}, r)
        M = WreathModule(W, var, "regular")
        for a in _torus_gens(d):
            for lam in product(range(-1, 2), repeat=d):
                v = M.elt(W.base.monomial(a, lam))
                for label, lhs, rhs in rels:
                    r = _apply(v, lhs) - _apply(v, rhs)
                    n += 1
                    if not r.is_zero():
                        return _fail({"module": f"wreath {var}", "v": _res(v), "relation": label}, r)
    return True, None, {"evaluations": n}


def check_braid_on_module(params, budget, rng):
    ok, wit, info = _module_check(params, budget, rng, ("braid",))
    if not ok:
        return ok, wit, info
    # action axiom (v.h1).h2 = v.(h1 h2) on seeded samples
    W = _alg(params, max(params.d, 3))
    E = min(budget.exp_bound, 1)
    for var in budget.variants:
        T = TensorModule(W, params.N, var)
        vecs = list(T.window(1, T.N, torus=True))
        for s in range(min(budget.samples, 50)):
            v = rng.choice(vecs)
            h1, h2 = _rand_monomial(W, rng, E), _rand_monomial(W, rng, E)
            r = (v * h1) * h2 - v * (h1 * h2)
            if not r.is_zero():
                return _fail({"variant": var, "sample": s, "v": _res(v), "h1": _res(h1), "h2": _res(h2)}, r)
    info["compat_samples"] = min(budget.samples, 50)
    return True, None, info


def check_quadratic_on_module(params, budget, rng):
    return _module_check(params, budget, rng, ("quadratic", "wreath"))


def _reduced_words(w):
    """All reduced words of w (right descents peeled recursively)."""
    if sg.length(w) == 0:
        return [[]]
    out = []
    for i in sorted(sg.right_descents(w)):
        for word in _reduced_words(sg.mul(w, sg.s(i, len(w)))):
            out.append(word + [i])
    return out


def check_gamma_w_welldef(params, budget, rng):
    d = min(max(params.d, 3), 4)
    W = _alg(params, d)
    n = 0
    for w in sg.all_perms(d):
        words = _reduced_words(w)
        ref = W.gamma_word(words[0])
        for word in words[1:]:
            n += 1
            g = W.gamma_word(word)
            if g != ref:
                return _fail({"w": list(w), "words": [words[0], word]}, g - ref)
    return True, None, {"word_pairs": n, "d": d}


def check_intertwiner(params, budget, rng):
    W = _alg(params, 2)
    B = W.base
    e = B.e(1)
    mt = B.mt
    for a1, a2 in product(range(mt), repeat=2):
        lhs = e * B.monomial((a1, a2))
        rhs = B.monomial((a2, a1)) * e
        if lhs != rhs:
            return _fail({"f": a1, "f'": a2, "part": "a"}, lhs - rhs)
    t1, t2 = B.t(1), B.t(2)
    vals = [t1 * e, e * t1, t2 * e, e * t2]
    for v in vals[1:]:
        if v != vals[0]:
            return _fail({"part": "b"}, v - vals[0])
    if e * e != e:
        return _fail({"part": "idempotent"}, e * e - e)
    return True, None, {}


def check_sxx_shift(params, budget, rng):
    W = _alg(params, 2)
    B = W.base
    pairs = [("e x2 = x2 e^(1)", B.e(1) * B.x(2), B.x(2) * B.e(1, 1)),
             ("e x1 = x1 e^(-1)", B.e(1) * B.x(1), B.x(1) * B.e(1, -1)),
             ("S x2 = x2 S^(1)", B.S(1) * B.x(2), B.x(2) * B.S(1, 1)),
             ("S x1 = x1 S^(-1)", B.S(1) * B.x(1), B.x(1) * B.S(1, -1)),
             ("Delta^(n) = Delta", B.e(1, W.flavor.n), B.e(1))]
    for label, lhs, rhs in pairs:
        if lhs != rhs:
            return _fail({"identity": label}, lhs - rhs)
    return True, None, {}


def check_idemlem_a(params, budget, rng):
    W = _alg(params)
    B = W.base
    tp = B.tprime(1, 0)
    if tp * tp != tp:
        return _fail({"identity": "t'^2 = t'"}, tp * tp - tp)
    eps = B.epsilon_I()
    if eps * eps != eps:
        return _fail({"identity": "eps_I^2 = eps_I"}, eps * eps - eps)
    return True, None, {}


def check_idemlem_b(params, budget, rng):
    W = _alg(params)
    nb = params.nbar
    eps = W.epsilon_I()
    E = budget.exp_bound
    lams = [tuple(budget.lam)] if budget.lam is not None else list(product(range(-E, E + 1), repeat=W.d))
    zeros = nonzero = 0
    for lam in lams:
        v = eps * W.monomial(lam=lam) * eps
        if any(x % nb for x in lam):
            zeros += 1
            if not v.is_zero():
                return _fail({"lambda": list(lam)}, v)
        else:
            nonzero += 1
            if v.is_zero():
                return False, {"input": {"lambda": list(lam)}, "residual": "eps x^lam eps vanished on nbar Y"}, {}
    return True, None, {"vanishing": zeros, "nbarY": nonzero}


def check_idemlem_c(params, budget, rng):
    W = _alg(params)
    B = W.base
    tp, t = B.tprime(1, 0), B.t(1)
    for lhs, label in ((tp * t, "t' t"), (t * tp, "t t'")):
        if lhs != tp:
            return _fail({"identity": label + " = t'"}, lhs - tp)
    eps = B.epsilon_I()
    for a in product(range(B.mt), repeat=B.d):
        f = B.monomial(a)
        if eps * f != f * eps:
            return _fail({"f": list(a)}, eps * f - f * eps)
    return True, None, {}


def check_idemlem_d(params, budget, rng):
    W = _alg(params, max(params.d, 2))
    eps = W.epsilon_I()
    for i in range(1, W.d):
        r = W.H(i) * eps - eps * W.H(i)
        if not r.is_zero():
            return _fail({"i": i}, r)
    return True, None, {}


def check_idemlem_e(params, budget, rng):
    W = _alg(params, max(params.d, 2))
    B = W.base
    eps = B.epsilon_I()
    for i in range(1, W.d + 1):
        for lhs, label in ((eps * B.t(i), "eps t_i"), (B.t(i) * eps, "t_i eps")):
            if lhs != eps:
                return _fail({"i": i, "identity": label}, lhs - eps)
    for i in range(1, W.d):
        for lhs, label in ((B.e(i) * eps, "e_i eps"), (eps * B.e(i), "eps e_i")):
            if lhs != eps:
                return _fail({"i": i, "identity": label}, lhs - eps)
    return True, None, {}


def check_upsilon_hom(params, budget, rng):
    W = _alg(params, 2)
    C = WreathAlgebra(W.params, Flavor.coarse(W.params), 2)
    eps = W.epsilon_I()
    q = W.K.q
    ups = W.corner_upsilon(C.one())
    if ups != eps:
        return _fail({"identity": "Upsilon(1) = eps_I"}, ups - eps)
    u = W.corner_upsilon(C.H(1))
    r = u * u - (u * (q - 1) + eps * q)
    if not r.is_zero():
        return _fail({"identity": "Upsilon(H)^2 = (q-1)Upsilon(H) + q eps_I"}, r)
    E = budget.exp_bound
    for s in range(min(budget.samples, 50)):
        p1, p2 = _rand_monomial(C, rng, E), _rand_monomial(C, rng, E)
        lhs = W.corner_upsilon(p1 * p2)
        rhs = W.corner_upsilon(p1) * W.corner_upsilon(p2)
        if lhs != rhs:
            return _fail({"sample": s, "p1": _res(p1), "p2": _res(p2)}, lhs - rhs)
        back = W.corner_upsilon(lhs, "inverse", C)
        if back != p1 * p2:
            return _fail({"sample": s, "identity": "inverse round trip"}, back - p1 * p2)
    return True, None, {"pairs": min(budget.samples, 50)}


def check_bernstein(params, budget, rng):
    W = _alg(params, 2)
    for lam in [(0, 0), (1, 0), (1, 1), (2, 0), (0, 1), (-1, 1)]:
        r = W.bernstein_residual(1, lam, budget.J)
        if not r.is_zero():
            return _fail({"lambda": list(lam), "i": 1, "J": budget.J}, r)
    return True, None, {"J": budget.J}


# ---- module checks --------------------------------------------------------------

def check_vgg_dictionary(params, budget, rng):
    W = _alg(params, 2)
    T = TensorModule(W, 1, "sgn")
    K = W.K
    m = W.base.mt
    for a in product(range(m), repeat=2):
        got = gg_dictionary(T.act_H(gg_vector(T, a, (0, 0)), 1))
        coef = K(-1) if a[0] == a[1] else K.sqrt_q()
        want = {((a[1], a[0]), (0, 0)): coef}
        if got != want:
            return False, {"input": {"a": list(a)},
                           "residual": {"got": repr(got), "expected": repr(want)}}, {}
    # lambda-shifted vectors: the tensor action matches the algebra-side expansion
    v0 = T.basis((1, 1))
    for a in product(range(m), repeat=2):
        for lam in ((1, 0), (0, -1)):
            b = W.from_base(W.base.c_chi(a) * W.base.monomial(None, lam))
            lhs = T.act_H(gg_vector(T, a, lam), 1)
            rhs = T.act(v0, b * W.H(1))
            if lhs != rhs:
                return _fail({"a": list(a), "lambda": list(lam)}, lhs - rhs)
    return True, None, {}


def check_gauss_independence(params, budget, rng):
    K = params.ring
    d = max(params.d, 2)
    fams = [GaussFamily.seeded(K, rng.randrange(1 << 30)) for _ in range(3)]
    for g in fams:
        g.validate()
    for gam in product(range(K.m), repeat=d):
        for i in range(1, d):
            outs = []
            for g in fams:
                v = FiniteGGElt(K, d, {gam: K.one}, "q")
                outs.append(rescaled_act(v, ("T", i), g))
            sw = list(gam)
            sw[i - 1], sw[i] = sw[i], sw[i - 1]
            coef = K(-1) if gam[i - 1] == gam[i] else K.sqrt_q()
            want = FiniteGGElt(K, d, {tuple(sw): coef}, "q")
            for o in outs:
                if o != want:
                    return False, {"input": {"gamma": list(gam), "i": i},
                                   "residual": {"got": repr(o), "expected": repr(want)}}, {}
            # the unrescaled action does depend on the family (sanity of the test)
    # round trip of the coordinate change
    g = fams[0]
    v = FiniteGGElt(K, d, {gam: K(1) for gam in product(range(K.m), repeat=d)}, "g")
    if gauss_rescale(gauss_rescale(v, g, "to_q"), g, "to_g") != v:
        return False, {"input": "rescale round trip", "residual": "mismatch"}, {}
    if finite_gg_act(FiniteGGElt(K, d, {(0,) * d: K.one}, "g"), ("T", 1), g).coeffs != {(0,) * d: K(-1)}:
        return False, {"input": "g_0 action", "residual": "mismatch"}, {}
    return True, None, {"families": 3, "d": d}


def check_kms_iwahori(params, budget, rng):
    """Xi(v p) = Xi(v) Upsilon(p) on coarse heights [1, 3 N nbar]^2, d = 2."""
    p2 = params.replace(d=2)
    W = WreathAlgebra(p2)
    eps = W.base.epsilon_I()
    n = 0
    for var in budget.variants:
        T = TensorModule(W, params.N, var)
        C = coarse_module(T)
        CA = C.alg
        nb = params.nbar
        gens = [("H1", CA.H(1)), ("x1", CA.x(1)), ("x2^-1", CA.x(2, -1))]
        lifts = {}
        for name, g in gens:
            (a, lam, w), = g.terms
            lifts[name] = W.monomial(None, tuple(nb * v for v in lam), w)
        hi = budget.heights or 3 * C.N
        for f in product(range(1, hi + 1), repeat=2):
            v = C.basis(f)
            xv = iwahori_descent_xi(v, T)
            for name, g in gens:
                lhs = iwahori_descent_xi(C.act(v, g), T)
                # Xi(v) . (lift eps_I), evaluated as (Xi(v) . lift) . eps_I
                rhs = T.act_base(T.act(xv, lifts[name]), eps)
                n += 1
                if lhs != rhs:
                    return _fail({"variant": var, "f": list(f), "generator": name}, lhs - rhs)
        # direct corner action on the coarse fundamental region
        uH = W.corner_upsilon(CA.H(1))
        for f in product(range(1, C.N + 1), repeat=2):
            v = C.basis(f)
            lhs = iwahori_descent_xi(C.act(v, CA.H(1)), T)
            rhs = T.act(iwahori_descent_xi(v, T), uH)
            n += 1
            if lhs != rhs:
                return _fail({"variant": var, "f": list(f), "generator": "Upsilon(H1)"}, lhs - rhs)
    return True, None, {"evaluations": n}


# ---- Schur checks ----------------------------------------------------------------

def _symmetrize(B, mono: BaseElt, dl) -> BaseElt:
    out = B.elt()
    for w in sg.parabolic(tuple(dl)):
        out = out + B.place(w, mono)
    return out


def check_schur_roundtrip(params, budget, rng):
    hom = 0
    samples = min(budget.samples, 20)
    algs: dict = {}
    for s in range(samples):
        d = params.d if params.d <= 3 else 3
        N = min(params.N, 2)
        if budget.flavor == "mixed":
            d, N = rng.choice([2, 3]), rng.choice([1, 2])
        W = algs.setdefault(d, _alg(params, d))
        B = W.base
        A = rng.choice(list(sg.theta_matrices(N, d)))
        lam, g, mu, dl = sg.matrix_to_triple(A)
        mono = B.monomial(tuple(rng.randrange(B.mt) for _ in range(d)),
                          tuple(rng.randint(-1, 1) for _ in range(d)))
        P = _symmetrize(B, mono, dl)
        th = sch.theta_build(W, A, P)
        ex = sch.perm_module_expand(W, lam, th.value)
        if sch.reassemble(W, lam, ex) != th.value:
            return _fail({"sample": s, "A": A, "step": "perm_module_expand"},
                         sch.reassemble(W, lam, ex) - th.value)
        tr = sch.theta_decompose(th)
        back = sch.recompose(W, lam, mu, tr)
        if back != th.value:
            return _fail({"sample": s, "A": A, "step": "theta_decompose"}, back - th.value)
        for comp, label in ((sch.schur_compose(sch.identity(W, lam), th), "id o theta"),
                            (sch.schur_compose(th, sch.identity(W, mu)), "theta o id")):
            if comp.value != th.value:
                return _fail({"sample": s, "A": A, "step": label}, comp.value - th.value)
        # right y_mu H-linearity: theta(y_mu) H_i = theta(y_mu) gammabar_i for s_i in Sigma_mu.
        # With a nontrivial twist this needs P in the x^{nbar} part (see notes).
        nb = W.params.nbar
        if nb > 1 and any(v % nb for (_a, xs) in P.terms for v in xs):
            continue
        hom += 1
        for i in sg.parabolic_gens(mu):
            r = th.value * W.H(i) - th.value * W.from_base(W.gamma_bar(i))
            if not r.is_zero():
                return _fail({"sample": s, "A": A, "step": f"hom property s_{i}"}, r)
    return True, None, {"samples": samples, "hom_checked": hom}


def _ya_printed(W: WreathAlgebra) -> dict:
    B = W.base
    x, f = B.x, B.t
    S, g, gb = W.S, W.gamma, W.gamma_bar
    return {
        (2, 3, 1, 2): x(1) * x(2) * f(3),
        (2, 3, 1): x(1) * f(2) * (x(3) * g(2) - S(2) * x(2)),
        (2, 3): f(1) * (B.sigma(S(2), 1) * S(2) * x(1) * x(2) + W.gamma_word([1, 2]) * x(2) * x(3)
                        - S(1) * g(2) * x(1) * x(3) - x(2) * gb(2) * B.sigma(S(1), 2) * x(1)),
    }


def ya_example(params: Params, convention: str = "hom") -> dict:
    """Expand theta_{A,P}(y_mu) for the worked example; compare with the printed b_eta."""
    W = _alg(params, 4)
    W.y_convention = convention
    B = W.base
    A = [[1, 1], [2, 0]]
    th = sch.theta_build(W, A, B.t(1) * B.x(2) * B.x(3))
    lam = th.target
    ex = sch.perm_module_expand(W, lam, th.value)
    printed = _ya_printed(W)
    etas = {tuple(sg.reduced_word(e)): b for e, b in ex}
    want = {sg.from_word(w, 4) for w in printed}
    rows = []
    for word, pb in printed.items():
        e = sg.from_word(word, 4)
        b = dict((ee, bb) for ee, bb in ex).get(e, B.elt())
        diff = b - pb
        rows.append({"eta": "s" + "s".join(map(str, word)), "match": diff.is_zero(),
                     "computed_minus_printed": None if diff.is_zero() else repr(diff)})
    return {"convention": convention,
            "etas": [list(w) for w in etas],
            "eta_set_ok": {e for e, _ in ex} == want,
            "reexpansion_ok": sch.reassemble(W, lam, ex) == th.value,
            "rows": rows}


def check_ya_example(params, budget, rng):
    # the printed values are stated for the Yokonuma case with f = t
    p = Params(q=params.q, n=1, k=0, d=4)
    hom = ya_example(p, "hom")
    printed = ya_example(p, "printed")
    info = {"hom": hom, "printed": printed}
    for rep in (hom, printed):
        if not (rep["eta_set_ok"] and rep["reexpansion_ok"]):
            return False, {"input": {"convention": rep["convention"]}, "residual": rep}, info
    if not all(r["match"] for r in printed["rows"]):
        return False, {"input": {"convention": "printed"}, "residual": printed["rows"]}, info
    info["discrepancies_default"] = [r for r in hom["rows"] if not r["match"]]
    return True, None, info


CHECKS = {
    "pbw_p4": check_pbw_p4,
    "pbw_p6": check_pbw_p6,
    "pbw_p7": check_pbw_p7,
    "splitting": check_splitting,
    "associativity_fuzz": check_associativity_fuzz,
    "braid_on_algebra": check_braid_on_algebra,
    "braid_on_module": check_braid_on_module,
    "quadratic_on_module": check_quadratic_on_module,
    "gamma_w_welldef": check_gamma_w_welldef,
    "intertwiner": check_intertwiner,
    "sxx_shift": check_sxx_shift,
    "idemlem_a": check_idemlem_a,
    "idemlem_b": check_idemlem_b,
    "idemlem_c": check_idemlem_c,
    "idemlem_d": check_idemlem_d,
    "idemlem_e": check_idemlem_e,
    "upsilon_hom": check_upsilon_hom,
    "bernstein": check_bernstein,
    "vgg_dictionary": check_vgg_dictionary,
    "kms_iwahori": check_kms_iwahori,
    "gauss_independence": check_gauss_independence,
    "schur_roundtrip": check_schur_roundtrip,
    "yA_example": check_ya_example,
}


def run_check(name: str, params: Params, budget: Budget | None = None, seed: int = 0) -> CheckReport:
    if name not in CHECKS:
        raise ValueError(f"unknown check {name!r}")
    budget = budget or Budget()
    rng = random.Random(seed)
    t0 = time.perf_counter()
    ok, witness, info = CHECKS[name](params, budget, rng)
    dt = time.perf_counter() - t0
    return CheckReport(name, params.to_json(), "pass" if ok else "fail", witness, dt, info)


# ---- suite ---------------------------------------------------------------------

# which checks need which Params in the default matrix
_K0_ONLY = {"vgg_dictionary"}  # Gelfand-Graev dictionary needs k = 0
_FIXED = {"yA_example": [(5, 1, 0)]}
_SKIP_SLOW = {(13, 2, 0): {"associativity_fuzz", "braid_on_module", "quadratic_on_module",
                           "schur_roundtrip", "kms_iwahori"}}


def default_jobs(names=None, matrix=None, ds=(2, 3), Ns=(1, 2), include_slow=False):
    """(name, Params) pairs making up the default suite."""
    names = list(names or CHECKS)
    matrix = matrix or DEFAULT_MATRIX
    jobs = []
    for name in names:
        trip = _FIXED.get(name, matrix)
        for q, n, k in trip:
            if name in _K0_ONLY and k != 0:
                continue
            if not include_slow and name in _SKIP_SLOW.get((q, n, k), ()):
                continue
            for d in ds:
                for N in Ns:
                    # N only matters for module checks; d only for some
                    if N != Ns[0] and name not in ("braid_on_module", "quadratic_on_module",
                                                   "kms_iwahori", "schur_roundtrip"):
                        continue
                    if d != ds[0] and name not in ("splitting", "gauss_independence",
                                                   "schur_roundtrip", "idemlem_b", "idemlem_c",
                                                   "idemlem_d", "idemlem_e", "idemlem_a"):
                        continue
                    jobs.append((name, Params(q=q, n=n, k=k, d=d, N=N)))
    return jobs


def _run_job(args):
    name, params, budget, seed = args
    return run_check(name, params, budget, seed)


def run_suite(jobs, budget: Budget | None = None, seed: int = 0, workers: int = 1) -> list[CheckReport]:
    payload = [(name, p, budget, seed) for name, p in jobs]
    if workers > 1:
        with ProcessPoolExecutor(workers) as ex:
            reports = list(ex.map(_run_job, payload))
    else:
        reports = [_run_job(a) for a in payload]
    order = {n: i for i, n in enumerate(CHECKS)}
    return sorted(reports, key=lambda r: (order[r.name], sorted(r.params.items())))


def summary_table(reports) -> str:
    lines = [f"{'check':<22} {'q':>3} {'n':>2} {'k':>2} {'d':>2} {'N':>2}  status  time(s)"]
    for r in reports:
        p = r.params
        lines.append(f"{r.name:<22} {p['q']:>3} {p['n']:>2} {p['k']:>2} {p['d']:>2} {p['N']:>2}"
                     f"  {r.status:<6} {r.wall_time:8.2f}")
    nf = sum(not r.ok for r in reports)
    lines.append(f"{len(reports) - nf}/{len(reports)} passed")
    return "\n".join(lines)

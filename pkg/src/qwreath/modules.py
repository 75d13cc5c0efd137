"""Right modules over A wr H(d).

* :class:`TensorModule` -- V(N)^{(x)d}, basis v_f t^a, f: [d] -> Z.
* :class:`WreathModule` -- v+ b with b in A^{(x)d}; v+ H_j = v+ eps_j where
  eps_j = gbar_j (triv) or -gamma_j (sgn).  One class covers M_i wr triv/sgn
  and the regular sph/asph modules; only the embedding into V(N) differs.
* finite Gelfand-Graev data: :class:`GaussFamily`, :class:`FiniteGGElt`.
* the Iwahori descent between the coarse tensor space V(N nbar) and the
  corner V(N) eps_I.
"""
from __future__ import annotations

import random
from itertools import product

from . import symgroup as sg
from .basealg import BaseElt, _add_into
from .qwp import Flavor, QwpElt, WreathAlgebra
from .scalar import Scalar

VARIANTS = ("sgn", "triv")


def _vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


class TensorModule:
    """V(N)^{(x)d} for a given algebra; ``variant`` picks the equal-height sign."""

    def __init__(self, alg: WreathAlgebra, N: int | None = None, variant: str = "sgn"):
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        self.alg = alg
        self.N = N if N is not None else alg.params.N
        if self.N < 1:
            raise ValueError("N must be positive")
        self.variant = variant
        self.d = alg.d
        self._hcache: dict = {}
        self._bcache: dict = {}

    def __eq__(self, other):
        return (isinstance(other, TensorModule) and self.alg == other.alg
                and self.N == other.N and self.variant == other.variant)

    def __hash__(self):
        return hash((self.alg, self.N, self.variant))

    # ---- elements --------------------------------------------------------
    def elt(self, terms=None) -> "TensorElt":
        return TensorElt(self, terms or {})

    def basis(self, f, a=None, c=1) -> "TensorElt":
        a = self.alg.base.zero_a if a is None else tuple(x % self.alg.base.mt for x in a)
        c = self.alg.K(c)
        return TensorElt(self, {} if c.is_zero() else {(tuple(f), a): c})

    def v_lambda(self, lam) -> "TensorElt":
        """v_1^{lam_1} (x) v_2^{lam_2} (x) ..., the generator of M^lam."""
        f = [i + 1 for i, p in enumerate(lam) for _ in range(p)]
        return self.basis(f)

    def split(self, f):
        """f = f0 + N lam with 1 <= f0 <= N."""
        N = self.N
        lam = tuple((x - 1) // N for x in f)
        f0 = tuple(x - N * l for x, l in zip(f, lam))
        return f0, lam

    # ---- action ------------------------------------------------------------
    def act_base(self, v: "TensorElt", b: BaseElt) -> "TensorElt":
        B = self.alg.base
        mt, pe, m, N = B.mt, B.psi_exp, self.alg.K.m, self.N
        out: dict = {}
        if mt > 1 and len(b.terms) == mt ** self.d and self._torus_uniform(b):
            # b is a multiple of eps_I and t^a eps_I = eps_I: collapse the torus part of v first
            c0 = next(iter(b.terms.values()))
            acc: dict = {}
            for (f, _a), c in v.terms.items():
                _add_into(acc, f, c)
            for f, c in acc.items():
                cc = c * c0
                if cc.is_zero():
                    continue
                for key in b.terms:
                    out[(f, key[0])] = cc
            return TensorElt(self, out)
        for (f, a), c in v.terms.items():
            for (bb, mu), c2 in b.terms.items():
                ab = tuple((x + y) % mt for x, y in zip(a, bb))
                coef = c * c2
                if pe:
                    tw = -sum(p * r for p, r in zip(mu, ab)) * pe % m
                    if tw:
                        coef = coef.mul_root(tw)
                _add_into(out, (tuple(x + N * y for x, y in zip(f, mu)), ab), coef)
        return TensorElt(self, out)

    @staticmethod
    def _torus_uniform(b: BaseElt) -> bool:
        it = iter(b.terms.items())
        (_, mu0), c0 = next(it)
        return not any(mu0) and all(not any(mu) and c == c0 for (_, mu), c in it)

    def _fund_H(self, f0, i) -> dict:
        """v_{f0} . H_i for fundamental f0, as a term dict."""
        key = (f0, i)
        hit = self._hcache.get(key)
        if hit is not None:
            return hit
        A = self.alg
        fs = list(f0)
        fs[i - 1], fs[i] = fs[i], fs[i - 1]
        fs = tuple(fs)
        vf = self.basis(f0)
        if f0[i - 1] < f0[i]:
            res = self.basis(fs)
        elif f0[i - 1] == f0[i]:
            if self.variant == "sgn":
                res = -self.act_base(vf, A.gamma(i))
            else:
                res = self.act_base(vf, A.gamma_bar(i))
        else:
            res = self.act_base(self.basis(fs), A.R(i)) + self.act_base(vf, A.S(i))
        self._hcache[key] = res.terms
        return res.terms

    def _basis_H(self, f, a, i) -> dict:
        key = (f, a, i)
        hit = self._bcache.get(key)
        if hit is not None:
            return hit
        B = self.alg.base
        pe, m = B.psi_exp, self.alg.K.m
        f0, lam = self.split(f)
        # v_f t^a = zeta^(pe lam.a) v_{f0} . (t^a x^lam)
        c = self.alg.K.one
        if pe:
            c = c.mul_root(sum(p * r for p, r in zip(lam, a)) * pe % m)
        sb = B.sigma(B.monomial(a, lam, c), i)
        out = self.act_base(TensorElt(self, self._fund_H(f0, i)), sb)
        rb = B.rho(sb, i)
        if rb.terms:
            out = out - self.act_base(self.basis(f0), rb)
        self._bcache[key] = out.terms
        return out.terms

    def act_H(self, v: "TensorElt", i: int) -> "TensorElt":
        out: dict = {}
        for (f, a), c in v.terms.items():
            for key, c2 in self._basis_H(f, a, i).items():
                _add_into(out, key, c * c2)
        return TensorElt(self, out)

    def act(self, v: "TensorElt", h: QwpElt) -> "TensorElt":
        if h.alg != self.alg:
            raise ValueError("module and element belong to different algebras")
        B = self.alg.base
        out = self.elt()
        groups: dict = {}
        for (a, lam, w), c in h.terms.items():
            groups.setdefault(w, {})[(a, lam)] = c
        for w, bt in groups.items():
            r = self.act_base(v, BaseElt(B, bt))
            for i in sg.reduced_word(w):
                r = self.act_H(r, i)
            out = out + r
        return out

    def tensor_act(self, v, h):
        return self.act(v, h)

    def mlambda_membership(self, v: "TensorElt"):
        """The class lambda of M^lambda containing v, or "mixed"."""
        N = self.N
        found = None
        for (f, _a) in v.terms:
            lam = [0] * N
            for x in f:
                lam[(x - 1) % N] += 1
            lam = tuple(lam)
            if found is None:
                found = lam
            elif found != lam:
                return "mixed"
        return found

    def window(self, lo: int = 1, hi: int | None = None, torus: bool = False):
        """Basis vectors v_f t^a with lo <= f(i) <= hi."""
        hi = self.N if hi is None else hi
        tor = list(product(range(self.alg.base.mt), repeat=self.d)) if torus else [None]
        for f in product(range(lo, hi + 1), repeat=self.d):
            for a in tor:
                yield self.basis(f, a)

    # ---- io ---------------------------------------------------------------
    def to_json(self, v: "TensorElt") -> dict:
        return {"N": self.N, "variant": self.variant,
                "terms": [{"f": list(f), "t": list(a), "c": c.to_json()}
                          for (f, a), c in sorted(v.terms.items())]}

    def from_json(self, obj: dict) -> "TensorElt":
        out: dict = {}
        for t in obj["terms"]:
            f = tuple(int(x) for x in t["f"])
            a = tuple(int(x) % self.alg.base.mt for x in t["t"])
            if len(f) != self.d or len(a) != self.d:
                raise ValueError("term has wrong degree")
            _add_into(out, (f, a), self.alg.K.from_json(t["c"]))
        return TensorElt(self, out)


class TensorElt:
    __slots__ = ("mod", "terms")

    def __init__(self, mod: TensorModule, terms: dict):
        self.mod = mod
        self.terms = terms

    def __add__(self, o: "TensorElt"):
        out = dict(self.terms)
        for k, c in o.terms.items():
            _add_into(out, k, c)
        return TensorElt(self.mod, out)

    def __neg__(self):
        return TensorElt(self.mod, {k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        if isinstance(o, QwpElt):
            return self.mod.act(self, o)
        if isinstance(o, BaseElt):
            return self.mod.act_base(self, o)
        c = self.mod.alg.K(o)
        if c.is_zero():
            return TensorElt(self.mod, {})
        return TensorElt(self.mod, {k: v * c for k, v in self.terms.items()})

    def __eq__(self, o):
        return isinstance(o, TensorElt) and self.terms == o.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self):
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*v{list(f)}t^{list(a)}" for (f, a), c in sorted(self.terms.items()))


# ---- wreath modules ----------------------------------------------------------

class WreathModule:
    """M wr triv / M wr sgn with basis v+ b, b in A^{(x)d}.

    ``index`` is the base index i of M_i (embedding v+ -> v_i^{(x)d}) or
    "regular" for the spherical / antispherical module.
    """

    def __init__(self, alg: WreathAlgebra, specht: str = "sgn", index="regular"):
        if specht not in VARIANTS:
            raise ValueError(f"specht must be one of {VARIANTS}")
        self.alg = alg
        self.specht = specht
        self.index = index

    def elt(self, b: BaseElt | None = None) -> "WreathModElt":
        return WreathModElt(self, b if b is not None else self.alg.base.elt())

    def vplus(self) -> "WreathModElt":
        return self.elt(self.alg.base.one())

    def eps(self, j: int) -> BaseElt:
        A = self.alg
        return A.gamma_bar(j) if self.specht == "triv" else -A.gamma(j)

    def act_H(self, v: "WreathModElt", j: int) -> "WreathModElt":
        B = self.alg.base
        sb = B.sigma(v.b, j)
        return WreathModElt(self, self.eps(j) * sb - B.rho(sb, j))

    def act(self, v: "WreathModElt", h: QwpElt) -> "WreathModElt":
        B = self.alg.base
        out = B.elt()
        groups: dict = {}
        for (a, lam, w), c in h.terms.items():
            groups.setdefault(w, {})[(a, lam)] = c
        for w, bt in groups.items():
            r = WreathModElt(self, v.b * BaseElt(B, bt))
            for i in sg.reduced_word(w):
                r = self.act_H(r, i)
            out = out + r.b
        return WreathModElt(self, out)

    def act_printed(self, v: "WreathModElt", j: int) -> "WreathModElt":
        """The displayed formula v+ rho_j(b) + v+ sigma_j(b) eps_j (valid for n = 1)."""
        B = self.alg.base
        return WreathModElt(self, B.rho(v.b, j) + B.sigma(v.b, j) * self.eps(j))

    def to_tensor(self, v: "WreathModElt", T: TensorModule) -> TensorElt:
        i = 1 if self.index == "regular" else self.index
        return T.act_base(T.basis((i,) * self.alg.d), v.b)


class WreathModElt:
    __slots__ = ("mod", "b")

    def __init__(self, mod: WreathModule, b: BaseElt):
        self.mod = mod
        self.b = b

    def __add__(self, o):
        return WreathModElt(self.mod, self.b + o.b)

    def __sub__(self, o):
        return WreathModElt(self.mod, self.b - o.b)

    def __mul__(self, o):
        if isinstance(o, QwpElt):
            return self.mod.act(self, o)
        if isinstance(o, BaseElt):
            return WreathModElt(self.mod, self.b * o)
        return WreathModElt(self.mod, self.b * o)

    def __eq__(self, o):
        return isinstance(o, WreathModElt) and self.b == o.b

    def __hash__(self):
        return hash(self.b)

    def is_zero(self):
        return self.b.is_zero()

    def __repr__(self):
        return f"v+ * ({self.b!r})"


def wreath_act(v: WreathModElt, h: QwpElt) -> WreathModElt:
    return v.mod.act(v, h)


# ---- finite Gelfand-Graev model -------------------------------------------

class GaussFamily:
    """Values g_k, k in [m], with g_0 = -1 and g_k g_{-k} = q."""

    def __init__(self, K, values):
        self.K = K
        self.values = [K(v) for v in values]
        if len(self.values) != K.m:
            raise ValueError("a Gauss family needs m values")
        self.validate()

    def validate(self):
        K, m = self.K, self.K.m
        if self.values[0] != K(-1):
            raise ValueError("g_0 must be -1")
        for k in range(1, m):
            if self.values[k] * self.values[-k % m] != K(K.q):
                raise ValueError(f"g_{k} g_{-k} != q")

    def __getitem__(self, k: int) -> Scalar:
        return self.values[k % self.K.m]

    @staticmethod
    def default(K) -> "GaussFamily":
        return GaussFamily(K, [K(-1)] + [K.sqrt_q()] * (K.m - 1))

    @staticmethod
    def seeded(K, seed: int) -> "GaussFamily":
        """g_k = sqrt(q) zeta^{r_k} with r_k + r_{-k} = 0 (r in {0, m/2} at k = m/2)."""
        rng = random.Random(seed)
        m = K.m
        r = [0] * m
        for k in range(1, m):
            j = (-k) % m
            if j < k:
                continue
            if j == k:
                r[k] = rng.choice([0, m // 2])
            else:
                r[k] = rng.randrange(m)
                r[j] = (-r[k]) % m
        return GaussFamily(K, [K(-1)] + [K.sqrt_q().mul_root(r[k]) for k in range(1, m)])

    def to_json(self):
        return [v.to_json() for v in self.values]


class FiniteGGElt:
    """sum c_gamma c(chi^gamma) in the c^g basis (flag "g") or the rescaled c^q basis ("q")."""

    def __init__(self, K, d: int, coeffs: dict, basis: str = "g"):
        if basis not in ("g", "q"):
            raise ValueError("basis flag must be 'g' or 'q'")
        self.K = K
        self.d = d
        self.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero()}
        self.basis = basis

    def __eq__(self, o):
        return (isinstance(o, FiniteGGElt) and self.basis == o.basis
                and self.coeffs == o.coeffs)

    def __repr__(self):
        return f"FiniteGGElt({self.basis}, {self.coeffs})"


def finite_gg_act(v: FiniteGGElt, gen, g: GaussFamily) -> FiniteGGElt:
    """gen = ("T", i) or ("c", gamma); v must be in the c^g basis."""
    if v.basis != "g":
        raise ValueError("finite_gg_act expects the c^g basis")
    kind, arg = gen
    out: dict = {}
    if kind == "T":
        i = arg
        for gam, c in v.coeffs.items():
            sg_ = list(gam)
            sg_[i - 1], sg_[i] = sg_[i], sg_[i - 1]
            _add_into(out, tuple(sg_), c * g[gam[i - 1] - gam[i]])
    elif kind == "c":
        target = tuple(x % v.K.m for x in arg)
        if target in v.coeffs:
            out[target] = v.coeffs[target]
    else:
        raise ValueError(f"unknown generator {kind!r}")
    return FiniteGGElt(v.K, v.d, out, "g")


def rescale_factor(gam, g: GaussFamily) -> Scalar:
    """prod over inversions p < r, gamma_p > gamma_r of sqrt(q) / g_{gamma_p - gamma_r}."""
    K = g.K
    out = K.one
    d = len(gam)
    for p in range(d):
        for r in range(p + 1, d):
            if gam[p] > gam[r]:
                out = out * K.sqrt_q() * g[gam[p] - gam[r]].invert_restricted()
    return out


def gauss_rescale(v: FiniteGGElt, g: GaussFamily, direction: str = "to_q") -> FiniteGGElt:
    """Change coordinates between c^g and c^q = kappa(gamma) c^g."""
    out = {}
    if direction == "to_q":
        if v.basis != "g":
            raise ValueError("expected c^g coordinates")
        for gam, c in v.coeffs.items():
            out[gam] = c * rescale_factor(gam, g).invert_restricted()
        return FiniteGGElt(v.K, v.d, out, "q")
    if direction == "to_g":
        if v.basis != "q":
            raise ValueError("expected c^q coordinates")
        for gam, c in v.coeffs.items():
            out[gam] = c * rescale_factor(gam, g)
        return FiniteGGElt(v.K, v.d, out, "g")
    raise ValueError(f"unknown direction {direction!r}")


def rescaled_act(v: FiniteGGElt, gen, g: GaussFamily) -> FiniteGGElt:
    """Action of a generator in c^q coordinates, computed through the c^g model."""
    return gauss_rescale(finite_gg_act(gauss_rescale(v, g, "to_g"), gen, g), g, "to_q")


def gg_dictionary(v: TensorElt) -> dict:
    """Coordinates of v in the basis v'_{a,lam} = v+ c(chi^a) x^lam (N = 1).

    Returns {(a, lam): Scalar}; under the dictionary v'_{a,lam} <-> c^q(chi^a) Y_lam.
    """
    T = v.mod
    if T.N != 1:
        raise ValueError("the Gelfand-Graev dictionary needs N = 1")
    B = T.alg.base
    pe, m = B.psi_exp, T.alg.K.m
    out: dict = {}
    for (f, a), c in v.terms.items():
        lam = tuple(x - 1 for x in f)
        if pe:
            c = c.mul_root(sum(p * r for p, r in zip(lam, a)) * pe % m)
        for gam, c2 in B.to_tprime(B.monomial(a)).items():
            _add_into(out, (gam, lam), c * c2)
    return out


def gg_vector(T: TensorModule, a, lam) -> TensorElt:
    """v'_{a,lam} as a tensor vector."""
    B = T.alg.base
    return T.act_base(T.basis((1,) * T.d), B.c_chi(a) * B.monomial(None, lam))


# ---- Iwahori descent ----------------------------------------------------------

def coarse_module(fine: TensorModule) -> TensorModule:
    """V(N nbar)^{(x)d} over the coarse algebra C[x^{+-nbar}] wr H(d)."""
    p = fine.alg.params
    C = WreathAlgebra(p, Flavor.coarse(p), fine.d)
    return TensorModule(C, fine.N * p.nbar, fine.variant)


def xi_scale(fine: TensorModule, f) -> Scalar:
    """Scale kappa(f) of the rescaled descent map Xi(v_f) = kappa(f) v_f eps_I.

    Reduce f into the coarse fundamental region [1, N nbar]^d.  Every pair
    p < r with f(p) > f(r) contributes a factor alpha read off from the fine
    fundamental heights f0 of the two entries (smaller height h, larger H):
    1 if f0(h) < f0(H), +-sqrt(q) if equal (sign + for sgn, - for triv),
    q if f0(h) > f0(H).  kappa = 1 whenever nbar = 1.
    """
    K = fine.alg.K
    N = fine.N
    step = N * fine.alg.params.nbar
    fr = [(x - 1) % step + 1 for x in f]
    f0 = [(x - 1) % N + 1 for x in fr]
    eq = K.sqrt_q() if fine.variant == "sgn" else -K.sqrt_q()
    out = K.one
    for p in range(len(fr)):
        for r in range(p + 1, len(fr)):
            if fr[p] > fr[r]:
                lo, hi = f0[r], f0[p]
                if lo == hi:
                    out = out * eq
                elif lo > hi:
                    out = out * K.q
    return out


def iwahori_descent_xi(v: TensorElt, fine: TensorModule, direction: str = "forward",
                       coarse: TensorModule | None = None, literal: bool = False) -> TensorElt:
    """Xi: V(N nbar)^{(x)d} -> V(N)^{(x)d} eps_I and its inverse.

    By default Xi(v_f) = xi_scale(f) v_f eps_I; ``literal=True`` drops the scale.
    """
    eps = fine.alg.base.epsilon_I()
    if direction == "forward":
        out = fine.elt()
        for (f, _a), c in v.terms.items():
            s = fine.alg.K.one if literal else xi_scale(fine, f)
            out = out + fine.act_base(fine.basis(f), eps) * (c * s)
        return out
    if direction == "inverse":
        if fine.act_base(v, eps) != v:
            raise ValueError("input not eps_I-invariant")
        C = coarse or coarse_module(fine)
        mt, d = fine.alg.base.mt, fine.d
        za = fine.alg.base.zero_a
        terms: dict = {}
        for (f, a), c in v.terms.items():
            if a == za:
                s = fine.alg.K.one if literal else xi_scale(fine, f)
                terms[(f, C.alg.base.zero_a)] = c * fine.alg.K(mt ** d) * s.invert_restricted()
        out = TensorElt(C, terms)
        if iwahori_descent_xi(out, fine, "forward", literal=literal) != v:
            raise ValueError("inverse Xi failed verification")
        return out
    raise ValueError(f"unknown direction {direction!r}")

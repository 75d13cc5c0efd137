"""The quantum wreath product A wr H(d) in left-coefficient PBW normal form.

An element is a dict ``{(a, lam, w): Scalar}`` for sum c t^a x^lam H_w.
Multiplication uses two memo tables per algebra:

* ``H_w x^lam`` in normal form, built by peeling the last letter of w and
  using H_i b = sigma_i(b) H_i + rho_i(b);
* ``H_u H_v`` with torus-only coefficients (Matsumoto + quadratic relation).

With these, (b1 H_w1)(t^a x^lam H_w2) = b1 (w1 . t^a) [H_w1 x^lam] H_w2.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import symgroup as sg
from .basealg import BaseAlgebra, BaseElt, _add_into
from .scalar import Params, Scalar


@dataclass(frozen=True)
class Flavor:
    """Which algebra: skew(n, k), yokonuma (n=1), affine_hecke or coarse."""

    kind: str
    mt: int
    n: int = 1
    k: int = 0
    step: int = 1

    @staticmethod
    def from_params(p: Params) -> "Flavor":
        if p.n == 1:
            return Flavor("yokonuma", p.m, 1, p.k % p.m)
        return Flavor("skew", p.m, p.n, p.k % p.m)

    @staticmethod
    def affine_hecke() -> "Flavor":
        return Flavor("affine_hecke", 1, 1, 0)

    @staticmethod
    def coarse(p: Params) -> "Flavor":
        return Flavor("coarse", 1, 1, 0, p.nbar)

    def to_json(self) -> dict:
        return dict(kind=self.kind, mt=self.mt, n=self.n, k=self.k, step=self.step)

    @staticmethod
    def from_json(obj: dict) -> "Flavor":
        return Flavor(obj["kind"], int(obj["mt"]), int(obj.get("n", 1)),
                      int(obj.get("k", 0)), int(obj.get("step", 1)))


class WreathAlgebra:
    """A wr H(d) for given Params and flavor (default: the fine algebra of the Params)."""

    def __init__(self, params: Params, flavor: Flavor | None = None, d: int | None = None):
        self.params = params
        self.flavor = flavor or Flavor.from_params(params)
        self.d = d if d is not None else params.d
        fl = self.flavor
        K = params.ring
        if fl.kind in ("skew", "yokonuma"):
            if fl.mt != params.m:
                raise ValueError("fine flavors use the full torus")
            psi = 2 * (params.m // fl.n) * params.xi_exp if fl.n > 1 else 0
        else:
            psi = 0
        if fl.n > 1 and fl.k % fl.mt not in (0, fl.mt // 2):
            raise ValueError("k must be 0 or m/2 for n > 1")
        self.K = K
        self.k = fl.k
        self.base = BaseAlgebra(K, self.d, fl.mt, psi)
        self.e_perm = sg.identity(self.d)
        self._hx_memo: dict = {}
        self._hh_memo: dict = {}
        self._hh1: dict = {}
        self._hxh_memo: dict = {}
        self.y_convention = "hom"

    def __eq__(self, other):
        return (isinstance(other, WreathAlgebra) and self.flavor == other.flavor
                and self.d == other.d and self.base == other.base)

    def __hash__(self):
        return hash((self.flavor, self.d))

    # ---- constructors -----------------------------------------------------
    def elt(self, terms=None) -> "QwpElt":
        return QwpElt(self, terms or {})

    def from_base(self, b: BaseElt, w=None) -> "QwpElt":
        w = self.e_perm if w is None else tuple(w)
        return QwpElt(self, {(a, l, w): c for (a, l), c in b.terms.items()})

    def one(self) -> "QwpElt":
        return self.from_base(self.base.one())

    def scalar(self, c) -> "QwpElt":
        return self.from_base(self.base.scalar(c))

    def monomial(self, a=None, lam=None, w=None, c=1) -> "QwpElt":
        return self.from_base(self.base.monomial(a, lam, c), w)

    def H(self, i: int) -> "QwpElt":
        return self.monomial(w=sg.s(i, self.d))

    def Hw(self, w) -> "QwpElt":
        return self.monomial(w=w)

    T = Hw

    def x(self, i: int, e: int = 1) -> "QwpElt":
        return self.from_base(self.base.x(i, e))

    def Y(self, lam) -> "QwpElt":
        return self.monomial(lam=lam)

    def t(self, i: int, j: int = 1) -> "QwpElt":
        return self.from_base(self.base.t(i, j))

    def c_chi(self, gamma) -> "QwpElt":
        return self.from_base(self.base.c_chi(gamma))

    def S(self, i: int) -> BaseElt:
        return self.base.S(i)

    def R(self, i: int) -> BaseElt:
        return self.base.R(i, self.k)

    def epsilon_I(self) -> "QwpElt":
        return self.from_base(self.base.epsilon_I())

    # ---- splitting elements -------------------------------------------
    def gamma(self, i: int) -> BaseElt:
        B = self.base
        sq = self.K.sqrt_q()
        tk = B.t(i, self.k)
        return (tk * sq + 1) * B.e(i) - tk * sq

    def gamma_bar(self, i: int) -> BaseElt:
        B = self.base
        sq = self.K.sqrt_q()
        tk = B.t(i + 1, self.k)
        return (tk * sq + self.K.q) * B.e(i) - tk * sq

    def gamma_word(self, word) -> BaseElt:
        """gamma_{i_n} sigma_{i_n}(gamma_{i_{n-1}}) ... for the given reduced word."""
        out = self.base.one()
        acc = self.e_perm  # s_{i_n} s_{i_{n-1}} ... s_{i_{p+1}}
        for i in reversed(list(word)):
            out = out * self.base.place(acc, self.gamma(i))
            acc = sg.mul(acc, sg.s(i, self.d))
        return out

    def gamma_w(self, w) -> BaseElt:
        return self.gamma_word(sg.reduced_word(tuple(w)))

    def gamma_elements(self, which: str, i=None, word=None) -> BaseElt:
        if which == "gamma":
            return self.gamma(i)
        if which == "gamma_bar":
            return self.gamma_bar(i)
        if which == "gamma_w":
            return self.gamma_word(word)
        raise ValueError(f"unknown element {which!r}")

    # ---- y elements -----------------------------------------------------
    def y(self, lam) -> "QwpElt":
        lam = tuple(lam)
        if sum(lam) != self.d:
            raise ValueError("composition does not sum to d")
        w0 = sg.longest_parabolic(lam)
        out = self.elt()
        for w in sg.parabolic(lam):
            out = out + self.Hw(w) * self.from_base(self.gamma_w(self._ycoef(w, w0)))
        return out

    def y_delta(self, mu, dl) -> "QwpElt":
        mu, dl = tuple(mu), tuple(dl)
        wp = sg.mul(sg.longest_parabolic(dl), sg.longest_parabolic(mu))
        out = self.elt()
        for w in sg.min_coset_reps(dl, within=mu):
            out = out + self.Hw(w) * self.from_base(self.gamma_w(self._ycoef(w, wp)))
        return out

    def _ycoef(self, w, top):
        # "hom": gamma_{top^-1 w}; makes y_lam H_i = y_lam gamma_bar_i and theta_{A,P} well defined.
        # "printed": gamma_{w^-1 top}, the convention behind the worked Schur example.
        if self.y_convention == "hom":
            return sg.mul(sg.inverse(top), w)
        if self.y_convention == "printed":
            return sg.mul(sg.inverse(w), top)
        raise ValueError(f"unknown y convention {self.y_convention!r}")

    def y_elements(self, lam, variant: str = "y_lambda", mu=None, delta=None) -> "QwpElt":
        if variant == "y_lambda":
            return self.y(lam)
        if variant == "y_mu_delta":
            return self.y_delta(mu, delta)
        raise ValueError(f"unknown variant {variant!r}")

    # ---- engine -------------------------------------------------------------
    def _hh_simple(self, u, i) -> list:
        """H_u H_i as [(torus dict, y)]."""
        key = (u, i)
        hit = self._hh1.get(key)
        if hit is not None:
            return hit
        d = self.d
        us = sg.mul(u, sg.s(i, d))
        if sg.length(us) > sg.length(u):
            res = [({self.base.zero_a: self.K.one}, us)]
        else:
            # u = u' s_i: H_u H_i = u'(S_i) H_u + u'(R_i) H_u'
            Sp = self.base.place(us, self.S(i))
            Rp = self.base.place(us, self.R(i))
            res = [({a: c for (a, _), c in Sp.terms.items()}, u),
                   ({a: c for (a, _), c in Rp.terms.items()}, us)]
        self._hh1[key] = res
        return res

    def _hh_full(self, u, v) -> dict:
        """H_u H_v as {y: {a: Scalar}}."""
        key = (u, v)
        hit = self._hh_memo.get(key)
        if hit is not None:
            return hit
        mt = self.base.mt
        cur = {u: {self.base.zero_a: self.K.one}}
        for i in sg.reduced_word(v):
            nxt: dict = {}
            for y, f in cur.items():
                for g, y2 in self._hh_simple(y, i):
                    tgt = nxt.setdefault(y2, {})
                    for a, c in f.items():
                        for b, c2 in g.items():
                            _add_into(tgt, tuple((p + r) % mt for p, r in zip(a, b)), c * c2)
            cur = {y: f for y, f in nxt.items() if f}
        self._hh_memo[key] = cur
        return cur

    def _right_mul_H(self, terms: dict, i: int) -> dict:
        out: dict = {}
        mt, pe, m = self.base.mt, self.base.psi_exp, self.K.m
        for (a, lam, u), c in terms.items():
            for g, y in self._hh_simple(u, i):
                for b, c2 in g.items():
                    coef = c * c2
                    if pe:
                        tw = sum(l * bb for l, bb in zip(lam, b)) * pe % m
                        if tw:
                            coef = coef.mul_root(tw)
                    _add_into(out, (tuple((p + r) % mt for p, r in zip(a, b)), lam, y), coef)
        return out

    def _hx(self, w, lam) -> dict:
        """H_w x^lam in normal form."""
        key = (w, lam)
        hit = self._hx_memo.get(key)
        if hit is not None:
            return hit
        B = self.base
        if w == self.e_perm:
            res = {(B.zero_a, lam, w): self.K.one}
        elif not any(lam):
            res = {(B.zero_a, lam, w): self.K.one}
        else:
            i = max(sg.right_descents(w))
            w1 = sg.mul(w, sg.s(i, self.d))
            res = self._right_mul_H(self._hx(w1, _swap(lam, i)), i)
            mt = B.mt
            for (a, mu), c in B.rho_x(i, lam).items():
                fa = sg.act(w1, a)
                for (a2, mu2, u), c2 in self._hx(w1, mu).items():
                    _add_into(res, (tuple((p + r) % mt for p, r in zip(fa, a2)), mu2, u), c * c2)
        self._hx_memo[key] = res
        return res

    def _hxh(self, w1, lam, w2) -> list:
        """H_w1 x^lam H_w2 as a list of ((a, lam', y), Scalar)."""
        key = (w1, lam, w2)
        hit = self._hxh_memo.get(key)
        if hit is not None:
            return hit
        B = self.base
        mt, pe, m = B.mt, B.psi_exp, self.K.m
        e = self.e_perm
        hx = self._hx(w1, lam) if w1 != e else {(B.zero_a, lam, e): self.K.one}
        if w2 == e:
            res = list(hx.items())
        else:
            acc: dict = {}
            for (a3, l3, u), c3 in hx.items():
                for y, g in self._hh_full(u, w2).items():
                    for b, c4 in g.items():
                        coef = c3 * c4
                        if pe:
                            tw = sum(p * r for p, r in zip(l3, b)) * pe % m
                            if tw:
                                coef = coef.mul_root(tw)
                        _add_into(acc, (tuple((p + r) % mt for p, r in zip(a3, b)), l3, y), coef)
            res = list(acc.items())
        self._hxh_memo[key] = res
        return res

    def mul_terms(self, X: dict, Y: dict) -> dict:
        out: dict = {}
        B = self.base
        mt, pe, m = B.mt, B.psi_exp, self.K.m
        e = self.e_perm
        for (a1, l1, w1), c1 in X.items():
            for (a2, l2, w2), c2 in Y.items():
                f = sg.act(w1, a2) if w1 != e else a2
                c12 = c1 * c2
                if pe:
                    tw = sum(p * r for p, r in zip(l1, f)) * pe % m
                    if tw:
                        c12 = c12.mul_root(tw)
                pre_a = tuple((p + r) % mt for p, r in zip(a1, f))
                for (a3, l3, y), c3 in self._hxh(w1, l2, w2):
                    coef = c12 * c3
                    if pe:
                        tw = sum(p * r for p, r in zip(l1, a3)) * pe % m
                        if tw:
                            coef = coef.mul_root(tw)
                    key = (tuple((p + r) % mt for p, r in zip(pre_a, a3)),
                           tuple(p + r for p, r in zip(l1, l3)), y)
                    old = out.get(key)
                    if old is None:
                        out[key] = coef
                    else:
                        new = old + coef
                        if new.is_zero():
                            del out[key]
                        else:
                            out[key] = new
        return out

    def mul(self, a: "QwpElt", b: "QwpElt") -> "QwpElt":
        if a.alg != b.alg:
            raise ValueError("flavor mismatch")
        return QwpElt(self, self.mul_terms(a.terms, b.terms))

    # ---- views and projections ----------------------------------------
    def to_right_form(self, h: "QwpElt") -> dict:
        """Coefficients in the basis H_w b: {(w, a, lam): Scalar}."""
        rest = h
        out: dict = {}
        while not rest.is_zero():
            top = max(sg.length(w) for (_, _, w) in rest.terms)
            for (a, lam, w), c in list(rest.terms.items()):
                if sg.length(w) != top:
                    continue
                winv = sg.inverse(w)
                bb = self.base.place(winv, self.base.monomial(a, lam, c))
                # H_w b' = (w.b') H_w + lower; peel one term at a time
                for (a2, l2), c2 in bb.terms.items():
                    _add_into(out, (w, a2, l2), c2)
                    rest = rest - self.Hw(w) * self.from_base(self.base.monomial(a2, l2, c2))
                break
        return out

    def from_right_form(self, coeffs: dict) -> "QwpElt":
        out = self.elt()
        for (w, a, lam), c in coeffs.items():
            out = out + self.Hw(w) * self.from_base(self.base.monomial(a, lam, c))
        return out

    def subalgebra_project(self, h: "QwpElt", which: str = "finite_yokonuma") -> "QwpElt":
        if which != "finite_yokonuma":
            raise ValueError(f"unknown subalgebra {which!r}")
        if any(any(l) for (_, l, _) in h.terms):
            raise ValueError("not in finite subalgebra")
        return h

    # ---- corner algebra -------------------------------------------------
    def corner_upsilon(self, p: "QwpElt", direction: str = "forward", coarse=None):
        """Upsilon: coarse element -> corner of this algebra, or back.

        ``coarse`` is the coarse algebra (built on demand for the inverse).
        """
        nb = self.params.nbar
        eps = self.epsilon_I()
        if direction == "forward":
            if p.alg.flavor.kind not in ("coarse", "affine_hecke") or p.alg.d != self.d:
                raise ValueError("forward input must live in the coarse algebra")
            out = self.elt()
            cache: dict = {}
            for (a, lam, w), c in p.terms.items():
                key = (lam, w)
                if key not in cache:
                    X = self.monomial(lam=tuple(nb * v for v in lam))
                    cache[key] = eps * X * self.Hw(w) * eps
                out = out + cache[key] * c
            return out
        if direction == "inverse":
            if eps * p * eps != p:
                raise ValueError("input is not in the corner")
            C = coarse or WreathAlgebra(self.params, Flavor.coarse(self.params), self.d)
            scale = self.K.rational(self.base.mt ** self.d)
            terms: dict = {}
            za = self.base.zero_a
            for (a, lam, w), c in p.terms.items():
                if a == za:
                    if any(v % nb for v in lam):
                        raise ValueError("corner element with exponent outside nbar*Y")
                    terms[(C.base.zero_a, tuple(v // nb for v in lam), w)] = c * scale
            out = QwpElt(C, terms)
            if self.corner_upsilon(out, "forward") != p:
                raise ValueError("inverse Upsilon failed verification")
            return out
        raise ValueError(f"unknown direction {direction!r}")

    # ---- Bernstein presentation -----------------------------------------
    def c_alpha(self, i: int, r: int) -> BaseElt:
        """c_{alpha_i}(r) = (1/m) sum_j omega^{rj} t_i^j t_{i+1}^{-j}, omega = xi^{-2}."""
        return self.base.e(i, shift=-r)

    def bernstein_residual(self, i: int, lam, J: int) -> "QwpElt":
        lam = tuple(lam)
        pair = lam[i - 1] - lam[i]
        if J < max(1, 1 - pair) + abs(pair):
            raise ValueError("window too small")
        alpha = [0] * self.d
        alpha[i - 1], alpha[i] = 1, -1
        Hi = self.H(i)
        out = Hi * self.Y(lam) - self.Y(_swap(lam, i)) * Hi
        corr = self.elt()
        q1 = self.K.q - 1

        def term(j):
            mu = tuple(l + j * a for l, a in zip(lam, alpha))
            return self.Y(mu) * self.from_base(self.c_alpha(i, j + pair))

        for j in range(1, J + 1):
            corr = corr + term(j)
        for j in range(1 - pair, J + 1):
            corr = corr - term(j)
        return out + corr * q1

    # ---- io ---------------------------------------------------------------
    def sort_key(self, key):
        a, lam, w = key
        return (sg.length(w), w, lam, a)

    def to_json(self, h: "QwpElt") -> dict:
        return {"flavor": self.flavor.to_json(), "d": self.d,
                "terms": [{"t": list(a), "x": list(l), "w": list(w), "c": c.to_json()}
                          for (a, l, w), c in sorted(h.terms.items(), key=lambda kv: self.sort_key(kv[0]))]}

    def from_json(self, obj: dict) -> "QwpElt":
        if "flavor" in obj and Flavor.from_json(obj["flavor"]) != self.flavor:
            raise ValueError("flavor mismatch")
        out: dict = {}
        for t in obj["terms"]:
            a = tuple(int(v) % self.base.mt for v in t["t"])
            l = tuple(int(v) for v in t["x"])
            w = sg.validate(t["w"])
            if not (len(a) == len(l) == len(w) == self.d):
                raise ValueError("term has wrong degree")
            _add_into(out, (a, l, w), self.K.from_json(t["c"]))
        return QwpElt(self, out)


def _swap(v, i):
    v = list(v)
    v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


class QwpElt:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: WreathAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _coerce(self, o):
        if isinstance(o, QwpElt):
            if o.alg != self.alg:
                raise ValueError("flavor mismatch")
            return o
        if isinstance(o, BaseElt):
            return self.alg.from_base(o)
        return self.alg.scalar(o)

    def __add__(self, o):
        o = self._coerce(o)
        out = dict(self.terms)
        for k, c in o.terms.items():
            _add_into(out, k, c)
        return QwpElt(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return QwpElt(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, (QwpElt, BaseElt)):
            o = self._coerce(o)
            return QwpElt(self.alg, self.alg.mul_terms(self.terms, o.terms))
        if isinstance(o, (int, Scalar)) or hasattr(o, "numerator"):
            c = self.alg.K(o)
            if c.is_zero():
                return QwpElt(self.alg, {})
            return QwpElt(self.alg, {k: v * c for k, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, o):
        if isinstance(o, BaseElt):
            return self.alg.from_base(o) * self
        if isinstance(o, (int, Scalar)) or hasattr(o, "numerator"):
            return self * o
        return NotImplemented

    def __eq__(self, o):
        if isinstance(o, QwpElt):
            return self.alg == o.alg and self.terms == o.terms
        return self == self._coerce(o)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return set(w for (_, _, w) in self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items(), key=lambda kv: self.alg.sort_key(kv[0]))
        return " + ".join(f"({c})*t^{list(a)}x^{list(l)}H{list(w)}" for (a, l, w), c in items)

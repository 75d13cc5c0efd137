"""The base algebra A^{(x)d}, A = F x| C[x^{+-1}] with F = C[C_mt].

Elements are dicts ``{(a, lam): Scalar}`` meaning sum c t^a x^lam, torus part
on the left.  Moving x past the torus uses the automorphism psi(t) = xi^2 t,
so x t^j = zeta^(psi_exp * j) t^j x with zeta = zeta_m.
"""
from __future__ import annotations

from itertools import product

from . import symgroup as sg
from .scalar import Scalar, ScalarRing


def _add_into(acc: dict, key, c: Scalar):
    old = acc.get(key)
    if old is None:
        acc[key] = c
    else:
        new = old + c
        if new.is_zero():
            del acc[key]
        else:
            acc[key] = new


def _swap(v: tuple, i: int) -> tuple:
    v = list(v)
    v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


class BaseAlgebra:
    """A^{(x)d} over the scalar ring K.

    ``mt`` is the order of the torus generator (m for the fine algebras, 1 for
    the affine Hecke / coarse ones); ``psi_exp`` is the zeta_m exponent of xi^2.
    """

    def __init__(self, K: ScalarRing, d: int, mt: int, psi_exp: int = 0):
        if K.m % mt:
            raise ValueError("torus order must divide m")
        if mt == 1 and psi_exp % K.m:
            raise ValueError("trivial torus forces trivial twist")
        self.K = K
        self.d = d
        self.mt = mt
        self.psi_exp = psi_exp % K.m
        self.u_exp = K.m // mt  # t' basis root u = zeta_m^(m/mt)
        self._rho_cache: dict = {}
        self.zero_a = (0,) * d
        self.zero_x = (0,) * d

    def __eq__(self, other):
        return (isinstance(other, BaseAlgebra) and self.K is other.K and self.d == other.d
                and self.mt == other.mt and self.psi_exp == other.psi_exp)

    def __hash__(self):
        return hash((self.K.m, self.K.q, self.d, self.mt, self.psi_exp))

    # ---- constructors -----------------------------------------------------
    def elt(self, terms: dict | None = None) -> "BaseElt":
        return BaseElt(self, terms or {})

    def monomial(self, a=None, lam=None, c=1) -> "BaseElt":
        a = self.zero_a if a is None else tuple(x % self.mt for x in a)
        lam = self.zero_x if lam is None else tuple(lam)
        c = self.K(c)
        return BaseElt(self, {} if c.is_zero() else {(a, lam): c})

    def one(self) -> "BaseElt":
        return self.monomial()

    def scalar(self, c) -> "BaseElt":
        return self.monomial(c=c)

    def t(self, i: int, j: int = 1) -> "BaseElt":
        a = [0] * self.d
        a[i - 1] = j
        return self.monomial(a)

    def x(self, i: int, e: int = 1) -> "BaseElt":
        lam = [0] * self.d
        lam[i - 1] = e
        return self.monomial(None, lam)

    def e(self, i: int, shift: int = 0) -> "BaseElt":
        """e_i = (1/mt) sum_j t_i^j t_{i+1}^-j, with psi^shift applied to slot i."""
        K = self.K
        out = {}
        inv = K.rational(1, self.mt)
        for j in range(self.mt):
            a = [0] * self.d
            a[i - 1] = j
            a[i] = (-j) % self.mt
            out[(tuple(a), self.zero_x)] = inv.mul_root(self.psi_exp * shift * j)
        return BaseElt(self, out)

    def S(self, i: int, shift: int = 0) -> "BaseElt":
        return self.e(i, shift) * (self.K.q - 1)

    def R(self, i: int, k: int) -> "BaseElt":
        a = [0] * self.d
        a[i - 1] = k
        a[i] = k
        return self.monomial(a, None, self.K.q)

    def tprime(self, slot: int, j: int) -> "BaseElt":
        """t'_j in one slot: (1/mt) sum_i (u^j t)^i."""
        out = {}
        inv = self.K.rational(1, self.mt)
        for i in range(self.mt):
            a = [0] * self.d
            a[slot - 1] = i
            out[(tuple(a), self.zero_x)] = inv.mul_root(self.u_exp * j * i)
        return BaseElt(self, out)

    def c_chi(self, gamma) -> "BaseElt":
        """c(chi^gamma) = t'_{gamma_1} (x) ... (x) t'_{gamma_d}."""
        out = self.one()
        for p, g in enumerate(gamma, 1):
            out = out * self.tprime(p, g)
        return out

    def epsilon_I(self) -> "BaseElt":
        return self.c_chi((0,) * self.d)

    def idempotent(self, which: str, i: int | None = None, k: int = 0, gamma=None) -> "BaseElt":
        if which == "e":
            return self.e(i)
        if which == "S":
            return self.S(i)
        if which == "R":
            return self.R(i, k)
        if which == "epsilon_I":
            return self.epsilon_I()
        if which == "c_chi":
            return self.c_chi(gamma)
        raise ValueError(f"unknown idempotent {which!r}")

    # ---- multiplication ---------------------------------------------------
    def mul_terms(self, A: dict, B: dict) -> dict:
        out: dict = {}
        mt, pe, m = self.mt, self.psi_exp, self.K.m
        for (a, lam), c in A.items():
            for (b, mu), c2 in B.items():
                key = (tuple((x + y) % mt for x, y in zip(a, b)),
                       tuple(x + y for x, y in zip(lam, mu)))
                coef = c * c2
                if pe:
                    tw = sum(l * bb for l, bb in zip(lam, b)) * pe % m
                    if tw:
                        coef = coef.mul_root(tw)
                _add_into(out, key, coef)
        return out

    # ---- sigma, psi, place action ---------------------------------------
    def sigma(self, b: "BaseElt", i: int) -> "BaseElt":
        return BaseElt(self, {(_swap(a, i), _swap(l, i)): c for (a, l), c in b.terms.items()})

    def place(self, w, b: "BaseElt") -> "BaseElt":
        return BaseElt(self, {(sg.act(w, a), sg.act(w, l)): c for (a, l), c in b.terms.items()})

    def psi(self, b: "BaseElt", shifts) -> "BaseElt":
        """Apply psi^{shifts[p]} in each slot p (torus exponents pick up roots)."""
        out = {}
        for (a, l), c in b.terms.items():
            tw = sum(s * x for s, x in zip(shifts, a)) * self.psi_exp
            out[(a, l)] = c.mul_root(tw)
        return BaseElt(self, out)

    def shift_delta(self, delta: "BaseElt", i: int, slot: int = 1) -> "BaseElt":
        """Delta^{(i)}: psi^i applied to the first of the two slots (slot, slot+1)."""
        shifts = [0] * self.d
        shifts[slot - 1] = i
        return self.psi(delta, shifts)

    # ---- twisted Demazure operator -------------------------------------
    def rho(self, b: "BaseElt", i: int) -> "BaseElt":
        out: dict = {}
        for (a, lam), c in b.terms.items():
            r = self.rho_x(i, lam)
            if not r:
                continue
            sa = _swap(a, i)
            for (a2, l2), c2 in r.items():
                _add_into(out, (tuple((x + y) % self.mt for x, y in zip(sa, a2)), l2), c * c2)
        return BaseElt(self, out)

    def rho_x(self, i: int, lam: tuple) -> dict:
        """rho_i(x^lam) as a term dict (cached)."""
        key = (i, lam)
        hit = self._rho_cache.get(key)
        if hit is not None:
            return hit
        al, be = lam[i - 1], lam[i]
        res: dict = {}
        if al != be:
            base = min(al, be)
            kk = abs(al - be)
            S = self.S(i).terms
            pair = [0] * self.d
            pair[i - 1] = pair[i] = base
            acc: dict = {}
            for l in range(kk):
                if al > be:
                    left = self._xmono({i + 1: l})
                    right = self._xmono({i: kk - l})
                    sign = 1
                else:
                    left = self._xmono({i: kk - l})
                    right = self._xmono({i + 1: l})
                    sign = -1
                term = self.mul_terms(self.mul_terms(left, S), right)
                for key2, c in term.items():
                    _add_into(acc, key2, c if sign == 1 else -c)
            rest = list(lam)
            rest[i - 1] = rest[i] = base
            res = self.mul_terms({(self.zero_a, tuple(rest)): self.K.one}, acc)
        self._rho_cache[key] = res
        return res

    def _xmono(self, exps: dict) -> dict:
        lam = [0] * self.d
        for p, e in exps.items():
            lam[p - 1] = e
        return {(self.zero_a, tuple(lam)): self.K.one}

    # ---- t' basis ---------------------------------------------------------
    def to_tprime(self, b: "BaseElt") -> dict:
        """Coefficients of a torus element in the t' basis: {gamma: Scalar}."""
        out: dict = {}
        for (a, l), c in b.terms.items():
            if any(l):
                raise ValueError("to_tprime expects a torus element")
            for gam in product(range(self.mt), repeat=self.d):
                e = -sum(x * y for x, y in zip(gam, a)) * self.u_exp
                _add_into(out, gam, c.mul_root(e))
        return out

    def from_tprime(self, coeffs: dict) -> "BaseElt":
        out = self.elt()
        for gam, c in coeffs.items():
            out = out + self.c_chi(gam) * c
        return out

    def tprime_convert(self, b, direction: str = "t->t'"):
        if direction in ("t->t'", "forward"):
            return self.to_tprime(b)
        if direction in ("t'->t", "inverse"):
            return self.from_tprime(b)
        raise ValueError(f"unknown direction {direction!r}")

    # ---- io ---------------------------------------------------------------
    def to_json(self, b: "BaseElt") -> dict:
        return {"terms": [{"t": list(a), "x": list(l), "c": c.to_json()}
                          for (a, l), c in sorted(b.terms.items())]}

    def from_json(self, obj: dict) -> "BaseElt":
        out: dict = {}
        for t in obj["terms"]:
            a = tuple(int(v) % self.mt for v in t["t"])
            l = tuple(int(v) for v in t["x"])
            if len(a) != self.d or len(l) != self.d:
                raise ValueError("exponent vector has wrong length")
            _add_into(out, (a, l), self.K.from_json(t["c"]))
        return BaseElt(self, out)


class BaseElt:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: BaseAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _coerce(self, o):
        if isinstance(o, BaseElt):
            return o
        return self.alg.scalar(o)

    def __add__(self, o):
        o = self._coerce(o)
        out = dict(self.terms)
        for k, c in o.terms.items():
            _add_into(out, k, c)
        return BaseElt(self.alg, out)

    __radd__ = __add__

    def __neg__(self):
        return BaseElt(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._coerce(o))

    def __rsub__(self, o):
        return (-self) + o

    def __mul__(self, o):
        if isinstance(o, BaseElt):
            return BaseElt(self.alg, self.alg.mul_terms(self.terms, o.terms))
        if isinstance(o, (int, Scalar)) or hasattr(o, "numerator"):
            c = self.alg.K(o)
            if c.is_zero():
                return BaseElt(self.alg, {})
            return BaseElt(self.alg, {k: v * c for k, v in self.terms.items()})
        return NotImplemented

    def __rmul__(self, o):
        if isinstance(o, (int, Scalar)) or hasattr(o, "numerator"):
            return self * o
        return NotImplemented

    def __pow__(self, e: int):
        out = self.alg.one()
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, o):
        if isinstance(o, BaseElt):
            return self.terms == o.terms
        return self == self._coerce(o)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def is_torus(self) -> bool:
        return all(not any(l) for (_, l) in self.terms)

    def sigma(self, i: int) -> "BaseElt":
        return self.alg.sigma(self, i)

    def rho(self, i: int) -> "BaseElt":
        return self.alg.rho(self, i)

    def place(self, w) -> "BaseElt":
        return self.alg.place(w, self)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*t^{list(a)}x^{list(l)}" for (a, l), c in sorted(self.terms.items()))

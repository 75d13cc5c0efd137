"""Exact coefficients in K = Q(zeta_m)[s]/(s^2 - q).

An element is stored as two integer vectors (the parts multiplying 1 and s)
in the power basis of zeta_m modulo the m-th cyclotomic polynomial, plus one
positive common denominator.  Everything is reduced eagerly, so equality is
tuple equality.

>>> K = ring(4, 5)
>>> K.sqrt_q() * K.sqrt_q() == K(5)
True
>>> K.root(4) == K.one
True
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd


def cyclotomic_poly(m: int) -> list[int]:
    """Coefficients (low degree first) of the m-th cyclotomic polynomial."""
    # x^m - 1 divided by every Phi_d with d | m, d < m
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _exact_div(num, cyclotomic_poly(d))
    return num


def _exact_div(a: list[int], b: list[int]) -> list[int]:
    a = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = a[i + len(b) - 1] // b[-1]
        out[i] = c
        for j, bj in enumerate(b):
            a[i + j] -= c * bj
    assert not any(a), "inexact cyclotomic division"
    return out


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


class ScalarRing:
    """The ring K for fixed (m, q).  Use :func:`ring` to get the shared instance."""

    def __init__(self, m: int, q: int):
        if m < 1:
            raise ValueError("m must be positive")
        self.m = m
        self.q = q
        phi = cyclotomic_poly(m)
        self.phi = len(phi) - 1
        self._phi_poly = phi
        # power-basis vector of zeta^j for 0 <= j < max(m, 2*phi - 1)
        self._pow = []
        v = [0] * self.phi
        v[0] = 1
        for _ in range(max(m, 2 * self.phi - 1)):
            self._pow.append(tuple(v))
            v = self._times_zeta(v)
        self.zero = Scalar(self, (0,) * (2 * self.phi), 1)
        self.one = self.rational(1)

    def _times_zeta(self, v):
        # multiply a power-basis vector by zeta and reduce by Phi_m (monic)
        top = v[-1]
        w = [0] + list(v[:-1])
        if top:
            for i in range(self.phi):
                w[i] -= top * self._phi_poly[i]
        return w

    def __repr__(self):
        return f"ScalarRing(m={self.m}, q={self.q})"

    def __call__(self, x) -> "Scalar":
        return self.coerce(x)

    def coerce(self, x) -> "Scalar":
        if isinstance(x, Scalar):
            if x.ring is not self:
                raise ValueError("scalars from different rings")
            return x
        if isinstance(x, (int, Fraction)):
            return self.rational(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to a scalar")

    def rational(self, p, r: int = 1) -> "Scalar":
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        x = Fraction(p) / r
        num = [0] * (2 * self.phi)
        num[0] = x.numerator
        return Scalar.make(self, num, x.denominator)

    def root(self, j: int) -> "Scalar":
        """zeta_m ** j."""
        v = self._pow[j % self.m]
        return Scalar(self, tuple(v) + (0,) * self.phi, 1)

    def sqrt_q(self) -> "Scalar":
        num = [0] * (2 * self.phi)
        num[self.phi] = 1
        return Scalar(self, tuple(num), 1)

    def _reduce(self, conv: list[int]) -> list[int]:
        # conv has length <= 2*phi - 1; fold the high powers back
        phi = self.phi
        out = conv[:phi] + [0] * max(0, phi - len(conv))
        for j in range(phi, len(conv)):
            c = conv[j]
            if c:
                v = self._pow[j]
                for i in range(phi):
                    out[i] += c * v[i]
        return out

    def from_json(self, obj) -> "Scalar":
        # shorthand for hand-written input: an integer or a "p/r" string
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            fr = Fraction(obj)
            return self.rational(fr.numerator, fr.denominator)
        one, s, den = obj["one"], obj["s"], obj["den"]
        if len(one) != self.phi or len(s) != self.phi:
            raise ValueError("scalar vector length does not match phi(m)")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        return Scalar.make(self, [int(c) for c in one] + [int(c) for c in s], int(den))


@lru_cache(maxsize=None)
def ring(m: int, q: int) -> ScalarRing:
    return ScalarRing(m, q)


class Scalar:
    """Immutable element of K.  ``num`` holds the 1-part then the s-part."""

    __slots__ = ("ring", "num", "den", "rat", "_hash")

    def __init__(self, ring: ScalarRing, num: tuple, den: int, rat: bool | None = None):
        self.ring = ring
        self.num = num
        self.den = den
        # rat: only the constant coefficient is nonzero
        self.rat = (not any(num[1:])) if rat is None else rat
        self._hash = None

    @staticmethod
    def make(ring: ScalarRing, num, den: int) -> "Scalar":
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        nz = 0
        rat = True
        for i, c in enumerate(num):
            if c:
                nz += 1
                if i:
                    rat = False
                if g != 1:
                    g = gcd(g, c)
        if not nz:
            return Scalar(ring, (0,) * len(num), 1, True)
        if g != 1:
            num = [c // g for c in num]
            den //= g
        return Scalar(ring, tuple(num), den, rat)

    # ---- arithmetic -------------------------------------------------------
    def _other(self, b):
        if isinstance(b, Scalar):
            return b
        if isinstance(b, (int, Fraction)):
            return self.ring.rational(b)
        return None

    def __add__(self, b):
        b = self._other(b)
        if b is None:
            return NotImplemented
        if self.den == b.den:
            return Scalar.make(self.ring, [x + y for x, y in zip(self.num, b.num)], self.den)
        d1, d2 = self.den, b.den
        return Scalar.make(self.ring, [x * d2 + y * d1 for x, y in zip(self.num, b.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.ring, tuple(-c for c in self.num), self.den, self.rat)

    def __sub__(self, b):
        b = self._other(b)
        if b is None:
            return NotImplemented
        return self + (-b)

    def __rsub__(self, b):
        return (-self) + b

    def __mul__(self, b):
        if isinstance(b, int):
            if b == 0:
                return self.ring.zero
            return Scalar.make(self.ring, [c * b for c in self.num], self.den)
        b = self._other(b)
        if b is None:
            return NotImplemented
        R = self.ring
        if b.rat:
            r = b.num[0]
            if not r:
                return R.zero
            return Scalar.make(R, [c * r for c in self.num], self.den * b.den)
        if self.rat:
            r = self.num[0]
            if not r:
                return R.zero
            return Scalar.make(R, [c * r for c in b.num], self.den * b.den)
        phi = R.phi
        a0, a1 = self.num[:phi], self.num[phi:]
        b0, b1 = b.num[:phi], b.num[phi:]
        c0 = _conv(a0, b0)
        c1 = _conv(a0, b1)
        if any(a1):
            t = _conv(a1, b1)
            q = R.q
            c0 = [x + q * y for x, y in zip(c0, t)]
            c1 = [x + y for x, y in zip(c1, _conv(a1, b0))]
        return Scalar.make(R, R._reduce(c0) + R._reduce(c1), self.den * b.den)

    __rmul__ = __mul__

    def mul_root(self, j: int) -> "Scalar":
        """Multiply by zeta_m ** j (cheap shift-and-reduce)."""
        R = self.ring
        j %= R.m
        if j == 0 or self.is_zero():
            return self
        phi = R.phi
        out = [0] * (2 * phi)
        for part in (0, phi):
            for i in range(phi):
                c = self.num[part + i]
                if c:
                    w = R._pow[(i + j) % R.m]
                    for r in range(phi):
                        out[part + r] += c * w[r]
        return Scalar.make(R, out, self.den)

    def __truediv__(self, b):
        if isinstance(b, (int, Fraction)):
            if b == 0:
                raise ZeroDivisionError("division by zero")
            return self * self.ring.rational(1, b)
        if isinstance(b, Scalar):
            return self * b.invert_restricted()
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            return self.invert_restricted() ** (-e)
        out, base = self.ring.one, self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    # ---- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def __eq__(self, b):
        if isinstance(b, (int, Fraction)):
            b = self.ring.rational(b)
        if not isinstance(b, Scalar):
            return NotImplemented
        return self.den == b.den and self.num == b.num and self.ring.m == b.ring.m

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def is_rational(self) -> bool:
        return self.rat

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not rational")
        return Fraction(self.num[0], self.den)

    # ---- restricted inversion --------------------------------------------
    def invert_restricted(self) -> "Scalar":
        """Inverse of c * zeta^j * s^e with c a nonzero rational."""
        R = self.ring
        phi = R.phi
        one_part, s_part = self.num[:phi], self.num[phi:]
        if any(one_part) and any(s_part):
            raise ValueError("not invertible by restricted routine")
        if not any(one_part) and not any(s_part):
            raise ZeroDivisionError("zero is not invertible")
        if any(s_part):
            # a = s * b  =>  1/a = s / (q b)
            b = Scalar.make(R, list(s_part) + [0] * phi, self.den)
            return R.sqrt_q() * b.invert_restricted() * R.rational(1, R.q)
        for j in range(R.m):
            c = self.mul_root(-j)
            if c.is_rational():
                return R.root(-j) * R.rational(c.den, c.num[0])
        raise ValueError("not invertible by restricted routine")

    # ---- io ---------------------------------------------------------------
    def to_json(self) -> dict:
        phi = self.ring.phi
        return {"one": list(self.num[:phi]), "s": list(self.num[phi:]), "den": self.den}

    def __repr__(self):
        R = self.ring
        parts = []
        for part, tag in ((0, ""), (R.phi, "s")):
            for i in range(R.phi):
                c = self.num[part + i]
                if c:
                    mon = "*".join(x for x in (tag, f"z^{i}" if i > 1 else ("z" if i == 1 else "")) if x)
                    parts.append(f"{c}{'*' + mon if mon else ''}")
        if not parts:
            return "0"
        body = " + ".join(parts).replace("+ -", "- ")
        return body if self.den == 1 else f"({body})/{self.den}"


def _conv(a, b) -> list[int]:
    n = len(a)
    out = [0] * (2 * n - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


@dataclass(frozen=True)
class Params:
    """Global parameters: q, the skew order n, the shift k, degree d, step N.

    ``xi_exp`` picks xi = zeta_m^((m/n) * xi_exp); it must be a unit mod n so
    that xi is a primitive n-th root of unity.
    """

    q: int
    n: int = 1
    k: int = 0
    d: int = 2
    N: int = 1
    xi_exp: int = 1
    seed: int = 0
    m: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "m", self.q - 1)
        self.validate()

    def validate(self):
        q, n, k, m = self.q, self.n, self.k, self.q - 1
        if not is_prime_power(q):
            raise ValueError(f"q={q} is not a prime power")
        if n < 1 or m % n:
            raise ValueError(f"n={n} must divide m={m}")
        if m % (2 * n):
            raise ValueError(f"2n={2 * n} must divide m={m}")
        if n > 1 and k % m not in (0, m // 2 if m % 2 == 0 else 0):
            raise ValueError(f"k={k} must be 0 or m/2 when n > 1")
        if self.d < 1 or self.N < 1:
            raise ValueError("d and N must be positive")
        if gcd(self.xi_exp, n) != 1:
            raise ValueError("xi_exp must be a unit mod n")

    @property
    def nbar(self) -> int:
        return self.n // gcd(self.n, 2)

    @property
    def ring(self) -> ScalarRing:
        return ring(self.m, self.q)

    def replace(self, **kw) -> "Params":
        vals = dict(q=self.q, n=self.n, k=self.k, d=self.d, N=self.N,
                    xi_exp=self.xi_exp, seed=self.seed)
        vals.update(kw)
        return Params(**vals)

    def to_json(self) -> dict:
        return dict(q=self.q, n=self.n, k=self.k, d=self.d, N=self.N,
                    xi_exp=self.xi_exp, seed=self.seed)

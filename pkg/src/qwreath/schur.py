"""Wreath Schur algebra elements theta_{A,P}: y_mu H -> y_lam H.

A :class:`SchurElt` stores the image of y_mu (``value``, an element of
y_lam H) and the right factor ``tail`` with value = y_lam * tail.  Composition
is then a single product: (f o g).value = f.value * g.tail.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import symgroup as sg
from .basealg import BaseElt, _add_into
from .qwp import QwpElt, WreathAlgebra


@dataclass
class SchurElt:
    alg: WreathAlgebra
    source: tuple
    target: tuple
    value: QwpElt
    tail: QwpElt
    label: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"source": list(self.source), "target": list(self.target),
                "value": self.alg.to_json(self.value), "tail": self.alg.to_json(self.tail)}

    @staticmethod
    def from_json(alg: WreathAlgebra, obj: dict) -> "SchurElt":
        return SchurElt(alg, tuple(obj["source"]), tuple(obj["target"]),
                        alg.from_json(obj["value"]), alg.from_json(obj["tail"]))


def is_delta_symmetric(P: BaseElt, dl) -> bool:
    return all(P.sigma(i) == P for i in sg.parabolic_gens(dl))


def theta_build(alg: WreathAlgebra, A, P: BaseElt) -> SchurElt:
    lam, g, mu, dl = sg.matrix_to_triple(A)
    if sum(lam) != alg.d:
        raise ValueError("matrix entries must sum to d")
    if not is_delta_symmetric(P, dl):
        raise ValueError("P not delta-symmetric")
    tail = alg.Hw(g) * alg.from_base(P) * alg.y_delta(mu, dl)
    return SchurElt(alg, mu, lam, alg.y(lam) * tail, tail, [(A, P)])


def identity(alg: WreathAlgebra, lam) -> SchurElt:
    lam = tuple(lam)
    A = [[lam[i] if i == j else 0 for j in range(len(lam))] for i in range(len(lam))]
    return theta_build(alg, A, alg.base.one())


def perm_module_expand(alg: WreathAlgebra, lam, h: QwpElt, max_steps: int = 10000) -> list:
    """Write h = sum_eta y_lam H_eta b_eta; returns [(eta, b_eta)] sorted by (len, eta)."""
    lam = tuple(lam)
    w0 = sg.longest_parabolic(lam)
    y = alg.y(lam)
    B = alg.base
    rest = h
    out: dict = {}
    for _ in range(max_steps):
        if rest.is_zero():
            break
        w = max(rest.support(), key=lambda v: (sg.length(v), v))
        u, eta = sg.factorize_coset(w, lam)
        if u != w0:
            raise ValueError("not in y_lam H")
        lead = BaseElt(B, {(a, l): c for (a, l, ww), c in rest.terms.items() if ww == w})
        b = B.place(sg.inverse(w), lead)
        out[eta] = out.get(eta, B.elt()) + b
        rest = rest - y * alg.Hw(eta) * alg.from_base(b)
    else:
        raise ValueError("expansion did not terminate")
    return sorted(((eta, b) for eta, b in out.items() if not b.is_zero()),
                  key=lambda kv: (sg.length(kv[0]), kv[0]))


def reassemble(alg: WreathAlgebra, lam, expansion) -> QwpElt:
    y = alg.y(tuple(lam))
    out = alg.elt()
    for eta, b in expansion:
        out = out + y * alg.Hw(eta) * alg.from_base(b)
    return out


def schur_compose(f: SchurElt, g: SchurElt) -> SchurElt:
    if tuple(f.source) != tuple(g.target):
        raise ValueError("composition-shape mismatch")
    return SchurElt(f.alg, g.source, f.target, f.value * g.tail, f.tail * g.tail,
                    f.label + g.label)


def theta_decompose(s: SchurElt, max_steps: int = 10000) -> list:
    """Triples (A, P, c) with sum y_lam H_g P y^delta c = s.value."""
    alg = s.alg
    lam, nu = tuple(s.target), tuple(s.source)
    B = alg.base
    w_lam = sg.longest_parabolic(lam)
    rest = s.value
    out = []
    for _ in range(max_steps):
        if rest.is_zero():
            break
        w = max(rest.support(), key=lambda v: (sg.length(v), v))
        u, g, v = sg.factorize_double(w, lam, nu)
        A = sg.triple_to_matrix(lam, g, nu)
        _, w_prime, w_A = sg.longest_elements(A)
        if u != w_lam or v != w_prime:
            raise ValueError("peeling failed")
        dl = sg.delta(A)
        lead = BaseElt(B, {(a, l): c for (a, l, ww), c in rest.terms.items() if ww == w})
        wg = sg.mul(w_lam, g)
        P = B.place(sg.inverse(wg), lead)
        if is_delta_symmetric(P, dl):
            c = B.one()
        else:
            P, c = B.one(), B.place(sg.inverse(w_A), lead)
        piece = alg.y(lam) * alg.Hw(g) * alg.from_base(P) * alg.y_delta(nu, dl) * alg.from_base(c)
        new = rest - piece
        if w in new.support() and any(ww == w for (_, _, ww) in new.terms):
            raise ValueError("peeling failed")
        rest = new
        out.append((A, P, c))
    else:
        raise ValueError("peeling failed")
    return out


def recompose(alg: WreathAlgebra, lam, nu, triples) -> QwpElt:
    out = alg.elt()
    y = alg.y(tuple(lam))
    for A, P, c in triples:
        _, g, mu, dl = sg.matrix_to_triple(A)
        out = out + y * alg.Hw(g) * alg.from_base(P) * alg.y_delta(mu, dl) * alg.from_base(c)
    return out


def tensor_image(s: SchurElt, T, h: QwpElt | None = None):
    """Image of v_nu . h under s, realised as v_lam . tail . h (triv tensor space)."""
    v = T.v_lambda(_pad(s.target, T.N))
    out = T.act(v, s.tail)
    return T.act(out, h) if h is not None else out


def _pad(lam, N):
    lam = tuple(lam)
    if len(lam) > N:
        if any(lam[N:]):
            raise ValueError("composition has more nonzero parts than N")
        lam = lam[:N]
    return lam + (0,) * (N - len(lam))

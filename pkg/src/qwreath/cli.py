"""Command-line front end.

    qwreath nf ELT.json                    normal form of a QwpElt
    qwreath mul A.json B.json [C.json ...] product, left to right
    qwreath act ELT.json VEC.json          right action on a tensor / wreath-module vector
    qwreath schur-build --A '[[1,1],[2,0]]' [--P P.json]
    qwreath schur-compose F.json G.json
    qwreath schur-expand S.json [--decompose]
    qwreath verify [CHECK ...] [--all] [--jsonl out.jsonl]
    qwreath table [--exp 1] [--torus 0]   CSV multiplication table

Params come from --q --n --k --d --N --seed (plus --xi-exp); --config FILE
(a JSON object with the same keys) overrides them.  Exit codes: 0 ok,
1 a verification check failed, 2 malformed input or illegal Params.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path

from . import checks as ck
from . import schur as sch
from . import symgroup as sg
from .modules import TensorModule, WreathModule
from .qwp import Flavor, QwpElt, WreathAlgebra
from .scalar import Params

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class Config:
    params: Params
    seed: int = 0
    out: str | None = None
    inputs: list = field(default_factory=list)


def _load_json(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return json.loads(text)


def _emit(obj, out: str | None):
    text = json.dumps(obj, sort_keys=False)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def make_config(args) -> Config:
    vals = dict(q=args.q, n=args.n, k=args.k, d=args.d, N=args.N, xi_exp=args.xi_exp, seed=args.seed)
    if args.config:
        cfg = _load_json(args.config)
        if not isinstance(cfg, dict):
            raise InputError("config must be a JSON object")
        unknown = set(cfg) - set(vals)
        if unknown:
            raise InputError(f"unknown config keys: {sorted(unknown)}")
        vals.update(cfg)
    return Config(Params(**vals), vals["seed"], getattr(args, "out", None))


def _algebra_for(cfg: Config, obj: dict | None = None) -> WreathAlgebra:
    """The algebra named by an element's JSON (flavor, d), falling back on Params."""
    p = cfg.params
    if obj and "flavor" in obj:
        d = int(obj.get("d", p.d))
        return WreathAlgebra(p.replace(d=d), Flavor.from_json(obj["flavor"]), d)
    if obj and obj.get("terms"):
        d = len(obj["terms"][0]["w"])
        return WreathAlgebra(p.replace(d=d))
    return WreathAlgebra(p)


def _read_elt(cfg: Config, path: str, alg: WreathAlgebra | None = None) -> QwpElt:
    obj = _load_json(path)
    A = alg or _algebra_for(cfg, obj)
    return A.from_json(obj)


# ---- subcommands --------------------------------------------------------------

def cmd_nf(args, cfg):
    h = _read_elt(cfg, args.elt)
    _emit(h.alg.to_json(h), cfg.out)
    return EXIT_OK


def cmd_mul(args, cfg):
    if len(args.elts) < 2:
        raise InputError("mul needs at least two elements")
    first = _load_json(args.elts[0])
    A = _algebra_for(cfg, first)
    out = A.from_json(first)
    for path in args.elts[1:]:
        out = out * _read_elt(cfg, path, A)
    _emit(A.to_json(out), cfg.out)
    return EXIT_OK


def cmd_act(args, cfg):
    h = _read_elt(cfg, args.elt)
    A = h.alg
    obj = _load_json(args.vec)
    if "b" in obj:  # wreath-module vector
        M = WreathModule(A, obj.get("specht", "sgn"), obj.get("index", "regular"))
        v = M.elt(A.base.from_json(obj["b"]))
        r = M.act(v, h)
        _emit({"specht": M.specht, "index": M.index, "b": A.base.to_json(r.b)}, cfg.out)
    else:
        T = TensorModule(A, int(obj.get("N", cfg.params.N)), obj.get("variant", "sgn"))
        r = T.act(T.from_json(obj), h)
        _emit(T.to_json(r), cfg.out)
    return EXIT_OK


def _parse_matrix(text: str):
    try:
        A = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"bad matrix: {exc}") from exc
    if (not isinstance(A, list) or not A or any(not isinstance(r, list) or len(r) != len(A[0]) for r in A)
            or any(not isinstance(x, int) or x < 0 for r in A for x in r)):
        raise InputError("matrix must be a rectangular list of non-negative integers")
    return A


def cmd_schur_build(args, cfg):
    A = _parse_matrix(args.A)
    d = sum(map(sum, A))
    W = WreathAlgebra(cfg.params.replace(d=d))
    W.y_convention = args.y_convention
    P = W.base.from_json(_load_json(args.P)) if args.P else W.base.one()
    s = sch.theta_build(W, A, P)
    _emit(s.to_json() | {"d": d}, cfg.out)
    return EXIT_OK


def _read_schur(cfg, path, y_convention):
    obj = _load_json(path)
    W = _algebra_for(cfg, obj["value"])
    W.y_convention = y_convention
    return sch.SchurElt.from_json(W, obj)


def cmd_schur_compose(args, cfg):
    f = _read_schur(cfg, args.f, args.y_convention)
    g = _read_schur(cfg, args.g, args.y_convention)
    g = sch.SchurElt(f.alg, g.source, g.target, f.alg.from_json(g.alg.to_json(g.value)),
                     f.alg.from_json(g.alg.to_json(g.tail)))
    _emit(sch.schur_compose(f, g).to_json(), cfg.out)
    return EXIT_OK


def cmd_schur_expand(args, cfg):
    s = _read_schur(cfg, args.s, args.y_convention)
    B = s.alg.base
    out = {"expansion": [{"eta": list(e), "word": sg.reduced_word(e), "b": B.to_json(b)}
                         for e, b in sch.perm_module_expand(s.alg, s.target, s.value)]}
    if args.decompose:
        out["theta"] = [{"A": A, "P": B.to_json(P), "c": B.to_json(c)}
                        for A, P, c in sch.theta_decompose(s)]
    _emit(out, cfg.out)
    return EXIT_OK


def cmd_verify(args, cfg):
    budget = ck.Budget(samples=args.samples, exp_bound=args.exp_bound, J=args.J)
    names = args.checks
    for n in names:
        if n not in ck.CHECKS:
            raise InputError(f"unknown check {n!r}; available: {', '.join(ck.CHECKS)}")
    if args.all:
        jobs = ck.default_jobs(names or None, include_slow=args.slow)
    else:
        if not names:
            raise InputError("name at least one check, or pass --all")
        jobs = [(n, cfg.params) for n in names]
    reports = ck.run_suite(jobs, budget, cfg.seed, args.workers)
    if args.jsonl:
        with open(args.jsonl, "w") as fh:
            for r in reports:
                fh.write(r.to_jsonl() + "\n")
    print(ck.summary_table(reports))
    for r in reports:
        if not r.ok:
            print(f"FAIL {r.name} {r.params}: {json.dumps(r.witness)[:2000]}", file=sys.stderr)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


def _label(key) -> str:
    a, lam, w = key
    return json.dumps({"t": list(a), "x": list(lam), "w": list(w)}, separators=(",", ":"))


def cmd_table(args, cfg):
    W = WreathAlgebra(cfg.params)
    E = args.exp
    tors = [W.base.zero_a] if not args.torus else list(product(range(W.base.mt), repeat=W.d))
    keys = [(a, lam, w) for w in sg.all_perms(W.d)
            for lam in product(range(-E, E + 1), repeat=W.d) for a in tors]
    keys.sort(key=W.sort_key)
    fh = open(cfg.out, "w", newline="") if cfg.out else sys.stdout
    try:
        wr = csv.writer(fh)
        wr.writerow(["row_basis", "col_basis", "coeff_json"])
        for r in keys:
            for c in keys:
                prod = W.monomial(*r) * W.monomial(*c)
                wr.writerow([_label(r), _label(c),
                             json.dumps(W.to_json(prod)["terms"], separators=(",", ":"))])
    finally:
        if fh is not sys.stdout:
            fh.close()
    return EXIT_OK


# ---- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("parameters")
    g.add_argument("--q", type=int, default=5)
    g.add_argument("--n", type=int, default=1)
    g.add_argument("--k", type=int, default=0)
    g.add_argument("--d", type=int, default=2)
    g.add_argument("--N", type=int, default=1)
    g.add_argument("--xi-exp", dest="xi_exp", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--config", help="JSON file with parameter overrides")
    g.add_argument("--out", help="write output here instead of stdout")

    p = argparse.ArgumentParser(prog="qwreath", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("nf", parents=[common], help="normal form of a QwpElt")
    s.add_argument("elt")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("mul", parents=[common], help="product of QwpElts")
    s.add_argument("elts", nargs="+")
    s.set_defaults(func=cmd_mul)

    s = sub.add_parser("act", parents=[common], help="right action on a module vector")
    s.add_argument("elt")
    s.add_argument("vec")
    s.set_defaults(func=cmd_act)

    for name, fn, argspec in (("schur-build", cmd_schur_build, ()),
                              ("schur-compose", cmd_schur_compose, ("f", "g")),
                              ("schur-expand", cmd_schur_expand, ("s",))):
        s = sub.add_parser(name, parents=[common])
        for a in argspec:
            s.add_argument(a)
        s.add_argument("--y-convention", default="hom", choices=["hom", "printed"])
        s.set_defaults(func=fn)
        if name == "schur-build":
            s.add_argument("--A", required=True, help="theta matrix as JSON")
            s.add_argument("--P", help="BaseElt JSON file (default 1)")
        if name == "schur-expand":
            s.add_argument("--decompose", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="run identity checks")
    s.add_argument("checks", nargs="*")
    s.add_argument("--all", action="store_true", help="default parameter matrix")
    s.add_argument("--slow", action="store_true", help="include the q = 13 heavy jobs")
    s.add_argument("--samples", type=int, default=100)
    s.add_argument("--exp-bound", type=int, default=2)
    s.add_argument("--J", type=int, default=6)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--jsonl", help="write one CheckReport per line")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", parents=[common], help="CSV multiplication table")
    s.add_argument("--exp", type=int, default=0, help="Laurent exponents in [-exp, exp]")
    s.add_argument("--torus", action="store_true", help="include all torus exponents")
    s.set_defaults(func=cmd_table)
    return p


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        cfg = make_config(args)
        return args.func(args, cfg)
    except (InputError, ValueError, KeyError, TypeError, ZeroDivisionError,
            json.JSONDecodeError, FileNotFoundError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main():
    sys.exit(run_command())


if __name__ == "__main__":
    main()

"""The check registry: every check passes on small parameters; failures carry witnesses."""
import json

import pytest

from qwreath.checks import CHECKS, Budget, CheckReport, default_jobs, run_check, run_suite, summary_table
from qwreath.scalar import Params

SMALL = Budget(samples=10, exp_bound=1, J=6)


@pytest.mark.parametrize("name", list(CHECKS))
def test_every_check_passes_small(name):
    p = Params(q=5, n=2, k=0, d=2 if name not in ("associativity_fuzz", "pbw_p6", "pbw_p7") else 3, N=2)
    rep = run_check(name, p, SMALL, seed=1)
    assert rep.ok, rep.witness
    assert rep.witness is None


@pytest.mark.parametrize("name", ["splitting", "bernstein", "upsilon_hom", "idemlem_b", "sxx_shift"])
def test_checks_pass_skew_q7(name):
    rep = run_check(name, Params(q=7, n=3, d=2), SMALL)
    assert rep.ok, rep.witness


def test_failure_has_witness():
    # the splitting lemma needs k in {0, m/2}; k = 1 in the Yokonuma case is a genuine counterexample
    rep = run_check("splitting", Params(q=5, n=1, k=1, d=2), SMALL)
    assert rep.status == "fail"
    assert "input" in rep.witness and rep.witness["residual"]["terms"]
    back = json.loads(rep.to_jsonl())
    assert back["status"] == "fail" and back["name"] == "splitting"


def test_unknown_check():
    with pytest.raises(ValueError):
        run_check("nope", Params(q=5))


def test_report_is_deterministic():
    p = Params(q=5, n=1, d=3)
    a = run_check("associativity_fuzz", p, Budget(samples=5), seed=7)
    b = run_check("associativity_fuzz", p, Budget(samples=5), seed=7)
    assert a.info == b.info and a.status == b.status == "pass"


def test_default_jobs_and_suite():
    jobs = default_jobs(["vgg_dictionary", "yA_example", "kms_iwahori"])
    assert all(p.k == 0 for n, p in jobs if n == "vgg_dictionary")
    assert {(p.q, p.n) for n, p in jobs if n == "yA_example"} == {(5, 1)}
    assert not any(n == "kms_iwahori" and p.q == 13 for n, p in jobs)
    assert any(n == "kms_iwahori" and p.q == 13 for n, p in default_jobs(["kms_iwahori"], include_slow=True))
    small = [("splitting", Params(q=5, n=2, d=2)), ("bernstein", Params(q=5, n=1, d=2))]
    reps = run_suite(small[::-1], SMALL, workers=2)
    assert [r.name for r in reps] == ["splitting", "bernstein"]
    table = summary_table(reps)
    assert "2/2 passed" in table
    assert isinstance(reps[0], CheckReport)


def test_ya_example_reports_discrepancy():
    rep = run_check("yA_example", Params(q=5, n=1, d=4))
    assert rep.ok
    disc = rep.info["discrepancies_default"]
    assert len(disc) == 1 and disc[0]["eta"] == "s2s3"
    assert all(r["match"] for r in rep.info["printed"]["rows"])

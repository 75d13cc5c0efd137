"""Run the default verification suite and write one JSON report per line.

    python scripts/run_suite.py --out results/suite.jsonl [--slow] [--workers 4]
"""
import argparse
import sys
from pathlib import Path

from qwreath.checks import Budget, default_jobs, run_suite, summary_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default="results/suite.jsonl")
    ap.add_argument("--slow", action="store_true", help="include the q = 13 heavy jobs")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    jobs = default_jobs(include_slow=args.slow)
    reports = run_suite(jobs, Budget(samples=args.samples), args.seed, args.workers)
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text("".join(r.to_jsonl() + "\n" for r in reports))
    print(summary_table(reports))
    print(f"wrote {out}")
    return 0 if all(r.ok for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())

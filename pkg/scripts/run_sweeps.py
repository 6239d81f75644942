"""Run every verification suite at a given budget and print a summary table."""

import argparse
import json
import time

from kschur.verify import SUITES, Budget, summarize, sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=8)
    ap.add_argument("--test-degree", type=int, default=4)
    ap.add_argument("--out", help="write all reports as JSON lines here")
    args = ap.parse_args()
    budget = Budget(args.max_degree, args.test_degree)
    sink = open(args.out, "w") if args.out else None
    for name in SUITES:
        t0 = time.perf_counter()
        reports = sweep(name, budget)
        secs = time.perf_counter() - t0
        summ = summarize(reports)
        print(f"{name:18s} {summ['passed']:5d}/{summ['total']:<5d} {secs:7.1f}s")
        for r in reports:
            if not r.passed:
                print(f"    FAIL {r.id} {json.dumps(r.params)}")
            if sink:
                sink.write(json.dumps(r.to_json(timings=True)) + "\n")
    if sink:
        sink.close()


if __name__ == "__main__":
    main()

"""Measure the diagonal of the H -> G transition matrix for small k and degree.

Triangularity is guaranteed; unit diagonals are not, so this records them.
"""

import argparse
import json
import time

from kschur.kspace import FALLBACK_EVENTS, g_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=4)
    ap.add_argument("--max-degree", type=int, default=8)
    args = ap.parse_args()
    rows = []
    for k in range(1, args.max_k + 1):
        for n in range(args.max_degree + 1):
            t0 = time.perf_counter()
            table = g_table(k, n)
            rows.append({
                "k": k,
                "degree": n,
                "size": len(table.parts),
                "upper_triangular": table.upper_triangular,
                "unit_diagonal": table.unit_diagonal,
                "seconds": round(time.perf_counter() - t0, 3),
            })
            print(json.dumps(rows[-1]))
    bad = [r for r in rows if not (r["upper_triangular"] and r["unit_diagonal"])]
    print(f"{len(rows)} tables, {len(bad)} with a non-unit or non-triangular matrix, fallbacks: {FALLBACK_EVENTS}")


if __name__ == "__main__":
    main()

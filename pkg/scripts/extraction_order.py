"""How the exponent of reduce_to_irreducible depends on extraction order.

For every k-bounded shape, strip rectangles in every possible order and
record the exponents; each order reconstructs the k-Schur function with
its own power of t.
"""

import argparse

from kschur.kspace import k_schur, reconstruct
from kschur.partitions import k_bounded_partitions
from kschur.verify import extraction_orders


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-k", type=int, default=3)
    ap.add_argument("--max-degree", type=int, default=8)
    args = ap.parse_args()
    for k in range(1, args.max_k + 1):
        shapes = varying = 0
        for n in range(args.max_degree + 1):
            for lam in k_bounded_partitions(n, k):
                orders = extraction_orders(lam, k)
                for c, rects, mu in orders:
                    assert reconstruct(rects, mu, k) == k_schur(lam, k).shift_t(c), (lam, rects)
                exps = sorted({c for c, _, _ in orders})
                shapes += 1
                if len(exps) > 1:
                    varying += 1
                    if varying <= 5:
                        print(f"k={k} {lam}: exponents {exps}")
        print(f"k={k}: {shapes} shapes, {varying} with order-dependent exponent, all orders reconstruct")


if __name__ == "__main__":
    main()

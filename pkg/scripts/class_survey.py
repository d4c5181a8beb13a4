#!/usr/bin/env python3
"""Survey coloured mutation-class sizes for small Dynkin seeds.

Enumerates the class of each seed for m = 1..3 and prints a table, plus a
growth probe for a wild three-vertex seed whose class never closes.
"""

import argparse
import time

from mcluster import PlainQuiver, enumerate_class, is_finite_class, seed_from_acyclic
from mcluster.mutclass import dynkin_plain_quiver


def survey(names, ms, limit):
    print("  seed   m      size  complete  applications      time")
    for name in names:
        plain = dynkin_plain_quiver(name)
        for m in ms:
            t0 = time.perf_counter()
            cls = enumerate_class(seed_from_acyclic(plain, m), limit)
            dt = time.perf_counter() - t0
            print(f"  {name:4s}  {m:2d}  {cls.size:8d}  {str(cls.complete):8s}"
                  f"  {cls.explored:12d}  {dt:7.2f}s")


def wild_probe(limit):
    wild = PlainQuiver.build((1, 2, 3), [(1, 2, 2), (2, 3, 2)])
    print(f"\nwild seed 1=>2=>3: finite class predicted: {is_finite_class(wild, 1)}")
    cls = enumerate_class(seed_from_acyclic(wild, 1), limit)
    print(f"after {cls.explored} applications: {cls.size} classes, complete={cls.complete}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seeds", nargs="*", default=["A2", "A3", "A4", "D4", "A5"])
    parser.add_argument("--max-m", type=int, default=3)
    parser.add_argument("--limit", type=int, default=100000)
    args = parser.parse_args()
    survey(args.seeds, range(1, args.max_m + 1), args.limit)
    wild_probe(min(args.limit, 20000))

"""Sweep small (p, r, I0) and summarise tilting, catalog and generation checks.

usage: python3 demos/sweep_report.py [max_r]
"""
import collections
import itertools
import sys
import time

from elemtilt.algebra import make_algebra
from elemtilt.catalog import catalog_instances, verify_catalog
from elemtilt.endo import endomorphism_algebra, generation_report
from elemtilt.tilt import arc_decomposition, build_tilting_complex, verify_tilting

max_r = int(sys.argv[1]) if len(sys.argv) > 1 else 5
stats = collections.Counter()
t0 = time.perf_counter()
for p in (3, 5):
    for r in range(2, max_r + 1):
        try:
            P = make_algebra(p, r)
        except ValueError:
            continue
        for size in range(1, r):
            for I0 in itertools.combinations(range(r), size):
                if I0[0] != 0:
                    continue
                try:
                    A = arc_decomposition(P, I0)
                except ValueError:
                    continue
                T = build_tilting_complex(P, I0)
                stats["configs"] += 1
                stats["tilting"] += verify_tilting(T).passed
                rep = verify_catalog(P, I0)
                stats["maps"] += len(rep.verdicts)
                stats["maps ok"] += sum(v.ok for v in rep.verdicts)
                if A.m == 1:
                    E = endomorphism_algebra(T)
                    stats["single arc"] += 1
                    stats["generated"] += generation_report(E, [i.map for i in catalog_instances(P, I0)]).complete
                    stats["generated (extended)"] += generation_report(
                        E, [i.map for i in catalog_instances(P, I0, extended=True)]
                    ).complete

for k, v in stats.items():
    print(f"{k:>22}: {v}")
print(f"{time.perf_counter() - t0:.1f}s")

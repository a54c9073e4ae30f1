"""Benchmark the labeled-tree sweep kernels (compiled vs pure Python).

Accepting instances exit early; hub counterexamples force a full sweep of all
c^(c-2) labeled trees, which is where the compiled kernel pays off. Run with
--big to include the 9-clique full sweep (about five million trees).
"""

import argparse
import time

from pathgraph.chordal import maximal_cliques
from pathgraph.generate import gen_path_graph, k4_hub
from pathgraph.kernels import backends


def mask_case(name, g):
    cliques = maximal_cliques(g)
    occurrence = {}
    for idx, clique in enumerate(cliques):
        for v in clique:
            occurrence[v] = occurrence.get(v, 0) | (1 << idx)
    masks = sorted(
        {mk for mk in occurrence.values() if mk.bit_count() >= 2},
        key=lambda mk: (-mk.bit_count(), mk),
    )
    return name, len(cliques), masks


def best_time(impl, c, masks, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = impl.first_path_tree(c, list(masks))
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--big", action="store_true", help="include the 9-clique sweep")
    args = ap.parse_args()

    cases = [
        mask_case("path graph, early exit", gen_path_graph(10, 9, 26)[0]),
        mask_case("hub reject, 6 cliques", k4_hub(6)),
        mask_case("hub reject, 8 cliques", k4_hub(8)),
    ]
    if args.big:
        cases.append(mask_case("hub reject, 9 cliques", k4_hub(9)))

    impls = backends()
    print(f"kernels available: {', '.join(impls)}")
    width = max(len(name) for name, _, _ in cases)
    for name, c, masks in cases:
        trees = c ** max(c - 2, 0)
        times = {}
        for backend, impl in impls.items():
            elapsed, result = best_time(impl, c, masks, args.repeat)
            times[backend] = elapsed
            found = "found" if result is not None else "exhausted"
            print(
                f"{name:<{width}}  {backend:>6}  {elapsed * 1000:9.2f} ms"
                f"  ({trees} trees, {found})"
            )
        if "cython" in times and "python" in times and times["cython"] > 0:
            print(
                f"{name:<{width}}  speedup {times['python'] / times['cython']:.1f}x"
            )


if __name__ == "__main__":
    main()

"""Built-in matroids used by the verification suites."""

from __future__ import annotations

from itertools import combinations_with_replacement

from .matroid import Matroid, direct_sum, graphic, uniform

GRAPHS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "P4": (4, [(0, 1), (1, 2), (2, 3)]),
    "C5": (5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]),
    "K4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
    # two triangles sharing vertex 2
    "bowtie": (5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
    # self-loop at 0, parallel pair 0-1, pendant edge 1-2
    "multigraph": (3, [(0, 0), (0, 1), (0, 1), (1, 2)]),
}

# small uniform matroids that also take part in pairwise direct sums
SUM_UNIFORMS = [(0, 1), (1, 1), (1, 2), (2, 4)]


def named_graphs() -> dict[str, Matroid]:
    return {name: graphic(nv, edges) for name, (nv, edges) in GRAPHS.items()}


def build(max_n: int) -> dict[str, Matroid]:
    """Corpus cases with at most ``max_n`` elements, keyed by case name.

    All U(r,n) with n <= max_n, the named graphs, their duals, and the
    pairwise direct sums of the named graphs and a few small uniforms.
    """
    cases: dict[str, Matroid] = {}
    for n in range(max_n + 1):
        for r in range(n + 1):
            cases[f"U({r},{n})"] = uniform(r, n)
    for name, m in named_graphs().items():
        if m.size <= max_n:
            cases[name] = m
            cases[f"dual({name})"] = m.dual()
    for name, m1, m2 in summands(max_n):
        cases[name] = direct_sum(m1, m2)
    return dict(sorted(cases.items()))


def summands(max_n: int) -> list[tuple[str, Matroid, Matroid]]:
    """Name and parts of every pairwise direct sum in the corpus."""
    seeds = named_graphs()
    for r, n in SUM_UNIFORMS:
        seeds[f"U({r},{n})"] = uniform(r, n)
    return [
        (f"{n1}+{n2}", m1, m2)
        for (n1, m1), (n2, m2) in combinations_with_replacement(seeds.items(), 2)
        if m1.size + m2.size <= max_n
    ]

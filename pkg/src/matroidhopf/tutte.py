"""Tutte polynomial and the four-variable deletion-contraction invariant Q."""

from __future__ import annotations

import random
from collections import Counter
from functools import lru_cache
from typing import Callable

import numpy as np

from .matroid import ElementKind, Matroid, check_cap, submasks
from .poly import A, B, ONE, X, Y, Poly

TUTTE_CAP = 20
CONVOLUTION_CAP = 14

_tutte_memo: dict[Matroid, Poly] = {}
_q_memo: dict[Matroid, Poly] = {}


def clear_caches() -> None:
    _tutte_memo.clear()
    _q_memo.clear()


def corank_nullity_counts(m: Matroid) -> Counter:
    """Number of subsets A with each (r(E) - r(A), |A| - r(A)) pair."""
    n = m.size
    ranks = m.rank_table().astype(np.int64)
    sizes = np.zeros(1 << n, dtype=np.int64)
    idx = np.arange(1 << n, dtype=np.int64)
    for j in range(n):
        sizes += (idx >> j) & 1
    corank = m.rank() - ranks
    nullity = sizes - ranks
    keys, counts = np.unique(corank * (n + 1) + nullity, return_counts=True)
    return Counter({(int(k) // (n + 1), int(k) % (n + 1)): int(c) for k, c in zip(keys, counts)})


@lru_cache(maxsize=None)
def _binomial_power(which: str, k: int) -> Poly:
    base = {"x-1": X - 1, "y-1": Y - 1, "x-b": X - B, "y-a": Y - A}[which]
    return base**k


def tutte_rank_sum(m: Matroid) -> Poly:
    """Tutte polynomial as the corank-nullity sum over all subsets."""
    check_cap(m.size, TUTTE_CAP, "tutte_rank_sum")
    hit = _tutte_memo.get(m)
    if hit is not None:
        return hit
    total = Poly()
    for (i, j), c in corank_nullity_counts(m).items():
        total = total + c * _binomial_power("x-1", i) * _binomial_power("y-1", j)
    _tutte_memo[m] = total
    return total


def recipe_closed_form(m: Matroid) -> Poly:
    """a^n(M) b^r(M) T_M(x/b, y/a) with the denominators cleared termwise.

    Each subset contributes (x-b)^(r(E)-r(A)) b^r(A) (y-a)^n(A) a^(n(E)-n(A)).
    """
    check_cap(m.size, TUTTE_CAP, "recipe_closed_form")
    r_e = m.rank()
    n_e = m.nullity()
    total = Poly()
    for (i, j), c in corank_nullity_counts(m).items():
        total = total + (
            c * _binomial_power("x-b", i) * B ** (r_e - i) * _binomial_power("y-a", j) * A ** (n_e - j)
        )
    return total


def _first_nonseparating(m: Matroid) -> int | None:
    free = m.ground & ~m.loops & ~m.coloops
    if not free:
        return None
    return (free & -free).bit_length() - 1


def q_universal(m: Matroid, choose: Callable[[Matroid], int] | None = None) -> Poly:
    """Q_M(x, y, a, b) by deletion-contraction.

    With ``choose=None`` the smallest-labeled nonseparating element is
    removed at each step and results are memoized across calls.  A custom
    ``choose`` may return any element (loops and coloops included) and gets
    a private memo.
    """
    check_cap(m.size, TUTTE_CAP, "q_universal")
    memo = _q_memo if choose is None else {}

    def rec(n: Matroid) -> Poly:
        hit = memo.get(n)
        if hit is not None:
            return hit
        if n.size == 0:
            return ONE
        if choose is None:
            e = _first_nonseparating(n)
            if e is None:
                val = X ** n.coloops.bit_count() * Y ** n.loops.bit_count()
                memo[n] = val
                return val
        else:
            e = choose(n)
        kind = n.element_kind(e)
        bit = 1 << e
        if kind is ElementKind.COLOOP:
            val = X * rec(n.delete(bit))
        elif kind is ElementKind.LOOP:
            val = Y * rec(n.contract(bit))
        else:
            val = A * rec(n.delete(bit)) + B * rec(n.contract(bit))
        memo[n] = val
        return val

    return rec(m)


def random_rule(seed: int) -> Callable[[Matroid], int]:
    """Element selection that picks uniformly among all remaining elements."""
    rng = random.Random(seed)

    def choose(n: Matroid) -> int:
        return rng.choice(n.labels)

    return choose


def check_duality(m: Matroid) -> bool:
    check_cap(m.size, TUTTE_CAP, "check_duality")
    return tutte_rank_sum(m).swap_xy() == tutte_rank_sum(m.dual())


def convolution_sum(m: Matroid) -> Poly:
    """Sum over A of T_{M|A}(0, y) * T_{M/A}(x, 0)."""
    check_cap(m.size, CONVOLUTION_CAP, "check_convolution")
    total = Poly()
    for a in submasks(m.ground):
        left, right = m.minors(a)
        total = total + tutte_rank_sum(left).subs(x=0) * tutte_rank_sum(right).subs(y=0)
    return total


def check_convolution(m: Matroid) -> bool:
    return convolution_sum(m) == tutte_rank_sum(m)


def evaluations(m: Matroid) -> dict[str, int]:
    """Point values T(1,1), T(2,2), T(2,1), T(1,2)."""
    t = tutte_rank_sum(m)
    return {
        k: int(t.subs(x=px, y=py).constant_value())
        for k, (px, py) in {"T(1,1)": (1, 1), "T(2,2)": (2, 2), "T(2,1)": (2, 1), "T(1,2)": (1, 2)}.items()
    }


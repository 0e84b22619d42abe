"""Matroids on labeled ground sets, stored as explicit basis families.

Subsets of the ground set are plain ``int`` bit masks: bit ``i`` set means
label ``i`` is present.  Minors keep the labels of the parent, so
``M.restrict(A).restrict(B) == M.restrict(B)`` and
``M.contract(A).contract(B) == M.contract(A | B)`` hold exactly.

Uniform and graphic matroids answer rank queries from their backend and
materialize their basis family only when it is first needed.  Every minor,
dual and direct sum is an explicit-bases matroid.
"""

from __future__ import annotations

import enum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

MAX_GROUND = 63
TABLE_CAP = 20


class MatroidError(ValueError):
    """Invalid matroid data.

    ``axiom`` names the violated condition; ``witness`` holds the offending
    sets (as sorted label lists) when there is one.
    """

    def __init__(self, message: str, axiom: str | None = None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class SizeCapError(ValueError):
    pass


class ElementKind(enum.Enum):
    LOOP = "loop"
    COLOOP = "coloop"
    NONSEPARATING = "nonseparating"


def check_cap(n: int, cap: int, what: str) -> None:
    if n > cap:
        raise SizeCapError(f"{what} is limited to {cap} elements, got {n}")


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 0 or e >= MAX_GROUND:
            raise MatroidError(f"element {e} outside 0..{MAX_GROUND - 1}")
        m |= 1 << e
    return m


def elements(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def submasks(mask: int) -> Iterable[int]:
    """All submasks of ``mask``, from ``mask`` down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _fmt(mask: int) -> list[int]:
    return elements(mask)


class Matroid:
    """A matroid given by its ground set mask and its bases.

    Build instances with :func:`from_bases`, :func:`uniform`, :func:`graphic`,
    :func:`direct_sum` or :func:`empty`.  Two matroids are equal iff they
    have the same label set and the same basis family.
    """

    __slots__ = ("ground", "_bases", "backend", "_rank", "_hash", "__dict__")

    def __init__(self, ground: int, bases, rank: int, backend: tuple = ("explicit",)):
        self.ground = ground
        self._bases = bases
        self._rank = rank
        self.backend = backend
        self._hash = None

    # -- basic data ---------------------------------------------------------

    @property
    def bases(self) -> frozenset[int]:
        if self._bases is None:
            self._bases = self._expand_bases()
        return self._bases

    def _expand_bases(self) -> frozenset[int]:
        kind = self.backend[0]
        labels = self.labels
        if kind == "uniform":
            return frozenset(to_mask(c) for c in combinations(labels, self._rank))
        if kind == "graphic":
            _, nv, edges = self.backend
            found = []
            for combo in combinations(labels, self._rank):
                if _forest_rank(nv, [edges[i] for i in combo]) == self._rank:
                    found.append(to_mask(combo))
            return frozenset(found)
        raise AssertionError(kind)

    @cached_property
    def labels(self) -> tuple[int, ...]:
        return tuple(elements(self.ground))

    @property
    def size(self) -> int:
        return self.ground.bit_count()

    def __len__(self) -> int:
        return self.size

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matroid):
            return NotImplemented
        if self is other:
            return True
        if self.ground != other.ground or self._rank != other._rank:
            return False
        return self.bases == other.bases

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ground, self.bases))
        return self._hash

    def __repr__(self) -> str:
        kind = self.backend[0]
        if kind == "uniform":
            return f"U({self._rank},{self.size})"
        bases = sorted(_fmt(b) for b in self.bases)
        return f"Matroid(labels={list(self.labels)}, bases={bases})"

    def sort_key(self) -> tuple:
        return (self.labels, tuple(sorted(tuple(_fmt(b)) for b in self.bases)))

    # -- rank ---------------------------------------------------------------

    def rank(self, subset: int | None = None) -> int:
        """Rank of ``subset`` (a mask), or of the whole matroid when omitted."""
        if subset is None:
            return self._rank
        if subset & ~self.ground:
            raise MatroidError(f"subset {_fmt(subset)} not inside ground set {list(self.labels)}")
        kind = self.backend[0]
        if kind == "uniform":
            return min(subset.bit_count(), self._rank)
        if kind == "graphic":
            _, nv, edges = self.backend
            return _forest_rank(nv, [edges[i] for i in elements(subset)])
        if self.size <= TABLE_CAP:
            return int(self.rank_table()[self.local_index(subset)])
        return max((b & subset).bit_count() for b in self.bases)

    def nullity(self, subset: int | None = None) -> int:
        if subset is None:
            subset = self.ground
        return subset.bit_count() - self.rank(subset)

    def local_index(self, subset: int) -> int:
        """Position of ``subset`` in tables indexed by compressed masks."""
        idx = 0
        for j, e in enumerate(self.labels):
            if subset >> e & 1:
                idx |= 1 << j
        return idx

    def local_indices(self, masks: np.ndarray) -> np.ndarray:
        """Vectorized :meth:`local_index`."""
        out = np.zeros_like(masks)
        for j, e in enumerate(self.labels):
            out |= ((masks >> e) & 1) << j
        return out

    def subset_masks(self) -> np.ndarray:
        """Global masks of all subsets, indexed by compressed mask."""
        check_cap(self.size, TABLE_CAP, "subset tables")
        idx = np.arange(1 << self.size, dtype=np.int64)
        out = np.zeros_like(idx)
        for j, e in enumerate(self.labels):
            out |= ((idx >> j) & 1) << e
        return out

    def rank_table(self) -> np.ndarray:
        """Ranks of all subsets, indexed by compressed mask."""
        table = self.__dict__.get("_rank_table")
        if table is None:
            table = self.__dict__["_rank_table"] = _rank_table(self)
        return table

    # -- element structure --------------------------------------------------

    @cached_property
    def _basis_union(self) -> int:
        u = 0
        for b in self.bases:
            u |= b
        return u

    @cached_property
    def _basis_meet(self) -> int:
        m = self.ground
        for b in self.bases:
            m &= b
        return m

    @property
    def loops(self) -> int:
        return self.ground & ~self._basis_union

    @property
    def coloops(self) -> int:
        return self._basis_meet

    def element_kind(self, e: int) -> ElementKind:
        if not self.ground >> e & 1:
            raise MatroidError(f"element {e} not in ground set {list(self.labels)}")
        if not self._basis_union >> e & 1:
            return ElementKind.LOOP
        if self._basis_meet >> e & 1:
            return ElementKind.COLOOP
        return ElementKind.NONSEPARATING

    def independent_sets(self) -> list[int]:
        table = self.rank_table()
        masks = self.subset_masks()
        sizes = _popcounts(self.size)
        return [int(m) for m in masks[table == sizes]]

    def circuits(self) -> list[int]:
        """All minimal dependent sets, in increasing mask order."""
        check_cap(self.size, TABLE_CAP, "circuit enumeration")
        table = self.rank_table()
        sizes = _popcounts(self.size)
        indep = table == sizes
        found = []
        for i in np.flatnonzero(~indep):
            i = int(i)
            if all(indep[i & ~(1 << j)] for j in range(self.size) if i >> j & 1):
                found.append(i)
        masks = self.subset_masks()
        return sorted(int(masks[i]) for i in found)

    # -- minors -------------------------------------------------------------

    def _check_subset(self, subset: int) -> None:
        if subset & ~self.ground:
            raise MatroidError(f"subset {_fmt(subset)} not inside ground set {list(self.labels)}")

    def restrict(self, subset: int) -> Matroid:
        self._check_subset(subset)
        if subset == self.ground:
            return self
        r = 0
        keep = set()
        for b in self.bases:
            part = b & subset
            k = part.bit_count()
            if k > r:
                r = k
                keep = {part}
            elif k == r:
                keep.add(part)
        return Matroid(subset, frozenset(keep), r)

    def delete(self, subset: int) -> Matroid:
        self._check_subset(subset)
        return self.restrict(self.ground & ~subset)

    def contract(self, subset: int) -> Matroid:
        # X is a basis of M/T iff |X| = r(M) - r(T) and r(X | T) = r(M);
        # those X are exactly B - T for the bases B meeting T in r(T) elements.
        self._check_subset(subset)
        if subset == 0:
            return self
        r_t = -1
        keep: set[int] = set()
        for b in self.bases:
            k = (b & subset).bit_count()
            if k > r_t:
                r_t = k
                keep = {b & ~subset}
            elif k == r_t:
                keep.add(b & ~subset)
        return Matroid(self.ground & ~subset, frozenset(keep), self._rank - r_t)

    def minors(self, subset: int) -> tuple[Matroid, Matroid]:
        """``(M|A, M/A)`` computed in a single pass over the bases."""
        self._check_subset(subset)
        rest = self.ground & ~subset
        r_a = -1
        left: set[int] = set()
        right: set[int] = set()
        for b in self.bases:
            part = b & subset
            k = part.bit_count()
            if k > r_a:
                r_a = k
                left = {part}
                right = {b & rest}
            elif k == r_a:
                left.add(part)
                right.add(b & rest)
        return (
            Matroid(subset, frozenset(left), r_a),
            Matroid(rest, frozenset(right), self._rank - r_a),
        )

    def dual(self) -> Matroid:
        g = self.ground
        return Matroid(g, frozenset(g & ~b for b in self.bases), self.size - self._rank)

    def relabel(self, mapping: dict[int, int]) -> Matroid:
        def move(m: int) -> int:
            return to_mask(mapping[e] for e in elements(m))

        return Matroid(
            move(self.ground), frozenset(move(b) for b in self.bases), self._rank
        )

    def compact(self) -> Matroid:
        """Same matroid relabeled onto 0..n-1, order preserved."""
        return self.relabel({e: i for i, e in enumerate(self.labels)})

    def is_basis_family_valid(self) -> bool:
        try:
            _validate_bases(list(self.bases))
        except MatroidError:
            return False
        return True


def _popcounts(n: int) -> np.ndarray:
    idx = np.arange(1 << n, dtype=np.int64)
    out = np.zeros(1 << n, dtype=np.int8)
    for j in range(n):
        out += ((idx >> j) & 1).astype(np.int8)
    return out


def _rank_table(m: Matroid) -> np.ndarray:
    n = m.size
    check_cap(n, TABLE_CAP, "rank tables")
    full = 1 << n
    indep = np.zeros(full, dtype=bool)
    indep[[m.local_index(b) for b in m.bases]] = True
    idx = np.arange(full, dtype=np.int64)
    # close downward: a set is independent iff some superset is a basis
    for j in range(n):
        bit = 1 << j
        low = idx[(idx & bit) == 0]
        indep[low] |= indep[low | bit]
    rank = np.where(indep, _popcounts(n), 0).astype(np.int8)
    # rank(A) = largest independent subset of A
    for j in range(n):
        bit = 1 << j
        high = idx[(idx & bit) != 0]
        rank[high] = np.maximum(rank[high], rank[high ^ bit])
    return rank


def _forest_rank(num_vertices: int, edges: Sequence[tuple[int, int]]) -> int:
    parent = list(range(num_vertices))

    def find(u: int) -> int:
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    r = 0
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            r += 1
    return r


def _validate_bases(bases: list[int]) -> None:
    if not bases:
        raise MatroidError(
            "a matroid needs at least one basis (axiom I1: the independent sets are non-empty)",
            axiom="I1",
        )
    sizes = {b.bit_count() for b in bases}
    if len(sizes) > 1:
        small = min(bases, key=lambda b: (b.bit_count(), b))
        big = max(bases, key=lambda b: (b.bit_count(), -b))
        raise MatroidError(
            f"bases of unequal cardinality: {_fmt(small)} and {_fmt(big)} "
            "(axiom I3 forces all maximal independent sets to have the same size)",
            axiom="I3",
            witness=(_fmt(small), _fmt(big)),
        )
    family = set(bases)
    for b1 in bases:
        for b2 in bases:
            for e in elements(b1 & ~b2):
                rest = b1 & ~(1 << e)
                if not any((rest | (1 << f)) in family for f in elements(b2 & ~b1)):
                    raise MatroidError(
                        f"basis-exchange axiom fails for B1={_fmt(b1)}, B2={_fmt(b2)}, e={e}",
                        axiom="basis-exchange",
                        witness=(_fmt(b1), _fmt(b2), e),
                    )


def from_bases(n: int, bases: Iterable[Iterable[int] | int], labels: Iterable[int] | None = None) -> Matroid:
    """Validated explicit-bases matroid on ``labels`` (default ``0..n-1``).

    Each basis may be given as an iterable of labels or as a mask.
    """
    if n < 0 or n > MAX_GROUND:
        raise MatroidError(f"ground set size must be in 0..{MAX_GROUND}, got {n}")
    ground = to_mask(range(n)) if labels is None else to_mask(labels)
    if labels is not None and any(e >= n for e in elements(ground)):
        raise MatroidError(f"labels must lie in 0..{n - 1}")
    masks = []
    for b in bases:
        m = b if isinstance(b, int) else to_mask(b)
        if m & ~ground:
            raise MatroidError(
                f"basis {_fmt(m)} uses elements outside the ground set {elements(ground)}",
                axiom="ground",
                witness=_fmt(m),
            )
        masks.append(m)
    masks = sorted(set(masks))
    _validate_bases(masks)
    return Matroid(ground, frozenset(masks), masks[0].bit_count())


def empty() -> Matroid:
    return Matroid(0, frozenset({0}), 0)


def uniform(r: int, n: int) -> Matroid:
    if n < 0 or n > MAX_GROUND:
        raise MatroidError(f"ground set size must be in 0..{MAX_GROUND}, got {n}")
    if r < 0 or r > n:
        raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid((1 << n) - 1, None, r, ("uniform", r, n))


def graphic(num_vertices: int, edges: Sequence[Sequence[int]]) -> Matroid:
    """Cycle matroid of a multigraph; edge ``i`` becomes element ``i``.

    Self-loops are loops of the matroid and parallel edges are allowed.
    """
    edges = tuple((int(u), int(v)) for u, v in edges)
    if len(edges) > MAX_GROUND:
        raise MatroidError(f"at most {MAX_GROUND} edges supported, got {len(edges)}")
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise MatroidError(f"edge ({u},{v}) has an endpoint outside 0..{num_vertices - 1}")
    r = _forest_rank(num_vertices, edges)
    return Matroid((1 << len(edges)) - 1, None, r, ("graphic", num_vertices, edges))


def direct_sum(*parts: Matroid) -> Matroid:
    """Direct sum, relabeled onto 0..N-1 with each part's labels shifted in turn."""
    total = sum(p.size for p in parts)
    if total > MAX_GROUND:
        raise MatroidError(f"direct sum has {total} elements, more than {MAX_GROUND}")
    bases = [0]
    ground = 0
    rank = 0
    offset = 0
    for p in parts:
        q = p.relabel({e: offset + i for i, e in enumerate(p.labels)})
        bases = [b | c for b in bases for c in q.bases]
        ground |= q.ground
        rank += q.rank()
        offset += p.size
    return Matroid(ground, frozenset(bases), rank)

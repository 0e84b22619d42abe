"""The matroid Hopf algebra: coproduct, characters and their convolution.

Characters are represented extensionally, as memoized maps from
:class:`~matroidhopf.matroid.Matroid` to :class:`~matroidhopf.poly.Poly`.
The coproduct sums over labeled minors ``M|A (x) M/A``; every character
built here depends only on the basis structure of its argument, so it
agrees with the same construction on isomorphism classes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable

from .matroid import Matroid, check_cap, direct_sum, empty, submasks
from .poly import A, B, ONE, S, X, Y, ZERO, Poly
from .tutte import TUTTE_CAP, q_universal

HOPF_CAP = 14
FLOW_CAP = 12
FOUR_FACTOR_CAP = 10
PHI_CAP = 12
SLOW_EXP_CAP = 6

CHARACTER = "character"
INFINITESIMAL = "infinitesimal"
LINEAR = "linear"  # any other linear map, e.g. a difference of characters


def _scalar(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c)


class Character:
    """A linear map from matroids to polynomials, memoized per matroid.

    ``kind`` records which law the map is meant to satisfy; it is not
    checked on construction (see :func:`character_defect`).  ``singleton``
    marks maps that vanish on every matroid whose ground set does not have
    exactly one element.
    """

    def __init__(self, fn: Callable[[Matroid], Poly], kind: str = CHARACTER,
                 name: str = "", singleton: bool = False):
        self._fn = fn
        self.kind = kind
        self.name = name or getattr(fn, "__name__", "f")
        self.singleton = singleton
        self._memo: dict[Matroid, Poly] = {}

    def __call__(self, m: Matroid) -> Poly:
        hit = self._memo.get(m)
        if hit is None:
            hit = self._memo[m] = self._fn(m)
        return hit

    def clear(self) -> None:
        self._memo.clear()

    def __repr__(self) -> str:
        return f"<{self.kind} {self.name}>"

    def _combine(self, other: Character, sign: int) -> Character:
        kind = INFINITESIMAL if self.kind == other.kind == INFINITESIMAL else LINEAR
        op = "+" if sign > 0 else "-"
        return Character(
            lambda m: self(m) + sign * other(m),
            kind,
            f"({self.name} {op} {other.name})",
            self.singleton and other.singleton,
        )

    def __add__(self, other: Character) -> Character:
        return self._combine(other, 1)

    def __sub__(self, other: Character) -> Character:
        return self._combine(other, -1)

    def __neg__(self) -> Character:
        return (-1) * self

    def __rmul__(self, c) -> Character:
        c = _scalar(c)
        kind = INFINITESIMAL if self.kind == INFINITESIMAL else LINEAR
        return Character(lambda m: c * self(m), kind, f"{c}*{self.name}", self.singleton)

    def __mul__(self, other: Character) -> Character:
        """Convolution product ``self * other``."""
        return convolve(self, other)


class TensorSum:
    """Finite formal sum of ``coefficient * (left (x) right)``.

    Terms with the same (left, right) pair are merged and zero
    coefficients dropped, so ``==`` decides equality of the sums.
    """

    def __init__(self, terms: Iterable[tuple[Poly, Matroid, Matroid]] = ()):
        acc: dict[tuple[Matroid, Matroid], Poly] = {}
        for coeff, left, right in terms:
            key = (left, right)
            acc[key] = acc.get(key, ZERO) + _scalar(coeff)
        self._terms = {k: c for k, c in acc.items() if c}

    @property
    def terms(self) -> list[tuple[Poly, Matroid, Matroid]]:
        keys = sorted(self._terms, key=lambda k: (k[0].sort_key(), k[1].sort_key()))
        return [(self._terms[k], k[0], k[1]) for k in keys]

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorSum):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return " + ".join(f"({c})*[{l!r} (x) {r!r}]" for c, l, r in self.terms) or "0"


class MatroidSum:
    """Finite formal sum of weighted matroids, keyed like :class:`TensorSum`."""

    def __init__(self, terms: Iterable[tuple[Poly, Matroid]] = ()):
        acc: dict[Matroid, Poly] = {}
        for coeff, m in terms:
            acc[m] = acc.get(m, ZERO) + _scalar(coeff)
        self._terms = {m: c for m, c in acc.items() if c}

    @property
    def terms(self) -> list[tuple[Poly, Matroid]]:
        return [(self._terms[m], m) for m in sorted(self._terms, key=Matroid.sort_key)]

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatroidSum):
            return NotImplemented
        return self._terms == other._terms

    def __repr__(self) -> str:
        return " + ".join(f"({c})*{m!r}" for c, m in self.terms) or "0"


# -- coalgebra -------------------------------------------------------------


def coproduct(m: Matroid) -> TensorSum:
    """Sum over all A of M|A (x) M/A."""
    check_cap(m.size, HOPF_CAP, "coproduct")
    return TensorSum((ONE, *m.minors(a)) for a in submasks(m.ground))


def coproduct_sum(x: MatroidSum) -> TensorSum:
    return TensorSum(
        (c * coeff, left, right) for c, m in x.terms for coeff, left, right in coproduct(m).terms
    )


def counit(m: Matroid) -> Poly:
    return ONE if m.size == 0 else ZERO


def _weight(m: Matroid) -> Poly:
    return A ** m.rank() * B ** m.nullity()


def phi(m: Matroid) -> MatroidSum:
    """M -> a^r(M) b^n(M) M."""
    return MatroidSum([(_weight(m), m)])


def phi_sum(x: MatroidSum) -> MatroidSum:
    return MatroidSum((c * _weight(m), m) for c, m in x.terms)


def phi_tensor(t: TensorSum) -> TensorSum:
    return TensorSum((c * _weight(l) * _weight(r), l, r) for c, l, r in t.terms)


def verify_phi_morphism(m: Matroid) -> bool:
    """Coproduct of phi(M) equals (phi (x) phi) of the coproduct of M."""
    check_cap(m.size, PHI_CAP, "verify_phi_morphism")
    return coproduct_sum(phi(m)) == phi_tensor(coproduct(m))


# -- characters ------------------------------------------------------------


epsilon = Character(counit, CHARACTER, "epsilon")


def _is_single(m: Matroid, coloop: bool) -> bool:
    return m.size == 1 and (m.rank() == 1) is coloop


delta_loop = Character(
    lambda m: ONE if _is_single(m, coloop=False) else ZERO, INFINITESIMAL, "delta_loop", True
)
delta_coloop = Character(
    lambda m: ONE if _is_single(m, coloop=True) else ZERO, INFINITESIMAL, "delta_coloop", True
)


def convolve(f: Character, g: Character) -> Character:
    """(f * g)(M) = sum over A of f(M|A) g(M/A)."""

    def conv(m: Matroid) -> Poly:
        check_cap(m.size, HOPF_CAP, "convolution")
        total = ZERO
        for a in submasks(m.ground):
            left, right = m.minors(a)
            fl = f(left)
            if fl:
                total = total + fl * g(right)
        return total

    kind = CHARACTER if f.kind == g.kind == CHARACTER else LINEAR
    return Character(conv, kind, f"{f.name}*{g.name}")


def commutator(f: Character, g: Character) -> Character:
    return convolve(f, g) - convolve(g, f)


def exp_star(d: Character) -> Character:
    """Convolution exponential of an infinitesimal character.

    For maps supported on one-element matroids, the j-fold power can only
    be nonzero on matroids with exactly j elements, and it unfolds as a
    chain of single-element contractions:
    d^j(M) = sum over e of d(M|{e}) d^(j-1)(M/{e}).
    Other maps fall back to :func:`exp_star_series`.
    """
    if d.kind != INFINITESIMAL:
        raise ValueError(f"exp_star needs an infinitesimal character, got {d!r}")
    if not d.singleton:
        return exp_star_series(d)
    chains: dict[Matroid, Poly] = {}

    def chain(m: Matroid) -> Poly:
        hit = chains.get(m)
        if hit is not None:
            return hit
        if m.size == 0:
            return ONE
        total = ZERO
        for e in m.labels:
            bit = 1 << e
            de = d(m.restrict(bit))
            if de:
                total = total + de * chain(m.contract(bit))
        chains[m] = total
        return total

    def value(m: Matroid) -> Poly:
        check_cap(m.size, HOPF_CAP, "exp_star")
        return chain(m) * _inv_factorial(m.size)

    return Character(value, CHARACTER, f"exp({d.name})")


def exp_star_series(d: Character, cap: int = SLOW_EXP_CAP) -> Character:
    """Convolution exponential by summing full k-fold convolution powers.

    Exponentially slower than :func:`exp_star`; kept as a cross-check.
    """
    if d.kind != INFINITESIMAL:
        raise ValueError(f"exp_star needs an infinitesimal character, got {d!r}")
    powers = [epsilon]

    def value(m: Matroid) -> Poly:
        check_cap(m.size, cap, "exp_star_series")
        # d vanishes on the empty matroid, so d^k(M) = 0 once k > |E|
        while len(powers) <= m.size:
            powers.append(convolve(powers[-1], d))
        total = ZERO
        for k in range(m.size + 1):
            term = powers[k](m)
            if term:
                total = total + term * _inv_factorial(k)
        return total

    return Character(value, CHARACTER, f"exp_series({d.name})")


def _inv_factorial(k: int) -> Poly:
    return Poly.const(Fraction(1, factorial(k)))


# -- alpha and beta ---------------------------------------------------------


@lru_cache(maxsize=None)
def alpha_factors() -> tuple[Character, Character]:
    """The two exponential factors whose convolution defines alpha."""
    left = exp_star(S * (delta_coloop + (Y - 1) * delta_loop))
    right = exp_star(S * ((X - 1) * delta_coloop + delta_loop))
    return left, right


@lru_cache(maxsize=None)
def alpha_character() -> Character:
    left, right = alpha_factors()
    c = convolve(left, right)
    c.name = "alpha"
    return c


def alpha(m: Matroid) -> Poly:
    """alpha(x, y, s; M); equals s^|E| T_M(x, y)."""
    check_cap(m.size, HOPF_CAP, "alpha")
    return alpha_character()(m)


@lru_cache(maxsize=None)
def beta_character() -> Character:
    return Character(lambda m: S ** m.size * q_universal(m), CHARACTER, "beta")


def beta(m: Matroid) -> Poly:
    """s^|E| Q_M(x, y, a, b)."""
    check_cap(m.size, TUTTE_CAP, "beta")
    return beta_character()(m)


@lru_cache(maxsize=None)
def _flow_terms(which: str) -> tuple[Character, ...]:
    f = alpha_character() if which == "alpha" else beta_character()
    return (
        convolve(f, delta_coloop),
        convolve(delta_loop, f),
        convolve(delta_coloop, f),
        convolve(f, delta_loop),
    )


def flow_alpha_sides(m: Matroid) -> tuple[Poly, Poly]:
    """Both sides of d alpha/ds = x alpha*dc + y dl*alpha + [dc, alpha] - [dl, alpha]."""
    check_cap(m.size, FLOW_CAP, "verify_flow_alpha")
    f_dc, dl_f, dc_f, f_dl = (t(m) for t in _flow_terms("alpha"))
    lhs = alpha(m).deriv_s()
    rhs = X * f_dc + Y * dl_f + (dc_f - f_dc) - (dl_f - f_dl)
    return lhs, rhs


def verify_flow_alpha(m: Matroid) -> bool:
    lhs, rhs = flow_alpha_sides(m)
    return lhs == rhs


def flow_beta_sides(m: Matroid) -> tuple[Poly, Poly]:
    """Both sides of d beta/ds = x beta*dc + y dl*beta + b[dc, beta] - a[dl, beta]."""
    check_cap(m.size, FLOW_CAP, "verify_flow_beta")
    f_dc, dl_f, dc_f, f_dl = (t(m) for t in _flow_terms("beta"))
    lhs = beta(m).deriv_s()
    rhs = X * f_dc + Y * dl_f + B * (dc_f - f_dc) - A * (dl_f - f_dl)
    return lhs, rhs


def verify_flow_beta(m: Matroid) -> bool:
    lhs, rhs = flow_beta_sides(m)
    return lhs == rhs


@lru_cache(maxsize=None)
def four_factor_character() -> Character:
    dc, dl = delta_coloop, delta_loop
    f1 = exp_star(S * (dc + (Y - 1) * dl))
    f2 = exp_star(S * (dl - dc))
    f3 = exp_star(S * (dc - dl))
    f4 = exp_star(S * ((X - 1) * dc + dl))
    return convolve(convolve(f1, f2), convolve(f3, f4))


def verify_four_factor(m: Matroid) -> bool:
    check_cap(m.size, FOUR_FACTOR_CAP, "verify_four_factor")
    return four_factor_character()(m) == alpha(m)


def clear_caches() -> None:
    for fn in (alpha_factors, alpha_character, beta_character, _flow_terms, four_factor_character):
        fn.cache_clear()
    for c in (epsilon, delta_loop, delta_coloop):
        c.clear()


# -- law checks --------------------------------------------------------------


def character_defect(f: Character, pairs: Iterable[tuple[Matroid, Matroid]]) -> list[str]:
    """Violations of the character (or infinitesimal) law on the given pairs."""
    problems = []
    e = empty()
    if f.kind == CHARACTER and f(e) != ONE:
        problems.append(f"{f.name}(empty) = {f(e)}, expected 1")
    if f.kind == INFINITESIMAL and f(e):
        problems.append(f"{f.name}(empty) = {f(e)}, expected 0")
    for m1, m2 in pairs:
        got = f(direct_sum(m1, m2))
        if f.kind == CHARACTER:
            want = f(m1) * f(m2)
        elif f.kind == INFINITESIMAL:
            want = f(m1) * counit(m2) + counit(m1) * f(m2)
        else:
            continue
        if got != want:
            problems.append(f"{f.name} fails on {m1!r} (+) {m2!r}: {got} != {want}")
    return problems

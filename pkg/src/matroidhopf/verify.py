"""Verification suites: every identity checked case by case over a corpus."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import corpus, hopf, tutte
from .matroid import ElementKind, Matroid, direct_sum, graphic, submasks, uniform
from .poly import A, B, S, Poly

SUITES = ("axioms", "tutte", "hopf", "flow")
AXIOM_CAP = 10
ASSOCIATIVITY_CAP = 8


@dataclass(frozen=True)
class Outcome:
    identity: str
    case: str
    passed: bool
    detail: str = ""


# -- matroid layer ---------------------------------------------------------


def rank_axioms(m: Matroid) -> bool:
    """0 <= r(A) <= |A|, monotonicity and submodularity over all subset pairs."""
    r = m.rank_table().astype(np.int64)
    n = m.size
    idx = np.arange(1 << n, dtype=np.int64)
    sizes = np.zeros_like(idx)
    for j in range(n):
        sizes += (idx >> j) & 1
    if np.any(r < 0) or np.any(r > sizes):
        return False
    for a in range(1 << n):
        union = r[a | idx]
        meet = r[a & idx]
        if np.any(union < r[a]) or np.any(union + meet > r[a] + r):
            return False
    return True


def restriction_is_deletion(m: Matroid) -> bool:
    return all(m.restrict(t) == m.delete(m.ground & ~t) for t in submasks(m.ground))


def coloop_contraction(m: Matroid) -> bool:
    return all(
        m.contract(1 << e) == m.delete(1 << e)
        for e in m.labels
        if m.element_kind(e) is ElementKind.COLOOP
    )


def contraction_rank(m: Matroid) -> bool:
    """r_{M/T}(X) = r_M(X u T) - r_M(T) for every T and X inside E - T."""
    ranks = m.rank_table()
    for t in submasks(m.ground):
        mt = m.contract(t)
        glob = mt.subset_masks()
        want = ranks[m.local_indices(glob | t)] - ranks[m.local_index(t)]
        if not np.array_equal(mt.rank_table(), want):
            return False
    return True


def rank_additivity(m: Matroid) -> bool:
    """r(M|T) + r(M/T) = r(M) and the same for nullity, for every T."""
    for t in submasks(m.ground):
        left, right = m.minors(t)
        if left.rank() + right.rank() != m.rank() or left.nullity() + right.nullity() != m.nullity():
            return False
    return True


def dual_involution(m: Matroid) -> bool:
    return m.dual().dual() == m


def contraction_via_dual(m: Matroid) -> bool:
    d = m.dual()
    return all(m.contract(t) == d.delete(t).dual() for t in submasks(m.ground))


def basis_family_valid(m: Matroid) -> bool:
    return m.is_basis_family_valid()


def circuits_minimal_dependent(m: Matroid) -> bool:
    return all(m.rank(c) == c.bit_count() - 1 for c in m.circuits())


# -- tutte layer -------------------------------------------------------------


def cross_algorithm(m: Matroid) -> bool:
    t = tutte.tutte_rank_sum(m)
    return (
        tutte.q_universal(m).subs(a=1, b=1) == t
        and tutte.recipe_closed_form(m).subs(a=1, b=1) == t
    )


def q_matches_closed_form(m: Matroid) -> bool:
    return tutte.q_universal(m) == tutte.recipe_closed_form(m)


def selection_rule_independence(m: Matroid) -> bool:
    want = tutte.q_universal(m)
    return all(tutte.q_universal(m, tutte.random_rule(seed)) == want for seed in (1, 2, 3))


def point_evaluations(m: Matroid) -> bool:
    ev = tutte.evaluations(m)
    ranks = m.rank_table()
    n = m.size
    sizes = np.array([bin(i).count("1") for i in range(1 << n)])
    return (
        ev["T(1,1)"] == len(m.bases)
        and ev["T(2,2)"] == 2**n
        and ev["T(2,1)"] == int(np.sum(ranks == sizes))
        and ev["T(1,2)"] == int(np.sum(ranks == m.rank()))
    )


def nonnegative_coefficients(m: Matroid) -> bool:
    return all(c > 0 for _, c in tutte.tutte_rank_sum(m).items())


# -- hopf layer -------------------------------------------------------------


def exp_of_loop_coloop(m: Matroid) -> bool:
    e = hopf.exp_star(A * hopf.delta_coloop + B * hopf.delta_loop)
    return e(m) == A ** m.rank() * B ** m.nullity()


def alpha_is_tutte(m: Matroid) -> bool:
    return hopf.alpha(m) == S**m.size * tutte.tutte_rank_sum(m)


def alpha_duality(m: Matroid) -> bool:
    return hopf.alpha(m).swap_xy() == hopf.alpha(m.dual())


def counit_is_unit(m: Matroid) -> bool:
    a = hopf.alpha_character()
    return hopf.convolve(hopf.epsilon, a)(m) == a(m) == hopf.convolve(a, hopf.epsilon)(m)


def slow_exp_agrees(m: Matroid) -> bool:
    d = A * hopf.delta_coloop + B * hopf.delta_loop
    return hopf.exp_star(d)(m) == hopf.exp_star_series(d)(m)


def convolution_associative(m: Matroid) -> bool:
    f, g = hopf.alpha_factors()
    h = hopf.beta_character()
    return hopf.convolve(hopf.convolve(f, g), h)(m) == hopf.convolve(f, hopf.convolve(g, h))(m)


def coproduct_size(m: Matroid) -> bool:
    # distinct subsets give distinct (M|A, M/A) pairs since A is the left label set
    return len(hopf.coproduct(m)) == 2**m.size


def flow_beta_reduces_to_alpha(m: Matroid) -> bool:
    """At a = b = 1 the beta flow equation turns into the alpha flow equation."""
    lhs_b, rhs_b = hopf.flow_beta_sides(m)
    lhs_a, rhs_a = hopf.flow_alpha_sides(m)
    one = {"a": 1, "b": 1}
    return lhs_b.subs(one) == lhs_a and rhs_b.subs(one) == rhs_a


Check = tuple[str, int, Callable[[Matroid], bool]]

CHECKS: dict[str, list[Check]] = {
    "axioms": [
        ("basis exchange", AXIOM_CAP, basis_family_valid),
        ("rank axioms", AXIOM_CAP, rank_axioms),
        ("restriction = deletion of complement", AXIOM_CAP, restriction_is_deletion),
        ("coloop: contraction = deletion", AXIOM_CAP, coloop_contraction),
        ("contraction rank formula", AXIOM_CAP, contraction_rank),
        ("rank/nullity additivity", AXIOM_CAP, rank_additivity),
        ("dual involution", AXIOM_CAP, dual_involution),
        ("contraction = dual-delete-dual", AXIOM_CAP, contraction_via_dual),
        ("circuits have corank one", AXIOM_CAP, circuits_minimal_dependent),
    ],
    "tutte": [
        ("rank sum = Q|a=b=1 = recipe|a=b=1", tutte.TUTTE_CAP, cross_algorithm),
        ("Q = closed form", tutte.TUTTE_CAP, q_matches_closed_form),
        ("Q independent of selection rule", tutte.TUTTE_CAP, selection_rule_independence),
        ("point evaluations", tutte.TUTTE_CAP, point_evaluations),
        ("nonnegative coefficients", tutte.TUTTE_CAP, nonnegative_coefficients),
        ("duality T_M(x,y) = T_M*(y,x)", tutte.TUTTE_CAP, tutte.check_duality),
        ("convolution formula", tutte.CONVOLUTION_CAP, tutte.check_convolution),
    ],
    "hopf": [
        ("coproduct has 2^|E| terms", hopf.HOPF_CAP, coproduct_size),
        ("exp(a dc + b dl) = a^r b^n", AXIOM_CAP, exp_of_loop_coloop),
        ("slow exp = fast exp", hopf.SLOW_EXP_CAP, slow_exp_agrees),
        ("alpha = s^|E| T", hopf.HOPF_CAP, alpha_is_tutte),
        ("alpha(x,y,M) = alpha(y,x,M*)", hopf.HOPF_CAP, alpha_duality),
        ("epsilon is the convolution unit", hopf.HOPF_CAP, counit_is_unit),
        ("convolution associative", ASSOCIATIVITY_CAP, convolution_associative),
        ("four-factor product = alpha", hopf.FOUR_FACTOR_CAP, hopf.verify_four_factor),
        ("phi is a coalgebra morphism", hopf.PHI_CAP, hopf.verify_phi_morphism),
    ],
    "flow": [
        ("alpha flow equation", hopf.FLOW_CAP, hopf.verify_flow_alpha),
        ("beta flow equation", hopf.FLOW_CAP, hopf.verify_flow_beta),
        ("beta flow at a=b=1 is alpha flow", hopf.FLOW_CAP, flow_beta_reduces_to_alpha),
    ],
}


def _once_checks(suite: str, max_n: int) -> Iterator[Outcome]:
    """Identities that quantify over pairs or families rather than one matroid."""
    if suite == "axioms":
        for n in range(1, max_n + 1):
            cycle = graphic(n, [(i, (i + 1) % n) for i in range(n)])
            yield Outcome("graphic cycle = U(n-1,n)", f"C{n}", cycle == uniform(n - 1, n))
    if suite == "tutte":
        for name, m1, m2 in corpus.summands(max_n):
            ok = tutte.tutte_rank_sum(direct_sum(m1, m2)) == (
                tutte.tutte_rank_sum(m1) * tutte.tutte_rank_sum(m2)
            )
            yield Outcome("T multiplicative on direct sums", name, ok)
    if suite == "hopf":
        pairs = [(m1, m2) for _, m1, m2 in corpus.summands(min(max_n, 8))]
        d = S * (hopf.delta_coloop + (Poly.var("y") - 1) * hopf.delta_loop)
        characters = {
            "alpha": hopf.alpha_character(),
            "beta": hopf.beta_character(),
            "exp factor": hopf.exp_star(d),
            "delta_loop": hopf.delta_loop,
            "delta_coloop": hopf.delta_coloop,
            "scaled infinitesimal": d,
        }
        for name, f in characters.items():
            problems = hopf.character_defect(f, pairs)
            yield Outcome(f"{f.kind} law", name, not problems, "; ".join(problems[:3]))
        for name, m1, m2 in corpus.summands(min(max_n, 8)):
            ok = hopf.phi(direct_sum(m1, m2)).terms[0][0] == (
                hopf.phi(m1).terms[0][0] * hopf.phi(m2).terms[0][0]
            )
            yield Outcome("phi multiplicative", name, ok)


def run(suites: list[str], max_n: int, extra: dict[str, Matroid] | None = None) -> list[Outcome]:
    """Run the named suites on the corpus (plus ``extra`` cases)."""
    cases = corpus.build(max_n)
    cases.update(extra or {})
    outcomes: list[Outcome] = []
    for suite in suites:
        for identity, cap, fn in CHECKS[suite]:
            for name in sorted(cases):
                m = cases[name]
                if m.size > cap:
                    continue
                try:
                    ok = bool(fn(m))
                    detail = ""
                except Exception as exc:  # reported, not raised
                    ok, detail = False, f"{type(exc).__name__}: {exc}"
                outcomes.append(Outcome(identity, name, ok, detail))
        outcomes.extend(_once_checks(suite, max_n))
    return outcomes


def summarize(outcomes: list[Outcome]) -> list[tuple[str, int, int]]:
    """(identity, passed, failed) in first-seen order."""
    table: dict[str, list[int]] = {}
    for o in outcomes:
        row = table.setdefault(o.identity, [0, 0])
        row[0 if o.passed else 1] += 1
    return [(k, p, f) for k, (p, f) in table.items()]

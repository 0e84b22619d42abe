"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (shown even under output
capture) naming the criterion, the number of cases checked and the wall time.
Run just this file with ``pytest tests/test_acceptance.py -v``.
"""

import time
from contextlib import contextmanager
from math import comb

from matroidhopf import corpus, hopf, tutte, verify
from matroidhopf.cli import main
from matroidhopf.matroid import graphic, uniform
from matroidhopf.poly import A, B, S, Poly

from oracles import graph_bases, matroid_bases, to_sympy, tutte_by_subsets, x, y

CORPUS = corpus.build(12)


def upto(n):
    return {k: m for k, m in CORPUS.items() if m.size <= n}


@contextmanager
def criterion(capsys, number, title, limit=None):
    """Time the body, print one result line and enforce the time bound."""
    state = {"cases": 0, "failures": []}
    start = time.perf_counter()
    ok = False
    try:
        yield state
        ok = not state["failures"]
    finally:
        elapsed = time.perf_counter() - start
        within = limit is None or elapsed < limit
        bound = f" (bound {limit} s)" if limit else ""
        line = (f"{'PASS' if ok and within else 'FAIL'}  criterion {number}: {title}: "
                f"{state['cases']} cases, {elapsed:.1f} s{bound}")
        if state["failures"]:
            line += f"; failing: {', '.join(state['failures'][:5])}"
        with capsys.disabled():
            print("\n" + line)
    assert not state["failures"], state["failures"]
    assert within, f"took {elapsed:.1f} s, bound {limit} s"


def check(state, name, ok):
    state["cases"] += 1
    if not ok:
        state["failures"].append(name)


def test_corpus_contents():
    graphs = corpus.named_graphs()
    assert {"P4", "C5", "K4", "bowtie", "multigraph"} <= set(graphs)
    assert {f"U({r},{n})" for n in range(13) for r in range(n + 1)} <= set(CORPUS)
    assert any("+" in k for k in CORPUS) and any(k.startswith("dual(") for k in CORPUS)


def test_criterion_01_tutte_cross_algorithm(capsys):
    tutte.clear_caches()
    with criterion(capsys, 1, "T = Q(a=b=1) = recipe(a=b=1), n <= 12", limit=60) as st:
        for name, m in CORPUS.items():
            t = tutte.tutte_rank_sum(m)
            q = tutte.q_universal(m).subs(a=1, b=1)
            r = tutte.recipe_closed_form(m).subs(a=1, b=1)
            check(st, name, t == q == r)


def test_criterion_02_alpha_is_tutte(capsys):
    hopf.clear_caches()
    with criterion(capsys, 2, "alpha(M) = s^|E| T_M, n <= 10", limit=120) as st:
        for name, m in upto(10).items():
            check(st, name, hopf.alpha(m) == S ** m.size * tutte.tutte_rank_sum(m))


def test_criterion_03_exp_of_loop_coloop(capsys):
    d = A * hopf.delta_coloop + B * hopf.delta_loop
    fast = hopf.exp_star(d)
    slow = hopf.exp_star_series(d)
    with criterion(capsys, 3, "exp(a dc + b dl) = a^r b^n (n <= 10); series = recursion (n <= 6)") as st:
        for name, m in upto(10).items():
            check(st, name, fast(m) == Poly.monomial(1, a=m.rank(), b=m.nullity()))
        for name, m in upto(6).items():
            check(st, f"series {name}", slow(m) == fast(m))


def test_criterion_04_convolution_formula(capsys):
    k4 = corpus.named_graphs()["K4"]
    with criterion(capsys, 4, "sum_A T_{M|A}(0,y) T_{M/A}(x,0) = T_M(x,y), n <= 10") as st:
        check(st, "K4 has 64 minor pairs", len(hopf.coproduct(k4).terms) == 64)
        for name, m in upto(10).items():
            check(st, name, tutte.check_convolution(m))


def test_criterion_05_duality(capsys):
    with criterion(capsys, 5, "T_M(x,y) = T_M*(y,x) and alpha(M) swapped = alpha(M*)") as st:
        for name, m in CORPUS.items():
            check(st, name, tutte.check_duality(m))
            check(st, f"alpha {name}", hopf.alpha(m).swap_xy() == hopf.alpha(m.dual()))


def test_criterion_06_flow_equations(capsys):
    with criterion(capsys, 6, "both flow equations in all five variables, n <= 8") as st:
        for name, m in upto(8).items():
            check(st, name, hopf.verify_flow_alpha(m) and hopf.verify_flow_beta(m))


def test_criterion_07_recipe_and_universality(capsys):
    with criterion(capsys, 7, "Q = recipe closed form; Q independent of selection rule") as st:
        for seed, (name, m) in enumerate(CORPUS.items()):
            q = tutte.q_universal(m)
            check(st, name, q == tutte.recipe_closed_form(m))
            check(st, f"seeded {name}", tutte.q_universal(m, tutte.random_rule(seed)) == q)


def test_criterion_08_phi_and_rank_additivity(capsys):
    with criterion(capsys, 8, "phi is a coalgebra morphism (n <= 8); rank additivity (n <= 10)") as st:
        for name, m in upto(8).items():
            check(st, f"phi {name}", hopf.verify_phi_morphism(m))
        for name, m in upto(10).items():
            check(st, f"ranks {name}", verify.rank_additivity(m))


def test_criterion_09_matroid_layer(capsys):
    checks = [
        verify.rank_axioms,
        verify.restriction_is_deletion,
        verify.coloop_contraction,
        verify.contraction_rank,
        verify.dual_involution,
        verify.contraction_via_dual,
    ]
    with criterion(capsys, 9, "rank axioms and minor identities, exhaustive for n <= 10") as st:
        for name, m in upto(10).items():
            for fn in checks:
                check(st, f"{fn.__name__} {name}", fn(m))


def test_criterion_10_spot_values(capsys):
    k4_edges = corpus.GRAPHS["K4"][1]
    with criterion(capsys, 10, "spot values and T(1,1), T(2,2) corpus-wide") as st:
        check(st, "U(1,1)", str(tutte.tutte_rank_sum(uniform(1, 1))) == "x")
        check(st, "U(0,1)", str(tutte.tutte_rank_sum(uniform(0, 1))) == "y")
        c3 = graphic(3, [(0, 1), (1, 2), (0, 2)])
        check(st, "C3", to_sympy(tutte.tutte_rank_sum(c3)) == x**2 + x + y
              == tutte_by_subsets(range(3), graph_bases(3, [(0, 1), (1, 2), (0, 2)])))
        u24 = uniform(2, 4)
        check(st, "U(2,4)", to_sympy(tutte.tutte_rank_sum(u24)) == x**2 + 2 * x + 2 * y + y**2
              == tutte_by_subsets(range(4), matroid_bases(u24)))
        trees = len(graph_bases(4, k4_edges))
        check(st, "K4", trees == 16 == tutte.tutte_rank_sum(graphic(4, k4_edges)).subs(x=1, y=1))
        for name, m in CORPUS.items():
            t = tutte.tutte_rank_sum(m)
            check(st, name, t.subs(x=2, y=2) == 2**m.size and t.subs(x=1, y=1) == len(m.bases))


def test_criterion_11_cli(capsys):
    u23 = '{"kind": "uniform", "r": 2, "n": 3}'
    goldens = [
        (["tutte", u23], "x^2 + x + y\n"),
        (["tutte", u23, "--eval", "x=1,y=1"], "3\n"),
        (["tutte", '{"kind": "bases", "n": 0, "bases": [[]]}'], "1\n"),
    ]
    with criterion(capsys, 11, "tutte goldens byte-identical; verify all --max-n 8 exits 0") as st:
        for argv, want in goldens:
            code = main(argv)
            check(st, " ".join(argv), code == 0 and capsys.readouterr().out == want)
        code = main(["verify", "all", "--max-n", "8"])
        report = capsys.readouterr().out
        check(st, "verify all", code == 0 and report.rstrip().endswith("checks passed"))


def test_binomial_sanity_of_corpus_uniforms():
    # basis counts of the uniform family, a cheap cross-check of the corpus builder
    for n in range(9):
        for r in range(n + 1):
            assert len(CORPUS[f"U({r},{n})"].bases) == comb(n, r)

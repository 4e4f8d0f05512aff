# Copyright Cade Stocker 2026
"""
Verification suites run by `planetree verify`.

Each suite returns a list of Check rows (what was measured, what was expected,
whether it passed). Random suites draw `size` instances from consecutive
seeds starting at `seed`; with jobs > 1 the instances are spread over a
process pool. Progress goes to stderr through tqdm.
"""

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm

from planetree.algorithms.approx import (
    alg_simple,
    approx_constant_f,
    check_algebra_roots,
    flat_four_tree_check,
    poly_p,
)
from planetree.algorithms.bistar import longest_diameter3_tree, longest_plane_bistar
from planetree.algorithms.convexopt import (
    caterpillar_canonical_form,
    caterpillar_from_form,
    caterpillar_to_flat_arc,
    enumerate_caterpillars,
    is_unimodal_permutation,
    longest_plane_tree_convex,
    zigzag_embedding,
)
from planetree.algorithms.generators import (
    arc_crossing_length,
    arc_Pn,
    bound_report,
    counterexample_9pt,
    p4k2,
    random_convex_position,
    random_general_position,
)
from planetree.algorithms.localsearch import alg_local
from planetree.algorithms.oracle import (
    enumerate_plane_spanning_trees,
    local_optima_scan,
    longest_bistar_bruteforce,
    longest_crossing_tree,
    longest_plane_tree_bruteforce,
    longest_plane_tree_diameter_at_most,
    longest_tristar_bruteforce,
)
from planetree.algorithms.tristar import longest_plane_tristar
from planetree.models.flatconvex import FlatConvexSet, cover_sequence, flat_length, realize
from planetree.models.spantree import dual_is_path, tree_length

logger = logging.getLogger(__name__)

SUITES = ('constants', 'convex', 'caterpillar', 'bounds', 'approx', 'diameter3', 'tristar', 'localsearch')

LENGTH_TOL = 1e-9


@dataclass(frozen=True)
class Check:
    name: str
    measured: str
    expected: str
    passed: bool


def checks_frame(checks: Sequence[Check]) -> pd.DataFrame:
    return pd.DataFrame([c.__dict__ for c in checks], columns=['name', 'measured', 'expected', 'passed'])


def _sizes(size: int, low: int = 4, high: int = 9) -> List[int]:
    return [low + i % (high - low + 1) for i in range(size)]


def _run_all(fn: Callable, items: Iterable, jobs: int, desc: str) -> List[Check]:
    items = list(items)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(tqdm(pool.map(fn, items), total=len(items), desc=desc, leave=False))
    else:
        results = [fn(item) for item in tqdm(items, desc=desc, leave=False)]
    return [c for batch in results for c in batch]


# ====================
# Constants
# ====================

def constants_suite(seed: int = 0, size: int = 0, jobs: int = 1) -> List[Check]:
    c = approx_constant_f()
    algebra = check_algebra_roots()
    return [
        Check('f is a root of P', f"{abs(poly_p(c.f)):.2e}", '<= 1e-10', abs(poly_p(c.f)) <= 1e-10),
        Check('f value', f"{c.f:.6f}", '0.546723 +- 1e-5', abs(c.f - 0.546723) <= 1e-5),
        Check('beta value', f"{c.beta:.6f}", '0.1604 +- 1e-3', abs(c.beta - 0.1604) <= 1e-3),
        Check('beta bounds agree at f', f"{algebra.residual_f:.2e}", '<= 1e-9', algebra.residual_f <= 1e-9),
        Check('5/8 solves the constraint', f"{algebra.residual_five_eighths:.2e}", '<= 1e-12',
              algebra.residual_five_eighths <= 1e-12),
        Check('squaring roots are spurious', ', '.join(f"{r:.6f}" for r, _ in algebra.spurious),
              'residual > 1e-6', all(res > 1e-6 for _, res in algebra.spurious)),
    ]


# ====================
# Random-instance suites
# ====================

def _convex_instance(args) -> List[Check]:
    n, seed = args
    ps = random_convex_position(n, seed)
    oracle = longest_plane_tree_bruteforce(ps)
    dp_length = tree_length(longest_plane_tree_convex(ps), ps)
    optima_zigzag = dual_is_path(oracle.best_tree, ps)
    return [
        Check(f"convex n={n} seed={seed} DP", f"{dp_length:.12f}", f"{oracle.best_length:.12f}",
              math.isclose(dp_length, oracle.best_length, rel_tol=0, abs_tol=LENGTH_TOL)),
        Check(f"convex n={n} seed={seed} optimum zigzags", str(optima_zigzag), 'True', optima_zigzag),
    ]


def convex_suite(seed: int, size: int, jobs: int = 1) -> List[Check]:
    items = [(n, seed + i) for i, n in enumerate(_sizes(size))]
    return _run_all(_convex_instance, items, jobs, 'convex')


def _approx_instance(args) -> List[Check]:
    n, seed = args
    f = approx_constant_f().f
    ps = random_general_position(n, seed)
    oracle = longest_plane_tree_bruteforce(ps)
    simple = tree_length(alg_simple(ps), ps)
    ratio = simple / oracle.best_length

    rng = np.random.default_rng(seed)
    arc = FlatConvexSet.from_gaps(rng.integers(1, 10, size=n - 1).tolist())
    flat_simple = flat_length(alg_simple(realize(arc)), arc)
    crossing = longest_crossing_tree(arc).best_length
    flat_ratio = Fraction(flat_simple, crossing)
    return [
        Check(f"approx n={n} seed={seed}", f"{ratio:.6f}", f">= f = {f:.6f}", ratio >= f),
        Check(f"flat arc n={n} seed={seed}", f"{float(flat_ratio):.6f}", '>= 2/3 - 1e-3',
              flat_ratio >= Fraction(2, 3) - Fraction(1, 1000)),
    ]


def approx_suite(seed: int, size: int, jobs: int = 1) -> List[Check]:
    items = [(n, seed + i) for i, n in enumerate(_sizes(size))]
    checks = _run_all(_approx_instance, items, jobs, 'approx')
    for n in (4, 6, 8):
        report = flat_four_tree_check(arc_Pn(n))
        checks.append(Check(f"four-tree average on arc n={n}", f"{float(report.lhs):.4f}",
                            f">= {float(report.rhs):.4f}", report.holds))
    return checks


def _diameter3_instance(args) -> List[Check]:
    n, seed = args
    ps = random_general_position(n, seed)
    dp = tree_length(longest_diameter3_tree(ps), ps)
    oracle = longest_plane_tree_diameter_at_most(ps, 3).best_length
    rng = np.random.default_rng(seed)
    a, b = (int(x) for x in rng.choice(n, size=2, replace=False))
    pair_dp = tree_length(longest_plane_bistar(ps, a, b), ps)
    pair_oracle = longest_bistar_bruteforce(ps, a, b).best_length
    return [
        Check(f"diameter3 n={n} seed={seed}", f"{dp:.12f}", f"{oracle:.12f}",
              math.isclose(dp, oracle, rel_tol=0, abs_tol=LENGTH_TOL)),
        Check(f"bistar ({a},{b}) n={n} seed={seed}", f"{pair_dp:.12f}", f"{pair_oracle:.12f}",
              math.isclose(pair_dp, pair_oracle, rel_tol=0, abs_tol=LENGTH_TOL)),
    ]


def diameter3_suite(seed: int, size: int, jobs: int = 1) -> List[Check]:
    items = [(n, seed + i) for i, n in enumerate(_sizes(size))]
    return _run_all(_diameter3_instance, items, jobs, 'diameter3')


def _tristar_instance(args) -> List[Check]:
    n, seed = args
    ps = random_general_position(n, seed)
    hull = ps.hull()
    rng = np.random.default_rng(seed)
    a, b, c = (int(x) for x in rng.choice(hull, size=3, replace=False))
    dp = tree_length(longest_plane_tristar(ps, a, b, c), ps)
    oracle = longest_tristar_bruteforce(ps, a, b, c).best_length
    return [Check(f"tristar ({a},{b},{c}) n={n} seed={seed}", f"{dp:.12f}", f"{oracle:.12f}",
                  math.isclose(dp, oracle, rel_tol=0, abs_tol=LENGTH_TOL))]


def tristar_suite(seed: int, size: int, jobs: int = 1) -> List[Check]:
    items = [(n, seed + i) for i, n in enumerate(_sizes(size))]
    return _run_all(_tristar_instance, items, jobs, 'tristar')


# ====================
# Exhaustive suites
# ====================

def caterpillar_suite(seed: int = 0, size: int = 0, jobs: int = 1, max_edges: int = 6) -> List[Check]:
    checks = []
    for form in tqdm(list(enumerate_caterpillars(max_edges)), desc='caterpillar', leave=False):
        cat = caterpillar_from_form(form)
        f = caterpillar_to_flat_arc(cat)
        best = {'length': None, 'trees': []}

        def visit(t):
            length = flat_length(t, f)
            if best['length'] is None or length > best['length']:
                best['length'], best['trees'] = length, [t]
            elif length == best['length']:
                best['trees'].append(t)

        enumerate_plane_spanning_trees(f, visit)
        unique = len(best['trees']) == 1
        same = unique and caterpillar_canonical_form(best['trees'][0]) == form
        checks.append(Check(f"caterpillar {form}", f"{len(best['trees'])} optima", 'unique and isomorphic',
                            unique and same))

    for form in enumerate_caterpillars(max_edges + 1):
        cat = caterpillar_from_form(form)
        drawing = zigzag_embedding(cat)
        covers = cover_sequence(drawing, FlatConvexSet(range(cat.n)))
        checks.append(Check(f"covers of {form}", str(covers.covers), 'unimodal permutation',
                            is_unimodal_permutation(covers)))
    return checks


# best diameter <= d tree on diameter_bound_arc(d), by exhaustive search
DIAMBOUND_CONSTRAINED = {2: 13, 3: 29}

# inner triangle orientation of the nine-point set that gets local search stuck
STUCK_TWIST = 1


def _plane_tree_lengths(f: FlatConvexSet) -> set:
    lengths = set()
    enumerate_plane_spanning_trees(f, lambda t: lengths.add(flat_length(t, f)))
    return lengths


def bounds_suite(seed: int = 0, size: int = 0, jobs: int = 1, ks: Sequence[int] = (1, 2)) -> List[Check]:
    """
    Exact values of the bound constructions. p4k2 is checked exactly for k = 1;
    larger k are checked against the closed-form bounds.
    """
    checks = []
    for d, expected in DIAMBOUND_CONSTRAINED.items():
        r = bound_report('diambound', {'d': d})
        checks.append(Check(f"diambound d={d} optimum", str(r.optimum), str(r.closed_forms['optimum']),
                            r.optimum == r.closed_forms['optimum']))
        checks.append(Check(f"diambound d={d} diameter {d}", str(r.constrained), str(expected),
                            r.constrained == expected))
    for k in ks:
        r = bound_report('p4k2', {'k': k})
        forms = r.closed_forms
        if k == 1:
            lengths = _plane_tree_lengths(p4k2(k))
            target = forms['optimum_at_least']
            checks.append(Check(f"p4k2 k={k} plane tree of length {target}", str(target in lengths), 'True',
                                target in lengths))
            checks.append(Check(f"p4k2 k={k} diameter 3", str(r.constrained), str(forms['diameter3_at_most']),
                                r.constrained == forms['diameter3_at_most']))
            checks.append(Check(f"p4k2 k={k} star", str(r.best_star), str(forms['star_at_most']),
                                r.best_star == forms['star_at_most']))
            continue
        checks.append(Check(f"p4k2 k={k} optimum", str(r.optimum), f">= {forms['optimum_at_least']}",
                            r.optimum >= forms['optimum_at_least']))
        checks.append(Check(f"p4k2 k={k} diameter 3", str(r.constrained), f"<= {forms['diameter3_at_most']}",
                            r.constrained <= forms['diameter3_at_most']))
        checks.append(Check(f"p4k2 k={k} star", str(r.best_star), f"<= {forms['star_at_most']}",
                            r.best_star <= forms['star_at_most']))
    n = 100
    f = arc_Pn(n)
    ratio = Fraction(flat_length(longest_plane_tree_convex(f), f), arc_crossing_length(n))
    checks.append(Check(f"arc n={n} optimum / crossing", f"{float(ratio):.6f}", 'in (2/3, 2/3 + 0.01]',
                        Fraction(2, 3) < ratio <= Fraction(2, 3) + Fraction(1, 100)))
    return checks


def localsearch_suite(seed: int = 0, size: int = 0, jobs: int = 1) -> List[Check]:
    ps = counterexample_9pt(STUCK_TWIST)
    optimum = longest_plane_tree_bruteforce(ps).best_length
    stuck = [(t, length) for t, length in local_optima_scan(ps) if length < optimum - LENGTH_TOL]
    if not stuck:
        return [Check('stuck tree', 'none', 'a local optimum below the optimum', False)]
    tree, length = min(stuck, key=lambda item: (item[1], item[0].edges))
    _, trace = alg_local(ps, tree)
    return [
        Check('stuck tree', f"{length:.9f}", f"< {optimum:.9f}", True),
        Check('local search from it', f"{len(trace)} swaps", '0 swaps', len(trace) == 0),
    ]


SUITE_RUNNERS = {
    'constants': constants_suite,
    'convex': convex_suite,
    'caterpillar': caterpillar_suite,
    'bounds': bounds_suite,
    'approx': approx_suite,
    'diameter3': diameter3_suite,
    'tristar': tristar_suite,
    'localsearch': localsearch_suite,
}


def run_suite(name: str, seed: int, size: int, jobs: int = 1) -> List[Check]:
    if name not in SUITE_RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    checks = SUITE_RUNNERS[name](seed=seed, size=size, jobs=jobs)
    failed = sum(1 for c in checks if not c.passed)
    logger.info(f"suite {name}: {len(checks) - failed}/{len(checks)} checks passed")
    return checks

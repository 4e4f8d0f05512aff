# Copyright Cade Stocker 2026
"""
The simple approximation: take the longest of all n stars and all n(n-1)
wedge trees T_{a,b}.

T_{a,b} splits the points into P_a (closer to a, ties included) and P_b.
Root a is joined to every point of P_b. The rays from a through the points of
P_b, together with the ray opposite to b, cut the plane into convex wedges;
each remaining point of P_a is joined to the P_b point on its wedge's
boundary ray nearer in angle to ray ab.

The module also carries the algebraic constants behind the guarantee: f, the
fourth smallest real root of

    P(x) = -80 + 128x + 504x^2 - 768x^3 - 845x^4 + 1096x^5 + 256x^6

and beta = 1 - f*sqrt(4f^2 - 1) - 2f^2.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

import numpy as np

from planetree.algorithms.oracle import longest_crossing_tree
from planetree.errors import PreconditionError
from planetree.models.flatconvex import FlatConvexSet, flat_length, realize
from planetree.models.geom import PointSet
from planetree.models.spantree import SpanningTree, tree_length

logger = logging.getLogger(__name__)

# highest degree first, as numpy expects
P_COEFFS = (256, 1096, -845, -768, 504, 128, -80)

F_BRACKET = (0.54, 0.55)
F_TOLERANCE = 1e-13


def star(instance, a: int) -> SpanningTree:
    if not 0 <= a < instance.n:
        raise ValueError(f"root {a} out of range for {instance.n} points")
    return SpanningTree.trusted(instance.n, ((a, p) for p in range(instance.n) if p != a))


def wedge_tree(ps: PointSet, a: int, b: int) -> SpanningTree:
    """T_{a,b}; plane, contains ab, hop diameter at most 4."""
    n = ps.n
    if a == b:
        raise ValueError("wedge tree roots must differ")
    if not (0 <= a < n and 0 <= b < n):
        raise ValueError(f"roots ({a}, {b}) out of range for {n} points")

    near_a = [p for p in range(n) if p != b and ps.squared_distance(p, a) <= ps.squared_distance(p, b)]
    near_b = [p for p in range(n) if p not in near_a]

    edges = [(a, v) for v in near_b]
    for p in near_a:
        if p == a:
            continue
        side = ps.orient(a, b, p)
        target = b
        for v in near_b:
            if v == b or ps.orient(a, b, v) != side or ps.orient(a, v, p) != side:
                continue
            # keep the ray rotated furthest toward p
            if ps.orient(a, target, v) == side:
                target = v
        edges.append((p, target))
    return SpanningTree.trusted(n, edges)


def candidate_trees(ps: PointSet) -> Iterator[Tuple[str, SpanningTree]]:
    for a in range(ps.n):
        yield f"star({a})", star(ps, a)
    for a in range(ps.n):
        for b in range(ps.n):
            if a != b:
                yield f"wedge({a},{b})", wedge_tree(ps, a, b)


def alg_simple(ps: PointSet) -> SpanningTree:
    """Longest candidate; equal lengths go to the smaller edge list."""
    if ps.n < 2:
        raise PreconditionError("the approximation needs at least 2 points")
    best, best_length, best_name = None, None, None
    for name, tree in candidate_trees(ps):
        length = tree_length(tree, ps)
        if best is None or length > best_length or (length == best_length and tree.edges < best.edges):
            best, best_length, best_name = tree, length, name
    logger.debug(f"approximation picked {best_name} with length {best_length}")
    return best


# ====================
# Constants
# ====================

@dataclass(frozen=True)
class ApproxConstants:
    f: float
    beta: float


def poly_p(x: float) -> float:
    value = 0.0
    for c in P_COEFFS:
        value = value * x + c
    return value


def beta_from(f: float) -> float:
    return 1 - f * math.sqrt(4 * f * f - 1) - 2 * f * f


def beta_lower(x: float) -> float:
    """Left-hand side of the constraint on beta, (2x - 1) / (2 sqrt(5 - 8x) - 1)."""
    return (2 * x - 1) / (2 * math.sqrt(5 - 8 * x) - 1)


def approx_constant_f() -> ApproxConstants:
    lo, hi = F_BRACKET
    p_lo, p_hi = poly_p(lo), poly_p(hi)
    if p_lo * p_hi > 0:
        raise ValueError(f"P does not change sign on [{lo}, {hi}]")
    for _ in range(200):
        if hi - lo <= F_TOLERANCE:
            break
        mid = (lo + hi) / 2
        p_mid = poly_p(mid)
        if p_mid == 0:
            lo = hi = mid
            break
        if (p_mid > 0) == (p_lo > 0):
            lo, p_lo = mid, p_mid
        else:
            hi = mid
    f = (lo + hi) / 2
    constants = ApproxConstants(f=f, beta=beta_from(f))
    _validate_constants(constants)
    return constants


def _validate_constants(c: ApproxConstants):
    if abs(poly_p(c.f)) > 1e-10:
        raise ValueError(f"P(f) = {poly_p(c.f)} is not zero")
    if not F_BRACKET[0] < c.f < F_BRACKET[1]:
        raise ValueError(f"f = {c.f} outside {F_BRACKET}")
    if not 0 < c.beta < 0.5:
        raise ValueError(f"beta = {c.beta} outside (0, 1/2)")
    if abs(beta_lower(c.f) - c.beta) > 1e-9:
        raise ValueError("the two bounds on beta disagree at f")


@dataclass(frozen=True)
class PolynomialRoots:
    p_roots: Tuple[float, ...]
    extended_roots: Tuple[float, ...]

    @property
    def f(self) -> float:
        return self.p_roots[3]


def _real_roots(coeffs) -> Tuple[float, ...]:
    roots = np.roots(coeffs)
    real = roots[np.abs(roots.imag) < 1e-9].real
    return tuple(sorted(float(r) for r in real))


def polynomial_roots() -> PolynomialRoots:
    """Real roots of P and of (8x - 5) P, the polynomial obtained by squaring the constraint on beta."""
    extended = np.polymul([8, -5], P_COEFFS)
    return PolynomialRoots(p_roots=_real_roots(P_COEFFS), extended_roots=_real_roots(extended))


@dataclass(frozen=True)
class AlgebraReport:
    residual_five_eighths: float
    residual_f: float
    spurious: Tuple[Tuple[float, float], ...]
    ok: bool


def constraint_residual(x: float) -> float:
    return abs(beta_lower(x) - beta_from(x))


def check_algebra_roots() -> AlgebraReport:
    """
    5/8 and f solve the original equation; the fifth and sixth roots of P were
    introduced by squaring and must not.
    """
    roots = polynomial_roots().p_roots
    f = approx_constant_f().f
    spurious = tuple((r, constraint_residual(r)) for r in roots[4:6])
    r58 = constraint_residual(5 / 8)
    rf = constraint_residual(f)
    ok = r58 <= 1e-12 and rf <= 1e-9 and all(res > 1e-6 for _, res in spurious)
    return AlgebraReport(residual_five_eighths=r58, residual_f=rf, spurious=spurious, ok=ok)


# ====================
# Flat averaging check
# ====================

@dataclass(frozen=True)
class FourTreeReport:
    star_a: int
    wedge_ab: int
    wedge_ba: int
    star_b: int
    crossing: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def flat_four_tree_check(f: FlatConvexSet, eps: float = 1e-6) -> FourTreeReport:
    """
    With a, b the extreme points of a flat arc, compare
    (|S_a| + 2|T_ab| + 2|T_ba| + |S_b|) / 6 against (2/3)|T_cr| in flat units.
    """
    if f.kind != 'arc':
        raise PreconditionError("the four-tree check runs on single arcs")
    a, b = 0, f.n - 1
    ps = realize(f, eps)
    sa = flat_length(star(f, a), f)
    sb = flat_length(star(f, b), f)
    tab = flat_length(wedge_tree(ps, a, b), f)
    tba = flat_length(wedge_tree(ps, b, a), f)
    crossing = longest_crossing_tree(f).best_length
    return FourTreeReport(
        star_a=sa, wedge_ab=tab, wedge_ba=tba, star_b=sb, crossing=crossing,
        lhs=Fraction(sa + 2 * tab + 2 * tba + sb, 6),
        rhs=Fraction(2 * crossing, 3),
    )

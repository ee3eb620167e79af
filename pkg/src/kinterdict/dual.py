"""LP-dual decomposition of the fractional interdiction objective.

For a capacity multiplier vector ``alpha >= 0`` the dual of the packing LP,
after eliminating the per-item multipliers in closed form, leaves

    alpha . C  +  sum over surviving items of max(0, p_i - w_i . alpha).

The packing value F(x) is the minimum of this expression over alpha, and the
minimum is always attained on a finite candidate set: the breakpoint ratios
p_i / w_i for a single capacity, or intersections of t of the n + t
hyperplanes {p_i = w_i . alpha} and {alpha_j = 0} in general.  Minimising
over interdictions at a fixed alpha is a 0-1 knapsack over the reduced
profits, which gives the exact pseudopolynomial solver for the relaxed
optimum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .instance import Instance, InterdictionVector
from .linalg import solve_square_system
from .nominal import DimensionMismatchError, fractional_knapsack, knapsack_max_budget


@dataclass(frozen=True)
class DualPoint:
    """A componentwise non-negative capacity multiplier vector."""

    alpha: tuple[Fraction, ...]

    def __post_init__(self):
        if any(a < 0 for a in self.alpha):
            raise ValueError("dual multipliers must be non-negative")

    @classmethod
    def of(cls, *values) -> "DualPoint":
        return cls(alpha=tuple(Fraction(v) for v in values))

    def dot_capacity(self, inst: Instance) -> Fraction:
        return sum(
            (a * c for a, c in zip(self.alpha, inst.C)), start=Fraction(0)
        )


@dataclass(frozen=True)
class CandidateSet:
    """Sorted, deduplicated dual candidates; always contains the origin."""

    points: tuple[DualPoint, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def reduced_profit(inst: Instance, item: int, a: DualPoint) -> Fraction:
    """max(0, p_i - w_i . alpha), the item's surviving dual profit."""
    r = inst.p[item] - sum(
        inst.W[j][item] * a.alpha[j] for j in range(inst.t)
    )
    return r if r > 0 else Fraction(0)


def surviving_reduced_profit(
    inst: Instance, x: InterdictionVector, a: DualPoint
) -> Fraction:
    """Total reduced profit of the items an interdiction leaves behind."""
    if len(a.alpha) != inst.t:
        raise DimensionMismatchError(
            f"dual point has {len(a.alpha)} components, instance has t={inst.t}"
        )
    if len(x.bits) != inst.n:
        raise DimensionMismatchError("interdiction length does not match instance")
    total = Fraction(0)
    for i in range(inst.n):
        if not x.bits[i]:
            total += reduced_profit(inst, i, a)
    return total


def dual_breakpoints(inst: Instance) -> CandidateSet:
    """Candidate multipliers for t = 1: zero plus every ratio p_i / w_i.

    The dual objective is piecewise linear in alpha with breakpoints exactly
    at these ratios, so its minimum over alpha >= 0 is attained here.
    """
    if inst.t != 1:
        raise DimensionMismatchError(f"dual_breakpoints needs t=1, got t={inst.t}")
    values = {Fraction(0)}
    for i in range(inst.n):
        if inst.W[0][i] > 0:
            values.add(Fraction(inst.p[i], inst.W[0][i]))
    return CandidateSet(points=tuple(DualPoint.of(v) for v in sorted(values)))


def dual_vertex_candidates(inst: Instance) -> CandidateSet:
    """Candidate multipliers for any t: vertices of the dual arrangement.

    Every t-subset of the n + t hyperplanes {p_i = w_i . alpha} and
    {alpha_j = 0} contributes its unique solution when the system is
    nonsingular and the solution is componentwise non-negative.  Agrees with
    ``dual_breakpoints`` when t = 1.
    """
    t = inst.t
    # hyperplane as (coefficients, rhs): item planes then coordinate planes
    planes: list[tuple[tuple[int, ...], int]] = []
    for i in range(inst.n):
        planes.append((inst.weight_of(i), inst.p[i]))
    for j in range(t):
        planes.append((tuple(1 if k == j else 0 for k in range(t)), 0))

    seen: set[tuple[Fraction, ...]] = {tuple([Fraction(0)] * t)}
    for subset in combinations(range(len(planes)), t):
        A = [planes[s][0] for s in subset]
        b = [planes[s][1] for s in subset]
        sol = solve_square_system(A, b)
        if sol is None:
            continue
        if any(v < 0 for v in sol):
            continue
        seen.add(tuple(sol))
    return CandidateSet(
        points=tuple(DualPoint(alpha=pt) for pt in sorted(seen))
    )


def dual_bound_exact(
    inst: Instance, a: DualPoint
) -> tuple[Fraction, InterdictionVector]:
    """Best interdiction under the dual objective at a fixed multiplier.

    Minimising the surviving reduced profit over budget-feasible x is a 0-1
    knapsack: select items to interdict, maximising the reduced profit
    removed.  Returns the exact bound value and the attaining interdiction.
    """
    reduced = [reduced_profit(inst, i, a) for i in range(inst.n)]
    answer = knapsack_max_budget(reduced, inst.c, inst.B)
    x = InterdictionVector.from_bits(answer.chosen, inst.c)
    value = a.dot_capacity(inst) + sum(reduced) - answer.value
    return Fraction(value), x


def exact_fractional_optimum(
    inst: Instance,
) -> tuple[Fraction, InterdictionVector, DualPoint]:
    """Exact relaxed interdiction optimum by scanning the dual candidates.

    Pseudopolynomial: one budget knapsack per candidate.  Ties between
    candidates are broken by the first point in sorted order.
    """
    candidates = (
        dual_breakpoints(inst) if inst.t == 1 else dual_vertex_candidates(inst)
    )
    best = None
    for a in candidates:
        value, x = dual_bound_exact(inst, a)
        if best is None or value < best[0]:
            best = (value, x, a)
    assert best is not None  # candidate set always contains the origin
    return best


def fractional_value(inst: Instance, x: InterdictionVector) -> Fraction:
    """Exact packing LP value F(x): greedy for t = 1, dual scan otherwise.

    The candidate set of ``dual_vertex_candidates`` does not depend on x, so
    minimising the dual objective over it is exact for every interdiction.
    """
    if inst.t == 1:
        return fractional_knapsack(inst, x).value
    best = None
    for a in dual_vertex_candidates(inst):
        v = a.dot_capacity(inst) + surviving_reduced_profit(inst, x, a)
        if best is None or v < best:
            best = v
    assert best is not None
    return best

"""Coverage brute force and universal-goodness checks.

min_coverage(code, k) is the smallest number of distinct packets any k
nodes jointly hold; a code supports an outer [theta, M] MDS layer at
reconstruction degree k exactly when min_coverage(code, k) >= M. The
toolkit evaluates this by exhaustive subset enumeration: node subsets
are walked in lexicographic order, and a branch is cut as soon as its
partial union already matches the best value found, which cannot be
improved because unions only grow along a branch. The cut never skips a
lexicographically earlier witness, so results are bit-for-bit
deterministic. Enumeration refuses to start when C(n, k) exceeds the
budget.

A code is universally good when every k <= alpha satisfies

    min_coverage(code, k) >= k * alpha - C(k, 2)

and weakly universally good when the right side is lowered by one. The
relaxed form is applied to codes in which exactly one node stores
alpha - 1 packets and the rest store alpha with regular replication;
everything else is held to the strict bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .constructions import PrgSpec
from .core import FrCode, profile, single_deficit_shape
from .errors import BudgetExceeded, KOutOfRange, RhoRange, Unreachable

#: Default ceiling on C(n, k) per enumeration.
DEFAULT_BUDGET = 10**8


def min_coverage(
    code: FrCode, k: int, budget: int = DEFAULT_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Minimum union size over all k-node subsets, with one witness.

    Returns (value, witness) where witness is the lexicographically
    least subset achieving the value, as a sorted tuple of node indices.
    """
    n = code.n
    if not 1 <= k <= n:
        raise KOutOfRange(f"k={k} outside [1, {n}]")
    if math.comb(n, k) > budget:
        raise BudgetExceeded(
            f"C({n}, {k}) = {math.comb(n, k)} exceeds budget {budget}"
        )
    masks = code.masks
    best = code.theta + 1
    best_witness: tuple[int, ...] = ()
    chosen: list[int] = []

    def extend(start: int, union: int) -> None:
        nonlocal best, best_witness
        # Unions only grow deeper in the tree, so nothing below this
        # branch can strictly beat the incumbent. Equal-value subsets
        # are all lexicographically later than the incumbent witness.
        if union.bit_count() >= best:
            return
        if len(chosen) == k:
            best = union.bit_count()
            best_witness = tuple(chosen)
            return
        remaining = k - len(chosen)
        for i in range(start, n - remaining + 1):
            chosen.append(i)
            extend(i + 1, union | masks[i])
            chosen.pop()

    extend(0, 0)
    return best, best_witness


@dataclass(frozen=True)
class CoverageProfile:
    """min_coverage values and witnesses for every k in 1..n.

    values[k - 1] is M(k); witnesses[k - 1] is its lexicographically
    least witnessing subset.
    """

    values: tuple[int, ...]
    witnesses: tuple[tuple[int, ...], ...]

    def value_at(self, k: int) -> int:
        return self.values[k - 1]


def coverage_profile(code: FrCode, budget: int = DEFAULT_BUDGET) -> CoverageProfile:
    values = []
    witnesses = []
    for k in range(1, code.n + 1):
        value, witness = min_coverage(code, k, budget=budget)
        values.append(value)
        witnesses.append(witness)
    return CoverageProfile(values=tuple(values), witnesses=tuple(witnesses))


def reconstruction_degree(
    code: FrCode, file_size: int | None = None, budget: int = DEFAULT_BUDGET
) -> int:
    """Least k such that min_coverage(code, k) >= file_size.

    file_size defaults to theta - 1, the outer-layer size used
    throughout the bundled tables. min_coverage is nondecreasing in k,
    so the least k is found by bisection.
    """
    if file_size is None:
        file_size = code.theta - 1
    if file_size < 1:
        raise KOutOfRange(f"file size must be >= 1, got {file_size}")
    if file_size > code.theta:
        raise Unreachable(
            f"file size {file_size} exceeds theta={code.theta}"
        )
    lo, hi = 1, code.n
    if min_coverage(code, hi, budget=budget)[0] < file_size:
        raise Unreachable(
            f"all {code.n} nodes jointly store fewer than {file_size} packets"
        )
    while lo < hi:
        mid = (lo + hi) // 2
        if min_coverage(code, mid, budget=budget)[0] >= file_size:
            hi = mid
        else:
            lo = mid + 1
    return lo


@dataclass(frozen=True)
class GoodnessReport:
    """Outcome of a goodness check.

    Arithmetic checks fill the point fields for the requested k.
    Structural checks scan every k in 1..min(alpha, n) against brute
    force coverage; the point fields then describe the binding k (the
    first failing k, or the smallest-margin k when all pass), and
    file_size is that k's brute-forced coverage. verdict is margin >= 0
    at the point k; structural_verdict is the all-k conjunction (None
    for arithmetic checks).
    """

    alpha: int
    theta: int
    k_evaluated: int
    file_size: int
    weak: bool
    rhs: int
    rhs_positive: bool
    margin: int
    verdict: bool
    structural_verdict: bool | None = None
    first_failing_k: int | None = None

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "theta": self.theta,
            "k_evaluated": self.k_evaluated,
            "file_size": self.file_size,
            "weak": self.weak,
            "rhs": self.rhs,
            "rhs_positive": self.rhs_positive,
            "margin": self.margin,
            "verdict": self.verdict,
            "structural_verdict": self.structural_verdict,
            "first_failing_k": self.first_failing_k,
        }


def goodness_rhs(k: int, alpha: int, weak: bool = False) -> int:
    """Right side of the goodness bound: k*alpha - C(k, 2), one less in
    the weak form."""
    return k * alpha - math.comb(k, 2) - (1 if weak else 0)


def goodness_arithmetic(
    k: int,
    alpha: int,
    theta: int,
    weak: bool = False,
    file_size: int | None = None,
) -> GoodnessReport:
    """Point check of the goodness bound at one k.

    file_size defaults to theta - 1. The verdict is
    file_size >= k*alpha - C(k, 2) (right side lowered by one when
    weak); margin is the slack.
    """
    if k < 1 or alpha < 1 or theta < 1:
        raise KOutOfRange(f"need k, alpha, theta >= 1, got {k}, {alpha}, {theta}")
    if file_size is None:
        file_size = theta - 1
    if file_size > theta:
        raise Unreachable(f"file size {file_size} exceeds theta={theta}")
    rhs = goodness_rhs(k, alpha, weak)
    margin = file_size - rhs
    return GoodnessReport(
        alpha=alpha,
        theta=theta,
        k_evaluated=k,
        file_size=file_size,
        weak=weak,
        rhs=rhs,
        rhs_positive=rhs > 0,
        margin=margin,
        verdict=margin >= 0,
    )


def weak_form_applies(code: FrCode) -> bool:
    """True when the relaxed bound is the right one for this code: a
    single node one packet short of alpha, the rest at alpha, regular
    replication."""
    return single_deficit_shape(profile(code))


def goodness_structural(
    code: FrCode,
    weak: bool | None = None,
    budget: int = DEFAULT_BUDGET,
) -> GoodnessReport:
    """Check the goodness bound against brute-force coverage at every
    k in 1..min(alpha, n).

    weak=None picks the form automatically: relaxed for the
    single-deficit shape, strict otherwise. The scan is ascending and
    first_failing_k reports the earliest violated k; when all pass,
    the point fields describe the tightest (smallest-margin) k.
    """
    prof = profile(code)
    if weak is None:
        weak = single_deficit_shape(prof)
    alpha = prof.alpha
    binding_k = None
    binding_margin = None
    binding_value = None
    first_fail = None
    for k in range(1, min(alpha, code.n) + 1):
        value, _ = min_coverage(code, k, budget=budget)
        margin = value - goodness_rhs(k, alpha, weak)
        if margin < 0 and first_fail is None:
            first_fail = k
            binding_k, binding_margin, binding_value = k, margin, value
            break
        if binding_margin is None or margin < binding_margin:
            binding_k, binding_margin, binding_value = k, margin, value
    assert binding_k is not None and binding_margin is not None
    rhs = goodness_rhs(binding_k, alpha, weak)
    return GoodnessReport(
        alpha=alpha,
        theta=code.theta,
        k_evaluated=binding_k,
        file_size=binding_value,
        weak=weak,
        rhs=rhs,
        rhs_positive=rhs > 0,
        margin=binding_margin,
        verdict=binding_margin >= 0,
        structural_verdict=first_fail is None,
        first_failing_k=first_fail,
    )


class PrgMargin(NamedTuple):
    p: int
    q: int
    theta: int
    margin: int


def prg_margin(n: int, d: int) -> PrgMargin:
    """Closed-form slack of the weak goodness bound for the partial
    regular graph code at k = n - 2 and file size theta - 1.

    With p = (n-1)/2 and q = (d-1)/2: theta = 2pq + p + q and
    margin = 2p^2 - 2pq - 4p + 3q + 2, nonnegative over the whole
    valid (n, d) range.
    """
    spec = PrgSpec(n, d)  # reuse parity and degree-range validation
    p, q = spec.p, spec.q
    theta = 2 * p * q + p + q
    assert theta == spec.theta
    margin = 2 * p * p - 2 * p * q - 4 * p + 3 * q + 2
    return PrgMargin(p=p, q=q, theta=theta, margin=margin)


def ring_margin_case1(rho: int, theta: int) -> int:
    """Goodness slack polynomial for one-round ring codes (theta = n),
    equal to twice the bound margin at k = n - rho:

        3*rho^2 + theta^2 - 4*rho*theta + theta + rho - 2

    Factors as (theta - rho - 1) * (theta - 3*rho + 2), so it is
    nonnegative exactly outside the open interval (rho + 1, 3*rho - 2).
    """
    return 3 * rho * rho + theta * theta - 4 * rho * theta + theta + rho - 2


def ring_margin_case2(m: int, rho: int, theta: int) -> int:
    """Reported diagnostic polynomial for multi-round ring codes:

        m^3*theta^2 + (m+2)*rho^2 - 2*m^2*theta*rho + m^2*theta
        - (m+2)*rho - 2*m*theta*rho + 2*m*theta - 2*m

    Its published derivation substitutes d = rho / m, which disagrees
    with the tabulated codes (where d = m * rho), so the toolkit only
    evaluates it verbatim and never gates any verdict on it; goodness
    for concrete codes is always computed from (k, alpha, theta)
    directly.
    """
    return (
        m**3 * theta**2
        + (m + 2) * rho**2
        - 2 * m**2 * theta * rho
        + m**2 * theta
        - (m + 2) * rho
        - 2 * m * theta * rho
        + 2 * m * theta
        - 2 * m
    )


class KPrediction(NamedTuple):
    k: int
    basis: str  # "theorem" | "conjecture"


def predicted_k_ring(n: int, theta: int, rho: int) -> KPrediction:
    """Predicted reconstruction degree of ring codes at file size
    theta - 1.

    Proven cases: theta = n gives n - rho; theta = m*n with m > 1 gives
    n - rho + 1. Heterogeneous cases are conjectured: n > theta gives
    n - rho; theta > n with theta not a multiple of n gives n - rho + 1.
    Conjectured values are labeled so and must never be asserted
    against brute force, only compared.
    """
    if not 2 <= rho <= n - 1:
        raise RhoRange(f"need 2 <= rho <= n - 1, got rho={rho}, n={n}")
    if theta < 1:
        raise KOutOfRange(f"theta must be >= 1, got {theta}")
    if theta == n:
        return KPrediction(n - rho, "theorem")
    if theta % n == 0:
        return KPrediction(n - rho + 1, "theorem")
    if n > theta:
        return KPrediction(n - rho, "conjecture")
    return KPrediction(n - rho + 1, "conjecture")

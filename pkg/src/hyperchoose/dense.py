"""Dense-regime machinery: palette splits, threshold predicates, experiments.

The palette of colors is split at random into blue, red, and neutral classes;
a list is monochromatic if it sits entirely in one of blue or red, dangerous
if it misses blue or misses red.  With the neutral probability tuned so the
dangerous-to-monochromatic expectation ratio equals the edge size, rejection
sampling of splits yields proper colorings of uniform 2-colorable hypergraphs
whenever no list is monochromatic and fewer than edge-size lists are
dangerous.  The mirrored-random-lists experiment below probes the opposite
regime: sampled list systems on a complete 2-colorable hypergraph that admit
no proper coloring certify a choice-number lower bound.

All randomness flows through Philox counter-based generators keyed by an
explicit 64-bit seed; identical seeds replay identical reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath
import numpy as np

from .core import (
    Bipartition,
    Coloring,
    Hypergraph,
    ListAssignment,
    SIDE_A,
    bipartition_is_valid,
    is_proper,
    metrics,
)
from .errors import (
    GuardExceededError,
    PreconditionError,
    TheoremContradictionError,
)

LOWER_BOUND_MAX_L = 3
LOWER_BOUND_MAX_T = 24

BLUE = "blue"
RED = "red"
NEUTRAL = "neutral"


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def split_probability(s: int, l: int) -> float:
    """Neutral probability (s^(1/l) - 1) / (1 + s^(1/l)).

    Computed in extended precision and rounded once, so the float returned is
    within one ulp (relative error far below 1e-12).
    """
    if s < 2 or l < 1:
        raise ValueError("requires s >= 2 and l >= 1")
    with mpmath.workdps(30):
        r = mpmath.root(s, l)
        return float((r - 1) / (1 + r))


def _integer_root(s: int, l: int) -> Optional[int]:
    r = round(s ** (1.0 / l))
    for cand in (r - 1, r, r + 1):
        if cand >= 1 and cand**l == s:
            return cand
    return None


def cond_ert_upper(s: int, l: int, t: int) -> bool:
    """Whether t < (1 + s^(1/l))^l / 4, decided exactly at rational thresholds.

    When s is a perfect l-th power the threshold is rational and compared
    exactly; otherwise it is irrational, and a 60-digit evaluation (widened
    to 200 digits if the margin looks suspicious) settles the comparison.
    """
    if s < 2 or l < 1 or t < 1:
        raise ValueError("requires s >= 2, l >= 1, t >= 1")
    r = _integer_root(s, l)
    if r is not None:
        return Fraction(t) < Fraction((1 + r) ** l, 4)
    for dps in (60, 200):
        with mpmath.workdps(dps):
            threshold = (1 + mpmath.root(s, l)) ** l / 4
            if abs(threshold - t) > mpmath.mpf(10) ** (-dps // 2):
                return t < threshold
    raise ArithmeticError(
        f"threshold for s={s}, l={l} is numerically indistinguishable from t={t}"
    )


def cond_corollary(s: int, l: int, t: int) -> bool:
    """Whether t <= sqrt(s) * 2^(l-2), decided exactly by squaring.

    A true corollary condition implies the main threshold condition (since
    1 + s^(1/l) >= 2 s^(1/(2l)) strictly for s >= 2); this is asserted.
    """
    if s < 2 or l < 2 or t < 1:
        raise ValueError("requires s >= 2, l >= 2, t >= 1")
    ok = t * t <= s * 4 ** (l - 2)
    if ok and not cond_ert_upper(s, l, t):
        raise TheoremContradictionError(
            "corollary condition held but the main threshold condition failed"
        )
    return ok


def feasibility_margin(s: int, l: int, t: int) -> float:
    """Heuristic margin l^2*s*log(s*T) - s*T + s*l^2 with T = t/(2(1+s^(1/l))^l).

    The vanishing-correction factor of the true asymptotic condition is
    dropped, so this is a diagnostic only; negative values merely suggest the
    lower-bound regime.  Nothing is gated on it.
    """
    if s < 2 or l < 1 or t < 1:
        raise ValueError("requires s >= 2, l >= 1, t >= 1")
    big_t = t / (2 * (1 + s ** (1.0 / l)) ** l)
    return l * l * s * math.log(s * big_t) - s * big_t + s * l * l


def expected_counts(lists: ListAssignment, p: float) -> tuple[float, float]:
    """Closed-form expected monochromatic and dangerous list tallies.

    Requires all lists to share one length l; the values are
    2*((1-p)/2)^l * count and 2*((1+p)/2)^l * count, independent of which
    colors the lists contain.  Both are two-sided tallies: the dangerous
    form sums the missing-blue and missing-red probabilities, so a list
    with neither class (all neutral) contributes twice.  The plain count
    of dangerous lists is bounded by the tally, which is what the
    rejection-sampling argument needs.
    """
    sizes = set(lists.sizes())
    if len(sizes) != 1:
        raise PreconditionError("expected_counts requires equal-length lists")
    l = sizes.pop()
    count = lists.n
    return (
        2 * ((1 - p) / 2) ** l * count,
        2 * ((1 + p) / 2) ** l * count,
    )


@dataclass(frozen=True)
class PaletteSplit:
    """A partition of the palette into blue, red, and neutral color classes."""

    blue: frozenset[int]
    red: frozenset[int]
    neutral: frozenset[int]
    p: float

    def __post_init__(self):
        if (
            self.blue & self.red
            or self.blue & self.neutral
            or self.red & self.neutral
        ):
            raise ValueError("split classes must be disjoint")

    def label(self, color: int) -> str:
        if color in self.blue:
            return BLUE
        if color in self.red:
            return RED
        if color in self.neutral:
            return NEUTRAL
        raise KeyError(f"color {color} is outside the split's palette")


def sample_split(palette: list[int], p: float, rng: np.random.Generator) -> PaletteSplit:
    """Classify each palette color: neutral with probability p, else blue/red evenly."""
    draws = rng.random(len(palette))
    blue, red, neutral = set(), set(), set()
    for color, u in zip(palette, draws):
        if u < p:
            neutral.add(color)
        elif u < p + (1 - p) / 2:
            blue.add(color)
        else:
            red.add(color)
    return PaletteSplit(frozenset(blue), frozenset(red), frozenset(neutral), p)


def is_monochromatic(colors: tuple[int, ...], split: PaletteSplit) -> bool:
    return all(c in split.blue for c in colors) or all(
        c in split.red for c in colors
    )


def is_dangerous(colors: tuple[int, ...], split: PaletteSplit) -> bool:
    return not any(c in split.blue for c in colors) or not any(
        c in split.red for c in colors
    )


@dataclass(frozen=True)
class DenseExperimentReport:
    """Aggregated trial outcomes of a seeded dense-regime experiment."""

    trials: int
    categories: dict[str, int]
    seed: int
    empirical_a: Optional[float] = None
    empirical_b: Optional[float] = None
    empirical_a_stderr: Optional[float] = None
    empirical_b_stderr: Optional[float] = None
    closed_a: Optional[float] = None
    closed_b: Optional[float] = None
    witness_fraction: Optional[float] = None
    witness: Optional[ListAssignment] = None

    def __post_init__(self):
        if sum(self.categories.values()) != self.trials:
            raise ValueError("category counts must sum to the trial count")

    def to_json(self) -> dict:
        doc = {
            "trials": self.trials,
            "categories": dict(self.categories),
            "seed": self.seed,
        }
        for name in (
            "empirical_a",
            "empirical_b",
            "empirical_a_stderr",
            "empirical_b_stderr",
            "closed_a",
            "closed_b",
            "witness_fraction",
        ):
            value = getattr(self, name)
            if value is not None:
                doc[name] = value
        if self.witness is not None:
            doc["witness"] = self.witness.to_json()
        return doc


def random_split_color_report(
    hg: Hypergraph,
    bip: Bipartition,
    lists: ListAssignment,
    max_iters: int,
    seed: int,
) -> tuple[Optional[Coloring], DenseExperimentReport]:
    """Las-Vegas split coloring with a per-iteration rejection trace.

    Each iteration draws a palette split at the tuned neutral probability and
    rejects it if any list is monochromatic or at least edge-size many lists
    are dangerous; otherwise side-A vertices take blue colors, side-B vertices
    red colors, and dangerous vertices neutral colors, which is proper because
    every edge still contains a non-dangerous vertex whose color class differs
    from its neighbors'.  Returns (None, report) if the budget runs out.
    """
    met = metrics(hg)
    if met.uniform is None:
        raise PreconditionError("split coloring requires a uniform hypergraph")
    if lists.n != hg.n:
        raise PreconditionError("list assignment size differs from vertex count")
    if not bipartition_is_valid(hg, bip):
        raise PreconditionError("bipartition is not valid for the hypergraph")
    sizes = set(lists.sizes())
    if len(sizes) != 1:
        raise PreconditionError("split coloring requires equal-length lists")
    if max_iters < 1:
        raise ValueError("max_iters must be positive")
    s = met.uniform
    l = sizes.pop()
    p = split_probability(s, l)
    palette = lists.palette()
    closed_a, closed_b = expected_counts(lists, p)
    rng = _rng(seed)
    counts = {"rejected_monochromatic": 0, "rejected_dangerous": 0, "colored": 0}
    mono_counts: list[int] = []
    dang_counts: list[int] = []

    def report(ran: int) -> DenseExperimentReport:
        mono = np.array(mono_counts, dtype=float)
        dang = np.array(dang_counts, dtype=float)
        return DenseExperimentReport(
            trials=ran,
            categories=dict(counts),
            seed=seed,
            empirical_a=float(mono.mean()),
            empirical_b=float(dang.mean()),
            empirical_a_stderr=float(mono.std() / math.sqrt(ran)),
            empirical_b_stderr=float(dang.std() / math.sqrt(ran)),
            closed_a=closed_a,
            closed_b=closed_b,
        )

    for it in range(max_iters):
        split = sample_split(palette, p, rng)
        mono = sum(1 for lv in lists.lists if is_monochromatic(lv, split))
        dangerous = [is_dangerous(lv, split) for lv in lists.lists]
        n_dang = sum(dangerous)
        tally = sum(
            (not any(c in split.blue for c in lv))
            + (not any(c in split.red for c in lv))
            for lv in lists.lists
        )
        mono_counts.append(mono)
        dang_counts.append(tally)
        if mono > 0:
            counts["rejected_monochromatic"] += 1
            continue
        if n_dang >= s:
            counts["rejected_dangerous"] += 1
            continue
        color = []
        for v in range(hg.n):
            lv = lists.lists[v]
            if dangerous[v]:
                choice = next(c for c in lv if c in split.neutral)
            elif bip.side[v] == SIDE_A:
                choice = next(c for c in lv if c in split.blue)
            else:
                choice = next(c for c in lv if c in split.red)
            color.append(choice)
        coloring = Coloring(tuple(color))
        if not is_proper(hg, coloring) or not coloring.respects(lists):
            raise TheoremContradictionError("split coloring failed verification")
        counts["colored"] += 1
        return coloring, report(it + 1)
    return None, report(max_iters)


def random_split_color(
    hg: Hypergraph,
    bip: Bipartition,
    lists: ListAssignment,
    max_iters: int,
    seed: int,
) -> Optional[Coloring]:
    """First coloring produced by the split sampler within the budget, or None."""
    coloring, _ = random_split_color_report(hg, bip, lists, max_iters, seed)
    return coloring


def split_experiment(
    lists: ListAssignment, s: int, trials: int, seed: int, p: Optional[float] = None
) -> DenseExperimentReport:
    """Sample many palette splits and tally monochromatic/dangerous lists.

    Vectorized over trials; the empirical means estimate the closed forms and
    the report carries their standard errors for tolerance checks.  The
    dangerous tally is two-sided (missing blue plus missing red, matching the
    closed form); the rejection categories use the plain dangerous count.
    """
    sizes = set(lists.sizes())
    if len(sizes) != 1:
        raise PreconditionError("split_experiment requires equal-length lists")
    if trials < 1:
        raise ValueError("trials must be positive")
    l = sizes.pop()
    if p is None:
        p = split_probability(s, l)
    closed_a, closed_b = expected_counts(lists, p)
    palette = lists.palette()
    index = {c: j for j, c in enumerate(palette)}
    member = np.zeros((lists.n, len(palette)), dtype=bool)
    for i, lv in enumerate(lists.lists):
        for c in lv:
            member[i, index[c]] = True

    draws = _rng(seed).random((trials, len(palette)))
    is_blue = (draws >= p) & (draws < p + (1 - p) / 2)
    is_red = draws >= p + (1 - p) / 2
    blue_hits = is_blue.astype(np.int64) @ member.T.astype(np.int64)
    red_hits = is_red.astype(np.int64) @ member.T.astype(np.int64)
    list_sizes = member.sum(axis=1)
    mono = (blue_hits == list_sizes) | (red_hits == list_sizes)
    mono_counts = mono.sum(axis=1)
    dang_counts = ((blue_hits == 0).astype(np.int64) + (red_hits == 0)).sum(axis=1)
    dang_set_counts = ((blue_hits == 0) | (red_hits == 0)).sum(axis=1)

    n_mono = int((mono_counts > 0).sum())
    n_over = int(((mono_counts == 0) & (dang_set_counts >= s)).sum())
    return DenseExperimentReport(
        trials=trials,
        categories={
            "rejected_monochromatic": n_mono,
            "rejected_dangerous": n_over,
            "colorable_split": trials - n_mono - n_over,
        },
        seed=seed,
        empirical_a=float(mono_counts.mean()),
        empirical_b=float(dang_counts.mean()),
        empirical_a_stderr=float(mono_counts.std() / math.sqrt(trials)),
        empirical_b_stderr=float(dang_counts.std() / math.sqrt(trials)),
        closed_a=closed_a,
        closed_b=closed_b,
    )


def complete_proper_exists(
    s: int, n_a: int, n_b: int, lists: ListAssignment
) -> Optional[Coloring]:
    """List coloring of the complete 2-colorable s-uniform hypergraph on (n_a, n_b).

    Exploits completeness instead of enumerating edges: a coloring is proper
    exactly when no color is used on both sides with at least s occurrences in
    total, and those counts grow monotonically, so backtracking over vertices
    with per-color side counts prunes exactly the improper prefixes.  Vertices
    0..n_a-1 are side A.  Returns the first proper coloring or None.
    """
    if s < 2 or n_a < 1 or n_b < 1:
        raise ValueError("requires s >= 2 and nonempty sides")
    if lists.n != n_a + n_b:
        raise PreconditionError("list assignment size differs from n_a + n_b")
    count_a: dict[int, int] = {}
    count_b: dict[int, int] = {}
    color: list[int] = []

    def rec(v: int) -> bool:
        if v == lists.n:
            return True
        side_counts = count_a if v < n_a else count_b
        other_counts = count_b if v < n_a else count_a
        for c in lists.lists[v]:
            other = other_counts.get(c, 0)
            mine = side_counts.get(c, 0) + 1
            if other >= 1 and mine + other >= s:
                continue
            side_counts[c] = mine
            color.append(c)
            if rec(v + 1):
                return True
            color.pop()
            side_counts[c] = mine - 1
        return False

    return Coloring(tuple(color)) if rec(0) else None


def lower_bound_experiment(
    s: int, l: int, t: int, trials: int, seed: int
) -> DenseExperimentReport:
    """Mirrored-random-lists probe for a choice-number lower bound.

    Each trial samples t/2 uniform l-subsets of the palette {1..l^2} for side
    A and copies them to side B; a trial whose system admits no proper
    coloring of the complete s-uniform hypergraph on (t/2, t/2) certifies a
    choice number above l for that hypergraph.  The report carries the
    witness fraction and the first uncolorable system found.
    """
    if s < 2 or l < 1 or t < 2 or trials < 1:
        raise ValueError("requires s >= 2, l >= 1, t >= 2, trials >= 1")
    if l > LOWER_BOUND_MAX_L or t > LOWER_BOUND_MAX_T or t % 2 != 0:
        raise GuardExceededError(
            f"parameters outside the experiment guard "
            f"(l <= {LOWER_BOUND_MAX_L}, t <= {LOWER_BOUND_MAX_T}, t even)"
        )
    palette_size = l * l
    rng = _rng(seed)
    witnesses = 0
    first_witness: Optional[ListAssignment] = None
    for _ in range(trials):
        left = [
            tuple(sorted(int(c) + 1 for c in rng.choice(palette_size, size=l, replace=False)))
            for _ in range(t // 2)
        ]
        system = ListAssignment(tuple(left + left))
        if complete_proper_exists(s, t // 2, t // 2, system) is None:
            witnesses += 1
            if first_witness is None:
                first_witness = system
    return DenseExperimentReport(
        trials=trials,
        categories={"witness_found": witnesses, "colorable": trials - witnesses},
        seed=seed,
        witness_fraction=witnesses / trials,
        witness=first_witness,
    )

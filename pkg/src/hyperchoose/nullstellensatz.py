"""Crossing spanning trees and polynomial coefficient certificates.

Each edge of a 2-colored hypergraph carries a spanning tree whose tree pairs
all cross the bipartition.  The product over edges of (sum of x_a + y_b over
tree pairs) expands with no cancellation, so the coefficient of the monomial
whose exponents match an orientation's degree vector counts, per edge, the
ways to pick an incident tree pair and endpoint.  A nonzero coefficient in
the signed product (x_a - y_b factors) certifies choosability with one more
color than each head degree; the two products agree up to a sign determined
by the total head degree on side B.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Bipartition,
    Hypergraph,
    Orientation,
    SIDE_A,
    bipartition_is_valid,
    orientation_is_valid,
)
from .errors import GuardExceededError, PreconditionError

EXPAND_EDGE_GUARD = 12


@dataclass(frozen=True)
class CrossingTree:
    """Spanning tree of one edge's vertices; every tree pair crosses the sides."""

    pairs: tuple[tuple[int, int], ...]


def crossing_tree(edge: tuple[int, ...], bip: Bipartition) -> CrossingTree:
    """The double-star tree on an edge: anchors are the least vertex per side.

    Pairs are (a0, b0), then (a, b0) for the remaining A-vertices, then
    (a0, b) for the remaining B-vertices; |pairs| = |edge| - 1 and every pair
    crosses.  Deterministic so coefficient values are reproducible.
    """
    a_side = sorted(v for v in edge if bip.side[v] == SIDE_A)
    b_side = sorted(v for v in edge if bip.side[v] != SIDE_A)
    if not a_side or not b_side:
        raise PreconditionError(f"edge {tuple(edge)} lies inside one side")
    a0, b0 = a_side[0], b_side[0]
    pairs = [(a0, b0)]
    pairs.extend((a, b0) for a in a_side[1:])
    pairs.extend((a0, b) for b in b_side[1:])
    return CrossingTree(tuple(pairs))


@dataclass(frozen=True)
class MonomialTarget:
    """Per-vertex exponents; for an orientation these are the head degrees."""

    exponent: tuple[int, ...]


def _tree_multiplicity(tree: CrossingTree) -> dict[int, int]:
    mult: dict[int, int] = {}
    for a, b in tree.pairs:
        mult[a] = mult.get(a, 0) + 1
        mult[b] = mult.get(b, 0) + 1
    return mult


def coefficient_count(
    hg: Hypergraph, bip: Bipartition, phi: Orientation
) -> int:
    """Coefficient of the orientation's degree monomial in the unsigned product.

    Equals the number of weighted ways to pick one tree-pair endpoint per edge
    so that every vertex is picked exactly its head-degree many times, the
    weight of a pick being the number of incident tree pairs.  Counted by DFS
    over edges with remaining-demand pruning; exact (arbitrary precision).
    """
    _check_inputs(hg, bip, phi)
    return _count_target(hg, bip, phi.degrees(hg.n))


def monomial_coefficient(
    hg: Hypergraph, bip: Bipartition, target: MonomialTarget
) -> int:
    """Unsigned-product coefficient of an arbitrary exponent vector."""
    if len(target.exponent) != hg.n:
        raise PreconditionError("exponent vector size differs from vertex count")
    if sum(target.exponent) != len(hg.edges):
        return 0  # each edge contributes total degree one
    return _count_target(hg, bip, list(target.exponent))


def _count_target(hg: Hypergraph, bip: Bipartition, remaining: list[int]) -> int:
    m = len(hg.edges)
    mults = [
        _tree_multiplicity(crossing_tree(e, bip)) for e in hg.edges
    ]
    # availability[i][v]: how many of the edges i.. could still pick v.
    availability = [dict() for _ in range(m + 1)]  # type: list[dict[int, int]]
    for i in range(m - 1, -1, -1):
        avail = dict(availability[i + 1])
        for v in mults[i]:
            avail[v] = avail.get(v, 0) + 1
        availability[i] = avail

    def rec(i: int) -> int:
        if i == m:
            return 1
        avail = availability[i]
        for v, need in enumerate(remaining):
            if need > avail.get(v, 0):
                return 0
        total = 0
        for v in sorted(mults[i]):
            if remaining[v] > 0:
                remaining[v] -= 1
                total += mults[i][v] * rec(i + 1)
                remaining[v] += 1
        return total

    return rec(0)


def _check_inputs(hg: Hypergraph, bip: Bipartition, phi: Orientation):
    if not bipartition_is_valid(hg, bip):
        raise PreconditionError("bipartition is not valid for the hypergraph")
    if not orientation_is_valid(hg, phi):
        raise PreconditionError("orientation is not valid for the hypergraph")


@dataclass(frozen=True)
class ExpandCheck:
    coef_fstar: int
    coef_f: int
    sign_ok: bool
    count_ok: bool


def _expand_product(
    hg: Hypergraph, bip: Bipartition, signed: bool
) -> dict[tuple[int, ...], int]:
    """Dense expansion of the edge-factor product as exponent-vector -> coefficient."""
    poly: dict[tuple[int, ...], int] = {tuple([0] * hg.n): 1}
    for e in hg.edges:
        tree = crossing_tree(e, bip)
        factor: dict[int, int] = {}
        for a, b in tree.pairs:
            factor[a] = factor.get(a, 0) + 1
            factor[b] = factor.get(b, 0) + (-1 if signed else 1)
        factor = {v: c for v, c in factor.items() if c}
        nxt: dict[tuple[int, ...], int] = {}
        for expo, coef in poly.items():
            for v, fc in factor.items():
                key = list(expo)
                key[v] += 1
                key = tuple(key)
                nxt[key] = nxt.get(key, 0) + coef * fc
        poly = {k: c for k, c in nxt.items() if c}
    return poly


def expand_check(hg: Hypergraph, bip: Bipartition, phi: Orientation) -> ExpandCheck:
    """Fully expand both products and verify count and sign relations.

    The signed coefficient must equal the unsigned one times (-1) raised to
    the total head degree on side B (substituting y -> -y flips exactly the
    B-exponent parity), and the unsigned coefficient must match the DFS count.
    """
    _check_inputs(hg, bip, phi)
    if len(hg.edges) > EXPAND_EDGE_GUARD:
        raise GuardExceededError(
            f"{len(hg.edges)} edges exceeds the expansion guard {EXPAND_EDGE_GUARD}"
        )
    target = tuple(phi.degrees(hg.n))
    coef_fstar = _expand_product(hg, bip, signed=False).get(target, 0)
    coef_f = _expand_product(hg, bip, signed=True).get(target, 0)
    b_heads = sum(1 for h in phi.head if bip.side[h] != SIDE_A)
    sign = -1 if b_heads % 2 else 1
    return ExpandCheck(
        coef_fstar=coef_fstar,
        coef_f=coef_f,
        sign_ok=coef_f == sign * coef_fstar,
        count_ok=coef_fstar == coefficient_count(hg, bip, phi),
    )


def fstar_coefficients(
    hg: Hypergraph, bip: Bipartition
) -> dict[tuple[int, ...], int]:
    """All coefficients of the unsigned product (guarded); none is negative."""
    if len(hg.edges) > EXPAND_EDGE_GUARD:
        raise GuardExceededError(
            f"{len(hg.edges)} edges exceeds the expansion guard {EXPAND_EDGE_GUARD}"
        )
    if not bipartition_is_valid(hg, bip):
        raise PreconditionError("bipartition is not valid for the hypergraph")
    return _expand_product(hg, bip, signed=False)

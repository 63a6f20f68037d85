"""Optimal linear contraction orders for tree tensor networks.

This adapts IKKBZ, the classic polynomial-time join-ordering algorithm,
to tensor contraction. The cost of a linear order has the adjacent
sequence interchange (ASI) property: whether swapping two adjacent
subsequences lowers the total cost is decided by comparing a rank
computed per subsequence. Given a precedence graph (the tree rooted at a
candidate first tensor), the cost-minimal order respecting it is found by
sorting on rank, fusing any parent/child pair whose ranks contradict
their required order into a compound entry. Running this linearization
for every root and keeping the cheapest result yields the global optimum
over all outer-product-free linear orders, in O(n^2 log n) time.

Sequence bookkeeping: an entry over members v1..vk carries

    T = t(v1) * ... * t(vk)            (prefix-size multiplier)
    C with C(S1 S2) = C(S1) + T(S1) * C(S2), C(v) = c(v)   (relative cost)

and rank(S) = (T(S) - 1) / C(S). Since C > 0 always, ranks are compared
by cross-multiplication, which never flips an inequality. Everything is
exact rational arithmetic.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .network import NodeId, TensorNetwork, ValidationError, id_key
from .precedence import PrecedenceGraph, build_precedence_graph

__all__ = [
    "Rank",
    "SequenceEntry",
    "fuse",
    "iks_order",
    "linearize_root",
    "linearized_chain",
    "merge_children",
    "normalize_chain",
    "rank_leq",
    "single_entry",
]


@total_ordering
@dataclass(frozen=True, eq=False)
class Rank:
    """A rank as the pair (T - 1, C) with C > 0, compared exactly by
    cross-multiplication. Total and transitive; never divides."""

    num: Fraction
    den: Fraction

    def __eq__(self, other) -> bool:
        if not isinstance(other, Rank):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __lt__(self, other) -> bool:
        if not isinstance(other, Rank):
            return NotImplemented
        return self.num * other.den < other.num * self.den

    def as_fraction(self) -> Fraction:
        return self.num / self.den

    def __str__(self) -> str:
        return str(self.as_fraction())


@dataclass(frozen=True)
class SequenceEntry:
    """A (possibly compound) tensor sequence with its exact (T, C) pair."""

    members: tuple[NodeId, ...]
    T: Fraction
    C: Fraction

    @property
    def rank(self) -> Rank:
        return Rank(self.T - 1, self.C)

    def __repr__(self) -> str:
        names = ",".join(str(v) for v in self.members)
        return f"SequenceEntry(({names}), T={self.T}, C={self.C})"


def single_entry(pg: PrecedenceGraph, v: NodeId) -> SequenceEntry:
    """The sequence consisting of node ``v`` alone."""
    return SequenceEntry((v,), pg.t[v], pg.c[v])


def fuse(a: SequenceEntry, b: SequenceEntry) -> SequenceEntry:
    """Concatenate two sequences; (T, C) compose associatively."""
    return SequenceEntry(a.members + b.members, a.T * b.T, a.C + a.T * b.C)


def rank_leq(U: SequenceEntry, V: SequenceEntry) -> bool:
    """True iff placing U before V is no worse than V before U.

    Computed as (T(U) - 1) * C(V) <= (T(V) - 1) * C(U); the denominators
    C are always positive, so cross-multiplying preserves the inequality.
    """
    return (U.T - 1) * V.C <= (V.T - 1) * U.C


def _required(a: SequenceEntry, b: SequenceEntry, pg: PrecedenceGraph) -> bool:
    # b must follow a iff the precedence parent of b's head sits inside a
    return pg.parent.get(b.members[0]) in a.members


def normalize_chain(
    chain: list[SequenceEntry], pg: PrecedenceGraph
) -> list[SequenceEntry]:
    """Fuse away precedence-contradictory adjacent pairs.

    A pair (A, B) is contradictory when precedence forces A before B but
    rank(A) > rank(B). Fusing may create new contradictions further left,
    so entries are folded with a stack until none remain. A chain whose
    ranks are already nondecreasing comes back unchanged.
    """
    out: list[SequenceEntry] = []
    for entry in chain:
        out.append(entry)
        while (
            len(out) > 1
            and _required(out[-2], out[-1], pg)
            and not rank_leq(out[-2], out[-1])
        ):
            b = out.pop()
            a = out.pop()
            out.append(fuse(a, b))
    return out


def _merge_key(entry: SequenceEntry):
    return (entry.rank, id_key(entry.members[0]))


def merge_children(
    linearized: list[list[SequenceEntry]],
) -> list[SequenceEntry]:
    """Merge rank-sorted chains into one rank-sorted chain.

    Rank ties break on the smallest leading node id, so the result is
    deterministic regardless of input chain order.
    """
    if len(linearized) == 1:
        return list(linearized[0])
    return list(heapq.merge(*linearized, key=_merge_key))


def linearized_chain(pg: PrecedenceGraph) -> list[SequenceEntry]:
    """Bottom-up linearization of a precedence graph, before expansion.

    Every subtree is reduced to a rank-sorted chain: child chains are
    merged by rank, then the subtree root is fused with the chain head
    while its rank is >= the head's rank (the root must come first, so a
    head that rank-sorts at or before it is contradictory). Fusing on
    ties keeps each chain strictly sorted under (rank, leading id), which
    is what makes the merge order reproducible.
    """
    chains: dict[NodeId, list[SequenceEntry]] = {}
    for v in reversed(pg.preorder):
        kids = pg.children[v]
        merged = merge_children([chains.pop(u) for u in kids]) if kids else []
        acc = single_entry(pg, v)
        i = 0
        while i < len(merged) and rank_leq(merged[i], acc):
            acc = fuse(acc, merged[i])
            i += 1
        chains[v] = [acc, *merged[i:]]
    return chains[pg.root]


def linearize_root(pg: PrecedenceGraph) -> tuple[tuple[NodeId, ...], int]:
    """Cheapest linear order starting at ``pg.root`` and respecting it.

    Returns the expanded order and its exact cost. The order is
    outer-product-free (every prefix is connected by construction) and
    cost-minimal among all orders compatible with this rooting.
    """
    chain = linearized_chain(pg)
    order = tuple(v for entry in chain for v in entry.members)
    T = chain[0].T
    C = chain[0].C
    for entry in chain[1:]:
        C += T * entry.C
        T *= entry.T
    # Gamma(order) = F(root) * C(order[1:]); the root entry contributes
    # F(root) * (1 + C(rest)), so subtracting F(root) recovers the cost.
    gamma = C - pg.F[pg.root]
    assert gamma.denominator == 1, "sequence calculus produced a non-integer cost"
    return order, int(gamma)


def iks_order(
    net: TensorNetwork, *, deadline: float | None = None
) -> tuple[tuple[NodeId, ...], int]:
    """Globally optimal outer-product-free linear order for a tree network.

    Linearizes every rooting and returns the cheapest order with its
    exact cost; equal-cost roots resolve to the smallest root id. The
    optional ``deadline`` (a ``time.monotonic()`` instant) raises
    ``TimeoutError`` between rootings once passed.
    """
    if not net.is_tree:
        raise ValidationError(
            "optimal linear ordering requires a tree network; "
            "use order_arbitrary for general networks"
        )
    best_order: tuple[NodeId, ...] | None = None
    best_cost = 0
    for root in sorted(net.nodes, key=id_key):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError("deadline exceeded while trying rootings")
        order, cost = linearize_root(build_precedence_graph(net, root))
        if best_order is None or cost < best_cost:
            best_order, best_cost = order, cost
    assert best_order is not None
    return best_order, best_cost

"""Exact baselines: exponential DPs plus the cubic interval DP.

``dp_linear_optimal`` and ``dp_general_optimal`` are ground-truth solvers
over bitmask subset tables, exponential in the node count and guarded by
hard size bounds. ``linearized_dp`` upgrades a fixed linear order to the
best contraction tree that keeps the same left-to-right leaf order, in
O(n^3), the matrix-chain recurrence generalized to arbitrary networks.

Bit positions follow the network's node order, so reconstructed plans are
reproducible for equal input files. The DPs take an optional ``deadline``
(a ``time.monotonic()`` instant) checked once per subset, raising
``TimeoutError`` so a partial table is discarded cleanly.
"""

from __future__ import annotations

import math
import time
from typing import Sequence

from .network import NodeId, TensorNetwork
from .plans import LinearPlan, TreeNode, validate_plan

__all__ = [
    "SizeBoundError",
    "dp_general_optimal",
    "dp_linear_optimal",
    "linearized_dp",
]

DP_LINEAR_MAX_NODES = 30
DP_GENERAL_MAX_NODES = 16


class SizeBoundError(ValueError):
    """The network exceeds a solver's hard size bound."""


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise TimeoutError("deadline exceeded")


def dp_linear_optimal(
    net: TensorNetwork, *, deadline: float | None = None
) -> tuple[tuple[NodeId, ...], int]:
    """Globally optimal outer-product-free linear order, by subset DP.

    States are the connected node subsets; a subset extends by any
    adjacent outside node, so outer products never enter the search
    space. Works on any connected network (not just trees) up to
    ``DP_LINEAR_MAX_NODES`` nodes.
    """
    n = len(net.nodes)
    if n > DP_LINEAR_MAX_NODES:
        raise SizeBoundError(
            f"network has {n} nodes; the linear DP is bounded at "
            f"{DP_LINEAR_MAX_NODES}"
        )
    nodes = net.nodes
    if n == 1:
        return (nodes[0],), 0
    idx = {v: i for i, v in enumerate(nodes)}
    adj: list[list[tuple[int, int]]] = [
        [(idx[u], s) for u, s in net.adjacency[v].items()] for v in nodes
    ]
    tsize = [net.tensor_size(v) for v in nodes]

    # mask -> (cost, prefix size, last node index; -1 marks a start node)
    best: dict[int, tuple[int, int, int]] = {
        1 << i: (0, tsize[i], -1) for i in range(n)
    }
    frontier = sorted(best)
    for _ in range(n - 1):
        grown: dict[int, tuple[int, int, int]] = {}
        for mask in frontier:
            _check_deadline(deadline)
            cost, size, _ = best[mask]
            m = mask
            while m:
                i = (m & -m).bit_length() - 1
                m &= m - 1
                for j, _s in adj[i]:
                    bit = 1 << j
                    if mask & bit:
                        continue
                    shared = 1
                    for k, s in adj[j]:
                        if mask >> k & 1:
                            shared *= s
                    step = size * tsize[j] // shared
                    cand = (cost + step, step // shared, j)
                    new_mask = mask | bit
                    old = grown.get(new_mask)
                    if old is None or cand[0] < old[0]:
                        grown[new_mask] = cand
        best.update(grown)
        frontier = sorted(grown)

    full = (1 << n) - 1
    total = best[full][0]
    order_rev = []
    mask = full
    while True:
        _, _, last = best[mask]
        if last == -1:
            order_rev.append(nodes[mask.bit_length() - 1])
            break
        order_rev.append(nodes[last])
        mask ^= 1 << last
    return tuple(reversed(order_rev)), total


def _subset_sizes(net: TensorNetwork) -> list[int]:
    """Exact compound-tensor size for every node-subset bitmask."""
    n = len(net.nodes)
    idx = {v: i for i, v in enumerate(net.nodes)}
    adj = [
        [(idx[u], s) for u, s in net.adjacency[v].items()] for v in net.nodes
    ]
    tsize = [net.tensor_size(v) for v in net.nodes]
    size = [1] * (1 << n)
    for mask in range(1, 1 << n):
        i = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        shared = 1
        for j, s in adj[i]:
            if rest >> j & 1:
                shared *= s
        size[mask] = size[rest] * tsize[i] // (shared * shared)
    return size


def _pair_cost(size: Sequence[int], left: int, right: int) -> int:
    """Contraction cost of two disjoint masks from subset sizes alone.

    The shared-leg product satisfies shared^2 = size(L) * size(R) /
    size(L | R), a perfect square recovered exactly with isqrt. A
    disconnected pair yields shared = 1, the outer-product convention.
    """
    product = size[left] * size[right]
    shared = math.isqrt(product // size[left | right])
    return product // shared


def dp_general_optimal(
    net: TensorNetwork, *, deadline: float | None = None
) -> tuple[TreeNode, int]:
    """Optimal contraction tree over all full binary trees, by subset DP.

    best(S) minimizes best(S1) + best(S2) + cost(S1, S2) over every
    two-way partition of S, enumerating all submasks (3^n work), bounded
    at ``DP_GENERAL_MAX_NODES`` nodes. A partition whose halves share no
    edge is priced as an outer product; such splits do win occasionally,
    so nothing restricts the search to connected halves.
    """
    n = len(net.nodes)
    if n > DP_GENERAL_MAX_NODES:
        raise SizeBoundError(
            f"network has {n} nodes; the general DP is bounded at "
            f"{DP_GENERAL_MAX_NODES}"
        )
    nodes = net.nodes
    if n == 1:
        return nodes[0], 0
    size = _subset_sizes(net)
    full = (1 << n) - 1

    best = [0] * (full + 1)
    split = [0] * (full + 1)
    for mask in range(1, full + 1):
        if mask & (mask - 1) == 0:
            continue  # a lone tensor costs nothing
        _check_deadline(deadline)
        low = mask & -mask
        cur: int | None = None
        sub = (mask - 1) & mask
        while sub:
            if sub & low:  # keep the half holding the lowest bit: each
                rest = mask ^ sub  # partition is seen exactly once
                cost = best[sub] + best[rest] + _pair_cost(size, sub, rest)
                if cur is None or cost < cur:
                    cur = cost
                    split[mask] = sub
            sub = (sub - 1) & mask
        best[mask] = cur

    def build(mask: int) -> TreeNode:
        if mask & (mask - 1) == 0:
            return nodes[mask.bit_length() - 1]
        sub = split[mask]
        return (build(sub), build(mask ^ sub))

    return build(full), best[full]


def linearized_dp(
    net: TensorNetwork, order: LinearPlan | Sequence[NodeId]
) -> tuple[TreeNode, int]:
    """Best contraction tree whose in-order leaves equal ``order``.

    Interval DP over contiguous ranges of the order. Intervals may be
    disconnected in the network; such splits are priced as outer
    products, so the recurrence is total for any permutation. The result
    never costs more than contracting ``order`` linearly.
    """
    if isinstance(order, LinearPlan):
        seq = order.order
    else:
        seq = tuple(order)
    validate_plan(net, LinearPlan(seq))
    n = len(seq)
    if n == 1:
        return seq[0], 0
    pos = {v: i for i, v in enumerate(seq)}
    tsize = [net.tensor_size(v) for v in seq]
    adj = [
        [(pos[u], s) for u, s in net.adjacency[v].items()] for v in seq
    ]

    # sz[i][j]: compound size of seq[i..j], extended one node at a time
    sz = [[0] * n for _ in range(n)]
    for i in range(n):
        sz[i][i] = tsize[i]
        for j in range(i + 1, n):
            shared = 1
            for p, s in adj[j]:
                if i <= p < j:
                    shared *= s
            sz[i][j] = sz[i][j - 1] * tsize[j] // (shared * shared)

    best = [[0] * n for _ in range(n)]
    split = [[0] * n for _ in range(n)]
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            j = i + length - 1
            cur: int | None = None
            for k in range(i, j):
                left, right = sz[i][k], sz[k + 1][j]
                product = left * right
                shared = math.isqrt(product // sz[i][j])
                cost = best[i][k] + best[k + 1][j] + product // shared
                if cur is None or cost < cur:
                    cur = cost
                    split[i][j] = k
            best[i][j] = cur

    def build(i: int, j: int) -> TreeNode:
        if i == j:
            return seq[i]
        k = split[i][j]
        return (build(i, k), build(k + 1, j))

    return build(0, n - 1), best[0][n - 1]

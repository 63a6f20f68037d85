"""Precedence graphs: a tree tensor network rooted at a chosen tensor.

Rooting orients every edge away from the root and thereby fixes a partial
contraction order (a node may only be contracted once its parent has
been). Each node carries four exact quantities used by the rank-based
optimizer:

    w(v)  size of the edge to the parent (1 for the root)
    F(v)  full tensor size: open_mult(v) times all incident edge sizes
    t(v)  F(v) / w(v)^2, the factor by which contracting v multiplies the
          size of the already-contracted prefix
    c(v)  F(v) / w(v), the cost of contracting v into a prefix of size 1

t and c are exact rationals; t(v) < 1 is common and float comparisons
could misorder near-ties, so nothing here ever leaves Fraction land.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .network import NodeId, TensorNetwork, ValidationError

__all__ = [
    "NodeQuantities",
    "PrecedenceGraph",
    "build_precedence_graph",
    "format_precedence",
    "node_quantities",
]


class NodeQuantities(NamedTuple):
    w: int
    F: int
    t: Fraction
    c: Fraction


class PrecedenceGraph:
    """Arborescence over a tree network, plus per-node rank ingredients.

    Immutable after construction. ``preorder`` lists every node with each
    parent before its children, in a deterministic order derived from the
    network's edge order.
    """

    __slots__ = ("root", "parent", "children", "w", "F", "t", "c", "preorder")

    def __init__(self, net: TensorNetwork, root: NodeId) -> None:
        if root not in net.open_mult:
            raise ValidationError(f"unknown root node id {root!r}")
        if not net.is_tree:
            raise ValidationError(
                "precedence graphs are defined for tree networks only; "
                "extract a spanning tree first"
            )

        parent: dict[NodeId, NodeId] = {}
        children: dict[NodeId, tuple[NodeId, ...]] = {}
        preorder: list[NodeId] = []
        stack = [root]
        while stack:
            u = stack.pop()
            preorder.append(u)
            up = parent.get(u)
            kids = tuple(v for v in net.adjacency[u] if v != up)
            children[u] = kids
            for v in kids:
                parent[v] = u
                stack.append(v)

        w: dict[NodeId, int] = {}
        F: dict[NodeId, int] = {}
        t: dict[NodeId, Fraction] = {}
        c: dict[NodeId, Fraction] = {}
        for v in preorder:
            w[v] = 1 if v == root else net.adjacency[v][parent[v]]
            size = net.open_mult[v]
            for edge in net.adjacency[v].values():
                size *= edge
            F[v] = size
            t[v] = Fraction(size, w[v] * w[v])
            c[v] = Fraction(size, w[v])

        self.root = root
        self.parent = parent
        self.children = children
        self.preorder = tuple(preorder)
        self.w = w
        self.F = F
        self.t = t
        self.c = c

    def __len__(self) -> int:
        return len(self.preorder)

    def __repr__(self) -> str:
        return f"PrecedenceGraph(root={self.root!r}, {len(self.preorder)} nodes)"


def build_precedence_graph(net: TensorNetwork, root: NodeId) -> PrecedenceGraph:
    """Root the tree network at ``root`` and compute all node quantities."""
    return PrecedenceGraph(net, root)


def node_quantities(pg: PrecedenceGraph, v: NodeId) -> NodeQuantities:
    """The cached exact quantities (w, F, t, c) of node ``v``."""
    try:
        return NodeQuantities(pg.w[v], pg.F[v], pg.t[v], pg.c[v])
    except KeyError:
        raise ValidationError(f"unknown node id {v!r}") from None


def format_precedence(pg: PrecedenceGraph) -> str:
    """Indented one-node-per-line debug dump of the arborescence."""
    depth = {pg.root: 0}
    lines = []
    for v in pg.preorder:
        d = depth[v]
        for kid in pg.children[v]:
            depth[kid] = d + 1
        lines.append(f"{'  ' * d}{v}  w={pg.w[v]} F={pg.F[v]} t={pg.t[v]} c={pg.c[v]}")
    return "\n".join(lines)

"""Contraction plans: linear orders and general contraction trees.

A linear plan is a permutation of the node ids, contracted left to right
into one growing tensor. A tree plan is a full binary tree (nested pairs)
whose leaves are the node ids, each exactly once; every internal node is
one pairwise contraction.

File format::

    {"type": "linear", "order": ["T4", "T3", ...]}
    {"type": "tree", "root": [["T4", "T3"], ["T2", ["T5", "T1"]]]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

from .network import NodeId, TensorNetwork, ValidationError

TreeNode = Union[NodeId, tuple]

__all__ = [
    "ContractionPlan",
    "LinearPlan",
    "TreeNode",
    "TreePlan",
    "left_deep_tree",
    "parse_plan",
    "tree_leaves",
    "validate_plan",
]


@dataclass(frozen=True)
class LinearPlan:
    order: tuple[NodeId, ...]

    def to_json(self) -> str:
        return json.dumps({"type": "linear", "order": list(self.order)})


@dataclass(frozen=True)
class TreePlan:
    root: TreeNode

    def to_json(self) -> str:
        return json.dumps({"type": "tree", "root": _tree_to_obj(self.root)})


ContractionPlan = Union[LinearPlan, TreePlan]


def tree_leaves(node: TreeNode) -> tuple[NodeId, ...]:
    """Leaves of a nested-pair tree, left to right. Validates the shape:
    every internal node a pair, every leaf an id."""
    out: list[NodeId] = []
    stack = [node]
    while stack:
        item = stack.pop()
        if isinstance(item, tuple):
            if len(item) != 2:
                raise ValidationError(
                    f"tree node must be a pair, got {len(item)} children"
                )
            stack.append(item[1])
            stack.append(item[0])
        elif type(item) is int or type(item) is str:
            out.append(item)
        else:
            raise ValidationError(f"tree leaf must be a node id, got {item!r}")
    return tuple(out)


def left_deep_tree(order: tuple[NodeId, ...] | list[NodeId]) -> TreeNode:
    """The contraction tree equivalent to contracting ``order`` linearly."""
    if not order:
        raise ValidationError("cannot build a tree from an empty order")
    node: TreeNode = order[0]
    for v in order[1:]:
        node = (node, v)
    return node


def _tree_to_obj(node: TreeNode):
    if isinstance(node, tuple):
        return [_tree_to_obj(node[0]), _tree_to_obj(node[1])]
    return node


def _tree_from_obj(obj) -> TreeNode:
    if isinstance(obj, list):
        if len(obj) != 2:
            raise ValidationError(f"tree node must be a pair, got {obj!r}")
        return (_tree_from_obj(obj[0]), _tree_from_obj(obj[1]))
    if type(obj) is int or type(obj) is str:
        return obj
    raise ValidationError(f"tree leaf must be a node id, got {obj!r}")


def parse_plan(text: str) -> ContractionPlan:
    """Parse a plan file; raises ``ValidationError`` on malformed input."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"plan is not valid JSON: {exc}") from None
    if not isinstance(obj, dict) or "type" not in obj:
        raise ValidationError("plan file must be an object with a 'type' field")
    kind = obj["type"]
    if kind == "linear":
        order = obj.get("order")
        if not isinstance(order, list):
            raise ValidationError("linear plan must have an 'order' list")
        return LinearPlan(tuple(_check_leaf(v) for v in order))
    if kind == "tree":
        if "root" not in obj:
            raise ValidationError("tree plan must have a 'root' field")
        return TreePlan(_tree_from_obj(obj["root"]))
    raise ValidationError(f"unknown plan type {kind!r}")


def _check_leaf(v) -> NodeId:
    if type(v) is int or type(v) is str:
        return v
    raise ValidationError(f"plan node id must be an integer or string, got {v!r}")


def validate_plan(net: TensorNetwork, plan: ContractionPlan) -> None:
    """Check that the plan covers every network node exactly once."""
    if isinstance(plan, LinearPlan):
        seq = plan.order
    elif isinstance(plan, TreePlan):
        seq = tree_leaves(plan.root)
    else:
        raise ValidationError(f"not a contraction plan: {plan!r}")
    seen: set[NodeId] = set()
    for v in seq:
        if v not in net.open_mult:
            raise ValidationError(f"plan references unknown node id {v!r}")
        if v in seen:
            raise ValidationError(f"plan lists node {v!r} more than once")
        seen.add(v)
    if len(seen) != len(net.nodes):
        missing = next(v for v in net.nodes if v not in seen)
        raise ValidationError(f"plan is missing node {missing!r}")

"""Right- and left-strict binary search trees built by leaf insertion.

Trees are immutable: insertion copies the search path and shares every other
subtree. Traversals are iterative so that degenerate (path-shaped) trees from
long words do not hit the recursion limit.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple, Optional


class Node(NamedTuple):
    label: int
    left: Optional["Node"] = None
    right: Optional["Node"] = None


def _goes_left(strict: str, a: int, x: int) -> bool:
    # right-strict: a <= x goes left; left-strict: only a < x does
    return a <= x if strict == "right" else a < x


def _insert(root: Optional[Node], a: int, strict: str) -> Node:
    path = []
    node = root
    while node is not None:
        left = _goes_left(strict, a, node.label)
        path.append((node, left))
        node = node.left if left else node.right
    new = Node(a)
    for parent, left in reversed(path):
        new = parent._replace(left=new) if left else parent._replace(right=new)
    return new


@dataclass(frozen=True)
class BST:
    """Base for the two strict flavours; `root` is None for the empty tree."""

    root: Optional[Node] = None
    strict = ""

    def insert(self, a: int) -> "BST":
        return type(self)(_insert(self.root, a, self.strict))

    def __bool__(self):
        return self.root is not None

    def __len__(self):
        return sum(1 for _ in _nodes(self.root))

    def labels(self) -> Counter:
        return Counter(n.label for n in _nodes(self.root))

    def check_invariant(self) -> bool:
        """Full-traversal check of the strictness condition at every node."""
        for n in _nodes(self.root):
            below_left = [m.label for m in _nodes(n.left)]
            below_right = [m.label for m in _nodes(n.right)]
            if self.strict == "right":
                ok = all(b <= n.label for b in below_left) and all(b > n.label for b in below_right)
            else:
                ok = all(b < n.label for b in below_left) and all(b >= n.label for b in below_right)
            if not ok:
                return False
        return True


class RightStrictBST(BST):
    strict = "right"


class LeftStrictBST(BST):
    strict = "left"


def _nodes(root):
    stack = [root] if root is not None else []
    while stack:
        n = stack.pop()
        yield n
        if n.right is not None:
            stack.append(n.right)
        if n.left is not None:
            stack.append(n.left)


def insert_right(tree: RightStrictBST, a: int) -> RightStrictBST:
    return RightStrictBST(_insert(tree.root, a, "right"))


def insert_left(tree: LeftStrictBST, a: int) -> LeftStrictBST:
    return LeftStrictBST(_insert(tree.root, a, "left"))


def p_sylv(w) -> RightStrictBST:
    """Insert the letters of `w` right to left into an empty right-strict tree."""
    root = None
    for a in reversed(w):
        root = _insert(root, a, "right")
    return RightStrictBST(root)


def p_sylvh(w) -> LeftStrictBST:
    """Insert the letters of `w` left to right into an empty left-strict tree."""
    root = None
    for a in w:
        root = _insert(root, a, "left")
    return LeftStrictBST(root)


@dataclass(frozen=True)
class TwinPair:
    left_tree: LeftStrictBST
    right_tree: RightStrictBST

    def is_twin(self) -> bool:
        return is_twin(self.left_tree, self.right_tree)


def p_baxt(w) -> TwinPair:
    return TwinPair(p_sylvh(w), p_sylv(w))


def prefix(tree: BST) -> tuple:
    return tuple(n.label for n in _nodes(tree.root))


def infix(tree: BST) -> tuple:
    out, stack, node = [], [], tree.root
    while stack or node is not None:
        while node is not None:
            stack.append(node)
            node = node.left
        node = stack.pop()
        out.append(node.label)
        node = node.right
    return tuple(out)


def postfix(tree: BST) -> tuple:
    # reversed (node, right, left) order is (left, right, node)
    out, stack = [], [tree.root] if tree.root is not None else []
    while stack:
        n = stack.pop()
        out.append(n.label)
        if n.left is not None:
            stack.append(n.left)
        if n.right is not None:
            stack.append(n.right)
    return tuple(reversed(out))


_READINGS = {"prefix": prefix, "infix": infix, "postfix": postfix}


def reading(tree: BST, order: str = "postfix") -> tuple:
    try:
        return _READINGS[order](tree)
    except KeyError:
        raise ValueError(f"unknown reading order {order!r}") from None


def canopy(tree: BST) -> str:
    """Infix walk writing 1 at each empty left subtree and 0 at each empty
    right subtree, with the first and last symbols dropped."""
    if tree.root is None:
        return ""
    bits = []
    # stack items: a node still to expand, or a bit already decided
    stack = [tree.root]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            bits.append(item)
            continue
        stack.append(item.right if item.right is not None else "0")
        stack.append(item.left if item.left is not None else "1")
    return "".join(bits)[1:-1]


def is_twin(left_tree: LeftStrictBST, right_tree: RightStrictBST) -> bool:
    if left_tree.labels() != right_tree.labels():
        return False
    cl, cr = canopy(left_tree), canopy(right_tree)
    return len(cl) == len(cr) and all(p != q for p, q in zip(cl, cr))


def ancestors_of_topmost(tree: BST, a: int) -> tuple:
    """Labels on the path from the root down to the topmost node labelled `a`
    (root first, that node excluded)."""
    path, node = [], tree.root
    while node is not None:
        if node.label == a:
            return tuple(path)
        path.append(node.label)
        node = node.left if a < node.label else node.right
    raise ValueError(f"letter {a} does not occur in the tree")


def to_ascii(tree: BST, indent: int = 4) -> str:
    """Sideways drawing: right subtree above its parent, left below.
    A lone child gets a "·" sibling so the two one-child shapes differ."""
    if tree.root is None:
        return "ε"
    lines = []
    stack = [(tree.root, 0)]
    while stack:
        item, depth = stack.pop()
        if item is None:
            lines.append(" " * indent * depth + "·")
            continue
        if isinstance(item, str):
            lines.append(" " * indent * depth + item)
            continue
        has_child = item.left is not None or item.right is not None
        # pushed in reverse: right is printed first
        if has_child:
            stack.append((item.left, depth + 1))
        stack.append((str(item.label), depth))
        if has_child:
            stack.append((item.right, depth + 1))
    return "\n".join(lines)


def to_dot(tree: BST, name: str = "T") -> str:
    """Graphviz digraph; ids n0, n1, ... follow prefix order. A lone child
    gets an invisible point sibling so left and right stay apart."""
    lines = [f"digraph {name} {{", "  node [shape=circle];"]
    children = {}
    order = []
    stack = [(tree.root, None, None)] if tree.root is not None else []
    while stack:
        n, parent, side = stack.pop()
        nid = f"n{len(order)}"
        order.append((nid, n))
        if parent is not None:
            children[parent][side] = nid
        children[nid] = {}
        if n.right is not None:
            stack.append((n.right, nid, "right"))
        if n.left is not None:
            stack.append((n.left, nid, "left"))
    hidden = 0
    edges = []
    for nid, n in order:
        lines.append(f'  {nid} [label="{n.label}"];')
        kids = children[nid]
        if not kids:
            continue
        for side in ("left", "right"):
            if side in kids:
                edges.append(f"  {nid} -> {kids[side]};")
            else:
                pid = f"h{hidden}"
                hidden += 1
                lines.append(f"  {pid} [shape=point, style=invis];")
                edges.append(f"  {nid} -> {pid} [style=invis];")
    lines.extend(edges)
    lines.append("}")
    return "\n".join(lines)

"""Elements of sylv, sylv# and baxt as canonical forms, plus precedence tables.

Equality is decided two independent ways: by comparing insertion trees
(`equal`) and by comparing content together with right and/or left
precedences (`equal_via_precedences`).
"""

from __future__ import annotations

import bisect
import enum
import heapq
import itertools
from collections import Counter
from dataclasses import dataclass, field

from .bst import p_sylv, p_sylvh, postfix, prefix


class MonoidTag(str, enum.Enum):
    SYLV = "sylv"
    SYLVH = "sylvh"
    BAXT = "baxt"

    def __str__(self):
        return self.value


TAGS = tuple(MonoidTag)


def as_tag(tag) -> MonoidTag:
    try:
        return MonoidTag(tag)
    except ValueError:
        raise ValueError(f"unknown monoid {tag!r}; expected one of sylv, sylvh, baxt") from None


@dataclass(frozen=True)
class PrecedenceTable:
    """Right table: a -> (b, k) for a b-a right precedence of index k.
    Left table: b -> (a, k) for an a-b left precedence of index k."""

    side: str
    entries: tuple = ()

    def as_dict(self) -> dict:
        return {key: (partner, k) for key, partner, k in self.entries}

    def __len__(self):
        return len(self.entries)

    def lines(self) -> list:
        out = []
        for key, partner, k in self.entries:
            if self.side == "right":
                out.append(f"{partner}-{key} right precedence, index {k}")
            else:
                out.append(f"{partner}-{key} left precedence, index {k}")
        return out

    def to_json(self) -> dict:
        if self.side == "right":
            items = [{"greater": b, "smaller": a, "index": k} for a, b, k in self.entries]
        else:
            items = [{"smaller": a, "greater": b, "index": k} for b, a, k in self.entries]
        return {"side": self.side, "precedences": items}


def _scan_precedences(letters, side):
    # Nearest already-seen letter on the far side of the new letter (above it
    # for right tables, below it for left tables) is the only possible partner.
    seen_counts = Counter()
    seen_sorted = []
    entries = []
    for a in letters:
        if a not in seen_counts:
            if side == "right":
                i = bisect.bisect_right(seen_sorted, a)
                partner = seen_sorted[i] if i < len(seen_sorted) else None
            else:
                i = bisect.bisect_left(seen_sorted, a)
                partner = seen_sorted[i - 1] if i > 0 else None
            if partner is not None:
                entries.append((a, partner, seen_counts[partner]))
            bisect.insort(seen_sorted, a)
        seen_counts[a] += 1
    return PrecedenceTable(side, tuple(sorted(entries)))


def right_precedences(w) -> PrecedenceTable:
    return _scan_precedences(reversed(tuple(w)), "right")


def left_precedences(w) -> PrecedenceTable:
    return _scan_precedences(tuple(w), "left")


@dataclass(frozen=True)
class Element:
    """A monoid element. `canonical` is the postfix reading (sylv), the prefix
    reading (sylvh), or the pair (sylvh prefix, sylv postfix) for baxt.
    `rep` is some word of the class, used for multiplication."""

    tag: MonoidTag
    canonical: tuple
    rep: tuple = field(compare=False, default=())

    def __str__(self):
        from .words import format_word

        if self.tag is MonoidTag.BAXT:
            return f"({format_word(self.canonical[0])}, {format_word(self.canonical[1])})"
        return format_word(self.canonical)

    @property
    def content(self) -> Counter:
        return Counter(self.rep)


def canonical_form(tag, w) -> tuple:
    tag = as_tag(tag)
    if tag is MonoidTag.SYLV:
        return postfix(p_sylv(w))
    if tag is MonoidTag.SYLVH:
        return prefix(p_sylvh(w))
    return (prefix(p_sylvh(w)), postfix(p_sylv(w)))


def canonicalize(tag, w) -> Element:
    tag = as_tag(tag)
    canon = canonical_form(tag, w)
    rep = least_word(tag, w) if tag is MonoidTag.BAXT else canon
    return Element(tag, canon, rep)


def _tree_edges(w, right_strict: bool):
    """(parent, child) pairs of an insertion tree, with nodes named by
    occurrence (letter, index among that letter's occurrences from the left)."""
    seen = Counter()
    ids = []
    for a in w:
        ids.append((a, seen[a]))
        seen[a] += 1
    order = reversed(ids) if right_strict else ids
    left, right = {}, {}
    root = None
    edges = []
    for node in order:
        if root is None:
            root = node
            continue
        cur = root
        while True:
            a, x = node[0], cur[0]
            go_left = a <= x if right_strict else a < x
            side = left if go_left else right
            if cur in side:
                cur = side[cur]
            else:
                side[cur] = node
                edges.append((cur, node))
                break
    return ids, edges


def least_word(tag, w) -> tuple:
    """Lexicographically least word of the class of `w`.

    The words of a class are the linear extensions of its tree(s): in the
    right-strict tree descendants come first, in the left-strict tree
    ancestors come first. Taking the smallest available letter at each step
    gives the least extension.
    """
    tag = as_tag(tag)
    w = tuple(w)
    before = []  # (earlier, later)
    ids = None
    if tag in (MonoidTag.SYLV, MonoidTag.BAXT):
        ids, edges = _tree_edges(w, right_strict=True)
        before += [(child, parent) for parent, child in edges]
    if tag in (MonoidTag.SYLVH, MonoidTag.BAXT):
        ids, edges = _tree_edges(w, right_strict=False)
        before += edges
    waiting = Counter(later for _, later in before)
    after = {}
    for earlier, later in before:
        after.setdefault(earlier, []).append(later)
    heap = [node for node in ids if not waiting[node]]
    heapq.heapify(heap)
    out = []
    while heap:
        node = heapq.heappop(heap)
        out.append(node[0])
        for nxt in after.get(node, ()):
            waiting[nxt] -= 1
            if not waiting[nxt]:
                heapq.heappush(heap, nxt)
    return tuple(out)


def identity_element(tag) -> Element:
    return canonicalize(tag, ())


def equal(tag, u, v) -> bool:
    tag = as_tag(tag)
    u, v = tuple(u), tuple(v)
    if len(u) != len(v) or Counter(u) != Counter(v):
        return False
    if tag is MonoidTag.SYLV:
        return p_sylv(u) == p_sylv(v)
    if tag is MonoidTag.SYLVH:
        return p_sylvh(u) == p_sylvh(v)
    return p_sylv(u) == p_sylv(v) and p_sylvh(u) == p_sylvh(v)


def equal_via_precedences(tag, u, v) -> bool:
    tag = as_tag(tag)
    if Counter(u) != Counter(v):
        return False
    if tag in (MonoidTag.SYLV, MonoidTag.BAXT) and right_precedences(u) != right_precedences(v):
        return False
    if tag in (MonoidTag.SYLVH, MonoidTag.BAXT) and left_precedences(u) != left_precedences(v):
        return False
    return True


def multiply(tag, e1: Element, e2: Element) -> Element:
    tag = as_tag(tag)
    if e1.tag is not tag or e2.tag is not tag:
        raise ValueError(f"cannot multiply {e1.tag} and {e2.tag} elements in {tag}")
    return canonicalize(tag, e1.rep + e2.rep)


def _words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet, repeat=n)


def defining_relations(tag, rank: int, max_inner: int):
    """Yield (lhs, rhs) for every defining relation over letters 1..rank whose
    inner word(s) have length <= max_inner."""
    tag = as_tag(tag)
    letters = range(1, rank + 1)
    inner = list(_words(letters, max_inner))
    if tag is MonoidTag.SYLV:
        # caub ~ acub, a <= b < c
        for a, b, c in itertools.product(letters, repeat=3):
            if a <= b < c:
                for u in inner:
                    yield (c, a) + u + (b,), (a, c) + u + (b,)
    elif tag is MonoidTag.SYLVH:
        # buac ~ buca, a < b <= c
        for a, b, c in itertools.product(letters, repeat=3):
            if a < b <= c:
                for u in inner:
                    yield (b,) + u + (a, c), (b,) + u + (c, a)
    else:
        for a, b, c, d in itertools.product(letters, repeat=4):
            for u, v in itertools.product(inner, repeat=2):
                # cudavb ~ cuadvb, a <= b < c <= d
                if a <= b < c <= d:
                    yield (c,) + u + (d, a) + v + (b,), (c,) + u + (a, d) + v + (b,)
                # budavc ~ buadvc, a < b <= c < d
                if a < b <= c < d:
                    yield (b,) + u + (d, a) + v + (c,), (b,) + u + (a, d) + v + (c,)

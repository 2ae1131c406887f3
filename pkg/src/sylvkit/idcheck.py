"""Deciding whether sylv, sylv# or baxt satisfies an identity u = v.

Three deciders that must always agree:

* `check_id`: one pass over both sides in lockstep (right to left for sylv,
  left to right for sylv#, both for baxt), keeping running contents of the
  parts already read and requiring every variable to show up for the first
  time at the same position on both sides, with equal contents read so far.
* `check_id_pairwise`: compares the occurrence counters for every ordered
  pair of variables.
* `check_first_occurrence`: compares the contents of the longest x-free
  suffixes (prefixes) for every variable x.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

from .congruence import MonoidTag, as_tag
from .words import Identity

RIGHT_TO_LEFT = "right_to_left"
LEFT_TO_RIGHT = "left_to_right"

_DIRECTIONS = {
    MonoidTag.SYLV: (RIGHT_TO_LEFT,),
    MonoidTag.SYLVH: (LEFT_TO_RIGHT,),
    MonoidTag.BAXT: (RIGHT_TO_LEFT, LEFT_TO_RIGHT),
}


def counter_name(target, counted, direction) -> str:
    if direction == RIGHT_TO_LEFT:
        return f"o_{{{target}←{counted}}}"
    return f"o_{{{counted}→{target}}}"


@dataclass(frozen=True)
class CheckVerdict:
    satisfied: bool
    witness: Optional[str] = None
    details: dict = field(default_factory=dict, compare=False)

    def __bool__(self):
        return self.satisfied

    def render(self) -> str:
        return "SAT" if self.satisfied else f"UNSAT (witness: {self.witness})"

    def to_json(self) -> dict:
        doc = {"satisfied": self.satisfied, "witness": self.witness}
        doc.update(self.details)
        return doc


SAT = CheckVerdict(True)


def _unbalanced(identity):
    return CheckVerdict(False, "unbalanced", {"reason": "unbalanced"})


def _counter_failure(target, counted, direction, on_lhs, on_rhs):
    return CheckVerdict(
        False,
        f"{counter_name(target, counted, direction)}: {on_lhs} ≠ {on_rhs}",
        {
            "reason": "counter",
            "target": target,
            "counted": counted,
            "direction": direction,
            "lhs": on_lhs,
            "rhs": on_rhs,
        },
    )


def occ_before_first(u, target, counted, direction=RIGHT_TO_LEFT) -> int:
    """Occurrences of `counted` read before the first `target`, scanning `u`
    in `direction`."""
    u = tuple(u)
    try:
        if direction == RIGHT_TO_LEFT:
            pos = len(u) - 1 - u[::-1].index(target)
            return u[pos + 1:].count(counted)
        if direction == LEFT_TO_RIGHT:
            return u[: u.index(target)].count(counted)
    except ValueError:
        raise ValueError(f"variable {target!r} does not occur in the word") from None
    raise ValueError(f"unknown direction {direction!r}")


def _scan(u, v, direction, stats=None):
    """Lockstep scan; returns None when every first occurrence lines up."""
    if direction == LEFT_TO_RIGHT:
        pairs = zip(u, v)
    else:
        pairs = zip(reversed(u), reversed(v))
    read_u, read_v = Counter(), Counter()
    seen = set()
    # number of variables whose tallies currently differ between the sides
    mismatched = 0
    visits = 0
    for p, q in pairs:
        visits += 1
        new_p, new_q = p not in seen, q not in seen
        if new_p or new_q:
            if p != q or mismatched:
                if stats is not None:
                    stats["visits"] = stats.get("visits", 0) + visits
                return p if new_p else q, read_u, read_v
            seen.add(p)
        if p == q:
            read_u[p] += 1
            read_v[p] += 1
            continue
        was = read_u[p] == read_v[p]
        read_u[p] += 1
        mismatched += was - (read_u[p] == read_v[p])
        was = read_u[q] == read_v[q]
        read_v[q] += 1
        mismatched += was - (read_u[q] == read_v[q])
    if stats is not None:
        stats["visits"] = stats.get("visits", 0) + visits
    return None


def _free_part(w, x, direction) -> tuple:
    """Longest x-free suffix (right_to_left) or prefix (left_to_right) of w."""
    if direction == RIGHT_TO_LEFT:
        return w[len(w) - w[::-1].index(x):]
    return w[: w.index(x)]


def _witness_for(x, u, v, direction):
    cu = Counter(_free_part(u, x, direction))
    cv = Counter(_free_part(v, x, direction))
    y = min(a for a in set(cu) | set(cv) if cu[a] != cv[a])
    return _counter_failure(x, y, direction, cu[y], cv[y])


def check_id(tag, identity: Identity, stats: Optional[dict] = None) -> CheckVerdict:
    tag = as_tag(tag)
    u, v = identity.lhs, identity.rhs
    if len(u) != len(v) or Counter(u) != Counter(v):
        return _unbalanced(identity)
    for direction in _DIRECTIONS[tag]:
        failed = _scan(u, v, direction, stats)
        if failed is not None:
            return _witness_for(failed[0], u, v, direction)
    return SAT


def check_id_pairwise(tag, identity: Identity) -> CheckVerdict:
    tag = as_tag(tag)
    u, v = identity.lhs, identity.rhs
    if Counter(u) != Counter(v):
        return _unbalanced(identity)
    variables = identity.support
    for x in variables:
        for y in variables:
            if x == y:
                continue
            for direction in _DIRECTIONS[tag]:
                a = occ_before_first(u, x, y, direction)
                b = occ_before_first(v, x, y, direction)
                if a != b:
                    return _counter_failure(x, y, direction, a, b)
    return SAT


def check_first_occurrence(tag, identity: Identity) -> CheckVerdict:
    tag = as_tag(tag)
    u, v = identity.lhs, identity.rhs
    if Counter(u) != Counter(v):
        return _unbalanced(identity)
    for x in identity.support:
        for direction in _DIRECTIONS[tag]:
            fu, fv = _free_part(u, x, direction), _free_part(v, x, direction)
            if Counter(fu) != Counter(fv):
                side = "suffixes" if direction == RIGHT_TO_LEFT else "prefixes"
                return CheckVerdict(
                    False,
                    f"longest {x}-free {side} differ in content",
                    {"reason": "first_occurrence", "variable": x, "direction": direction},
                )
    return SAT

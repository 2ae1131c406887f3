"""Equational derivations from the finite bases of sylv, sylv# and baxt.

A derivation rewrites the left side of an identity into the right side, one
substitution instance of a basis identity at a time, placed inside a left
and right context. Steps carry their contexts and substitution explicitly,
so checking a derivation needs no search.

Every step produced here swaps two adjacent distinct variables p, q. With
p and q mapped to single variables, the basis identities allow:

* (L): pq -> qp when both p and q occur to the right of the pair;
* (R): pq -> qp when both occur to the left of the pair;
* (O), (E): pq -> qp when both occur on each side of the pair. The relative
  order of the flanking occurrences picks the direction and which of the
  two identities applies.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .congruence import MonoidTag, as_tag
from .idcheck import check_id
from .words import Identity, format_variable_word, parse_variable_word

BASES = {
    "L": (tuple("xyzxty"), tuple("yxzxty")),
    "R": (tuple("xzytxy"), tuple("xzytyx")),
    "O": (tuple("xzytxyrxsy"), tuple("xzytyxrxsy")),
    "E": (tuple("xzytxyrysx"), tuple("xzytyxrysx")),
}

TAG_BASIS = {
    MonoidTag.SYLV: ("L",),
    MonoidTag.SYLVH: ("R",),
    MonoidTag.BAXT: ("O", "E"),
}

FORWARD, BACKWARD = "forward", "backward"


class BudgetExceeded(RuntimeError):
    """No derivation found within the step budget (not a refutation)."""


def pattern_variables(basis: str) -> tuple:
    seen = []
    for x in BASES[basis][0]:
        if x not in seen:
            seen.append(x)
    return tuple(seen)


def _apply_sigma(pattern, sigma: dict) -> tuple:
    out = []
    for x in pattern:
        out.extend(sigma[x])
    return tuple(out)


@dataclass(frozen=True)
class RewriteStep:
    basis: str
    direction: str
    left_context: tuple
    substitution: tuple  # ((pattern variable, word), ...) in pattern order
    right_context: tuple

    @property
    def sigma(self) -> dict:
        return dict(self.substitution)

    def patterns(self):
        lhs, rhs = BASES[self.basis]
        return (lhs, rhs) if self.direction == FORWARD else (rhs, lhs)

    def source(self) -> tuple:
        return self.left_context + _apply_sigma(self.patterns()[0], self.sigma) + self.right_context

    def target(self) -> tuple:
        return self.left_context + _apply_sigma(self.patterns()[1], self.sigma) + self.right_context

    def render(self) -> str:
        sigma = ", ".join(f"{x}→{format_variable_word(w)}" for x, w in self.substitution)
        return (
            f"[{self.basis}] [{self.direction}] ctxL='{''.join(self.left_context)}' "
            f"σ={{{sigma}}} ctxR='{''.join(self.right_context)}' ⇒ {format_variable_word(self.target())}"
        )

    def to_json(self) -> dict:
        return {
            "basis": self.basis,
            "direction": self.direction,
            "left_context": "".join(self.left_context),
            "substitution": {x: "".join(w) for x, w in self.substitution},
            "right_context": "".join(self.right_context),
            "result": "".join(self.target()),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "RewriteStep":
        basis = doc["basis"]
        sub = doc["substitution"]
        return cls(
            basis,
            doc["direction"],
            parse_variable_word(doc["left_context"]),
            tuple((x, parse_variable_word(sub.get(x, ""))) for x in pattern_variables(basis)),
            parse_variable_word(doc["right_context"]),
        )


def make_step(basis, direction, left_context, sigma: dict, right_context) -> RewriteStep:
    if basis not in BASES:
        raise ValueError(f"unknown basis identity {basis!r}")
    if direction not in (FORWARD, BACKWARD):
        raise ValueError(f"unknown direction {direction!r}")
    names = pattern_variables(basis)
    if set(sigma) != set(names):
        raise ValueError(f"substitution must cover exactly {''.join(names)}")
    return RewriteStep(
        basis,
        direction,
        tuple(left_context),
        tuple((x, tuple(sigma[x])) for x in names),
        tuple(right_context),
    )


def apply_instance(w, step: RewriteStep) -> tuple:
    """Rewrite `w` by `step`; `w` must factor exactly as the step states."""
    if set(step.sigma) != set(pattern_variables(step.basis)):
        raise ValueError("substitution does not match the basis identity's variables")
    if all(len(img) == 0 for img in step.sigma.values()):
        raise ValueError("all-empty substitution is a no-op")
    if tuple(w) != step.source():
        raise ValueError(
            f"factorization mismatch: step expects {format_variable_word(step.source())}, "
            f"got {format_variable_word(tuple(w))}"
        )
    return step.target()


def _forward_order(seq, p, q):
    """In `seq`, the first occurrence of p or q and the first occurrence of the
    other letter after it, as (first, second) indices; None if either is missing."""
    for j, a in enumerate(seq):
        if a == p or a == q:
            other = q if a == p else p
            for k in range(j + 1, len(seq)):
                if seq[k] == other:
                    return j, k
            return None
    return None


def _backward_order(seq, p, q):
    """Rightmost occurrence of p or q and the rightmost earlier occurrence
    of the other letter, as (first, second) indices."""
    for k in range(len(seq) - 1, -1, -1):
        a = seq[k]
        if a == p or a == q:
            other = q if a == p else p
            for j in range(k - 1, -1, -1):
                if seq[j] == other:
                    return j, k
            return None
    return None


def swap_step(w, i: int, tag) -> Optional[RewriteStep]:
    """A basis instance turning w[i] w[i+1] into w[i+1] w[i], or None."""
    tag = as_tag(tag)
    w = tuple(w)
    p, q = w[i], w[i + 1]
    if p == q:
        return None
    if tag is MonoidTag.SYLV:
        found = _forward_order(w[i + 2:], p, q)
        if found is None:
            return None
        j, k = (i + 2 + n for n in found)
        # forward: p q z p t q ; backward: p q z q t p (pattern y x z x t y)
        if w[j] == p:
            sx, sy, direction = p, q, FORWARD
        else:
            sx, sy, direction = q, p, BACKWARD
        sigma = {"x": (sx,), "y": (sy,), "z": w[i + 2:j], "t": w[j + 1:k]}
        return make_step("L", direction, w[:i], sigma, w[k + 1:])
    if tag is MonoidTag.SYLVH:
        found = _backward_order(w[:i], p, q)
        if found is None:
            return None
        j, k = found
        # forward: p z q t p q ; backward: q z p t p q (pattern x z y t y x)
        if w[j] == p:
            sx, sy, direction = p, q, FORWARD
        else:
            sx, sy, direction = q, p, BACKWARD
        sigma = {"x": (sx,), "z": w[j + 1:k], "y": (sy,), "t": w[k + 1:i]}
        return make_step("R", direction, w[:j], sigma, w[i + 2:])
    before = _backward_order(w[:i], p, q)
    after = _forward_order(w[i + 2:], p, q)
    if before is None or after is None:
        return None
    j, k = before
    j2, k2 = (i + 2 + n for n in after)
    if w[j] == p:
        # x = p, y = q; O wants x..y after the pair, E wants y..x
        sx, sy, direction = p, q, FORWARD
    else:
        sx, sy, direction = q, p, BACKWARD
    basis = "O" if w[j2] == sx else "E"
    sigma = {
        "x": (sx,),
        "z": w[j + 1:k],
        "y": (sy,),
        "t": w[k + 1:i],
        "r": w[i + 2:j2],
        "s": w[j2 + 1:k2],
    }
    return make_step(basis, direction, w[:j], sigma, w[k2 + 1:])


@dataclass(frozen=True)
class Derivation:
    start: tuple
    steps: tuple = ()
    # step counts after which a guided macro-step finished
    milestones: tuple = field(default=(), compare=False)
    strategy: str = field(default="guided", compare=False)

    def words(self) -> list:
        out = [self.start]
        for step in self.steps:
            out.append(apply_instance(out[-1], step))
        return out

    @property
    def end(self) -> tuple:
        return self.words()[-1]

    def __len__(self):
        return len(self.steps)

    def lines(self) -> list:
        return [format_variable_word(self.start)] + [s.render() for s in self.steps]

    def to_json(self) -> dict:
        return {
            "start": "".join(self.start),
            "strategy": self.strategy,
            "steps": [s.to_json() for s in self.steps],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), ensure_ascii=False, indent=2)

    @classmethod
    def from_json(cls, doc: dict) -> "Derivation":
        return cls(
            parse_variable_word(doc["start"]),
            tuple(RewriteStep.from_json(s) for s in doc["steps"]),
            strategy=doc.get("strategy", "guided"),
        )


def default_budget(tag, identity: Identity) -> int:
    tag = as_tag(tag)
    factor = 16 if tag is MonoidTag.BAXT else 4
    return factor * max(len(identity.lhs), 1)


def _common_suffix(a, b) -> int:
    n = 0
    while n < len(a) and n < len(b) and a[-1 - n] == b[-1 - n]:
        n += 1
    return n


def _common_prefix(a, b) -> int:
    n = 0
    while n < len(a) and n < len(b) and a[n] == b[n]:
        n += 1
    return n


class _Stuck(Exception):
    pass


def _guided(tag, lhs, rhs, budget):
    w, steps, milestones = lhs, [], []
    while w != rhs:
        if tag is MonoidTag.SYLVH:
            idx = _common_prefix(w, rhs)
            target = rhs[idx]
            pos = w.index(target, idx + 1)
            moves = [(k - 1) for k in range(pos, idx, -1)]
        else:
            idx = len(w) - 1 - _common_suffix(w, rhs)
            target = rhs[idx]
            pos = len(w[:idx]) - 1 - w[:idx][::-1].index(target)
            moves = list(range(pos, idx))
        for i in moves:
            step = swap_step(w, i, tag)
            if step is None or len(steps) >= budget:
                raise _Stuck
            w = apply_instance(w, step)
            steps.append(step)
        milestones.append(len(steps))
    return steps, milestones


def _breadth_first(tag, lhs, rhs, budget, max_nodes=200_000):
    parent = {lhs: None}
    depth = {lhs: 0}
    queue = deque([lhs])
    while queue:
        w = queue.popleft()
        if w == rhs:
            steps = []
            while parent[w] is not None:
                prev, step = parent[w]
                steps.append(step)
                w = prev
            return steps[::-1]
        if depth[w] >= budget:
            continue
        for i in range(len(w) - 1):
            step = swap_step(w, i, tag)
            if step is None:
                continue
            nxt = step.target()
            if nxt not in parent:
                parent[nxt] = (w, step)
                depth[nxt] = depth[w] + 1
                if len(parent) > max_nodes:
                    return None
                queue.append(nxt)
    return None


def derive(
    tag, identity: Identity, budget: Optional[int] = None, strategy: str = "auto"
) -> Optional[Derivation]:
    """Derivation of rhs from lhs using only the tag's basis, or None when
    the monoid does not satisfy the identity.

    strategy: "auto" (guided, then breadth-first), "guided" or "breadth-first".
    """
    tag = as_tag(tag)
    if strategy not in ("auto", "guided", "breadth-first"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if not check_id(tag, identity):
        return None
    if budget is None:
        budget = default_budget(tag, identity)
    lhs, rhs = identity.lhs, identity.rhs
    if strategy != "breadth-first":
        try:
            steps, milestones = _guided(tag, lhs, rhs, budget)
            return Derivation(lhs, tuple(steps), tuple(milestones), "guided")
        except _Stuck:
            if strategy == "guided":
                raise BudgetExceeded(f"guided strategy stuck on {identity} within {budget} steps")
    steps = _breadth_first(tag, lhs, rhs, budget)
    if steps is None:
        raise BudgetExceeded(f"no derivation of {identity} within {budget} steps")
    return Derivation(lhs, tuple(steps), (), "breadth-first")


def verify_derivation(tag, identity: Identity, d: Derivation) -> bool:
    tag = as_tag(tag)
    if tuple(d.start) != identity.lhs:
        return False
    w = identity.lhs
    allowed = TAG_BASIS[tag]
    for step in d.steps:
        if step.basis not in allowed:
            return False
        try:
            w = apply_instance(w, step)
        except ValueError:
            return False
    return w == identity.rhs

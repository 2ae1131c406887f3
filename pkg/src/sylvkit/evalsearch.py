"""Evaluating variable words in the monoids, refuting identities, and
exhaustive search for the shortest satisfied identities.

Satisfaction is decided by `idcheck.check_id`; evaluation here only ever
refutes. The refutation family tried first sends two variables to the
letters 1 and 2 and every other variable to the empty word.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .congruence import MonoidTag, as_tag, canonicalize, equal
from .idcheck import check_id
from .words import Identity

VARIABLE_NAMES = "xyztrs" + "".join(c for c in "abcdefghijklmnopquvw")
DEFAULT_MAX_CANDIDATES = 10**8


class BoundExceeded(ValueError):
    """An exhaustive search would examine too many candidate pairs."""


def evaluate(u, assignment: dict, tag):
    """Image of the variable word `u` under `assignment` (variable -> word)."""
    return canonicalize(tag, substitute(u, assignment))


def substitute(u, assignment: dict) -> tuple:
    out = []
    for x in u:
        try:
            out.extend(assignment[x])
        except KeyError:
            raise ValueError(f"variable {x!r} is not assigned") from None
    return tuple(out)


def theorem_assignments(variables) -> Iterator[dict]:
    """Assignments into {ε, 1, 2}: first the ordered pairs (x -> 1, y -> 2),
    then single variables (x -> 1), then everything else."""
    variables = tuple(variables)
    blank = {x: () for x in variables}
    tried = set()
    for x, y in itertools.permutations(variables, 2):
        yield {**blank, x: (1,), y: (2,)}
        tried.add(tuple((1,) if z == x else (2,) if z == y else () for z in variables))
    for x in variables:
        yield {**blank, x: (1,)}
        tried.add(tuple((1,) if z == x else () for z in variables))
    for images in itertools.product(((), (1,), (2,)), repeat=len(variables)):
        if images not in tried:
            yield dict(zip(variables, images))


def word_assignments(variables, rank: int, max_word_len: int) -> Iterator[dict]:
    """Every assignment of words over 1..rank of length <= max_word_len."""
    words = [
        w
        for n in range(max_word_len + 1)
        for w in itertools.product(range(1, rank + 1), repeat=n)
    ]
    variables = tuple(variables)
    for images in itertools.product(words, repeat=len(variables)):
        yield dict(zip(variables, images))


def refute(identity: Identity, tag, rank: int = 2, max_word_len: int = 0) -> Optional[dict]:
    """Search for an assignment separating the two sides.

    The {ε, 1, 2} family is always tried. With `max_word_len` > 0 the search
    continues over all words of that length bound over 1..rank.
    """
    tag = as_tag(tag)
    variables = identity.support
    families = [theorem_assignments(variables)]
    if max_word_len > 0:
        families.append(word_assignments(variables, rank, max_word_len))
    for psi in itertools.chain(*families):
        if not equal(tag, substitute(identity.lhs, psi), substitute(identity.rhs, psi)):
            return psi
    return None


def _renamed(u, v):
    names = {}
    for x in u + v:
        if x not in names:
            names[x] = len(names)
    return tuple(names[x] for x in u), tuple(names[x] for x in v)


def canonical_key(identity: Identity) -> tuple:
    """Equivalence-class key: rename variables 0, 1, ... by first appearance
    in the left side, for both orientations, and keep the smaller pair."""
    return min(_renamed(identity.lhs, identity.rhs), _renamed(identity.rhs, identity.lhs))


def from_indices(u, v) -> Identity:
    return Identity(tuple(VARIABLE_NAMES[i] for i in u), tuple(VARIABLE_NAMES[i] for i in v))


def canonical_identity(identity: Identity) -> Identity:
    return from_indices(*canonical_key(identity))


def _first_appearance_words(n_vars, length):
    """Words over 0..n_vars-1 using every index, where index i first appears
    after index i-1; produced in lexicographic order."""

    def grow(prefix, used):
        remaining = length - len(prefix)
        if remaining == 0:
            if used == n_vars:
                yield tuple(prefix)
            return
        if n_vars - used > remaining:
            return
        for i in range(min(used + 1, n_vars)):
            prefix.append(i)
            yield from grow(prefix, max(used, i + 1))
            prefix.pop()

    return grow([], 0)


def _distinct_permutations(w):
    """Distinct rearrangements of `w` in lexicographic order."""
    a = sorted(w)
    n = len(a)
    while True:
        yield tuple(a)
        i = n - 2
        while i >= 0 and a[i] >= a[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while a[j] <= a[i]:
            j -= 1
        a[i], a[j] = a[j], a[i]
        a[i + 1:] = reversed(a[i + 1:])


def _classes_for_lhs(lhs):
    for rhs in _distinct_permutations(lhs):
        if rhs == lhs:
            continue
        if (lhs, rhs) <= _renamed(rhs, lhs):
            yield lhs, rhs


def enumerate_identities(n_vars: int, max_len: int, min_len: int = 2) -> Iterator[Identity]:
    """Non-trivial balanced identities with exactly `n_vars` variables, one
    per equivalence class, ordered by length and then lexicographically."""
    for length in range(max(min_len, n_vars, 2), max_len + 1):
        for lhs in _first_appearance_words(n_vars, length):
            for pair in _classes_for_lhs(lhs):
                yield from_indices(*pair)


def max_candidates() -> int:
    raw = os.environ.get("SYLVKIT_MAX_CANDIDATES")
    return int(raw) if raw else DEFAULT_MAX_CANDIDATES


def candidate_bound(n_vars: int, max_len: int) -> int:
    return (n_vars ** max_len) ** 2


@dataclass
class SearchReport:
    monoid: MonoidTag
    n_vars: int
    max_len: int
    minimal_length: Optional[int]
    identities: list = field(default_factory=list)
    candidates_examined: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {
            "monoid": str(self.monoid),
            "n_vars": self.n_vars,
            "max_len": self.max_len,
            "minimal_length": self.minimal_length,
            "identities": [str(i) for i in self.identities],
            "candidates_examined": self.candidates_examined,
            "elapsed": round(self.elapsed, 6),
        }

    def lines(self) -> list:
        if self.minimal_length is None:
            return [f"{self.monoid}: no identity with {self.n_vars} variables of length <= {self.max_len}"]
        head = (
            f"{self.monoid}: shortest identities with {self.n_vars} variables "
            f"have length {self.minimal_length} ({len(self.identities)} up to equivalence)"
        )
        return [head] + [str(i) for i in self.identities]


def _check_block(args):
    tag, lhs_block = args
    examined, found = 0, []
    for lhs in lhs_block:
        for pair in _classes_for_lhs(lhs):
            examined += 1
            if check_id(tag, from_indices(*pair)):
                found.append(pair)
    return examined, found


def shortest_identities(tag, n_vars: int, max_len: int, jobs: int = 1) -> SearchReport:
    tag = as_tag(tag)
    if n_vars < 1 or max_len < 2:
        raise ValueError("need n_vars >= 1 and max_len >= 2")
    bound = candidate_bound(n_vars, max_len)
    if bound > max_candidates():
        raise BoundExceeded(
            f"{n_vars} variables up to length {max_len} means ~{bound:.3g} candidate pairs "
            f"(limit {max_candidates():.3g}; raise SYLVKIT_MAX_CANDIDATES to allow)"
        )
    start = time.perf_counter()
    report = SearchReport(tag, n_vars, max_len, None)
    pool = ProcessPoolExecutor(jobs) if jobs > 1 else None
    try:
        for length in range(max(n_vars, 2), max_len + 1):
            lhs_words = list(_first_appearance_words(n_vars, length))
            if pool is None:
                results = [_check_block((tag, lhs_words))]
            else:
                blocks = [lhs_words[i::jobs] for i in range(jobs)]
                results = list(pool.map(_check_block, [(tag, b) for b in blocks]))
            found = []
            for examined, pairs in results:
                report.candidates_examined += examined
                found.extend(pairs)
            if found:
                report.minimal_length = length
                report.identities = [from_indices(*p) for p in sorted(found)]
                break
    finally:
        if pool is not None:
            pool.shutdown()
    report.elapsed = time.perf_counter() - start
    return report

"""Rank-2 component maps and exhaustive checks of the product embeddings.

For i < j the map sends i -> 1, j -> 2, every a with i < a < j -> 21 and
erases all other letters; the image is taken in the rank-2 monoid named by
the tag. Collecting the maps over all pairs 1 <= i < j <= n gives a vector
that is a homomorphism and separates classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .congruence import Element, as_tag, canonicalize, equal, multiply
from .evalsearch import BoundExceeded, max_candidates


def phi_word(w, i: int, j: int) -> tuple:
    if not i < j:
        raise ValueError(f"need i < j, got ({i}, {j})")
    out = []
    for a in w:
        if a == i:
            out.append(1)
        elif a == j:
            out.append(2)
        elif i < a < j:
            out.extend((2, 1))
    return tuple(out)


def phi(w, pair, tag) -> Element:
    i, j = pair
    return canonicalize(tag, phi_word(w, i, j))


def pair_indices(n: int):
    return list(itertools.combinations(range(1, n + 1), 2))


@dataclass(frozen=True)
class PhiVector:
    rank: int
    components: tuple  # ((i, j), Element) in lexicographic order of (i, j)

    def __getitem__(self, pair) -> Element:
        return dict(self.components)[tuple(pair)]

    def key(self) -> tuple:
        return tuple(e.canonical for _, e in self.components)

    def lines(self) -> list:
        return [f"({i},{j}): {e}" for (i, j), e in self.components]


def phi_vector(w, n: int, tag) -> PhiVector:
    if any(a > n for a in w):
        raise ValueError(f"word uses letters above rank {n}")
    tag = as_tag(tag)
    return PhiVector(n, tuple((p, phi(w, p, tag)) for p in pair_indices(n)))


@dataclass
class EmbeddingReport:
    rank: int
    max_len: int
    tag: str
    words: int = 0
    pairs_checked: int = 0
    violation: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.violation is None

    def lines(self) -> list:
        status = "PASS" if self.passed else "FAIL"
        out = [
            f"embedding {self.tag} rank {self.rank}, words up to length {self.max_len}: {status}",
            f"  words: {self.words}, word pairs checked: {self.pairs_checked}",
        ]
        if self.violation:
            out.append(f"  first violation: {self.violation}")
        return out

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "max_len": self.max_len,
            "monoid": self.tag,
            "words": self.words,
            "pairs_checked": self.pairs_checked,
            "passed": self.passed,
            "violation": self.violation,
        }


def verify_embedding(n: int, max_len: int, tag) -> EmbeddingReport:
    """Check, over all words of length <= max_len on letters 1..n, that the
    component maps are multiplicative and that the vector separates exactly
    the classes of the monoid. Stops at the first violation."""
    tag = as_tag(tag)
    words = [w for k in range(max_len + 1) for w in itertools.product(range(1, n + 1), repeat=k)]
    if len(words) ** 2 > max_candidates():
        raise BoundExceeded(f"{len(words)} words give too many pairs to check")
    report = EmbeddingReport(n, max_len, str(tag), words=len(words))
    pairs = pair_indices(n)
    images = {w: {p: phi(w, p, tag) for p in pairs} for w in words}

    for u, v in itertools.product(words, repeat=2):
        report.pairs_checked += 1
        for p in pairs:
            direct = phi(u + v, p, tag)
            product = multiply(tag, images[u][p], images[v][p])
            if direct != product:
                report.violation = {
                    "kind": "homomorphism",
                    "u": u,
                    "v": v,
                    "pair": p,
                    "phi(uv)": str(direct),
                    "phi(u)phi(v)": str(product),
                }
                return report

    # the vector must induce the same partition of `words` as the congruence
    by_vector = {}
    for w in words:
        key = tuple(images[w][p].canonical for p in pairs)
        rep = by_vector.setdefault(key, w)
        if not equal(tag, rep, w):
            report.violation = {"kind": "injectivity", "u": rep, "v": w, "detail": "same vector, different classes"}
            return report
    by_class = {}
    for w in words:
        cls = canonicalize(tag, w).canonical
        rep = by_class.setdefault(cls, w)
        if images[rep] != images[w]:
            report.violation = {"kind": "well-defined", "u": rep, "v": w, "detail": "same class, different vectors"}
            return report
    return report

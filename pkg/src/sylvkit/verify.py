"""Exhaustive property sweeps shared by the CLI `verify` command and the
acceptance tests. Each returns a SuiteResult; none of them raise on a
failed property."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field

from .bst import is_twin, p_baxt
from .congruence import TAGS, defining_relations, equal, equal_via_precedences
from .embed import verify_embedding
from .idcheck import check_id
from .words import Identity


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures, {self.elapsed:.2f}s"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": [str(f) for f in self.failures[:20]],
            "elapsed": round(self.elapsed, 6),
        }


def all_words(rank: int, max_len: int):
    return [w for n in range(max_len + 1) for w in itertools.product(range(1, rank + 1), repeat=n)]


def _timed(fn):
    def run(*args, **kwargs):
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.elapsed = time.perf_counter() - start
        return result

    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


@_timed
def relations(rank: int = 4, max_inner: int = 2, baxt_inner: int = 1) -> SuiteResult:
    """Both sides of every defining relation are equal in their monoid."""
    res = SuiteResult(f"defining relations (rank {rank})")
    for tag in TAGS:
        inner = baxt_inner if tag.value == "baxt" else max_inner
        for lhs, rhs in defining_relations(tag, rank, inner):
            res.checked += 1
            if not equal(tag, lhs, rhs):
                res.failures.append((str(tag), lhs, rhs))
    return res


@_timed
def characterization(rank: int = 3, max_len: int = 5) -> SuiteResult:
    """Tree equality agrees with content-and-precedence equality."""
    res = SuiteResult(f"tree vs precedence equality (rank {rank}, length <= {max_len})")
    words = all_words(rank, max_len)
    for tag in TAGS:
        for u, v in itertools.product(words, repeat=2):
            res.checked += 1
            if equal(tag, u, v) != equal_via_precedences(tag, u, v):
                res.failures.append((str(tag), u, v))
    return res


@_timed
def twins(rank: int = 3, max_len: int = 6) -> SuiteResult:
    res = SuiteResult(f"twin pairs (rank {rank}, length <= {max_len})")
    for w in all_words(rank, max_len):
        res.checked += 1
        pair = p_baxt(w)
        if not is_twin(pair.left_tree, pair.right_tree):
            res.failures.append(w)
    return res


@_timed
def embedding(cases=((2, 4), (3, 4))) -> SuiteResult:
    res = SuiteResult("rank-2 embeddings " + ", ".join(f"(n={n}, len<={m})" for n, m in cases))
    for tag in TAGS:
        for n, m in cases:
            report = verify_embedding(n, m, tag)
            res.checked += report.pairs_checked
            if not report.passed:
                res.failures.append((str(tag), n, m, report.violation))
    return res


IDENTITY_TABLE = [
    ("sylv", "xyzxty = yxzxty", True),
    ("sylv", "xzxytx = xzyxtx", False),
    ("sylv", "xzytxy = xzytyx", False),
    ("sylv", "xyxy = yxxy", True),
    ("sylvh", "xzytxy = xzytyx", True),
    ("sylvh", "xyzxty = yxzxty", False),
    ("sylvh", "xzxytx = xzyxtx", False),
    ("sylvh", "yxyx = yxxy", True),
    ("baxt", "xzytxyrxsy = xzytyxrxsy", True),
    ("baxt", "xzytxyrysx = xzytyxrysx", True),
    ("baxt", "yxxyxy = yxyxxy", True),
    ("baxt", "xyxyxy = xyyxxy", True),
]


@_timed
def identity_table() -> SuiteResult:
    res = SuiteResult("identity verdicts of the basis and shortest identities")
    for tag, text, expected in IDENTITY_TABLE:
        res.checked += 1
        if bool(check_id(tag, Identity.parse(text))) != expected:
            res.failures.append((tag, text, expected))
    return res


SUITES = {
    "relations": relations,
    "embedding": embedding,
    "characterization": characterization,
    "twins": twins,
    "identities": identity_table,
}

import itertools

import pytest

from sylvkit.congruence import canonicalize, equal
from sylvkit.embed import pair_indices, phi, phi_vector, phi_word, verify_embedding
from sylvkit.evalsearch import BoundExceeded
from sylvkit.words import parse_word


def w(text):
    return parse_word(text)


def test_component_map():
    assert phi_word(w("3123"), 1, 3) == w("21212")
    assert phi(w("3123"), (1, 3), "sylv") == canonicalize("sylv", w("21212"))
    assert phi(w("312"), (1, 3), "sylv") == phi(w("132"), (1, 3), "sylv")
    assert phi(w("312"), (1, 3), "sylv").canonical == w("1221")
    assert phi_word(w("4132"), 2, 3) == w("21")
    with pytest.raises(ValueError):
        phi_word(w("12"), 2, 2)


def test_vector_examples():
    assert phi_vector(w("211"), 2, "sylv") == phi_vector(w("121"), 2, "sylv")
    a, b = phi_vector(w("1223"), 3, "sylv"), phi_vector(w("2123"), 3, "sylv")
    assert a[(1, 2)] != b[(1, 2)]
    assert a[(1, 3)] == b[(1, 3)] and a[(2, 3)] == b[(2, 3)]
    assert a.lines()[0].startswith("(1,2): ")
    with pytest.raises(ValueError):
        phi_vector(w("14"), 3, "sylv")


def test_pair_indices():
    assert pair_indices(3) == [(1, 2), (1, 3), (2, 3)]
    assert pair_indices(1) == []


@pytest.mark.parametrize("tag", ["sylv", "sylvh", "baxt"])
def test_small_embeddings_pass(tag):
    report = verify_embedding(2, 3, tag)
    assert report.passed
    assert report.words == 15 and report.pairs_checked == 15 * 15
    assert report.to_json()["passed"] is True
    assert "PASS" in report.lines()[0]


@pytest.mark.parametrize("tag", ["sylv", "sylvh", "baxt"])
def test_vector_separates_exactly_the_classes(tag):
    # independent of verify_embedding: compare partitions directly
    ws = [u for n in range(5) for u in itertools.product((1, 2, 3), repeat=n)]
    for u, v in itertools.combinations(ws, 2):
        if len(u) == len(v):
            same_vec = phi_vector(u, 3, tag).key() == phi_vector(v, 3, tag).key()
            assert same_vec == equal(tag, u, v)


def test_embedding_guard(monkeypatch):
    monkeypatch.setenv("SYLVKIT_MAX_CANDIDATES", "10")
    with pytest.raises(BoundExceeded):
        verify_embedding(2, 3, "sylv")

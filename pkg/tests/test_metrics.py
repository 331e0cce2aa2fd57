import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localdepth.metrics import ari, ccr, ccr_match, summarize

from _oracles import brute_ari, brute_ccr

labelings = st.integers(2, 30).flatmap(
    lambda n: st.tuples(st.lists(st.integers(0, 3), min_size=n, max_size=n),
                        st.lists(st.integers(0, 3), min_size=n, max_size=n)))


def test_ccr_examples():
    t = [0, 0, 1, 1, 2, 2]
    assert ccr(t, t) == 1.0
    assert ccr(t, [2, 2, 0, 0, 1, 1]) == 1.0
    assert ccr([0, 0, 1, 1], [0, 1, 0, 1]) == 0.5


def test_ccr_length_mismatch():
    with pytest.raises(ValueError):
        ccr([0, 1], [0, 1, 1])
    with pytest.raises(ValueError):
        ari([0, 1], [0])


def test_ari_examples():
    assert ari([0, 0, 1, 1], [5, 5, 7, 7]) == 1.0
    assert ari(np.arange(6), np.zeros(6)) == 0.0
    assert ari([0, 0, 1, 1], [0, 1, 0, 1]) == pytest.approx(brute_ari([0, 0, 1, 1], [0, 1, 0, 1]))
    assert ari([0, 0, 1, 1], [0, 1, 0, 1]) == pytest.approx(-0.5)


def test_matched_permutation_attains_ccr():
    t = [0, 0, 0, 1, 1, 2, 2, 2]
    p = [1, 1, 0, 2, 2, 0, 0, 0]
    rate, mapping = ccr_match(t, p)
    hits = sum(mapping[b] == a for a, b in zip(t, p))
    assert rate == hits / len(t) == 7 / 8
    s = summarize(t, p)
    assert s.ccr == rate and s.matched_permutation == mapping


def test_more_predicted_than_true_labels():
    t = [0, 0, 0, 0]
    p = [0, 0, 1, 2]
    rate, mapping = ccr_match(t, p)
    assert rate == 0.5
    assert sum(v is None for v in mapping.values()) == 2


def test_large_alphabet_uses_assignment():
    rng = np.random.default_rng(0)
    t = rng.integers(0, 12, 500)
    p = (t + 3) % 12
    p[:50] = rng.integers(0, 12, 50)
    assert ccr(t, p) == pytest.approx(np.sum(t == (p - 3) % 12) / 500)


@given(labelings)
@settings(max_examples=200, deadline=None)
def test_ccr_matches_oracle(pair):
    t, p = pair
    assert ccr(t, p) == pytest.approx(brute_ccr(t, p))


@given(labelings)
@settings(max_examples=200, deadline=None)
def test_ari_matches_oracle(pair):
    t, p = pair
    assert ari(t, p) == pytest.approx(brute_ari(t, p), abs=1e-12)


@given(labelings, st.permutations(range(4)))
@settings(max_examples=100, deadline=None)
def test_relabeling_invariance(pair, sigma):
    t, p = pair
    q = [sigma[x] for x in p]
    assert ccr(t, q) == ccr(t, p)
    assert ari(t, q) == pytest.approx(ari(t, p), abs=1e-12)
    if len(set(t)) == len(set(p)):
        assert ccr(p, t) == ccr(t, p)


@given(labelings)
@settings(max_examples=100, deadline=None)
def test_ari_at_most_one(pair):
    t, p = pair
    a = ari(t, p)
    assert a <= 1.0 + 1e-12
    same = len(set(zip(t, p))) == len(set(t)) == len(set(p))
    assert (abs(a - 1.0) < 1e-12) == same or len(t) < 2


def test_ari_agrees_with_sklearn():
    metrics = pytest.importorskip("sklearn.metrics")
    rng = np.random.default_rng(1)
    for _ in range(20):
        t, p = rng.integers(0, 4, 80), rng.integers(0, 5, 80)
        assert ari(t, p) == pytest.approx(metrics.adjusted_rand_score(t, p), abs=1e-12)

import os
import random
import subprocess
import sys

import numpy as np
import pytest

from altlex_miner import similarity
from altlex_miner.corpus import compute_idf, tfidf_cosine
from altlex_miner.text import tokenize

VOCAB_WORDS = ["sun", "moon", "tide", "wind", "leaf", "stone", "bird", "rain", "ship", "rock"]


def _random_sentences(rng, count):
    return [
        tokenize(" ".join(rng.choice(VOCAB_WORDS) for _ in range(rng.randint(1, 7))))
        for _ in range(count)
    ]


def _matrices(rng):
    a = _random_sentences(rng, rng.randint(1, 6))
    b = _random_sentences(rng, rng.randint(1, 6))
    idf = compute_idf(a + b)
    vocab = similarity.build_vocab([a, b])
    csr_a = similarity.csr_weights(a, vocab, idf)
    csr_b = similarity.csr_weights(b, vocab, idf)
    reference = np.array([[tfidf_cosine(sa, sb, idf) for sb in b] for sa in a])
    return csr_a, csr_b, len(vocab), reference


def test_numba_kernel_matches_reference_bitwise():
    if not similarity.USING_NUMBA:
        pytest.skip("numba path disabled")
    rng = random.Random(11)
    for _ in range(30):
        csr_a, csr_b, nv, reference = _matrices(rng)
        got = similarity._cosine_matrix_numba(csr_a, csr_b, nv)
        assert np.array_equal(got, reference)


def test_numpy_fallback_matches_reference():
    rng = random.Random(12)
    for _ in range(30):
        csr_a, csr_b, nv, reference = _matrices(rng)
        got = similarity._cosine_matrix_numpy(csr_a, csr_b, nv)
        assert got == pytest.approx(reference, abs=1e-12)


def test_paths_agree():
    rng = random.Random(13)
    for _ in range(10):
        csr_a, csr_b, nv, _ = _matrices(rng)
        a = similarity._cosine_matrix_numpy(csr_a, csr_b, nv)
        if similarity.USING_NUMBA:
            b = similarity._cosine_matrix_numba(csr_a, csr_b, nv)
            assert a == pytest.approx(b, abs=1e-12)


def test_zero_rows_give_zero_similarity():
    a = [tokenize(""), tokenize("sun moon")]
    b = [tokenize("sun moon")]
    idf = compute_idf(a + b)
    vocab = similarity.build_vocab([a, b])
    sims = similarity.cosine_matrix(
        similarity.csr_weights(a, vocab, idf), similarity.csr_weights(b, vocab, idf), len(vocab)
    )
    assert sims[0, 0] == 0.0
    assert sims[1, 0] == pytest.approx(1.0, abs=1e-12)


def test_env_flag_selects_numpy_fallback():
    env = dict(os.environ, ALTLEX_MINER_DISABLE_NUMBA="1")
    code = "import altlex_miner.similarity as s; print(s.USING_NUMBA)"
    out = subprocess.run(
        [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
    )
    assert out.stdout.strip() == "False"

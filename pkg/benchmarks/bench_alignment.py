"""Benchmark the alignment similarity kernels: numba CSR merge vs the
pure-numpy densified fallback.

Usage:
    python benchmarks/bench_alignment.py [--sizes 100,300,600] [--repeats 3]

The numpy fallback is what runs when ALTLEX_MINER_DISABLE_NUMBA=1 is set;
this script times both implementations directly in one process.
"""

import argparse
import random
import time

from altlex_miner import similarity
from altlex_miner.corpus import compute_idf
from altlex_miner.text import tokenize

WORDS = [f"word{i}" for i in range(5000)]


def make_article(rng, n_sentences):
    return [
        tokenize(" ".join(rng.choice(WORDS) for _ in range(rng.randint(8, 25))))
        for _ in range(n_sentences)
    ]


def bench(fn, csr_a, csr_b, vocab_size, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn(csr_a, csr_b, vocab_size)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="100,300,600", help="sentences per article side")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    rng = random.Random(0)
    print(f"numba available and enabled: {similarity.USING_NUMBA}")
    print(f"{'n x n':>10} {'numba (s)':>12} {'numpy (s)':>12} {'speedup':>9}")
    for n in sizes:
        a = make_article(rng, n)
        b = make_article(rng, n)
        idf = compute_idf(a + b)
        vocab = similarity.build_vocab([a, b])
        csr_a = similarity.csr_weights(a, vocab, idf)
        csr_b = similarity.csr_weights(b, vocab, idf)

        t_numpy = bench(similarity._cosine_matrix_numpy, csr_a, csr_b, len(vocab), args.repeats)
        if similarity._HAVE_NUMBA:
            similarity._cosine_matrix_numba(csr_a, csr_b, len(vocab))  # warm the JIT
            t_numba = bench(similarity._cosine_matrix_numba, csr_a, csr_b, len(vocab), args.repeats)
            print(f"{n:>5}x{n:<5} {t_numba:>12.4f} {t_numpy:>12.4f} {t_numpy / t_numba:>8.1f}x")
        else:
            print(f"{n:>5}x{n:<5} {'n/a':>12} {t_numpy:>12.4f}")


if __name__ == "__main__":
    main()

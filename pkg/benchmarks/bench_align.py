"""Throughput of the word-alignment kernels: compiled extension vs pure Python.

    python benchmarks/bench_align.py --pairs 2000 --max-len 30
"""
import argparse
import time

import numpy as np

from asrcorrect import _align_py, textops


def random_pairs(n: int, max_len: int, vocab: int, seed: int):
    g = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        r = g.integers(0, vocab, g.integers(1, max_len + 1))
        h = r.copy()
        flip = g.random(len(h)) < 0.2
        h[flip] = g.integers(0, vocab, int(flip.sum()))
        out.append((h.astype(np.int64), r.astype(np.int64)))
    return out


def bench(kernel, pairs, fn: str, repeat: int) -> float:
    f = getattr(kernel, fn)
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        for h, r in pairs:
            f(h, r)
        best = min(best, time.perf_counter() - t)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--max-len", type=int, default=30)
    ap.add_argument("--vocab", type=int, default=50)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)

    pairs = random_pairs(args.pairs, args.max_len, args.vocab, args.seed)
    kernels = {"python": _align_py}
    if textops.BACKEND == "cython":
        kernels["cython"] = textops._kernel
    else:
        print("compiled kernel not available; timing the fallback only")

    print(f"{'kernel':8} {'op':14} {'pairs/s':>12}")
    for name, k in kernels.items():
        for fn in ("edit_distance", "align_ops"):
            dt = bench(k, pairs, fn, args.repeat)
            print(f"{name:8} {fn:14} {len(pairs) / dt:12.0f}")

    t = time.perf_counter()
    textops.corpus_wer([(f"u{i}", " ".join(map(str, h)), " ".join(map(str, r))) for i, (h, r) in enumerate(pairs)])
    print(f"corpus_wer end to end ({textops.BACKEND}): {time.perf_counter() - t:.3f} s for {len(pairs)} utterances")


if __name__ == "__main__":
    main()

"""Test corpora shared by the self-test and the test suite."""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

import numpy as np

from .graph import Digraph, generate, is_strongly_connected


def small_strong_digraphs(max_n: int = 4, min_n: int = 2) -> Iterator[Digraph]:
    """Every strongly connected simple digraph whose edges are a subset of the
    complete digraph on ``n`` vertices, for ``min_n <= n <= max_n``."""
    for n in range(min_n, max_n + 1):
        pairs = np.array(list(permutations(range(n), 2)), dtype=np.int64).reshape(-1, 2)
        k = pairs.shape[0]
        for mask in range(1, 1 << k):
            sel = [(mask >> i) & 1 for i in range(k)]
            chosen = pairs[np.flatnonzero(sel)]
            g = Digraph(n, chosen[:, 0], chosen[:, 1])
            if is_strongly_connected(g):
                yield g


def random_strong_digraphs(count: int, seed: int = 0, max_n: int = 12,
                           max_m: int = 40) -> Iterator[Digraph]:
    """Seeded strongly connected multigraphs with ``n <= max_n`` and ``m <= max_m``.

    About a fifth get one self-loop and the edge order is shuffled, so
    parallel edges, loops and arbitrary edge ids all show up.
    """
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        loop = bool(rng.random() < 0.2)
        m = int(rng.integers(n, max_m + 1 - loop))
        g = generate("random-strongly-connected", n, seed=int(rng.integers(2**31)), m=m)
        t, h = g.tails.astype(np.int64), g.heads.astype(np.int64)
        if loop:
            v = int(rng.integers(n))
            t, h = np.append(t, v), np.append(h, v)
        order = rng.permutation(t.shape[0])
        yield Digraph(n, t[order], h[order])

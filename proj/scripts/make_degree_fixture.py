#!/usr/bin/env python3
"""Writes data/degrees_10k.txt, the bundled empirical degree file.

The file stands in for a real social network's degree triples when no dataset is
available offline. Vertices get correlated heavy-tailed degrees: a shared activity
level drives all three components, in- and out-degrees are strongly correlated with
a tail exponent near 2.5, undirected degrees have a lighter tail near 3.5, and a
share of vertices has no out-edges or no undirected edges.
Output is deterministic for a given seed.
"""

import argparse

import numpy as np


def discrete_pareto(rng, size, x_min, gamma):
    u = rng.random(size)
    return np.floor(x_min * (1.0 - u) ** (-1.0 / (gamma - 1.0))).astype(np.int64)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=20150311)
    parser.add_argument("--output", default="data/degrees_10k.txt")
    args = parser.parse_args()

    rng = np.random.default_rng(args.seed)
    n = args.n

    activity = rng.lognormal(mean=0.0, sigma=0.6, size=n)

    und = discrete_pareto(rng, n, 1.0, 3.5)
    und = np.rint(und * activity * 1.6).astype(np.int64)
    und[rng.random(n) < 0.30] = 0

    # In- and out-degree share a heavy-tailed base and differ by lognormal noise.
    base = discrete_pareto(rng, n, 2.0, 2.5) * activity
    in_deg = np.floor(base * rng.lognormal(0.0, 0.5, n)).astype(np.int64)
    out_deg = np.floor(base * rng.lognormal(0.0, 0.5, n)).astype(np.int64)
    passive = rng.random(n) < 0.15
    out_deg[passive] = 0

    with open(args.output, "w") as f:
        f.write("# in out und, one vertex per line\n")
        f.write(f"# synthetic, scripts/make_degree_fixture.py --n {n} --seed {args.seed}\n")
        for i, o, u in zip(in_deg, out_deg, und):
            f.write(f"{i} {o} {u}\n")

    print(f"means in={in_deg.mean():.3f} out={out_deg.mean():.3f} und={und.mean():.3f}")
    print(f"distinct triples={len(set(zip(in_deg, out_deg, und)))} max={in_deg.max()},{out_deg.max()},{und.max()}")


if __name__ == "__main__":
    main()

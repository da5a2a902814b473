#!/usr/bin/env python3
"""Independent enumeration of positive roots up to a height bound.

Real roots are grown by breadth-first closure of the simple vectors under
the reflections; every positive real root is reachable from a simple by a
height-monotone reflection chain, so capping the height keeps the search
complete.  Imaginary roots come from the reflection closure of the
fundamental-region vectors (positive, connected support, non-positive
pairing with every simple).  No package imports.

Run:  python3 tools/oracle_roots.py
"""

from itertools import product


def pairing(B, x, y):
    return sum(B[i][j] * x[i] * y[j] for i in range(len(x)) for j in range(len(x)))


def reflect(B, d, i, v):
    c = pairing(B, v, tuple(1 if k == i else 0 for k in range(len(v)))) // d[i]
    out = list(v)
    out[i] -= c
    return tuple(out)


def connected(B, v):
    support = [i for i, x in enumerate(v) if x]
    if not support:
        return False
    seen = {support[0]}
    frontier = [support[0]]
    while frontier:
        i = frontier.pop()
        for j in support:
            if j not in seen and B[i][j] != 0 and i != j:
                seen.add(j)
                frontier.append(j)
    return len(seen) == len(support)


def closure(B, d, seeds, height):
    n = len(d)
    found = set()
    frontier = list(seeds)
    for v in seeds:
        found.add(v)
    while frontier:
        v = frontier.pop()
        for i in range(n):
            w = reflect(B, d, i, v)
            if all(x >= 0 for x in w) and 0 < sum(w) <= height and w not in found:
                found.add(w)
                frontier.append(w)
    return found


def positive_roots(B, d, height):
    n = len(d)
    simples = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    real = closure(B, d, simples, height)

    fundamental = set()
    for v in product(range(height + 1), repeat=n):
        if not any(v) or sum(v) > height:
            continue
        if not connected(B, v):
            continue
        if all(
            pairing(B, v, tuple(1 if k == i else 0 for k in range(n))) <= 0
            for i in range(n)
        ):
            fundamental.add(v)
    imaginary = closure(B, d, fundamental, height) if fundamental else set()
    return real, imaginary


def show(label, B, d, height):
    real, imaginary = positive_roots(B, d, height)
    overlap = real & imaginary
    assert not overlap, overlap
    print(f"{label} (height <= {height}):")
    print(f"  real      ({len(real)}): {sorted(real, key=lambda v: (sum(v), v))}")
    print(f"  imaginary ({len(imaginary)}): {sorted(imaginary, key=lambda v: (sum(v), v))}")


def main():
    # valued graph with edge pair (2,1): B = [[4,-2],[-2,2]], d = (2,1)
    show("pair(2,1) fold", [[4, -2], [-2, 2]], (2, 1), 4)

    # valued graph with edge pair (4,1): B = [[8,-4],[-4,2]], d = (4,1)
    show("pair(4,1) fold", [[8, -4], [-4, 2]], (4, 1), 4)

    # three-orbit fold with edges (1,1) and (1,3): d = (3,1,1)
    show(
        "orbit fold d=(3,1,1)",
        [[6, 0, -3], [0, 2, -1], [-3, -1, 2]],
        (3, 1, 1),
        4,
    )

    # simply laced lattices use B = 2I - adjacency, d = 1
    show("A2 quiver", [[2, -1], [-1, 2]], (1, 1), 3)
    show("A3 quiver", [[2, -1, 0], [-1, 2, -1], [0, -1, 2]], (1, 1, 1), 4)

    star = [
        [2, 0, 0, 0, -1],
        [0, 2, 0, 0, -1],
        [0, 0, 2, 0, -1],
        [0, 0, 0, 2, -1],
        [-1, -1, -1, -1, 2],
    ]
    show("star quiver", star, (1, 1, 1, 1, 1), 6)

    # fold of the bipartite 3x2 quiver: B = [[6,-6],[-6,4]], d = (3,2)
    show("bipartite fold", [[6, -6], [-6, 4]], (3, 2), 4)


if __name__ == "__main__":
    main()

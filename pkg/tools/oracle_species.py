#!/usr/bin/env python3
"""Independent species counts for the weight-(2,1) valued quiver at q = 2.

A representation of dimension (a, b) is an F2-linear map from the
restriction of a rank-a space over GF(4) to an F2-space of dimension b;
isomorphisms act by GL_a(GF(4)) on one side (through the regular
representation over F2) and GL_b(F2) on the other.  Orbits are found by
applying every group element, and indecomposables by sieving out every
orbit that contains a block-diagonal direct sum of smaller
representations.  No package imports.

Run:  python3 tools/oracle_species.py
"""

from functools import cache
from itertools import product

# GF(4) packed as 0,1,2,3 with 2 the class of x modulo x^2+x+1
_MUL4 = {}
for a in range(4):
    for b in range(4):
        a0, a1 = a & 1, a >> 1
        b0, b1 = b & 1, b >> 1
        # (a0 + a1 x)(b0 + b1 x) with x^2 = x + 1
        c0 = (a0 * b0 + a1 * b1) % 2
        c1 = (a0 * b1 + a1 * b0 + a1 * b1) % 2
        _MUL4[(a, b)] = c0 | (c1 << 1)


def mat_mul2(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) % 2 for j in range(m))
        for i in range(n)
    )


def gl_f2(n):
    if n == 0:
        return [tuple()]
    out = []
    for flat in product(range(2), repeat=n * n):
        m = tuple(tuple(flat[i * n: (i + 1) * n]) for i in range(n))
        # invertible iff rows independent: Gaussian elimination
        rows = [list(r) for r in m]
        rank = 0
        for col in range(n):
            piv = next((r for r in range(rank, n) if rows[r][col]), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for r in range(n):
                if r != rank and rows[r][col]:
                    rows[r] = [(x + y) % 2 for x, y in zip(rows[r], rows[rank])]
            rank += 1
        if rank == n:
            out.append(m)
    return out


def gl_f4(n):
    if n == 0:
        return [tuple()]
    out = []
    for flat in product(range(4), repeat=n * n):
        m = tuple(tuple(flat[i * n: (i + 1) * n]) for i in range(n))
        if n == 1:
            ok = m[0][0] != 0
        else:
            det = _MUL4[(m[0][0], m[1][1])] ^ _MUL4[(m[0][1], m[1][0])]
            ok = det != 0
        if ok:
            out.append(m)
    return out


def res_f2(m):
    """Regular representation over F2: each GF(4) entry becomes a 2x2 block."""
    n = len(m)
    out = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            e = m[i][j]
            a, b = e & 1, e >> 1
            out[2 * i][2 * j] = a
            out[2 * i][2 * j + 1] = b
            out[2 * i + 1][2 * j] = b
            out[2 * i + 1][2 * j + 1] = (a + b) % 2
    return tuple(tuple(r) for r in out)


@cache
def classes(a, b):
    """Canonical representative per orbit at dimension (a, b)."""
    left = [res_f2(g) for g in gl_f4(a)]
    right = gl_f2(b)
    reps = {}
    for flat in product(range(2), repeat=b * 2 * a):
        theta = tuple(tuple(flat[i * 2 * a: (i + 1) * 2 * a]) for i in range(b))
        if theta in reps:
            continue
        orbit = set()
        for g in left:
            tg = mat_mul2(theta, g) if a else theta
            for h in right:
                orbit.add(mat_mul2(h, tg) if b else tg)
        canon = min(orbit)
        for st in orbit:
            reps[st] = canon
    return reps


def canon_of(a, b, theta):
    return classes(a, b)[theta]


def dsum(a1, b1, t1, a2, b2, t2):
    rows = b1 + b2
    cols = 2 * (a1 + a2)
    out = [[0] * cols for _ in range(rows)]
    for i in range(b1):
        for j in range(2 * a1):
            out[i][j] = t1[i][j]
    for i in range(b2):
        for j in range(2 * a2):
            out[b1 + i][2 * a1 + j] = t2[i][j]
    return tuple(tuple(r) for r in out)


@cache
def indec_count(a, b):
    reps = classes(a, b)
    all_classes = set(reps.values())
    decomposable = set()
    for a1 in range(a + 1):
        for b1 in range(b + 1):
            a2, b2 = a - a1, b - b1
            if (a1, b1) in ((0, 0), (a, b)):
                continue
            for t1 in set(classes(a1, b1).values()):
                for t2 in set(classes(a2, b2).values()):
                    decomposable.add(canon_of(a, b, dsum(a1, b1, t1, a2, b2, t2)))
    return len(all_classes - decomposable)


def main():
    for alpha in [(1, 0), (0, 1), (2, 0), (0, 2), (1, 1), (2, 1), (1, 2), (2, 2), (1, 3)]:
        print(f"I({alpha}, q=2) = {indec_count(*alpha)}")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Independent cross-check for isomorphism-class catalogs.

Everything here is recomputed from scratch with naive modular arithmetic:
states are tuples of matrices, orbits come from breadth-first closure over
explicit GL generators at each vertex, and indecomposability is decided by
searching the endomorphism ring for a non-trivial idempotent.  The package
under test is never imported.

Run:  python3 tools/oracle_isoclasses.py
"""

from itertools import product

# --- naive linear algebra mod p ---


def mat_mul(p, a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) % p for j in range(m))
        for i in range(n)
    )


def mat_inv(p, a):
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] % p)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] % p:
                c = aug[r][col]
                aug[r] = [(x - c * y) % p for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def nullspace_mod(p, rows, ncols):
    """Basis of the solution space of rows . x = 0 over F_p."""
    mat = [list(r) for r in rows if any(x % p for x in r)]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] % p), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [x * inv % p for x in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                c = mat[r][col]
                mat[r] = [(x - c * y) % p for x, y in zip(mat[r], mat[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [0] * ncols
        vec[fc] = 1
        for r, pc in enumerate(pivots):
            vec[pc] = (-mat[r][fc]) % p
        basis.append(tuple(vec))
    return basis


# --- quiver data as plain tuples ---


def gl_generators(p, d):
    """Generators of GL_d(F_p): transvections plus one diagonal scale."""
    gens = []
    if d >= 2:
        for i in range(d):
            for j in range(d):
                if i == j:
                    continue
                g = [list(row) for row in identity(d)]
                g[i][j] = 1
                gens.append(tuple(tuple(r) for r in g))
    if p > 2:
        root = next(g for g in range(2, p) if {pow(g, k, p) for k in range(p - 1)} == set(range(1, p)))
        g = [list(row) for row in identity(d)]
        g[0][0] = root
        gens.append(tuple(tuple(r) for r in g))
    return gens


def enumerate_states(p, arrows, dims):
    shapes = [(dims[t], dims[s]) for _, s, t in arrows]
    entry_counts = [r * c for r, c in shapes]
    total = sum(entry_counts)
    for flat in product(range(p), repeat=total):
        mats = []
        pos = 0
        for r, c in shapes:
            block = tuple(tuple(flat[pos + i * c: pos + (i + 1) * c]) for i in range(r))
            mats.append(block)
            pos += r * c
        yield tuple(mats)


def orbit_partition(p, vertices, arrows, dims):
    """Map each state to a canonical representative via BFS closure."""
    actions = []
    for v in vertices:
        d = dims[v]
        if d == 0:
            continue
        for g in gl_generators(p, d):
            ginv = mat_inv(p, g)
            ins = [k for k, (_, _, t) in enumerate(arrows) if t == v]
            outs = [k for k, (_, s, _) in enumerate(arrows) if s == v]
            actions.append((g, ginv, ins, outs))

    def apply(action, state):
        g, ginv, ins, outs = action
        mats = list(state)
        for k in ins:
            mats[k] = mat_mul(p, g, mats[k])
        for k in outs:
            mats[k] = mat_mul(p, mats[k], ginv)
        return tuple(mats)

    rep_of = {}
    classes = []
    for state in enumerate_states(p, arrows, dims):
        if state in rep_of:
            continue
        queue = [state]
        rep_of[state] = state
        members = 1
        while queue:
            cur = queue.pop()
            for action in actions:
                nxt = apply(action, cur)
                if nxt not in rep_of:
                    rep_of[nxt] = state
                    members += 1
                    queue.append(nxt)
        classes.append((state, members))
    return rep_of, classes


def hom_basis(p, arrows, dims, vertices, x, y):
    """Basis of Hom(x, y): block matrices phi_v with phi_t M = N phi_s."""
    offsets = {}
    pos = 0
    for v in vertices:
        offsets[v] = pos
        pos += dims[v] * dims[v]
    total = pos
    rows = []
    for k, (_, s, t) in enumerate(arrows):
        M, N = x[k], y[k]
        dt, ds = dims[t], dims[s]
        for i in range(dt):
            for j in range(ds):
                row = [0] * total
                for a in range(dt):
                    row[offsets[t] + i * dt + a] = (row[offsets[t] + i * dt + a] + M[a][j]) % p
                for b in range(ds):
                    row[offsets[s] + b * ds + j] = (row[offsets[s] + b * ds + j] - N[i][b]) % p
                rows.append(row)
    return nullspace_mod(p, rows, total), offsets, total


def is_indec(p, arrows, dims, vertices, state, cap=200000):
    basis, offsets, total = hom_basis(p, arrows, dims, vertices, state, state)
    k = len(basis)
    if p ** k > cap:
        raise RuntimeError(f"endomorphism ring too large: p^{k}")
    idv = [0] * total
    for v in vertices:
        d = dims[v]
        for i in range(d):
            idv[offsets[v] + i * d + i] = 1
    idv = tuple(idv)
    zero = tuple([0] * total)

    def unflatten(vec):
        return {
            v: tuple(
                tuple(vec[offsets[v] + i * dims[v] + j] for j in range(dims[v]))
                for i in range(dims[v])
            )
            for v in vertices
        }

    for coeffs in product(range(p), repeat=k):
        vec = [0] * total
        for c, b in zip(coeffs, basis):
            if c:
                vec = [(x + c * y) % p for x, y in zip(vec, b)]
        vec = tuple(vec)
        if vec == zero or vec == idv:
            continue
        blocks = unflatten(vec)
        square = []
        for v in vertices:
            sq = mat_mul(p, blocks[v], blocks[v]) if dims[v] else tuple()
            square.extend(x for row in sq for x in row)
        flat = []
        for v in vertices:
            flat.extend(x for row in blocks[v] for x in row)
        if tuple(square) == tuple(flat):
            return False
    return True


def summarise(label, p, vertices, arrows, dims, twist=None):
    rep_of, classes = orbit_partition(p, vertices, arrows, dims)
    n_states = p ** sum(dims[t] * dims[s] for _, s, t in arrows)
    assert sum(m for _, m in classes) == n_states
    indec = [st for st, _ in classes if is_indec(p, arrows, dims, vertices, st)]
    line = (
        f"{label}: states={n_states} classes={len(classes)} "
        f"sizes={sorted(m for _, m in classes)} indec={len(indec)}"
    )
    if twist is not None:
        fixed = [st for st in indec if rep_of[twist(st)] == rep_of[st]]
        line += f" twist_fixed_indec={len(fixed)}"
    print(line)


def main():
    # single arrow u -> v
    a2_vertices = ["u", "v"]
    a2_arrows = [("r", "u", "v")]
    summarise("A2/F2 (1,1)", 2, a2_vertices, a2_arrows, {"u": 1, "v": 1})
    summarise("A2/F2 (2,2)", 2, a2_vertices, a2_arrows, {"u": 2, "v": 2})
    summarise("A2/F3 (2,2)", 3, a2_vertices, a2_arrows, {"u": 2, "v": 2})

    # two arrows into the middle: 1 -> 2 <- 3
    a3_vertices = ["1", "2", "3"]
    a3_arrows = [("a", "1", "2"), ("b", "3", "2")]
    summarise("A3/F2 (1,1,1)", 2, a3_vertices, a3_arrows, {"1": 1, "2": 1, "3": 1})
    summarise("A3/F2 (1,2,1)", 2, a3_vertices, a3_arrows, {"1": 1, "2": 2, "3": 1})

    # four-point star with corners feeding the centre
    d4_vertices = ["1", "2", "3", "4", "5"]
    d4_arrows = [("r1", "1", "5"), ("r2", "2", "5"), ("r3", "3", "5"), ("r4", "4", "5")]
    delta = {"1": 1, "2": 1, "3": 1, "4": 1, "5": 2}
    summarise("star/F2 delta", 2, d4_vertices, d4_arrows, delta)
    summarise("star/F3 delta", 3, d4_vertices, d4_arrows, delta)

    # complete bipartite 3x2 with the order-6 rotation
    cx_vertices = ["x1", "x2", "x3", "y1", "y2"]
    cx_arrows = [
        (f"{x}{y}", x, y)
        for x in ["x1", "x2", "x3"]
        for y in ["y1", "y2"]
    ]
    ones = {v: 1 for v in cx_vertices}
    rot_v = {"x1": "x2", "x2": "x3", "x3": "x1", "y1": "y2", "y2": "y1"}
    arrow_index = {aid: k for k, (aid, _, _) in enumerate(cx_arrows)}
    rot_inv_v = {w: v for v, w in rot_v.items()}

    def twist(state):
        # relabel along the inverse rotation; with all dims 1 the entries
        # just move between arrow slots
        out = []
        for aid, s, t in cx_arrows:
            src_arrow = f"{rot_inv_v[s]}{rot_inv_v[t]}"
            out.append(state[arrow_index[src_arrow]])
        return tuple(out)

    summarise("bipartite/F5 (1,1,1,1,1)", 5, cx_vertices, cx_arrows, ones, twist=twist)


if __name__ == "__main__":
    main()

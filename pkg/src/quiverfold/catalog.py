"""Exhaustive isomorphism classification of representations of a fixed
dimension vector.

Every representation is packed into a single integer state: the matrix
entries in arrow order, row-major, first entry most significant.  The
base-change group at each vertex is generated by a scalar scaling, one
transvection, and a cycle permutation, which together generate the full
general linear group; orbits of the simultaneous action are the connected
components of the generator-move graph over all states, and the canonical
representative of a class is its least state.

Indecomposability flags for a whole catalog come from a direct-sum sieve:
a class is decomposable exactly when it contains indec(beta) + class(d-beta)
for some proper sub-dimension beta, walked bottom-up through the memoised
store.  The per-representation idempotent search in rep-algebra stays
available as an independent route and is cross-checked in the tests.
"""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterator, Sequence

import numpy as np
from scipy import sparse
from scipy.sparse import csgraph

from .errors import BudgetExceeded
from .gf import FiniteField
from .quiver import Automorphism, Quiver, act_on_dimension_vector
from .reps import Representation, direct_sum, twist_auto, twist_frobenius

_CHUNK = 1 << 18
_SCIPY_EDGE_BUDGET = 1 << 26


class _Move:
    """One generator of the base-change group as an entry transform."""

    def __init__(self, field: FiniteField, kind: str, in_blocks, out_blocks, g: int = 0):
        self.field = field
        self.kind = kind
        self.in_blocks = in_blocks  # (offset, rows, cols) of arrows into the vertex
        self.out_blocks = out_blocks  # (offset, rows, cols) of arrows out of it
        self.g = g

    def apply(self, ents: np.ndarray) -> np.ndarray:
        f = self.field
        add, mul = f.tables()
        out = ents.copy()
        if self.kind == "scale":
            g = self.g
            ginv = f.inv(g)
            for off, rows, cols in self.in_blocks:
                blk = out[:, off : off + rows * cols].reshape(-1, rows, cols)
                blk[:, 0, :] = mul[g][blk[:, 0, :]]
            for off, rows, cols in self.out_blocks:
                blk = out[:, off : off + rows * cols].reshape(-1, rows, cols)
                blk[:, :, 0] = mul[ginv][blk[:, :, 0]]
        elif self.kind == "transvect":
            neg = f.neg_table()
            for off, rows, cols in self.in_blocks:
                blk = out[:, off : off + rows * cols].reshape(-1, rows, cols)
                blk[:, 0, :] = add[blk[:, 0, :], blk[:, 1, :]]
            for off, rows, cols in self.out_blocks:
                blk = out[:, off : off + rows * cols].reshape(-1, rows, cols)
                blk[:, :, 1] = add[blk[:, :, 1], neg[blk[:, :, 0]].astype(blk.dtype)]
        elif self.kind == "cycle":
            for off, rows, cols in self.in_blocks:
                blk = out[:, off : off + rows * cols].reshape(-1, rows, cols)
                blk[:] = np.roll(blk, 1, axis=1)
            for off, rows, cols in self.out_blocks:
                blk = out[:, off : off + rows * cols].reshape(-1, rows, cols)
                blk[:] = np.roll(blk, -1, axis=2)
        else:  # pragma: no cover
            raise ValueError(self.kind)
        return out


class StateSpace:
    """Integer coding of all representations of one dimension vector."""

    def __init__(self, quiver: Quiver, field: FiniteField, dims: Sequence[int]):
        self.quiver = quiver
        self.field = field
        self.dims = quiver.check_vector(dims)
        idx = quiver.vertex_index
        self.shapes = []
        self.offsets = []
        off = 0
        for arr in quiver.arrows:
            rows = self.dims[idx[arr.target]]
            cols = self.dims[idx[arr.source]]
            self.shapes.append((rows, cols))
            self.offsets.append(off)
            off += rows * cols
        self.n_entries = off
        self.size = field.q**off
        self.dtype = np.uint8 if field.q <= 256 else np.uint16

    def decode_batch(self, states: np.ndarray) -> np.ndarray:
        q = self.field.q
        s = states.astype(np.int64).copy()
        ents = np.empty((len(s), self.n_entries), dtype=self.dtype)
        for k in range(self.n_entries - 1, -1, -1):
            ents[:, k] = s % q
            s //= q
        return ents

    def encode_batch(self, ents: np.ndarray) -> np.ndarray:
        q = self.field.q
        s = np.zeros(len(ents), dtype=np.int64)
        for k in range(self.n_entries):
            s = s * q + ents[:, k].astype(np.int64)
        return s

    def decode(self, state: int) -> Representation:
        q = self.field.q
        ents = []
        s = int(state)
        for _ in range(self.n_entries):
            s, r = divmod(s, q)
            ents.append(r)
        ents.reverse()
        mats = []
        for (rows, cols), off in zip(self.shapes, self.offsets):
            mats.append(
                tuple(
                    tuple(ents[off + r * cols + c] for c in range(cols))
                    for r in range(rows)
                )
            )
        return Representation(self.quiver, self.field, self.dims, tuple(mats))

    def encode_rep(self, rep: Representation) -> int:
        assert rep.quiver == self.quiver and rep.dims == self.dims
        s = 0
        q = self.field.q
        for m in rep.matrices:
            for row in m:
                for x in row:
                    s = s * q + int(x)
        return s

    def moves(self) -> list[_Move]:
        """Base-change generators with any effect on the stored entries."""
        q = self.quiver
        f = self.field
        idx = q.vertex_index
        out: list[_Move] = []
        for vi, v in enumerate(q.vertices):
            d = self.dims[vi]
            if d == 0:
                continue
            in_blocks = []
            out_blocks = []
            for k, arr in enumerate(q.arrows):
                rows, cols = self.shapes[k]
                if rows * cols == 0:
                    continue
                if arr.target == v:
                    in_blocks.append((self.offsets[k], rows, cols))
                if arr.source == v:
                    out_blocks.append((self.offsets[k], rows, cols))
            if not in_blocks and not out_blocks:
                continue
            if f.q > 2:
                out.append(_Move(f, "scale", in_blocks, out_blocks, g=f.generator()))
            if d >= 2:
                out.append(_Move(f, "transvect", in_blocks, out_blocks))
                out.append(_Move(f, "cycle", in_blocks, out_blocks))
        return out

    def move_permutation(self, move: _Move) -> np.ndarray:
        perm = np.empty(self.size, dtype=np.int64)
        for start in range(0, self.size, _CHUNK):
            stop = min(start + _CHUNK, self.size)
            states = np.arange(start, stop, dtype=np.int64)
            perm[start:stop] = self.encode_batch(move.apply(self.decode_batch(states)))
        return perm


def _labels_scipy(space: StateSpace, moves: list[_Move]) -> np.ndarray:
    s = space.size
    rows = []
    cols = []
    for mv in moves:
        perm = space.move_permutation(mv)
        rows.append(np.arange(s, dtype=np.int64))
        cols.append(perm)
    graph = sparse.coo_matrix(
        (
            np.ones(s * len(moves), dtype=bool),
            (np.concatenate(rows), np.concatenate(cols)),
        ),
        shape=(s, s),
    )
    _, labels = csgraph.connected_components(graph, directed=False)
    return labels.astype(np.int64)


def _labels_minprop(space: StateSpace, moves: list[_Move]) -> np.ndarray:
    """Memory-lean fallback: iterated min-label propagation along the
    generator moves until stable."""
    s = space.size
    labels = np.arange(s, dtype=np.int64)
    while True:
        changed = False
        for mv in moves:
            perm = space.move_permutation(mv)
            before = labels.copy()
            pulled = np.minimum(labels, labels[perm])
            np.minimum.at(labels, perm, pulled)
            np.minimum(labels, pulled, out=labels)
            if not np.array_equal(before, labels):
                changed = True
            del perm
        while True:
            nxt = labels[labels]
            if np.array_equal(nxt, labels):
                break
            labels = nxt
            changed = True
        if not changed:
            return labels


class IsoClassCatalog:
    """Orbit partition of a state space: canonical representatives (least
    state per class, ascending), orbit sizes, lazy indecomposability flags
    and twist annotations."""

    def __init__(
        self,
        space: StateSpace,
        class_reps: np.ndarray,
        labels: np.ndarray,
        sizes: np.ndarray,
    ):
        self.space = space
        self.class_reps = class_reps
        self.labels = labels
        self.sizes = sizes
        self._indec: np.ndarray | None = None
        self._rep_cache: dict[int, Representation] = {}

    @property
    def quiver(self) -> Quiver:
        return self.space.quiver

    @property
    def field(self) -> FiniteField:
        return self.space.field

    @property
    def dims(self) -> tuple[int, ...]:
        return self.space.dims

    @property
    def n_classes(self) -> int:
        return len(self.class_reps)

    def representative(self, ci: int) -> Representation:
        if ci not in self._rep_cache:
            self._rep_cache[ci] = self.space.decode(int(self.class_reps[ci]))
        return self._rep_cache[ci]

    def class_of_state(self, state: int) -> int:
        return int(self.labels[state])

    def class_of(self, rep: Representation) -> int:
        return self.class_of_state(self.space.encode_rep(rep))

    @property
    def indec_flags(self) -> np.ndarray:
        if self._indec is None:
            _sieve_indec(self)
        return self._indec

    def indec_class_ids(self) -> list[int]:
        return [ci for ci in range(self.n_classes) if self.indec_flags[ci]]


_STORE: dict[tuple, IsoClassCatalog] = {}


def clear_catalog_store() -> None:
    _STORE.clear()


def isoclasses(
    quiver: Quiver,
    dims: Sequence[int],
    field: FiniteField,
    state_cap: int = 2**24,
) -> IsoClassCatalog:
    """Classify all representations of the dimension vector, memoised."""
    dd = quiver.check_vector(dims)
    key = (quiver, field.p, field.m, dd)
    got = _STORE.get(key)
    if got is not None:
        return got

    space = StateSpace(quiver, field, dd)
    if space.size > state_cap:
        raise BudgetExceeded(
            f"state space holds {field.q}^{space.n_entries} = {space.size} "
            f"representations, cap is {state_cap}",
            predicted=space.size,
        )
    moves = space.moves()
    if space.size == 1 or not moves:
        labels = np.arange(space.size, dtype=np.int64)
    elif space.size * len(moves) <= _SCIPY_EDGE_BUDGET:
        labels = _labels_scipy(space, moves)
    else:
        labels = _labels_minprop(space, moves)
    # the fallback labels components by their least state, not by compact
    # ids; renumber so downstream code can treat labels as 0..k-1
    _, labels = np.unique(labels, return_inverse=True)

    ncomp = int(labels.max()) + 1 if space.size else 0
    reps = np.full(ncomp, space.size, dtype=np.int64)
    np.minimum.at(reps, labels, np.arange(space.size, dtype=np.int64))
    order = np.argsort(reps, kind="stable")
    rank = np.empty(ncomp, dtype=np.int64)
    rank[order] = np.arange(ncomp, dtype=np.int64)
    class_ids = rank[labels]
    sizes = np.bincount(class_ids, minlength=ncomp)
    assert int(sizes.sum()) == space.size, "orbits must partition the state space"

    cat = IsoClassCatalog(space, np.sort(reps), class_ids, sizes)
    _STORE[key] = cat
    return cat


def _sub_dimensions(dims: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """All beta with 0 <= beta <= dims componentwise, excluding 0 and dims."""
    for beta in product(*(range(d + 1) for d in dims)):
        if any(beta) and beta != dims:
            yield beta


def _sieve_indec(cat: IsoClassCatalog) -> None:
    if sum(cat.dims) == 0:
        cat._indec = np.zeros(cat.n_classes, dtype=bool)
        return
    flags = np.ones(cat.n_classes, dtype=bool)
    q, f = cat.quiver, cat.field
    for beta in _sub_dimensions(cat.dims):
        gamma = tuple(a - b for a, b in zip(cat.dims, beta))
        sub = isoclasses(q, beta, f, state_cap=cat.space.size + 1)
        comp = isoclasses(q, gamma, f, state_cap=cat.space.size + 1)
        for ii in sub.indec_class_ids():
            left = sub.representative(ii)
            for cj in range(comp.n_classes):
                total = direct_sum(left, comp.representative(cj))
                flags[cat.class_of(total)] = False
    cat._indec = flags


def indecomposable_classes(
    quiver: Quiver,
    dims: Sequence[int],
    field: FiniteField,
    state_cap: int = 2**24,
) -> tuple[Representation, ...]:
    """Canonical representatives of the indecomposable classes at dims."""
    cat = isoclasses(quiver, dims, field, state_cap=state_cap)
    return tuple(cat.representative(ci) for ci in cat.indec_class_ids())


def frobenius_period(cat: IsoClassCatalog, ci: int) -> int:
    """Least s >= 1 with the class fixed by the s-fold Frobenius twist.

    Always divides the field degree.
    """
    rep = cat.representative(ci)
    cur = rep
    for s in range(1, cat.field.m + 1):
        cur = twist_frobenius(cur, 1)
        if cat.class_of(cur) == ci:
            assert cat.field.m % s == 0
            return s
    raise AssertionError("Frobenius twist orbit did not close within the field degree")


def auto_period(cat: IsoClassCatalog, a: Automorphism, ci: int) -> int:
    """Least r >= 1 with the class fixed by the r-fold twist along a.

    The class may wander through catalogs at permuted dimension vectors
    before returning; the period always divides the automorphism order.
    """
    assert a.quiver == cat.quiver
    rep = cat.representative(ci)
    dd = cat.dims
    cur = rep
    for r in range(1, a.order + 1):
        cur = twist_auto(a, cur)
        if cur.dims == dd:
            here = isoclasses(cat.quiver, dd, cat.field, state_cap=cat.space.size + 1)
            if here.class_of(cur) == ci:
                assert a.order % r == 0
                return r
    raise AssertionError("twist orbit did not close within the automorphism order")


def twist_annotations(
    cat: IsoClassCatalog, a: Automorphism | None = None
) -> list[dict[str, int | None]]:
    """Per-class twist data: Frobenius period always, a-period when an
    automorphism is supplied."""
    out: list[dict[str, int | None]] = []
    for ci in range(cat.n_classes):
        row: dict[str, int | None] = {"frobenius_period": frobenius_period(cat, ci)}
        row["auto_period"] = auto_period(cat, a, ci) if a is not None else None
        out.append(row)
    return out

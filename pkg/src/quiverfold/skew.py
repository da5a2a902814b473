"""Unfolding valued quivers and the skew-quiver construction.

Unfolding replaces a valued vertex of weight d by d plain copies and each
valued edge by parallel arrows spread over congruent copy pairs; the cyclic
copy shift is then an admissible automorphism that folds back to the valued
quiver we started from.

The skew quiver of (Q, a) replaces each vertex orbit 𝐢 of size d by n/d
labelled copies (𝐢, μ) and distributes every arrow orbit over residue
classes; the shift ã(𝐢, μ) = (𝐢, μ+1) is again admissible.  Applying the
construction twice returns the original pair up to isomorphism, which
`double_skew_check` verifies by explicit search.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from math import gcd, lcm

from .cartan import FoldData, ValuedQuiver, fold
from .errors import BudgetExceeded, NotUnfoldable
from .quiver import (
    Automorphism,
    Quiver,
    orbit_structure,
    validate_automorphism,
    validate_quiver,
)


def unfold(vq: ValuedQuiver) -> Automorphism:
    """Unfold a valued quiver into (plain quiver, copy-shift automorphism).

    The returned automorphism carries the quiver; its orbit fold returns the
    input valued graph.  Vertex (i, mu) is named "i:mu".
    """
    for e in vq.edges:
        i, j = vq.vertex_index[e.source], vq.vertex_index[e.target]
        if e.b <= 0 or e.b % lcm(vq.d[i], vq.d[j]) != 0:
            raise NotUnfoldable(
                f"edge count {e.b} between {e.source!r} and {e.target!r} is not "
                f"a positive multiple of lcm({vq.d[i]}, {vq.d[j]})"
            )
    if any(x < 1 for x in vq.d):
        raise NotUnfoldable("symmetriser entries must be positive")

    vertices: list[str] = []
    for v, dv in zip(vq.vertices, vq.d):
        vertices.extend(f"{v}:{mu}" for mu in range(dv))

    arrows: list[tuple[str, str, str]] = []
    for e in vq.edges:
        du = vq.d[vq.vertex_index[e.source]]
        dv = vq.d[vq.vertex_index[e.target]]
        g = gcd(du, dv)
        mult = e.b // lcm(du, dv)
        for mu in range(du):
            for nu in range(dv):
                if (mu - nu) % g != 0:
                    continue
                for k in range(mult):
                    arrows.append(
                        (
                            f"{e.source}>{e.target}:{mu}:{nu}:{k}",
                            f"{e.source}:{mu}",
                            f"{e.target}:{nu}",
                        )
                    )
    quiver = validate_quiver(vertices, arrows)

    vmap: dict[str, str] = {}
    for v, dv in zip(vq.vertices, vq.d):
        for mu in range(dv):
            vmap[f"{v}:{mu}"] = f"{v}:{(mu + 1) % dv}"
    amap: dict[str, str] = {}
    for e in vq.edges:
        du = vq.d[vq.vertex_index[e.source]]
        dv = vq.d[vq.vertex_index[e.target]]
        g = gcd(du, dv)
        mult = e.b // lcm(du, dv)
        for mu in range(du):
            for nu in range(dv):
                if (mu - nu) % g != 0:
                    continue
                for k in range(mult):
                    amap[f"{e.source}>{e.target}:{mu}:{nu}:{k}"] = (
                        f"{e.source}>{e.target}:{(mu + 1) % du}:{(nu + 1) % dv}:{k}"
                    )
    return validate_automorphism(quiver, vmap, amap)


# --- skew quivers ---


@dataclass(frozen=True)
class ArrowOrigin:
    """Where a skew-quiver arrow comes from: the source arrow orbit (by its
    earliest arrow id) and the residue class it realises."""

    arrow_orbit: str
    residue: int


@dataclass(frozen=True)
class SkewQuiver:
    auto: Automorphism
    fold_source: FoldData
    origins: tuple[ArrowOrigin, ...]

    @property
    def quiver(self) -> Quiver:
        return self.auto.quiver

    @property
    def orbit_names(self) -> tuple[str, ...]:
        return self.fold_source.orbit_names

    @cached_property
    def mu_counts(self) -> tuple[int, ...]:
        n = self.fold_source.orbits.order
        return tuple(n // d for d in self.fold_source.d)

    @cached_property
    def group_of_vertex(self) -> tuple[int, ...]:
        """For each skew vertex position, the index of its base orbit."""
        out = []
        for k, cnt in enumerate(self.mu_counts):
            out.extend([k] * cnt)
        return tuple(out)

    @cached_property
    def origin_of_arrow(self) -> dict[str, ArrowOrigin]:
        return {r.id: o for r, o in zip(self.quiver.arrows, self.origins)}


def skew(a: Automorphism) -> SkewQuiver:
    """Build the skew quiver of (Q, a) with its shift automorphism."""
    fd = fold(a)
    st = fd.orbits
    n = st.order
    names = st.orbit_names

    vertices: list[str] = []
    for k in range(len(names)):
        vertices.extend(f"{names[k]}:{mu}" for mu in range(n // st.d[k]))

    arrows: list[tuple[str, str, str]] = []
    origins: list[ArrowOrigin] = []
    amap: dict[str, str] = {}
    for t, orb in enumerate(st.arrow_orbits):
        si, ti = st.arrow_orbit_ends[t]
        ell = st.arrow_orbit_lengths[t]
        tmod = lcm(st.d[si], st.d[ti])
        n_t = n // tmod
        residues = sorted({(k * (n // ell)) % n_t for k in range(ell // tmod)})
        src_count = n // st.d[si]
        tgt_count = n // st.d[ti]
        for r in residues:
            for mu in range(src_count):
                for nu in range(tgt_count):
                    if (mu - nu - r) % n_t != 0:
                        continue
                    rid = f"{orb[0]}:{mu}:{nu}"
                    arrows.append((rid, f"{names[si]}:{mu}", f"{names[ti]}:{nu}"))
                    origins.append(ArrowOrigin(orb[0], r))
                    amap[rid] = (
                        f"{orb[0]}:{(mu + 1) % src_count}:{(nu + 1) % tgt_count}"
                    )
    quiver = validate_quiver(vertices, arrows)

    vmap: dict[str, str] = {}
    for k in range(len(names)):
        cnt = n // st.d[k]
        for mu in range(cnt):
            vmap[f"{names[k]}:{mu}"] = f"{names[k]}:{(mu + 1) % cnt}"
    shift = validate_automorphism(quiver, vmap, amap)
    return SkewQuiver(shift, fd, tuple(origins))


# --- double skew recovery ---


@dataclass
class DoubleSkewReport:
    found: bool
    vertex_map: dict[str, str] | None
    skew_order: int
    double_skew_order: int


def _cycle_length(a: Automorphism, v: str) -> int:
    cur = a.apply_vertex(v)
    k = 1
    while cur != v:
        cur = a.apply_vertex(cur)
        k += 1
    return k


def _pair_counts(q: Quiver) -> dict[tuple[str, str], list[str]]:
    acc: dict[tuple[str, str], list[str]] = {}
    for r in q.arrows:
        acc.setdefault((r.source, r.target), []).append(r.id)
    return acc


def _arrow_map_consistent(
    a1: Automorphism, a2: Automorphism, vmap: dict[str, str]
) -> bool:
    """Try to extend a vertex isomorphism to arrows so it intertwines the
    automorphisms.  Parallel arrows are matched per orbit of endpoint pairs,
    trying the (few) bijections of one base class."""
    q1, q2 = a1.quiver, a2.quiver
    p1, p2 = _pair_counts(q1), _pair_counts(q2)
    for (u, v), ids in p1.items():
        if len(p2.get((vmap[u], vmap[v]), [])) != len(ids):
            return False

    done: set[tuple[str, str]] = set()
    for pair in p1:
        if pair in done:
            continue
        # the a1-orbit of this endpoint pair
        orbit = [pair]
        cur = (a1.apply_vertex(pair[0]), a1.apply_vertex(pair[1]))
        while cur != pair:
            orbit.append(cur)
            cur = (a1.apply_vertex(cur[0]), a1.apply_vertex(cur[1]))
        done.update(orbit)

        base1 = p1[pair]
        base2 = p2[(vmap[pair[0]], vmap[pair[1]])]
        ok_for_some = False
        for perm in permutations(base2):
            psi = dict(zip(base1, perm))
            # propagate along the orbit and check closure
            consistent = True
            cur_map = psi
            cur_pair = pair
            for _ in range(len(orbit)):
                nxt_pair = (a1.apply_vertex(cur_pair[0]), a1.apply_vertex(cur_pair[1]))
                nxt_map = {
                    a1.apply_arrow(r): a2.apply_arrow(s) for r, s in cur_map.items()
                }
                if nxt_pair == pair:
                    if nxt_map != psi:
                        consistent = False
                    break
                cur_map = nxt_map
                cur_pair = nxt_pair
            if consistent:
                ok_for_some = True
                break
        if not ok_for_some:
            return False
    return True


def double_skew_check(a: Automorphism, vertex_cap: int = 10) -> DoubleSkewReport:
    """Search for an isomorphism between (Q, a) and its double skew."""
    s1 = skew(a)
    s2 = skew(s1.auto)
    a2 = s2.auto
    q1, q2 = a.quiver, a2.quiver

    if len(q1.vertices) > vertex_cap or len(q2.vertices) > vertex_cap:
        raise BudgetExceeded(
            f"double skew check capped at {vertex_cap} vertices",
            predicted=max(len(q1.vertices), len(q2.vertices)),
        )
    if len(q1.vertices) != len(q2.vertices) or len(q1.arrows) != len(q2.arrows):
        return DoubleSkewReport(False, None, s1.auto.order, a2.order)

    def invariant(q: Quiver, au: Automorphism, v: str):
        return (
            len(q.arrows_into(v)),
            len(q.arrows_out_of(v)),
            _cycle_length(au, v),
        )

    inv2: dict[str, tuple] = {v: invariant(q2, a2, v) for v in q2.vertices}
    p1, p2 = _pair_counts(q1), _pair_counts(q2)

    order1 = list(q1.vertices)

    def backtrack(pos: int, vmap: dict[str, str], used: set[str]):
        if pos == len(order1):
            if _arrow_map_consistent(a, a2, vmap):
                return dict(vmap)
            return None
        v = order1[pos]
        want = invariant(q1, a, v)
        for w in q2.vertices:
            if w in used or inv2[w] != want:
                continue
            vmap[v] = w
            ok = True
            # intertwining on already-assigned vertices
            av = a.apply_vertex(v)
            if av in vmap and vmap[av] != a2.apply_vertex(w):
                ok = False
            for u in list(vmap):
                if a.apply_vertex(u) in vmap and vmap[a.apply_vertex(u)] != a2.apply_vertex(vmap[u]):
                    ok = False
                    break
            if ok:
                for u in vmap:
                    if len(p1.get((u, v), ())) != len(p2.get((vmap[u], w), ())) or len(
                        p1.get((v, u), ())
                    ) != len(p2.get((w, vmap[u]), ())):
                        ok = False
                        break
            if ok:
                res = backtrack(pos + 1, vmap, used | {w})
                if res is not None:
                    return res
            del vmap[v]
        return None

    found = backtrack(0, {}, set())
    return DoubleSkewReport(found is not None, found, s1.auto.order, a2.order)

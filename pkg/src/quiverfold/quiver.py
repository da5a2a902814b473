"""Finite quivers, their automorphisms, and orbit data.

A quiver here is a finite directed graph with string-labelled vertices and
arrows.  Vertex loops are forbidden throughout (an arrow never starts and
ends at the same vertex); parallel arrows are allowed and kept apart by
their ids.  The vertex tuple fixes the coordinate order used by every
dimension vector and lattice built on the quiver.

An automorphism is a pair of compatible permutations (one of the vertices,
one of the arrows).  Only admissible automorphisms are accepted: no arrow
may join two vertices lying in a single vertex orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import lcm
from typing import Iterable, Mapping, Sequence

from .errors import (
    DanglingEndpoint,
    DuplicateId,
    Incompatible,
    LatticeMismatch,
    NotAdmissible,
    NotPermutation,
    VertexLoop,
)


@dataclass(frozen=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: k for k, v in enumerate(self.vertices)}

    @cached_property
    def arrow_by_id(self) -> dict[str, Arrow]:
        return {r.id: r for r in self.arrows}

    @cached_property
    def _arrows_in(self) -> dict[str, tuple[Arrow, ...]]:
        acc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for r in self.arrows:
            acc[r.target].append(r)
        return {v: tuple(rs) for v, rs in acc.items()}

    @cached_property
    def _arrows_out(self) -> dict[str, tuple[Arrow, ...]]:
        acc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for r in self.arrows:
            acc[r.source].append(r)
        return {v: tuple(rs) for v, rs in acc.items()}

    def arrows_into(self, v: str) -> tuple[Arrow, ...]:
        return self._arrows_in[v]

    def arrows_out_of(self, v: str) -> tuple[Arrow, ...]:
        return self._arrows_out[v]

    def is_sink(self, v: str) -> bool:
        return not self._arrows_out[v]

    def is_source(self, v: str) -> bool:
        return not self._arrows_in[v]

    def reversed_at(self, vertices: Iterable[str]) -> "Quiver":
        """The quiver with every arrow touching one of `vertices` reversed.

        Arrow ids are preserved, so representations can be transported
        between the two orientations arrow by arrow.
        """
        flip = frozenset(vertices)
        new = tuple(
            Arrow(r.id, r.target, r.source)
            if (r.source in flip or r.target in flip)
            else r
            for r in self.arrows
        )
        return Quiver(self.vertices, new)

    def check_vector(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != len(self.vertices):
            raise LatticeMismatch(
                f"vector has length {len(v)}, quiver has {len(self.vertices)} vertices"
            )
        return tuple(int(x) for x in v)


def validate_quiver(vertices: Sequence[str], arrows: Iterable) -> Quiver:
    """Build a :class:`Quiver` after checking the usual sanity conditions.

    `arrows` may contain :class:`Arrow` objects, `(id, source, target)`
    triples, or mappings with keys ``id``/``from``/``to``.
    """
    verts = tuple(str(v) for v in vertices)
    seen: set[str] = set()
    for v in verts:
        if v in seen:
            raise DuplicateId(f"duplicate vertex id {v!r}")
        seen.add(v)

    norm: list[Arrow] = []
    for item in arrows:
        if isinstance(item, Arrow):
            r = item
        elif isinstance(item, Mapping):
            r = Arrow(str(item["id"]), str(item["from"]), str(item["to"]))
        else:
            rid, src, tgt = item
            r = Arrow(str(rid), str(src), str(tgt))
        norm.append(r)

    ids: set[str] = set()
    vset = set(verts)
    for r in norm:
        if r.id in ids:
            raise DuplicateId(f"duplicate arrow id {r.id!r}")
        ids.add(r.id)
        if r.source not in vset:
            raise DanglingEndpoint(f"arrow {r.id!r} starts at unknown vertex {r.source!r}")
        if r.target not in vset:
            raise DanglingEndpoint(f"arrow {r.id!r} ends at unknown vertex {r.target!r}")
        if r.source == r.target:
            raise VertexLoop(f"arrow {r.id!r} is a loop at vertex {r.source!r}")
    return Quiver(verts, tuple(norm))


# --- automorphisms ---


@dataclass(frozen=True)
class Automorphism:
    """An admissible automorphism, stored as image tuples aligned with the
    quiver's vertex and arrow order."""

    quiver: Quiver
    vertex_image: tuple[str, ...]
    arrow_image: tuple[str, ...]

    @cached_property
    def vertex_map(self) -> dict[str, str]:
        return dict(zip(self.quiver.vertices, self.vertex_image))

    @cached_property
    def arrow_map(self) -> dict[str, str]:
        return {r.id: img for r, img in zip(self.quiver.arrows, self.arrow_image)}

    @cached_property
    def inverse_vertex_map(self) -> dict[str, str]:
        return {img: v for v, img in self.vertex_map.items()}

    @cached_property
    def inverse_arrow_map(self) -> dict[str, str]:
        return {img: r for r, img in self.arrow_map.items()}

    def apply_vertex(self, v: str) -> str:
        return self.vertex_map[v]

    def apply_arrow(self, rid: str) -> str:
        return self.arrow_map[rid]

    @cached_property
    def order(self) -> int:
        n = 1
        for cyc in _cycles(self.quiver.vertices, self.vertex_map):
            n = lcm(n, len(cyc))
        for cyc in _cycles(tuple(r.id for r in self.quiver.arrows), self.arrow_map):
            n = lcm(n, len(cyc))
        return n

    @property
    def is_identity(self) -> bool:
        return self.order == 1

    def inverse(self) -> "Automorphism":
        return Automorphism(
            self.quiver,
            tuple(self.inverse_vertex_map[v] for v in self.quiver.vertices),
            tuple(self.inverse_arrow_map[r.id] for r in self.quiver.arrows),
        )

    def power(self, k: int) -> "Automorphism":
        k %= self.order
        vmap = {v: v for v in self.quiver.vertices}
        amap = {r.id: r.id for r in self.quiver.arrows}
        for _ in range(k):
            vmap = {v: self.vertex_map[w] for v, w in vmap.items()}
            amap = {r: self.arrow_map[s] for r, s in amap.items()}
        return Automorphism(
            self.quiver,
            tuple(vmap[v] for v in self.quiver.vertices),
            tuple(amap[r.id] for r in self.quiver.arrows),
        )

    @classmethod
    def identity(cls, quiver: Quiver) -> "Automorphism":
        return cls(quiver, quiver.vertices, tuple(r.id for r in quiver.arrows))


def _cycles(items: Sequence[str], mapping: Mapping[str, str]) -> list[tuple[str, ...]]:
    """Cycles of a permutation, each starting at its earliest item, listed
    in order of that earliest item's position in `items`."""
    seen: set[str] = set()
    out: list[tuple[str, ...]] = []
    for start in items:
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        cur = mapping[start]
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            cur = mapping[cur]
        out.append(tuple(cyc))
    return out


def validate_automorphism(
    quiver: Quiver,
    vertex_map: Mapping[str, str],
    arrow_map: Mapping[str, str] | None = None,
) -> Automorphism:
    """Check a vertex permutation (and arrow permutation) and build the
    automorphism.

    Vertices missing from `vertex_map` are taken as fixed points.  When
    `arrow_map` is omitted it is inferred, which is unambiguous exactly when
    no two parallel arrows share their endpoint pair.
    """
    vset = set(quiver.vertices)
    for v in vertex_map:
        if v not in vset:
            raise NotPermutation(f"vertex map mentions unknown vertex {v!r}")
    vmap = {v: str(vertex_map.get(v, v)) for v in quiver.vertices}
    if set(vmap.values()) != vset:
        raise NotPermutation("vertex map is not a bijection of the vertex set")

    if arrow_map is None:
        amap = _infer_arrow_map(quiver, vmap)
    else:
        ids = {r.id for r in quiver.arrows}
        for r in arrow_map:
            if r not in ids:
                raise NotPermutation(f"arrow map mentions unknown arrow {r!r}")
        amap = {r.id: str(arrow_map.get(r.id, r.id)) for r in quiver.arrows}
        if set(amap.values()) != ids:
            raise NotPermutation("arrow map is not a bijection of the arrow set")
        for r in quiver.arrows:
            img = quiver.arrow_by_id[amap[r.id]]
            if img.source != vmap[r.source] or img.target != vmap[r.target]:
                raise Incompatible(
                    f"arrow {r.id!r} maps to {img.id!r}, whose endpoints do not "
                    f"match the vertex images"
                )

    a = Automorphism(
        quiver,
        tuple(vmap[v] for v in quiver.vertices),
        tuple(amap[r.id] for r in quiver.arrows),
    )

    orbit_of: dict[str, int] = {}
    for k, cyc in enumerate(_cycles(quiver.vertices, vmap)):
        for v in cyc:
            orbit_of[v] = k
    for r in quiver.arrows:
        if orbit_of[r.source] == orbit_of[r.target]:
            raise NotAdmissible(
                f"arrow {r.id!r} joins vertices {r.source!r} and {r.target!r} "
                f"of a single vertex orbit"
            )
    return a


def _infer_arrow_map(quiver: Quiver, vmap: Mapping[str, str]) -> dict[str, str]:
    by_ends: dict[tuple[str, str], list[Arrow]] = {}
    for r in quiver.arrows:
        by_ends.setdefault((r.source, r.target), []).append(r)
    amap: dict[str, str] = {}
    for r in quiver.arrows:
        cands = by_ends.get((vmap[r.source], vmap[r.target]), [])
        if not cands:
            raise Incompatible(
                f"no compatible arrow map exists: arrow {r.id!r} has no image "
                f"from {vmap[r.source]!r} to {vmap[r.target]!r}"
            )
        if len(cands) > 1:
            raise Incompatible(
                f"arrow map is ambiguous at {r.id!r} (parallel arrows); "
                f"pass it explicitly"
            )
        amap[r.id] = cands[0].id
    if len(set(amap.values())) != len(amap):
        raise Incompatible("inferred arrow map is not a bijection")
    return amap


# --- orbit data ---


@dataclass(frozen=True)
class OrbitStructure:
    """Vertex and arrow orbits of an automorphism.

    Orbits are listed by their earliest member (in quiver order) and each
    orbit tuple walks the cycle starting from that member.
    """

    auto: Automorphism
    vertex_orbits: tuple[tuple[str, ...], ...]
    arrow_orbits: tuple[tuple[str, ...], ...]

    @property
    def quiver(self) -> Quiver:
        return self.auto.quiver

    @property
    def order(self) -> int:
        return self.auto.order

    @cached_property
    def d(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.vertex_orbits)

    @cached_property
    def arrow_orbit_lengths(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.arrow_orbits)

    @cached_property
    def orbit_names(self) -> tuple[str, ...]:
        return tuple(o[0] for o in self.vertex_orbits)

    @cached_property
    def orbit_of_vertex(self) -> dict[str, int]:
        return {v: k for k, orb in enumerate(self.vertex_orbits) for v in orb}

    @cached_property
    def orbit_of_arrow(self) -> dict[str, int]:
        return {r: k for k, orb in enumerate(self.arrow_orbits) for r in orb}

    @cached_property
    def arrow_orbit_ends(self) -> tuple[tuple[int, int], ...]:
        """(source orbit, target orbit) for each arrow orbit."""
        q = self.quiver
        out = []
        for orb in self.arrow_orbits:
            r = q.arrow_by_id[orb[0]]
            out.append((self.orbit_of_vertex[r.source], self.orbit_of_vertex[r.target]))
        return tuple(out)


def orbit_structure(a: Automorphism) -> OrbitStructure:
    q = a.quiver
    vorb = tuple(_cycles(q.vertices, a.vertex_map))
    aorb = tuple(_cycles(tuple(r.id for r in q.arrows), a.arrow_map))
    st = OrbitStructure(a, vorb, aorb)
    n = a.order
    for dv in st.d:
        if n % dv != 0:
            raise NotPermutation("vertex orbit length does not divide the order")
    for k, ell in enumerate(st.arrow_orbit_lengths):
        si, ti = st.arrow_orbit_ends[k]
        t = lcm(st.d[si], st.d[ti])
        if ell % t != 0 or n % ell != 0:
            raise NotPermutation("arrow orbit length violates the divisibility chain")
    return st


def act_on_dimension_vector(a: Automorphism, d: Sequence[int]) -> tuple[int, ...]:
    """Push a dimension vector forward: the value at vertex v moves to a(v)."""
    q = a.quiver
    vec = q.check_vector(d)
    out = [0] * len(vec)
    idx = q.vertex_index
    for k, v in enumerate(q.vertices):
        out[idx[a.apply_vertex(v)]] = vec[k]
    return tuple(out)

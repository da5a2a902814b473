"""JSON documents for quivers, valued quivers, representations, catalogs
and reports.

The emitted JSON is deterministic (sorted keys, two-space indent, trailing
newline) so identical inputs produce identical bytes.
"""

from __future__ import annotations

import json
from typing import Any

from .cartan import FoldData, ValuedQuiver, make_valued_quiver
from .catalog import IsoClassCatalog, twist_annotations
from .errors import Incompatible
from .gf import field_from_spec
from .quiver import Automorphism, Quiver, validate_automorphism, validate_quiver
from .reps import Representation, make_representation
from .skew import SkewQuiver


def json_dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# --- quivers with optional automorphism ---


def quiver_to_dict(q: Quiver, a: Automorphism | None = None) -> dict:
    doc: dict[str, Any] = {
        "vertices": list(q.vertices),
        "arrows": [{"id": r.id, "from": r.source, "to": r.target} for r in q.arrows],
    }
    if a is not None:
        doc["automorphism"] = {
            "vertices": {v: w for v, w in a.vertex_map.items() if v != w},
            "arrows": {r: s for r, s in a.arrow_map.items() if r != s},
        }
    return doc


def quiver_from_dict(doc: dict) -> tuple[Quiver, Automorphism | None]:
    if "vertices" not in doc or "arrows" not in doc:
        raise Incompatible("quiver document needs 'vertices' and 'arrows'")
    q = validate_quiver(doc["vertices"], doc["arrows"])
    auto = None
    spec = doc.get("automorphism")
    if spec is not None:
        auto = validate_automorphism(q, spec.get("vertices", {}), spec.get("arrows"))
    return q, auto


# --- valued quivers ---


def valued_to_dict(vq: ValuedQuiver) -> dict:
    return {
        "vertices": list(vq.vertices),
        "d": {v: w for v, w in zip(vq.vertices, vq.d)},
        "edges": [{"from": e.source, "to": e.target, "b": e.b} for e in vq.edges],
    }


def valued_from_dict(doc: dict) -> ValuedQuiver:
    for key in ("vertices", "d", "edges"):
        if key not in doc:
            raise Incompatible(f"valued quiver document needs {key!r}")
    verts = [str(v) for v in doc["vertices"]]
    dmap = doc["d"]
    if isinstance(dmap, dict):
        d = [int(dmap[v]) for v in verts]
    else:
        d = [int(x) for x in dmap]
    return make_valued_quiver(verts, d, doc["edges"])


def is_valued_document(doc: dict) -> bool:
    return "d" in doc and "edges" in doc


def fold_to_dict(fd: FoldData) -> dict:
    vq = fd.valued_quiver
    return {
        "orbits": {
            name: list(members)
            for name, members in zip(fd.orbit_names, fd.orbits.vertex_orbits)
        },
        "b_matrix": [list(row) for row in fd.b_matrix],
        "c_matrix": [list(row) for row in fd.c_matrix],
        "d": list(fd.d),
        "valued": valued_to_dict(vq),
        "edge_pairs": [list(vq.edge_pair(e)) for e in vq.edges],
    }


def skew_to_dict(skq: SkewQuiver) -> dict:
    doc = quiver_to_dict(skq.quiver, skq.auto)
    doc["origins"] = {
        rid: {"arrow_orbit": o.arrow_orbit, "residue": o.residue}
        for rid, o in skq.origin_of_arrow.items()
    }
    return doc


# --- representations ---


def rep_to_dict(rep: Representation) -> dict:
    return {
        "field": rep.field.spec,
        "dims": {v: d for v, d in zip(rep.quiver.vertices, rep.dims)},
        "matrices": {
            r.id: [list(row) for row in m]
            for r, m in zip(rep.quiver.arrows, rep.matrices)
        },
    }


def rep_from_dict(doc: dict, quiver: Quiver) -> Representation:
    for key in ("field", "dims"):
        if key not in doc:
            raise Incompatible(f"representation document needs {key!r}")
    fld = field_from_spec(doc["field"])
    dims_doc = doc["dims"]
    if isinstance(dims_doc, dict):
        dims = [int(dims_doc.get(v, 0)) for v in quiver.vertices]
    else:
        dims = [int(x) for x in dims_doc]
    return make_representation(quiver, fld, dims, doc.get("matrices"))


# --- catalogs ---


def catalog_to_dict(cat: IsoClassCatalog, a: Automorphism | None = None) -> dict:
    notes = twist_annotations(cat, a)
    classes = []
    for ci in range(cat.n_classes):
        entry: dict[str, Any] = {
            "state": int(cat.class_reps[ci]),
            "orbit_size": int(cat.sizes[ci]),
            "indecomposable": bool(cat.indec_flags[ci]),
            "frobenius_period": notes[ci]["frobenius_period"],
        }
        if a is not None:
            entry["auto_period"] = notes[ci]["auto_period"]
        classes.append(entry)
    return {
        "field": cat.field.spec,
        "dims": {v: d for v, d in zip(cat.quiver.vertices, cat.dims)},
        "state_count": int(cat.space.size),
        "classes": classes,
    }

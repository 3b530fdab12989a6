"""JSON serialization: matrices, codes, graphs, local structures.

Schemas are versioned ("matrix/1", "code/1", "graph/1"); loaders reject
unknown fields so stale files fail loudly.  Matrix round-trips are bit-exact
(field elements are plain ints).
"""

from __future__ import annotations

import json
from .code import CodeParams, LinearCode
from .field import GF, field_make
from .graphs import Graph
from .matrix import Mat
from .mr_codes import LocalStructure


class SchemaError(ValueError):
    pass


def _check_fields(obj: dict, allowed: set, what: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise SchemaError(f"unknown fields in {what}: {sorted(unknown)}")


def field_to_json(gf: GF) -> dict:
    return {"p": gf.p, "m": gf.m, "modulus": list(gf.modulus)}


def field_from_json(obj: dict) -> GF:
    _check_fields(obj, {"p", "m", "modulus"}, "field")
    modulus = obj.get("modulus") or None
    if obj.get("m", 1) == 1:
        modulus = None
    return field_make(obj["p"], obj.get("m", 1), modulus)


def matrix_to_json(M: Mat) -> dict:
    return {"schema": "matrix/1", "field": field_to_json(M.gf),
            "rows": M.to_lists(), "cols": M.cols}


def matrix_from_json(obj: dict) -> Mat:
    _check_fields(obj, {"schema", "field", "rows", "cols", "manifest"}, "matrix")
    if obj.get("schema") != "matrix/1":
        raise SchemaError(f"unsupported matrix schema {obj.get('schema')}")
    gf = field_from_json(obj["field"])
    return Mat(gf, obj["rows"], cols=obj.get("cols"))


def structure_to_json(s: LocalStructure) -> dict:
    return {"groups": [list(g) for g in s.groups], "delta": s.delta}


def structure_from_json(obj: dict) -> LocalStructure:
    _check_fields(obj, {"groups", "delta"}, "local_structure")
    return LocalStructure(tuple(tuple(g) for g in obj["groups"]),
                          delta=obj.get("delta", 1))


def code_to_json(code: LinearCode) -> dict:
    out = {"schema": "code/1", "field": field_to_json(code.gf),
           "rows": code.H.to_lists(), "cols": code.n}
    if code.params is not None:
        out["params"] = code.params.as_dict()
    prov = {k: v for k, v in code.provenance.items()
            if k != "local_structure"}
    if prov:
        out["provenance"] = prov
    structure = code.provenance.get("local_structure")
    if structure is not None:
        out["local_structure"] = structure_to_json(structure)
    return out


def code_from_json(obj: dict) -> LinearCode:
    _check_fields(obj, {"schema", "field", "rows", "cols", "params",
                        "provenance", "local_structure", "manifest",
                        "verdict"}, "code")
    if obj.get("schema") != "code/1":
        raise SchemaError(f"unsupported code schema {obj.get('schema')}")
    gf = field_from_json(obj["field"])
    H = Mat(gf, obj["rows"], cols=obj.get("cols"))
    params = None
    if "params" in obj:
        allowed = {"n", "k", "r", "t", "d_min", "q", "role"}
        _check_fields(obj["params"], allowed, "params")
        params = CodeParams(**obj["params"])
    provenance = dict(obj.get("provenance", {}))
    if "local_structure" in obj:
        provenance["local_structure"] = structure_from_json(
            obj["local_structure"])
    return LinearCode(H, params=params, provenance=provenance)


def graph_to_json(g: Graph) -> dict:
    return {"schema": "graph/1", "nodes": g.node_count,
            "edges": [list(e) for e in g.edges],
            "labels": {k: list(v) for k, v in g.labels.items()}}


def graph_from_json(obj: dict) -> Graph:
    _check_fields(obj, {"schema", "nodes", "edges", "labels", "manifest"},
                  "graph")
    if obj.get("schema") != "graph/1":
        raise SchemaError(f"unsupported graph schema {obj.get('schema')}")
    return Graph(obj["nodes"], [tuple(e) for e in obj["edges"]],
                 labels=obj.get("labels"))


def dump(obj: dict, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(obj, fh, indent=1, sort_keys=True)
        fh.write("\n")


def load(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)

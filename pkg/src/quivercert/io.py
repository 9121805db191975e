"""JSON schemas for algebras, modules, and lattices, plus DOT export.

Scalars are decimal strings ("3", "-7/2") everywhere.  Matrices are
row-major nested lists; a matrix for an arrow x -> y has dim(y) rows
and dim(x) columns.  The exact grammar is documented in README.md.
"""

from __future__ import annotations

import hashlib
import json

from .algebra import BasicAlgebra, Relation, build_algebra, tensor
from .fields import field_from_name, field_name
from .lattice import Lattice, poly_from_terms
from .matrix import Matrix
from .module import Module
from .quiver import Quiver


class InputError(ValueError):
    pass


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


def payload_hash(payload) -> str:
    return hashlib.sha256(canonical_json(payload).encode()).hexdigest()


# -- algebras ---------------------------------------------------------------

def algebra_to_json(algebra: BasicAlgebra) -> dict:
    payload = {
        "field": field_name(algebra.field),
        "vertices": list(algebra.quiver.vertices),
        "arrows": [{"name": a.name, "source": a.source, "target": a.target}
                   for a in algebra.quiver.arrows],
        "relations": [[{"coeff": c, "path": list(p)} for c, p in rel.terms]
                      for rel in algebra.relations],
        "max_path_length": algebra.max_len,
    }
    if algebra.flags:
        payload["flags"] = sorted(algebra.flags)
    if algebra.tensor_of is not None:
        payload["tensor_of"] = [algebra_to_json(f) for f in algebra.tensor_of]
    return payload


def algebra_from_json(payload: dict, field_override=None) -> BasicAlgebra:
    try:
        field = field_from_name(field_override or payload["field"])
        if payload.get("tensor_of"):
            factors = [algebra_from_json(f, field_override=field_name(field))
                       for f in payload["tensor_of"]]
            out = factors[0]
            for f in factors[1:]:
                out = tensor(out, f)
            _check_names(out, payload)
            return out
        quiver = Quiver.build(
            payload["vertices"],
            [(a["name"], a["source"], a["target"]) for a in payload["arrows"]])
        relations = [Relation.build([(t["coeff"], tuple(t["path"])) for t in rel])
                     for rel in payload.get("relations", [])]
        return build_algebra(quiver, field, relations,
                             int(payload.get("max_path_length", 30)),
                             flags=payload.get("flags", ()))
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed algebra payload: {exc}") from exc


def _check_names(algebra: BasicAlgebra, payload: dict):
    if list(algebra.quiver.vertices) != list(payload.get("vertices", [])):
        raise InputError("tensor_of factors disagree with the stored vertex list")


def load_algebra(path: str, field_override=None) -> tuple[BasicAlgebra, str]:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read algebra file {path}: {exc}") from exc
    return algebra_from_json(payload, field_override), payload_hash(payload)


def save_algebra(algebra: BasicAlgebra, path: str):
    with open(path, "w") as fh:
        json.dump(algebra_to_json(algebra), fh, indent=2, sort_keys=True)
        fh.write("\n")


# -- modules -----------------------------------------------------------------

def module_to_json(m: Module) -> dict:
    return {
        "dims": {v: m.dims[v] for v in m.algebra.quiver.vertices},
        "action": {a.name: m.action[a.name].to_strings()
                   for a in m.algebra.quiver.arrows},
        "algebra_hash": payload_hash(algebra_to_json(m.algebra)),
        "content_hash": m.content_hash(),
        "dim_vector": list(m.dim_vector()),
    }


def module_from_json(payload: dict, algebra: BasicAlgebra) -> Module:
    try:
        dims = {v: int(n) for v, n in payload["dims"].items()}
        action = {}
        for a in algebra.quiver.arrows:
            rows = payload.get("action", {}).get(a.name)
            if rows is None:
                continue
            action[a.name] = Matrix.from_rows(algebra.field, rows)
        return Module(algebra, dims, action)
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed module payload: {exc}") from exc


def load_module(path: str, algebra: BasicAlgebra) -> tuple[Module, str]:
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read module file {path}: {exc}") from exc
    return module_from_json(payload, algebra), payload_hash(payload)


# -- lattices -----------------------------------------------------------------

def lattice_to_json(lat: Lattice) -> dict:
    action = {}
    for a in lat.algebra.quiver.arrows:
        rows = []
        for row in lat.action[a.name]:
            rows.append([[[lat.field.format(c), list(e)] for e, c in sorted(entry.items())]
                         for entry in row])
        action[a.name] = rows
    return {
        "field": field_name(lat.field),
        "d": lat.d,
        "rank": {v: lat.rank[v] for v in lat.algebra.quiver.vertices},
        "action": action,
        "algebra": algebra_to_json(lat.algebra),
    }


def lattice_from_json(payload: dict, field_override=None) -> tuple[Lattice, BasicAlgebra]:
    try:
        algebra = algebra_from_json(payload["algebra"], field_override)
        d = int(payload["d"])
        rank = {v: int(n) for v, n in payload["rank"].items()}
        action = {}
        for a in algebra.quiver.arrows:
            rows = payload["action"].get(a.name)
            if rows is None:
                continue
            action[a.name] = [
                [poly_from_terms(algebra.field,
                                 [(c, tuple(e)) for c, e in entry], d)
                 for entry in row]
                for row in rows
            ]
        return Lattice(algebra, d, rank, action), algebra
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed lattice payload: {exc}") from exc


def load_lattice(path: str, field_override=None):
    try:
        with open(path) as fh:
            payload = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read lattice file {path}: {exc}") from exc
    lat, algebra = lattice_from_json(payload, field_override)
    return lat, algebra, payload_hash(payload)


def save_lattice(lat: Lattice, path: str):
    with open(path, "w") as fh:
        json.dump(lattice_to_json(lat), fh, indent=2, sort_keys=True)
        fh.write("\n")

"""Socle truncations of projectives/injectives, the (P1)/(P2) brick and
embedding conditions, the tier layering, and coefficient quivers.

The layering follows the display: layer i collects the truncations
with projective index n+2-i and injective index i, on top of the lower
layers; a module meeting both families is placed at the earliest layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .algebra import BasicAlgebra
from .decompose import EndAlgebra, Undecided, decompose, is_isomorphic
from .matrix import Matrix
from .module import (
    Module, ModuleMap, hom_basis, injective, projective, radical, socle_series,
    submodule,
)
from .quiver import NotTiered, nicely_tiered_check

P2_RANDOM_TRIALS = 64
P2_EXHAUSTIVE_LIMIT = 4096


class NotNicelyTiered(ValueError):
    pass


class NotTensorOfBipartite(ValueError):
    pass


@dataclass
class Truncation:
    module: Module
    p_indices: list  # (vertex, t, LL(P) - t)
    q_indices: list  # (vertex, t)

    def describe(self) -> dict:
        return {
            "dims": list(self.module.dim_vector()),
            "p_indices": self.p_indices,
            "q_indices": self.q_indices,
        }


def require_nicely_tiered(algebra: BasicAlgebra) -> dict[str, int]:
    try:
        ok, tiers, witness = nicely_tiered_check(algebra.quiver)
    except NotTiered as exc:
        raise NotNicelyTiered(str(exc)) from None
    if not ok:
        raise NotNicelyTiered(witness)
    for rel in algebra.relations:
        if len(rel.terms) != 2:
            raise NotNicelyTiered(
                f"relation {rel.describe()} is not a commutativity relation")
        (c1, _), (c2, _) = rel.terms
        field = algebra.field
        if field.add(field.element(c1), field.element(c2)) != field.zero():
            raise NotNicelyTiered(
                f"relation {rel.describe()} is not a commutativity relation")
    return tiers


def truncations(algebra: BasicAlgebra) -> list[Truncation]:
    """All tP (t >= 2) and tQ (t >= 1), deduplicated by isomorphism and
    tagged with their layer indices."""
    require_nicely_tiered(algebra)
    entries: list[Truncation] = []

    def absorb(module: Module, p_idx, q_idx):
        for e in entries:
            ok, _ = is_isomorphic(e.module, module, assume_indecomposable=True)
            if ok:
                if p_idx:
                    e.p_indices.append(p_idx)
                if q_idx:
                    e.q_indices.append(q_idx)
                return
        entries.append(Truncation(module, [p_idx] if p_idx else [],
                                  [q_idx] if q_idx else []))

    for x in algebra.quiver.vertices:
        p = projective(algebra, x)
        ll = len([d for d in _loewy_dims(p)])
        if ll >= 2:
            for t in range(2, ll + 1):
                tp, _ = socle_series(p, t)
                absorb(tp, (x, t, ll - t), None)
    for x in algebra.quiver.vertices:
        q = injective(algebra, x)
        ll = len(_loewy_dims(q))
        for t in range(1, ll + 1):
            tq, _ = socle_series(q, t)
            absorb(tq, None, (x, t))
    entries.sort(key=lambda e: (e.module.total_dim(), e.module.dim_vector(),
                                e.module.content_hash()))
    return entries


def _loewy_dims(m: Module) -> list[int]:
    from .module import socle_layers
    return socle_layers(m)


def p1_check(algebra: BasicAlgebra):
    """(P1): the second socle of every projective of Loewy length >= 3 is
    a brick.  Returns (ok, witnesses)."""
    require_nicely_tiered(algebra)
    witnesses = []
    for x in algebra.quiver.vertices:
        p = projective(algebra, x)
        if len(_loewy_dims(p)) < 3:
            continue
        tp, _ = socle_series(p, 2)
        end = EndAlgebra(tp)
        if end.dim != 1:
            witnesses.append({"vertex": x, "end_dim": end.dim,
                              "dims": list(tp.dim_vector())})
    return not witnesses, witnesses


def _injective_combination(maps, rng: Random, field):
    coeffs = ([field.from_int(rng.randrange(field.p)) for _ in maps]
              if field.is_prime_field
              else [field.from_int(rng.randrange(-8, 9)) for _ in maps])
    total = None
    for c, f in zip(coeffs, maps):
        part = f.scale(c)
        total = part if total is None else total + part
    return total


def find_embedding(p: Module, q: Module, seed: int = 0):
    """An injective ModuleMap p -> q, or None (certified when the field is
    small or a dimension obstruction exists); raises Undecided otherwise."""
    for v in p.algebra.quiver.vertices:
        if p.dims[v] > q.dims[v]:
            return None  # certified: no injective map can exist
    maps = hom_basis(p, q)
    if not maps:
        return None
    for f in maps:
        if f.is_injective():
            return f
    field = p.field
    rng = Random(seed)
    for _ in range(P2_RANDOM_TRIALS):
        cand = _injective_combination(maps, rng, field)
        if cand is not None and cand.is_injective():
            return cand
    if field.is_prime_field and field.p ** len(maps) <= P2_EXHAUSTIVE_LIMIT:
        from itertools import product
        for coeffs in product(range(field.p), repeat=len(maps)):
            total = None
            for c, f in zip(coeffs, maps):
                if c:
                    part = f.scale(field.from_int(c))
                    total = part if total is None else total + part
            if total is not None and total.is_injective():
                return total
        return None  # exhaustive: certified absent
    raise Undecided("embedding search exhausted without certificate")


def p2_check(algebra: BasicAlgebra, seed: int = 0):
    """(P2): nonzero Hom between second socles forces an embedding of the
    projectives.  Returns (ok, witnesses)."""
    require_nicely_tiered(algebra)
    tall = []
    for x in algebra.quiver.vertices:
        p = projective(algebra, x)
        if len(_loewy_dims(p)) >= 3:
            tp, _ = socle_series(p, 2)
            tall.append((x, p, tp))
    witnesses = []
    for x, p, tp in tall:
        for y, q, tq in tall:
            if not hom_basis(tp, tq):
                continue
            emb = find_embedding(p, q, seed)
            if emb is None:
                witnesses.append({"pair": [x, y],
                                  "hom_2p_dim": len(hom_basis(tp, tq))})
    return not witnesses, witnesses


# -- the layering -------------------------------------------------------------------

class LayeringViolation(ValueError):
    pass


@dataclass
class Layering:
    objects: list  # Modules, the deduplicated truncations
    layers: list  # lists of object indices, layer 1 first
    alpha: dict  # object index -> (Module, inclusion)

    def layer_count(self) -> int:
        return len(self.layers)


def build_layering(algebra: BasicAlgebra, trunc: list[Truncation] | None = None) -> Layering:
    """Layers M_1 .. M_{n+2} with alpha N = rad N, verified to fall into
    the strictly lower layers."""
    tiers = require_nicely_tiered(algebra)
    n = max(tiers.values()) if tiers else 0
    trunc = trunc if trunc is not None else truncations(algebra)
    objects = [e.module for e in trunc]
    layer_of = {}
    for idx, e in enumerate(trunc):
        candidates = []
        for (_, _, i) in e.p_indices:
            candidates.append(n + 2 - i)
        for (_, t) in e.q_indices:
            candidates.append(t)
        layer_of[idx] = min(candidates)
    layers = [[] for _ in range(n + 2)]
    for idx, level in layer_of.items():
        layers[level - 1].append(idx)
    alpha = {}
    for idx, obj in enumerate(objects):
        rad, incl = radical(obj)
        alpha[idx] = (rad, incl)
        if rad.is_zero():
            continue
        dec = decompose(rad, 0)
        for part in dec.parts:
            hit = False
            for jdx, other in enumerate(objects):
                if layer_of[jdx] < layer_of[idx]:
                    ok, _ = is_isomorphic(other, part, assume_indecomposable=True)
                    if ok:
                        hit = True
                        break
            if not hit:
                raise LayeringViolation(
                    f"rad of object {idx} has summand {part.dim_vector()} "
                    "outside the lower layers")
    return Layering(objects, layers, alpha)


# -- coefficient quivers ---------------------------------------------------------------

@dataclass
class CoefficientQuiver:
    nodes: list  # (node id, vertex, tier, label)
    edges: list  # (src id, tgt id, arrow name, factor)
    source_vertex: str
    two_socle_connected: bool
    socle_intersection_ok: bool

    def node_count(self) -> int:
        return len(self.nodes)

    def dot(self) -> str:
        lines = ["digraph coefficient_quiver {"]
        for nid, vertex, tier, label in self.nodes:
            lines.append(f'  n{nid} [label="{label}", comment="vertex {vertex} tier {tier}"];')
        styles = {0: "solid", 1: "dashed", 2: "dotted", 3: "bold"}
        for src, tgt, arrow, factor in self.edges:
            style = styles.get(factor % 4, "solid")
            lines.append(f'  n{src} -> n{tgt} [label="{arrow}", style={style}];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _bipartite_path_algebra(algebra: BasicAlgebra) -> bool:
    if algebra.relations:
        return False
    q = algebra.quiver
    return all(not q.arrows_from(v) or not q.arrows_to(v) for v in q.vertices)


def _tensor_factors(algebra: BasicAlgebra):
    if algebra.tensor_of is None:
        return [algebra]
    a, b = algebra.tensor_of
    return _tensor_factors(a) + _tensor_factors(b)


def coefficient_quiver(algebra: BasicAlgebra, x: str) -> CoefficientQuiver:
    """Coefficient quiver of P(x) on the path basis, with the connectivity
    verdict for the second-socle part and the socle-intersection check."""
    factors = _tensor_factors(algebra)
    if algebra.tensor_of is None or not all(_bipartite_path_algebra(f) for f in factors):
        raise NotTensorOfBipartite(
            "coefficient quiver is certified only for tensors of bipartite path algebras")
    tiers = require_nicely_tiered(algebra)
    p = projective(algebra, x)
    field = algebra.field
    nodes = []
    node_id = {}
    for v in algebra.quiver.vertices:
        fiber = algebra.basis_by_pair.get((x, v), [])
        for pos, bidx in enumerate(fiber):
            path = algebra.basis_paths[bidx]
            label = ".".join(path) if len(path) else f"e({v})"
            node_id[(v, pos)] = len(nodes)
            nodes.append((len(nodes), v, tiers[v], label))
    edges = []
    for a in algebra.quiver.arrows:
        mat = p.action[a.name]
        factor = algebra.arrow_factor.get(a.name, 0)
        for col in range(mat.cols):
            for row in range(mat.rows):
                if mat[row, col] != field.zero():
                    edges.append((node_id[(a.source, col)],
                                  node_id[(a.target, row)], a.name, factor))
    # connectivity of the second-socle part (tiers 0 and 1)
    low = {nid for nid, v, tier, _ in nodes if tier <= 1}
    adj = {nid: set() for nid in low}
    for src, tgt, _, _ in edges:
        if src in low and tgt in low:
            adj[src].add(tgt)
            adj[tgt].add(src)
    connected = True
    if low:
        seen = set()
        stack = [next(iter(sorted(low)))]
        while stack:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            stack.extend(adj[cur] - seen)
        connected = seen == low
    # socle-intersection: each tier-0 basis line is the meet of the images
    # of its incoming arrow actions (tier-1 fibers sit fully inside 2P)
    intersection_ok = True
    for nid, v, tier, label in nodes:
        if tier != 0:
            continue
        incoming_arrows = sorted({arrow for src, tgt, arrow, _ in edges if tgt == nid})
        if len(incoming_arrows) != len(factors):
            intersection_ok = False
            continue
        meet = None
        for arrow in incoming_arrows:
            img = p.action[arrow].column_space_basis()
            meet = img if meet is None else _meet(meet, img)
        pos = [k for (vv, k), nn in node_id.items() if nn == nid and vv == v][0]
        if meet is None or meet.cols != 1:
            intersection_ok = False
            continue
        expected = Matrix.zero(field, meet.rows, 1)
        expected[pos, 0] = field.one()
        joined = Matrix.hstack([meet, expected])
        if joined.rank() != 1:
            intersection_ok = False
    return CoefficientQuiver(nodes, edges, x, connected, intersection_ok)


def _meet(a: Matrix, b: Matrix) -> Matrix:
    """Basis of the intersection of two column spans."""
    if a.cols == 0 or b.cols == 0:
        return Matrix.zero(a.field, a.rows, 0)
    joined = Matrix.hstack([a, b.scale(a.field.neg(a.field.one()))])
    kern = joined.kernel_basis()
    coords = kern.submatrix(range(a.cols), range(kern.cols))
    return (a @ coords).column_space_basis()

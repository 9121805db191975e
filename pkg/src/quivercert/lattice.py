"""Polynomial-coefficient lattices, canonical self-extension sequences,
Ext-class non-vanishing tests, and external (Kuenneth-style) products.

A lattice is a module over (algebra) x k[T_1..T_d] that is free over the
polynomial ring: fibers are free of finite rank, arrows act by matrices
with polynomial entries, and all relations vanish identically.
Specializing T at a point gives an ordinary module; tensoring with the
canonical length-2 self-extension of a point gives degree-1 Ext classes
whose non-vanishing is decided by exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BasicAlgebra, tensor as tensor_algebra
from .fields import Field
from .matrix import Matrix, NoSolution
from .module import (
    Module, ModuleMap, direct_sum, hom_basis, kernel_of_map, zero_map,
)
from .functors import min_projective_presentation, projective_cover

MAX_POLY_DEGREE = 8
MAX_VARIABLES = 2


class LatticeError(ValueError):
    pass


# -- multivariate polynomials (tiny: d <= 2, degree <= 8) --------------------------

def poly_normalize(field: Field, mono) -> dict:
    out = {}
    for exps, c in mono.items():
        c = field.element(c)
        if c != field.zero():
            out[tuple(int(e) for e in exps)] = c
    return out


def poly_from_terms(field: Field, terms, d: int) -> dict:
    out = {}
    for coeff, exps in terms:
        exps = tuple(int(e) for e in exps)
        if len(exps) != d:
            raise LatticeError(f"monomial exponents {exps} do not match d={d}")
        if sum(exps) > MAX_POLY_DEGREE:
            raise LatticeError("polynomial degree above the supported bound")
        c = field.element(coeff)
        out[exps] = field.add(out.get(exps, field.zero()), c)
    return poly_normalize(field, out)


def poly_constant(field: Field, value, d: int) -> dict:
    return poly_from_terms(field, [(value, (0,) * d)], d)


def poly_add(field: Field, p, q) -> dict:
    out = dict(p)
    for exps, c in q.items():
        out[exps] = field.add(out.get(exps, field.zero()), c)
    return poly_normalize(field, out)


def poly_mul(field: Field, p, q) -> dict:
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            exps = tuple(a + b for a, b in zip(e1, e2))
            out[exps] = field.add(out.get(exps, field.zero()), field.mul(c1, c2))
    return poly_normalize(field, out)


def poly_scale(field: Field, p, c) -> dict:
    return poly_normalize(field, {e: field.mul(c, v) for e, v in p.items()})


def poly_eval(field: Field, p, point) -> object:
    total = field.zero()
    for exps, c in p.items():
        term = c
        for a, e in zip(point, exps):
            for _ in range(e):
                term = field.mul(term, a)
        total = field.add(total, term)
    return total


def poly_eval_matrix(field: Field, p, t_mat: Matrix) -> Matrix:
    """p(T) at a square matrix (single variable only)."""
    n = t_mat.rows
    out = Matrix.zero(field, n, n)
    for exps, c in p.items():
        power = Matrix.identity(field, n)
        for _ in range(exps[0]):
            power = power @ t_mat
        out = out + power.scale(c)
    return out


# -- lattices ------------------------------------------------------------------------

class Lattice:
    """Free-over-k[T] family of modules: rank vector + polynomial matrices."""

    def __init__(self, algebra: BasicAlgebra, d: int, rank, action, check: bool = True):
        if not 1 <= d <= MAX_VARIABLES:
            raise LatticeError(f"d={d} outside the supported range")
        self.algebra = algebra
        self.field = algebra.field
        self.d = d
        self.rank = {v: int(rank.get(v, 0)) for v in algebra.quiver.vertices}
        self.action = {}
        for a in algebra.quiver.arrows:
            mat = action.get(a.name)
            rows, cols = self.rank[a.target], self.rank[a.source]
            if mat is None:
                mat = [[poly_constant(self.field, 0, d) for _ in range(cols)]
                       for _ in range(rows)]
            if len(mat) != rows or any(len(r) != cols for r in mat):
                raise LatticeError(f"arrow {a.name}: polynomial matrix shape mismatch")
            self.action[a.name] = [[poly_normalize(self.field, e) for e in row]
                                   for row in mat]
        if check:
            bad = self.relation_defect()
            if bad is not None:
                raise LatticeError(f"lattice violates relation {bad}")

    def _poly_matmul(self, a, b):
        rows, mid, cols = len(a), len(b), len(b[0]) if b else 0
        zero = poly_constant(self.field, 0, self.d)
        out = [[zero for _ in range(cols)] for _ in range(rows)]
        for i in range(rows):
            for k in range(mid):
                if not a[i][k]:
                    continue
                for j in range(cols):
                    if b[k][j]:
                        out[i][j] = poly_add(self.field, out[i][j],
                                             poly_mul(self.field, a[i][k], b[k][j]))
        return out

    def path_matrix(self, path):
        arrows = [self.algebra.quiver.arrow(n) for n in path]
        mat = self.action[arrows[0].name]
        for a in arrows[1:]:
            mat = self._poly_matmul(self.action[a.name], mat)
        return mat

    def relation_defect(self):
        for rel in self.algebra.relations:
            total = None
            for coeff, path in rel.terms:
                term = self.path_matrix(path)
                c = self.field.element(coeff)
                term = [[poly_scale(self.field, e, c) for e in row] for row in term]
                if total is None:
                    total = term
                else:
                    total = [[poly_add(self.field, x, y) for x, y in zip(r1, r2)]
                             for r1, r2 in zip(total, term)]
            if total is not None and any(e for row in total for e in row):
                return rel.describe()
        return None

    def specialize(self, point) -> Module:
        """Substitute T_i = point_i in every action matrix."""
        if len(point) != self.d:
            raise LatticeError("point arity mismatch")
        point = [self.field.element(a) for a in point]
        action = {}
        for a in self.algebra.quiver.arrows:
            rows, cols = self.rank[a.target], self.rank[a.source]
            m = Matrix.zero(self.field, rows, cols)
            for i in range(rows):
                for j in range(cols):
                    m[i, j] = poly_eval(self.field, self.action[a.name][i][j], point)
            action[a.name] = m
        return Module(self.algebra, dict(self.rank), action)

    def tensor_with_t_module(self, t_matrices: list[Matrix]) -> Module:
        """L (x)_R V for a finite-length k[T_1..T_d]-module V given by
        commuting matrices of the T_i; fiber basis is (lattice, V) pairs."""
        if len(t_matrices) != self.d:
            raise LatticeError("need one T-matrix per variable")
        vdim = t_matrices[0].rows if t_matrices else 1
        field = self.field
        action = {}
        for a in self.algebra.quiver.arrows:
            rows, cols = self.rank[a.target], self.rank[a.source]
            big = Matrix.zero(field, rows * vdim, cols * vdim)
            for i in range(rows):
                for j in range(cols):
                    block = Matrix.zero(field, vdim, vdim)
                    for exps, c in self.action[a.name][i][j].items():
                        term = Matrix.identity(field, vdim).scale(c)
                        for t_mat, e in zip(t_matrices, exps):
                            for _ in range(e):
                                term = term @ t_mat
                        block = block + term
                    for r in range(vdim):
                        for s in range(vdim):
                            big[i * vdim + r, j * vdim + s] = block[r, s]
            action[a.name] = big
        dims = {v: self.rank[v] * vdim for v in self.algebra.quiver.vertices}
        return Module(self.algebra, dims, action)


def constant_lattice(module: Module, d: int = 1) -> Lattice:
    """module (x) k[T]: every specialization returns the module."""
    field = module.field
    action = {}
    for a in module.algebra.quiver.arrows:
        m = module.action[a.name]
        action[a.name] = [[poly_constant(field, m[i, j], d) for j in range(m.cols)]
                          for i in range(m.rows)]
    return Lattice(module.algebra, d, dict(module.dims), action, check=False)


def kronecker_family(algebra: BasicAlgebra) -> Lattice:
    """The one-parameter family (R, R; 1, T) on a double arrow.

    Requires a bipartite double-arrow pair in the quiver; ranks are 1 on
    its two endpoints and 0 elsewhere.
    """
    pair = None
    arrows = algebra.quiver.arrows
    for i in range(len(arrows)):
        for j in range(i + 1, len(arrows)):
            if (arrows[i].source, arrows[i].target) == (arrows[j].source, arrows[j].target):
                pair = (arrows[i], arrows[j])
                break
        if pair:
            break
    if pair is None:
        raise LatticeError("no double arrow available for the canonical family")
    a, b = pair
    field = algebra.field
    rank = {a.source: 1, a.target: 1}
    action = {
        a.name: [[poly_constant(field, 1, 1)]],
        b.name: [[poly_from_terms(field, [("1", (1,))], 1)]],
    }
    return Lattice(algebra, 1, rank, action, check=False)


def tensor_lattice(product_algebra: BasicAlgebra, left: Lattice, right: Lattice) -> Lattice:
    """left (x) right over the tensor algebra, variables renumbered."""
    if product_algebra.tensor_of is None:
        raise LatticeError("target algebra is not a tensor product")
    field = product_algebra.field
    d = left.d + right.d
    rank = {}
    for x in left.algebra.quiver.vertices:
        for y in right.algebra.quiver.vertices:
            rank[f"{x}.{y}"] = left.rank[x] * right.rank[y]
    action = {}
    zero = poly_constant(field, 0, d)

    def lift_left(p):
        return {exps + (0,) * right.d: c for exps, c in p.items()}

    def lift_right(p):
        return {(0,) * left.d + exps: c for exps, c in p.items()}

    for a in left.algebra.quiver.arrows:
        for y in right.algebra.quiver.vertices:
            rows = left.rank[a.target] * right.rank[y]
            cols = left.rank[a.source] * right.rank[y]
            mat = [[zero for _ in range(cols)] for _ in range(rows)]
            for i in range(left.rank[a.target]):
                for j in range(left.rank[a.source]):
                    p = lift_left(left.action[a.name][i][j])
                    for s in range(right.rank[y]):
                        mat[i * right.rank[y] + s][j * right.rank[y] + s] = dict(p)
            action[f"{a.name}.{y}"] = mat
    for x in left.algebra.quiver.vertices:
        for b in right.algebra.quiver.arrows:
            rows = left.rank[x] * right.rank[b.target]
            cols = left.rank[x] * right.rank[b.source]
            mat = [[zero for _ in range(cols)] for _ in range(rows)]
            for s in range(right.rank[b.target]):
                for t in range(right.rank[b.source]):
                    p = lift_right(right.action[b.name][s][t])
                    for i in range(left.rank[x]):
                        mat[i * right.rank[b.target] + s][i * right.rank[b.source] + t] = dict(p)
            action[f"{x}.{b.name}"] = mat
    return Lattice(product_algebra, d, rank, action)


# -- extension classes -----------------------------------------------------------------

@dataclass
class ExtensionClass:
    """0 -> left -> mids[0] -> ... -> mids[d-1] -> right -> 0."""

    degree: int
    left: Module
    mids: list
    right: Module
    maps: list  # left -> mids[0], ..., mids[-1] -> right
    exact: bool = False

    def verify_exact(self) -> bool:
        chain = [self.left] + self.mids + [self.right]
        comps = self.maps
        if not comps[0].is_injective() or not comps[-1].is_surjective():
            return False
        for f, g in zip(comps, comps[1:]):
            if not f.then(g).is_zero():
                return False
            for v in self.left.algebra.quiver.vertices:
                if g.components[v].kernel_basis().cols != f.components[v].rank():
                    return False
        self.exact = True
        return True


def eps_alpha(field: Field, alpha) -> tuple[list[Matrix], list[Matrix], list[Matrix]]:
    """The canonical nonsplit self-extension of the point module at alpha
    (one variable): returns (T-matrices, inclusion, projection) data as
    ([alpha], middle T-matrix, maps)."""
    a = field.element(alpha)
    s_t = Matrix.from_rows(field, [[field.format(a)]])
    mid_t = Matrix.zero(field, 2, 2)
    mid_t[0, 0] = a
    mid_t[1, 1] = a
    mid_t[1, 0] = field.one()
    incl = Matrix.from_rows(field, [["0"], ["1"]])
    proj = Matrix.from_rows(field, [["1", "0"]])
    return [s_t], [mid_t], (incl, proj)


def tensor_sequence(lat: Lattice, alpha) -> ExtensionClass:
    """L (x)_R eps_alpha: 0 -> L_a -> L(x)R/m^2 -> L_a -> 0, re-verified."""
    if lat.d != 1:
        raise LatticeError("tensor_sequence handles one-variable lattices")
    field = lat.field
    s_ts, mid_ts, (incl_vec, proj_vec) = eps_alpha(field, alpha)
    ends = lat.tensor_with_t_module(s_ts)
    middle = lat.tensor_with_t_module(mid_ts)
    incl_comp, proj_comp = {}, {}
    for v in lat.algebra.quiver.vertices:
        r = lat.rank[v]
        inc = Matrix.zero(field, 2 * r, r)
        prj = Matrix.zero(field, r, 2 * r)
        for i in range(r):
            inc[2 * i + 1, i] = field.one()
            prj[i, 2 * i] = field.one()
        incl_comp[v] = inc
        proj_comp[v] = prj
    incl = ModuleMap(ends, middle, incl_comp)
    proj = ModuleMap(middle, ends, proj_comp)
    cls = ExtensionClass(1, ends, [middle], ends, [incl, proj])
    if not cls.verify_exact():
        raise LatticeError("tensored sequence failed exactness")
    return cls


# -- Ext non-vanishing -------------------------------------------------------------------

def _lift_through(candidates_src: Module, through: ModuleMap, target: ModuleMap) -> ModuleMap:
    """h: candidates_src -> through.source with h.then(through) = target."""
    basis = hom_basis(candidates_src, through.source)
    if not basis:
        if target.is_zero():
            return zero_map(candidates_src, through.source)
        raise NoSolution()
    field = candidates_src.field
    cols = []
    for h in basis:
        comp = h.then(through)
        cols.append([e for v in comp.components for e in comp.components[v].entries])
    vec = [e for v in target.components for e in target.components[v].entries]
    mat = Matrix(field, len(vec), len(cols),
                 [cols[c][r] for r in range(len(vec)) for c in range(len(cols))])
    sol = mat.solve(Matrix.column(field, vec))
    out = zero_map(candidates_src, through.source)
    for c, h in zip(sol.col(0), basis):
        if c != field.zero():
            out = out + h.scale(c)
    return out


def _resolution(module: Module, length: int):
    """Minimal projective resolution data: (projectives, differentials,
    augmentation) with differentials d_k: P_k -> P_{k-1}."""
    e = projective_cover(module)
    projs = [e.source]
    diffs = []
    current_ker, current_incl = kernel_of_map(e)
    for _ in range(length):
        cover = projective_cover(current_ker)
        projs.append(cover.source)
        diffs.append(cover.then(current_incl))
        current_ker, current_incl = kernel_of_map(cover)
    return projs, diffs, e


def yoneda_cocycle(cls: ExtensionClass):
    """(cocycle phi_d: P_d -> left, resolution data) by comparison lifting."""
    d = cls.degree
    projs, diffs, aug = _resolution(cls.right, d)
    chain = [cls.left] + cls.mids + [cls.right]
    maps = cls.maps
    phi = _lift_through(projs[0], maps[-1], aug)
    for k in range(1, d):
        target = diffs[k - 1].then(phi)
        phi = _lift_through(projs[k], maps[d - k], target)
    target = diffs[d - 1].then(phi)
    # final step: through the injection left -> mids[0]
    basis = hom_basis(projs[d], cls.left)
    field = cls.left.field
    if basis:
        cols = []
        for h in basis:
            comp = h.then(maps[0])
            cols.append([e for v in comp.components for e in comp.components[v].entries])
        vec = [e for v in target.components for e in target.components[v].entries]
        mat = Matrix(field, len(vec), len(cols),
                     [cols[c][r] for r in range(len(vec)) for c in range(len(cols))])
        sol = mat.solve(Matrix.column(field, vec))
        phi_d = zero_map(projs[d], cls.left)
        for c, h in zip(sol.col(0), basis):
            if c != field.zero():
                phi_d = phi_d + h.scale(c)
    else:
        if not target.is_zero():
            raise LatticeError("cocycle lift failed")
        phi_d = zero_map(projs[d], cls.left)
    return phi_d, projs, diffs


def cocycle_is_coboundary(phi_d: ModuleMap, last_diff: ModuleMap) -> bool:
    """phi_d = last_diff followed by some psi: P_{d-1} -> left?"""
    basis = hom_basis(last_diff.target, phi_d.target)
    field = phi_d.target.field
    if not basis:
        return phi_d.is_zero()
    cols = []
    for psi in basis:
        comp = last_diff.then(psi)
        cols.append([e for v in comp.components for e in comp.components[v].entries])
    vec = [e for v in phi_d.components for e in phi_d.components[v].entries]
    mat = Matrix(field, len(vec), len(cols),
                 [cols[c][r] for r in range(len(vec)) for c in range(len(cols))])
    try:
        mat.solve(Matrix.column(field, vec))
        return True
    except NoSolution:
        return False


def ext_nonzero(cls: ExtensionClass, via: str = "auto") -> bool:
    """Non-vanishing of the class: retraction search in degree 1,
    cocycle-versus-coboundary in any degree."""
    if cls.degree == 1 and via in ("auto", "retraction"):
        incl = cls.maps[0]
        basis = hom_basis(cls.mids[0], cls.left)
        field = cls.left.field
        if not basis:
            return not cls.left.is_zero()
        cols = []
        for r in basis:
            comp = incl.then(r)
            cols.append([e for v in comp.components for e in comp.components[v].entries])
        from .module import identity_map
        ident_map = identity_map(cls.left)
        vec = [e for v in ident_map.components for e in ident_map.components[v].entries]
        mat = Matrix(field, len(vec), len(cols),
                     [cols[c][r] for r in range(len(vec)) for c in range(len(cols))])
        try:
            mat.solve(Matrix.column(field, vec))
            return False  # retraction exists: split
        except NoSolution:
            return True
    phi_d, projs, diffs = yoneda_cocycle(cls)
    return not cocycle_is_coboundary(phi_d, diffs[cls.degree - 1])


# -- external products ----------------------------------------------------------------

def tensor_module(product_algebra: BasicAlgebra, m: Module, n: Module) -> Module:
    """m (x) n over the tensor algebra (fiber basis ordered (m, n))."""
    field = product_algebra.field
    dims = {}
    for x in m.algebra.quiver.vertices:
        for y in n.algebra.quiver.vertices:
            dims[f"{x}.{y}"] = m.dims[x] * n.dims[y]
    action = {}
    for a in m.algebra.quiver.arrows:
        for y in n.algebra.quiver.vertices:
            act = m.action[a.name]
            big = Matrix.zero(field, act.rows * n.dims[y], act.cols * n.dims[y])
            for i in range(act.rows):
                for j in range(act.cols):
                    if act[i, j] != field.zero():
                        for s in range(n.dims[y]):
                            big[i * n.dims[y] + s, j * n.dims[y] + s] = act[i, j]
            action[f"{a.name}.{y}"] = big
    for x in m.algebra.quiver.vertices:
        for b in n.algebra.quiver.arrows:
            act = n.action[b.name]
            big = Matrix.zero(field, m.dims[x] * act.rows, m.dims[x] * act.cols)
            for i in range(m.dims[x]):
                for s in range(act.rows):
                    for t in range(act.cols):
                        if act[s, t] != field.zero():
                            big[i * act.rows + s, i * act.cols + t] = act[s, t]
            action[f"{x}.{b.name}"] = big
    return Module(product_algebra, dims, action)


def tensor_map_left(product_algebra, f: ModuleMap, n: Module) -> ModuleMap:
    """f (x) id_n."""
    src = tensor_module(product_algebra, f.source, n)
    tgt = tensor_module(product_algebra, f.target, n)
    field = product_algebra.field
    comps = {}
    for x in f.source.algebra.quiver.vertices:
        for y in n.algebra.quiver.vertices:
            block = f.components[x]
            big = Matrix.zero(field, block.rows * n.dims[y], block.cols * n.dims[y])
            for i in range(block.rows):
                for j in range(block.cols):
                    if block[i, j] != field.zero():
                        for s in range(n.dims[y]):
                            big[i * n.dims[y] + s, j * n.dims[y] + s] = block[i, j]
            comps[f"{x}.{y}"] = big
    return ModuleMap(src, tgt, comps, check=False)


def tensor_map_right(product_algebra, m: Module, g: ModuleMap) -> ModuleMap:
    """id_m (x) g."""
    src = tensor_module(product_algebra, m, g.source)
    tgt = tensor_module(product_algebra, m, g.target)
    field = product_algebra.field
    comps = {}
    for x in m.algebra.quiver.vertices:
        for y in g.source.algebra.quiver.vertices:
            block = g.components[y]
            big = Matrix.zero(field, m.dims[x] * block.rows, m.dims[x] * block.cols)
            for i in range(m.dims[x]):
                for s in range(block.rows):
                    for t in range(block.cols):
                        if block[s, t] != field.zero():
                            big[i * block.rows + s, i * block.cols + t] = block[s, t]
            comps[f"{x}.{y}"] = big
    return ModuleMap(src, tgt, comps, check=False)


def external_product(product_algebra: BasicAlgebra, cls_a: ExtensionClass,
                     cls_b: ExtensionClass, order: str = "left") -> ExtensionClass:
    """Splice of (cls_a (x) right_b) with (left_a (x) cls_b) into a class of
    degree d_a + d_b over the tensor algebra.

    order="right" uses the mirror splice (cls_a (x) left_b after
    right_a (x) cls_b); the two are cohomologous up to sign.
    """
    if cls_b.degree == 0:
        mids = [tensor_module(product_algebra, t, cls_b.right) for t in cls_a.mids]
        maps = [tensor_map_left(product_algebra, f, cls_b.right) for f in cls_a.maps]
        out = ExtensionClass(cls_a.degree,
                             tensor_module(product_algebra, cls_a.left, cls_b.right),
                             mids,
                             tensor_module(product_algebra, cls_a.right, cls_b.right),
                             maps)
        out.verify_exact()
        return out
    if order == "left":
        # 0 -> A (x) B_left chain ... -> A_left (x) B_right -> A mids (x) B_right ...
        left_part_maps = [tensor_map_right(product_algebra, cls_a.left, g)
                          for g in cls_b.maps[:-1]]
        junction_inner = tensor_map_right(product_algebra, cls_a.left, cls_b.maps[-1])
        junction_outer = tensor_map_left(product_algebra, cls_a.maps[0], cls_b.right)
        right_part_maps = [tensor_map_left(product_algebra, f, cls_b.right)
                           for f in cls_a.maps[1:]]
        mids = ([tensor_module(product_algebra, cls_a.left, e) for e in cls_b.mids]
                + [tensor_module(product_algebra, e, cls_b.right) for e in cls_a.mids])
        maps = (left_part_maps
                + [junction_inner.then(junction_outer)]
                + right_part_maps)
        out = ExtensionClass(
            cls_a.degree + cls_b.degree,
            tensor_module(product_algebra, cls_a.left, cls_b.left),
            mids,
            tensor_module(product_algebra, cls_a.right, cls_b.right),
            maps)
    else:
        left_part_maps = [tensor_map_left(product_algebra, f, cls_b.left)
                          for f in cls_a.maps[:-1]]
        junction_inner = tensor_map_left(product_algebra, cls_a.maps[-1], cls_b.left)
        junction_outer = tensor_map_right(product_algebra, cls_a.right, cls_b.maps[0])
        right_part_maps = [tensor_map_right(product_algebra, cls_a.right, g)
                           for g in cls_b.maps[1:]]
        mids = ([tensor_module(product_algebra, e, cls_b.left) for e in cls_a.mids]
                + [tensor_module(product_algebra, cls_a.right, e) for e in cls_b.mids])
        maps = (left_part_maps
                + [junction_inner.then(junction_outer)]
                + right_part_maps)
        out = ExtensionClass(
            cls_a.degree + cls_b.degree,
            tensor_module(product_algebra, cls_a.left, cls_b.left),
            mids,
            tensor_module(product_algebra, cls_a.right, cls_b.right),
            maps)
    if not out.verify_exact():
        raise LatticeError("external product failed exactness")
    return out


def scale_class(cls: ExtensionClass, c) -> ExtensionClass:
    """Representative of c^-1 [cls]: the left injection is scaled by c."""
    field = cls.left.field
    maps = [cls.maps[0].scale(field.element(c))] + list(cls.maps[1:])
    out = ExtensionClass(cls.degree, cls.left, list(cls.mids), cls.right, maps)
    out.verify_exact()
    return out


# -- witnesses -----------------------------------------------------------------------

def rational_points(field: Field, d: int):
    if not field.is_prime_field:
        raise LatticeError("point enumeration needs a finite prime field")
    from itertools import product
    return [tuple(field.from_int(c) for c in pt)
            for pt in product(range(field.p), repeat=d)]


def odim_witness(lat: Lattice, points=None) -> dict:
    """Per-point non-vanishing table for the degree-1 classes of a
    one-variable lattice; witness for Odim >= 1 when all points pass."""
    if lat.d != 1:
        raise LatticeError("odim_witness covers one-variable lattices; use the "
                           "external product route for d = 2")
    points = points if points is not None else rational_points(lat.field, 1)
    table = []
    passed = 0
    for pt in points:
        cls = tensor_sequence(lat, pt[0])
        nz = ext_nonzero(cls)
        table.append({"point": [lat.field.format(c) for c in pt], "nonzero": nz})
        passed += 1 if nz else 0
    return {
        "degree": 1,
        "points": len(points),
        "passed": passed,
        "witness_for_odim_ge": 1 if passed == len(points) and points else 0,
        "table": table,
        "caveat": "density over Max R sampled at rational points only",
    }


def kunneth_witness(product_algebra: BasicAlgebra, lat_a: Lattice, lat_b: Lattice,
                    points=None) -> dict:
    """Degree-2 non-vanishing over the tensor algebra at pairs of points."""
    field = product_algebra.field
    points = points if points is not None else rational_points(field, 2)
    table = []
    passed = 0
    for pt in points:
        cls_a = tensor_sequence(lat_a, pt[0])
        cls_b = tensor_sequence(lat_b, pt[1])
        prod = external_product(product_algebra, cls_a, cls_b)
        nz = ext_nonzero(prod)
        table.append({"point": [field.format(c) for c in pt], "nonzero": nz})
        passed += 1 if nz else 0
    return {
        "degree": 2,
        "points": len(points),
        "passed": passed,
        "witness_for_odim_ge": 2 if passed == len(points) and points else 0,
        "table": table,
        "caveat": "density over Max R sampled at rational points only",
    }

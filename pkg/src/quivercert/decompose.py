"""Indecomposability, Krull-Schmidt decomposition, isomorphism testing.

The radical of an endomorphism algebra is computed from a faithful
matrix realization (the action on the module): over Q by the trace
form, over GF(p) by the iterated characteristic-coefficient chain
(trace first, then the c_p, c_{p^2}, ... conditions, each linear over
the prime field on the previous stage).  A module is indecomposable
iff End/rad is one-dimensional or a division algebra; splittings come
from seeded Fitting decompositions with a deterministic
idempotent-lifting fallback.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from random import Random

from . import upoly
from .matrix import Matrix, NoSolution
from .module import (
    Module, ModuleMap, direct_sum, hom_basis, identity_map, submodule, zero_map,
)


class Undecided(RuntimeError):
    """Decomposition search exhausted without a certificate."""


class EndAlgebra:
    """End(M) with basis, coordinates, radical and semisimple quotient."""

    def __init__(self, module: Module, basis=None):
        self.module = module
        self.field = module.field
        self.basis = basis if basis is not None else hom_basis(module, module)
        self.totals = [f.total_matrix() for f in self.basis]
        self.dim = len(self.basis)
        d = module.total_dim()
        cols = [Matrix(self.field, d * d, 1, t.entries) for t in self.totals]
        self._coord_matrix = Matrix.hstack(cols) if cols else Matrix.zero(self.field, d * d, 0)
        self._rad_coords = None

    def coords_of_total(self, total: Matrix):
        vec = Matrix(self.field, total.rows * total.cols, 1, total.entries)
        sol = self._coord_matrix.solve(vec)
        return [sol[i, 0] for i in range(self.dim)]

    def element_total(self, coords) -> Matrix:
        d = self.module.total_dim()
        out = Matrix.zero(self.field, d, d)
        for c, t in zip(coords, self.totals):
            if c != self.field.zero():
                out = out + t.scale(c)
        return out

    def element_map(self, coords) -> ModuleMap:
        out = zero_map(self.module, self.module)
        for c, f in zip(coords, self.basis):
            if c != self.field.zero():
                out = out + f.scale(c)
        return out

    # -- radical ---------------------------------------------------------
    def radical_coords(self) -> Matrix:
        """Columns = basis of rad End(M) in End-coordinates."""
        if self._rad_coords is None:
            if self.dim == 0:
                self._rad_coords = Matrix.zero(self.field, 0, 0)
            elif self.field.is_prime_field:
                self._rad_coords = self._radical_char_p()
            else:
                self._rad_coords = self._radical_char_zero()
        return self._rad_coords

    def _trace(self, m: Matrix):
        t = self.field.zero()
        for i in range(m.rows):
            t = self.field.add(t, m[i, i])
        return t

    def _radical_char_zero(self) -> Matrix:
        n = self.dim
        gram = Matrix.zero(self.field, n, n)
        for i in range(n):
            for j in range(i, n):
                v = self._trace(self.totals[i] @ self.totals[j])
                gram[i, j] = v
                gram[j, i] = v
        return gram.kernel_basis()

    def _radical_char_p(self) -> Matrix:
        field = self.field
        p = field.p
        d = max(self.module.total_dim(), 1)
        # current candidate subspace, columns in End coordinates
        current = Matrix.identity(field, self.dim)
        exp = 1
        while exp <= d:
            m = current.cols
            if m == 0:
                break
            mats = [self.element_total(current.col(c)) for c in range(m)]
            rows = []
            for y in mats:
                row = []
                for x in mats:
                    if exp == 1:
                        # c_1 is the trace (up to sign): avoid the charpoly
                        t = field.zero()
                        for i in range(x.rows):
                            for j in range(x.cols):
                                t = field.add(t, field.mul(x[i, j], y[j, i]))
                        row.append(t)
                    else:
                        row.append(upoly.charpoly_coefficient(x @ y, exp))
                rows.append(row)
            con = Matrix(field, m, m, [e for row in rows for e in row])
            kern = con.kernel_basis()
            current = current @ kern
            exp *= p
        return current

    # -- semisimple quotient ------------------------------------------------
    def quotient_data(self):
        """(complement indices, projector) for S = End/rad in End coords."""
        field = self.field
        rad = self.radical_coords()
        h, r = self.dim, rad.cols
        if r == 0:
            return list(range(h)), Matrix.identity(field, h)
        full = Matrix.hstack([rad, Matrix.identity(field, h)])
        _, pivots, _ = full.rref()
        comp = [c - r for c in pivots if c >= r]
        basis = Matrix.hstack([rad, Matrix.zero(field, h, 0) if not comp else
                               Matrix.identity(field, h).submatrix(range(h), comp)])
        inv = basis.inverse()
        projector = inv.submatrix(range(r, h), range(h))
        return comp, projector

    def semisimple_quotient(self) -> "QuotientAlgebra":
        comp, projector = self.quotient_data()
        return QuotientAlgebra(self, comp, projector)


class QuotientAlgebra:
    """S = End/rad presented by structure constants over the field."""

    def __init__(self, end: EndAlgebra, comp_indices, projector):
        self.end = end
        self.field = end.field
        self.comp = comp_indices
        self.projector = projector  # (s x h): End coords -> S coords
        self.dim = len(comp_indices)
        self._table = {}
        self._one = self.project(end.coords_of_total(
            Matrix.identity(self.field, end.module.total_dim())))

    def project(self, end_coords):
        col = Matrix.column(self.field, list(end_coords))
        out = self.projector @ col
        return [out[i, 0] for i in range(self.dim)]

    def lift(self, s_coords):
        out = [self.field.zero()] * self.end.dim
        for k, idx in enumerate(self.comp):
            out[idx] = s_coords[k]
        return out

    def one(self):
        return list(self._one)

    def mul(self, a, b):
        field = self.field
        out = [field.zero()] * self.dim
        for i, ai in enumerate(a):
            if ai == field.zero():
                continue
            for j, bj in enumerate(b):
                if bj == field.zero():
                    continue
                prod = self._basis_product(i, j)
                for k in range(self.dim):
                    out[k] = field.add(out[k], field.mul(field.mul(ai, bj), prod[k]))
        return out

    def _basis_product(self, i, j):
        key = (i, j)
        if key not in self._table:
            ti = self.end.totals[self.comp[i]]
            tj = self.end.totals[self.comp[j]]
            coords = self.end.coords_of_total(ti @ tj)
            self._table[key] = self.project(coords)
        return self._table[key]

    def is_commutative(self) -> bool:
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if self._basis_product(i, j) != self._basis_product(j, i):
                    return False
        return True

    def mult_operator(self, a) -> Matrix:
        cols = []
        for j in range(self.dim):
            unit = [self.field.zero()] * self.dim
            unit[j] = self.field.one()
            cols.append(Matrix.column(self.field, self.mul(a, unit)))
        return Matrix.hstack(cols) if cols else Matrix.zero(self.field, 0, 0)

    def minpoly(self, a):
        return upoly.minpoly_matrix(self.mult_operator(a))

    def eval_poly(self, coeffs, a):
        out = [self.field.zero()] * self.dim
        for c in reversed(coeffs):
            out = self.mul(out, a)
            one = self.one()
            for k in range(self.dim):
                out[k] = self.field.add(out[k], self.field.mul(c, one[k]))
        return out

    def frobenius_fixed_dim(self) -> int:
        """dim {x : x^p = x} for commutative S over GF(p)."""
        p = self.field.p
        cols = []
        for j in range(self.dim):
            unit = [self.field.zero()] * self.dim
            unit[j] = self.field.one()
            power = self._power(unit, p)
            delta = [self.field.sub(power[k], unit[k]) for k in range(self.dim)]
            cols.append(Matrix.column(self.field, delta))
        frob = Matrix.hstack(cols)
        return frob.kernel_basis().cols

    def frobenius_fixed_basis(self):
        p = self.field.p
        cols = []
        for j in range(self.dim):
            unit = [self.field.zero()] * self.dim
            unit[j] = self.field.one()
            power = self._power(unit, p)
            delta = [self.field.sub(power[k], unit[k]) for k in range(self.dim)]
            cols.append(Matrix.column(self.field, delta))
        kern = Matrix.hstack(cols).kernel_basis()
        return [[kern[i, c] for i in range(self.dim)] for c in range(kern.cols)]

    def _power(self, a, n):
        out = self.one()
        base = list(a)
        while n > 0:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out


def is_scalar_coords(s: QuotientAlgebra, coords) -> bool:
    one = s.one()
    field = s.field
    ratios = None
    for a, b in zip(coords, one):
        if b == field.zero():
            if a != field.zero():
                return False
        else:
            r = field.div(a, b)
            if ratios is None:
                ratios = r
            elif ratios != r:
                return False
    return True


def _division_algebra_check(s: QuotientAlgebra) -> bool:
    """S semisimple: decide whether S is a division algebra."""
    if s.dim == 1:
        return True
    if s.is_commutative():
        if s.field.is_prime_field:
            return s.frobenius_fixed_dim() == 1
        xi = _primitive_element(s)
        if xi is not None:
            return upoly.is_irreducible(s.field, s.minpoly(xi))
        # no primitive element found; fall through to the coarse check
    # noncommutative (or stubborn) case: over GF(p) a noncommutative
    # semisimple algebra is never division; over Q test the spanning set
    # for zero divisors
    if s.field.is_prime_field and not s.is_commutative():
        return False
    for i in range(s.dim):
        unit = [s.field.zero()] * s.dim
        unit[i] = s.field.one()
        if not s.mult_operator(unit).is_invertible():
            return False
    return True


def _primitive_element(s: QuotientAlgebra):
    """Deterministic search for x with minimal polynomial of full degree."""
    candidates = []
    for i in range(s.dim):
        unit = [s.field.zero()] * s.dim
        unit[i] = s.field.one()
        candidates.append(unit)
    small = [s.field.from_int(n) for n in range(1, 4)]
    for c1, c2 in itertools.product(small, repeat=2):
        if s.dim >= 2:
            combo = [s.field.zero()] * s.dim
            one0, one1 = candidates[0], candidates[1]
            for k in range(s.dim):
                combo[k] = s.field.add(s.field.mul(c1, one0[k]), s.field.mul(c2, one1[k]))
            candidates.append(combo)
    for x in candidates:
        if upoly.degree(s.minpoly(x)) == s.dim:
            return x
    return None


def is_indecomposable(m: Module) -> bool:
    if m.is_zero():
        return False
    end = EndAlgebra(m)
    s = end.semisimple_quotient()
    return _division_algebra_check(s)


# -- splitting ------------------------------------------------------------------


def _split_along_poly(m: Module, phi: ModuleMap, factors):
    """Fitting split of m along phi's minimal polynomial factors.

    factors = [(poly, mult)] with >= 2 entries; returns list of
    (submodule, inclusion).
    """
    field = m.field
    pieces = []
    for fac, e in factors:
        fpow = upoly.power(field, fac, e)
        spaces = {}
        for v in m.algebra.quiver.vertices:
            mat = upoly.eval_matrix(field, fpow, phi.components[v])
            spaces[v] = mat.kernel_basis()
        pieces.append(submodule(m, spaces, check=False))
    total = sum(p.total_dim() for p, _ in pieces)
    if total != m.total_dim() or any(p.total_dim() == 0 for p, _ in pieces):
        raise Undecided("Fitting split failed to partition the module")
    return pieces


def _random_endo(end: EndAlgebra, rng: Random) -> ModuleMap:
    field = end.field
    if field.is_prime_field:
        coords = [field.from_int(rng.randrange(field.p)) for _ in range(end.dim)]
    else:
        coords = [field.from_int(rng.randrange(-4, 5)) for _ in range(end.dim)]
    return end.element_map(coords)


def _idempotent_in_quotient(s: QuotientAlgebra):
    """A nontrivial idempotent of the semisimple quotient, or None."""
    field = s.field
    if s.is_commutative():
        if field.is_prime_field:
            for vec in s.frobenius_fixed_basis():
                if is_scalar_coords(s, vec):
                    continue
                mp = s.minpoly(vec)
                roots = [fac for fac, _ in upoly.factor_poly(field, mp)
                         if upoly.degree(fac) == 1]
                if len(roots) >= 2:
                    return _spectral_idempotent(s, vec, mp, roots[0])
        else:
            xi = _primitive_element(s)
            if xi is not None:
                mp = s.minpoly(xi)
                facs = upoly.factor_poly(field, mp)
                if len(facs) >= 2:
                    return _crt_idempotent(s, xi, facs)
            for i in range(s.dim):
                unit = [field.zero()] * s.dim
                unit[i] = field.one()
                facs = upoly.factor_poly(field, s.minpoly(unit))
                if len(facs) >= 2:
                    return _crt_idempotent(s, unit, facs)
        return None
    # noncommutative: look inside the centre first, then k[x] subalgebras
    for i in range(s.dim):
        unit = [field.zero()] * s.dim
        unit[i] = field.one()
        facs = upoly.factor_poly(field, s.minpoly(unit))
        if len(facs) >= 2:
            return _crt_idempotent(s, unit, facs)
    return None


def _spectral_idempotent(s: QuotientAlgebra, x, minpoly, root):
    """Projector onto the `root` eigencomponent of x (split minpoly)."""
    field = s.field
    a0 = field.neg(root[0])  # root poly is (t - a0)
    quo, rem = upoly.divmod_poly(field, minpoly, root)
    if rem:
        raise Undecided("spectral idempotent: root does not divide minpoly")
    denom = upoly.eval_scalar(field, quo, a0)
    e = s.eval_poly([field.div(c, denom) for c in quo], x)
    return e


def _crt_idempotent(s: QuotientAlgebra, x, factors):
    """Idempotent congruent to 1 mod f1^a1 and 0 mod the rest."""
    field = s.field
    f1 = upoly.power(field, factors[0][0], factors[0][1])
    rest = [field.one()]
    for fac, e in factors[1:]:
        rest = upoly.mul(field, rest, upoly.power(field, fac, e))
    g, u, w = upoly.ext_gcd(field, f1, rest)
    if upoly.degree(g) != 0:
        raise Undecided("CRT idempotent: factors not coprime")
    # normalize so that u f1 + w rest = 1 exactly
    inv = field.inv(g[0])
    w = [field.mul(inv, c) for c in w]
    e_poly = upoly.mul(field, w, rest)
    return s.eval_poly(e_poly, x)


def _lift_idempotent(end: EndAlgebra, s: QuotientAlgebra, e_bar) -> ModuleMap:
    coords = s.lift(e_bar)
    e = end.element_map(coords)
    ident = identity_map(end.module)
    for _ in range(32):
        sq = e.then(e)
        if sq.components == e.components:
            return e
        # e <- 3 e^2 - 2 e^3
        cube = sq.then(e)
        e = sq.scale(end.field.from_int(3)) - cube.scale(end.field.from_int(2))
    raise Undecided("idempotent lifting did not converge")


def _split_with_idempotent(m: Module, e: ModuleMap):
    field = m.field
    spaces_ker = {}
    spaces_im = {}
    for v in m.algebra.quiver.vertices:
        mat = e.components[v]
        spaces_ker[v] = mat.kernel_basis()
        ident = Matrix.identity(field, mat.rows)
        spaces_im[v] = (ident - mat).kernel_basis()
    a = submodule(m, spaces_ker, check=False)
    b = submodule(m, spaces_im, check=False)
    if a[0].total_dim() + b[0].total_dim() != m.total_dim() \
            or a[0].total_dim() == 0 or b[0].total_dim() == 0:
        raise Undecided("idempotent split failed")
    return [a, b]


def split_once(m: Module, rng: Random, end: EndAlgebra | None = None):
    """One nontrivial direct-sum split of a decomposable module."""
    end = end or EndAlgebra(m)
    trials = max(8, 20 * end.dim)
    field = m.field
    for _ in range(trials):
        phi = _random_endo(end, rng)
        mp = upoly.minpoly_matrix(phi.total_matrix())
        facs = upoly.factor_poly(field, mp)
        if len(facs) >= 2:
            return _split_along_poly(m, phi, facs)
    s = end.semisimple_quotient()
    e_bar = _idempotent_in_quotient(s)
    if e_bar is None:
        raise Undecided("no splitting endomorphism found")
    e = _lift_idempotent(end, s, e_bar)
    return _split_with_idempotent(m, e)


@dataclass
class Decomposition:
    module: Module
    summands: list  # [(representative Module, multiplicity)]
    parts: list  # expanded module list matching witness block order
    witness: ModuleMap  # direct_sum(parts) -> module, invertible

    def summand_count(self) -> int:
        return sum(mult for _, mult in self.summands)


def decompose(m: Module, seed: int = 0) -> Decomposition:
    """Full decomposition into indecomposables with an invertible witness."""
    rng = Random(seed)
    found = []  # (module, inclusion into m)
    stack = [(m, identity_map(m))]
    while stack:
        n, incl = stack.pop()
        if n.is_zero():
            continue
        end = EndAlgebra(n)
        if _division_algebra_check(end.semisimple_quotient()):
            found.append((n, incl))
            continue
        for piece, piece_incl in split_once(n, rng, end):
            stack.append((piece, piece_incl.then(incl)))
    found.sort(key=lambda pair: (pair[0].total_dim(), pair[0].dim_vector(),
                                 pair[0].content_hash()))
    groups = []  # [representative, [(module, incl, iso rep->module)]]
    for n, incl in found:
        placed = False
        for rep, members in groups:
            ok, iso = is_isomorphic(rep, n, assume_indecomposable=True)
            if ok:
                members.append((n, incl, iso))
                placed = True
                break
        if not placed:
            groups.append((n, [(n, incl, identity_map(n))]))
    if not groups:
        z = Module(m.algebra, {}, {}, check=False)
        return Decomposition(m, [], [], zero_map(z, m))
    parts = []
    columns = {v: [] for v in m.algebra.quiver.vertices}
    summands = []
    for rep, members in groups:
        summands.append((rep, len(members)))
        for _, incl, iso in members:
            parts.append(rep)
            comp = iso.then(incl)
            for v in columns:
                columns[v].append(comp.components[v])
    total = direct_sum(parts)[0]
    comps = {v: Matrix.hstack(cols) if cols else Matrix.zero(m.field, m.dims[v], 0)
             for v, cols in columns.items()}
    witness = ModuleMap(total, m, comps, check=False)
    if not witness.is_isomorphism():
        raise Undecided("decomposition witness is not invertible")
    return Decomposition(m, summands, parts, witness)


def is_isomorphic(m: Module, n: Module, seed: int = 0,
                  assume_indecomposable: bool = False):
    """(answer, witness); deterministic and complete for indecomposables."""
    if m.dim_vector() != n.dim_vector():
        return False, None
    if m.is_zero():
        return True, zero_map(m, n)
    fwd = hom_basis(m, n)
    if not fwd:
        return False, None
    for f in fwd:
        if f.is_isomorphism():
            return True, f
    if assume_indecomposable:
        back = hom_basis(n, m)
        end = EndAlgebra(m)
        checker = end.radical_coords()
        for f in fwd:
            for g in back:
                prod = f.then(g)  # m -> m
                coords = Matrix.column(m.field, end.coords_of_total(prod.total_matrix()))
                try:
                    checker.solve(coords)
                except NoSolution:
                    return True, f  # g f invertible, so f is an isomorphism
        return False, None
    rng = Random(seed)
    for _ in range(16):
        coeffs = ([m.field.from_int(rng.randrange(m.field.p)) for _ in fwd]
                  if m.field.is_prime_field
                  else [m.field.from_int(rng.randrange(-4, 5)) for _ in fwd])
        candidate = zero_map(m, n)
        for c, f in zip(coeffs, fwd):
            candidate = candidate + f.scale(c)
        if candidate.is_isomorphism():
            return True, candidate
    dm = decompose(m, seed)
    dn = decompose(n, seed)
    matched = _match_decompositions(dm, dn)
    if matched is None:
        return False, None
    return True, matched


def _match_decompositions(dm: Decomposition, dn: Decomposition):
    available = list(range(len(dn.parts)))
    pairing = []
    for i, part in enumerate(dm.parts):
        hit = None
        for j in available:
            ok, iso = is_isomorphic(part, dn.parts[j], assume_indecomposable=True)
            if ok:
                hit = (j, iso)
                break
        if hit is None:
            return None
        available.remove(hit[0])
        pairing.append((i, hit[0], hit[1]))
    # witness: n_sum^-1 restricted blocks composed with isos, then m witness
    total_m = direct_sum(dm.parts)[0]
    field = total_m.field
    blocks = {}
    for v in total_m.algebra.quiver.vertices:
        rows_n = sum(p.dims[v] for p in dn.parts)
        mat = Matrix.zero(field, rows_n, total_m.dims[v])
        col_off = 0
        offsets_n = []
        acc = 0
        for p in dn.parts:
            offsets_n.append(acc)
            acc += p.dims[v]
        for i, j, iso in pairing:
            block = iso.components[v]
            row0 = offsets_n[j]
            for r in range(block.rows):
                for c in range(block.cols):
                    mat[row0 + r, col_off + c] = block[r, c]
            col_off += dm.parts[i].dims[v]
        blocks[v] = mat
    total_n = direct_sum(dn.parts)[0]
    middle = ModuleMap(total_m, total_n, blocks, check=False)
    inv_m = dm.witness.inverse()
    return inv_m.then(middle).then(dn.witness)

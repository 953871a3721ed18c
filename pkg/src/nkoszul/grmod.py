"""Graded right modules over the algebra flavours, with finite support.

A :class:`GradedModule` stores, per degree, a vertex label for each basis
element and, per (generator, degree), an action matrix.  Modules here are
honestly finite: a truncation of a free module is the genuine quotient by
its tail submodule, so predicates quantified "for all degrees" are decided
exactly on the (finite) support.

Row-vector convention throughout: an element x of M_d is a coordinate row
and x * g = x @ act(g, d).
"""
from __future__ import annotations

import numpy as np

from . import linalg
from .linalg import Subspace, zeros


class ModuleError(ValueError):
    pass


class GradedModule:
    """A finitely supported graded right module over a graded algebra."""

    def __init__(self, algebra, verts: dict, actions: dict, kind: str | None = None):
        self.algebra = algebra
        self.p = algebra.p
        self.kind = kind
        self.verts = {d: tuple(v) for d, v in verts.items() if len(v)}
        self.gens = algebra.generators()
        self.actions = {}
        for (gi, d), m in actions.items():
            m = np.asarray(m, dtype=np.int64) % self.p
            if d in self.verts and m.size:
                self.actions[(gi, d)] = m
        self._act_elem_cache: dict = {}

    # -- structure ----------------------------------------------------------

    def degrees(self):
        return sorted(self.verts)

    def dim(self, d: int) -> int:
        return len(self.verts.get(d, ()))

    def verts_at(self, d: int):
        return self.verts.get(d, ())

    def total_dim(self) -> int:
        return sum(len(v) for v in self.verts.values())

    def is_zero(self) -> bool:
        return not self.verts

    def support_top(self):
        return max(self.verts) if self.verts else None

    def support_bottom(self):
        return min(self.verts) if self.verts else None

    def act(self, gi: int, d: int) -> np.ndarray:
        g = self.gens[gi]
        m = self.actions.get((gi, d))
        if m is None:
            return zeros(self.dim(d), self.dim(d + g.degree))
        if m.shape != (self.dim(d), self.dim(d + g.degree)):
            raise ModuleError(
                f"action matrix for generator {gi} at degree {d} has shape "
                f"{m.shape}, expected {(self.dim(d), self.dim(d + g.degree))}")
        return m

    def act_word(self, word, d: int) -> np.ndarray:
        """Composite action matrix of a generator word starting at degree d."""
        out = None
        cur = d
        for gi in word:
            m = self.act(gi, cur)
            out = m if out is None else linalg.mat_mul(out, m, self.p)
            cur += self.gens[gi].degree
        if out is None:
            return linalg.eye(self.dim(d))
        return out

    def act_basis_element(self, d_el: int, b_index: int, d: int) -> np.ndarray:
        """Action matrix of the b-th algebra basis element of degree d_el."""
        key = (d_el, b_index, d)
        if key in self._act_elem_cache:
            return self._act_elem_cache[key]
        if d_el == 0:
            # vertex idempotent: projection onto the matching block
            v = self.algebra.basis_pairs(0)[b_index][0]
            out = zeros(self.dim(d), self.dim(d))
            for i, w in enumerate(self.verts_at(d)):
                if w == v:
                    out[i, i] = 1
            self._act_elem_cache[key] = out
            return out
        words = self.algebra.element_words(d_el)[b_index]
        out = zeros(self.dim(d), self.dim(d + d_el))
        for word, c in words:
            out = (out + c * self.act_word(word, d)) % self.p
        self._act_elem_cache[key] = out
        return out

    def act_element(self, d_el: int, vec, d: int) -> np.ndarray:
        """Action matrix of a general homogeneous algebra element."""
        vec = np.asarray(vec, dtype=np.int64) % self.p
        out = zeros(self.dim(d), self.dim(d + d_el))
        for b in np.nonzero(vec)[0]:
            out = (out + int(vec[b]) * self.act_basis_element(d_el, int(b), d)) % self.p
        return out

    # -- validation ---------------------------------------------------------

    def validate(self):
        """All structural violations, or an empty list for a valid module."""
        issues = []
        for (gi, d), m in self.actions.items():
            g = self.gens[gi]
            if m.shape != (self.dim(d), self.dim(d + g.degree)):
                issues.append(
                    f"generator {g.name} at degree {d}: shape {m.shape}")
                continue
            sv = self.verts_at(d)
            tv = self.verts_at(d + g.degree)
            for i in range(m.shape[0]):
                for j in range(m.shape[1]):
                    if m[i, j] and not (sv[i] == g.source and tv[j] == g.target):
                        issues.append(
                            f"generator {g.name} at degree {d}: entry "
                            f"({i},{j}) breaks the vertex block structure")
        if issues:
            return issues
        for rdeg, rel in self.algebra.relation_words():
            for d in self.degrees():
                if self.dim(d + rdeg) == 0:
                    continue
                acc = zeros(self.dim(d), self.dim(d + rdeg))
                for word, c in rel:
                    acc = (acc + c * self.act_word(word, d)) % self.p
                if acc.any():
                    issues.append(
                        f"relation of degree {rdeg} acts nontrivially "
                        f"from degree {d}")
        return issues

    def is_valid(self) -> bool:
        return not self.validate()

    # -- constructions ------------------------------------------------------

    def shift(self, s: int) -> "GradedModule":
        """M[s] with M[s]_d = M_{d+s}."""
        verts = {d - s: v for d, v in self.verts.items()}
        actions = {(gi, d - s): m for (gi, d), m in self.actions.items()}
        return GradedModule(self.algebra, verts, actions, self.kind)


def zero_module(algebra) -> GradedModule:
    return GradedModule(algebra, {}, {})


def free_module(algebra, gen_list, hi: int) -> GradedModule:
    """Direct sum of shifted vertex projectives e_v A, truncated above hi.

    gen_list: (vertex, degree) pairs; the truncation is the honest quotient
    by the tail submodule in degrees > hi.
    """
    p = algebra.p
    index: dict = {}   # degree -> list of (gen_no, basis_index)
    verts: dict = {}
    for d in range(min((g[1] for g in gen_list), default=0), hi + 1):
        entries = []
        vs = []
        for gno, (v, gd) in enumerate(gen_list):
            k = d - gd
            if k < 0:
                continue
            pairs = algebra.basis_pairs(k)
            for bi, (src, tgt) in enumerate(pairs):
                if src == v:
                    entries.append((gno, bi))
                    vs.append(tgt)
        if entries:
            index[d] = entries
            verts[d] = tuple(vs)
    actions: dict = {}
    gens = algebra.generators()
    for gi, g in enumerate(gens):
        for d, entries in index.items():
            d2 = d + g.degree
            if d2 not in index:
                continue
            pos2 = {key: c for c, key in enumerate(index[d2])}
            m = zeros(len(entries), len(index[d2]))
            for r, (gno, bi) in enumerate(entries):
                k = d - gen_list[gno][1]
                t = algebra.mult(k, g.degree)
                if t.size == 0:
                    continue
                row = t[bi, g.basis_index]
                for b2 in np.nonzero(row)[0]:
                    key = (gno, int(b2))
                    if key in pos2:
                        m[r, pos2[key]] = row[b2]
            if m.any():
                actions[(gi, d)] = m
    mod = GradedModule(algebra, verts, actions)
    mod.free_index = index
    mod.free_gens = list(gen_list)
    return mod


def regular_module(algebra, hi: int) -> GradedModule:
    """The algebra as a right module over itself, truncated above hi."""
    return free_module(algebra, [(v, 0) for v in range(algebra.nvert)], hi)


class GradedMorphism:
    """A degree-0 morphism of graded modules: one matrix per degree."""

    def __init__(self, source: GradedModule, target: GradedModule, mats: dict):
        self.source = source
        self.target = target
        self.p = source.p
        self.mats = {}
        for d, m in mats.items():
            m = np.asarray(m, dtype=np.int64) % self.p
            if m.size:
                self.mats[d] = m

    def mat(self, d: int) -> np.ndarray:
        m = self.mats.get(d)
        if m is None:
            return zeros(self.source.dim(d), self.target.dim(d))
        return m

    def commutes(self) -> bool:
        ms, mt = self.source, self.target
        for gi, g in enumerate(ms.gens):
            for d in set(ms.degrees()) | set(mt.degrees()):
                lhs = linalg.mat_mul(ms.act(gi, d), self.mat(d + g.degree), self.p)
                rhs = linalg.mat_mul(self.mat(d), mt.act(gi, d), self.p)
                if not np.array_equal(lhs, rhs):
                    return False
        return True

    def compose(self, other: "GradedMorphism") -> "GradedMorphism":
        """self then other (source of other = target of self)."""
        mats = {}
        for d in set(self.mats) | set(other.mats):
            mats[d] = linalg.mat_mul(self.mat(d), other.mat(d), self.p)
        return GradedMorphism(self.source, other.target, mats)

    def is_iso(self) -> bool:
        for d in set(self.source.degrees()) | set(self.target.degrees()):
            m = self.mat(d)
            if m.shape[0] != m.shape[1]:
                return False
            if m.shape[0] and linalg.inverse(m, self.p) is None:
                return False
        return True

    def inverse(self) -> "GradedMorphism":
        mats = {}
        for d in set(self.source.degrees()) | set(self.target.degrees()):
            m = self.mat(d)
            inv = linalg.inverse(m, self.p)
            if inv is None:
                raise ModuleError("morphism is not invertible")
            if inv.size:
                mats[d] = inv
        return GradedMorphism(self.target, self.source, mats)


def identity_morphism(m: GradedModule) -> GradedMorphism:
    return GradedMorphism(m, m, {d: linalg.eye(m.dim(d)) for d in m.degrees()})


def hom_space(m: GradedModule, n: GradedModule):
    """Canonical basis of the degree-0 graded morphisms m -> n.

    Solved as one linear system: unknowns are the vertex-matching matrix
    entries per degree, constraints are commutation with every generator.
    """
    if m.algebra is not n.algebra and m.p != n.p:
        raise ModuleError("hom between modules over different fields")
    p = m.p
    degs = sorted(set(m.degrees()) | set(n.degrees()))
    offs = {}
    total = 0
    for d in degs:
        offs[d] = total
        total += m.dim(d) * n.dim(d)
    if total == 0:
        return []
    eq_rows = []
    # vertex mismatch entries are forced to zero (A_0-linearity)
    for d in degs:
        sv, tv = m.verts_at(d), n.verts_at(d)
        nc = n.dim(d)
        for i in range(m.dim(d)):
            for j in range(nc):
                if sv[i] != tv[j]:
                    row = np.zeros(total, dtype=np.int64)
                    row[offs[d] + i * nc + j] = 1
                    eq_rows.append(row)
    for gi, g in enumerate(m.gens):
        for d in degs:
            d2 = d + g.degree
            r1, c1 = m.dim(d), n.dim(d)
            c2 = n.dim(d2)
            if r1 == 0 or c2 == 0:
                continue
            a = m.act(gi, d)          # r1 x r2
            b = n.act(gi, d)          # c1 x c2
            block = np.zeros((r1 * c2, total), dtype=np.int64)
            if d2 in offs and a.size:
                block[:, offs[d2]: offs[d2] + a.shape[1] * c2] = np.kron(a, linalg.eye(c2))
            if d in offs and b.size:
                block[:, offs[d]: offs[d] + r1 * c1] -= np.kron(linalg.eye(r1), b.T)
            block %= p
            if block.any():
                eq_rows.append(block)
    if eq_rows:
        eq = np.concatenate(
            [r.reshape(-1, total) for r in eq_rows], axis=0)
        sol = linalg.null_space(eq, p)
    else:
        sol = Subspace.full(total, p)
    out = []
    for vec in sol.basis:
        mats = {}
        for d in degs:
            r, c = m.dim(d), n.dim(d)
            if r and c:
                mats[d] = vec[offs[d]: offs[d] + r * c].reshape(r, c)
        out.append(GradedMorphism(m, n, mats))
    return out


def iso_modules(m: GradedModule, n: GradedModule, seed: int = 0):
    """An isomorphism m -> n, or None; deterministic given the seed."""
    for d in set(m.degrees()) | set(n.degrees()):
        if m.dim(d) != n.dim(d):
            return None
        if sorted(m.verts_at(d)) != sorted(n.verts_at(d)):
            return None
    if m.is_zero():
        return GradedMorphism(m, n, {})
    basis = hom_space(m, n)
    if not basis:
        return None
    for f in basis:
        if f.is_iso():
            return f
    rng = np.random.default_rng(seed)
    for _ in range(64):
        c = rng.integers(0, m.p, size=len(basis))
        mats: dict = {}
        for f, ci in zip(basis, c):
            for d, mm in f.mats.items():
                mats[d] = (mats.get(d, 0) + int(ci) * mm) % m.p
        f = GradedMorphism(m, n, mats)
        if f.is_iso():
            return f
    return None


# -- socle / top / generation ----------------------------------------------


def socle_subspaces(mod: GradedModule) -> dict:
    """Per degree: the joint kernel of all positive-degree generator actions."""
    out = {}
    for d in mod.degrees():
        stacked = [mod.act(gi, d) for gi in range(len(mod.gens))]
        stacked = [s for s in stacked if s.shape[1]]
        if not stacked:
            out[d] = Subspace.full(mod.dim(d), mod.p)
            continue
        cat = np.concatenate(stacked, axis=1)
        out[d] = linalg.left_null_space(cat, mod.p)
    return {d: s for d, s in out.items() if s.dim}


def radical_subspaces(mod: GradedModule) -> dict:
    """Per degree: sum of the images of all generator actions into it."""
    out = {}
    for d in mod.degrees():
        rows = []
        for gi, g in enumerate(mod.gens):
            a = mod.actions.get((gi, d - g.degree))
            if a is not None and a.any():
                rows.append(a)
        if rows:
            cat = np.concatenate(rows, axis=0)
            out[d] = Subspace.from_rows(mod.dim(d), cat, mod.p)
        else:
            out[d] = Subspace.zero(mod.dim(d), mod.p)
    return out


def top_complements(mod: GradedModule) -> dict:
    """Per degree: basis indices spanning a canonical complement of MJ."""
    rad = radical_subspaces(mod)
    out = {}
    for d, sub in rad.items():
        if sub.dim == mod.dim(d):
            continue
        pivots = set()
        for row in sub.basis:
            nz = np.nonzero(row)[0]
            if nz.size:
                pivots.add(int(nz[0]))
        comp = [i for i in range(mod.dim(d)) if i not in pivots]
        if comp:
            out[d] = comp
    return out


def top_dims(mod: GradedModule) -> dict:
    return {d: len(c) for d, c in top_complements(mod).items()}


def generated_in_degrees(mod: GradedModule, degree_set) -> bool:
    """True iff the top of the module is supported inside the degree set."""
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    return all(d in degree_set for d in top_dims(mod))


def generated_in_degrees_slow(mod: GradedModule, degree_set) -> bool:
    """Oracle: close the chosen components under the action, compare dims."""
    spans = {d: linalg.eye(mod.dim(d))
             for d in mod.degrees() if d in degree_set}
    closed = submodule_closure(mod, spans)
    return sum(s.dim for s in closed.values()) == mod.total_dim()


def cogenerated_in_degrees(mod: GradedModule, degree_set) -> bool:
    """True iff the graded socle is supported inside the degree set."""
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    return all(d in degree_set for d in socle_subspaces(mod))


def submodule_closure(mod: GradedModule, spans: dict) -> dict:
    """Smallest action-closed family of subspaces containing the spans."""
    cur = {d: (s if isinstance(s, Subspace)
               else Subspace.from_rows(mod.dim(d), s, mod.p))
           for d, s in spans.items()}
    changed = True
    while changed:
        changed = False
        for d in sorted(cur):
            sub = cur[d]
            if sub.dim == 0:
                continue
            for gi, g in enumerate(mod.gens):
                d2 = d + g.degree
                if mod.dim(d2) == 0:
                    continue
                img = linalg.mat_mul(sub.basis, mod.act(gi, d), mod.p)
                tgt = cur.get(d2, Subspace.zero(mod.dim(d2), mod.p))
                new = tgt.sum(Subspace.from_rows(mod.dim(d2), img, mod.p))
                if new.dim != tgt.dim:
                    cur[d2] = new
                    changed = True
    return {d: s for d, s in cur.items() if s.dim}


# -- sub / quotient / kernel as modules -------------------------------------


def submodule_as_module(mod: GradedModule, spans: dict):
    """Realize an action-closed graded subspace family as a module.

    Returns (sub_module, inclusion).  Each basis row must live in a single
    vertex block, which holds for all families produced in this package.
    """
    bases = {}
    verts = {}
    for d, s in spans.items():
        b = s.basis if isinstance(s, Subspace) else np.asarray(s) % mod.p
        if not len(b):
            continue
        vs = []
        for row in b:
            nz = np.nonzero(row)[0]
            blocks = {mod.verts_at(d)[i] for i in nz}
            if len(blocks) != 1:
                raise ModuleError("submodule basis row mixes vertex blocks")
            vs.append(blocks.pop())
        bases[d] = np.asarray(b, dtype=np.int64) % mod.p
        verts[d] = tuple(vs)
    actions = {}
    for d, b in bases.items():
        for gi, g in enumerate(mod.gens):
            d2 = d + g.degree
            if d2 not in bases:
                continue
            img = linalg.mat_mul(b, mod.act(gi, d), mod.p)
            coords = linalg.solve_matrix(bases[d2].T, img.T, mod.p)
            if coords is None:
                raise ModuleError("family is not closed under the action")
            m = coords.T % mod.p
            if m.any():
                actions[(gi, d)] = m
    sub = GradedModule(mod.algebra, verts, actions, mod.kind)
    incl = GradedMorphism(sub, mod, dict(bases))
    return sub, incl


def quotient_module(mod: GradedModule, spans: dict):
    """Quotient by an action-closed subspace family.

    Returns (quotient, projection); the quotient basis is the canonical
    complement (non-pivot standard vectors of the subspace RREF).
    """
    subs = {d: (s if isinstance(s, Subspace)
                else Subspace.from_rows(mod.dim(d), s, mod.p))
            for d, s in spans.items()}
    comp = {}
    proj = {}
    verts = {}
    for d in mod.degrees():
        sub = subs.get(d, Subspace.zero(mod.dim(d), mod.p))
        red = sub.basis
        pivots = [int(np.nonzero(r)[0][0]) for r in red if np.nonzero(r)[0].size]
        keep = [i for i in range(mod.dim(d)) if i not in set(pivots)]
        if not keep:
            continue
        comp[d] = keep
        verts[d] = tuple(mod.verts_at(d)[i] for i in keep)
        # projection: kill pivot coordinates via the RREF rows
        pr = zeros(mod.dim(d), len(keep))
        for c, i in enumerate(keep):
            pr[i, c] = 1
        for r, row in zip(pivots, red):
            for c, i in enumerate(keep):
                pr[r, c] = (pr[r, c] - row[i]) % mod.p
        proj[d] = pr
    actions = {}
    for d, keep in comp.items():
        for gi, g in enumerate(mod.gens):
            d2 = d + g.degree
            if d2 not in comp:
                continue
            a = mod.act(gi, d)[keep, :]
            m = linalg.mat_mul(a, proj[d2], mod.p)
            if m.any():
                actions[(gi, d)] = m
    quo = GradedModule(mod.algebra, verts, actions, mod.kind)
    return quo, GradedMorphism(mod, quo, proj)


def morphism_kernel(f: GradedMorphism) -> dict:
    """Per degree: the kernel subspace, computed per vertex block."""
    m = f.source
    out = {}
    for d in m.degrees():
        mat = f.mat(d)
        ker_rows = []
        sv = m.verts_at(d)
        for v in sorted(set(sv)):
            idx = [i for i, w in enumerate(sv) if w == v]
            block = mat[idx, :]
            kb = linalg.null_space(block.T, m.p)
            for row in kb.basis:
                full = np.zeros(m.dim(d), dtype=np.int64)
                full[idx] = row
                ker_rows.append(full)
        if ker_rows:
            out[d] = Subspace.from_rows(m.dim(d), np.stack(ker_rows), m.p)
    return {d: s for d, s in out.items() if s.dim}


def morphism_image(f: GradedMorphism) -> dict:
    out = {}
    for d in f.target.degrees():
        mat = f.mat(d)
        if mat.size and mat.any():
            s = Subspace.from_rows(f.target.dim(d), mat, f.target.p)
            if s.dim:
                out[d] = s
    return out


# -- projective covers and presentations ------------------------------------


def _max_gen_degree(algebra) -> int:
    return max((g.degree for g in algebra.generators()), default=1)


def projective_cover(mod: GradedModule, hi: int | None = None):
    """Minimal projective cover P -> M via top lifting.

    Returns (P, phi, gen_list); gen_list holds (vertex, degree) of the
    chosen generators.  P is truncated above hi (default: the support top
    of M, enough for surjectivity).
    """
    if mod.is_zero():
        z = zero_module(mod.algebra)
        return z, GradedMorphism(z, mod, {}), []
    comp = top_complements(mod)
    gen_list = []
    reps = []
    for d in sorted(comp):
        for i in comp[d]:
            gen_list.append((mod.verts_at(d)[i], d))
            reps.append((d, i))
    if hi is None:
        hi = mod.support_top()
    pmod = free_module(mod.algebra, gen_list, hi)
    mats = {}
    for d, entries in pmod.free_index.items():
        m = zeros(len(entries), mod.dim(d))
        for r, (gno, bi) in enumerate(entries):
            gd, gidx = reps[gno]
            a = mod.act_basis_element(d - gd, bi, gd)
            if a.size:
                m[r] = a[gidx]
        mats[d] = m
    phi = GradedMorphism(pmod, mod, mats)
    return pmod, phi, gen_list


def presented_in_degrees(mod: GradedModule, degree_set) -> bool:
    """True iff a minimal projective presentation has all its generator
    degrees (of both terms) inside the degree set."""
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    if mod.is_zero():
        return True
    hi_ext = mod.support_top() + _max_gen_degree(mod.algebra)
    pmod, phi, gen_list = projective_cover(mod, hi=hi_ext)
    if any(d not in degree_set for _, d in gen_list):
        return False
    ker = morphism_kernel(phi)
    if not ker:
        return True
    kmod, _ = submodule_as_module(pmod, ker)
    return all(d in degree_set for d in top_dims(kmod))


# -- duality -----------------------------------------------------------------


def _reversal_corr(a_from, a_to):
    """Coordinate map of path reversal: degree-d coordinates of `a_from`
    to the coordinates of the reversed element in `a_to`."""
    from .quiver import opposite_path, path_index

    def corr(d: int) -> np.ndarray:
        m = zeros(a_from.dim(d), a_to.dim(d))
        for i, pa in enumerate(a_from.basis_paths(d)):
            rev = opposite_path(pa, a_from.quiver)
            v = np.zeros(a_to.path_count(d), dtype=np.int64)
            v[path_index(a_to.quiver, d)[rev]] = 1
            m[i] = a_to.reduce_vector(v, d)
        return m

    return corr


def opposite_algebra(algebra):
    """The opposite algebra, paired with the reversal coordinate maps.

    Returns (op_alg, corr) where corr(d) is the matrix sending degree-d
    coordinates of the opposite algebra to the coordinates of the reversed
    element in the original algebra.  Results are memoized both ways, so
    opposing twice gives back the original object.
    """
    from .algebra import PathAlgebra, USupportAlgebra, YonedaAlgebra

    cached = getattr(algebra, "_op_data", None)
    if cached is not None:
        return cached
    if isinstance(algebra, USupportAlgebra):
        op_dual, corr = opposite_algebra(algebra.dual)
        op = USupportAlgebra(op_dual, algebra.n)
        back = opposite_algebra(op_dual)[1]
        algebra._op_data = (op, corr)
        op._op_data = (algebra, back)
        return algebra._op_data
    if isinstance(algebra, YonedaAlgebra):
        op_u, corr = opposite_algebra(algebra.ualg)
        op = YonedaAlgebra(op_u)
        back = opposite_algebra(op_u)[1]
        dmap = algebra.dmap
        algebra._op_data = (op, (lambda j: corr(dmap.delta(j))))
        op._op_data = (algebra, (lambda j: back(dmap.delta(j))))
        return algebra._op_data
    if not isinstance(algebra, PathAlgebra):
        raise ModuleError("unsupported algebra flavour for opposition")
    op = PathAlgebra(algebra.pres.opposite())
    algebra._op_data = (op, _reversal_corr(op, algebra))
    op._op_data = (algebra, _reversal_corr(algebra, op))
    return algebra._op_data


def graded_dual(mod: GradedModule, op_data=None) -> GradedModule:
    """D(M): degree d holds the dual space of M_{-d}, over the opposite
    algebra; generator actions are transposed through the reversal map."""
    if op_data is None:
        op_data = opposite_algebra(mod.algebra)
    op_alg, corr = op_data
    verts = {-d: v for d, v in mod.verts.items()}
    actions: dict = {}
    for gi, g in enumerate(op_alg.generators()):
        cm = corr(g.degree)
        vec = cm[g.basis_index] if cm.size else np.zeros(0, dtype=np.int64)
        for d in verts:
            e = -d - g.degree
            if mod.dim(e) == 0 or mod.dim(-d) == 0:
                continue
            a = mod.act_element(g.degree, vec, e)  # M_e -> M_{e+gdeg} = M_{-d}
            if a.any():
                actions[(gi, d)] = a.T % mod.p
    return GradedModule(op_alg, verts, actions, mod.kind)


# -- torsion theory ----------------------------------------------------------


class TorsionParams:
    """The modular pair data: U = union of [kn, kn+r], S = m + U."""

    def __init__(self, n: int, r: int = 1, m: int = 0):
        if not (0 <= 2 * r <= n) or (n > 2 and 2 * r == n):
            raise ModuleError("need 0 <= 2r <= n, strict when n > 2")
        self.n, self.r, self.m = n, r, m

    def in_u(self, d: int) -> bool:
        return d % self.n <= self.r

    def in_s(self, d: int) -> bool:
        return self.in_u(d - self.m)

    def gen_degrees_contains(self, d: int) -> bool:
        """(S : U) membership: m + nZ, or all of Z when 2r = n = 2."""
        if 2 * self.r == self.n == 2:
            return True
        return (d - self.m) % self.n == 0


def torsion_submodule(mod: GradedModule, params: TorsionParams) -> dict:
    """t(M): the largest submodule supported outside S (greatest fixpoint)."""
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    cur = {}
    for d in mod.degrees():
        cur[d] = (Subspace.zero(mod.dim(d), mod.p) if params.in_s(d)
                  else Subspace.full(mod.dim(d), mod.p))
    changed = True
    while changed:
        changed = False
        for d in sorted(cur, reverse=True):
            sub = cur[d]
            if sub.dim == 0:
                continue
            new = _restrict_stable(mod, cur, d, sub)
            if new.dim != sub.dim:
                cur[d] = new
                changed = True
    return {d: s for d, s in cur.items() if s.dim}


def _restrict_stable(mod, cur, d, sub: Subspace) -> Subspace:
    """{x in sub : x g lies in cur[d + deg g] for every generator g}."""
    b = sub.basis
    keep = Subspace.from_rows(sub.ambient_dim, b, mod.p)
    for gi, g in enumerate(mod.gens):
        d2 = d + g.degree
        if mod.dim(d2) == 0:
            continue
        a = mod.act(gi, d)
        tgt = cur.get(d2, Subspace.zero(mod.dim(d2), mod.p))
        # x stays iff x a lies in the row space of tgt: kernel formulation
        t = tgt.basis
        stacked = np.concatenate(
            [linalg.mat_mul(keep.basis, a, mod.p).T,
             (-t.T) % mod.p if t.size else zeros(a.shape[1], 0)], axis=1)
        ker = linalg.null_space(stacked, mod.p)
        coef = ker.basis[:, : keep.dim]
        new_rows = linalg.mat_mul(coef, keep.basis, mod.p)
        keep = Subspace.from_rows(sub.ambient_dim, new_rows, mod.p)
        if keep.dim == 0:
            break
    return keep


def is_torsionfree(mod: GradedModule, params: TorsionParams) -> bool:
    """Annihilator criterion: no degree-1 annihilated element off S."""
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    for d in mod.degrees():
        if params.in_s(d):
            continue
        deg1 = [mod.act(gi, d) for gi, g in enumerate(mod.gens)
                if g.degree == 1]
        deg1 = [a for a in deg1 if a.shape[1]]
        if not deg1:
            return False
        cat = np.concatenate(deg1, axis=1)
        if linalg.left_null_space(cat, mod.p).dim:
            return False
    return True


def in_G(mod: GradedModule, params: TorsionParams) -> bool:
    """Torsionfree and generated in (S : U) degrees."""
    if not is_torsionfree(mod, params):
        return False
    return all(params.gen_degrees_contains(d) for d in top_dims(mod))


def restrict_S(mod: GradedModule, ualg, params: TorsionParams) -> GradedModule:
    """(-)_S: keep the S-degree components; module over the support-
    restricted algebra, with degree-1 and degree-n generator actions."""
    dual_gens = mod.gens
    n = params.n
    verts = {d: v for d, v in mod.verts.items() if params.in_s(d)}
    actions: dict = {}
    ual_gens = ualg.generators()
    for gi, g in enumerate(ual_gens):
        vec = np.zeros(ualg.dim(g.degree), dtype=np.int64)
        vec[g.basis_index] = 1
        for d in verts:
            d2 = d + g.degree
            if d2 not in verts:
                continue
            a = mod.act_element(g.degree, vec, d)
            if a.any():
                actions[(gi, d)] = a
    return GradedModule(ualg, verts, actions, "U")


# -- the L / L_E / L-dual membership tests -----------------------------------


def _tensor_pairs(mod: GradedModule, d: int, pairs):
    """Vertex-matched basis of M_d (x) span(pairs): indices (i, j) with the
    vertex of x_i equal to the source of the j-th algebra element."""
    vs = mod.verts_at(d)
    return [(i, j) for i in range(len(vs))
            for j, (src, tgt) in enumerate(pairs) if vs[i] == src]


def in_L(mod: GradedModule, params: TorsionParams) -> bool:
    """Membership in the distinguished subcategory over the support-
    restricted dual: generation in m + nZ plus the kernel condition
    Ker(mu_{s,1}) * (degree n-1 of the dual) inside Ker(mu_{s,n})."""
    ualg = mod.algebra
    n = params.n
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    for d in mod.degrees():
        if not params.in_s(d):
            raise ModuleError(f"support degree {d} outside S")
    if not all(params.gen_degrees_contains(d) for d in top_dims(mod)):
        return False
    if n == 2:
        return True
    dual = ualg.dual
    p = mod.p
    for s in mod.degrees():
        if (s - params.m) % n != 0:
            continue
        if mod.dim(s) == 0:
            continue
        pairs1 = dual.basis_pairs(1)
        t1 = _tensor_pairs(mod, s, pairs1)
        if not t1:
            continue
        # mu_{s,1}: X_s (x) dual_1 -> X_{s+1}
        mu1 = zeros(len(t1), mod.dim(s + 1))
        one_gens = {g.basis_index: gi for gi, g in enumerate(mod.gens)
                    if g.degree == 1}
        for r, (i, j) in enumerate(t1):
            a = mod.act(one_gens[j], s)
            if a.size:
                mu1[r] = a[i]
        ker1 = linalg.null_space(mu1.T, p)
        if ker1.dim == 0:
            continue
        pairsn = dual.basis_pairs(n)
        tn = _tensor_pairs(mod, s, pairsn)
        tn_pos = {key: c for c, key in enumerate(tn)}
        # multiply kernel elements by dual degree n-1 on the right factor
        t_mul = dual.mult(1, n - 1)
        prod_rows = []
        for vrow in ker1.basis:
            for b in range(dual.dim(n - 1)):
                out = np.zeros(len(tn), dtype=np.int64)
                for r, (i, j) in enumerate(t1):
                    if not vrow[r]:
                        continue
                    comp = t_mul[j, b] if t_mul.size else np.zeros(0)
                    for c in np.nonzero(comp)[0]:
                        key = (i, int(c))
                        if key in tn_pos:
                            out[tn_pos[key]] = (out[tn_pos[key]]
                                                + vrow[r] * comp[c]) % p
                if out.any():
                    prod_rows.append(out)
        if not prod_rows:
            continue
        prod = Subspace.from_rows(len(tn), np.stack(prod_rows), p)
        # mu_{s,n}: X_s (x) dual_n -> X_{s+n}
        mun = zeros(len(tn), mod.dim(s + n))
        n_gens = {g.basis_index: gi for gi, g in enumerate(mod.gens)
                  if g.degree == n}
        for r, (i, j) in enumerate(tn):
            a = mod.act(n_gens[j], s)
            if a.size:
                mun[r] = a[i]
        kern = linalg.null_space(mun.T, p)
        if not kern.contains(prod):
            return False
    return True


def regrade_E_to_U(mod: GradedModule, ualg) -> GradedModule:
    """Transport a module over the regraded algebra back to the support-
    restricted grading (degree j becomes delta_0(j))."""
    dmap = mod.algebra.dmap
    verts = {dmap.delta(d): v for d, v in mod.verts.items()}
    actions = {}
    u_gens = ualg.generators()
    for (gi, d), m in mod.actions.items():
        actions[(gi, dmap.delta(d))] = m
    return GradedModule(ualg, verts, actions, "U")


def regrade_U_to_E(mod: GradedModule, ealg) -> GradedModule:
    dmap = ealg.dmap
    verts = {dmap.inverse(d): v for d, v in mod.verts.items()}
    actions = {}
    for (gi, d), m in mod.actions.items():
        actions[(gi, dmap.inverse(d))] = m
    return GradedModule(ealg, verts, actions, "E")


def in_L_E(mod: GradedModule) -> bool:
    """The regraded criterion: automatic when n = 2; otherwise generation in
    even degrees plus the kernel condition through the regrading."""
    ealg = mod.algebra
    n = ealg.n
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    if n == 2:
        return True
    if not all(d % 2 == 0 for d in top_dims(mod)):
        return False
    u_mod = regrade_E_to_U(mod, ealg.ualg)
    return in_L(u_mod, TorsionParams(n, 1, 0))


def comultiplication(mod: GradedModule, s: int, u: int) -> np.ndarray:
    """Delta_{s,u}: X_{-s-u} -> X_{-s} (x) KQ_u, x -> sum_p x pbar^o (x) p.

    Columns are indexed by vertex-matched pairs (basis of X_{-s}, path p of
    length u in the original quiver); also returns are plain matrices, the
    pair list is recomputable via tensor_with_paths.
    """
    ualg = mod.algebra
    if u == 0:
        return linalg.eye(mod.dim(-s))
    if u not in (1, ualg.n):
        raise ModuleError(f"comultiplication needs u in 0, 1, n; got {u}")
    pairs, plist = tensor_with_paths(mod, -s, u)
    out = zeros(mod.dim(-s - u), len(pairs))
    dual = ualg.dual
    from .quiver import enumerate_paths, opposite_path, path_index
    q_op = dual.quiver
    q = q_op.opposite()
    for c, (i, pi) in enumerate(pairs):
        pa = plist[pi]
        rev = opposite_path(pa, q)
        v = np.zeros(len(enumerate_paths(q_op, u)), dtype=np.int64)
        v[path_index(q_op, u)[rev]] = 1
        cls = dual.reduce_vector(v, u)
        a = mod.act_element(u, cls, -s - u)  # X_{-s-u} -> X_{-s}
        if a.size:
            out[:, c] = (out[:, c] + a[:, i]) % mod.p
    return out


def tensor_with_paths(mod: GradedModule, d: int, u: int):
    """Vertex-matched basis (i, path index) of M_d (x) KQ_u over the
    original quiver; the element vertex must equal the path source."""
    from .quiver import enumerate_paths
    dual = mod.algebra.dual
    q = dual.quiver.opposite()
    plist = enumerate_paths(q, u)
    vs = mod.verts_at(d)
    pairs = [(i, pi) for i in range(len(vs))
             for pi, pa in enumerate(plist) if vs[i] == pa.source]
    return pairs, plist


def in_Lo(mod: GradedModule, params: TorsionParams) -> bool:
    """The dual-side membership: cogeneration in -(S:U) plus solvability of
    the comultiplication square at every level."""
    ualg = mod.algebra
    n = params.n
    m = params.m
    if not mod.is_valid():
        raise ModuleError("module failed validation")
    for d in mod.degrees():
        if not params.in_s(-d):
            raise ModuleError(f"support degree {d} outside -S")
    if not all(params.gen_degrees_contains(-d)
               for d in socle_subspaces(mod)):
        return False
    if n == 2:
        return True
    p = mod.p
    from .quiver import enumerate_paths
    dual = ualg.dual
    q = dual.quiver.opposite()
    levels = sorted({(-d - m) // n - 1 for d in mod.degrees()
                     if (-d - m) % n == 0})
    for k in levels:
        src_d = -(m + (k + 1) * n)
        if mod.dim(src_d) == 0:
            continue
        s = m + k * n
        # right-hand side: Delta_{s,n} then split each length-n path as
        # (first arrow, remaining length n-1 path)
        pairs_n, plist_n = tensor_with_paths(mod, -s, n)
        delta_n = comultiplication(mod, s, n)
        pairs_mid, plist_mid = tensor_with_paths(mod, -s - 1, n - 1)
        # target space: X_{-s} (x) KQ_1 (x) KQ_{n-1}, flattened as
        # (i, arrow, tail path) with endpoint matching
        tgt_index: dict = {}
        tgt_count = 0
        vs = mod.verts_at(-s)
        for i in range(len(vs)):
            for ai in range(q.arrow_count):
                if q.arrow_source(ai) != vs[i]:
                    continue
                for ti, tp in enumerate(plist_mid):
                    if tp.source == q.arrow_target(ai):
                        tgt_index[(i, ai, ti)] = tgt_count
                        tgt_count += 1
        rhs = zeros(mod.dim(src_d), tgt_count)
        for c, (i, pi) in enumerate(pairs_n):
            pa = plist_n[pi]
            ai = pa.arrows[0]
            from .quiver import Path
            tail = Path(q.arrow_target(ai), pa.arrows[1:])
            ti = plist_mid.index(tail)
            col = tgt_index[(i, ai, ti)]
            rhs[:, col] = (rhs[:, col] + delta_n[:, c]) % p
        # left edge: (Delta_{s,1} (x) 1) applied to X_{-s-1} (x) KQ_{n-1}
        delta_1 = comultiplication(mod, s, 1)
        pairs_1, plist_1 = tensor_with_paths(mod, -s, 1)
        lhs = zeros(len(pairs_mid), tgt_count)
        for r, (j, ti) in enumerate(pairs_mid):
            for c1, (i, pi1) in enumerate(pairs_1):
                coef = delta_1[j, c1] if delta_1.size else 0
                if not coef:
                    continue
                ai = plist_1[pi1].arrows[0]
                key = (i, ai, ti)
                if key in tgt_index:
                    col = tgt_index[key]
                    lhs[r, col] = (lhs[r, col] + coef) % p
        # solvability of F @ lhs = rhs row by row
        if linalg.solve_matrix(lhs.T, rhs.T, p) is None:
            return False
    return True

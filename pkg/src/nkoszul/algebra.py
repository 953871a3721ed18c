"""Graded components of path-algebra quotients and their n-homogeneous duals.

A :class:`PathAlgebra` holds, degree by degree, the ideal slice I_k inside
KQ_k, a canonical quotient basis of the degree-k component (the non-pivot
paths of the RREF of I_k), and cached multiplication tensors.  On top of it
sit the orthogonal of the degree-n relation space (computed two ways), the
dual algebra, the support-restricted algebra on U = nZ u (nZ+1), and the
regraded Yoneda-type algebra.

All algebra flavours expose the same duck-typed surface used by the module
layer: ``p``, ``nvert``, ``dim(d)``, ``basis_pairs(d)``, ``mult(d1, d2)``,
``generators()``, ``element_words(d)`` and ``relation_words()``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .linalg import Subspace, zeros
from .quiver import (
    PathSpaceElement,
    Quiver,
    enumerate_paths,
    opposite_path,
    path_index,
)


class AlgebraError(ValueError):
    pass


MAX_PATHS_PER_DEGREE = 200_000


@dataclass(frozen=True)
class Presentation:
    """A quiver with homogeneous relations of degree >= n over F_p."""

    quiver: Quiver
    n: int
    relations: tuple
    p: int = 101
    degree_cap: int | None = None

    @staticmethod
    def make(quiver, n, relations, p=101, degree_cap=None) -> "Presentation":
        if n < 2:
            raise AlgebraError("homogeneity degree must be >= 2")
        rels = []
        for r in relations:
            if r.degree < n:
                raise AlgebraError(
                    f"relation of degree {r.degree} < n = {n}")
            rr = r.reduced(p)
            if rr.coeffs:
                rels.append(rr)
        return Presentation(quiver, n, tuple(rels), p, degree_cap)

    def opposite(self) -> "Presentation":
        q = self.quiver
        return Presentation(
            q.opposite(), self.n,
            tuple(r.opposite(q) for r in self.relations),
            self.p, self.degree_cap)


@dataclass(frozen=True)
class Generator:
    """A distinguished algebra basis element used for module actions."""

    degree: int       # grading degree in the owning algebra
    basis_index: int  # index into the basis of that degree component
    source: int
    target: int
    name: str


class PathAlgebra:
    """Graded slices of KQ/I within a growable degree window."""

    def __init__(self, pres: Presentation):
        self.pres = pres
        self.p = pres.p
        self.quiver = pres.quiver
        self.nvert = pres.quiver.vertex_count
        self._paths: list = []          # per degree: list of Path
        self._pidx: list = []           # per degree: Path -> column index
        self._ideal: list = []          # per degree: RREF rows over KQ_d coords
        self._pivots: list = []
        self._nonpivots: list = []
        self._vanished_from: int | None = None
        self._mult_cache: dict = {}
        self._lmult_cache: dict = {}
        self._rels_by_degree: dict = {}
        for r in pres.relations:
            self._rels_by_degree.setdefault(r.degree, []).append(r)
        self.ensure_degree(1)

    # -- construction -------------------------------------------------------

    def _computed_to(self) -> int:
        return len(self._paths) - 1

    def ensure_degree(self, k: int) -> None:
        while self._computed_to() < k:
            self._extend_one()

    def _extend_one(self) -> None:
        k = self._computed_to() + 1
        p = self.p
        if self._vanished_from is not None and k >= self._vanished_from:
            # quotient is generated in degree 1: once a slice dies the rest do
            self._paths.append([])
            self._pidx.append({})
            self._ideal.append(zeros(0, 0))
            self._pivots.append([])
            self._nonpivots.append([])
            return
        paths = enumerate_paths(self.quiver, k)
        if len(paths) > MAX_PATHS_PER_DEGREE:
            raise AlgebraError(
                f"path explosion at degree {k}: {len(paths)} paths")
        pidx = {q: i for i, q in enumerate(paths)}
        rows = []
        if k >= 1 and self._computed_to() >= 0:
            prev = self._ideal[k - 1] if k - 1 < len(self._ideal) else None
            if prev is not None and prev.shape[0]:
                for a in range(self.quiver.arrow_count):
                    rows.append(self._arrow_shift(prev, k - 1, a, left=True, pidx=pidx, ncols=len(paths)))
                    rows.append(self._arrow_shift(prev, k - 1, a, left=False, pidx=pidx, ncols=len(paths)))
        for r in self._rels_by_degree.get(k, []):
            rows.append(r.vector(self.quiver, p).reshape(1, -1))
        if rows:
            stacked = np.concatenate([r for r in rows if r.size], axis=0) \
                if any(r.size for r in rows) else zeros(0, len(paths))
        else:
            stacked = zeros(0, len(paths))
        red, pivots, rk = linalg.rref(stacked, p)
        self._paths.append(list(paths))
        self._pidx.append(pidx)
        self._ideal.append(red[:rk])
        self._pivots.append(pivots)
        nonpiv = [c for c in range(len(paths)) if c not in set(pivots)]
        self._nonpivots.append(nonpiv)
        if len(nonpiv) == 0:
            self._vanished_from = k
        cap = self.pres.degree_cap
        if cap is not None and k > cap and len(nonpiv) > 0:
            raise AlgebraError(
                f"degree cap {cap} violated: component at degree {k} is nonzero")

    def _arrow_shift(self, rows: np.ndarray, k: int, a: int, left: bool,
                     pidx: dict, ncols: int) -> np.ndarray:
        """Multiply ideal rows at degree k by arrow a on the given side."""
        from .quiver import Path
        out = zeros(rows.shape[0], ncols)
        q = self.quiver
        for j, pa in enumerate(self._paths[k]):
            col = rows[:, j]
            if not col.any():
                continue
            if left:
                if pa.source != q.arrow_target(a):
                    continue
                new = Path(q.arrow_source(a), (a,) + pa.arrows)
            else:
                if pa.target_in(q) != q.arrow_source(a):
                    continue
                new = Path(pa.source, pa.arrows + (a,))
            out[:, pidx[new]] = (out[:, pidx[new]] + col) % self.p
        return out

    # -- basic queries ------------------------------------------------------

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        if self._vanished_from is not None and d >= self._vanished_from:
            return 0
        self.ensure_degree(d)
        return len(self._nonpivots[d])

    def total_dim_through(self, d: int) -> int:
        return sum(self.dim(k) for k in range(d + 1))

    def basis_paths(self, d: int):
        """Coset representatives: the non-pivot paths at degree d."""
        if self.dim(d) == 0:
            return []
        return [self._paths[d][i] for i in self._nonpivots[d]]

    def basis_pairs(self, d: int):
        q = self.quiver
        return [(pa.source, pa.target_in(q)) for pa in self.basis_paths(d)]

    def ideal_subspace(self, d: int) -> Subspace:
        self.ensure_degree(d)
        if self._vanished_from is not None and d >= self._vanished_from:
            # I_d = KQ_d wholesale; materialize only if path list is small
            paths = enumerate_paths(self.quiver, d)
            return Subspace.full(len(paths), self.p)
        return Subspace.from_rows(
            len(self._paths[d]), self._ideal[d], self.p)

    def path_count(self, d: int) -> int:
        self.ensure_degree(d)
        if self._vanished_from is not None and d >= self._vanished_from:
            return len(enumerate_paths(self.quiver, d))
        return len(self._paths[d])

    def is_finite_dimensional(self, probe: int | None = None) -> bool:
        """True if some computed slice vanishes (all higher then vanish)."""
        if self._vanished_from is not None:
            return True
        if probe is not None:
            self.ensure_degree(probe)
        return self._vanished_from is not None

    def vanishing_degree(self) -> int | None:
        return self._vanished_from

    # -- reduction and multiplication ---------------------------------------

    def reduce_vector(self, v: np.ndarray, d: int) -> np.ndarray:
        """KQ_d coordinates -> quotient coordinates in the canonical basis."""
        if self.dim(d) == 0:
            return np.zeros(0, dtype=np.int64)
        piv = self._pivots[d]
        nonpiv = self._nonpivots[d]
        red = self._ideal[d]
        v = np.asarray(v, dtype=np.int64) % self.p
        out = v[nonpiv].copy()
        if piv:
            out = (out - v[piv] @ red[:, nonpiv]) % self.p
        return out

    def reduce_path_element(self, el: PathSpaceElement) -> np.ndarray:
        v = el.vector(self.quiver, self.p)
        return self.reduce_vector(v, el.degree)

    def mult(self, d1: int, d2: int) -> np.ndarray:
        """Tensor T with basis_i(d1) * basis_j(d2) = sum_k T[i,j,k] basis_k."""
        key = (d1, d2)
        if key in self._mult_cache:
            return self._mult_cache[key]
        m1, m2 = self.dim(d1), self.dim(d2)
        m3 = self.dim(d1 + d2)
        t = np.zeros((m1, m2, m3), dtype=np.int64)
        if m1 and m2 and m3:
            q = self.quiver
            pidx = self._pidx[d1 + d2]
            b1 = self.basis_paths(d1)
            b2 = self.basis_paths(d2)
            for i, pa in enumerate(b1):
                for j, pb in enumerate(b2):
                    if pa.target_in(q) != pb.source:
                        continue
                    concat = pa.compose(pb, q)
                    v = np.zeros(len(self._paths[d1 + d2]), dtype=np.int64)
                    v[pidx[concat]] = 1
                    t[i, j] = self.reduce_vector(v, d1 + d2)
        self._mult_cache[key] = t
        return t

    def left_mult_matrix(self, d_el: int, vec: np.ndarray, d: int) -> np.ndarray:
        """Matrix of x -> el * x from A_d to A_{d_el + d} (rows = A_d basis)."""
        t = self.mult(d_el, d)
        vec = np.asarray(vec, dtype=np.int64) % self.p
        return np.tensordot(vec, t, axes=(0, 0)) % self.p

    def right_mult_matrix(self, d: int, d_el: int, vec: np.ndarray) -> np.ndarray:
        """Matrix of x -> x * el from A_d to A_{d + d_el} (rows = A_d basis)."""
        t = self.mult(d, d_el)
        vec = np.asarray(vec, dtype=np.int64) % self.p
        return np.tensordot(t, vec, axes=(1, 0)) % self.p

    # -- generator / word interface -----------------------------------------

    def generators(self):
        """Degree-1 generators: the arrows (Lambda_1 = KQ_1 always)."""
        gens = []
        q = self.quiver
        for i in range(q.arrow_count):
            gens.append(Generator(1, i, q.arrow_source(i),
                                  q.arrow_target(i), q.arrow_name(i)))
        return gens

    def generator_vector(self, g: Generator) -> np.ndarray:
        v = np.zeros(self.dim(g.degree), dtype=np.int64)
        v[g.basis_index] = 1
        return v

    def element_words(self, d: int):
        """Express each basis element of A_d as generator words."""
        if d < 1:
            raise AlgebraError("element_words needs degree >= 1")
        return [[(tuple(pa.arrows), 1)] for pa in self.basis_paths(d)]

    def relation_words(self):
        """Vanishing generator-word combinations implied by the relations."""
        out = []
        for r in self.pres.relations:
            words = [(tuple(pa.arrows), c % self.p) for pa, c in r.coeffs.items()]
            out.append((r.degree, words))
        # any arrow word representing an ideal element of higher slices is a
        # consequence of these via two-sided closure, so this list suffices
        return out

    def word_degree(self, word) -> int:
        gens = self.generators()
        return sum(gens[i].degree for i in word)


def build_slices(pres: Presentation, window_top: int) -> PathAlgebra:
    """Materialize the graded slices of KQ/I through the given degree."""
    if window_top < pres.n:
        raise AlgebraError("window must reach the homogeneity degree")
    alg = PathAlgebra(pres)
    alg.ensure_degree(window_top)
    return alg


# -- orthogonal of the degree-n relation slice ------------------------------


def opposite_permutation(q: Quiver, k: int) -> np.ndarray:
    """sigma with paths(Q, k)[i] ^o = paths(Q^op, k)[sigma[i]]."""
    qop = q.opposite()
    idx_op = path_index(qop, k)
    paths = enumerate_paths(q, k)
    return np.array([idx_op[opposite_path(pa, q)] for pa in paths],
                    dtype=np.int64)


def compute_orthogonal(alg: PathAlgebra) -> Subspace:
    """{u in KQ_n^op : <u, I_n> = 0} via the kernel of the pairing matrix."""
    pres = alg.pres
    n = pres.n
    q = pres.quiver
    alg.ensure_degree(n)
    ideal_rows = alg._ideal[n]
    paths = enumerate_paths(q, n)
    npaths = len(paths)
    sigma = opposite_permutation(q, n)
    # KQ_0-valued pairing: one constraint row per (ideal basis vector, vertex)
    rows = []
    for v in ideal_rows:
        per_vertex: dict = {}
        for i in range(npaths):
            if v[i]:
                w = paths[i].target_in(q)
                per_vertex.setdefault(w, np.zeros(npaths, dtype=np.int64))
                per_vertex[w][sigma[i]] = v[i]
        rows.extend(per_vertex.values())
    if not rows:
        return Subspace.full(npaths, alg.p)
    mat = np.stack(rows, axis=0)
    return linalg.null_space(mat, alg.p)


@dataclass
class DualData:
    """The ordered-basis construction of the orthogonal.

    Q_n is split into blocks (r, s, t): paths whose classes form a basis of
    the degree-n slice of the quotient, the remaining paths outside the
    ideal, and the paths inside the ideal.  lambda_[i, j] solves
    p_{s_j} - sum_i lambda_[i, j] p_{r_i} in I_n, and
    h_i = p_{r_i}^o + sum_j lambda_[i, j] p_{s_j}^o.
    """

    r_block: list
    s_block: list
    t_block: list
    lam: np.ndarray
    h_basis: list            # PathSpaceElement over Q^op
    orthogonal: Subspace     # span{h_i} in KQ_n^op coordinates


def compute_orthogonal_via_ordering(alg: PathAlgebra) -> DualData:
    """The orthogonal basis from the explicit (r, s, t) path ordering."""
    pres = alg.pres
    n, p, q = pres.n, alg.p, pres.quiver
    alg.ensure_degree(n)
    paths = enumerate_paths(q, n)
    m = alg.dim(n)
    r_block, s_block, t_block = [], [], []
    images = []
    basis_mat = zeros(0, m) if m else zeros(0, 0)
    cur_rank = 0
    for i, pa in enumerate(paths):
        v = np.zeros(len(paths), dtype=np.int64)
        v[i] = 1
        img = alg.reduce_vector(v, n)
        images.append(img)
        if m == 0 or not img.any():
            t_block.append(i)
            continue
        cand = np.concatenate([basis_mat, img.reshape(1, -1)], axis=0)
        rk = linalg.rank(cand, p)
        if rk > cur_rank:
            r_block.append(i)
            basis_mat = cand
            cur_rank = rk
        else:
            s_block.append(i)
    r, s = len(r_block), len(s_block)
    lam = zeros(r, s)
    if r and s:
        vr = np.stack([images[i] for i in r_block], axis=0)  # r x m
        for jj, j in enumerate(s_block):
            sol = linalg.solve(vr.T, images[j], p)
            if sol is None:
                raise AlgebraError("inconsistent block decomposition")
            lam[:, jj] = sol
    qop = q.opposite()
    h_basis = []
    for ii, i in enumerate(r_block):
        coeffs = {opposite_path(paths[i], q): 1}
        for jj, j in enumerate(s_block):
            if lam[ii, jj]:
                coeffs[opposite_path(paths[j], q)] = int(lam[ii, jj])
        h_basis.append(PathSpaceElement(n, coeffs))
    nop = len(enumerate_paths(qop, n))
    if h_basis:
        rows = np.stack([h.vector(qop, p) for h in h_basis], axis=0)
        orth = Subspace.from_rows(nop, rows, p)
    else:
        orth = Subspace.zero(nop, p)
    return DualData(r_block, s_block, t_block, lam, h_basis, orth)


def build_dual(alg: PathAlgebra, window_top: int) -> PathAlgebra:
    """Slices of the dual algebra KQ^op / <I_n-orthogonal>."""
    data = compute_orthogonal_via_ordering(alg)
    pres = alg.pres
    dual_pres = Presentation.make(
        pres.quiver.opposite(), pres.n, data.h_basis, pres.p)
    return build_slices(dual_pres, max(window_top, pres.n))


# -- support restriction and regrading --------------------------------------


def in_support_u(d: int, n: int) -> bool:
    return d % n in (0, 1)


class USupportAlgebra:
    """The dual algebra with components outside U = nZ u (nZ+1) killed.

    Products landing outside U are zero; the algebra is generated by the
    degree-0, degree-1 and degree-n components.
    """

    def __init__(self, dual: PathAlgebra, n: int):
        self.dual = dual
        self.n = n
        self.p = dual.p
        self.nvert = dual.nvert
        self.quiver = dual.quiver
        self._word_cache: dict = {}
        self._relation_cache = None

    def dim(self, d: int) -> int:
        if d < 0 or not in_support_u(d, self.n):
            return 0
        return self.dual.dim(d)

    def basis_pairs(self, d: int):
        if self.dim(d) == 0:
            return []
        return self.dual.basis_pairs(d)

    def basis_paths(self, d: int):
        if self.dim(d) == 0:
            return []
        return self.dual.basis_paths(d)

    def mult(self, d1: int, d2: int) -> np.ndarray:
        m1, m2, m3 = self.dim(d1), self.dim(d2), self.dim(d1 + d2)
        if not (in_support_u(d1, self.n) and in_support_u(d2, self.n)
                and in_support_u(d1 + d2, self.n)):
            return np.zeros((m1, m2, m3), dtype=np.int64)
        return self.dual.mult(d1, d2)

    def generators(self):
        gens = []
        q = self.quiver
        for i in range(q.arrow_count):
            gens.append(Generator(1, i, q.arrow_source(i),
                                  q.arrow_target(i), q.arrow_name(i)))
        for i, (u, v) in enumerate(self.dual.basis_pairs(self.n)):
            name = self.dual.basis_paths(self.n)[i].name_in(q)
            gens.append(Generator(self.n, i, u, v, name))
        return gens

    def generator_vector(self, g: Generator) -> np.ndarray:
        v = np.zeros(self.dim(g.degree), dtype=np.int64)
        v[g.basis_index] = 1
        return v

    def _word_product(self, word) -> tuple[int, np.ndarray]:
        gens = self.generators()
        deg = 0
        vec = None
        for gi in word:
            g = gens[gi]
            gv = self.generator_vector(g)
            if vec is None:
                deg, vec = g.degree, gv
            else:
                t = self.mult(deg, g.degree)
                vec = np.tensordot(vec, np.tensordot(t, gv, axes=(1, 0)),
                                   axes=(0, 0)) % self.p
                deg += g.degree
        return deg, vec

    def element_words(self, d: int):
        """Express the basis of the degree-d component in generator words.

        Canonical shapes: degree kn uses k degree-n letters; degree kn+1
        appends one degree-1 letter.
        """
        if d in self._word_cache:
            return self._word_cache[d]
        if d < 1 or self.dim(d) == 0:
            out = [[] for _ in range(self.dim(d))]
            self._word_cache[d] = out
            return out
        gens = self.generators()
        one_idx = [i for i, g in enumerate(gens) if g.degree == 1]
        n_idx = [i for i, g in enumerate(gens) if g.degree == self.n]
        k, rho = divmod(d, self.n)
        if rho not in (0, 1):
            raise AlgebraError(f"degree {d} outside the support set")
        import itertools
        words = [w for w in itertools.product(n_idx, repeat=k)]
        if rho == 1:
            words = [w + (a,) for w in words for a in one_idx]
        if d == 1:
            words = [(a,) for a in one_idx]
        prods = []
        kept = []
        for w in words:
            _, vec = self._word_product(w)
            if vec is not None and vec.any():
                prods.append(vec)
                kept.append(w)
        if not prods:
            raise AlgebraError(f"degree {d} not spanned by generator words")
        pm = np.stack(prods, axis=0)  # |words| x dim
        out = []
        for i in range(self.dim(d)):
            e = np.zeros(self.dim(d), dtype=np.int64)
            e[i] = 1
            sol = linalg.solve(pm.T, e, self.p)
            if sol is None:
                raise AlgebraError(
                    f"basis element {i} at degree {d} not a word combination")
            out.append([(kept[j], int(sol[j])) for j in range(len(kept))
                        if sol[j]])
        self._word_cache[d] = out
        return out

    def relation_words(self):
        """Kernel of the word -> algebra map on short generator words.

        Words of length <= 2 grouped by total degree; every combination that
        vanishes in the algebra must annihilate any valid module.
        """
        if self._relation_cache is not None:
            return self._relation_cache
        gens = self.generators()
        by_degree: dict = {}
        for i, g in enumerate(gens):
            by_degree.setdefault(g.degree, []).append((i,))
        for i, g in enumerate(gens):
            for j, h in enumerate(gens):
                if g.target == h.source:
                    by_degree.setdefault(g.degree + h.degree, []).append((i, j))
        # also record length-2 words with mismatched endpoints: they vanish
        mismatched = [(g.degree + h.degree, (i, j))
                      for i, g in enumerate(gens)
                      for j, h in enumerate(gens) if g.target != h.source]
        out = []
        for deg, words in sorted(by_degree.items()):
            if deg == 1:
                continue
            vecs = []
            for w in words:
                _, v = self._word_product(w)
                if v is None or v.size == 0:
                    v = np.zeros(max(self.dim(deg), 1), dtype=np.int64)[: self.dim(deg)]
                vecs.append(v if v.size else np.zeros(self.dim(deg), dtype=np.int64))
            if self.dim(deg) == 0:
                for w in words:
                    out.append((deg, [(w, 1)]))
                continue
            mat = np.stack(vecs, axis=0)
            ker = linalg.left_null_space(mat, self.p)
            for row in ker.basis:
                rel = [(words[j], int(row[j])) for j in range(len(words))
                       if row[j]]
                if rel:
                    out.append((deg, rel))
        for deg, w in mismatched:
            out.append((deg, [(w, 1)]))
        self._relation_cache = out
        return out

    def word_degree(self, word) -> int:
        gens = self.generators()
        return sum(gens[i].degree for i in word)


@dataclass(frozen=True)
class DegreeMap:
    """The strictly increasing regrading with image S = m + U."""

    m: int
    n: int

    def delta(self, j: int) -> int:
        k, rho = divmod(j, 2)
        return self.m + k * self.n + rho

    def in_image(self, d: int) -> bool:
        return (d - self.m) % self.n in (0, 1)

    def inverse(self, d: int) -> int:
        if not self.in_image(d):
            raise AlgebraError(f"degree {d} not in the image of the regrading")
        k, rho = divmod(d - self.m, self.n)
        return 2 * k + rho


def delta(dmap: DegreeMap, j: int) -> int:
    return dmap.delta(j)


def restrict_support(dual: PathAlgebra, n: int) -> USupportAlgebra:
    return USupportAlgebra(dual, n)


class YonedaAlgebra:
    """The support-restricted dual regraded by delta_0.

    Component j is the delta(j)-component of the support-restricted dual;
    generators sit in degrees 1 and 2.
    """

    def __init__(self, ualg: USupportAlgebra):
        self.ualg = ualg
        self.n = ualg.n
        self.p = ualg.p
        self.nvert = ualg.nvert
        self.quiver = ualg.quiver
        self.dmap = DegreeMap(0, ualg.n)

    def dim(self, j: int) -> int:
        if j < 0:
            return 0
        return self.ualg.dim(self.dmap.delta(j))

    def basis_pairs(self, j: int):
        if j < 0:
            return []
        return self.ualg.basis_pairs(self.dmap.delta(j))

    def mult(self, j1: int, j2: int) -> np.ndarray:
        # delta is additive exactly where the support-restricted product is
        # nonzero, so the regraded product is the restricted product
        d1, d2 = self.dmap.delta(j1), self.dmap.delta(j2)
        m3 = self.dim(j1 + j2)
        t = self.ualg.mult(d1, d2)
        if d1 + d2 != self.dmap.delta(j1 + j2):
            return np.zeros((self.dim(j1), self.dim(j2), m3), dtype=np.int64)
        return t

    def generators(self):
        gens = []
        for g in self.ualg.generators():
            deg = 1 if g.degree == 1 else 2
            gens.append(Generator(deg, g.basis_index, g.source, g.target,
                                  g.name))
        return gens

    def generator_vector(self, g: Generator) -> np.ndarray:
        v = np.zeros(self.dim(g.degree), dtype=np.int64)
        v[g.basis_index] = 1
        return v

    def element_words(self, j: int):
        return self.ualg.element_words(self.dmap.delta(j))

    def relation_words(self):
        out = []
        gens = self.ualg.generators()

        def e_degree(word):
            return sum(1 if gens[i].degree == 1 else 2 for i in word)

        for _, rel in self.ualg.relation_words():
            if rel:
                out.append((e_degree(rel[0][0]), rel))
        return out

    def word_degree(self, word) -> int:
        gens = self.generators()
        return sum(gens[i].degree for i in word)


def yoneda_regrade(ualg: USupportAlgebra) -> YonedaAlgebra:
    return YonedaAlgebra(ualg)

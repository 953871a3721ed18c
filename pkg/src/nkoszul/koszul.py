"""Koszulity-type checkers via minimal projective resolutions.

A graded algebra with relations concentrated in degree n is generalized
Koszul when the minimal resolution of its degree-0 part has the j-th term
generated purely in the alternating degree 0, 1, n, n+1, 2n, ...  The
checkers here build the resolution segment honestly (the base algebra must
be finite dimensional so free modules are complete), read off generator
degrees, and reuse the duality and 2-complex machinery for the co-Koszul
and liftability variants.
"""
from __future__ import annotations

from dataclasses import dataclass

from .algebra import DegreeMap
from .complexes import (
    ComplexOfGraded,
    dualize_complex,
    in_Y,
    _lam_top,
    _require_finite,
)
from .grmod import (
    GradedModule,
    GradedMorphism,
    TorsionParams,
    cogenerated_in_degrees,
    graded_dual,
    morphism_kernel,
    opposite_algebra,
    projective_cover,
    submodule_as_module,
    top_complements,
    zero_module,
)


@dataclass
class ResolutionSegment:
    """A finite segment of a minimal projective resolution.

    ``pmods[j]`` covers the j-th syzygy; ``diffs[0]`` is the augmentation
    onto the resolved module and ``diffs[j]`` maps pmods[j] to pmods[j-1].
    ``gen_lists[j]`` holds the (vertex, degree) generators of pmods[j].
    """

    module: GradedModule
    pmods: list
    diffs: list
    gen_lists: list

    def length(self) -> int:
        return len(self.pmods) - 1


def semisimple_module(lam) -> GradedModule:
    """The degree-0 part of the algebra as a right module."""
    return GradedModule(lam, {0: tuple(range(lam.nvert))}, {})


def simple_module(lam, v: int) -> GradedModule:
    return GradedModule(lam, {0: (v,)}, {})


def _cover_gen_degrees(mod: GradedModule):
    out = []
    for d, idxs in top_complements(mod).items():
        for i in idxs:
            out.append((mod.verts_at(d)[i], d))
    return out


def minimal_projective_resolution(mod: GradedModule,
                                  length: int) -> ResolutionSegment:
    """Iterated minimal covers; exact because free modules are complete."""
    lam = mod.algebra
    _require_finite(lam)
    top = _lam_top(lam)
    pmods = []
    diffs = []
    gen_lists = []
    current = mod
    incl = None
    for j in range(length + 1):
        if current.is_zero():
            z = zero_module(lam)
            pmods.append(z)
            prev = pmods[j - 1] if j else mod
            diffs.append(GradedMorphism(z, prev, {}))
            gen_lists.append([])
            current = z
            continue
        hi = max(d for _, d in _cover_gen_degrees(current)) + top
        pmod, phi, gen_list = projective_cover(current, hi=hi)
        pmods.append(pmod)
        gen_lists.append(gen_list)
        diffs.append(phi if incl is None else phi.compose(incl))
        ker = morphism_kernel(phi)
        if not ker:
            current = zero_module(lam)
            incl = None
            continue
        current, incl = submodule_as_module(pmod, ker)
    return ResolutionSegment(mod, pmods, diffs, gen_lists)


def is_n_koszul(lam, bound: int) -> bool:
    """Generator degrees of the resolution of the degree-0 part follow the
    alternating degree map through the given homological bound."""
    seg = minimal_projective_resolution(semisimple_module(lam), bound)
    dmap = DegreeMap(0, lam.pres.n)
    for j, gens in enumerate(seg.gen_lists):
        if any(d != dmap.delta(j) for _, d in gens):
            return False
    return True


def ext_dims(lam, bound: int) -> list:
    """dim Ext^j of the degree-0 part against itself, for j = 0..bound.

    For a minimal resolution the dimension is the number of generators of
    the j-th term, which the construction guarantees.
    """
    seg = minimal_projective_resolution(semisimple_module(lam), bound)
    return [len(gens) for gens in seg.gen_lists]


def ext_dims_table(lam, bound: int) -> list:
    """Per vertex pair: entry (v, w) of table j counts the generators at
    vertex w in the j-th resolution term of the simple at v."""
    out = [dict() for _ in range(bound + 1)]
    for v in range(lam.nvert):
        seg = minimal_projective_resolution(simple_module(lam, v), bound)
        for j, gens in enumerate(seg.gen_lists):
            for w, _ in gens:
                out[j][(v, w)] = out[j].get((v, w), 0) + 1
    return out


def coresolution_complex(mod: GradedModule, bound: int) -> ComplexOfGraded:
    """Minimal almost-injective coresolution of the module, as the dual of
    a projective resolution of its graded dual over the opposite algebra."""
    op_data = opposite_algebra(mod.algebra)
    dm = graded_dual(mod, op_data)
    seg = minimal_projective_resolution(dm, bound)
    comps = {-j: m for j, m in enumerate(seg.pmods)}
    diffs = {-j: f for j, f in enumerate(seg.diffs) if j >= 1}
    deleted = ComplexOfGraded(op_data[0], 2, comps, diffs)
    return dualize_complex(deleted)


def is_n_cokoszul(mod: GradedModule, bound: int) -> bool:
    """Cogenerated in degree 0 with coresolution terms cogenerated in the
    alternating degrees, decided over the opposite algebra."""
    if mod.is_zero():
        return True
    if not cogenerated_in_degrees(mod, {0}):
        return False
    op_data = opposite_algebra(mod.algebra)
    dm = graded_dual(mod, op_data)
    seg = minimal_projective_resolution(dm, bound)
    dmap = DegreeMap(0, mod.algebra.pres.n)
    for j, gens in enumerate(seg.gen_lists):
        if any(d != dmap.delta(j) for _, d in gens):
            return False
    return True


def is_H0_liftable_resolution(mod: GradedModule, ualg, bound: int,
                              seed: int = 0):
    """Whether the minimal coresolution of the module lifts to a module
    over the support-restricted dual.  Returns (verdict, witness module).

    This is a checker for an open structural question; verdicts are
    recorded, not asserted.
    """
    c = coresolution_complex(mod, bound)
    params = TorsionParams(mod.algebra.pres.n, 1, 0)
    return in_Y(c, ualg, params, seed=seed)

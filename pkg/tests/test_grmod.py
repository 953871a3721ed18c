import numpy as np
import pytest

from nkoszul import grmod as gm
from nkoszul import verify
from nkoszul.grmod import (GradedModule, GradedMorphism, TorsionParams,
                           free_module, graded_dual, hom_space, iso_modules,
                           opposite_algebra, projective_cover, quotient_module,
                           regular_module, submodule_as_module,
                           submodule_closure, zero_module)

P = 101


def entry(name="two_vertex_n3"):
    return verify.corpus(name)


def test_free_module_dims_match_algebra():
    e = entry()
    lam = e["lam"]
    f = free_module(lam, [(0, 0)], 6)
    for d in range(4):
        assert f.dim(d) == sum(1 for (pa, v) in [(pa, pa.target_in(e["quiver"]))
                                                 for pa in lam.basis_paths(d)]
                               if pa.source == 0)
    assert f.is_valid()
    assert f.free_gens == [(0, 0)]


def test_regular_module_is_valid_and_full():
    e = entry("one_loop_n3")
    lam = e["lam"]
    r = regular_module(lam, 6)
    assert [r.dim(d) for d in range(4)] == [1, 1, 1, 0]
    assert r.is_valid()


def test_shift_moves_grading():
    e = entry("one_loop_n3")
    f = free_module(e["lam"], [(0, 0)], 6)
    s = f.shift(2)
    assert s.dim(-2) == f.dim(0)
    assert s.dim(0) == f.dim(2)
    assert s.is_valid()


def test_validate_catches_bad_action():
    e = entry("two_vertex_n3")
    # generator "a" goes from vertex 0 to vertex 1; pointing it at a
    # degree-1 component sitting over vertex 0 breaks the block structure
    bad = GradedModule(e["lam"], {0: (0,), 1: (0,)},
                       {(0, 0): np.array([[1]], dtype=np.int64)})
    assert not bad.is_valid()
    assert bad.validate()


def test_hom_space_endomorphisms_of_free():
    e = entry("one_loop_n3")
    f = free_module(e["lam"], [(0, 0)], 6)
    homs = hom_space(f, f)
    # graded endomorphisms of the rank-one free module over K[x]/(x^3),
    # truncated: one degree-zero map (the identity scale)
    assert len(homs) == 1
    assert homs[0].commutes()


def test_iso_modules_detects_isomorphism_and_refuses():
    e = entry("two_vertex_n3")
    f = free_module(e["lam"], [(0, 0)], 5)
    g = free_module(e["lam"], [(0, 0)], 5)
    wit = iso_modules(f, g, seed=1)
    assert wit is not None and wit.is_iso()
    h = free_module(e["lam"], [(1, 0)], 5)
    assert iso_modules(f, h, seed=1) is None


def test_socle_radical_top():
    e = entry("one_loop_n3")
    lam = e["lam"]
    f = free_module(lam, [(0, 0)], 6)
    soc = gm.socle_subspaces(f)
    assert sorted(soc) == [2]
    rad = gm.radical_subspaces(f)
    assert sorted(d for d, s in rad.items() if s.dim) == [1, 2]
    assert gm.top_dims(f) == {0: 1}


def test_generated_and_cogenerated():
    e = entry("one_loop_n3")
    f = free_module(e["lam"], [(0, 0)], 6)
    assert gm.generated_in_degrees(f, {0})
    assert not gm.generated_in_degrees(f, {1})
    assert gm.cogenerated_in_degrees(f, {2})
    assert not gm.cogenerated_in_degrees(f, {1})


def test_submodule_and_quotient_dims_add_up():
    e = entry("two_vertex_n3")
    lam = e["lam"]
    f = free_module(lam, [(0, 0)], 6)
    row = np.zeros(f.dim(1), dtype=np.int64)
    row[0] = 1
    spans = submodule_closure(f, {1: row.reshape(1, -1)})
    sub, _ = submodule_as_module(f, spans)
    quot, _ = quotient_module(f, spans)
    assert sub.is_valid() and quot.is_valid()
    for d in f.degrees():
        assert sub.dim(d) + quot.dim(d) == f.dim(d)


def test_projective_cover_of_simple():
    e = entry("two_vertex_n3")
    lam = e["lam"]
    simple = GradedModule(lam, {0: (0,)}, {})
    cover, f, gen_list = projective_cover(simple, 6)
    assert f.commutes()
    assert gen_list == [(0, 0)]
    assert gm.top_dims(cover) == {0: 1}
    assert cover.dim(0) == 1 and cover.verts_at(0) == (0,)


def test_presented_in_degrees_free_module():
    e = entry("one_loop_n3")
    f = free_module(e["lam"], [(0, 0)], 6)
    assert gm.presented_in_degrees(f, {0, 3})


def test_opposite_algebra_memoized_involution():
    e = entry("two_vertex_n3")
    lam = e["lam"]
    op, _ = gm.opposite_algebra(lam)
    op2, _ = gm.opposite_algebra(op)
    assert op2 is lam


def test_graded_dual_dims_and_involution():
    e = entry("two_vertex_n3")
    lam = e["lam"]
    f = free_module(lam, [(0, 0)], 5)
    d = graded_dual(f)
    for deg in f.degrees():
        assert d.dim(-deg) == f.dim(deg)
    dd = graded_dual(d)
    wit = iso_modules(dd, f, seed=0)
    assert wit is not None


def test_torsion_submodule_of_free_dual_module_is_zero():
    e = entry("two_vertex_n3")
    dual = e["dual"]
    params = TorsionParams(3, 1, 0)
    f = free_module(dual, [(0, 0)], 7)
    assert gm.torsion_submodule(f, params) == {}
    assert gm.is_torsionfree(f, params)
    # truncating at a degree outside the support set leaves a torsion top
    g = free_module(dual, [(0, 0)], 8)
    tors = gm.torsion_submodule(g, params)
    assert list(tors) == [8]
    assert not gm.is_torsionfree(g, params)


def test_torsion_detects_off_support_part():
    e = entry("two_vertex_n3")
    dual = e["dual"]
    params = TorsionParams(3, 1, 0)
    # a stalk concentrated off the support degrees is pure torsion
    stalk = GradedModule(dual, {2: (0,)}, {})
    tors = gm.torsion_submodule(stalk, params)
    assert 2 in tors and tors[2].dim == 1
    assert not gm.is_torsionfree(stalk, params)


def test_restrict_S_of_free_dual_is_in_L():
    e = entry("two_vertex_n3")
    params = TorsionParams(3, 1, 0)
    f = free_module(e["dual"], [(0, 0)], 7)
    x = gm.restrict_S(f, e["ualg"], params)
    assert x.is_valid()
    assert gm.in_L(x, params)
    for d in x.degrees():
        assert params.in_s(d)


def test_in_G_for_free_dual_module():
    e = entry("two_vertex_n3")
    params = TorsionParams(3, 1, 0)
    f = free_module(e["dual"], [(0, 0)], 7)
    assert gm.in_G(f, params)


def test_regrade_round_trip():
    e = entry("one_loop_n3")
    params = TorsionParams(3, 1, 0)
    ualg = e["ualg"]
    f = free_module(e["dual"], [(0, 0)], 7)
    x = gm.restrict_S(f, ualg, params)
    ealg = verify_yoneda(e)
    y = gm.regrade_U_to_E(x, ealg)
    back = gm.regrade_E_to_U(y, ualg)
    wit = iso_modules(back, x, seed=0)
    assert wit is not None


def verify_yoneda(e):
    from nkoszul.algebra import yoneda_regrade
    return yoneda_regrade(e["ualg"])


def test_in_L_E_of_even_presented_module():
    e = entry("one_loop_n3")
    ealg = verify_yoneda(e)
    f = free_module(ealg, [(0, 0)], 3)
    assert gm.presented_in_degrees(f, set(range(0, 7, 2)))
    assert gm.in_L_E(f)


def test_in_L_E_rejects_odd_inner_kill():
    e = entry("one_loop_n3")
    ealg = verify_yoneda(e)
    f = free_module(ealg, [(0, 0)], 6)
    row = np.eye(1, f.dim(1), dtype=np.int64)
    spans = submodule_closure(f, {1: row})
    quot, _ = quotient_module(f, spans)
    assert not gm.in_L_E(quot)


def test_in_Lo_of_dualized_member():
    e = entry("two_vertex_n3")
    params = TorsionParams(3, 1, 0)
    f = free_module(e["dual"], [(0, 0)], 7)
    x = gm.restrict_S(f, e["ualg"], params)
    dx = graded_dual(x)
    assert gm.in_Lo(dx, params)

import pytest

from nkoszul import quiver as qv
from nkoszul.quiver import Path, PathSpaceElement, Quiver, QuiverError

P = 101


def two_loop():
    return Quiver.make(1, [("x", 0, 0), ("y", 0, 0)])


def line():
    return Quiver.make(3, [("a", 0, 1), ("b", 1, 2)])


def test_arrow_lookup():
    q = line()
    assert q.vertex_count == 3
    assert q.arrow_count == 2
    assert q.arrow_by_name("b") == 1
    assert (q.arrow_source(1), q.arrow_target(1)) == (1, 2)
    with pytest.raises(QuiverError):
        q.arrow_by_name("missing")


def test_opposite_swaps_endpoints_keeps_names():
    q = line()
    op = q.opposite()
    assert op.arrow_name(0) == "a"
    assert (op.arrow_source(0), op.arrow_target(0)) == (1, 0)
    assert op.opposite() == q


def test_path_validity_and_composition():
    q = line()
    a, b = qv.arrow_path(q, 0), qv.arrow_path(q, 1)
    ab = a.compose(b, q)
    assert ab.is_valid_in(q)
    assert ab.target_in(q) == 2
    assert ab.name_in(q) == "a.b"
    with pytest.raises(QuiverError):
        b.compose(a, q)
    bad = Path(0, (1,))
    assert not bad.is_valid_in(q)


def test_enumerate_paths_counts_and_order():
    q = two_loop()
    for k in range(6):
        paths = qv.enumerate_paths(q, k)
        assert len(paths) == 2 ** k
        # canonical order is lexicographic on arrow index sequences
        assert [p.arrows for p in paths] == sorted(p.arrows for p in paths)
    ql = line()
    assert len(qv.enumerate_paths(ql, 0)) == 3
    assert len(qv.enumerate_paths(ql, 2)) == 1
    assert qv.enumerate_paths(ql, 3) == []


def test_path_index_inverts_enumeration():
    q = two_loop()
    idx = qv.path_index(q, 3)
    for i, p in enumerate(qv.enumerate_paths(q, 3)):
        assert idx[p] == i


def test_opposite_path_reverses():
    q = line()
    ab = Path(0, (0, 1))
    rev = qv.opposite_path(ab, q)
    assert rev.arrows == (1, 0)
    assert rev.is_valid_in(q.opposite())
    assert rev.source == 2


def test_path_space_element_vector_and_reduce():
    q = two_loop()
    paths = qv.enumerate_paths(q, 2)
    el = PathSpaceElement(2, {paths[0]: P + 3, paths[3]: P})
    red = el.reduced(P)
    assert red.coeffs == {paths[0]: 3}
    v = el.vector(q, P)
    assert v[0] == 3 and not v[1:].any()
    with pytest.raises(QuiverError):
        PathSpaceElement(2, {paths[0]: 1, qv.trivial_path(0): 1})


def test_pairing_is_delta_on_paths():
    q = two_loop()
    paths = qv.enumerate_paths(q, 2)
    u = PathSpaceElement(2, {qv.opposite_path(paths[1], q): 5})
    assert qv.pairing(u, PathSpaceElement(2, {paths[1]: 2}), q, P) == {0: 10}
    assert qv.pairing(u, PathSpaceElement(2, {paths[2]: 2}), q, P) == {}


def test_pairing_lands_at_path_target():
    q = line()
    ab = Path(0, (0, 1))
    u = PathSpaceElement(2, {qv.opposite_path(ab, q): 1})
    v = PathSpaceElement(2, {ab: 1})
    assert qv.pairing(u, v, q, P) == {2: 1}

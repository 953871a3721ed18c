import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nkoszul import linalg
from nkoszul.linalg import Subspace

P = 101


def rand_matrix(rng, r, c):
    return rng.integers(0, P, size=(r, c)).astype(np.int64)


small_dims = st.integers(min_value=0, max_value=6)


@st.composite
def matrices(draw, max_dim=6):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    data = draw(st.lists(st.integers(0, P - 1), min_size=r * c,
                         max_size=r * c))
    return np.array(data, dtype=np.int64).reshape(r, c)


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_is_idempotent(m):
    r1, piv1, rk1 = linalg.rref(m, P)
    r2, piv2, rk2 = linalg.rref(r1, P)
    assert np.array_equal(r1, r2)
    assert piv1 == piv2 and rk1 == rk2


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_nullity(m):
    rk = linalg.rank(m, P)
    ns = linalg.null_space(m, P)
    assert rk + ns.dim == m.shape[1]
    for v in ns.basis:
        assert not ((m @ v) % P).any()


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_left_null_space_annihilates(m):
    ns = linalg.left_null_space(m, P)
    assert ns.dim == m.shape[0] - linalg.rank(m, P)
    for v in ns.basis:
        assert not ((v @ m) % P).any()


@settings(max_examples=40, deadline=None)
@given(matrices(max_dim=5), st.integers(0, 10 ** 6))
def test_solve_consistent_system(m, seed):
    rng = np.random.default_rng(seed)
    x = rng.integers(0, P, size=m.shape[1])
    b = (m @ x) % P
    sol = linalg.solve(m, b, P)
    assert sol is not None
    assert np.array_equal((m @ sol) % P, b)


def test_solve_inconsistent_system():
    a = np.array([[1, 0], [2, 0]], dtype=np.int64)
    b = np.array([1, 3], dtype=np.int64)
    assert linalg.solve(a, b, P) is None


def test_solve_is_deterministic_free_vars_zero():
    # one equation, two unknowns: the canonical solution zeroes the free one
    a = np.array([[1, 1]], dtype=np.int64)
    b = np.array([5], dtype=np.int64)
    sol = linalg.solve(a.T.T, b, P)
    assert sol is not None and sol[1] == 0 and sol[0] == 5


def test_inverse_round_trip():
    rng = np.random.default_rng(3)
    for _ in range(10):
        m = rand_matrix(rng, 4, 4)
        if linalg.rank(m, P) < 4:
            continue
        inv = linalg.inverse(m, P)
        assert np.array_equal(linalg.mat_mul(m, inv, P), linalg.eye(4))


def test_mat_mul_matches_numpy_mod():
    rng = np.random.default_rng(0)
    a, b = rand_matrix(rng, 3, 5), rand_matrix(rng, 5, 2)
    assert np.array_equal(linalg.mat_mul(a, b, P), (a @ b) % P)


def test_subspace_dimension_formula():
    rng = np.random.default_rng(7)
    for _ in range(25):
        u = Subspace.from_rows(6, rand_matrix(rng, 2, 6), P)
        w = Subspace.from_rows(6, rand_matrix(rng, 3, 6), P)
        assert u.sum(w).dim + u.intersect(w).dim == u.dim + w.dim


def test_subspace_canonical_equality():
    rows = np.array([[1, 2, 3], [0, 1, 1]], dtype=np.int64)
    scaled = (rows * 17) % P
    mixed = np.array([rows[0], (rows[0] + rows[1]) % P], dtype=np.int64)
    s1 = Subspace.from_rows(3, rows, P)
    assert s1 == Subspace.from_rows(3, scaled, P)
    assert s1 == Subspace.from_rows(3, mixed, P)
    assert s1 != Subspace.from_rows(3, rows[:1], P)


def test_subspace_containment():
    rows = np.array([[1, 0, 4], [0, 1, 2]], dtype=np.int64)
    s = Subspace.from_rows(3, rows, P)
    assert s.contains_vector((rows[0] * 9 + rows[1]) % P)
    assert not s.contains_vector(np.array([0, 0, 1], dtype=np.int64))
    assert Subspace.full(3, P).contains(s)
    assert s.contains(Subspace.zero(3, P))

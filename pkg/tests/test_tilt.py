import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from elemtilt.algebra import make_algebra
from elemtilt.tilt import (
    ChainMap,
    arc_decomposition,
    build_tilting_complex,
    chain_map_space,
    class_of,
    hom_K,
    hom_dim,
    identity_map,
    is_chain_map,
    is_null_homotopic,
    k0_matrix,
    minimal_kernel,
    null_homotopic_subspace,
    verify_tilting,
)

from homk_oracle import homk_dims


S5 = make_algebra(5, 4), (0, 1, 3)


# ---------------------------------------------------------------- arcs

def test_arc_decomposition_examples():
    A = arc_decomposition(make_algebra(5, 4), (0, 1, 3))
    assert [(a.J, a.u, a.v) for a in A.arcs] == [((2,), 1, 3)]
    A = arc_decomposition(make_algebra(3, 5), (2,))
    assert A.m == 1
    assert [(a.J, a.u, a.v) for a in A.arcs] == [((3, 4, 0, 1), 2, 2)]
    A = arc_decomposition(make_algebra(5, 6), (0, 3))
    assert sorted(a.J for a in A.arcs) == [(1, 2), (4, 5)]


@pytest.mark.parametrize("I0", [(), (0, 1, 2, 3), (0, 0), (4,)])
def test_arc_decomposition_rejects(I0):
    with pytest.raises(ValueError):
        arc_decomposition(make_algebra(5, 4), I0)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([3, 5, 7]), st.integers(2, 12), st.data())
def test_arcs_and_intervals_partition(p, r, data):
    if r % p == 0:
        return
    I0 = sorted(data.draw(st.sets(st.integers(0, r - 1), min_size=1, max_size=r - 1)))
    A = arc_decomposition(make_algebra(p, r), I0)
    covered = [t for a in A.arcs for t in a.J] + [w for iv in A.intervals for w in iv]
    assert sorted(covered) == list(range(r))
    for a in A.arcs:
        assert a.u in I0 and a.v in I0
        assert (a.J[0] - a.u) % r == 1 and (a.v - a.J[-1]) % r == 1


# ---------------------------------------------------------------- kernels and components

def test_minimal_kernel_examples():
    P, I0 = S5
    K = minimal_kernel(P, I0, 2)
    assert sorted(K.generators) == [(0, 1), (1, 0)]
    K = minimal_kernel(make_algebra(3, 8), (0,), 4)
    assert K.basis == () and K.generators == ()


def _kernel_oracle(p, r, I0, t):
    top_in = {(a, b) for a in range(p) for b in range(p) if (t - a + b) % r in I0}
    closure = {(a2, b2) for (a, b) in top_in for a2 in range(a, p) for b2 in range(b, p)}
    return closure


@pytest.mark.parametrize("p,r", [(3, 4), (3, 8), (5, 3), (5, 7), (7, 4), (7, 9)])
def test_minimal_kernel_basis_is_upward_closure(p, r):
    P = make_algebra(p, r)
    rng = np.random.default_rng(p * 100 + r)
    for _ in range(6):
        k = int(rng.integers(1, r))
        I0 = tuple(sorted(rng.choice(r, size=k, replace=False).tolist()))
        for t in set(range(r)) - set(I0):
            K = minimal_kernel(P, I0, t)
            assert set(K.basis) == _kernel_oracle(p, r, I0, t)


def test_worked_example_components():
    P, I0 = S5
    T = build_tilting_complex(P, I0)
    assert [c.describe() for c in T] == [
        "T0: P0 (stalk, degree 0)",
        "T1: P1 (stalk, degree 0)",
        "T2: P1(+)P3 --(x;y)--> P2",
        "T3: P3 (stalk, degree 0)",
    ]
    d = T[2].d
    assert d[0, 0, 1, 0] == 1 and d[1, 0, 0, 1] == 1
    assert np.count_nonzero(d) == 2


def test_gap_component_is_degree_one_stalk():
    T = build_tilting_complex(make_algebra(3, 8), (0,))
    assert T[4].kind == "degree-one stalk" and T[4].deg1 == (4,)


@pytest.mark.parametrize("p,r", [(3, 8), (5, 7), (5, 4), (7, 3)])
def test_differential_is_minimal(p, r):
    P = make_algebra(p, r)
    for k in range(1, r):
        I0 = tuple(range(k))
        for c in build_tilting_complex(P, I0):
            if c.kind == "two-term":
                # no entry carries a unit: the constant coefficient is zero
                assert not np.any(c.d[:, :, 0, 0])


# ---------------------------------------------------------------- chain maps and Hom_K

def test_zero_and_identity():
    P, I0 = S5
    T = build_tilting_complex(P, I0)
    for c in T:
        z = ChainMap(c.complex, c.complex, {})
        assert is_chain_map(z) and is_null_homotopic(z)
        e = identity_map(c.complex)
        assert is_chain_map(e) and not is_null_homotopic(e)
        assert hom_dim(c, c) >= 1


def test_not_a_chain_map_is_rejected():
    P, I0 = S5
    T = build_tilting_complex(P, I0)
    m0 = np.zeros((1, 2, 5, 5), dtype=np.int64)
    m0[0, 0, 0, 0] = 1  # P1 -> u-slot identity, then x != 0
    f = ChainMap(T[1].complex, T[2].complex, {0: m0})
    assert not is_chain_map(f)
    with pytest.raises(ValueError):
        is_null_homotopic(f)


def test_stalk_to_stalk_is_hom_basis():
    from elemtilt.algebra import hom_basis

    P, I0 = S5
    T = build_tilting_complex(P, I0)
    for i in I0:
        for k in I0:
            h = hom_K(T[i], T[k])
            assert h.raw_dim == hom_basis(P, i, k).dim and h.null_dim == 0


def test_worked_example_hom_table():
    P, I0 = S5
    T = build_tilting_complex(P, I0)
    table = [[hom_dim(a, b) for b in T] for a in T]
    assert table == [[7, 6, 6, 6], [6, 7, 7, 6], [6, 7, 9, 7], [6, 6, 7, 7]]
    h = hom_K(T[2], T[2])
    assert (h.raw_dim, h.null_dim, h.dim) == (21, 12, 9)


def test_spaces_are_consistent():
    P, I0 = S5
    T = build_tilting_complex(P, I0)
    for a in T:
        for b in T:
            Z = chain_map_space(a, b)
            B = null_homotopic_subspace(a, b)
            h = hom_K(a, b)
            assert len(Z) == h.raw_dim and len(B) == h.null_dim
            assert all(is_chain_map(f) for f in Z)
            assert all(is_null_homotopic(f) for f in B)
            for f in h.reps:
                assert not is_null_homotopic(f)
            if h.dim:
                C = np.array([class_of(f) for f in h.reps])
                assert np.array_equal(C, np.eye(h.dim, dtype=np.int64))


CONFIGS = [
    (5, 4, (0, 1, 3)), (3, 8, (0,)), (5, 7, (0,)), (3, 5, (0, 2)), (7, 4, (1,)),
    (5, 3, (0,)), (5, 6, (0, 3)), (3, 7, (0, 1, 4)), (7, 3, (0, 1)),
]


@pytest.mark.parametrize("p,r,I0", CONFIGS)
def test_homk_against_independent_oracle(p, r, I0):
    P = make_algebra(p, r)
    T = build_tilting_complex(P, I0)
    for a in T:
        for b in T:
            h = hom_K(a, b)
            assert (h.raw_dim, h.null_dim, h.dim) == homk_dims(a.complex, b.complex, seed=a.index * r + b.index)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(CONFIGS), st.integers(0, 10**6))
def test_homk_independent_of_variable_order(cfg, seed):
    p, r, I0 = cfg
    P = make_algebra(p, r)
    T = build_tilting_complex(P, I0)
    rng = np.random.default_rng(seed)
    a, b = T[int(rng.integers(r))], T[int(rng.integers(r))]
    assert homk_dims(a.complex, b.complex, seed=seed) == homk_dims(a.complex, b.complex, seed=seed + 1)
    assert homk_dims(a.complex, b.complex, seed=seed)[2] == hom_dim(a, b)


@pytest.mark.parametrize("p,r,I0", CONFIGS)
def test_shifts_vanish_against_oracle(p, r, I0):
    P = make_algebra(p, r)
    T = build_tilting_complex(P, I0)
    for a in T:
        for b in T:
            for n in (1, -1):
                assert homk_dims(a.complex, b.complex.shift(n))[2] == 0


@pytest.mark.parametrize("p,r,I0", CONFIGS)
def test_duality_x_y_swap(p, r, I0):
    """x <-> y with t -> -t sends T(I0) to T(-I0); all Hom_K dims are preserved."""
    P = make_algebra(p, r)
    T = build_tilting_complex(P, I0)
    Td = build_tilting_complex(P, tuple(sorted((-i) % r for i in I0)))
    for a in range(r):
        for b in range(r):
            assert hom_dim(T[a], T[b]) == hom_dim(Td[(-a) % r], Td[(-b) % r])
            da, db = Td[(-a) % r], Td[(-b) % r]
            assert sorted((-i) % r for i in T[a].deg0) == sorted(da.deg0)


def test_verify_tilting_worked_example():
    P, I0 = S5
    rep = verify_tilting(build_tilting_complex(P, I0))
    assert rep.passed and rep.shifts_vanish and abs(rep.k0_det) == 1
    assert "necessary" in rep.note
    M = k0_matrix(build_tilting_complex(P, I0))
    assert M.tolist() == [[1, 0, 0, 0], [0, 1, 0, 0], [0, 1, -1, 1], [0, 0, 0, 1]]


@pytest.mark.parametrize("p,r", [(3, 4), (5, 3), (5, 6), (7, 8)])
def test_complement_of_point_is_tilting(p, r):
    P = make_algebra(p, r)
    for w in range(r):
        I0 = tuple(i for i in range(r) if i != w)
        assert verify_tilting(build_tilting_complex(P, I0)).passed

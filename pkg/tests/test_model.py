import pytest

from oracles import naive_rank_mod2, persym_matrix
from persym.gf2 import rank
from persym.model import FamilyShape, ParamTuple, build_matrix, param_from_index, param_to_index


def test_single_block_full_rank():
    m = build_matrix(ParamTuple.from_blocks((1, 0, 1)))
    assert m.to_strings() == ["10", "01"]
    assert rank(m) == 2


def test_zero_block_plus_constant_block():
    m = build_matrix(ParamTuple.from_blocks((0, 0, 0), (1, 1, 1)))
    assert m.to_strings() == ["00", "00", "11", "11"]
    assert rank(m) == 1


def test_single_column():
    for idx in range(2**10):
        p = param_from_index(5, 1, idx)
        m = build_matrix(p)
        assert (m.rows, m.cols) == (10, 1)
        assert (rank(m) == 0) == (idx == 0)


def test_index_extremes():
    assert param_from_index(3, 2, 0).alpha == ((0, 0, 0),) * 3
    assert param_from_index(3, 2, 2**9 - 1).alpha == ((1, 1, 1),) * 3


def test_index_out_of_range():
    with pytest.raises(ValueError):
        param_from_index(2, 2, 2**6)
    with pytest.raises(ValueError):
        param_from_index(2, 2, -1)


@pytest.mark.parametrize("n,k", [(1, 11), (2, 5), (3, 3), (4, 2), (6, 1)])
def test_round_trip_sweep(n, k):
    assert n * (k + 1) == 12
    for x in range(2**12):
        assert param_to_index(param_from_index(n, k, x)) == x


def test_index_layout_is_block_major():
    # bit j*(k+1)+i of the index is alpha[j][i]
    p = param_from_index(2, 3, 1 << (1 * 4 + 2))
    assert p.alpha == ((0, 0, 0, 0), (0, 0, 1, 0))


def test_rejects_too_many_columns():
    p = ParamTuple(1, 65, ((0,) * 66,))
    with pytest.raises(ValueError):
        build_matrix(p)


def test_param_tuple_validation():
    with pytest.raises(ValueError):
        ParamTuple(2, 2, ((0, 0, 0),))
    with pytest.raises(ValueError):
        ParamTuple(1, 2, ((0, 2, 0),))


@pytest.mark.parametrize("n,k", [(1, 4), (2, 3), (3, 2), (2, 5)])
def test_block_hankel_property(n, k):
    for idx in range(2 ** (n * (k + 1))):
        m = build_matrix(param_from_index(n, k, idx))
        for j in range(n):
            for c in range(k - 1):
                assert m.entry(2 * j, c + 1) == m.entry(2 * j + 1, c)


def test_matches_entrywise_layout():
    n, k = 2, 4
    for idx in range(2 ** (n * (k + 1))):
        p = param_from_index(n, k, idx)
        expected = persym_matrix([list(s) for s in p.alpha], k)
        got = build_matrix(p)
        assert [[got.entry(r, c) for c in range(k)] for r in range(2 * n)] == expected


def test_build_matrix_is_injective():
    seen = {build_matrix(param_from_index(2, 3, idx)).row_bits for idx in range(2**8)}
    assert len(seen) == 2**8


@pytest.mark.parametrize("n,k", [(1, 1), (1, 5), (2, 2), (2, 4), (3, 1), (3, 3)])
def test_rank_bounded_by_shape(n, k):
    shape = FamilyShape(n, k)
    for idx in range(shape.size):
        m = build_matrix(param_from_index(n, k, idx))
        r = rank(m)
        assert r <= shape.max_rank
        if idx % 7 == 0:
            assert r == naive_rank_mod2([[m.entry(a, b) for b in range(k)] for a in range(m.rows)])


def test_family_shape():
    s = FamilyShape(5, 3)
    assert (s.rows, s.max_rank, s.param_bits, s.size) == (10, 3, 20, 2**20)
    assert FamilyShape(2, 9).max_rank == 4
    with pytest.raises(ValueError):
        FamilyShape(0, 1)

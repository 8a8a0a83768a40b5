import pytest
from hypothesis import given

from partfreq.partitions import enumerate_partitions, is_distinct_parts, is_odd_parts, partition_count
from partfreq.pfm import (
    OrbitIntegrityError,
    PartFrequencyMatrices,
    antidiagonal_words,
    cyclic_period,
    from_partition,
    glaisher,
    glaisher_transpose,
    orbit,
    orbit_size,
    orbit_size_by_iteration,
    orbit_table,
    orbit_weight_decomposition,
    rotate,
    rotate_partition,
    split_part,
    to_partition,
)

from conftest import moduli_st, partitions_st

EXAMPLE = (20, 5, 5, 4, 2, 2, 1, 1, 1, 1, 1)


def rows(M, j):
    """Dense rows of M_j as a dict row -> tuple, padded to width 3."""
    out = {}
    for (k, l), d in M.matrix(j).items():
        row = list(out.get(k, (0, 0, 0)))
        row[l] = d
        out[k] = tuple(row)
    return out


def test_split_part():
    assert split_part(20, 2) == (5, 2)
    assert split_part(15, 5) == (3, 1)
    assert split_part(7, 3) == (7, 0)


def test_introduction_example_matrices():
    M = from_partition(EXAMPLE, 2)
    assert set(M.matrices) == {1, 5}
    assert rows(M, 1) == {0: (1, 0, 1), 1: (0, 1, 0), 2: (1, 0, 0)}
    assert rows(M, 5) == {0: (0, 1, 0), 2: (1, 0, 0)}
    assert M.weight == 43
    assert M.dense(5).tolist() == [[0, 1], [0, 0], [1, 0]]


def test_ady_example_matrices():
    M = from_partition((15, 15, 15, 10, 10, 8, 6), 2)
    assert M.matrices == {
        1: {(3, 0): 1},
        3: {(1, 0): 1},
        5: {(1, 1): 1},
        15: {(0, 0): 1, (0, 1): 1},
    }


def test_empty_family():
    for m in (2, 3, 7):
        M = from_partition((), m)
        assert M.matrices == {}
        assert to_partition(M) == ()


def test_to_partition_examples():
    assert to_partition(from_partition(EXAMPLE, 2)) == EXAMPLE
    assert to_partition(PartFrequencyMatrices(2, {5: {(1, 1): 1}})) == (10, 10)


def test_matrix_validation():
    with pytest.raises(ValueError):
        PartFrequencyMatrices(2, {2: {(0, 0): 1}})
    with pytest.raises(ValueError):
        PartFrequencyMatrices(3, {1: {(0, 0): 3}})
    with pytest.raises(ValueError):
        PartFrequencyMatrices(1)
    # explicit zeros are ignored for equality
    assert PartFrequencyMatrices(2, {1: {(0, 0): 0}}) == PartFrequencyMatrices(2)


@given(partitions_st, moduli_st)
def test_roundtrip_property(lam, m):
    assert to_partition(from_partition(lam, m)) == lam


def test_glaisher_examples():
    assert glaisher((3, 3, 3), 2) == (6, 3)
    assert glaisher((1, 1, 1, 1), 2) == (4,)
    # upper-left fillings are fixed
    assert glaisher((5, 3, 1), 2) == (5, 3, 1)


@given(partitions_st, moduli_st)
def test_glaisher_involution_and_weight(lam, m):
    M = from_partition(lam, m)
    T = glaisher_transpose(M)
    assert glaisher_transpose(T) == M
    assert T.weight == M.weight == sum(lam)


def test_symmetric_family_is_fixed():
    M = PartFrequencyMatrices(3, {1: {(0, 1): 2, (1, 0): 2, (1, 1): 1}, 2: {(0, 0): 1}})
    assert glaisher_transpose(M) == M


def test_restricted_glaisher_is_odd_distinct_bijection():
    for n in range(41):
        odd = [lam for lam in enumerate_partitions(n) if is_odd_parts(lam)]
        images = {glaisher(lam, 2) for lam in odd}
        assert len(images) == len(odd)
        assert all(is_distinct_parts(mu) for mu in images)
        assert images == {lam for lam in enumerate_partitions(n) if is_distinct_parts(lam)}


def test_rotation_reproduces_six_images():
    # the six M_5 states shown for the introduction example, as sparse cells
    shown = [
        {(0, 1): 1, (2, 0): 1},
        {(0, 2): 1, (1, 0): 1},
        {(0, 1): 1, (1, 1): 1},
        {(1, 0): 1, (2, 0): 1},
        {(0, 1): 1, (0, 2): 1},
        {(1, 0): 1, (1, 1): 1},
    ]
    M = from_partition(EXAMPLE, 2)
    M1 = M.matrix(1)
    for state in shown:
        assert M.matrix(5) == state
        assert M.matrix(1) == M1
        M = rotate(M)
    assert M == from_partition(EXAMPLE, 2)


def test_rotate_fixed_cases():
    full = PartFrequencyMatrices(3, {2: {(0, 2): 1, (1, 1): 1, (2, 0): 1}})
    assert rotate(full) == full
    assert rotate_partition((1,), 2, steps=7) == (1,)


def test_column_zero_orbit_passes_through_row_zero():
    # parts appearing fewer than m times sit in column 0; some power of the
    # rotation moves them all into row 0, which is the Glaisher image
    for n in range(1, 16):
        for lam in enumerate_partitions(n):
            M = from_partition(lam, 2)
            if any(l for _, _, l, _ in M.cells()):
                continue
            cycle = orbit(lam, 2)
            assert glaisher(lam, 2) in cycle


def test_orbit_sizes():
    assert orbit_size(EXAMPLE, 2) == 6
    assert orbit_size_by_iteration(EXAMPLE, 2) == 6
    assert len(orbit(EXAMPLE, 2)) == 6
    assert orbit_size((), 5) == 1
    assert orbit_size(from_partition(EXAMPLE, 2), 2) == 6


def test_upper_left_fillings_have_orbit_size_one():
    for lam in [(4, 3, 1), (7, 7, 4, 2, 1), (9, 8, 6, 6, 6, 6)]:
        assert orbit_size(lam, 5) == 1


def test_antidiagonal_words_and_periods():
    words = antidiagonal_words(from_partition(EXAMPLE, 2))
    assert words[(5, 1)] == (1, 0)
    assert words[(5, 2)] == (0, 0, 1)
    assert words[(1, 2)] == (1, 1, 1)
    assert cyclic_period((1, 0, 1, 0)) == 2
    assert cyclic_period((1, 1, 1)) == 1
    assert cyclic_period((0, 0, 1)) == 3
    assert cyclic_period((2,)) == 1


@given(partitions_st, moduli_st)
def test_rotation_preserves_weight(lam, m):
    M = from_partition(lam, m)
    R = rotate(M)
    assert R.weight == M.weight
    assert rotate(M, orbit_size(lam, m)) == M


def test_orbit_size_lcm_matches_iteration():
    for n in range(26):
        for lam in enumerate_partitions(n):
            for m in (2, 3, 5):
                assert orbit_size(lam, m) == orbit_size_by_iteration(lam, m), (lam, m)


def test_orbit_weight_decomposition():
    # the direct definition gives 42 for the introduction example
    assert orbit_weight_decomposition(EXAMPLE, 2) == (1, 42)
    assert orbit_weight_decomposition((5, 3, 1), 2) == (9, 0)
    assert orbit_weight_decomposition((2, 2), 2) == (0, 4)
    for lam in enumerate_partitions(20):
        for m in (2, 3):
            corner, outer = orbit_weight_decomposition(lam, m)
            assert corner + outer == 20 and outer % m == 0


def test_orbit_table_small_rows():
    t = orbit_table(4, 5)
    assert dict(t.rows) == {1: (5, 5)}
    t = orbit_table(9, 5)
    assert sum(k * r.o_count for k, r in t.rows.items()) == 30 == partition_count(9)
    assert t.o_count(2) == 5 and t.p_count(2) == 10
    assert orbit_table(0, 2).rows == {1: (1, 1)}


def test_orbit_table_mod5_rows(mod5_table):
    for n, expected in mod5_table.items():
        t = orbit_table(n, 5)
        assert tuple(t.o_count(k) for k in (1, 2, 3, 6)) == expected
        assert set(t.rows) <= {1, 2, 3, 6}


def test_orbit_table_integrity():
    for m in (2, 3, 5):
        for n in range(22):
            t = orbit_table(n, m)
            assert t.total == partition_count(n)
            for k, r in t.rows.items():
                assert r.p_count == k * r.o_count


def test_orbit_table_worker_count_does_not_matter():
    assert orbit_table(22, 3, workers=2).rows == orbit_table(22, 3, workers=1).rows


def test_orbit_integrity_error_is_runtime_error():
    assert issubclass(OrbitIntegrityError, RuntimeError)


def test_theorem_one_and_two_desk_scale():
    for m, B, top in ((5, 4, 49), (7, 5, 47), (11, 6, 50)):
        for n in range(B, top + 1, m):
            t = orbit_table(n, m)
            for r in t.rows.values():
                assert r.p_count % m == 0 and r.o_count % m == 0, (n, m)

"""Part-frequency matrices, Glaisher transposition and antidiagonal rotation.

For a modulus ``m`` every part size factors uniquely as ``N = j * m**k`` with
``m`` not dividing ``j``.  The multiplicity of ``N`` is written in base ``m``
and its digits fill row ``k`` of the matrix ``M_j`` (column ``l`` holds the
digit of ``m**l``).  A digit ``a`` at cell ``(k, l)`` of ``M_j`` therefore
stands for ``a * j * m**(k + l)`` units of weight, and any rearrangement that
keeps the antidiagonal sums ``k + l`` fixed keeps the weight.

Rows and columns are 0-based.  Matrices are sparse: only nonzero digits are
stored.

>>> M = from_partition((20, 5, 5, 4, 2, 2, 1, 1, 1, 1, 1), 2)
>>> M.matrix(5)
{(0, 1): 1, (2, 0): 1}
>>> orbit_size((20, 5, 5, 4, 2, 2, 1, 1, 1, 1, 1), 2)
6
"""

from __future__ import annotations

import os
from collections import Counter
from collections.abc import Iterable, Mapping
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from math import lcm
from typing import NamedTuple

import numpy as np

from .partitions import Partition, enumerate_partitions, from_multiplicities

__all__ = [
    "PartFrequencyMatrices",
    "OrbitCount",
    "OrbitTable",
    "OrbitIntegrityError",
    "split_part",
    "from_partition",
    "to_partition",
    "glaisher_transpose",
    "glaisher",
    "rotate",
    "rotate_partition",
    "antidiagonal_words",
    "cyclic_period",
    "orbit_size",
    "orbit_size_by_iteration",
    "orbit",
    "orbit_table",
    "orbit_weight_decomposition",
]

Cell = tuple[int, int]


def split_part(N: int, m: int) -> tuple[int, int]:
    """Return ``(j, k)`` with ``N == j * m**k`` and ``j % m != 0``."""
    if N < 1:
        raise ValueError(f"part must be positive, got {N}")
    k = 0
    while N % m == 0:
        N //= m
        k += 1
    return N, k


def _digits(c: int, m: int) -> list[int]:
    out = []
    while c:
        c, d = divmod(c, m)
        out.append(d)
    return out


@dataclass(frozen=True, eq=False)
class PartFrequencyMatrices:
    """A modulus and a sparse family ``{j: {(k, l): digit}}``.

    Zero digits and empty matrices are dropped on construction, so equality
    is independent of how the family was built.
    """

    modulus: int
    matrices: Mapping[int, Mapping[Cell, int]] = field(default_factory=dict)

    def __post_init__(self):
        m = self.modulus
        if m < 2:
            raise ValueError(f"modulus must be >= 2, got {m}")
        clean = {}
        for j, mat in self.matrices.items():
            if j < 1 or j % m == 0:
                raise ValueError(f"matrix index {j} must be positive and not divisible by {m}")
            cells = {}
            for (k, l), d in mat.items():
                if k < 0 or l < 0:
                    raise ValueError(f"negative cell index {(k, l)} in M_{j}")
                if not 0 <= d < m:
                    raise ValueError(f"digit {d} at M_{j}{(k, l)} outside [0, {m - 1}]")
                if d:
                    cells[(k, l)] = d
            if cells:
                clean[j] = dict(sorted(cells.items()))
        object.__setattr__(self, "matrices", dict(sorted(clean.items())))

    def matrix(self, j: int) -> dict[Cell, int]:
        """Sparse view of ``M_j`` (empty dict when all zero)."""
        return dict(self.matrices.get(j, {}))

    def cells(self) -> Iterable[tuple[int, int, int, int]]:
        """Iterate ``(j, k, l, digit)`` over the nonzero digits."""
        for j, mat in self.matrices.items():
            for (k, l), d in mat.items():
                yield j, k, l, d

    @property
    def weight(self) -> int:
        m = self.modulus
        return sum(j * d * m ** (k + l) for j, k, l, d in self.cells())

    def dense(self, j: int, shape: tuple[int, int] | None = None) -> np.ndarray:
        """``M_j`` as a dense integer array, large enough for its support by default."""
        mat = self.matrices.get(j, {})
        if shape is None:
            rows = max((k for k, _ in mat), default=-1) + 1
            cols = max((l for _, l in mat), default=-1) + 1
            shape = (rows, cols)
        out = np.zeros(shape, dtype=np.int64)
        for (k, l), d in mat.items():
            out[k, l] = d
        return out

    def __eq__(self, other):
        if not isinstance(other, PartFrequencyMatrices):
            return NotImplemented
        return self.modulus == other.modulus and self.matrices == other.matrices

    def __hash__(self):
        return hash((self.modulus, frozenset(self.cells())))


def from_partition(parts: Iterable[int], m: int) -> PartFrequencyMatrices:
    """Build the part-frequency matrices of a partition for modulus ``m``."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    mats: dict[int, dict[Cell, int]] = {}
    for N, c in Counter(parts).items():
        j, k = split_part(N, m)
        row = mats.setdefault(j, {})
        for l, d in enumerate(_digits(c, m)):
            if d:
                row[(k, l)] = d
    return PartFrequencyMatrices(m, mats)


def to_partition(M: PartFrequencyMatrices) -> Partition:
    m = M.modulus
    mult: Counter = Counter()
    for j, k, l, d in M.cells():
        mult[j * m**k] += d * m**l
    return from_multiplicities(mult)


def glaisher_transpose(M: PartFrequencyMatrices) -> PartFrequencyMatrices:
    """Transpose every ``M_j``.  An involution that keeps the weight."""
    return PartFrequencyMatrices(
        M.modulus,
        {j: {(l, k): d for (k, l), d in mat.items()} for j, mat in M.matrices.items()},
    )


def glaisher(parts: Iterable[int], m: int) -> Partition:
    """Glaisher's map extended to all partitions (transpose the matrices)."""
    return to_partition(glaisher_transpose(from_partition(parts, m)))


def _rotate_cells(mat: Mapping[Cell, int]) -> dict[Cell, int]:
    out = {}
    for (k, l), d in mat.items():
        out[(k + 1, l - 1) if l else (0, k)] = d
    return out


def rotate(M: PartFrequencyMatrices, steps: int = 1) -> PartFrequencyMatrices:
    """Move every entry one place down-left along its antidiagonal.

    The entry in column 0 wraps to row 0 of the same antidiagonal.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    mats = M.matrices
    for _ in range(steps):
        mats = {j: _rotate_cells(mat) for j, mat in mats.items()}
    return PartFrequencyMatrices(M.modulus, mats)


def rotate_partition(parts: Iterable[int], m: int, steps: int = 1) -> Partition:
    return to_partition(rotate(from_partition(parts, m), steps))


def antidiagonal_words(M: PartFrequencyMatrices) -> dict[tuple[int, int], tuple[int, ...]]:
    """Map ``(j, d)`` to the digit word of antidiagonal ``d`` of ``M_j``.

    Position ``i`` of the word is cell ``(i, d - i)``, so the word is read
    from ``(0, d)`` down to ``(d, 0)`` and rotation is a cyclic shift by one.
    Only antidiagonals with a nonzero digit are listed.
    """
    words: dict[tuple[int, int], list[int]] = {}
    for j, k, l, d in M.cells():
        diag = k + l
        w = words.setdefault((j, diag), [0] * (diag + 1))
        w[k] = d
    return {key: tuple(w) for key, w in sorted(words.items())}


def cyclic_period(word) -> int:
    """Least ``t`` with ``word`` fixed by a cyclic shift of ``t`` places."""
    L = len(word)
    for t in range(1, L):
        if L % t == 0 and all(word[i] == word[i - t] for i in range(t, L)):
            return t
    return L


def _orbit_size_from_mult(mult: Mapping[int, int], m: int) -> int:
    # Works straight off the multiplicities; skips building the matrix object.
    words: dict[tuple[int, int], list[int]] = {}
    for N, c in mult.items():
        j, k = split_part(N, m)
        l = 0
        while c:
            c, dig = divmod(c, m)
            if dig:
                diag = k + l
                if diag:
                    w = words.get((j, diag))
                    if w is None:
                        w = words[(j, diag)] = [0] * (diag + 1)
                    w[k] = dig
            l += 1
    size = 1
    for w in words.values():
        size = lcm(size, cyclic_period(w))
    return size


def orbit_size(parts, m: int) -> int:
    """Orbit length of a partition under rotation: lcm of antidiagonal periods.

    Accepts a partition or a :class:`PartFrequencyMatrices`.
    """
    if isinstance(parts, PartFrequencyMatrices):
        size = 1
        for w in antidiagonal_words(parts).values():
            size = lcm(size, cyclic_period(w))
        return size
    return _orbit_size_from_mult(Counter(parts), m)


def orbit(parts, m: int) -> list[Partition]:
    """The full rotation cycle starting at ``parts``."""
    start = from_partition(parts, m)
    cycle = [to_partition(start)]
    cur = rotate(start)
    while cur != start:
        cycle.append(to_partition(cur))
        cur = rotate(cur)
    return cycle


def orbit_size_by_iteration(parts, m: int) -> int:
    """Orbit length found by applying the rotation until it returns."""
    start = from_partition(parts, m)
    cur = rotate(start)
    t = 1
    while cur != start:
        cur = rotate(cur)
        t += 1
    return t


def orbit_weight_decomposition(parts, m: int) -> tuple[int, int]:
    """Split the weight into the (0, 0) corner part and the rest.

    Every cell off the corner carries a factor ``m**(k + l)`` with
    ``k + l >= 1``, so the outer weight is always a multiple of ``m``.
    """
    M = from_partition(parts, m)
    corner = sum(j * mat.get((0, 0), 0) for j, mat in M.matrices.items())
    outer = M.weight - corner
    assert outer % m == 0, (parts, m, outer)
    return corner, outer


# -- orbit statistics ---------------------------------------------------------


class OrbitCount(NamedTuple):
    p_count: int
    o_count: int


class OrbitIntegrityError(RuntimeError):
    """Partition counts in an orbit class are not a multiple of the orbit size."""


@dataclass(frozen=True)
class OrbitTable:
    """Orbit-size statistics for all partitions of ``n`` under rotation mod ``m``.

    ``rows[k]`` gives the number of partitions lying in orbits of size ``k``
    and the number of such orbits.  Only occurring sizes are present.
    """

    n: int
    m: int
    rows: Mapping[int, OrbitCount]

    def p_count(self, k: int) -> int:
        return self.rows[k].p_count if k in self.rows else 0

    def o_count(self, k: int) -> int:
        return self.rows[k].o_count if k in self.rows else 0

    @property
    def total(self) -> int:
        return sum(r.p_count for r in self.rows.values())


def _env_workers() -> int:
    try:
        return max(1, int(os.environ.get("PARTFREQ_THREADS", "1")))
    except ValueError:
        return 1


def _size_histogram(n: int, m: int, first_parts: Iterable[int]) -> Counter:
    hist: Counter = Counter()
    for a in first_parts:
        for rest in enumerate_partitions(n - a, a):
            parts = (a,) + rest
            hist[_orbit_size_from_mult(Counter(parts), m)] += 1
    return hist


@lru_cache(maxsize=256)
def _orbit_histogram(n: int, m: int, workers: int) -> tuple[tuple[int, int], ...]:
    if n == 0:
        return ((1, 1),)
    first_parts = range(n, 0, -1)
    if workers <= 1:
        hist = _size_histogram(n, m, first_parts)
    else:
        # strided split keeps the (uneven) per-first-part work balanced
        chunks = [list(first_parts)[w::workers] for w in range(workers)]
        hist = Counter()
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_size_histogram, [n] * workers, [m] * workers, chunks):
                hist.update(part)
    return tuple(sorted(hist.items()))


def orbit_table(n: int, m: int, workers: int | None = None) -> OrbitTable:
    """Count partitions and orbits of ``n`` by orbit size.

    ``workers`` defaults to the ``PARTFREQ_THREADS`` environment variable
    (1 if unset).  The result does not depend on the worker count.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if workers is None:
        workers = _env_workers()
    rows = {}
    for k, p in _orbit_histogram(n, m, workers):
        o, rem = divmod(p, k)
        if rem:
            raise OrbitIntegrityError(f"n={n}, m={m}: {p} partitions in orbits of size {k}")
        rows[k] = OrbitCount(p, o)
    return OrbitTable(n, m, rows)

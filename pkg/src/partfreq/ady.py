"""A Glaisher-type bijection generalizing an Andrews-Dixit-Yee partition identity.

Class A (``is_ady_class``): the smallest part appears fewer than ``m`` times
and every part divisible by ``m`` is at most ``m`` times the smallest part.
Class B: every part appears fewer than ``m`` times.  Both are nonempty
partitions of the same ``n``.

Write the smallest part as ``s = j * m**k``.  In each matrix ``M_i`` one row
is *marked*: the row ``k1`` with ``s < i * m**k1 < m * s`` when ``i < s``,
row 0 when ``i > s``, and row ``k + 1`` for ``i == j``.  The map transposes
the block of ``M_i`` at and below the marked row, i.e. swaps cell
``(k1 + r, c)`` with ``(k1 + c, r)``.  That is an involution on matrices, and
the smallest part is never touched, so the same operation inverts itself.

>>> ady_forward((15, 15, 15, 10, 10, 8, 6), 2)
Partition((30, 20, 15, 8, 6))
>>> ady_inverse((30, 20, 15, 8, 6), 2)
Partition((15, 15, 15, 10, 10, 8, 6))
"""

from __future__ import annotations

from dataclasses import dataclass

from .identities import Mismatch, Verdict
from .partitions import (
    Partition,
    enumerate_partitions,
    is_ady_class,
    is_parts_appear_fewer_than,
)
from .pfm import PartFrequencyMatrices, from_partition, split_part, to_partition

__all__ = [
    "NotInClassError",
    "MarkedMatrices",
    "marked_row",
    "mark",
    "ady_forward",
    "ady_inverse",
    "ady_counts",
    "is_ady_image_class",
    "check_ady",
]


class NotInClassError(ValueError):
    """Input partition is outside the domain of the map."""


def is_ady_image_class(parts, m: int) -> bool:
    """Nonempty, all parts appearing fewer than ``m`` times."""
    return bool(parts) and is_parts_appear_fewer_than(parts, m)


def marked_row(i: int, smallest: int, m: int) -> int:
    """Marked row of ``M_i`` for a partition with smallest part ``smallest``."""
    j, k = split_part(smallest, m)
    if i == j:
        return k + 1
    if i > smallest:
        return 0
    k1 = 0
    while i * m**k1 <= smallest:
        k1 += 1
    assert i * m**k1 < m * smallest
    return k1


@dataclass(frozen=True)
class MarkedMatrices:
    matrices: PartFrequencyMatrices
    smallest: int
    marked: dict[int, int]


def mark(parts, m: int) -> MarkedMatrices:
    if not parts:
        raise NotInClassError("the empty partition has no smallest part")
    s = min(parts)
    M = from_partition(parts, m)
    j, _ = split_part(s, m)
    indices = set(M.matrices) | {j}
    return MarkedMatrices(M, s, {i: marked_row(i, s, m) for i in sorted(indices)})


def _transpose_below_marks(mm: MarkedMatrices) -> PartFrequencyMatrices:
    M = mm.matrices
    j, k = split_part(mm.smallest, M.modulus)
    out = {}
    for i, mat in M.matrices.items():
        k1 = mm.marked[i]
        new = {}
        for (r, c), d in mat.items():
            if r < k1:
                # only the smallest part itself may sit above a marked row
                assert i == j and r == k and c == 0, (i, r, c)
                new[(r, c)] = d
            else:
                new[(k1 + c, r - k1)] = d
        out[i] = new
    return PartFrequencyMatrices(M.modulus, out)


def ady_forward(parts, m: int) -> Partition:
    """Class A to class B."""
    parts = Partition.sorted(parts)
    if not is_ady_class(parts, m):
        raise NotInClassError(f"{tuple(parts)} is not in class A for m={m}")
    return to_partition(_transpose_below_marks(mark(parts, m)))


def ady_inverse(parts, m: int) -> Partition:
    """Class B to class A."""
    parts = Partition.sorted(parts)
    if not is_ady_image_class(parts, m):
        raise NotInClassError(f"{tuple(parts)} is not in class B for m={m}")
    return to_partition(_transpose_below_marks(mark(parts, m)))


def ady_counts(n: int, m: int) -> tuple[int, int]:
    """``(|A|, |B|)`` for partitions of ``n`` by enumeration."""
    if n < 1:
        raise ValueError("n must be positive")
    a = b = 0
    for lam in enumerate_partitions(n):
        a += is_ady_class(lam, m)
        b += is_ady_image_class(lam, m)
    return a, b


def check_ady(m: int, n_max: int) -> Verdict:
    """Exhaustive bijection check for ``1 <= n <= n_max``."""
    if m < 2:
        raise ValueError("m must be >= 2")
    v = Verdict("ady", {"m": m, "nmax": n_max}, n_max, column_start=1)
    size_a, size_b = [], []
    bad = {label: [] for label in (
        "forward_lands_in_B", "inverse_lands_in_A", "roundtrip_A", "roundtrip_B",
        "weight_preserved", "smallest_part_preserved",
    )}
    for n in range(1, n_max + 1):
        a = b = 0
        for lam in enumerate_partitions(n):
            if is_ady_class(lam, m):
                a += 1
                mu = ady_forward(lam, m)
                if not is_ady_image_class(mu, m):
                    bad["forward_lands_in_B"].append(_miss(n, lam, mu))
                elif ady_inverse(mu, m) != lam:
                    bad["roundtrip_A"].append(_miss(n, lam, ady_inverse(mu, m)))
                if sum(mu) != n:
                    bad["weight_preserved"].append(_miss(n, lam, mu))
                if mu[-1] != lam[-1]:
                    bad["smallest_part_preserved"].append(_miss(n, lam, mu))
            if is_ady_image_class(lam, m):
                b += 1
                nu = ady_inverse(lam, m)
                if not is_ady_class(nu, m):
                    bad["inverse_lands_in_A"].append(_miss(n, lam, nu))
                elif ady_forward(nu, m) != lam:
                    bad["roundtrip_B"].append(_miss(n, lam, ady_forward(nu, m)))
        size_a.append(a)
        size_b.append(b)
    v.columns = {"class_A": size_a, "class_B": size_b}
    v.compare("class_sizes", size_a, size_b, start=1)
    v.comparisons.update(bad)
    return v


def _miss(n, lam, mu):
    return Mismatch(n, str(lam), str(mu))

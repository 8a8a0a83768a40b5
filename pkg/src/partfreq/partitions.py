"""Integer partitions: representation, enumeration, counting and class predicates.

A :class:`Partition` is an immutable, nonincreasing tuple of positive
integers.  Enumeration runs in lexicographically decreasing order, so
``enumerate_partitions(4)`` yields ``(4), (3, 1), (2, 2), (2, 1, 1),
(1, 1, 1, 1)``.  :func:`partition_count` uses Euler's pentagonal recurrence
and never touches the enumerator, so each can be used to check the other.
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable, Iterator, Mapping

__all__ = [
    "Partition",
    "enumerate_partitions",
    "weight",
    "partition_count",
    "partition_counts",
    "restricted_counts",
    "multiplicities",
    "from_multiplicities",
    "is_odd_parts",
    "is_distinct_parts",
    "is_parts_not_div_by",
    "is_parts_appear_fewer_than",
    "is_upper_left_filling",
    "is_ady_class",
]


class Partition(tuple):
    """A nonincreasing tuple of positive integers.

    >>> Partition((3, 1, 1)).weight
    5
    >>> Partition([1, 3])
    Traceback (most recent call last):
    ...
    ValueError: parts must be nonincreasing: [1, 3]
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        for a in parts:
            if not isinstance(a, int) or isinstance(a, bool) or a < 1:
                raise ValueError(f"parts must be positive integers: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be nonincreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def _trusted(cls, parts) -> Partition:
        # Skips validation; callers guarantee the invariants.
        return tuple.__new__(cls, parts)

    @classmethod
    def sorted(cls, parts: Iterable[int]) -> Partition:
        """Build a partition from parts in any order."""
        return cls(sorted(parts, reverse=True))

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def smallest(self) -> int | None:
        return self[-1] if self else None

    def multiplicities(self) -> dict[int, int]:
        return multiplicities(self)

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return ",".join(map(str, self))


def weight(parts: Iterable[int]) -> int:
    """Sum of the parts."""
    return sum(parts)


def multiplicities(parts: Iterable[int]) -> dict[int, int]:
    """Map each part size to its multiplicity, ordered by decreasing part."""
    counts = Counter(parts)
    return {a: counts[a] for a in sorted(counts, reverse=True)}


def from_multiplicities(mult: Mapping[int, int]) -> Partition:
    """Inverse of :func:`multiplicities`.  Zero multiplicities are dropped."""
    parts = []
    for a in sorted(mult, reverse=True):
        c = mult[a]
        if c < 0:
            raise ValueError(f"negative multiplicity {c} for part {a}")
        if c and a < 1:
            raise ValueError(f"part sizes must be positive, got {a}")
        parts.extend([a] * c)
    return Partition._trusted(parts)


def enumerate_partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in lexicographically decreasing order.

    With ``max_part`` only partitions whose parts are all ``<= max_part`` are
    produced (same order).  Uses the Zoghbi-Stojmenovic ZS1 successor rule.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition._trusted(())
        return
    top = n if max_part is None else min(max_part, n)
    if top < 1:
        return
    # x[1..m] holds the current partition, x[h] is its last part > 1;
    # every slot past h stays 1.
    q, r = divmod(n, top)
    x = [0] + [top] * q + [1] * n
    m = q
    if r:
        m += 1
        x[m] = r
    h = q if top > 1 else 0
    if r > 1:
        h = m
    yield Partition._trusted(x[1 : m + 1])
    while h > 0:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                x[m] = t
                if t > 1:
                    h += 1
        yield Partition._trusted(x[1 : m + 1])


_COUNTS = [1]


def partition_counts(n: int) -> list[int]:
    """``[p(0), ..., p(n)]`` by Euler's pentagonal number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    p = _COUNTS
    for k in range(len(p), n + 1):
        total = 0
        i = 1
        while True:
            g1 = i * (3 * i - 1) // 2
            if g1 > k:
                break
            sign = 1 if i % 2 else -1
            total += sign * p[k - g1]
            g2 = g1 + i
            if g2 <= k:
                total += sign * p[k - g2]
            i += 1
        p.append(total)
    return p[: n + 1]


def partition_count(n: int) -> int:
    """The number of partitions p(n)."""
    return partition_counts(n)[n]


def restricted_counts(N: int, part_ok=None, max_mult: int | None = None) -> list[int]:
    """Count partitions of ``0..N`` with allowed parts and capped multiplicity.

    ``part_ok(a)`` selects the allowed part sizes (all by default) and every
    part may appear at most ``max_mult`` times (unbounded by default).  This
    is a direct dynamic program over part sizes, used where enumeration is
    too slow.
    """
    counts = [1] + [0] * N
    for a in range(1, N + 1):
        if part_ok is not None and not part_ok(a):
            continue
        if max_mult is None:
            for n in range(a, N + 1):
                counts[n] += counts[n - a]
            continue
        span = (max_mult + 1) * a
        new = counts[:]
        # sliding window: new[n] = sum_{c=0..max_mult} counts[n - c*a]
        for n in range(a, N + 1):
            new[n] = new[n - a] + counts[n]
            if n >= span:
                new[n] -= counts[n - span]
        counts = new
    return counts


# -- class predicates -------------------------------------------------------


def is_odd_parts(parts) -> bool:
    return all(a % 2 for a in parts)


def is_distinct_parts(parts) -> bool:
    return all(parts[i] != parts[i + 1] for i in range(len(parts) - 1))


def is_parts_not_div_by(parts, m: int) -> bool:
    return all(a % m for a in parts)


def is_parts_appear_fewer_than(parts, m: int) -> bool:
    # parts are sorted, so a run of length m shows up as parts[i] == parts[i+m-1]
    return all(parts[i] != parts[i + m - 1] for i in range(len(parts) - m + 1))


def is_upper_left_filling(parts, m: int) -> bool:
    """Parts not divisible by ``m``, each appearing fewer than ``m`` times.

    These are exactly the partitions whose part-frequency matrices are
    zero away from the (0, 0) corner, i.e. the fixed points of Glaisher's map.
    """
    return is_parts_not_div_by(parts, m) and is_parts_appear_fewer_than(parts, m)


def is_ady_class(parts, m: int) -> bool:
    """Nonempty; smallest part appears fewer than ``m`` times; every part
    divisible by ``m`` is at most ``m`` times the smallest part."""
    if not parts:
        return False
    s = parts[-1]
    if len(parts) >= m and parts[-m] == s:
        return False
    bound = m * s
    return all(a <= bound for a in parts if a % m == 0)

"""Executable identity and congruence checks.

Every check builds one side by series expansion and the other by brute-force
enumeration of partitions, then compares coefficient by coefficient.  The
enumeration side is always treated as ground truth.  Checks return a
:class:`Verdict` that lists every mismatch, grouped by named comparison, and
keeps the compared coefficient columns for reporting.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any

from .partitions import (
    enumerate_partitions,
    is_distinct_parts,
    is_parts_appear_fewer_than,
    is_upper_left_filling,
    partition_counts,
    restricted_counts,
)
from .pfm import OrbitTable, orbit_size, orbit_size_by_iteration, orbit_table
from .qseries import (
    DEFAULT_ORDER,
    Factor,
    ProductSpec,
    Series,
    eta,
    expand,
    pochhammer,
)

__all__ = [
    "Mismatch",
    "Verdict",
    "enumeration_counts",
    "upper_left_filling_gf",
    "orbit1_gf_eta",
    "orbit1_gf_blocks",
    "orbit2_gf_formula",
    "orbit2_gf_periodic",
    "theorem4_product",
    "remark4_exponent_carry",
    "remark4_exponent_literal",
    "remark4_mod3_exponents",
    "corollary8_term",
    "check_pmm",
    "check_congruence_statistics",
    "check_orbit1_gf",
    "check_orbit2_gf",
    "check_theorem4",
    "check_remark4",
    "check_corollary8",
]


@dataclass(frozen=True)
class Mismatch:
    index: int
    left: Any
    right: Any
    key: Any = None


@dataclass
class Verdict:
    name: str
    params: dict
    order: int
    comparisons: dict[str, list[Mismatch]] = field(default_factory=dict)
    columns: dict[str, list[int]] = field(default_factory=dict)
    tables: list[OrbitTable] = field(default_factory=list)
    column_start: int = 0

    @property
    def passed(self) -> bool:
        return not any(self.comparisons.values())

    @property
    def witness(self) -> dict | None:
        """First mismatch, in comparison order, or None on a pass."""
        for label, found in self.comparisons.items():
            if found:
                w = found[0]
                out = {"comparison": label, "index": w.index, "left": w.left, "right": w.right}
                if w.key is not None:
                    out["key"] = w.key
                return out
        return None

    def compare(self, label: str, left, right, start: int = 0):
        """Record coefficientwise differences of two equal-length sequences."""
        left, right = list(left), list(right)
        if len(left) != len(right):
            raise ValueError(f"{label}: sides have lengths {len(left)} and {len(right)}")
        self.comparisons[label] = [
            Mismatch(start + i, a, b) for i, (a, b) in enumerate(zip(left, right)) if a != b
        ]


# Past this order the oracle side counts by dynamic programming instead of
# listing partitions (p(50) is about 200 thousand, p(100) about 190 million).
ENUMERATION_LIMIT = 50


def enumeration_counts(N: int, predicate: Callable) -> list[int]:
    """``[#{lambda |- n : predicate(lambda)} for n in 0..N]``."""
    return [sum(1 for lam in enumerate_partitions(n) if predicate(lam)) for n in range(N + 1)]


def _class_counts(N: int, predicate: Callable, part_ok=None, max_mult=None) -> tuple[list[int], str]:
    if N <= ENUMERATION_LIMIT:
        return enumeration_counts(N, predicate), "enumeration"
    return restricted_counts(N, part_ok, max_mult), "dp_count"


# -- generating functions ---------------------------------------------------------


def _filling_quotient(x: int, m: int) -> ProductSpec:
    # prod_{m !| j} (1 + q^(jx) + ... + q^((m-1)jx)) as an eta quotient
    return eta(x * m, 2) / (eta(x) * eta(x * m * m))


def upper_left_filling_gf(m: int) -> ProductSpec:
    """``(q^m;q^m)^2 / ((q;q) (q^(m^2);q^(m^2)))``."""
    return _filling_quotient(1, m)


def orbit1_gf_eta(m: int, N: int) -> ProductSpec:
    """Orbit-size-1 generating function, fully collected eta-quotient form."""
    spec = eta(1, -1)
    k = 1
    while k * m**k <= N:
        spec = spec * eta(k * m**k, 2) / (eta((k + 1) * m**k) * eta(k * m ** (k + 1)))
        k += 1
    return spec


def orbit1_gf_blocks(m: int, N: int) -> ProductSpec:
    """Orbit-size-1 generating function as a product of geometric blocks.

    A constant antidiagonal of length ``k`` in ``M_j`` holding digit ``a``
    contributes ``a * k * j * m**(k-1)``.
    """
    factors = []
    k = 1
    while k * m ** (k - 1) <= N:
        unit = k * m ** (k - 1)
        j = 1
        while j * unit <= N:
            if j % m:
                factors.append(Factor("block", j * unit, 1, 1, 1, m))
            j += 1
        k += 1
    return ProductSpec(tuple(factors))


def orbit2_gf_formula(m: int, N: int) -> Series:
    """The closed orbit-size-2 formula, expanded term by term.

    ``prod_k (F_k)^(a_k) - P1`` with ``F_k`` the ``k``-th factor of the
    orbit-1 product and ``a_k = 3`` for odd ``k``, ``2`` for even ``k``.
    """
    spec = ProductSpec()
    k = 1
    while k * m ** (k - 1) <= N:
        spec = spec * _filling_quotient(k * m ** (k - 1), m) ** (3 if k % 2 else 2)
        k += 1
    return expand(spec, N) - expand(orbit1_gf_eta(m, N), N)


def orbit2_gf_periodic(m: int, N: int) -> Series:
    """Orbit-size-2 generating function from antidiagonal periods.

    Every antidiagonal must have period 1 or 2.  An odd length ``k`` forces a
    constant word; an even length ``k`` allows two interleaved constant
    halves of ``k/2`` cells each.  Subtracting the orbit-1 series leaves
    exactly period 2.
    """
    spec = ProductSpec()
    k = 1
    while k * m ** (k - 1) // (1 if k % 2 else 2) <= N:
        if k % 2:
            spec = spec * _filling_quotient(k * m ** (k - 1), m)
        else:
            spec = spec * _filling_quotient(k // 2 * m ** (k - 1), m) ** 2
        k += 1
    return expand(spec, N) - expand(orbit1_gf_eta(m, N), N)


def _valuation(n: int, b: int) -> int:
    r = 0
    while n % b == 0:
        n //= b
        r += 1
    return r


def theorem4_product(b: int, N: int) -> ProductSpec:
    """``prod_{n>=1} (1 + q^n + ... + q^((b-1)n))^(r+1)`` where ``b^r || n``."""
    return ProductSpec(tuple(
        Factor("block", n, 1, _valuation(n, b) + 1, 1, b) for n in range(1, N + 1)
    ))


def remark4_mod3_exponents(N: int) -> list[int]:
    """Exponents ``a_n`` (index ``n``, ``a_0`` unused) with
    ``sum p(n) q^n == prod (1+q^n)^(a_n)  (mod 3)`` and ``a_n`` in {0, 1, 2}.

    Starts from the exact exponents ``v_2(n) + 1`` and applies
    ``(1+x)^3 == 1 + x^3 (mod 3)``: each full group of three copies of
    ``(1+q^n)`` becomes one extra copy of ``(1+q^(3n))``.
    """
    e = [0] + [_valuation(n, 2) + 1 for n in range(1, N + 1)]
    for n in range(1, N + 1):
        carry, e[n] = divmod(e[n], 3)
        if 3 * n <= N:
            e[3 * n] += carry
    return e


def remark4_exponent_carry(n: int) -> int:
    """``a_n`` via the carry reduction along ``n/3^k, ..., n/3, n``."""
    r, k = _valuation(n, 2), _valuation(n, 3)
    total = r + 1
    for _ in range(k):
        total = r + 1 + total // 3
    return total % 3


def remark4_exponent_literal(n: int) -> int:
    """``a_n`` by the iteration as worded: start from ``r+1`` and ``k`` times
    replace ``e`` by ``e // 3 + e % 3``; report the final residue mod 3."""
    r, k = _valuation(n, 2), _valuation(n, 3)
    e = r + 1
    for _ in range(k):
        e = e // 3 + e % 3
    return e % 3


def corollary8_term(n: int, m: int, N: int) -> Series:
    """Summand ``n`` of the parametrized sum, expanded to order ``N``.

    ``q^n (1-q^((m-1)n)) / (1-q^n) * (q^(mn);q^m)_oo
      / ((q^(n+1);q)_((m-1)n) (q^(mn);q)_oo)``
    """
    if n > N:
        return Series.zero(N)
    spec = ProductSpec((
        Factor("block", n, 1, 1, 1, m - 1),
        Factor("inf", m * n, m, 1),
        Factor("fin", n + 1, 1, -1, 1, (m - 1) * n),
        Factor("inf", m * n, 1, -1),
    ))
    return Series([0] * n + expand(spec, N - n).coeffs)


# -- checks -----------------------------------------------------------------------


def check_pmm(m: int, N: int = DEFAULT_ORDER) -> Verdict:
    """Upper-left fillings: eta quotient against enumeration."""
    if m < 2:
        raise ValueError("m must be >= 2")
    v = Verdict("pmm", {"m": m}, N)
    left = expand(upper_left_filling_gf(m), N).coeffs
    right, how = _class_counts(
        N, lambda lam: is_upper_left_filling(lam, m), lambda a: a % m, m - 1
    )
    v.columns = {"eta_quotient": left, how: right}
    v.compare(f"eta_quotient_vs_{how}", left, right)
    return v


def check_congruence_statistics(A: int, B: int, C: int, m: int, n_max: int) -> Verdict:
    """Orbit-table congruences along ``n == B (mod A)``, ``n <= n_max``."""
    if not 0 <= B < A:
        raise ValueError(f"need 0 <= B < A, got A={A}, B={B}")
    if m % A:
        raise ValueError(f"need A | m, got A={A}, m={m}")
    if C < 2:
        raise ValueError("C must be >= 2")
    v = Verdict("congruence", {"A": A, "B": B, "C": C, "m": m, "nmax": n_max}, n_max)
    p_bad, o_bad, total_bad = [], [], []
    pn = partition_counts(max(n_max, 0))
    for n in range(B, n_max + 1, A):
        table = orbit_table(n, m)
        v.tables.append(table)
        for k, row in table.rows.items():
            if row.p_count % C:
                p_bad.append(Mismatch(n, row.p_count % C, 0, key=k))
            if row.o_count % C:
                o_bad.append(Mismatch(n, row.o_count % C, 0, key=k))
        if table.total != pn[n]:
            total_bad.append(Mismatch(n, table.total, pn[n]))
    v.comparisons = {
        "p_count_mod_C": p_bad,
        "o_count_mod_C": o_bad,
        "table_total_vs_p(n)": total_bad,
    }
    return v


def check_orbit1_gf(m: int, N: int) -> Verdict:
    """Orbit size 1: enumeration, eta-quotient form and block product."""
    if m < 2:
        raise ValueError("m must be >= 2")
    v = Verdict("orbit1", {"m": m}, N)
    brute = enumeration_counts(N, lambda lam: orbit_size(lam, m) == 1)
    eta_form = expand(orbit1_gf_eta(m, N), N).coeffs
    blocks = expand(orbit1_gf_blocks(m, N), N).coeffs
    v.columns = {"enumeration": brute, "eta_quotient": eta_form, "block_product": blocks}
    v.compare("eta_quotient_vs_enumeration", eta_form, brute)
    v.compare("block_product_vs_enumeration", blocks, brute)
    return v


def check_orbit2_gf(m: int, N: int) -> Verdict:
    """Orbit size 2: the closed formula against enumeration.

    The enumeration side is produced twice, by an iterate-until-return orbit
    filter and by the orbit-size tables; those two must agree.  The formula
    comparison is reported as found.  A second series built directly from
    antidiagonal periods is compared as well.
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    v = Verdict("orbit2", {"m": m}, N)
    by_filter = enumeration_counts(N, lambda lam: orbit_size_by_iteration(lam, m) == 2)
    by_table = [orbit_table(n, m).p_count(2) for n in range(N + 1)]
    formula = orbit2_gf_formula(m, N).coeffs
    periodic = orbit2_gf_periodic(m, N).coeffs
    v.columns = {
        "enumeration_filter": by_filter,
        "enumeration_table": by_table,
        "formula": formula,
        "period_product": periodic,
    }
    v.compare("filter_vs_table", by_filter, by_table)
    v.compare("formula_vs_enumeration", formula, by_filter)
    v.compare("period_product_vs_enumeration", periodic, by_filter)
    return v


def check_theorem4(b: int, N: int = DEFAULT_ORDER) -> Verdict:
    """``p(n) mod b`` against the ``k_m``-typed block product mod ``b``."""
    if b < 2:
        raise ValueError("b must be >= 2")
    v = Verdict("theorem4", {"b": b}, N)
    left = expand(theorem4_product(b, N), N).mod(b).coeffs
    right = [p % b for p in partition_counts(N)]
    v.columns = {"product_mod_b": left, "p_mod_b": right}
    v.compare("product_vs_p(n)_mod_b", left, right)
    return v


def check_remark4(N: int = DEFAULT_ORDER) -> Verdict:
    """Exact ``1/(q;q)`` product over ``(1+q^n)``, and its mod-3 reduction."""
    if N < 1:
        raise ValueError("N must be >= 1")
    v = Verdict("remark4", {}, N)
    pn = partition_counts(N)
    exact = expand(theorem4_product(2, N), N).coeffs
    a = remark4_mod3_exponents(N)
    mod3_spec = ProductSpec(tuple(
        Factor("block", n, 1, a[n], 1, 2) for n in range(1, N + 1) if a[n]
    ))
    mod3 = expand(mod3_spec, N).mod(3).coeffs
    v.columns = {
        "exact_product": exact,
        "p": pn,
        "mod3_product": mod3,
        "mod3_exponent": a,
    }
    v.compare("exact_product_vs_p(n)", exact, pn)
    v.compare("mod3_product_vs_p(n)_mod_3", mod3, [p % 3 for p in pn])
    upto = min(N, 50)
    v.compare(
        "literal_vs_carry_exponent",
        [remark4_exponent_literal(n) for n in range(1, upto + 1)],
        [remark4_exponent_carry(n) for n in range(1, upto + 1)],
        start=1,
    )
    v.compare("carry_exponent_vs_reduction", [remark4_exponent_carry(n) for n in range(1, N + 1)],
              a[1:], start=1)
    return v


def check_corollary8(m: int, N: int = DEFAULT_ORDER) -> Verdict:
    """The refined identity for each ``n``, the summed identity, and its
    combinatorial reading (parts appearing fewer than ``m`` times)."""
    if m < 2:
        raise ValueError("m must be >= 2")
    v = Verdict("corollary8", {"m": m}, N)
    refined_bad = []
    total = Series.zero(N)
    for n in range(1, N + 1):
        lhs = expand(ProductSpec((
            Factor("inf", m * n, m, 1),
            Factor("fin", n + 1, 1, -1, 1, (m - 1) * n),
            Factor("inf", m * n, 1, -1),
        )), N)
        rhs = expand(pochhammer(m * (n + 1), m) / pochhammer(n + 1, 1), N)
        if lhs != rhs:
            i = next(i for i in range(N + 1) if lhs[i] != rhs[i])
            refined_bad.append(Mismatch(n, lhs[i], rhs[i], key=i))
        total = total + corollary8_term(n, m, N)
    product = (expand(eta(m) / eta(1), N) - 1).coeffs
    brute, how = _class_counts(N, lambda lam: is_parts_appear_fewer_than(lam, m), None, m - 1)
    brute = [0] + brute[1:]
    v.comparisons["refined_identity"] = refined_bad
    v.columns = {"sum": total.coeffs, "product": product, how: brute}
    v.compare("sum_vs_product", total.coeffs, product)
    v.compare(f"product_vs_{how}", product, brute)
    if m == 2:
        distinct = (expand(pochhammer(1, 1, sign=-1), N) - 1).coeffs
        dbrute, how = _class_counts(N, is_distinct_parts, None, 1)
        dbrute = [0] + dbrute[1:]
        v.columns["minus_one_plus_(-q;q)"] = distinct
        v.compare("sum_vs_(-q;q)", total.coeffs, distinct)
        v.compare(f"(-q;q)_vs_distinct_{how}", distinct, dbrute)
    return v

"""Exact truncated power series in ``q`` and symbolic q-products.

A :class:`Series` keeps the coefficients of ``q**0 .. q**N`` as Python
integers, so nothing ever overflows.  Binary operations between series of
different orders work at the smaller order.

A :class:`ProductSpec` is a product of q-Pochhammer symbols and geometric
blocks, each raised to an integer power, e.g. the text form
``(q^2;q^2)^2 / ((q;q) (q^4;q^4))``.  :func:`expand` turns it into a Series.

>>> expand(parse_product("(q;q)"), 7).coeffs
[1, -1, -1, 0, 0, 1, 0, 1]
>>> (1 / expand(parse_product("(q;q)"), 9))[9]
30
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Literal

__all__ = [
    "Series",
    "Factor",
    "ProductSpec",
    "series_mul",
    "series_invert",
    "series_mod",
    "expand",
    "pochhammer",
    "pochhammer_finite",
    "geometric_block",
    "parse_product",
    "format_product",
    "eta",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 100


class Series:
    """Power series ``c[0] + c[1] q + ... + c[N] q^N + O(q^(N+1))``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        c = [int(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            c = c[: order + 1] + [0] * (order + 1 - len(c))
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        self._c = c

    @classmethod
    def one(cls, order: int) -> Series:
        return cls([1], order)

    @classmethod
    def zero(cls, order: int) -> Series:
        return cls([0], order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> Series:
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return len(self._c) - 1

    @property
    def coeffs(self) -> list[int]:
        return list(self._c)

    def __len__(self):
        return len(self._c)

    def __getitem__(self, i):
        return self._c[i]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self):
        terms = [f"{c}*q^{i}" for i, c in enumerate(self._c) if c]
        return f"Series({' + '.join(terms) or '0'} + O(q^{self.order + 1}))"

    def __eq__(self, other):
        if isinstance(other, Series):
            return self._c == other._c
        return NotImplemented

    __hash__ = None

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return Series(self._c[: order + 1])

    def _coerce(self, other) -> tuple[list[int], list[int]]:
        if isinstance(other, int):
            other = Series([other], self.order)
        if not isinstance(other, Series):
            raise TypeError(f"cannot combine Series with {type(other).__name__}")
        n = min(self.order, other.order) + 1
        return self._c[:n], other._c[:n]

    def __add__(self, other):
        a, b = self._coerce(other)
        return Series([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return Series([-x for x in self._c])

    def __sub__(self, other):
        a, b = self._coerce(other)
        return Series([x - y for x, y in zip(a, b)])

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Series([other * x for x in self._c])
        a, b = self._coerce(other)
        n = len(a)
        out = [0] * n
        for i, x in enumerate(a):
            if x:
                for j in range(n - i):
                    y = b[j]
                    if y:
                        out[i + j] += x * y
        return Series(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            return self * Series([other], self.order).invert()
        return self * other.invert()

    def __rtruediv__(self, other):
        return Series([other], self.order) * self.invert()

    def __pow__(self, e: int):
        if e < 0:
            return self.invert() ** (-e)
        result = Series.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def invert(self) -> Series:
        """Multiplicative inverse; the constant term must be 1 or -1."""
        c0 = self._c[0]
        if c0 not in (1, -1):
            raise ZeroDivisionError(f"constant term {c0} is not a unit over the integers")
        a = self._c
        n = len(a)
        inv = [0] * n
        inv[0] = c0
        for k in range(1, n):
            s = 0
            for i in range(1, k + 1):
                if a[i]:
                    s += a[i] * inv[k - i]
            inv[k] = -s * c0
        return Series(inv)

    def shift(self, k: int) -> Series:
        """Multiply by ``q**k`` (``k >= 0``), keeping the order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        return Series(([0] * k + self._c)[: len(self._c)])

    def mod(self, b: int) -> Series:
        """Reduce every coefficient into ``[0, b-1]``."""
        if b < 1:
            raise ValueError("modulus must be positive")
        return Series([x % b for x in self._c])

    # in-place sparse factor updates used by expand()

    def _mul_binomial(self, sign: int, c: int, times: int = 1):
        """Multiply in place by ``(1 - sign*q^c)**times``, ``times`` may be negative."""
        a = self._c
        n = len(a)
        if c >= n:
            return
        if times >= 0:
            for _ in range(times):
                for i in range(n - 1, c - 1, -1):
                    if a[i - c]:
                        a[i] -= sign * a[i - c]
        else:
            for _ in range(-times):
                for i in range(c, n):
                    if a[i - c]:
                        a[i] += sign * a[i - c]


def series_mul(s: Series, t: Series) -> Series:
    return s * t


def series_invert(s: Series) -> Series:
    return s.invert()


def series_mod(s: Series, b: int) -> Series:
    return s.mod(b)


# -- products -------------------------------------------------------------------

Kind = Literal["inf", "fin", "block"]


@dataclass(frozen=True)
class Factor:
    """One factor of a q-product, raised to ``power``.

    ``inf``:    ``(sign*q^base; q^step)_oo   = prod_{i>=0} (1 - sign*q^(base+i*step))``
    ``fin``:    ``(sign*q^base; q^step)_len  = prod_{i<len} (1 - sign*q^(base+i*step))``
    ``block``:  ``1 + q^base + ... + q^((len-1)*base)``
    """

    kind: Kind
    base: int
    step: int = 1
    power: int = 1
    sign: int = 1
    length: int | None = None

    def __post_init__(self):
        if self.kind not in ("inf", "fin", "block"):
            raise ValueError(f"unknown factor kind {self.kind!r}")
        if self.base < 1 or self.step < 1:
            raise ValueError("base and step exponents must be >= 1")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.kind == "inf" and self.length is not None:
            raise ValueError("infinite Pochhammer takes no length")
        if self.kind in ("fin", "block") and (self.length is None or self.length < 0):
            raise ValueError(f"{self.kind} factor needs a nonnegative length")
        if self.kind == "block" and (self.length < 1 or self.sign != 1):
            raise ValueError("geometric block needs length >= 1 and sign +1")

    def inverse(self) -> Factor:
        return Factor(self.kind, self.base, self.step, -self.power, self.sign, self.length)

    def apply(self, s: Series):
        """Multiply ``s`` in place by this factor.

        Factors whose smallest nonconstant exponent exceeds the order are
        congruent to 1 and skipped.
        """
        N = s.order
        if self.power == 0:
            return
        if self.kind == "block":
            # 1 + x + ... + x^(L-1) = (1 - x^L) / (1 - x)
            s._mul_binomial(1, self.length * self.base, self.power)
            s._mul_binomial(1, self.base, -self.power)
            return
        count = self.length if self.kind == "fin" else None
        i = 0
        while count is None or i < count:
            c = self.base + i * self.step
            if c > N:
                break
            s._mul_binomial(self.sign, c, self.power)
            i += 1


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[Factor, ...] = ()

    def __mul__(self, other: ProductSpec) -> ProductSpec:
        return ProductSpec(self.factors + other.factors)

    def inverse(self) -> ProductSpec:
        return ProductSpec(tuple(f.inverse() for f in self.factors))

    def __truediv__(self, other: ProductSpec) -> ProductSpec:
        return self * other.inverse()

    def __pow__(self, e: int) -> ProductSpec:
        return ProductSpec(tuple(
            Factor(f.kind, f.base, f.step, f.power * e, f.sign, f.length) for f in self.factors
        ))

    def __str__(self):
        return format_product(self)


def pochhammer(base: int, step: int, power: int = 1, sign: int = 1) -> ProductSpec:
    """``(sign*q^base; q^step)_oo ** power``."""
    return ProductSpec((Factor("inf", base, step, power, sign),))


def eta(a: int, power: int = 1) -> ProductSpec:
    """``(q^a; q^a)_oo ** power``."""
    return pochhammer(a, a, power)


def geometric_block(base: int, length: int, power: int = 1) -> ProductSpec:
    """``(1 + q^base + ... + q^((length-1)*base)) ** power``."""
    return ProductSpec((Factor("block", base, 1, power, 1, length),))


def expand(spec: ProductSpec, N: int = DEFAULT_ORDER) -> Series:
    """Expand a product to a series of order ``N``."""
    if N < 0:
        raise ValueError("order must be nonnegative")
    s = Series.one(N)
    for f in spec.factors:
        f.apply(s)
    return s


def pochhammer_finite(a_exp: int, q_step: int, n: int, N: int, sign: int = 1) -> Series:
    """``(sign*q^a_exp; q^q_step)_n`` as a series of order ``N``."""
    if n < 0:
        raise ValueError("length must be nonnegative")
    return expand(ProductSpec((Factor("fin", a_exp, q_step, 1, sign, n),)), N)


# -- text form ------------------------------------------------------------------
#
#   product := item*
#   item    := ["/"] (factor | group)
#   group   := "(" product ")" ["^" int]
#   factor  := "(" ["-"] qpow ";" qpow ")" ["_" int] ["^" int]
#            | "[" qpow "]_" int ["^" int]
#   qpow    := "q" ["^" int]
#
# "/" inverts only the item that follows it.

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|([()\[\];^_/\-]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character {text[pos]!r} at {pos} in {text!r}")
        out.append(m.group(m.lastindex))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self, k: int = 0):
        j = self.i + k
        return self.toks[j] if j < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ValueError(f"expected {expected or 'token'!r}, got {tok!r} in {self.text!r}")
        self.i += 1
        return tok

    def integer(self) -> int:
        tok = self.take()
        if not tok.isdigit():
            raise ValueError(f"expected an integer, got {tok!r} in {self.text!r}")
        return int(tok)

    def qpow(self) -> int:
        self.take("q")
        if self.peek() == "^":
            self.take()
            return self.integer()
        return 1

    def power(self) -> int:
        if self.peek() != "^":
            return 1
        self.take()
        if self.peek() == "-":
            self.take()
            return -self.integer()
        return self.integer()

    def product(self, closing=None) -> ProductSpec:
        spec = ProductSpec()
        while self.peek() is not None and self.peek() != closing:
            invert = False
            if self.peek() == "/":
                self.take()
                invert = True
            item = self.item()
            spec = spec * (item.inverse() if invert else item)
        return spec

    def item(self) -> ProductSpec:
        tok = self.peek()
        if tok == "[":
            self.take()
            base = self.qpow()
            self.take("]")
            self.take("_")
            length = self.integer()
            return geometric_block(base, length, self.power())
        if tok != "(":
            raise ValueError(f"unexpected {tok!r} in {self.text!r}")
        if self.peek(1) in ("(", "["):
            self.take("(")
            inner = self.product(closing=")")
            self.take(")")
            return inner ** self.power()
        self.take("(")
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        base = self.qpow()
        self.take(";")
        step = self.qpow()
        self.take(")")
        length = None
        if self.peek() == "_":
            self.take()
            length = self.integer()
        kind = "inf" if length is None else "fin"
        return ProductSpec((Factor(kind, base, step, self.power(), sign, length),))


def parse_product(text: str) -> ProductSpec:
    """Parse the text form, e.g. ``"(q^2;q^2)^2 / ((q;q) (q^4;q^4))"``."""
    p = _Parser(text)
    spec = p.product()
    if p.peek() is not None:
        raise ValueError(f"trailing {p.peek()!r} in {text!r}")
    return spec


def _qpow(e: int) -> str:
    return "q" if e == 1 else f"q^{e}"


def _format_factor(f: Factor, power: int) -> str:
    if f.kind == "block":
        body = f"[{_qpow(f.base)}]_{f.length}"
    else:
        body = f"({'-' if f.sign < 0 else ''}{_qpow(f.base)};{_qpow(f.step)})"
        if f.kind == "fin":
            body += f"_{f.length}"
    return body if power == 1 else f"{body}^{power}"


def format_product(spec: ProductSpec) -> str:
    """Canonical text form; round-trips through :func:`parse_product`."""
    num = [_format_factor(f, f.power) for f in spec.factors if f.power > 0]
    den = [_format_factor(f, -f.power) for f in spec.factors if f.power < 0]
    text = " ".join(num) if num else ""
    if den:
        group = den[0] if len(den) == 1 else "(" + " ".join(den) + ")"
        text = f"{text} / {group}" if text else f"/ {group}"
    return text

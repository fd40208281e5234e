"""Exact integer polynomials in the hyperarc-marking variable y.

Everything in this module is exact: coefficients are unbounded Python
integers and no floating point is used anywhere.  Products of large dense
polynomials are computed by Kronecker substitution (pack the coefficients
into one huge integer, multiply once with GMP, unpack), which keeps the
big counting pipelines fast without giving up exactness.
"""
from __future__ import annotations

import math
from functools import lru_cache
from typing import Iterable, Iterator

import gmpy2

__all__ = [
    "YPoly",
    "ZERO",
    "ONE",
    "binomial",
    "mix_exponent",
    "multinomial",
    "one_plus_y_pow",
]

# Below this many coefficient pairs schoolbook convolution beats the
# packing overhead of Kronecker substitution.
_SCHOOLBOOK_PAIR_LIMIT = 4096


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _mul_schoolbook(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _mul_kronecker(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    # Pack each polynomial into one integer with fixed-width slots wide
    # enough that product coefficients cannot overlap, multiply once, then
    # read the slots back.  Signed coefficients are handled by biasing each
    # slot by 2^(slot-1) during pack/unpack.
    bits_a = max(abs(c).bit_length() for c in a)
    bits_b = max(abs(c).bit_length() for c in b)
    slot = bits_a + bits_b + min(len(a), len(b)).bit_length() + 2
    half = 1 << (slot - 1)
    packed_a = gmpy2.pack([c + half for c in a], slot) - gmpy2.pack([half] * len(a), slot)
    packed_b = gmpy2.pack([c + half for c in b], slot) - gmpy2.pack([half] * len(b), slot)
    m = len(a) + len(b) - 1
    shifted = packed_a * packed_b + gmpy2.pack([half] * m, slot)
    digits = gmpy2.unpack(shifted, slot)
    return [int(d) - half for d in digits]


class YPoly:
    """Dense polynomial in y with exact integer coefficients.

    Canonical form: trailing zeros are trimmed and the zero polynomial is
    the empty coefficient tuple, so ``==`` on instances is polynomial
    equality.  Instances are immutable.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        self._coeffs = _trim([int(c) for c in coeffs])

    @classmethod
    def constant(cls, c: int) -> "YPoly":
        return cls((c,))

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree in y; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coeffs)

    def __getitem__(self, q: int) -> int:
        """Coefficient of y^q (0 outside the stored range)."""
        if 0 <= q < len(self._coeffs):
            return self._coeffs[q]
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, YPoly):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __add__(self, other: "YPoly") -> "YPoly":
        if not isinstance(other, YPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return YPoly(out)

    def __sub__(self, other: "YPoly") -> "YPoly":
        if not isinstance(other, YPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return YPoly(out)

    def __neg__(self) -> "YPoly":
        return YPoly([-c for c in self._coeffs])

    def __mul__(self, other: "YPoly | int") -> "YPoly":
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, YPoly):
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return ZERO
        if len(a) * len(b) <= _SCHOOLBOOK_PAIR_LIMIT:
            return YPoly(_mul_schoolbook(a, b))
        return YPoly(_mul_kronecker(a, b))

    def __rmul__(self, other: int) -> "YPoly":
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "YPoly":
        if c == 0:
            return ZERO
        return YPoly([c * x for x in self._coeffs])

    def evaluate(self, y0: int) -> int:
        """Exact integer evaluation at y = y0 (Horner)."""
        acc = 0
        for c in reversed(self._coeffs):
            acc = acc * y0 + c
        return acc

    def __repr__(self) -> str:
        return f"YPoly({list(self._coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)


ZERO = YPoly()
ONE = YPoly((1,))


def format_poly(p: YPoly) -> str:
    """Human-readable form, ascending powers: ``1 + 2*y - y^3``."""
    if not p:
        return "0"
    parts: list[str] = []
    for q, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if q == 0:
            term = str(mag)
        elif q == 1:
            term = "y" if mag == 1 else f"{mag}*y"
        else:
            term = f"y^{q}" if mag == 1 else f"{mag}*y^{q}"
        if not parts:
            parts.append(term if c > 0 else f"-{term}")
        else:
            parts.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(parts)


def binomial(n: int, k: int) -> int:
    """C(n, k) exactly; 0 when k < 0 or k > n."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """n! / (p_1! ... p_j!) for parts summing to n."""
    parts = list(parts)
    if sum(parts) != n:
        raise ValueError(f"parts {parts} do not sum to {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def mix_exponent(n: int, k: int, b: int) -> int:
    """C(n,b) - C(k,b) - C(n-k,b): the number of b-node sets meeting both
    blocks of a k/(n-k) split.  Always >= 0 for 0 <= k <= n."""
    if b < 2:
        raise ValueError(f"uniformity b must be >= 2, got {b}")
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    e = binomial(n, b) - binomial(k, b) - binomial(n - k, b)
    if e < 0:
        raise AssertionError(f"negative mixing exponent for n={n}, k={k}, b={b}")
    return e


@lru_cache(maxsize=512)
def one_plus_y_pow(e: int) -> YPoly:
    """(1+y)^e expanded, coefficient of y^k equal to C(e, k)."""
    if e < 0:
        raise ValueError(f"negative exponent {e} for (1+y)^e")
    row = [1] * (e + 1)
    for k in range(1, e + 1):
        row[k] = row[k - 1] * (e - k + 1) // k
    return YPoly(row)

"""Cantor-normal-form ordinals below omega^omega, plus finite/infinite counts.

Ordinals are sums  w^e1*c1 + ... + w^ek*ck + m  with strictly decreasing
exponents e >= 1, coefficients c >= 1 and a finite tail m.  That is exactly
the range needed by the degree formulas and the symbolic censuses; cardinal
arithmetic and ordinal multiplication are out of scope.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering
from math import comb

from .errors import NonCanonicalError, OrdinalSyntaxError, OutOfRangeError


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    terms: tuple[tuple[int, int], ...] = ()
    finite: int = 0

    def __post_init__(self):
        last_exp = None
        for exp, coeff in self.terms:
            if exp < 1 or coeff < 1:
                raise NonCanonicalError(f"bad CNF term (w^{exp})*{coeff}")
            if last_exp is not None and exp >= last_exp:
                raise NonCanonicalError("exponents must strictly decrease")
            last_exp = exp
        if self.finite < 0:
            raise NonCanonicalError("finite part must be nonnegative")

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        return cls((), n)

    @classmethod
    def omega(cls, power: int = 1, coeff: int = 1) -> "Ordinal":
        return cls(((power, coeff),), 0)

    @property
    def is_zero(self) -> bool:
        return not self.terms and self.finite == 0

    @property
    def is_finite(self) -> bool:
        return not self.terms

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and self.finite == 0

    def __int__(self) -> int:
        if not self.is_finite:
            raise OverflowError("infinite ordinal has no int value")
        return self.finite

    def _key(self):
        return (self.terms, self.finite)

    @staticmethod
    def _coerce(other) -> "Ordinal":
        if isinstance(other, Ordinal):
            return other
        if isinstance(other, int):
            return Ordinal.from_int(other)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self._key() == o._key()

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        for (e1, c1), (e2, c2) in zip(self.terms, o.terms):
            if (e1, c1) != (e2, c2):
                return (e1, c1) < (e2, c2)
        if len(self.terms) != len(o.terms):
            # Equal prefix; the longer CNF is the larger ordinal.
            return len(self.terms) < len(o.terms)
        return self.finite < o.finite

    def __hash__(self):
        return hash(self._key())

    def __add__(self, k: int) -> "Ordinal":
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        return Ordinal(self.terms, self.finite + k)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for exp, coeff in self.terms:
            t = "w" if exp == 1 else f"w^{exp}"
            if coeff > 1:
                t += f"*{coeff}"
            parts.append(t)
        if self.finite:
            parts.append(str(self.finite))
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal({self})"


_TERM_RE = re.compile(r"^w(?:\^(\d+))?(?:\*(\d+))?$")


def parse_ordinal(text: str) -> Ordinal:
    """Parse literals like '0', '7', 'w+3', 'w^2*2+w*5+1'."""
    s = text.strip()
    if not s:
        raise OrdinalSyntaxError("empty ordinal literal")
    terms: list[tuple[int, int]] = []
    finite = None
    for chunk in s.split("+"):
        chunk = chunk.strip()
        if not chunk:
            raise OrdinalSyntaxError(f"empty term in {text!r}")
        if chunk.isdigit():
            if finite is not None:
                raise NonCanonicalError("at most one trailing finite term")
            finite = int(chunk)
            continue
        if finite is not None:
            raise NonCanonicalError("finite term must come last")
        m = _TERM_RE.match(chunk)
        if not m:
            raise OrdinalSyntaxError(f"bad term {chunk!r}")
        exp = int(m.group(1)) if m.group(1) else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        if exp < 1:
            raise NonCanonicalError("w^0 is not allowed; write a plain natural")
        if coeff < 1:
            raise NonCanonicalError("zero coefficient")
        if terms and exp >= terms[-1][0]:
            raise NonCanonicalError("terms must appear in strictly decreasing exponent order")
        terms.append((exp, coeff))
    if finite is None:
        finite = 0
    elif finite == 0 and terms:
        raise NonCanonicalError("drop the trailing +0")
    return Ordinal(tuple(terms), finite)


def decompose(alpha: Ordinal) -> tuple[Ordinal, int]:
    """Split alpha = limit_part + finite_part (limit_part is 0 or a limit)."""
    return Ordinal(alpha.terms, 0), alpha.finite


@dataclass(frozen=True)
class Count:
    """A natural number or the single collapsed value 'infinite'.

    The implemented theorems only ever branch on finite vs infinite, so all
    infinite cardinalities are deliberately one value.
    """

    value: int | None  # None means infinite

    @classmethod
    def finite(cls, n: int) -> "Count":
        if n < 0:
            raise ValueError("negative count")
        return cls(n)

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def __add__(self, other: "Count") -> "Count":
        if self.is_infinite or other.is_infinite:
            return INFINITE
        return Count(self.value + other.value)

    def binomial(self, a: int) -> "Count":
        if a == 0:
            return Count(1)
        if self.is_infinite:
            return INFINITE
        return Count(comb(self.value, a))

    def __str__(self) -> str:
        return "inf" if self.is_infinite else str(self.value)

    def __repr__(self) -> str:
        return f"Count({self})"


INFINITE = Count(None)


def below_count(xi: Ordinal) -> Count:
    """|{z : z < xi}|."""
    return Count(xi.finite) if xi.is_finite else INFINITE


def tail_count(alpha: Ordinal, xi: Ordinal) -> Count:
    """|{z : xi < z < alpha}|, finite only when xi sits in alpha's finite tail."""
    if not xi < alpha:
        raise OutOfRangeError(f"{xi} is not below {alpha}")
    limit_a, k = decompose(alpha)
    limit_x, m = decompose(xi)
    if limit_a == limit_x:
        return Count(k - m - 1)
    return INFINITE

"""Sparse Laurent polynomials with exact integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

__all__ = ["Laurent"]


class Laurent:
    """A Laurent polynomial stored as ``{exponent: coefficient}``.

    ``var`` is a tag, ``"A"`` for bracket values or ``"t_quarter"`` for Jones
    values whose exponents count powers of ``t**(1/4)``.  Zero coefficients
    are never stored, so equality is dictionary equality.
    """

    __slots__ = ("terms", "var")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = (), var: str = "A"):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[e] = acc.get(e, 0) + c
        self.terms = {e: c for e, c in acc.items() if c}
        self.var = var

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "A") -> "Laurent":
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "A") -> "Laurent":
        return cls({0: c}, var)

    def _coerce(self, other) -> "Laurent":
        if isinstance(other, Laurent):
            if other.var != self.var and other.terms and self.terms:
                if not (other.is_constant() or self.is_constant()):
                    raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return Laurent.constant(other, self.var)
        return NotImplemented

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {0}

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self.terms)
        for e, c in other.terms.items():
            merged[e] = merged.get(e, 0) + c
        return Laurent(merged, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({e: -c for e, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Laurent(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            (e, c), = self.terms.items()
            if c not in (1, -1):
                raise ValueError("monomial inverse needs a unit coefficient")
            return Laurent({-e * -k: c ** -k}, self.var)
        result = Laurent.constant(1, self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent.constant(other, self.var)
        if not isinstance(other, Laurent):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute(self, scale: int, var: str) -> "Laurent":
        """Return ``p(x**scale)`` retagged as ``var``."""
        return Laurent({e * scale: c for e, c in self.terms.items()}, var)

    def negate_exponents(self) -> "Laurent":
        return self.substitute(-1, self.var)

    def exponents(self) -> list[int]:
        return sorted(self.terms)

    def min_degree(self) -> int:
        return min(self.terms)

    def max_degree(self) -> int:
        return max(self.terms)

    def is_palindromic(self) -> bool:
        return self == self.negate_exponents()

    def _power_text(self, e: int) -> str:
        if self.var == "t_quarter":
            base, q = "t", Fraction(e, 4)
        else:
            base, q = self.var, Fraction(e)
        if q == 0:
            return ""
        if q == 1:
            return base
        if q.denominator == 1:
            return f"{base}^{q.numerator}"
        return f"{base}^({q.numerator}/{q.denominator})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for e in sorted(self.terms):
            c = self.terms[e]
            power = self._power_text(e)
            mag = abs(c)
            if power:
                body = power if mag == 1 else f"{mag}{power}"
            else:
                body = str(mag)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Laurent({self.terms!r}, var={self.var!r})"

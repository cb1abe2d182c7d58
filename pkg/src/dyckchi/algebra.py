"""Exact Laurent polynomials in two variables q and t with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

Exponent = tuple[int, int]


class LaurentQT:
    """Immutable element of Z[q, q^-1, t, t^-1].

    Terms are stored as a mapping ``(e_q, e_t) -> c`` with zero coefficients
    dropped, so structural equality is ring equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for (eq, et), c in items:
            key = (int(eq), int(et))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: acc[k] for k in sorted(acc) if acc[k] != 0}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> LaurentQT:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, e_q: int = 0, e_t: int = 0, c: int = 1) -> LaurentQT:
        return cls({(e_q, e_t): c})

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentQT.const(other)
        if not isinstance(other, LaurentQT):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _coerce(self, other) -> LaurentQT:
        if isinstance(other, LaurentQT):
            return other
        if isinstance(other, int):
            return LaurentQT.const(other)
        raise TypeError(f"cannot combine LaurentQT with {type(other).__name__}")

    def __add__(self, other) -> LaurentQT:
        other = self._coerce(other)
        acc = dict(self._terms)
        for k, c in other._terms.items():
            acc[k] = acc.get(k, 0) + c
        return LaurentQT(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentQT:
        return LaurentQT({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> LaurentQT:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> LaurentQT:
        return self._coerce(other) - self

    def __mul__(self, other) -> LaurentQT:
        other = self._coerce(other)
        acc: dict[Exponent, int] = {}
        for (a, b), c in self._terms.items():
            for (d, e), f in other._terms.items():
                k = (a + d, b + e)
                acc[k] = acc.get(k, 0) + c * f
        return LaurentQT(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentQT:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use scale_monomial")
        out = LaurentQT.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale_monomial(self, e_q: int, e_t: int) -> LaurentQT:
        """Multiply by q^e_q t^e_t."""
        return LaurentQT({(a + e_q, b + e_t): c for (a, b), c in self._terms.items()})

    def t_slice(self, k: int) -> LaurentQT:
        """Coefficient of t^k, returned as a polynomial in q alone."""
        return LaurentQT({(a, 0): c for (a, b), c in self._terms.items() if b == k})

    def t_degrees(self) -> list[int]:
        return sorted({b for _, b in self._terms})

    def q_degrees(self) -> list[int]:
        return sorted({a for a, _ in self._terms})

    def evaluate(self, q0, t0) -> Fraction:
        q0, t0 = Fraction(q0), Fraction(t0)
        total = Fraction(0)
        for (a, b), c in self._terms.items():
            if (q0 == 0 and a < 0) or (t0 == 0 and b < 0):
                raise ZeroDivisionError("zero raised to a negative power")
            total += c * q0**a * t0**b
        return total

    def substitute_t_one(self) -> LaurentQT:
        """Set t = 1, keeping q symbolic."""
        return LaurentQT([((a, 0), c) for (a, _), c in self._terms.items()])

    def conj(self) -> LaurentQT:
        """q -> 1/q, t -> 1/t."""
        return LaurentQT({(-a, -b): c for (a, b), c in self._terms.items()})

    def to_json(self) -> dict:
        return {"terms": [{"q": a, "t": b, "c": c} for (a, b), c in self._terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> LaurentQT:
        return cls({(d["q"], d["t"]): d["c"] for d in data["terms"]})

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in self._terms.items():
            mono = "".join(
                v if e == 1 else f"{v}^{e}" for v, e in (("q", a), ("t", b)) if e != 0
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = LaurentQT()
ONE = LaurentQT.const(1)
q = LaurentQT.monomial(1, 0)
t = LaurentQT.monomial(0, 1)


def add(a: LaurentQT, b: LaurentQT) -> LaurentQT:
    return a + b


def sub(a: LaurentQT, b: LaurentQT) -> LaurentQT:
    return a - b


def mul(a: LaurentQT, b: LaurentQT) -> LaurentQT:
    return a * b


def scale_monomial(a: LaurentQT, e_q: int, e_t: int) -> LaurentQT:
    return a.scale_monomial(e_q, e_t)


def t_slice(a: LaurentQT, k: int) -> LaurentQT:
    return a.t_slice(k)


def evaluate(a: LaurentQT, q0, t0) -> Fraction:
    return a.evaluate(q0, t0)


def conj_qt(a: LaurentQT) -> LaurentQT:
    return a.conj()


def from_histogram(hist: Mapping[Exponent, int]) -> LaurentQT:
    """Build a polynomial from a ``(inv, tcount) -> multiplicity`` table."""
    return LaurentQT(hist)

"""Homogeneous symmetric functions with LaurentQT coefficients.

Only the monomial and Schur bases are supported.  Changes of basis go
through Kostka numbers counted by direct tableau enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping

from .algebra import LaurentQT
from .partition import Partition, conjugate, partition, partitions

BASES = ("monomial", "schur")


class SymFunc:
    """Degree-n symmetric function ``sum_lam coeff[lam] * b_lam`` in a named basis."""

    __slots__ = ("degree", "basis", "_coeffs")

    def __init__(self, degree: int, basis: str, coeffs: Mapping[Partition, LaurentQT] = ()):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.degree = degree
        self.basis = basis
        acc: dict[Partition, LaurentQT] = {}
        for lam, c in dict(coeffs).items():
            lam = partition(lam)
            if sum(lam) != degree:
                raise ValueError(f"index {lam} has size {sum(lam)}, expected {degree}")
            if isinstance(c, int):
                c = LaurentQT.const(c)
            acc[lam] = acc.get(lam, LaurentQT()) + c
        self._coeffs = {lam: acc[lam] for lam in sorted(acc, reverse=True) if acc[lam]}

    @property
    def coeffs(self) -> dict[Partition, LaurentQT]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def coefficient(self, lam: Partition) -> LaurentQT:
        return self._coeffs.get(tuple(lam), LaurentQT())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.basis != other.basis:
            other = other.to_basis(self.basis)
        return self.degree == other.degree and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.degree, self.basis, tuple(self._coeffs.items())))

    def _check(self, other: SymFunc) -> SymFunc:
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return other.to_basis(self.basis)

    def __add__(self, other: SymFunc) -> SymFunc:
        other = self._check(other)
        acc = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            acc[lam] = acc.get(lam, LaurentQT()) + c
        return SymFunc(self.degree, self.basis, acc)

    def __neg__(self) -> SymFunc:
        return self.map_coeffs(lambda c: -c)

    def __sub__(self, other: SymFunc) -> SymFunc:
        return self + (-other)

    def scale(self, c: LaurentQT | int) -> SymFunc:
        return self.map_coeffs(lambda x: x * c)

    def map_coeffs(self, fn) -> SymFunc:
        return SymFunc(self.degree, self.basis, {lam: fn(c) for lam, c in self._coeffs.items()})

    def to_basis(self, basis: str) -> SymFunc:
        if basis == self.basis:
            return self
        if basis == "schur":
            return monomial_to_schur(self)
        return schur_to_monomial(self)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"index": list(lam), "coeff": c.to_json()} for lam, c in self._coeffs.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> SymFunc:
        return cls(
            data["degree"],
            data["basis"],
            {tuple(d["index"]): LaurentQT.from_json(d["coeff"]) for d in data["terms"]},
        )

    def __repr__(self) -> str:
        sym = "s" if self.basis == "schur" else "m"
        if not self._coeffs:
            return "0"
        return " + ".join(
            f"({c})*{sym}{''.join(map(str, lam)) if max(lam) < 10 else lam}"
            for lam, c in self._coeffs.items()
        )


def _horizontal_strips(lam: Partition, k: int) -> Iterator[Partition]:
    """Partitions nu with lam/nu a horizontal strip of size k."""
    lam = list(lam)

    def rec(i: int, left: int, acc: list[int]):
        if i == len(lam):
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        lo = lam[i + 1] if i + 1 < len(lam) else 0
        for nu_i in range(lam[i], lo - 1, -1):
            taken = lam[i] - nu_i
            if taken > left:
                break
            acc.append(nu_i)
            yield from rec(i + 1, left - taken, acc)
            acc.pop()

    yield from rec(0, k, [])


@lru_cache(maxsize=None)
def _kostka(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    return sum(_kostka(nu, mu[:-1]) for nu in _horizontal_strips(lam, mu[-1]))


def kostka(lam: Partition, mu: Partition) -> int:
    """Number of SSYT of shape lam and content mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _kostka(lam, mu)


def schur_to_monomial(f: SymFunc) -> SymFunc:
    if f.basis == "monomial":
        return f
    acc: dict[Partition, LaurentQT] = {}
    for lam, c in f.items():
        for mu in partitions(f.degree):
            k = kostka(lam, mu)
            if k:
                acc[mu] = acc.get(mu, LaurentQT()) + c * k
    return SymFunc(f.degree, "monomial", acc)


def monomial_to_schur(f: SymFunc) -> SymFunc:
    """Back-substitution against the unitriangular Kostka matrix."""
    if f.basis == "schur":
        return f
    # reverse lexicographic order is a linear extension of dominance
    order = list(partitions(f.degree))
    out: dict[Partition, LaurentQT] = {}
    for idx, mu in enumerate(order):
        b = f.coefficient(mu)
        for lam in order[:idx]:
            if lam in out:
                k = kostka(lam, mu)
                if k:
                    b = b - out[lam] * k
        if b:
            out[mu] = b
    return SymFunc(f.degree, "schur", out)


def schur(lam: Partition, coeff: LaurentQT | int = 1) -> SymFunc:
    return SymFunc(sum(lam), "schur", {tuple(lam): coeff})


def monomial(lam: Partition, coeff: LaurentQT | int = 1) -> SymFunc:
    return SymFunc(sum(lam), "monomial", {tuple(lam): coeff})


def is_schur_positive(f: SymFunc) -> tuple[bool, tuple | None]:
    """Check every Schur coefficient; the witness is ``(lam, (e_q, e_t, c))``."""
    for lam, c in f.to_basis("schur").items():
        for (a, b), coef in c.items():
            if coef < 0:
                return False, (lam, (a, b, coef))
    return True, None


def omega_bar(f: SymFunc) -> SymFunc:
    """Conjugate q and t, transpose Schur indices, multiply by (-1)^n."""
    if f.basis != "schur":
        raise ValueError("omega_bar expects a Schur-basis input")
    sign = -1 if f.degree % 2 else 1
    return SymFunc(f.degree, "schur", {conjugate(lam): c.conj() * sign for lam, c in f.items()})


def schur_coefficient(f: SymFunc, lam: Partition) -> LaurentQT:
    if sum(lam) != f.degree:
        raise ValueError(f"|{lam}| != degree {f.degree}")
    return f.to_basis("schur").coefficient(tuple(lam))


@dataclass(frozen=True)
class SYTStat:
    shape: Partition
    des: int
    maj: int


def standard_tableaux(lam: Partition) -> Iterator[tuple[tuple[int, ...], ...]]:
    """SYT of shape lam as tuples of rows, English notation (row 0 longest)."""
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]

    def rec(k: int):
        if k > n:
            yield tuple(tuple(r) for r in rows)
            return
        for i, r in enumerate(rows):
            if len(r) < lam[i] and (i == 0 or len(rows[i - 1]) > len(r)):
                r.append(k)
                yield from rec(k + 1)
                r.pop()

    yield from rec(1)


def syt_stats(lam: Partition) -> list[SYTStat]:
    out = []
    for T in standard_tableaux(lam):
        row_of = {v: i for i, r in enumerate(T) for v in r}
        descents = [i for i in range(1, sum(lam)) if row_of[i + 1] > row_of[i]]
        out.append(SYTStat(tuple(lam), len(descents), sum(descents)))
    return out

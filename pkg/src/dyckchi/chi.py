"""Characteristic functions chi(pi, q, t) and chi_bar(pi, q, t) of Dyck paths.

``chi`` sums q^inv(pi, w) t^(#corners (i, j) with w_i <= w_j) x_w over all
words.  The sum is symmetric, so the coefficient of m_mu is computed from the
words with exactly mu_k copies of letter k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterator, Sequence

from ._core import word_histogram
from .algebra import LaurentQT
from .dyck import DyckPath, dinv_row_pairs, zeta
from .partition import (
    Partition,
    alpha_inv,
    alpha_quinv,
    partitions,
    path_inv,
    path_quinv,
)
from .symfunc import SymFunc

Word = tuple[int, ...]


@dataclass(frozen=True)
class ChiResult:
    path: DyckPath
    func: SymFunc  # monomial basis
    flavor: str  # "chi" or "chi_bar"

    def t_slice(self, k: int) -> SymFunc:
        return t_slice(self.func, k)


def _zero_based(pairs) -> list[tuple[int, int]]:
    return sorted((i - 1, j - 1) for i, j in pairs)


def equal_column_pairs(path: DyckPath) -> list[tuple[int, int]]:
    """0-based row pairs (r, r + 1) whose north steps share a column."""
    x = path.x_coords
    return [(r, r + 1) for r in range(len(x) - 1) if x[r] == x[r + 1]]


def _enumerate(n: int, qpairs, tpairs) -> SymFunc:
    coeffs = {}
    for mu in partitions(n):
        coeffs[mu] = LaurentQT(word_histogram(n, qpairs, tpairs, mu))
    return SymFunc(n, "monomial", coeffs)


@lru_cache(maxsize=4096)
def _chi(path: DyckPath) -> SymFunc:
    return _enumerate(path.semilength, _zero_based(path.area_cells), _zero_based(path.corners))


def chi(path: DyckPath) -> ChiResult:
    return ChiResult(path, _chi(path), "chi")


def chi_bar(path: DyckPath) -> ChiResult:
    return ChiResult(path, _chi(zeta(path)), "chi_bar")


@lru_cache(maxsize=4096)
def chi_bar_direct(path: DyckPath) -> ChiResult:
    """chi_bar from the dinv form: q^dinv(pi, w) t^(#equal-column rises w_r <= w_r+1)."""
    func = _enumerate(path.semilength, dinv_row_pairs(path), equal_column_pairs(path))
    return ChiResult(path, func, "chi_bar")


def t_slice(f: SymFunc, k: int) -> SymFunc:
    return f.map_coeffs(lambda c: c.t_slice(k))


def chi_slice_bottom(path: DyckPath) -> SymFunc:
    return t_slice(_chi(path), 0)


def chi_slice_top(path: DyckPath) -> SymFunc:
    return t_slice(_chi(path), len(path.corners))


def chi_bar_slice_bottom(path: DyckPath) -> SymFunc:
    return t_slice(_chi(zeta(path)), 0)


def chi_bar_slice_top(path: DyckPath) -> SymFunc:
    return t_slice(_chi(zeta(path)), len(zeta(path).corners))


def at_t_one(f: SymFunc) -> SymFunc:
    return f.map_coeffs(LaurentQT.substitute_t_one)


# -- direct sums over constrained word sets -------------------------------


def words_with_content(mu: Sequence[int]) -> list[Word]:
    letters = [k + 1 for k, m in enumerate(mu) for _ in range(m)]
    return sorted(set(permutations(letters)))


def constrained_sum(
    n: int, keep: Callable[[Word], bool], weight: Callable[[Word], int]
) -> SymFunc:
    """Sum of q^weight(w) m_mu over words w of content mu accepted by ``keep``."""
    coeffs = {}
    for mu in partitions(n):
        acc: dict[tuple[int, int], int] = {}
        for w in words_with_content(mu):
            if keep(w):
                key = (weight(w), 0)
                acc[key] = acc.get(key, 0) + 1
        coeffs[mu] = LaurentQT(acc)
    return SymFunc(n, "monomial", coeffs)


def _inv_weight(path: DyckPath) -> Callable[[Word], int]:
    cells = _zero_based(path.area_cells)
    return lambda w: sum(1 for a, b in cells if w[a] > w[b])


def _dinv_weight(path: DyckPath) -> Callable[[Word], int]:
    pairs = dinv_row_pairs(path)
    return lambda w: sum(1 for a, b in pairs if w[a] > w[b])


def in_wp_prime(path: DyckPath, w: Word, strict: bool) -> bool:
    """Corner condition: w_i > w_j (strict) or w_i <= w_j for every corner (i, j)."""
    if strict:
        return all(w[i - 1] > w[j - 1] for i, j in path.corners)
    return all(w[i - 1] <= w[j - 1] for i, j in path.corners)


def in_wp(path: DyckPath, w: Word, strict: bool) -> bool:
    """Column condition on rows sharing a column: decreasing (strict) or weakly increasing."""
    if strict:
        return all(w[a] > w[b] for a, b in equal_column_pairs(path))
    return all(w[a] <= w[b] for a, b in equal_column_pairs(path))


def wp_prime_sum(path: DyckPath, strict: bool) -> SymFunc:
    """The bottom (strict) or top t-slice of chi summed over WP' word sets."""
    return constrained_sum(
        path.semilength, lambda w: in_wp_prime(path, w, strict), _inv_weight(path)
    )


def wp_sum(path: DyckPath, strict: bool) -> SymFunc:
    """The bottom (strict) or top t-slice of chi_bar summed over WP word sets."""
    return constrained_sum(path.semilength, lambda w: in_wp(path, w, strict), _dinv_weight(path))


# -- splice maps on column words ------------------------------------------


def _is_strict_decreasing(w: Sequence[int]) -> bool:
    return all(a > b for a, b in zip(w, w[1:]))


def _is_weak_increasing(w: Sequence[int]) -> bool:
    return all(a <= b for a, b in zip(w, w[1:]))


def _splice(F, G, ok: Callable[[int, int], bool], f0: float):
    a, b = len(F), len(G)
    if not a < b:
        raise ValueError(f"splice needs len(F) < len(G), got {a} and {b}")
    f = (f0,) + tuple(F)  # 1-based with the sentinel in slot 0
    g = (None,) + tuple(G)
    m = next(j for j in range(a + 1) if ok(f[a - j], g[a - j + 1]))
    k = a - m
    return tuple(F[:k]) + tuple(G[k:]), tuple(G[:k]) + tuple(F[k:]), m


def splice_dec(F: Sequence[int], G: Sequence[int]) -> tuple[Word, Word]:
    """Splice two strictly decreasing column words, len(F) < len(G)."""
    if not (_is_strict_decreasing(F) and _is_strict_decreasing(G)):
        raise ValueError("splice_dec needs strictly decreasing words")
    F2, G2, _ = _splice(F, G, lambda x, y: x > y, float("inf"))
    return F2, G2


def splice_inc(F: Sequence[int], G: Sequence[int]) -> tuple[Word, Word]:
    """Splice two weakly increasing column words, len(F) < len(G)."""
    if not (_is_weak_increasing(F) and _is_weak_increasing(G)):
        raise ValueError("splice_inc needs weakly increasing words")
    F2, G2, _ = _splice(F, G, lambda x, y: x <= y, 0)
    return F2, G2


def splice_index(F: Sequence[int], G: Sequence[int], strict: bool) -> int:
    """The offset m selected by the splice rule."""
    if strict:
        return _splice(F, G, lambda x, y: x > y, float("inf"))[2]
    return _splice(F, G, lambda x, y: x <= y, 0)[2]


# -- q-Whittaker and modified Hall-Littlewood functions --------------------


def q_whittaker_inv(lam: Partition) -> SymFunc:
    f = chi_slice_bottom(path_inv(lam)).map_coeffs(lambda c: c.scale_monomial(-alpha_inv(lam), 0))
    return f.to_basis("schur")


def q_whittaker_quinv(lam: Partition) -> SymFunc:
    f = chi_slice_bottom(path_quinv(lam)).map_coeffs(
        lambda c: c.scale_monomial(-alpha_quinv(lam), 0)
    )
    return f.to_basis("schur")


def modified_hl_inv(lam: Partition) -> SymFunc:
    return chi_slice_top(path_inv(lam)).to_basis("schur")


def modified_hl_quinv(lam: Partition) -> SymFunc:
    return chi_slice_top(path_quinv(lam)).to_basis("schur")


def full_word_expansion(path: DyckPath, alphabet: int) -> dict[tuple[int, ...], LaurentQT]:
    """Coefficient of each monomial x^alpha, alpha an exponent vector of length ``alphabet``.

    Brute force over all ``alphabet**n`` words; used to check symmetry.
    """
    from itertools import product

    n = path.semilength
    cells = _zero_based(path.area_cells)
    corners = _zero_based(path.corners)
    acc: dict[tuple[int, ...], dict] = {}
    for w in product(range(1, alphabet + 1), repeat=n):
        alpha = tuple(w.count(k) for k in range(1, alphabet + 1))
        inv = sum(1 for a, b in cells if w[a] > w[b])
        tc = sum(1 for a, b in corners if w[a] <= w[b])
        d = acc.setdefault(alpha, {})
        d[(inv, tc)] = d.get((inv, tc), 0) + 1
    return {alpha: LaurentQT(d) for alpha, d in acc.items()}


def iter_column_words(path: DyckPath, w: Word) -> Iterator[Word]:
    """Split a row-indexed word into its column words, bottom to top."""
    x = path.x_coords
    start = 0
    for r in range(1, len(w) + 1):
        if r == len(w) or x[r] != x[r - 1]:
            yield tuple(w[start:r])
            start = r

"""Identity checks producing JSON-serializable reports.

Each ``verify_*`` function recomputes both sides of an identity from scratch
and returns a :class:`Report`; a failed equality is reported, not raised.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import chain, combinations, product
from math import factorial, prod
from typing import Any, Iterable, Sequence

from .algebra import ONE, LaurentQT, q, t
from .chi import (
    at_t_one,
    chi,
    chi_bar,
    chi_bar_direct,
    chi_bar_slice_bottom,
    chi_bar_slice_top,
    chi_slice_bottom,
    chi_slice_top,
    full_word_expansion,
    in_wp,
    iter_column_words,
    modified_hl_inv,
    modified_hl_quinv,
    q_whittaker_inv,
    q_whittaker_quinv,
    splice_dec,
    splice_inc,
    wp_prime_sum,
    wp_sum,
)
from .dyck import (
    DyckPath,
    balanced_blocks,
    dinv_stat,
    flip_corners,
    from_blocks,
    reverse,
    zeta,
    zeta_inverse,
)
from .partition import (
    Partition,
    adjacent_sort_swaps,
    alpha_inv,
    alpha_quinv,
    conjugate,
    corner_count,
    distinct_value_pairs,
    inv_pairs,
    mult_inversion_sum,
    partitions,
    path_balanced,
    path_inv,
    path_quinv,
    quinv_pairs,
    up_pairs,
)
from .symfunc import SymFunc, is_schur_positive, omega_bar, schur_coefficient, syt_stats


@dataclass
class Report:
    check: str
    instance: Any
    passed: bool
    counterexample: Any = None
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {
            "check": self.check,
            "instance": self.instance,
            "pass": self.passed,
            "counterexample": self.counterexample,
        }
        if self.details:
            out["details"] = self.details
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), default=_json_default)


def _json_default(obj):
    if isinstance(obj, (LaurentQT, SymFunc)):
        return obj.to_json()
    if isinstance(obj, DyckPath):
        return obj.steps
    raise TypeError(f"not serializable: {type(obj).__name__}")


def _diff(name: str, lhs: SymFunc, rhs: SymFunc) -> dict | None:
    """First mismatching index between two symmetric functions, or None."""
    rhs = rhs.to_basis(lhs.basis)
    if lhs == rhs:
        return None
    for lam in sorted(set(lhs.coeffs) | set(rhs.coeffs), reverse=True):
        if lhs.coefficient(lam) != rhs.coefficient(lam):
            return {
                "identity": name,
                "basis": lhs.basis,
                "index": list(lam),
                "lhs": lhs.coefficient(lam).to_json(),
                "rhs": rhs.coefficient(lam).to_json(),
            }
    return {"identity": name, "degree": [lhs.degree, rhs.degree]}


def _report(check: str, instance, failures: list, **details) -> Report:
    failures = [f for f in failures if f]
    return Report(check, instance, not failures, failures or None, details)


def _shift_q(f: SymFunc, k: int) -> SymFunc:
    return f.map_coeffs(lambda c: c.scale_monomial(k, 0))


# -- dyck / partition level ------------------------------------------------


def verify_zeta_conjugation(lam: Partition) -> Report:
    """The rev/zeta relations between the balanced, Inv and Quinv paths."""
    pi = path_balanced(lam)
    pinv, pquinv = path_inv(lam), path_quinv(lam)
    fails = []
    if reverse(zeta(pi)) != pinv:
        fails.append({"identity": "rev zeta pi_lam = pi_inv", "got": reverse(zeta(pi)).steps})
    if reverse(zeta(reverse(pi))) != pquinv:
        fails.append({"identity": "rev zeta rev pi_lam = pi_quinv"})
    chain_ = reverse(zeta(reverse(zeta_inverse(reverse(pinv)))))
    if chain_ != pquinv:
        fails.append({"identity": "rev zeta rev zeta^-1 rev pi_inv = pi_quinv", "got": chain_.steps})
    if balanced_blocks(pi) != tuple(sorted(conjugate(lam))):
        fails.append({"identity": "blocks of pi_lam", "got": balanced_blocks(pi)})
    return _report("zeta-conjugation", list(lam), fails)


def verify_area_relations(lam: Partition) -> Report:
    pinv, pquinv = path_inv(lam), path_quinv(lam)
    fails = []
    if pinv.area_cells != inv_pairs(lam):
        fails.append({"identity": "Area(pi_inv) = Inv"})
    if pquinv.area_cells != quinv_pairs(lam):
        fails.append({"identity": "Area(pi_quinv) = Quinv"})
    if pinv.corners != up_pairs(lam, "inv"):
        fails.append({"identity": "corners(pi_inv) = up_inv pairs"})
    if pquinv.corners != up_pairs(lam, "quinv"):
        fails.append({"identity": "corners(pi_quinv) = up_quinv pairs"})
    c = corner_count(lam)
    if not len(pinv.corners) == len(pquinv.corners) == c:
        fails.append({"identity": "corner count", "expected": c})
    return _report("area-relations", list(lam), fails)


def verify_alpha(lam: Partition) -> Report:
    """alpha_quinv - alpha_inv against the multiplicity sum and the sort length."""
    conj = conjugate(lam)
    diff = alpha_quinv(lam) - alpha_inv(lam)
    m = mult_inversion_sum(conj)
    pairs = distinct_value_pairs(conj)
    swaps = len(adjacent_sort_swaps(conj))
    fails = []
    if not diff == m == pairs == swaps:
        fails.append({"alpha_diff": diff, "mult_sum": m, "distinct_pairs": pairs, "swaps": swaps})
    return _report("alpha", list(lam), fails, alpha_inv=alpha_inv(lam), alpha_quinv=alpha_quinv(lam))


# -- chi level ---------------------------------------------------------------


def verify_rev_invariance(path: DyckPath) -> Report:
    return _report(
        "rev-invariance",
        path.steps,
        [_diff("chi(pi) = chi(rev pi)", chi(path).func, chi(reverse(path)).func)],
    )


def verify_chi_bar(path: DyckPath) -> Report:
    """chi(zeta(pi)) against the direct dinv-weighted sum."""
    return _report(
        "chi-bar",
        path.steps,
        [_diff("chi_bar = chi(zeta)", chi_bar_direct(path).func, chi_bar(path).func)],
    )


def verify_slices(path: DyckPath) -> Report:
    """Extreme t-slices of chi and chi_bar against the WP and WP' word sums."""
    return _report(
        "slices",
        path.steps,
        [
            _diff("chi bottom = WP'(>)", chi_slice_bottom(path), wp_prime_sum(path, True)),
            _diff("chi top = WP'(<=)", chi_slice_top(path), wp_prime_sum(path, False)),
            _diff("chi_bar bottom = WP(>)", chi_bar_slice_bottom(path), wp_sum(path, True)),
            _diff("chi_bar top = WP(<=)", chi_bar_slice_top(path), wp_sum(path, False)),
        ],
    )


def verify_symmetry(path: DyckPath, alphabet: int | None = None) -> Report:
    """Full-alphabet word expansion depends only on the sorted content."""
    n = path.semilength
    alphabet = alphabet or n
    expansion = full_word_expansion(path, alphabet)
    func = chi(path).func
    fails = []
    for alpha, coeff in sorted(expansion.items()):
        mu = tuple(sorted((a for a in alpha if a), reverse=True))
        if func.coefficient(mu) != coeff:
            fails.append({"monomial": list(alpha), "got": coeff.to_json()})
            break
    return _report("symmetry", path.steps, fails)


def verify_multinomial(path: DyckPath) -> Report:
    """chi(pi, 1, 1) = (m_1)^n: coefficient of m_mu is the multinomial n! / prod mu_i!."""
    n = path.semilength
    func = chi(path).func
    fails = []
    for mu in partitions(n):
        expected = factorial(n) // prod(factorial(p) for p in mu)
        got = func.coefficient(mu).evaluate(1, 1)
        if got != expected:
            fails.append({"index": list(mu), "expected": expected, "got": str(got)})
    return _report("multinomial", path.steps, fails)


def verify_schur_positivity(path: DyckPath) -> Report:
    ok, witness = is_schur_positive(chi(path).func)
    cex = None
    if not ok:
        lam, (a, b, c) = witness
        cex = {"index": list(lam), "monomial": {"q": a, "t": b, "c": c}}
    return Report("schur-positivity", path.steps, ok, cex)


def verify_t_degrees(lam: Partition) -> Report:
    """t-degree of chi(pi_inv) is |lam| - lam_1; the t^0 slice starts at q^alpha_inv."""
    f = chi(path_inv(lam)).func
    tdeg = max(b for _, c in f.items() for b in c.t_degrees())
    bottom = chi_slice_bottom(path_inv(lam))
    qmin = min(a for _, c in bottom.items() for a in c.q_degrees())
    fails = []
    if tdeg != corner_count(lam):
        fails.append({"t_degree": tdeg, "expected": corner_count(lam)})
    if qmin != alpha_inv(lam):
        fails.append({"min_q_degree": qmin, "expected": alpha_inv(lam)})
    return _report("t-degrees", list(lam), fails)


def verify_block_swap(blocks: Sequence[int], i: int, alphabet: int = 4) -> Report:
    """Swap blocks i and i + 1 (1-based) of a balanced path, requiring blocks[i] < blocks[i+1].

    Compares the extreme t-slices of chi_bar before and after, and checks that
    the strict and weak splice maps send WP word sets onto each other with a
    per-word dinv change of exactly +1 and 0 respectively.
    """
    blocks = tuple(blocks)
    if any(b < 1 for b in blocks):
        raise ValueError("block lengths must be positive")
    if not 1 <= i < len(blocks):
        raise ValueError(f"index {i} out of range for {len(blocks)} blocks")
    if not blocks[i - 1] < blocks[i]:
        raise ValueError(f"need blocks[{i}] < blocks[{i + 1}], got {blocks[i - 1]}, {blocks[i]}")
    swapped = blocks[: i - 1] + (blocks[i], blocks[i - 1]) + blocks[i + 1 :]
    pi, pi2 = from_blocks(blocks), from_blocks(swapped)
    fails = [
        _diff("chi_bar(pi', q, 0) = q chi_bar(pi, q, 0)",
              chi_bar_slice_bottom(pi2), _shift_q(chi_bar_slice_bottom(pi), 1)),
        _diff("chi_bar top slices equal", chi_bar_slice_top(pi2), chi_bar_slice_top(pi)),
    ]
    for strict in (True, False):
        fails.append(_check_splice_words(pi, pi2, i, strict, alphabet))
    return _report("block-swap", {"blocks": list(blocks), "i": i}, fails)


def _check_splice_words(pi: DyckPath, pi2: DyckPath, i: int, strict: bool, alphabet: int):
    splice = splice_dec if strict else splice_inc
    expected_delta = 1 if strict else 0
    n = pi.semilength
    domain = [w for w in product(range(1, alphabet + 1), repeat=n) if in_wp(pi, w, strict)]
    target = {w for w in product(range(1, alphabet + 1), repeat=n) if in_wp(pi2, w, strict)}
    images = set()
    for w in domain:
        cols = list(iter_column_words(pi, w))
        F, G = splice(cols[i - 1], cols[i])
        cols[i - 1], cols[i] = F, G
        w2 = tuple(chain.from_iterable(cols))
        if w2 not in target:
            return {"identity": "splice lands in WP", "strict": strict, "word": list(w)}
        delta = dinv_stat(pi2, w2) - dinv_stat(pi, w)
        if delta != expected_delta:
            return {"identity": "splice dinv delta", "strict": strict, "word": list(w), "delta": delta}
        images.add(w2)
    if len(images) != len(domain) or images != target:
        return {"identity": "splice is a bijection", "strict": strict,
                "domain": len(domain), "image": len(images), "target": len(target)}
    return None


def verify_main_theorem(lam: Partition) -> Report:
    """Inv and Quinv formulas agree, with every intermediate step recomputed."""
    lam = tuple(lam)
    pinv, pquinv = path_inv(lam), path_quinv(lam)
    fails = [
        _diff("q-Whittaker: Inv = Quinv", q_whittaker_inv(lam), q_whittaker_quinv(lam)),
        _diff("modified Hall-Littlewood: Inv = Quinv", modified_hl_inv(lam), modified_hl_quinv(lam)),
        _diff("chi(pi_inv) = chi(rev pi_inv)", chi(pinv).func, chi(reverse(pinv)).func),
    ]
    # rev zeta^-1 rev(pi_inv) is pi_lam with its blocks in decreasing order
    start = zeta_inverse(reverse(pinv))
    if start != path_balanced(lam):
        fails.append({"identity": "zeta^-1 rev pi_inv = pi_lam", "got": start.steps})
    blocks = list(balanced_blocks(start) or ())
    shift = 0
    bottom, top = chi_bar_slice_bottom(start), chi_bar_slice_top(start)
    for i in adjacent_sort_swaps(blocks, descending=True):
        blocks[i], blocks[i + 1] = blocks[i + 1], blocks[i]
        nxt = from_blocks(blocks)
        nb, nt = chi_bar_slice_bottom(nxt), chi_bar_slice_top(nxt)
        fails.append(_diff(f"swap at {i + 1}: bottom gains q", nb, _shift_q(bottom, 1)))
        fails.append(_diff(f"swap at {i + 1}: top unchanged", nt, top))
        bottom, top, shift = nb, nt, shift + 1
    end = from_blocks(blocks)
    if reverse(zeta_inverse(reverse(pinv))) != end:
        fails.append({"identity": "rev zeta^-1 rev pi_inv = sorted blocks"})
    expected_shift = mult_inversion_sum(conjugate(lam))
    if shift != expected_shift or alpha_quinv(lam) - alpha_inv(lam) != expected_shift:
        fails.append({"identity": "q-shift bookkeeping", "shift": shift,
                      "mult_sum": expected_shift, "alpha_diff": alpha_quinv(lam) - alpha_inv(lam)})
    fails.append(_diff("chi(pi_quinv, q, 0) = q^shift chi(pi_inv, q, 0)",
                       chi_slice_bottom(pquinv), _shift_q(chi_slice_bottom(pinv), shift)))
    return _report("main-theorem", list(lam), fails, q_shift=shift)


def _subsets(items: Iterable) -> Iterable[tuple]:
    items = sorted(items)
    return chain.from_iterable(combinations(items, k) for k in range(len(items) + 1))


def verify_corner_flip(path: DyckPath) -> Report:
    """(q-1)^c chi(pi) = sum_S (qt-1)^(c-|S|) (1-t)^|S| chi(pi_S, q, 1), c = #corners."""
    c = len(path.corners)
    lhs = chi(path).func.scale((q - ONE) ** c)
    rhs = SymFunc(path.semilength, "monomial")
    for S in _subsets(path.corners):
        weight = (q * t - ONE) ** (c - len(S)) * (ONE - t) ** len(S)
        rhs = rhs + at_t_one(chi(flip_corners(path, S)).func).scale(weight)
    return _report("corner-flip", path.steps, [_diff("corner-flip expansion", lhs, rhs)])


def verify_omega_bar(path: DyckPath) -> Report:
    n = path.semilength
    f = chi(path).func.to_basis("schur")
    sign = -1 if n % 2 else 1
    expected = f.map_coeffs(
        lambda c: c.scale_monomial(-len(path.area_cells), -len(path.corners)) * sign
    )
    return _report("omega-bar", path.steps, [_diff("omega_bar chi", omega_bar(f), expected)])


def syt_generating(n: int, stat: str) -> SymFunc:
    """sum_lam s_lam sum_T q^maj(T) (stat="maj") or t^(n-1-des(T)) (stat="codes")."""
    coeffs = {}
    for lam in partitions(n):
        acc = LaurentQT()
        for s in syt_stats(lam):
            if stat == "maj":
                acc = acc + LaurentQT.monomial(s.maj, 0)
            else:
                acc = acc + LaurentQT.monomial(0, n - 1 - s.des)
        coeffs[lam] = acc
    return SymFunc(n, "schur", coeffs)


def verify_closed_forms(n: int, paths: Iterable[DyckPath] | None = None) -> Report:
    """The (NE)^n and N^n E^n expansions, and the (n) and (1^n) Schur coefficients."""
    from .dyck import all_paths

    if n < 1:
        raise ValueError("n must be at least 1")
    fails = [
        _diff("chi((NE)^n) via des", chi(DyckPath("NE" * n)).func, syt_generating(n, "codes")),
        _diff("chi(N^nE^n) via maj", chi(DyckPath("N" * n + "E" * n)).func, syt_generating(n, "maj")),
    ]
    row, col = (n,), (1,) * n
    for p in paths if paths is not None else all_paths(n):
        f = chi(p).func
        if schur_coefficient(f, row) != LaurentQT.monomial(0, len(p.corners)):
            fails.append({"identity": "<chi, s_(n)> = t^#c", "path": p.steps})
        if schur_coefficient(f, col) != LaurentQT.monomial(len(p.area_cells), 0):
            fails.append({"identity": "<chi, s_(1^n)> = q^#Area", "path": p.steps})
    return _report("closed-forms", n, fails)

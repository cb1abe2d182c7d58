"""Integer partitions, reading orders and attack relations, partition-indexed paths.

Partitions are plain tuples of weakly decreasing positive integers.

Two row orders are in play.  ``arm_leg_coleg`` uses the usual French diagram
with row 1 holding the largest part.  The inversion and quinversion reading
orders start from the shortest row and move towards the longest one, and a box
attacks into the next row in that order.  With this convention the attack
pairs coincide with the area cells of the corresponding paths.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable, Iterator

from .dyck import DyckPath

Partition = tuple[int, ...]
Box = tuple[int, int]


def partition(parts: Iterable[int]) -> Partition:
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"parts must be positive: {parts}")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return ()
    try:
        return partition(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"not a partition: {text!r} ({exc})") from None


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order, (n) first."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0]))


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


def boxes(lam: Partition) -> list[Box]:
    """(row, col) pairs, row 1 holding the largest part."""
    return [(r, c) for r, part in enumerate(lam, 1) for c in range(1, part + 1)]


def arm_leg_coleg(lam: Partition, box: Box) -> tuple[int, int, int]:
    r, c = box
    if not (1 <= r <= len(lam) and 1 <= c <= lam[r - 1]):
        raise ValueError(f"box {box} is outside {lam}")
    arm = lam[r - 1] - c
    leg = sum(1 for part in lam[r:] if part >= c)
    return arm, leg, r - 1


def _reading_rows(lam: Partition) -> list[int]:
    return list(reversed(lam))


def reading_order(lam: Partition, kind: str) -> dict[Box, int]:
    """Label of each box ``(k, c)``; k indexes rows from the shortest one."""
    if kind not in ("inv", "quinv"):
        raise ValueError(f"unknown reading order {kind!r}")
    labels, nxt = {}, 1
    for k, length in enumerate(_reading_rows(lam), 1):
        cols = range(1, length + 1) if kind == "inv" else range(length, 0, -1)
        for c in cols:
            labels[(k, c)] = nxt
            nxt += 1
    return labels


def _attacks(lam: Partition, kind: str) -> set[tuple[int, int]]:
    labels = reading_order(lam, kind)
    out = set()
    for (k, c), i in labels.items():
        for (k2, c2), j in labels.items():
            if kind == "inv":
                hit = (k2 == k and c2 > c) or (k2 == k + 1 and c2 < c)
            else:
                hit = (k2 == k and c2 < c) or (k2 == k + 1 and c2 > c)
            if hit:
                out.add((i, j))
    return out


def inv_pairs(lam: Partition) -> frozenset[tuple[int, int]]:
    return frozenset(_attacks(lam, "inv"))


def quinv_pairs(lam: Partition) -> frozenset[tuple[int, int]]:
    return frozenset(_attacks(lam, "quinv"))


def up_pairs(lam: Partition, kind: str) -> frozenset[tuple[int, int]]:
    """Pairs (i, up(i)): the box labelled up(i) sits directly above box i."""
    labels = reading_order(lam, kind)
    return frozenset(
        (i, labels[(k + 1, c)]) for (k, c), i in labels.items() if (k + 1, c) in labels
    )


def path_inv(lam: Partition) -> DyckPath:
    if not lam:
        return DyckPath("")
    ell = len(lam)
    parts = [lam[ell - 1]]
    for k in range(ell, 1, -1):  # k is the 1-based index into lam
        parts.append("EN" * lam[k - 1] + "N" * (lam[k - 2] - lam[k - 1]))
    parts.append("E" * lam[0])
    return DyckPath("N" * parts[0] + "".join(parts[1:]))


def path_quinv(lam: Partition) -> DyckPath:
    if not lam:
        return DyckPath("")
    ell = len(lam)
    steps = "N" * lam[ell - 1]
    for k in range(ell, 1, -1):
        steps += "N" * (lam[k - 2] - lam[k - 1]) + "EN" * lam[k - 1]
    return DyckPath(steps + "E" * lam[0])


def path_balanced(lam: Partition) -> DyckPath:
    """Blocks N^c E^c for the columns of lam, shortest column first."""
    return DyckPath("".join("N" * c + "E" * c for c in reversed(conjugate(lam))))


def alpha_inv(lam: Partition) -> int:
    return sum(arm for arm, _, coleg in (arm_leg_coleg(lam, b) for b in boxes(lam)) if coleg)


def alpha_quinv(lam: Partition) -> int:
    return sum(arm for arm, leg, _ in (arm_leg_coleg(lam, b) for b in boxes(lam)) if leg)


def mult_inversion_sum(lam: Partition) -> int:
    """Sum over i > j of m_i(lam) * m_j(lam)."""
    m = multiplicities(lam)
    return sum(m[i] * m[j] for i in m for j in m if i > j)


def distinct_value_pairs(seq: Iterable[int]) -> int:
    seq = list(seq)
    return sum(1 for a, b in combinations(seq, 2) if a != b)


def adjacent_sort_swaps(seq: Iterable[int], descending: bool = False) -> list[int]:
    """Bubble sort ``seq``; return the left index of every adjacent swap made."""
    seq = list(seq)
    swaps = []
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            out_of_order = seq[i] < seq[i + 1] if descending else seq[i] > seq[i + 1]
            if out_of_order:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                swaps.append(i)
                changed = True
    return swaps


def corner_count(lam: Partition) -> int:
    return sum(lam) - lam[0] if lam else 0


def dominates(lam: Partition, mu: Partition) -> bool:
    """lam >= mu in dominance order (equal sizes assumed)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True

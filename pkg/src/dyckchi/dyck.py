"""Dyck paths, their cell statistics, the reversal and zeta maps, word statistics.

Cells use 1-based north-east-corner coordinates ``(x, y)``; a cell above the
diagonal has ``y > x``.  The i-th north step sits in row i.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

Cell = tuple[int, int]


class PathError(ValueError):
    """Malformed path text or step sequence."""


class IllegalCharacterError(PathError):
    pass


class UnbalancedPathError(PathError):
    pass


class NotDyckError(PathError):
    """Some prefix has more east steps than north steps."""


@dataclass(frozen=True)
class DyckPath:
    steps: str

    def __post_init__(self):
        bad = set(self.steps) - {"N", "E"}
        if bad:
            raise IllegalCharacterError(f"illegal step characters: {sorted(bad)}")
        height = 0
        for pos, s in enumerate(self.steps):
            height += 1 if s == "N" else -1
            if height < 0:
                raise NotDyckError(f"prefix of length {pos + 1} dips below the diagonal")
        if height != 0:
            raise UnbalancedPathError(
                f"{self.steps.count('N')} north steps vs {self.steps.count('E')} east steps"
            )

    @property
    def semilength(self) -> int:
        return len(self.steps) // 2

    def __str__(self) -> str:
        return self.steps

    def __repr__(self) -> str:
        return f"DyckPath({self.steps!r})"

    @cached_property
    def x_coords(self) -> tuple[int, ...]:
        out, east = [], 0
        for s in self.steps:
            if s == "N":
                out.append(east + 1)
            else:
                east += 1
        return tuple(out)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Number of north steps preceding each east step."""
        out, north = [], 0
        for s in self.steps:
            if s == "N":
                north += 1
            else:
                out.append(north)
        return tuple(out)

    @cached_property
    def area_cells(self) -> frozenset[Cell]:
        return frozenset(
            (i, j) for i, h in enumerate(self.heights, 1) for j in range(i + 1, h + 1)
        )

    @cached_property
    def corners(self) -> frozenset[Cell]:
        out, north, east = [], 0, 0
        for a, b in zip(self.steps, self.steps[1:]):
            if a == "E" and b == "N":
                out.append((east + 1, north + 1))
            if a == "N":
                north += 1
            else:
                east += 1
        return frozenset(out)

    @cached_property
    def diagonals(self) -> tuple[int, ...]:
        """Diagonal index y - x of the box right of each north step."""
        return tuple(r - x for r, x in enumerate(self.x_coords, 1))

    def to_bits(self) -> str:
        return self.steps.replace("N", "1").replace("E", "0")


def parse_path(text: str) -> DyckPath:
    """Parse a step word over ``NE`` or ``10`` (1 = N, 0 = E)."""
    text = text.strip()
    if text and set(text) <= {"0", "1"}:
        text = text.replace("1", "N").replace("0", "E")
    return DyckPath(text.upper() if set(text) <= set("neNE") else text)


def from_steps(steps: Iterable) -> DyckPath:
    """Build a path from a sequence of 1/0 or "N"/"E" items."""
    return DyckPath("".join("N" if s in (1, "1", "N") else "E" for s in steps))


def all_paths(n: int) -> Iterator[DyckPath]:
    """All Dyck paths of semilength n, in lexicographic order with N < E."""

    def rec(prefix: list[str], north: int, east: int):
        if north == n and east == n:
            yield DyckPath("".join(prefix))
            return
        if north < n:
            prefix.append("N")
            yield from rec(prefix, north + 1, east)
            prefix.pop()
        if east < north:
            prefix.append("E")
            yield from rec(prefix, north, east + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def area_cells(path: DyckPath) -> frozenset[Cell]:
    return path.area_cells


def corners(path: DyckPath) -> frozenset[Cell]:
    return path.corners


def x_coords(path: DyckPath) -> tuple[int, ...]:
    return path.x_coords


def path_from_area(cells: Iterable[Cell], n: int) -> DyckPath:
    """Inverse of ``area_cells``; raises ValueError if the cells are not an area set."""
    cells = frozenset(cells)
    heights = [i for i in range(1, n + 1)]
    for i, j in cells:
        if not (1 <= i < j <= n):
            raise ValueError(f"cell {(i, j)} is not above the diagonal of an {n}x{n} grid")
        heights[i - 1] = max(heights[i - 1], j)
    steps, north = [], 0
    for h in heights:
        if h < north:
            raise ValueError("cells do not form the area of a Dyck path")
        steps.append("N" * (h - north) + "E")
        north = h
    path = DyckPath("".join(steps))
    if path.area_cells != cells:
        raise ValueError("cells do not form the area of a Dyck path")
    return path


def reverse(path: DyckPath) -> DyckPath:
    return DyckPath("".join("N" if s == "E" else "E" for s in reversed(path.steps)))


@dataclass(frozen=True)
class ReadingLabels:
    label_of_row: tuple[int, ...]  # label_of_row[r - 1] is the label of row r
    sigma: tuple[int, ...]

    def row_of_label(self, label: int) -> int:
        return self.label_of_row.index(label) + 1


def reading_labels(path: DyckPath) -> ReadingLabels:
    # lowest diagonal first, left to right within a diagonal
    order = sorted(range(path.semilength), key=lambda r: (path.diagonals[r], path.x_coords[r]))
    labels = [0] * path.semilength
    for label, r in enumerate(order, 1):
        labels[r] = label
    # columns are read left to right, bottom to top, which is row order
    return ReadingLabels(tuple(labels), tuple(labels))


def dinv_pairs(path: DyckPath) -> frozenset[tuple[int, int]]:
    """Ordered label pairs (i, j) with box i dinv-attacking box j."""
    labels = reading_labels(path).label_of_row
    d, x = path.diagonals, path.x_coords
    out = set()
    n = path.semilength
    for a in range(n):
        for b in range(n):
            if a == b:
                continue
            i, j = labels[a], labels[b]
            if d[a] == d[b] and i < j:
                out.add((i, j))
            elif d[b] == d[a] + 1 and x[b] < x[a]:
                out.add((i, j))
    return frozenset(out)


@lru_cache(maxsize=8192)
def dinv_row_pairs(path: DyckPath) -> tuple[tuple[int, int], ...]:
    """Dinv-attack pairs expressed as 0-based row indices (attacker, attacked)."""
    row = {label: r for r, label in enumerate(reading_labels(path).label_of_row)}
    return tuple(sorted((row[i], row[j]) for i, j in dinv_pairs(path)))


@lru_cache(maxsize=8192)
def zeta(path: DyckPath) -> DyckPath:
    return path_from_area(dinv_pairs(path), path.semilength)


_zeta_inverse_tables: dict[int, dict[DyckPath, DyckPath]] = {}
_zeta_lock = threading.Lock()


def _zeta_table(n: int) -> dict[DyckPath, DyckPath]:
    table = _zeta_inverse_tables.get(n)
    if table is None:
        with _zeta_lock:
            table = _zeta_inverse_tables.get(n)
            if table is None:
                table = {}
                for p in all_paths(n):
                    image = zeta(p)
                    if image in table:
                        raise AssertionError(f"zeta is not injective: {p} and {table[image]}")
                    table[image] = p
                _zeta_inverse_tables[n] = table
    return table


def zeta_inverse(path: DyckPath) -> DyckPath:
    """Inverse of zeta, looked up in a per-semilength tabulation of zeta."""
    return _zeta_table(path.semilength)[path]


def _check_word(path: DyckPath, w: Sequence[int]) -> None:
    if len(w) != path.semilength:
        raise ValueError(f"word of length {len(w)} for a path of semilength {path.semilength}")
    if any(a < 1 for a in w):
        raise ValueError("word letters must be positive")


def inv_stat(path: DyckPath, w: Sequence[int]) -> int:
    _check_word(path, w)
    return sum(1 for i, j in path.area_cells if w[i - 1] > w[j - 1])


def dinv_stat(path: DyckPath, w: Sequence[int]) -> int:
    """Dinv of a word indexed by rows of the path."""
    _check_word(path, w)
    return sum(1 for a, b in dinv_row_pairs(path) if w[a] > w[b])


def compose_inverse(w: Sequence[int], sigma: Sequence[int]) -> tuple[int, ...]:
    """The word ``w o sigma^-1``: position ``sigma[r]`` receives ``w[r]``."""
    out = [0] * len(w)
    for r, s in enumerate(sigma):
        out[s - 1] = w[r]
    return tuple(out)


def flip_corners(path: DyckPath, subset: Iterable[Cell]) -> DyckPath:
    subset = set(subset)
    extra = subset - path.corners
    if extra:
        raise ValueError(f"not corners of {path}: {sorted(extra)}")
    orig, steps = path.steps, list(path.steps)
    east = 0
    for pos in range(len(orig) - 1):
        if orig[pos] == "E":
            east += 1
            if orig[pos + 1] == "N":
                north = pos + 1 - east + 1  # north steps before pos + 1, plus one
                if (east, north) in subset:
                    steps[pos], steps[pos + 1] = "N", "E"
    return DyckPath("".join(steps))


def balanced_blocks(path: DyckPath) -> tuple[int, ...] | None:
    """Block lengths if the path is a product of N^l E^l factors, else None."""
    blocks = []
    s, pos = path.steps, 0
    while pos < len(s):
        k = 0
        while pos + k < len(s) and s[pos + k] == "N":
            k += 1
        if s[pos + k : pos + 2 * k] != "E" * k:
            return None
        blocks.append(k)
        pos += 2 * k
    return tuple(blocks)


def from_blocks(blocks: Iterable[int]) -> DyckPath:
    return DyckPath("".join("N" * k + "E" * k for k in blocks))


def cells_json(cells: Iterable[Cell]) -> list[list[int]]:
    return [list(c) for c in sorted(cells)]

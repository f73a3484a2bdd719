"""Alternating sign matrices, monotone triangles, triangle diagonals and TSSCPPs.

These are the other families counted by the same product formula as
DPPs; the module exists to cross-check counts and to expose their
Catalan subsets (diagonal sequences of monotone and magog triangles).
"""
from __future__ import annotations

from itertools import permutations
from typing import Iterator, NamedTuple, Sequence

import numpy as np

DEFAULT_MAX_ASM_ORDER = 6
DEFAULT_MAX_TSSCPP_ORDER = 3


class OrderTooLarge(ValueError):
    pass


class InvalidAsm(ValueError):
    kind = "InvalidAsm"

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        self.row, self.column = row, column
        where = ""
        if row is not None or column is not None:
            where = " at " + ", ".join(
                f"{name} {v}" for name, v in (("row", row), ("column", column)) if v is not None)
        super().__init__(f"{self.kind}{where}: {message}")


class NotSquare(InvalidAsm):
    kind = "NotSquare"


class BadEntry(InvalidAsm):
    kind = "BadEntry"


class SignAlternation(InvalidAsm):
    kind = "SignAlternation"


class RowSum(InvalidAsm):
    kind = "RowSum"


class ColSum(InvalidAsm):
    kind = "ColSum"


class InvalidMonotoneTriangle(ValueError):
    pass


class InvalidTsscpp(ValueError):
    kind = "InvalidTsscpp"

    def __init__(self, message: str):
        super().__init__(f"{self.kind}: {message}")


class NotPlanePartition(InvalidTsscpp):
    kind = "NotPlanePartition"


class NotTotallySymmetric(InvalidTsscpp):
    kind = "NotTotallySymmetric"


class NotSelfComplementary(InvalidTsscpp):
    kind = "NotSelfComplementary"


class Asm(NamedTuple):
    entries: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_json(self) -> dict:
        return {"entries": [list(r) for r in self.entries]}

    def __str__(self) -> str:
        return format_matrix(self.entries)


class MonotoneTriangle(NamedTuple):
    rows: tuple[tuple[int, ...], ...]  # apex first; row i has i entries

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows]}

    def __str__(self) -> str:
        n = len(self.rows)
        width = max((len(str(x)) for r in self.rows for x in r), default=1)
        lines = []
        for i, r in enumerate(self.rows):
            pad = " " * ((width + 1) // 2 * (n - 1 - i))
            lines.append(pad + " ".join(str(x).rjust(width) for x in r))
        return "\n".join(lines)


class DiagonalSequence(NamedTuple):
    values: tuple[int, ...]
    flavor: str  # "monotone" or "magog"

    def to_json(self) -> dict:
        return {"values": list(self.values), "flavor": self.flavor}

    def __str__(self) -> str:
        return " ".join(map(str, self.values))


class TsscppBox(NamedTuple):
    heights: tuple[tuple[int, ...], ...]  # 2n x 2n
    n: int

    def to_json(self) -> dict:
        return {"heights": [list(r) for r in self.heights], "n": self.n}

    def __str__(self) -> str:
        return format_matrix(self.heights)


def format_matrix(rows: Sequence[Sequence[int]]) -> str:
    """Right-aligned columns; ``-1`` fits a two-character cell."""
    if not rows:
        return "()"
    width = max(2, max(len(str(x)) for r in rows for x in r))
    return "\n".join(" ".join(str(x).rjust(width) for x in r) for r in rows)


# -- ASMs -------------------------------------------------------------------

def _check_line(line: Sequence[int], err_alt, err_sum, **where) -> None:
    last = -1
    for x in line:
        if x:
            if x == last:
                raise err_alt("nonzero entries do not alternate in sign", **where)
            last = x
    if sum(line) != 1:
        raise err_sum(f"sum is {sum(line)}", **where)


def validate_asm(matrix) -> Asm:
    """Validate a square {-1, 0, 1} matrix. Entries are checked first, then
    rows top to bottom, then columns left to right; on each line sign
    alternation (starting from +1) is checked before the sum."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    for i, r in enumerate(rows, start=1):
        if len(r) != n:
            raise NotSquare(f"row has {len(r)} entries, expected {n}", row=i)
    for i, r in enumerate(rows, start=1):
        for j, x in enumerate(r, start=1):
            if x not in (-1, 0, 1):
                raise BadEntry(f"entry {x!r}", row=i, column=j)
    entries = tuple(tuple(int(x) for x in r) for r in rows)
    for i, r in enumerate(entries, start=1):
        _check_line(r, SignAlternation, RowSum, row=i)
    for j in range(n):
        _check_line([r[j] for r in entries], SignAlternation, ColSum, column=j + 1)
    return Asm(entries)


def validate_monotone_triangle(rows: Sequence[Sequence[int]]) -> MonotoneTriangle:
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    n = len(rows)
    for i, r in enumerate(rows, start=1):
        if len(r) != i:
            raise InvalidMonotoneTriangle(f"row {i} has {len(r)} entries")
        if any(x >= y for x, y in zip(r, r[1:])):
            raise InvalidMonotoneTriangle(f"row {i} is not strictly increasing")
    if n and rows[-1] != tuple(range(1, n + 1)):
        raise InvalidMonotoneTriangle("bottom row must be 1..n")
    for i in range(n - 1):
        upper, lower = rows[i], rows[i + 1]
        for j, x in enumerate(upper):
            if not lower[j] <= x <= lower[j + 1]:
                raise InvalidMonotoneTriangle(f"row {i + 1} entry {j + 1} breaks interlacing")
    return MonotoneTriangle(rows)


def asm_to_monotone(a: Asm) -> MonotoneTriangle:
    """Row ``i`` lists the columns whose sum over the first ``i`` ASM rows is 1."""
    partial = np.cumsum(np.asarray(a.entries, dtype=np.int64).reshape(a.n, a.n), axis=0)
    return MonotoneTriangle(tuple(
        tuple(int(j) + 1 for j in np.flatnonzero(row == 1)) for row in partial))


def monotone_to_asm(t: MonotoneTriangle) -> Asm:
    n = len(t.rows)
    ind = np.zeros((n + 1, n), dtype=np.int64)
    for i, r in enumerate(t.rows, start=1):
        ind[i, [x - 1 for x in r]] = 1
    return Asm(tuple(tuple(int(x) for x in row) for row in np.diff(ind, axis=0)))


def enumerate_monotone_triangles(n: int) -> Iterator[MonotoneTriangle]:
    """Monotone triangles with bottom row 1..n, built upward by interlacing.

    Each row above is chosen in lexicographic order, nearest-to-bottom row
    varying slowest.
    """
    if n == 0:
        yield MonotoneTriangle(())
        return

    def rows_above(lower: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        k = len(lower) - 1

        def pick(j: int, prev: int, acc: tuple[int, ...]):
            if j == k:
                yield acc
                return
            for x in range(max(lower[j], prev + 1), lower[j + 1] + 1):
                yield from pick(j + 1, x, acc + (x,))

        yield from pick(0, 0, ())

    def build(stack: tuple[tuple[int, ...], ...]):
        if len(stack[0]) == 1:
            yield MonotoneTriangle(stack)
            return
        for r in rows_above(stack[0]):
            yield from build((r,) + stack)

    yield from build((tuple(range(1, n + 1)),))


def enumerate_asms(n: int, max_order: int | None = None) -> Iterator[Asm]:
    cap = DEFAULT_MAX_ASM_ORDER if max_order is None else max_order
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > cap:
        raise OrderTooLarge(f"ASM order {n} exceeds cap {cap}")
    for t in enumerate_monotone_triangles(n):
        yield monotone_to_asm(t)


def nw_se_diagonal(t: MonotoneTriangle) -> tuple[int, ...]:
    """The length-n diagonal running from the apex down the right edge."""
    return tuple(r[-1] for r in t.rows)


# -- diagonal sequences -----------------------------------------------------

FLAVORS = ("monotone", "magog")


def is_diagonal(values: Sequence[int], n: int, flavor: str) -> bool:
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}")
    if len(values) != n or any(not i <= x <= n for i, x in enumerate(values, start=1)):
        return False
    if flavor == "monotone":
        return all(x <= y for x, y in zip(values, values[1:]))
    return all(y <= x + 1 for x, y in zip(values, values[1:]))


def enumerate_diagonals(n: int, flavor: str) -> Iterator[DiagonalSequence]:
    """Sequences ``x_1..x_n`` with ``i <= x_i <= n`` plus the flavor's
    step condition, lexicographic."""
    if flavor not in FLAVORS:
        raise ValueError(f"flavor must be one of {FLAVORS}")

    def grow(i: int, acc: tuple[int, ...]):
        if i > n:
            yield DiagonalSequence(acc, flavor)
            return
        lo, hi = i, n
        if acc:
            if flavor == "monotone":
                lo = max(lo, acc[-1])
            else:
                hi = min(hi, acc[-1] + 1)
        for x in range(lo, hi + 1):
            yield from grow(i + 1, acc + (x,))

    yield from grow(1, ())


# -- TSSCPPs ----------------------------------------------------------------

def pad_heights(rows: Sequence[Sequence[int]], size: int) -> tuple[tuple[int, ...], ...]:
    """Zero-pad a ragged height array (trailing zeros omitted) to ``size x size``."""
    if len(rows) > size or any(len(r) > size for r in rows):
        raise NotPlanePartition(f"array does not fit in a {size}x{size} grid")
    out = [tuple(r) + (0,) * (size - len(r)) for r in rows]
    out += [(0,) * size] * (size - len(rows))
    return tuple(out)


def _cells(h: np.ndarray, size: int) -> np.ndarray:
    """Boolean cube: ``cube[i, j, k]`` is True when cell (i, j, k) is filled."""
    return np.arange(size)[None, None, :] < h[:, :, None]


def validate_tsscpp(heights, n: int) -> TsscppBox:
    size = 2 * n
    rows = [list(r) for r in heights]
    if len(rows) != size or any(len(r) != size for r in rows):
        raise NotPlanePartition(f"expected a {size}x{size} height array")
    h = np.asarray(rows, dtype=np.int64).reshape(size, size)
    if h.size and (h.min() < 0 or h.max() > size):
        raise NotPlanePartition(f"heights must lie in [0, {size}]")
    if (np.diff(h, axis=0) > 0).any() or (np.diff(h, axis=1) > 0).any():
        raise NotPlanePartition("heights must weakly decrease along rows and columns")
    cube = _cells(h, size)
    for perm in permutations(range(3)):
        if not np.array_equal(cube, cube.transpose(perm)):
            raise NotTotallySymmetric(f"cell set changes under axis permutation {perm}")
    if not np.array_equal(cube, ~cube[::-1, ::-1, ::-1]):
        raise NotSelfComplementary("cell set differs from its complement in the box")
    return TsscppBox(tuple(tuple(int(x) for x in r) for r in h), n)


def _self_conjugate_rows(size: int) -> list[tuple[int, ...]]:
    """Weakly decreasing rows of length ``size`` with entries in [0, size] that
    are self-conjugate as partitions: ``row[j] > k`` iff ``row[k] > j``."""
    out = []

    def grow(acc: tuple[int, ...]):
        if len(acc) == size:
            if all((acc[j] > k) == (acc[k] > j) for j in range(size) for k in range(size)):
                out.append(acc)
            return
        for v in range(acc[-1] if acc else size, -1, -1):
            grow(acc + (v,))

    grow(())
    return out


def enumerate_tsscpps(n: int, max_order: int | None = None) -> Iterator[TsscppBox]:
    """TSSCPPs in the ``2n`` box, by backtracking over rows of the height array.

    For a symmetric height array, invariance under all six axis
    permutations is the same as every row being a self-conjugate
    partition, so rows are drawn from that list. Only the top ``n`` rows
    are chosen; complementarity ``h[i][j] + h[2n-1-i][2n-1-j] = 2n`` fixes
    the rest. Each candidate is then run through :func:`validate_tsscpp`.
    Candidates come out with the top row largest first (reverse lexicographic).
    """
    cap = DEFAULT_MAX_TSSCPP_ORDER if max_order is None else max_order
    if n < 0:
        raise ValueError("order must be nonnegative")
    if n > cap:
        raise OrderTooLarge(f"TSSCPP order {n} exceeds cap {cap}")
    size = 2 * n
    candidates = sorted(_self_conjugate_rows(size), reverse=True)

    def grow(top: tuple[tuple[int, ...], ...]):
        i = len(top)
        if i == n:
            bottom = tuple(tuple(size - x for x in reversed(r)) for r in reversed(top))
            try:
                yield validate_tsscpp(top + bottom, n)
            except InvalidTsscpp:
                pass
            return
        for r in candidates:
            if i and any(x > y for x, y in zip(r, top[-1])):
                continue
            if any(r[j] != top[j][i] for j in range(i)):
                continue
            yield from grow(top + (r,))

    yield from grow(())

"""Descending plane partitions: validation, enumeration and counting.

A DPP is stored as a tuple of rows. Row ``k`` (1-indexed) starts in
column ``k`` of the shifted layout, so ``rows[k-1][i]`` is the entry
``a[k, k+i]``. The order ``n`` is an upper bound on the parts, not the
largest part actually present.

Canonical order
---------------
Each row gets the key ``(first part, length, row reversed)``; a DPP is
keyed by the tuple of its row keys, compared lexicographically with a
proper prefix first. In words: smaller greatest part first, then
shorter rows, then rows compared from their last entry backwards, and a
DPP comes immediately before all DPPs extending it by further rows.
Because the greatest part leads the key, the stream for order ``n-1`` is
a prefix of the stream for order ``n``.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple, Sequence

from .qpoly import NonExactDivision, QPolynomial, product, q_factorial

EMPTY_SYMBOL = "∅"

#: default largest order for which full enumeration is allowed
DEFAULT_MAX_ORDER = 8


class InvalidDpp(ValueError):
    """Base class for validation failures; carries the 1-indexed location."""

    kind = "InvalidDpp"

    def __init__(self, message: str, row: int | None = None, column: int | None = None):
        self.row = row
        self.column = column
        where = ""
        if row is not None:
            where = f" at row {row}" + (f", column {column}" if column is not None else "")
        super().__init__(f"{self.kind}{where}: {message}")


class RaggedShape(InvalidDpp):
    kind = "RaggedShape"


class NonPositivePart(InvalidDpp):
    kind = "NonPositivePart"


class PartExceedsOrder(InvalidDpp):
    kind = "PartExceedsOrder"


class RowNotWeaklyDecreasing(InvalidDpp):
    kind = "RowNotWeaklyDecreasing"


class ColumnNotStrictlyDecreasing(InvalidDpp):
    kind = "ColumnNotStrictlyDecreasing"


class RowTooLong(InvalidDpp):
    kind = "RowTooLong"


class RowTooShort(InvalidDpp):
    kind = "RowTooShort"


class OrderTooLargeForEnumeration(ValueError):
    pass


class Dpp(NamedTuple):
    """A validated descending plane partition of order ``order``.

    Build instances through :func:`validate_dpp` or :func:`enumerate_dpps`;
    the raw constructor does not check anything.
    """

    rows: tuple[tuple[int, ...], ...]
    order: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        """First entries ``a[k, k]`` of each row."""
        return tuple(r[0] for r in self.rows)

    @property
    def last_columns(self) -> tuple[int, ...]:
        """``lambda_k``, the column index of the last entry of row ``k``."""
        return tuple(k + len(r) for k, r in enumerate(self.rows))

    @property
    def largest_part(self) -> int:
        return self.rows[0][0] if self.rows else 0

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.rows], "order": self.order,
                "sum": sum_of_entries(self)}

    def ascii(self) -> str:
        return render_shifted(self.rows)

    def __str__(self) -> str:
        return format_rows(self.rows)


def format_rows(rows: Sequence[Sequence[int]]) -> str:
    """One-line form: ``"3 3 / 2"``; the empty array is ``"∅"``."""
    if not rows:
        return EMPTY_SYMBOL
    return " / ".join(" ".join(map(str, r)) for r in rows)


def parse_rows(text: str) -> tuple[tuple[int, ...], ...]:
    """Inverse of :func:`format_rows`. Also accepts ``""`` for the empty array."""
    text = text.strip()
    if text in ("", EMPTY_SYMBOL, "()", "[]"):
        return ()
    return tuple(tuple(int(tok) for tok in chunk.split()) for chunk in text.split("/"))


def render_shifted(rows: Sequence[Sequence[int]]) -> str:
    """Multi-line rendering with each row shifted one column to the right."""
    if not rows:
        return EMPTY_SYMBOL
    width = max(len(str(x)) for r in rows for x in r)
    lines = []
    for k, r in enumerate(rows):
        cells = " ".join(str(x).rjust(width) for x in r)
        lines.append(" " * ((width + 1) * k) + cells)
    return "\n".join(lines)


def validate_dpp(rows: Sequence[Sequence[int]], n: int) -> Dpp:
    """Check ``rows`` against every DPP condition with parts bounded by ``n``.

    Checks run in this order, and the first failure is raised: shape
    (no empty rows, each row ending weakly left of the row above), then
    every cell in reading order (positivity, bound ``n``, weak decrease
    along the row, strict decrease down the column), then the two row
    length conditions from the top row down.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    rows = tuple(tuple(int(x) for x in r) for r in rows)
    for k, r in enumerate(rows, start=1):
        if not r:
            raise RaggedShape("empty row", row=k)
        if k > 1 and len(r) > len(rows[k - 2]) - 1:
            raise RaggedShape("row extends past the end of the row above",
                              row=k, column=k + len(rows[k - 2]) - 1)
    for k, r in enumerate(rows, start=1):
        for i, x in enumerate(r):
            col = k + i
            if x < 1:
                raise NonPositivePart(f"part {x} is not positive", row=k, column=col)
            if x > n:
                raise PartExceedsOrder(f"part {x} exceeds order {n}", row=k, column=col)
            if i and x > r[i - 1]:
                raise RowNotWeaklyDecreasing(f"{r[i - 1]} then {x}", row=k, column=col)
            if k > 1 and x >= rows[k - 2][i + 1]:
                raise ColumnNotStrictlyDecreasing(
                    f"{rows[k - 2][i + 1]} above {x}", row=k, column=col)
    for k, r in enumerate(rows, start=1):
        if len(r) >= r[0]:
            raise RowTooLong(f"{len(r)} parts but greatest part is {r[0]}", row=k)
        if k < len(rows) and len(r) < rows[k][0]:
            raise RowTooShort(
                f"{len(r)} parts but next row starts with {rows[k][0]}", row=k)
    return Dpp(rows, n)


def canonical_key(rows: Sequence[Sequence[int]]) -> tuple:
    """Sort key realising the canonical order described in the module docstring."""
    return tuple((r[0], len(r), tuple(reversed(r))) for r in rows)


def colex_rows(first: int, caps: Sequence[int]) -> list[tuple[int, ...]]:
    """Weakly decreasing rows ``first, e1, ..., e_{L-1}`` with ``1 <= e_j <= caps[j]``,
    listed in colex order (compared from the last entry backwards).

    ``caps`` must be weakly decreasing and bounded by ``first``.
    """
    out: list[tuple[int, ...]] = []
    length = len(caps)

    def fill(j: int, low: int, tail: tuple[int, ...]):
        # choose entries from the right end; entry j must be >= the one after it
        if j == 0:
            out.append((first,) + tail)
            return
        for v in range(low, caps[j] + 1):
            fill(j - 1, v, (v,) + tail)

    fill(length - 1, 1, ())
    return out


@lru_cache(maxsize=None)
def _first_rows(n: int) -> tuple[tuple[int, ...], ...]:
    rows: list[tuple[int, ...]] = []
    for a in range(2, n + 1):
        for length in range(1, a):
            rows.extend(colex_rows(a, [a] * length))
    return tuple(rows)


@lru_cache(maxsize=None)
def _next_rows(prev: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Rows that may sit directly below ``prev`` (the order bound is implied)."""
    if len(prev) < 2:
        return ()
    # a <= len(prev) (length condition on prev) and a < prev[1] (column strictness)
    top = min(len(prev), prev[1] - 1)
    rows: list[tuple[int, ...]] = []
    for a in range(2, top + 1):
        for length in range(1, a):
            caps = [min(a, prev[j + 1] - 1) for j in range(length)]
            rows.extend(colex_rows(a, caps))
    return tuple(rows)


def _check_cap(n: int, max_order: int | None):
    if n < 0:
        raise ValueError("order must be nonnegative")
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    if n > cap:
        raise OrderTooLargeForEnumeration(
            f"order {n} exceeds enumeration cap {cap}; raise the cap to override")


def enumerate_dpps(n: int, max_order: int | None = None) -> Iterator[Dpp]:
    """Yield every DPP of order ``n`` exactly once, in canonical order.

    Row-by-row backtracking: each row is drawn from the precomputed list
    of rows compatible with the row above, so no dead branches are
    explored. Raises :class:`OrderTooLargeForEnumeration` above the cap.
    """
    _check_cap(n, max_order)
    return _generate(n)


def _generate(n: int) -> Iterator[Dpp]:
    yield Dpp((), n)
    for row in _first_rows(n):
        yield from _extend((row,), row, n)


def _extend(rows, last, n):
    yield Dpp(rows, n)
    for r in _next_rows(last):
        yield from _extend(rows + (r,), r, n)


def count_dpps(n: int, max_order: int | None = None) -> int:
    """Number of objects produced by :func:`enumerate_dpps`."""
    return sum(1 for _ in enumerate_dpps(n, max_order))


def product_formula(n: int) -> int:
    """``prod_{j<n} (3j+1)! / (n+j)!`` in exact integer arithmetic."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    num = den = 1
    for j in range(n):
        num *= factorial(3 * j + 1)
        den *= factorial(n + j)
    value, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"product formula is not integral at n={n}")
    return value


def sum_of_entries(d: Dpp | Sequence[Sequence[int]]) -> int:
    rows = d.rows if isinstance(d, Dpp) else d
    return sum(sum(r) for r in rows)


def dpp_generating_polynomial(n: int, max_order: int | None = None) -> QPolynomial:
    """Generating polynomial of the sum-of-entries statistic over DPPs of order ``n``."""
    return QPolynomial.from_exponents(sum_of_entries(d) for d in enumerate_dpps(n, max_order))


def q_product_formula(n: int) -> QPolynomial:
    """``prod_{j<n} [3j+1]_q! / [n+j]_q!`` by exact polynomial division."""
    if n < 0:
        raise ValueError("order must be nonnegative")
    num = product(q_factorial(3 * j + 1) for j in range(n))
    den = product(q_factorial(n + j) for j in range(n))
    quot, rem = num.divmod(den)
    if not rem.is_zero():
        raise NonExactDivision(f"q-product formula left a remainder at n={n}")
    return quot

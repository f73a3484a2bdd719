"""Catalan DPPs, their lattice-path encoding, and 231-avoiding permutations."""
from __future__ import annotations

import re
from functools import lru_cache
from math import comb
from typing import Iterator, NamedTuple, Sequence

from .dpp import EMPTY_SYMBOL, Dpp, colex_rows, validate_dpp

Permutation = tuple[int, ...]


class InvalidCatalanDpp(ValueError):
    pass


class InvalidPath(ValueError):
    kind = "InvalidPath"

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        where = f" at step {position}" if position is not None else ""
        super().__init__(f"{self.kind}{where}: {message}")


class BadStep(InvalidPath):
    kind = "BadStep"


class TooManyOnes(InvalidPath):
    kind = "TooManyOnes"


class NegativePartialSum(InvalidPath):
    kind = "NegativePartialSum"


class NonpositiveTotalSum(InvalidPath):
    kind = "NonpositiveTotalSum"


class CatalanDpp(NamedTuple):
    """One-row DPP ``a11 a12 ...`` with ``a1j <= a11 - j + 1``."""

    parts: tuple[int, ...]
    order: int

    def to_dpp(self) -> Dpp:
        return Dpp((self.parts,) if self.parts else (), self.order)

    def to_json(self) -> dict:
        return {"parts": list(self.parts)}

    def __str__(self) -> str:
        return " ".join(map(str, self.parts)) if self.parts else EMPTY_SYMBOL


class DppPath(NamedTuple):
    """A +1/-1 word: nonnegative prefix sums, positive total when nonempty,
    at most ``order - 1`` ones."""

    steps: tuple[int, ...]
    order: int

    @property
    def ones(self) -> int:
        return self.steps.count(1)

    def to_json(self) -> dict:
        return {"steps": list(self.steps)}

    def __str__(self) -> str:
        return format_path(self.steps)


def _staircase_ok(parts: Sequence[int]) -> bool:
    return all(x <= parts[0] - j for j, x in enumerate(parts))


def is_catalan_dpp(d: Dpp) -> bool:
    return len(d.rows) == 0 or (len(d.rows) == 1 and _staircase_ok(d.rows[0]))


def catalan_dpp(parts: Sequence[int], n: int) -> CatalanDpp:
    """Validate ``parts`` as a Catalan DPP of order ``n``."""
    parts = tuple(int(x) for x in parts)
    validate_dpp([parts] if parts else [], n)
    for j, x in enumerate(parts):
        if x > parts[0] - j:
            raise InvalidCatalanDpp(
                f"entry {j + 1} is {x}, above the staircase bound {parts[0] - j}")
    return CatalanDpp(parts, n)


def from_dpp(d: Dpp) -> CatalanDpp:
    if not is_catalan_dpp(d):
        raise InvalidCatalanDpp(f"{d} is not a Catalan DPP")
    return CatalanDpp(d.rows[0] if d.rows else (), d.order)


def enumerate_catalan_dpps(n: int) -> Iterator[CatalanDpp]:
    """All Catalan DPPs of order ``n``, generated directly.

    Ordered by greatest part, then length, then colex on the entries,
    which is the restriction of the DPP canonical order to one-row arrays.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    yield CatalanDpp((), n)
    for a in range(2, n + 1):
        for length in range(1, a):
            for parts in colex_rows(a, [a - j for j in range(length)]):
                yield CatalanDpp(parts, n)


# -- paths ------------------------------------------------------------------

_TOKEN = re.compile(r"-1|1")


def parse_path(text: str) -> tuple[int, ...]:
    """Read ``"1-11-11"`` style words; ``""`` and ``"∅"`` are the empty path.

    Separators (spaces, commas) between tokens are tolerated.
    """
    text = text.strip()
    if text in ("", EMPTY_SYMBOL):
        return ()
    stripped = re.sub(r"[\s,]+", "", text)
    tokens = _TOKEN.findall(stripped)
    if "".join(tokens) != stripped:
        raise BadStep(f"cannot tokenize {text!r}")
    return tuple(int(t) for t in tokens)


def format_path(steps: Sequence[int]) -> str:
    return "".join(str(s) for s in steps) if steps else EMPTY_SYMBOL


def validate_path(steps: Sequence[int], n: int) -> DppPath:
    """Check a word against the path conditions for order ``n``.

    The scan reports the first negative prefix (or non-unit step) from the
    left, then an excess of ones, then a nonpositive total. The empty word
    is valid at every order, including 0.
    """
    steps = tuple(steps)
    height = 0
    for i, s in enumerate(steps):
        if s not in (1, -1):
            raise BadStep(f"step {s!r} is not +1 or -1", position=i)
        height += s
        if height < 0:
            raise NegativePartialSum("prefix sum drops below zero", position=i)
    ones = steps.count(1)
    if steps and ones > n - 1:
        raise TooManyOnes(f"{ones} ones exceed the bound {n - 1}")
    if steps and height <= 0:
        raise NonpositiveTotalSum(f"total sum is {height}")
    return DppPath(steps, n)


def dpp_to_path(c: CatalanDpp) -> DppPath:
    """Trace the top boundary of the column profile and drop its two end steps.

    Column ``j`` has height ``a1j``. Walking from the top-left corner, each
    move right is -1 and each unit move down is +1.
    """
    parts = c.parts
    if not parts:
        return DppPath((), c.order)
    word: list[int] = []
    for j, h in enumerate(parts):
        nxt = parts[j + 1] if j + 1 < len(parts) else 0
        word.append(-1)
        word.extend([1] * (h - nxt))
    return DppPath(tuple(word[1:-1]), c.order)


def path_to_dpp(p: DppPath) -> CatalanDpp:
    """Inverse of :func:`dpp_to_path`: column ``j`` is the number of +1 steps
    after the ``j``-th -1 of the completed word."""
    if not p.steps:
        return CatalanDpp((), p.order)
    word = (-1,) + p.steps + (1,)
    parts = []
    ones_after = word.count(1)
    for s in word:
        if s == -1:
            parts.append(ones_after)
        else:
            ones_after -= 1
    return CatalanDpp(tuple(parts), p.order)


def enumerate_paths(n: int) -> Iterator[DppPath]:
    """All paths of order ``n``, aligned index-by-index with
    :func:`enumerate_catalan_dpps` through the bijection."""
    for c in enumerate_catalan_dpps(n):
        yield dpp_to_path(c)


def render_profile(c: CatalanDpp) -> str:
    """Box diagram of the columns with the traced boundary word underneath."""
    if not c.parts:
        return EMPTY_SYMBOL
    height = c.parts[0]
    lines = ["".join("#" if h >= level else "." for h in c.parts)
             for level in range(height, 0, -1)]
    full = (-1,) + dpp_to_path(c).steps + (1,)
    lines.append("word: " + " ".join(str(s) for s in full))
    return "\n".join(lines)


# -- permutations -----------------------------------------------------------

def validate_permutation(values: Sequence[int]) -> Permutation:
    values = tuple(int(v) for v in values)
    if sorted(values) != list(range(1, len(values) + 1)):
        raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
    return values


def is_231_avoiding(p: Sequence[int]) -> bool:
    """Stack-sorting test: a 231 occurrence is exactly a value that arrives
    below something already popped."""
    stack: list[int] = []
    floor = 0
    for x in p:
        if x < floor:
            return False
        while stack and stack[-1] < x:
            floor = stack.pop()
        stack.append(x)
    return True


def enumerate_231_avoiding(n: int) -> Iterator[Permutation]:
    """231-avoiding permutations of length ``n`` in lexicographic order."""
    if n < 0:
        raise ValueError("length must be nonnegative")

    def grow(prefix: list[int], unused: list[int], stack: tuple[int, ...], floor: int):
        if not unused:
            yield tuple(prefix)
            return
        for i, v in enumerate(unused):
            if v < floor:
                continue
            st = list(stack)
            fl = floor
            while st and st[-1] < v:
                fl = st.pop()
            rest = unused[:i] + unused[i + 1:]
            # every later value must clear the floor, and rest is sorted
            if rest and rest[0] < fl:
                continue
            st.append(v)
            prefix.append(v)
            yield from grow(prefix, rest, tuple(st), fl)
            prefix.pop()

    yield from grow([], list(range(1, n + 1)), (), 0)


def format_permutation(p: Sequence[int]) -> str:
    if not p:
        return EMPTY_SYMBOL
    sep = "" if len(p) < 10 else " "
    return sep.join(map(str, p))


def parse_permutation(text: str) -> Permutation:
    text = text.strip()
    if text in ("", EMPTY_SYMBOL):
        return ()
    tokens = text.replace(",", " ").split()
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    return validate_permutation(int(t) for t in tokens)


# -- Catalan numbers --------------------------------------------------------

@lru_cache(maxsize=None)
def _catalan_recurrence(n: int) -> int:
    if n == 0:
        return 1
    return sum(_catalan_recurrence(p - 1) * _catalan_recurrence(n - p) for p in range(1, n + 1))


def catalan_number(n: int) -> int:
    """C_n from the binomial closed form, cross-checked against the
    first-return recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    for k in range(n):  # warm the cache bottom-up to keep recursion shallow
        _catalan_recurrence(k)
    closed = comb(2 * n, n) // (n + 1)
    rec = _catalan_recurrence(n)
    if closed != rec:
        raise ArithmeticError(f"Catalan closed form {closed} != recurrence {rec} at n={n}")
    return closed

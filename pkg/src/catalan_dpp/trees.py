"""The four Catalan generating trees and a level-by-level shape comparison.

Trees
-----
``abstract``  nodes labelled by their child count; a node in sibling
              position ``p`` has ``p + 1`` children, the root has one.
``perm``      231-avoiding permutations; children insert the new maximum
              just left of each left-to-right maximum, then at the end.
``path``      Catalan DPP paths under the three-case insertion rule.
``dpp``       Catalan DPPs: bump the first part and insert one new entry.

Siblings are always stored left to right. The empty path / empty DPP
behaves differently at the root (one child) than elsewhere (two), so
child rules take a ``has_parent`` flag; inside a tree it is simply
``depth > 0``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterator, Sequence

from .catalan import (
    CatalanDpp,
    DppPath,
    InvalidCatalanDpp,
    InvalidPath,
    Permutation,
    _staircase_ok,
    catalan_number,
    format_path,
    format_permutation,
    is_231_avoiding,
    validate_path,
)

TREE_IDS = ("abstract", "perm", "path", "dpp")

#: default deepest level :func:`build_level` will expand
DEFAULT_MAX_DEPTH = 12


class Not231Avoiding(ValueError):
    pass


class EmptyPermutation(ValueError):
    pass


class DepthTooLarge(ValueError):
    pass


# -- child rules ------------------------------------------------------------

def abstract_children(position_from_left: int, is_root: bool = False) -> list[int]:
    """Child counts of the children of a node at ``position_from_left``.

    Returns the list ``[2, 3, ..., p + 1]``-style labels of the children,
    i.e. child ``i`` (1-based) will itself have ``i + 1`` children; its
    length is the node's own child count.
    """
    if position_from_left < 1:
        raise ValueError("sibling positions start at 1")
    count = 1 if is_root else position_from_left + 1
    return [i + 1 for i in range(1, count + 1)]


def lr_maxima(p: Sequence[int]) -> int:
    """Number of left-to-right maxima of a nonempty permutation."""
    if not p:
        raise EmptyPermutation("left-to-right maxima of the empty permutation")
    count, best = 0, 0
    for x in p:
        if x > best:
            count, best = count + 1, x
    return count


def perm_children(p: Sequence[int]) -> list[Permutation]:
    """Insert ``len(p) + 1`` left of each left-to-right maximum, then at the end."""
    p = tuple(p)
    if not is_231_avoiding(p):
        raise Not231Avoiding(f"{format_permutation(p)} contains 231")
    new = len(p) + 1
    out = []
    best = 0
    for i, x in enumerate(p):
        if x > best:
            best = x
            out.append(p[:i] + (new,) + p[i:])
    out.append(p + (new,))
    return out


def path_children(p: DppPath, has_parent: bool = True) -> list[DppPath]:
    """Children of ``p`` in the path tree, left to right, at order ``p.order + 1``."""
    steps = p.steps
    try:
        validate_path(steps, p.order)
    except InvalidPath as exc:
        raise InvalidPath(f"{format_path(steps)} is not a path of order {p.order}") from exc
    n = p.order + 1
    if not steps:
        kids = [(), (1,)] if has_parent else [()]
        return [DppPath(s, n) for s in kids]
    if -1 in steps:
        lead = steps.index(-1)
        ones, rest = lead + 1, steps[lead:]
    else:
        ones, rest = len(steps) + 1, ()
    # the new -1 goes after the first k ones, k = 1..ones; leftmost child first
    kids = [(1,) * k + (-1,) + (1,) * (ones - k) + rest for k in range(1, ones + 1)]
    if -1 not in steps:
        kids.append((1,) * ones)
    return [DppPath(s, n) for s in kids]


def path_parent(p: DppPath) -> DppPath:
    """Undo one step of :func:`path_children`. The result has order ``p.order - 1``
    (the empty root path is its own parent and keeps its order)."""
    steps = p.steps
    order = max(p.order - 1, 0)
    if not steps:
        return DppPath((), order)
    if -1 not in steps:
        return DppPath(steps[1:], order)
    s = list(steps)
    s.remove(1)
    s.remove(-1)
    return DppPath(tuple(s), order)


def dpp_children(c: CatalanDpp, has_parent: bool = True) -> list[CatalanDpp]:
    """Children of a Catalan DPP, left to right.

    For ``a b ...`` the children are ``(a+1) x b ...`` with ``x`` running
    from ``a`` down to ``b``. A single part ``a`` behaves as if ``b = 0``,
    where ``x = 0`` means nothing is inserted; that child comes last.
    """
    parts = c.parts
    if parts and not (len(parts) < parts[0] <= c.order and _staircase_ok(parts)
                      and all(x >= y for x, y in zip(parts, parts[1:])) and parts[-1] >= 1):
        raise InvalidCatalanDpp(f"{c} is not a Catalan DPP of order {c.order}")
    n = c.order + 1
    if not parts:
        kids = [(), (2,)] if has_parent else [()]
        return [CatalanDpp(k, n) for k in kids]
    a = parts[0]
    b = parts[1] if len(parts) > 1 else 0
    kids = []
    for x in range(a, b - 1, -1):
        kids.append((a + 1, x) + parts[1:] if x else (a + 1,))
    return [CatalanDpp(k, n) for k in kids]


# -- levels -----------------------------------------------------------------

@dataclass(frozen=True)
class TreeNode:
    label: Any
    parent: int | None  # index into the previous level
    position: int  # 1-based position among its siblings
    child_count: int


@dataclass(frozen=True)
class TreeLevel:
    tree: str
    depth: int
    nodes: tuple[TreeNode, ...]

    def labels(self) -> list:
        return [node.label for node in self.nodes]

    def child_counts(self) -> list[int]:
        return [node.child_count for node in self.nodes]

    def __len__(self) -> int:
        return len(self.nodes)


def _root(tree: str):
    if tree == "abstract":
        return 1
    if tree == "perm":
        return ()
    if tree == "path":
        return DppPath((), 0)
    if tree == "dpp":
        return CatalanDpp((), 0)
    raise ValueError(f"unknown tree {tree!r}; expected one of {TREE_IDS}")


def children_of(tree: str, label, position: int, has_parent: bool) -> list:
    """Labels of the children of one node, left to right."""
    if tree == "abstract":
        return abstract_children(position, is_root=not has_parent)
    if tree == "perm":
        return perm_children(label)
    if tree == "path":
        return path_children(label, has_parent)
    if tree == "dpp":
        return dpp_children(label, has_parent)
    raise ValueError(f"unknown tree {tree!r}; expected one of {TREE_IDS}")


def _check_depth(depth: int, max_depth: int | None):
    cap = DEFAULT_MAX_DEPTH if max_depth is None else max_depth
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > cap:
        raise DepthTooLarge(f"depth {depth} exceeds cap {cap}; raise the cap to override")


def iter_levels(tree: str, depth: int, max_depth: int | None = None) -> Iterator[TreeLevel]:
    """Breadth-first levels ``0..depth``; each level's child counts are filled in
    by expanding it, so the frontier is the only state kept."""
    _check_depth(depth, max_depth)
    labels = [_root(tree)]
    parents: list[int | None] = [None]
    positions = [1]
    for d in range(depth + 1):
        kids = [children_of(tree, lab, pos, d > 0) for lab, pos in zip(labels, positions)]
        yield TreeLevel(tree, d, tuple(
            TreeNode(lab, par, pos, len(k))
            for lab, par, pos, k in zip(labels, parents, positions, kids)))
        if d == depth:
            return
        labels, parents, positions = [], [], []
        for i, k in enumerate(kids):
            for j, lab in enumerate(k, start=1):
                labels.append(lab)
                parents.append(i)
                positions.append(j)


def build_level(tree: str, depth: int, max_depth: int | None = None) -> TreeLevel:
    level = None
    for level in iter_levels(tree, depth, max_depth):
        pass
    return level


@dataclass(frozen=True)
class LevelReport:
    depth: int
    sizes: dict[str, int]
    expected_size: int
    ok: bool
    mismatch: str | None = None  # first disagreement, if any


def check_isomorphism(depth_cap: int, trees: Sequence[str] = TREE_IDS,
                      max_depth: int | None = None) -> list[LevelReport]:
    """Compare the trees level by level: the sibling-ordered child-count
    sequences must coincide and each level must hold C_depth nodes."""
    if depth_cap < 1:
        raise ValueError("depth_cap must be at least 1")
    streams = {t: iter_levels(t, depth_cap, max_depth) for t in trees}
    reports = []
    for d in range(depth_cap + 1):
        levels = {t: next(s) for t, s in streams.items()}
        expected = catalan_number(d)
        counts = {t: lv.child_counts() for t, lv in levels.items()}
        mismatch = None
        for t, lv in levels.items():
            if len(lv) != expected:
                mismatch = f"{t}: {len(lv)} nodes, expected {expected}"
                break
        if mismatch is None:
            ref_tree = trees[0]
            ref = counts[ref_tree]
            for t in trees[1:]:
                for i, (x, y) in enumerate(zip(ref, counts[t])):
                    if x != y:
                        mismatch = (f"{t} node {i} has {y} children, "
                                    f"{ref_tree} node {i} has {x}")
                        break
                if mismatch:
                    break
        reports.append(LevelReport(d, {t: len(lv) for t, lv in levels.items()},
                                   expected, mismatch is None, mismatch))
    return reports


# -- output -----------------------------------------------------------------

def label_text(label) -> str:
    """Canonical ASCII form of a node label."""
    if isinstance(label, (DppPath, CatalanDpp)):
        return str(label)
    if isinstance(label, tuple):
        return format_permutation(label)
    return str(label)


def label_json(label):
    if isinstance(label, (DppPath, CatalanDpp)):
        return label.to_json()
    if isinstance(label, tuple):
        return {"values": list(label)}
    return {"child_count": label}


def level_jsonl(level: TreeLevel) -> Iterator[str]:
    for i, node in enumerate(level.nodes):
        yield json.dumps({"depth": level.depth, "index": i,
                          "label": label_json(node.label), "children": node.child_count})


def tree_ascii(levels: Sequence[TreeLevel]) -> str:
    """One line per level; siblings joined by ``,``, sibling groups by ``|``."""
    lines = []
    for lv in levels:
        groups: list[list[str]] = []
        last = object()
        for node in lv.nodes:
            if node.parent != last:
                groups.append([])
                last = node.parent
            groups[-1].append(label_text(node.label))
        lines.append(f"{lv.depth}: " + " | ".join(", ".join(g) for g in groups))
    return "\n".join(lines)


def tree_dot(levels: Sequence[TreeLevel], name: str = "tree") -> str:
    """Graphviz DOT source with node ids ``d<depth>_<index>``."""
    out = [f"digraph {name} {{", "  node [shape=plaintext];"]
    for lv in levels:
        for i, node in enumerate(lv.nodes):
            out.append(f"  d{lv.depth}_{i} [label={json.dumps(label_text(node.label), ensure_ascii=False)}];")
            if node.parent is not None:
                out.append(f"  d{lv.depth - 1}_{node.parent} -> d{lv.depth}_{i};")
    out.append("}")
    return "\n".join(out)

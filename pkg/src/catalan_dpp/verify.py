"""Invariant suites run by ``catalan-dpp verify``.

Each suite yields :class:`Check` records; nothing here raises on a
failed check.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

from . import asm, catalan, dpp, trees
from .catalan import (
    catalan_number,
    dpp_to_path,
    enumerate_231_avoiding,
    enumerate_catalan_dpps,
    enumerate_paths,
    is_catalan_dpp,
    path_to_dpp,
)


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class Caps:
    dpp_order: int = dpp.DEFAULT_MAX_ORDER
    depth: int = trees.DEFAULT_MAX_DEPTH
    asm_order: int = asm.DEFAULT_MAX_ASM_ORDER
    tsscpp_order: int = asm.DEFAULT_MAX_TSSCPP_ORDER


def _eq(name: str, got, want) -> Check:
    return Check(name, got == want, f"got {got}, expected {want}")


def suite_counts(max_order: int, caps: Caps) -> Iterator[Check]:
    for n in range(min(max_order, caps.dpp_order) + 1):
        yield _eq(f"count_dpps({n}) == product_formula({n})",
                  dpp.count_dpps(n, caps.dpp_order), dpp.product_formula(n))
    for n in range(max_order + 1):
        c = catalan_number(n)
        yield _eq(f"|catalan_dpps({n})| == C_{n}", sum(1 for _ in enumerate_catalan_dpps(n)), c)
        yield _eq(f"|231-avoiding({n})| == C_{n}", sum(1 for _ in enumerate_231_avoiding(n)), c)
    for n in range(min(max_order, caps.dpp_order) + 1):
        filtered = [catalan.from_dpp(d) for d in dpp.enumerate_dpps(n, caps.dpp_order)
                    if is_catalan_dpp(d)]
        yield Check(f"filtered DPPs of order {n} == direct Catalan DPPs",
                    filtered == list(enumerate_catalan_dpps(n)), f"{len(filtered)} objects")


def suite_bijection(max_order: int, caps: Caps) -> Iterator[Check]:
    sample = catalan.CatalanDpp((4, 3, 2), 4)
    yield _eq("4 3 2 -> 1-11-11", str(dpp_to_path(sample)), "1-11-11")
    yield _eq("1-11-11 -> 4 3 2", str(path_to_dpp(catalan.DppPath((1, -1, 1, -1, 1), 4))), "4 3 2")
    for n in range(max_order + 1):
        cs = list(enumerate_catalan_dpps(n))
        bad = [c for c in cs if path_to_dpp(dpp_to_path(c)) != c]
        yield Check(f"path_to_dpp . dpp_to_path = id, order {n}", not bad,
                    f"{len(cs)} objects" + (f", first failure {bad[0]}" if bad else ""))
        ps = list(enumerate_paths(n))
        bad = [p for p in ps if dpp_to_path(path_to_dpp(p)) != p]
        yield Check(f"dpp_to_path . path_to_dpp = id, order {n}", not bad, f"{len(ps)} objects")
        invalid = 0
        for p in ps:
            try:
                catalan.validate_path(p.steps, n)
            except catalan.InvalidPath:
                invalid += 1
        yield Check(f"paths of order {n} valid and distinct",
                    invalid == 0 and len(set(ps)) == len(ps), f"{invalid} invalid")
        transport = all(dpp_to_path(c).ones == c.parts[0] - 1
                        and dpp_to_path(c).steps.count(-1) == len(c.parts) - 1
                        for c in cs if c.parts)
        yield Check(f"ones/minus-ones transport first part and length, order {n}", transport)


def suite_trees(max_order: int, caps: Caps) -> Iterator[Check]:
    depth = max(1, min(max_order, caps.depth))
    for rep in trees.check_isomorphism(depth, max_depth=caps.depth):
        yield Check(f"tree shapes agree at depth {rep.depth}", rep.ok,
                    rep.mismatch or f"{rep.expected_size} nodes")
    levels = {t: list(trees.iter_levels(t, depth, caps.depth)) for t in trees.TREE_IDS}
    for d in range(depth + 1):
        yield Check(f"perm tree level {d} == 231-avoiding({d})",
                    set(levels["perm"][d].labels()) == set(enumerate_231_avoiding(d)))
        yield Check(f"path tree level {d} == paths({d})",
                    set(levels["path"][d].labels()) == set(enumerate_paths(d)))
        yield Check(f"dpp tree level {d} == Catalan DPPs({d})",
                    set(levels["dpp"][d].labels()) == set(enumerate_catalan_dpps(d)))
        yield Check(f"dpp tree maps onto path tree at depth {d}",
                    [dpp_to_path(c) for c in levels["dpp"][d].labels()]
                    == levels["path"][d].labels())
        law = all(len(c.parts) < 2 or k == c.parts[0] + 1 - c.parts[1]
                  for c, k in zip(levels["dpp"][d].labels(), levels["dpp"][d].child_counts()))
        yield Check(f"dpp child count = a11 + 1 - a12 at depth {d}", law)
        yield from _parent_checks(levels["path"], d)


def _parent_checks(path_levels, d: int) -> Iterator[Check]:
    level = path_levels[d]
    if d == 0:
        return
    prev = path_levels[d - 1].labels()
    ok = True
    for node in level.nodes:
        parent = trees.path_parent(node.label)
        if parent != prev[node.parent] or node.label not in trees.path_children(parent, d - 1 > 0):
            ok = False
            break
    yield Check(f"path_parent inverts path_children at depth {d}", ok)
    # sibling law: each node has one more child than its left sibling
    law = all(b.child_count == a.child_count + 1
              for a, b in zip(level.nodes, level.nodes[1:]) if a.parent == b.parent)
    yield Check(f"sibling child-count law at depth {d}", law)


def suite_qpoly(max_order: int, caps: Caps) -> Iterator[Check]:
    for n in range(min(max_order, caps.dpp_order) + 1):
        brute = dpp.dpp_generating_polynomial(n, caps.dpp_order)
        closed = dpp.q_product_formula(n)
        yield Check(f"sum-of-entries polynomial == q-product, order {n}", brute == closed, str(closed))
        yield _eq(f"polynomial at q=1, order {n}", brute(1), dpp.product_formula(n))


def suite_cross_family(max_order: int, caps: Caps) -> Iterator[Check]:
    for n in range(min(max_order, caps.asm_order) + 1):
        triangles = list(asm.enumerate_monotone_triangles(n))
        asms = [asm.monotone_to_asm(t) for t in triangles]
        yield _eq(f"|ASM({n})| == product_formula({n})", len(asms), dpp.product_formula(n))
        yield Check(f"ASM <-> monotone triangle roundtrip, order {n}",
                    all(asm.asm_to_monotone(a) == t for a, t in zip(asms, triangles))
                    and len(set(asms)) == len(asms))
        valid = True
        for a in asms:
            try:
                asm.validate_asm(a.entries)
            except asm.InvalidAsm:
                valid = False
                break
        yield Check(f"enumerated ASMs of order {n} validate", valid)
        yield Check(f"monotone triangle diagonals of order {n} are monotone sequences",
                    all(asm.is_diagonal(asm.nw_se_diagonal(t), n, "monotone") for t in triangles))
    for n in range(max_order + 1):
        for flavor in asm.FLAVORS:
            yield _eq(f"|{flavor} diagonals({n})| == C_{n}",
                      sum(1 for _ in asm.enumerate_diagonals(n, flavor)), catalan_number(n))
    for n in range(min(max_order, caps.tsscpp_order) + 1):
        yield _eq(f"|TSSCPP({n})| == product_formula({n})",
                  sum(1 for _ in asm.enumerate_tsscpps(n, caps.tsscpp_order)), dpp.product_formula(n))


SUITES: dict[str, Callable[[int, Caps], Iterator[Check]]] = {
    "counts": suite_counts,
    "bijection": suite_bijection,
    "trees": suite_trees,
    "qpoly": suite_qpoly,
    "cross-family": suite_cross_family,
}


def run_suite(name: str, max_order: int, caps: Caps | None = None) -> list[Check]:
    return list(SUITES[name](max_order, caps or Caps()))

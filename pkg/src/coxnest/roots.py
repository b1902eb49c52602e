"""Positive roots of B_n and D_n, the root poset, and nonnesting antichains.

Roots are written in the standard basis: ``e_i`` (type B only), ``e_i - e_j``
and ``e_i + e_j`` with j < i.  An antichain of the root poset is turned into a
partition by drawing one symmetric pair of arcs per root and reading off the
connected components.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple

from .diagrams import b_arc_diagram, d_arc_diagram, is_nonnesting_b, is_nonnesting_d
from .errors import BadRank, NotAnAntichain, NotNonnesting
from .partition import SignedPartition, canonicalize, is_d_partition

SYSTEMS = ("B", "D")


class Root(NamedTuple):
    kind: str  # "E", "Diff" or "Sum"
    i: int
    j: int = 0

    def __str__(self) -> str:
        if self.kind == "E":
            return f"e{self.i}"
        sign = "-" if self.kind == "Diff" else "+"
        return f"e{self.i}{sign}e{self.j}"

    def vector(self, n: int) -> tuple[int, ...]:
        v = [0] * n
        v[self.i - 1] = 1
        if self.kind == "Diff":
            v[self.j - 1] = -1
        elif self.kind == "Sum":
            v[self.j - 1] = 1
        return tuple(v)


_ROOT_RE = re.compile(r"^\s*e(\d+)\s*(?:([+-])\s*e(\d+))?\s*$")


def parse_root(text: str) -> Root:
    m = _ROOT_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse root {text!r}")
    i = int(m.group(1))
    if m.group(2) is None:
        return Root("E", i)
    j = int(m.group(3))
    if j >= i:
        raise ValueError(f"root {text!r} must be written with the larger index first")
    return Root("Diff" if m.group(2) == "-" else "Sum", i, j)


def _check_rank(system: str, n: int) -> None:
    if system not in SYSTEMS:
        raise ValueError(f"unknown root system {system!r}")
    if n < (2 if system == "D" else 1):
        raise BadRank(f"{system}_{n} is not defined")


def positive_roots(system: str, n: int) -> list[Root]:
    _check_rank(system, n)
    roots = []
    if system == "B":
        roots += [Root("E", i) for i in range(1, n + 1)]
    for i in range(2, n + 1):
        for j in range(1, i):
            roots.append(Root("Diff", i, j))
            roots.append(Root("Sum", i, j))
    return roots


def simple_coordinates(system: str, v: Iterable[int]) -> tuple:
    """Coordinates of v in the simple roots.

    B: e1, e2-e1, ..., en-e(n-1).  D: e1+e2, e2-e1, e3-e2, ..., en-e(n-1).
    Entries may be half-integers for D (returned as floats) when v is off the
    root lattice.
    """
    v = list(v)
    n = len(v)
    suffix = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix[k] = suffix[k + 1] + v[k]
    if system == "B":
        return tuple(suffix[:n])
    s2 = suffix[1] if n >= 2 else 0
    return ((s2 + v[0]) / 2, (s2 - v[0]) / 2) + tuple(suffix[2:n])


def root_leq(system: str, alpha: Root, beta: Root, n: int) -> bool:
    diff = [b - a for a, b in zip(alpha.vector(n), beta.vector(n))]
    return all(c >= 0 and c == int(c) for c in simple_coordinates(system, diff))


@dataclass(frozen=True)
class Antichain:
    system: str
    n: int
    roots: frozenset[Root]

    def __post_init__(self):
        _check_rank(self.system, self.n)
        for r in self.roots:
            if r.kind == "E" and self.system == "D":
                raise NotAnAntichain(f"{r} is not a root of D_{self.n}")
            if r.kind == "E":
                valid = 1 <= r.i <= self.n
            else:
                valid = r.kind in ("Diff", "Sum") and 1 <= r.j < r.i <= self.n
            if not valid:
                raise NotAnAntichain(f"{r} is not a positive root of rank {self.n}")
        for a, b in combinations(self.roots, 2):
            if root_leq(self.system, a, b, self.n) or root_leq(self.system, b, a, self.n):
                raise NotAnAntichain(f"{a} and {b} are comparable")

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "n": self.n,
            "roots": [str(r) for r in sorted(self.roots, key=_root_key)],
        }

    @classmethod
    def from_json(cls, data: dict) -> Antichain:
        return cls(data["system"], data["n"], frozenset(parse_root(r) for r in data["roots"]))


def _root_key(r: Root):
    return (r.i, r.j, r.kind)


def root_arcs(root: Root) -> list[tuple[int, int]]:
    i, j = root.i, root.j
    if root.kind == "E":
        return [(i, 0), (-i, 0)]
    if root.kind == "Diff":
        return [(i, j), (-i, -j)]
    return [(i, -j), (-i, j)]


def antichain_to_partition(a: Antichain) -> SignedPartition:
    n = a.n
    parent = {x: x for x in range(-n, n + 1)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for r in a.roots:
        for x, y in root_arcs(r):
            parent[find(x)] = find(y)
    comps: dict[int, list[int]] = {}
    for x in parent:
        if x:
            comps.setdefault(find(x), []).append(x)
    return canonicalize(comps.values(), n)


def _arc_root(lo: int, hi: int) -> Root:
    if lo == 0 or hi == 0:
        return Root("E", abs(lo + hi))
    if lo > 0:
        return Root("Diff", hi, lo)
    if hi < 0:
        return Root("Diff", -lo, -hi)
    a, b = -lo, hi
    return Root("Sum", max(a, b), min(a, b))


def partition_to_antichain(system: str, pi: SignedPartition) -> Antichain:
    _check_rank(system, pi.n)
    if system == "B":
        if not is_nonnesting_b(pi):
            raise NotNonnesting(f"{pi} is not a nonnesting B_{pi.n}-partition")
        diagram = b_arc_diagram(pi)
    else:
        if not is_d_partition(pi) or not is_nonnesting_d(pi):
            raise NotNonnesting(f"{pi} is not a nonnesting D_{pi.n}-partition")
        diagram = d_arc_diagram(pi)
    roots = frozenset(_arc_root(lo, hi) for lo, hi in diagram.arcs)
    return Antichain(system, pi.n, roots)


def comparability(system: str, n: int) -> tuple[list[Root], list[list[bool]]]:
    roots = positive_roots(system, n)
    comp = [
        [root_leq(system, a, b, n) or root_leq(system, b, a, n) for b in roots]
        for a in roots
    ]
    return roots, comp


def antichains(system: str, n: int) -> list[Antichain]:
    """All antichains of the positive root poset (including the empty one)."""
    roots, comp = comparability(system, n)
    out = []

    def rec(k, chosen):
        if k == len(roots):
            out.append(frozenset(roots[c] for c in chosen))
            return
        rec(k + 1, chosen)
        if not any(comp[k][c] for c in chosen):
            rec(k + 1, chosen + [k])

    rec(0, [])
    # skip re-validation: the search only ever joins incomparable roots
    result = []
    for roots_set in out:
        ac = object.__new__(Antichain)
        object.__setattr__(ac, "system", system)
        object.__setattr__(ac, "n", n)
        object.__setattr__(ac, "roots", roots_set)
        result.append(ac)
    return result

"""Noncrossing and nonnesting membership tests for types B and D.

Noncrossing tests work on circle positions.  Type B places 1..n, -1..-n
clockwise on a 2n-gon.  Type D places 2..n, -2..-n on a (2n-2)-gon and puts
both 1 and -1 on the centre; crossings there are decided combinatorially from
circular gaps instead of floating point geometry, since the centre lies
exactly on every antipodal chord.

Nonnesting tests work on linear arc diagrams.  The B line is
-n < ... < -1 < 0 < 1 < ... < n and the zero block is routed through 0.  The
D line drops 0 and gives 1 and -1 the same coordinate, so arcs ending at 1
and at -1 are never nested along that end.
"""
from __future__ import annotations

import enum
from itertools import combinations
from typing import Iterable, NamedTuple

from .errors import NotADPartition, OverlappingSets, PreconditionError
from .partition import Block, SignedPartition, is_d_partition


class CircularPositions(NamedTuple):
    m: int
    occupied: frozenset[int]

    @classmethod
    def of(cls, m: int, occupied: Iterable[int]) -> CircularPositions:
        occ = frozenset(occupied)
        if any(not 0 <= p < m for p in occ):
            raise ValueError(f"positions {sorted(occ)} outside 0..{m - 1}")
        return cls(m, occ)


def interleaves(s: CircularPositions, t: CircularPositions) -> bool:
    """True iff some a, b in s and a', b' in t sit in cyclic order a, a', b, b'."""
    if s.m != t.m:
        raise ValueError("position sets live on different circles")
    if s.occupied & t.occupied:
        raise OverlappingSets(f"sets share positions {sorted(s.occupied & t.occupied)}")
    return _interleave(s.occupied, t.occupied)


def _interleave(s, t) -> bool:
    if not s or not t:
        return False
    labels = [p in s for p in sorted(set(s) | set(t))]
    changes = sum(labels[i] != labels[i - 1] for i in range(len(labels)))
    return changes >= 4


def gaps(positions: Iterable[int], m: int) -> list[tuple[int, int, int]]:
    """Circular gaps (a, b, length) between cyclically consecutive positions."""
    ps = sorted(positions)
    out = []
    for i, a in enumerate(ps):
        b = ps[(i + 1) % len(ps)]
        out.append((a, b, (b - a) % m or m))
    return out


def _in_gap(p: int, a: int, b: int, m: int) -> bool:
    return 0 < (p - a) % m < ((b - a) % m or m)


# Type B


def b_position(x: int, n: int) -> int:
    return x - 1 if x > 0 else n - x - 1


def is_noncrossing_b(pi: SignedPartition) -> bool:
    pos = [{b_position(x, pi.n) for x in b} for b in pi.blocks]
    return not any(_interleave(s, t) for s, t in combinations(pos, 2))


# Type D


def d_position(x: int, n: int) -> int:
    """Vertex of the (2n-2)-gon carrying label x, for |x| >= 2."""
    if abs(x) < 2:
        raise ValueError("1 and -1 sit on the centre, not on a vertex")
    return x - 2 if x > 0 else n - x - 3


def _centre_inside(ps: set[int], m: int) -> bool:
    """Centre lies in the relative interior of the hull of these vertices."""
    half = m // 2
    if len(ps) == 2:
        a, b = sorted(ps)
        return b - a == half
    return len(ps) >= 3 and all(g < half for _, _, g in gaps(ps, m))


def crosses_d(block: Iterable[int], other: Iterable[int], n: int) -> bool:
    """Whether two distinct blocks of a D_n-partition cross on the (2n-2)-gon."""
    b, c = set(block), set(other)
    if b & c:
        raise OverlappingSets("blocks must be disjoint")
    m = 2 * n - 2
    half = n - 1
    pb = {d_position(x, n) for x in b if abs(x) > 1}
    pc = {d_position(x, n) for x in c if abs(x) > 1}
    b_central = bool(b & {1, -1})
    c_central = bool(c & {1, -1})
    if not b_central and not c_central:
        return _interleave(pb, pc)
    if b_central and c_central:
        if not pb and not pc:
            return False
        return _interleave(pb, pc) or _centre_inside(pb, m) or _centre_inside(pc, m)
    if c_central:
        pb, pc = pc, pb
    # now pb carries the centre
    if _interleave(pb, pc):
        return True
    if _centre_inside(pc, m):
        return True
    if len(pc) >= 2:
        for a, z, g in gaps(pc, m):
            if g < half and any(_in_gap(p, a, z, m) for p in pb):
                return True
    return False


def is_noncrossing_d(pi: SignedPartition) -> bool:
    if not is_d_partition(pi):
        raise NotADPartition(f"{pi} has a zero block with two elements")
    return not any(crosses_d(s, t, pi.n) for s, t in combinations(pi.blocks, 2))


# Arc diagrams


class Arc(NamedTuple):
    lo: int
    hi: int


class ArcDiagram(NamedTuple):
    ground: str
    arcs: tuple[Arc, ...]

    def to_json(self) -> dict:
        return {"ground": self.ground, "arcs": [list(a) for a in self.arcs]}


def _consecutive(block: Block):
    return zip(block, block[1:])


def b_arc_diagram(pi: SignedPartition) -> ArcDiagram:
    arcs = []
    for b in pi.blocks:
        for x, y in _consecutive(b):
            if x == -y:
                arcs += [Arc(x, 0), Arc(0, y)]
            else:
                arcs.append(Arc(x, y))
    return ArcDiagram("B", tuple(sorted(arcs)))


def d_arc_diagram(pi: SignedPartition) -> ArcDiagram | None:
    """Arcs of the D diagram, or None when no root set produces this partition.

    A zero block avoiding 1 would need an arc joining some c to -c, which no
    root of D_n provides.
    """
    arcs = []
    for b in pi.blocks:
        for x, y in _consecutive(b):
            if x == -y:
                if y != 1:
                    return None
                # the zero block joins its ±1 to both neighbours
                k = b[b.index(1) + 1]
                arcs += [Arc(-k, -1), Arc(-k, 1), Arc(-1, k), Arc(1, k)]
            else:
                arcs.append(Arc(x, y))
    return ArcDiagram("D", tuple(sorted(set(arcs))))


def _b_coord(x: int) -> int:
    return x


def _d_coord(x: int) -> int:
    return 0 if abs(x) == 1 else x


def _has_nesting(arcs, coord) -> bool:
    spans = [(coord(a.lo), coord(a.hi)) for a in arcs]
    for (lo, hi), (lo2, hi2) in combinations(spans, 2):
        if (lo < lo2 and hi2 < hi) or (lo2 < lo and hi < hi2):
            return True
    return False


def is_nonnesting_b(pi: SignedPartition) -> bool:
    return not _has_nesting(b_arc_diagram(pi).arcs, _b_coord)


def is_nonnesting_d(pi: SignedPartition) -> bool:
    if not is_d_partition(pi):
        raise NotADPartition(f"{pi} has a zero block with two elements")
    diagram = d_arc_diagram(pi)
    if diagram is None:
        return False
    return not _has_nesting(diagram.arcs, _d_coord)


# Classifications of the difference sets


class NNKind(enum.Enum):
    KIND1 = 1
    KIND2 = 2


class NCCase(enum.Enum):
    CASE1 = 1
    CASE2 = 2
    CASE3 = 3


def _pairs_in_row(pi: SignedPartition):
    for b in pi.blocks:
        yield from _consecutive(b)


def classify_nn_d_minus_b(pi: SignedPartition) -> NNKind | None:
    """Which of the two ways a nonnesting D_n-partition fails to be nonnesting in B."""
    if not is_nonnesting_d(pi):
        raise PreconditionError(f"{pi} is not a nonnesting D_n-partition")
    z = pi.zero_block
    if z is None:
        b = pi.block_of(1)
        k = b.index(1)
        if 0 < k < len(b) - 1:
            j, i = -b[k - 1], b[k + 1]
            if 1 < i < j:
                return NNKind.KIND1
        return None
    if 1 in z:
        k = z[z.index(1) + 1]
        for x, y in _pairs_in_row(pi):
            if x < 0 < y and 1 < -x < y < k:
                return NNKind.KIND2
    return None


def line_rank(x: int, n: int) -> int:
    """Position of x on the B line -1 < -2 < ... < -n < 1 < ... < n.

    This is the 2n-gon cut open between n and -1.
    """
    return -x if x < 0 else n + x


def nc_b_minus_d_conditions(pi: SignedPartition) -> tuple[bool, bool, bool]:
    """The three ways a noncrossing B_n-partition can fail to lie in NC^D(n).

    1. the zero block is exactly {-1, 1};
    2. there is a zero block and it avoids 1;
    3. there is no zero block, the block B holding 1 has a neighbour i of 1,
       and another block pair has adjacent entries -k, j with
       -k < 1 < i < j or -k < i < 1 < j, adjacency and order both taken
       along the cut line.
    """
    n = pi.n
    z = pi.zero_block
    one = z == (-1, 1)
    two = z is not None and 1 not in z
    rank = lambda x: line_rank(x, n)
    b = sorted(pi.block_of(1), key=rank)
    k = b.index(1)
    three = False
    if z is not None:
        return one, two, three
    for i in (b[k + d] for d in (-1, 1) if 0 <= k + d < len(b)):
        lo, hi = sorted((rank(1), rank(i)))
        for other in pi.blocks:
            if 1 in other or -1 in other:
                continue
            ol = sorted(other, key=rank)
            if any(x < 0 < y and rank(x) < lo and hi < rank(y) for x, y in zip(ol, ol[1:])):
                three = True
    return one, two, three


def classify_nc_b_minus_d(pi: SignedPartition) -> NCCase | None:
    """Which of the three ways a noncrossing B_n-partition fails to be in NC^D."""
    if not is_noncrossing_b(pi):
        raise PreconditionError(f"{pi} is not a noncrossing B_{pi.n}-partition")
    for case, hit in zip(NCCase, nc_b_minus_d_conditions(pi)):
        if hit:
            return case
    return None

"""Signed set partitions of types B and D.

A B_n-partition is a set partition of {±1, ..., ±n} closed under negation with
at most one block fixed by negation (the zero block).  A D_n-partition is a
B_n-partition whose zero block, when present, has more than two elements.

Blocks are stored as sorted tuples of nonzero integers and a partition as a
canonically ordered tuple of blocks, so equal partitions compare and hash
equal.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import (
    MultipleZeroBlocks,
    NotAPartition,
    NotNegationClosed,
    PartitionSyntaxError,
)

Block = tuple[int, ...]


def negate(block: Iterable[int]) -> Block:
    return tuple(sorted(-x for x in block))


def positive_part(block: Iterable[int]) -> Block:
    return tuple(x for x in block if x > 0)


def negative_part(block: Iterable[int]) -> Block:
    return tuple(x for x in block if x < 0)


def is_mixed(block: Iterable[int]) -> bool:
    """True if the block has both positive and negative entries."""
    block = tuple(block)
    return any(x > 0 for x in block) and any(x < 0 for x in block)


def least_positive(block: Iterable[int]) -> int | None:
    """s(B): the least positive entry of the block, or None."""
    pos = positive_part(block)
    return min(pos) if pos else None


def largest_negative_abs(block: Iterable[int]) -> int | None:
    """w(B): absolute value of the largest negative entry, or None."""
    neg = negative_part(block)
    return -max(neg) if neg else None


def _block_key(block: Block) -> tuple[int, int]:
    m = min(abs(x) for x in block)
    return (m, -1 if -m in block else 1)


@dataclass(frozen=True)
class SignedPartition:
    n: int
    blocks: tuple[Block, ...]

    def __str__(self) -> str:
        return render(self)

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    @property
    def zero_block(self) -> Block | None:
        for b in self.blocks:
            if b == negate(b):
                return b
        return None

    def block_of(self, x: int) -> Block:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def nonzero_pairs(self) -> list[tuple[Block, Block]]:
        """One (B, -B) pair per nonzero block pair, B being the block listed first."""
        seen = set()
        pairs = []
        for b in self.blocks:
            nb = negate(b)
            if b == nb or b in seen:
                continue
            seen.add(b)
            seen.add(nb)
            pairs.append((b, nb))
        return pairs

    def negated(self) -> SignedPartition:
        return canonicalize([negate(b) for b in self.blocks], self.n)

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}


def from_blocks(blocks: Iterable[Iterable[int]], n: int) -> SignedPartition:
    """Build a partition from blocks already known to be valid (no checks)."""
    bs = [tuple(sorted(b)) for b in blocks]
    bs.sort(key=_block_key)
    return SignedPartition(n, tuple(bs))


def canonicalize(raw_blocks: Iterable[Iterable[int]], n: int) -> SignedPartition:
    """Validate ``raw_blocks`` as a B_n-partition and return it in canonical form."""
    if not isinstance(n, int) or n < 1:
        raise NotAPartition(f"rank must be a positive integer, got {n!r}")
    blocks = []
    seen: set[int] = set()
    for raw in raw_blocks:
        raw = list(raw)
        if not raw:
            raise NotAPartition("empty block")
        b = set(raw)
        if len(b) != len(raw):
            raise NotAPartition(f"repeated element in block {sorted(raw)}")
        for x in b:
            if not isinstance(x, int) or x == 0 or abs(x) > n:
                raise NotAPartition(f"element {x!r} is not in [±{n}]")
        if seen & b:
            raise NotAPartition(f"blocks overlap on {sorted(seen & b)}")
        seen |= b
        blocks.append(tuple(sorted(b)))
    missing = set(range(-n, 0)) | set(range(1, n + 1))
    missing -= seen
    if missing:
        raise NotAPartition(f"elements {sorted(missing)} are not covered")
    as_set = set(blocks)
    zero = 0
    for b in blocks:
        nb = negate(b)
        if nb not in as_set:
            raise NotNegationClosed(f"negation of block {list(b)} is not a block")
        if nb == b:
            zero += 1
    if zero > 1:
        raise MultipleZeroBlocks(f"{zero} blocks are fixed by negation")
    blocks.sort(key=_block_key)
    return SignedPartition(n, tuple(blocks))


def is_d_partition(pi: SignedPartition) -> bool:
    z = pi.zero_block
    return z is None or len(z) > 2


class StatProfile(NamedTuple):
    openers: frozenset[int]
    closers: frozenset[int]
    transients: frozenset[int]
    has_zero_block: bool
    zero_block_contains_one: bool

    @property
    def triple(self) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
        return (self.openers, self.closers, self.transients)

    def to_json(self) -> dict:
        return {
            "openers": sorted(self.openers),
            "closers": sorted(self.closers),
            "transients": sorted(self.transients),
            "has_zero_block": self.has_zero_block,
            "zero_block_contains_one": self.zero_block_contains_one,
        }


def stat_profile(pi: SignedPartition) -> StatProfile:
    op, cl = set(), set()
    for b in pi.blocks:
        if b[0] > 0:
            op.add(b[0])
            cl.add(b[-1])
        elif b[-1] > 0:
            cl.add(abs(b[0]))
            cl.add(abs(b[-1]))
    tr = set(range(1, pi.n + 1)) - op - cl
    z = pi.zero_block
    return StatProfile(
        frozenset(op),
        frozenset(cl),
        frozenset(tr),
        z is not None,
        z is not None and 1 in z,
    )


def shape(pi: SignedPartition) -> tuple[int, ...]:
    """Type of the partition: one part per pair {B, -B} plus |B0| for the zero block."""
    parts = [len(b) for b, _ in pi.nonzero_pairs()]
    z = pi.zero_block
    if z is not None:
        parts.append(len(z))
    return tuple(sorted(parts, reverse=True))


_TOKEN = re.compile(r"\s*(?:(\{)|(\})|(,)|(-?\d+))")


def parse_blocks(text: str) -> list[list[int]]:
    """Parse the brace grammar into a list of integer blocks (no validation)."""
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PartitionSyntaxError(f"unexpected character at {pos}: {text[pos:pos + 10]!r}")
        pos = m.end()
        if m.group(4) is not None:
            tokens.append(int(m.group(4)))
        else:
            tokens.append(m.group(0).strip())
    tokens.append(None)

    i = 0

    def expect(tok):
        nonlocal i
        if tokens[i] != tok:
            raise PartitionSyntaxError(f"expected {tok!r}, got {tokens[i]!r}")
        i += 1

    expect("{")
    blocks = []
    while True:
        expect("{")
        block = []
        while True:
            if not isinstance(tokens[i], int):
                raise PartitionSyntaxError(f"expected integer, got {tokens[i]!r}")
            block.append(tokens[i])
            i += 1
            if tokens[i] == ",":
                i += 1
                continue
            expect("}")
            break
        blocks.append(block)
        if tokens[i] == ",":
            i += 1
            continue
        expect("}")
        break
    if tokens[i] is not None:
        raise PartitionSyntaxError(f"trailing input after partition: {tokens[i]!r}")
    return blocks


def parse(text: str, n: int | None = None) -> SignedPartition:
    """Parse a partition written as ``{{-1,1},{2,3},{-2,-3}}``.

    The JSON form ``{"n": 2, "blocks": [[-1, 1], ...]}`` is accepted as well
    and carries its own rank.  The brace form needs ``n``: it is never
    inferred, so an input missing its largest elements fails loudly.
    """
    stripped = text.strip()
    if stripped.startswith("{") and '"' in stripped:
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PartitionSyntaxError(str(exc)) from exc
        if n is not None and data.get("n") != n:
            raise PartitionSyntaxError(f"rank mismatch: -n {n} vs n={data.get('n')}")
        return canonicalize(data["blocks"], data["n"])
    blocks = parse_blocks(stripped)
    if n is None:
        raise PartitionSyntaxError("rank n is required for the brace form")
    return canonicalize(blocks, n)


def render(pi: SignedPartition) -> str:
    return "{" + ",".join("{" + ",".join(map(str, b)) + "}" for b in pi.blocks) + "}"

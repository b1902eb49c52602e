"""The maps iota, f and xi and the composite NN^D(n) -> NC^D(n) bijection.

``iota`` moves a nonnesting D_n-partition into NN^B(n), ``f`` is the
statistic-preserving bijection NN^B(n) -> NC^B(n), and ``xi`` carries the
image of ``f . iota`` into NC^D(n).  Every map returns a case tag alongside
its result so a run can be audited.

``f`` is realised by matching (openers, closers, transients) against a
certified index of the target family: the profile is injective on both type
B families (checked when the index is built), so a profile-preserving
bijection is determined by it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .diagrams import is_noncrossing_b, is_noncrossing_d, is_nonnesting_b, is_nonnesting_d
from .enumeration import family_index
from .errors import NotInDomain, NotInImage, PreconditionError
from .partition import (
    Block,
    SignedPartition,
    from_blocks,
    is_d_partition,
    is_mixed,
    largest_negative_abs,
    least_positive,
    negate,
    negative_part,
    positive_part,
    stat_profile,
)


@dataclass(frozen=True)
class IotaCase:
    tag: str  # "Case1", "Case2" or "Identity"
    s: int = 0

    def to_json(self) -> dict:
        out = {"case": "iota." + self.tag[-1] if self.tag != "Identity" else "iota.id"}
        if self.tag == "Case2":
            out["s"] = self.s
        return out


@dataclass(frozen=True)
class XiCase:
    tag: str  # "Case1" .. "Case5" or "Identity"
    k: int = 0

    def to_json(self) -> dict:
        out = {"case": "xi." + self.tag[-1] if self.tag != "Identity" else "xi.id"}
        if self.tag in ("Case3", "Case4", "Case5"):
            out["k"] = self.k
        return out


def _neg(xs) -> tuple[int, ...]:
    return tuple(-x for x in xs)


def _pm(xs) -> tuple[int, ...]:
    return tuple(xs) + _neg(xs)


def _build(n: int, pairs: list, zero=None) -> SignedPartition:
    blocks = []
    for b in pairs:
        blocks.append(tuple(b))
        blocks.append(negate(b))
    if zero:
        blocks.append(tuple(zero))
    return from_blocks(blocks, n)


def _mixed_reps(pi: SignedPartition, key: str, exclude=()) -> list[Block]:
    """One block from each mixed pair: the one with w(B) < s(B) (key="ws") or
    s(B) < w(B) (key="sw")."""
    reps = []
    for b, nb in pi.nonzero_pairs():
        if not is_mixed(b) or b in exclude or nb in exclude:
            continue
        s, w = least_positive(b), largest_negative_abs(b)
        if (w < s) == (key == "ws"):
            reps.append(b)
        else:
            reps.append(nb)
    return reps


def _others(pi: SignedPartition, used) -> list[Block]:
    """Nonzero pair representatives of pi not touching any block in ``used``."""
    used = set(used) | {negate(b) for b in used}
    return [b for b, _ in pi.nonzero_pairs() if b not in used]


# iota


def iota(pi: SignedPartition) -> tuple[SignedPartition, IotaCase]:
    if not is_d_partition(pi) or not is_nonnesting_d(pi):
        raise PreconditionError(f"{pi} is not a nonnesting D_{pi.n}-partition")
    n = pi.n
    z = pi.zero_block
    if z is None:
        b1 = pi.block_of(1)
        rest = tuple(x for x in b1 if x != 1)
        s, w = least_positive(rest), largest_negative_abs(b1)
        if s is not None and w is not None and 1 < s < w:
            c0 = _pm(positive_part(rest))
            c1 = _neg(negative_part(b1)) + (1,)
            return _build(n, [c1] + _others(pi, [b1]), c0), IotaCase("Case1")
        return pi, IotaCase("Identity")
    if 1 not in z:
        return pi, IotaCase("Identity")
    chain = sorted(_mixed_reps(pi, "ws"), key=least_positive)
    if not chain:
        return pi, IotaCase("Identity")
    s = len(chain)
    ws = [largest_negative_abs(b) for b in chain]
    ss = [least_positive(b) for b in chain]
    if not (1 < ws[-1] and all(a > b for a, b in zip(ws, ws[1:])) and ws[0] < ss[0]):
        raise PreconditionError(f"mixed blocks of {pi} do not form a nested chain")
    B = [None] + chain  # 1-based
    p = lambda l: positive_part(B[l])
    q = lambda l: negative_part(B[l])
    c0 = _pm(p(s))
    if s == 1:
        cs = [q(1) + positive_part(z)]
    else:
        cs = [_neg(p(s - 1)) + positive_part(z), q(2) + _neg(q(1))]
        cs += [q(l) + p(l - 2) for l in range(3, s + 1)]
    return _build(n, cs + _others(pi, chain), c0), IotaCase("Case2", s)


def in_iota_image(pi: SignedPartition) -> bool:
    """Membership in iota(NN^D(n)), for pi already known to be in NN^B(n)."""
    z = pi.zero_block
    if z is None:
        return True
    if 1 in z:
        return len(z) > 2
    rest = [x for x in pi.block_of(1) if x != 1]
    return bool(rest) and any(x > 0 for x in rest)


def iota_inverse(pi: SignedPartition) -> SignedPartition:
    if not is_nonnesting_b(pi) or not in_iota_image(pi):
        raise NotInImage(f"{pi} is not in the image of iota")
    n = pi.n
    z = pi.zero_block
    if z is None or 1 in z:
        return pi
    c1 = pi.block_of(1)
    rest = tuple(x for x in c1 if x != 1)
    if all(x > 0 for x in rest):
        b1 = _neg(rest) + (1,) + positive_part(z)
        return _build(n, [b1] + _others(pi, [c1]))
    mixed = [b for b in _mixed_reps(pi, "ws", exclude=[c1])]
    cs = sorted(mixed, key=largest_negative_abs, reverse=True)  # C_2, ..., C_s
    s = len(cs) + 1
    C = [None, c1] + cs
    bp = {s: positive_part(z)}
    bn = {}
    if s == 1:
        bn[1] = negative_part(c1)
    else:
        bp[s - 1] = _neg(negative_part(c1))
        bn[1] = _neg(positive_part(C[2]))
        for l in range(2, s + 1):
            bn[l] = negative_part(C[l])
        for l in range(3, s + 1):
            bp[l - 2] = positive_part(C[l])
    zero = _pm(positive_part(c1))
    chain = [bn[l] + bp[l] for l in range(1, s + 1)]
    return _build(n, chain + _others(pi, C[1:]), zero)


# f


def f_forward(pi: SignedPartition, **kwargs) -> SignedPartition:
    if not is_nonnesting_b(pi):
        raise PreconditionError(f"{pi} is not a nonnesting B_{pi.n}-partition")
    return family_index("NC_B", pi.n, **kwargs)[stat_profile(pi)]


def f_inverse(pi: SignedPartition, **kwargs) -> SignedPartition:
    if not is_noncrossing_b(pi):
        raise PreconditionError(f"{pi} is not a noncrossing B_{pi.n}-partition")
    return family_index("NN_B", pi.n, **kwargs)[stat_profile(pi)]


# xi


def _xi_chain(head: Block, reps: list[Block], head_sign: int, tail: tuple) -> list[tuple]:
    """Rewire B_1 minus 1 and the mixed representatives into C_1, ..., C_k.

    With head_sign = +1 each C_l takes the positive part of B_l and the
    negative part of B_(l+1); with -1 the roles of the signs swap.
    """
    take_own = positive_part if head_sign > 0 else negative_part
    take_next = negative_part if head_sign > 0 else positive_part
    parts = [head] + reps
    cs = []
    for l, b in enumerate(parts):
        own = b if l == 0 else take_own(b)
        nxt = take_next(parts[l + 1]) if l + 1 < len(parts) else tail
        cs.append(tuple(own) + tuple(nxt))
    return cs


def xi(pi: SignedPartition) -> tuple[SignedPartition, XiCase]:
    if not is_noncrossing_b(pi) or not in_iota_image(pi):
        raise NotInDomain(f"{pi} is not in (f . iota)(NN^D({pi.n}))")
    n = pi.n
    z = pi.zero_block
    b1 = pi.block_of(1)
    rest = tuple(x for x in b1 if x != 1)
    rest_mixed = is_mixed(rest)
    if z is not None and 1 in z:
        return pi, XiCase("Identity")
    if z is not None:
        if rest_mixed:
            c0 = tuple(z) + (1, -1)
            return _build(n, [rest] + _others(pi, [b1]), c0), XiCase("Case1")
        reps = sorted(_mixed_reps(pi, "sw", exclude=[b1]), key=least_positive)
        cs = _xi_chain(rest, reps, +1, (-1,) + negative_part(z))
        return _build(n, cs + _others(pi, [b1] + reps)), XiCase("Case5", len(reps) + 1)
    others = [b for b, nb in pi.nonzero_pairs() if is_mixed(b) and 1 not in b and -1 not in b]
    if not rest or not others:
        return pi, XiCase("Identity")
    if rest_mixed:
        b2 = max(_mixed_reps(pi, "sw", exclude=[b1]), key=least_positive)
        cs = [rest, tuple(b2) + (1,)]
        return _build(n, cs + _others(pi, [b1, b2])), XiCase("Case2")
    reps = sorted(_mixed_reps(pi, "sw", exclude=[b1]), key=least_positive)
    if all(x > 0 for x in rest):
        cs = _xi_chain(rest, reps, +1, (1,))
        tag = "Case3"
    else:
        cs = _xi_chain(rest, reps, -1, (1,))
        tag = "Case4"
    return _build(n, cs + _others(pi, [b1] + reps)), XiCase(tag, len(reps) + 1)


def nn_to_nc_d(pi: SignedPartition) -> SignedPartition:
    """The composite xi . f . iota from NN^D(n) onto NC^D(n)."""
    b, _ = iota(pi)
    c = f_forward(b)
    d, _ = xi(c)
    return d


def _unchain(head_sign: int, links: list[Block], last: tuple) -> list[tuple]:
    """Undo ``_xi_chain``: recover B_1 (with 1 put back) and B_2, ..., B_k."""
    own = positive_part if head_sign > 0 else negative_part
    nxt = negative_part if head_sign > 0 else positive_part
    heads = [own(c) for c in links] + [last]
    blocks = [(1,) + tuple(heads[0])]
    for l in range(1, len(heads)):
        blocks.append(tuple(nxt(links[l - 1])) + tuple(heads[l]))
    return blocks


def xi_inverse(pi: SignedPartition) -> SignedPartition:
    if not is_d_partition(pi) or not is_noncrossing_d(pi):
        raise PreconditionError(f"{pi} is not a noncrossing D_{pi.n}-partition")
    if is_noncrossing_b(pi):
        return pi
    n = pi.n
    z = pi.zero_block
    if z is not None:
        # Case 1: split ±1 off the zero block and return 1 to the outermost mixed block
        c1 = max(_mixed_reps(pi, "sw"), key=largest_negative_abs)
        zero = tuple(x for x in z if abs(x) != 1)
        return _build(n, [c1 + (1,)] + _others(pi, [c1]), zero)
    d = pi.block_of(1)
    rest = tuple(x for x in d if x != 1)
    links = sorted(_mixed_reps(pi, "sw", exclude=[d]), key=largest_negative_abs, reverse=True)
    if all(x > 0 for x in rest):
        blocks = _unchain(+1, links, rest)
        return _build(n, blocks + _others(pi, [d] + links))
    if all(x < 0 for x in rest):
        blocks = _unchain(-1, links, rest)
        return _build(n, blocks + _others(pi, [d] + links))
    if least_positive(rest) < largest_negative_abs(rest):
        # Case 2
        c1 = links[0]
        return _build(n, [c1 + (1,), rest] + _others(pi, [d, c1]))
    # Case 5
    zero = _pm(positive_part(rest))
    blocks = _unchain(+1, links, _neg(negative_part(rest)))
    return _build(n, blocks + _others(pi, [d] + links), zero)


def nc_to_nn_d(pi: SignedPartition) -> SignedPartition:
    """Inverse of ``nn_to_nc_d``."""
    return iota_inverse(f_inverse(xi_inverse(pi)))

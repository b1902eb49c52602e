"""Exhaustive enumeration of B_n/D_n partitions and of the four Catalan families.

Families are cached on disk as JSON lines: a header object followed by one
partition per line in the brace grammar.  The cache is only a shortcut; every
read is keyed by a hash of the package source, and ``use_cache=False`` skips
it entirely.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
from dataclasses import dataclass, field
from math import comb
from pathlib import Path

from .diagrams import is_noncrossing_b, is_noncrossing_d
from .errors import CountMismatch, ProfileCollision, ProfileNotFound, RankTooLarge
from .partition import (
    SignedPartition,
    StatProfile,
    from_blocks,
    is_d_partition,
    parse,
    render,
    stat_profile,
)
from .roots import antichain_to_partition, antichains

log = logging.getLogger(__name__)

LABELS = ("ALL_B", "ALL_D", "NN_B", "NC_B", "NN_D", "NC_D")
MAX_RANK = 7


def catalan_b(n: int) -> int:
    return comb(2 * n, n)


def catalan_d(n: int) -> int:
    return (3 * n - 2) * comb(2 * n - 2, n - 1) // n


def _sort_key(pi: SignedPartition):
    return render(pi)


def iter_all_b(n: int):
    """Every B_n-partition, built by placing ±1, ±2, ... one pair at a time.

    Element k either opens a new pair {k}, {-k}, joins a block B (with -k
    joining -B) under either sign, or joins the zero block.
    """

    def rec(k, pairs, zero):
        if k > n:
            blocks = [p for p in pairs] + [[-x for x in p] for p in pairs]
            if zero:
                blocks.append(zero)
            yield from_blocks(blocks, n)
            return
        yield from rec(k + 1, pairs + [[k]], zero)
        for i, p in enumerate(pairs):
            for x in (k, -k):
                yield from rec(k + 1, pairs[:i] + [p + [x]] + pairs[i + 1:], zero)
        yield from rec(k + 1, pairs, (zero or []) + [k, -k])

    yield from rec(1, [], None)


@dataclass
class Family:
    label: str
    n: int
    members: list[SignedPartition]

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, pi) -> bool:
        return pi in self.as_set

    @property
    def as_set(self) -> frozenset[SignedPartition]:
        s = self.__dict__.get("_set")
        if s is None:
            s = self.__dict__["_set"] = frozenset(self.members)
        return s


def _check_label(label: str, n: int, max_rank: int) -> None:
    if label not in LABELS:
        raise ValueError(f"unknown family {label!r}; expected one of {LABELS}")
    if n < 1 or (label.endswith("_D") and n < 2):
        raise ValueError(f"{label} needs a larger rank than {n}")
    if n > max_rank:
        raise RankTooLarge(f"rank {n} exceeds the configured maximum {max_rank}")


def _generate(label: str, n: int) -> list[SignedPartition]:
    if label == "ALL_B":
        out = list(iter_all_b(n))
    elif label == "ALL_D":
        out = [p for p in iter_all_b(n) if is_d_partition(p)]
    elif label == "NN_B":
        out = [antichain_to_partition(a) for a in antichains("B", n)]
    elif label == "NN_D":
        out = [antichain_to_partition(a) for a in antichains("D", n)]
    elif label == "NC_B":
        out = [p for p in iter_all_b(n) if is_noncrossing_b(p)]
    else:
        out = [p for p in iter_all_b(n) if is_d_partition(p) and is_noncrossing_d(p)]
    out.sort(key=_sort_key)
    return out


def code_version() -> str:
    h = hashlib.sha256()
    for path in sorted(Path(__file__).parent.glob("*.py")):
        h.update(path.read_bytes())
    return h.hexdigest()[:16]


def default_cache_dir() -> Path:
    env = os.environ.get("COXNEST_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "coxnest"


def _cache_path(cache_dir: Path, label: str, n: int) -> Path:
    return Path(cache_dir) / f"{label}_{n}.jsonl"


def write_cache(path: Path, family: Family, version: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    header = {"label": family.label, "n": family.n, "count": len(family), "version": version}
    tmp = path.with_suffix(".tmp")
    with open(tmp, "w") as fh:
        fh.write(json.dumps(header) + "\n")
        for pi in family.members:
            fh.write(render(pi) + "\n")
    tmp.replace(path)


def read_cache(path: Path, label: str, n: int, version: str) -> Family | None:
    try:
        with open(path) as fh:
            header = json.loads(fh.readline())
            if (header.get("label"), header.get("n"), header.get("version")) != (label, n, version):
                return None
            members = [parse(line, n) for line in fh if line.strip()]
    except (OSError, ValueError) as exc:
        log.debug("ignoring cache %s: %s", path, exc)
        return None
    if len(members) != header.get("count"):
        return None
    return Family(label, n, members)


_memo: dict[tuple[str, int], Family] = {}


def enumerate_all(
    label: str,
    n: int,
    *,
    use_cache: bool = False,
    cache_dir: Path | str | None = None,
    max_rank: int = MAX_RANK,
) -> Family:
    """Complete, duplicate-free, canonically sorted listing of one family."""
    _check_label(label, n, max_rank)
    key = (label, n)
    if key in _memo:
        return _memo[key]
    family = None
    path = None
    if use_cache:
        version = code_version()
        path = _cache_path(Path(cache_dir) if cache_dir else default_cache_dir(), label, n)
        family = read_cache(path, label, n, version)
    if family is None:
        family = Family(label, n, _generate(label, n))
        if path is not None:
            write_cache(path, family, version)
    _memo[key] = family
    return family


@dataclass
class FamilyIndex:
    family: Family
    by_profile: dict[StatProfile, SignedPartition] = field(repr=False)

    def __getitem__(self, profile: StatProfile) -> SignedPartition:
        try:
            return self.by_profile[profile]
        except KeyError:
            raise ProfileNotFound(
                f"no member of {self.family.label}({self.family.n}) has profile {profile}"
            ) from None


def build_index(family: Family) -> FamilyIndex:
    """Map each member's StatProfile to it, refusing any collision."""
    if family.label not in ("NN_B", "NC_B"):
        raise ValueError(f"profile index is defined for NN_B and NC_B, not {family.label}")
    by_profile: dict[StatProfile, SignedPartition] = {}
    for pi in family.members:
        prof = stat_profile(pi)
        if prof in by_profile:
            raise ProfileCollision(prof, by_profile[prof], pi)
        by_profile[prof] = pi
    return FamilyIndex(family, by_profile)


_index_memo: dict[tuple[str, int], FamilyIndex] = {}


def family_index(label: str, n: int, **kwargs) -> FamilyIndex:
    key = (label, n)
    if key not in _index_memo:
        _index_memo[key] = build_index(enumerate_all(label, n, **kwargs))
    return _index_memo[key]


def verify_counts(n: int, **kwargs) -> dict[str, int]:
    counts = {label: len(enumerate_all(label, n, **kwargs)) for label in ("NN_B", "NC_B")}
    if n >= 2:
        counts.update({label: len(enumerate_all(label, n, **kwargs)) for label in ("NN_D", "NC_D")})
    if counts["NN_B"] != counts["NC_B"]:
        raise CountMismatch(f"n={n}: |NN_B|={counts['NN_B']} but |NC_B|={counts['NC_B']}")
    if n >= 2 and counts["NN_D"] != counts["NC_D"]:
        raise CountMismatch(f"n={n}: |NN_D|={counts['NN_D']} but |NC_D|={counts['NC_D']}")
    return counts

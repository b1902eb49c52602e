"""Exhaustive invariant checks for one rank, shared by the CLI and the tests.

Each check walks the enumerated families in canonical order and stops at the
first failure, so a reported counterexample is the smallest one in render
order at that rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .bijection import (
    f_forward,
    f_inverse,
    in_iota_image,
    iota,
    iota_inverse,
    nc_to_nn_d,
    nn_to_nc_d,
    xi,
    xi_inverse,
)
from .diagrams import (
    classify_nc_b_minus_d,
    classify_nn_d_minus_b,
    is_noncrossing_b,
    is_noncrossing_d,
    is_nonnesting_b,
    is_nonnesting_d,
    nc_b_minus_d_conditions,
)
from .enumeration import build_index, catalan_b, catalan_d, enumerate_all
from .errors import CoxnestError
from .partition import is_d_partition, parse, render, shape, stat_profile
from .roots import antichain_to_partition, antichains, partition_to_antichain


@dataclass
class CheckResult:
    name: str
    n: int
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status} n={self.n} {self.name}{tail}"


class _Fail(Exception):
    pass


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


class Checker:
    """Runs the invariant suite for a single rank n."""

    def __init__(self, n: int, **cache_kwargs):
        self.n = n
        self.kw = cache_kwargs

    def fam(self, label: str):
        return enumerate_all(label, self.n, **self.kw)

    # counts and enumeration

    def check_counts(self):
        n = self.n
        _require(len(self.fam("NN_B")) == catalan_b(n), f"|NN_B|={len(self.fam('NN_B'))}")
        _require(len(self.fam("NC_B")) == catalan_b(n), f"|NC_B|={len(self.fam('NC_B'))}")
        _require(len(self.fam("NN_D")) == catalan_d(n), f"|NN_D|={len(self.fam('NN_D'))}")
        _require(len(self.fam("NC_D")) == catalan_d(n), f"|NC_D|={len(self.fam('NC_D'))}")
        return f"NN_B=NC_B={catalan_b(n)} NN_D=NC_D={catalan_d(n)}"

    def check_parse_render(self):
        for pi in self.fam("ALL_B"):
            _require(parse(render(pi), self.n) == pi, render(pi))

    def check_predicates_match_antichains(self):
        all_b = self.fam("ALL_B")
        nn_b = {p for p in all_b if is_nonnesting_b(p)}
        nn_d = {p for p in all_b if is_d_partition(p) and is_nonnesting_d(p)}
        _require(nn_b == self.fam("NN_B").as_set, "NN_B predicate vs antichains")
        _require(nn_d == self.fam("NN_D").as_set, "NN_D predicate vs antichains")

    def check_antichain_roundtrip(self):
        for system in ("B", "D"):
            for a in antichains(system, self.n):
                pi = antichain_to_partition(a)
                _require(partition_to_antichain(system, pi).roots == a.roots, f"{system} {sorted(map(str, a.roots))}")

    def check_profile_injective(self):
        for label in ("NN_B", "NC_B"):
            build_index(self.fam(label))  # raises ProfileCollision
        keys_nn = {stat_profile(p) for p in self.fam("NN_B")}
        keys_nc = {stat_profile(p) for p in self.fam("NC_B")}
        _require(keys_nn == keys_nc, "profile sets of NN_B and NC_B differ")

    # the three maps

    def check_f(self):
        image = set()
        for pi in self.fam("NN_B"):
            q = f_forward(pi, **self.kw)
            _require(is_noncrossing_b(q), f"f({render(pi)}) not noncrossing")
            _require(stat_profile(q) == stat_profile(pi), f"f changes profile of {render(pi)}")
            _require(f_inverse(q, **self.kw) == pi, f"f round trip {render(pi)}")
            image.add(q)
        _require(image == self.fam("NC_B").as_set, "f is not onto NC_B")

    def check_iota(self):
        image = set()
        for pi in self.fam("NN_D"):
            q, case = iota(pi)
            _require(is_nonnesting_b(q), f"iota({render(pi)}) not in NN_B")
            _require(iota_inverse(q) == pi, f"iota round trip {render(pi)}")
            a, b = stat_profile(pi), stat_profile(q)
            if case.tag == "Case1":
                ok = b.openers == a.openers | {1} and b.closers == a.closers and b.transients == a.transients - {1}
            else:
                ok = b.triple == a.triple
            _require(ok, f"iota statistics ledger fails on {render(pi)}")
            image.add(q)
        _require(len(image) == len(self.fam("NN_D")), "iota not injective")
        expected = {p for p in self.fam("NN_B") if in_iota_image(p)}
        _require(image == expected, "iota image differs from its characterization")

    def check_xi(self):
        n = self.n
        nc_d = self.fam("NC_D").as_set
        image = set()
        for pi in self.fam("NN_D"):
            b, icase = iota(pi)
            c = f_forward(b, **self.kw)
            d, xcase = xi(c)
            _require(d in nc_d, f"xi({render(c)}) not in NC_D")
            _require(xi_inverse(d) == c, f"xi round trip {render(c)}")
            if xcase.tag == "Identity":
                _require(d == c, f"xi identity moved {render(c)}")
            else:
                _require(not is_noncrossing_b(d), f"xi {xcase.tag} of {render(c)} lies in NC_B")
            a, e = stat_profile(c), stat_profile(d)
            if xcase.tag == "Case5":
                ok = 1 in a.openers and 1 in e.transients
                ok = ok and e.openers == a.openers - {1} and e.transients == a.transients | {1}
            else:
                ok = a.triple == e.triple
            _require(ok, f"xi statistics ledger fails on {render(c)}")
            _require((icase.tag == "Case1") == (xcase.tag == "Case5"), f"iota Case1 vs xi Case5 on {render(pi)}")
            image.add(d)
        _require(image == nc_d, f"xi not onto NC_D({n})")
        for q in self.fam("NC_D"):
            _require(xi(xi_inverse(q))[0] == q, f"xi inverse round trip {render(q)}")

    def check_composite(self):
        nn_d, nc_d = self.fam("NN_D"), self.fam("NC_D")
        image = {}
        for pi in nn_d:
            q = nn_to_nc_d(pi)
            _require(stat_profile(q).triple == stat_profile(pi).triple, f"composite changes triple of {render(pi)}")
            _require(nc_to_nn_d(q) == pi, f"composite round trip {render(pi)}")
            _require(q not in image, f"composite collision {render(image.get(q, pi))} / {render(pi)}")
            image[q] = pi
        _require(set(image) == nc_d.as_set, "composite not onto NC_D")
        for q in nc_d:
            _require(nn_to_nc_d(nc_to_nn_d(q)) == q, f"inverse composite round trip {render(q)}")

    def check_restrictions(self):
        """NN^D cap NN^B onto NC^D cap NC^B and NN^D minus NN^B onto NC^D minus NC^B.

        Fails from n = 4 on: the two intersections already differ in size.
        """
        nn_b, nc_b = self.fam("NN_B").as_set, self.fam("NC_B").as_set
        nn_d, nc_d = self.fam("NN_D").as_set, self.fam("NC_D").as_set
        sizes = f"|NN_D&NN_B|={len(nn_d & nn_b)} |NC_D&NC_B|={len(nc_d & nc_b)}"
        for pi in self.fam("NN_D"):
            q = nn_to_nc_d(pi)
            _require((pi in nn_b) == (q in nc_b), f"{render(pi)} -> {render(q)} ({sizes})")
        return sizes

    # classifications

    def check_classifications(self):
        nn_b = self.fam("NN_B").as_set
        for pi in self.fam("NN_D"):
            kind = classify_nn_d_minus_b(pi)
            _require((kind is None) == (pi in nn_b), f"NN kind of {render(pi)} is {kind}")
        nc_d = self.fam("NC_D").as_set
        for pi in self.fam("NC_B"):
            hits = sum(nc_b_minus_d_conditions(pi))
            case = classify_nc_b_minus_d(pi)
            inside = is_d_partition(pi) and pi in nc_d
            _require(hits <= 1, f"NC conditions overlap on {render(pi)}")
            _require((case is None) == inside, f"NC case of {render(pi)} is {case}")

    def report_shape(self):
        same = sum(shape(nn_to_nc_d(pi)) == shape(pi) for pi in self.fam("NN_D"))
        return f"shape kept on {same}/{len(self.fam('NN_D'))} (reported, not asserted)"


CHECKS: list[tuple[str, Callable[[Checker], object]]] = [
    ("counts", Checker.check_counts),
    ("parse-render-roundtrip", Checker.check_parse_render),
    ("nonnesting-predicates-match-antichains", Checker.check_predicates_match_antichains),
    ("antichain-roundtrip", Checker.check_antichain_roundtrip),
    ("profile-injective", Checker.check_profile_injective),
    ("f-bijection-and-profile", Checker.check_f),
    ("iota-injective-image-inverse", Checker.check_iota),
    ("xi-bijection-and-inverse", Checker.check_xi),
    ("composite-bijection-triples-roundtrips", Checker.check_composite),
    ("restrictions", Checker.check_restrictions),
    ("classifications", Checker.check_classifications),
]


def run_checks(n: int, **cache_kwargs) -> list[CheckResult]:
    checker = Checker(n, **cache_kwargs)
    results = []
    for name, fn in CHECKS:
        try:
            detail = fn(checker)
            results.append(CheckResult(name, n, True, detail or ""))
        except _Fail as exc:
            results.append(CheckResult(name, n, False, f"counterexample: {exc}"))
        except CoxnestError as exc:
            results.append(CheckResult(name, n, False, f"{type(exc).__name__}: {exc}"))
    return results


def shape_report(n: int, **cache_kwargs) -> str:
    return Checker(n, **cache_kwargs).report_shape()

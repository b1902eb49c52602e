"""coxnest command line: enumerate, map, invert, classify, verify, counts.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
input errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import bijection as bij
from .diagrams import (
    classify_nc_b_minus_d,
    classify_nn_d_minus_b,
    is_noncrossing_b,
    is_noncrossing_d,
    is_nonnesting_b,
    is_nonnesting_d,
)
from .enumeration import LABELS, MAX_RANK, catalan_b, catalan_d, enumerate_all
from .errors import CoxnestError
from .partition import is_d_partition, parse, render, stat_profile
from .verify import run_checks, shape_report

STAGES = ("iota", "f", "xi", "full")


class UsageError(Exception):
    pass


def _rank_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = (int(t) for t in text.split("..", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO..HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty rank range {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the family cache")
    common.add_argument("--cache-dir", help="cache directory (default $COXNEST_CACHE or ~/.cache/coxnest)")

    single = argparse.ArgumentParser(add_help=False, parents=[common])
    single.add_argument("-n", type=int, help="rank")

    inputs = argparse.ArgumentParser(add_help=False, parents=[single])
    inputs.add_argument("partitions", nargs="*", help="partitions such as '{{-1,1},{2},{-2}}'")
    inputs.add_argument("--file", help="read partitions from a file, one per line")

    p = argparse.ArgumentParser(prog="coxnest", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    e = sub.add_parser("enumerate", parents=[single], help="list a family")
    e.add_argument("family", choices=LABELS)

    m = sub.add_parser("map", parents=[inputs], help="NN^D -> NC^D, or one stage of it")
    m.add_argument("--stage", choices=STAGES, default="full")
    i = sub.add_parser("invert", parents=[inputs], help="NC^D -> NN^D, or one stage of it")
    i.add_argument("--stage", choices=STAGES, default="full")

    sub.add_parser("classify", parents=[inputs], help="report memberships and difference-set cases")

    for name, helptext in (("verify", "run the invariant suite"), ("counts", "cardinality table")):
        v = sub.add_parser(name, parents=[common], help=helptext)
        v.add_argument("-n", type=_rank_range, default=None, help="rank or range LO..HI (default 2..5)")
        v.add_argument("--deep", action="store_true", help="extend the default range to 2..7")
    return p


def _cache_kwargs(args) -> dict:
    if args.no_cache:
        return {}
    return {"use_cache": True, "cache_dir": args.cache_dir or os.environ.get("COXNEST_CACHE")}


def _read_inputs(args) -> list:
    texts = list(args.partitions)
    if args.file:
        try:
            with open(args.file) as fh:
                texts += [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc}") from None
    if not texts:
        raise UsageError("no partitions given")
    try:
        return [parse(t, args.n) for t in texts]
    except CoxnestError as exc:
        raise UsageError(str(exc)) from None


def _emit(args, out, text: str, record: dict) -> None:
    out.write((json.dumps(record, sort_keys=True) if args.format == "json" else text) + "\n")


# verbs


def cmd_enumerate(args, out) -> int:
    if args.n is None:
        raise UsageError("enumerate needs -n")
    try:
        fam = enumerate_all(args.family, args.n, **_cache_kwargs(args))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    for pi in fam:
        _emit(args, out, render(pi), pi.to_json())
    return 0


def _forward(pi, stage, kw):
    tags = []
    if stage in ("iota", "full"):
        pi, case = bij.iota(pi)
        tags.append(case.to_json())
    if stage in ("f", "full"):
        pi = bij.f_forward(pi, **kw)
        tags.append({"case": "f"})
    if stage in ("xi", "full"):
        pi, case = bij.xi(pi)
        tags.append(case.to_json())
    return pi, tags


def _backward(pi, stage, kw):
    if stage in ("xi", "full"):
        pi = bij.xi_inverse(pi)
    if stage in ("f", "full"):
        pi = bij.f_inverse(pi, **kw)
    if stage in ("iota", "full"):
        pi = bij.iota_inverse(pi)
    return pi


def _tag_text(tag: dict) -> str:
    extra = ",".join(f"{k}={v}" for k, v in tag.items() if k != "case")
    return tag["case"] + (f"({extra})" if extra else "")


def cmd_map(args, out) -> int:
    for pi in _read_inputs(args):
        try:
            q, tags = _forward(pi, args.stage, _cache_kwargs(args))
        except CoxnestError as exc:
            raise UsageError(str(exc)) from None
        text = render(q) + "  " + " ".join(_tag_text(t) for t in tags)
        _emit(args, out, text, {"input": render(pi), "output": q.to_json(), "stages": tags})
    return 0


def cmd_invert(args, out) -> int:
    for pi in _read_inputs(args):
        try:
            q = _backward(pi, args.stage, _cache_kwargs(args))
        except CoxnestError as exc:
            raise UsageError(str(exc)) from None
        _emit(args, out, render(q), {"input": render(pi), "output": q.to_json()})
    return 0


def cmd_classify(args, out) -> int:
    for pi in _read_inputs(args):
        d = is_d_partition(pi)
        member = {
            "NN_B": is_nonnesting_b(pi),
            "NC_B": is_noncrossing_b(pi),
            "NN_D": d and is_nonnesting_d(pi),
            "NC_D": d and is_noncrossing_d(pi),
        }
        nn_kind = nc_case = None
        if member["NN_D"] and not member["NN_B"]:
            nn_kind = classify_nn_d_minus_b(pi).name.lower()
        if member["NC_B"] and not member["NC_D"]:
            nc_case = classify_nc_b_minus_d(pi).name.lower()
        record = {
            "partition": render(pi),
            "member": member,
            "nn_d_minus_b": nn_kind,
            "nc_b_minus_d": nc_case,
            "profile": stat_profile(pi).to_json(),
        }
        fams = ",".join(k for k, v in member.items() if v) or "-"
        text = f"{render(pi)}  in={fams} nn_d_minus_b={nn_kind or '-'} nc_b_minus_d={nc_case or '-'}"
        _emit(args, out, text, record)
    return 0


def _ranks(args) -> range:
    if args.n is not None:
        lo, hi = args.n
    else:
        lo, hi = (2, 7) if args.deep else (2, 5)
    if lo < 2 or hi > MAX_RANK:
        raise UsageError(f"ranks must lie in 2..{MAX_RANK}")
    return range(lo, hi + 1)


def cmd_verify(args, out) -> int:
    status = 0
    kw = _cache_kwargs(args)
    for n in _ranks(args):
        for r in run_checks(n, **kw):
            _emit(args, out, r.line(), {"n": n, "check": r.name, "ok": r.ok, "detail": r.detail})
            status = status or (0 if r.ok else 1)
        info = shape_report(n, **kw)
        _emit(args, out, f"INFO n={n} shape  {info}", {"n": n, "info": "shape", "detail": info})
    return status


def cmd_counts(args, out) -> int:
    kw = _cache_kwargs(args)
    status = 0
    for n in _ranks(args):
        counts = {label: len(enumerate_all(label, n, **kw)) for label in ("NN_B", "NC_B", "NN_D", "NC_D")}
        ok = counts["NN_B"] == counts["NC_B"] == catalan_b(n) and counts["NN_D"] == counts["NC_D"] == catalan_d(n)
        status = status or (0 if ok else 1)
        text = f"n={n} " + " ".join(f"{k}={v}" for k, v in counts.items())
        _emit(args, out, text, {"n": n, **counts})
    return status


COMMANDS = {
    "enumerate": cmd_enumerate,
    "map": cmd_map,
    "invert": cmd_invert,
    "classify": cmd_classify,
    "verify": cmd_verify,
    "counts": cmd_counts,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.verb](args, out)
    except UsageError as exc:
        print(f"coxnest {args.verb}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance criteria 1-8.  Each test records one PASS/FAIL line, printed
immediately and again in the terminal summary."""
import time

import pytest

from coxnest import (
    NNKind,
    Root,
    antichain_to_partition,
    antichains,
    build_index,
    classify_nc_b_minus_d,
    classify_nn_d_minus_b,
    crosses_d,
    enumerate_all,
    f_forward,
    f_inverse,
    iota,
    iota_inverse,
    is_d_partition,
    is_noncrossing_b,
    is_noncrossing_d,
    is_nonnesting_b,
    is_nonnesting_d,
    nc_to_nn_d,
    nn_to_nc_d,
    parse,
    partition_to_antichain,
    shape,
    stat_profile,
    xi,
    xi_inverse,
)
from coxnest import enumeration as en
from coxnest.diagrams import nc_b_minus_d_conditions
from coxnest.errors import ProfileCollision
from conftest import ACCEPTANCE, DEEP
from geometry import crosses_geometric
from named import IOTA_ETAF, IOTA_F, named


def report(num, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num}: {detail}"
    print(line)
    ACCEPTANCE.append(line)


def sets(pi):
    p = stat_profile(pi)
    return sorted(p.openers), sorted(p.closers), sorted(p.transients)


def test_criterion_1_printed_profiles():
    t0 = time.perf_counter()
    expected = {
        "A": ([2, 4], [1, 4, 5], [3]),
        "B": ([2], [2, 3, 4, 5], [1]),
        "B'": ([], [1, 2, 4, 5], [3]),
        "C": ([], [2, 4, 5], [1, 3]),
        "C'": ([2], [1, 3, 5], [4]),
    }
    got = {k: sets(named(k)) for k in expected}
    ok = got == expected and shape(named("A")) == (3, 2, 1)
    dt = time.perf_counter() - t0
    ok = ok and dt < 1
    report(1, ok, f"five printed (op, cl, tr) triples and type (3,2,1) of πA, {dt:.3f}s")
    assert ok, got


def test_criterion_2_memberships():
    t0 = time.perf_counter()
    B, B2, C, C2, D, E, F, H = (named(k) for k in ("B", "B'", "C", "C'", "D", "E", "F", "etaF"))
    facts = {
        "πB, πB' in NC^B": is_noncrossing_b(B) and is_noncrossing_b(B2),
        "πC in NC^D minus NC^B": is_noncrossing_d(C) and not is_noncrossing_b(C),
        "πC' in NC^D and NC^B": is_noncrossing_d(C2) and is_noncrossing_b(C2),
        "πD in NN^B": is_nonnesting_b(D),
        "πE in NN^D": is_nonnesting_d(E),
        "πF in NN^D minus NN^B, Kind1": is_nonnesting_d(F)
        and not is_nonnesting_b(F)
        and classify_nn_d_minus_b(F) is NNKind.KIND1,
        "ηF in NN^D minus NN^B, Kind2": is_nonnesting_d(H)
        and not is_nonnesting_b(H)
        and classify_nn_d_minus_b(H) is NNKind.KIND2,
    }
    dt = time.perf_counter() - t0
    ok = all(facts.values()) and dt < 1
    report(2, ok, f"{sum(facts.values())}/{len(facts)} printed membership facts, {dt:.3f}s")
    assert ok, facts


def test_criterion_3_iota_images():
    t0 = time.perf_counter()
    got_f, case_f = iota(named("F"))
    got_h, case_h = iota(named("etaF"))
    dt = time.perf_counter() - t0
    ok = (
        got_f == parse(IOTA_F[1], IOTA_F[0])
        and got_h == parse(IOTA_ETAF[1], IOTA_ETAF[0])
        and case_f.tag == "Case1"
        and case_h.tag == "Case2"
        and dt < 1
    )
    report(3, ok, f"ι(πF) and ι(ηF) equal the printed images, {dt:.3f}s")
    assert ok


CAT_B = {2: 6, 3: 20, 4: 70, 5: 252, 6: 924}
CAT_D = {2: 4, 3: 14, 4: 50, 5: 182, 6: 672}


def test_criterion_4_cardinalities():
    ranks = range(2, 7 if DEEP else 6)
    saved = dict(en._memo)
    en._memo.clear()  # time a cold enumeration
    t0 = time.perf_counter()
    got = {
        n: tuple(len(enumerate_all(label, n)) for label in ("NN_B", "NC_B", "NN_D", "NC_D")) for n in ranks
    }
    dt = time.perf_counter() - t0
    en._memo.update(saved)
    want = {n: (CAT_B[n], CAT_B[n], CAT_D[n], CAT_D[n]) for n in ranks}
    ok = got == want and dt < (120 if DEEP else 30)
    report(4, ok, f"|NN^B|=|NC^B| and |NN^D|=|NC^D| Catalan values for n={ranks.start}..{ranks.stop - 1}, {dt:.2f}s")
    assert ok, got


def _bijection_suite(n):
    """Everything criterion 5 asks for at rank n; returns (core_failures, restriction_failure)."""
    nn_b, nc_b = enumerate_all("NN_B", n).as_set, enumerate_all("NC_B", n).as_set
    nn_d, nc_d = enumerate_all("NN_D", n), enumerate_all("NC_D", n)
    fails = []
    image = {}
    restriction = None
    for pi in nn_d:
        b, _ = iota(pi)
        c = f_forward(b)
        d, _ = xi(c)
        if iota_inverse(b) != pi or f_inverse(c) != b or xi_inverse(d) != c:
            fails.append(f"stage round trip at {pi}")
        if nc_to_nn_d(d) != pi:
            fails.append(f"composite round trip at {pi}")
        if stat_profile(d).triple != stat_profile(pi).triple:
            fails.append(f"triple changed at {pi}")
        if d in image:
            fails.append(f"collision {image[d]} / {pi}")
        image[d] = pi
        if restriction is None and (pi in nn_b) != (d in nc_b):
            restriction = f"{pi} -> {d}"
    if set(image) != nc_d.as_set:
        fails.append("not onto NC^D")
    for q in nc_d:
        if nn_to_nc_d(nc_to_nn_d(q)) != q or xi(xi_inverse(q))[0] != q:
            fails.append(f"inverse round trip at {q}")
    for q in nc_b:
        if f_forward(f_inverse(q)) != q:
            fails.append(f"f round trip at {q}")
    sizes = (len(nn_d.as_set & nn_b), len(nc_d.as_set & nc_b))
    return fails, restriction, sizes


def test_criterion_5_bijection_suite():
    ranks = range(2, 7 if DEEP else 6)
    core, restr = {}, {}
    for n in ranks:
        fails, r, sizes = _bijection_suite(n)
        core[n] = fails
        if r:
            restr[n] = (r, sizes)
    core_ok = not any(core.values())
    if restr:
        n0 = min(restr)
        w, (a, b) = restr[n0]
        detail = (
            f"bijection, triples and all round trips hold for n={ranks.start}..{ranks.stop - 1}; "
            f"restriction clause fails from n={n0} (|NN^D∩NN^B|={a} vs |NC^D∩NC^B|={b}; {w})"
        )
    else:
        detail = f"bijection, triples, restrictions and round trips hold for n={ranks.start}..{ranks.stop - 1}"
    report(5, core_ok and not restr, detail)
    assert core_ok, core
    if restr:
        # the restriction claim is false for these definitions; see the decisions ledger
        pytest.xfail("restriction bijections impossible: intersections differ in size")


def test_criterion_6_profile_uniqueness():
    ranks = range(1, 8 if DEEP else 7)
    try:
        for n in ranks:
            for label in ("NN_B", "NC_B"):
                build_index(enumerate_all(label, n))
        ok, detail = True, f"StatProfile injective on NN^B and NC^B, n={ranks.start}..{ranks.stop - 1}"
    except ProfileCollision as exc:
        ok, detail = False, str(exc)
    report(6, ok, detail)
    assert ok


def test_criterion_7_predicate_cross_validation():
    pairs = mismatches = 0
    for n in range(2, 6):
        for pi in enumerate_all("ALL_D", n):
            bl = pi.blocks
            for i in range(len(bl)):
                for j in range(i + 1, len(bl)):
                    pairs += 1
                    mismatches += crosses_d(bl[i], bl[j], n) != crosses_geometric(bl[i], bl[j], n)
    bad_cases = 0
    classified = 0
    for n in range(2, 7):
        nc_d = enumerate_all("NC_D", n).as_set
        for pi in enumerate_all("NC_B", n):
            inside = is_d_partition(pi) and pi in nc_d
            hits = sum(nc_b_minus_d_conditions(pi))
            case = classify_nc_b_minus_d(pi)
            if inside:
                bad_cases += case is not None
            else:
                classified += 1
                bad_cases += hits != 1 or case is None
    ok = mismatches == 0 and bad_cases == 0
    report(
        7,
        ok,
        f"crosses_d = geometric oracle on {pairs} block pairs (n≤5); "
        f"{classified} elements of NC^B∖NC^D each in exactly one case (n≤6)",
    )
    assert ok, (mismatches, bad_cases)


def test_criterion_8_antichain_dictionary():
    problems = []
    total = 0
    for system in ("B", "D"):
        for n in range(2, 7):
            fam = enumerate_all("NN_" + system, n).as_set
            pred = is_nonnesting_b if system == "B" else is_nonnesting_d
            seen = set()
            for a in antichains(system, n):
                total += 1
                pi = antichain_to_partition(a)
                if not pred(pi) or partition_to_antichain(system, pi).roots != a.roots:
                    problems.append((system, n, a))
                if system == "D":
                    pair = any(Root("Diff", i, 1) in a.roots and Root("Sum", i, 1) in a.roots for i in range(2, n + 1))
                    z = pi.zero_block
                    if pair != (z is not None and 1 in z):
                        problems.append(("zero-block rule", n, a))
                seen.add(pi)
            if seen != fam or len(seen) != len(antichains(system, n)):
                problems.append((system, n, "not a bijection"))
    ok = not problems
    report(8, ok, f"antichain dictionary mutually inverse on {total} antichains of B_n and D_n, n≤6")
    assert ok, problems[:3]

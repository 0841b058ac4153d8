"""Acceptance criteria 1-12, one verdict line each.

Run with pytest (lines appear in the terminal summary) or directly with
``python tests/test_acceptance.py``.  All checks are exact symbolic
identities, so every tolerance is 0; runtime ceilings are part of the
verdict where a criterion states one.
"""

import os
import sys
import time

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from acceptance_log import LINES  # noqa: E402
from doa.cochains import check_image, check_invariance, check_support_codim, phi, psi  # noqa: E402
from doa.families import FAMILIES, build, build_kappa_tri, specialize  # noqa: E402
from doa.groebner import GroebnerTimeout, buchberger, hilbert_dimension, ideal_equal  # noqa: E402
from doa.group import classify, invariant_two_form_dim  # noqa: E402
from doa.ledger import ledger_system  # noqa: E402
from doa.poly import SYMBOL_INDEX, normalize_generator, parse_poly  # noqa: E402
from doa.rewrite import build_rewrite, overlap_check  # noqa: E402
from doa.verifier import check_properties, compare_systems, extract_system, std_nonexistence_check  # noqa: E402
from oracles import ON_SAMPLERS, as_params, invariant_two_forms_by_solving, sample_points  # noqa: E402

EXACT = "tolerance: exact"
DIMENSION_BUDGET = 3600.0


def record(number, ok, detail, tolerance=EXACT):
    line = f"[criterion {number:>2}] {'PASS' if ok else 'FAIL'} {detail} ({tolerance})"
    LINES.append(line)
    print(line)
    return ok


class Timer:
    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.monotonic() - self.start


# -- criteria ----------------------------------------------------------------------

def criterion_1():
    with Timer() as t:
        dims = {n: invariant_two_form_dim(n) for n in range(4, 9)}
    solved = {n: invariant_two_forms_by_solving(n) for n in range(4, 9)}
    ok = all(d == 2 for d in dims.values()) and dims == solved and t.elapsed < 1
    return ok, f"invariant 2-form dim n=4..8 {sorted(set(dims.values()))}, linear-solve oracle agrees={dims == solved}, {t.elapsed:.2f}s < 1s"


def criterion_2():
    bad = []
    with Timer() as t:
        for n in (4, 5, 6):
            for name in FAMILIES:
                k = build(name, n)
                if not (check_invariance(k).ok and check_image(k).ok and check_support_codim(k).ok):
                    bad.append(f"{name}@{n}")
            if not (build_kappa_tri(n, "formula") - build_kappa_tri(n, "matrix")).is_zero():
                bad.append(f"tri-modes@{n}")
    ok = not bad and t.elapsed < 10
    return ok, f"{len(FAMILIES)} families well-formed at n=4,5,6, tri formula==matrix, failures={bad}, {t.elapsed:.1f}s < 10s"


def criterion_3():
    with Timer() as t:
        zero = all(psi(build(name, n)).is_zero() for n in (4, 5, 6) for name in ("lie1", "refl-L"))
    return zero and t.elapsed < 30, f"psi(kappa1^L)=psi(kappa_refl^L)=0 at n=4,5,6, {t.elapsed:.1f}s < 30s"


def criterion_4():
    ok = True
    with Timer() as t:
        for n in (4, 5):
            lin = build("refl-L", n)
            square = phi(lin, lin)
            ok &= (square - psi(build("tri", n)).scale(2)).is_zero()
            ok &= all(classify(g).is_3cycle for g in square.support())
    return ok and t.elapsed < 120, f"phi(refl^L,refl^L)-2psi(tri^C)=0 at n=4,5, support only on 3-cycles, {t.elapsed:.1f}s < 120s"


def criterion_5():
    ok = True
    counts = []
    with Timer() as t:
        for n in (4, 5):
            ok &= phi(build("refl-C", n) + build("tri", n), build("refl-L", n)).is_zero()
            system = extract_system(build("refl-full", n))
            cmp = compare_systems(system, ledger_system("Obstr2PhiC1C2C3L2", n), "set")
            ok &= cmp.equal
            counts.append(len(system))
    return ok and t.elapsed < 120, f"phi(refl^C+tri^C, refl^L)=0; extract(refl-full) == four displayed conditions as sets (sizes {counts}), {t.elapsed:.1f}s < 120s"


def criterion_6():
    parts, ok = [], True
    for n in (4, 5, 6):
        with Timer() as t:
            system = extract_system(build("lie", n))
            cmp = compare_systems(system, ledger_system("LOA-full", n), "ideal")
        ok &= cmp.equal and t.elapsed < 300 and 20 <= len(system) <= 22
        parts.append(f"n={n}: equal={cmp.equal} count={len(system)} {t.elapsed:.1f}s")
    return ok, "extract(lie) ideal-equals LOA-full; " + "; ".join(parts)


def _ideal_eq(a, b):
    return ideal_equal(a, b)[0]


def criterion_7():
    results = {}
    for n in (4, 5):
        led = lambda name: ledger_system(name, n).generators  # noqa: E731
        rel = led("Obstr2kappaCrefc") + led("Obstr2kappaCrefd")
        full = led("Obstr1") + rel
        gb = buchberger(full)
        simplified_in = all(not gb.reduce(p) for p in led("Obstr1Simplified"))
        kappa_c1 = _ideal_eq(led("Obstr2kappaC1") + rel, led("Obstr2kappaC1Simplified") + rel)
        branch = [parse_poly("a4 - a7"), parse_poly("b4 - b7")]
        converse = _ideal_eq(led("Obstr1SimplifiedFinal") + rel + branch, led("Obstr1") + rel + branch)
        alternatives = _ideal_eq(rel, [parse_poly("a1 - b6"), parse_poly("b2 + a5")] + led("BranchAlternatives"))
        results[n] = simplified_in and kappa_c1 and converse and alternatives
    return all(results.values()), (f"simplified blocks in ideal(full + a1=b6, b2=-a5); kappa1^C block reduces to "
                                   f"(alpha+(n-1)beta)(a4-a7),(b4-b7); final block + relations + a4=a7,b4=b7 recovers "
                                   f"the constrained ideal; n={sorted(results)} ok={list(results.values())}")


def criterion_8():
    statuses = {n: check_properties(build("combined", n)).status for n in (4, 5)}
    instance = {"aperp": 1, "a": -1, "b": 0, "bperp": 0, "a4": 1, "alpha": 1, "c": 1}
    inst = check_properties(specialize(build("combined", 4), instance)).status
    ok = all(s == "pass" for s in statuses.values()) and inst == "pass"
    return ok, f"combined family passes all five properties symbolically {statuses}; numeric instance {inst}"


def criterion_9():
    parts, ok = [], True
    for n in (4, 5):
        cert = std_nonexistence_check(n).certificate
        ok &= cert["linear_part_vanishes"]
        parts.append(f"n={n} memberships {sum(cert['membership'].values())}/{len(cert['membership'])}")
        std = check_properties(build("std-refl", n))
        ok &= std.status == "pass"
        h0c = specialize(build("std-refl", n), {"aperp": 0, "bperp": 0})
        rca = specialize(build("rca-std", n), {"beta": 0})
        same = (h0c - rca).is_zero() and extract_system(h0c).as_set() == extract_system(rca).as_set()
        ok &= same
        parts.append(f"std-refl {std.status}, aperp=bperp=0 equals rca-std(beta=0) {same}")
    return ok, "(i) a7^2,b7^2,a7b7 and linear generators in the augmented ideal; (ii),(iii): " + "; ".join(parts)


def criterion_10():
    parts, ok = [], True
    for n in (4, 5):
        perm = check_properties(build("rca-perm", n)).status
        as_std = extract_system(build("rca-perm", n).with_space("std")).as_set()
        expect = {normalize_generator(parse_poly("alpha + (n-1)*beta", n))}
        bound = check_properties(build("rca-std", n)).status
        ok &= perm == "pass" and as_std == expect and bound == "pass"
        parts.append(f"n={n}: rca-perm {perm}, std constraint {[str(p) for p in as_std]}, rca-std {bound}")
    return ok, "; ".join(parts)


def criterion_11():
    n = 4
    total = agree = 0
    per = {}
    with Timer() as t:
        for name in sorted(ON_SAMPLERS):
            kappa = build(name, n)
            system = extract_system(kappa)
            on, off = sample_points(name, kappa, n, 10, 10, seed=0)
            hits = 0
            for point in on + off:
                symbolic = not system.nonvanishing(point)
                oracle = overlap_check(build_rewrite(specialize(kappa, as_params(point))))[0]
                hits += symbolic == oracle
            per[name] = f"{hits}/{len(on) + len(off)}"
            total += len(on) + len(off)
            agree += hits
    ok = agree == total and all(v.endswith("/20") for v in per.values()) and t.elapsed < 600
    return ok, f"oracle/symbolic agreement {agree}/{total} over {len(per)} families at n=4, {t.elapsed:.0f}s < 600s"


def criterion_12():
    expected = {"lie": 8, "refl-full": 5}
    parts, ok = [], True
    for name, proj in expected.items():
        for n in (4, 5):
            kappa = build(name, n)
            system = extract_system(kappa)
            symbols = sorted(kappa.symbols(), key=SYMBOL_INDEX.get)
            with Timer() as t:
                try:
                    gb = buchberger(system.generators, symbols=symbols, budget=DIMENSION_BUDGET)
                except GroebnerTimeout:
                    # the criterion reports non-termination rather than failing on it
                    parts.append(f"{name} n={n}: no result within {DIMENSION_BUDGET:.0f}s")
                    continue
            affine, projective, degree = hilbert_dimension(gb)
            ok &= projective == proj
            parts.append(f"{name} n={n}: projective {projective} (expected {proj}), affine {affine}, "
                         f"degree {degree}, {t.elapsed:.0f}s")
    return ok, "Groebner dimensions: " + "; ".join(parts)


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11, criterion_12]


@pytest.mark.parametrize("number", range(1, 13))
def test_criterion(number):
    ok, detail = CRITERIA[number - 1]()
    assert record(number, ok, detail), detail


if __name__ == "__main__":
    verdicts = [record(i, *fn()) for i, fn in enumerate(CRITERIA, start=1)]
    sys.exit(0 if all(verdicts) else 1)

"""The structural property suite behind ``doa invariants``."""

import time

from .cochains import check_cochain, phi, psi
from .families import FAMILIES, build, build_kappa_tri
from .group import classify, invariant_two_form_dim, require_n


def _check(name, fn):
    start = time.monotonic()
    try:
        ok, detail = fn()
    except Exception as exc:  # report, do not abort the suite
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return {"name": name, "pass": bool(ok), "detail": detail,
            "elapsed_ms": int(1000 * (time.monotonic() - start))}


def run_invariants(n, jobs=1, families=None):
    """Run every symbolic identity the families are built on; one record per check."""
    require_n(n)
    out = [_check("invariant_two_form_dim", lambda: (invariant_two_form_dim(n) == 2,
                                                     str(invariant_two_form_dim(n))))]
    for name in families or sorted(FAMILIES):
        def wellformed(name=name):
            rep = check_cochain(build(name, n))
            return rep.ok, "" if rep.ok else str(rep.witnesses[:3])
        out.append(_check(f"wellformed:{name}", wellformed))
    out.append(_check("tri_formula_equals_matrix",
                      lambda: (build_kappa_tri(n, "formula") == build_kappa_tri(n, "matrix"), "")))
    for name in ("lie1", "refl-L"):
        out.append(_check(f"psi_vanishes:{name}", lambda name=name: (psi(build(name, n)).is_zero(), "")))
    out.append(_check("psi_vanishes:refl-C+const1",
                      lambda: (psi(build("rca-perm", n)).is_zero(), "")))

    def first():
        refl_l = build("refl-L", n)
        theta = phi(refl_l, refl_l, jobs=jobs)
        bad = [str(g) for g in theta.support() if not classify(g).is_3cycle]
        diff = theta - psi(build("tri", n)).scale(2)
        return diff.is_zero() and not bad, f"non-3-cycle support: {bad}" if bad else ""
    out.append(_check("first_obstruction_refl", first))

    def second():
        theta = phi(build("refl-C", n) + build("tri", n), build("refl-L", n), jobs=jobs)
        return theta.is_zero(), ""
    out.append(_check("second_obstruction_refl", second))
    return out

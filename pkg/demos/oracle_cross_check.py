"""
Symbolic conditions against overlap resolution
==============================================

At a numeric parameter point the deformed algebra can be checked directly by
resolving every degree-three ambiguity.  The verdict should agree with whether
the extracted polynomials vanish there.
"""

from fractions import Fraction

from doa.families import build, specialize
from doa.rewrite import build_rewrite, oracle_report
from doa.verifier import extract_system

n = 4
kappa = build("refl-full", n)
system = extract_system(kappa)

points = {
    # alpha = beta = 0 switches the constant identity part off
    "on": {"a": 1, "aperp": 2, "b": -1, "bperp": 3, "c": 5, "alpha": 0, "beta": 0},
    # a generic point violates the four quadrics
    "off": {"a": 1, "aperp": 2, "b": -1, "bperp": 3, "c": 5, "alpha": 1, "beta": 2},
}
for label, point in points.items():
    point = {k: Fraction(v) for k, v in point.items()}
    bad = system.nonvanishing(point)
    rep = oracle_report(build_rewrite(specialize(kappa, point)))
    print(f"{label}: {len(bad)} nonvanishing generators, overlap check pass={rep['pass']}")
    if rep["witness"]:
        print("   first failing overlap:", rep["witness"]["triple"])

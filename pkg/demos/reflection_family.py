"""
Deformations supported on transpositions
========================================

Build the transposition-supported cochain with its 3-cycle companion, check
that it always lifts, then add an invariant constant part and look at the
conditions that appear.
"""

from doa.families import build
from doa.groebner import buchberger, hilbert_dimension
from doa.poly import SYMBOL_INDEX
from doa.verifier import check_properties, extract_system

n = 5

# transposition part plus the 3-cycle correction: no conditions at all
report = check_properties(build("refl-tri", n))
print("refl-tri:", report.status)

# adding alpha and beta on the identity brings in four quadrics
system = extract_system(build("refl-full", n))
for poly in system.sorted():
    print("  ", poly)

# the variety they cut out, in the family's own seven parameters
gb = buchberger(system.generators, symbols=sorted(build("refl-full", n).symbols(), key=SYMBOL_INDEX.get))
affine, projective, degree = hilbert_dimension(gb)
print(f"affine dim {affine}, projective dim {projective}, degree {degree}")

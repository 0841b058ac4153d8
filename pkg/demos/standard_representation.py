"""
Maps on the doubled standard representation
===========================================

Restricting to h* + h changes the picture: the three-parameter family lifts
unconditionally, while the identity-supported linear family is forced to be
zero.
"""

from doa.families import build, specialize
from doa.verifier import check_properties, std_nonexistence_check

n = 5
print("std-refl:", check_properties(build("std-refl", n)).status)

# with both linear parameters off only the Cherednik-type constants remain
h0c = specialize(build("std-refl", n), {"aperp": 0, "bperp": 0})
print("linear part left:", h0c.has_linear_part())

report = std_nonexistence_check(n)
cert = report.certificate
print("every linear parameter vanishes:", cert["linear_part_vanishes"])
print("parameters left free:", cert["unconstrained"])
for poly, member in sorted(cert["membership"].items())[:6]:
    print(f"   {poly:10s} in ideal: {member}")

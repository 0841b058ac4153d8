"""
Conditions for identity-supported linear parts
==============================================

The identity-supported family has fourteen linear parameters, two constants on
the identity and one on transpositions.  Extraction produces every quadric
the parameters must satisfy; we compare the result with the stored ledger.
"""

import time

from doa.families import build
from doa.ledger import ledger_system
from doa.verifier import compare_systems, extract_system

for n in (4, 5, 6):
    start = time.monotonic()
    system = extract_system(build("lie", n))
    by_source = {}
    for pr in system.provenance:
        by_source[pr.source] = by_source.get(pr.source, 0) + 1
    same = compare_systems(system, ledger_system("LOA-full", n), "ideal").equal
    print(f"n={n}: {len(system)} generators {by_source}, ideal equal to ledger: {same}, "
          f"{time.monotonic() - start:.1f}s")

# a single generator with the group element and triple it came from
p, pr = system.generators[0], system.provenance[0]
print(p, "from", pr.source, pr.g, pr.triple)

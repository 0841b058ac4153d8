"""Transcribed condition systems, keyed by stable block names.

Each block is a list of polynomial texts (``lhs`` or ``lhs = rhs``) in the
parameter symbols plus ``n``.  The texts are data, and ``n`` is folded in
only when a block is requested.  See docs/ledger.md for the headings.
"""

from itertools import combinations

from .group import require_n
from .poly import parse_poly


class UnknownLedgerError(KeyError):
    pass


BLOCKS = {
    "Obstr1PartI": [
        "a1*(a5 + a6 + n*a7) - b1*a2 - b5*a6 + a5*(b5 + b6 + n*b7) + b7*(a3 - a5 - a6)",
        "b1*(a5 + a6 + n*a7) - b1*b2 + b1*a5 + b5*(b5 - a1 + n*b7) + b7*(b3 - b5 - b6)",
    ],
    "Obstr1PartII": [
        "-a2*(b5 + b6 + n*b7) - a2*a1 - a2*b6 + a6*(a6 + b2 + n*a7) + a7*(a3 - a5 - a6)",
        "-b2*(b5 + b6 + n*b7) - a2*b1 - a6*b5 + b6*(a5 + a6 + n*a7) + a7*(b3 - b5 - b6)",
    ],
    "Obstr1PartIII": [
        "a7*(b3 - b5) - a4*b6 + (b4 - b7)*(a4 + (n-1)*a7 + a6)",
        "a1*(a3 + n*a4) + a5*(b3 + n*b4) + b4*(a3 - a5 - a6) - a2*b1 - b5*a6",
        "-a1*(a5 + a6 + n*a7) - a5*(b5 + n*b7) - b7*(a3 - a5 - a6) + a2*b1 + b3*a6 - a3*b6",
        "b7*(b3 - b5) - b4*b6 + (b4 - b7)*(a1 + b4 + (n-1)*b7 + b6) - b1*(a4 - a7)",
        "b1*(a5 - b2 + a3 + n*a4) - b5*(a1 + b6 - b3 - n*b4) + b4*(b3 - b5 - b6)",
        "b1*(-b2 + a5 + a3 + n*a7) + b5*(b5 + n*b7) + b7*(b3 - b5 - b6) - a1*(b3 - b6)",
    ],
    "Obstr1PartIV": [
        "a7*(a3 - a6) - a4*a5 + (a4 - a7)*(-b2 + a4 + (n-1)*a7 + a5) + a2*(b4 - b7)",
        "-a2*(a1 + b6 + b3 + n*b4) + a6*(b2 - a5 + a3 + n*a4) + a4*(a3 - a5 - a6)",
        "a2*(a1 + b6 + b3 + n*b7) - a6*(a6 + n*a7) - a7*(a3 - a5 - a6) - b2*(a3 - a5)",
        "b7*(a3 - a6) - b4*a5 + (a4 - a7)*(b4 + (n-1)*b7 + b5)",
        "-b2*(b3 + n*b4) + b6*(a3 + n*a4) + a4*(b3 - b5 - b6) - a2*b1 - a6*b5",
        "b2*(b5 + b6 + n*b7) - b6*(a6 + n*a7) - a7*(b3 - b5 - b6) + a2*b1 + a3*b5 - b3*a5",
    ],
    "Obstr2kappaC1": [
        "alpha*(a1 - b6 + b4 - b7) - beta*(a1 - b3 + b5 - (n-1)*(b4 - b7))",
        "alpha*(-b2 - a5 + a4 - a7) + beta*(b2 + a3 - a6 + (n-1)*(a4 - a7))",
    ],
    "Obstr2kappaCref": [
        "c*(a1 - b6)",
        "c*(2*a1 - b3 + b5 - b6)",
        "c*(a5 + b2)",
        "c*(2*b2 + a3 + a5 - a6)",
    ],
    # c inverted: the four products above with the common factor removed
    "Obstr2kappaCrefc": ["a1 = b6", "a1 - b3 + b5"],
    "Obstr2kappaCrefd": ["b2 = -a5", "b2 + a3 - a6"],
    # alternative second entries for the two rows above
    "BranchAlternatives": ["a3 - a5 - a6", "b3 - b5 - b6"],
    "Obstr1Simplified": [
        "a1*(a4 - a7) - (b4 - b7)*(a6 + a4 + (n-1)*a7)",
        "b1*(a4 - a7) - (b4 - b7)*(b6 + b4 + (n-1)*b7)",
        "a1*(a3 + n*a4) + a5*(b3 + n*b4) - b1*a2 - b5*a6",
        "a1*(a3 + n*a7) + a5*(b3 + n*b7) - b1*a2 - b5*a6",
        "b1*(a3 + n*a4) + b5*(b3 + n*b4) - 2*b1*b2 - 2*b5*b6",
        "b1*(a3 + n*a7) + b5*(b3 + n*b7) - 2*b1*b2 - 2*b5*b6",
        "-a2*(b3 + n*b4) + a6*(a3 + n*a4) - 2*a1*a2 - 2*a5*a6",
        "-a2*(b3 + n*b7) + a6*(a3 + n*a7) - 2*a1*a2 - 2*a5*a6",
    ],
    "Obstr2kappaC1Simplified": [
        "(alpha + (n-1)*beta)*(b4 - b7)",
        "(alpha + (n-1)*beta)*(a4 - a7)",
    ],
    "Obstr1SimplifiedFinal": [
        "a1*(a3 + n*a4) + a5*(b3 + n*b4) - b1*a2 - b5*a6",
        "b1*(a3 + n*a4) + b5*(b3 + n*b4) - 2*b1*b2 - 2*b5*b6",
        "-a2*(b3 + n*b4) + a6*(a3 + n*a4) - 2*a1*a2 - 2*a5*a6",
    ],
    "DoubledStdRep": [
        "a3 + n*a4", "a5 + a6 + n*a7",
        "b3 + n*b4", "b5 + b6 + n*b7",
    ],
    "TrivialRep": [
        "(a3 + n*a4)*(b5 + b6 + n*b7) = (b3 + n*b4)*(a5 + a6 + n*a7)",
    ],
    "StdRep": [f"a{i}*b{j} = b{i}*a{j}" for i, j in combinations((1, 2, 3, 5, 6), 2)],
    "DoubledTrivialRep": [f"{s}{i}" for i in (1, 2, 3, 5, 6) for s in "ab"],
    "Obstr2PhiC1C2C3L2": [
        "alpha*a + beta*(a + (n-2)*aperp)",
        "alpha*aperp + beta*(2*a + (n-3)*aperp)",
        "alpha*b + beta*(b + (n-2)*bperp)",
        "alpha*bperp + beta*(2*b + (n-3)*bperp)",
    ],
    "StdReflImage": ["2*a + (n-2)*aperp", "2*b + (n-2)*bperp"],
    "RcaStd": ["alpha + (n-1)*beta"],
    # extension constraints used in the nonexistence argument on h* + h
    "StdLieExtension": [
        "a1", "b1", "a2", "b2",
        "a4 - a5 - a7", "b4 - b5 - b7",
        "a4 - a6 - a7", "b4 - b6 - b7",
    ],
}

COMPOSITES = {
    "Obstr1": ["Obstr1PartI", "Obstr1PartII", "Obstr1PartIII", "Obstr1PartIV"],
    "LOA-full": ["Obstr1PartI", "Obstr1PartII", "Obstr1PartIII", "Obstr1PartIV",
                 "Obstr2kappaC1", "Obstr2kappaCref"],
}

HEADINGS = {
    "Obstr1PartI": "first obstruction for the identity-supported linear part, block I",
    "Obstr1PartII": "first obstruction, block II",
    "Obstr1PartIII": "first obstruction, block III",
    "Obstr1PartIV": "first obstruction, block IV",
    "Obstr2kappaC1": "invariant constant part clears the second obstruction",
    "Obstr2kappaCref": "transposition constant part clears the second obstruction",
    "Obstr2kappaCrefc": "transposition constant part with c nonzero, first row",
    "Obstr2kappaCrefd": "transposition constant part with c nonzero, second row",
    "BranchAlternatives": "alternative forms of the second entries of Obstr2kappaCrefc and Obstr2kappaCrefd",
    "Obstr1Simplified": "first obstruction after the c-nonzero substitutions",
    "Obstr2kappaC1Simplified": "second obstruction after the c-nonzero substitutions",
    "Obstr1SimplifiedFinal": "final three equations once a4 = a7 and b4 = b7",
    "DoubledStdRep": "image inside the doubled standard representation",
    "TrivialRep": "image contains the trivial representation",
    "StdRep": "image contains the standard representation",
    "DoubledTrivialRep": "image inside the doubled trivial representation",
    "Obstr2PhiC1C2C3L2": "invariant constant part against the transposition linear part",
    "StdReflImage": "transposition family descends to h* + h",
    "RcaStd": "constant identity part descends to h* + h",
    "StdLieExtension": "extension constraints for the identity-supported family on h* + h",
}


def ledger_names():
    return sorted(BLOCKS) + sorted(COMPOSITES)


def _texts(name):
    if name in BLOCKS:
        return [(name, t) for t in BLOCKS[name]]
    if name in COMPOSITES:
        return [(b, t) for b in COMPOSITES[name] for t in BLOCKS[b]]
    raise UnknownLedgerError(f"unknown ledger block {name!r}; known: {', '.join(ledger_names())}")


def _parse_condition(text, n):
    if "=" in text:
        lhs, rhs = text.split("=")
        return parse_poly(lhs, n) - parse_poly(rhs, n)
    return parse_poly(text, n)


def ledger_polys(name, n):
    """Raw (unnormalized) transcriptions as (block, ParamPoly) pairs."""
    require_n(n)
    return [(block, _parse_condition(t, n)) for block, t in _texts(name)]


def ledger_system(name, n):
    """The named block as an ObstructionSystem (normalized, deduplicated)."""
    from .verifier import ObstructionSystem, Provenance
    system = ObstructionSystem(n)
    seen = {}
    for block, p in ledger_polys(name, n):
        i = seen[block] = seen.get(block, -1) + 1
        system.add(p, Provenance("paperLedger", label=f"{block}[{i}]"))
    return system


__all__ = [
    "BLOCKS",
    "COMPOSITES",
    "HEADINGS",
    "UnknownLedgerError",
    "ledger_names",
    "ledger_polys",
    "ledger_system",
]

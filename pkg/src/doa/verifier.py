"""PBW property checks and symbolic extraction of obstruction systems."""

import os
from dataclasses import dataclass, field

from .cochains import (
    check_invariance,
    check_kernel,
    check_support_codim,
    image_defects,
    phi,
    psi,
)
from .families import build, std_descent_defects
from .group import basis_label, require_n
from .poly import ParamPoly, normalize_generator, parse_poly

SOURCES = ("psiL", "firstObstruction", "secondObstruction", "imageConstraint",
           "extensionConstraint", "invariance", "paperLedger")

PROPERTIES = ("image", "invariance", "mixed_jacobi", "first_obstruction", "second_obstruction")


class InvarianceError(ValueError):
    """Extraction was asked for a cochain that is not S_n-invariant."""


@dataclass(frozen=True)
class Provenance:
    source: str
    g: str = ""
    triple: tuple = ()
    label: str = ""

    def to_dict(self):
        return {"source": self.source, "g": self.g, "triple": list(self.triple), "label": self.label}

    @classmethod
    def from_dict(cls, d):
        return cls(d.get("source", "paperLedger"), d.get("g", ""), tuple(d.get("triple", ())), d.get("label", ""))


class ObstructionSystem:
    """Normalized, deduplicated parameter polynomials with their origins."""

    def __init__(self, n, generators=(), provenance=()):
        self.n = n
        self.generators = []
        self.provenance = []
        self._index = {}
        for p, pr in zip(generators, provenance):
            self.add(p, pr)

    def add(self, p, provenance):
        """Add p unless zero or already present; returns True if added."""
        p = ParamPoly.coerce(p)
        if not p:
            return False
        q = normalize_generator(p)
        if q in self._index:
            return False
        self._index[q] = len(self.generators)
        self.generators.append(q)
        self.provenance.append(provenance)
        return True

    def extend(self, other):
        for p, pr in zip(other.generators, other.provenance):
            self.add(p, pr)
        return self

    def sorted(self):
        order = sorted(range(len(self.generators)), key=lambda i: self.generators[i].sort_key(), reverse=True)
        return ObstructionSystem(self.n, [self.generators[i] for i in order],
                                 [self.provenance[i] for i in order])

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, p):
        p = ParamPoly.coerce(p)
        return bool(p) and normalize_generator(p) in self._index

    def as_set(self):
        return set(self._index)

    def symbols(self):
        out = set()
        for p in self.generators:
            out |= p.symbols()
        return out

    def nonvanishing(self, point):
        """Generators that do not vanish at a full numeric point."""
        return [p for p in self.generators if p.eval(point) != 0]

    def by_source(self, source):
        keep = [(p, pr) for p, pr in zip(self.generators, self.provenance) if pr.source == source]
        return ObstructionSystem(self.n, [p for p, _ in keep], [pr for _, pr in keep])

    def to_dict(self):
        s = self.sorted()
        return {"n": self.n, "generators": [str(p) for p in s.generators],
                "provenance": [pr.to_dict() for pr in s.provenance]}

    @classmethod
    def from_dict(cls, data):
        n = int(data["n"])
        require_n(n)
        gens = [parse_poly(t) for t in data["generators"]]
        prov = [Provenance.from_dict(d) for d in data.get("provenance", [{}] * len(gens))]
        if len(prov) != len(gens):
            raise ValueError("provenance list length differs from generator list")
        return cls(n, gens, prov)

    def __repr__(self):
        return f"ObstructionSystem(n={self.n}, {len(self)} generators)"


@dataclass
class PropertyResult:
    status: str = "pass"
    witnesses: list = field(default_factory=list)
    system: ObstructionSystem = None

    def to_dict(self):
        return {"status": self.status, "witnesses": list(self.witnesses),
                "system": self.system.to_dict() if self.system is not None and len(self.system) else None}


@dataclass
class VerificationReport:
    n: int
    properties: dict = field(default_factory=dict)
    certificate: dict = None

    @property
    def status(self):
        statuses = {p.status for p in self.properties.values()}
        if "fail" in statuses:
            return "fail"
        if "conditional" in statuses:
            return "conditional"
        return "pass"

    @property
    def passed(self):
        return self.status == "pass"

    def residual(self):
        out = ObstructionSystem(self.n)
        for p in self.properties.values():
            if p.system is not None:
                out.extend(p.system)
        return out

    def to_dict(self):
        return {"n": self.n, "status": self.status,
                "properties": {k: v.to_dict() for k, v in self.properties.items()},
                "residual": self.residual().to_dict(),
                "certificate": self.certificate}


def _triple_labels(tri, n):
    return tuple(basis_label(k, n) for k in tri)


def _mono_label(key, n):
    return "*".join(basis_label(k, n) for k in key) or "1"


class _Collector:
    """Sorts defect polynomials into witnesses (numeric) and conditions (symbolic)."""

    def __init__(self, n, limit=20):
        self.n = n
        self.result = PropertyResult(system=ObstructionSystem(n))
        self.limit = limit
        self.failed = False

    def add(self, p, provenance, witness):
        if not p:
            return
        if p.is_constant():
            self.failed = True
            if len(self.result.witnesses) < self.limit:
                self.result.witnesses.append(witness)
        else:
            self.result.system.add(p, provenance)

    def finish(self):
        r = self.result
        if self.failed:
            r.status = "fail"
        elif len(r.system):
            r.status = "conditional"
        return r


def _collect_three(col, theta, source, scale=1):
    n = col.n
    for g, tri, key, c in theta.coefficients():
        if scale != 1:
            c = c.scale(scale)
        col.add(c, Provenance(source, str(g), _triple_labels(tri, n)),
                {"g": str(g), "triple": list(_triple_labels(tri, n)),
                 "monomial": _mono_label(key, n), "value": str(c)})


def _default_jobs(jobs):
    if jobs is not None:
        return jobs
    try:
        return max(1, int(os.environ.get("DOA_JOBS", "1")))
    except ValueError:
        return 1


def _invariance(kappa, exhaustive=False):
    col = _Collector(kappa.n)
    rep = check_invariance(kappa, exhaustive)
    for _, h, g, (p, q), (vec, const) in rep.witnesses:
        where = {"h": h, "g": str(g), "pair": [basis_label(p, kappa.n), basis_label(q, kappa.n)]}
        prov = Provenance("invariance", str(g), (basis_label(p, kappa.n), basis_label(q, kappa.n)))
        for k, c in vec.coords.items():
            col.add(c, prov, dict(where, component=basis_label(k, kappa.n), value=str(c)))
        col.add(const, prov, dict(where, component="1", value=str(const)))
    return col.finish()


def _image(kappa):
    n = kappa.n
    col = _Collector(n)
    for g, (p, q), res in image_defects(kappa):
        pair = (basis_label(p, n), basis_label(q, n))
        for k, c in res.coords.items():
            col.add(c, Provenance("imageConstraint", str(g), pair),
                    {"g": str(g), "pair": list(pair), "component": basis_label(k, n), "value": str(c)})
    for _, g, (f, k), (vec, const) in check_kernel(kappa).witnesses:
        for kk, c in list(vec.coords.items()) + [("1", const)]:
            col.add(c, Provenance("imageConstraint", str(g), (f, k), "kernel"),
                    {"g": str(g), "fixed_vector": f, "against": k, "value": str(c)})
    for _, g, cd in check_support_codim(kappa).witnesses:
        col.failed = True
        col.result.witnesses.append({"g": str(g), "codim": cd})
    return col.finish()


def _std_descent(kappa):
    n = kappa.n
    col = _Collector(n)
    image, extension = std_descent_defects(kappa)
    for g, (p, q), label, s in image:
        col.add(s, Provenance("imageConstraint", str(g), (basis_label(p, n), basis_label(q, n)), label),
                {"g": str(g), "pair": [basis_label(p, n), basis_label(q, n)], "component": label, "value": str(s)})
    for g, (label, k), key, c in extension:
        col.add(c, Provenance("extensionConstraint", str(g), (label, basis_label(k, n))),
                {"g": str(g), "pair": [label, basis_label(k, n)], "monomial": _mono_label(key, n), "value": str(c)})
    return col.finish()


def obstruction_terms(kappa, jobs=None):
    """(psi(L), phi(L,L) - 2 psi(C), phi(C,L)) as three-cochains."""
    jobs = _default_jobs(jobs)
    lin, const = kappa.linear_part(), kappa.constant_part()
    mixed = psi(lin)
    first = phi(lin, lin, jobs=jobs) - psi(const).scale(2)
    second = phi(const, lin, jobs=jobs)
    return mixed, first, second


def check_properties(kappa, jobs=None, exhaustive=False):
    """Evaluate the five PBW properties (plus descent for h* + h cochains)."""
    require_n(kappa.n)
    n = kappa.n
    report = VerificationReport(n)
    report.properties["image"] = _image(kappa)
    report.properties["invariance"] = _invariance(kappa, exhaustive)
    mixed, first, second = obstruction_terms(kappa, jobs)
    for name, theta, source in (("mixed_jacobi", mixed, "psiL"),
                                ("first_obstruction", first, "firstObstruction"),
                                ("second_obstruction", second, "secondObstruction")):
        col = _Collector(n)
        _collect_three(col, theta, source)
        report.properties[name] = col.finish()
    if kappa.space == "std":
        report.properties["std_descent"] = _std_descent(kappa)
    return report


def extract_system(kappa, jobs=None, include_structural=True):
    """Every coefficient condition for kappa to be a PBW deformation map.

    Raises InvarianceError for non-invariant input.  Structural conditions
    (image, kernel, descent to h* + h) are included unless disabled.
    """
    inv = _invariance(kappa)
    if inv.status != "pass":
        raise InvarianceError("cochain is not S_n-invariant; run check_properties for the report")
    n = kappa.n
    system = ObstructionSystem(n)

    def feed(col_result):
        if col_result.status == "fail":
            # a nonzero constant condition: the system is the unit ideal
            system.add(ParamPoly.const(1), Provenance("imageConstraint", label="inconsistent"))
        if col_result.system is not None:
            system.extend(col_result.system)

    if include_structural:
        feed(_image(kappa))
    mixed, first, second = obstruction_terms(kappa, jobs)
    for theta, source in ((mixed, "psiL"), (first, "firstObstruction"), (second, "secondObstruction")):
        col = _Collector(n)
        _collect_three(col, theta, source)
        feed(col.finish())
    if include_structural and kappa.space == "std":
        feed(_std_descent(kappa))
    return system


@dataclass
class ComparisonReport:
    mode: str
    equal: bool
    left_count: int
    right_count: int
    left_only: list = field(default_factory=list)
    right_only: list = field(default_factory=list)

    def to_dict(self):
        return {"mode": self.mode, "equal": self.equal,
                "left_count": self.left_count, "right_count": self.right_count,
                "left_only": [str(p) for p in self.left_only],
                "right_only": [str(p) for p in self.right_only]}


def compare_systems(left, right, mode="ideal", budget=None):
    """Set equality of normalized generators, or ideal equality by mutual reduction."""
    if left.n != right.n:
        raise ValueError(f"systems for different n: {left.n} vs {right.n}")
    if mode == "set":
        a, b = left.as_set(), right.as_set()
        lo = sorted(a - b, key=ParamPoly.sort_key, reverse=True)
        ro = sorted(b - a, key=ParamPoly.sort_key, reverse=True)
        return ComparisonReport("set", not lo and not ro, len(left), len(right), lo, ro)
    if mode == "ideal":
        from .groebner import ideal_equal
        eq, lo, ro = ideal_equal(left.generators, right.generators, budget=budget)
        return ComparisonReport("ideal", eq, len(left), len(right), lo, ro)
    raise ValueError(f"unknown comparison mode {mode!r}")


LINEAR_PARAMETERS = tuple(f"a{i}" for i in range(1, 8)) + tuple(f"b{i}" for i in range(1, 8))


def nonexistence_targets():
    """Polynomials whose membership shows the linear part must vanish."""
    sq = [parse_poly("a7^2"), parse_poly("b7^2"), parse_poly("a7*b7")]
    squares = [parse_poly(f"{s}^2") for s in LINEAR_PARAMETERS]
    linear = [parse_poly(t) for t in ("a1", "b1", "a2", "b2", "a5 - a6", "b5 - b6")]
    return sq, linear, squares


def std_nonexistence_check(n, jobs=None, system=None):
    """Certify that the identity-supported family has no nonzero linear part on h* + h.

    The report's std_descent property carries the augmented system; the
    certificate lists the ideal memberships (by Groebner reduction) that force
    every linear parameter to vanish on the variety.
    """
    from .groebner import buchberger, normal_form
    require_n(n)
    kappa = build("std-lie", n)
    report = check_properties(kappa, jobs=jobs)
    if system is None:
        system = report.residual()
    sq, linear, squares = nonexistence_targets()
    gb = buchberger(system.generators, degree_bound=2)
    members = {}
    for p in sq + linear + squares:
        members[str(p)] = not normal_form(p, gb)
    free = sorted(s for s in ("alpha", "beta", "c") if normal_form(ParamPoly.symbol(s), gb))
    report.certificate = {
        "kind": "std-nonexistence",
        "generators": len(system),
        "membership": members,
        "linear_part_vanishes": all(members.values()),
        "unconstrained": free,
        "groebner": {"size": len(gb), "spairs": gb.stats["spairs"]},
    }
    return report


__all__ = [
    "ComparisonReport",
    "InvarianceError",
    "ObstructionSystem",
    "PropertyResult",
    "Provenance",
    "VerificationReport",
    "check_properties",
    "compare_systems",
    "extract_system",
    "nonexistence_targets",
    "obstruction_terms",
    "std_nonexistence_check",
]

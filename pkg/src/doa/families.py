"""Parametrized cochain families for S_n acting on V = W* + W and on h* + h."""

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .cochains import CochainBuilder, TwoCochain, _lin_add
from .group import (
    Perm,
    Vect,
    act_index,
    dual,
    require_n,
    symmetric_group,
    three_cycles,
    to_bar_coords,
    transpositions,
    x,
    x_all,
    x_perp,
    x_set,
    xbar,
    y,
    y_all,
    y_perp,
    y_set,
    ybar,
)
from .poly import SYMBOL_INDEX, ZERO, ParamPoly, parse_poly, sym

KAPPA1_LINEAR = tuple(f"a{i}" for i in range(1, 8)) + tuple(f"b{i}" for i in range(1, 8))
KAPPA1_CONSTANT = ("alpha", "beta")
REFL_LINEAR = ("a", "aperp", "b", "bperp")


def _lin(*terms):
    """Linear dict from (coefficient, Vect) pairs."""
    out = {}
    for coef, v in terms:
        coef = ParamPoly.coerce(coef)
        out = _lin_add(out, {k: c * coef for k, c in v.coords.items()})
    return out


def _e(k, n):
    return Vect.basis(k, n)


def build_kappa1(n, linear=True, constant=True):
    """The S_n-invariant linear and constant cochains supported on the identity."""
    require_n(n)
    one = Perm.identity(n)
    a = {i: sym(f"a{i}") for i in range(1, 8)}
    b = {i: sym(f"b{i}") for i in range(1, 8)}
    alpha, beta = sym("alpha"), sym("beta")
    X, Y = x_all(n), y_all(n)
    t = {}
    for i in range(1, n + 1):
        xi, yi = _e(x(i, n), n), _e(y(i, n), n)
        for j in range(1, n + 1):
            if i == j:
                continue
            xj, yj = _e(x(j, n), n), _e(y(j, n), n)
            if i < j and linear:
                t[(x(i, n), x(j, n))] = (_lin((a[1], xi - xj), (b[1], yi - yj)), ZERO)
                t[(y(i, n), y(j, n))] = (_lin((a[2], xi - xj), (b[2], yi - yj)), ZERO)
            lin = _lin((a[5], xi), (a[6], xj), (a[7], X), (b[5], yi), (b[6], yj), (b[7], Y)) if linear else {}
            t[(x(i, n), y(j, n))] = (lin, beta if constant else ZERO)
        lin = _lin((a[3], xi), (a[4], X), (b[3], yi), (b[4], Y)) if linear else {}
        t[(x(i, n), y(i, n))] = (lin, alpha if constant else ZERO)
    return TwoCochain(n, {one: t})


def build_kappa_refl(n, linear=True, constant=True):
    """Cochain supported on transpositions (ij), with V^g in the kernel."""
    require_n(n)
    a, ap, b, bp, c = (sym(s) for s in ("a", "aperp", "b", "bperp", "c"))
    table = {}
    for g in transpositions(n):
        i, j = (k + 1 for k in g.cycles()[0])
        val = _lin((a, x_set([i, j], n)), (ap, x_perp([i, j], n)),
                   (b, y_set([i, j], n)), (bp, y_perp([i, j], n))) if linear else {}
        cc = c if constant else ZERO
        neg = {k: -v for k, v in val.items()}
        table[g] = {
            (x(i, n), y(i, n)): (val, cc),
            (x(j, n), y(j, n)): (val, cc),
            (x(i, n), y(j, n)): (neg, -cc),
            (x(j, n), y(i, n)): (neg, -cc),
        }
    return TwoCochain(n, table)


def _tri_constants():
    a, ap, b, bp = (sym(s) for s in ("a", "aperp", "b", "bperp"))
    return (ap - a) ** 2, (bp - b) ** 2, (ap - a) * (bp - b)


def build_kappa_tri(n, mode="formula"):
    """Constant cochain on 3-cycles; ``mode`` picks the formula or the block matrix."""
    require_n(n)
    if mode == "formula":
        return _tri_formula(n)
    if mode == "matrix":
        return _tri_matrix(n)
    raise ValueError(f"unknown mode {mode!r}")


def _tri_formula(n):
    yy, xx, mixed = _tri_constants()
    builder = CochainBuilder(n)
    for g in three_cycles(n):
        moved = [k for k in range(2 * n) if act_index(g, k) != k]
        for v in moved:
            gv = act_index(g, v)
            vs = dual(v, n)
            builder.set(g, v, vs, const=ZERO)
            builder.set(g, v, gv, const=yy if v >= n else xx)
            builder.set(g, gv, vs, const=mixed)
            builder.set(g, v, act_index(g, vs), const=-mixed)
    return builder.build()


def _tri_matrix(n):
    yy, xx, mixed = _tri_constants()
    block = [[-xx, mixed], [mixed, -yy]]
    table = {}
    for g in three_cycles(n):
        # [g] has a 1 in row g(s), column s
        d = [[0] * n for _ in range(n)]
        for s in range(n):
            d[g[s]][s] += 1
            d[s][g[s]] -= 1
        t = {}
        for bi in range(2):
            for bj in range(2):
                for i in range(n):
                    for j in range(n):
                        if d[i][j]:
                            p, q = bi * n + i, bj * n + j
                            if p < q:
                                t[(p, q)] = ({}, block[bi][bj] * d[i][j])
        table[g] = t
    return TwoCochain(n, table)


def orbit_extend(n, representatives):
    """Extend values on representative pairs to an S_n-invariant cochain at the identity.

    ``representatives`` maps basis pairs (p, q) to linear dicts.  Every group
    element is applied; conflicting images raise AlternationError, so a
    successful build certifies that the representative values are consistent.
    """
    one = Perm.identity(n)
    builder = CochainBuilder(n)
    for (p, q), lin in representatives.items():
        for h in symmetric_group(n):
            builder.set(one, act_index(h, p), act_index(h, q),
                        lin={act_index(h, k): c for k, c in lin.items()})
    return builder.build()


# -- doubled standard representation ---------------------------------------------

def _project_lin(lin, n):
    std, _ = to_bar_coords(Vect(n, lin), n)
    return dict(std.coords)


def _std_vectors(n):
    """P(e_k) for every basis vector: the bar vectors x-bar_i, y-bar_i."""
    return [xbar(i, n) for i in range(1, n + 1)] + [ybar(i, n) for i in range(1, n + 1)]


def restrict_to_std(kappa):
    """kappa'(u, v) = P kappa(P u, P v) with P the projection onto h* + h.

    The result is stored on the basis of V with x_[n], y_[n] in its kernel,
    which is also its extension by zero.
    """
    from .cochains import eval2
    n = kappa.n
    bars = _std_vectors(n)
    table = {}
    for p in range(2 * n):
        for q in range(p + 1, 2 * n):
            val = eval2(kappa, bars[p], bars[q])
            for g, s in val.comps.items():
                lin = {k[0]: c for k, c in s.terms.items() if len(k) == 1}
                lin = _project_lin(lin, n)
                const = s.constant()
                if lin or const:
                    table.setdefault(g, {})[(p, q)] = (lin, const)
    return TwoCochain(n, table, "std")


def extend_from_std(kappa):
    """Extension by zero on x_[n], y_[n].

    With the storage convention of :func:`restrict_to_std` this is the same
    table viewed as a map on V.
    """
    return kappa.with_space("perm")


def std_descent_defects(kappa):
    """Polynomials that must vanish for kappa to come from a map on h* + h.

    Image constraints: the x_[n], y_[n] components of every linear value.
    Extension constraints: every coefficient of kappa(x_[n], v) and
    kappa(y_[n], v) for basis vectors v.
    """
    from .cochains import eval2
    n = kappa.n
    image = []
    for g, p, q, lin, _ in kappa.entries():
        sx = sum((c for k, c in lin.items() if k < n), ZERO)
        sy = sum((c for k, c in lin.items() if k >= n), ZERO)
        for s, label in ((sx, "x_[n]"), (sy, "y_[n]")):
            if s:
                image.append((g, (p, q), label, s))
    extension = []
    for u0, label in ((x_all(n), "x_[n]"), (y_all(n), "y_[n]")):
        for k in range(2 * n):
            val = eval2(kappa, u0, Vect.basis(k, n))
            for g, s in sorted(val.comps.items()):
                for key, c in s.coefficients():
                    extension.append((g, (label, k), key, c))
    return image, extension


def build_std_refl(n):
    """The three-parameter family on h* + h written in bar vectors."""
    require_n(n)
    ap, bp, c = sym("aperp"), sym("bperp"), sym("c")
    half = Fraction(n, 2)
    quarter = Fraction(n * n, 4)
    builder = CochainBuilder(n, "std")
    bars = _std_vectors(n)

    def tri_sum(i, j):
        """sum over k != i,j of (ijk) - (kji), as {perm: coefficient}."""
        out = {}
        for k in range(1, n + 1):
            if k in (i, j):
                continue
            out[Perm.from_cycles(n, [[i, j, k]])] = 1
            out[Perm.from_cycles(n, [[k, j, i]])] = -1
        return out

    def trans(i, j):
        return Perm.from_cycles(n, [[i, j]])

    values = {}  # (p, q) -> {g: (lin, const)}

    def put(p, q, g, lin=None, const=ZERO):
        cur = values.setdefault((p, q), {})
        l0, c0 = cur.get(g, ({}, ZERO))
        cur[g] = (_lin_add(l0, lin or {}), c0 + const)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            for g, s in tri_sum(i, j).items():
                if i < j:
                    put(x(i, n), x(j, n), g, const=bp * bp * quarter * s)
                    put(y(i, n), y(j, n), g, const=ap * ap * quarter * s)
                put(x(i, n), y(j, n), g, const=-(ap * bp) * quarter * s)
            val = _lin((ap * half, bars[x(i, n)] + bars[x(j, n)]), (bp * half, bars[y(i, n)] + bars[y(j, n)]))
            put(x(i, n), y(j, n), trans(i, j), lin=val, const=-c)
            put(x(i, n), y(i, n), trans(i, j), lin={k: -v for k, v in val.items()}, const=c)
    for (p, q), comps in values.items():
        for g, (lin, const) in comps.items():
            builder.set(g, p, q, lin=lin, const=const)
    return builder.build()


# -- named families ---------------------------------------------------------------

def combined_bindings(n):
    """Parameter bindings under which kappa_1 + kappa_refl + kappa_tri lifts."""
    out = {s: ZERO for s in ("a1", "a2", "a3", "a5", "a6", "b1", "b2", "b3", "b5", "b6")}
    out["a7"] = sym("a4")
    out["b7"] = sym("b4")
    out["beta"] = sym("alpha")
    out["a"] = sym("aperp").scale(Fraction(-(n - 2), 2))
    out["b"] = sym("bperp").scale(Fraction(-(n - 2), 2))
    return out


def _lie(n):
    return build_kappa1(n) + build_kappa_refl(n, linear=False)


def _refl_tri(n):
    return build_kappa_refl(n) + build_kappa_tri(n)


def _refl_full(n):
    return build_kappa_refl(n) + build_kappa_tri(n) + build_kappa1(n, linear=False)


def _combined(n):
    k = build_kappa1(n) + build_kappa_refl(n) + build_kappa_tri(n)
    return k.subs(combined_bindings(n))


def _rca_perm(n):
    return build_kappa1(n, linear=False) + build_kappa_refl(n, linear=False)


def _rca_std(n):
    k = restrict_to_std(_rca_perm(n))
    return k.subs({"alpha": sym("beta").scale(-(n - 1))})


def _std_lie(n):
    return _lie(n).with_space("std")


FAMILIES = {
    "lie1": lambda n: build_kappa1(n, constant=False),
    "const1": lambda n: build_kappa1(n, linear=False),
    "refl": build_kappa_refl,
    "refl-L": lambda n: build_kappa_refl(n, constant=False),
    "refl-C": lambda n: build_kappa_refl(n, linear=False),
    "tri": build_kappa_tri,
    "lie": _lie,
    "refl-tri": _refl_tri,
    "refl-full": _refl_full,
    "combined": _combined,
    "std-refl": build_std_refl,
    "std-lie": _std_lie,
    "rca-perm": _rca_perm,
    "rca-std": _rca_std,
    "zero": lambda n: TwoCochain(n),
}

FAMILY_DESCRIPTIONS = {
    "lie1": "linear invariant cochain on the identity (14 parameters a1..a7, b1..b7)",
    "const1": "constant invariant cochain on the identity (alpha, beta)",
    "refl": "linear and constant parts on transpositions (a, aperp, b, bperp, c)",
    "refl-L": "linear part on transpositions only",
    "refl-C": "constant part on transpositions only (c)",
    "tri": "constant cochain on 3-cycles built from a, aperp, b, bperp",
    "lie": "Lie orbifold candidates: lie1 + const1 + refl-C",
    "refl-tri": "refl + tri",
    "refl-full": "refl + tri + const1",
    "combined": "lie1 + const1 + refl + tri under the combined-lift bindings",
    "std-refl": "three-parameter family on h* + h (aperp, bperp, c)",
    "std-lie": "the lie family required to descend to h* + h",
    "rca-perm": "const1 + refl-C on V",
    "rca-std": "rca-perm restricted to h* + h with alpha = -(n-1) beta",
    "zero": "the zero cochain",
}


@dataclass
class FamilySpec:
    name: str
    n: int
    bindings: dict = field(default_factory=dict)

    def __post_init__(self):
        require_n(self.n)
        if self.name not in FAMILIES:
            raise KeyError(f"unknown family {self.name!r}")
        for k in self.bindings:
            if k not in SYMBOL_INDEX:
                raise KeyError(f"unknown parameter symbol {k!r}")

    @classmethod
    def from_dict(cls, data):
        return cls(data["name"], int(data["n"]),
                   {k: parse_poly(str(v)) for k, v in data.get("bindings", {}).items()})

    def to_dict(self):
        return {"name": self.name, "n": self.n, "bindings": {k: str(ParamPoly.coerce(v)) for k, v in self.bindings.items()}}

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as fh:
            return cls.from_dict(json.load(fh))


def build_presentation(spec):
    if isinstance(spec, str):
        raise TypeError("pass a FamilySpec")
    kappa = FAMILIES[spec.name](spec.n)
    if spec.bindings:
        kappa = specialize(kappa, spec.bindings)
    return kappa


def build(name, n, bindings=None):
    return build_presentation(FamilySpec(name, n, dict(bindings or {})))


def specialize(kappa, point):
    """Substitute parameters (rationals or polynomials); unbound symbols stay symbolic."""
    return kappa.subs({k: ParamPoly.coerce(v) for k, v in point.items()})


__all__ = [
    "FAMILIES",
    "FamilySpec",
    "build",
    "build_kappa1",
    "build_kappa_refl",
    "build_kappa_tri",
    "build_presentation",
    "build_std_refl",
    "combined_bindings",
    "extend_from_std",
    "orbit_extend",
    "restrict_to_std",
    "specialize",
    "std_descent_defects",
]

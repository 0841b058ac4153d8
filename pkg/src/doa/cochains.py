"""Group-graded alternating 2- and 3-cochains on V and the psi / phi operators.

A two-cochain stores, for each group element g, a table on canonical basis
pairs ``p < q``; each value is a pair (linear part, constant part) where the
linear part is a sparse ``{basis index: ParamPoly}`` dict.  Three-cochains
store SymPoly2 values on canonical triples ``p < q < r``.
"""

import warnings
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

from .algebra import GAElt, SymPoly2
from .group import (
    Perm,
    Vect,
    act_index,
    basis_label,
    fixed_codim,
    fixed_space,
    fixed_space_residual,
    generators,
    parse_basis,
    symmetric_group,
)
from .poly import ZERO, ParamPoly, parse_poly


class AlternationError(ValueError):
    pass


def _add_into(d, key, coef):
    s = d.get(key, ZERO) + coef
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _lin_add(a, b, sign=1):
    out = dict(a)
    for k, c in b.items():
        _add_into(out, k, c if sign == 1 else -c)
    return out


def _lin_neg(a):
    return {k: -c for k, c in a.items()}


def _lin_act(g, lin):
    return {act_index(g, k): c for k, c in lin.items()}


class TwoCochain:
    """Alternating map from pairs of basis vectors to (linear, constant) values.

    ``space`` is ``"perm"`` for maps on V and ``"std"`` for maps on the
    doubled standard representation, stored through their extension to V
    (x_[n] and y_[n] in the kernel).
    """

    __slots__ = ("n", "table", "space", "_full")

    def __init__(self, n, table=None, space="perm"):
        self.n = n
        self.space = space
        self.table = {}
        self._full = {}
        for g, entries in (table or {}).items():
            clean = {}
            for (p, q), (lin, const) in entries.items():
                lin = {k: c for k, c in lin.items() if c}
                if p == q:
                    if lin or const:
                        raise AlternationError(f"nonzero diagonal value at {g}")
                    continue
                if p > q:
                    p, q, lin, const = q, p, _lin_neg(lin), -const
                if (p, q) in clean:
                    raise AlternationError(f"pair given twice at {g}")
                if lin or const:
                    clean[(p, q)] = (lin, const)
            if clean:
                self.table[g] = clean

    # -- access --------------------------------------------------------------

    def support(self):
        return sorted(self.table)

    def linear_support(self):
        return sorted(g for g, e in self.table.items() if any(lin for lin, _ in e.values()))

    def constant_support(self):
        return sorted(g for g, e in self.table.items() if any(c for _, c in e.values()))

    def full(self, g):
        """Both orientations of every nonzero pair at g (cached)."""
        f = self._full.get(g)
        if f is None:
            f = {}
            for (p, q), (lin, const) in self.table.get(g, {}).items():
                f[(p, q)] = (lin, const)
                f[(q, p)] = (_lin_neg(lin), -const)
            self._full[g] = f
        return f

    def value(self, g, p, q):
        """(linear Vect, constant ParamPoly) at the basis pair (p, q)."""
        lin, const = self.full(g).get((p, q), ({}, ZERO))
        return Vect(self.n, lin), const

    def entries(self):
        """Canonical (g, p, q, linear dict, constant) tuples in sorted order."""
        for g in sorted(self.table):
            for (p, q), (lin, const) in sorted(self.table[g].items()):
                yield g, p, q, lin, const

    def linear_part(self):
        return TwoCochain(self.n, {g: {pq: (lin, ZERO) for pq, (lin, _) in e.items()}
                                   for g, e in self.table.items()}, self.space)

    def constant_part(self):
        return TwoCochain(self.n, {g: {pq: ({}, c) for pq, (_, c) in e.items()}
                                   for g, e in self.table.items()}, self.space)

    def has_constant_part(self):
        return any(c for e in self.table.values() for _, c in e.values())

    def has_linear_part(self):
        return any(lin for e in self.table.values() for lin, _ in e.values())

    def symbols(self):
        out = set()
        for _, _, _, lin, const in self.entries():
            out |= const.symbols()
            for c in lin.values():
                out |= c.symbols()
        return out

    def is_numeric(self):
        return not self.symbols()

    def is_zero(self):
        return not self.table

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("cochains over different n")
        table = {g: dict(e) for g, e in self.table.items()}
        for g, e in other.table.items():
            t = table.setdefault(g, {})
            for pq, (lin, const) in e.items():
                if pq in t:
                    l0, c0 = t[pq]
                    t[pq] = (_lin_add(l0, lin), c0 + const)
                else:
                    t[pq] = (lin, const)
        space = self.space if self.space == other.space else "perm"
        return TwoCochain(self.n, table, space)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        k = ParamPoly.coerce(k)
        return self.map_coefficients(lambda c: c * k)

    def map_coefficients(self, f):
        table = {}
        for g, e in self.table.items():
            table[g] = {pq: ({i: f(c) for i, c in lin.items()}, f(const)) for pq, (lin, const) in e.items()}
        return TwoCochain(self.n, table, self.space)

    def subs(self, mapping):
        mapping = {k: ParamPoly.coerce(v) for k, v in mapping.items()}
        return self.map_coefficients(lambda c: c.subs(mapping))

    def act(self, h):
        """The cochain h.kappa: (h.kappa)_{hgh^-1}(hu, hv) = h(kappa_g(u, v))."""
        hinv = h.inverse()
        table = {}
        for g, e in self.table.items():
            t = {}
            for (p, q), (lin, const) in e.items():
                t[(act_index(h, p), act_index(h, q))] = (_lin_act(h, lin), const)
            table[h * g * hinv] = t
        return TwoCochain(self.n, table, self.space)

    def with_space(self, space):
        out = TwoCochain(self.n, {}, space)
        out.table = self.table
        return out

    def __eq__(self, other):
        return isinstance(other, TwoCochain) and self.n == other.n and self.table == other.table

    def __repr__(self):
        return f"TwoCochain(n={self.n}, support={len(self.table)}, space={self.space!r})"

    # -- serialization ---------------------------------------------------------

    def to_dict(self):
        out = []
        for g, p, q, lin, const in self.entries():
            out.append({
                "g": str(g),
                "pair": [basis_label(p, self.n), basis_label(q, self.n)],
                "linear": {basis_label(k, self.n): str(c) for k, c in sorted(lin.items())},
                "constant": str(const),
            })
        return {"n": self.n, "kind": "two", "space": self.space, "entries": out}

    @classmethod
    def from_dict(cls, data):
        n = data["n"]
        if data.get("kind", "two") != "two":
            raise ValueError("not a two-cochain")
        table = {}
        for ent in data["entries"]:
            g = Perm.parse(ent["g"], n)
            p, q = (parse_basis(s, n) for s in ent["pair"])
            lin = {parse_basis(k, n): parse_poly(v) for k, v in ent.get("linear", {}).items()}
            const = parse_poly(ent.get("constant", "0"))
            t = table.setdefault(g, {})
            if (p, q) in t or (q, p) in t:
                raise AlternationError("duplicate entry")
            t[(p, q)] = (lin, const)
        return cls(n, table, data.get("space", "perm"))


class CochainBuilder:
    """Accumulates entries given in any orientation, rejecting inconsistent repeats."""

    def __init__(self, n, space="perm"):
        self.n = n
        self.space = space
        self.table = {}

    def set(self, g, p, q, lin=None, const=None):
        lin = {k: c for k, c in (lin or {}).items() if c}
        const = ParamPoly.coerce(const) if const is not None else ZERO
        if p > q:
            p, q, lin, const = q, p, _lin_neg(lin), -const
        t = self.table.setdefault(g, {})
        if (p, q) in t:
            if t[(p, q)] != (lin, const):
                raise AlternationError(f"inconsistent values at {g}, {basis_label(p, self.n)}, {basis_label(q, self.n)}")
            return
        t[(p, q)] = (lin, const)

    def build(self):
        return TwoCochain(self.n, self.table, self.space)


def vect_to_lin(v):
    return dict(v.coords)


def eval2(kappa, u, v):
    """Bilinear alternating extension of the basis table."""
    n = kappa.n
    comps = {}
    for g in kappa.table:
        full = kappa.full(g)
        acc = {}
        for s, us in u.coords.items():
            for t, vt in v.coords.items():
                e = full.get((s, t))
                if e is None:
                    continue
                lin, const = e
                k = us * vt
                for i, c in lin.items():
                    _add_into(acc, (i,), c * k)
                if const:
                    _add_into(acc, (), const * k)
        if acc:
            comps[g] = SymPoly2(n, acc)
    return GAElt(n, comps)


# -- three-cochains ------------------------------------------------------------------

def _sort3(p, q, r):
    """Sorted triple and the sign of the sorting permutation."""
    t = [p, q, r]
    sign = 1
    for i in range(2):
        for j in range(2 - i):
            if t[j] > t[j + 1]:
                t[j], t[j + 1] = t[j + 1], t[j]
                sign = -sign
            elif t[j] == t[j + 1]:
                return None, 0
    return tuple(t), sign


class ThreeCochain:
    __slots__ = ("n", "table", "breakdown")

    def __init__(self, n, table=None, breakdown=None):
        self.n = n
        self.table = {g: {t: s for t, s in e.items() if s} for g, e in (table or {}).items()}
        self.table = {g: e for g, e in self.table.items() if e}
        self.breakdown = breakdown

    def is_zero(self):
        return not self.table

    def support(self):
        return sorted(self.table)

    def value(self, g, p, q, r):
        t, sign = _sort3(p, q, r)
        if t is None:
            return SymPoly2(self.n)
        s = self.table.get(g, {}).get(t)
        if s is None:
            return SymPoly2(self.n)
        return s if sign == 1 else -s

    def component(self, g):
        return self.table.get(g, {})

    def __add__(self, other):
        table = {g: dict(e) for g, e in self.table.items()}
        for g, e in other.table.items():
            t = table.setdefault(g, {})
            for tri, s in e.items():
                t[tri] = t[tri] + s if tri in t else s
        return ThreeCochain(self.n, table)

    def __neg__(self):
        return ThreeCochain(self.n, {g: {t: -s for t, s in e.items()} for g, e in self.table.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return ThreeCochain(self.n, {g: {t: s.scale(k) for t, s in e.items()} for g, e in self.table.items()})

    def act(self, h):
        """Regraded action: component g, triple T goes to hgh^-1, hT."""
        hinv = h.inverse()
        table = {}
        for g, e in self.table.items():
            t = table.setdefault(h * g * hinv, {})
            for (p, q, r), s in e.items():
                tri, sign = _sort3(act_index(h, p), act_index(h, q), act_index(h, r))
                t[tri] = s.act(h) if sign == 1 else -s.act(h)
        return ThreeCochain(self.n, table)

    def specialize(self, point):
        return ThreeCochain(self.n, {g: {t: s.specialize(point) for t, s in e.items()}
                                     for g, e in self.table.items()})

    def coefficients(self):
        """Yield (g, triple, monomial key, ParamPoly) over all nonzero cells."""
        for g in sorted(self.table):
            for tri in sorted(self.table[g]):
                for key, c in self.table[g][tri].coefficients():
                    yield g, tri, key, c

    def __eq__(self, other):
        return isinstance(other, ThreeCochain) and self.table == other.table

    def __repr__(self):
        return f"ThreeCochain(n={self.n}, support={len(self.table)})"

    def to_dict(self):
        out = []
        n = self.n
        for g in sorted(self.table):
            for tri in sorted(self.table[g]):
                s = self.table[g][tri]
                out.append({
                    "g": str(g),
                    "triple": [basis_label(k, n) for k in tri],
                    "linear": {basis_label(k[0], n): str(c) for k, c in s.coefficients() if len(k) == 1},
                    "quadratic": {f"{basis_label(k[0], n)}*{basis_label(k[1], n)}": str(c)
                                  for k, c in s.coefficients() if len(k) == 2},
                    "constant": str(s.constant()),
                })
        return {"n": n, "kind": "three", "entries": out}

    @classmethod
    def from_dict(cls, data):
        n = data["n"]
        table = {}
        for ent in data["entries"]:
            g = Perm.parse(ent["g"], n)
            tri = tuple(parse_basis(s, n) for s in ent["triple"])
            terms = {(): parse_poly(ent.get("constant", "0"))}
            for k, v in ent.get("linear", {}).items():
                terms[(parse_basis(k, n),)] = parse_poly(v)
            for k, v in ent.get("quadratic", {}).items():
                a, b = (parse_basis(s, n) for s in k.split("*"))
                terms[tuple(sorted((a, b)))] = parse_poly(v)
            st, sign = _sort3(*tri)
            s = SymPoly2(n, terms)
            table.setdefault(g, {})[st] = s if sign == 1 else -s
        return cls(n, table)


class _Acc:
    """Flat accumulator {(sym key, param monomial): Fraction} for hot loops."""

    __slots__ = ("d",)

    def __init__(self):
        self.d = {}

    def add(self, key, poly, k=1):
        d = self.d
        for m, c in poly.terms.items():
            kk = (key, m)
            v = d.get(kk, 0) + c * k
            if v:
                d[kk] = v
            else:
                del d[kk]

    def add_product(self, key, p1, p2, k=1):
        d = self.d
        for m1, c1 in p1.terms.items():
            for m2, c2 in p2.terms.items():
                m = m1 + m2
                if len(m) > 1:
                    m = tuple(sorted(m))
                kk = (key, m)
                v = d.get(kk, 0) + c1 * c2 * k
                if v:
                    d[kk] = v
                else:
                    del d[kk]

    def to_sympoly(self, n):
        terms = {}
        for (key, m), c in self.d.items():
            terms.setdefault(key, {})[m] = c
        return SymPoly2(n, {k: ParamPoly(t) for k, t in terms.items()})


# -- psi -----------------------------------------------------------------------------

def psi(alpha):
    """psi(alpha)_g(v1,v2,v3) = alpha_g(v1,v2)(g.v3 - v3) + cyclic."""
    n = alpha.n
    table = {}
    for g in alpha.support():
        if g.is_identity():
            continue
        full = alpha.full(g)
        moved = [k for k in range(2 * n) if act_index(g, k) != k]
        triples = set()
        for (p, q) in alpha.table[g]:
            for r in moved:
                if r != p and r != q:
                    triples.add(tuple(sorted((p, q, r))))
        comp = {}
        for tri in sorted(triples):
            acc = _Acc()
            v1, v2, v3 = tri
            for a, b, c in ((v1, v2, v3), (v2, v3, v1), (v3, v1, v2)):
                e = full.get((a, b))
                gc = act_index(g, c)
                if e is None or gc == c:
                    continue
                lin, const = e
                for i, coef in lin.items():
                    acc.add((i, gc) if i <= gc else (gc, i), coef, 1)
                    acc.add((i, c) if i <= c else (c, i), coef, -1)
                if const:
                    acc.add((gc,), const, 1)
                    acc.add((c,), const, -1)
            s = acc.to_sympoly(n)
            if s:
                comp[tri] = s
        if comp:
            table[g] = comp
    return ThreeCochain(n, table)


# -- phi -----------------------------------------------------------------------------

def _phi_pairs(alpha, beta, ys):
    """phi_{x,y} for every x in the support of alpha and each y in ys."""
    n = alpha.n
    out = {}
    xs = alpha.support()
    for y in ys:
        by = beta.full(y)
        canon = [pq for pq, (lin, _) in beta.table[y].items() if lin]
        triples = set()
        for (p, q) in canon:
            for r in range(2 * n):
                if r != p and r != q:
                    triples.add(tuple(sorted((p, q, r))))
        triples = sorted(triples)
        for x in xs:
            ax = alpha.full(x)
            involved = {s for (s, _) in ax}
            comp = {}
            for tri in triples:
                v1, v2, v3 = tri
                acc = None
                for a, b, c in ((v1, v2, v3), (v2, v3, v1), (v3, v1, v2)):
                    e = by.get((b, c))
                    if e is None or not e[0]:
                        continue
                    w = e[0]
                    ya = act_index(y, a)
                    u = ((a, 2),) if ya == a else ((a, 1), (ya, 1))
                    for s, us in u:
                        if s not in involved:
                            continue
                        for t, wt in w.items():
                            val = ax.get((s, t))
                            if val is None:
                                continue
                            lin, const = val
                            if acc is None:
                                acc = _Acc()
                            for i, coef in lin.items():
                                acc.add_product((i,), wt, coef, us)
                            if const:
                                acc.add_product((), wt, const, us)
                if acc is not None:
                    s = acc.to_sympoly(n)
                    if s:
                        comp[tri] = s
            if comp:
                out[(x, y)] = comp
    return out


def _phi_worker(args):
    alpha, beta, ys = args
    return _phi_pairs(alpha, beta, ys)


def phi(alpha, beta, jobs=1):
    """phi(alpha, beta) with its factor-pair breakdown.

    phi_{x,y}(v1,v2,v3) = alpha_x(v1 + y.v1, beta_y(v2,v3)) + cyclic, summed
    into the component of x*y.  Only the linear part of beta is used.
    """
    if beta.has_constant_part():
        warnings.warn("phi ignores the constant part of its second argument", stacklevel=2)
    n = alpha.n
    ys = beta.linear_support()
    if jobs and jobs > 1 and len(ys) > 1:
        chunks = [ys[i::jobs] for i in range(jobs)]
        chunks = [c for c in chunks if c]
        with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
            parts = list(pool.map(_phi_worker, [(alpha, beta, c) for c in chunks]))
        breakdown = {}
        for part in parts:
            breakdown.update(part)
    else:
        breakdown = _phi_pairs(alpha, beta, ys)
    breakdown = dict(sorted(breakdown.items()))
    table = {}
    for (x, y), comp in breakdown.items():
        t = table.setdefault(x * y, {})
        for tri, s in comp.items():
            t[tri] = t[tri] + s if tri in t else s
    out = ThreeCochain(n, table)
    out.breakdown = breakdown
    return out


def equivariance_residual(theta, h):
    """h.theta - theta after regrading; zero for invariant inputs."""
    return theta.act(h) - theta


# -- checks ----------------------------------------------------------------------------

@dataclass
class CochainReport:
    invariant: bool = True
    support_codims: Counter = field(default_factory=Counter)
    image_ok: bool = True
    kernel_ok: bool = True
    witnesses: list = field(default_factory=list)

    @property
    def ok(self):
        return self.invariant and self.image_ok and self.kernel_ok and not self.witnesses

    def merge(self, other):
        return CochainReport(
            self.invariant and other.invariant,
            self.support_codims + other.support_codims,
            self.image_ok and other.image_ok,
            self.kernel_ok and other.kernel_ok,
            self.witnesses + other.witnesses,
        )


def invariance_defect(kappa, h):
    """kappa - h.kappa as a two-cochain (zero iff kappa is h-invariant)."""
    return kappa - kappa.act(h)


def check_invariance(kappa, exhaustive=False):
    """Compare kappa with h.kappa for h in a generating set of S_n.

    Invariance under (12) and (12...n) gives invariance under the whole
    group; ``exhaustive`` checks every element instead.
    """
    hs = symmetric_group(kappa.n) if exhaustive else generators(kappa.n)
    rep = CochainReport()
    for h in hs:
        d = invariance_defect(kappa, h)
        for g, p, q, lin, const in d.entries():
            rep.invariant = False
            rep.witnesses.append(("invariance", str(h), g, (p, q), (Vect(kappa.n, lin), const)))
    return rep


def check_support_codim(kappa):
    rep = CochainReport()
    lin_supp = set(kappa.linear_support())
    for g in kappa.support():
        cd = fixed_codim(g)
        rep.support_codims[cd] += 1
        if g in lin_supp and cd not in (0, 2):
            rep.witnesses.append(("codim", g, cd))
    return rep


def image_defects(kappa):
    """(g, pair, residual Vect) for linear values not in V^g."""
    out = []
    for g in kappa.linear_support():
        for (p, q), (lin, _) in sorted(kappa.table[g].items()):
            if not lin:
                continue
            res = fixed_space_residual(g, Vect(kappa.n, lin))
            if res:
                out.append((g, (p, q), res))
    return out


def check_image(kappa):
    rep = CochainReport()
    for g, pq, res in image_defects(kappa):
        rep.image_ok = False
        rep.witnesses.append(("image", g, pq, res))
    return rep


def check_kernel(kappa):
    """V^g must lie in the kernel of kappa_g for every g != 1 in the support."""
    rep = CochainReport()
    n = kappa.n
    for g in kappa.support():
        if g.is_identity():
            continue
        full = kappa.full(g)
        for f in fixed_space(g).basis:
            for k in range(2 * n):
                lin_acc, const_acc = {}, ZERO
                for s, c in f.coords.items():
                    e = full.get((s, k))
                    if e is None:
                        continue
                    lin_acc = _lin_add(lin_acc, {i: v * c for i, v in e[0].items()})
                    const_acc = const_acc + e[1] * c
                if lin_acc or const_acc:
                    rep.kernel_ok = False
                    rep.witnesses.append(("kernel", g, (str(f), basis_label(k, n)),
                                          (Vect(n, lin_acc), const_acc)))
    return rep


def check_cochain(kappa, exhaustive=False):
    return (check_invariance(kappa, exhaustive)
            .merge(check_support_codim(kappa))
            .merge(check_image(kappa))
            .merge(check_kernel(kappa)))


def canonical_triples(n):
    return list(combinations(range(2 * n), 3))

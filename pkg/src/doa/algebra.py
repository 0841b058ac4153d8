"""Degree-two symmetric polynomials in the basis of V, and group-algebra values.

A :class:`SymPoly2` maps monomial keys to ParamPoly coefficients.  Keys are
``()`` for the constant, ``(p,)`` for a basis vector and ``(p, q)`` with
``p <= q`` for a quadratic monomial.
"""

from .group import Perm, act_index, basis_label
from .poly import ONE, ZERO, ParamPoly


class DegreeError(ValueError):
    pass


def _key_act(g, key):
    if len(key) == 2:
        a, b = act_index(g, key[0]), act_index(g, key[1])
        return (a, b) if a <= b else (b, a)
    if len(key) == 1:
        return (act_index(g, key[0]),)
    return key


def _key_mul(k1, k2):
    if len(k1) + len(k2) > 2:
        raise DegreeError("product would exceed degree two")
    return tuple(sorted(k1 + k2))


def _add_into(out, key, coef):
    s = out.get(key, ZERO) + coef
    if s:
        out[key] = s
    else:
        out.pop(key, None)


class SymPoly2:
    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @classmethod
    def const(cls, n, c):
        return cls(n, {(): ParamPoly.coerce(c)})

    @classmethod
    def from_vect(cls, v):
        return cls(v.n, {(k,): c for k, c in v.coords.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_into(out, k, c)
        return SymPoly2(self.n, out)

    def __neg__(self):
        return SymPoly2(self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, p):
        p = ParamPoly.coerce(p)
        return SymPoly2(self.n, {k: c * p for k, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, SymPoly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((len(k) for k in self.terms), default=-1)

    def act(self, g):
        out = {}
        for k, c in self.terms.items():
            _add_into(out, _key_act(g, k), c)
        return SymPoly2(self.n, out)

    def linear_part(self):
        return SymPoly2(self.n, {k: c for k, c in self.terms.items() if len(k) == 1})

    def constant(self):
        return self.terms.get((), ZERO)

    def specialize(self, point):
        return SymPoly2(self.n, {k: c.subs(point) for k, c in self.terms.items()})

    def coefficients(self):
        """(monomial key, coefficient) pairs in key order."""
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.coefficients():
            m = "*".join(basis_label(i, self.n) for i in k)
            if not m:
                parts.append(f"({c})")
            elif c == ONE:
                parts.append(m)
            else:
                parts.append(f"({c})*{m}")
        return " + ".join(parts)

    __repr__ = __str__


def sym_mul(s, t):
    out = {}
    for k1, c1 in s.terms.items():
        for k2, c2 in t.terms.items():
            _add_into(out, _key_mul(k1, k2), c1 * c2)
    return SymPoly2(s.n, out)


class GAElt:
    """Element of S(V) tensor CG: group element -> SymPoly2 coefficient."""

    __slots__ = ("n", "comps")

    def __init__(self, n, comps=None):
        self.n = n
        self.comps = {g: s for g, s in (comps or {}).items() if s}

    def __add__(self, other):
        out = dict(self.comps)
        for g, s in other.comps.items():
            t = out[g] + s if g in out else s
            if t:
                out[g] = t
            else:
                out.pop(g, None)
        return GAElt(self.n, out)

    def __neg__(self):
        return GAElt(self.n, {g: -s for g, s in self.comps.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, GAElt) and self.comps == other.comps

    def __bool__(self):
        return bool(self.comps)

    def component(self, g):
        return self.comps.get(g, SymPoly2(self.n))

    def __str__(self):
        if not self.comps:
            return "0"
        return " + ".join(f"[{s}]{g}" for g, s in sorted(self.comps.items()))

    __repr__ = __str__


def ga_act(h, e):
    """Diagonal action: the component s at g goes to h.s at h g h^-1."""
    hinv = h.inverse()
    return GAElt(e.n, {h * g * hinv: s.act(h) for g, s in e.comps.items()})


def ga_one(n):
    return GAElt(n, {Perm.identity(n): SymPoly2.const(n, ONE)})

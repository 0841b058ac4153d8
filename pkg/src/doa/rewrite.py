"""Diamond-lemma oracle: overlap resolution in T(V)#G for numeric cochains.

Elements are kept straightened, as maps ``(letters, g) -> Fraction`` with the
group element on the right.  The rule for letters j > i is

    v_j v_i  ->  v_i v_j + kappa(v_j, v_i)

so normal words have non-decreasing letters.  For cochains on h* + h the
letters are the basis e_k = x_k - x_n, f_k = y_k - y_n (k < n) and the group
acts by non-monomial matrices; otherwise letters are the basis of V.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .cochains import eval2
from .group import Perm, Vect, basis_label, generators, require_n


class SymbolicParameterError(ValueError):
    """The cochain still has free parameters."""


class NotClosedError(ValueError):
    """A value of the cochain leaves the chosen letter space."""


def _add(out, key, c):
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


class NCElement:
    """Sparse combination of words ``letters . g``."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs, terms=None):
        self.rs = rs
        self.terms = {k: Fraction(c) for k, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, rs, letters, g=None):
        g = g if g is not None else rs.identity
        return cls(rs, {(tuple(letters), g): 1})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return NCElement(self.rs, out)

    def __neg__(self):
        return NCElement(self.rs, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return NCElement(self.rs, {w: c * k for w, c in self.terms.items()})

    def __mul__(self, other):
        """Product in T(V)#G: (u.g)(w.h) = u (g.w) . gh, not normalized."""
        out = {}
        for (w1, g1), c1 in self.terms.items():
            for (w2, g2), c2 in other.terms.items():
                for w, c in self.rs.act_word(g1, w2).items():
                    _add(out, (w1 + w, g1 * g2), c1 * c2 * c)
        return NCElement(self.rs, out)

    def __eq__(self, other):
        return isinstance(other, NCElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        return max((len(w) for w, _ in self.terms), default=-1)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (w, g), c in sorted(self.terms.items(), key=lambda t: (-len(t[0][0]), t[0])):
            word = "*".join(self.rs.label(k) for k in w)
            body = word + ("" if g.is_identity() else ("*" if word else "") + str(g))
            if not body:
                parts.append(str(c))
            else:
                parts.append(body if c == 1 else f"-{body}" if c == -1 else f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


class RewriteSystem:
    """Commutation rules for a numeric two-cochain, with straightening."""

    def __init__(self, kappa, basis="auto"):
        require_n(kappa.n)
        if not kappa.is_numeric():
            raise SymbolicParameterError(
                f"cochain has free parameters: {', '.join(sorted(kappa.symbols()))}")
        self.kappa = kappa
        self.n = n = kappa.n
        self.identity = Perm.identity(n)
        self.basis = ("std" if kappa.space == "std" else "perm") if basis == "auto" else basis
        self.size = 2 * n if self.basis == "perm" else 2 * (n - 1)
        self._rules = {}
        self._nf_cache = {}

    # -- letters ------------------------------------------------------------

    def label(self, k):
        if self.basis == "perm":
            return basis_label(k, self.n)
        m = self.n - 1
        return f"e{k + 1}" if k < m else f"f{k - m + 1}"

    def letter_vector(self, k):
        """The letter as a vector of V."""
        n = self.n
        if self.basis == "perm":
            return Vect.basis(k, n)
        m = n - 1
        off, i = (0, k) if k < m else (n, k - m)
        return Vect.basis(off + i, n) - Vect.basis(off + n - 1, n)

    def coords(self, v):
        """Letter coordinates of a numeric vector of V (inside h* + h when std)."""
        n = self.n
        vals = {k: c.constant_value() for k, c in v.coords.items()}
        if self.basis == "perm":
            return {k: Fraction(c) for k, c in vals.items() if c}
        m = n - 1
        out = {}
        for off, shift in ((0, 0), (n, m)):
            block = {k - off: c for k, c in vals.items() if off <= k < off + n}
            if sum(block.values()) != 0:
                raise NotClosedError("value has a component along x_[n] or y_[n]")
            for i, c in block.items():
                if i < m and c:
                    out[shift + i] = Fraction(c)
        return out

    @lru_cache(maxsize=None)
    def act_letter(self, g, k):
        return tuple(sorted(self.coords(_act_vect(g, self.letter_vector(k))).items()))

    def act_word(self, g, w):
        out = {(): Fraction(1)}
        if g.is_identity():
            return {tuple(w): Fraction(1)}
        for k in w:
            nxt = {}
            for prefix, c in out.items():
                for k2, c2 in self.act_letter(g, k):
                    _add(nxt, prefix + (k2,), c * c2)
            out = nxt
        return out

    # -- rules --------------------------------------------------------------

    def kappa_value(self, j, i):
        """kappa(v_j, v_i) as an NCElement of degree <= 1."""
        key = (j, i)
        if key not in self._rules:
            val = eval2(self.kappa, self.letter_vector(j), self.letter_vector(i))
            terms = {}
            for g, s in val.comps.items():
                lin = Vect(self.n, {k[0]: c for k, c in s.terms.items() if len(k) == 1})
                for k, c in self.coords(lin).items():
                    _add(terms, ((k,), g), c)
                const = s.constant()
                if const:
                    _add(terms, ((), g), Fraction(const.constant_value()))
            self._rules[key] = NCElement(self, terms)
        return self._rules[key]

    def rule(self, j, i):
        """Right-hand side of the rule for v_j v_i (j > i)."""
        if not j > i:
            raise ValueError("rules are oriented from larger-first words")
        return NCElement.word(self, (i, j)) + self.kappa_value(j, i)

    @property
    def rules(self):
        return {(j, i): self.rule(j, i) for j in range(self.size) for i in range(j)}

    # -- normal forms -------------------------------------------------------

    def nf_word(self, w):
        """Normal form of a pure letter word (identity tail), memoized."""
        w = tuple(w)
        hit = self._nf_cache.get(w)
        if hit is not None:
            return hit
        pos = next((p for p in range(len(w) - 1) if w[p] > w[p + 1]), None)
        if pos is None:
            out = {(w, self.identity): Fraction(1)}
        else:
            out = self._apply(w, pos)
        self._nf_cache[w] = out
        return out

    def _apply(self, w, pos):
        """Rewrite w at position pos once, then normalize everything."""
        j, i = w[pos], w[pos + 1]
        prefix, suffix = w[:pos], w[pos + 2:]
        out = dict(self.nf_word(prefix + (i, j) + suffix))
        for (mid, g), c in self.kappa_value(j, i).terms.items():
            for tail, c2 in self.act_word(g, suffix).items():
                for (w2, h), c3 in self.nf_word(prefix + mid + tail).items():
                    _add(out, (w2, h * g), c * c2 * c3)
        return out

    def normal_form(self, e):
        out = {}
        for (w, g), c in e.terms.items():
            for (w2, h), c2 in self.nf_word(w).items():
                _add(out, (w2, h * g), c * c2)
        return NCElement(self, out)

    def reduce_at(self, w, pos):
        return NCElement(self, self._apply(tuple(w), pos))


def build_rewrite(kappa, n=None, basis="auto"):
    if n is not None and n != kappa.n:
        raise ValueError(f"cochain is for n={kappa.n}, not {n}")
    return RewriteSystem(kappa, basis)


def normal_form_nc(e, rs):
    return rs.normal_form(e)


def _act_vect(g, v):
    from .group import act
    return act(g, v)


def _descent_witness(rs):
    """For h* + h cochains: x_[n], y_[n] must be in the kernel (extension by zero)."""
    from .group import x_all, y_all
    n = rs.n
    for u0, label in ((x_all(n), "x_[n]"), (y_all(n), "y_[n]")):
        for k in range(2 * n):
            if eval2(rs.kappa, u0, Vect.basis(k, n)):
                return {"kind": "descent", "pair": [label, basis_label(k, n)]}
    return None


def overlap_check(rs, group_overlaps=True):
    """Resolve every ambiguity v_k v_j v_i (k > j > i) both ways.

    Returns ``(passed, witness, triples_checked)``; the witness is the first
    failing triple in canonical order with the difference of the two normal
    forms.  Straightening overlaps g (v_j v_i) are checked for the generators
    of S_n.
    """
    checked = 0
    try:
        if rs.basis == "std":
            wit = _descent_witness(rs)
            if wit is not None:
                return False, wit, 0
        for i, j, k in combinations(range(rs.size), 3):
            checked += 1
            left = rs.reduce_at((k, j, i), 0)
            right = rs.reduce_at((k, j, i), 1)
            diff = left - right
            if diff:
                return False, {"kind": "letters", "triple": [rs.label(k), rs.label(j), rs.label(i)],
                               "diff": str(diff)}, checked
        if group_overlaps:
            for g in generators(rs.n):
                for i, j in combinations(range(rs.size), 2):
                    checked += 1
                    gel = NCElement.word(rs, (), g)
                    # g (v_j v_i): straighten first, or rewrite first
                    first = rs.normal_form(gel * NCElement.word(rs, (j, i)))
                    second = rs.normal_form(gel * rs.rule(j, i))
                    diff = first - second
                    if diff:
                        return False, {"kind": "group", "g": str(g),
                                       "pair": [rs.label(j), rs.label(i)], "diff": str(diff)}, checked
    except NotClosedError as exc:
        return False, {"kind": "closure", "message": str(exc)}, checked
    return True, None, checked


def oracle_report(rs):
    passed, witness, checked = overlap_check(rs)
    return {"pass": passed, "witness": witness, "triples_checked": checked}


def normal_word_count(rs, degree):
    """Distinct normal words of degree <= ``degree`` reached from all words (times G)."""
    from .group import symmetric_group
    from itertools import product
    seen = set()
    group = symmetric_group(rs.n)
    for d in range(degree + 1):
        for w in product(range(rs.size), repeat=d):
            for (w2, _), _c in rs.nf_word(w).items():
                seen.add(w2)
    return len(seen) * len(group)


def expected_normal_word_count(size, degree, n):
    """dim S(V) in degrees <= degree, times n!."""
    return sum(comb(size + d - 1, d) for d in range(degree + 1)) * factorial(n)


__all__ = [
    "NCElement",
    "NotClosedError",
    "RewriteSystem",
    "SymbolicParameterError",
    "build_rewrite",
    "expected_normal_word_count",
    "normal_form_nc",
    "normal_word_count",
    "oracle_report",
    "overlap_check",
]

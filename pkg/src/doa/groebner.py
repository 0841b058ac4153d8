"""Buchberger's algorithm over the rationals, grevlex order, plus Hilbert series.

Internally polynomials are lists of ``(exponent tuple, int)`` sorted by
decreasing grevlex order and kept primitive (content stripped after every
reduction step).  Public results are monic ParamPolys.
"""

import time
from fractions import Fraction
from math import gcd

from .poly import SYMBOL_INDEX, ParamPoly, exponents

_KEYS = {}


class GroebnerTimeout(RuntimeError):
    def __init__(self, stats):
        super().__init__(f"Groebner budget exhausted after {stats['spairs']} S-pairs")
        self.stats = stats


class NotHomogeneousError(ValueError):
    pass


def _key(e):
    k = _KEYS.get(e)
    if k is None:
        k = (sum(e), tuple(-v for v in reversed(e)))
        _KEYS[e] = k
    return k


def _from_param(p):
    """ParamPoly -> primitive integer term list."""
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    terms = [(exponents(m), int(c * den)) for m, c in p.terms.items()]
    terms.sort(key=lambda t: _key(t[0]), reverse=True)
    return _primitive(terms)


def _to_param(f, monic=True):
    if not f:
        return ParamPoly()
    lc = f[0][1]
    out = {}
    for e, c in f:
        m = []
        for i, k in enumerate(e):
            m.extend([i] * k)
        out[tuple(m)] = Fraction(c, lc) if monic else Fraction(c)
    return ParamPoly(out)


def _primitive(f):
    g = 0
    for _, c in f:
        g = gcd(g, c)
        if g == 1:
            break
    if f and f[0][1] < 0:
        g = -g
    if g not in (0, 1):
        f = [(e, c // g) for e, c in f]
    return f


def _divides(a, b):
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


def _combine(f, a, g, b, m):
    """a*f - b*(x^m * g), both inputs sorted; leading terms may cancel."""
    out = []
    gm = [(tuple(x + y for x, y in zip(e, m)), c) for e, c in g] if any(m) else g
    i = j = 0
    lf, lg = len(f), len(gm)
    while i < lf and j < lg:
        ef, cf = f[i]
        eg, cg = gm[j]
        if ef == eg:
            c = a * cf - b * cg
            if c:
                out.append((ef, c))
            i += 1
            j += 1
        elif _key(ef) > _key(eg):
            out.append((ef, a * cf))
            i += 1
        else:
            out.append((eg, -b * cg))
            j += 1
    while i < lf:
        out.append((f[i][0], a * f[i][1]))
        i += 1
    while j < lg:
        out.append((gm[j][0], -b * gm[j][1]))
        j += 1
    return out


class _Reducer:
    def __init__(self):
        self.polys = []

    def find(self, e):
        d = sum(e)
        for g in self.polys:
            lm = g[0][0]
            if sum(lm) <= d and _divides(lm, e):
                return g
        return None

    def reduce(self, f, full=True):
        """Remainder of f; with full=False only the leading term is cleared."""
        rem = []
        while f:
            e, c = f[0]
            g = self.find(e)
            if g is None:
                if not full:
                    return _primitive(f)
                rem.append(f[0])
                f = f[1:]
                continue
            lc = g[0][1]
            d = gcd(c, lc)
            a, b = lc // d, c // d
            f = _combine(f, a, g, b, _sub(e, g[0][0]))
            if a != 1:
                rem = [(e2, a * c2) for e2, c2 in rem]
            # content stripping over remainder and work poly together
            cont = 0
            for _, c2 in rem:
                cont = gcd(cont, c2)
            for _, c2 in f:
                if cont == 1:
                    break
                cont = gcd(cont, c2)
            if cont > 1:
                rem = [(e2, c2 // cont) for e2, c2 in rem]
                f = [(e2, c2 // cont) for e2, c2 in f]
        return _primitive(rem)


class GroebnerBasis:
    """Reduced Groebner basis (monic generators sorted by leading monomial)."""

    def __init__(self, polys, symbols, stats, degree_bound=None, homogeneous=True):
        self._polys = polys
        self.generators = [_to_param(f) for f in polys]
        self.symbols = tuple(symbols)
        self.stats = stats
        self.degree_bound = degree_bound
        self.homogeneous = homogeneous
        self.order = "grevlex"

    def leading_exponents(self):
        return [f[0][0] for f in self._polys]

    def reduce(self, p):
        return normal_form(p, self)

    def contains(self, p):
        if self.degree_bound is not None:
            if not p.is_homogeneous() or p.degree() > self.degree_bound:
                raise ValueError("membership beyond the degree bound of a truncated basis")
        return not normal_form(p, self)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GroebnerBasis({len(self.generators)} generators, truncated={self.degree_bound})"


def _ring(gens, symbols):
    if symbols is None:
        found = set()
        for g in gens:
            found |= g.symbols()
        symbols = found
    return tuple(sorted(set(symbols), key=lambda s: SYMBOL_INDEX[s]))


def buchberger(gens, symbols=None, degree_bound=None, budget=None, cancel=None):
    """Reduced Groebner basis of the ideal generated by ``gens``.

    ``degree_bound`` truncates the computation for homogeneous input: the
    result then decides membership for homogeneous polynomials up to that
    degree.  ``budget`` is a time limit in seconds; ``cancel`` an optional
    zero-argument callable polled between S-pairs.
    """
    start = time.monotonic()
    gens = [ParamPoly.coerce(g) for g in gens]
    gens = [g for g in gens if g]
    ring = _ring(gens, symbols)
    homogeneous = all(g.is_homogeneous() for g in gens)
    if degree_bound is not None and not homogeneous:
        raise NotHomogeneousError("degree truncation needs homogeneous generators")
    stats = {"spairs": 0, "zero_reductions": 0, "criteria_skips": 0}
    polys = []  # every basis element ever added, by creation index
    alive = []  # indices currently in G
    pairs = {}  # (i, j) -> (degree of lcm, creation counter)
    counter = [0]
    red = _Reducer()

    def lm(i):
        return polys[i][0][0]

    def update(h_idx):
        h = lm(h_idx)
        cand = [(i, _lcm(h, lm(i))) for i in alive]
        keep = []
        for k, (i, l) in enumerate(cand):
            if _coprime(h, lm(i)):
                keep.append((i, l))
                continue
            others = [l2 for j, (i2, l2) in enumerate(cand) if j > k] + [l2 for _, l2 in keep]
            if not any(_divides(l2, l) for l2 in others):
                keep.append((i, l))
        new_pairs = [(i, l) for i, l in keep if not _coprime(h, lm(i))]
        stats["criteria_skips"] += len(cand) - len(new_pairs)
        for (i, j) in list(pairs):
            l = _lcm(lm(i), lm(j))
            if _divides(h, l) and _lcm(lm(i), h) != l and _lcm(lm(j), h) != l:
                del pairs[(i, j)]
                stats["criteria_skips"] += 1
        for i, l in new_pairs:
            counter[0] += 1
            pairs[(i, h_idx)] = (sum(l), counter[0])
        alive[:] = [i for i in alive if not _divides(h, lm(i))]
        alive.append(h_idx)
        red.polys = [polys[i] for i in alive]

    for g in sorted((_from_param(g) for g in gens), key=lambda f: _key(f[0][0])):
        f = red.reduce(g)
        if f:
            polys.append(f)
            update(len(polys) - 1)

    truncated = False
    while pairs:
        if budget is not None and time.monotonic() - start > budget:
            stats["elapsed_ms"] = int(1000 * (time.monotonic() - start))
            raise GroebnerTimeout(stats)
        if cancel is not None and cancel():
            stats["elapsed_ms"] = int(1000 * (time.monotonic() - start))
            raise GroebnerTimeout(stats)
        (i, j), (deg, _) = min(pairs.items(), key=lambda t: t[1])
        del pairs[(i, j)]
        if degree_bound is not None and deg > degree_bound:
            truncated = True
            continue
        stats["spairs"] += 1
        fi, fj = polys[i], polys[j]
        l = _lcm(fi[0][0], fj[0][0])
        ci, cj = fi[0][1], fj[0][1]
        d = gcd(ci, cj)
        s = _combine(_mul_mono(fi, _sub(l, fi[0][0])), cj // d, fj, ci // d, _sub(l, fj[0][0]))
        s = red.reduce(_primitive(s)) if s else s
        if not s:
            stats["zero_reductions"] += 1
            continue
        polys.append(s)
        update(len(polys) - 1)

    # inter-reduce
    basis = sorted((polys[i] for i in alive), key=lambda f: _key(f[0][0]))
    out = []
    for k, f in enumerate(basis):
        red.polys = [g for m, g in enumerate(basis) if m != k]
        out.append(red.reduce(f))
    basis = sorted(out, key=lambda f: _key(f[0][0]))
    stats["elapsed_ms"] = int(1000 * (time.monotonic() - start))
    return GroebnerBasis(basis, ring, stats, degree_bound if truncated or degree_bound else None, homogeneous)


def _mul_mono(f, m):
    if not any(m):
        return f
    return [(tuple(x + y for x, y in zip(e, m)), c) for e, c in f]


def normal_form(p, gb):
    """Complete reduction of p modulo gb (rational remainder, not rescaled)."""
    p = ParamPoly.coerce(p)
    if not p:
        return p
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    terms = sorted(((exponents(m), int(c * den)) for m, c in p.terms.items()),
                   key=lambda t: _key(t[0]), reverse=True)
    red = _Reducer()
    red.polys = gb._polys
    rem = red.reduce(terms)
    if not rem:
        return ParamPoly()
    # the remainder is determined up to a scalar; rescale to match p's scale
    r = _to_param(rem, monic=False)
    return _rescale_like(r, p, gb)


def _rescale_like(r, p, gb):
    """Fix the free scalar of a fraction-free remainder.

    Fraction-free reduction returns lambda * NF(p) for some nonzero rational
    lambda; recover it by reducing with exact rational arithmetic on the
    leading term of r.
    """
    exact = _exact_normal_form(p, gb)
    return exact if exact else r


def _exact_normal_form(p, gb):
    polys = [(f, Fraction(1, f[0][1])) for f in gb._polys]
    work = {exponents(m): c for m, c in p.terms.items()}
    rem = {}
    while work:
        e = max(work, key=_key)
        c = work.pop(e)
        for f, inv in polys:
            lm = f[0][0]
            if _divides(lm, e):
                m = _sub(e, lm)
                k = c * inv
                for e2, c2 in f[1:]:
                    e3 = tuple(x + y for x, y in zip(e2, m))
                    v = work.get(e3, 0) - k * c2
                    if v:
                        work[e3] = v
                    else:
                        work.pop(e3, None)
                break
        else:
            rem[e] = c
    out = {}
    for e, c in rem.items():
        m = []
        for i, k in enumerate(e):
            m.extend([i] * k)
        out[tuple(m)] = Fraction(c)
    return ParamPoly(out)


def ideal_contains(gb, p):
    return gb.contains(ParamPoly.coerce(p))


def _bound_for(polys):
    polys = [p for p in polys if p]
    if polys and all(p.is_homogeneous() for p in polys):
        return max(p.degree() for p in polys)
    return None


def ideal_equal(left, right, budget=None):
    """Mutual reduction: (equal, left generators outside right, right outside left).

    For homogeneous systems both bases are truncated at the largest generator
    degree, which is exact for membership of those generators.
    """
    bound = _bound_for(list(left) + list(right))
    gl = buchberger(left, degree_bound=bound, budget=budget)
    gr = buchberger(right, degree_bound=bound, budget=budget)
    left_only = [p for p in left if p and normal_form(p, gr)]
    right_only = [p for p in right if p and normal_form(p, gl)]
    return (not left_only and not right_only), left_only, right_only


# -- Hilbert series ------------------------------------------------------------

def _minimalize(monos):
    monos = sorted(set(monos), key=sum)
    out = []
    for m in monos:
        if not any(_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a, b, sign=1):
    n = max(len(a), len(b))
    out = [0] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += sign * x
    return out


def hilbert_numerator(monos):
    """K(t) with HS(S/I) = K(t) / (1-t)^k for the monomial ideal I = <monos>.

    Pivot recursion: for a variable x_v appearing in the most generators,
    K(I) = K(I + <x_v>) + t * K(I : x_v).
    """
    monos = _minimalize(monos)
    if not monos:
        return [1]
    if any(sum(m) == 0 for m in monos):
        return [0]
    nontrivial = [m for m in monos if sum(1 for v in m if v) > 1]
    if not nontrivial or _pairwise_coprime(monos):
        out = [1]
        for m in monos:
            d = sum(m)
            out = _poly_mul(out, [1] + [0] * (d - 1) + [-1])
        return out
    counts = [sum(1 for m in nontrivial if m[v]) for v in range(len(monos[0]))]
    v = max(range(len(counts)), key=lambda i: counts[i])
    unit = tuple(1 if i == v else 0 for i in range(len(monos[0])))
    left = [m for m in monos if not m[v]] + [unit]
    right = [tuple(x - 1 if i == v and x else x for i, x in enumerate(m)) for m in monos]
    return _poly_add(hilbert_numerator(left), [0] + hilbert_numerator(right))


def _pairwise_coprime(monos):
    used = [0] * len(monos[0])
    for m in monos:
        for i, x in enumerate(m):
            if x:
                if used[i]:
                    return False
                used[i] = 1
    return True


def hilbert_series(gb):
    """(numerator coefficients, number of ring variables)."""
    idx = [SYMBOL_INDEX[s] for s in gb.symbols]
    monos = [tuple(e[i] for i in idx) for e in gb.leading_exponents()]
    if not idx:
        return ([0] if monos else [1]), 0
    return hilbert_numerator(monos), len(idx)


def hilbert_dimension(gb):
    """(affine dimension, projective dimension, degree) of a homogeneous ideal."""
    if not gb.homogeneous:
        raise NotHomogeneousError("Hilbert dimension needs a homogeneous ideal")
    if gb.degree_bound is not None:
        raise ValueError("dimension needs a complete (untruncated) Groebner basis")
    num, k = hilbert_series(gb)
    num = list(num)
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    if not any(num):
        return -1, -2, 0
    d = k
    while d > 0 and sum(num) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in num[:-1]:
            acc += c
            q.append(acc)
        num = q
        d -= 1
    return d, d - 1, sum(num)


def hilbert_function_bruteforce(gb, degree):
    """Count standard monomials of each degree up to ``degree`` (test oracle)."""
    from itertools import combinations_with_replacement
    idx = [SYMBOL_INDEX[s] for s in gb.symbols]
    lms = [tuple(e[i] for i in idx) for e in gb.leading_exponents()]
    out = []
    for d in range(degree + 1):
        count = 0
        for combo in combinations_with_replacement(range(len(idx)), d):
            e = [0] * len(idx)
            for v in combo:
                e[v] += 1
            if not any(_divides(m, e) for m in lms):
                count += 1
        out.append(count)
    return out


__all__ = [
    "GroebnerBasis",
    "GroebnerTimeout",
    "NotHomogeneousError",
    "buchberger",
    "hilbert_dimension",
    "hilbert_function_bruteforce",
    "hilbert_series",
    "ideal_contains",
    "ideal_equal",
    "normal_form",
]

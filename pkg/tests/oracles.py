"""Independent reference computations used to validate the engine.

None of these share code paths with the objects they check beyond the
basic data types: psi/phi are evaluated pointwise from eval2, invariant
forms are found by solving linear equations, Hilbert functions by ranks.
"""

import random
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

import numpy as np
import sympy

from doa.algebra import SymPoly2, sym_mul
from doa.cochains import eval2
from doa.group import Vect, act, generators, symmetric_group
from doa.poly import SYMBOL_INDEX, ParamPoly, exponents


# -- psi / phi from the definitions ---------------------------------------------

def naive_psi(alpha, g, v1, v2, v3):
    n = alpha.n
    out = SymPoly2(n)
    for a, b, c in ((v1, v2, v3), (v2, v3, v1), (v3, v1, v2)):
        val = eval2(alpha, a, b).component(g)
        out = out + sym_mul(val, SymPoly2.from_vect(act(g, c) - c))
    return out


def _linear_vect(s, n):
    return Vect(n, {k[0]: c for k, c in s.terms.items() if len(k) == 1})


def naive_phi(alpha, beta, g, v1, v2, v3):
    """sum over x y = g of alpha_x(v1 + y.v1, beta_y(v2, v3)) + cyclic."""
    n = alpha.n
    out = SymPoly2(n)
    ys = beta.linear_support()
    for x in alpha.support():
        for y in ys:
            if x * y != g:
                continue
            for a, b, c in ((v1, v2, v3), (v2, v3, v1), (v3, v1, v2)):
                w = _linear_vect(eval2(beta, b, c).component(y), n)
                if w:
                    out = out + eval2(alpha, a + act(y, a), w).component(x)
    return out


# -- invariant alternating forms by linear algebra ---------------------------------

def invariant_two_forms_by_solving(n):
    """dim of antisymmetric B with P^T B P = B for the generators of S_n."""
    m = 2 * n
    pairs = list(combinations(range(m), 2))
    idx = {p: i for i, p in enumerate(pairs)}
    rows = []
    for g in generators(n):
        perm = [g[k] if k < n else n + g[k - n] for k in range(m)]
        for (p, q) in pairs:
            # (P^T B P)[p, q] = B[perm p, perm q]
            row = np.zeros(len(pairs))
            a, b = perm[p], perm[q]
            if a < b:
                row[idx[(a, b)]] += 1
            else:
                row[idx[(b, a)]] -= 1
            row[idx[(p, q)]] -= 1
            rows.append(row)
    return len(pairs) - np.linalg.matrix_rank(np.array(rows))


# -- Hilbert function by ranks (no Groebner bases) ------------------------------------

def hilbert_function_by_rank(gens, symbols, degree):
    """dim (S/I)_d for d <= degree, computing I_d as the span of monomial multiples."""
    idx = [SYMBOL_INDEX[s] for s in symbols]
    k = len(idx)

    def exps(poly):
        return {tuple(exponents(m)[i] for i in idx): c for m, c in poly.terms.items()}

    gens = [exps(g) for g in gens]
    out = []
    for d in range(degree + 1):
        monos = []
        for combo in combinations_with_replacement(range(k), d):
            e = [0] * k
            for v in combo:
                e[v] += 1
            monos.append(tuple(e))
        col = {m: i for i, m in enumerate(monos)}
        rows = []
        for g in gens:
            gd = sum(next(iter(g)))
            if gd > d:
                continue
            for combo in combinations_with_replacement(range(k), d - gd):
                shift = [0] * k
                for v in combo:
                    shift[v] += 1
                row = [0] * len(monos)
                for e, c in g.items():
                    row[col[tuple(a + b for a, b in zip(e, shift))]] += c
                rows.append(row)
        rank = sympy.Matrix(rows).rank() if rows else 0
        out.append(len(monos) - rank)
    return out


def combinatorial_dimension(lead_exps, symbols):
    """Largest set of variables containing no leading monomial's support."""
    idx = [SYMBOL_INDEX[s] for s in symbols]
    supports = [frozenset(v for v in idx if e[v]) for e in lead_exps]
    for size in range(len(idx), -1, -1):
        for subset in combinations(idx, size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return -1


# -- numeric points on and off the constraint varieties --------------------------------

def _rand(rng, lo=-4, hi=4, nonzero=True):
    while True:
        v = Fraction(rng.randint(lo, hi), rng.choice((1, 1, 2, 3)))
        if v or not nonzero:
            return v


LINEAR = [f"a{i}" for i in range(1, 8)] + [f"b{i}" for i in range(1, 8)]


def _base(kappa):
    return {s: Fraction(0) for s in kappa.symbols()}


def _on_lie(kappa, rng, n):
    p = _base(kappa)
    if rng.random() < 0.5:
        r, s = _rand(rng), _rand(rng)
        for k, v in (("a4", r), ("a7", r), ("b4", s), ("b7", s)):
            if k in p:
                p[k] = v
    for k in ("alpha", "beta", "c"):
        if k in p:
            p[k] = _rand(rng)
    return p


def _on_refl_like(kappa, rng, n):
    p = _base(kappa)
    a, b = _rand(rng), _rand(rng)
    for k, v in (("a", a), ("aperp", a), ("b", b), ("bperp", b), ("c", _rand(rng))):
        if k in p:
            p[k] = v
    return p


def _on_refl_full(kappa, rng, n):
    p = _base(kappa)
    for k in ("a", "aperp", "b", "bperp", "c"):
        p[k] = _rand(rng)
    if rng.random() < 0.5:
        # constant identity part switched off
        p["alpha"] = p["beta"] = Fraction(0)
    else:
        al = _rand(rng)
        p["alpha"] = p["beta"] = al
        p["a"] = -Fraction(n - 2, 2) * p["aperp"]
        p["b"] = -Fraction(n - 2, 2) * p["bperp"]
    return p


def _on_std_lie(kappa, rng, n):
    p = _base(kappa)
    beta = _rand(rng)
    p["beta"] = beta
    p["alpha"] = -(n - 1) * beta
    p["c"] = _rand(rng)
    return p


def _free(kappa, rng, n):
    return {s: _rand(rng) for s in kappa.symbols()}


ON_SAMPLERS = {
    "lie": _on_lie,
    "lie1": _on_lie,
    "const1": _free,
    "refl": _on_refl_like,
    "refl-L": _on_refl_like,
    "refl-C": _free,
    "tri": _on_refl_like,
    "refl-tri": _free,
    "refl-full": _on_refl_full,
    "combined": _free,
    "std-refl": _free,
    "std-lie": _on_std_lie,
    "rca-perm": _free,
    "rca-std": _free,
}


def sample_points(name, kappa, n, count_on=10, count_off=10, seed=0):
    rng = random.Random(f"{name}-{n}-{seed}")
    on = [ON_SAMPLERS[name](kappa, rng, n) for _ in range(count_on)]
    off = [_free(kappa, rng, n) for _ in range(count_off)]
    return on, off


def as_params(point):
    return {k: ParamPoly.const(v) for k, v in point.items()}


def exhaustive_invariance(kappa):
    """h.kappa == kappa for every h in S_n (n! actions)."""
    return all((kappa.act(h) - kappa).is_zero() for h in symmetric_group(kappa.n))

"""Symmetric group elements and the doubled permutation action on V = W* + W.

Basis vectors of V are integers: ``0..n-1`` are x1..xn and ``n..2n-1`` are
y1..yn, so every X sorts before every Y.  Permutations store 0-based
images; text forms (cycle notation, labels) are 1-based.
"""

import re
from collections import Counter
from fractions import Fraction
from itertools import combinations, permutations
from math import factorial

from .poly import ONE, ZERO, ParamPoly


class DomainError(ValueError):
    """Raised for n outside the supported range (n >= 4)."""


def require_n(n):
    if not isinstance(n, int) or n < 4:
        raise DomainError(f"n must be an integer >= 4, got {n!r}")


class Perm(tuple):
    """A permutation of {0..n-1} given by its tuple of images.

    ``p * q`` is composition with q applied first, so (12)*(23) = (123).
    """

    __slots__ = ()

    def __new__(cls, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        return tuple.__new__(cls, images)

    @classmethod
    def _raw(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_images(cls, images):
        """From 1-based one-line notation."""
        return cls(i - 1 for i in images)

    @classmethod
    def from_cycles(cls, n, cycles):
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for i in cyc:
                if not 1 <= i <= n or i in seen:
                    raise ValueError(f"bad cycle {cyc} for n={n}")
                seen.add(i)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a - 1] = b - 1
        return cls(img)

    @classmethod
    def parse(cls, text, n):
        text = text.strip()
        if text in ("()", "", "e", "1"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise ValueError(f"bad cycle notation {text!r}")
        cycles = []
        for c in re.findall(r"\(([^)]*)\)", text):
            c = c.strip()
            # compact "(123)" is unambiguous only for single-digit points
            if n <= 9 and c.isdigit():
                cycles.append([int(t) for t in c])
            else:
                cycles.append([int(t) for t in re.split(r"[\s,]+", c)])
        return cls.from_cycles(n, cycles)

    @property
    def n(self):
        return len(self)

    def __mul__(self, other):
        if len(self) != len(other):
            raise ValueError("permutations of different sizes")
        return Perm._raw(tuple(self[i] for i in other))

    def inverse(self):
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm._raw(tuple(inv))

    def conj(self, g):
        """self * g * self^-1."""
        return self * g * self.inverse()

    def is_identity(self):
        return all(i == j for i, j in enumerate(self))

    def cycles(self, include_fixed=False):
        """Cycles as tuples of 0-based points, each starting at its minimum."""
        seen = set()
        out = []
        for start in range(len(self)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self[j]
            if include_fixed or len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)

    def order(self):
        from math import lcm
        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out

    def num_fixed(self):
        return sum(1 for i, j in enumerate(self) if i == j)

    def __str__(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Perm({str(self)!r}, n={len(self)})"

    def __reduce__(self):
        return (Perm._raw, (tuple(self),))


def compose(p, q):
    return p * q


def inverse(p):
    return p.inverse()


class CycleType(list):
    """Multiset of cycle lengths, longest first, fixed points included."""

    @property
    def is_identity(self):
        return all(k == 1 for k in self)

    @property
    def is_transposition(self):
        return sorted(k for k in self if k > 1) == [2]

    @property
    def is_3cycle(self):
        return sorted(k for k in self if k > 1) == [3]

    @property
    def is_double_transposition(self):
        return sorted(k for k in self if k > 1) == [2, 2]


def classify(g):
    return CycleType(g.cycle_type())


def symmetric_group(n):
    """All elements of S_n in a fixed order (identity first)."""
    return [Perm._raw(p) for p in permutations(range(n))]


def transpositions(n):
    out = []
    for i, j in combinations(range(n), 2):
        img = list(range(n))
        img[i], img[j] = j, i
        out.append(Perm._raw(tuple(img)))
    return out


def three_cycles(n):
    out = []
    for i, j, k in combinations(range(n), 3):
        for a, b, c in ((i, j, k), (i, k, j)):
            img = list(range(n))
            img[a], img[b], img[c] = b, c, a
            out.append(Perm._raw(tuple(img)))
    return out


def generators(n):
    """The transposition (12) and the long cycle (12...n)."""
    return [Perm.from_cycles(n, [[1, 2]]), Perm.from_cycles(n, [list(range(1, n + 1))])]


# -- basis of V ----------------------------------------------------------------

def x(i, n):
    return i - 1


def y(i, n):
    return n + i - 1


def basis_label(k, n):
    return f"x{k + 1}" if k < n else f"y{k - n + 1}"


def parse_basis(label, n):
    m = re.fullmatch(r"([xy])(\d+)", label.strip())
    if not m or not 1 <= int(m.group(2)) <= n:
        raise ValueError(f"bad basis label {label!r} for n={n}")
    i = int(m.group(2))
    return x(i, n) if m.group(1) == "x" else y(i, n)


def is_x(k, n):
    return k < n


def dual(k, n):
    """x_i <-> y_i."""
    return k + n if k < n else k - n


def act_index(g, k):
    """Image of basis vector k under g (kind preserved)."""
    n = len(g)
    return g[k] if k < n else n + g[k - n]


class Vect:
    """Sparse vector of V with ParamPoly coordinates."""

    __slots__ = ("n", "coords")

    def __init__(self, n, coords=None):
        self.n = n
        self.coords = {k: c for k, c in (coords or {}).items() if c}

    @classmethod
    def basis(cls, k, n):
        return cls(n, {k: ONE})

    @classmethod
    def parse(cls, text, n):
        """Parse a sum like 'x1 - 2*y3'; coefficients must be rational."""
        out = cls(n)
        for sign, coef, label in re.findall(r"([+-]?)\s*(?:(\d+(?:/\d+)?)\s*\*\s*)?([xy]\d+)", text):
            c = Fraction(coef) if coef else Fraction(1)
            if sign == "-":
                c = -c
            out = out + cls(n, {parse_basis(label, n): ParamPoly.const(c)})
        return out

    def __add__(self, other):
        out = dict(self.coords)
        for k, c in other.coords.items():
            s = out.get(k, ZERO) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Vect(self.n, out)

    def __neg__(self):
        return Vect(self.n, {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, k):
        k = ParamPoly.coerce(k)
        return Vect(self.n, {i: c * k for i, c in self.coords.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Vect) and self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, frozenset(self.coords.items())))

    def __bool__(self):
        return bool(self.coords)

    def items(self):
        return sorted(self.coords.items())

    def __str__(self):
        if not self.coords:
            return "0"
        parts = []
        for k, c in self.items():
            label = basis_label(k, self.n)
            if c == ONE:
                parts.append(label)
            elif c == -ONE:
                parts.append(f"-{label}")
            else:
                parts.append(f"({c})*{label}")
        return " + ".join(parts).replace("+ -", "- ")

    __repr__ = __str__


def act(g, v):
    return Vect(v.n, {act_index(g, k): c for k, c in v.coords.items()})


def x_set(indices, n):
    """x_I = sum of x_i for i in I (1-based)."""
    return Vect(n, {x(i, n): ONE for i in indices})


def y_set(indices, n):
    return Vect(n, {y(i, n): ONE for i in indices})


def x_perp(indices, n):
    """x_[n] - x_I."""
    return x_set([i for i in range(1, n + 1) if i not in set(indices)], n)


def y_perp(indices, n):
    return y_set([i for i in range(1, n + 1) if i not in set(indices)], n)


def x_all(n):
    return x_set(range(1, n + 1), n)


def y_all(n):
    return y_set(range(1, n + 1), n)


def xbar(i, n):
    """x_i - (1/n) x_[n]."""
    return Vect.basis(x(i, n), n) - x_all(n) * Fraction(1, n)


def ybar(i, n):
    return Vect.basis(y(i, n), n) - y_all(n) * Fraction(1, n)


def to_bar_coords(v, n):
    """Split v into its standard part (zero block sums) and trivial part."""
    sx = sum((c for k, c in v.coords.items() if k < n), ZERO)
    sy = sum((c for k, c in v.coords.items() if k >= n), ZERO)
    triv = x_all(n) * sx.scale(Fraction(1, n)) + y_all(n) * sy.scale(Fraction(1, n))
    return v - triv, triv


class FixedSpace:
    __slots__ = ("group_elt", "basis", "codim")

    def __init__(self, group_elt, basis, codim):
        self.group_elt = group_elt
        self.basis = basis
        self.codim = codim

    def contains(self, v):
        return not fixed_space_residual(self.group_elt, v)


def fixed_space(g):
    """Cycle-sum basis of V^g: one summed vector per cycle, in each block."""
    n = len(g)
    cyc = g.cycles(include_fixed=True)
    basis = [x_set([i + 1 for i in c], n) for c in cyc] + [y_set([i + 1 for i in c], n) for c in cyc]
    return FixedSpace(g, basis, 2 * n - len(basis))


def fixed_space_residual(g, v):
    """v minus its best expression in the cycle-sum basis of V^g.

    Writes v against the cycle sums using the coordinate at each cycle's
    first point; the residual is zero exactly when v lies in V^g.
    """
    n = len(g)
    out = Vect(n, dict(v.coords))
    for c in g.cycles(include_fixed=True):
        for offset in (0, n):
            coef = v.coords.get(c[0] + offset, ZERO)
            if coef:
                out = out - Vect(n, {i + offset: coef for i in c})
    return out


def fixed_codim(g):
    return 2 * len(g) - 2 * len(g.cycles(include_fixed=True))


# -- character computations ------------------------------------------------------

def _partitions(n, largest=None):
    if largest is None:
        largest = n
    if n == 0:
        yield []
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def class_size(shape):
    """Number of permutations with the given cycle type."""
    n = sum(shape)
    z = 1
    for k, m in Counter(shape).items():
        z *= k ** m * factorial(m)
    return factorial(n) // z


def _fixed_points_of_square(shape):
    # a k-cycle squared fixes its points only when k is 1 or 2
    return sum(k for k in shape if k <= 2)


def invariant_two_form_dim(n):
    """dim of the S_n-invariants in the second exterior power of V*.

    Burnside average of the character of the exterior square,
    (chi(g)^2 - chi(g^2)) / 2, with chi(g) = 2 * fix(g), summed class by class.
    """
    require_n(n)
    total = 0
    for shape in _partitions(n):
        chi = 2 * shape.count(1)
        chi_sq = 2 * _fixed_points_of_square(shape)
        total += class_size(shape) * Fraction(chi * chi - chi_sq, 2)
    total /= factorial(n)
    assert total.denominator == 1
    return int(total)

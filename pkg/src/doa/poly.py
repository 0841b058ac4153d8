"""Exact sparse polynomials in the fixed parameter alphabet.

Monomials are stored as sorted tuples of symbol indices (a1*b6^2 is
``(0, 12, 12)``), coefficients as :class:`fractions.Fraction`.  Terms are
printed in grevlex order with the symbol order of :data:`SYMBOLS`.
"""

import ast
from fractions import Fraction
from functools import lru_cache
from math import gcd

SYMBOLS = tuple(
    [f"a{i}" for i in range(1, 8)]
    + [f"b{i}" for i in range(1, 8)]
    + ["alpha", "beta", "c", "a", "aperp", "b", "bperp"]
)
SYMBOL_INDEX = {s: i for i, s in enumerate(SYMBOLS)}
NSYM = len(SYMBOLS)


class UnboundSymbolError(KeyError):
    pass


class PolyParseError(ValueError):
    pass


@lru_cache(maxsize=None)
def exponents(mono):
    e = [0] * NSYM
    for k in mono:
        e[k] += 1
    return tuple(e)


@lru_cache(maxsize=None)
def grevlex_key(mono):
    """Sort key: a larger key means a larger monomial in grevlex."""
    e = exponents(mono)
    return (len(mono), tuple(-x for x in reversed(e)))


def mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    return tuple(sorted(m1 + m2))


def mono_str(mono):
    parts = []
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        name = SYMBOLS[mono[i]]
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(parts)


def _as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


class ParamPoly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        # callers pass a dict without zero coefficients
        self.terms = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def from_terms(cls, terms):
        return cls({m: Fraction(c) for m, c in terms.items() if c != 0})

    @classmethod
    def const(cls, value):
        value = _as_fraction(value)
        return cls({(): value} if value else {})

    @classmethod
    def symbol(cls, name):
        try:
            return cls({(SYMBOL_INDEX[name],): Fraction(1)})
        except KeyError:
            raise PolyParseError(f"unknown parameter symbol {name!r}") from None

    @classmethod
    def coerce(cls, x):
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, str):
            return parse_poly(x)
        return cls.const(x)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ParamPoly):
            if isinstance(other, (int, Fraction)):
                other = ParamPoly.const(other)
            else:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return ParamPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ParamPoly):
            if isinstance(other, (int, Fraction)):
                other = ParamPoly.const(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, k):
        k = _as_fraction(k)
        if not k:
            return ZERO
        if k == 1:
            return self
        return ParamPoly({m: c * k for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ParamPoly):
            return NotImplemented
        if not self.terms or not other.terms:
            return ZERO
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return ParamPoly({m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, k):
        return self.scale(1 / _as_fraction(k))

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        out = ONE
        for _ in range(e):
            out = out * self
        return out

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, ParamPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ParamPoly.const(other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not m for m in self.terms)

    def constant_value(self):
        return self.terms.get((), Fraction(0))

    def degree(self):
        return max((len(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({len(m) for m in self.terms}) <= 1

    def symbols(self):
        return {SYMBOLS[k] for m in self.terms for k in m}

    def sorted_terms(self):
        """Terms in decreasing grevlex order."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def leading_monomial(self):
        return max(self.terms, key=grevlex_key)

    def leading_coefficient(self):
        return self.terms[self.leading_monomial()]

    def sort_key(self):
        """Deterministic ordering of polynomials: leading monomials first."""
        return tuple((grevlex_key(m), c) for m, c in self.sorted_terms())

    # -- substitution ------------------------------------------------------

    def subs(self, mapping):
        """Substitute symbols by polynomials or rationals; others stay symbolic."""
        if not mapping:
            return self
        table = {SYMBOL_INDEX[k]: ParamPoly.coerce(v) for k, v in mapping.items()}
        out = ZERO
        for m, c in self.terms.items():
            term = ParamPoly.const(c)
            rest = []
            for k in m:
                if k in table:
                    term = term * table[k]
                else:
                    rest.append(k)
            if rest:
                term = term * ParamPoly({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def eval(self, point):
        """Exact evaluation; every occurring symbol must be assigned."""
        vals = {}
        for name, v in point.items():
            vals[SYMBOL_INDEX[name]] = _as_fraction(v)
        total = Fraction(0)
        for m, c in self.terms.items():
            t = c
            for k in m:
                if k not in vals:
                    raise UnboundSymbolError(SYMBOLS[k])
                t *= vals[k]
            total += t
        return total

    def normalize(self):
        return normalize_generator(self)

    # -- text --------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (m, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if m:
                body = mono_str(m) if a == 1 else f"{a}*{mono_str(m)}"
            else:
                body = str(a)
            if i == 0:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f" - {body}" if neg else f" + {body}")
        return "".join(out)

    def __repr__(self):
        return f"ParamPoly({str(self)!r})"


ZERO = ParamPoly()
ONE = ParamPoly({(): Fraction(1)})


def sym(name):
    return ParamPoly.symbol(name)


def pp_arith(op, *args):
    """Ring operations by name: add, mul, scale, neg."""
    if op == "add":
        out = ZERO
        for a in args:
            out = out + ParamPoly.coerce(a)
        return out
    if op == "mul":
        out = ONE
        for a in args:
            out = out * ParamPoly.coerce(a)
        return out
    if op == "scale":
        k, p = args
        return ParamPoly.coerce(p).scale(k)
    if op == "neg":
        (p,) = args
        return -ParamPoly.coerce(p)
    raise ValueError(f"unknown operation {op!r}")


def pp_eval(p, point):
    return p.eval(point)


def normalize_generator(p):
    """Primitive integer form with positive grevlex-leading coefficient."""
    if not p.terms:
        raise ValueError("cannot normalize the zero polynomial")
    den = 1
    for c in p.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    nums = [int(c * den) for c in p.terms.values()]
    g = 0
    for x in nums:
        g = gcd(g, x)
    k = Fraction(den, g)
    if p.leading_coefficient() < 0:
        k = -k
    return p.scale(k)


# -- parsing -----------------------------------------------------------------

def parse_poly(text, n=None):
    """Parse polytext (or any +,-,*,/,^ expression with parentheses).

    When ``n`` is given the name ``n`` evaluates to that integer, which lets
    condition ledgers be written with n left symbolic.
    """
    src = text.strip().replace("^", "**").replace("−", "-")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise PolyParseError(f"cannot parse {text!r}") from exc
    return _eval_node(tree.body, n, text)


def _eval_node(node, n, text):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return ParamPoly.const(node.value)
    if isinstance(node, ast.Name):
        if node.id == "n" and n is not None:
            return ParamPoly.const(n)
        if node.id not in SYMBOL_INDEX:
            raise PolyParseError(f"unknown symbol {node.id!r} in {text!r}")
        return ParamPoly.symbol(node.id)
    if isinstance(node, ast.UnaryOp):
        v = _eval_node(node.operand, n, text)
        if isinstance(node.op, ast.USub):
            return -v
        if isinstance(node.op, ast.UAdd):
            return v
    if isinstance(node, ast.BinOp):
        left = _eval_node(node.left, n, text)
        right = _eval_node(node.right, n, text)
        if isinstance(node.op, ast.Add):
            return left + right
        if isinstance(node.op, ast.Sub):
            return left - right
        if isinstance(node.op, ast.Mult):
            return left * right
        if isinstance(node.op, ast.Div):
            if not right.is_constant() or right.is_zero():
                raise PolyParseError(f"division by a non-constant in {text!r}")
            return left / right.constant_value()
        if isinstance(node.op, ast.Pow):
            if not right.is_constant() or right.constant_value().denominator != 1 or right.constant_value() < 0:
                raise PolyParseError(f"bad exponent in {text!r}")
            return left ** int(right.constant_value())
    raise PolyParseError(f"unsupported syntax in {text!r}")

"""Univariate polynomial arithmetic over F_q: the ring A = F_q[t].

Polynomials are immutable dense coefficient tuples (index i = coefficient of
t^i).  The zero polynomial is the empty tuple and reports degree -1.  Large
products go through numpy integer convolution; small ones use schoolbook
multiplication to avoid array overhead.

Beyond ring arithmetic this module provides modular exponentiation, Rabin
irreducibility, enumeration of monic irreducibles, seeded Cantor-Zassenhaus
factorization, the quadratic residue symbol, valuations, and the text
grammar shared with the CLI.
"""

import itertools
import random
import re
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from . import ffield
from .errors import FieldMismatch, InvalidInput, ParseError

# crossover below which schoolbook multiplication beats numpy convolve
_SMALL_MUL = 1024


class Poly:
    """Element of F_q[t], canonical dense little-endian coefficients."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q, coeffs=()):
        ffield.validate_field_order(q)
        cs = [c % q for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _raw(cls, q, coeffs):
        # internal fast path: coeffs already canonical
        self = object.__new__(cls)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "coeffs", coeffs)
        return self

    @classmethod
    def zero(cls, q):
        return cls(q, ())

    @classmethod
    def one(cls, q):
        return cls(q, (1,))

    @classmethod
    def constant(cls, q, c):
        return cls(q, (c,))

    @classmethod
    def t(cls, q):
        return cls(q, (0, 1))

    @property
    def degree(self):
        """Degree; -1 is the sentinel for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def leading_coeff(self):
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def monic(self):
        if self.is_zero or self.coeffs[-1] == 1:
            return self
        u = ffield.inv(self.coeffs[-1], self.q)
        return Poly._raw(self.q, tuple((c * u) % self.q for c in self.coeffs))

    def sort_key(self):
        """(degree, coefficient vector low index first): canonical ordering key."""
        return (len(self.coeffs), self.coeffs)

    def _check(self, other):
        if not isinstance(other, Poly):
            raise TypeError("expected Poly, got %r" % type(other).__name__)
        if other.q != self.q:
            raise FieldMismatch("operands over F_%d and F_%d" % (self.q, other.q))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.q == other.q and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        self._check(other)
        a, b, q = self.coeffs, other.coeffs, self.q
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] = (cs[i] + c) % q
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly._raw(q, tuple(cs))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        q = self.q
        return Poly._raw(q, tuple((q - c) % q for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            c = other % self.q
            if c == 0:
                return Poly._raw(self.q, ())
            if c == 1:
                return self
            return Poly._raw(self.q, tuple((x * c) % self.q for x in self.coeffs))
        self._check(other)
        return Poly._raw(self.q, _mul_coeffs(self.coeffs, other.coeffs, self.q))

    __rmul__ = __mul__

    def __pow__(self, e):
        if not isinstance(e, int) or e < 0:
            raise InvalidInput("polynomial power needs a non-negative integer")
        result = Poly.one(self.q)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q = self.q
        dg = other.degree
        if self.degree < dg:
            return Poly.zero(q), self
        rem = list(self.coeffs)
        g = other.coeffs
        inv_lc = ffield.inv(g[-1], q)
        quot = [0] * (len(rem) - dg)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i] % q
            if c:
                factor = (c * inv_lc) % q
                quot[i - dg] = factor
                base = i - dg
                for j in range(dg + 1):
                    rem[base + j] -= factor * g[j]
        rs = [c % q for c in rem[:dg]]
        while rs and rs[-1] == 0:
            rs.pop()
        while quot and quot[-1] == 0:
            quot.pop()
        return Poly._raw(q, tuple(quot)), Poly._raw(q, tuple(rs))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self):
        q = self.q
        cs = tuple((i * c) % q for i, c in enumerate(self.coeffs[1:], start=1))
        return Poly(q, cs)

    def evaluate(self, x):
        """Value at a scalar x, by Horner."""
        q = self.q
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % q
        return acc

    def __repr__(self):
        return "Poly(q=%d, %s)" % (self.q, format_poly(self))


def _mul_coeffs(a, b, q):
    if not a or not b:
        return ()
    if len(a) * len(b) <= _SMALL_MUL:
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return tuple(c % q for c in out)
    # coefficients < q <= 7 and lengths < ~10^4 keep the convolution within int64
    conv = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % q
    return tuple(int(c) for c in conv)


def poly_arith(f, g, op):
    """Dispatch form of the ring operations; op in {add, sub, mul, divrem, gcd}."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "divrem":
        return divmod(f, g)
    if op == "gcd":
        return poly_gcd(f, g)
    raise InvalidInput("unknown poly op %r" % (op,))


def poly_gcd(f, g):
    """Monic greatest common divisor."""
    while not g.is_zero:
        f, g = g, f % g
    return f.monic()


def powmod(f, e, m):
    """f^e mod m by square-and-multiply; requires deg m >= 1."""
    if m.degree < 1:
        raise InvalidInput("powmod modulus must have degree >= 1")
    if e < 0:
        raise InvalidInput("powmod exponent must be non-negative")
    result = Poly.one(f.q) % m
    base = f % m
    while e:
        if e & 1:
            result = (result * base) % m
        e >>= 1
        if e:
            base = (base * base) % m
    return result


def _prime_divisors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f):
    """Rabin's criterion via iterated Frobenius powers of t."""
    if f.degree < 1:
        raise InvalidInput("irreducibility is undefined for constants")
    f = f.monic()
    n, q = f.degree, f.q
    if n == 1:
        return True
    if f.coeffs[0] == 0:  # t divides f
        return False
    x = Poly.t(q)
    checkpoints = {n // r for r in _prime_divisors(n)}
    h = x % f
    for i in range(1, n + 1):
        h = powmod(h, q, f)
        if i in checkpoints and poly_gcd(h - x, f).degree != 0:
            return False
    return h == x % f


@lru_cache(maxsize=None)
def monic_irreducibles(q, degree):
    """All monic irreducibles of the given degree, in lexicographic order of
    coefficient vectors (low degree index first)."""
    if degree < 1:
        raise InvalidInput("degree must be >= 1")
    out = []
    for low in itertools.product(range(q), repeat=degree):
        f = Poly(q, low + (1,))
        if is_irreducible(f):
            out.append(f)
    return tuple(out)


def enumerate_monic_irreducibles(q, degree):
    """Ordered stream of monic irreducibles of exactly the given degree."""
    yield from monic_irreducibles(q, degree)


def polys_of_degree_at_most(q, maxdeg, monic=False):
    """All polynomials with degree <= maxdeg (zero first when not monic),
    ordered by degree then lexicographically on coefficient vectors."""
    ffield.validate_field_order(q)
    if not monic:
        yield Poly.zero(q)
    for deg in range(0, maxdeg + 1):
        for cs in itertools.product(range(q), repeat=deg + 1):
            if cs[-1] == 0:
                continue
            if monic and cs[-1] != 1:
                continue
            yield Poly._raw(q, cs)


@dataclass(frozen=True)
class Factorization:
    """unit * prod(factors[i][0] ** factors[i][1]) reproduces the input."""

    unit: int
    factors: tuple

    def product(self, q):
        acc = Poly.constant(q, self.unit)
        for p, m in self.factors:
            acc = acc * p ** m
        return acc


def _squarefree_parts(f):
    """Yield (monic squarefree factor, multiplicity) pairs; char-p aware."""
    q = f.q
    d = f.derivative()
    if d.is_zero:
        if f.degree == 0:
            return
        # f = g(t)^q in characteristic q; coefficients are their own q-th roots
        for g, m in _squarefree_parts(Poly(q, f.coeffs[::q])):
            yield g, m * q
        return
    c = poly_gcd(f, d)
    w = f // c
    i = 1
    while w.degree > 0:
        y = poly_gcd(w, c)
        fac = w // y
        if fac.degree > 0:
            yield fac, i
        w, c = y, c // y
        i += 1
    if c.degree > 0:
        for g, m in _squarefree_parts(Poly(q, c.coeffs[::q])):
            yield g, m * q


def _distinct_degree(f):
    """Split a monic squarefree f into (product of degree-d irreducibles, d)."""
    q = f.q
    x = Poly.t(q)
    h = x % f
    d = 0
    while f.degree > 0:
        d += 1
        if 2 * d > f.degree:
            yield f, f.degree
            return
        h = powmod(h, q, f)
        g = poly_gcd(h - x, f)
        if g.degree > 0:
            yield g, d
            f = f // g
            h = h % f


def _equal_degree(f, d, rng):
    """Cantor-Zassenhaus split of a product of degree-d irreducibles (odd q)."""
    if f.degree == d:
        return [f]
    q = f.q
    exp = (q ** d - 1) // 2
    while True:
        r = Poly(q, [rng.randrange(q) for _ in range(f.degree)])
        if r.degree < 1:
            continue
        g = poly_gcd(r, f)
        if 0 < g.degree < f.degree:
            break
        s = powmod(r, exp, f) - Poly.one(q)
        g = poly_gcd(s, f)
        if 0 < g.degree < f.degree:
            break
    return _equal_degree(g, d, rng) + _equal_degree(f // g, d, rng)


def factor(f, seed=0):
    """Complete factorization; deterministic for a fixed seed."""
    if f.is_zero:
        raise InvalidInput("cannot factor the zero polynomial")
    q = f.q
    unit = f.leading_coeff
    f = f.monic()
    rng = random.Random(seed)
    found = {}
    if f.degree > 0:
        for part, mult in _squarefree_parts(f):
            for prod, d in _distinct_degree(part):
                for p in _equal_degree(prod, d, rng):
                    found[p] = found.get(p, 0) + mult
    factors = tuple(sorted(found.items(), key=lambda it: it[0].sort_key()))
    return Factorization(unit=unit, factors=factors)


def is_squarefree(f):
    if f.is_zero:
        raise InvalidInput("squarefreeness is undefined at 0")
    if f.degree == 0:
        return True
    d = f.derivative()
    return (not d.is_zero) and poly_gcd(f, d).degree == 0


# square tables make repeated residue symbols against a fixed small prime cheap
_SQUARE_TABLE_CAP = 8192


@lru_cache(maxsize=None)
def _square_table(p):
    squares = set()
    for a in polys_of_degree_at_most(p.q, p.degree - 1):
        if not a.is_zero:
            squares.add(((a * a) % p).coeffs)
    return frozenset(squares)


def residue_symbol(a, p):
    """Quadratic residue symbol (a/p) in {-1, 0, +1} for monic irreducible p."""
    r = a % p
    if r.is_zero:
        return 0
    q = p.q
    if q ** p.degree <= _SQUARE_TABLE_CAP:
        return 1 if r.coeffs in _square_table(p) else -1
    e = (q ** p.degree - 1) // 2
    s = powmod(r, e, p)
    if s == Poly.one(q):
        return 1
    if s == Poly.constant(q, q - 1):
        return -1
    raise InvalidInput("residue symbol modulus is not irreducible: %s" % format_poly(p))


def valuation(f, p):
    """Largest k with p^k | f, by repeated exact division."""
    if f.is_zero:
        raise InvalidInput("valuation is undefined at 0")
    k = 0
    while True:
        quot, rem = divmod(f, p)
        if not rem.is_zero:
            return k
        f = quot
        k += 1


# ---------------------------------------------------------------------------
# text grammar (shared with the CLI)

_TERM = re.compile(r"(?:(\d+)\s*\*?\s*)?t(?:\s*\^\s*(\d+))?|(\d+)")
_SIGN = re.compile(r"\s*([+-])\s*")


def parse_poly(text, q):
    """Parse the term grammar `c*t^k | c t^k | t^k | t | c` or `[c0,c1,...]`."""
    ffield.validate_field_order(q)
    s = text.strip()
    if not s:
        raise ParseError("empty polynomial text", 0)
    if s.startswith("["):
        if not s.endswith("]"):
            raise ParseError("unterminated coefficient list", len(s) - 1)
        body = s[1:-1].strip()
        if not body:
            return Poly.zero(q)
        coeffs = []
        for part in body.split(","):
            part = part.strip()
            if not re.fullmatch(r"-?\d+", part):
                raise ParseError("bad coefficient %r" % part, text.find(part))
            c = int(part)
            if c >= q or c <= -q:
                raise ParseError("coefficient %d out of range for F_%d" % (c, q),
                                 text.find(part))
            coeffs.append(c % q)
        return Poly(q, coeffs)

    coeffs = {}
    pos = 0
    sign = 1
    m = _SIGN.match(s, pos)
    if m:  # optional leading sign
        sign = -1 if m.group(1) == "-" else 1
        pos = m.end()
    while True:
        while pos < len(s) and s[pos].isspace():
            pos += 1
        m = _TERM.match(s, pos)
        if not m or m.start() != pos:
            raise ParseError("expected a term", pos)
        if m.group(3) is not None:
            c, k = int(m.group(3)), 0
        else:
            c = int(m.group(1)) if m.group(1) is not None else 1
            k = int(m.group(2)) if m.group(2) is not None else 1
        if c >= q:
            raise ParseError("coefficient %d out of range for F_%d" % (c, q), pos)
        coeffs[k] = (coeffs.get(k, 0) + sign * c) % q
        pos = m.end()
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos == len(s):
            break
        m = _SIGN.match(s, pos)
        if not m:
            raise ParseError("expected '+' or '-'", pos)
        sign = -1 if m.group(1) == "-" else 1
        pos = m.end()
    if not coeffs:
        return Poly.zero(q)
    top = max(coeffs)
    return Poly(q, [coeffs.get(i, 0) for i in range(top + 1)])


def format_poly(f):
    """Canonical text: descending terms, e.g. t^3+t^2+2t+1; zero is '0'."""
    if f.is_zero:
        return "0"
    terms = []
    for i in range(f.degree, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            terms.append(head + ("t" if i == 1 else "t^%d" % i))
    return "+".join(terms)


def gauss_irreducible_count(q, n):
    """Gauss's count (1/n) sum_{d|n} mu(d) q^{n/d} of monic irreducibles."""
    def mobius(m):
        out = 1
        for p in _prime_divisors(m):
            if m % (p * p) == 0:
                return 0
            out = -out
        return out

    total = sum(mobius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n

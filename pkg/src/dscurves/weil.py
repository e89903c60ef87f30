"""Quadratic Weil polynomials over F_q[t] and the excluded-prime test.

For a monic irreducible y, the admissible quadratics X^2 + a1*X + mu*y
(deg a1 <= deg(y)/2, mu a unit, discriminant a non-square in the completion
at infinity) are the minimal polynomials of the Frobenius classes pi the
non-existence criterion quantifies over.  The key computation is the exact
power pi^(2n) - y^n in A[pi] and its norm down to A; a ramified prime is
"excluded" when it divides none of the nonzero norms.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from . import ffield
from .errors import InvalidInput, ModulusMismatch
from .fpoly import Poly, format_poly, is_irreducible, polys_of_degree_at_most, factor


def lq(q, d):
    """lcm(q^i - 1 for 1 <= i <= d)."""
    ffield.validate_field_order(q)
    if d < 1:
        raise InvalidInput("d must be >= 1")
    return lcm(*(q ** i - 1 for i in range(1, d + 1)))


def exponent_n(q, d):
    """The Frobenius-power exponent lq(d)^2 * d^2 / gcd(d^2, q^2 - 1).

    For d = 2 and odd q this equals (q^2 - 1)^2.
    """
    if d < 2:
        raise InvalidInput("exponent_n needs d >= 2")
    return lq(q, d) ** 2 * (d * d // gcd(d * d, q * q - 1))


def nonsquare_at_infinity(f):
    """True iff f is a non-square in F_q((1/t)): odd degree, or even degree
    with a non-square leading coefficient (odd q)."""
    if f.is_zero:
        return False
    if f.degree % 2 == 1:
        return True
    return not ffield.is_square(f.leading_coeff, f.q)


def _require_monic_irreducible(p, name):
    if not p.is_monic or not is_irreducible(p):
        raise InvalidInput("%s must be a monic irreducible, got %s" % (name, format_poly(p)))


@dataclass(frozen=True)
class WeilPoly:
    """X^2 + a1*X + mu*y, an admissible quadratic for the base prime y."""

    a1: Poly
    mu: int
    y: Poly

    @property
    def q(self):
        return self.y.q

    @property
    def const_term(self):
        return self.mu * self.y

    @property
    def discriminant(self):
        return self.a1 * self.a1 - 4 * self.const_term

    def __str__(self):
        return "X^2 + (%s)X + (%s)" % (format_poly(self.a1), format_poly(self.const_term))


@lru_cache(maxsize=None)
def enumerate_weil(y):
    """All admissible quadratics for y (d = 2), grouped by a1 then mu.

    Conjugate roots share a minimal polynomial, so each entry stands for a
    conjugate pair of Weil numbers.
    """
    _require_monic_irreducible(y, "y")
    q = y.q
    out = []
    for a1 in polys_of_degree_at_most(q, y.degree // 2):
        for mu in range(1, q):
            w = WeilPoly(a1=a1, mu=mu, y=y)
            if nonsquare_at_infinity(w.discriminant):
                out.append(w)
    return tuple(out)


@dataclass(frozen=True)
class QuadExtElem:
    """u + v*pi in A[pi] = A[X]/(X^2 + a1*X + mu*y)."""

    u: Poly
    v: Poly
    modulus: WeilPoly


def ext_mul(x, z):
    """Product reduced to the basis {1, pi} via pi^2 = -a1*pi - mu*y."""
    if x.modulus != z.modulus:
        raise ModulusMismatch("elements over different quadratic extensions")
    w = x.modulus
    vv = x.v * z.v
    u = x.u * z.u - w.const_term * vv
    v = x.u * z.v + x.v * z.u - w.a1 * vv
    return QuadExtElem(u=u, v=v, modulus=w)


def ext_pow(x, e):
    """x^e by square-and-multiply."""
    if e < 0:
        raise InvalidInput("negative extension power")
    w = x.modulus
    q = w.q
    result = QuadExtElem(u=Poly.one(q), v=Poly.zero(q), modulus=w)
    base = x
    while e:
        if e & 1:
            result = ext_mul(result, base)
        e >>= 1
        if e:
            base = ext_mul(base, base)
    return result


def norm(x):
    """N(u + v*pi) = u^2 - a1*u*v + mu*y*v^2, the product with the conjugate."""
    w = x.modulus
    return x.u * x.u - w.a1 * x.u * x.v + w.const_term * x.v * x.v


def frobenius_test_element(w):
    """pi^(2n) - y^n computed exactly in A[pi], n the Frobenius exponent."""
    q = w.q
    n = exponent_n(q, 2)
    pi = QuadExtElem(u=Poly.zero(q), v=Poly.one(q), modulus=w)
    power = ext_pow(pi, 2 * n)
    return QuadExtElem(u=power.u - w.y ** n, v=power.v, modulus=w)


@dataclass(frozen=True)
class NormEntry:
    """Norm of pi^(2n) - y^n for one admissible quadratic."""

    source: WeilPoly
    value: Poly

    @property
    def is_zero(self):
        return self.value.is_zero


@lru_cache(maxsize=None)
def dset(y):
    """One NormEntry per admissible quadratic; all-zero iff the excluded-prime
    set is empty."""
    entries = []
    for w in enumerate_weil(y):
        entries.append(NormEntry(source=w, value=norm(frobenius_test_element(w))))
    return tuple(entries)


def p_excluded(p, y):
    """True iff p divides no nonzero norm entry for y, i.e. p avoids every
    prime divisor of the norm set."""
    _require_monic_irreducible(p, "p")
    if p == y:
        raise InvalidInput("p must differ from y")
    for entry in dset(y):
        if not entry.is_zero and (entry.value % p).is_zero:
            return False
    return True


def pset(y, seed=0):
    """The full excluded-prime set: prime divisors of nonzero norm entries,
    deduplicated and sorted."""
    primes = set()
    for entry in dset(y):
        if not entry.is_zero:
            for f, _ in factor(entry.value, seed=seed).factors:
                primes.add(f)
    return sorted(primes, key=lambda f: f.sort_key())

"""Arithmetic in the prime field F_q for an odd prime q.

Scalars are plain ints kept as canonical residues in [0, q); every function
takes the field order explicitly.  Only odd prime q is supported: the residue
symbol and discriminant machinery downstream assumes odd characteristic.
"""

from .errors import InvalidInput

_VALIDATED = set()


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def validate_field_order(q):
    """Raise InvalidInput unless q is an odd prime >= 3."""
    if q in _VALIDATED:
        return
    if not isinstance(q, int) or q < 3 or q % 2 == 0 or not _is_prime(q):
        raise InvalidInput("field order must be an odd prime >= 3, got %r" % (q,))
    _VALIDATED.add(q)


def normalize(a, q):
    """Canonical residue of a in [0, q)."""
    return a % q


def inv(a, q):
    if a % q == 0:
        raise InvalidInput("inverse of 0 in F_%d" % q)
    return pow(a, q - 2, q)


def scalar_arith(a, b, op, q):
    """Field operation on canonical residues; op in {add, sub, mul, div}."""
    validate_field_order(q)
    a, b = a % q, b % q
    if op == "add":
        return (a + b) % q
    if op == "sub":
        return (a - b) % q
    if op == "mul":
        return (a * b) % q
    if op == "div":
        return (a * inv(b, q)) % q
    raise InvalidInput("unknown scalar op %r" % (op,))


def is_square(a, q):
    """True iff a is a nonzero square in F_q, by Euler's criterion."""
    validate_field_order(q)
    a %= q
    if a == 0:
        raise InvalidInput("is_square is undefined at 0")
    return pow(a, (q - 1) // 2, q) == 1


def least_nonsquare(q):
    """The smallest non-square unit of F_q."""
    validate_field_order(q)
    for a in range(2, q):
        if not is_square(a, q):
            return a
    raise AssertionError("no non-square found in F_%d" % q)  # unreachable for q >= 3


def square_class_reps(q):
    """Representatives [1, nu] of F_q^x modulo squares, nu the least non-square."""
    return [1, least_nonsquare(q)]

"""Coefficient fields for exact computation.

Two fields are supported: the rationals (python Fractions) and prime
fields GF(p).  A field object mediates all coefficient arithmetic so the
polynomial layer never touches representation details.  GF(p) elements
are plain ints in [0, p); rationals are Fraction instances.
"""

from fractions import Fraction


class Rationals:
    """Field of rational numbers with Fraction elements."""

    name = "q"

    zero = Fraction(0)
    one = Fraction(1)

    def of(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def text(self, a):
        return str(a)

    def __repr__(self):
        return "QQ"


class PrimeField:
    """GF(p) for a prime p; elements are ints reduced mod p."""

    def __init__(self, p: int):
        if p < 2:
            raise ValueError("modulus must be a prime >= 2")
        for d in range(2, int(p**0.5) + 1):
            if p % d == 0:
                raise ValueError("modulus %d is not prime" % p)
        self.p = p
        self.name = "gf:%d" % p
        self.zero = 0
        self.one = 1 % p

    def of(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return (a * self.inv(b)) % self.p

    def is_zero(self, a):
        return a % self.p == 0

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def text(self, a):
        return str(a % self.p)

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = Rationals()


def field_by_name(name: str):
    """Parse a field spec: "q" for rationals, "gf:P" for GF(P)."""
    if name == "q":
        return QQ
    if name.startswith("gf:"):
        return PrimeField(int(name[3:]))
    raise ValueError("unknown field %r (expected 'q' or 'gf:P')" % name)

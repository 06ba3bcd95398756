"""Exact arithmetic in GF(p) and GF(p^k) for odd p.

Prime-field elements are plain integers in [0, p).  Extension-field
elements are length-k tuples of integers in [0, p), little-endian in the
generator t (coefficient of 1 first).  The reduction modulus is the
lexicographically smallest monic irreducible polynomial of degree k,
found by exhaustive search, so a field built twice is identical.

Fields are immutable; elements are plain values.  Everything here is
exact integer arithmetic, no floating point anywhere.
"""

import enum


class NotPrime(ValueError):
    pass


class EvenCharacteristic(ValueError):
    pass


class ReducibleModulus(ValueError):
    pass


class DivisionByZero(ZeroDivisionError):
    pass


class SquareClass(enum.Enum):
    ZERO = "zero"
    SQUARE = "square"
    NONSQUARE = "nonsquare"


# Largest admitted cardinality: keeps every intermediate product inside
# native integer range on any platform and bounds enumeration loops.
MAX_Q = 2**31


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


# ---------------------------------------------------------------------------
# polynomial helpers over F_p (little-endian coefficient tuples)
# ---------------------------------------------------------------------------

def _poly_trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _poly_mul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm and a:
        lead = a[-1]
        if lead:
            shift = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[shift + i] = (a[shift + i] - lead * mi) % p
        a.pop()
    return _poly_trim(a)


def _monic_polys_lex(p, deg):
    """Monic degree-deg polynomials, low coefficients in tuple-lex order."""
    idx = [0] * deg
    while True:
        yield tuple(idx) + (1,)
        i = deg - 1
        while i >= 0 and idx[i] == p - 1:
            idx[i] = 0
            i -= 1
        if i < 0:
            return
        idx[i] += 1


def _is_irreducible(m, p):
    """Trial division by every monic polynomial of degree <= deg(m)/2."""
    deg = len(m) - 1
    if deg == 1:
        return True
    if m[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for g in _monic_polys_lex(p, d):
            if not _poly_mod(m, g, p):
                return False
    return True


def _find_modulus(p, k):
    for m in _monic_polys_lex(p, k):
        if _is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # unreachable


# ---------------------------------------------------------------------------
# fields
# ---------------------------------------------------------------------------

class PrimeField:
    """GF(p), elements are integers in [0, p)."""

    def __init__(self, p):
        self.p = p
        self.k = 1
        self.q = p
        self.modulus = None
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return "GF(%d)" % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GFp", self.p))

    def coerce(self, a):
        return a % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZero("inverse of zero in %r" % self)
        return pow(a, -1, self.p)

    def pow(self, a, e):
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a, e, self.p)

    def encode(self, a):
        """Index of a in the fixed enumeration order (here: itself)."""
        return a

    def decode(self, n):
        return n % self.p

    def serialize(self, a):
        return a

    def deserialize(self, v):
        if not isinstance(v, int):
            raise ValueError("prime-field element must be an integer")
        return v % self.p

    def elements(self):
        return range(self.p)

    def square_class(self, a):
        a %= self.p
        if a == 0:
            return SquareClass.ZERO
        if pow(a, (self.p - 1) // 2, self.p) == 1:
            return SquareClass.SQUARE
        return SquareClass.NONSQUARE

    def sqrt(self, a):
        """Some x with x*x == a, or None."""
        a %= self.p
        for x in range(self.p):
            if x * x % self.p == a:
                return x
        return None


class ExtensionField:
    """GF(p^k), k > 1, elements are length-k coefficient tuples."""

    def __init__(self, p, k, modulus):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        self.zero = (0,) * k
        self.one = (1,) + (0,) * (k - 1)

    def __repr__(self):
        return "GF(%d^%d)" % (self.p, self.k)

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.p == self.p
                and other.k == self.k and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("GFpk", self.p, self.k, self.modulus))

    def _pad(self, c):
        return tuple(c) + (0,) * (self.k - len(c))

    def coerce(self, a):
        if isinstance(a, int):
            return (a % self.p,) + (0,) * (self.k - 1)
        a = tuple(x % self.p for x in a)
        if len(a) != self.k:
            raise ValueError("element needs %d coefficients" % self.k)
        return a

    def add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple((x - y) % self.p for x, y in zip(a, b))

    def neg(self, a):
        return tuple((-x) % self.p for x in a)

    def mul(self, a, b):
        prod = _poly_mul(_poly_trim(a), _poly_trim(b), self.p)
        return self._pad(_poly_mod(prod, self.modulus, self.p))

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero("inverse of zero in %r" % self)
        return self.pow(a, self.q - 2)

    def pow(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def encode(self, a):
        n = 0
        for c in reversed(a):
            n = n * self.p + c
        return n

    def decode(self, n):
        coeffs = []
        for _ in range(self.k):
            coeffs.append(n % self.p)
            n //= self.p
        return tuple(coeffs)

    def serialize(self, a):
        return list(a)

    def deserialize(self, v):
        if not isinstance(v, list) or len(v) != self.k:
            raise ValueError("extension element must be a %d-array" % self.k)
        return tuple(int(x) % self.p for x in v)

    def elements(self):
        for n in range(self.q):
            yield self.decode(n)

    def square_class(self, a):
        if a == self.zero:
            return SquareClass.ZERO
        if self.pow(a, (self.q - 1) // 2) == self.one:
            return SquareClass.SQUARE
        return SquareClass.NONSQUARE

    def sqrt(self, a):
        for x in self.elements():
            if self.mul(x, x) == a:
                return x
        return None


def field_make(p, k=1, modulus=None):
    """Build GF(p^k) for odd prime p.

    For k > 1 without an explicit modulus, the lexicographically first
    monic irreducible polynomial of degree k is chosen, so the field
    (and everything serialized from it) is reproducible.
    """
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not _is_prime(p):
        raise NotPrime("%d is not prime" % p)
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if p**k > MAX_Q:
        raise ValueError("field too large: p^k must be <= 2^31")
    if k == 1:
        return PrimeField(p)
    if modulus is None:
        modulus = _find_modulus(p, k)
    else:
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree %d" % k)
        if not _is_irreducible(modulus, p):
            raise ReducibleModulus("modulus is reducible over GF(%d)" % p)
    return ExtensionField(p, k, modulus)


def nonsquare_representative(f):
    """Smallest (by encoding) nonsquare element of f."""
    for a in f.elements():
        if f.square_class(a) is SquareClass.NONSQUARE:
            return a
    raise AssertionError("field of odd order has a nonsquare")

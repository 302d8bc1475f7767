"""Exact arithmetic in towers of fields: rationals, prime fields F_p, and
simple extensions F[t]/(f) of an already-built field.

Field elements are plain immutable values (Fraction, int, or tuple of base
elements); all operations live on the field object.  Irreducibility of an
extension modulus is enforced lazily: inverting a nonzero element runs the
extended Euclidean algorithm against the modulus, and a proper common factor
raises ReducibleModulusError.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

from .errors import (
    DivisionByZeroError,
    FieldConstructionError,
    InfiniteFieldError,
    ReducibleModulusError,
    UnknownSolvabilityError,
)


def is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def integer_kth_root(n, k):
    """Exact floor of n**(1/k) for n >= 0, k >= 1."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n in (0, 1) or k == 1:
        return n
    hi = 1
    while hi**k <= n:
        hi *= 2
    lo = hi // 2
    while lo + 1 < hi:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


# ---------------------------------------------------------------------------
# dense polynomials over an ExactField: coefficient lists, low degree first

def poly_trim(F, p):
    p = list(p)
    while p and F.is_zero(p[-1]):
        p.pop()
    return p


def poly_deg(p):
    return len(p) - 1


def poly_add(F, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else F.zero()
        y = b[i] if i < len(b) else F.zero()
        out.append(F.add(x, y))
    return poly_trim(F, out)


def poly_sub(F, a, b):
    return poly_add(F, a, [F.neg(c) for c in b])


def poly_scal(F, c, a):
    if F.is_zero(c):
        return []
    return poly_trim(F, [F.mul(c, x) for x in a])


def poly_mul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero()] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if F.is_zero(x):
            continue
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return poly_trim(F, out)


def poly_divmod(F, a, b):
    b = poly_trim(F, b)
    if not b:
        raise DivisionByZeroError("polynomial division by zero")
    a = list(a)
    q = [F.zero()] * max(0, len(a) - len(b) + 1)
    inv_lead = F.inv(b[-1])
    while len(poly_trim(F, a)) >= len(b):
        a = poly_trim(F, a)
        shift = len(a) - len(b)
        c = F.mul(a[-1], inv_lead)
        q[shift] = c
        for i, bc in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(c, bc))
    return poly_trim(F, q), poly_trim(F, a)


def poly_mod(F, a, b):
    return poly_divmod(F, a, b)[1]


def poly_monic(F, a):
    a = poly_trim(F, a)
    if not a:
        return a
    return poly_scal(F, F.inv(a[-1]), a)


def poly_gcd(F, a, b):
    a, b = poly_trim(F, a), poly_trim(F, b)
    while b:
        a, b = b, poly_mod(F, a, b)
    return poly_monic(F, a)


def poly_ext_gcd(F, a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic (or zero)."""
    r0, r1 = poly_trim(F, a), poly_trim(F, b)
    s0, s1 = [F.one()], []
    t0, t1 = [], [F.one()]
    while r1:
        q, r = poly_divmod(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(F, s0, poly_mul(F, q, s1))
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, q, t1))
    if not r0:
        return [], s0, t0
    c = F.inv(r0[-1])
    return poly_scal(F, c, r0), poly_scal(F, c, s0), poly_scal(F, c, t0)


def poly_eval(F, p, x):
    acc = F.zero()
    for c in reversed(p):
        acc = F.add(F.mul(acc, x), c)
    return acc


def poly_deriv(F, p):
    out = []
    for i in range(1, len(p)):
        out.append(F.mul(F.from_int(i), p[i]))
    return poly_trim(F, out)


def poly_pow_mod(F, base, n, modulus):
    result = [F.one()]
    base = poly_mod(F, base, modulus)
    while n > 0:
        if n & 1:
            result = poly_mod(F, poly_mul(F, result, base), modulus)
        base = poly_mod(F, poly_mul(F, base, base), modulus)
        n >>= 1
    return result


# ---------------------------------------------------------------------------
# fields


class ExactField:
    """Common interface; subclasses fix the element representation."""

    kind = None

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n) -> object:
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == self.zero()

    def eq(self, a, b):
        return a == b

    def pow(self, a, n):
        if n < 0:
            a, n = self.inv(a), -n
        result = self.one()
        while n > 0:
            if n & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            n >>= 1
        return result

    def characteristic(self) -> int:
        raise NotImplementedError

    def cardinality(self):
        """Number of elements, or None if infinite."""
        raise NotImplementedError

    def is_finite(self):
        return self.cardinality() is not None

    def elements(self):
        raise InfiniteFieldError("cannot enumerate an infinite field")

    def sort_key(self, a):
        raise NotImplementedError

    def to_str(self, a) -> str:
        raise NotImplementedError

    def parse(self, s: str):
        raise NotImplementedError

    def random_element(self, rng, size=10):
        raise NotImplementedError


class RationalField(ExactField):
    kind = "rationals"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise DivisionByZeroError("division by zero in Q")
        return 1 / a

    def characteristic(self):
        return 0

    def cardinality(self):
        return None

    def sort_key(self, a):
        return a

    def to_str(self, a):
        return str(a)

    def parse(self, s):
        return Fraction(s.strip())

    def random_element(self, rng, size=10):
        return Fraction(rng.randint(-size, size), rng.randint(1, size))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "Q"


class PrimeField(ExactField):
    kind = "prime"

    def __init__(self, p):
        if not is_prime(p):
            raise FieldConstructionError("%d is not prime" % p)
        self.p = p

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise DivisionByZeroError("division by zero in F_%d" % self.p)
        return pow(a, self.p - 2, self.p)

    def characteristic(self):
        return self.p

    def cardinality(self):
        return self.p

    def elements(self):
        return iter(range(self.p))

    def sort_key(self, a):
        return a

    def to_str(self, a):
        return str(a)

    def parse(self, s):
        return int(s.strip()) % self.p

    def random_element(self, rng, size=10):
        return rng.randrange(self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return "F%d" % self.p


class ExtensionField(ExactField):
    """F[t]/(modulus) for monic modulus of degree >= 2 over a built field F.

    Elements are coefficient tuples of length deg(modulus), low degree first.
    """

    kind = "extension"

    def __init__(self, base, modulus):
        modulus = poly_trim(base, list(modulus))
        if len(modulus) < 3:
            raise FieldConstructionError("extension modulus must have degree >= 2")
        if not base.eq(modulus[-1], base.one()):
            raise FieldConstructionError("extension modulus must be monic")
        self.base = base
        self.modulus = tuple(modulus)
        self.degree = len(modulus) - 1
        # reduction table for t^k, deg <= k <= 2*deg-2
        self._tpow = {}
        d = self.degree
        cur = [base.neg(c) for c in modulus[:-1]]
        self._tpow[d] = list(cur)
        for k in range(d + 1, 2 * d - 1):
            cur = [base.zero()] + cur[:]
            if len(cur) > d:
                lead = cur.pop()
                cur = [base.add(cur[i], base.mul(lead, self._tpow[d][i])) for i in range(d)]
            self._tpow[k] = list(cur)

    def _vec(self, coeffs):
        d = self.degree
        coeffs = list(coeffs) + [self.base.zero()] * d
        return tuple(coeffs[:d])

    def zero(self):
        return self._vec([])

    def one(self):
        return self._vec([self.base.one()])

    def gen(self):
        return self._vec([self.base.zero(), self.base.one()])

    def from_int(self, n):
        return self._vec([self.base.from_int(n)])

    def from_base(self, c):
        return self._vec([c])

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        base, d = self.base, self.degree
        conv = [base.zero()] * (2 * d - 1)
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                conv[i + j] = base.add(conv[i + j], base.mul(x, y))
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if base.is_zero(c):
                continue
            red = self._tpow[k]
            for i in range(d):
                out[i] = base.add(out[i], base.mul(c, red[i]))
        return tuple(out)

    def inv(self, a):
        if self.is_zero(a):
            raise DivisionByZeroError("division by zero in extension field")
        g, s, _ = poly_ext_gcd(self.base, list(a), list(self.modulus))
        if poly_deg(g) != 0:
            raise ReducibleModulusError(tuple(g))
        return self._vec(poly_scal(self.base, self.base.inv(g[0]), s))

    def is_zero(self, a):
        return all(self.base.is_zero(x) for x in a)

    def characteristic(self):
        return self.base.characteristic()

    def cardinality(self):
        c = self.base.cardinality()
        return None if c is None else c**self.degree

    def elements(self):
        return (tuple(v) for v in itertools.product(self.base.elements(), repeat=self.degree))

    def sort_key(self, a):
        return tuple(self.base.sort_key(x) for x in a)

    def to_str(self, a):
        return "[" + ",".join(self.base.to_str(x) for x in a) + "]"

    def parse(self, s):
        s = s.strip()
        if not (s.startswith("[") and s.endswith("]")):
            # allow bare base-field literals as constants
            return self.from_base(self.base.parse(s))
        parts = split_bracketed(s[1:-1])
        if len(parts) != self.degree:
            raise FieldConstructionError(
                "expected %d coefficients, got %d" % (self.degree, len(parts)))
        return tuple(self.base.parse(p) for p in parts)

    def random_element(self, rng, size=10):
        return tuple(self.base.random_element(rng, size) for _ in range(self.degree))

    def __eq__(self, other):
        return (isinstance(other, ExtensionField) and other.base == self.base
                and other.modulus == self.modulus)

    def __hash__(self):
        return hash(("extension", self.base, self.modulus))

    def __repr__(self):
        c = self.cardinality()
        if c is not None:
            return "F%d" % c
        return "%r[t]/(deg %d)" % (self.base, self.degree)


def split_bracketed(s, sep=","):
    """Split on sep at bracket nesting level zero."""
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or parts:
        parts.append("".join(cur))
    return [p.strip() for p in parts]


_Q = RationalField()


def rationals():
    return _Q


def prime_field(p):
    return PrimeField(p)


def extension_field(base, modulus_coeffs):
    return ExtensionField(base, modulus_coeffs)


def build_field(spec):
    """spec: ('rationals',) | ('prime', p) | ('extension', base, coeff list)."""
    tag = spec[0]
    if tag == "rationals":
        return rationals()
    if tag == "prime":
        return prime_field(spec[1])
    if tag == "extension":
        return extension_field(spec[1], spec[2])
    raise FieldConstructionError("unknown field spec %r" % (tag,))


# ---------------------------------------------------------------------------
# multiplicative structure helpers


def invert(F, x):
    """Multiplicative inverse in F; raises on zero, and on a reducible
    extension modulus discovered by the extended Euclidean algorithm."""
    return F.inv(x)


def unit_order(F, x):
    """Least n >= 1 with x^n = 1 in a finite field; divides |F| - 1."""
    if not F.is_finite():
        raise InfiniteFieldError("unit_order needs a finite field")
    if F.is_zero(x):
        raise DivisionByZeroError("unit_order of zero")
    n, acc = 1, x
    one = F.one()
    q = F.cardinality()
    while acc != one:
        acc = F.mul(acc, x)
        n += 1
        if n > q:
            raise ReducibleModulusError((x,))
    return n


class RootResult:
    WITNESS = "witness"
    NO_SOLUTION = "nosolution"
    UNKNOWN = "unknown"

    def __init__(self, status, witness=None):
        self.status = status
        self.witness = witness

    def __repr__(self):
        if self.status == self.WITNESS:
            return "RootResult(witness=%r)" % (self.witness,)
        return "RootResult(%s)" % self.status


def _rational_dth_root(c, d):
    num, den = c.numerator, c.denominator
    if num < 0 and d % 2 == 0:
        return RootResult(RootResult.NO_SOLUTION)
    rn = integer_kth_root(abs(num), d)
    rd = integer_kth_root(den, d)
    if rn**d != abs(num) or rd**d != den:
        return RootResult(RootResult.NO_SOLUTION)
    root = Fraction(rn, rd)
    if num < 0:
        root = -root
    return RootResult(RootResult.WITNESS, root)


def dth_root(F, c, d):
    """Decide solvability of x^d = c and produce a witness when possible.

    Complete over Q (perfect-power test) and over finite fields (criterion
    c^((q-1)/gcd(d,q-1)) = 1, witness by exhaustion).  Over extensions of Q
    the answer may be Unknown.
    """
    if F.is_zero(c):
        raise DivisionByZeroError("dth_root of zero")
    if d < 1:
        raise ValueError("d must be >= 1")
    if d == 1 or F.eq(c, F.one()):
        return RootResult(RootResult.WITNESS, c)
    if isinstance(F, RationalField):
        return _rational_dth_root(c, d)
    q = F.cardinality()
    if q is not None:
        g = math.gcd(d, q - 1)
        if not F.eq(F.pow(c, (q - 1) // g), F.one()):
            return RootResult(RootResult.NO_SOLUTION)
        for x in F.elements():
            if F.is_zero(x):
                continue
            if F.eq(F.pow(x, d), c):
                return RootResult(RootResult.WITNESS, x)
        raise UnknownSolvabilityError("criterion passed but no witness found")
    # char-0 extension: try constants from the base
    if isinstance(F, ExtensionField):
        base = F.base
        if all(base.is_zero(x) for x in c[1:]) and isinstance(base, RationalField):
            res = _rational_dth_root(c[0], d)
            if res.status == RootResult.WITNESS:
                return RootResult(RootResult.WITNESS, F.from_base(res.witness))
            # no rational root; a root may still exist in the extension
        return RootResult(RootResult.UNKNOWN)
    raise UnknownSolvabilityError("unsupported field for dth_root")


def count_dth_roots(F, c, d):
    """Number of solutions of x^d = c in F; None means infinite/undecided."""
    res = dth_root(F, c, d)
    if res.status == RootResult.NO_SOLUTION:
        return 0
    if res.status == RootResult.UNKNOWN:
        return None
    q = F.cardinality()
    if q is not None:
        return math.gcd(d, q - 1)
    if isinstance(F, RationalField):
        r = res.witness
        if d % 2 == 0 and r != -r:
            return 2
        return 1
    return None

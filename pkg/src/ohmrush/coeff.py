"""Exact coefficient domains.

A domain object describes a ring and performs arithmetic on raw *payloads*
(``int``, ``Fraction``, residues, polynomials, fraction pairs, tuples).  The
thin :class:`DomainElement` wrapper pairs a payload with its domain and adds
operator overloading for interactive use.

Polynomial rings live in :mod:`ohmrush.poly`; quotient domains defined here
hold an ambient polynomial ring and a defining ideal created there.
"""

from fractions import Fraction
from math import gcd

from . import kernels
from .errors import DivisionByZero, DomainMismatch, NonUnitDivisor, UnsupportedCoefficients


def is_prime(n):
    """Trial division; meant for desk-scale moduli."""
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


class Domain:
    """Base class for coefficient domains."""

    is_field = False
    is_domain = True
    kernel_mode = kernels.GENERIC
    modulus = 0

    def __init__(self):
        self._hash = None

    # identity -------------------------------------------------------------

    def key(self):
        raise NotImplementedError

    def __eq__(self, other):
        if self is other:
            return True
        return type(self) is type(other) and self.key() == other.key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.key()))
        return self._hash

    def __repr__(self):
        return self.describe()

    def describe(self):
        raise NotImplementedError

    def record(self):
        """Nested tagged record, the scenario-file form of this domain."""
        raise NotImplementedError

    # arithmetic -----------------------------------------------------------

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def is_zero(self, a):
        return not a

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    def is_one(self, a):
        return self.eq(a, self.one())

    def inv(self, a):
        raise NonUnitDivisor(f"inversion is not available in {self.describe()}")

    def div(self, a, b):
        if self.is_zero(b):
            raise DivisionByZero(f"division by zero in {self.describe()}")
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        result = self.one()
        base = a
        while n:
            if n & 1:
                result = self.mul(result, base)
            n >>= 1
            if n:
                base = self.mul(base, base)
        return result

    def normalize_fraction(self, num, den):
        """Hook for fraction fields over this domain: cancel what is cheap."""
        return num, den

    # coercion -------------------------------------------------------------

    def variable(self, name):
        """Payload of the generator called ``name``, or ``None``."""
        return None

    def lift_from(self, source, value):
        """Map ``value`` from a subdomain ``source`` into this domain."""
        if source == self:
            return value
        return self._lift(source, value)

    def _lift(self, source, value):
        if isinstance(source, Integers):
            return self.from_int(value)
        raise DomainMismatch(f"cannot map {source.describe()} into {self.describe()}")

    def coerce(self, value):
        if isinstance(value, DomainElement):
            return self.lift_from(value.domain, value.value)
        if isinstance(value, bool):
            raise DomainMismatch("booleans are not ring elements")
        if isinstance(value, int):
            return self.from_int(value)
        return self._coerce_native(value)

    def _coerce_native(self, value):
        raise DomainMismatch(f"cannot interpret {value!r} in {self.describe()}")

    def __call__(self, value):
        if isinstance(value, str):
            from .parsing import parse_element

            return DomainElement(self, parse_element(value, self))
        return DomainElement(self, self.coerce(value))

    # text -----------------------------------------------------------------

    def format(self, a):
        return str(a)

    def parse(self, text):
        from .parsing import parse_element

        return parse_element(text, self)


class Integers(Domain):
    kernel_mode = kernels.NATIVE

    def key(self):
        return ()

    def describe(self):
        return "ZZ"

    def record(self):
        return {"type": "integers"}

    def zero(self):
        return 0

    def one(self):
        return 1

    def from_int(self, n):
        return int(n)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def inv(self, a):
        if a in (1, -1):
            return a
        if a == 0:
            raise DivisionByZero("division by zero in ZZ")
        raise NonUnitDivisor(f"{a} is not a unit of ZZ")

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in ZZ")
        q, r = divmod(a, b)
        if r:
            raise NonUnitDivisor(f"{b} does not divide {a} in ZZ")
        return q

    def normalize_fraction(self, num, den):
        g = gcd(num, den)
        if den < 0:
            g = -g
        return num // g, den // g

    def _lift(self, source, value):
        raise DomainMismatch(f"cannot map {source.describe()} into ZZ")


class Rationals(Domain):
    is_field = True
    kernel_mode = kernels.NATIVE

    def key(self):
        return ()

    def describe(self):
        return "QQ"

    def record(self):
        return {"type": "rationals"}

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("division by zero in QQ")
        return Fraction(1) / a

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero in QQ")
        return Fraction(a) / b

    def _coerce_native(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, str):
            return Fraction(value)
        return super()._coerce_native(value)


class IntegerMod(Domain):
    """The residue ring Z/nZ, residues stored in ``[0, n)``."""

    kernel_mode = kernels.MODULAR

    def __init__(self, n):
        super().__init__()
        n = int(n)
        if n < 1:
            raise ValueError("modulus must be positive")
        self.n = self.modulus = n
        self.is_domain = is_prime(n)

    def key(self):
        return (self.n,)

    def describe(self):
        return f"ZZ/{self.n}"

    def record(self):
        return {"type": "integers_mod", "n": self.n}

    def zero(self):
        return 0

    def one(self):
        return 1 % self.n

    def from_int(self, n):
        return int(n) % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def sub(self, a, b):
        return (a - b) % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def neg(self, a):
        return (-a) % self.n

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def inv(self, a):
        if a == 0:
            raise DivisionByZero(f"division by zero in {self.describe()}")
        if gcd(a, self.n) != 1:
            raise NonUnitDivisor(f"{a} is not a unit of {self.describe()}")
        return pow(a, -1, self.n)

    def _coerce_native(self, value):
        if isinstance(value, Fraction):
            return self.div(self.from_int(value.numerator), self.from_int(value.denominator))
        return super()._coerce_native(value)

    def _lift(self, source, value):
        if isinstance(source, Integers):
            return value % self.n
        if isinstance(source, IntegerMod) and self.n and source.n % self.n == 0:
            return value % self.n
        return super()._lift(source, value)


class PrimeField(IntegerMod):
    is_field = True

    def __init__(self, p):
        if not is_prime(int(p)):
            raise ValueError(f"{p} is not prime")
        super().__init__(p)

    def describe(self):
        return f"GF({self.n})"

    @property
    def p(self):
        return self.n

    def record(self):
        return {"type": "prime_field", "p": self.n}

    def _lift(self, source, value):
        if isinstance(source, Rationals):
            return self.div(value.numerator % self.n, value.denominator % self.n)
        return super()._lift(source, value)


class FractionField(Domain):
    """Fractions ``(num, den)`` over an integral domain.

    Equality is cross-multiplication, so a fraction over a quotient domain is
    zero exactly when its numerator lies in the defining ideal.
    """

    is_field = True

    def __init__(self, base):
        super().__init__()
        if not base.is_domain:
            raise UnsupportedCoefficients(
                f"fraction field needs an integral domain, got {base.describe()}")
        self.base = base

    def key(self):
        return (self.base,)

    def describe(self):
        return f"Frac({self.base.describe()})"

    def record(self):
        return {"type": "fraction_field", "base": self.base.record()}

    def make(self, num, den):
        b = self.base
        if b.is_zero(den):
            raise DivisionByZero(f"zero denominator in {self.describe()}")
        if b.is_zero(num):
            return b.zero(), b.one()
        return b.normalize_fraction(num, den)

    def numerator(self, a):
        return a[0]

    def denominator(self, a):
        return a[1]

    def zero(self):
        return self.base.zero(), self.base.one()

    def one(self):
        return self.base.one(), self.base.one()

    def from_int(self, n):
        return self.base.from_int(n), self.base.one()

    def add(self, a, b):
        B = self.base
        if B.is_one(a[1]) and B.is_one(b[1]):
            return B.add(a[0], b[0]), B.one()
        num = B.add(B.mul(a[0], b[1]), B.mul(b[0], a[1]))
        return self.make(num, B.mul(a[1], b[1]))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def neg(self, a):
        return self.base.neg(a[0]), a[1]

    def mul(self, a, b):
        B = self.base
        if B.is_zero(a[0]) or B.is_zero(b[0]):
            return self.zero()
        return self.make(B.mul(a[0], b[0]), B.mul(a[1], b[1]))

    def is_zero(self, a):
        return self.base.is_zero(a[0])

    def eq(self, a, b):
        B = self.base
        return B.is_zero(B.sub(B.mul(a[0], b[1]), B.mul(b[0], a[1])))

    def inv(self, a):
        if self.base.is_zero(a[0]):
            raise DivisionByZero(f"division by zero in {self.describe()}")
        return self.make(a[1], a[0])

    def variable(self, name):
        v = self.base.variable(name)
        return None if v is None else (v, self.base.one())

    def _lift(self, source, value):
        if isinstance(source, Rationals) and not isinstance(self.base, Rationals):
            B = self.base
            return self.make(B.from_int(value.numerator), B.from_int(value.denominator))
        return self.base.lift_from(source, value), self.base.one()

    def _coerce_native(self, value):
        if isinstance(value, Fraction):
            return self._lift(Rationals(), value)
        return self.base.coerce(value), self.base.one()

    def format(self, a):
        num = self.base.format(a[0])
        if self.base.is_one(a[1]):
            return num
        den = self.base.format(a[1])
        return f"{_wrap(num)}/{_wrap(den)}"


class Product(Domain):
    """Finite direct product of rings; payloads are component tuples."""

    def __init__(self, factors):
        super().__init__()
        factors = tuple(factors)
        if not factors:
            raise ValueError("a product needs at least one factor")
        self.factors = factors
        self.is_domain = len(factors) == 1 and factors[0].is_domain

    def key(self):
        return self.factors

    def describe(self):
        return " x ".join(f.describe() for f in self.factors)

    def record(self):
        return {"type": "product", "factors": [f.record() for f in self.factors]}

    def zero(self):
        return tuple(f.zero() for f in self.factors)

    def one(self):
        return tuple(f.one() for f in self.factors)

    def from_int(self, n):
        return tuple(f.from_int(n) for f in self.factors)

    def add(self, a, b):
        return tuple(f.add(x, y) for f, x, y in zip(self.factors, a, b))

    def sub(self, a, b):
        return tuple(f.sub(x, y) for f, x, y in zip(self.factors, a, b))

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def neg(self, a):
        return tuple(f.neg(x) for f, x in zip(self.factors, a))

    def is_zero(self, a):
        return all(f.is_zero(x) for f, x in zip(self.factors, a))

    def eq(self, a, b):
        return all(f.eq(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def component(self, a, i):
        return a[i]

    def _lift(self, source, value):
        return tuple(f.lift_from(source, value) for f in self.factors)

    def _coerce_native(self, value):
        if isinstance(value, (tuple, list)) and len(value) == len(self.factors):
            return tuple(f.coerce(v) for f, v in zip(self.factors, value))
        return super()._coerce_native(value)

    def format(self, a):
        return "[" + ", ".join(f.format(x) for f, x in zip(self.factors, a)) + "]"


class QuotientDomain(Domain):
    """Quotient of a polynomial ring by an ideal; payloads are normal forms.

    Whether the quotient is an integral domain cannot be decided here; the
    caller asserts it with ``is_domain``.
    """

    def __init__(self, ambient, defining, is_domain=False):
        super().__init__()
        from .poly import Ideal, PolynomialRing

        if not isinstance(ambient, PolynomialRing):
            raise UnsupportedCoefficients("quotient domains need a polynomial ambient ring")
        if not isinstance(defining, Ideal):
            defining = Ideal(ambient, [ambient.coerce(g) for g in defining])
        if defining.ring != ambient:
            raise DomainMismatch("defining ideal lives in a different ring")
        defining.canonical()
        self.ambient = ambient
        self.defining = defining
        self.is_domain = bool(is_domain)

    def key(self):
        return (self.ambient, tuple(str(g) for g in self.defining.generators()))

    def describe(self):
        return f"{self.ambient.describe()}/{self.defining}"

    def record(self):
        return {
            "type": "quotient",
            "ambient": self.ambient.record(),
            "relations": [str(g) for g in self.defining.generators()],
            "domain": self.is_domain,
        }

    def reduce(self, p):
        return self.defining.normal_form(p)

    def zero(self):
        return self.ambient.zero()

    def one(self):
        return self.reduce(self.ambient.one())

    def from_int(self, n):
        return self.reduce(self.ambient.from_int(n))

    def add(self, a, b):
        return self.ambient.add(a, b)

    def sub(self, a, b):
        return self.ambient.sub(a, b)

    def neg(self, a):
        return self.ambient.neg(a)

    def mul(self, a, b):
        return self.reduce(self.ambient.mul(a, b))

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return self.ambient.sub(a, b).is_zero()

    def _constant(self, a):
        if a.is_zero() or not a.is_constant() or not self.ambient.base.is_field:
            return None
        return a.constant_coeff()

    def inv(self, a):
        c = self._constant(a)
        if c is None:
            if a.is_zero():
                raise DivisionByZero(f"division by zero in {self.describe()}")
            raise NonUnitDivisor(
                f"{self.format(a)} is not a detectable unit of {self.describe()}")
        return self.reduce(self.ambient.constant(self.ambient.base.inv(c)))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def normalize_fraction(self, num, den):
        c = self._constant(den)
        if c is not None and not self.ambient.base.is_one(c):
            k = self.ambient.base.inv(c)
            return num.scale(k), self.one()
        if c is not None:
            return num, self.one()
        return num, den

    def variable(self, name):
        v = self.ambient.variable(name)
        return None if v is None else self.reduce(v)

    def _lift(self, source, value):
        return self.reduce(self.ambient.lift_from(source, value))

    def _coerce_native(self, value):
        from .poly import Polynomial

        if isinstance(value, Polynomial) and value.ring == self.ambient:
            return self.reduce(value)
        return self.reduce(self.ambient.coerce(value))

    def format(self, a):
        return self.ambient.format(a)


class DomainElement:
    """A payload together with the domain it belongs to."""

    __slots__ = ("domain", "value")

    def __init__(self, domain, value):
        self.domain = domain
        self.value = value

    def _other(self, other):
        if isinstance(other, DomainElement):
            if other.domain != self.domain:
                raise DomainMismatch(
                    f"{self.domain.describe()} vs {other.domain.describe()}")
            return other.value
        return self.domain.coerce(other)

    def __add__(self, other):
        return DomainElement(self.domain, self.domain.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return DomainElement(self.domain, self.domain.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return DomainElement(self.domain, self.domain.sub(self._other(other), self.value))

    def __mul__(self, other):
        return DomainElement(self.domain, self.domain.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return DomainElement(self.domain, self.domain.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return DomainElement(self.domain, self.domain.div(self._other(other), self.value))

    def __neg__(self):
        return DomainElement(self.domain, self.domain.neg(self.value))

    def __pow__(self, n):
        return DomainElement(self.domain, self.domain.pow(self.value, n))

    def __eq__(self, other):
        try:
            return self.domain.eq(self.value, self._other(other))
        except DomainMismatch:
            return NotImplemented

    def __bool__(self):
        return not self.domain.is_zero(self.value)

    __hash__ = None

    def __str__(self):
        return self.domain.format(self.value)

    def __repr__(self):
        return f"{self.domain.describe()}({self})"


def arith(a, b, kind):
    """Exact ``add``, ``sub``, ``mul`` or ``div`` of two elements of one domain."""
    if a.domain != b.domain:
        raise DomainMismatch(f"{a.domain.describe()} vs {b.domain.describe()}")
    ops = {"add": a.domain.add, "sub": a.domain.sub, "mul": a.domain.mul, "div": a.domain.div}
    try:
        op = ops[kind]
    except KeyError:
        raise ValueError(f"unknown operation {kind!r}") from None
    return DomainElement(a.domain, op(a.value, b.value))


def is_zero(a):
    return a.domain.is_zero(a.value)


def _wrap(text):
    if any(ch in text[1:] for ch in "+-/ "):
        return f"({text})"
    return text


ZZ = Integers()
QQ = Rationals()

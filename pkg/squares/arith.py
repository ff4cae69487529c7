"""Exact arithmetic over Q and over quadratic fields Q(sqrt(d)).

Rationals are `fractions.Fraction`. Elements of Q(sqrt(d)) are
`QuadraticElement` values (p + q*sqrt(d))/m kept in lowest terms. Helpers
such as `embed`, `field_sqrt` and `format_element` treat d = 1 (plain
Fractions) and quadratic fields alike, so curve and progression code can
be written once for both.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, lcm

from django.core.exceptions import ValidationError
from sympy import factorint


def squarefree_decompose(n):
    """Split a nonzero integer as n = s * f**2 with s squarefree, sign(s) = sign(n)."""
    if n == 0:
        raise ValidationError('0 has no squarefree part.')
    s = -1 if n < 0 else 1
    f = 1
    for prime, exponent in factorint(abs(n)).items():
        if exponent % 2:
            s *= prime
        f *= prime ** (exponent // 2)
    return s, f


@lru_cache(maxsize=4096)
def is_squarefree(n):
    return n != 0 and squarefree_decompose(n)[1] == 1


def squarefree_part(x):
    """Squarefree representative of the square class of a nonzero rational."""
    x = Fraction(x)
    return squarefree_decompose(x.numerator * x.denominator)[0]


def rational_sqrt(x):
    """Nonnegative square root of a rational, or None when x is not a square."""
    x = Fraction(x)
    if x < 0:
        return None
    num, den = isqrt(x.numerator), isqrt(x.denominator)
    if num * num != x.numerator or den * den != x.denominator:
        return None
    return Fraction(num, den)


@lru_cache(maxsize=1024)
def _check_field(d):
    if d in (0, 1) or not is_squarefree(d):
        raise ValidationError(f'd={d} must be a squarefree integer other than 0 and 1.')


@dataclass(frozen=True, eq=False)
class QuadraticElement:
    """The element (p + q*sqrt(d))/m of Q(sqrt(d)), stored in lowest terms."""
    p: int
    q: int
    m: int
    d: int

    def __post_init__(self):
        _check_field(self.d)
        p, q, m = int(self.p), int(self.q), int(self.m)
        if m == 0:
            raise ZeroDivisionError('denominator of a quadratic element is zero')
        if m < 0:
            p, q, m = -p, -q, -m
        g = gcd(gcd(p, q), m)
        object.__setattr__(self, 'p', p // g)
        object.__setattr__(self, 'q', q // g)
        object.__setattr__(self, 'm', m // g)

    @classmethod
    def from_parts(cls, u, v, d):
        """Build u + v*sqrt(d) from rational parts."""
        u, v = Fraction(u), Fraction(v)
        m = lcm(u.denominator, v.denominator)
        return cls(u.numerator * (m // u.denominator), v.numerator * (m // v.denominator), m, d)

    @property
    def u(self):
        """Rational part."""
        return Fraction(self.p, self.m)

    @property
    def v(self):
        """Coefficient of sqrt(d)."""
        return Fraction(self.q, self.m)

    @property
    def is_rational(self):
        return self.q == 0

    def _coerce(self, other):
        if isinstance(other, QuadraticElement):
            if other.d != self.d:
                raise ValidationError(
                    f'Elements of Q(sqrt({self.d})) and Q(sqrt({other.d})) cannot be combined.'
                )
            return other
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return QuadraticElement(other.numerator, 0, other.denominator, self.d)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticElement(
            self.p * other.m + other.p * self.m,
            self.q * other.m + other.q * self.m,
            self.m * other.m,
            self.d,
        )

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.p, -self.q, self.m, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticElement(
            self.p * other.p + self.d * self.q * other.q,
            self.p * other.q + self.q * other.p,
            self.m * other.m,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.p * self.p - self.d * self.q * self.q
        if n == 0:
            raise ZeroDivisionError('division by zero in a quadratic field')
        return QuadraticElement(self.m * self.p, -self.m * self.q, n, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = QuadraticElement(1, 0, 1, self.d)
        exponent = abs(exponent)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticElement):
            return (self.p, self.q, self.m, self.d) == (other.p, other.q, other.m, other.d)
        if isinstance(other, (int, Fraction)):
            return self.q == 0 and Fraction(self.p, self.m) == other
        return NotImplemented

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.m))
        return hash((self.p, self.q, self.m, self.d))

    def __bool__(self):
        return bool(self.p or self.q)

    def conjugate(self):
        return QuadraticElement(self.p, -self.q, self.m, self.d)

    def norm(self):
        return Fraction(self.p * self.p - self.d * self.q * self.q, self.m * self.m)

    def __str__(self):
        if self.q == 0:
            return str(self.p) if self.m == 1 else f'{self.p}/{self.m}'
        root = f'sqrt({self.d})'
        term = root if abs(self.q) == 1 else f'{abs(self.q)}*{root}'
        if self.p == 0:
            inner = term if self.q > 0 else f'-{term}'
        else:
            inner = f"{self.p}{'+' if self.q > 0 else '-'}{term}"
        return inner if self.m == 1 else f'({inner})/{self.m}'

    def __repr__(self):
        return f"QuadraticElement('{self}')"


def field_of(*values):
    """Field parameter of the first quadratic element among values, else 1."""
    for value in values:
        if isinstance(value, QuadraticElement):
            return value.d
    return 1


def embed(x, d):
    """Map an int, Fraction or element into the working field for d."""
    if isinstance(x, QuadraticElement):
        if x.d != d:
            if d == 1 and x.is_rational:
                return x.u
            raise ValidationError(f'{x} does not lie in the field for d={d}.')
        return x
    if d == 1:
        return Fraction(x)
    x = Fraction(x)
    return QuadraticElement(x.numerator, 0, x.denominator, d)


def sqrt_d(d):
    """The generator sqrt(d) of the working field."""
    if d == 1:
        return Fraction(1)
    return QuadraticElement(0, 1, 1, d)


def canonical_sign(x):
    """Choose +x or -x: rational part > 0, or rational part 0 and sqrt(d)-coefficient >= 0."""
    if isinstance(x, QuadraticElement):
        if x.p < 0 or (x.p == 0 and x.q < 0):
            return -x
        return x
    return abs(Fraction(x))


def quad_conjugate(x):
    if isinstance(x, QuadraticElement):
        return x.conjugate()
    return Fraction(x)


def quad_norm(x):
    if isinstance(x, QuadraticElement):
        return x.norm()
    return Fraction(x) ** 2


def quad_sqrt(x):
    """Square root of x in Q(sqrt(d)) with the canonical sign, or None.

    Writing x = u + v*sqrt(d), a root exists iff u**2 - d*v**2 = n**2 for
    a rational n and one of (u +/- n)/2 is a rational square.
    """
    u, v, d = x.u, x.v, x.d
    n = rational_sqrt(u * u - d * v * v)
    if n is None:
        return None
    for branch in (n, -n):
        s = rational_sqrt((u + branch) / 2)
        if s is None:
            continue
        if s:
            t = v / (2 * s)
        else:
            if v:
                continue
            t = rational_sqrt(u / d)
            if t is None:
                continue
        root = QuadraticElement.from_parts(s, t, d)
        if root * root == x:
            return canonical_sign(root)
    return None


def field_sqrt(x, d):
    """Square root in Q (d = 1) or Q(sqrt(d)), or None."""
    if d == 1:
        if isinstance(x, QuadraticElement):
            if not x.is_rational:
                return None
            x = x.u
        return rational_sqrt(x)
    return quad_sqrt(embed(x, d))


def format_element(x):
    """Text form shared by every command: `p`, `p/m` or `(p+q*sqrt(d))/m`."""
    if isinstance(x, QuadraticElement):
        return str(x)
    return str(Fraction(x))


_RATIONAL_RE = re.compile(r'[+-]?\d+(?:/\d+)?')
_WRAPPED_RE = re.compile(r'\((?P<inner>.+)\)/(?P<m>\d+)')
_SURD_RE = re.compile(r'(?P<p>[+-]?\d+(?=[+-]))?(?P<q>[+-]?\d*)\*?sqrt\((?P<d>[+-]?\d+)\)')


def parse_element(text, d=1):
    """Parse the text form printed by `format_element` into the field for d."""
    s = text.replace(' ', '')
    try:
        if 'sqrt' not in s:
            if not _RATIONAL_RE.fullmatch(s):
                raise ValidationError(f'Cannot read {text!r} as a field element.')
            return embed(Fraction(s), d)
        m = 1
        wrapped = _WRAPPED_RE.fullmatch(s)
        if wrapped:
            s, m = wrapped.group('inner'), int(wrapped.group('m'))
        match = _SURD_RE.fullmatch(s)
        if not match or m == 0:
            raise ValidationError(f'Cannot read {text!r} as a field element.')
    except ZeroDivisionError:
        raise ValidationError(f'{text!r} has a zero denominator.')
    if int(match.group('d')) != d:
        raise ValidationError(f'{text!r} does not lie in the field for d={d}.')
    q_text = match.group('q')
    q = int(q_text + '1') if q_text in ('', '+', '-') else int(q_text)
    return QuadraticElement(int(match.group('p') or 0), q, m, d)

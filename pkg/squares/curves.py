"""Curves y^2 = x(x+A)(x+B), their group law and rational torsion."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from django.core.exceptions import ValidationError
from sympy import Poly, divisors, symbols

from .arith import embed, format_element, is_squarefree

logger = logging.getLogger(__name__)

TORSION_LIMIT = 12


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y), or the point at infinity when both are None."""
    x: object = None
    y: object = None

    @classmethod
    def affine(cls, x, y):
        if isinstance(x, int):
            x = Fraction(x)
        if isinstance(y, int):
            y = Fraction(y)
        return cls(x, y)

    @property
    def is_infinity(self):
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return 'inf'
        return f'({format_element(self.x)},{format_element(self.y)})'


INFINITY = CurvePoint()


@dataclass(frozen=True)
class Curve:
    """y^2 = x(x+A)(x+B) over Q (d = 1) or over Q(sqrt(d))."""
    A: int
    B: int
    d: int = 1

    def __post_init__(self):
        if self.A * self.B * (self.A - self.B) == 0:
            raise ValidationError(f'{self} is singular.')

    @property
    def a2(self):
        return self.A + self.B

    @property
    def a4(self):
        return self.A * self.B

    @property
    def discriminant(self):
        return 16 * (self.A * self.B * (self.A - self.B)) ** 2

    def rhs(self, x):
        return x * (x + self.A) * (x + self.B)

    def contains(self, P):
        return P.is_infinity or P.y * P.y == self.rhs(P.x)

    def check(self, P):
        if not self.contains(P):
            raise ValidationError(f'{P} is not on {self}.')
        return P

    def negate(self, P):
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y)

    def _add(self, P, Q):
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        if P.x == Q.x:
            if P.y == -Q.y:
                return INFINITY
            slope = (3 * P.x * P.x + 2 * self.a2 * P.x + self.a4) / (2 * P.y)
        else:
            slope = (Q.y - P.y) / (Q.x - P.x)
        x = slope * slope - self.a2 - P.x - Q.x
        return CurvePoint(x, slope * (P.x - x) - P.y)

    def add(self, P, Q):
        return self._add(self.check(P), self.check(Q))

    def multiply(self, k, P):
        self.check(P)
        if k < 0:
            k, P = -k, self.negate(P)
        result = INFINITY
        while k:
            if k & 1:
                result = self._add(result, P)
            P = self._add(P, P)
            k >>= 1
        return result

    def order(self, P, limit=TORSION_LIMIT):
        """Order of P when it is at most limit, else None."""
        self.check(P)
        Q = P
        for n in range(1, limit + 1):
            if Q.is_infinity:
                return n
            Q = self._add(Q, P)
        return None

    def two_torsion(self):
        return [CurvePoint.affine(x, 0) for x in (0, -self.A, -self.B)]

    def __str__(self):
        return f'y^2 = x(x{self.A:+d})(x{self.B:+d})'


@dataclass(frozen=True)
class ThetaParams:
    """A rational angle theta with cos(theta) = s/r."""
    r: int
    s: int

    def __post_init__(self):
        if self.r <= abs(self.s) or gcd(self.r, self.s) != 1:
            raise ValidationError(f'r={self.r}, s={self.s} do not describe an angle with rational cosine s/r.')

    def __str__(self):
        return ANGLE_NAMES.get((self.r, self.s), f'acos({self.s}/{self.r})')


PI_3 = ThetaParams(2, 1)
TWO_PI_3 = ThetaParams(2, -1)
ANGLE_NAMES = {(2, 1): 'pi/3', (2, -1): '2pi/3'}
ANGLES = {'pi/3': PI_3, '2pi/3': TWO_PI_3}


def curve_E(d=1):
    """The curve whose points parametrize progressions of four squares."""
    return Curve(3, -1, d)


def twist_curve(d):
    """Quadratic twist E^d: y^2 = x(x+3d)(x-d) over Q."""
    if not is_squarefree(d):
        raise ValidationError(f'd={d} must be a nonzero squarefree integer.')
    return Curve(3 * d, -d)


def theta_curve(n, params):
    if n < 1:
        raise ValidationError(f'n={n} must be a positive integer.')
    return Curve((params.r + params.s) * n, -(params.r - params.s) * n)


def concordant_curve(M, N):
    return Curve(M, N)


def _point_key(P):
    if P.is_infinity:
        return (0, 0, 0)
    return (1, P.x, P.y)


def _is_integral(P):
    return P.is_infinity or (Fraction(P.x).denominator == 1 and Fraction(P.y).denominator == 1)


def _is_torsion(curve, P):
    Q = P
    for _ in range(TORSION_LIMIT):
        if Q.is_infinity:
            return True
        if not _is_integral(Q):
            return False
        Q = curve._add(Q, P)
    return Q.is_infinity


@lru_cache(maxsize=256)
def torsion_subgroup(curve):
    """Rational torsion of a curve over Q as ((2, n), sorted points).

    Nonzero torsion points are integral and y divides 4*A*B*(A-B); each
    candidate y gives a cubic whose integer roots are the candidate x.
    """
    if curve.d != 1:
        raise ValidationError('Torsion is computed over Q only; use field_torsion for E over Q(sqrt(d)).')
    x = symbols('x')
    points = [INFINITY] + curve.two_torsion()
    for y in divisors(4 * abs(curve.A * curve.B * (curve.A - curve.B))):
        cubic = Poly(x ** 3 + curve.a2 * x ** 2 + curve.a4 * x - y * y, x)
        for root in cubic.ground_roots():
            if not root.is_integer:
                continue
            for sign in (1, -1):
                P = CurvePoint.affine(int(root), sign * y)
                if _is_torsion(curve, P):
                    points.append(P)
    points.sort(key=_point_key)
    logger.debug('torsion of %s has %d points', curve, len(points))
    return (2, len(points) // 2), tuple(points)


E_TORSION = [
    INFINITY,
    CurvePoint.affine(0, 0),
    CurvePoint.affine(-3, 0),
    CurvePoint.affine(1, 0),
    CurvePoint.affine(-1, 2),
    CurvePoint.affine(-1, -2),
    CurvePoint.affine(3, 6),
    CurvePoint.affine(3, -6),
]


def field_torsion(d):
    """Torsion of E over Q(sqrt(d)); it never grows beyond the eight rational points."""
    return [P if P.is_infinity else CurvePoint(embed(P.x, d), embed(P.y, d)) for P in E_TORSION]

"""Four squares in arithmetic progression as points of E: y^2 = x(x+3)(x-1).

A progression a^2, b^2, c^2, e^2 satisfies a^2 + c^2 = 2b^2 and
b^2 + e^2 = 2c^2. The conic a^2 + 2e^2 = 3c^2 is parametrized by t and
the remaining condition becomes b^2 = 4t^4 - 8t^3 + 8t^2 + 4t + 1, a quartic
that `phi` maps birationally onto E.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

from django.core.exceptions import ValidationError

from .arith import (
    QuadraticElement,
    canonical_sign,
    embed,
    field_of,
    field_sqrt,
    format_element,
    sqrt_d,
)
from .curves import INFINITY, CurvePoint, curve_E, field_torsion, twist_curve

logger = logging.getLogger(__name__)


class Branch(enum.Enum):
    """The two points at infinity of the quartic model."""
    INFINITY_1 = 'inf1'
    INFINITY_2 = 'inf2'


def _num(x):
    return Fraction(x) if isinstance(x, int) else x


def conic_param(t):
    t = _num(t)
    return 2 * t * t - 4 * t - 1, 2 * t * t + 2 * t - 1, 2 * t * t + 1


def quartic_value(t):
    t = _num(t)
    return 4 * t ** 4 - 8 * t ** 3 + 8 * t ** 2 + 4 * t + 1


def quartic_b(t, d=None):
    """Square roots b of the quartic at t in the field of t (or Q(sqrt(d)))."""
    t = _num(t)
    if d is None:
        d = field_of(t)
    root = field_sqrt(quartic_value(t), d)
    if root is None:
        return []
    if not root:
        return [root]
    return [root, -root]


_BRANCH_IMAGES = {
    Branch.INFINITY_1: CurvePoint.affine(1, 0),
    Branch.INFINITY_2: CurvePoint.affine(-1, -2),
}


def phi(t, b=None):
    """Map a point (t, b) of the quartic, or a branch at infinity, onto E."""
    if isinstance(t, Branch):
        return _BRANCH_IMAGES[t]
    t, b = _num(t), _num(b)
    if b * b != quartic_value(t):
        raise ValidationError(f'(t, b) = ({format_element(t)}, {format_element(b)}) is not on the quartic.')
    if t == 0:
        return INFINITY if b == 1 else CurvePoint.affine(-1, 2)
    x = (1 + b + 2 * t) / (2 * t * t)
    y = (1 + b + 3 * t + b * t + 4 * t * t - 2 * t ** 3) / (2 * t ** 3)
    return CurvePoint(x, y)


def phi_inv(P):
    """Inverse of `phi`: a pair (t, b) or a `Branch`."""
    curve_E().check(P)
    if P.is_infinity:
        return Fraction(0), Fraction(1)
    x, y = P.x, P.y
    if x == -1:
        return (Fraction(0), Fraction(-1)) if y == 2 else Branch.INFINITY_2
    if x == 1:
        return Branch.INFINITY_1
    t = (x + y - 1) / (x * x - 1)
    b = (x ** 3 + 5 * x * x + 2 * x * y - 2 * y - x + 3) / ((x * x - 1) * (x + 1))
    return t, b


def _parts(x):
    """Integer triple (p, q, m) with x = (p + q*sqrt(d))/m."""
    if isinstance(x, QuadraticElement):
        return x.p, x.q, x.m
    x = Fraction(x)
    return x.numerator, 0, x.denominator


@dataclass(frozen=True)
class APQuadruple:
    """Projective quadruple [a, b, c, e] whose squares are in arithmetic progression."""
    a: object
    b: object
    c: object
    e: object

    def __post_init__(self):
        for name in ('a', 'b', 'c', 'e'):
            object.__setattr__(self, name, _num(getattr(self, name)))

    @property
    def coords(self):
        return self.a, self.b, self.c, self.e

    @property
    def d(self):
        return field_of(*self.coords)

    def squares(self):
        return tuple(x * x for x in self.coords)

    def relations_hold(self):
        a2, b2, c2, e2 = self.squares()
        return any(self.coords) and a2 + c2 == 2 * b2 and b2 + e2 == 2 * c2

    def scaled(self, k):
        return APQuadruple(*(k * x for x in self.coords))

    @staticmethod
    def _proportional(left, right):
        pivot = next((i for i, x in enumerate(left) if x), None)
        if pivot is None or not right[pivot]:
            return False
        ratio = right[pivot] / left[pivot]
        return all(r == ratio * l for l, r in zip(left, right))

    def same_point(self, other):
        """Equal as projective points."""
        return self._proportional(self.coords, other.coords)

    def same_squares(self, other):
        """Same four squares up to a common factor."""
        return self._proportional(self.squares(), other.squares())

    def canonical(self):
        """Integral representative with content 1 and canonical-positive first coordinate."""
        pivot = next(x for x in self.coords if x)
        d = self.d
        unit = self.scaled(1 / pivot)
        parts = [_parts(x) for x in unit.coords]
        common = lcm(*(m for _, _, m in parts))
        ints = [(p * (common // m), q * (common // m)) for p, q, m in parts]
        content = gcd(*(v for pair in ints for v in pair))
        if d == 1:
            coords = [Fraction(p // content) for p, _ in ints]
        else:
            coords = [QuadraticElement(p // content, q // content, 1, d) for p, q in ints]
        return APQuadruple(*coords)

    def __str__(self):
        return '[' + ','.join(format_element(x) for x in self.coords) + ']'


class APCheck(NamedTuple):
    is_ap: bool
    diff: object = None
    constant: bool = None


def verify_ap(q):
    if not q.relations_hold():
        return APCheck(False)
    a2, b2, _, _ = q.squares()
    return APCheck(True, b2 - a2, len(set(q.squares())) == 1)


@dataclass(frozen=True)
class APDescription:
    """A progression first^2, first^2 + diff, first^2 + 2*diff, first^2 + 3*diff."""
    first: object
    diff: object
    d: int = 1

    def terms(self):
        start = self.first * self.first
        return tuple(start + k * self.diff for k in range(4))

    def verify(self):
        return all(field_sqrt(term, self.d) is not None for term in self.terms())

    @property
    def is_constant(self):
        return not self.diff

    def __str__(self):
        return f'a={format_element(self.first)} r={format_element(self.diff)}'


def ap_description(q):
    check = verify_ap(q)
    if not check.is_ap:
        raise ValidationError(f'{q} is not a progression of four squares.')
    return APDescription(canonical_sign(q.a), check.diff, q.d)


# Sign patterns matched before the generic formula; the other two
# torsion points, (3, 6) and (0, 0), come out of the generic branch.
_PATTERN_POINTS = [
    (APQuadruple(-1, 1, 1, 1), INFINITY),
    (APQuadruple(-1, -1, 1, 1), CurvePoint.affine(-1, 2)),
    (APQuadruple(1, 1, 1, 1), CurvePoint.affine(3, -6)),
    (APQuadruple(1, -1, 1, 1), CurvePoint.affine(-3, 0)),
    (APQuadruple(-1, 1, -1, 1), CurvePoint.affine(1, 0)),
    (APQuadruple(-1, -1, -1, 1), CurvePoint.affine(-1, -2)),
]

_EXCEPTIONAL_QUADRUPLES = [
    (INFINITY, (-1, 1, 1, 1)),
    (CurvePoint.affine(-1, 2), (-1, -1, 1, 1)),
    (CurvePoint.affine(1, 0), (-1, 1, -1, 1)),
    (CurvePoint.affine(-1, -2), (-1, -1, -1, 1)),
]


def ap_to_point(q):
    if not q.relations_hold():
        raise ValidationError(f'{q} does not satisfy a^2 + c^2 = 2b^2 and b^2 + e^2 = 2c^2.')
    for pattern, point in _PATTERN_POINTS:
        if q.same_point(pattern):
            return point
    a, b, c, e = q.coords
    t = (e - c) / (a - c)
    scale = (2 * t * t + 1) / c
    return phi(t, scale * b)


def point_to_ap(P, d=None):
    """Quadruple of the progression attached to a point of E over Q or Q(sqrt(d))."""
    if d is None:
        d = field_of(P.x, P.y)
    for point, coords in _EXCEPTIONAL_QUADRUPLES:
        if P == point:
            return APQuadruple(*(embed(x, d) for x in coords))
    t, b = phi_inv(P)
    a, e, c = conic_param(t)
    return APQuadruple(a, b, c, -e)


def is_torsion_on_E(P, d=1):
    return P in field_torsion(d)


def lift_twist_point(P, d):
    """Send (X, Y) on y^2 = x(x+3d)(x-d) to (X/d, Y*sqrt(d)/d^2) on E over Q(sqrt(d))."""
    twist_curve(d).check(P)
    if P.is_infinity:
        return INFINITY
    return CurvePoint(embed(Fraction(P.x) / d, d), Fraction(P.y) / (d * d) * sqrt_d(d))


def twist_point_progression(P, d):
    """Progression over Q(sqrt(d)) built from a rational point of the twist E^d."""
    lifted = lift_twist_point(P, d)
    if is_torsion_on_E(lifted, d):
        raise ValidationError(f'{P} is a torsion point of E^{d}; its progression is constant.')
    quadruple = point_to_ap(lifted, d)
    logger.debug('point %s on E^%d lifts to %s, quadruple %s', P, d, lifted, quadruple)
    return ap_description(quadruple)

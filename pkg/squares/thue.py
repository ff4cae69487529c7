"""Pythagorean progressions of three squares extended by a fourth square.

For coprime a, b the squares (a^2-b^2-2ab)^2, (a^2+b^2)^2, (a^2-b^2+2ab)^2
are in arithmetic progression with difference 4n, n = ab(a^2-b^2). The next
term (a^2+b^2)^2 + 8n = F(a, b) is a square in Q(sqrt(F(a, b))).
"""
import logging
from dataclasses import dataclass
from math import gcd

from django.core.exceptions import ValidationError

from .arith import QuadraticElement, squarefree_decompose
from .parametrization import APQuadruple
from .utils import log_activity

logger = logging.getLogger(__name__)


def thue_eval(x, y):
    return (x * x + y * y) ** 2 + 8 * x * y * (x * x - y * y)


@dataclass(frozen=True)
class ThueSolution:
    x: int
    y: int
    d: int


def _solution_key(solution):
    return abs(solution.x), abs(solution.y), solution.x < 0, solution.y < 0


def thue_scan(dmax, box, include_rational=True):
    """Squarefree parts d, |d| <= dmax, of F(x, y) on |x|, |y| <= box, with their solutions."""
    found = {}
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            value = thue_eval(x, y)
            if value == 0:
                continue
            d, _ = squarefree_decompose(value)
            if abs(d) > dmax or (d == 1 and not include_rational):
                continue
            found.setdefault(d, []).append(ThueSolution(x, y, d))
    scan = [(d, sorted(found[d], key=_solution_key)) for d in sorted(found)]
    log_activity('computed', f'thue box={box}', f'fields={[d for d, _ in scan]}')
    return scan


@dataclass(frozen=True)
class PythagoreanAP:
    three_term: tuple
    fourth_sq: int
    field_d: int
    quadruple: APQuadruple


def _element(value, d):
    return value if d == 1 else QuadraticElement(value, 0, 1, d)


def pythagorean_ap(a, b):
    """Four-square progression over Q(sqrt(F(a, b))) in increasing order."""
    if a == 0 or b == 0 or abs(a) == abs(b) or gcd(a, b) != 1:
        raise ValidationError(f'(a, b) = ({a}, {b}) must be coprime, nonzero and a != +-b.')
    n = a * b * (a * a - b * b)
    s = a * a + b * b
    r1 = abs(a * a - b * b - 2 * a * b)
    r3 = abs(a * a - b * b + 2 * a * b)
    fourth = thue_eval(a, b)
    d, f = squarefree_decompose(fourth)
    root = f if d == 1 else QuadraticElement(0, f, 1, d)
    if n > 0:
        coords = [_element(r1, d), _element(s, d), _element(r3, d), root]
    else:
        coords = [root, _element(r3, d), _element(s, d), _element(r1, d)]
    three_term = tuple(sorted(v * v for v in (r1, s, r3)))
    return PythagoreanAP(three_term, fourth, d, APQuadruple(*coords))


def congruence_class_check(a, b):
    """F(a, b) = 1 mod 24 for coprime a, b of opposite parity."""
    if gcd(a, b) != 1 or (a - b) % 2 == 0:
        raise ValidationError(f'(a, b) = ({a}, {b}) must be coprime with opposite parity.')
    return thue_eval(a, b) % 24 == 1

"""Rank bounds for the twists E^d: y^2 = x(x+3d)(x-d).

A non-constant progression of four squares exists over Q(sqrt(d)) exactly
when rank E^d(Q) > 0. Lower bounds come from finding points (a naive scan
and a search on the 2-covering spaces), upper bounds from a complete
2-descent, which is available because all 2-torsion is rational.
"""
import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from django.core.exceptions import ValidationError
from django.db import models
from sympy import factorint, legendre_symbol, symbols
from sympy.ntheory.primetest import is_square
from sympy.solvers.diophantine.diophantine import diop_ternary_quadratic

from .arith import is_squarefree, rational_sqrt, squarefree_part
from .cache import CacheRecord
from .criteria import forms_bsd, forms_no, kan_test
from .curves import CurvePoint, torsion_subgroup, twist_curve
from .parametrization import twist_point_progression
from .utils import log_activity, run_partitioned, split_range

logger = logging.getLogger(__name__)

DEFAULT_HEIGHT = 10 ** 4
DEFAULT_BOX = 10 ** 3
CONIC_BOX = 60


def signed_squarefree_divisors(n):
    """All squarefree b (either sign) whose primes divide n, ordered by (|b|, b < 0)."""
    values = [1]
    for prime in sorted(factorint(abs(n))):
        values += [v * prime for v in values]
    return sorted(values + [-v for v in values], key=lambda b: (abs(b), b < 0))


def descent_map(P, curve):
    """Square class pair (x, x + A) of a rational point, with the usual fixes at 2-torsion."""
    if P.is_infinity:
        return 1, 1
    A, B = curve.A, curve.B
    x = Fraction(P.x)
    b1 = squarefree_part(A * B) if x == 0 else squarefree_part(x)
    b2 = squarefree_part(A * (A - B)) if x == -A else squarefree_part(x + A)
    return b1, b2


def _class_product(left, right):
    return squarefree_part(left[0] * right[0]), squarefree_part(left[1] * right[1])


def _span(group, generator):
    return group | {_class_product(g, generator) for g in group}


def _rank_of(size):
    """log2(size) - 2; the four torsion classes carry no rank."""
    return max(size.bit_length() - 3, 0)


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def _square_class(alpha, beta, c, k, p):
    """Is alpha*u^2 + beta a square for every u in c + p^k Z_p? None if undecided."""
    value = alpha * c * c + beta
    if value == 0:
        return None
    v = _valuation(value, p)
    precision = _valuation(alpha, p) + k + (1 if p == 2 and k >= 1 else 0)
    if precision - v < (3 if p == 2 else 1):
        return None
    if v % 2:
        return False
    unit = value // p ** v
    if p == 2:
        return unit % 8 == 1
    return legendre_symbol(unit % p, p) == 1


def _has_root(alpha, beta, c, k, p):
    """Hensel: alpha*u^2 + beta has a root in c + p^k Z_p."""
    value = alpha * c * c + beta
    if value == 0:
        return True
    slope = 2 * alpha * c
    if slope == 0:
        return False
    v, w = _valuation(value, p), _valuation(slope, p)
    return v > 2 * w and v - w >= k


def _ball_solvable(first, second, c, k, p, depth):
    s1 = _square_class(*first, c, k, p)
    s2 = _square_class(*second, c, k, p)
    if s1 is False or s2 is False:
        return False
    if s1 and s2:
        return True
    if s1 and _has_root(*second, c, k, p):
        return True
    if s2 and _has_root(*first, c, k, p):
        return True
    if k >= depth:
        return True
    step = p ** k
    return any(_ball_solvable(first, second, c + t * step, k + 1, p, depth) for t in range(p))


def _locally_solvable_at(b1, b2, A, B, p):
    """p-adic point on b2*(b1*u^2 + A) = square, b1*b2*(b1*u^2 + B) = square, or at u = infinity."""
    depth = _valuation(16 * (A * B * (A - B)) ** 2, p) + _valuation(b1 * b2, p) + 6
    u_chart = ((b1 * b2, A * b2), (b1 * b1 * b2, B * b1 * b2))
    if _ball_solvable(*u_chart, 0, 0, p, depth):
        return True
    w_chart = ((A * b2, b1 * b2), (B * b1 * b2, b1 * b1 * b2))
    return _ball_solvable(*w_chart, 0, 1, p, depth)


def _real_solvable(b1, b2, A, B):
    if b1 * b2 > 0 and b2 > 0:
        return True
    candidates = [Fraction(0)] + [s for s in (Fraction(-A, b1), Fraction(-B, b1)) if s >= 0]
    return any(b2 * (b1 * s + A) >= 0 and b1 * b2 * (b1 * s + B) >= 0 for s in candidates)


def selmer_classes(curve):
    """Classes (b1, b2), b1 | AB and b2 | A(A-B), whose covering space is everywhere locally solvable."""
    A, B = curve.A, curve.B
    primes = sorted({2} | set(factorint(abs(A * B * (A - B)))))
    classes = []
    for b1 in signed_squarefree_divisors(A * B):
        for b2 in signed_squarefree_divisors(A * (A - B)):
            if not _real_solvable(b1, b2, A, B):
                continue
            if all(_locally_solvable_at(b1, b2, A, B, p) for p in primes):
                classes.append((b1, b2))
    logger.debug('%s: %d locally solvable classes', curve, len(classes))
    return classes


def torsion_image(curve):
    return {descent_map(T, curve) for T in torsion_subgroup(curve)[1]}


def _on_conic(point, b1, b2, A):
    X, Y, Z = point
    return any(point) and b1 * X * X - b2 * Y * Y + A * Z * Z == 0


def _small_conic_point(b1, b2, A, size):
    for Z in range(size + 1):
        for X in range(size + 1):
            if gcd(X, Z) != 1:
                continue
            rest = b1 * X * X + A * Z * Z
            if rest % b2 == 0 and rest // b2 >= 0 and is_square(rest // b2):
                return X, isqrt(rest // b2), Z
    return None


def _conic_point(b1, b2, A, size=CONIC_BOX):
    """A point of b1*X^2 - b2*Y^2 + A*Z^2 = 0, small if one is near the origin."""
    point = _small_conic_point(b1, b2, A, size)
    if point is not None:
        return point
    X, Y, Z = symbols('X Y Z', integer=True)
    solution = diop_ternary_quadratic(b1 * X ** 2 - b2 * Y ** 2 + A * Z ** 2)
    if solution[0] is None:
        return None
    point = tuple(int(v) for v in solution)
    if not _on_conic(point, b1, b2, A):
        logger.warning('conic solver gave %s off b1=%d b2=%d A=%d', point, b1, b2, A)
        return None
    return point


def _directions(size):
    for s in range(-size, size + 1):
        yield s, size
    for t in range(size):
        yield size, t
        yield -size, t


def search_covering_space(b1, b2, curve, box):
    """Rational point of class (b1, b2) found on the covering space, or None.

    The first quadric b1*z1^2 - b2*z2^2 + A*z^2 = 0 is a conic; its rational
    points are walked through the lines from one known point, and each is
    tested against the second quadric.
    """
    start = _conic_point(b1, b2, curve.A)
    if start is None:
        return None
    X0, Y0, Z0 = start
    coeffs = (b1, -b2, curve.A)
    for size in range(1, box + 1):
        for s, t in _directions(size):
            if gcd(s, t) != 1:
                continue
            if Z0:
                V = (s, t, 0)
            elif X0:
                V = (0, s, t)
            else:
                V = (s, 0, t)
            quad = sum(k * v * v for k, v in zip(coeffs, V))
            bilinear = sum(k * p0 * v for k, p0, v in zip(coeffs, start, V))
            z1, _, z = (quad * p0 - 2 * bilinear * v for p0, v in zip(start, V))
            if z == 0:
                continue
            if not is_square((b1 * z1 * z1 + curve.B * z * z) * b1 * b2):
                continue
            x = Fraction(b1 * z1 * z1, z * z)
            y = rational_sqrt(curve.rhs(x))
            if y is None:
                continue
            return CurvePoint(x, y)
    return None


@dataclass(frozen=True)
class DescentResult:
    rank_lo: int
    rank_hi: int
    witness: CurvePoint = None
    surviving_pairs: int = 0
    generators: tuple = ()
    classes: tuple = ()


def two_descent(curve, box=DEFAULT_BOX, search=True, classes=None):
    """Rank bounds from the 2-Selmer group and points found on its covering spaces."""
    if curve.d != 1:
        raise ValidationError('2-descent runs over Q only.')
    if classes is None:
        classes = selmer_classes(curve)
    group = torsion_image(curve)
    generators = []
    if search:
        for cls in classes:
            if len(group) >= len(classes):
                break
            if cls in group:
                continue
            point = search_covering_space(*cls, curve, box)
            if point is None:
                logger.debug('%s: no point of class %s within box %d', curve, cls, box)
                continue
            generators.append(point)
            group = _span(group, cls)
    return DescentResult(
        rank_lo=_rank_of(len(group)),
        rank_hi=_rank_of(len(classes)),
        witness=generators[0] if generators else None,
        surviving_pairs=len(classes),
        generators=tuple(generators),
        classes=tuple(classes),
    )


def _candidates(b1_values, height_bound, e):
    """Numerators m = b1*u^2 with |m| <= height_bound*e^2, by |m| then positive first."""
    limit = height_bound * e * e
    streams = [
        (b1 * u * u for u in range(1, isqrt(limit // abs(b1)) + 1))
        for b1 in b1_values
    ]
    return heapq.merge(*streams, key=lambda m: (abs(m), m < 0))


def _scan_chunk(A, B, b1_values, height_bound, e_lo, e_hi, torsion_x):
    for e in range(e_lo, e_hi + 1):
        e2 = e * e
        for m in _candidates(b1_values, height_bound, e):
            if gcd(m, e) != 1 or (e == 1 and m in torsion_x):
                continue
            v = m * (m + A * e2) * (m + B * e2)
            if v > 0 and is_square(v):
                return m, e
    return None


def naive_point_search(curve, height_bound, workers=1):
    """First non-torsion point x = m/e^2, gcd(m, e) = 1, e^2 <= height_bound, |m| <= height_bound*e^2.

    Ordered by e, then |m|, positive m first; y > 0. Only numerators in the
    square classes b1*u^2 (b1 | AB squarefree) can give points. Chunks of
    the e-range may run in worker processes; the first hit in chunk order
    is kept.
    """
    A, B = curve.A, curve.B
    b1_values = signed_squarefree_divisors(A * B)
    torsion_x = frozenset(int(P.x) for P in torsion_subgroup(curve)[1] if not P.is_infinity)
    chunks = [(A, B, b1_values, height_bound, lo, hi, torsion_x)
              for lo, hi in split_range(1, isqrt(height_bound), workers)]
    for hit in run_partitioned(_scan_chunk, chunks, workers):
        if hit is not None:
            m, e = hit
            x = Fraction(m, e * e)
            return CurvePoint(x, rational_sqrt(curve.rhs(x)))
    return None


class VerdictKind(models.TextChoices):
    YES = 'YES', 'yes'
    NO = 'NO', 'no'
    YES_UNDER_BSD = 'YES_BSD', 'bsd-yes'
    UNKNOWN = 'UNKNOWN', '?'


@dataclass(frozen=True)
class Verdict:
    kind: str
    evidence: str
    ap: object = None
    point: CurvePoint = None
    rank_lo: int = None
    rank_hi: int = None

    def record_line(self, d):
        line = f'd={d} verdict={self.kind.value} evidence={self.evidence}'
        if self.ap is not None:
            line += f' {self.ap}'
        return line


def _decide(d, rank_lo, rank_hi, witness):
    bounds = {'rank_lo': rank_lo, 'rank_hi': rank_hi}
    if rank_hi == 0:
        return Verdict(VerdictKind.NO, 'descent-rank-0', **bounds)
    tag = forms_no(d)
    if tag:
        return Verdict(VerdictKind.NO, tag, **bounds)
    if witness is not None:
        ap = twist_point_progression(witness, d)
        return Verdict(VerdictKind.YES, 'point-found', ap=ap, point=witness, **bounds)
    if kan_test(abs(d)):
        return Verdict(VerdictKind.UNKNOWN, 'kan-23', **bounds)
    tag = forms_bsd(d)
    if tag:
        return Verdict(VerdictKind.YES_UNDER_BSD, tag, **bounds)
    return Verdict(VerdictKind.UNKNOWN, 'bound-exceeded', **bounds)


def field_rank_positive(d, height=DEFAULT_HEIGHT, box=DEFAULT_BOX, descent_on=True, workers=1, cache=None):
    """Verdict on a non-constant progression of four squares over Q(sqrt(d))."""
    if d in (0, 1) or not is_squarefree(d):
        raise ValidationError(f'd={d} must be squarefree and different from 0 and 1.')
    curve = twist_curve(d)
    if cache is not None and descent_on:
        record = cache.lookup(d, height, box)
        if record is not None:
            log_activity('cached', f'd={d}')
            return _decide(d, record.rank_lo, record.rank_hi, record.witness)

    rank_lo, rank_hi, witness = 0, None, None
    result = None
    if descent_on:
        result = two_descent(curve, box, search=False)
        rank_hi = result.rank_hi
    if rank_hi != 0 and not forms_no(d):
        witness = naive_point_search(curve, height, workers)
        if witness is None and result is not None:
            result = two_descent(curve, box, classes=result.classes)
            witness = result.witness
            rank_lo = result.rank_lo
        elif witness is not None:
            rank_lo = 1

    log_activity('computed', f'd={d}', f'rank_lo={rank_lo} rank_hi={rank_hi} witness={witness}')
    if cache is not None and descent_on:
        cache.store(CacheRecord(d, rank_lo, rank_hi, height, box, witness))
    return _decide(d, rank_lo, rank_hi, witness)

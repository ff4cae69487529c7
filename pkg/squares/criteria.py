"""Congruent-number style criteria for the twists of E.

Representation counts of pairs of positive ternary forms decide whether n
is a theta-congruent number (unconditionally in one direction, under BSD in
the other). Kan's theorem settles primes p = 23 mod 24. Everything else
falls back to the rank engine in `squares.descent`.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from django.core.exceptions import ValidationError
from django.db import models
from sympy import isprime

from .arith import is_squarefree, rational_sqrt
from .curves import PI_3, TWO_PI_3, theta_curve, torsion_subgroup
from .utils import log_activity

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TernaryForm:
    """aX^2 + bY^2 + cZ^2 + yz*YZ + xz*XZ + xy*XY with integer coefficients."""
    a: int
    b: int
    c: int
    yz: int = 0
    xz: int = 0
    xy: int = 0

    def __post_init__(self):
        if not all(minor > 0 for minor in self.minors()):
            raise ValidationError(f'{self} is not positive definite.')

    def minors(self):
        a, b, c = Fraction(self.a), Fraction(self.b), Fraction(self.c)
        h_yz, h_xz, h_xy = Fraction(self.yz, 2), Fraction(self.xz, 2), Fraction(self.xy, 2)
        second = a * b - h_xy * h_xy
        det = (a * (b * c - h_yz * h_yz)
               - h_xy * (h_xy * c - h_yz * h_xz)
               + h_xz * (h_xy * h_yz - b * h_xz))
        return a, second, det

    def __call__(self, x, y, z):
        return (self.a * x * x + self.b * y * y + self.c * z * z
                + self.yz * y * z + self.xz * x * z + self.xy * x * y)

    def __str__(self):
        terms = [(self.a, 'X^2'), (self.b, 'Y^2'), (self.c, 'Z^2'),
                 (self.yz, 'YZ'), (self.xz, 'XZ'), (self.xy, 'XY')]
        text = ''
        for coeff, monomial in terms:
            if not coeff:
                continue
            sign = '-' if coeff < 0 else ('+' if text else '')
            magnitude = '' if abs(coeff) == 1 else str(abs(coeff))
            text += f'{sign}{magnitude}{monomial}'
        return text


def count_representations(form, n):
    """Number of integer triples (X, Y, Z) with form(X, Y, Z) = n.

    Completing squares gives form >= c2*Z^2 and, for fixed Z,
    form >= b1*(Y + k*Z)^2 + c2*Z^2; X is then solved exactly.
    """
    if n < 1:
        raise ValidationError(f'n={n} must be a positive integer.')
    a, second, det = form.minors()
    c2 = det / second
    b1 = second / a
    k = (Fraction(form.yz, 2) - Fraction(form.xz * form.xy, 4) / a) / b1
    count = 0
    z_max = isqrt(int(n / c2))
    for z in range(-z_max, z_max + 1):
        rest = (n - c2 * z * z) / b1
        if rest < 0:
            continue
        center = -k * z
        spread = isqrt(int(rest)) + 1
        for y in range(int(center) - spread - 1, int(center) + spread + 2):
            lin = form.xy * y + form.xz * z
            const = form.b * y * y + form.c * z * z + form.yz * y * z - n
            disc = lin * lin - 4 * form.a * const
            if disc < 0:
                continue
            root = isqrt(disc)
            if root * root != disc:
                continue
            for num in {-lin + root, -lin - root}:
                if num % (2 * form.a) == 0:
                    count += 1
    return count


FORMS = {
    'yoshida-2pi3-a': TernaryForm(1, 3, 144),
    'yoshida-2pi3-b': TernaryForm(3, 9, 16),
    'yoshida-pi3-a': TernaryForm(1, 12, 15, yz=12),
    'yoshida-pi3-b': TernaryForm(3, 4, 13, yz=4),
    'ono-a': TernaryForm(1, 2, 12),
    'ono-b': TernaryForm(2, 3, 4),
}


class CriterionVerdict(models.TextChoices):
    UNCONDITIONAL_NO = 'unconditional-no', 'unconditional no'
    CONDITIONAL_YES_BSD = 'conditional-yes-bsd', 'yes under BSD'
    NOT_APPLICABLE = 'not-applicable', 'not applicable'


@dataclass(frozen=True)
class CriterionOutcome:
    applicable: bool
    counts: tuple = None
    verdict: str = CriterionVerdict.NOT_APPLICABLE

    @property
    def fired_no(self):
        return self.verdict == CriterionVerdict.UNCONDITIONAL_NO

    @property
    def fired_bsd(self):
        return self.verdict == CriterionVerdict.CONDITIONAL_YES_BSD


def _compare(first, second, n):
    counts = (count_representations(FORMS[first], n), count_representations(FORMS[second], n))
    verdict = (CriterionVerdict.CONDITIONAL_YES_BSD if counts[0] == counts[1]
               else CriterionVerdict.UNCONDITIONAL_NO)
    log_activity('computed', f'{first}/{second}', f'n={n} counts={counts}')
    return CriterionOutcome(True, counts, verdict)


def _require_squarefree(n):
    if n < 1 or not is_squarefree(n):
        raise ValidationError(f'n={n} must be a squarefree positive integer.')


def yoshida_2pi3(n):
    _require_squarefree(n)
    if n % 24 not in (1, 7, 13):
        return CriterionOutcome(False)
    return _compare('yoshida-2pi3-a', 'yoshida-2pi3-b', n)


def yoshida_pi3(n):
    _require_squarefree(n)
    if n == 1 or n % 24 not in (1, 7, 19):
        return CriterionOutcome(False)
    return _compare('yoshida-pi3-a', 'yoshida-pi3-b', n)


def ono_6n_discordant(n):
    """Counts deciding whether (6n, -18n) is discordant, i.e. E^{-6n} has rank 0."""
    _require_squarefree(n)
    if n % 2 == 0:
        raise ValidationError(f'n={n} must be odd.')
    return _compare('ono-a', 'ono-b', n)


def kan_test(n):
    """Primes p = 23 mod 24 are theta-congruent for theta = pi/3 and 2pi/3."""
    return n % 24 == 23 and isprime(n)


CONJECTURE_CLASSES = {
    PI_3: frozenset({11, 13, 17, 23}),
    TWO_PI_3: frozenset({5, 17, 19, 23}),
}


def conjecture1_class(n, angle):
    _require_squarefree(n)
    return n % 24 in CONJECTURE_CLASSES[angle]


def forms_no(d):
    """Evidence tag when a form criterion proves rank E^d(Q) = 0, else None."""
    n = abs(d)
    if d > 0:
        if yoshida_pi3(n).fired_no:
            return 'yoshida-forms'
        return None
    if yoshida_2pi3(n).fired_no:
        return 'yoshida-forms'
    if n % 6 == 0 and (n // 6) % 2 and ono_6n_discordant(n // 6).fired_no:
        return 'ono-forms'
    return None


def forms_bsd(d):
    """Evidence tag when positive rank of E^d follows from BSD, else None."""
    n = abs(d)
    if d > 0:
        if yoshida_pi3(n).fired_bsd:
            return 'yoshida-forms'
    else:
        if yoshida_2pi3(n).fired_bsd:
            return 'yoshida-forms'
        if n % 6 == 0 and (n // 6) % 2 and ono_6n_discordant(n // 6).fired_bsd:
            return 'ono-forms'
    if conjecture1_class(n, PI_3 if d > 0 else TWO_PI_3):
        return 'conjecture-1'
    return None


def concordant_witness_search(M, N, bound):
    """First (x, y, z, t) with x^2 + M*y^2 = t^2, x^2 + N*y^2 = z^2, ordered by (y, x)."""
    if M == N or M * N == 0:
        raise ValidationError(f'(M, N) = ({M}, {N}) must be distinct and nonzero.')
    for y in range(1, bound + 1):
        for x in range(1, bound + 1):
            if gcd(x, y) != 1:
                continue
            t = rational_sqrt(x * x + M * y * y)
            z = rational_sqrt(x * x + N * y * y)
            if t is None or z is None or z * t == 0:
                continue
            return x, y, int(z), int(t)
    return None


TABLE_COLUMNS = [(1, 1), (2, 1), (3, 1), (6, 1), (1, -1), (2, -1), (3, -1), (6, -1)]


def column_label(multiplier, sign):
    return ('-' if sign < 0 else '') + ('p' if multiplier == 1 else f'{multiplier}p')


def table_entry(p, multiplier, sign, **engine_options):
    """Verdict for d = sign*multiplier*p, one cell of the classification table row of p."""
    from .descent import field_rank_positive

    if p < 5 or not isprime(p):
        raise ValidationError(f'p={p} must be a prime >= 5.')
    if (multiplier, sign) not in TABLE_COLUMNS:
        raise ValidationError(f'({multiplier}, {sign}) is not a table column.')
    return field_rank_positive(sign * multiplier * p, **engine_options)


@dataclass(frozen=True)
class ThetaStatus:
    n: int
    angle: object
    label: str
    evidence: str

    def __str__(self):
        return f'n={self.n} angle={self.angle} verdict={self.label} evidence={self.evidence}'


def theta_status(n, angle, **engine_options):
    """Whether n is theta-congruent, theta in {pi/3, 2pi/3}.

    n is theta-congruent exactly when E_{n,theta} has a point of order > 2;
    E_{n,pi/3} is the twist E^n and E_{n,2pi/3} is E^{-n}.
    """
    from .descent import field_rank_positive

    _require_squarefree(n)
    if n in (1, 2, 3, 6):
        curve = theta_curve(n, angle)
        _, points = torsion_subgroup(curve)
        if len(points) > 4:
            return ThetaStatus(n, angle, 'yes', 'torsion')
    d = n if angle == PI_3 else -n
    if d == 1:
        return ThetaStatus(n, angle, 'no', 'fermat')
    verdict = field_rank_positive(d, **engine_options)
    return ThetaStatus(n, angle, verdict.kind.label, verdict.evidence)

"""Translate between points of E and progressions of four squares."""
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand

from squares.arith import embed, field_of, parse_element
from squares.curves import INFINITY, CurvePoint
from squares.mixins import ValidatedCommandMixin
from squares.parametrization import APQuadruple, ap_to_point, point_to_ap, verify_ap


class Command(ValidatedCommandMixin, BaseCommand):
    help = 'Map a point of E to its progression (to-ap X Y) or a progression to its point (to-point a b c e)'

    def add_arguments(self, parser):
        parser.add_argument('direction', choices=['to-ap', 'to-point'])
        parser.add_argument('coordinates', nargs='+')
        parser.add_argument('--field', type=int, default=1, help='d of the working field Q(sqrt(d))')

    def handle(self, *args, **options):
        self.configure_logging(options)
        d = options['field']
        try:
            raw = options['coordinates']
            values = [] if raw == ['inf'] else [parse_element(text, d) for text in raw]
            if options['direction'] == 'to-ap':
                self._to_ap(values, raw, d)
            else:
                self._to_point(values)
        except (ValidationError, ZeroDivisionError) as e:
            self.fail(e)

    def _to_ap(self, values, raw, d):
        if raw == ['inf']:
            point = INFINITY
        elif len(values) == 2:
            point = CurvePoint(*values)
        else:
            raise ValidationError('to-ap takes two coordinates X Y, or inf.')
        quadruple = point_to_ap(point, d).canonical()
        check = verify_ap(quadruple)
        self.stdout.write(
            f'ap={quadruple} constant={"yes" if check.constant else "no"}'
        )

    def _to_point(self, values):
        if len(values) != 4:
            raise ValidationError('to-point takes four coordinates a b c e.')
        d = field_of(*values)
        quadruple = APQuadruple(*(embed(v, d) for v in values))
        self.stdout.write(f'point={ap_to_point(quadruple)}')

"""Search F(x, y) = d*f^2 for small |d| and print the progressions they give."""
from django.conf import settings
from django.core.management.base import BaseCommand

from squares.arith import format_element
from squares.forms import ThueForm
from squares.mixins import ValidatedCommandMixin
from squares.parametrization import verify_ap
from squares.thue import pythagorean_ap, thue_scan


class Command(ValidatedCommandMixin, BaseCommand):
    help = 'List the quadratic fields Q(sqrt(d)), |d| <= dmax, reached by F(x, y) on a box'

    def add_arguments(self, parser):
        defaults = settings.SQUARES
        parser.add_argument('--dmax', type=int, default=defaults['THUE_DMAX'])
        parser.add_argument('--box', type=int, default=defaults['THUE_BOX'])

    def handle(self, *args, **options):
        self.configure_logging(options)
        data = self.validated(ThueForm, {'dmax': options['dmax'], 'box': options['box']})
        for d, solutions in thue_scan(data['dmax'], data['box'], include_rational=False):
            first = solutions[0]
            ap = pythagorean_ap(first.x, first.y)
            check = verify_ap(ap.quadruple)
            self.stdout.write(
                f'd={d} x={first.x} y={first.y} solutions={len(solutions)} '
                f'ap={ap.quadruple} diff={format_element(check.diff)}'
            )

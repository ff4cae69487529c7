"""Find a point on E^d and print the progression of four squares it gives."""
from django.core.management.base import BaseCommand, CommandError

from squares.curves import twist_curve
from squares.descent import naive_point_search, two_descent
from squares.forms import FindApForm
from squares.mixins import SearchOptionsMixin
from squares.parametrization import twist_point_progression


class Command(SearchOptionsMixin, BaseCommand):
    help = 'Search for a point on the twist E^d and print the progression it yields'

    def add_arguments(self, parser):
        parser.add_argument('d', type=int)
        self.add_search_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options)
        data = self.validated(FindApForm, {'d': options['d'], **self.search_data(options)})
        d = data['d']
        curve = twist_curve(d)
        point = naive_point_search(curve, data['height'], data['workers'])
        if point is None and data['descent'] == 'on':
            point = two_descent(curve, data['box']).witness
        if point is None:
            self.stdout.write(f'd={d} point=none')
            raise CommandError(f'd={d}: no point found within the search bounds.', returncode=2)
        self.stdout.write(f'd={d} point={point} {twist_point_progression(point, d)}')

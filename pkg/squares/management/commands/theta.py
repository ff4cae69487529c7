"""Decide whether n is a pi/3- or 2pi/3-congruent number."""
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from squares.criteria import theta_status
from squares.curves import ANGLES
from squares.forms import ThetaForm
from squares.mixins import SearchOptionsMixin


class Command(SearchOptionsMixin, BaseCommand):
    help = 'Decide whether n is theta-congruent for theta = pi/3 or 2pi/3'

    def add_arguments(self, parser):
        parser.add_argument('n', type=int)
        parser.add_argument('--angle', default='pi/3', help='pi/3 or 2pi/3')
        self.add_search_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options)
        data = self.validated(ThetaForm, {'n': options['n'], 'angle': options['angle'], **self.search_data(options)})
        cache = self.open_cache(data)
        try:
            status = theta_status(data['n'], ANGLES[data['angle']], **self.engine_options(data, cache))
        except ValidationError as e:
            self.fail(e)
        self.stdout.write(str(status))
        self.write_stats(options, cache)
        if status.label == '?':
            raise CommandError(f'n={data["n"]}: search bounds exceeded, raise --height or --box.', returncode=2)

"""Reproduce the classification table of Q(sqrt(d)) for d = +-p, +-2p, +-3p, +-6p."""
from django.conf import settings
from django.core.exceptions import ImproperlyConfigured, ValidationError
from django.core.management.base import BaseCommand, CommandError
from sympy import primerange

from squares.criteria import TABLE_COLUMNS, column_label, table_entry
from squares.export import export_table
from squares.forms import TableForm
from squares.mixins import SearchOptionsMixin
from squares.utils import log_activity


class Command(SearchOptionsMixin, BaseCommand):
    help = 'Print one row of eight cells (yes, no, bsd-yes, ?) per prime 5 <= p <= pmax'

    def add_arguments(self, parser):
        parser.add_argument('--pmax', type=int, default=settings.SQUARES['TABLE_PMAX'])
        parser.add_argument('--export', default='', help='Also write the table to this .xlsx file')
        self.add_search_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options)
        data = self.validated(
            TableForm, {'pmax': options['pmax'], 'export': options['export'], **self.search_data(options)}
        )
        cache = self.open_cache(data)
        engine = self.engine_options(data, cache)

        self.stdout.write('p p%24 ' + ' '.join(column_label(m, s) for m, s in TABLE_COLUMNS))
        rows = []
        for p in primerange(5, data['pmax'] + 1):
            try:
                cells = [table_entry(p, m, s, **engine).kind.label for m, s in TABLE_COLUMNS]
            except ValidationError as e:
                self.fail(e)
            rows.append((p, cells))
            log_activity('computed', f'row p={p}', ' '.join(cells))
            self.stdout.write(f'{p} {p % 24} ' + ' '.join(cells))
        self.write_stats(options, cache)

        if data['export']:
            try:
                export_table(rows, data['export'])
            except ImproperlyConfigured as e:
                raise CommandError(str(e), returncode=1)
            self.stdout.write(self.style.SUCCESS(f'Table exported to {data["export"]}'))

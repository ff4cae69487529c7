"""Decide whether Q(sqrt(d)) contains a non-constant progression of four squares."""
from django.core.exceptions import ValidationError
from django.core.management.base import BaseCommand, CommandError

from squares.arith import squarefree_decompose
from squares.descent import VerdictKind, field_rank_positive
from squares.forms import ClassifyForm
from squares.mixins import SearchOptionsMixin


class Command(SearchOptionsMixin, BaseCommand):
    help = 'Classify Q(sqrt(d)): YES with a progression, NO with its proof, or YES_BSD/UNKNOWN'

    def add_arguments(self, parser):
        parser.add_argument('d', type=int)
        self.add_search_arguments(parser)

    def handle(self, *args, **options):
        self.configure_logging(options)
        data = self.validated(ClassifyForm, {'d': options['d'], **self.search_data(options)})
        d, factor = squarefree_decompose(data['d'])
        if factor != 1:
            self.stdout.write(f'warning: d={data["d"]} reduced to its squarefree part {d}')
        if d == 1:
            self.stdout.write('d=1 verdict=NO evidence=fermat')
            raise CommandError('Q(sqrt(d)) = Q has no non-constant progression of four squares.', returncode=1)

        cache = self.open_cache(data)
        try:
            verdict = field_rank_positive(d, **self.engine_options(data, cache))
        except ValidationError as e:
            self.fail(e)
        self.stdout.write(verdict.record_line(d))
        self.write_stats(options, cache)
        if verdict.kind == VerdictKind.UNKNOWN:
            raise CommandError(f'd={d}: search bounds exceeded, raise --height or --box.', returncode=2)

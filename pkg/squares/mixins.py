"""Mixins shared by the management commands."""
import logging

from django.conf import settings
from django.core.exceptions import ValidationError
from django.core.management.base import CommandError

from .cache import RankCache


def _errors_text(errors):
    return '; '.join(
        f'{field}: {" ".join(messages)}' if field != '__all__' else ' '.join(messages)
        for field, messages in errors.items()
    )


class ValidatedCommandMixin:
    """Validate options through a form; map domain errors to exit code 1."""

    def configure_logging(self, options):
        if options.get('verbosity', 1) >= 2:
            logging.getLogger('squares').setLevel(logging.DEBUG)

    def validated(self, form_class, data):
        form = form_class(data=data)
        if not form.is_valid():
            raise CommandError(_errors_text(form.errors), returncode=1)
        return form.cleaned_data

    def fail(self, error):
        if isinstance(error, ValidationError):
            raise CommandError(' '.join(error.messages), returncode=1) from error
        raise CommandError(str(error), returncode=1) from error


class SearchOptionsMixin(ValidatedCommandMixin):
    """Add --height/--box/--descent/--cache/--stats/--workers to a command."""

    def add_search_arguments(self, parser):
        defaults = settings.SQUARES
        parser.add_argument('--height', type=int, default=defaults['HEIGHT'],
                            help='Naive search height bound')
        parser.add_argument('--box', type=int, default=defaults['DESCENT_BOX'],
                            help='Covering-space search box')
        parser.add_argument('--descent', default='on', help='on|off')
        parser.add_argument('--cache', default=defaults['CACHE_PATH'], help='Rank cache file')
        parser.add_argument('--stats', action='store_true', help='Report cache hits and misses')
        parser.add_argument('--workers', type=int, default=defaults['WORKERS'],
                            help='Worker processes for the naive search')

    def search_data(self, options):
        return {key: options.get(key) for key in ('height', 'box', 'descent', 'cache', 'workers')}

    def open_cache(self, data):
        if not data.get('cache'):
            return None
        try:
            return RankCache(data['cache'])
        except ValidationError as e:
            self.fail(e)

    def engine_options(self, data, cache):
        return {
            'height': data['height'],
            'box': data['box'],
            'descent_on': data['descent'] == 'on',
            'workers': data['workers'],
            'cache': cache,
        }

    def write_stats(self, options, cache):
        if not options.get('stats'):
            return
        hits, misses = (cache.hits, cache.misses) if cache else (0, 0)
        self.stdout.write(f'stats cache_hits={hits} cache_misses={misses}')

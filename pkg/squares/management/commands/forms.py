"""Representation counts of the named ternary forms."""
from django.core.management.base import BaseCommand, CommandError

from squares.criteria import FORMS, count_representations
from squares.forms import FormsCountForm
from squares.mixins import ValidatedCommandMixin


class Command(ValidatedCommandMixin, BaseCommand):
    help = 'List the named ternary forms, or count representations of n by one of them'

    def add_arguments(self, parser):
        parser.add_argument('action', choices=['count', 'list'])
        parser.add_argument('form_id', nargs='?')
        parser.add_argument('n', nargs='?', type=int)

    def handle(self, *args, **options):
        self.configure_logging(options)
        if options['action'] == 'list':
            for form_id, form in FORMS.items():
                self.stdout.write(f'{form_id} {form}')
            return
        if options['form_id'] is None or options['n'] is None:
            raise CommandError('Usage: forms count <form-id> <n>', returncode=1)
        data = self.validated(FormsCountForm, {'form_id': options['form_id'], 'n': options['n']})
        self.stdout.write(str(count_representations(FORMS[data['form_id']], data['n'])))

from django.apps import AppConfig


class SquaresConfig(AppConfig):
    name = 'squares'
    verbose_name = 'Four squares in arithmetic progression'

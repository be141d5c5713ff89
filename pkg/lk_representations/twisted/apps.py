from django.apps import AppConfig


class TwistedConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'twisted'

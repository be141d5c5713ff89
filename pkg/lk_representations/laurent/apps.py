from django.apps import AppConfig


class LaurentConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'laurent'

from django.apps import AppConfig


class LkcoreConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'lkcore'

from django.apps import AppConfig


class RootsysConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'rootsys'

from django.apps import AppConfig


class FaithcheckConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'faithcheck'

"""
Configuración WSGI del proyecto lk_representations (sólo para el admin).
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'lk_representations.settings')

application = get_wsgi_application()

from functools import lru_cache

from negocio.configuracion import Configuracion
from negocio.ServicioAutomorfismos import ServicioAutomorfismos
from negocio.ServicioIdeales import ServicioIdeales
from negocio.ServicioStafford import ServicioStafford


@lru_cache(maxsize=None)
def get_services(config: Configuracion = Configuracion()):
    """
    Inicializa y devuelve los servicios de la aplicación. La caché evita
    repetir las búsquedas de pares característicos entre comandos con la
    misma configuración.
    """
    ideales = ServicioIdeales(config)
    automorfismos = ServicioAutomorfismos(config, ideales)
    stafford = ServicioStafford(config, ideales, automorfismos)
    return ideales, automorfismos, stafford

import logging
import os
import shlex

import pandas as pd

logger = logging.getLogger(__name__)


class GuardarReportes:
    """
    Persistencia de resultados en disco: reportes JSON, libros de Excel y
    lectura de los archivos golden.
    """
    def __init__(self, directorio_base: str = '.'):
        """
        Args:
            directorio_base (str): carpeta contra la que se resuelven las rutas relativas.
        """
        self.directorio_base = directorio_base

    def _ruta(self, ruta: str) -> str:
        return ruta if os.path.isabs(ruta) else os.path.join(self.directorio_base, ruta)

    def guardar_json(self, contenido: str, ruta: str) -> tuple[bool, str]:
        """
        Guarda un ReportDocument ya serializado.

        Returns:
            tuple[bool, str]: (True, mensaje) si se guardó, (False, error) si no.
        """
        if not contenido:
            msg = "Error: no hay contenido para guardar."
            logger.error(msg)
            return False, msg
        ruta_completa = self._ruta(ruta)
        try:
            os.makedirs(os.path.dirname(ruta_completa) or '.', exist_ok=True)
            with open(ruta_completa, 'w', encoding='utf-8', newline='\n') as f:
                f.write(contenido)
            msg = f"Reporte guardado en '{ruta_completa}'."
            logger.info(msg)
            return True, msg
        except OSError as e:
            msg = f"ERROR: no se pudo guardar el reporte. Razón: {e}"
            logger.error(msg)
            return False, msg

    def guardar_excel(self, contenido: bytes, ruta: str) -> tuple[bool, str]:
        """Escribe el libro generado por exportador_excel."""
        if not contenido:
            msg = "Error: el libro de Excel está vacío."
            logger.error(msg)
            return False, msg
        ruta_completa = self._ruta(ruta)
        try:
            os.makedirs(os.path.dirname(ruta_completa) or '.', exist_ok=True)
            with open(ruta_completa, 'wb') as f:
                f.write(contenido)
            msg = f"Libro de Excel guardado en '{ruta_completa}'."
            logger.info(msg)
            return True, msg
        except OSError as e:
            msg = f"ERROR: no se pudo guardar el libro. Razón: {e}"
            logger.error(msg)
            return False, msg

    def validar_integridad_excel(self, ruta: str) -> bool:
        """True si pandas puede leer todas las hojas del libro."""
        try:
            pd.read_excel(self._ruta(ruta), sheet_name=None)
            return True
        except Exception as e:
            logger.warning("Fallo en la validación de integridad de '%s': %s", ruta, e)
            return False

    def leer_golden(self, ruta: str) -> tuple[list[str], str]:
        """
        Lee un archivo golden: la primera línea es `$ weylpd <argumentos>` y el
        resto la salida esperada, byte a byte.

        Returns:
            tuple[list[str], str]: argumentos del comando y salida esperada.
        """
        with open(self._ruta(ruta), encoding='utf-8', newline='') as f:
            cabecera, _, esperado = f.read().partition('\n')
        if not cabecera.startswith('$ '):
            raise ValueError(f"El archivo golden '{ruta}' no empieza por '$ '.")
        argumentos = shlex.split(cabecera[2:])
        if argumentos and argumentos[0] == 'weylpd':
            argumentos = argumentos[1:]
        return argumentos, esperado

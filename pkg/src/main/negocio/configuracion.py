from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Configuracion:
    """
    Parámetros de las búsquedas. Se construye desde la CLI; los valores por
    defecto sirven para la librería y las pruebas.

    Atributos:
        bound_cap: cota de ∂-grado para las búsquedas por ansatz. None usa
            4·codim + 8.
        image_max_steps: incrementos de la rebanada antes de declarar la
            imagen inestable.
        certify_ef: calcula e*f de la imagen dentro del certificado.
        seed: semilla del muestreo aleatorio de is_automorphism_check.
    """
    bound_cap: Optional[int] = None
    image_max_steps: int = 12
    certify_ef: bool = True
    seed: int = 0

    def cota_busqueda(self, codim: int) -> int:
        if self.bound_cap is not None:
            return self.bound_cap
        return 4 * codim + 8

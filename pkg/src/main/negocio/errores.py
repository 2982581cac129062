class ErrorWeyl(Exception):
    """
    Error base de la librería. Cada subclase lleva un código estable que la
    CLI imprime y que las pruebas pueden comparar.
    """
    codigo = "ERROR"

    def __init__(self, mensaje: str):
        super().__init__(mensaje)
        self.mensaje = mensaje

    def __str__(self):
        return f"[{self.codigo}] {self.mensaje}"


class NonRegularError(ErrorWeyl):
    codigo = "NON_REGULAR"


class SearchCapExceededError(ErrorWeyl):
    codigo = "SEARCH_CAP_EXCEEDED"

    def __init__(self, mensaje: str, cota: int):
        super().__init__(mensaje)
        self.cota = cota


class ProductNotInKDError(ErrorWeyl):
    codigo = "PRODUCT_NOT_IN_K_D"


class ThetaOnLaurentError(ErrorWeyl):
    codigo = "THETA_ON_LAURENT"


class UnstableImageError(ErrorWeyl):
    codigo = "UNSTABLE"


class CertificationError(ErrorWeyl):
    codigo = "CERT_FAILED"


class ScenarioMismatchError(ErrorWeyl):
    codigo = "SCENARIO_MISMATCH"

    def __init__(self, paso: str, esperado: str, calculado: str):
        super().__init__(
            f"Paso '{paso}' no coincide.\n"
            f"  esperado:  {esperado}\n"
            f"  calculado: {calculado}"
        )
        self.paso = paso
        self.esperado = esperado
        self.calculado = calculado


class ParseError(ErrorWeyl):
    codigo = "PARSE_ERROR"

    def __init__(self, mensaje: str, posicion: int):
        super().__init__(f"{mensaje} (posición {posicion})")
        self.posicion = posicion


class NegativeDPowerError(ErrorWeyl):
    codigo = "NEGATIVE_D_POWER"

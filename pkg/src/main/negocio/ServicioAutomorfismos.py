"""
Imagen de D(R,V) por palabras que fijan t: σ(D(R,V)) = D(R,V_σ).

Para σ = exp(ad P) con P ∈ k[t] la acción de σ(d) es la conjugada
σ(d)(r) = e^{−P}·d(e^{P}·r), que se evalúa con series truncadas.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from negocio.algebra_exacta import Poly
from negocio.automorfismos import AutomorphismWord
from negocio.configuracion import Configuracion
from negocio.errores import CertificationError, UnstableImageError
from negocio.nucleo_weyl import WeylElement, act, deg_d
from negocio.ServicioIdeales import ServicioIdeales, ideal_slice
from negocio.subespacio_pd import PdSubspace, codim, is_irreducible, make_pd, residual

logger = logging.getLogger(__name__)

CERTIFIED_UP_TO_BOUND = "CERTIFIED_UP_TO_BOUND"


def exp_truncated(P: Poly, n: int) -> Poly:
    """e^P módulo tⁿ; P sin término constante."""
    if P.coeff(0):
        raise ValueError("exp_truncated necesita P(0) = 0.")
    total = Poly.constant(1) if n > 0 else Poly.zero()
    termino = Poly.constant(1)
    for k in range(1, n):
        termino = (termino * P).truncate(n) * Fraction(1, k)
        if termino.is_zero():
            break
        total = total + termino
    return total


def conjugated_action(d: WeylElement, P: Poly, r: Poly, n: int) -> Poly:
    """(e^{−P}·d(e^{P}·r)) módulo tⁿ, es decir exp(ad P)(d) aplicado a r."""
    P = P - P.coeff(0)
    alcance = n + max(deg_d(d), 0)
    interior = (exp_truncated(P, alcance) * r).truncate(alcance)
    return (exp_truncated(-P, n) * act(d, interior).to_poly()).truncate(n)


def closed_form_image(V: PdSubspace, P: Poly) -> PdSubspace:
    """V_σ = span{e^{−P}·v mod tᴺ} + tᴺ·k[t]."""
    N = V.conductor_exp
    P = P - P.coeff(0)
    e_menos = exp_truncated(-P, N)
    return make_pd([(e_menos * v).truncate(N) for v in V.finite_part], N)


def _conjugado_en_ideal(W: PdSubspace, d: WeylElement, P: Poly) -> bool:
    """exp(ad P)(d) ∈ D(R, W), comprobado sobre tᵏ con k ≤ N + deg_∂ d."""
    N = W.conductor_exp
    return all(
        not residual(W, conjugated_action(d, P, Poly.monomial(k), N))
        for k in range(N + max(deg_d(d), 0) + 1)
    )


@dataclass
class CertificadoImagen:
    status: str
    cota_t: int
    cota_d: int
    pasos: int
    forward_ok: bool
    backward_ok: bool
    codim_ok: bool
    closed_form: PdSubspace
    closed_form_match: bool
    ef: Optional[Poly] = None
    historial: list[PdSubspace] = field(default_factory=list)


class ServicioAutomorfismos:
    """Cálculo certificado de V_σ para palabras de factores exp(ad(p(t)))."""

    def __init__(self, config: Optional[Configuracion] = None,
                 servicio_ideales: Optional[ServicioIdeales] = None):
        self.config = config or Configuracion()
        self.servicio_ideales = servicio_ideales or ServicioIdeales(self.config)
        logger.info("ServicioAutomorfismos inicializado (image_max_steps=%d)", self.config.image_max_steps)

    def _candidato(self, V: PdSubspace, P: Poly, a: int, b: int) -> tuple[list[WeylElement], PdSubspace]:
        base = ideal_slice(V, a, b)
        N = V.conductor_exp
        imagenes = [conjugated_action(d, P, Poly.constant(1), N) for d in base]
        return base, make_pd(imagenes, N)

    def image_pd_subspace(self, V: PdSubspace, sigma: AutomorphismWord) -> tuple[PdSubspace, CertificadoImagen]:
        if not sigma.is_t_fixing():
            raise ValueError(f"La palabra {sigma.render()} no fija t; sólo se admiten factores exp(ad(p(t))).")
        P = sigma.collapsed_p()
        P = P - P.coeff(0)
        m = codim(V)
        a = V.conductor_exp
        b = m + (int(P.degree()) if not P.is_zero() else 0)
        logger.info("Imagen de %s por %s: rebanada inicial (%d, %d)", V.render(), sigma.render(), a, b)

        historial: list[PdSubspace] = []
        estables = 0
        for paso in range(1, self.config.image_max_steps + 1):
            base, candidato = self._candidato(V, P, a, b)
            if historial and historial[-1] == candidato:
                estables += 1
            else:
                estables = 0
            historial.append(candidato)
            logger.debug("paso %d, rebanada (%d, %d): %s", paso, a, b, candidato.render())
            if estables >= 2 and codim(candidato) == m:
                if all(_conjugado_en_ideal(candidato, d, P) for d in base):
                    break
            a, b = a + 1, b + 1
        else:
            raise UnstableImageError(
                f"La imagen de {V.render()} no se estabilizó en {self.config.image_max_steps} pasos."
            )

        # σ⁻¹ = exp(ad −P)
        base_imagen = ideal_slice(candidato, a, b)
        if not all(_conjugado_en_ideal(V, d, -P) for d in base_imagen):
            raise CertificationError(
                f"σ⁻¹(D(R, {candidato.render()})) no está contenido en D(R, {V.render()})."
            )

        cerrada = closed_form_image(V, P)
        ef = None
        if self.config.certify_ef and is_irreducible(candidato):
            ef = self.servicio_ideales.ef_invariant(candidato)
        certificado = CertificadoImagen(
            status=CERTIFIED_UP_TO_BOUND, cota_t=a, cota_d=b, pasos=paso,
            forward_ok=True, backward_ok=True, codim_ok=codim(candidato) == m,
            closed_form=cerrada, closed_form_match=cerrada == candidato, ef=ef,
            historial=historial,
        )
        if not certificado.closed_form_match:
            logger.warning("La imagen %s difiere de la forma cerrada %s", candidato.render(), cerrada.render())
        return candidato, certificado

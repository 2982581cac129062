"""
Automorfismos de A₁ generados por exp(ad p(t)), exp(ad q(∂)) y θ.

Una palabra aplica sus factores de izquierda a derecha: la palabra `a;b`
es b∘a. Cada factor actúa por sustitución de las imágenes de t y ∂.
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Optional, Union

from negocio.algebra_exacta import Poly
from negocio.errores import NonRegularError, ThetaOnLaurentError
from negocio.nucleo_weyl import WeylElement, commutator, mul

logger = logging.getLogger(__name__)


def _sustituir(d: WeylElement, imagen_t: WeylElement, imagen_d: WeylElement,
               imagen_t_inv: Optional[WeylElement] = None) -> WeylElement:
    """Σ c·σ(t)ⁱσ(∂)ʲ; las potencias negativas de t usan imagen_t_inv."""
    pot_t: dict[int, WeylElement] = {0: WeylElement.one()}
    pot_d: dict[int, WeylElement] = {0: WeylElement.one()}

    def potencia(cache, base, k):
        if k not in cache:
            cache[k] = mul(potencia(cache, base, k - 1), base)
        return cache[k]

    pot_t_inv: dict[int, WeylElement] = {0: WeylElement.one()}
    resultado = WeylElement.zero()
    for i, j, c in d.terms():
        ti = potencia(pot_t, imagen_t, i) if i >= 0 else potencia(pot_t_inv, imagen_t_inv, -i)
        resultado = resultado + mul(ti, potencia(pot_d, imagen_d, j)) * c
    return resultado


@dataclass(frozen=True)
class ExpAdT:
    """exp(ad p(t)): t ↦ t, ∂ ↦ ∂ + p′."""
    p: Poly

    def inverse(self) -> "ExpAdT":
        return ExpAdT(-self.p)

    def apply(self, d: WeylElement) -> WeylElement:
        imagen_d = WeylElement.d() + WeylElement.from_poly(self.p.derivative())
        return _sustituir(d, WeylElement.t(), imagen_d, WeylElement.t(-1))

    def render(self) -> str:
        return f"exp(ad({self.p.render()}))"


@dataclass(frozen=True)
class ExpAdD:
    """exp(ad q(∂)): t ↦ t − q′(∂), ∂ ↦ ∂. Sólo sobre A₁."""
    q: Poly

    def inverse(self) -> "ExpAdD":
        return ExpAdD(-self.q)

    def apply(self, d: WeylElement) -> WeylElement:
        if not d.is_regular():
            raise NonRegularError(
                f"exp(ad({self.q.render()})) no termina sobre {d.render()}: hay potencias negativas de t."
            )
        imagen_t = WeylElement.t() - WeylElement.from_poly(self.q.derivative())
        return _sustituir(d, imagen_t, WeylElement.d())

    def render(self) -> str:
        return f"expD(ad({self.q.render()}))"


@dataclass(frozen=True)
class Theta:
    """θ: t ↦ −∂, ∂ ↦ t; su inverso t ↦ ∂, ∂ ↦ −t."""
    inverted: bool = False

    def inverse(self) -> "Theta":
        return Theta(not self.inverted)

    def apply(self, d: WeylElement) -> WeylElement:
        if not d.is_regular():
            raise ThetaOnLaurentError(f"θ no está definido sobre {d.render()}.")
        if self.inverted:
            return _sustituir(d, WeylElement.d(), -WeylElement.t())
        return _sustituir(d, -WeylElement.d(), WeylElement.t())

    def render(self) -> str:
        return "theta^-1" if self.inverted else "theta"


Item = Union[ExpAdT, ExpAdD, Theta]


@dataclass(frozen=True)
class AutomorphismWord:
    items: tuple[Item, ...] = field(default_factory=tuple)

    @classmethod
    def identity(cls) -> "AutomorphismWord":
        return cls(())

    def inverse(self) -> "AutomorphismWord":
        return AutomorphismWord(tuple(it.inverse() for it in reversed(self.items)))

    def is_t_fixing(self) -> bool:
        return all(isinstance(it, ExpAdT) for it in self.items)

    def collapsed_p(self) -> Poly:
        """Para palabras de factores ExpAdT: el único P con σ = exp(ad P)."""
        if not self.is_t_fixing():
            raise ValueError("Sólo las palabras de factores exp(ad(p(t))) se reducen a un único P.")
        return reduce(lambda acc, it: acc + it.p, self.items, Poly.zero("t"))

    def render(self) -> str:
        return ";".join(it.render() for it in self.items) if self.items else "id"

    __str__ = render


def compose(sigma: AutomorphismWord, tau: AutomorphismWord) -> AutomorphismWord:
    """σ∘τ: primero τ, luego σ."""
    return AutomorphismWord(tau.items + sigma.items)


def apply(sigma: AutomorphismWord, d: WeylElement) -> WeylElement:
    for it in sigma.items:
        d = it.apply(d)
    return d


def exp_ad(p: WeylElement, d: WeylElement) -> WeylElement:
    """Σ_k (ad p)ᵏ(d)/k! con (ad p)(x) = [x, p]; p debe estar en k[t] o en k[∂]."""
    if p.pure_t_laurent() is None and p.pure_d_poly() is None:
        raise ValueError("exp(ad p) sólo termina para p en k[t] o en k[∂].")
    if p.pure_t_laurent() is None and not d.is_regular():
        raise NonRegularError(f"exp(ad({p.render()})) no termina sobre {d.render()}.")
    total, termino, k = d, d, 0
    while True:
        k += 1
        termino = commutator(termino, p) * Fraction(1, k)
        if termino.is_zero():
            return total
        total = total + termino


def log_series(sigma: AutomorphismWord, f: WeylElement) -> WeylElement:
    """
    Σ_{k≥1} (−1)^{k−1}/k·(σ − id)ᵏ(f). Para σ = exp(ad p) con p ∈ k[t] es [f, p].
    """
    total = WeylElement.zero()
    termino, k = f, 0
    while True:
        k += 1
        termino = apply(sigma, termino) - termino
        if termino.is_zero():
            return total
        total = total + termino * Fraction((-1) ** (k - 1), k)


def theta_transport(q: Poly) -> Poly:
    """θ(q(∂)) = q(t)."""
    return q.with_var("t")


@dataclass
class ComprobacionAutomorfismo:
    muestras: int = 0
    multiplicativa: int = 0
    aditiva: int = 0
    inversa: int = 0

    @property
    def ok(self) -> bool:
        return self.multiplicativa == self.aditiva == self.inversa == self.muestras


def _elemento_aleatorio(rng: random.Random, grado: int = 2) -> WeylElement:
    return WeylElement({
        (i, j): rng.randint(-3, 3) for i in range(grado + 1) for j in range(grado + 1)
        if rng.random() < 0.5
    })


def is_automorphism_check(sigma: AutomorphismWord, muestras: int = 20, seed: int = 0) -> ComprobacionAutomorfismo:
    """Comprueba σ(ab) = σ(a)σ(b), σ(a+b) = σ(a)+σ(b) y σ(σ⁻¹(a)) = a sobre muestras aleatorias."""
    rng = random.Random(seed)
    inversa = sigma.inverse()
    resultado = ComprobacionAutomorfismo(muestras=muestras)
    for _ in range(muestras):
        a, b = _elemento_aleatorio(rng), _elemento_aleatorio(rng)
        sa, sb = apply(sigma, a), apply(sigma, b)
        resultado.multiplicativa += apply(sigma, mul(a, b)) == mul(sa, sb)
        resultado.aditiva += apply(sigma, a + b) == sa + sb
        resultado.inversa += apply(sigma, apply(inversa, a)) == a
    if not resultado.ok:
        logger.warning("La palabra %s falla la comprobación de automorfismo: %s", sigma.render(), resultado)
    return resultado

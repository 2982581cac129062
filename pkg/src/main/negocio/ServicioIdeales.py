"""
El ideal derecho D(R,V) = {d ∈ A₁ : d(R) ⊆ V} y su dual D(V,R): pertenencia,
elementos de t-grado mínimo, elementos característicos e*, f y el invariante e*f.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from negocio.algebra_exacta import Poly, falling, hcf_list, nullspace_sparse
from negocio.configuracion import Configuracion
from negocio.errores import (
    CertificationError, NonRegularError, ProductNotInKDError, SearchCapExceededError,
)
from negocio.nucleo_weyl import WeylElement, act, act_monomial, deg_d, mul
from negocio.subespacio_pd import PdSubspace, codim, is_irreducible, make_pd, residual

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharPair:
    e_star: WeylElement
    f: WeylElement
    ef: Poly
    escala: Fraction = Fraction(1)


# --- pertenencia (funciones puras) ---

def ideal_contains(V: PdSubspace, d: WeylElement) -> bool:
    if not d.is_regular():
        raise NonRegularError(f"{d.render()} no pertenece a A₁.")
    if d.is_zero():
        return True
    for k in range(V.conductor_exp + deg_d(d) + 1):
        if residual(V, act_monomial(d, k).to_poly()):
            return False
    return True


def dual_contains(V: PdSubspace, e: WeylElement) -> bool:
    if e.is_zero():
        return True
    if any(act(e, v).negative_part() for v in V.finite_part):
        return False
    M = max(0, -e.lowest_t())
    N = V.conductor_exp
    return all(
        not act_monomial(e, k).negative_part() for k in range(N, N + deg_d(e) + M + 1)
    )


def generated_subspace(d: WeylElement, N: int) -> PdSubspace:
    """span{d(tᵏ)} + tᴺ·k[t], con k acotado por la valoración."""
    imagenes = [act_monomial(d, k).to_poly() for k in range(N + max(deg_d(d), 0) + 1)]
    return make_pd(imagenes, N)


# --- sistemas lineales de los ansatz ---

def _ideal_rows(V: PdSubspace, columnas: list[tuple[int, int]]) -> list[dict[int, Fraction]]:
    """Una fila por coordenada del residuo de d(tᵏ) módulo V."""
    N = V.conductor_exp
    kmax = N + max((j for _, j in columnas), default=0)
    residuos: dict[int, dict[int, Fraction]] = {}
    filas: dict[tuple[int, int], dict[int, Fraction]] = {}
    for col, (i, j) in enumerate(columnas):
        for k in range(j, kmax + 1):
            e = k - j + i
            if e >= N:
                continue
            if e not in residuos:
                residuos[e] = residual(V, Poly.monomial(e))
            f = falling(k, j)
            for grado, c in residuos[e].items():
                fila = filas.setdefault((k, grado), {})
                fila[col] = fila.get(col, 0) + f * c
    return list(filas.values())


def _dual_rows(V: PdSubspace, columnas: list[tuple[int, int]], kmax: int) -> list[dict[int, Fraction]]:
    """Una fila por coeficiente negativo de e(v) y de e(tᵏ), N ≤ k ≤ kmax."""
    N = V.conductor_exp
    fuentes = [dict(v.items()) for v in V.finite_part] + [{k: Fraction(1)} for k in range(N, kmax + 1)]
    filas: dict[tuple[int, int], dict[int, Fraction]] = {}
    for col, (i, j) in enumerate(columnas):
        for s, h in enumerate(fuentes):
            for k, hk in h.items():
                e = k - j + i
                if e >= 0:
                    continue
                f = falling(k, j)
                if f:
                    fila = filas.setdefault((s, e), {})
                    fila[col] = fila.get(col, 0) + f * hk
    return list(filas.values())


def _element(columnas: list[tuple[int, int]], vector: list[Fraction]) -> WeylElement:
    return WeylElement({col: c for col, c in zip(columnas, vector) if c})


def ideal_slice(V: PdSubspace, a: int, b: int) -> list[WeylElement]:
    """Base de {d ∈ D(R,V) : deg_t d ≤ a, deg_∂ d ≤ b}."""
    columnas = [(i, j) for i in range(a + 1) for j in range(b + 1)]
    nucleo = nullspace_sparse(_ideal_rows(V, columnas), len(columnas))
    return [_element(columnas, v) for v in nucleo]


class ServicioIdeales:
    """
    Búsquedas por ansatz sobre D(R,V) y D(V,R). Guarda en caché los pares
    característicos por subespacio.
    """

    def __init__(self, config: Optional[Configuracion] = None):
        self.config = config or Configuracion()
        self._pares: dict[PdSubspace, CharPair] = {}
        logger.info("ServicioIdeales inicializado (bound_cap=%s)", self.config.bound_cap)

    def _comprobar_irreducible(self, V: PdSubspace):
        if not is_irreducible(V):
            raise ValueError(f"{V.render()} no es irreducible.")

    def min_tdeg_element(self, V: PdSubspace) -> WeylElement:
        self._comprobar_irreducible(V)
        m = codim(V)
        if m == 0:
            return WeylElement.one()
        cota = self.config.cota_busqueda(m)
        for B in range(m, cota + 1):
            columnas = [(i, j) for i in range(m + 1) for j in range(B + 1)]
            nucleo = nullspace_sparse(_ideal_rows(V, columnas), len(columnas))
            logger.debug("min_tdeg_element %s: B=%d, núcleo de dimensión %d", V.render(), B, len(nucleo))
            if nucleo:
                return _element(columnas, nucleo[0]).normalized()
        raise SearchCapExceededError(
            f"No hay elemento de t-grado {m} en D(R, {V.render()}) con ∂-grado <= {cota}.", cota
        )

    def characteristic_f(self, V: PdSubspace) -> WeylElement:
        f_prima = self.min_tdeg_element(V)
        componentes = f_prima.t_components()
        p = hcf_list(list(componentes.values()))
        terminos = {}
        for i, a in componentes.items():
            q, r = a.divmod(p)
            assert r.is_zero()
            for j, c in q.items():
                terminos[(i, j)] = c
        f = WeylElement(terminos).normalized()
        if not ideal_contains(V, f):
            raise CertificationError(f"f = {f.render()} no pertenece a D(R, {V.render()}).")
        return f

    def characteristic_e(self, V: PdSubspace) -> WeylElement:
        self._comprobar_irreducible(V)
        m = codim(V)
        if m == 0:
            return WeylElement.one()
        N = V.conductor_exp
        cota = self.config.cota_busqueda(m)
        logger.info("Buscando e* para %s (codim %d)", V.render(), m)
        for B in range(cota + 1):
            # e ∈ A₁·t⁻ᴺ: los exponentes de t quedan en [−(N+B), −m]
            columnas = [(i, j) for i in range(-(N + B), -m + 1) for j in range(B + 1)]
            filas = _dual_rows(V, columnas, 2 * N + 2 * B)
            nucleo = nullspace_sparse(filas, len(columnas))
            logger.debug("characteristic_e %s: B=%d, núcleo de dimensión %d", V.render(), B, len(nucleo))
            if nucleo:
                return _element(columnas, nucleo[0]).normalized()
        raise SearchCapExceededError(
            f"No hay elemento de t-grado {-m} en D({V.render()}, R) con ∂-grado <= {cota}.", cota
        )

    def characteristic_pair(self, V: PdSubspace) -> CharPair:
        if V in self._pares:
            return self._pares[V]
        e_star = self.characteristic_e(V)
        f = self.characteristic_f(V)
        producto = mul(e_star, f)
        ef = producto.pure_d_poly()
        if ef is None or ef.is_zero():
            raise ProductNotInKDError(f"e*f = {producto.render()} no está en k[∂].")
        m = codim(V)
        b_m = e_star.t_components().get(-m, Poly.zero("D"))
        c_m = f.t_components().get(m, Poly.zero("D"))
        if b_m * c_m != ef:
            raise CertificationError(
                f"e*f = {ef.render()} no coincide con b_m·c_m = {(b_m * c_m).render()}."
            )
        par = CharPair(e_star, f, ef.monic(), ef.leading_coeff())
        self._pares[V] = par
        return par

    def ef_invariant(self, V: PdSubspace) -> Poly:
        return self.characteristic_pair(V).ef

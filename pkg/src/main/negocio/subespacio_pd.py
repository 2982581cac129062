"""
Subespacios primarios descomponibles V = span(finite_part) + tᴺ·k[t] de k[t].

La forma canónica tiene N mínimo (tᴺ⁻¹ ∉ V) y finite_part en forma escalonada
reducida con pivote en el grado más bajo y coeficiente 1 en el pivote.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from negocio.algebra_exacta import LaurentPoly, Poly, nullspace_sparse, span_reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PdSubspace:
    conductor_exp: int
    finite_part: tuple[Poly, ...] = ()

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(v.valuation() for v in self.finite_part)

    def __contains__(self, h) -> bool:
        return contains(self, h)

    def render(self) -> str:
        if not self.finite_part:
            return f"pd({self.conductor_exp})"
        vectores = ", ".join(v.render() for v in self.finite_part)
        return f"pd({self.conductor_exp}; {vectores})"

    __str__ = render


@dataclass(frozen=True)
class SubalgebraProbe:
    """O(b) = {a ∈ R : b divide a'}."""
    b: Poly

    def __contains__(self, a: Poly) -> bool:
        return o_contains(self.b, a)


def _as_t_poly(h: Union[Poly, LaurentPoly]) -> Optional[Poly]:
    if isinstance(h, LaurentPoly):
        return h.to_poly() if h.is_polynomial() else None
    return h


def residual(V: PdSubspace, h: Poly) -> dict[int, Fraction]:
    """Coordenadas de h módulo V; vacío si y sólo si h ∈ V."""
    w = dict(h.truncate(V.conductor_exp).items())
    for v, p in zip(V.finite_part, V.pivots):
        c = w.get(p)
        if c:
            for e, a in v.items():
                w[e] = w.get(e, 0) - c * a
    return {e: c for e, c in w.items() if c}


def make_pd(generators: Sequence[Poly], N: int) -> PdSubspace:
    if N < 0:
        raise ValueError("El exponente del conductor debe ser >= 0.")
    base = span_reduce([g.with_var("t") for g in generators], N)
    V = PdSubspace(N, tuple(base))
    while V.conductor_exp >= 1 and not residual(V, Poly.monomial(V.conductor_exp - 1)):
        n = V.conductor_exp - 1
        V = PdSubspace(n, tuple(span_reduce(list(V.finite_part), n)))
    return V


def whole_ring() -> PdSubspace:
    return PdSubspace(0)


def monomial_subspace(exponents: Iterable[int], N: int) -> PdSubspace:
    return make_pd([Poly.monomial(e) for e in exponents], N)


def contains(V: PdSubspace, h) -> bool:
    h = _as_t_poly(h)
    if h is None:
        return False
    return not residual(V, h)


def o_contains(b: Poly, a: Poly) -> bool:
    return b.divides(a.derivative())


def stabilizer_contains(V: PdSubspace, p: Poly) -> bool:
    return all(contains(V, p * v) for v in V.finite_part)


def stabilizer_basis(V: PdSubspace) -> list[Poly]:
    """
    Base escalonada de S(V) módulo tᴺ; S(V) es ese span más tᴺ·k[t].
    """
    N = V.conductor_exp
    if N == 0:
        return []
    # filas: coeficientes de p·v módulo V, lineales en los N coeficientes de p
    columnas = [[residual(V, Poly.monomial(e) * v) for v in V.finite_part] for e in range(N)]
    filas: dict[tuple[int, int], dict[int, Fraction]] = {}
    for e, residuos in enumerate(columnas):
        for k, r in enumerate(residuos):
            for grado, c in r.items():
                filas.setdefault((k, grado), {})[e] = c
    nucleo = nullspace_sparse(list(filas.values()), N)
    return span_reduce([Poly.from_list(v) for v in nucleo], N)


def conductor(V: PdSubspace) -> int:
    m = V.conductor_exp
    while m >= 1 and contains(V, Poly.monomial(m - 1)):
        m -= 1
    return m


def is_irreducible(V: PdSubspace) -> bool:
    return V.conductor_exp == 0 or any(v.coeff(0) for v in V.finite_part)


def codim(V: PdSubspace) -> int:
    return V.conductor_exp - len(V.finite_part)


def intersect_tail(V: PdSubspace, j: int) -> PdSubspace:
    """V ∩ tʲ·k[t]."""
    if j <= 0:
        return V
    if j >= V.conductor_exp:
        return make_pd([], j)
    # en la forma reducida sólo sobreviven los vectores con pivote >= j
    return make_pd([v for v, p in zip(V.finite_part, V.pivots) if p >= j], V.conductor_exp)


def scale_then_add_tail(V: PdSubspace, p: Poly) -> PdSubspace:
    """span((1 − p)·V) + tᴺ·k[t]."""
    uno_menos_p = 1 - p
    return make_pd([uno_menos_p * v for v in V.finite_part], V.conductor_exp)


def sum(V: PdSubspace, W: PdSubspace) -> PdSubspace:  # noqa: A001
    N = min(V.conductor_exp, W.conductor_exp)
    return make_pd(list(V.finite_part) + list(W.finite_part), N)


def is_monomial(V: PdSubspace) -> bool:
    return all(v.is_monomial() for v in V.finite_part)

import os
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from negocio.algebra_exacta import Poly
from negocio.configuracion import Configuracion
from negocio.nucleo_weyl import WeylElement
from negocio.ServicioAutomorfismos import ServicioAutomorfismos
from negocio.ServicioIdeales import ServicioIdeales
from negocio.ServicioStafford import ServicioStafford
from negocio.subespacio_pd import make_pd

settings.register_profile("default", max_examples=100, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("rapido", max_examples=20, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("exhaustivo", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
PERFIL = os.getenv("HYPOTHESIS_PROFILE", "default")
settings.load_profile(PERFIL)


def ejemplos(n: int) -> int:
    """Tope para las propiedades que calculan imágenes; el perfil exhaustivo lo levanta."""
    return settings.default.max_examples if PERFIL == "exhaustivo" else n


# --- estrategias ---
escalares = st.fractions(min_value=-5, max_value=5, max_denominator=4)
enteros_no_nulos = st.integers(-4, 4).filter(bool)


def weyl_elements(max_t: int = 3, max_d: int = 3, min_t: int = 0):
    return st.dictionaries(
        st.tuples(st.integers(min_t, max_t), st.integers(0, max_d)),
        enteros_no_nulos, max_size=5,
    ).map(WeylElement)


def t_polys(max_deg: int = 4, min_deg: int = 0):
    return st.dictionaries(st.integers(min_deg, max_deg), enteros_no_nulos, max_size=4).map(Poly)


@st.composite
def pd_subspaces(draw, max_n: int = 5, irreducible: bool = True):
    """Subespacios canónicos; los irreducibles contienen un vector con término constante 1."""
    N = draw(st.integers(1 if irreducible else 0, max_n))
    generadores = draw(st.lists(t_polys(max_deg=max(N - 1, 1), min_deg=1), max_size=3))
    if irreducible:
        generadores.append(Poly.constant(1) + draw(t_polys(max_deg=max(N - 1, 1), min_deg=1)))
    return make_pd(generadores, N)


# --- fixtures ---
@pytest.fixture
def config():
    return Configuracion()


@pytest.fixture
def servicio_ideales(config):
    return ServicioIdeales(config)


@pytest.fixture
def servicio_automorfismos(config, servicio_ideales):
    return ServicioAutomorfismos(config, servicio_ideales)


@pytest.fixture
def servicio_stafford(config, servicio_ideales, servicio_automorfismos):
    return ServicioStafford(config, servicio_ideales, servicio_automorfismos)


def kxn(n: int):
    """k[Xₙ] = k + tⁿ·k[t]."""
    return make_pd([Poly.constant(1)], n)


def un(n: int):
    """Uₙ = k(1 − tⁿ⁻¹) + tⁿ·k[t]."""
    return make_pd([1 - Poly.monomial(n - 1)], n)


def q(a, b=1) -> Fraction:
    return Fraction(a, b)

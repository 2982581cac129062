from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ejemplos, kxn, pd_subspaces, t_polys, un, weyl_elements
from negocio.algebra_exacta import Poly
from negocio.automorfismos import (
    AutomorphismWord, ExpAdD, ExpAdT, Theta, apply, compose, exp_ad,
    is_automorphism_check, log_series, theta_transport,
)
from negocio.configuracion import Configuracion
from negocio.errores import NonRegularError, ThetaOnLaurentError, UnstableImageError
from negocio.nucleo_weyl import WeylElement, act, commutator
from negocio.ServicioAutomorfismos import (
    CERTIFIED_UP_TO_BOUND, ServicioAutomorfismos, closed_form_image, conjugated_action,
    exp_truncated,
)
from negocio.ServicioIdeales import ServicioIdeales
from negocio.ServicioStafford import ServicioStafford, closed_ef_u
from negocio.subespacio_pd import monomial_subspace, scale_then_add_tail, whole_ring

t, D = WeylElement.t(), WeylElement.d()


def palabra(*items):
    return AutomorphismWord(tuple(items))


d_polys = t_polys(max_deg=2).map(lambda p: p.with_var("D"))
factores = st.one_of(
    t_polys(max_deg=2).map(ExpAdT),
    d_polys.map(ExpAdD),
    st.booleans().map(Theta),
)
palabras = st.lists(factores, max_size=3).map(lambda xs: AutomorphismWord(tuple(xs)))


class TestFactores:
    def test_exp_ad_t(self):
        assert apply(palabra(ExpAdT(Poly.monomial(2))), D) == D + 2 * t
        assert apply(palabra(ExpAdT(Poly.monomial(2))), t) == t

    def test_exp_ad_d(self):
        assert apply(palabra(ExpAdD(Poly.monomial(2, var="D"))), t) == t - 2 * D

    def test_theta(self):
        assert apply(palabra(Theta()), t) == -D
        assert apply(palabra(Theta()), D) == t
        assert apply(palabra(Theta(inverted=True)), t) == D

    @given(weyl_elements())
    def test_theta_orden_cuatro(self, d):
        assert apply(palabra(*[Theta()] * 4), d) == d

    def test_exp_ad_d_rechaza_laurent(self):
        with pytest.raises(NonRegularError):
            apply(palabra(ExpAdD(Poly.monomial(2, var="D"))), WeylElement.t(-1))

    def test_theta_rechaza_laurent(self):
        with pytest.raises(ThetaOnLaurentError):
            apply(palabra(Theta()), WeylElement.monomial(-2, 1))

    def test_exp_ad_t_sobre_laurent(self):
        # ∂ ↦ ∂ + 1 fija t⁻¹
        assert apply(palabra(ExpAdT(Poly.monomial(1))), WeylElement.monomial(-1, 1)) == WeylElement.monomial(-1, 1) + WeylElement.t(-1)


class TestPalabras:
    def test_render(self):
        assert palabra(ExpAdT(Poly.monomial(2)), Theta()).render() == "exp(ad(t^2));theta"
        assert palabra(ExpAdD(Poly.monomial(3, var="D")), Theta(True)).render() == "expD(ad(D^3));theta^-1"
        assert AutomorphismWord.identity().render() == "id"

    def test_collapsed_p(self):
        sigma = palabra(ExpAdT(Poly.monomial(2)), ExpAdT(Poly.monomial(3)))
        assert sigma.is_t_fixing()
        assert sigma.collapsed_p() == Poly.from_list([0, 0, 1, 1])
        with pytest.raises(ValueError):
            palabra(Theta()).collapsed_p()

    def test_compose_aplica_primero_el_segundo(self):
        sigma, tau = palabra(Theta()), palabra(ExpAdT(Poly.monomial(2)))
        # θ(exp(ad t²)(∂)) = θ(∂ + 2t) = t − 2∂
        assert apply(compose(sigma, tau), D) == t - 2 * D

    @given(palabras, palabras, weyl_elements(max_t=2, max_d=2))
    def test_compose(self, sigma, tau, d):
        assert apply(compose(sigma, tau), d) == apply(sigma, apply(tau, d))

    @given(palabras, weyl_elements(max_t=2, max_d=2))
    def test_inversa(self, sigma, d):
        assert apply(sigma.inverse(), apply(sigma, d)) == d

    @given(palabras)
    def test_relacion_de_weyl(self, sigma):
        assert commutator(apply(sigma, D), apply(sigma, t)) == 1

    def test_is_automorphism_check(self):
        sigma = palabra(ExpAdT(Poly.monomial(3)), Theta(), ExpAdD(Poly.monomial(2, var="D")))
        resultado = is_automorphism_check(sigma, muestras=10, seed=3)
        assert resultado.ok
        assert resultado.muestras == 10

    def test_theta_transport(self):
        assert theta_transport(Poly.from_list([0, 1, 1], "D")) == Poly.from_list([0, 1, 1])


class TestSeries:
    @given(t_polys(max_deg=3), weyl_elements(min_t=-2))
    def test_exp_ad_coincide_con_la_sustitucion(self, p, d):
        assert exp_ad(WeylElement.from_poly(p), d) == apply(palabra(ExpAdT(p)), d)

    @given(d_polys, weyl_elements())
    def test_exp_ad_en_d(self, q, d):
        assert exp_ad(WeylElement.from_poly(q), d) == apply(palabra(ExpAdD(q)), d)

    def test_exp_ad_sin_terminacion(self):
        with pytest.raises(ValueError):
            exp_ad(t * D, D)
        with pytest.raises(NonRegularError):
            exp_ad(D * D, WeylElement.t(-1))

    @settings(max_examples=100)
    @given(t_polys(max_deg=3), weyl_elements(min_t=-2))
    def test_log_recupera_el_conmutador(self, p, f):
        assert log_series(palabra(ExpAdT(p)), f) == commutator(f, WeylElement.from_poly(p))

    def test_exp_truncated(self):
        assert exp_truncated(Poly.monomial(1), 4) == Poly({0: 1, 1: 1, 2: Fraction(1, 2), 3: Fraction(1, 6)})
        assert exp_truncated(Poly.monomial(3), 3) == Poly.constant(1)
        with pytest.raises(ValueError):
            exp_truncated(Poly.from_list([1, 1]), 3)

    @given(weyl_elements(), t_polys(max_deg=3), t_polys(max_deg=3), st.integers(1, 6))
    def test_accion_conjugada(self, d, P, r, n):
        esperado = act(apply(palabra(ExpAdT(P)), d), r).to_poly().truncate(n)
        assert conjugated_action(d, P, r, n) == esperado


class TestImagen:
    @pytest.mark.parametrize("n", range(3, 8))
    def test_kxn_va_a_un(self, servicio_automorfismos, n):
        imagen, cert = servicio_automorfismos.image_pd_subspace(kxn(n), palabra(ExpAdT(Poly.monomial(n - 1))))
        assert imagen == un(n)
        assert cert.status == CERTIFIED_UP_TO_BOUND
        assert cert.forward_ok and cert.backward_ok and cert.codim_ok
        assert cert.closed_form_match
        assert cert.ef == closed_ef_u(n)

    def test_identidad(self, servicio_automorfismos):
        V = monomial_subspace([0, 2, 3], 5)
        imagen, cert = servicio_automorfismos.image_pd_subspace(V, AutomorphismWord.identity())
        assert imagen == V
        assert cert.closed_form == V

    def test_anillo_completo(self, servicio_automorfismos):
        imagen, _ = servicio_automorfismos.image_pd_subspace(whole_ring(), palabra(ExpAdT(Poly.monomial(2))))
        assert imagen == whole_ring()

    def test_monomial_con_hueco(self, servicio_automorfismos):
        V = monomial_subspace(range(3), 4)
        imagen, _ = servicio_automorfismos.image_pd_subspace(V, palabra(ExpAdT(Poly.monomial(2))))
        assert imagen == scale_then_add_tail(V, Poly.monomial(2))

    def test_palabra_que_no_fija_t(self, servicio_automorfismos):
        with pytest.raises(ValueError):
            servicio_automorfismos.image_pd_subspace(kxn(3), palabra(Theta()))

    def test_inestable(self):
        servicio = ServicioAutomorfismos(Configuracion(image_max_steps=2))
        with pytest.raises(UnstableImageError):
            servicio.image_pd_subspace(kxn(3), palabra(ExpAdT(Poly.monomial(2))))

    @settings(max_examples=50)
    @given(pd_subspaces(max_n=5), t_polys(max_deg=4))
    def test_imagen_es_la_forma_cerrada(self, V, p):
        config = Configuracion(certify_ef=False)
        servicio = ServicioAutomorfismos(config, ServicioIdeales(config))
        imagen, cert = servicio.image_pd_subspace(V, palabra(ExpAdT(p)))
        assert imagen == closed_form_image(V, p)
        assert cert.ef is None

    @given(pd_subspaces(max_n=5), t_polys(max_deg=4))
    def test_imagen_de_la_inversa(self, V, p):
        assert closed_form_image(closed_form_image(V, p), -p) == V


    @settings(max_examples=ejemplos(25))
    @given(pd_subspaces(max_n=6, irreducible=False), t_polys(max_deg=6))
    def test_estabilizar_equivale_a_imagen_fija(self, V, p):
        config = Configuracion(certify_ef=False)
        servicio = ServicioAutomorfismos(config, ServicioIdeales(config))
        imagen, _ = servicio.image_pd_subspace(V, palabra(ExpAdT(p)))
        assert ServicioStafford.stabilizes_exp(V, p) == (imagen == V)

    @settings(max_examples=ejemplos(15))
    @given(
        pd_subspaces(max_n=4, irreducible=False),
        st.lists(t_polys(max_deg=3).map(ExpAdT), min_size=1, max_size=2),
        st.lists(t_polys(max_deg=3).map(ExpAdT), min_size=1, max_size=2),
    )
    def test_imagen_de_la_composicion(self, V, xs, ys):
        config = Configuracion(certify_ef=False)
        servicio = ServicioAutomorfismos(config, ServicioIdeales(config))
        sigma, tau = AutomorphismWord(tuple(xs)), AutomorphismWord(tuple(ys))
        compuesta, _ = servicio.image_pd_subspace(V, compose(sigma, tau))
        intermedia, _ = servicio.image_pd_subspace(V, tau)
        escalonada, _ = servicio.image_pd_subspace(intermedia, sigma)
        assert compuesta == escalonada

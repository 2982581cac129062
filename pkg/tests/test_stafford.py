from fractions import Fraction

import pytest
from hypothesis import given

from conftest import kxn, pd_subspaces, t_polys, un
from negocio.algebra_exacta import Poly
from negocio.automorfismos import AutomorphismWord, ExpAdT
from negocio.ServicioStafford import (
    POSSIBLE, RAMA_BINOMIAL, RAMA_KXN, RAMA_RAICES, RAMA_WN, REFUTED, ServicioStafford, closed_w_n,
)
from negocio.subespacio_pd import monomial_subspace, scale_then_add_tail

D = Poly.monomial(1, var="D")


def exp_ad_t(k: int) -> AutomorphismWord:
    return AutomorphismWord((ExpAdT(Poly.monomial(k)),))


class TestCriterios:
    def test_stabilizes_exp(self, servicio_stafford):
        assert servicio_stafford.stabilizes_exp(kxn(3), Poly.monomial(3))
        assert not servicio_stafford.stabilizes_exp(kxn(3), Poly.monomial(2))
        assert servicio_stafford.stabilizes_exp(monomial_subspace([0, 2], 4), Poly.monomial(2))

    def test_stabilizes_exp_dual(self, servicio_stafford):
        assert servicio_stafford.stabilizes_exp_dual(kxn(3), D ** 3)
        assert not servicio_stafford.stabilizes_exp_dual(kxn(3), D)

    @given(pd_subspaces(), t_polys(max_deg=6))
    def test_dual_es_el_criterio_transportado(self, V, p):
        assert ServicioStafford.stabilizes_exp_dual(V, p.with_var("D")) == ServicioStafford.stabilizes_exp(V, p)


class TestInclusion:
    def test_reflexiva(self, servicio_stafford):
        informe = servicio_stafford.inclusion_report(un(4), un(4))
        assert informe.verdict == POSSIBLE
        assert informe.s_inclusion and informe.conductor_inclusion and informe.ef_divisibility

    def test_kxn_contra_un(self, servicio_stafford):
        informe = servicio_stafford.inclusion_report(kxn(4), un(4), "k[X_4]", "U_4")
        assert informe.verdict == REFUTED
        assert informe.s_inclusion
        assert not informe.ef_divisibility
        assert informe.v_label == "k[X_4]"

    def test_conductor(self, servicio_stafford):
        informe = servicio_stafford.inclusion_report(kxn(2), kxn(4))
        assert not informe.conductor_inclusion
        assert informe.verdict == REFUTED

    def test_w_n_contra_v_sigma(self, servicio_stafford):
        v_sigma = scale_then_add_tail(monomial_subspace(range(3), 4), Poly.monomial(2))
        informe = servicio_stafford.inclusion_report(closed_w_n(4), v_sigma)
        assert informe.verdict == REFUTED


class TestNormalizador:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_exp_ad_tn_normaliza(self, servicio_stafford, n):
        assert servicio_stafford.normalizer_demo(n, exp_ad_t(n))
        assert servicio_stafford.normalizer_demo(n, exp_ad_t(n + 2))

    def test_exp_ad_tn_menos_1_no_normaliza(self, servicio_stafford):
        assert not servicio_stafford.normalizer_demo(4, exp_ad_t(3))


class TestProposicionPrincipal:
    @pytest.mark.parametrize("n", range(2, 9))
    def test_conclusion(self, servicio_stafford, n):
        traza = servicio_stafford.verify_main_proposition(n)
        assert traza.conclusion == f"V = k[X_{n}]"
        assert traza.value("e*f") == f"D^{n}"
        assert len(traza.gap_sets) == (2 ** (n - 2) if n > 2 else 0)
        for g in traza.gap_sets:
            assert (g.r == g.s) == (g.gaps == tuple(range(1, g.s + 1)))
        assert sum(g.branch == RAMA_KXN for g in traza.gap_sets) == (1 if n > 2 else 0)

    def test_n2(self, servicio_stafford):
        traza = servicio_stafford.verify_main_proposition(2)
        assert traza.value("U_n") == "pd(2; -t + 1)"
        assert traza.value("e*f [U_n]") == "D^2 + 2*D + 1"

    def test_n3(self, servicio_stafford):
        traza = servicio_stafford.verify_main_proposition(3)
        assert [(g.gaps, g.lam, g.branch) for g in traza.gap_sets] == [
            ((), Fraction(2), RAMA_BINOMIAL),
            ((1,), Fraction(-2), RAMA_KXN),
        ]
        assert traza.value("W_n") is None

    def test_n4(self, servicio_stafford):
        traza = servicio_stafford.verify_main_proposition(4)
        assert traza.value("U_n") == "pd(4; -t^3 + 1)"
        assert traza.value("e*f [U_n]") == "D^6 + 12*D^3 + 36"
        assert traza.value("e*f [W_n]") == "D^6 - 12*D^4 + 36*D^2"
        assert traza.value("inclusion_report(W_n, V_sigma)") == REFUTED
        assert [(g.gaps, g.lam, g.branch) for g in traza.gap_sets] == [
            ((), Fraction(6), RAMA_WN),
            ((1,), Fraction(-3), RAMA_BINOMIAL),
            ((2,), Fraction(-12), RAMA_RAICES),
            ((1, 2), Fraction(6), RAMA_KXN),
        ]
        vacio = traza.gap_sets[0]
        assert vacio.c_m == D ** 3 + 6
        assert vacio.divide_ef
        assert traza.gap_sets[1].hcf == D

    def test_n_invalido(self, servicio_stafford):
        with pytest.raises(ValueError):
            servicio_stafford.verify_main_proposition(1)

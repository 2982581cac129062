from hypothesis import given
from hypothesis import strategies as st

from conftest import kxn, pd_subspaces, t_polys, un
from negocio.algebra_exacta import Poly
from negocio.subespacio_pd import (
    PdSubspace, SubalgebraProbe, codim, conductor, contains, intersect_tail, is_irreducible,
    is_monomial, make_pd, monomial_subspace, o_contains, scale_then_add_tail,
    stabilizer_basis, stabilizer_contains, whole_ring,
)
from negocio.subespacio_pd import sum as pd_sum

t = Poly.monomial


class TestMakePd:
    def test_kxn(self):
        V = kxn(4)
        assert V == PdSubspace(4, (Poly.constant(1),))
        assert V.render() == "pd(4; 1)"

    def test_colapso_a_r(self):
        V = make_pd([t(k) for k in range(3)], 3)
        assert V == whole_ring()
        assert V.render() == "pd(0)"

    def test_minimiza_n(self):
        V = make_pd([Poly.constant(1), t(3)], 4)
        assert V.conductor_exp == 3
        assert not contains(V, t(2))

    def test_un(self):
        assert un(4).render() == "pd(4; -t^3 + 1)"

    @given(pd_subspaces(irreducible=False))
    def test_idempotente_y_canonico(self, V):
        assert make_pd(list(V.finite_part), V.conductor_exp) == V
        if V.conductor_exp >= 1:
            assert not contains(V, t(V.conductor_exp - 1))


class TestPertenencia:
    def test_contains(self):
        assert contains(kxn(3), t(3))
        assert not contains(kxn(3), t(2))
        assert contains(un(3), 1 - t(2))
        assert 1 - t(2) in un(3)

    def test_o_contains(self):
        assert o_contains(t(2), Poly.constant(1) + t(3))
        assert o_contains(t(5), Poly.constant(7))
        assert not o_contains(t(1), t(1))
        assert t(4) in SubalgebraProbe(t(3))

    def test_stabilizer_contains(self):
        assert stabilizer_contains(kxn(3), t(3))
        assert not stabilizer_contains(kxn(2), t(1))
        V = monomial_subspace([0, 2], 4)
        assert stabilizer_contains(V, t(2))

    def test_stabilizer_basis_kxn(self):
        # S(k[Xₙ]) = k[Xₙ]
        assert stabilizer_basis(kxn(3)) == [Poly.constant(1)]
        assert stabilizer_basis(whole_ring()) == []

    @given(pd_subspaces(), t_polys(max_deg=8))
    def test_stabilizer_basis_decide(self, V, p):
        S = make_pd(stabilizer_basis(V), V.conductor_exp)
        assert contains(S, p) == stabilizer_contains(V, p)

    @given(pd_subspaces(), t_polys(max_deg=5), t_polys(max_deg=5))
    def test_estabilizador_multiplicativo(self, V, p, q):
        if stabilizer_contains(V, p) and stabilizer_contains(V, q):
            assert stabilizer_contains(V, p * q)

    @given(pd_subspaces(irreducible=False), st.integers(0, 12))
    def test_contiene_o_de_tn_menos_1(self, V, k):
        # O(tᴺ⁻¹) = k + tᴺk[t] ⊆ S(V)
        N = V.conductor_exp
        if k == 0 or k >= N:
            assert stabilizer_contains(V, t(k))


class TestInvariantes:
    def test_conductor(self):
        assert conductor(kxn(5)) == 5
        assert conductor(whole_ring()) == 0
        assert conductor(un(5)) == 5

    def test_is_irreducible(self):
        assert is_irreducible(kxn(3))
        assert not is_irreducible(make_pd([], 1))
        assert is_irreducible(un(3))

    def test_codim(self):
        assert codim(kxn(5)) == 4
        assert codim(whole_ring()) == 0

    def test_is_monomial(self):
        assert is_monomial(kxn(4))
        assert not is_monomial(un(4))
        assert is_monomial(whole_ring())

    @given(pd_subspaces())
    def test_conductor_de_la_forma_canonica(self, V):
        # un irreducible nunca tiene N = 1: contendría a 1 ≡ t⁰ módulo t
        assert conductor(V) == V.conductor_exp
        assert V.conductor_exp != 1
        assert is_irreducible(V)


class TestCirugias:
    def test_intersect_tail(self):
        assert intersect_tail(kxn(4), 1) == make_pd([], 4)
        V = monomial_subspace([0, 2, 3], 5)
        assert intersect_tail(V, 1) == monomial_subspace([2, 3], 5)

    def test_scale_then_add_tail(self):
        assert scale_then_add_tail(kxn(4), t(3)) == un(4)

    def test_sum(self):
        V = monomial_subspace([0, 2], 4)
        assert pd_sum(V, make_pd([], 4)) == V
        assert pd_sum(un(4), intersect_tail(V, 1)) == make_pd([1 - t(3), t(2)], 4)

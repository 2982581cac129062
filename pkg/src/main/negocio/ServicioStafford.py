"""
Subgrupos H(V) de Stafford: criterios de estabilización, batería de
condiciones necesarias para H(V) ⊆ H(W) y el guion de cálculos que prueba
que un V con H(k[Xₙ]) ⊆ H(V) es k[Xₙ].
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Optional

from negocio.algebra_exacta import Poly, hcf_list
from negocio.automorfismos import AutomorphismWord, ExpAdT, theta_transport
from negocio.configuracion import Configuracion
from negocio.errores import ScenarioMismatchError
from negocio.nucleo_weyl import EulerForm, WeylElement, deg_t, from_euler, mul
from negocio.ServicioAutomorfismos import ServicioAutomorfismos
from negocio.ServicioIdeales import ServicioIdeales, ideal_contains
from negocio.subespacio_pd import (
    PdSubspace, codim, conductor, intersect_tail, make_pd, monomial_subspace,
    scale_then_add_tail, stabilizer_basis, stabilizer_contains,
)
from negocio.subespacio_pd import sum as pd_sum

logger = logging.getLogger(__name__)

POSSIBLE = "POSSIBLE"
REFUTED = "REFUTED"

RAMA_RAICES = "root-mismatch"
RAMA_BINOMIAL = "binom-refuted"
RAMA_KXN = "k[X_n]"
RAMA_WN = "W_n-refuted"


@dataclass
class InclusionReport:
    v_label: str
    w_label: str
    s_inclusion_samples: list[tuple[str, bool]]
    conductor_inclusion: bool
    ef_divisibility: bool
    ef_v: Poly
    ef_w: Poly

    @property
    def s_inclusion(self) -> bool:
        return all(ok for _, ok in self.s_inclusion_samples)

    @property
    def verdict(self) -> str:
        if self.s_inclusion and self.conductor_inclusion and self.ef_divisibility:
            return POSSIBLE
        return REFUTED


@dataclass
class TrazaHuecos:
    """Datos exactos de un conjunto de huecos {n₁ < ... < n_s} ⊆ {1..n−2}."""
    gaps: tuple[int, ...]
    h: Poly
    lam: Fraction
    g_sigma: WeylElement
    hcf: Poly
    f_sigma: WeylElement
    c_m: Poly
    divide_ef: bool
    branch: str

    @property
    def s(self) -> int:
        return len(self.gaps)

    @property
    def r(self) -> int:
        return self.hcf.valuation() or 0


@dataclass
class ScenarioTrace:
    n: int
    steps: list[tuple[str, str]] = field(default_factory=list)
    gap_sets: list[TrazaHuecos] = field(default_factory=list)
    conclusion: str = ""

    def add(self, nombre: str, valor) -> None:
        texto = valor.render() if hasattr(valor, "render") else str(valor)
        self.steps.append((nombre, texto))

    def value(self, nombre: str) -> Optional[str]:
        return next((v for k, v in self.steps if k == nombre), None)


def _esperar(paso: str, esperado, calculado) -> None:
    if esperado != calculado:
        render = lambda x: x.render() if hasattr(x, "render") else str(x)  # noqa: E731
        raise ScenarioMismatchError(paso, render(esperado), render(calculado))


def _exp_ad_t(exponente: int) -> AutomorphismWord:
    return AutomorphismWord((ExpAdT(Poly.monomial(exponente)),))


def _producto_euler(raices) -> Poly:
    p = Poly.constant(1, "T")
    for a in raices:
        p = p * Poly({1: 1, 0: -a}, "T")
    return p


def _euler(p: Poly) -> WeylElement:
    return from_euler(EulerForm({0: p}))


def _dividir_derecha(d: WeylElement, p: Poly) -> WeylElement:
    terminos = {}
    for i, a in d.t_components().items():
        q, _ = a.divmod(p)
        for j, c in q.items():
            terminos[(i, j)] = c
    return WeylElement(terminos)


# --- formas cerradas ---

def closed_f_n(n: int) -> WeylElement:
    """(t∂−1)···(t∂−(n−1))."""
    return _euler(_producto_euler(range(1, n)))


def closed_e_n(n: int) -> WeylElement:
    """t⁻ⁿ·(t∂) = t^{1−n}∂."""
    return WeylElement.monomial(1 - n, 1)


def closed_u_n(n: int) -> PdSubspace:
    return make_pd([1 - Poly.monomial(n - 1)], n)


def closed_f_u(n: int) -> WeylElement:
    return closed_f_n(n) + WeylElement.monomial(n - 1, 0, (-1) ** n * factorial(n - 1))


def closed_e_u(n: int) -> WeylElement:
    return (mul(WeylElement.d(n - 2), WeylElement.monomial(1 - n, 1))
            + WeylElement.monomial(1 - n, 0, (-1) ** n * factorial(n - 1)))


def closed_ef_u(n: int) -> Poly:
    base = Poly.monomial(n - 1, var="D") + (-1) ** n * factorial(n - 1)
    return (base * base).monic()


def closed_w_n(n: int) -> PdSubspace:
    return make_pd([1 - Poly.monomial(n - 2)], n)


def closed_f_w(n: int) -> WeylElement:
    signo = (-1) ** (n - 1)
    return (closed_f_n(n) * Fraction(1, factorial(n - 1))
            + WeylElement.t(n - 2) * (WeylElement.euler() - 1) * signo)


def closed_e_w(n: int) -> WeylElement:
    signo = (-1) ** (n - 1)
    d = WeylElement.d
    izquierda = d(n - 1) * Fraction(1, factorial(n - 1)) + d(1) * signo
    derecha = d(n - 2) * Fraction(1, factorial(n - 2)) + signo
    return mul(izquierda, WeylElement.t(1 - n)) + mul(derecha, WeylElement.t(-n))


def closed_ef_w(n: int) -> Poly:
    base = Poly.monomial(n - 1, Fraction(1, factorial(n - 1)), "D") + Poly.monomial(1, (-1) ** (n - 1), "D")
    return (base * base).monic()


def closed_f_sigma_w(n: int) -> WeylElement:
    d = WeylElement.d
    return (WeylElement.t() * (d(n - 1) * Fraction(1, factorial(n - 1)) + d(1))
            - d(n - 2) * Fraction(1, factorial(n - 2)) - 1)


class ServicioStafford:
    """Criterios y guiones de verificación sobre los subgrupos H(V)."""

    def __init__(self, config: Optional[Configuracion] = None,
                 servicio_ideales: Optional[ServicioIdeales] = None,
                 servicio_automorfismos: Optional[ServicioAutomorfismos] = None):
        self.config = config or Configuracion()
        self.ideales = servicio_ideales or ServicioIdeales(self.config)
        self.automorfismos = servicio_automorfismos or ServicioAutomorfismos(self.config, self.ideales)
        logger.info("ServicioStafford inicializado")

    # --- criterios ---
    @staticmethod
    def stabilizes_exp(V: PdSubspace, p: Poly) -> bool:
        return stabilizer_contains(V, p)

    @staticmethod
    def stabilizes_exp_dual(W: PdSubspace, q: Poly) -> bool:
        return stabilizer_contains(W, theta_transport(q))

    def inclusion_report(self, V: PdSubspace, W: PdSubspace,
                         v_label: Optional[str] = None, w_label: Optional[str] = None) -> InclusionReport:
        """Condiciones necesarias de H(V) ⊆ H(W). REFUTED es una prueba de que no se cumple."""
        muestras = [(p.render(), stabilizer_contains(W, p)) for p in stabilizer_basis(V)]
        for k in range(V.conductor_exp, max(V.conductor_exp, W.conductor_exp) + 1):
            p = Poly.monomial(k)
            muestras.append((p.render(), stabilizer_contains(W, p)))
        ef_v = self.ideales.ef_invariant(V)
        ef_w = self.ideales.ef_invariant(W)
        informe = InclusionReport(
            v_label=v_label or V.render(), w_label=w_label or W.render(),
            s_inclusion_samples=muestras,
            conductor_inclusion=conductor(V) >= conductor(W),
            ef_divisibility=ef_w.divides(ef_v),
            ef_v=ef_v, ef_w=ef_w,
        )
        logger.info("inclusion_report(%s, %s) = %s", informe.v_label, informe.w_label, informe.verdict)
        return informe

    def normalizer_demo(self, n: int, gamma: AutomorphismWord) -> bool:
        kxn = make_pd([Poly.constant(1)], n)
        imagen, _ = self.automorfismos.image_pd_subspace(kxn, gamma)
        return imagen == kxn

    # --- guion de la proposición principal ---
    def verify_main_proposition(self, n: int) -> ScenarioTrace:
        if n < 2:
            raise ValueError("verify_main_proposition necesita n >= 2.")
        logger.info("Verificando la proposición principal para n = %d", n)
        traza = ScenarioTrace(n)
        kxn = make_pd([Poly.constant(1)], n)

        # (a) elementos característicos de k[Xₙ]
        par = self.ideales.characteristic_pair(kxn)
        _esperar("f_n", closed_f_n(n).normalized(), par.f)
        _esperar("e*_n", closed_e_n(n).normalized(), par.e_star)
        _esperar("e*f", Poly.monomial(n, var="D"), par.ef)
        traza.add("f_n", par.f)
        traza.add("e*_n", par.e_star)
        traza.add("e*f", par.ef)

        # (b) Uₙ = imagen de k[Xₙ] por exp(ad tⁿ⁻¹)
        u_n, certificado = self.automorfismos.image_pd_subspace(kxn, _exp_ad_t(n - 1))
        _esperar("U_n", closed_u_n(n), u_n)
        par_u = self.ideales.characteristic_pair(u_n)
        _esperar("f [U_n]", closed_f_u(n).normalized(), par_u.f)
        _esperar("e* [U_n]", closed_e_u(n).normalized(), par_u.e_star)
        _esperar("e*f [U_n]", closed_ef_u(n), par_u.ef)
        if par_u.ef.is_monomial():
            raise ScenarioMismatchError("e*f [U_n]", "no es potencia de D", par_u.ef.render())
        traza.add("U_n", u_n)
        traza.add("certificado [U_n]", f"{certificado.status} a={certificado.cota_t} b={certificado.cota_d}")
        traza.add("f [U_n]", par_u.f)
        traza.add("e* [U_n]", par_u.e_star)
        traza.add("e*f [U_n]", par_u.ef)

        if n == 2:
            traza.conclusion = "V = k[X_2]"
            return traza

        # (c) subespacios monomiales con conductor tⁿ
        sigma_v = make_pd([1 - Poly.monomial(n - 1)], n)
        for s in range(n - 1):
            for gaps in combinations(range(1, n - 1), s):
                traza.gap_sets.append(self._conjunto_huecos(n, gaps, sigma_v, par_u.ef))

        # (d) la rama s = 0 con n par
        if n % 2 == 0:
            self._escenario_w(n, traza)

        ramas = {g.branch for g in traza.gap_sets}
        if not ramas <= {RAMA_RAICES, RAMA_BINOMIAL, RAMA_KXN, RAMA_WN}:
            raise ScenarioMismatchError("ramas", "ramas conocidas", ", ".join(sorted(ramas)))
        traza.conclusion = f"V = k[X_{n}]"
        return traza

    def _conjunto_huecos(self, n: int, gaps: tuple[int, ...], sigma_v: PdSubspace, ef_u: Poly) -> TrazaHuecos:
        s = len(gaps)
        huecos = set(gaps) | {n - 1}
        V = monomial_subspace([j for j in range(n) if j not in huecos], n)
        V_sigma = pd_sum(sigma_v, intersect_tail(V, 1))
        _esperar(f"codim V_sigma {gaps}", s + 1, codim(V_sigma))

        h = _producto_euler(gaps)
        lam = factorial(n - 1) * h(0) / h(n - 1)
        E = WeylElement.euler()
        g_sigma = (mul(mul(_euler(h), E - (n - 1)), WeylElement.d(n - 2))
                   + WeylElement.t() * _euler(h.shift(1)) * lam)
        if not ideal_contains(V_sigma, g_sigma):
            raise ScenarioMismatchError(f"g_sigma {gaps}", f"en D(R, {V_sigma.render()})", g_sigma.render())
        _esperar(f"deg_t g_sigma {gaps}", s + 1, deg_t(g_sigma))

        hcf = hcf_list(list(g_sigma.t_components().values()))
        f_sigma = _dividir_derecha(g_sigma, hcf)
        if not ideal_contains(V_sigma, f_sigma):
            raise ScenarioMismatchError(f"f_sigma {gaps}", f"en D(R, {V_sigma.render()})", f_sigma.render())
        c_m = f_sigma.t_components()[s + 1]
        divide_ef = c_m.divides(ef_u)

        consecutivos = gaps == tuple(range(1, s + 1))
        binomial = comb(n - 2, s) == (-1) ** (n + s)
        if divide_ef and not (consecutivos and binomial):
            raise ScenarioMismatchError(f"c_m {gaps}", "no divide e*f [U_n]", c_m.render())
        if not consecutivos:
            rama = RAMA_RAICES
        elif not binomial:
            rama = RAMA_BINOMIAL
        elif s == n - 2:
            rama = RAMA_KXN
        elif s == 0 and n % 2 == 0:
            rama = RAMA_WN
        else:
            raise ScenarioMismatchError(f"rama {gaps}", "rama conocida", f"s={s}")
        logger.debug("n=%d huecos %s: lambda=%s rama=%s", n, gaps, lam, rama)
        return TrazaHuecos(gaps, h, Fraction(lam), g_sigma, hcf, f_sigma, c_m, divide_ef, rama)

    def _escenario_w(self, n: int, traza: ScenarioTrace) -> None:
        kxn = make_pd([Poly.constant(1)], n)
        sigma = _exp_ad_t(n - 2)
        w_n, _ = self.automorfismos.image_pd_subspace(kxn, sigma)
        _esperar("W_n", closed_w_n(n), w_n)

        v_s0 = monomial_subspace(range(n - 1), n)
        v_sigma, _ = self.automorfismos.image_pd_subspace(v_s0, sigma)
        _esperar("V_sigma [W_n]", scale_then_add_tail(v_s0, Poly.monomial(n - 2)), v_sigma)

        par_w = self.ideales.characteristic_pair(w_n)
        _esperar("f [W_n]", closed_f_w(n).normalized(), par_w.f)
        _esperar("e* [W_n]", closed_e_w(n).normalized(), par_w.e_star)
        _esperar("e*f [W_n]", closed_ef_w(n), par_w.ef)
        par_s = self.ideales.characteristic_pair(v_sigma)
        _esperar("f_sigma [W_n]", closed_f_sigma_w(n).normalized(), par_s.f)

        informe = self.inclusion_report(w_n, v_sigma, "W_n", "V_sigma")
        _esperar("inclusion_report(W_n, V_sigma)", REFUTED, informe.verdict)
        factor = (Poly.monomial(n - 1, Fraction(1, factorial(n - 1)), "D") + Poly.monomial(1, 1, "D")).monic()
        if not factor.divides(par_s.ef):
            raise ScenarioMismatchError("e*f [V_sigma]", f"múltiplo de {factor.render()}", par_s.ef.render())

        traza.add("W_n", w_n)
        traza.add("V_sigma [W_n]", v_sigma)
        traza.add("f [W_n]", par_w.f)
        traza.add("e* [W_n]", par_w.e_star)
        traza.add("e*f [W_n]", par_w.ef)
        traza.add("f_sigma [W_n]", par_s.f)
        traza.add("e*f [V_sigma]", par_s.ef)
        traza.add("inclusion_report(W_n, V_sigma)", informe.verdict)

"""
Aritmética en forma normal (t a la izquierda de ∂) sobre k[t, t⁻¹][∂],
grados, acción sobre polinomios de Laurent y forma de Euler.

A₁ = k[t, ∂] es el caso sin potencias negativas de t (`is_regular`).
"""
from fractions import Fraction
from math import comb
from typing import Iterator, Mapping, Optional

from negocio.algebra_exacta import (
    MINUS_INFINITY, Escalar, LaurentPoly, Poly, as_rational, falling,
    falling_poly, render_terms, stirling2,
)


def _monomio(i: int, j: int) -> str:
    partes = []
    if i == 1:
        partes.append("t")
    elif i != 0:
        partes.append(f"t^{i}")
    if j == 1:
        partes.append("D")
    elif j != 0:
        partes.append(f"D^{j}")
    return "*".join(partes)


class WeylElement:
    """
    Σ c_ij tⁱ∂ʲ en forma normal. Inmutable; la igualdad es la de los términos
    almacenados, que nunca incluyen coeficientes nulos.
    """
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[tuple[int, int], Escalar]] = None):
        limpio = {}
        for (i, j), c in (terms or {}).items():
            if j < 0:
                raise ValueError("Los exponentes de ∂ no pueden ser negativos.")
            c = as_rational(c)
            if c:
                limpio[(int(i), int(j))] = c
        self._terms = limpio
        self._hash = None

    # --- constructores ---
    @classmethod
    def zero(cls) -> "WeylElement":
        return cls()

    @classmethod
    def one(cls) -> "WeylElement":
        return cls({(0, 0): 1})

    @classmethod
    def scalar(cls, c: Escalar) -> "WeylElement":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: Escalar = 1) -> "WeylElement":
        return cls({(i, j): c})

    @classmethod
    def t(cls, i: int = 1) -> "WeylElement":
        return cls({(i, 0): 1})

    @classmethod
    def d(cls, j: int = 1) -> "WeylElement":
        return cls({(0, j): 1})

    @classmethod
    def euler(cls) -> "WeylElement":
        """El operador de Euler t∂."""
        return cls({(1, 1): 1})

    @classmethod
    def from_poly(cls, p: Poly) -> "WeylElement":
        """Inmersión de k[t], k[∂] o k[t∂] en el álgebra."""
        if p.var == "t":
            return cls({(e, 0): c for e, c in p.items()})
        if p.var == "D":
            return cls({(0, e): c for e, c in p.items()})
        return from_euler(EulerForm({0: p}))

    @classmethod
    def from_laurent(cls, h: LaurentPoly) -> "WeylElement":
        return cls({(e, 0): c for e, c in h.items()})

    # --- consulta ---
    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        """Términos en orden de impresión: t decreciente, luego ∂ decreciente."""
        for (i, j), c in sorted(self._terms.items(), reverse=True):
            yield i, j, c

    def coeff(self, i: int, j: int) -> Fraction:
        return self._terms.get((i, j), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_regular(self) -> bool:
        """True si el elemento está en A₁ (sin potencias negativas de t)."""
        return all(i >= 0 for i, _ in self._terms)

    def lowest_t(self) -> Optional[int]:
        return min((i for i, _ in self._terms), default=None)

    def leading_term(self) -> Optional[tuple[int, int, Fraction]]:
        """Término máximo en el orden lexicográfico (deg_t, deg_∂)."""
        if not self._terms:
            return None
        (i, j) = max(self._terms)
        return i, j, self._terms[(i, j)]

    def normalized(self) -> "WeylElement":
        """Representante módulo k*: coeficiente principal (lex) igual a 1."""
        lt = self.leading_term()
        if lt is None:
            return self
        return self * (1 / lt[2])

    def t_components(self) -> dict[int, Poly]:
        """Desarrollo Σ tⁱ a_i(∂) (∂ a la derecha): i -> a_i."""
        comps: dict[int, dict[int, Fraction]] = {}
        for (i, j), c in self._terms.items():
            comps.setdefault(i, {})[j] = c
        return {i: Poly(cs, "D") for i, cs in comps.items()}

    def pure_d_poly(self) -> Optional[Poly]:
        """El polinomio en ∂ si el elemento no depende de t; si no, None."""
        if any(i != 0 for i, _ in self._terms):
            return None
        return Poly({j: c for (_, j), c in self._terms.items()}, "D")

    def pure_t_laurent(self) -> Optional[LaurentPoly]:
        if any(j != 0 for _, j in self._terms):
            return None
        return LaurentPoly({i: c for (i, _), c in self._terms.items()})

    # --- aritmética ---
    def __add__(self, other):
        other = _coerce(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return WeylElement(out)

    __radd__ = __add__

    def __neg__(self):
        return WeylElement({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, WeylElement):
            if isinstance(other, (Poly, LaurentPoly)):
                return mul(self, _coerce(other))
            c = as_rational(other)
            return WeylElement({k: c * a for k, a in self._terms.items()})
        return mul(self, other)

    def __rmul__(self, other):
        return mul(_coerce(other), self)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Potencia negativa de un elemento de Weyl.")
        r = WeylElement.one()
        for _ in range(k):
            r = mul(r, self)
        return r

    # --- igualdad y texto ---
    def __eq__(self, other):
        if isinstance(other, WeylElement):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, Poly, LaurentPoly)):
            return self == _coerce(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def render(self) -> str:
        return render_terms((c, _monomio(i, j)) for i, j, c in self.terms())

    __str__ = render

    def __repr__(self):
        return f"WeylElement({self.render()!r})"


def _coerce(x) -> WeylElement:
    if isinstance(x, WeylElement):
        return x
    if isinstance(x, Poly):
        return WeylElement.from_poly(x)
    if isinstance(x, LaurentPoly):
        return WeylElement.from_laurent(x)
    return WeylElement.scalar(x)


def add(a: WeylElement, b: WeylElement) -> WeylElement:
    return a + b


def mul(a: WeylElement, b: WeylElement) -> WeylElement:
    """
    Producto en forma normal usando ∂ʲ tⁱ = Σ_k C(j,k)·[i]_k·tⁱ⁻ᵏ ∂ʲ⁻ᵏ,
    válido para todo entero i.
    """
    out: dict[tuple[int, int], Fraction] = {}
    for (i1, j1), c1 in a._terms.items():
        for (i2, j2), c2 in b._terms.items():
            c12 = c1 * c2
            for k in range(j1 + 1):
                f = falling(i2, k)
                if not f:
                    break
                clave = (i1 + i2 - k, j1 - k + j2)
                out[clave] = out.get(clave, 0) + c12 * comb(j1, k) * f
    return WeylElement(out)


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    """[a, b] = ab − ba."""
    return mul(a, b) - mul(b, a)


def deg_t(a: WeylElement):
    return max((i for i, _, _ in a.terms()), default=MINUS_INFINITY)


def deg_d(a: WeylElement):
    return max((j for _, j, _ in a.terms()), default=MINUS_INFINITY)


def act(d: WeylElement, h) -> LaurentPoly:
    """d(h): ∂ actúa como derivada formal, tⁱ como multiplicación."""
    if isinstance(h, Poly):
        h = LaurentPoly.from_poly(h)
    out: dict[int, Fraction] = {}
    for (i, j), c in d._terms.items():
        for k, hk in h.items():
            f = falling(k, j)
            if f:
                e = k - j + i
                out[e] = out.get(e, 0) + c * hk * f
    return LaurentPoly(out)


def act_monomial(d: WeylElement, k: int) -> LaurentPoly:
    """d(tᵏ)."""
    return act(d, LaurentPoly.monomial(k))


class EulerForm:
    """
    Σ tⁱ·a_i(t∂): componente i -> a_i(T), T en lugar de t∂.
    """
    __slots__ = ("_components",)

    def __init__(self, components: Optional[Mapping[int, Poly]] = None):
        self._components = {
            int(i): p.with_var("T") for i, p in (components or {}).items() if not p.is_zero()
        }

    def components(self) -> dict[int, Poly]:
        return dict(sorted(self._components.items(), reverse=True))

    def __eq__(self, other):
        if not isinstance(other, EulerForm):
            return NotImplemented
        return self._components == other._components

    def __hash__(self):
        return hash(frozenset(self._components.items()))

    def render(self) -> str:
        comps = self.components()
        if not comps:
            return "0"
        partes = []
        for i, p in comps.items():
            tpart = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            pstr = p.render()
            if p == 1:
                body = tpart or "1"
            elif not tpart:
                body = f"({pstr})" if len(comps) > 1 and not p.is_monomial() else pstr
            else:
                simple = p.is_monomial() and p.leading_coeff() > 0
                body = f"{tpart}*{pstr}" if simple else f"{tpart}*({pstr})"
            partes.append(body)
        return " + ".join(partes)

    __str__ = render

    def __repr__(self):
        return f"EulerForm({self.render()!r})"


def to_euler(a: WeylElement) -> EulerForm:
    """tⁱ∂ʲ = tⁱ⁻ʲ·[t∂]_j (factorial descendente en t∂)."""
    comps: dict[int, Poly] = {}
    for i, j, c in a.terms():
        comps[i - j] = comps.get(i - j, Poly.zero("T")) + falling_poly(j, "T") * c
    return EulerForm(comps)


def from_euler(e: EulerForm) -> WeylElement:
    """(t∂)ᵏ = Σ_j S(k, j)·tʲ∂ʲ con S los números de Stirling de segunda especie."""
    out: dict[tuple[int, int], Fraction] = {}
    for i, p in e.components().items():
        for k, c in p.items():
            for j in range(k + 1):
                s = stirling2(k, j)
                if s:
                    clave = (i + j, j)
                    out[clave] = out.get(clave, 0) + c * s
    return WeylElement(out)

"""
Sustrato exacto: escalares racionales, polinomios en una indeterminada,
polinomios de Laurent y álgebra lineal sobre Q.

Todo es inmutable y exacto; no hay flotantes en ningún cálculo.
"""
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Optional, Sequence, Union

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

# El cuerpo k. Fraction ya es canónico: reducido, denominador > 0, cero = 0/1.
Rational = Fraction

# Grado del polinomio cero (el mismo centinela que devuelve sympy).
MINUS_INFINITY = sympy.S.NegativeInfinity

# Etiqueta interna -> símbolo con que se imprime. T representa t∂ y se escribe E.
VARIABLES = {"t": "t", "D": "D", "T": "E"}

Escalar = Union[int, Fraction]


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if hasattr(x, "numerator") and hasattr(x, "denominator"):
        return Fraction(int(x.numerator), int(x.denominator))
    return Fraction(x)


def falling(x: Escalar, k: int) -> Fraction:
    """Factorial descendente x(x-1)...(x-k+1)."""
    r = Fraction(1)
    for i in range(k):
        r *= x - i
    return r


@lru_cache(maxsize=None)
def stirling2(k: int, j: int) -> int:
    return int(sympy.functions.combinatorial.numbers.stirling(k, j))


def _fmt_monomio(nombre: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return nombre
    return f"{nombre}^{e}"


def render_terms(terms: Iterable[tuple[Fraction, str]]) -> str:
    """
    Une términos (coeficiente, monomio) ya ordenados: signos explícitos entre
    términos, coeficiente 1 implícito, fracciones reducidas.
    """
    out = []
    for c, mono in terms:
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not out:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out) if out else "0"


class Poly:
    """Polinomio en una indeterminada (t, D o T) con coeficientes racionales."""
    __slots__ = ("var", "_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, Escalar]] = None, var: str = "t"):
        if var not in VARIABLES:
            raise ValueError(f"Indeterminada desconocida: {var!r}")
        limpio = {}
        for e, c in (coeffs or {}).items():
            if e < 0:
                raise ValueError("Los exponentes de un Poly no pueden ser negativos.")
            c = as_rational(c)
            if c:
                limpio[int(e)] = c
        self.var = var
        self._coeffs = limpio
        self._hash = None

    # --- construcción ---
    @classmethod
    def monomial(cls, e: int, c: Escalar = 1, var: str = "t") -> "Poly":
        return cls({e: c}, var)

    @classmethod
    def constant(cls, c: Escalar, var: str = "t") -> "Poly":
        return cls({0: c}, var)

    @classmethod
    def from_list(cls, coeffs: Sequence[Escalar], var: str = "t") -> "Poly":
        """Coeficientes en grado ascendente."""
        return cls(dict(enumerate(coeffs)), var)

    @classmethod
    def zero(cls, var: str = "t") -> "Poly":
        return cls({}, var)

    # --- consulta ---
    def items(self):
        return sorted(self._coeffs.items())

    def coeff(self, e: int) -> Fraction:
        return self._coeffs.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self):
        return max(self._coeffs) if self._coeffs else MINUS_INFINITY

    def valuation(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    def leading_coeff(self) -> Fraction:
        return self._coeffs[max(self._coeffs)] if self._coeffs else Fraction(0)

    def is_monomial(self) -> bool:
        return len(self._coeffs) == 1

    # --- aritmética ---
    def _check(self, other: "Poly"):
        if other.var != self.var:
            raise ValueError(f"Indeterminadas distintas: {self.var} y {other.var}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(other, self.var)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self._coeffs.items()}, self.var)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_rational(other)
            return Poly({e: c * a for e, a in self._coeffs.items()}, self.var)
        self._check(other)
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("Potencia negativa de un Poly.")
        r = Poly.constant(1, self.var)
        for _ in range(k):
            r = r * self
        return r

    def __call__(self, x: Escalar) -> Fraction:
        r = Fraction(0)
        if not self._coeffs:
            return r
        for e in range(max(self._coeffs), -1, -1):
            r = r * x + self.coeff(e)
        return r

    def derivative(self) -> "Poly":
        return Poly({e - 1: e * c for e, c in self._coeffs.items() if e}, self.var)

    def truncate(self, n: int) -> "Poly":
        """Resto módulo X^n."""
        return Poly({e: c for e, c in self._coeffs.items() if e < n}, self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self._coeffs, var)

    def monic(self) -> "Poly":
        if not self._coeffs:
            return self
        return self * (1 / self.leading_coeff())

    # --- delegado en sympy ---
    def _sympy(self) -> sympy.Poly:
        x = sympy.Symbol(self.var)
        if not self._coeffs:
            return sympy.Poly(0, x, domain=QQ)
        return sympy.Poly.from_dict(
            {(e,): sympy.Rational(c.numerator, c.denominator) for e, c in self._coeffs.items()},
            x, domain=QQ,
        )

    @classmethod
    def _from_sympy(cls, p: sympy.Poly, var: str) -> "Poly":
        return cls({e: Fraction(int(c.p), int(c.q)) for (e,), c in p.terms()}, var)

    def shift(self, a: Escalar) -> "Poly":
        """p(X + a)."""
        a = as_rational(a)
        return Poly._from_sympy(self._sympy().shift(sympy.Rational(a.numerator, a.denominator)), self.var)

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("División por el polinomio cero.")
        q, r = self._sympy().div(other._sympy())
        return Poly._from_sympy(q, self.var), Poly._from_sympy(r, self.var)

    def divides(self, other: "Poly") -> bool:
        """True si self divide a other."""
        if self.is_zero():
            return other.is_zero()
        return other.divmod(self)[1].is_zero()

    # --- igualdad y texto ---
    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.var == other.var and self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly.constant(other, self.var)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, frozenset(self._coeffs.items())))
        return self._hash

    def render(self) -> str:
        nombre = VARIABLES[self.var]
        return render_terms(
            (c, _fmt_monomio(nombre, e)) for e, c in sorted(self._coeffs.items(), reverse=True)
        )

    __str__ = render

    def __repr__(self):
        return f"Poly({self.render()!r}, var={self.var!r})"


@lru_cache(maxsize=None)
def falling_poly(k: int, var: str = "T") -> Poly:
    """X(X-1)...(X-k+1) como Poly."""
    r = Poly.constant(1, var)
    for i in range(k):
        r = r * Poly({1: 1, 0: -i}, var)
    return r


class LaurentPoly:
    """Polinomio de Laurent en t: exponentes enteros de cualquier signo."""
    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs: Optional[Mapping[int, Escalar]] = None):
        self._coeffs = {int(e): as_rational(c) for e, c in (coeffs or {}).items() if c}
        self._hash = None

    @classmethod
    def from_poly(cls, p: Poly) -> "LaurentPoly":
        return cls(dict(p.items()))

    @classmethod
    def monomial(cls, e: int, c: Escalar = 1) -> "LaurentPoly":
        return cls({e: c})

    def items(self):
        return sorted(self._coeffs.items())

    def coeff(self, e: int) -> Fraction:
        return self._coeffs.get(e, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self):
        return max(self._coeffs) if self._coeffs else MINUS_INFINITY

    def valuation(self) -> Optional[int]:
        return min(self._coeffs) if self._coeffs else None

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self._coeffs)

    def to_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError("El polinomio de Laurent tiene potencias negativas de t.")
        return Poly(self._coeffs, "t")

    def negative_part(self) -> dict[int, Fraction]:
        return {e: c for e, c in self._coeffs.items() if e < 0}

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self._coeffs)
        for e, c in other._coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = as_rational(other)
            return LaurentPoly({e: c * a for e, a in self._coeffs.items()})
        out = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, Poly) and other.var == "t":
            return self._coeffs == dict(other.items())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def render(self) -> str:
        return render_terms(
            (c, _fmt_monomio("t", e)) for e, c in sorted(self._coeffs.items(), reverse=True)
        )

    __str__ = render

    def __repr__(self):
        return f"LaurentPoly({self.render()!r})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Máximo común divisor mónico; gcd(a, 0) = monic(a)."""
    if a.var != b.var:
        raise ValueError(f"Indeterminadas distintas: {a.var} y {b.var}")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    return Poly._from_sympy(a._sympy().gcd(b._sympy()), a.var).monic()


def hcf_list(ps: Sequence[Poly]) -> Poly:
    """Máximo común divisor mónico de una lista; ignora ceros, todo cero -> 0."""
    if not ps:
        raise ValueError("hcf_list necesita al menos un polinomio.")
    var = ps[0].var
    no_nulos = [p for p in ps if not p.is_zero()]
    if not no_nulos:
        return Poly.zero(var)
    return reduce(poly_gcd, no_nulos[1:], no_nulos[0].monic())


def _to_qq(c: Fraction):
    return QQ(c.numerator, c.denominator)


def rref_sparse(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> tuple[list[dict[int, Fraction]], tuple[int, ...]]:
    """
    Forma escalonada reducida de una matriz dispersa (filas como dict
    columna -> valor). Devuelve las filas no nulas y las columnas pivote.
    """
    filas = [r for r in rows if any(r.values())]
    if not filas or ncols == 0:
        return [], ()
    dm = DomainMatrix(
        {i: {j: _to_qq(as_rational(v)) for j, v in r.items() if v} for i, r in enumerate(filas)},
        (len(filas), ncols), QQ,
    )
    reducida, pivotes = dm.rref()
    densa = reducida.to_list()
    salida = []
    for i in range(len(pivotes)):
        salida.append({j: as_rational(v) for j, v in enumerate(densa[i]) if v})
    return salida, tuple(pivotes)


def nullspace_sparse(rows: Sequence[Mapping[int, Fraction]], ncols: int) -> list[list[Fraction]]:
    """Base escalonada del núcleo derecho, ordenada por columna libre."""
    reducida, pivotes = rref_sparse(rows, ncols)
    libres = [j for j in range(ncols) if j not in set(pivotes)]
    base = []
    for f in libres:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for fila, pc in zip(reducida, pivotes):
            v[pc] = -fila.get(f, Fraction(0))
        base.append(v)
    return base


def solve_nullspace(M: Sequence[Sequence[Escalar]], ncols: Optional[int] = None) -> list[list[Fraction]]:
    """
    Base del núcleo derecho de M (exacta, en orden de columnas libres).
    `ncols` sólo hace falta cuando M no tiene filas.
    """
    if ncols is None:
        if not M:
            raise ValueError("Matriz sin filas: indique ncols.")
        ncols = len(M[0])
    filas = [{j: as_rational(v) for j, v in enumerate(r) if v} for r in M]
    return nullspace_sparse(filas, ncols)


def span_reduce(vs: Sequence[Poly], modulus_exp: int) -> list[Poly]:
    """
    Base escalonada reducida de span(vs) módulo t^N: pivote = grado más bajo,
    coeficiente 1 en el pivote y cero en los pivotes de los demás vectores.
    """
    if modulus_exp < 0:
        raise ValueError("modulus_exp debe ser >= 0.")
    if modulus_exp == 0 or not vs:
        return []
    var = vs[0].var
    filas = [dict(v.truncate(modulus_exp).items()) for v in vs]
    reducida, _ = rref_sparse(filas, modulus_exp)
    return [Poly(fila, var) for fila in reducida]

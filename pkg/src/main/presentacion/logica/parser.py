"""
Gramática de la CLI.

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := factor ('*'? factor)*
    factor := base ('^' ('-')? entero)?
    base   := racional | 't' | 'D' | 'E' | '(' expr ')'

La yuxtaposición es el producto no conmutativo en el orden escrito.
También se leen los literales `pd(N; p1, p2, ...)` y las palabras
`exp(ad(p));expD(ad(q));theta;theta^-1`.
"""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from negocio.algebra_exacta import LaurentPoly, Poly
from negocio.automorfismos import AutomorphismWord, ExpAdD, ExpAdT, Theta
from negocio.errores import NegativeDPowerError, ParseError
from negocio.nucleo_weyl import WeylElement, mul
from negocio.subespacio_pd import PdSubspace, make_pd

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<sym>[tDE])|(?P<op>[\^*+\-()]))")


# --- AST ---
@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Sym:
    name: str


@dataclass(frozen=True)
class Paren:
    inner: "ExprAst"


@dataclass(frozen=True)
class Pow:
    base: "ExprAst"
    exponent: int
    pos: int


@dataclass(frozen=True)
class Prod:
    factors: tuple["ExprAst", ...]


@dataclass(frozen=True)
class Neg:
    inner: "ExprAst"


@dataclass(frozen=True)
class Sum:
    terms: tuple["ExprAst", ...]


ExprAst = Union[Num, Sym, Paren, Pow, Prod, Neg, Sum]


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens, pos = [], 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            inicio = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"Carácter inesperado {text[inicio]!r}", inicio)
        tipo = m.lastgroup
        inicio = m.start(tipo)
        tokens.append((tipo, m.group(tipo), inicio))
        pos = m.end()
    tokens.append(("fin", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, valor: str):
        tipo, texto, pos = self.take()
        if texto != valor:
            raise ParseError(f"Se esperaba {valor!r} y llegó {texto or 'el final'!r}", pos)

    def expr(self) -> ExprAst:
        terminos = []
        _, texto, _ = self.peek()
        negativo = False
        if texto in ("+", "-"):
            self.take()
            negativo = texto == "-"
        termino = self.term()
        terminos.append(Neg(termino) if negativo else termino)
        while self.peek()[1] in ("+", "-"):
            _, op, _ = self.take()
            termino = self.term()
            terminos.append(Neg(termino) if op == "-" else termino)
        return terminos[0] if len(terminos) == 1 else Sum(tuple(terminos))

    def _empieza_factor(self) -> bool:
        tipo, texto, _ = self.peek()
        return tipo in ("num", "sym") or texto == "("

    def term(self) -> ExprAst:
        factores = [self.factor()]
        while True:
            if self.peek()[1] == "*":
                self.take()
                factores.append(self.factor())
            elif self._empieza_factor():
                factores.append(self.factor())
            else:
                break
        return factores[0] if len(factores) == 1 else Prod(tuple(factores))

    def factor(self) -> ExprAst:
        base = self.base()
        if self.peek()[1] != "^":
            return base
        _, _, pos = self.take()
        signo = 1
        if self.peek()[1] == "-":
            self.take()
            signo = -1
        tipo, texto, p = self.take()
        if tipo != "num" or "/" in texto:
            raise ParseError("El exponente debe ser un entero", p)
        return Pow(base, signo * int(texto), pos)

    def base(self) -> ExprAst:
        tipo, texto, pos = self.take()
        if tipo == "num":
            num, _, den = texto.partition("/")
            if den and int(den) == 0:
                raise ParseError("Denominador cero", pos)
            return Num(Fraction(int(num), int(den or 1)))
        if tipo == "sym":
            return Sym(texto)
        if texto == "(":
            inner = self.expr()
            self.expect(")")
            return Paren(inner)
        raise ParseError(f"Se esperaba un factor y llegó {texto or 'el final'!r}", pos)


def parse_expr(text: str) -> ExprAst:
    parser = _Parser(text)
    ast = parser.expr()
    tipo, texto, pos = parser.peek()
    if tipo != "fin":
        raise ParseError(f"Sobra {texto!r}", pos)
    return ast


def elaborate(ast: ExprAst) -> WeylElement:
    if isinstance(ast, Num):
        return WeylElement.scalar(ast.value)
    if isinstance(ast, Sym):
        return {"t": WeylElement.t(), "D": WeylElement.d(), "E": WeylElement.euler()}[ast.name]
    if isinstance(ast, Paren):
        return elaborate(ast.inner)
    if isinstance(ast, Neg):
        return -elaborate(ast.inner)
    if isinstance(ast, Sum):
        total = WeylElement.zero()
        for termino in ast.terms:
            total = total + elaborate(termino)
        return total
    if isinstance(ast, Prod):
        producto = WeylElement.one()
        for factor in ast.factors:
            producto = mul(producto, elaborate(factor))
        return producto
    base = elaborate(ast.base)
    if ast.exponent >= 0:
        return base ** ast.exponent
    return _potencia_negativa(base, ast.exponent, ast.pos)


def _potencia_negativa(base: WeylElement, k: int, pos: int) -> WeylElement:
    terminos = list(base.terms())
    if len(terminos) == 1:
        i, j, c = terminos[0]
        if j > 0:
            raise NegativeDPowerError(f"Potencia negativa de ∂ (posición {pos})")
        if c == 1 and i != 0:
            return WeylElement.t(i * k)
        if i == 0:
            return WeylElement.scalar(c ** k)
    raise ParseError("Sólo t y las constantes admiten exponentes negativos", pos)


def parse_weyl(text: str) -> WeylElement:
    return elaborate(parse_expr(text))


def parse_laurent(text: str) -> LaurentPoly:
    h = parse_weyl(text).pure_t_laurent()
    if h is None:
        raise ParseError(f"{text!r} no es un polinomio de Laurent en t", 0)
    return h


def parse_poly(text: str, var: str = "t") -> Poly:
    d = parse_weyl(text)
    if var == "t":
        h = d.pure_t_laurent()
        if h is None or not h.is_polynomial():
            raise ParseError(f"{text!r} no es un polinomio en t", 0)
        return h.to_poly()
    p = d.pure_d_poly()
    if p is None:
        raise ParseError(f"{text!r} no es un polinomio en D", 0)
    return p


def _separar(text: str, sep: str) -> list[tuple[str, int]]:
    """Trozos separados por `sep` a profundidad 0 con su posición inicial."""
    partes, nivel, inicio = [], 0, 0
    for k, ch in enumerate(text):
        if ch == "(":
            nivel += 1
        elif ch == ")":
            nivel -= 1
        elif ch == sep and nivel == 0:
            partes.append((text[inicio:k], inicio))
            inicio = k + 1
    partes.append((text[inicio:], inicio))
    return partes


_PD = re.compile(r"^\s*pd\(\s*(\d+)\s*(?:;(.*))?\)\s*$", re.S)


def parse_pd(text: str) -> PdSubspace:
    m = _PD.match(text)
    if not m:
        raise ParseError(f"Subespacio mal formado: {text!r}", 0)
    N = int(m.group(1))
    generadores = []
    if m.group(2) is not None and m.group(2).strip():
        for trozo, pos in _separar(m.group(2), ","):
            if not trozo.strip():
                raise ParseError("Generador vacío", m.start(2) + pos)
            generadores.append(parse_poly(trozo, "t"))
    return make_pd(generadores, N)


_EXP = re.compile(r"^exp\(\s*ad\((.*)\)\s*\)$", re.S)
_EXPD = re.compile(r"^expD\(\s*ad\((.*)\)\s*\)$", re.S)


def parse_word(text: str) -> AutomorphismWord:
    items = []
    for trozo, pos in _separar(text, ";"):
        item = trozo.strip()
        if item in ("", "id"):
            if len(text.strip()) and item == "":
                raise ParseError("Factor vacío en la palabra", pos)
            continue
        if item == "theta":
            items.append(Theta())
        elif item == "theta^-1":
            items.append(Theta(inverted=True))
        elif m := _EXP.match(item):
            items.append(ExpAdT(parse_poly(m.group(1), "t")))
        elif m := _EXPD.match(item):
            items.append(ExpAdD(parse_poly(m.group(1), "D")))
        else:
            raise ParseError(f"Factor desconocido {item!r}", pos)
    return AutomorphismWord(tuple(items))

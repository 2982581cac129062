"""
Interfaz de línea de comandos `weylpd`.

Códigos de salida: 0 éxito o verdadero, 1 falso o refutado, 2 error.
"""
import argparse
import io
import logging
import sys
from contextlib import redirect_stdout
from typing import Optional, Sequence

from datos.GuardarReportes import GuardarReportes
from negocio.configuracion import Configuracion
from negocio.errores import ErrorWeyl, ScenarioMismatchError
from negocio.nucleo_weyl import act, to_euler
from negocio.ServicioIdeales import dual_contains, ideal_contains
from negocio.ServicioStafford import REFUTED, ScenarioTrace
from negocio.subespacio_pd import codim
from presentacion.controlador.loader import get_services
from presentacion.logica.exportador_excel import generar_excel
from presentacion.logica.parser import parse_laurent, parse_pd, parse_poly, parse_weyl, parse_word
from presentacion.logica.reporte import ReportDocument, traza_dict, traza_texto
from presentacion.vista.config_app_cli import config_logging

logger = logging.getLogger(__name__)


def _comunes(suprimir: bool) -> argparse.ArgumentParser:
    """Opciones globales; en los subcomandos no pisan lo ya leído."""
    por_defecto = (lambda v: argparse.SUPPRESS) if suprimir else (lambda v: v)
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=por_defecto(False),
                   help="emite el ReportDocument en JSON")
    p.add_argument("--bound-cap", type=int, default=por_defecto(None),
                   help="cota de ∂-grado de las búsquedas (por defecto 4·codim+8)")
    p.add_argument("--out", default=por_defecto(None), metavar="RUTA",
                   help="guarda además el ReportDocument en JSON en RUTA")
    p.add_argument("-v", "--verbose", action="count", default=por_defecto(0),
                   help="-v INFO, -vv DEBUG")
    return p


def build_parser() -> argparse.ArgumentParser:
    comunes = _comunes(suprimir=True)
    parser = argparse.ArgumentParser(
        prog="weylpd", parents=[_comunes(suprimir=False)],
        description="Ideales D(R,V) del álgebra de Weyl A₁ y sus subgrupos de Stafford.",
    )
    sub = parser.add_subparsers(dest="comando", required=True)

    p = sub.add_parser("normalize", parents=[comunes], help="forma normal de una expresión")
    p.add_argument("expr")

    p = sub.add_parser("act", parents=[comunes], help="aplica un operador a un polinomio de Laurent")
    p.add_argument("expr")
    p.add_argument("--h", required=True, help="polinomio de Laurent en t")

    p = sub.add_parser("euler", parents=[comunes], help="forma de Euler Σ tⁱ·a_i(t∂)")
    p.add_argument("expr")

    p = sub.add_parser("char", parents=[comunes], help="elementos característicos e*, f y e*f")
    p.add_argument("pd")

    p = sub.add_parser("member", parents=[comunes], help="pertenencia a D(R,V) o, con --dual, a D(V,R)")
    p.add_argument("pd")
    p.add_argument("expr")
    p.add_argument("--dual", action="store_true")

    p = sub.add_parser("stab", parents=[comunes], help="¿exp(ad p) o exp(ad q(∂)) estabiliza el ideal?")
    p.add_argument("pd")
    grupo = p.add_mutually_exclusive_group(required=True)
    grupo.add_argument("--p", help="polinomio en t")
    grupo.add_argument("--q", help="polinomio en D")

    p = sub.add_parser("image", parents=[comunes], help="V_σ con σ(D(R,V)) = D(R,V_σ)")
    p.add_argument("pd")
    p.add_argument("--auto", required=True, help="palabra exp(ad(p));...")

    p = sub.add_parser("compare", parents=[comunes], help="condiciones necesarias de H(V) ⊆ H(W)")
    p.add_argument("v")
    p.add_argument("w")

    p = sub.add_parser("verify-paper", parents=[comunes], help="guion de la proposición principal")
    p.add_argument("--nmin", type=int, default=2)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--xlsx", help="guarda las trazas en un libro de Excel")

    p = sub.add_parser("golden", parents=[comunes], help="compara la salida de un comando con un archivo golden")
    p.add_argument("path")
    return parser


def _emitir(args, documento: ReportDocument, texto: Optional[str] = None) -> None:
    if args.json:
        sys.stdout.write(documento.to_json())
    else:
        sys.stdout.write(texto if texto is not None else documento.to_text())
    if args.out:
        guardado, mensaje = GuardarReportes().guardar_json(documento.to_json(), args.out)
        if not guardado:
            raise OSError(mensaje)


def _booleano(args, documento: ReportDocument, valor: bool) -> int:
    documento.status = "TRUE" if valor else "FALSE"
    _emitir(args, documento, ("true" if valor else "false") + "\n")
    return 0 if valor else 1


def cmd_normalize(args, servicios) -> int:
    d = parse_weyl(args.expr)
    _emitir(args, ReportDocument("normalize", {"expr": args.expr}).add("normal", d), d.render() + "\n")
    return 0


def cmd_act(args, servicios) -> int:
    d = parse_weyl(args.expr)
    r = act(d, parse_laurent(args.h))
    documento = ReportDocument("act", {"expr": args.expr, "h": args.h}).add("result", r)
    _emitir(args, documento, r.render() + "\n")
    return 0


def cmd_euler(args, servicios) -> int:
    forma = to_euler(parse_weyl(args.expr))
    _emitir(args, ReportDocument("euler", {"expr": args.expr}).add("euler", forma), forma.render() + "\n")
    return 0


def cmd_char(args, servicios) -> int:
    ideales = servicios[0]
    V = parse_pd(args.pd)
    par = ideales.characteristic_pair(V)
    documento = ReportDocument("char", {"pd": args.pd})
    documento.add("V", V).add("codim", codim(V))
    documento.add("f", par.f).add("f [Euler]", to_euler(par.f))
    documento.add("e*", par.e_star).add("e* [Euler]", to_euler(par.e_star))
    documento.add("e*f", par.ef)
    documento.bounds = {"bound_cap": ideales.config.cota_busqueda(codim(V))}
    _emitir(args, documento)
    return 0


def cmd_member(args, servicios) -> int:
    V = parse_pd(args.pd)
    d = parse_weyl(args.expr)
    valor = dual_contains(V, d) if args.dual else ideal_contains(V, d)
    documento = ReportDocument("member", {"pd": args.pd, "expr": args.expr, "dual": str(args.dual).lower()})
    return _booleano(args, documento.add("member", valor), valor)


def cmd_stab(args, servicios) -> int:
    stafford = servicios[2]
    V = parse_pd(args.pd)
    if args.p is not None:
        valor = stafford.stabilizes_exp(V, parse_poly(args.p, "t"))
        entradas = {"pd": args.pd, "p": args.p}
    else:
        valor = stafford.stabilizes_exp_dual(V, parse_poly(args.q, "D"))
        entradas = {"pd": args.pd, "q": args.q}
    return _booleano(args, ReportDocument("stab", entradas).add("stabilizes", valor), valor)


def cmd_image(args, servicios) -> int:
    automorfismos = servicios[1]
    V = parse_pd(args.pd)
    sigma = parse_word(args.auto)
    imagen, certificado = automorfismos.image_pd_subspace(V, sigma)
    documento = ReportDocument("image", {"pd": args.pd, "auto": args.auto})
    documento.add("V", V).add("sigma", sigma).add("V_sigma", imagen)
    documento.add("closed form", certificado.closed_form)
    documento.add("closed form match", certificado.closed_form_match)
    if certificado.ef is not None:
        documento.add("e*f [V_sigma]", certificado.ef)
    documento.add("status", certificado.status)
    documento.status = certificado.status
    documento.bounds = {"a": certificado.cota_t, "b": certificado.cota_d, "steps": certificado.pasos}
    _emitir(args, documento)
    return 0


def cmd_compare(args, servicios) -> int:
    stafford = servicios[2]
    V, W = parse_pd(args.v), parse_pd(args.w)
    informe = stafford.inclusion_report(V, W)
    documento = ReportDocument("compare", {"v": args.v, "w": args.w})
    documento.add("V", V).add("W", W)
    documento.add("S(V) in S(W)", informe.s_inclusion)
    documento.add("C(R,V) in C(R,W)", informe.conductor_inclusion)
    documento.add("e*f [V]", informe.ef_v).add("e*f [W]", informe.ef_w)
    documento.add("e*f divisibility", informe.ef_divisibility)
    documento.add("verdict", informe.verdict)
    documento.status = informe.verdict
    _emitir(args, documento)
    return 1 if informe.verdict == REFUTED else 0


def cmd_verify_paper(args, servicios) -> int:
    stafford = servicios[2]
    trazas = []
    texto = []
    for n in range(args.nmin, args.nmax + 1):
        try:
            traza = stafford.verify_main_proposition(n)
            trazas.append((traza, True, ""))
        except ScenarioMismatchError as e:
            sys.stderr.write(f"error [{e.codigo}] n = {n}: {e.mensaje}\n")
            trazas.append((ScenarioTrace(n), False, e.mensaje))
        texto.append(traza_texto(trazas[-1][0], trazas[-1][1]))
    aprobadas = sum(1 for _, ok, _ in trazas if ok)
    total = len(trazas)
    texto.append(f"verify-paper: {aprobadas}/{total} PASS\n")

    documento = ReportDocument("verify-paper", {"nmin": str(args.nmin), "nmax": str(args.nmax)})
    for traza, ok, error in trazas:
        documento.add(f"n = {traza.n}", traza_dict(traza, ok, error))
    documento.status = "PASS" if aprobadas == total else "FAIL"
    _emitir(args, documento, "".join(texto))

    if args.xlsx:
        guardar = GuardarReportes()
        guardado, mensaje = guardar.guardar_excel(
            generar_excel([(t, ok) for t, ok, _ in trazas]), args.xlsx
        )
        if not guardado:
            sys.stderr.write(mensaje + "\n")
            return 2
        if not guardar.validar_integridad_excel(args.xlsx):
            sys.stderr.write(f"error: el libro '{args.xlsx}' no se puede releer.\n")
            return 2
    return 0 if aprobadas == total else 1


def cmd_golden(args, servicios) -> int:
    argumentos, esperado = GuardarReportes().leer_golden(args.path)
    salida = io.StringIO()
    with redirect_stdout(salida):
        main(argumentos)
    obtenido = salida.getvalue()
    if obtenido == esperado:
        sys.stdout.write(f"golden OK: {args.path}\n")
        return 0
    lineas_e, lineas_o = esperado.split("\n"), obtenido.split("\n")
    for k in range(max(len(lineas_e), len(lineas_o))):
        e = lineas_e[k] if k < len(lineas_e) else "<fin>"
        o = lineas_o[k] if k < len(lineas_o) else "<fin>"
        if e != o:
            sys.stdout.write(
                f"golden MISMATCH: {args.path}, línea {k + 1}\n  esperado:  {e}\n  obtenido:  {o}\n"
            )
            break
    return 1


COMANDOS = {
    "normalize": cmd_normalize,
    "act": cmd_act,
    "euler": cmd_euler,
    "char": cmd_char,
    "member": cmd_member,
    "stab": cmd_stab,
    "image": cmd_image,
    "compare": cmd_compare,
    "verify-paper": cmd_verify_paper,
    "golden": cmd_golden,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    config_logging(args.verbose)
    config = Configuracion(bound_cap=args.bound_cap)
    try:
        return COMANDOS[args.comando](args, get_services(config))
    except ErrorWeyl as e:
        sys.stderr.write(f"error [{e.codigo}]: {e.mensaje}\n")
        return 2
    except (ValueError, OSError) as e:
        logger.debug("Entrada rechazada", exc_info=True)
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

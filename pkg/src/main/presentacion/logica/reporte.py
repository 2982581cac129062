"""
ReportDocument: resultado de un comando en texto y en JSON estable.
Los escalares se serializan como cadenas "num/den", nunca como flotantes.
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from negocio.ServicioStafford import ScenarioTrace, TrazaHuecos


def fmt_scalar(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def _valor(v) -> Any:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return v
    if isinstance(v, (int, Fraction)):
        return fmt_scalar(v)
    if isinstance(v, (list, tuple)):
        return [_valor(x) for x in v]
    if isinstance(v, dict):
        return {k: _valor(x) for k, x in v.items()}
    if hasattr(v, "render"):
        return v.render()
    return str(v)


def _texto(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if hasattr(v, "render"):
        return v.render()
    return str(v)


@dataclass
class ReportDocument:
    command: str
    inputs: dict[str, str] = field(default_factory=dict)
    results: list[tuple[str, Any]] = field(default_factory=list)
    status: str = "OK"
    bounds: dict[str, int] = field(default_factory=dict)

    def add(self, nombre: str, valor) -> "ReportDocument":
        self.results.append((nombre, valor))
        return self

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "inputs": dict(self.inputs),
            "results": [{"name": k, "value": _valor(v)} for k, v in self.results],
            "status": self.status,
            "bounds": {k: int(v) for k, v in self.bounds.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        return "".join(f"{k} = {_texto(v)}\n" for k, v in self.results)


def _gaps(g: TrazaHuecos) -> str:
    return "{" + ", ".join(str(x) for x in g.gaps) + "}"


def huecos_dict(g: TrazaHuecos) -> dict:
    return {
        "gaps": [str(x) for x in g.gaps],
        "s": str(g.s),
        "h": g.h.render(),
        "lambda": fmt_scalar(g.lam),
        "g_sigma": g.g_sigma.render(),
        "hcf": g.hcf.render(),
        "r": str(g.r),
        "f_sigma": g.f_sigma.render(),
        "c_m": g.c_m.render(),
        "divides_ef_U_n": g.divide_ef,
        "branch": g.branch,
    }


def traza_dict(traza: ScenarioTrace, ok: bool = True, error: str = "") -> dict:
    datos = {
        "n": str(traza.n),
        "steps": [{"name": k, "value": v} for k, v in traza.steps],
        "gap_sets": [huecos_dict(g) for g in traza.gap_sets],
        "conclusion": traza.conclusion,
        "status": "PASS" if ok else "FAIL",
    }
    if error:
        datos["error"] = error
    return datos


# pasos que se muestran en la salida de texto de verify-paper
PASOS_TEXTO = ("e*f", "U_n", "e*f [U_n]")
PASOS_TEXTO_W = ("e*f [W_n]",)


def traza_texto(traza: ScenarioTrace, ok: bool = True) -> str:
    lineas = [f"n = {traza.n}"]
    for nombre in PASOS_TEXTO:
        valor = traza.value(nombre)
        if valor is not None:
            lineas.append(f"  {nombre} = {valor}")
    for g in traza.gap_sets:
        lineas.append(f"  gaps {_gaps(g)}: s={g.s} lambda={g.lam} branch={g.branch}")
    for nombre in PASOS_TEXTO_W:
        valor = traza.value(nombre)
        if valor is not None:
            lineas.append(f"  {nombre} = {valor}")
    if ok:
        lineas.append(f"  result: PASS ({traza.conclusion})")
    else:
        lineas.append("  result: FAIL")
    return "\n".join(lineas) + "\n"

import io

import pandas as pd

from negocio.ServicioStafford import ScenarioTrace
from presentacion.logica.reporte import huecos_dict


def _tablas(trazas: list[tuple[ScenarioTrace, bool]]):
    resumen = pd.DataFrame([
        {
            "n": t.n,
            "Resultado": "PASS" if ok else "FAIL",
            "Conclusion": t.conclusion,
            "Pasos": len(t.steps),
            "Conjuntos de huecos": len(t.gap_sets),
        }
        for t, ok in trazas
    ])
    pasos = pd.DataFrame(
        [{"n": t.n, "Paso": k, "Valor": v} for t, _ in trazas for k, v in t.steps],
        columns=["n", "Paso", "Valor"],
    )
    huecos = pd.DataFrame(
        [{"n": t.n, **huecos_dict(g)} for t, _ in trazas for g in t.gap_sets],
    )
    if not huecos.empty:
        huecos["gaps"] = huecos["gaps"].apply(lambda xs: "{" + ", ".join(xs) + "}")
        ramas = huecos.groupby("branch").size().reset_index(name="Conjuntos")
    else:
        ramas = pd.DataFrame(columns=["branch", "Conjuntos"])
    return resumen, pasos, huecos, ramas


def generar_excel(trazas: list[tuple[ScenarioTrace, bool]]) -> bytes:
    """Libro con las trazas de verify-paper: hojas Resumen, Pasos, Huecos y Ramas."""
    resumen, pasos, huecos, ramas = _tablas(trazas)
    output = io.BytesIO()
    with pd.ExcelWriter(output, engine='xlsxwriter') as writer:
        resumen.to_excel(writer, index=False, sheet_name='Resumen')
        pasos.to_excel(writer, index=False, sheet_name='Pasos')
        huecos.to_excel(writer, index=False, sheet_name='Huecos')
        ramas.to_excel(writer, index=False, sheet_name='Ramas')

        workbook = writer.book

        #Formato de encabezado
        header_format = workbook.add_format({
            'bold': True,
            'bg_color': "#D5F549",
            'font_color': 'black',
            'align': 'center'
        })
        for nombre, df in (('Resumen', resumen), ('Pasos', pasos), ('Huecos', huecos), ('Ramas', ramas)):
            hoja = writer.sheets[nombre]
            for col_num, value in enumerate(df.columns.values):
                hoja.write(0, col_num, value, header_format)

        #Gráfica: conjuntos de huecos por rama
        if len(ramas):
            chart_bar = workbook.add_chart({'type': 'column'})
            chart_bar.add_series({
                'name': 'Conjuntos de huecos',
                'categories': ['Ramas', 1, 0, len(ramas), 0],
                'values': ['Ramas', 1, 1, len(ramas), 1],
                'data_labels': {'value': True}
            })
            chart_bar.set_title({'name': 'Conjuntos de huecos por rama'})
            chart_bar.set_x_axis({'name': 'Rama'})
            chart_bar.set_y_axis({'name': 'Conjuntos'})
            writer.sheets['Ramas'].insert_chart('D2', chart_bar)

    output.seek(0)
    return output.getvalue()

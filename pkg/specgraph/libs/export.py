# -*- coding: utf-8 -*-
#
"""

This file contains the report exporters (json, csv, graph6, xlsx).
Every exporter writes to a temporary file next to the target and renames it into place.

"""
#
# Project name: specgraph: signless Laplacian and domination toolkit for small graphs.

import json
import logging
import os
import tempfile
from contextlib import contextmanager
from typing import Callable, Iterator

from .report import SearchReport, rounded

logger = logging.getLogger(__name__)


def implemented_exporters() -> dict[str, Callable]:
    """
    Enum-like instance containing references to already implemented exporter function

    > implemented_exporters()[key](param[s])

    key is the format arg

    :return: Pointer to exporter function
    """
    return {
        'json': export_to_json,
        'csv': export_to_csv,
        'graph6': export_to_graph6,
        'xlsx': export_to_excel,
    }


def colors() -> dict[str, str]:
    return {
        'blue': '#183868',
        'pass': '#008000',
        'reduced': '#2A7AB0',
        'empty-domain': '#808080',
        'fail': '#C00000',
    }


def _check(report: SearchReport, output_file: str) -> None:
    if not isinstance(report, SearchReport):
        raise TypeError("Expected SearchReport, got '{}' instead".format(type(report)))
    if not isinstance(output_file, str):
        raise TypeError("Expected str, got '{}' instead".format(type(output_file)))
    if not output_file:
        raise ValueError("output_file must have a valid name.")


@contextmanager
def atomic_path(output_file: str) -> Iterator[str]:
    """Temporary path in the target directory, moved onto output_file on success"""
    folder = os.path.dirname(os.path.abspath(output_file))
    suffix = os.path.splitext(output_file)[1]
    fd, tmp = tempfile.mkstemp(prefix='.specgraph-', suffix=suffix, dir=folder)
    os.close(fd)
    try:
        yield tmp
        os.replace(tmp, output_file)
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)
    logger.info("report written to %s", output_file)


def render_json(report: SearchReport) -> str:
    return json.dumps(report.to_dict(), indent=2) + '\n'


def export_to_json(report: SearchReport, output_file: str = 'specgraph_report.json') -> None:
    """
    Export a report in the stable json schema

    :raises: TypeError, ValueError
    """
    _check(report, output_file)
    with atomic_path(output_file) as tmp:
        with open(tmp, 'w') as f:
            f.write(render_json(report))


def csv_rows(report: SearchReport) -> list[dict]:
    """One row for the report and one per subscan, in that order"""
    row = rounded({
        'suite': report.suite,
        'params': ' '.join("{}={}".format(k, v) for k, v in report.params.items() if not isinstance(v, dict)),
        'domain': report.description,
        'count': report.count,
        'scope': report.scope,
        'qstar': report.qstar,
        'unique': report.unique,
        'argmin': ' - '.join(entry.graph6 for entry in report.argmin),
        'family_match': ' - '.join(entry.family_match or '' for entry in report.argmin),
        'status': report.status,
        'runtime_ms': report.runtime_ms,
        'batteries': ' - '.join("{}:{}/{}/{}".format(b.name, b.passed, b.failed, b.skipped)
                                for b in report.batteries),
        'notes': ' - '.join(report.notes),
    })
    rows = [row]
    for sub in report.subscans:
        rows.extend(csv_rows(sub))
    return rows


def export_to_csv(report: SearchReport, output_file: str = 'specgraph_report.csv') -> None:
    """
    Export a report summary in a Comma Separated Values (csv) file

    :raises: TypeError, ValueError
    """
    import csv

    _check(report, output_file)
    fieldnames = ['suite', 'params', 'domain', 'count', 'scope', 'qstar', 'unique', 'argmin',
                  'family_match', 'status', 'runtime_ms', 'batteries', 'notes']
    with atomic_path(output_file) as tmp:
        with open(tmp, 'w', newline='') as csvfile:
            writer = csv.DictWriter(csvfile, dialect='excel', fieldnames=fieldnames)
            writer.writeheader()
            for rowdata in csv_rows(report):
                writer.writerow(rowdata)


def export_to_graph6(report: SearchReport, output_file: str = 'specgraph_report.g6') -> None:
    """
    Export the argmin graphs, or every survivor of a search, one graph6 string per line

    :raises: TypeError, ValueError
    """
    _check(report, output_file)
    with atomic_path(output_file) as tmp:
        with open(tmp, 'w') as f:
            for text in report.graphs():
                f.write(text + '\n')


def export_to_excel(report: SearchReport, output_file: str = 'specgraph_report.xlsx') -> None:
    """
    Export a report in an Excel file: a summary sheet, an argmin sheet with the
    candidate comparisons, and a battery sheet when the report carries tallies.

    :raises: TypeError, ValueError
    """
    import xlsxwriter

    _check(report, output_file)

    # ====================
    # FUNCTIONS
    # ====================
    def __flatten(r: SearchReport) -> list[SearchReport]:
        out = [r]
        for sub in r.subscans:
            out.extend(__flatten(sub))
        return out

    def __number(value):
        return '' if value is None else rounded(value)

    with atomic_path(output_file) as tmp:
        workbook = xlsxwriter.Workbook(tmp)
        workbook.set_properties({
            'title': os.path.basename(output_file),
            'subject': 'specgraph report',
            'category': 'report',
            'keywords': 'signless Laplacian, domination number'})

        # ====================
        # FORMATTING
        # ====================
        workbook.formats[0].set_font_name('Tahoma')

        format_sheet_title_content = workbook.add_format({'font_name': 'Tahoma', 'font_size': 12,
                                                          'font_color': colors()['blue'], 'bold': True,
                                                          'align': 'center', 'valign': 'vcenter', 'border': 1})
        format_table_titles = workbook.add_format({'font_name': 'Tahoma', 'font_size': 11,
                                                   'font_color': 'white', 'bold': True,
                                                   'align': 'center', 'valign': 'vcenter',
                                                   'border': 1, 'bg_color': colors()['blue']})
        format_table_cells = workbook.add_format({'font_name': 'Tahoma', 'font_size': 10,
                                                  'align': 'left', 'valign': 'top',
                                                  'border': 1, 'text_wrap': 1})
        format_status = {status: workbook.add_format({'font_name': 'Tahoma', 'font_size': 10, 'font_color': 'white',
                                                      'align': 'center', 'valign': 'top', 'border': 1,
                                                      'bg_color': color})
                         for status, color in colors().items() if status != 'blue'}

        # ====================
        # SUMMARY SHEET
        # ====================
        ws_sum = workbook.add_worksheet("Summary")
        ws_sum.set_tab_color(colors()['blue'])
        ws_sum.set_column("A:A", 3)
        ws_sum.set_column("B:B", 30)
        ws_sum.set_column("C:C", 45)
        ws_sum.set_column("D:G", 14)
        ws_sum.set_column("H:H", 60)

        ws_sum.merge_range("B2:H2", "SUITE SUMMARY", format_sheet_title_content)
        for col, title in enumerate(("Suite", "Domain", "Count", "Scope", "q*", "Status", "Notes"), 1):
            ws_sum.write(2, col, title, format_table_titles)
        for row, r in enumerate(__flatten(report), 3):
            ws_sum.write(row, 1, r.suite, format_table_cells)
            ws_sum.write(row, 2, r.description, format_table_cells)
            ws_sum.write(row, 3, r.count, format_table_cells)
            ws_sum.write(row, 4, r.scope, format_table_cells)
            ws_sum.write(row, 5, __number(r.qstar), format_table_cells)
            ws_sum.write(row, 6, r.status, format_status[r.status])
            ws_sum.write(row, 7, "\n".join(r.notes), format_table_cells)

        # ====================
        # ARGMIN SHEET
        # ====================
        ws_arg = workbook.add_worksheet("Argmin")
        ws_arg.set_column("A:A", 30)
        ws_arg.set_column("B:B", 24)
        ws_arg.set_column("C:C", 40)
        ws_arg.set_column("D:D", 18)
        ws_arg.set_column("E:E", 30)
        for col, title in enumerate(("Suite", "graph6", "Canonical form", "q", "Family match")):
            ws_arg.write(0, col, title, format_table_titles)
        row = 1
        for r in __flatten(report):
            for entry in r.argmin:
                ws_arg.write(row, 0, r.suite, format_table_cells)
                ws_arg.write(row, 1, entry.graph6, format_table_cells)
                ws_arg.write(row, 2, entry.canonical, format_table_cells)
                ws_arg.write(row, 3, __number(entry.q), format_table_cells)
                ws_arg.write(row, 4, entry.family_match or '', format_table_cells)
                row += 1

        # --------------------
        # COMPARISONS
        # --------------------
        row += 1
        for col, title in enumerate(("Suite", "Candidate", "q", "Delta", "Matches", "In domain")):
            ws_arg.write(row, col, title, format_table_titles)
        row += 1
        for r in __flatten(report):
            for c in r.comparisons:
                ws_arg.write(row, 0, r.suite, format_table_cells)
                ws_arg.write(row, 1, c.candidate, format_table_cells)
                ws_arg.write(row, 2, __number(c.q), format_table_cells)
                ws_arg.write(row, 3, __number(c.delta), format_table_cells)
                ws_arg.write(row, 4, 'yes' if c.matches else 'no', format_table_cells)
                ws_arg.write(row, 5, 'yes' if c.in_domain else 'no', format_table_cells)
                row += 1

        # ====================
        # BATTERY SHEET
        # ====================
        tallies = [b for r in __flatten(report) for b in r.batteries]
        if tallies:
            ws_bat = workbook.add_worksheet("Batteries")
            ws_bat.set_column("A:A", 28)
            ws_bat.set_column("B:D", 10)
            ws_bat.set_column("E:E", 80)
            for col, title in enumerate(("Battery", "Passed", "Failed", "Skipped", "Samples")):
                ws_bat.write(0, col, title, format_table_titles)
            for row, tally in enumerate(tallies, 1):
                ws_bat.write(row, 0, tally.name, format_table_cells)
                ws_bat.write(row, 1, tally.passed, format_table_cells)
                ws_bat.write(row, 2, tally.failed, format_status['fail'] if tally.failed else format_table_cells)
                ws_bat.write(row, 3, tally.skipped, format_table_cells)
                ws_bat.write(row, 4, "\n".join(tally.samples), format_table_cells)

        workbook.close()

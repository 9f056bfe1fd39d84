# -*- coding: utf-8 -*-
"""
Report Merger - Combines criterion results from several lattices into one output
Keeps a consistent 3-sheet structure (Criterion/KernelBound/Summary)
"""

from typing import Dict, List, Tuple

import pandas as pd
from openpyxl.styles import Font, PatternFill

from criterion.report import ROW_COLUMNS, CriterionReport

KERNEL_COLUMNS = ["beta", "sector", "lower_sector", "trace_kernel", "lower_trace", "kernel_margin", "pass_kernel"]
FAIL_FILL = PatternFill(start_color="FFC7CE", end_color="FFC7CE", fill_type="solid")


class ReportMerger:
    """Merges per-lattice criterion reports into single consolidated tables"""

    def __init__(self):
        self.criterion_data: List[pd.DataFrame] = []
        self.summaries: List[Dict] = []

    def add_lattice_results(self, report: CriterionReport) -> None:
        """Add results from a single lattice"""
        if not report.rows.empty:
            frame = report.rows.copy()
            frame.insert(0, "lattice", report.lattice)
            self.criterion_data.append(frame)
        self.summaries.append(report.summary())

    def merge_all_results(self) -> Tuple[pd.DataFrame, pd.DataFrame, pd.DataFrame]:
        """Merge all lattice results into consolidated DataFrames"""
        if self.criterion_data:
            merged = pd.concat(self.criterion_data, ignore_index=True)
        else:
            merged = pd.DataFrame(columns=["lattice"] + ROW_COLUMNS)
        merged.insert(0, "no", range(1, len(merged) + 1))

        kernel = merged[["no", "lattice"] + KERNEL_COLUMNS].copy()
        kernel["no"] = range(1, len(kernel) + 1)

        summary = pd.DataFrame(self.summaries)
        for column in ("betas", "sectors"):
            if column in summary.columns:
                summary[column] = summary[column].map(lambda values: " ".join(repr(x) for x in values))
        return merged, kernel, summary

    def export_to_excel(self, output_path: str) -> None:
        """Export merged results to an xlsx workbook, failing rows highlighted"""
        merged, kernel, summary = self.merge_all_results()

        with pd.ExcelWriter(output_path, engine="openpyxl") as writer:
            merged.to_excel(writer, sheet_name="Criterion", index=False)
            kernel.to_excel(writer, sheet_name="KernelBound", index=False)
            summary.to_excel(writer, sheet_name="Summary", index=False)

            self._format_sheet(writer.book["Criterion"], ["pass_criterion", "pass_kernel"])
            self._format_sheet(writer.book["KernelBound"], ["pass_kernel"])

    def _format_sheet(self, worksheet, pass_columns: List[str]) -> None:
        """Bold header, frozen first row, full-precision numbers, red fill on failures"""
        headers = [cell.value for cell in next(worksheet.iter_rows(min_row=1, max_row=1))]
        col = {name: i + 1 for i, name in enumerate(headers)}

        for cell in worksheet[1]:
            cell.font = Font(bold=True)
        worksheet.freeze_panes = "A2"

        numeric = [name for name in headers if name and (name.startswith("trace") or name.endswith("margin")
                                                         or name in ("lower_trace", "consistency_residual"))]
        for r in range(2, worksheet.max_row + 1):
            for name in numeric:
                worksheet.cell(row=r, column=col[name]).number_format = "0.0000000000000000E+00"

            flags = [worksheet.cell(row=r, column=col[name]).value for name in pass_columns if name in col]
            failed = any(flag is not None and not flag for flag in flags)
            if failed:
                for c in range(1, len(headers) + 1):
                    worksheet.cell(row=r, column=c).fill = FAIL_FILL

# -*- coding: utf-8 -*-
"""
Table Exporter
Writes search results and report checks to CSV or Excel with pandas
"""

import os
from typing import Dict, Iterable, List, Optional, Sequence

from .message_log import Level, log_message
from .report_generator import Report

try:
    import pandas as pd
    PANDAS_AVAILABLE = True
except ImportError:
    PANDAS_AVAILABLE = False

CHECK_COLUMNS = ['name', 'status', 'expected', 'actual', 'residual', 'provenance']
QUADRUPLE_COLUMNS = ['a', 'b', 'c', 'd', 'primitive']


class TableExporter:
    """Export row dictionaries in a fixed column order"""

    def is_available(self) -> bool:
        return PANDAS_AVAILABLE

    def frame(self, rows: Iterable[Dict], columns: Optional[Sequence[str]] = None):
        if not PANDAS_AVAILABLE:
            raise ImportError("pandas is not installed. Please install it with: pip install pandas openpyxl")
        df = pd.DataFrame(list(rows))
        if columns is not None:
            # Only include columns that exist
            order = [col for col in columns if col in df.columns]
            df = df.reindex(columns=order) if len(df) else pd.DataFrame(columns=list(columns))
        return df

    def write(self, rows: Iterable[Dict], output_path: str, columns: Optional[Sequence[str]] = None) -> str:
        """Write rows as .csv, or as .xlsx when the path says so"""
        df = self.frame(rows, columns)
        extension = os.path.splitext(output_path)[1].lower()
        if extension in ('.xlsx', '.xls'):
            df.to_excel(output_path, index=False)
        else:
            df.to_csv(output_path, index=False)
        log_message(f"✓ exported {len(df)} rows to {output_path}", Level.SUCCESS)
        return output_path

    def write_report(self, report: Report, output_path: str) -> str:
        rows = [check.to_dict() for check in report.checks]
        return self.write(rows, output_path, CHECK_COLUMNS)

    def write_quadruples(self, quadruples: Sequence, output_path: str) -> str:
        return self.write([q.to_dict() for q in quadruples], output_path, QUADRUPLE_COLUMNS)

    def status_counts(self, report: Report) -> Dict[str, int]:
        """Number of checks per status"""
        df = self.frame([check.to_dict() for check in report.checks], CHECK_COLUMNS)
        if not len(df):
            return {}
        return {str(k): int(v) for k, v in df['status'].value_counts().items()}


def write_rows(rows: List[Dict], output_path: str, columns: Optional[Sequence[str]] = None) -> str:
    return TableExporter().write(rows, output_path, columns)

#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Verification Report Generator
Collects named checks into a report and writes it as text, JSON or PDF
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

from .settings import get_setting

try:
    from reportlab.lib.pagesizes import A4
    from reportlab.lib import colors
    from reportlab.lib.units import mm
    from reportlab.platypus import SimpleDocTemplate, Table, TableStyle, Paragraph, Spacer
    from reportlab.lib.styles import getSampleStyleSheet, ParagraphStyle
    from reportlab.lib.enums import TA_CENTER
    REPORTLAB_AVAILABLE = True
except ImportError:
    REPORTLAB_AVAILABLE = False

PASS = 'pass'
FAIL = 'fail'
INFORMATIONAL = 'informational'


def describe(value: Any) -> Optional[str]:
    """Text form of a check value; floats keep output/digits significant digits"""
    if value is None:
        return None
    if isinstance(value, bool):
        return str(value).lower()
    digits = get_setting('output/digits', 15)
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    if isinstance(value, complex):
        return f"{value.real:.{digits}g}{value.imag:+.{digits}g}j"
    if isinstance(value, (list, tuple)):
        return '[' + ', '.join(describe(v) for v in value) + ']'
    return str(value)


@dataclass
class Check:
    """One named verification with its evidence"""
    name: str
    passed: bool
    expected: Optional[str] = None
    actual: Optional[str] = None
    residual: Optional[float] = None
    provenance: str = ''
    informational: bool = False

    def __post_init__(self):
        self.passed = bool(self.passed)
        if not isinstance(self.expected, (str, type(None))):
            self.expected = describe(self.expected)
        if not isinstance(self.actual, (str, type(None))):
            self.actual = describe(self.actual)
        if self.residual is not None:
            self.residual = float(self.residual)

    @property
    def status(self) -> str:
        if self.informational:
            return INFORMATIONAL
        return PASS if self.passed else FAIL

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data['status'] = self.status
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Check':
        data = dict(data)
        data.pop('status', None)
        return cls(**data)


@dataclass
class Report:
    """Checks of one command; merge order is by check name"""
    command: str
    checks: List[Check] = field(default_factory=list)
    wall_time_ms: int = 0

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks: List[Check]) -> None:
        self.checks.extend(checks)

    def sorted(self) -> 'Report':
        return Report(self.command, sorted(self.checks, key=lambda c: c.name), self.wall_time_ms)

    @property
    def status(self) -> str:
        graded = [c for c in self.checks if not c.informational]
        if not graded:
            return INFORMATIONAL
        return PASS if all(c.passed for c in graded) else FAIL

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command,
            'status': self.status,
            'wall_time_ms': int(self.wall_time_ms),
            'checks': [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> 'Report':
        data = json.loads(text)
        return cls(
            command=data['command'],
            checks=[Check.from_dict(c) for c in data.get('checks', [])],
            wall_time_ms=data.get('wall_time_ms', 0),
        )

    def to_text(self) -> str:
        lines = [f"{self.command}: {self.status.upper()} ({len(self.checks)} checks, {self.wall_time_ms} ms)"]
        for check in self.checks:
            marker = {PASS: '✓', FAIL: '✗', INFORMATIONAL: 'i'}[check.status]
            line = f"  {marker} {check.name}"
            if check.status != PASS:
                if check.expected is not None:
                    line += f"\n      expected: {check.expected}"
                if check.actual is not None:
                    line += f"\n      actual:   {check.actual}"
            if check.residual is not None:
                line += f"  [residual {describe(check.residual)}]"
            lines.append(line)
        return '\n'.join(lines)


class ReportPdfWriter:
    """Render a Report as a PDF table"""

    def is_available(self):
        """Check if PDF generation is available"""
        return REPORTLAB_AVAILABLE

    def write(self, report: Report, output_path: str) -> str:
        if not REPORTLAB_AVAILABLE:
            raise ImportError("ReportLab is not installed. Please install it with: pip install reportlab")

        doc = SimpleDocTemplate(output_path, pagesize=A4,
                                rightMargin=15*mm, leftMargin=15*mm,
                                topMargin=15*mm, bottomMargin=15*mm)
        elements = []
        styles = getSampleStyleSheet()
        title_style = ParagraphStyle(
            'CustomTitle',
            parent=styles['Heading1'],
            fontSize=16,
            spaceAfter=10,
            alignment=TA_CENTER
        )
        elements.append(Paragraph(f"VERIFICATION REPORT: {report.command}", title_style))
        elements.append(Paragraph(
            f"Status: {report.status.upper()} - {len(report.checks)} checks in {report.wall_time_ms} ms",
            styles['Normal']))
        elements.append(Spacer(1, 6*mm))

        cell_style = ParagraphStyle('Cell', parent=styles['Normal'], fontSize=7, leading=8)
        rows = [['Check', 'Status', 'Expected', 'Actual', 'Residual']]
        for check in report.checks:
            rows.append([
                Paragraph(check.name, cell_style),
                check.status,
                Paragraph((check.expected or '')[:300], cell_style),
                Paragraph((check.actual or '')[:300], cell_style),
                describe(check.residual) or '',
            ])

        table = Table(rows, colWidths=[50*mm, 20*mm, 45*mm, 45*mm, 20*mm], repeatRows=1)
        table.setStyle(TableStyle([
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTNAME', (0, 1), (-1, -1), 'Helvetica'),
            ('FONTSIZE', (0, 0), (-1, -1), 7),
            ('GRID', (0, 0), (-1, -1), 0.5, colors.black),
            ('VALIGN', (0, 0), (-1, -1), 'TOP'),
            ('BACKGROUND', (0, 0), (-1, 0), colors.lightgrey),
        ]))
        for index, check in enumerate(report.checks, start=1):
            if check.status == FAIL:
                table.setStyle(TableStyle([('TEXTCOLOR', (1, index), (1, index), colors.red)]))

        elements.append(table)
        doc.build(elements)
        return output_path

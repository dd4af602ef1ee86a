# Author: Victor
# Page name: pdf_report_generator.py
# Page purpose: PDF summary of a verification run
# Date of creation: 2026-10-16
import base64
import io
import logging
from datetime import datetime

from reportlab.lib import colors
from reportlab.lib.enums import TA_CENTER, TA_LEFT
from reportlab.lib.pagesizes import A4
from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
from reportlab.lib.units import inch
from reportlab.platypus import Image, PageBreak, Paragraph, SimpleDocTemplate, Spacer, Table, TableStyle

from report_summary import precision_chart, summary_stats

logger = logging.getLogger(__name__)

# characters of lhs/rhs shown per record
PREVIEW_DIGITS = 40


class PDFReportGenerator:
    def __init__(self):
        self.styles = getSampleStyleSheet()
        self._setup_custom_styles()

    def _setup_custom_styles(self):
        self.title_style = ParagraphStyle(
            'CustomTitle',
            parent=self.styles['Heading1'],
            fontSize=22,
            spaceAfter=24,
            alignment=TA_CENTER,
            textColor=colors.darkblue,
            fontName='Helvetica-Bold'
        )
        self.header_style = ParagraphStyle(
            'CustomHeader',
            parent=self.styles['Heading2'],
            fontSize=15,
            spaceAfter=12,
            spaceBefore=18,
            textColor=colors.darkgreen,
            fontName='Helvetica-Bold'
        )
        self.body_style = ParagraphStyle(
            'CustomBody',
            parent=self.styles['Normal'],
            fontSize=10,
            spaceAfter=8,
            alignment=TA_LEFT,
            fontName='Helvetica'
        )
        self.mono_style = ParagraphStyle(
            'Mono',
            parent=self.styles['Normal'],
            fontSize=8,
            fontName='Courier'
        )

    def generate_verification_report(self, reports, title="Identity verification report"):
        buffer = io.BytesIO()
        doc = SimpleDocTemplate(buffer, pagesize=A4, rightMargin=54, leftMargin=54, topMargin=54, bottomMargin=36)
        stats = summary_stats(reports)
        story = [Paragraph(title, self.title_style)]
        story.append(Paragraph(f"Generated on: {datetime.now().strftime('%B %d, %Y %H:%M')}", self.body_style))
        digits = sorted({report.digits for report in reports})
        if digits:
            story.append(Paragraph(f"Working digits: {', '.join(str(d) for d in digits)}", self.body_style))
        story.append(Spacer(1, 16))

        story.append(Paragraph("Summary", self.header_style))
        summary_table = Table(self._create_summary_table(stats), colWidths=[2.5 * inch, 2 * inch])
        summary_table.setStyle(self._table_style(colors.darkblue, colors.beige))
        story.append(summary_table)

        group_data = self._create_group_table(stats)
        if group_data:
            story.append(Paragraph("By group", self.header_style))
            group_table = Table(group_data, colWidths=[1.5 * inch, 1 * inch, 1 * inch, 1.5 * inch])
            group_table.setStyle(self._table_style(colors.darkgreen, colors.lightgreen))
            story.append(group_table)

        chart = precision_chart(reports)
        if chart:
            story.append(PageBreak())
            story.append(Paragraph("Agreement per identity", self.header_style))
            image = Image(io.BytesIO(base64.b64decode(chart)))
            image._restrictSize(6.5 * inch, 9 * inch)
            story.append(image)

        story.append(PageBreak())
        story.append(Paragraph("Records", self.header_style))
        for report in reports:
            verdict = "pass" if report.passed else "FAIL"
            story.append(Paragraph(f"<b>{report.id}</b> ({report.kind}): {verdict}, rel_diff {report.rel_diff}",
                                   self.body_style))
            story.append(Paragraph(f"lhs = {report.lhs[:PREVIEW_DIGITS]}", self.mono_style))
            story.append(Paragraph(f"rhs = {report.rhs[:PREVIEW_DIGITS]}", self.mono_style))
            for note in report.notes:
                story.append(Paragraph(f"&bull; {note}", self.body_style))
            story.append(Spacer(1, 6))

        doc.build(story)
        pdf_data = buffer.getvalue()
        buffer.close()
        logger.info("Built PDF report for %d records", len(reports))
        return pdf_data

    def write(self, path, reports):
        with open(path, 'wb') as handle:
            handle.write(self.generate_verification_report(reports))

    def _table_style(self, header, body):
        return TableStyle([
            ('BACKGROUND', (0, 0), (-1, 0), header),
            ('TEXTCOLOR', (0, 0), (-1, 0), colors.whitesmoke),
            ('ALIGN', (0, 0), (-1, -1), 'LEFT'),
            ('FONTNAME', (0, 0), (-1, 0), 'Helvetica-Bold'),
            ('FONTSIZE', (0, 0), (-1, 0), 11),
            ('BOTTOMPADDING', (0, 0), (-1, 0), 10),
            ('BACKGROUND', (0, 1), (-1, -1), body),
            ('GRID', (0, 0), (-1, -1), 1, colors.black)
        ])

    def _create_summary_table(self, stats):
        worst = stats.get("worst_agreement")
        return [
            ["Metric", "Value"],
            ["Records verified", str(stats.get("total", 0))],
            ["Passed", str(stats.get("passed", 0))],
            ["Failed", str(stats.get("failed", 0))],
            ["Fewest agreeing digits", "n/a" if worst is None else f"{worst}"],
            ["Failed ids", ", ".join(stats.get("failed_ids", [])) or "none"]
        ]

    def _create_group_table(self, stats):
        data = [["Group", "Records", "Passed", "Fewest digits"]]
        for group, group_stats in sorted(stats.get("groups", {}).items()):
            data.append([
                group,
                str(group_stats["total"]),
                str(group_stats["passed"]),
                str(group_stats["worst_agreement"])
            ])
        return data if len(data) > 1 else None

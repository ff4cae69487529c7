"""Excel export of the classification table."""
from django.core.exceptions import ImproperlyConfigured

from .criteria import TABLE_COLUMNS, column_label


def export_table(rows, path):
    """Write rows of (p, cells) to an .xlsx workbook at path."""
    try:
        from openpyxl import Workbook
        from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
        from openpyxl.utils import get_column_letter
    except ModuleNotFoundError:
        raise ImproperlyConfigured('Excel export requires openpyxl. Run: pip install openpyxl')

    wb = Workbook()
    ws = wb.active
    ws.title = 'Table'

    thin_border = Side(style='thin', color='CCCCCC')
    header_border = Side(style='thin', color='999999')
    header_fill = PatternFill(start_color='F5F5F5', end_color='F5F5F5', fill_type='solid')
    headers = ['p', 'p mod 24'] + [column_label(m, s) for m, s in TABLE_COLUMNS]
    last_column = get_column_letter(len(headers))

    ws.merge_cells(f'A1:{last_column}1')
    ws.row_dimensions[1].height = 32
    title = ws['A1']
    title.value = 'Non-constant progressions of four squares over Q(sqrt(d))'
    title.font = Font(bold=True, size=14)
    title.alignment = Alignment(horizontal='center', vertical='center')

    ws.row_dimensions[2].height = 12

    header_row = 3
    for col, header in enumerate(headers, 1):
        cell = ws.cell(row=header_row, column=col, value=header)
        cell.font = Font(bold=True)
        cell.fill = header_fill
        cell.alignment = Alignment(horizontal='center', vertical='center')
        cell.border = Border(top=header_border, bottom=header_border, left=header_border, right=header_border)
        ws.column_dimensions[get_column_letter(col)].width = 10

    for row_idx, (p, cells) in enumerate(rows, header_row + 1):
        values = [p, p % 24] + list(cells)
        for col, value in enumerate(values, 1):
            cell = ws.cell(row=row_idx, column=col, value=value)
            cell.alignment = Alignment(horizontal='center')
            cell.border = Border(bottom=thin_border, left=thin_border, right=thin_border)

    wb.save(path)
    return path

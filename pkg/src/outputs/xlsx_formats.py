"""Cell formats shared by the sheets of the runtime report."""

import xlsxwriter

_BASE = {"border": 1, "font_name": "Arial", "font_size": 10, "valign": "vcenter"}

# name -> properties layered over _BASE
FORMAT_SPECS = {
    "header": {"bg_color": "#4285f4", "font_color": "white", "bold": True, "align": "center"},
    "label": {"bg_color": "#D9D9D9", "bold": True},
    "body": {},
    "count": {"num_format": "#,##0", "align": "right"},
    "ms": {"num_format": "#,##0.000", "align": "right"},
    "pass": {"bg_color": "#D9EAD3", "align": "center"},
    "fail": {"bg_color": "#FFE5E5", "font_color": "#9C0006", "align": "center"},
}


class OutputFormatter:
    """Creates every format of FORMAT_SPECS once per workbook."""

    def __init__(self, workbook: xlsxwriter.Workbook):
        self.workbook = workbook
        self.formats = {name: workbook.add_format({**_BASE, **spec}) for name, spec in FORMAT_SPECS.items()}

    def get(self, format_name: str) -> xlsxwriter.format.Format:
        """
        Look up a format by name.

        Raises:
            KeyError: If format_name is not in FORMAT_SPECS
        """
        return self.formats[format_name]

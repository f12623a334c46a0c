"""
File: reporting.py

Description:
    Console summaries of mining runs and benchmark rows. Everything goes to stderr
    so a JSON report written to stdout stays machine-readable.
"""

import locale
import sys
from typing import Dict, Iterable, List

import numpy as np

try:
    locale.setlocale(locale.LC_ALL, "")
except locale.Error:
    pass


def _form_printable_groups(report: Dict) -> List[Dict]:
    """
    Splits a run summary into the blocks printed to the console, in a fixed order.
    Keys missing from the report are left out.
    """
    layout = [
        ("Algorithm", "k", "t", "Strategy"),
        ("Link Nodes", "Link Edges"),
        ("Link-Density", "Member Densities", "Max Link Weight", "Ratio Bound"),
        ("Modularity", "Mean Conductance"),
        ("Members Found", "Complete", "Iterations"),
        ("Link Graph Time", "Mining Time", "Evaluation Time"),
    ]
    groups = []
    for keys in layout:
        group = {key: report[key] for key in keys if key in report}
        if group:
            groups.append(group)
    return groups


def report_run(title: str, report: Dict):
    """
    Prints a run summary to stderr between BEGIN/END banners.
    :param title: name shown in the banners.
    :param report: flat dictionary of display names to values.
    """
    print("{}{}{}".format("-" * 8, f"BEGIN {title} REPORT", "-" * 8), file=sys.stderr)
    out = ""
    for group in _form_printable_groups(report):
        out += dump_dict_to_debug_string(group) + "\n"
    print(out[:-2], file=sys.stderr)
    print("{}{}{}\n".format("-" * 8, f"END {title} REPORT", "-" * 8), file=sys.stderr)


def report_rows(title: str, rows: Iterable[Dict]):
    """Prints each row to stderr."""
    print("{}{}{}".format("-" * 8, f"BEGIN {title}", "-" * 8), file=sys.stderr)
    for row in rows:
        print(dump_dict_to_debug_string(row), file=sys.stderr)
    print("{}{}{}\n".format("-" * 8, f"END {title}", "-" * 8), file=sys.stderr)


def _format_number(val) -> str:
    if isinstance(val, (float, np.floating)):
        return locale.format_string("%7.5f", val, grouping=True)
    return locale.format_string("%d", val, grouping=True)


def dump_dict_to_debug_string(dictionary: Dict) -> str:
    """
    Formats one value per line: floats to 5 decimals, ints with locale-aware
    thousands separators, lists element by element.
    """
    debug_string = ""
    for key, val in dictionary.items():
        if isinstance(val, np.ndarray):
            val = val.tolist() if val.shape else val.item()

        if isinstance(val, (tuple, list)):
            arr_str = ", ".join(
                _format_number(arg).strip()
                if isinstance(arg, (int, float, np.integer, np.floating))
                and not isinstance(arg, bool)
                else str(arg)
                for arg in val
            )
            debug_string = "{}{}: [{}]\n".format(debug_string, key, arr_str)
        elif isinstance(val, bool) or val is None:
            debug_string = "{}{}: {}\n".format(debug_string, key, val)
        elif isinstance(val, (int, float, np.integer, np.floating)):
            debug_string = "{}{}: {}\n".format(debug_string, key, _format_number(val))
        else:
            debug_string = "{}{}: {}\n".format(debug_string, key, val)

    return debug_string

from .reporting import dump_dict_to_debug_string, report_rows, report_run

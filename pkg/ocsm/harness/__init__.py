from .bench import run_bench
from .cli import main, run
from .run_report import build_run_report, load_report_solution, outcome_report, write_report
from .stats import stats_report

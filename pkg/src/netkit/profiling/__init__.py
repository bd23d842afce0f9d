"""Network profiles and the benchmark harness."""

from .bench import BenchRecord, run_benchmark, write_csv
from .render import render_report
from .report import DEFAULT_MEASURES, ProfileConfig, ProfileReport, build_profile
from .stats import DistributionSummary, spearman_matrix

__all__ = ["BenchRecord", "DEFAULT_MEASURES", "DistributionSummary", "ProfileConfig",
           "ProfileReport", "build_profile", "render_report", "run_benchmark",
           "spearman_matrix", "write_csv"]

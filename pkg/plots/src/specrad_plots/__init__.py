"""Figure scripts for specrad CLI outputs.

This package never recomputes mathematics: it renders the CSV/JSON artifacts
produced by the `specrad` CLI, validating their schemas strictly before
touching matplotlib.
"""

from .figures import plot_cdf, plot_qq, plot_rates, plot_ratio
from .schema import SchemaError, read_table

__all__ = ["SchemaError", "read_table", "plot_rates", "plot_ratio",
           "plot_cdf", "plot_qq"]

__version__ = "0.1.0"

from .loggers import get_logger, setup_custom_logging
from .utilities import (
    central_difference,
    iter_rows,
    one_sided_difference,
    parse_grid,
    rows_to_frame,
    worker_count,
    write_table,
)

__all__ = [
    "central_difference",
    "get_logger",
    "iter_rows",
    "one_sided_difference",
    "parse_grid",
    "rows_to_frame",
    "setup_custom_logging",
    "worker_count",
    "write_table",
]

"""Height-bounded Dyck paths counted by rational Q-bonacci numbers."""

from qdyck._qdyck import (  # noqa: F401
    __version__,
    brute_force,
    count,
    count_avoiding_ones_run,
    count_q_decreasing,
    crosscheck,
    crosscheck_all,
    enumerate_paths,
    explain,
    find_shift,
    generate,
    gfib,
    gfib_table,
    humps,
    is_q_decreasing,
    is_valid,
    render,
    strings,
    table,
    w_unit,
)

__all__ = [
    "brute_force",
    "count",
    "count_avoiding_ones_run",
    "count_q_decreasing",
    "crosscheck",
    "crosscheck_all",
    "enumerate_paths",
    "explain",
    "find_shift",
    "generate",
    "gfib",
    "gfib_table",
    "humps",
    "is_q_decreasing",
    "is_valid",
    "render",
    "strings",
    "table",
    "w_unit",
]

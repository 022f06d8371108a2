from .dp import DpTable, count_mk_dp, dp_tables
from .rows import count_mk_dp_rows, smallest_row_bound
from .mink import MinKResult, min_k, search_min_k

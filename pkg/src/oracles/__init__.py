from .search import (ZERO, IDENTITY, count_dominating_sets, exact_cover_exists, at_most_k_sum_target1_exists,
                     k_product_target1_exists, matrix_product_target_exists, pcp_bounded_search)

from .matrix import (Matrix, Vector, mat_mul, mat_product, apply, is_zero, is_identity, block_diag, pad,
                     first_column)
from .rowrestricted import RowRestrictedMatrix, rr_mul, nonzero_row_bound

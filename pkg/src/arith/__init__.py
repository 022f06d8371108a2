from .field import FieldTag, is_prime, parse_number
from .scalar import Scalar, scalar_add, scalar_mul, scalar_neg, scalar_inv, enumerate_field

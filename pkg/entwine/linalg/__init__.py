from .field import FieldSpec, QQ, GF, is_prime
from .matrix import (Matrix, BlockLayout, RowReduceResult, zeros, identity,
                     hstack, vstack, kron, permute_legs, swap,
                     rref, rank, kernel_basis, solve_affine, coordinates,
                     in_span, inverse, determinant, quotient_projection)

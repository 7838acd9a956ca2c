from kernels._dense import (
    as_matrix,
    frob_norm_sq,
    hadamard,
    matmul,
    max_abs,
    spd_solve,
    transpose,
)

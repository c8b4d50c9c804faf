from core.exactnum.cyclotomic import (
    ONE,
    ZERO,
    Cyclotomic,
    add,
    format_rational,
    format_scalar,
    invert_scalar,
    make_root,
    multiply,
    negate,
    order_of,
    parse_rational,
    parse_scalar,
    power,
)
from core.exactnum.linalg import det_exact, kernel_basis, kronecker_product, matmul, rank, rref

__all__ = [
    "ONE",
    "ZERO",
    "Cyclotomic",
    "add",
    "det_exact",
    "format_rational",
    "format_scalar",
    "invert_scalar",
    "kernel_basis",
    "kronecker_product",
    "make_root",
    "matmul",
    "multiply",
    "negate",
    "order_of",
    "parse_rational",
    "parse_scalar",
    "power",
    "rank",
    "rref",
]

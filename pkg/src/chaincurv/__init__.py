"""Exact nonnegative-curvature certificates for homogeneous fibration metrics.

The library decides, for a chain of compact Lie groups H < K < G drawn from
a fixed catalog (G simple of dimension at most 15), whether enlarging the
fibers of K/H -> G/H -> G/K keeps nonnegative sectional curvature for small
deformation times: positive cases carry exact symbolic certificates, failing
cases carry exactly verified commuting witness pairs, and a floating-point
optimizer searches for new witnesses which are then rationalized back into
the exact coefficient field.
"""

from .scalars import (
    Scalar, CScalar, ParamScalar, SQRT2, SQRT3, SQRT6,
    free_symbol, trig_pair, param_is_zero, scalar_arith,
)

__version__ = "0.1.0"

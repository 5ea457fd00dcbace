""" Partition polynomials, truncated power series and the power formulas for x^n. """
from .formulas import (mixed_expansion, p_hat, p_poly, power_identity_check, power_identity_formula, render_mixed,
                       series_consistency_check, series_p_poly)
from .partition import MAX_PARTITION_N, Partition, partitions
from .polynomial import RING, Z, Monomial, PartitionPolynomial, generator, make_monomial, render_monomial
from .series import RATIONAL_RING, RATIONAL_Z, coefficient, divide, rational_coefficient, rational_series, z_derivative

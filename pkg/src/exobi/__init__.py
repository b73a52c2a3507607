"""exobi: an exact symbolic workbench that machine-checks the algebra of the
exotic (non-deformation) bialgebras attached to the invertible 4x4 solutions
of the Yang-Baxter equation: the constant and parametrised Yang-Baxter
identities, RTT/RLL relation systems, dual bialgebras and their bases,
representations, Baxterisation, and the associated quantum planes.

Everything is computed over the field of rational functions in formal
parameters with Gaussian-rational coefficients; no floating point anywhere.
"""

from .scalar import Context, Scalar, parse_scalar
from .matrix import SquareMatrix, kron, inverse, determinant, minimal_polynomial
from .catalog import builtin_catalog, builtin, load_catalog, dump_catalog, hat

__version__ = "0.1.0"

"""Certified computation for sixth-order Lane-Emden stability analysis.

Subpackages split along trust boundaries: `polynomials`, `intervals`,
`sturm`, and `certificates` form the exact layer (Fractions and integer
roots only); `exponents`, `coefficients`, and `certifier` build the theory's
critical exponents and sign certificates on top of it; `profiles`,
`energy`, and `radial` are the floating-point numerics layer for the
energy-monotonicity identities and radial solver.
"""

__version__ = "0.1.0"

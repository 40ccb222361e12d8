"""cfbac: Gauss-like and Renyi-like continued fractions and the bi-sequence
of approximation coefficients of their natural extensions."""

__version__ = "0.1.0"

"""Complete permutation monomials over GF(p^2m): construction, inverses, exhaustive checks."""

__version__ = "0.1.0"

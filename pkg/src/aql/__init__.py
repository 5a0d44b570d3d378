"""Exact computations for affine quivers: root systems, finite-field
representations, Kac polynomials, Hall numbers, preprojective algebras and
the positive part of the affine Lie algebra."""

__version__ = "0.1.0"

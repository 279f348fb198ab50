"""Cyclotomic and inverse cyclotomic polynomials in exact arithmetic, with a
checker for the coefficient orthogonality of the cofactors (X^n - 1)/Phi_d."""

__version__ = "0.1.0"

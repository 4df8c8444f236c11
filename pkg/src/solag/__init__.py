"""Exact construction and verification of the Sobolev-Laguerre polynomials and their spectral differential operator."""

from .exactalg import Poly, Rational, binomial, deriv_at_zero, factorial, pochhammer
from .laguerre import sobolev_laguerre, t_comp, u_comp, u_comp_alt, v_comp
from .sobolev import SobolevSpace, gram, inner
from .spectral import (
    EigenQuad,
    OperatorBundle,
    build_A_explicit,
    build_A_sandwich,
    build_B,
    build_C,
    build_combined,
    build_L,
    bundle,
    eigen,
    eigen_combined,
)
from .weyl import DiffOp, apply, compose, conj_exp, sandwich

__version__ = "0.1.0"

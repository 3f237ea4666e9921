"""Exact calculator and verification harness for archimedean doubling
zeta values of U(a,b): monomial-ring arithmetic in Q(sqrt2, sqrt pi, i),
Gamma-factor evaluation, representation dimensions and formal degrees,
right/left critical zeta values with a constant-factor audit, and a
Monte-Carlo Gaussian-moment oracle.
"""

from .exact import ExactScalar, HalfInt, gamma_C, gamma_exact
from .ratfun import c_ratio
from .repdims import dim_lambda_closed, formal_degree, gt_dim_oracle, weyl_dim
from .sweep import standard_sweep
from .weights import (DiscreteSeriesWeight, Signature, TwistParams,
                      ZetaContext, make_context)
from .zeta import (audit, mc_closed, zeta_left_display, zeta_left_funceq,
                   zeta_right_chain, zeta_right_form1, zeta_right_form2)

__all__ = [
    "ExactScalar", "HalfInt", "gamma_C", "gamma_exact",
    "c_ratio", "weyl_dim", "gt_dim_oracle", "dim_lambda_closed",
    "formal_degree", "Signature", "DiscreteSeriesWeight", "TwistParams",
    "ZetaContext", "make_context", "standard_sweep", "mc_closed",
    "zeta_right_form1", "zeta_right_chain", "zeta_right_form2",
    "zeta_left_display", "zeta_left_funceq", "audit",
]

__version__ = "0.1.0"

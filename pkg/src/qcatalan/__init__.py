"""Exact computation with q-Catalan bases and their dual coefficients."""

from .catalan import (
    CatalanSeries,
    DualCoeffs,
    basis_element,
    bn,
    catalan_from_phi,
    catalan_from_ptilde,
    delta_p,
    dual_coeffs_segner,
    dual_coeffs_triangular,
    dual_form,
    op_T_apply,
    op_T_power,
    pi2,
    predual,
)
from .errors import (
    DomainError,
    IncompatibleRootError,
    InsufficientTruncationError,
    ParseError,
    PoleError,
    QCatalanError,
    UnsupportedError,
)
from .fps import ZSeries, ZTSeries, pochhammer
from .fuss import carlitz, q_airy, qfuss, qfuss_via_basis, rogers_ramanujan_cfrac
from .pary import PAryContext, diamond, pary_power, tgen_from_dual, u_apply
from .qfield import ONE, ZERO, QRat, qr_eval_q1, qr_qpow

__version__ = "0.1.0"

__all__ = [
    "CatalanSeries",
    "DualCoeffs",
    "basis_element",
    "bn",
    "catalan_from_phi",
    "catalan_from_ptilde",
    "delta_p",
    "dual_coeffs_segner",
    "dual_coeffs_triangular",
    "dual_form",
    "op_T_apply",
    "op_T_power",
    "pi2",
    "predual",
    "DomainError",
    "IncompatibleRootError",
    "InsufficientTruncationError",
    "ParseError",
    "PoleError",
    "QCatalanError",
    "UnsupportedError",
    "ZSeries",
    "ZTSeries",
    "pochhammer",
    "carlitz",
    "q_airy",
    "qfuss",
    "qfuss_via_basis",
    "rogers_ramanujan_cfrac",
    "PAryContext",
    "diamond",
    "pary_power",
    "tgen_from_dual",
    "u_apply",
    "ONE",
    "ZERO",
    "QRat",
    "qr_eval_q1",
    "qr_qpow",
]

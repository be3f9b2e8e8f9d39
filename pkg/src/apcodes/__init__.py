from src.apcodes.core import ap_decode, ap_design
from src.apcodes.tools.profile import ap_efficiency, ap_w_max, row_gcd_profile
from src.apcodes.tools.symmetric import symmetric_efficiency, symmetric_matrix, symmetric_terms

__all__ = [
    "ap_decode",
    "ap_design",
    "ap_efficiency",
    "ap_w_max",
    "row_gcd_profile",
    "symmetric_efficiency",
    "symmetric_matrix",
    "symmetric_terms",
]

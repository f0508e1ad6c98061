"""
Exact one-point intersection numbers of p-spin curves from matrix-model
one-point functions: closed, non-orientable and open sectors, virtual Euler
characteristics, and stationary Gromov-Witten invariants of CP^1.
"""
from .algebra import KPoly, as_rational, format_rational, gamma_ratio
from .closed import closed_one_point, euler_orientable
from .errors import PspinError
from .gw import gw_closed_form, gw_one_point
from .lie import euler_nonorientable, o2n_one_point, sp_one_point, o2n1_one_point
from .opensector import kp_one_point, open_o2n_one_point, open_p_one_point
from .series import IntersectionRecord, assemble_series, extract_intersections

__version__ = "0.1.0"

__all__ = [
    "KPoly", "as_rational", "format_rational", "gamma_ratio", "closed_one_point",
    "euler_orientable", "euler_nonorientable", "PspinError", "gw_one_point", "gw_closed_form",
    "o2n_one_point", "sp_one_point", "o2n1_one_point", "kp_one_point", "open_p_one_point",
    "open_o2n_one_point", "IntersectionRecord", "assemble_series", "extract_intersections",
]

"""enriphi: exact phi-function and positivity toolkit for the Enriques
lattice U + E8(-1), with nef/ample tests on the Hilbert scheme of points and
machine-checkable surjectivity certificates for higher Gaussian and
Gauss-Prym maps.
"""

from .certify import (Certificate, CertifyTarget, Step, Thresholds,
                      certify_gauss_on_surface, certify_gauss_prym,
                      thresholds)
from .gram import (GRAM, E8_CARTAN, F1, F2, LatticeError, PicClass, Vector,
                   as_vector, content, gram_determinant, gram_signature,
                   is_forward, pair, self_int, vec)
from .hilb2 import (Hilb2Class, Level, PhiUndefinedError, PositivityVerdict,
                    ample_verdict_hilb2, is_nef_hilb, restrict_torsion_twist)
from .phi import (PhiResult, enumerate_isotropic_with_pairing, phi,
                  phi_bruteforce)
from .surface import (PolarizedSurfaceReport, is_ample_on_s, is_k_very_ample,
                      is_nef_on_s, linear_system_dim, polarized_report,
                      sectional_genus)

__version__ = "0.1.0"

__all__ = [
    "Certificate", "CertifyTarget", "E8_CARTAN", "F1", "F2", "GRAM",
    "Hilb2Class", "LatticeError", "Level", "PhiResult", "PhiUndefinedError",
    "PicClass", "PolarizedSurfaceReport", "PositivityVerdict", "Step",
    "Thresholds", "Vector", "ample_verdict_hilb2", "as_vector",
    "certify_gauss_on_surface", "certify_gauss_prym", "content",
    "enumerate_isotropic_with_pairing", "gram_determinant", "gram_signature",
    "is_ample_on_s", "is_forward", "is_k_very_ample", "is_nef_hilb",
    "is_nef_on_s", "linear_system_dim", "pair", "phi", "phi_bruteforce",
    "polarized_report", "restrict_torsion_twist", "sectional_genus",
    "self_int", "thresholds", "vec",
]

"""Periodic Jacobi matrices: discriminant, band edges, quasimomentum, gap bounds."""

import json

from ._core import (
    BandStructure,
    InputError,
    NumericalError,
    PeriodicJacobi,
    Quasimomentum,
    band_edges,
    bloch_oracle,
    critical_points,
    discriminant,
    discriminant_coefficients,
    discriminant_complex,
    harper,
    harper_bound_demo,
    harper_lower_bound,
    make_jacobi,
    normalize,
    reconstruct,
    shift_diagonal,
    trace_powers,
)
from . import _core


def certify(J):
    """Inequality certificate as a dict (same layout as `pjacobi bounds`)."""
    return json.loads(_core.certify_json(J))


def analyze(J, skip_dirichlet=False, skip_herglotz=False):
    """Full analysis document as a dict (same layout as `pjacobi analyze`)."""
    return json.loads(_core.analyze_json(J, skip_dirichlet, skip_herglotz))


__version__ = "0.1.0"
__all__ = [name for name in dir() if not name.startswith("_")]

"""Kernel selection.

The compiled extension is used when it imports; ``ZLL_PURE=1`` forces the
numpy fallback (for testing and benchmarking).
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("ZLL_PURE", "") == "1":
    kernels = _fallback
    COMPILED = False
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]

        COMPILED = True
    except ImportError:  # extension not built
        kernels = _fallback
        COMPILED = False

NAME = "compiled" if COMPILED else "numpy"

theta_points = kernels.theta_points
rs_remainder = kernels.rs_remainder
hardy_z_points = kernels.hardy_z_points
dirichlet_points = kernels.dirichlet_points
dirichlet_grid = kernels.dirichlet_grid
z2_panels = kernels.z2_panels
panel_nodes = _fallback.panel_nodes

"""
Entangled subspaces
===================

Real superpositions of three orthonormal states trace a surface
r(theta, phi) = |C|.  Its enclosed volume summarizes how entangled the
subspace is; a zero of r marks a separable state in the span.
"""

import numpy as np

from qudit_concurrence.subspace import (
    SubspaceBasis,
    delta_condition,
    edge_scan,
    enclosed_volume,
    sign_criterion,
    surface,
)

unit = 4 * np.pi / 3
for name in ("su3.psi-", "so3.triplet", "so3.pentad", "so3.singlet-phi", "su3.phi"):
    basis = SubspaceBasis.from_catalog(name)
    v = enclosed_volume(basis, 200, 200)
    s = surface(basis, 61, 120)
    verdict = sign_criterion(basis)
    print(f"{name:<16} volume {v:.5f} ({v / unit:.3f} of the unit ball), "
          f"min r {s.radius.min():.3f}, {verdict.verdict.value}")

# the psi- basis conforms on the slots it occupies
rep = delta_condition(SubspaceBasis.from_catalog("su3.psi-"))
print("occupied slots", rep.support, "cross overlap there", rep.max_off_diagonal_on_support)

# p (psi+_1 + psi+_2 + psi+_3) + q (|11> + |22> + |33>) hits a product state
scan = edge_scan(360)
for p, q, c in scan.zeros:
    print(f"separable at p = {p:.6f}, q = {q:.6f}, p/q = {p / q:.6f}, |C| = {c:.1e}")

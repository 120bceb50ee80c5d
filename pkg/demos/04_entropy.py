"""
Entropy and the concurrence norm
================================

For a qubit on one side the entropy is a function of |C| alone.  For two
qutrits det rho_B is needed as well, and at fixed |C| the entropy lies in a
band whose edges meet at |C| = 0 and at the maximum sqrt(4/3).
"""

import numpy as np

from qudit_concurrence import PureState, concurrence_vector_pure, entropy_report
from qudit_concurrence.entropy import (
    MAX_QUTRIT_NORM,
    entropy_envelope,
    entropy_from_norm_qubit,
    entropy_from_norm_qutrit,
)

rng = np.random.default_rng(1)

a = rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3))
ps = PureState.normalized(a)
c = concurrence_vector_pure(ps).norm
print("2x3 state: from |C|", entropy_from_norm_qubit(c), " spectral", entropy_report(ps).von_neumann)

a = rng.normal(size=(3, 3)) + 1j * rng.normal(size=(3, 3))
ps = PureState.normalized(a)
r = entropy_report(ps)
c = concurrence_vector_pure(ps).norm
print("3x3 state: from |C|, det", entropy_from_norm_qutrit(c, r.det_rhoB), " spectral", r.von_neumann)
print("linear entropy", r.linear, "= |C|^2 / 2 =", c * c / 2)

# the band of possible entropies versus |C|
print(f"{'|C|':>6} {'inf':>8} {'sup':>8}")
for norm, lo, hi in entropy_envelope(np.linspace(0, MAX_QUTRIT_NORM, 12)):
    print(f"{norm:6.3f} {lo:8.4f} {hi:8.4f}")

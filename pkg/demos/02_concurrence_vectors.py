"""
Concurrence vectors of pure states
==================================

Each component pairs one positive root of each party.  Maximally entangled
qutrit pairs reach |C|^2 = 4/3 and product states give the zero vector.
"""

import numpy as np

from qudit_concurrence import PureState, catalog, concurrence_vector_pure

np.set_printoptions(precision=4, suppress=True)

for entry in catalog():
    cv = concurrence_vector_pure(entry.state)
    print(f"{entry.name:<12} |C|^2 = {cv.norm_sq:.6f}")

cv = concurrence_vector_pure(PureState.from_terms(3, 3, [(1, 1, 2), (1, 2, 3), (1, 3, 1)]))
for label, z in zip(cv.labels, cv.components):
    print(f"  {label:<12} {z.real:+.4f}")

# |C|^2 is four times the sum of squared 2x2 minors of the coefficient matrix,
# which is also 2 (1 - tr rho_B^2)
rng = np.random.default_rng(0)
a = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
ps = PureState.normalized(a)
rho_b = ps.coeffs.conj().T @ ps.coeffs
print("norm^2          ", concurrence_vector_pure(ps).norm_sq)
print("2 (1 - tr rho^2)", 2 * (1 - np.trace(rho_b @ rho_b).real))

# a product state
prod = PureState.product(rng.normal(size=3), rng.normal(size=3))
print("product state norm^2:", concurrence_vector_pure(prod).norm_sq)

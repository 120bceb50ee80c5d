"""
Mixed states
============

For density matrices each root pair gets Wootters' construction.  On two
qubits this is the usual concurrence, e.g. max(0, (3p - 1)/2) for Werner
states.
"""

import numpy as np

from qudit_concurrence import catalog_state, concurrence_vector_mixed, make_density, werner
from qudit_concurrence.states import maximally_mixed

for p in np.linspace(0, 1, 11):
    c = concurrence_vector_mixed(werner(p)).norm
    print(f"p = {p:.1f}   C = {c:.4f}   (3p-1)/2 = {max(0, (3 * p - 1) / 2):.4f}")

# a pure state written as a density matrix keeps |component| values
rho = make_density(catalog_state("su3.phi1"))
print("phi1 as rho:", np.round(concurrence_vector_mixed(rho).components, 6))

# mixing the three phi states kills every component
mix = make_density([(1 / 3, catalog_state(f"su3.phi{k}")) for k in (1, 2, 3)])
print("phi1/phi2/phi3 mixture:", np.round(concurrence_vector_mixed(mix).components, 6))
print("I/9:", concurrence_vector_mixed(maximally_mixed(3, 3)).norm_sq)

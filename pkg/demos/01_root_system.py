"""
Roots, weights and ladder operators
===================================

The fundamental representation of SU(N) is built from the simple roots.
Here we look at N = 3 and check the commutation relations up to N = 8.
"""

import numpy as np

from qudit_concurrence.ladder import build_ladder_set, flip_operators, verify_commutators
from qudit_concurrence.roots import fundamental_weights, positive_roots

# positive roots of SU(3), ordered by height: a1, a2, a1+a2
for r in positive_roots(3):
    print(f"{r.label():>6}  covariant = {[str(c) for c in r.covariant]}")

# weights of the three basis states; consecutive ones differ by a simple root
for k, w in enumerate(fundamental_weights(3), start=1):
    print(f"|{k}>  weight = {[str(c) for c in w.covariant]}")

ls = build_ladder_set(3)
print("H_1 =", np.diag(ls.cartan[0]))
print("E_(a1+a2) =\n", ls.raising[2].real.astype(int))

# flip operators play the role of the spin flip sigma_y
for f in flip_operators(ls):
    print(f.root.label(), "\n", f.matrix.real.astype(int))

# every relation holds exactly, including the composite-root signs
for n in range(2, 9):
    rep = verify_commutators(build_ladder_set(n))
    print(f"N={n}: {len(positive_roots(n)):2d} positive roots, max residual {rep.max_residual}")

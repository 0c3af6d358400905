# Phi in the sky: where do a velocity and its menhir disagree the most?
#
# The menhir sits at e = v/(1 + sqrt(1 - v^2)), roughly v/2 for small speeds
# and approaching v near the light cone. The gap v - e is largest exactly at
# v = 1/sqrt(phi), and there the menhir cuts the velocity segment in the
# golden proportion v : e = phi.

import math

import numpy as np

from menhir import menhir_gap, refine_gap_argmax

grid = np.linspace(0.0, 1.0, 21)
print(" v      menhir   gap")
for v in grid:
    gap = float(menhir_gap(v))
    print(f"{v:5.2f}   {v - gap:6.4f}   {gap:6.4f}")

v_star = refine_gap_argmax()
e_star = v_star - float(menhir_gap(v_star))
phi = (1 + math.sqrt(5)) / 2

print()
print("argmax of the gap:", v_star)
print("phi^(-1/2)       :", phi ** -0.5)
print("ratio v : e      :", v_star / e_star)
print("phi              :", phi)

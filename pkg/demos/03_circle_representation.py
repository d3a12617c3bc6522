# # Blow-ups on the circle
#
# A blow-up of F^k_d can be drawn on R/Z so that two vertices are adjacent
# exactly when they are more than (k-1)/(2k-1) apart.  All positions are
# exact fractions.

from fractions import Fraction

from sparsehalves import arc, blow_up, generalized_andrasfai, represent_blow_up, verify_angle_property
from sparsehalves.exact import format_rational

b = blow_up(generalized_andrasfai(2, 2), [2, 1, 2, 1, 1])
arr = represent_blow_up(b, 2)
print("positions:", [format_rational(p) for p in arr.positions])
print("angle rule holds:", verify_angle_property(arr)[0])

# ## Counting with lambda
#
# lam() returns twice the vertex count so half-weighted endpoints stay
# integral: a vertex on a "<" or ">" end counts 1, inside counts 2.

for left, right in ("[]", "()", "<>"):
    I = arc(0, Fraction(2, 5), left, right)
    print(f"{I}: lambda = {Fraction(arr.lam(I), 2)}")

# ## Arc halves
#
# z_xi is the vertex closing the clockwise run of floor(n/2) vertices
# starting at xi.

xi = Fraction(1, 10)
z = arr.z_xi(xi)
print(f"z_xi for xi={xi}: vertex {z} at {format_rational(arr.positions[z])}")
print("arc half:", arr.half_arc_vertices(xi))

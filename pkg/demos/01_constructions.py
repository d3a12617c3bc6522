# # Generalised Andrasfai graphs
#
# F^k_d lives on (2k-1)(d-1)+2 vertices arranged on a line; two vertices are
# adjacent when their distance falls in a window of width d-1.  This script
# builds a few of them and checks the basic invariants.

from sparsehalves import generalized_andrasfai, odd_girth, independence_number, chromatic_number
from sparsehalves.andrasfai import blow_up

# ## Order, degree, odd girth

for k in (2, 3, 4):
    for d in (1, 2, 3, 4):
        g = generalized_andrasfai(k, d)
        print(f"F({k},{d}): n={g.n:2d}  regular={g.is_regular(d)}  odd girth={odd_girth(g)}")

# F^k_2 is just the odd cycle C_{2k+1}, and F^k_1 is a single edge.

print(generalized_andrasfai(3, 2).edges)

# ## Independence and chromatic number
#
# The graphs are triangle-free and 3-chromatic once d >= 2.

g = generalized_andrasfai(2, 3)
alpha, witness = independence_number(g)
print("alpha(F(2,3)) =", alpha, "witness", witness, " chi =", chromatic_number(g))

# ## Blow-ups
#
# Each vertex becomes an independent class; class sizes can differ or be zero.

b = blow_up(g, [2, 1, 0, 3, 1, 1, 2, 1])
print("blow-up has", b.n, "vertices and", b.result.num_edges, "edges")
print("class of each vertex:", b.class_of)

# # Homomorphisms between Andrasfai graphs
#
# F_d maps to F_d' exactly when d' >= d.  The solver below is a plain
# backtracking search with arc consistency, so a "no" is a proof by
# exhaustion.

from sparsehalves import andrasfai, find_homomorphism, petersen, verify_homomorphism
from sparsehalves.homomorphism import min_andrasfai_index

print("     " + " ".join(f"d'={d}" for d in range(1, 6)))
for d in range(1, 6):
    row = []
    for d2 in range(1, 6):
        hom = find_homomorphism(andrasfai(d), andrasfai(d2))
        row.append("  yes" if hom is not None else "   no")
    print(f"d={d} " + " ".join(row))

# A witness map, checked edge by edge.

hom = find_homomorphism(andrasfai(2), andrasfai(3))
print("F_2 -> F_3 via", hom.map, "valid:", verify_homomorphism(hom))

# ## Where does the Petersen graph land?
#
# Petersen is triangle-free with odd girth 5, so the natural question is the
# least d with Petersen -> F_d.  We only report what the search finds.

print("least d with Petersen -> F_d (d <= 6):", min_andrasfai_index(petersen(), 2, 6))

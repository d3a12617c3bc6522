# # Checking the counting arguments on instances
#
# Every check is an implication.  Hypotheses that would need the whole graph
# to be dense are restricted to the arcs actually used, so on a blow-up they
# are sometimes true and the conclusion is then tested for real.

import random

from sparsehalves import (
    blow_up,
    check_useful_lemma,
    generalized_andrasfai,
    partition_identity_check,
    prop32_geometry,
    represent_blow_up,
    winding_trace,
)
from sparsehalves.circle import threshold
from sparsehalves.prooflab import sample_interval, sample_point

rng = random.Random(1)
arr = represent_blow_up(blow_up(generalized_andrasfai(3, 2), 2), 3)
print("n =", arr.n, " alpha =", arr.alpha)

# ## Interval lemmas
#
# These only assume a length bound on the interval.

for part in ("i", "ii", "iii"):
    reports = [check_useful_lemma(arr, part, interval=sample_interval(arr, rng)) for _ in range(100)]
    used = sum(r.hypotheses_held for r in reports)
    print(f"part {part}: hypotheses held {used}/100, all implications held: "
          f"{all(r.implication_held for r in reports)}")

# ## Arc-localised parts
#
# These need 2(2k+1) | n, which holds here (n = 14).

for part in ("u4", "iv", "vi", "claim"):
    reports = [check_useful_lemma(arr, part, xi=sample_point(arr, rng)) for _ in range(50)]
    print(f"{part}: hypotheses held {sum(r.hypotheses_held for r in reports)}/50, "
          f"implications held: {all(r.implication_held for r in reports)}")

# ## Identity, winding sequence, polygon

print("partition identity:", partition_identity_check(arr).trace)

t = winding_trace(arr, arr.positions[0] - threshold(3))
print(f"winding: period {t.period}, turns {t.winding}, coverage {t.coverage} = {t.winding} * n")

rep = prop32_geometry(arr)
print("lambda((z0, z')) =", rep.lambdas["lam_z0_zprime"], " alpha =", rep.alpha,
      " (g2) held:", rep.g2_held)

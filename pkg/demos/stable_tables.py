"""Stable dimension tables for Aut(F_n) and Out(F_n).

Prints both tables up to weight 6, then checks two things by hand: the Aut
column is a sum of Out columns over box removals, and weighting each entry
by the dimension of the Specht module recovers a count of set partitions.
"""

from stabletwist.partitions import dim_specht, enumerate_partitions, format_exponent, remove_boxes_rho
from stabletwist.setpart import bell_numbers, enumerate_set_partitions
from stabletwist.stablecohom import GroupFamily, build_table

aut = build_table(GroupFamily.AUT, 6).as_dict()
out = build_table(GroupFamily.OUT, 6).as_dict()

for q in range(7):
    print(f"|lambda| = {q}")
    for lam in enumerate_partitions(q):
        print(f"  {format_exponent(lam):12s} Aut {aut[lam]:3d}   Out {out[lam]:3d}")

# Aut is recovered from Out by removing at most one box per row
lam = (2, 2)
terms = sorted(remove_boxes_rho(lam), reverse=True)
print(f"\nAut{format_exponent(lam)} = " + " + ".join(f"Out{format_exponent(m)}" for m in terms)
      + " = " + " + ".join(str(out[m]) for m in terms) + f" = {aut[lam]}")

# the tensor power H^{tensor q} has dimension sum_lam dim(S^lam) * dim(S_lam)
bell = bell_numbers(6)
for q in range(1, 7):
    a = sum(dim_specht(l) * aut[l] for l in enumerate_partitions(q))
    o = sum(dim_specht(l) * out[l] for l in enumerate_partitions(q))
    free = len(enumerate_set_partitions(q, forbid_singletons=True))
    print(f"q={q}: Aut trace {a} (Bell {bell[q]}), Out trace {o} (singleton-free {free})")

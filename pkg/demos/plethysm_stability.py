"""How the plethysm Sym^k(Sym^l) stabilizes.

nu^{k,l}(mu) is the multiplicity of S_(kl-|mu|, mu) in Sym^k(Sym^l V). It
grows with k and l and then stops changing; the stable values are the Out
dimensions read off conjugate shapes.
"""

from stabletwist.partitions import conjugate, format_partition
from stabletwist.stablecohom import GroupFamily, dim_schur
from stabletwist.symfunc import nu, nu_infinity, plethysm_h_h

print("Sym^2(Sym^3):")
for lam, c in plethysm_h_h(2, 3).items():
    print(f"  {format_partition(lam)}: {c}")

mu = (2, 2)
print(f"\nnu^(k,l)({format_partition(mu)}) for k, l <= 6:")
print("     " + " ".join(f"l={l:<2d}" for l in range(1, 7)))
for k in range(1, 7):
    row = []
    for l in range(1, 7):
        row.append(f"{nu(k, l, mu):4d}" if 2 * sum(mu) <= k * l else "   .")
    print(f"k={k:<2d} " + " ".join(row))

stable = nu_infinity(mu)
print(f"stable value {stable.value}, reached by (k, l) = {stable.witnesses}")

print("\nstable multiplicities against the Out table:")
for mu in [(1,), (2,), (1, 1), (2, 2), (3, 1), (2, 2, 2), (4, 2)]:
    lam = conjugate(mu)
    print(f"  nu_inf{format_partition(mu):10s} = {nu_infinity(mu).value}"
          f"   Out dim at {format_partition(lam)} = {dim_schur(GroupFamily.OUT, lam)}")

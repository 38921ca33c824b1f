"""Chains, continued fractions, and the exact Zariski decomposition.

The negative part of a canonical class is supported on Hirzebruch-Jung
chains.  Its coefficients come from a three-term recursion; the general
iterative solver reproduces them exactly, and the chain's singularities
carry eigenvalues whose beta-sum equals -N^2 on the nose.
"""

from folsurf import (
    CurveRecord,
    SurfaceModel,
    beta,
    chain_coefficients,
    chain_eigenvalues,
    chain_negative_square,
    decompose_against_curves,
    intersect,
)

for e in ([5], [2, 2], [3, 2, 2], [2, 3, 4]):
    n, q, b = chain_coefficients(e)
    print(f"chain with self-intersections {[-x for x in e]}  (type A_{{{n},{q}}})")
    print(f"  negative-part coefficients: {[str(x) for x in b]}")
    eigen = chain_eigenvalues(e)
    print(f"  singularity eigenvalue classes: {[str(ev) for ev in eigen]}")
    beta_sum = sum(beta(ev.negated()) for ev in eigen)
    print(f"  beta-sum {beta_sum} = q/n = {-chain_negative_square(e)} = -N^2\n")

print("a big divisor that is not a canonical class still decomposes,")
print("but its volume escapes every Noether-type bound:")
e = 9
surface = SurfaceModel.hirzebruch(e)
c0 = CurveRecord("C0", surface.divisor([1, 0]), True)
for m in (2, 5, 8):
    ell = surface.divisor([1, m])
    dec = decompose_against_curves(ell, [c0])
    vol = intersect(dec.nef_part, dec.nef_part)
    print(f"  L = C0 + {m}F on the e={e} ruled surface: N = {dict(dec.negative_part)['C0']}*C0, vol = {vol}")
print("  (the section count of L grows like m while the volume stays m^2/e)")

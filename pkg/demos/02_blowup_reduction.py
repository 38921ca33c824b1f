"""Resolving non-reduced singularities by iterated blow-up.

A positive rational eigenvalue marks a non-reduced singularity.  One blow-up
splits it into the pair {lam - 1, 1/lam - 1}; iterating walks the Euclidean
algorithm on the eigenvalue until the eigenvalue-1 stage, where the formal
flag epsilon decides between a dicritical ending and a saddle-node ending.
"""

from fractions import Fraction

from folsurf import (
    EigenvalueClass,
    NonDegenerate,
    SingularityRecord,
    beta,
    beta_p,
    blow_up_singularity,
    reduction_step_bound,
    seidenberg_reduce,
)

print("one blow-up step at eigenvalue 7/3")
parent = SingularityRecord("p", NonDegenerate(EigenvalueClass.rational(Fraction(7, 3))))
out = blow_up_singularity(parent)
for child in out.children:
    print(f"  child eigenvalue class: {child.eigenvalue}")
print(f"  beta is conserved: {beta_p(parent)} = {sum(beta_p(c) for c in out.children)}")

for lam, eps in [(Fraction(3, 2), 0), (Fraction(5, 3), 0), (Fraction(2), 1), (Fraction(8, 5), 0)]:
    result = seidenberg_reduce(lam, eps)
    print(f"\nreduction of eigenvalue {lam} (epsilon = {eps})")
    print(f"  steps: {result.steps} (bound {reduction_step_bound(lam)})")
    print(f"  ending: {result.ending}, canonical corrections: {result.k_corrections}")
    print(f"  resolved eigenvalue classes: {[str(s.eigenvalue) if s.eigenvalue else 'saddle-node' for s in result.resolved]}")
    if result.chain_self_intersections:
        print(f"  exceptional chain self-intersections: {list(result.chain_self_intersections)}")
    if result.ending == "dicritical":
        total = sum(beta_p(s) for s in result.resolved)
        print(f"  beta books balance: {total} = beta(-{lam}) + 1 = {beta(-lam) + 1}")

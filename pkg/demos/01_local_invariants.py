"""A tour of the local invariants beta and chi.

beta(a/b) = gcd(a,b)^2/(ab) and chi(u) = (u + 1/u + beta(u) - 3)/12 are the
building blocks of every global invariant in the package.  Their two exact
identities, inversion symmetry and the blow-up shift identity, are what make
the global sums birationally stable.
"""

from fractions import Fraction

from folsurf import (
    EigenvalueClass,
    NonDegenerate,
    SaddleNode,
    SingularityRecord,
    baum_bott,
    beta,
    beta_p,
    chi_local,
    chi_p,
)

print("values of beta and chi on small rationals")
for u in [Fraction(1), Fraction(-1), Fraction(2, 3), Fraction(3), Fraction(-5)]:
    print(f"  beta({u}) = {beta(u)},  chi({u}) = {chi_local(u)}")

print("\ninversion symmetry: u and 1/u carry the same invariants")
u = Fraction(7, 4)
print(f"  beta({u}) = {beta(u)} = beta({1 / u})")
print(f"  chi({u}) = {chi_local(u)} = chi({1 / u})")

print("\nthe shift identity that drives blow-up bookkeeping")
u = Fraction(-5, 2)
print(f"  beta({u}) = {beta(u)}")
print(f"  beta({u + 1}) + beta({1 / u + 1}) = {beta(u + 1) + beta(1 / u + 1)}")

print("\neigenvalue classes identify lam with 1/lam")
print(f"  class(2/3) == class(3/2): {EigenvalueClass.rational(Fraction(2, 3)) == EigenvalueClass.rational(Fraction(3, 2))}")

print("\nsingularity-level invariants")
records = [
    SingularityRecord("simple", NonDegenerate(EigenvalueClass.rational(-1))),
    SingularityRecord("chain-end", NonDegenerate(EigenvalueClass.rational(-5))),
    SingularityRecord("degenerate", SaddleNode(2, Fraction(3))),
    SingularityRecord("opaque", NonDegenerate(EigenvalueClass.nonrational())),
]
for s in records:
    bb = baum_bott(s)
    ch = chi_p(s)
    print(
        f"  {s.id:10s} beta_p = {beta_p(s)},  BB = {bb if bb is not None else 'unavailable'},"
        f"  chi_p = {ch if ch is not None else 'unavailable'}"
    )

"""Modular invariants of fibrations from local fiber data.

For an algebraically integral foliation the three Chern numbers coincide
with the modular invariants (kappa, delta, chi) of the inducing fibration.
Those are the plain fibration numbers minus local corrections computed from
each singular fiber's normal-crossing data, so semistable fibers contribute
nothing and every degenerate fiber's correction is an exact rational.
"""

from fractions import Fraction

from folsurf import (
    FiberModel,
    FiberNode,
    FibrationModel,
    fiber_euler,
    fiber_local_chern,
    modular_invariants,
    slope_inequality_check,
)

print("local corrections of individual fibers")
fibers = {
    "one-node semistable, genus 2": FiberModel(2, 2, 0, (FiberNode(1, 1, False),)),
    "star of five rational curves": FiberModel(1, 0, -2, tuple(FiberNode(2, 1, True) for _ in range(4))),
    "smooth fiber": FiberModel(3, 3, 0, ()),
}
for label, fm in fibers.items():
    c1, c2, chi = fiber_local_chern(fm)
    print(f"  {label:30s} (c1^2, c2, chi) = ({c1}, {c2}, {chi}), e_F = {fiber_euler(fm)}")

print("\na semistable genus-2 family keeps its plain numbers")
semistable = FibrationModel(
    genus=2,
    k_f_sq=Fraction(4),
    e_f=Fraction(20),
    chi_f=Fraction(2),
    singular_fibers=tuple(FiberModel(2, 2, 0, (FiberNode(1, 1, False),)) for _ in range(20)),
)
kappa, delta, chi = modular_invariants(semistable)
print(f"  (kappa, delta, chi) = ({kappa}, {delta}, {chi})")
check = slope_inequality_check(2, kappa, chi)
print(f"  slope check: {check.detail} -> {'pass' if check.passed else 'fail'}")

print("\nan isotrivial elliptic family with one star fiber loses everything")
isotrivial = FibrationModel(
    genus=1,
    k_f_sq=Fraction(0),
    e_f=Fraction(6),
    chi_f=Fraction(1, 2),
    singular_fibers=(FiberModel(1, 0, -2, tuple(FiberNode(2, 1, True) for _ in range(4))),),
)
kappa, delta, chi = modular_invariants(isotrivial)
print(f"  (kappa, delta, chi) = ({kappa}, {delta}, {chi})")

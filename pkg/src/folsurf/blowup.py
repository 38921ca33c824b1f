"""Blow-up transformation rules for singularities and Seidenberg reduction.

``blow_up_singularity`` implements the four one-step transformation cases
(regular point, non-degenerate eigenvalue distinct from 1, eigenvalue 1 with
its formal normal-form flag, saddle-node), together with the canonical-class
bookkeeping exposed by ``transform_canonical``.  ``seidenberg_reduce`` drives
the one-step rule down the Euclidean descent until every singularity over the
center is reduced, recording the ending type, the canonical-class correction
count, and (where the procedure determines it) the Hirzebruch-Jung chain of
exceptional self-intersections.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import DomainError
from .local_invariants import (
    EigenvalueClass,
    NonDegenerate,
    SaddleNode,
    SingularityRecord,
    as_rational,
)

DICRITICAL = "dicritical"
SADDLE_NODE_ENDING = "saddle_node"


@dataclass(frozen=True)
class BlowupOutcome:
    exceptional_invariant: bool
    children: Tuple[SingularityRecord, ...]
    k_drop: int  # the multiple of E subtracted from the pulled-back canonical class


@dataclass(frozen=True)
class ResolutionResult:
    resolved: Tuple[SingularityRecord, ...]
    steps: int
    k_corrections: int
    ending: str
    chain_self_intersections: Optional[Tuple[int, ...]]


def transform_canonical(a_p: int, exceptional_invariant: bool) -> int:
    """Coefficient of E subtracted from the pulled-back canonical class.

    The drop is l - 1 with l = a_p when the exceptional curve is invariant
    and l = a_p + 1 otherwise; a regular point (a_p = 0) therefore *adds* E.
    """
    if a_p < 0:
        raise DomainError("vanishing order must be >= 0")
    ell = a_p if exceptional_invariant else a_p + 1
    return ell - 1


def _child(parent_id: str, n: int, kind) -> SingularityRecord:
    return SingularityRecord(id=f"{parent_id}.q{n}", kind=kind)


def blow_up_singularity(
    s: Optional[SingularityRecord], epsilon: Optional[int] = None
) -> BlowupOutcome:
    """One blow-up step; ``s is None`` blows up a regular point.

    ``epsilon`` is required exactly when the eigenvalue class is 1; it selects
    between the dicritical branch (0) and the saddle-node branch (1) of the
    formal normal form.  Children inherit vanishing order 1.
    """
    if s is None:
        child = _child("regular", 1, NonDegenerate(EigenvalueClass.rational(-1)))
        return BlowupOutcome(True, (child,), transform_canonical(0, True))

    if isinstance(s.kind, SaddleNode):
        bb = s.kind.bb_index
        kept = SaddleNode(
            s.kind.multiplicity, None if bb is None else bb - 1
        )
        children = (
            _child(s.id, 1, kept),
            _child(s.id, 2, NonDegenerate(EigenvalueClass.rational(-1))),
        )
        return BlowupOutcome(
            True, children, transform_canonical(s.vanishing_order, True)
        )

    ev = s.kind.eigenvalue
    if ev.value == 1:
        eps = epsilon if epsilon is not None else s.epsilon
        if eps is None:
            raise DomainError(
                f"{s.id}: eigenvalue 1 requires the formal normal-form flag epsilon"
            )
        if eps == 0:
            return BlowupOutcome(False, (), transform_canonical(1, False))
        sn = _child(s.id, 1, SaddleNode(2, Fraction(3)))
        return BlowupOutcome(True, (sn,), transform_canonical(1, True))

    if ev.value is None:
        kinds = [
            NonDegenerate(EigenvalueClass.nonrational()),
            NonDegenerate(EigenvalueClass.nonrational()),
        ]
    else:
        lam = ev.value
        kinds = [
            NonDegenerate(EigenvalueClass.rational(lam - 1)),
            NonDegenerate(EigenvalueClass.rational(1 / lam - 1)),
        ]
    children = tuple(_child(s.id, n + 1, k) for n, k in enumerate(kinds))
    return BlowupOutcome(True, children, transform_canonical(1, True))


def reduction_step_bound(lam: Fraction) -> int:
    """Sum of the continued-fraction partial quotients of lam = m1/m2 > 0.

    Upper bound (in fact the exact count) for the number of blow-ups the
    reduction of a non-reduced eigenvalue needs; certifies termination.
    """
    lam = as_rational(lam)
    if lam <= 0:
        raise DomainError("the bound applies to positive rational eigenvalues")
    a, b = lam.numerator, lam.denominator
    total = 0
    while b:
        total += a // b
        a, b = b, a % b
    return total


class _ChainTracker:
    """Dual-graph bookkeeping for the exceptional chain of a reduction.

    The configuration stays a linear chain throughout: each blow-up center is
    the intersection of two adjacent members, and the new curve is inserted
    between them while both neighbors lose one from their self-intersection.
    The two original separatrices act as virtual endpoints.
    """

    SEP_A = "sep-a"  # separatrix tangent to the eigenvalue-lam direction
    SEP_B = "sep-b"

    def __init__(self) -> None:
        self.members: List[Tuple[str, Optional[int]]] = [
            (self.SEP_A, None),
            (self.SEP_B, None),
        ]
        self.count = 0
        # the current center sits between these two adjacent members
        self.left = self.SEP_A
        self.right = self.SEP_B

    def _index(self, name: str) -> int:
        for k, (n, _) in enumerate(self.members):
            if n == name:
                return k
        raise AssertionError(name)

    def insert(self) -> str:
        """Blow up the current center; returns the new curve's name."""
        self.count += 1
        name = f"X{self.count}"
        i, j = self._index(self.left), self._index(self.right)
        assert abs(i - j) == 1
        for k in (i, j):
            n, sq = self.members[k]
            if sq is not None:
                self.members[k] = (n, sq - 1)
        self.members.insert(max(i, j), (name, -1))
        return name

    def move_center(self, new_curve: str, neighbor: str) -> None:
        self.left, self.right = new_curve, neighbor

    def exceptional_self_intersections(self) -> Tuple[int, ...]:
        return tuple(sq for _, sq in self.members if sq is not None)


def seidenberg_reduce(lam: Fraction, epsilon: int) -> ResolutionResult:
    """Resolve a non-reduced eigenvalue by iterated blow-up.

    ``lam`` must be a positive rational.  The descent replaces lam by lam - 1
    (lam > 1) or lam / (1 - lam) normalized (lam < 1), shedding one reduced
    singularity per step, until the eigenvalue-1 stage, where ``epsilon``
    selects the dicritical or the saddle-node ending.
    """
    lam = as_rational(lam)
    if lam <= 0:
        raise DomainError("seidenberg_reduce applies to positive rational eigenvalues")
    if epsilon not in (0, 1):
        raise DomainError("epsilon must be 0 or 1")

    emit_chain = not (lam.denominator == 1 or lam.numerator == 1)
    tracker = _ChainTracker()
    resolved: List[SingularityRecord] = []
    steps = 0
    current = lam
    # branch bookkeeping: which chain member carries which eigen-direction
    branch_lam = _ChainTracker.SEP_A
    branch_one = _ChainTracker.SEP_B

    while current != 1:
        steps += 1
        new_curve = tracker.insert()
        if current > 1:
            reduced_value = 1 / current - 1
            resolved.append(
                SingularityRecord(
                    id=f"q{len(resolved) + 1}",
                    kind=NonDegenerate(EigenvalueClass.rational(reduced_value)),
                )
            )
            # non-reduced child sits on E meet the eigen-1 branch
            tracker.move_center(new_curve, branch_one)
            branch_lam = new_curve
            current = current - 1
        else:
            reduced_value = current - 1
            resolved.append(
                SingularityRecord(
                    id=f"q{len(resolved) + 1}",
                    kind=NonDegenerate(EigenvalueClass.rational(reduced_value)),
                )
            )
            tracker.move_center(new_curve, branch_lam)
            branch_one = new_curve
            current = current / (1 - current)

    steps += 1
    tracker.insert()
    if epsilon == 0:
        ending = DICRITICAL
        k_corrections = 1
    else:
        ending = SADDLE_NODE_ENDING
        k_corrections = 0
        resolved.append(
            SingularityRecord(
                id=f"q{len(resolved) + 1}", kind=SaddleNode(2, Fraction(3))
            )
        )

    chain = tracker.exceptional_self_intersections() if emit_chain else None
    return ResolutionResult(
        resolved=tuple(resolved),
        steps=steps,
        k_corrections=k_corrections,
        ending=ending,
        chain_self_intersections=chain,
    )

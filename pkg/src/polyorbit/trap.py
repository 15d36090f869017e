"""The bivariate map F(x,y) = (x^2*y, x^2*y + x*y^2) over F_p.

Exhaustively verified facts, per prime: (0,0) is the unique fixed point,
and every one of the p^2 starting points lands on (0,0) within p steps
(so the p-th iterate is identically (0,0)). Any point with a zero
coordinate maps to (0,0) in one step; for the rest the coordinate ratio
y/x increases by exactly 1 per step, which is why p steps always suffice.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modular import is_prime

TRAP_CAP_DEFAULT = 101


@dataclass(frozen=True)
class TrapPoint:
    """A point of the affine plane over F_p, residues in [0, p)."""

    x: int
    y: int
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        object.__setattr__(self, "x", self.x % self.p)
        object.__setattr__(self, "y", self.y % self.p)


def trap_step(pt: TrapPoint) -> TrapPoint:
    """One application of the map, reducing after every multiply so all
    intermediates stay within machine range for desk-scale primes."""
    p = pt.p
    xx = (pt.x * pt.x) % p
    x2y = (xx * pt.y) % p
    yy = (pt.y * pt.y) % p
    xy2 = (pt.x * yy) % p
    return TrapPoint(x2y, (x2y + xy2) % p, p)


def _check_prime_cap(p: int, cap: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p > cap:
        raise ValueError(f"p={p} exceeds the cap {cap} (p^2 points, p steps each)")


def trap_first_hits(p: int, *, cap: int = TRAP_CAP_DEFAULT) -> dict[tuple[int, int], int]:
    """For every start point, the first step n >= 1 at which the n-th
    iterate is (0,0); a value of 0 marks a point that never got there
    within p steps (which the exhaustive checks show never happens)."""
    _check_prime_cap(p, cap)
    hits: dict[tuple[int, int], int] = {}
    for x0 in range(p):
        for y0 in range(p):
            x, y = x0, y0
            first = 0
            for n in range(1, p + 1):
                xx = (x * x) % p
                x2y = (xx * y) % p
                xy2 = (x * ((y * y) % p)) % p
                x, y = x2y, (x2y + xy2) % p
                if x == 0 and y == 0:
                    first = n
                    break
            hits[(x0, y0)] = first
    return hits


def verify_trap_nilpotence(p: int, *, cap: int = TRAP_CAP_DEFAULT) -> bool:
    """True iff all p^2 points reach (0,0) within p steps, equivalently the
    p-th iterate of the map is identically (0,0) ((0,0) is absorbing)."""
    return all(first >= 1 for first in trap_first_hits(p, cap=cap).values())


def trap_fixed_points(p: int, *, cap: int = TRAP_CAP_DEFAULT) -> list[TrapPoint]:
    """All fixed points of the map over F_p; expected exactly [(0,0)]."""
    _check_prime_cap(p, cap)
    out = []
    for x in range(p):
        for y in range(p):
            pt = TrapPoint(x, y, p)
            step = trap_step(pt)
            if (step.x, step.y) == (x, y):
                out.append(pt)
    return out

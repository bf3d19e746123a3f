"""Identifiers for finite simple classical groups.

Families are tagged L (linear), U (unitary), S (symplectic), O+ / O-
(even-dimensional orthogonal) and Oo (odd-dimensional orthogonal).  In
restricted mode a GroupId must lie in the working set of simple classical
groups of twisted Lie rank at least 2, with the small-dimensional duplicates
of other simple groups excluded; unrestricted mode accepts any valid
classical parameters.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numth import PrimePower


class InvalidParameters(ValueError):
    pass


FAMILY_NAMES = {
    "L": "Linear",
    "U": "Unitary",
    "S": "Symplectic",
    "O+": "OrthogonalPlus",
    "O-": "OrthogonalMinus",
    "Oo": "OrthogonalOdd",
}

# small groups excluded from the restricted working set: duplicates of
# non-classical simple groups or of smaller-rank classical groups
_EXCLUDED = {("L", 3, 2), ("L", 4, 2), ("S", 4, 2), ("S", 4, 3)}


@dataclass(frozen=True)
class GroupId:
    family: str
    n: int
    q: PrimePower

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise InvalidParameters(f"unknown family {self.family!r}")
        n, q = self.n, self.q.q
        if self.family == "L" and n < 2:
            raise InvalidParameters("linear groups need n >= 2")
        if self.family == "U" and n < 3:
            raise InvalidParameters("unitary groups need n >= 3")
        if self.family == "S" and (n < 4 or n % 2):
            raise InvalidParameters("symplectic groups need even n >= 4")
        if self.family in ("O+", "O-") and (n < 4 or n % 2):
            raise InvalidParameters("even orthogonal groups need even n >= 4")
        if self.family == "Oo":
            if n < 3 or n % 2 == 0:
                raise InvalidParameters("odd orthogonal groups need odd n >= 3")
            if q % 2 == 0:
                raise InvalidParameters("odd orthogonal groups need odd q")
        if self.family == "L" and n == 2 and q < 4:
            raise InvalidParameters("L2(2) and L2(3) are not simple")
        if self.family == "U" and n == 3 and q == 2:
            raise InvalidParameters("U3(2) is not simple")

    def in_working_set(self) -> bool:
        """Membership in the restricted set (twisted Lie rank >= 2, no
        duplicates)."""
        n = self.n
        if self.family == "L" and n < 3:
            return False
        if self.family in ("U", "S") and n < 4:
            return False
        if self.family in ("O+", "O-", "Oo") and n < 7:
            return False
        return (self.family, n, self.q.q) not in _EXCLUDED

    def require_working_set(self):
        if not self.in_working_set():
            raise InvalidParameters(f"{self} is outside the restricted working set")

    def __str__(self):
        q = self.q.q
        return {
            "L": f"L{self.n}({q})",
            "U": f"U{self.n}({q})",
            "S": f"PSp{self.n}({q})",
            "O+": f"POmega+{self.n}({q})",
            "O-": f"POmega-{self.n}({q})",
            "Oo": f"Omega{self.n}({q})",
        }[self.family]


def group_id(family: str, n: int, q: int) -> GroupId:
    return GroupId(family, n, PrimePower.of(q))

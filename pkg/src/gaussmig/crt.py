"""Chinese remainder solver over Z[i] for moduli that need not be coprime.

Systems are merged two congruences at a time.  A pair

    x = a1 (mod m1),  x = a2 (mod m2)

is solvable iff d = gcd(m1, m2) divides a2 - a1, and then the solution is
unique modulo lcm(m1, m2).  The running value is kept as the principal
value modulo the canonical lcm so operands stay small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptySystem, Inconsistent
from .gint import GaussianInt, IntLike, divides, egcd, exact_div, lcm, mod_principal


@dataclass(frozen=True)
class Congruence:
    residue: GaussianInt
    modulus: GaussianInt

    def __post_init__(self):
        object.__setattr__(self, "residue", GaussianInt.coerce(self.residue))
        object.__setattr__(self, "modulus", GaussianInt.coerce(self.modulus))
        if not self.modulus:
            raise ValueError("congruence modulus must be nonzero")

    def holds(self, x: IntLike) -> bool:
        return divides(self.modulus, GaussianInt.coerce(x) - self.residue)


@dataclass(frozen=True)
class CrtSolution:
    value: GaussianInt
    modulus: GaussianInt


def solve_pair(c1: Congruence, c2: Congruence) -> CrtSolution:
    m1, m2 = c1.modulus, c2.modulus
    d, u, _ = egcd(m1, m2)
    diff = c2.residue - c1.residue
    if not divides(d, diff):
        raise Inconsistent(
            f"x = {c1.residue} (mod {m1}) and x = {c2.residue} (mod {m2}) "
            f"disagree modulo gcd {d}"
        )
    big = lcm(m1, m2)
    # u*m1 = d (mod m2), so the step only matters modulo m2/d
    step = mod_principal(u * exact_div(diff, d), exact_div(m2, d))
    return CrtSolution(mod_principal(c1.residue + m1 * step, big), big)


def solve_system(congruences: Iterable[Congruence]) -> CrtSolution:
    """Solve all congruences at once.

    The returned value is the principal value modulo the canonical lcm of
    every modulus, so it does not depend on the input order.

    Raises:
        EmptySystem: no congruences were given.
        Inconsistent: some pair of congruences cannot hold together.
    """
    cs = list(congruences)
    if not cs:
        raise EmptySystem("cannot solve an empty system of congruences")
    first = cs[0]
    acc = solve_pair(first, first)
    for c in cs[1:]:
        acc = solve_pair(Congruence(acc.value, acc.modulus), c)
    return acc

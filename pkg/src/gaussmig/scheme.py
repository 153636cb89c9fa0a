"""Mignotte threshold-style secret sharing over the Gaussian integers.

Participant ``i`` holds modulus ``m_i``.  A coalition ``C`` is authorized
when ``N(lcm(C)) >= m_plus``; secrets live in the annulus

    m_minus <= N(s) < m_plus / 4

and a share is the principal value ``s mod m_i``.  Because every secret
lies strictly inside F(lcm(A)) for authorized ``A``, the principal CRT
solution of an authorized coalition is the secret itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .crt import Congruence, solve_system
from .errors import InvalidParams, InvalidSecret, TooManyParticipants
from .gint import GaussianInt, IntLike, canonical_associate, lcm, mod_principal

DEFAULT_MAX_PARTICIPANTS = 20

# Rational lower bound for pi used by the leakage condition.
PI_LOWER = Fraction("3.14159265358979")


@dataclass(frozen=True)
class SchemeParams:
    moduli: tuple[GaussianInt, ...]
    m_minus: int
    m_plus: int

    def __post_init__(self):
        mods = tuple(GaussianInt.coerce(m) for m in self.moduli)
        if not mods:
            raise InvalidParams("at least one modulus is required")
        if any(not m for m in mods):
            raise InvalidParams("moduli must be nonzero")
        if self.m_minus < 1 or self.m_plus < 1:
            raise InvalidParams("m_minus and m_plus must be positive")
        object.__setattr__(self, "moduli", mods)

    @property
    def n(self) -> int:
        return len(self.moduli)

    def coalition_lcm(self, coalition: Iterable[int]) -> GaussianInt:
        """Canonical lcm of the moduli of a nonempty 1-based coalition."""
        members = sorted(set(coalition))
        if not members:
            raise ValueError("coalition must be nonempty")
        for i in members:
            if not 1 <= i <= self.n:
                raise ValueError(f"participant {i} outside 1..{self.n}")
        acc = canonical_associate(self.moduli[members[0] - 1])
        for i in members[1:]:
            acc = lcm(acc, self.moduli[i - 1])
        return acc

    def is_authorized(self, coalition: Iterable[int]) -> bool:
        members = list(coalition)
        if not members:
            return False
        return self.coalition_lcm(members).norm() >= self.m_plus


@dataclass(frozen=True)
class Share:
    index: int
    modulus: GaussianInt
    residue: GaussianInt


@dataclass
class ValidationReport:
    bounds_ok: bool
    interval_ok: bool
    leakage_ok: bool
    violations: list[str] = field(default_factory=list)
    # coalitions whose norm falls strictly between m_minus and m_plus
    witnesses: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return self.bounds_ok and self.interval_ok and self.leakage_ok

    @property
    def structurally_valid(self) -> bool:
        return self.bounds_ok and self.interval_ok


@dataclass(frozen=True)
class Reconstruction:
    value: GaussianInt
    modulus: GaussianInt
    authorized: bool


def _mask_members(mask: int) -> tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def coalition_norm_table(p: SchemeParams,
                         max_participants: int = DEFAULT_MAX_PARTICIPANTS) -> list[int]:
    """Norm of the lcm of every coalition, indexed by bitmask.

    Bit ``i-1`` stands for participant ``i``.  The empty coalition gets
    norm 1.
    """
    if p.n > max_participants:
        raise TooManyParticipants(
            f"{p.n} participants exceeds the enumeration cap of {max_participants}"
        )
    lcms: list[GaussianInt] = [GaussianInt(1, 0)] * (1 << p.n)
    norms = [1] * (1 << p.n)
    for mask in range(1, 1 << p.n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        m = p.moduli[low]
        lcms[mask] = lcm(lcms[rest], m) if rest else canonical_associate(m)
        norms[mask] = lcms[mask].norm()
    return norms


def leakage_condition(m_minus: int, m_plus: int) -> bool:
    """Exact check of pi*(m_plus - 4*m_minus) > 4*m_minus using PI_LOWER."""
    return PI_LOWER * (m_plus - 4 * m_minus) > 4 * m_minus


def validate_params(p: SchemeParams,
                    max_participants: int = DEFAULT_MAX_PARTICIPANTS) -> ValidationReport:
    norms = coalition_norm_table(p, max_participants)
    report = ValidationReport(bounds_ok=True, interval_ok=True, leakage_ok=True)
    if not 4 * p.m_minus < p.m_plus:
        report.bounds_ok = False
        report.violations.append(
            f"4*m_minus < m_plus fails: 4*{p.m_minus} >= {p.m_plus}")
    for mask in range(1, len(norms)):
        nm = norms[mask]
        if p.m_minus < nm < p.m_plus:
            members = _mask_members(mask)
            report.interval_ok = False
            report.witnesses.append(members)
            report.violations.append(
                f"coalition {set(members)} has norm {nm} inside "
                f"({p.m_minus}, {p.m_plus})")
    if not leakage_condition(p.m_minus, p.m_plus):
        report.leakage_ok = False
        report.violations.append(
            f"leakage condition fails: pi*({p.m_plus} - 4*{p.m_minus}) "
            f"<= 4*{p.m_minus}")
    return report


def secret_space_contains(p: SchemeParams, s: IntLike) -> bool:
    nm = GaussianInt.coerce(s).norm()
    return p.m_minus <= nm and 4 * nm < p.m_plus


def _deal_unchecked(moduli: Sequence[IntLike], s: IntLike) -> list[Share]:
    # Test hook: skips every validity check so broken historical examples
    # can be replayed.  Not part of the public API.
    s = GaussianInt.coerce(s)
    out = []
    for i, m in enumerate(moduli, start=1):
        m = GaussianInt.coerce(m)
        out.append(Share(i, m, mod_principal(s, m)))
    return out


def deal(p: SchemeParams, s: IntLike) -> list[Share]:
    report = validate_params(p)
    if not report.valid:
        raise InvalidParams("; ".join(report.violations))
    s = GaussianInt.coerce(s)
    if not secret_space_contains(p, s):
        raise InvalidSecret(
            f"secret {s} has norm {s.norm()}; require "
            f"{p.m_minus} <= N(s) < m_plus/4 = {p.m_plus}/4")
    return _deal_unchecked(p.moduli, s)


def _solve_shares(p: SchemeParams, shares: Iterable[Share]):
    shares = list(shares)
    if not shares:
        raise ValueError("at least one share is required")
    seen: dict[int, Share] = {}
    for sh in shares:
        if not 1 <= sh.index <= p.n:
            raise ValueError(f"share index {sh.index} outside 1..{p.n}")
        if sh.modulus != p.moduli[sh.index - 1]:
            raise ValueError(
                f"share {sh.index} modulus {sh.modulus} does not match "
                f"params modulus {p.moduli[sh.index - 1]}")
        prior = seen.get(sh.index)
        if prior is not None and prior.residue != sh.residue:
            raise ValueError(f"conflicting duplicate shares for participant {sh.index}")
        seen[sh.index] = sh
    ordered = [seen[i] for i in sorted(seen)]
    sol = solve_system(Congruence(sh.residue, sh.modulus) for sh in ordered)
    return sol, tuple(sorted(seen))


def reconstruct(p: SchemeParams, shares: Iterable[Share]) -> Reconstruction:
    """Principal CRT solution for the coalition holding ``shares``.

    Unauthorized coalitions still get their candidate back, flagged with
    ``authorized=False``; it never equals the dealt secret.
    """
    sol, _ = _solve_shares(p, shares)
    return Reconstruction(sol.value, sol.modulus, sol.modulus.norm() >= p.m_plus)


def naive_reconstruct(p: SchemeParams, shares: Iterable[Share]) -> Reconstruction:
    """Minimal-norm CRT solution, the rule used by the earlier broken scheme.

    Ties on norm go to the lexicographically smallest ``(re, im)``.
    """
    sol, _ = _solve_shares(p, shares)
    big = sol.modulus
    # the minimal-norm representatives sit on the closed square, one step away at most
    candidates = [sol.value + big * GaussianInt(a, b)
                  for a in (-1, 0, 1) for b in (-1, 0, 1)]
    best = min(candidates, key=lambda z: (z.norm(), z.re, z.im))
    return Reconstruction(best, big, big.norm() >= p.m_plus)


def sample_secret(p: SchemeParams, seed: int) -> GaussianInt:
    """Uniform draw from the secret annulus, deterministic in ``seed``."""
    if not 4 * p.m_minus < p.m_plus:
        raise InvalidParams("empty secret space: need 4*m_minus < m_plus")
    from .counting import secret_space_size

    # 4*m_minus < m_plus alone does not make the annulus nonempty, e.g. (3, 13)
    if secret_space_size(p.m_minus, p.m_plus) == 0:
        raise InvalidParams(
            f"no Gaussian integer has {p.m_minus} <= N(s) < {p.m_plus}/4")
    top = (p.m_plus - 1) // 4
    r = isqrt(top)
    rng = random.Random(seed)
    while True:
        a = rng.randint(-r, r)
        b = rng.randint(-r, r)
        nm = a * a + b * b
        if p.m_minus <= nm <= top:
            return GaussianInt(a, b)

"""Lattice point counts, secret-space size, and leakage accounting.

The number of Gaussian integers with norm at most ``r2`` is

    1 + 4 * sum_{j >= 0} ( floor(r2/(4j+1)) - floor(r2/(4j+3)) )

Only terms with ``4j+1 <= r2`` are nonzero.  :func:`gauss_count` evaluates
that finite sum grouped by equal quotients, so it costs O(sqrt(r2)) instead
of O(r2); :func:`gauss_count_termwise` is the literal term-by-term loop.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import asdict, dataclass, field
from math import isqrt
from typing import Iterable, Optional

from .errors import EnumerationTooLarge
from .gint import GaussianInt, IntLike, mod_principal
from .scheme import (
    SchemeParams,
    ValidationReport,
    _mask_members,
    coalition_norm_table,
    leakage_condition,
    validate_params,
)

DEFAULT_LEAKAGE_CAP = 1_000_000
DIGITS = 12


def _fmt(x: float) -> str:
    return format(x, f".{DIGITS}g")


def _chi_prefix(k: int) -> int:
    # sum of the non-principal character mod 4 over 1..k
    return 1 if k % 4 in (1, 2) else 0


def gauss_count(r2: int) -> int:
    """Number of z in Z[i] with N(z) <= r2."""
    if r2 < 0:
        return 0
    total = 0
    d = 1
    while d <= r2:
        q = r2 // d
        hi = r2 // q
        total += q * (_chi_prefix(hi) - _chi_prefix(d - 1))
        d = hi + 1
    return 1 + 4 * total


def gauss_count_termwise(r2: int) -> int:
    if r2 < 0:
        return 0
    total = 0
    for j in range((r2 - 1) // 4 + 1):
        total += r2 // (4 * j + 1) - r2 // (4 * j + 3)
    return 1 + 4 * total


def secret_space_size(m_minus: int, m_plus: int) -> int:
    """Exact count of s with ``m_minus <= N(s)`` and ``4 N(s) < m_plus``."""
    if m_minus < 1 or not 4 * m_minus < m_plus:
        raise ValueError(
            f"invalid bounds: need 1 <= m_minus and 4*m_minus < m_plus, "
            f"got ({m_minus}, {m_plus})")
    return gauss_count((m_plus - 1) // 4) - gauss_count(m_minus - 1)


def leakage_bound(m_minus: int, m_plus: int) -> float:
    """Asymptotic residual class size pi*(m_plus - 4 m_minus) / (4 m_minus)."""
    return math.pi * (m_plus - 4 * m_minus) / (4 * m_minus)


def annulus_points(m_minus: int, m_plus: int):
    top = (m_plus - 1) // 4
    r = isqrt(top)
    for a in range(-r, r + 1):
        rem = top - a * a
        b_max = isqrt(rem)
        for b in range(-b_max, b_max + 1):
            if a * a + b * b >= m_minus:
                yield GaussianInt(a, b)


def leakage_exact(p: SchemeParams, coalition: Iterable[int], x: IntLike,
                  cap: int = DEFAULT_LEAKAGE_CAP) -> int:
    """Number of secrets congruent to ``x`` modulo the coalition lcm.

    These are the ``x + k*lcm(B)`` that land in the secret annulus.  The
    multipliers ``k`` are enumerated over a bounding box; ``cap`` limits
    the box size.
    """
    big = p.coalition_lcm(coalition)
    x = GaussianInt.coerce(x)
    top = (p.m_plus - 1) // 4
    nl = big.norm()
    # |k| <= (sqrt(top) + |x|) / |lcm|, over-approximated in integers
    reach = isqrt(top) + 1 + isqrt(x.norm()) + 1
    kmax = isqrt(-(-reach * reach // nl)) + 1
    side = 2 * kmax + 1
    if side * side > cap:
        raise EnumerationTooLarge(
            f"leakage enumeration needs {side * side} points, cap is {cap}")
    count = 0
    for a in range(-kmax, kmax + 1):
        for b in range(-kmax, kmax + 1):
            nm = (x + big * GaussianInt(a, b)).norm()
            if p.m_minus <= nm and 4 * nm < p.m_plus:
                count += 1
    return count


@dataclass(frozen=True)
class InformationRate:
    min_share_space: int
    secret_space: int
    value: Optional[float]

    @property
    def decimal(self) -> str:
        return "undefined" if self.value is None else _fmt(self.value)


def rate_from_pair(min_share_space: int, secret_space: int) -> Optional[float]:
    if secret_space <= 1 or min_share_space < 1:
        return None
    return math.log(min_share_space) / math.log(secret_space)


def information_rate(p: SchemeParams) -> InformationRate:
    """min_i log N(m_i) / log |S|; share space i has exactly N(m_i) classes."""
    smallest = min(m.norm() for m in p.moduli)
    size = secret_space_size(p.m_minus, p.m_plus)
    return InformationRate(smallest, size, rate_from_pair(smallest, size))


@dataclass
class CoalitionRow:
    members: tuple[int, ...]
    norm: int
    authorized: bool
    # filled for unauthorized coalitions when the secret space is small enough
    residual_min: Optional[int] = None
    residual_max: Optional[int] = None
    classes_hit: Optional[int] = None


@dataclass
class AuditReport:
    params: SchemeParams
    validation: ValidationReport
    secret_space_size: Optional[int]
    information_rate: Optional[InformationRate]
    leakage_bound: Optional[float]
    rows: list[CoalitionRow] = field(default_factory=list)
    residuals_computed: bool = False

    @property
    def leakage_bound_decimal(self) -> str:
        return "undefined" if self.leakage_bound is None else _fmt(self.leakage_bound)

    def to_dict(self) -> dict:
        p = self.params
        rate = self.information_rate
        return {
            "moduli": [str(m) for m in p.moduli],
            "m_minus": p.m_minus,
            "m_plus": p.m_plus,
            "valid": self.validation.valid,
            "checks": {
                "bounds": self.validation.bounds_ok,
                "interval": self.validation.interval_ok,
                "leakage": self.validation.leakage_ok,
            },
            "violations": list(self.validation.violations),
            "secret_space_size": self.secret_space_size,
            "information_rate": None if rate is None else {
                "min_share_space": rate.min_share_space,
                "secret_space": rate.secret_space,
                "decimal": rate.decimal,
            },
            "leakage_bound": self.leakage_bound_decimal,
            "residuals_computed": self.residuals_computed,
            "coalitions": [
                {**asdict(r), "members": list(r.members)} for r in self.rows
            ],
        }


def residual_class_counts(p: SchemeParams, coalition: Iterable[int]) -> Counter:
    """Histogram of secrets by their principal residue modulo lcm(coalition)."""
    big = p.coalition_lcm(coalition)
    return Counter(mod_principal(s, big) for s in annulus_points(p.m_minus, p.m_plus))


def audit(p: SchemeParams, leakage_cap: int = 2_000_000) -> AuditReport:
    """Collect validity, secret-space size, rate and per-coalition leakage.

    Residual-class counts for unauthorized coalitions are exact and cost one
    pass over the secret space per distinct coalition lcm; they are skipped
    when that work exceeds ``leakage_cap`` points.  Invalid parameters still
    produce a report.
    """
    validation = validate_params(p)
    size = rate = bound = None
    if validation.bounds_ok:
        size = secret_space_size(p.m_minus, p.m_plus)
        rate = information_rate(p)
        bound = leakage_bound(p.m_minus, p.m_plus)
    norms = coalition_norm_table(p)
    rows = [CoalitionRow(_mask_members(mask), norms[mask], norms[mask] >= p.m_plus)
            for mask in range(1, len(norms))]
    rows.sort(key=lambda r: (len(r.members), r.members))
    report = AuditReport(p, validation, size, rate, bound, rows)
    if not size:
        return report
    unauth = [r for r in rows if not r.authorized]
    lcms = {r.members: p.coalition_lcm(r.members) for r in unauth}
    if size * len(set(lcms.values())) > leakage_cap:
        return report
    report.residuals_computed = True
    points = list(annulus_points(p.m_minus, p.m_plus))
    cache: dict[GaussianInt, Counter] = {}
    for row in unauth:
        big = lcms[row.members]
        if big not in cache:
            cache[big] = Counter(mod_principal(s, big) for s in points)
        hist = cache[big]
        row.residual_min = min(hist.values())
        row.residual_max = max(hist.values())
        row.classes_hit = len(hist)
    return report


__all__ = [
    "AuditReport",
    "CoalitionRow",
    "InformationRate",
    "audit",
    "gauss_count",
    "gauss_count_termwise",
    "information_rate",
    "leakage_bound",
    "leakage_condition",
    "leakage_exact",
    "rate_from_pair",
    "residual_class_counts",
    "secret_space_size",
]

"""Access structures induced by moduli, and moduli realizing a given structure."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DegenerateStructure, NotPairwiseCoprime, SearchExhausted
from .gint import GaussianInt, are_coprime, lcm_all
from .scheme import (
    DEFAULT_MAX_PARTICIPANTS,
    SchemeParams,
    _mask_members,
    coalition_norm_table,
    validate_params,
)


def _coalition(members: Iterable[int]) -> frozenset[int]:
    return frozenset(int(i) for i in members)


def minimal_sets(family: Iterable[Iterable[int]]) -> frozenset[frozenset[int]]:
    """Inclusion-minimal members of a family of sets."""
    sets = sorted({_coalition(s) for s in family}, key=len)
    keep: list[frozenset[int]] = []
    for s in sets:
        if not any(k <= s for k in keep):
            keep.append(s)
    return frozenset(keep)


@dataclass(frozen=True)
class AccessStructure:
    """Monotone family of authorized coalitions, kept as its minimal sets."""

    n: int
    minimal_authorized: frozenset[frozenset[int]]

    def __post_init__(self):
        mins = frozenset(_coalition(s) for s in self.minimal_authorized)
        for s in mins:
            if any(not 1 <= i <= self.n for i in s):
                raise ValueError(f"coalition {sorted(s)} outside participants 1..{self.n}")
        if minimal_sets(mins) != mins:
            raise ValueError("minimal authorized coalitions must form an antichain")
        object.__setattr__(self, "minimal_authorized", mins)

    @classmethod
    def from_family(cls, n: int, family: Iterable[Iterable[int]]) -> AccessStructure:
        return cls(n, minimal_sets(family))

    def is_authorized(self, coalition: Iterable[int]) -> bool:
        c = _coalition(coalition)
        return any(m <= c for m in self.minimal_authorized)

    def maximal_unauthorized(self) -> list[frozenset[int]]:
        """Maximal coalitions that contain no minimal authorized set."""
        full = frozenset(range(1, self.n + 1))
        out = []
        for mask in range(1 << self.n):
            c = frozenset(_mask_members(mask))
            if self.is_authorized(c):
                continue
            if all(self.is_authorized(c | {i}) for i in full - c):
                out.append(c)
        return sorted(out, key=sorted)

    def sorted_minimal(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(s)) for s in self.minimal_authorized),
                      key=lambda t: (len(t), t))

    def to_text(self) -> str:
        return "".join(",".join(map(str, t)) + "\n" for t in self.sorted_minimal())

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> AccessStructure:
        """One minimal coalition per line, comma-separated 1-based indices.

        Blank lines and ``#`` comments are ignored.  ``n`` defaults to the
        largest index mentioned.
        """
        family = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                members = [int(tok) for tok in line.split(",")]
            except ValueError:
                raise ValueError(f"line {lineno}: expected comma-separated indices, got {raw!r}")
            if not members or any(i < 1 for i in members):
                raise ValueError(f"line {lineno}: indices must be positive")
            family.append(members)
        if not family:
            raise ValueError("structure lists no coalitions")
        top = max(max(f) for f in family)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"index {top} exceeds participant count {n}")
        return cls.from_family(n, family)


def threshold_structure(t: int, n: int) -> AccessStructure:
    return AccessStructure(n, frozenset(frozenset(c) for c in combinations(range(1, n + 1), t)))


def coalition_norm(p: SchemeParams, coalition: Iterable[int]) -> int:
    return p.coalition_lcm(coalition).norm()


def enumerate_structure(p: SchemeParams,
                        max_participants: int = DEFAULT_MAX_PARTICIPANTS) -> AccessStructure:
    norms = coalition_norm_table(p, max_participants)
    # the empty coalition is never authorized
    family = [_mask_members(mask) for mask in range(1, len(norms)) if norms[mask] >= p.m_plus]
    return AccessStructure.from_family(p.n, family)


# -- sampling -------------------------------------------------------------

def _sample_canonical(rng: random.Random, lo: int, hi: int) -> GaussianInt:
    """Uniform canonical Gaussian integer with lo <= N(z) <= hi."""
    r = math.isqrt(hi)
    while True:
        a = rng.randint(1, r)
        b = rng.randint(0, r)
        if lo <= a * a + b * b <= hi:
            return GaussianInt(a, b)


def sample_pairwise_coprime(count: int, lo: int, hi: int, rng: random.Random,
                            max_attempts: int = 10_000) -> list[GaussianInt]:
    """``count`` pairwise coprime canonical Gaussian integers with norms in [lo, hi].

    The band doubles its upper end every 200 failed draws, so small bands
    that cannot host enough coprime elements still terminate.
    """
    if lo < 2 or hi < lo:
        raise ValueError("need 2 <= lo <= hi")
    chosen: list[GaussianInt] = []
    misses = 0
    for _ in range(max_attempts):
        if len(chosen) == count:
            return chosen
        z = _sample_canonical(rng, lo, hi)
        if all(are_coprime(z, c) for c in chosen):
            chosen.append(z)
            continue
        misses += 1
        if misses % 200 == 0:
            hi *= 2
    if len(chosen) == count:
        return chosen
    raise SearchExhausted(f"could not find {count} pairwise coprime moduli")


def realize_with(structure: AccessStructure, mus: Sequence[GaussianInt]) -> SchemeParams:
    """Build the moduli for ``structure`` from one element per maximal unauthorized set.

    ``mus[j]`` belongs to the j-th maximal unauthorized coalition (in the
    order of :meth:`AccessStructure.maximal_unauthorized`).  Participant
    ``i`` gets the product of every ``mus[j]`` whose coalition misses ``i``.
    """
    blocks = _check_realizable(structure)
    if len(mus) != len(blocks):
        raise ValueError(f"need {len(blocks)} elements, got {len(mus)}")
    mus = [GaussianInt.coerce(m) for m in mus]
    moduli = []
    for i in range(1, structure.n + 1):
        m = GaussianInt(1, 0)
        for mu, block in zip(mus, blocks):
            if i not in block:
                m = m * mu
        moduli.append(m)
    total = GaussianInt(1, 0)
    for mu in mus:
        total = total * mu
    m_minus = max(lcm_all(moduli[i - 1] for i in b).norm() for b in blocks)
    return SchemeParams(tuple(moduli), m_minus, total.norm())


def _check_realizable(structure: AccessStructure) -> list[frozenset[int]]:
    if not structure.minimal_authorized:
        raise DegenerateStructure("no coalition is authorized")
    if frozenset() in structure.minimal_authorized:
        raise DegenerateStructure("the empty coalition is authorized")
    blocks = structure.maximal_unauthorized()
    if blocks == [frozenset()]:
        raise DegenerateStructure("every participant alone is authorized")
    return blocks


def realize(structure: AccessStructure, min_modulus_norm: int = 9,
            seed: int = 0) -> SchemeParams:
    """Moduli whose induced structure is exactly ``structure``.

    Every building block has norm at least ``max(9, min_modulus_norm)``,
    which keeps m_plus / m_minus >= 9 and so satisfies all validity
    conditions.
    """
    blocks = _check_realizable(structure)
    floor = max(9, min_modulus_norm)
    rng = random.Random(seed)
    mus = sample_pairwise_coprime(len(blocks), floor, 2 * floor, rng)
    return realize_with(structure, mus)


def gen_threshold_params(t: int, n: int, norm_band: tuple[int, int] = (1000, 2000),
                         seed: int = 0, max_attempts: int = 200) -> SchemeParams:
    """Random pairwise coprime moduli giving a (t, n) threshold structure.

    m_minus is the largest norm of a (t-1)-coalition and m_plus the
    smallest norm of a t-coalition.
    """
    if not 1 <= t <= n:
        raise ValueError(f"need 1 <= t <= n, got t={t}, n={n}")
    if n > DEFAULT_MAX_PARTICIPANTS:
        raise ValueError(f"n={n} exceeds the participant cap {DEFAULT_MAX_PARTICIPANTS}")
    lo, hi = norm_band
    if lo < 2 or hi < lo:
        raise ValueError(f"bad norm band {norm_band}")
    rng = random.Random(seed)
    for _ in range(max_attempts):
        chosen: list[GaussianInt] = []
        norms_used: set[int] = set()
        for _draw in range(50 * n):
            if len(chosen) == n:
                break
            z = _sample_canonical(rng, lo, hi)
            nz = z.norm()
            if nz in norms_used or not all(are_coprime(z, c) for c in chosen):
                continue
            chosen.append(z)
            norms_used.add(nz)
        if len(chosen) < n:
            continue
        chosen.sort(key=GaussianInt.norm)
        m_plus = math.prod(z.norm() for z in chosen[:t])
        m_minus = math.prod(z.norm() for z in chosen[n - t + 1:]) if t > 1 else 1
        if not 4 * m_minus < m_plus:
            continue
        params = SchemeParams(tuple(chosen), m_minus, m_plus)
        if validate_params(params).valid:
            return params
    raise SearchExhausted(
        f"no valid ({t},{n}) threshold moduli in norm band {norm_band} "
        f"after {max_attempts} attempts")


# -- weighted threshold view ------------------------------------------------

@dataclass(frozen=True)
class WeightedThreshold:
    """Authorized iff the sum of member weights reaches the threshold."""

    weights: tuple[Fraction, ...]
    threshold: Fraction

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in self.weights))
        object.__setattr__(self, "threshold", Fraction(self.threshold))
        if any(w <= 0 for w in self.weights) or self.threshold <= 0:
            raise ValueError("weights and threshold must be positive")

    def authorizes(self, coalition: Iterable[int]) -> bool:
        return sum((self.weights[i - 1] for i in coalition), Fraction(0)) >= self.threshold

    def structure(self) -> AccessStructure:
        n = len(self.weights)
        family = [_mask_members(m) for m in range(1, 1 << n)
                  if self.authorizes(_mask_members(m))]
        return AccessStructure.from_family(n, family)


@dataclass(frozen=True)
class LogWeightedThreshold:
    """Weights log N(m_i), threshold log m_plus, compared multiplicatively.

    A coalition is authorized iff the product of its norms is at least
    ``m_plus``; no logarithm is ever evaluated for a decision.
    """

    norms: tuple[int, ...]
    m_plus: int

    def authorizes(self, coalition: Iterable[int]) -> bool:
        return math.prod(self.norms[i - 1] for i in coalition) >= self.m_plus

    def structure(self) -> AccessStructure:
        n = len(self.norms)
        family = [_mask_members(m) for m in range(1, 1 << n)
                  if self.authorizes(_mask_members(m))]
        return AccessStructure.from_family(n, family)

    def weights(self) -> list[float]:
        """Display-only float weights."""
        return [math.log(x) for x in self.norms]

    def threshold(self) -> float:
        return math.log(self.m_plus)


def weighted_representation(p: SchemeParams) -> LogWeightedThreshold:
    for i, j in combinations(range(p.n), 2):
        if not are_coprime(p.moduli[i], p.moduli[j]):
            raise NotPairwiseCoprime(
                f"moduli {i + 1} ({p.moduli[i]}) and {j + 1} ({p.moduli[j]}) share a factor")
    return LogWeightedThreshold(tuple(m.norm() for m in p.moduli), p.m_plus)


__all__ = [
    "AccessStructure",
    "LogWeightedThreshold",
    "WeightedThreshold",
    "coalition_norm",
    "enumerate_structure",
    "gen_threshold_params",
    "minimal_sets",
    "realize",
    "realize_with",
    "sample_pairwise_coprime",
    "threshold_structure",
    "weighted_representation",
]

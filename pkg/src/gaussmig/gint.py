"""Exact arithmetic in the ring of Gaussian integers Z[i].

Division here always lands in the half-open fundamental square

    F(z) = { z(a + bi) : -1/2 < a, b <= 1/2 }

which makes the remainder unique.  Everything is integer arithmetic;
there is no floating point anywhere in this module.
"""

from __future__ import annotations

import enum
import operator
import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, NamedTuple, Union

IntLike = Union[int, "GaussianInt"]


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __post_init__(self):
        for name in ("re", "im"):
            value = getattr(self, name)
            if type(value) is int:
                continue
            if isinstance(value, bool):
                raise TypeError("GaussianInt coefficients must be integers")
            object.__setattr__(self, name, operator.index(value))

    @classmethod
    def coerce(cls, value: IntLike) -> GaussianInt:
        if isinstance(value, GaussianInt):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value, 0)
        if isinstance(value, str):
            return cls.parse(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian integer")

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        return GaussianInt.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (GaussianInt, int)):
            return NotImplemented
        o = GaussianInt.coerce(other)
        return GaussianInt(self.re * o.re - self.im * o.im,
                           self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianInt):
            return self.re == other.re and self.im == other.im
        if isinstance(other, int) and not isinstance(other, bool):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    # -- text form -------------------------------------------------------

    def __str__(self):
        a, b = self.re, self.im
        if b == 0:
            return str(a)
        if b == 1:
            imag = "i"
        elif b == -1:
            imag = "-i"
        else:
            imag = f"{b}i"
        if a == 0:
            return imag
        return f"{a}{imag}" if imag.startswith("-") else f"{a}+{imag}"

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"

    @classmethod
    def parse(cls, text: str) -> GaussianInt:
        """Parse ``a+bi`` style text; spaces are ignored.

        Accepts ``4``, ``-3-13i``, ``3 - i``, ``97i``, ``-i`` and so on.
        """
        s = "".join(text.split())
        if _REAL_RE.fullmatch(s):
            return cls(int(s), 0)
        m = _IMAG_RE.fullmatch(s) or _COMPLEX_RE.fullmatch(s)
        if m is None:
            raise ValueError(f"not a Gaussian integer: {text!r}")
        coeff = m.group("im")
        b = {"": 1, "+": 1, "-": -1}.get(coeff)
        if b is None:
            b = int(coeff)
        return cls(int(m.groupdict().get("re") or 0), b)


_REAL_RE = re.compile(r"[+-]?\d+")
_IMAG_RE = re.compile(r"(?P<im>[+-]?\d*)i")
_COMPLEX_RE = re.compile(r"(?P<re>[+-]?\d+)(?P<im>[+-]\d*)i")

ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, -ONE, -I)


class DomainKind(enum.Enum):
    """Which variant of the fundamental square to test against."""

    OPEN = "open"          # -1/2 <  a, b <  1/2
    HALF_OPEN = "half-open"  # -1/2 <  a, b <= 1/2
    CLOSED = "closed"      # -1/2 <= a, b <= 1/2


class DivResult(NamedTuple):
    quotient: GaussianInt
    remainder: GaussianInt


def norm(z: IntLike) -> int:
    return GaussianInt.coerce(z).norm()


def _ceil_div(p: int, q: int) -> int:
    return -((-p) // q)


def _nonzero(z: IntLike, what: str = "divisor") -> GaussianInt:
    z = GaussianInt.coerce(z)
    if not z:
        raise ZeroDivisionError(f"{what} must be a nonzero Gaussian integer")
    return z


def divrem_principal(v: IntLike, z: IntLike) -> DivResult:
    """Divide ``v`` by ``z`` with the remainder in F(z).

    With ``v/z = x + yi`` the quotient is ``ceil(x - 1/2) + ceil(y - 1/2) i``;
    both ceilings are taken on exact rationals ``(2p - N) / 2N``.
    """
    v = GaussianInt.coerce(v)
    z = _nonzero(z)
    w = v * z.conj()
    n = z.norm()
    a = _ceil_div(2 * w.re - n, 2 * n)
    b = _ceil_div(2 * w.im - n, 2 * n)
    q = GaussianInt(a, b)
    return DivResult(q, v - z * q)


def mod_principal(v: IntLike, z: IntLike) -> GaussianInt:
    """Principal value of ``v`` modulo ``z``."""
    return divrem_principal(v, z).remainder


def in_domain(v: IntLike, z: IntLike, kind: DomainKind = DomainKind.HALF_OPEN) -> bool:
    v = GaussianInt.coerce(v)
    z = _nonzero(z, "domain generator")
    w = v * z.conj()
    n = z.norm()
    x, y = 2 * w.re, 2 * w.im
    if kind is DomainKind.HALF_OPEN:
        return -n < x <= n and -n < y <= n
    if kind is DomainKind.OPEN:
        return -n < x < n and -n < y < n
    if kind is DomainKind.CLOSED:
        return -n <= x <= n and -n <= y <= n
    raise ValueError(f"unknown domain kind {kind!r}")


def is_unit(z: IntLike) -> bool:
    return norm(z) == 1


def divides(d: IntLike, v: IntLike) -> bool:
    """True when ``d | v`` in Z[i].  Zero divides only zero."""
    d, v = GaussianInt.coerce(d), GaussianInt.coerce(v)
    if not d:
        return not v
    w = v * d.conj()
    n = d.norm()
    return w.re % n == 0 and w.im % n == 0


def exact_div(v: IntLike, d: IntLike) -> GaussianInt:
    d = _nonzero(d)
    q, r = divrem_principal(v, d)
    if r:
        raise ValueError(f"{d} does not divide {v}")
    return q


def _normalizing_unit(z: GaussianInt) -> GaussianInt:
    a, b = z.re, z.im
    if a > 0 and b >= 0:
        return ONE
    if b < 0 and a >= 0:
        return I
    if a < 0 and b <= 0:
        return -ONE
    return -I


def canonical_associate(z: IntLike) -> GaussianInt:
    """The associate of ``z`` with positive real part and nonnegative imaginary part."""
    z = GaussianInt.coerce(z)
    if not z:
        raise ValueError("zero has no canonical associate")
    return z * _normalizing_unit(z)


def egcd(a: IntLike, b: IntLike) -> tuple[GaussianInt, GaussianInt, GaussianInt]:
    """Return ``(g, u, v)`` with ``u*a + v*b == g`` and ``g`` canonical."""
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divrem_principal(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    u = _normalizing_unit(r0)
    return r0 * u, s0 * u, t0 * u


def gcd(a: IntLike, b: IntLike) -> GaussianInt:
    return egcd(a, b)[0]


def lcm(a: IntLike, b: IntLike) -> GaussianInt:
    a, b = GaussianInt.coerce(a), GaussianInt.coerce(b)
    if not a or not b:
        raise ValueError("lcm is only defined for nonzero arguments")
    return canonical_associate(a * exact_div(b, gcd(a, b)))


def lcm_all(values: Iterable[IntLike]) -> GaussianInt:
    """n-ary lcm; raises on an empty iterable."""
    vals = [GaussianInt.coerce(v) for v in values]
    if not vals:
        raise ValueError("lcm of an empty family is undefined")
    if len(vals) == 1:
        return canonical_associate(vals[0])
    return reduce(lcm, vals)


def are_coprime(a: IntLike, b: IntLike) -> bool:
    return is_unit(gcd(a, b))

"""Companion sequences of the recurrence X_r = p X_{r-1} - q X_{r-2}.

For rational parameters (p, q) this module computes the pair

    u: 0, 1, p, p^2 - q, ...        (seeds u_0 = 0, u_1 = 1)
    w: 2, p, p^2 - 2q, ...          (seeds w_0 = 2, w_1 = p)

by plain iteration, by closed form in Q(sqrt(d)), and by index doubling.
All routes return exact Fractions and agree with each other; the doubling
route additionally reports how many multiplications it spent, which makes
the asymptotic advantage over iteration checkable rather than anecdotal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numeric import as_fraction
from .quadfield import make_roots, rational_value


class DegenerateDiscriminantError(ArithmeticError):
    """p^2 - 4q = 0, so a formula dividing by the root gap does not apply."""


@dataclass(frozen=True)
class RecurrenceParams:
    """The rational parameter pair (p, q) of X_r = p X_{r-1} - q X_{r-2}."""

    p: Fraction
    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", as_fraction(self.p))
        object.__setattr__(self, "q", as_fraction(self.q))

    @property
    def discriminant(self) -> Fraction:
        return self.p * self.p - 4 * self.q

    @property
    def is_degenerate(self) -> bool:
        return self.discriminant == 0

    def __str__(self) -> str:
        return f"(p={self.p}, q={self.q})"


FIBONACCI = RecurrenceParams(Fraction(1), Fraction(-1))


class MulCounter:
    """Tallies the multiplications an algorithm routes through it."""

    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0

    def mul(self, a, b):
        self.count += 1
        return a * b


class _NullCounter:
    __slots__ = ()

    def mul(self, a, b):
        return a * b


_NULL = _NullCounter()


class SequenceTable:
    """Memoized u_n, w_n and q^n values, grown on demand by the recurrence."""

    def __init__(self, params: RecurrenceParams):
        self.params = params
        self._u = [Fraction(0), Fraction(1)]
        self._w = [Fraction(2), params.p]
        self._qpow = [Fraction(1)]

    def _grow(self, n: int) -> None:
        p, q = self.params.p, self.params.q
        while len(self._u) <= n:
            self._u.append(p * self._u[-1] - q * self._u[-2])
            self._w.append(p * self._w[-1] - q * self._w[-2])
        while len(self._qpow) <= n:
            self._qpow.append(q * self._qpow[-1])

    def u(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("index must be nonnegative")
        self._grow(n)
        return self._u[n]

    def w(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("index must be nonnegative")
        self._grow(n)
        return self._w[n]

    def q_power(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("index must be nonnegative")
        self._grow(n)
        return self._qpow[n]


def iter_pair(params: RecurrenceParams, n: int, counter=None) -> tuple[Fraction, Fraction]:
    """(u_n, w_n) by running both recurrences n steps. Baseline: 4n mults."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    c = counter if counter is not None else _NULL
    p, q = params.p, params.q
    u0, u1 = Fraction(0), Fraction(1)
    w0, w1 = Fraction(2), p
    for _ in range(n):
        u0, u1 = u1, c.mul(p, u1) - c.mul(q, u0)
        w0, w1 = w1, c.mul(p, w1) - c.mul(q, w0)
    return u0, w0


def fast_pair(params: RecurrenceParams, n: int, counter=None) -> tuple[Fraction, Fraction]:
    """(u_n, w_n) by index doubling in O(log n) multiplications.

    The recursion carries (u_k, u_{k+1}, w_k, w_{k+1}, q^k) and steps
    k -> 2k (or 2k+1) with

        u_{2k}   = u_k w_k              w_{2k}   = w_k^2 - 2 q^k
        u_{2k+1} = u_{k+1} w_k - q^k    w_{2k+1} = w_{k+1} w_k - p q^k

    so each bit of n costs a handful of multiplications regardless of how
    large the entries have grown.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    c = counter if counter is not None else _NULL
    p, q = params.p, params.q

    def state(k: int) -> tuple[Fraction, Fraction, Fraction, Fraction, Fraction]:
        if k == 0:
            return Fraction(0), Fraction(1), Fraction(2), p, Fraction(1)
        uh, uh1, wh, wh1, qh = state(k >> 1)
        u_even = c.mul(uh, wh)
        u_odd = c.mul(uh1, wh) - qh
        w_even = c.mul(wh, wh) - (qh + qh)
        w_odd = c.mul(wh1, wh) - c.mul(p, qh)
        q_even = c.mul(qh, qh)
        if k & 1:
            qh1 = c.mul(qh, q)
            u_next = c.mul(uh1, wh1)
            w_next = c.mul(wh1, wh1) - (qh1 + qh1)
            return u_odd, u_next, w_odd, w_next, c.mul(q_even, q)
        return u_even, u_odd, w_even, w_odd, q_even

    u_n, _, w_n, _, _ = state(n)
    return u_n, w_n


def u_binet(params: RecurrenceParams, n: int) -> Fraction:
    """u_n = (sigma^n - tau^n) / (sigma - tau), exact in Q(sqrt(d))."""
    if params.is_degenerate:
        raise DegenerateDiscriminantError("repeated root: the u closed form divides by zero")
    sigma, tau = make_roots(params)
    return rational_value((sigma**n - tau**n) / (sigma - tau), f"u_{n} closed form")


def w_binet(params: RecurrenceParams, n: int) -> Fraction:
    """w_n = sigma^n + tau^n, exact in Q(sqrt(d))."""
    sigma, tau = make_roots(params)
    return rational_value(sigma**n + tau**n, f"w_{n} closed form")


def w_from_u(params: RecurrenceParams, n: int, table: SequenceTable | None = None) -> Fraction:
    """w_n rebuilt from u values alone: w_n = u_{n+1} - q u_{n-1} for n >= 1."""
    t = table if table is not None else SequenceTable(params)
    if n == 0:
        return Fraction(2)
    return t.u(n + 1) - params.q * t.u(n - 1)


def u_from_w(params: RecurrenceParams, n: int, table: SequenceTable | None = None) -> Fraction:
    """u_n rebuilt from w values: u_n = (w_{n+1} - q w_{n-1}) / (p^2 - 4q)."""
    if params.is_degenerate:
        raise DegenerateDiscriminantError("repeated root: u cannot be recovered from w")
    t = table if table is not None else SequenceTable(params)
    if n == 0:
        return Fraction(0)
    return (t.w(n + 1) - params.q * t.w(n - 1)) / params.discriminant


def cubic_coefficients(params: RecurrenceParams) -> tuple[Fraction, Fraction, Fraction]:
    """(A, B, C) with X(m+3) = A X(m+2) + B X(m+1) + C X(m) for squared terms.

    The sequences u_n^2, w_n^2 and q^n all satisfy this one cubic recurrence,
    with A = p^2 - q, B = q^2 - p^2 q, C = q^3. At p=1, q=-1 this reads
    X(m+3) = 2 X(m+2) + 2 X(m+1) - X(m); printed statements of that case
    sometimes duplicate the X(m+2) term, giving 4 X(m+2) - X(m), which the
    squared sequences do not satisfy (F_4^2 = 9, not 4 F_3^2 - F_1^2 = 15).
    """
    p, q = params.p, params.q
    p2 = p * p
    return p2 - q, q * q - p2 * q, q * q * q


_CUBIC_KINDS = ("u_squared", "w_squared", "q_power")


def check_cubic_recurrence(params: RecurrenceParams, kind: str, m_max: int) -> int | None:
    """First m in [0, m_max - 3] where the cubic recurrence fails, else None."""
    if kind not in _CUBIC_KINDS:
        raise ValueError(f"kind must be one of {_CUBIC_KINDS}")
    table = SequenceTable(params)
    if kind == "u_squared":
        term = lambda n: table.u(n) ** 2
    elif kind == "w_squared":
        term = lambda n: table.w(n) ** 2
    else:
        term = lambda n: table.q_power(n)
    a, b, cc = cubic_coefficients(params)
    for m in range(m_max - 2):
        if term(m + 3) != a * term(m + 2) + b * term(m + 1) + cc * term(m):
            return m
    return None

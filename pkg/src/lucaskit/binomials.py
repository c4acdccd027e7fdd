"""Gaussian binomials, cyclotomic factorizations, and (r|k)_u coefficients.

The Gaussian binomial B(m, k) is built bottom-up by the q-Pascal rule

    B(m, k) = B(m-1, k-1) + z^k B(m-1, k)

which keeps every intermediate an integer polynomial with no division.
Homogenizing B(r, k) gives the symmetric bivariate F(r, k, x, y); plugging
in the two roots of x^2 - p x + q turns it into the generalized binomial
coefficient (r|k)_u, a rational number that stays finite even when the
naive quotient u_r ... u_{r-k+1} / (u_k ... u_1) hits a zero term.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .poly import Poly
from .quadfield import QuadExt, make_roots, rational_value
from .sequences import RecurrenceParams, SequenceTable


def gaussian_binomial(m: int, k: int) -> Poly:
    """The Gaussian binomial as a polynomial in z, by the q-Pascal recurrence.

    >>> gaussian_binomial(4, 2).coeffs
    [1, 1, 2, 1, 1]
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in [0, {m}], got {k}")
    row = [Poly([1])]
    for mi in range(1, m + 1):
        prev = row
        row = [Poly([1])]
        for ki in range(1, mi):
            shifted = Poly([0] * ki + prev[ki].coeffs)
            row.append(prev[ki - 1] + shifted)
        row.append(Poly([1]))
    return row[k]


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Poly:
    """The n-th cyclotomic polynomial, by dividing z^n - 1 by the proper ones.

    >>> cyclotomic_poly(6).coeffs
    [1, -1, 1]
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = Poly([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            out = out.divexact(cyclotomic_poly(d))
    return out


def cyclotomic_exponent(m: int, k: int, d: int) -> int:
    """Multiplicity of the d-th cyclotomic polynomial in B(m, k)."""
    return m // d - k // d - (m - k) // d


def gaussian_cyclotomic_factorization(m: int, k: int) -> list[tuple[int, int]]:
    """The (d, e_d) pairs with e_d > 0 whose product reconstructs B(m, k)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if not 0 <= k <= m:
        raise ValueError(f"k must lie in [0, {m}], got {k}")
    out = []
    for d in range(2, m + 1):
        e = cyclotomic_exponent(m, k, d)
        if e:
            out.append((d, e))
    return out


@dataclass(frozen=True)
class HomogeneousBiPoly:
    """Homogeneous polynomial in (x, y): coeffs[i] multiplies x^(t-i) y^i."""

    total_degree: int
    coeffs: tuple

    def __post_init__(self) -> None:
        cs = tuple(self.coeffs)
        if len(cs) != self.total_degree + 1:
            raise ValueError("coefficient list must have length total_degree + 1")
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def _from_poly(cls, t: int, poly: Poly) -> HomogeneousBiPoly:
        if poly.degree > t:
            raise ValueError("coefficients exceed the declared total degree")
        return cls(t, tuple(poly[i] for i in range(t + 1)))

    def _as_poly(self) -> Poly:
        return Poly(self.coeffs)

    def __mul__(self, other: HomogeneousBiPoly) -> HomogeneousBiPoly:
        t = self.total_degree + other.total_degree
        return self._from_poly(t, self._as_poly() * other._as_poly())

    def divexact(self, other: HomogeneousBiPoly) -> HomogeneousBiPoly:
        t = self.total_degree - other.total_degree
        if t < 0:
            raise ValueError("divisor has larger total degree")
        return self._from_poly(t, self._as_poly().divexact(other._as_poly()))

    def evaluate(self, x, y):
        """Sum of coeffs[i] * x^(t-i) * y^i over any exact ring."""
        t = self.total_degree
        xp, yp = [1], [1]
        for _ in range(t):
            xp.append(xp[-1] * x)
            yp.append(yp[-1] * y)
        acc = 0
        for i, c in enumerate(self.coeffs):
            if c != 0:
                acc = acc + c * xp[t - i] * yp[i]
        return acc

    def swap(self) -> HomogeneousBiPoly:
        """The image under x <-> y."""
        return HomogeneousBiPoly(self.total_degree, tuple(reversed(self.coeffs)))

    def __str__(self) -> str:
        if all(c == 0 for c in self.coeffs):
            return "0"
        t = self.total_degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            xs = "" if t - i == 0 else ("x" if t - i == 1 else f"x^{t - i}")
            ys = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            mono = xs + ("*" if xs and ys else "") + ys
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def homogeneous_f(i: int) -> HomogeneousBiPoly:
    """f_i(x, y) = (x^i - y^i)/(x - y): all-ones, total degree i - 1."""
    if i < 1:
        raise ValueError("i must be positive")
    return HomogeneousBiPoly(i - 1, (1,) * i)


def bivariate_F(r: int, k: int) -> HomogeneousBiPoly:
    """F(r, k, x, y): the Gaussian binomial B(r, k) homogenized by y^{k(r-k)}.

    Substituting z = x/y into B and clearing with y^{k(r-k)} sends the z^j
    term to x^j y^{t-j}, so coeffs[i] = b_{t-i}. Palindromy of B makes F
    symmetric under x <-> y.
    """
    b = gaussian_binomial(r, k)
    t = k * (r - k)
    return HomogeneousBiPoly(t, tuple(b[t - i] for i in range(t + 1)))


def generalized_binomial(params: RecurrenceParams, r: int, k: int) -> Fraction:
    """(r|k)_u = F(r, k, sigma, tau), always a finite rational.

    This is the route that survives zero u-terms: F is a polynomial, so the
    evaluation never divides, and symmetry in (sigma, tau) forces the value
    onto the rational line.
    """
    sigma, tau = make_roots(params)
    value = bivariate_F(r, k).evaluate(sigma, tau)
    if isinstance(value, QuadExt):
        return rational_value(value, f"({r}|{k})_u")
    return Fraction(value)


def generalized_binomial_quotient(
    params: RecurrenceParams, r: int, k: int, table: SequenceTable | None = None
) -> Fraction:
    """(r|k)_u as u_r u_{r-1} ... u_{r-k+1} / (u_k u_{k-1} ... u_1).

    Raises ZeroDivisionError when some u_1..u_k vanishes; the polynomial
    route above is the one that is total.
    """
    if not 0 <= k <= r:
        raise ValueError(f"k must lie in [0, {r}], got {k}")
    t = table if table is not None else SequenceTable(params)
    num = Fraction(1)
    den = Fraction(1)
    for i in range(1, k + 1):
        num *= t.u(r - k + i)
        den *= t.u(i)
    if den == 0:
        raise ZeroDivisionError("a denominator term u_i is zero")
    return num / den

"""Exact scalar arithmetic and squarefree decomposition.

Python's built-in ``int`` is already an arbitrary-precision integer and
``fractions.Fraction`` keeps rationals in lowest terms with a positive
denominator, so both are used directly as this package's scalars. Nothing
here ever touches a float.

What the module adds on top is the squarefree bookkeeping needed to name
the quadratic field a discriminant generates: every nonzero rational r can
be written r = s^2 * d with s a nonnegative rational and d a squarefree
integer carrying the sign of r.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

#: Trial division gives up past this bound instead of risking a wrong answer.
DEFAULT_FACTOR_BOUND = 10**6


class FactorizationIncompleteError(ArithmeticError):
    """Raised when trial division cannot certify the squarefree part.

    Inputs at the intended desk scale never trigger this; it exists so an
    oversized input fails loudly rather than returning a wrong radicand.
    """


def as_fraction(value: int | str | Fraction) -> Fraction:
    """Coerce to Fraction, rejecting floats so binary rounding never leaks in.

    Accepts ints, Fractions, and strings like ``"-3/4"`` or ``"7"``.
    """
    if isinstance(value, float):
        raise TypeError(
            "floats are not exact; pass an int, a Fraction, or an 'a/b' string"
        )
    return Fraction(value)


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """A factored rational: ``value == s**2 * d`` exactly.

    ``d`` is a squarefree integer (possibly 1, negative for negative
    inputs) and ``s`` is a nonnegative rational scale.
    """

    d: int
    s: Fraction

    def recompose(self) -> Fraction:
        return self.s * self.s * self.d


def _squarefree_int(n: int, bound: int) -> tuple[int, int]:
    """Split n > 0 into (d, s) with n = s*s*d and d squarefree.

    Trial-divides by 2 and odd numbers up to ``bound``. The leftover
    cofactor c then has no prime factor <= bound, which certifies three
    cheap cases: c == 1, c a perfect square (all exponents even), and
    c < bound**3 (at most two prime factors, so squarefree unless it is a
    square). Anything else raises rather than guessing.
    """
    d, s = 1, 1
    c = n
    f = 2
    while f <= bound and f * f <= c:
        if c % f == 0:
            e = 0
            while c % f == 0:
                c //= f
                e += 1
            s *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    if c > 1:
        if f * f > c:
            d *= c  # cofactor smaller than f*f is prime
        else:
            k = isqrt(c)
            if k * k == c:
                s *= k
            elif c < bound**3:
                d *= c
            else:
                raise FactorizationIncompleteError(
                    f"cofactor {c} exceeds the factorization bound {bound} "
                    "and is not a perfect square"
                )
    return d, s


def squarefree_decompose(
    value: int | str | Fraction, bound: int = DEFAULT_FACTOR_BOUND
) -> SquarefreeDecomposition:
    """Write a rational as s^2 * d with d a squarefree integer.

    The sign travels with d, so s is always nonnegative; zero decomposes
    as d=1, s=0:

    >>> squarefree_decompose(45)
    SquarefreeDecomposition(d=5, s=Fraction(3, 1))
    >>> squarefree_decompose(Fraction(-45, 4))
    SquarefreeDecomposition(d=-5, s=Fraction(3, 2))
    """
    r = as_fraction(value)
    if r == 0:
        return SquarefreeDecomposition(d=1, s=Fraction(0))
    # a/b == (a*b) / b^2, so only one integer needs factoring.
    d, s = _squarefree_int(abs(r.numerator) * r.denominator, bound)
    if r < 0:
        d = -d
    return SquarefreeDecomposition(d=d, s=Fraction(s, r.denominator))


def is_rational_square(value: int | str | Fraction) -> Fraction | None:
    """Return the nonnegative rational square root of ``value``, or None.

    Needs no factoring: a reduced fraction is a square exactly when its
    numerator and denominator both are.
    """
    r = as_fraction(value)
    if r < 0:
        return None
    if r == 0:
        return Fraction(0)
    num_root = isqrt(r.numerator)
    if num_root * num_root != r.numerator:
        return None
    den_root = isqrt(r.denominator)
    if den_root * den_root != r.denominator:
        return None
    return Fraction(num_root, den_root)

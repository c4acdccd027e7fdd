from fractions import Fraction

import pytest

from lucaskit.charpoly import (
    GaloisGroup,
    classify_galois,
    fibonacci_factorization,
    phi_coeff_formula,
    phi_product,
    quadratic_factor,
)
from lucaskit.quadfield import make_roots
from lucaskit.sequences import FIBONACCI, RecurrenceParams, SequenceTable

GRID = [RecurrenceParams(p, q) for p in range(-3, 4) for q in range(-3, 4)]


def test_phi_product_base_cases():
    assert phi_product(FIBONACCI, 0).coeffs == [-1, 1]
    for params in (FIBONACCI, RecurrenceParams(3, 2), RecurrenceParams(Fraction(1, 2), 5)):
        assert phi_product(params, 1).coeffs == [params.q, -params.p, Fraction(1)]
    assert phi_product(FIBONACCI, 2).coeffs == [1, -2, -2, 1]
    with pytest.raises(ValueError):
        phi_product(FIBONACCI, -1)


def test_phi_is_monic_of_degree_n_plus_1():
    for params in GRID:
        for n in range(5):
            phi = phi_product(params, n)
            assert phi.degree == n + 1
            assert phi.coeffs[-1] == 1


def test_phi_product_equals_coeff_formula():
    # includes degenerate (2,1) and rational-split (3,2) cells
    for params in GRID:
        for n in range(7):
            assert phi_product(params, n) == phi_coeff_formula(params, n), (params, n)


def test_phi_formula_base_case():
    assert phi_coeff_formula(FIBONACCI, 1).coeffs == [-1, -1, 1]
    assert phi_coeff_formula(FIBONACCI, 0).coeffs == [-1, 1]


def test_every_root_vanishes():
    for params in (FIBONACCI, RecurrenceParams(2, 3), RecurrenceParams(-3, Fraction(1, 2))):
        sigma, tau = make_roots(params)
        for n in range(6):
            phi = phi_product(params, n)
            for j in range(n + 1):
                assert phi(sigma**j * tau ** (n - j)) == 0


def test_quadratic_factor_values():
    assert quadratic_factor(FIBONACCI, 2).coeffs == [1, -3, 1]
    assert quadratic_factor(FIBONACCI, 4).coeffs == [1, -7, 1]
    for params in (FIBONACCI, RecurrenceParams(2, 3)):
        assert quadratic_factor(params, 1).coeffs == [params.q, -params.p, Fraction(1)]
    with pytest.raises(ValueError):
        quadratic_factor(FIBONACCI, 0)


def test_quadratic_factor_divides_phi():
    for params in GRID:
        sigma, tau = make_roots(params)
        for n in range(1, 6):
            if sigma**n == tau**n:
                continue
            quot, rem = divmod(phi_product(params, n), quadratic_factor(params, n))
            assert not rem, (params, n)
            assert quot.degree == n - 1


def test_quadratic_factor_discriminant_identity():
    for params in GRID:
        t = SequenceTable(params)
        for n in range(1, 12):
            f = quadratic_factor(params, n)
            disc = f[1] ** 2 - 4 * f[0]
            assert disc == t.u(n) ** 2 * params.discriminant


def test_fibonacci_factorization_n2():
    quad, tail, sign = fibonacci_factorization(2)
    assert quad.coeffs == [1, -3, 1]
    assert tail.coeffs == [-1, -1]
    assert sign == -1
    assert quad * tail * sign == phi_product(FIBONACCI, 2)


def test_fibonacci_factorization_n3():
    quad, tail, sign = fibonacci_factorization(3)
    assert quad.coeffs == [-1, -4, 1]
    assert tail.coeffs == [-1, 1, 1]
    assert sign == 1
    assert quad * tail == phi_product(FIBONACCI, 3)


def test_fibonacci_factorization_sign_rule():
    for n in range(2, 13):
        quad, tail, sign = fibonacci_factorization(n)
        assert sign == (-1) ** (n - 1)
        assert quad * tail * sign == phi_product(FIBONACCI, n)
        # the opposite (printed) sign never reassembles the polynomial
        assert quad * tail * (-sign) != phi_product(FIBONACCI, n)
    with pytest.raises(ValueError):
        fibonacci_factorization(1)


def test_classify_galois():
    z2 = classify_galois(FIBONACCI)
    assert z2.variant is GaloisGroup.Z2 and z2.d == 5
    assert classify_galois(RecurrenceParams(1, 1)).d == -3
    assert classify_galois(RecurrenceParams(3, 2)).variant is GaloisGroup.TRIVIAL
    assert classify_galois(RecurrenceParams(2, 1)).variant is GaloisGroup.DEGENERATE
    assert classify_galois(RecurrenceParams(Fraction(1, 2), Fraction(-1, 2))).variant is (
        GaloisGroup.TRIVIAL  # discriminant 9/4
    )

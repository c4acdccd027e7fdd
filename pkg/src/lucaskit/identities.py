"""Exact verification of companion-sequence identities over parameter grids.

Every check compares cross-multiplied exact values: a ratio claimed to
equal 5 is tested as num == 5 * den, so zero denominators become explicit
skip events rather than divisions. Sweeps produce one IdentityReport per
(identity, parameter) cell with deterministic ordering, a smallest-index
counterexample on failure, and pass/skip tallies.

Identity ids ending in ``_paper_sign`` or ``_paper_form`` are diagnostics:
they evaluate commonly printed but incorrect variants of the classical
statements and are expected to fail. Their recorded counterexamples are
the machine evidence for the corrected forms used everywhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .charpoly import FactorizationSignError, fibonacci_factorization, phi_product, quadratic_factor
from .numeric import as_fraction, is_rational_square
from .sequences import (
    FIBONACCI,
    DegenerateDiscriminantError,
    RecurrenceParams,
    SequenceTable,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckOutcome:
    """Result of one identity instance at one index tuple."""

    status: str
    lhs: object = None
    rhs: object = None
    reason: str = ""


@dataclass(frozen=True)
class Counterexample:
    indices: tuple[tuple[str, int], ...]
    lhs: object
    rhs: object

    def __str__(self) -> str:
        where = ", ".join(f"{k}={v}" for k, v in self.indices)
        return f"{where}: lhs={self.lhs}, rhs={self.rhs}"


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity swept over an index range at fixed parameters."""

    identity_id: str
    params: RecurrenceParams | None
    index_range: tuple[int, int]
    a_range: tuple[int, int] | None
    status: str
    first_counterexample: Counterexample | None = None
    note: str = ""
    checked: int = 0
    skipped: int = 0

    def __post_init__(self) -> None:
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == FAIL) != (self.first_counterexample is not None):
            raise ValueError("fail status and counterexample must appear together")
        if self.status == SKIPPED and not self.note:
            raise ValueError("skipped reports must carry a reason")

    def to_record(self) -> dict:
        """Serialization-ready dict; field names are part of the interface."""
        ce = None
        if self.first_counterexample is not None:
            ce = {
                "indices": dict(self.first_counterexample.indices),
                "lhs": str(self.first_counterexample.lhs),
                "rhs": str(self.first_counterexample.rhs),
            }
        return {
            "identity": self.identity_id,
            "p": str(self.params.p) if self.params is not None else None,
            "q": str(self.params.q) if self.params is not None else None,
            "n_min": self.index_range[0],
            "n_max": self.index_range[1],
            "a_max": self.a_range[1] if self.a_range is not None else None,
            "status": self.status,
            "checked": self.checked,
            "skipped": self.skipped,
            "counterexample": ce,
            "note": self.note,
        }


@dataclass(frozen=True)
class GridSpec:
    """Inclusive rational parameter ranges plus index bounds for a sweep."""

    p_range: tuple[Fraction, Fraction] = (Fraction(1), Fraction(1))
    q_range: tuple[Fraction, Fraction] = (Fraction(-1), Fraction(-1))
    n_max: int = 50
    a_max: int = 10
    step: Fraction = Fraction(1)

    def __post_init__(self) -> None:
        p_lo, p_hi = (as_fraction(v) for v in self.p_range)
        q_lo, q_hi = (as_fraction(v) for v in self.q_range)
        step = as_fraction(self.step)
        if p_lo > p_hi or q_lo > q_hi:
            raise ValueError("ranges must satisfy lo <= hi")
        if self.n_max < 1:
            raise ValueError("n_max must be at least 1")
        if self.a_max < 0:
            raise ValueError("a_max must be nonnegative")
        if step <= 0:
            raise ValueError("step must be positive")
        object.__setattr__(self, "p_range", (p_lo, p_hi))
        object.__setattr__(self, "q_range", (q_lo, q_hi))
        object.__setattr__(self, "step", step)

    @staticmethod
    def _values(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
        out = []
        v = lo
        while v <= hi:
            out.append(v)
            v += step
        return out

    def p_values(self) -> list[Fraction]:
        return self._values(*self.p_range, self.step)

    def q_values(self) -> list[Fraction]:
        return self._values(*self.q_range, self.step)


# -- single-instance checks -------------------------------------------------


def check_prop34(params: RecurrenceParams, n: int, table: SequenceTable | None = None) -> bool:
    """w_n^2 - 4 q^n == u_n^2 (p^2 - 4q), exactly."""
    t = table if table is not None else SequenceTable(params)
    return t.w(n) ** 2 - 4 * t.q_power(n) == t.u(n) ** 2 * params.discriminant


def check_eq35_shape(
    params: RecurrenceParams, n: int, table: SequenceTable | None = None
) -> Fraction | None:
    """Solve z^2 (p^2 - 4q) = w_n^2 - 4 q^n for z >= 0 by extracting a root.

    Returns the nonnegative rational solution, which equals |u_n|, or None
    if no rational solution exists (which never happens: the quotient is a
    square by the w/u relation above). This route really takes the square
    root instead of copying u_n, so it is an independent confirmation.
    """
    disc = params.discriminant
    if disc == 0:
        raise DegenerateDiscriminantError("z^2 * 0 = w_n^2 - 4 q^n has no unique solution")
    t = table if table is not None else SequenceTable(params)
    return is_rational_square((t.w(n) ** 2 - 4 * t.q_power(n)) / disc)


def check_cor36(params: RecurrenceParams, n: int, table: SequenceTable | None = None) -> bool:
    """w_{2n} - 2 q^n == u_n^2 (p^2 - 4q), plus the step w_n^2 == w_{2n} + 2 q^n."""
    t = table if table is not None else SequenceTable(params)
    qn = t.q_power(n)
    w2n = t.w(2 * n)
    if t.w(n) ** 2 != w2n + 2 * qn:
        return False
    return w2n - 2 * qn == t.u(n) ** 2 * params.discriminant


def check_eq24(n: int, table: SequenceTable | None = None) -> bool:
    """L_n^2 - 4 (-1)^n == 5 F_n^2."""
    t = table if table is not None else SequenceTable(FIBONACCI)
    return t.w(n) ** 2 - 4 * t.q_power(n) == 5 * t.u(n) ** 2


def check_eq22(n: int, table: SequenceTable | None = None) -> int:
    """Extract A_n >= 0 with L_n^2 - 4 (-1)^n = 5 A_n^2.

    Raises ArithmeticError when no such integer exists. The caller compares
    the result against F_n; this function finds A_n by root extraction.
    """
    t = table if table is not None else SequenceTable(FIBONACCI)
    fifth = (t.w(n) ** 2 - 4 * t.q_power(n)) / 5
    root = is_rational_square(fifth)
    if root is None or root.denominator != 1:
        raise ArithmeticError(f"L_{n}^2 - 4(-1)^{n} is not five times a perfect square")
    return int(root)


def _ratio_check(num: Fraction, den: Fraction, reason: str) -> CheckOutcome:
    if den == 0:
        return CheckOutcome(SKIPPED, reason=reason)
    if num == 5 * den:
        return CheckOutcome(PASS, lhs=Fraction(5), rhs=Fraction(5))
    return CheckOutcome(FAIL, lhs=num / den, rhs=Fraction(5))


def check_eq25_freitag(n: int, a: int, table: SequenceTable | None = None) -> CheckOutcome:
    """(L_n^2 - (-1)^a L_{n+a}^2) / (F_n^2 - (-1)^a F_{n+a}^2) == 5."""
    t = table if table is not None else SequenceTable(FIBONACCI)
    s = -1 if a % 2 else 1
    num = t.w(n) ** 2 - s * t.w(n + a) ** 2
    den = t.u(n) ** 2 - s * t.u(n + a) ** 2
    return _ratio_check(num, den, "zero denominator")


def check_eq25_freitag_paper_form(
    n: int, a: int, table: SequenceTable | None = None
) -> CheckOutcome:
    """Diagnostic: the printed denominator F_n - (-1)^a F_{n+a}^2, first term unsquared."""
    t = table if table is not None else SequenceTable(FIBONACCI)
    s = -1 if a % 2 else 1
    num = t.w(n) ** 2 - s * t.w(n + a) ** 2
    den = t.u(n) - s * t.u(n + a) ** 2
    return _ratio_check(num, den, "zero denominator")


def check_eq25_zeitlin(n: int, a: int, table: SequenceTable | None = None) -> CheckOutcome:
    """(L_n^2 + L_{n+2a}^2 - 8 (-1)^n) / (F_n^2 + F_{n+2a}^2) == 5."""
    t = table if table is not None else SequenceTable(FIBONACCI)
    num = t.w(n) ** 2 + t.w(n + 2 * a) ** 2 - 8 * t.q_power(n)
    den = t.u(n) ** 2 + t.u(n + 2 * a) ** 2
    return _ratio_check(num, den, "zero denominator")


def check_eq25_zeitlin_paper_sign(
    n: int, a: int, table: SequenceTable | None = None
) -> CheckOutcome:
    """Diagnostic: the printed +8 (-1)^n term; fails (e.g. 9/5 at n=1, a=1)."""
    t = table if table is not None else SequenceTable(FIBONACCI)
    num = t.w(n) ** 2 + t.w(n + 2 * a) ** 2 + 8 * t.q_power(n)
    den = t.u(n) ** 2 + t.u(n + 2 * a) ** 2
    return _ratio_check(num, den, "zero denominator")


def pythagorean_like(p, n: int, table: SequenceTable | None = None):
    """For q = 1: the triple (w_n, 2 u_n, p u_n) with x^2 + y^2 - z^2 = 4, p y = 2 z."""
    if n < 1:
        raise ValueError("n must be at least 1")
    t = table if table is not None else SequenceTable(RecurrenceParams(as_fraction(p), Fraction(1)))
    return t.w(n), 2 * t.u(n), t.params.p * t.u(n)


# -- sweep runners -----------------------------------------------------------


def _sweep_n(
    identity_id: str,
    params: RecurrenceParams | None,
    n_indices: Iterable[int],
    n_range: tuple[int, int],
    evaluate: Callable[[int], CheckOutcome],
    note: str = "",
) -> IdentityReport:
    checked = skipped = 0
    ce = None
    for n in n_indices:
        out = evaluate(n)
        if out.status == SKIPPED:
            skipped += 1
            continue
        checked += 1
        if out.status == FAIL and ce is None:
            ce = Counterexample((("n", n),), out.lhs, out.rhs)
    if ce is not None:
        status = FAIL
    elif checked == 0:
        status = SKIPPED
        note = note or "no checkable indices in range"
    else:
        status = PASS
    return IdentityReport(identity_id, params, n_range, None, status, ce, note, checked, skipped)


def _sweep_n_a(
    identity_id: str,
    params: RecurrenceParams | None,
    n_max: int,
    a_max: int,
    evaluate: Callable[[int, int], CheckOutcome],
    note: str = "",
) -> IdentityReport:
    checked = skipped = 0
    ce = None
    for n in range(n_max + 1):
        for a in range(a_max + 1):
            out = evaluate(n, a)
            if out.status == SKIPPED:
                skipped += 1
                continue
            checked += 1
            if out.status == FAIL and ce is None:
                ce = Counterexample((("n", n), ("a", a)), out.lhs, out.rhs)
    if ce is not None:
        status = FAIL
    elif checked == 0:
        status = SKIPPED
        note = note or "every index pair had a zero denominator"
    else:
        status = PASS
    return IdentityReport(
        identity_id, params, (0, n_max), (0, a_max), status, ce, note, checked, skipped
    )


def _eq_outcome(lhs, rhs) -> CheckOutcome:
    if lhs == rhs:
        return CheckOutcome(PASS, lhs, rhs)
    return CheckOutcome(FAIL, lhs, rhs)


def _run_prop34(grid: GridSpec, params: RecurrenceParams) -> IdentityReport:
    t = SequenceTable(params)
    d = params.discriminant

    def cell(n: int) -> CheckOutcome:
        return _eq_outcome(t.w(n) ** 2 - 4 * t.q_power(n), t.u(n) ** 2 * d)

    return _sweep_n("prop34", params, range(grid.n_max + 1), (0, grid.n_max), cell)


def _run_eq35(grid: GridSpec, params: RecurrenceParams) -> IdentityReport:
    if params.is_degenerate:
        return IdentityReport(
            "eq35", params, (0, grid.n_max), None, SKIPPED, note="discriminant is zero"
        )
    t = SequenceTable(params)

    def cell(n: int) -> CheckOutcome:
        z = check_eq35_shape(params, n, t)
        expected = abs(t.u(n))
        if z is None:
            return CheckOutcome(FAIL, "no rational solution", expected)
        return _eq_outcome(z, expected)

    return _sweep_n("eq35", params, range(grid.n_max + 1), (0, grid.n_max), cell)


def _run_cor36(grid: GridSpec, params: RecurrenceParams) -> IdentityReport:
    t = SequenceTable(params)
    d = params.discriminant

    def cell(n: int) -> CheckOutcome:
        qn = t.q_power(n)
        w2n = t.w(2 * n)
        step = _eq_outcome(t.w(n) ** 2, w2n + 2 * qn)
        if step.status == FAIL:
            return step
        return _eq_outcome(w2n - 2 * qn, t.u(n) ** 2 * d)

    return _sweep_n("cor36", params, range(grid.n_max + 1), (0, grid.n_max), cell)


def _run_cor35(grid: GridSpec, params: RecurrenceParams) -> IdentityReport:
    if params.q != 1:
        return IdentityReport(
            "cor35", params, (1, grid.n_max), None, SKIPPED, note="requires q = 1"
        )
    t = SequenceTable(params)

    def cell(n: int) -> CheckOutcome:
        x, y, z = pythagorean_like(params.p, n, t)
        first = _eq_outcome(x * x + y * y - z * z, Fraction(4))
        if first.status == FAIL:
            return first
        return _eq_outcome(params.p * y, 2 * z)

    return _sweep_n("cor35", params, range(1, grid.n_max + 1), (1, grid.n_max), cell)


def _run_eq24(grid: GridSpec, _: RecurrenceParams | None) -> IdentityReport:
    t = SequenceTable(FIBONACCI)

    def cell(n: int) -> CheckOutcome:
        return _eq_outcome(t.w(n) ** 2 - 4 * t.q_power(n), 5 * t.u(n) ** 2)

    return _sweep_n(
        "eq24", FIBONACCI, range(grid.n_max + 1), (0, grid.n_max), cell, "fixed p=1, q=-1"
    )


def _run_eq22(grid: GridSpec, _: RecurrenceParams | None) -> IdentityReport:
    t = SequenceTable(FIBONACCI)

    def cell(n: int) -> CheckOutcome:
        try:
            a_n = check_eq22(n, t)
        except ArithmeticError:
            return CheckOutcome(FAIL, "not five times a square", t.u(n))
        return _eq_outcome(Fraction(a_n), t.u(n))

    return _sweep_n(
        "eq22", FIBONACCI, range(grid.n_max + 1), (0, grid.n_max), cell, "fixed p=1, q=-1"
    )


def _run_eq21(grid: GridSpec, _: RecurrenceParams | None) -> IdentityReport:
    note = "fixed p=1, q=-1; printed sign (-1)^n is wrong, verified sign (-1)^(n-1)"

    def cell(n: int) -> CheckOutcome:
        try:
            _, _, sign = fibonacci_factorization(n)
        except FactorizationSignError:
            return CheckOutcome(FAIL, "no exact sign", (-1) ** (n - 1))
        return _eq_outcome(sign, (-1) ** (n - 1))

    return _sweep_n("eq21", FIBONACCI, range(2, grid.n_max + 1), (2, grid.n_max), cell, note)


def _run_eq21_paper_sign(grid: GridSpec, _: RecurrenceParams | None) -> IdentityReport:
    note = "diagnostic: printed sign (-1)^n instead of (-1)^(n-1)"

    def cell(n: int) -> CheckOutcome:
        phi = phi_product(FIBONACCI, n)
        quad = quadratic_factor(FIBONACCI, n)
        tail = phi_product(FIBONACCI, n - 2).compose_negate()
        printed = (-1) ** n
        if quad * tail * printed == phi:
            return CheckOutcome(PASS, printed, printed)
        return CheckOutcome(FAIL, f"sign {printed} inexact", f"sign {-printed} exact")

    return _sweep_n(
        "eq21_paper_sign", FIBONACCI, range(2, grid.n_max + 1), (2, grid.n_max), cell, note
    )


def _fib_pair_runner(identity_id: str, check, note: str):
    def run(grid: GridSpec, _: RecurrenceParams | None) -> IdentityReport:
        t = SequenceTable(FIBONACCI)
        return _sweep_n_a(
            identity_id,
            FIBONACCI,
            grid.n_max,
            grid.a_max,
            lambda n, a: check(n, a, t),
            note,
        )

    return run


@dataclass(frozen=True)
class IdentityDescriptor:
    identity_id: str
    summary: str
    diagnostic: bool
    fixed_params: bool
    runner: Callable[[GridSpec, RecurrenceParams | None], IdentityReport]


_DESCRIPTORS = [
    IdentityDescriptor(
        "prop34", "w_n^2 - 4q^n = u_n^2 (p^2 - 4q)", False, False, _run_prop34
    ),
    IdentityDescriptor(
        "eq35", "z^2 (p^2-4q) = w_n^2 - 4q^n solved by z = |u_n|", False, False, _run_eq35
    ),
    IdentityDescriptor(
        "cor36", "w_2n - 2q^n = u_n^2 (p^2 - 4q)", False, False, _run_cor36
    ),
    IdentityDescriptor(
        "cor35", "q=1 triple (w_n, 2u_n, p u_n): x^2+y^2-z^2 = 4, py = 2z", False, False, _run_cor35
    ),
    IdentityDescriptor(
        "eq24", "L_n^2 - 4(-1)^n = 5 F_n^2", False, True, _run_eq24
    ),
    IdentityDescriptor(
        "eq22", "L_n^2 - 4(-1)^n = 5 A_n^2 with A_n = F_n", False, True, _run_eq22
    ),
    IdentityDescriptor(
        "eq21", "Phi_n(1,-1,x) factorization with computed sign", False, True, _run_eq21
    ),
    IdentityDescriptor(
        "eq21_paper_sign", "diagnostic: factorization with printed sign", True, True,
        _run_eq21_paper_sign,
    ),
    IdentityDescriptor(
        "eq25_freitag", "(L_n^2 - (-1)^a L_{n+a}^2)/(F_n^2 - (-1)^a F_{n+a}^2) = 5", False, True,
        _fib_pair_runner("eq25_freitag", check_eq25_freitag, "fixed p=1, q=-1"),
    ),
    IdentityDescriptor(
        "eq25_freitag_paper_form", "diagnostic: printed denominator with unsquared F_n", True, True,
        _fib_pair_runner(
            "eq25_freitag_paper_form",
            check_eq25_freitag_paper_form,
            "diagnostic: printed form F_n - (-1)^a F_{n+a}^2 in the denominator",
        ),
    ),
    IdentityDescriptor(
        "eq25_zeitlin", "(L_n^2 + L_{n+2a}^2 - 8(-1)^n)/(F_n^2 + F_{n+2a}^2) = 5", False, True,
        _fib_pair_runner("eq25_zeitlin", check_eq25_zeitlin, "fixed p=1, q=-1"),
    ),
    IdentityDescriptor(
        "eq25_zeitlin_paper_sign", "diagnostic: printed +8(-1)^n numerator term", True, True,
        _fib_pair_runner(
            "eq25_zeitlin_paper_sign",
            check_eq25_zeitlin_paper_sign,
            "diagnostic: printed sign +8(-1)^n in the numerator",
        ),
    ),
]

REGISTRY: dict[str, IdentityDescriptor] = {d.identity_id: d for d in _DESCRIPTORS}

DEFAULT_IDENTITY_IDS = tuple(d.identity_id for d in _DESCRIPTORS if not d.diagnostic)


def run_grid(grid: GridSpec, identity_ids: Iterable[str]) -> list[IdentityReport]:
    """One report per (identity, parameter cell), deterministically ordered.

    Fixed-parameter identities contribute a single report each; the others
    contribute one per (p, q) in the grid. Unknown ids raise ValueError.
    """
    ids = sorted(set(identity_ids))
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        known = ", ".join(sorted(REGISTRY))
        raise ValueError(f"unknown identity ids {unknown}; known ids: {known}")
    reports: list[IdentityReport] = []
    for identity_id in ids:
        desc = REGISTRY[identity_id]
        if desc.fixed_params:
            reports.append(desc.runner(grid, None))
            continue
        for p in grid.p_values():
            for q in grid.q_values():
                reports.append(desc.runner(grid, RecurrenceParams(p, q)))
    return reports

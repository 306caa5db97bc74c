"""Bundled verification corpus: family and swept presentations with known
invariants, the curve-at-infinity bound table, and the two-route degree
comparison across everything.

The corpus doubles as the data source for the acceptance test suite and
for the ``selftest`` CLI command.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable

from .alexinv import (
    DELTA0_INFINITE,
    Delta0,
    compute_invariants,
    delta0_via_pid,
)
from .arrangements import (
    classify_arrangement,
    combinatorial_bounds,
    curve_at_infinity_bound,
    family_arrangement,
    family_presentation,
    intersect_arrangement,
    vanishing_and_infinite_verdicts,
    wiring_presentation,
)
from .groups import Presentation, parse_presentation
from .ringkit import LaurentPolynomial, unit_normalize


def product_minus_one_power(m: int, power: int) -> LaurentPolynomial:
    """(t_1 ... t_m - 1)^power in m variables."""
    prod = LaurentPolynomial.monomial(1, (1,) * m)
    return (prod - LaurentPolynomial.one(m)) ** power


def single_var_minus_one_power(m: int, var: int, power: int) -> LaurentPolynomial:
    return (
        LaurentPolynomial.variable(var, m) - LaurentPolynomial.one(m)
    ) ** power


def equal_up_to_units(a: LaurentPolynomial, b: LaurentPolynomial) -> bool:
    return unit_normalize(a) == unit_normalize(b)


def equal_up_to_units_and_relabeling(a: LaurentPolynomial, b: LaurentPolynomial) -> bool:
    """Equality up to units and a permutation of the variables."""
    if a.num_vars != b.num_vars:
        return False
    na = unit_normalize(a)
    for perm in permutations(range(b.num_vars)):
        if unit_normalize(b.permute_variables(perm)) == na:
            return True
    return False


HOPF_DSL = "gens: a b\nrel: a b a^-1 b^-1\n"
TREFOIL_DSL = "gens: a b\nrel: a b a b^-1 a^-1 b^-1\n"


def nodal_transversal_arrangement() -> list:
    """Pencil of three lines through the origin plus y = 2x + 1, which meets
    each of them in a separate double point."""
    from .arrangements import Line

    return [
        Line.of(0, 1, 0),
        Line.of(1, -1, 0),
        Line.of(1, 1, 0),
        Line.of(2, -1, -1),
    ]


def two_parallel_pairs_arrangement() -> list:
    from .arrangements import Line

    return [Line.of(0, 1, 0), Line.of(0, 1, 1), Line.of(1, 0, 0), Line.of(1, 0, 1)]


@dataclass(frozen=True)
class CorpusCase:
    """One presentation with everything known about it."""

    name: str
    build: Callable[[], Presentation]
    delta0: Delta0
    # expected polynomial up to units (and relabeling for swept cases)
    delta_poly: Callable[[], LaurentPolynomial] | None = None
    relabeling_ok: bool = False
    delta_constant: bool = False


def _family_case(family: str, m: int, delta0: Delta0, **kw) -> CorpusCase:
    return CorpusCase(
        name=f"family-{family}-{m}",
        build=lambda: family_presentation(family, m),
        delta0=delta0,
        **kw,
    )


def _wiring_case(family: str, m: int, delta0: Delta0, **kw) -> CorpusCase:
    return CorpusCase(
        name=f"wiring-{family}-{m}",
        build=lambda: wiring_presentation(family_arrangement(family, m))[0],
        delta0=delta0,
        relabeling_ok=True,
        **kw,
    )


def corpus_cases() -> list:
    cases = []
    # parallel lines: free groups
    cases.append(_family_case("parallel", 1, Delta0.of(0)))
    for m in (2, 3):
        cases.append(_family_case("parallel", m, DELTA0_INFINITE))
        cases.append(_wiring_case("parallel", m, DELTA0_INFINITE))
    # pencils
    for m in (3, 4, 5, 6):
        cases.append(
            _family_case(
                "pencil", m, Delta0.of(m * (m - 2)),
                delta_poly=lambda m=m: product_minus_one_power(m, m - 2),
            )
        )
    for m in (3, 4, 5):
        cases.append(
            _wiring_case(
                "pencil", m, Delta0.of(m * (m - 2)),
                delta_poly=lambda m=m: product_minus_one_power(m, m - 2),
            )
        )
    # near-pencils (the transversal is the last family generator)
    for m in (3, 4, 5, 6):
        cases.append(
            _family_case(
                "near-pencil", m, Delta0.of(m - 2),
                delta_poly=lambda m=m: single_var_minus_one_power(m, m - 1, m - 2),
            )
        )
        cases.append(
            _wiring_case(
                "near-pencil", m, Delta0.of(m - 2),
                delta_poly=lambda m=m: single_var_minus_one_power(m, m - 1, m - 2),
            )
        )
    # generic position: abelian groups, constant polynomial
    for m in (2, 3, 4, 5):
        cases.append(_family_case("generic", m, Delta0.of(0), delta_constant=True))
    for m in (3, 4):
        cases.append(_wiring_case("generic", m, Delta0.of(0), delta_constant=True))
    # arrangements outside the closed-form families
    cases.append(
        CorpusCase(
            "wiring-nodal-transversal-4",
            lambda: wiring_presentation(nodal_transversal_arrangement())[0],
            Delta0.of(0),
            relabeling_ok=True,
            delta_constant=True,
        )
    )
    cases.append(
        CorpusCase(
            "wiring-two-parallel-pairs-4",
            lambda: wiring_presentation(two_parallel_pairs_arrangement())[0],
            Delta0.of(0),
            relabeling_ok=True,
            delta_constant=True,
        )
    )
    # user-style presentations
    cases.append(
        CorpusCase(
            "dsl-hopf",
            lambda: parse_presentation(HOPF_DSL),
            Delta0.of(0),
            delta_constant=True,
        )
    )
    cases.append(
        CorpusCase(
            "dsl-trefoil",
            lambda: parse_presentation(TREFOIL_DSL),
            Delta0.of(2),
            delta_poly=lambda: (
                LaurentPolynomial.variable(0, 1) ** 2
                - LaurentPolynomial.variable(0, 1)
                + LaurentPolynomial.one(1)
            ),
        )
    )
    return cases


PERMUTATION_CASE_NAMES = (
    "family-pencil-3",
    "family-near-pencil-4",
    "family-generic-3",
    "dsl-hopf",
)


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


def check_case(case: CorpusCase) -> CheckResult:
    t0 = time.time()
    try:
        pres = case.build()
        report = compute_invariants(pres, routes="both")
    except Exception as exc:  # a corpus case must never raise
        return CheckResult(case.name, False, f"exception: {exc}", time.time() - t0)
    problems = []
    if not report.route_agreement:
        problems.append(
            f"route disagreement: degree={report.delta0_degree_route} "
            f"pid={report.delta0_pid_route}"
        )
    if report.delta0 != case.delta0:
        problems.append(f"delta0={report.delta0}, expected {case.delta0}")
    if case.delta_poly is not None:
        expected = case.delta_poly()
        if case.relabeling_ok:
            ok = equal_up_to_units_and_relabeling(report.alexander_poly, expected)
        else:
            ok = equal_up_to_units(report.alexander_poly, expected)
        if not ok:
            problems.append(
                f"polynomial {report.alexander_poly} != expected {expected} (up to units)"
            )
    if case.delta_constant and not (
        report.alexander_poly.is_constant() and not report.alexander_poly.is_zero()
    ):
        problems.append(f"polynomial {report.alexander_poly} is not a nonzero constant")
    return CheckResult(case.name, not problems, "; ".join(problems), time.time() - t0)


def check_permutation_invariance(case: CorpusCase) -> CheckResult:
    """The localized route must not depend on which variable splits off."""
    t0 = time.time()
    pres = case.build()
    from .foxcalc import alexander_matrix

    A = alexander_matrix(pres)
    values = set()
    for k in range(A.num_vars):
        values.add(str(delta0_via_pid(A, distinguished=k)))
    ok = len(values) == 1
    return CheckResult(
        f"{case.name}-distinguished-variable",
        ok,
        "" if ok else f"values differ across distinguished variables: {sorted(values)}",
        time.time() - t0,
    )


def check_bound_pipeline(name: str, lines: list) -> CheckResult:
    """Swept arrangements: classification, bounds, closed forms, and the
    computed degree must all be mutually consistent."""
    t0 = time.time()
    data = intersect_arrangement(lines)
    label = classify_arrangement(data)
    pres, _ = wiring_presentation(lines)
    report = compute_invariants(pres)
    problems = []
    m = data.m
    verdict = vanishing_and_infinite_verdicts(label, data)
    if label.essential:
        bounds = combinatorial_bounds(data, label)
        if bounds.best > bounds.global_bound:
            problems.append("best bound exceeds global bound")
        if report.delta0.finite and report.delta0.value > bounds.best:
            problems.append(
                f"computed delta0 {report.delta0} exceeds best bound {bounds.best}"
            )
        if not report.delta0.finite:
            problems.append("essential arrangement computed an infinite degree")
        if m >= 3 and bounds.best == m * (m - 2) and label.label != "Pencil":
            problems.append("best bound attains the cap but label is not Pencil")
    if verdict is not None:
        expected = DELTA0_INFINITE if verdict.value is None else Delta0.of(verdict.value)
        if report.delta0 != expected:
            problems.append(
                f"closed form {verdict.value} != computed {report.delta0}"
            )
    return CheckResult(name, not problems, "; ".join(problems), time.time() - t0)


def check_curve_bound_table() -> CheckResult:
    """Bound table over small degrees: the intermediate value, the cap, and
    the equality at r = m - 1."""
    t0 = time.time()
    problems = []
    for m in range(2, 7):
        for r in range(1, m + 1):
            tangents = m - r
            if tangents < 0 or r - tangents < 0:
                continue
            flags = [True] * tangents + [False] * (r - tangents)
            rep = curve_at_infinity_bound(m, r, flags)
            transversal = r - tangents
            expect_hold = m == 2 or transversal >= 1
            if rep.hypotheses_hold != expect_hold:
                problems.append(f"(m={m},r={r}): hypothesis flag wrong")
                continue
            if not rep.hypotheses_hold:
                if rep.bound is not None:
                    problems.append(f"(m={m},r={r}): bound asserted without hypotheses")
                continue
            if r <= m - 1:
                want = m * m - 3 * m + r + 1
                if rep.intermediate != want:
                    problems.append(f"(m={m},r={r}): intermediate {rep.intermediate} != {want}")
                if want > m * (m - 2):
                    problems.append(f"(m={m},r={r}): intermediate exceeds cap")
                if r == m - 1 and want != m * (m - 2):
                    problems.append(f"(m={m},r={r}): no equality at r = m-1")
            else:
                if rep.bound != m * (m - 2):
                    problems.append(f"(m={m},r={r}): general position bound wrong")
    return CheckResult("curve-bound-table", not problems, "; ".join(problems),
                       time.time() - t0)


PIPELINE_FAMILIES = (
    ("pencil", 3), ("pencil", 4), ("pencil", 5),
    ("near-pencil", 3), ("near-pencil", 4), ("near-pencil", 5), ("near-pencil", 6),
    ("generic", 3), ("generic", 4),
    ("parallel", 2), ("parallel", 3),
)


def pipeline_arrangements() -> list:
    out = [
        (f"pipeline-{family}-{m}", family_arrangement(family, m))
        for family, m in PIPELINE_FAMILIES
    ]
    out.append(("pipeline-nodal-transversal-4", nodal_transversal_arrangement()))
    out.append(("pipeline-two-parallel-pairs-4", two_parallel_pairs_arrangement()))
    return out


def run_selftest(name_filter: str | None = None, cases: Iterable[CorpusCase] | None = None,
                 emit: Callable[[str], None] = print) -> tuple:
    """Run the whole corpus.  Returns (passed, failed)."""
    if cases is None:
        cases = corpus_cases()
    results = []
    for case in cases:
        if name_filter and name_filter not in case.name:
            continue
        results.append(check_case(case))
        if case.name in PERMUTATION_CASE_NAMES:
            results.append(check_permutation_invariance(case))
    for name, lines in pipeline_arrangements():
        if name_filter and name_filter not in name:
            continue
        results.append(check_bound_pipeline(name, lines))
    if not name_filter or name_filter in "curve-bound-table":
        results.append(check_curve_bound_table())
    passed = failed = 0
    for res in results:
        status = "ok" if res.passed else "FAIL"
        detail = f"  [{res.detail}]" if res.detail else ""
        emit(f"{status:4s} {res.name} ({res.seconds:.2f}s){detail}")
        if res.passed:
            passed += 1
        else:
            failed += 1
    emit(f"selftest: {passed} passed, {failed} failed")
    return passed, failed

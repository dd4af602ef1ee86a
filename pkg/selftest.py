# Author: Victor
# Page name: selftest.py
# Page purpose: The quick and full self-test suites behind `selftest`
# Date of creation: 2026-10-16
# quick runs every invariant suite at 100 digits; full adds the large-precision runs.
import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

import mpmath
from mpmath import mpc, mpf

from catalog import IdentityKind, IdentityRecord, catalog
from errors import HeegnerError
from fastseries import SeriesTermSpec, binary_split, compute_pi, cross_check_pi, direct_sum, split_node_value
from hypergeom import (
    INF_PARAMS,
    ODE_SAMPLE_POINTS,
    ONE_PARAMS,
    ZERO_PARAMS,
    Hyp32Params,
    HypRegime,
    evaluate_2f1,
    gauss_2f1,
    gen_3f2,
    hyp_ode_residual,
    sextuple_identity,
)
from identities import (
    coefficient_consistency,
    infty_forms_residual,
    series_square_check,
    verify_all,
    verify_series_identity,
)
from kernel import (
    PrecisionContext,
    ap_rational,
    digamma_ap,
    gamma_ap,
    make_context,
    principal_root,
    relative_difference,
)
from modular import HeegnerPoint, RegionId, Verdict, domain_member, e2_at_rho, eisenstein, ramanujan_ode_qcheck
from periods import (
    SAMPLE_POINTS,
    cm_relation,
    differential_relation_check,
    omega_tilde_oracle,
    period_tilde,
    phase_against_oracle,
    picard_fuchs_residual,
    sample_taus,
)

logger = logging.getLogger(__name__)

QUICK_DIGITS = 100
LEVELS = ("quick", "full")


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0


def _failed_ids(reports) -> List[str]:
    return [report.id for report in reports if not report.passed]


def _records(records: Optional[Sequence[IdentityRecord]], *kinds: IdentityKind) -> List[IdentityRecord]:
    source = catalog() if records is None else records
    return [rec for rec in source if rec.kind in kinds]


def exact_suite(instances: int = 50, seed: int = 1) -> Tuple[bool, str]:
    """Ramanujan's equations on q-expansions, the Pochhammer identity and binary splitting vs brute force."""
    problems = []
    if not ramanujan_ode_qcheck(200):
        problems.append("Ramanujan q-expansion check")
    for n in range(51):
        lhs, rhs = sextuple_identity(n)
        if lhs != rhs:
            problems.append(f"sextuple identity n={n}")
    rng = random.Random(seed)
    for _ in range(instances):
        spec = SeriesTermSpec(offset=Fraction(rng.randint(-50, 50), rng.randint(1, 50)),
                              base=Fraction(rng.randint(1729, 10 ** 6), rng.randint(1, 3)),
                              sign=rng.choice((1, -1)))
        start = rng.randint(0, 5)
        stop = start + rng.randint(1, 40)
        if split_node_value(binary_split(spec, start, stop), spec) != direct_sum(spec, start, stop):
            problems.append(f"binary split [{start}, {stop}) base {spec.base}")
    return not problems, "; ".join(problems) or "exact"


def kernel_suite(ctx: PrecisionContext, count: int = 100, seed: int = 2) -> Tuple[bool, str]:
    """Gamma and digamma recurrences at random rationals; principal roots raised back to their power."""
    problems = []
    rng = random.Random(seed)
    for _ in range(count):
        x = Fraction(rng.randint(1, 400), rng.randint(1, 60))
        gamma_x, gamma_next = gamma_ap(x, ctx), gamma_ap(x + 1, ctx)
        psi_x, psi_next = digamma_ap(x, ctx), digamma_ap(x + 1, ctx)
        with ctx.workprec():
            inverse = 1 / ap_rational(x)
            if relative_difference(gamma_x / inverse, gamma_next) > ctx.verification_threshold:
                problems.append(f"Gamma recurrence at {x}")
            if abs(psi_next - psi_x - inverse) > ctx.verification_threshold * max(1, abs(psi_next)):
                problems.append(f"digamma recurrence at {x}")
    with ctx.workprec():
        for _ in range(count):
            z = mpc(rng.uniform(-10, 10), rng.choice((0, rng.uniform(-10, 10))))
            n = rng.randint(2, 12)
            if z != 0 and relative_difference(principal_root(z, n, ctx) ** n, z) > ctx.verification_threshold:
                problems.append(f"principal root of {mpmath.nstr(z, 8)} with n={n}")
    return not problems, "; ".join(problems) or f"{count} rationals, {count} roots"


def hypergeometric_suite(ctx: PrecisionContext) -> Tuple[bool, str]:
    """ODE residuals, Clausen's square, regime agreement at 1/2 and the connection cost near z = 1."""
    problems = []
    for p, points in ODE_SAMPLE_POINTS.items():
        for text in points:
            with ctx.workprec():
                z = mpmath.mpmathify(text)
            if hyp_ode_residual(p, z, ctx) > ctx.verification_threshold:
                problems.append(f"ODE residual {p} at {text}")
    clausen = Hyp32Params(Fraction(1, 6), Fraction(5, 6), Fraction(1, 2), 1, 1)
    for x in (Fraction(1, 10), Fraction(1, 3), Fraction(1, 2)):
        square = gauss_2f1(INF_PARAMS, x, ctx)
        product = gen_3f2(clausen, x, ctx)
        with ctx.workprec():
            if relative_difference(square ** 2, product) > ctx.verification_threshold:
                problems.append(f"Clausen at x={x}")
    for p in (ONE_PARAMS, ZERO_PARAMS):
        direct = evaluate_2f1(p, Fraction(1, 2), ctx, regime=HypRegime.DIRECT).value
        connection = evaluate_2f1(p, Fraction(1, 2), ctx, regime=HypRegime.CONNECTION).value
        with ctx.workprec():
            if relative_difference(connection, direct) > ctx.verification_threshold:
                problems.append(f"regimes disagree for {p} at 1/2")
    with ctx.workprec():
        near_one = 1 - mpf("6.6e-15")
    terms = evaluate_2f1(ZERO_PARAMS, near_one, ctx).terms
    if terms > 25:
        problems.append(f"{terms} connection terms at 1 - 6.6e-15")
    return not problems, "; ".join(problems) or "ODE, Clausen, regimes"


def special_values_suite(ctx: PrecisionContext) -> Tuple[bool, str]:
    """E6(i) = 0, E4(rho) = 0 and E2(rho) = 2 sqrt(3)/pi."""
    i_point = HeegnerPoint.sqrt_minus(1).tau(ctx)
    rho = HeegnerPoint.half_integer(3).tau(ctx)
    e6_i, e4_rho, e2_rho = eisenstein(6, i_point, ctx), eisenstein(4, rho, ctx), eisenstein(2, rho, ctx)
    problems = []
    with ctx.workprec():
        if abs(e6_i) > ctx.verification_threshold:
            problems.append(f"|E6(i)| = {mpmath.nstr(abs(e6_i), 5)}")
        if abs(e4_rho) > ctx.verification_threshold:
            problems.append(f"|E4(rho)| = {mpmath.nstr(abs(e4_rho), 5)}")
        if relative_difference(e2_rho, e2_at_rho(ctx)) > ctx.verification_threshold:
            problems.append("E2(rho) != 2 sqrt(3)/pi")
    return not problems, "; ".join(problems) or "E6(i), E4(rho), E2(rho)"


def coefficient_suite(records=None) -> Tuple[bool, str]:
    problems = []
    for rec in _records(records, IdentityKind.SERIES_INFTY, IdentityKind.HYP_ONE, IdentityKind.HYP_ZERO):
        check = coefficient_consistency(rec)
        if not check['valid'] and not rec.has_typo:
            problems.append(f"{rec.id}: {'; '.join(check['errors'])}")
        if rec.kind is IdentityKind.SERIES_INFTY and not series_square_check(rec):
            problems.append(f"{rec.id}: (lhs pi)^2 != a^2 j/(d (j - 1728))")
    return not problems, "; ".join(problems) or "all printed coefficients consistent"


def report_suite(ctx: PrecisionContext, kinds: Iterable[IdentityKind], records=None,
                 threads: Optional[int] = None) -> Tuple[bool, str]:
    chosen = _records(records, *kinds)
    reports = verify_all(ctx, threads=threads, records=chosen)
    failed = _failed_ids(reports)
    if failed:
        return False, "failed: " + ", ".join(failed)
    return True, f"{len(reports)} records at {ctx.digits} digits"


def printed_typo_suite(ctx: PrecisionContext, records=None) -> Tuple[bool, str]:
    """The printed sqrt(-7) base must fail where the corrected one passes."""
    for rec in _records(records, IdentityKind.SERIES_INFTY):
        if rec.series.printed_base is None:
            continue
        if verify_series_identity(rec, ctx, printed=True).passed:
            return False, f"{rec.id}: printed base {rec.series.printed_base} unexpectedly passes"
    return True, "printed typos fail, corrected forms are checked by the series suite"


def derivative_series_suite(ctx: PrecisionContext, records=None) -> Tuple[bool, str]:
    problems = []
    for rec in _records(records, IdentityKind.SERIES_INFTY):
        if infty_forms_residual(rec, ctx) > ctx.verification_threshold:
            problems.append(rec.id)
    return not problems, ("derivative and series forms differ: " + ", ".join(problems)) if problems else "agree"


def period_suite(ctx: PrecisionContext) -> Tuple[bool, str]:
    """omega~ = 2 pi eta^2 in every region containing a table point; the CM relation at every s2 point."""
    problems = []
    points = [rec.heegner for rec in catalog() if rec.kind is IdentityKind.TABLE_VALUE and rec.quantity == "J"]
    for h in points:
        tau = h.tau(ctx)
        values = {}
        for region in RegionId:
            if domain_member(tau, region, ctx) is not Verdict.IN:
                continue
            values[region] = period_tilde(region, tau, ctx)
            with ctx.workprec():
                if abs(values[region] / omega_tilde_oracle(tau, ctx) - 1) > ctx.verification_threshold:
                    problems.append(f"phase {region.value} at {h.label}")
        if RegionId.C_INF in values and RegionId.C_ONE in values:
            with ctx.workprec():
                if relative_difference(values[RegionId.C_ONE], values[RegionId.C_INF]) > ctx.verification_threshold:
                    problems.append(f"C_inf and C_one differ at {h.label}")
        if h != HeegnerPoint.sqrt_minus(1) and cm_relation(h, ctx) > ctx.verification_threshold:
            problems.append(f"CM relation at {h.label}")
    return not problems, "; ".join(problems) or f"{len(points)} points"


def period_equations_suite(ctx: PrecisionContext, picard_fuchs: bool = False) -> Tuple[bool, str]:
    """Phase, differential relation and (optionally) Picard-Fuchs at the sample points of every region."""
    problems = []
    limit = mpf(10) ** -30
    for region in RegionId:
        for tau in sample_taus(region, ctx):
            with ctx.workprec():
                if abs(phase_against_oracle(region, tau, ctx) - 1) > ctx.verification_threshold:
                    problems.append(f"phase {region.value} at {tau}")
                if differential_relation_check(region, tau, ctx) > limit:
                    problems.append(f"differential relation {region.value} at {tau}")
                if picard_fuchs and picard_fuchs_residual(region, tau, ctx) > limit:
                    problems.append(f"Picard-Fuchs {region.value} at {tau}")
    checked = "phase, differential relation" + (", Picard-Fuchs" if picard_fuchs else "")
    return not problems, "; ".join(problems) or f"{checked} at {sum(map(len, SAMPLE_POINTS.values()))} points"


def pi_suite(digits: int, cross_digits: int) -> Tuple[bool, str]:
    main = compute_pi(digits)
    cross = cross_check_pi(cross_digits)
    common = min(len(main), len(cross))
    if main[:common] != cross[:common]:
        return False, f"series disagree within the first {common} characters"
    return True, f"pi agrees on {common - 1} digits"


def run_suite(name: str, check: Callable[[], Tuple[bool, str]]) -> SuiteResult:
    started = time.perf_counter()
    try:
        passed, detail = check()
    except HeegnerError as exc:
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    except Exception as exc:
        logger.exception("selftest %s raised", name)
        passed, detail = False, f"unexpected {type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - started
    logger.info("selftest %s: %s in %.1fs (%s)", name, "pass" if passed else "FAIL", elapsed, detail)
    return SuiteResult(name, passed, detail, elapsed)


def run_selftest(level: str = "quick", records: Optional[Sequence[IdentityRecord]] = None,
                 threads: Optional[int] = None) -> List[SuiteResult]:
    """Run the suites of a level; records replaces the catalog in the record-driven suites."""
    if level not in LEVELS:
        raise ValueError(f"Unknown selftest level: {level}")
    ctx = make_context(QUICK_DIGITS)
    all_kinds = tuple(IdentityKind)
    suites = [
        ("exact", lambda: exact_suite(50)),
        ("kernel", lambda: kernel_suite(ctx)),
        ("hypergeometric", lambda: hypergeometric_suite(ctx)),
        ("special-values", lambda: special_values_suite(ctx)),
        ("coefficients", lambda: coefficient_suite(records)),
        ("catalog", lambda: report_suite(ctx, all_kinds, records, threads)),
        ("printed-typos", lambda: printed_typo_suite(ctx, records)),
        ("derivative-vs-series", lambda: derivative_series_suite(ctx, records)),
        ("periods", lambda: period_suite(ctx)),
        ("period-equations", lambda: period_equations_suite(ctx, picard_fuchs=level == "full")),
        ("pi", lambda: pi_suite(1000, 1000)),
    ]
    if level == "full":
        series_ctx = make_context(1000)
        hyp_ctx = make_context(300)
        suites += [
            ("series-1000", lambda: report_suite(series_ctx, (IdentityKind.SERIES_INFTY,), records, threads)),
            ("hypergeometric-300", lambda: report_suite(hyp_ctx, (IdentityKind.HYP_ONE, IdentityKind.HYP_ZERO),
                                                       records, threads)),
            ("chowla-selberg-300", lambda: report_suite(hyp_ctx, (IdentityKind.CHOWLA_SELBERG,), records, threads)),
            ("eta-1000", lambda: report_suite(series_ctx, (IdentityKind.ETA_SPECIAL,), records, threads)),
            ("pi-100000", lambda: pi_suite(100000, 10000)),
        ]
    return [run_suite(name, check) for name, check in suites]

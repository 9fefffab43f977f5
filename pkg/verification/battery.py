# -*- coding: utf-8 -*-
"""
Verification battery
Groups the module checks into suites and runs them, optionally in worker
processes; the merged report is sorted by check name.
"""

import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence

from core.cn_algebra import (FACTORED_FORMS, basis_norm_check, factorization_check,
                             norm_multiplicativity_check, printed_forms_report, printed_matrix_report,
                             regular_rep_det_check, unit_group_check)
from core.cyclic_repr import (char_table, column_orthogonality_check, dft_conjugation,
                              orthogonality_check, vector_rep_checks, xhat_check)
from calculus.dirac import dirac_report_checks
from calculus.holomorphy import (ComponentFunction, cr_system_check, factorization_laplacian_check,
                                 holomorphic_power_checks, inverse_parity_check, product_rule_check)
from core.polyring import MultiPoly
from lattice.berger import (affine_cartan_checks, simply_laced_family_checks, table1_report,
                            worked_example_checks)
from numerics import eulermap, geometry
from utils.message_log import Level, log_message
from utils.report_generator import Check, Report
from utils.settings import get_setting

NORM_CASES = ((2, -1), (3, 1), (4, 1), (4, -1), (6, 1), (6, -1))
EULER_CASES = ((3, 1), (3, -1), (4, 1), (4, -1), (6, 1), (6, -1))


def algebra_suite(seed: int, samples: int) -> List[Check]:
    rng = random.Random(seed)
    checks = []
    for order, sign in NORM_CASES:
        checks.append(norm_multiplicativity_check(order, sign, samples, rng))
        checks.append(basis_norm_check(order, sign))
        checks.append(unit_group_check(order, sign, max(10, samples // 10), rng))
        checks.extend(printed_forms_report(order, sign))
    for order, sign in ((3, 1), (4, 1), (4, -1)):
        checks.append(regular_rep_det_check(order, sign))
    for order, sign in sorted(FACTORED_FORMS):
        checks.append(factorization_check(order, sign))
    checks.extend(printed_matrix_report())
    return checks


def representation_suite(seed: int, samples: int) -> List[Check]:
    checks = []
    for order in range(1, 13):
        table = char_table(order)
        checks.append(orthogonality_check(table))
        checks.append(column_orthogonality_check(table))
    checks.extend(vector_rep_checks())
    checks.append(xhat_check())
    checks.extend(dft_conjugation())
    return checks


def euler_suite(seed: int, samples: int) -> List[Check]:
    rng = random.Random(seed)
    count = max(1, samples // 2)
    checks = []
    for order, sign in EULER_CASES:
        checks.append(eulermap.unimodularity_check(order, sign, count, rng))
        checks.append(eulermap.homomorphism_check(order, sign, max(1, count // 5), rng))
        checks.extend(eulermap.invariance_checks(order, sign, rng))
    checks.append(eulermap.printed_invariance_pattern(6, 1))
    checks.append(eulermap.printed_invariance_pattern(6, -1))
    checks.extend(eulermap.closed_form_checks(rng))
    checks.extend(eulermap.roundtrip_checks(count, rng))
    return checks


def holomorphy_suite(seed: int, samples: int) -> List[Check]:
    checks = []
    for order, sign, powers in ((2, -1, 4), (3, 1, 6), (4, 1, 6), (4, -1, 3)):
        checks.extend(holomorphic_power_checks(order, sign, powers))
        checks.append(inverse_parity_check(order, sign))
        checks.append(factorization_laplacian_check(order, sign))
    checks.append(product_rule_check(3, 1))
    x = MultiPoly.variables(3)
    zero = MultiPoly.zero(3)
    broken = cr_system_check(ComponentFunction(3, 1, (x[0], zero, zero)), 1, 'x0')
    failing = [c for c in broken if not c.passed]
    checks.append(Check('holomorphy[3,+1].non_holomorphic_detected', bool(failing),
                        'f = x0 breaks the chains', f'{len(failing)} failing conditions',
                        provenance='Cauchy-Riemann parity'))
    return checks


def dirac_suite(seed: int, samples: int) -> List[Check]:
    rng = random.Random(seed)
    checks = []
    for order in (2, 3, 4):
        checks.extend(dirac_report_checks(order, rng))
    return checks


def geometry_suite(seed: int, samples: int) -> List[Check]:
    checks = []
    for rho in (1.0, 2.0):
        checks.extend(geometry.pythagoras_check(rho, 20))
    checks.extend(geometry.tetrahedron_checks())
    checks.extend(geometry.diophantine_table_check())
    return checks


def berger_suite(seed: int, samples: int) -> List[Check]:
    return (table1_report() + simply_laced_family_checks() + affine_cartan_checks()
            + worked_example_checks())


SUITES: Dict[str, Callable[[int, int], List[Check]]] = {
    'algebra': algebra_suite,
    'representations': representation_suite,
    'euler': euler_suite,
    'holomorphy': holomorphy_suite,
    'dirac': dirac_suite,
    'geometry': geometry_suite,
    'berger': berger_suite,
}


def _run_suite(name: str, seed: int, samples: int) -> List[Check]:
    started = time.perf_counter()
    checks = SUITES[name](seed, samples)
    log_message(f"suite {name}: {len(checks)} checks in {time.perf_counter() - started:.2f} s")
    return checks


def run_battery(names: Optional[Sequence[str]] = None, seed: Optional[int] = None,
                samples: Optional[int] = None, parallel: Optional[bool] = None) -> Report:
    """Run the named suites (all by default) and merge their checks"""
    names = list(names or SUITES)
    unknown = [n for n in names if n not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}; available: {sorted(SUITES)}")
    seed = int(get_setting('suite/seed', 42) if seed is None else seed)
    samples = int(get_setting('suite/samples', 200) if samples is None else samples)
    parallel = bool(get_setting('suite/parallel', False) if parallel is None else parallel)

    started = time.perf_counter()
    if parallel and len(names) > 1:
        with ProcessPoolExecutor(max_workers=len(names)) as pool:
            parts = list(pool.map(_run_suite, names, [seed] * len(names), [samples] * len(names)))
    else:
        parts = [_run_suite(name, seed, samples) for name in names]
    report = Report('suite', [c for part in parts for c in part]).sorted()
    report.wall_time_ms = int((time.perf_counter() - started) * 1000)
    for failure in report.failures():
        log_message(f"✗ {failure.name}: expected {failure.expected}, got {failure.actual}", Level.WARNING)
    if report.status != 'fail':
        log_message(f"✓ suite passed ({len(report.checks)} checks)", Level.SUCCESS)
    return report

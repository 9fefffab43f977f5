#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
CN Complex toolkit
Command-line front end: every subcommand runs module operations, collects
their checks into a Report and prints it as text or JSON.

Exit status: 0 when every graded check passes, 1 on a failed check,
2 on usage or domain errors.
"""

import argparse
import json
import random
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from utils.message_log import Level, configure_logging, log_message
from utils.report_generator import FAIL, Check, Report, ReportPdfWriter, describe
from utils.settings import get_setting, load_settings, set_setting

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


class CommandError(Exception):
    """Bad arguments detected after parsing"""


def _sign(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"eps must be +1 or -1, got {text!r}")
    if value not in (1, -1):
        raise argparse.ArgumentTypeError(f"eps must be +1 or -1, got {text!r}")
    return value


def _float_list(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(',') if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated numbers, got {text!r}")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


# -- subcommands ------------------------------------------------------------

def cmd_norm(args) -> Tuple[Report, List[str]]:
    from core.cn_algebra import CnNumber, expand_norm_form, is_nonsingular, norm, regular_rep_det
    from core.exactnum import to_complex

    report = Report('norm')
    lines = []
    if args.number:
        z = CnNumber.parse(args.number)
        value = norm(z)
        form = expand_norm_form(z.order, z.sign)
        from_form = form.evaluate(list(z.coeffs))
        lines.append(f"z = {z}  (case {z.case})")
        lines.append(f"norm(z) = {describe(value)}")
        lines.append(f"nonsingular: {is_nonsingular(z)}")
        if z.ring.exact:
            det = regular_rep_det(z)
            report.add(Check('norm.form_value', from_form == value, value, from_form,
                             abs(to_complex(from_form) - to_complex(value)), 'norm form at the coefficients'))
            report.add(Check('norm.regular_rep_det', det == value, value, det,
                             abs(to_complex(det) - to_complex(value)), 'determinant of the multiplication matrix'))
        else:
            residual = abs(complex(from_form) - float(value))
            report.add(Check('norm.form_value', residual <= 1e-9 * max(1.0, abs(float(value))),
                             value, from_form, residual, 'norm form at the coefficients'))
    else:
        form = expand_norm_form(args.n, args.eps)
        lines.append(f"norm form (N={args.n}, case {form.case}):")
        lines.append(f"  {form.render()}")
        report.add(Check(f'norm.homogeneous[{args.n},{args.eps:+d}]', form.form.is_homogeneous(args.n),
                         f'degree {args.n}', f'{len(form.form.terms)} terms', provenance='norm form'))
    return report, lines


def cmd_factor(args) -> Tuple[Report, List[str]]:
    from core.cn_algebra import FACTORED_FORMS, factorization_check, printed_forms_report

    report = Report('factor')
    key = (args.n, args.eps)
    if key in FACTORED_FORMS:
        report.add(factorization_check(*key))
    report.extend(printed_forms_report(*key))
    if not report.checks:
        raise CommandError(f"nothing to compare for N={args.n}, eps={args.eps:+d}; "
                           f"factored forms exist for {sorted(FACTORED_FORMS)}")
    return report, []


def cmd_euler(args) -> Tuple[Report, List[str]]:
    import numpy as np
    from numerics.eulermap import cn_exp, invariance_matrix

    phi = args.phi if args.phi is not None else [0.0] * (args.n - 1)
    m = cn_exp(args.n, args.eps, phi)
    residual = abs(m.norm_value() - 1.0)
    matrix = invariance_matrix(args.n, args.eps, phi)
    det = float(np.linalg.det(matrix))
    tol = float(get_setting('numerics/roundtrip_tol', 1e-9))
    lines = [f"m = {describe(list(m.values))}",
             f"norm form - 1 = {describe(m.norm_value() - 1.0)}",
             "invariance matrix:"]
    lines += ['  ' + ' '.join(f'{v: .15g}' for v in row) for row in matrix]
    lines.append(f"det = {describe(det)}")
    report = Report('euler', [
        Check(f'euler[{args.n},{args.eps:+d}].unimodular', residual <= tol, 1.0, m.norm_value(), residual,
              'norm of the exponential'),
        Check(f'euler[{args.n},{args.eps:+d}].invariance_det', abs(det - 1.0) <= tol, 1.0, det, abs(det - 1.0),
              'determinant of the invariance matrix'),
    ])
    return report, lines


def cmd_holocheck(args) -> Tuple[Report, List[str]]:
    from calculus.holomorphy import (apply_operator, cr_system_check, nary_laplacian, power_function)
    from core.polyring import render_poly

    f = power_function(args.n, args.eps, args.power)
    report = Report('holocheck', cr_system_check(f, args.type, label=f'z^{args.power}'))
    laplacian = nary_laplacian(args.n, args.eps)
    residuals = [apply_operator(laplacian, component) for component in f.components]
    report.add(Check(f'holomorphy[{args.n},{args.eps:+d}].z^{args.power}.laplacian', not any(residuals),
                     '0 on every component', ', '.join(render_poly(r) for r in residuals),
                     provenance='N-ary harmonicity of holomorphic components'))
    lines = [f"F = z^{args.power} over N={args.n}, eps={args.eps:+d}"] + ['  ' + t for t in f.render()]
    return report, lines


def cmd_dirac(args) -> Tuple[Report, List[str]]:
    from calculus.dirac import dirac_report_checks

    rng = random.Random(int(get_setting('suite/seed', 42)))
    return Report('dirac', dirac_report_checks(args.n, rng)), []


def cmd_pythagoras(args) -> Tuple[Report, List[str]]:
    from numerics.geometry import pythagoras_check, tetrahedron_checks

    report = Report('pythagoras', pythagoras_check(args.rho, args.grid))
    report.extend(tetrahedron_checks())
    return report, []


def cmd_cubesearch(args) -> Tuple[Report, List[str]]:
    from numerics.geometry import TABLE_SEARCH_LIMIT, diophantine_search, diophantine_table_check

    found = diophantine_search(args.limit, args.workers)
    args.rows = [q.to_dict() for q in found]
    report = Report('cubesearch')
    if args.limit >= TABLE_SEARCH_LIMIT:
        report.extend(diophantine_table_check(TABLE_SEARCH_LIMIT, args.workers))
    lines = [f"{'a':>6} {'b':>6} {'c':>6} {'d':>6}  primitive"]
    lines += [f"{q.a:>6} {q.b:>6} {q.c:>6} {q.d:>6}  {'yes' if q.primitive else 'no'}" for q in found]
    lines.append(f"{len(found)} solutions with c <= {args.limit}")
    return report, lines


def cmd_berger(args) -> Tuple[Report, List[str]]:
    from lattice import berger

    lines = []
    report = Report(f'berger {args.action}')
    if args.action == 'build':
        if not args.k:
            raise CommandError("berger build needs --k, e.g. --k 0,1,1,1,1")
        w = berger.WeightVector.parse(args.k)
        graph, matrix = berger.build_star(w)
        inv = berger.graph_invariants(graph, w.cy_dim)
        args.rows = [dict(matrix.to_dict(), vector=str(w), labels=graph.labels, rank=inv.rank_text,
                          h=inv.h, casimir=inv.casimir, det_nonaffine=inv.det_nonaffine)]
        lines.append(f"{w}: {graph.size} nodes, rank {inv.rank_text}, h = {inv.h}, casimir = {inv.casimir}, "
                     f"det_nonaffine = {inv.det_nonaffine}")
        lines += ['  ' + ' '.join(f'{v:>3}' for v in row) for row in matrix.rows]
        lines.append(f"  labels {graph.labels}")
        report.extend(_verdict_checks(str(w), matrix))
        kernel = berger.matrix_times(matrix.rows, graph.labels)
        report.add(Check(f'berger.{w}.labels_in_kernel', not any(kernel), 'zero vector',
                         f'rank {inv.rank_text}, h = {inv.h}, casimir = {inv.casimir}, '
                         f'det_nonaffine = {inv.det_nonaffine}', provenance='star construction'))
    elif args.action == 'validate':
        if not args.matrix:
            raise CommandError("berger validate needs --matrix FILE")
        with open(args.matrix, 'r', encoding='utf-8') as f:
            data = json.load(f)
        rows = data.get('rows') if isinstance(data, dict) else data
        if not isinstance(rows, list) or (isinstance(data, dict) and data.get('size', len(rows)) != len(rows)):
            raise CommandError('matrix file must hold {"size": n, "rows": [[...], ...]}')
        matrix = berger.validate_berger(rows, max_diagonal=args.max_diagonal)
        lines += matrix.notes
        report.extend(_verdict_checks('input', matrix))
        kernel = berger.integer_kernel(rows)
        if kernel:
            lines.append(f"kernel: {kernel}")
    else:
        report.extend(berger.table1_report())
        report.extend(berger.simply_laced_family_checks())
    return report, lines


def _verdict_checks(label: str, matrix) -> List[Check]:
    return [Check(f'berger.{label}.{name}', value, True, value, provenance='Berger matrix conditions')
            for name, value in matrix.verdicts.items()]


def cmd_chartable(args) -> Tuple[Report, List[str]]:
    from core.cyclic_repr import char_table, column_orthogonality_check, orthogonality_check

    table = char_table(args.order)
    report = Report('chartable', [orthogonality_check(table), column_orthogonality_check(table)])
    return report, table.render()


def cmd_suite(args) -> Tuple[Report, List[str]]:
    from verification.battery import run_battery

    names = [n.strip() for n in args.suites.split(',')] if args.suites else None
    return run_battery(names, seed=args.seed, samples=args.samples, parallel=args.parallel), []


COMMANDS: Dict[str, Callable] = {
    'norm': cmd_norm,
    'factor': cmd_factor,
    'euler': cmd_euler,
    'holocheck': cmd_holocheck,
    'dirac': cmd_dirac,
    'pythagoras': cmd_pythagoras,
    'cubesearch': cmd_cubesearch,
    'berger': cmd_berger,
    'chartable': cmd_chartable,
    'suite': cmd_suite,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='print the machine-readable report')
    common.add_argument('--csv', metavar='FILE', help='also write the checks (or rows) to CSV or .xlsx')
    common.add_argument('--pdf', metavar='FILE', help='also write the report as PDF')
    common.add_argument('--seed', type=int, help='seed for randomized checks (default 42)')
    common.add_argument('--settings', metavar='FILE', help='JSON settings file')
    common.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING, ...')

    parser = argparse.ArgumentParser(
        prog='cn_complex',
        description='Verification toolkit for the C_N number algebras and their applications.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('norm', parents=[common], help='norm of a C_N number or the expanded norm form')
    p.add_argument('number', nargs='?', help='e.g. "N=3,eps=+1:[1, 1, 0]"')
    p.add_argument('--n', type=int, default=3)
    p.add_argument('--eps', type=_sign, default=1)

    p = sub.add_parser('factor', parents=[common], help='compare factored and printed norm forms')
    p.add_argument('--n', type=int, default=3)
    p.add_argument('--eps', type=_sign, default=1)

    p = sub.add_parser('euler', parents=[common], help='exponential map and invariance matrix')
    p.add_argument('--n', type=int, default=3)
    p.add_argument('--eps', type=_sign, default=1)
    p.add_argument('--phi', type=_float_list, help='phases phi_1..phi_{N-1}; write --phi=-0.2,0.7 for a leading minus')

    p = sub.add_parser('holocheck', parents=[common], help='Cauchy-Riemann systems and Laplacian for z^k')
    p.add_argument('--n', type=int, default=3)
    p.add_argument('--eps', type=_sign, default=1)
    p.add_argument('--power', type=int, default=2)
    p.add_argument('--type', type=_positive_int, default=1, help='holomorphy type (1 = first type)')

    p = sub.add_parser('dirac', parents=[common], help='matrix relations and operator powers')
    p.add_argument('--n', type=int, choices=(2, 3, 4), default=3)

    p = sub.add_parser('pythagoras', parents=[common], help='ternary Pythagoras identity on a grid')
    p.add_argument('--rho', type=float, default=1.0)
    p.add_argument('--grid', type=_positive_int, default=20)

    p = sub.add_parser('cubesearch', parents=[common], help='a^3+b^3+c^3-3abc = d^3 search')
    p.add_argument('--limit', type=_positive_int, default=42)
    p.add_argument('--workers', type=_positive_int, default=1)

    p = sub.add_parser('berger', parents=[common], help='Berger matrices')
    p.add_argument('action', choices=('build', 'validate', 'table1'))
    p.add_argument('--k', help='weight vector, e.g. 0,1,1,1,1')
    p.add_argument('--matrix', metavar='FILE', help='JSON {"size": n, "rows": [...]}')
    p.add_argument('--max-diagonal', type=_positive_int, default=3)

    p = sub.add_parser('chartable', parents=[common], help='character table of C_N')
    p.add_argument('order', type=_positive_int)

    p = sub.add_parser('suite', parents=[common], help='run the verification battery')
    p.add_argument('--parallel', action='store_true', default=None)
    p.add_argument('--samples', type=_positive_int)
    p.add_argument('--suites', help='comma separated subset of suites')
    return parser


def _write_extras(args, report: Report) -> None:
    if args.csv:
        from utils.table_exporter import CHECK_COLUMNS, TableExporter
        rows = getattr(args, 'rows', None)
        if rows is not None:
            TableExporter().write(rows, args.csv)
        else:
            TableExporter().write([c.to_dict() for c in report.checks], args.csv, CHECK_COLUMNS)
    if args.pdf:
        ReportPdfWriter().write(report, args.pdf)


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.settings:
        load_settings(args.settings)
    configure_logging(args.log_level or get_setting('log/level', 'INFO'))
    if args.seed is not None:
        set_setting('suite/seed', args.seed)

    started = time.perf_counter()
    try:
        report, lines = COMMANDS[args.command](args)
        if not report.wall_time_ms:
            report.wall_time_ms = int((time.perf_counter() - started) * 1000)
        _write_extras(args, report)
    except (CommandError, ValueError, ZeroDivisionError, IndexError, ImportError, OSError) as e:
        log_message(f"{args.command}: {e}", Level.CRITICAL)
        return EXIT_USAGE

    if args.json:
        rows = getattr(args, 'rows', None)
        if args.command == 'cubesearch':
            print(json.dumps(rows, indent=2))
        else:
            print(report.to_json())
    else:
        for line in lines:
            print(line)
        if report.checks:
            print(report.to_text())
    return EXIT_FAILED if report.status == FAIL else EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == '__main__':
    main()

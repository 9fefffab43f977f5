# -*- coding: utf-8 -*-
"""
Cyclic group representations
Character tables of C_N, the C_3 vector representation on R^3 and the
Fourier basis change that diagonalizes the cyclic shift.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np

from .cn_algebra import CnNumber, expand_norm_form, regular_rep
from .exactnum import MAX_ORDER, Cyclotomic, OrderOutOfRange, sqrt3, zeta
from .polyring import MultiPoly, PolyMatrix, exact_equal, exact_identity, exact_matrix, poly_det
from utils.report_generator import Check


@dataclass
class CharacterTable:
    """table[k, a] = zeta_N^(k*a), rows are the irreducible characters"""
    order: int
    table: np.ndarray

    def row(self, k: int) -> List:
        return list(self.table[k])

    def render(self) -> List[str]:
        header = 'chi    ' + ' '.join(f'{"q^" + str(a):>12}' for a in range(self.order))
        lines = [header]
        for k in range(self.order):
            cells = ' '.join(f'{str(v):>12}' for v in self.table[k])
            lines.append(f'xi({k + 1:>2}) {cells}')
        return lines


def char_table(order: int) -> CharacterTable:
    if not isinstance(order, int) or order < 1 or order > MAX_ORDER:
        raise OrderOutOfRange(f"character tables need 1 <= N <= {MAX_ORDER}, got {order!r}")
    return CharacterTable(order, exact_matrix([[zeta(order, k * a) for a in range(order)]
                                               for k in range(order)]))


def hermitian_pairing(u, v) -> Cyclotomic:
    """(1/N) sum_a u_a conj(v_a)"""
    total = sum((a * b.conjugate() for a, b in zip(u, v)), Cyclotomic.rational(0))
    return total / len(u)


def orthogonality_check(t: CharacterTable) -> Check:
    """<xi(k), xi(l)> = delta_kl for all rows"""
    bad = []
    for k in range(t.order):
        for l in range(t.order):
            value = hermitian_pairing(t.table[k], t.table[l])
            if value != (1 if k == l else 0):
                bad.append(f'<{k + 1},{l + 1}>={value}')
    return Check(
        name=f'cyclic_repr.row_orthogonality[{t.order}]',
        passed=not bad,
        expected='delta_kl',
        actual=', '.join(bad[:6]) or f'all {t.order * t.order} pairings',
        residual=float(len(bad)),
        provenance='character orthogonality',
    )


def column_orthogonality_check(t: CharacterTable) -> Check:
    """Second orthogonality relation on the columns"""
    columns = t.table.T
    bad = []
    for a in range(t.order):
        for b in range(t.order):
            if hermitian_pairing(columns[a], columns[b]) != (1 if a == b else 0):
                bad.append((a, b))
    return Check(
        name=f'cyclic_repr.column_orthogonality[{t.order}]',
        passed=not bad,
        expected='delta_ab',
        actual=str(bad[:6]) if bad else f'all {t.order * t.order} pairings',
        residual=float(len(bad)),
        provenance='second orthogonality relation',
    )


def c3_vector_rep() -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """R(q0) = I, R(q) = rotation by 2pi/3 about (1,0,0), R(q^2)"""
    half_root = sqrt3() / 2
    half = Fraction(-1, 2)
    r1 = exact_matrix([[1, 0, 0], [0, half, half_root], [0, -half_root, half]])
    r2 = exact_matrix([[1, 0, 0], [0, half, -half_root], [0, half_root, half]])
    return exact_identity(3), r1, r2


def vector_rep_checks() -> List[Check]:
    identity, r1, r2 = c3_vector_rep()
    traces = [sum(m[i, i] for i in range(3)) for m in (identity, r1, r2)]
    table = char_table(3)
    multiplicities = [hermitian_pairing(traces, table.table[k]) for k in range(3)]
    return [
        Check('cyclic_repr.vector_rep_cube', exact_equal(r1 @ r1 @ r1, identity),
              'R(q)^3 = I', 'R(q)^3', provenance='C_3 vector representation'),
        Check('cyclic_repr.vector_rep_square', exact_equal(r1 @ r1, r2),
              'R(q)^2 = R(q^2)', 'R(q)^2', provenance='C_3 vector representation'),
        Check('cyclic_repr.vector_rep_traces', [str(t) for t in traces] == ['3', '0', '0'],
              [3, 0, 0], [str(t) for t in traces], provenance='character of the vector representation'),
        Check('cyclic_repr.vector_rep_decomposition', all(m == 1 for m in multiplicities),
              [1, 1, 1], [str(m) for m in multiplicities], provenance='R^V = R(1) + R(2) + R(3)'),
    ]


def xhat() -> Tuple[PolyMatrix, MultiPoly]:
    """x0 R(q0) + x1 R(q) + x2 R(q^2) and its determinant"""
    x = MultiPoly.variables(3)
    mats = c3_vector_rep()
    rows = [[sum((x[i] * mats[i][r, c] for i in range(3)), MultiPoly.zero(3)) for c in range(3)]
            for r in range(3)]
    matrix = PolyMatrix(rows, 3)
    return matrix, poly_det(matrix)


def xhat_check() -> Check:
    _, det = xhat()
    form = expand_norm_form(3, 1).form
    return Check(
        name='cyclic_repr.xhat_determinant',
        passed=det == form,
        expected=str(form),
        actual=str(det),
        provenance='determinant of the vector-representation combination',
    )


def fourier_matrix(order: int = 3) -> np.ndarray:
    """Unnormalized S with entries j^(k*l)"""
    return exact_matrix([[zeta(order, k * l) for l in range(order)] for k in range(order)])


def dagger(m: np.ndarray) -> np.ndarray:
    out = m.T.copy()
    for index, value in np.ndenumerate(out):
        out[index] = value.conjugate() if hasattr(value, 'conjugate') else value
    return out


def dft_conjugation() -> List[Check]:
    """S^{-1} q1 S = diag(1, j, j^2), using S S^dagger = 3 I in place of 1/sqrt(3)"""
    s = fourier_matrix(3)
    s_dagger = dagger(s)
    q1 = regular_rep(CnNumber.basis(3, 1, 1))
    q2 = q1 @ q1
    checks = [Check('cyclic_repr.fourier_unitary', exact_equal(s @ s_dagger, exact_identity(3) * 3),
                    '3 I', 'S S^dagger', provenance='unitarity of the Fourier matrix')]
    wanted = {
        'identity': (exact_identity(3), exact_identity(3)),
        'q1': (q1, exact_matrix([[zeta(3, k) if r == k else 0 for k in range(3)] for r in range(3)])),
        'q1_squared': (q2, exact_matrix([[zeta(3, 2 * k) if r == k else 0 for k in range(3)] for r in range(3)])),
    }
    for label, (m, diagonal) in wanted.items():
        conjugated = (s_dagger @ m @ s) * Fraction(1, 3)
        checks.append(Check(
            name=f'cyclic_repr.dft_conjugation.{label}',
            passed=exact_equal(conjugated, diagonal),
            expected=[str(diagonal[i, i]) for i in range(3)],
            actual=[str(conjugated[i, i]) for i in range(3)],
            provenance='diagonalization of the cyclic shift',
        ))
    return checks

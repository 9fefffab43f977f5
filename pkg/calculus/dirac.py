# -*- coding: utf-8 -*-
"""
Generalized Dirac matrices
Pauli and gamma baselines, the ternary Q-matrices with their eta relation,
the quaternary q-matrices, and the operator powers that reproduce the
N-ary Laplace operators.
"""

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

import numpy as np

from core.cn_algebra import expand_norm_form
from core.exactnum import MAX_ORDER, imag_unit, zeta
from core.polyring import (MultiPoly, PolyMatrix, exact_equal, exact_identity, exact_matrix,
                           exact_scalar_part, matrix_power, render_poly)
from utils.fixtures import load_fixture
from utils.report_generator import Check


@dataclass
class MatrixFamily:
    """Named exact matrices of one size"""
    order: int
    dim: int
    members: Dict[str, np.ndarray] = field(default_factory=dict)

    def add(self, name: str, matrix: np.ndarray) -> None:
        if matrix.shape != (self.dim, self.dim):
            raise ValueError(f"{name} is {matrix.shape}, family holds {self.dim}x{self.dim} matrices")
        self.members[name] = matrix

    def __getitem__(self, name: str) -> np.ndarray:
        return self.members[name]

    def ordered(self, names: Sequence[str]) -> List[np.ndarray]:
        return [self.members[n] for n in names]


@dataclass
class EtaTensor:
    """eta values by 1-based index string; None where the relation gives no multiple of the identity"""
    order: int
    entries: Dict[str, Optional[object]] = field(default_factory=dict)

    def nonzero_entries(self) -> Dict[str, object]:
        return {k: v for k, v in self.entries.items() if v is not None and v != 0}


def _kron(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    rows, cols = a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]
    out = np.empty((rows, cols), dtype=object)
    for (i, j), x in np.ndenumerate(a):
        for (k, l), y in np.ndenumerate(b):
            out[i * b.shape[0] + k, j * b.shape[1] + l] = x * y
    return out


def _contract(matrices: Sequence[np.ndarray], nvars: Optional[int] = None) -> PolyMatrix:
    """sum_k t_k M_k as a PolyMatrix in the symbols t_0..t_{n-1}"""
    nvars = nvars or len(matrices)
    t = MultiPoly.variables(nvars)
    dim = matrices[0].shape[0]
    rows = [[sum((t[k] * m[r, c] for k, m in enumerate(matrices) if m[r, c]), MultiPoly.zero(nvars))
             for c in range(dim)] for r in range(dim)]
    return PolyMatrix(rows, nvars)


def _is_generalized_permutation(m: np.ndarray) -> bool:
    for line in list(m) + list(m.T):
        nonzero = [v for v in line if v]
        if len(nonzero) != 1:
            return False
        value = nonzero[0]
        if not any(value ** k == 1 for k in range(1, MAX_ORDER + 1)):
            return False
    return True


def shift_diagonal_matrix(order: int, a: int, inverse: bool = False) -> np.ndarray:
    """
    diag(zeta^{(a-1) i}) times the cyclic shift.

    The forward shift puts row i's entry in column i + 1; the inverse shift in column i - 1.
    """
    rows = [[0] * order for _ in range(order)]
    for i in range(order):
        column = (i - 1) % order if inverse else (i + 1) % order
        rows[i][column] = zeta(order, (a - 1) * i)
    return exact_matrix(rows)


# -- Pauli and gamma ---------------------------------------------------------

def pauli_family() -> MatrixFamily:
    i = imag_unit()
    family = MatrixFamily(order=2, dim=2)
    family.add('sigma0', exact_identity(2))
    family.add('sigma1', exact_matrix([[0, 1], [1, 0]]))
    family.add('sigma2', exact_matrix([[0, -i], [i, 0]]))
    family.add('sigma3', exact_matrix([[1, 0], [0, -1]]))
    return family


def pauli_checks() -> List[Check]:
    family = pauli_family()
    i = imag_unit()
    s0, s1, s2, s3 = family.ordered(['sigma0', 'sigma1', 'sigma2', 'sigma3'])
    checks = [Check('dirac.pauli_product', exact_equal(s1 @ s2, s3 * i), 'i sigma3', 'sigma1 sigma2',
                    provenance='Pauli algebra')]
    for name, s in (('sigma1', s1), ('sigma2', s2), ('sigma3', s3)):
        checks.append(Check(f'dirac.pauli_square.{name}', exact_equal(s @ s, s0), 'sigma0', f'{name}^2',
                            provenance='Pauli algebra'))
    bad = [(m, n) for m, a in enumerate((s1, s2, s3), 1) for n, b in enumerate((s1, s2, s3), 1)
           if not exact_equal(a @ b + b @ a, s0 * (2 if m == n else 0))]
    checks.append(Check('dirac.pauli_anticommutators', not bad, '2 delta_mn sigma0', str(bad) if bad else 'all pairs',
                        provenance='Pauli algebra'))
    return checks


def dirac_square_checks() -> List[Check]:
    family = pauli_family()
    i = imag_unit()
    s0, s1, s2, s3 = family.ordered(['sigma0', 'sigma1', 'sigma2', 'sigma3'])
    t = MultiPoly.variables(4)
    checks = []

    d2 = _contract([s1, s2], 4)
    checks.append(Check('dirac.square_d2', (d2 @ d2).scalar_part() == t[0] ** 2 + t[1] ** 2,
                        't0^2 + t1^2', str((d2 @ d2).scalar_part()), provenance='Dirac relation in D=2'))
    d3 = _contract([s1, s2, s3], 4)
    wanted3 = t[0] ** 2 + t[1] ** 2 + t[2] ** 2
    checks.append(Check('dirac.square_d3', (d3 @ d3).scalar_part() == wanted3,
                        render_poly(wanted3), str((d3 @ d3).scalar_part()), provenance='Dirac relation in D=3'))
    plus = _contract([s0, s1 * i, s2 * i, s3 * i])
    minus = _contract([s0, s1 * -i, s2 * -i, s3 * -i])
    wanted4 = sum((v ** 2 for v in t), MultiPoly.zero(4))
    checks.append(Check('dirac.quaternion_factorization', (plus @ minus).scalar_part() == wanted4,
                        render_poly(wanted4), str((plus @ minus).scalar_part()),
                        provenance='quaternionic factorization in D=4'))
    return checks


def gamma_family() -> MatrixFamily:
    pauli = pauli_family()
    family = MatrixFamily(order=2, dim=4)
    family.add('gamma0', _kron(pauli['sigma1'], pauli['sigma0']))
    family.add('gamma1', _kron(pauli['sigma3'], pauli['sigma0']))
    family.add('gamma2', _kron(pauli['sigma2'], pauli['sigma1']))
    family.add('gamma3', _kron(pauli['sigma2'], pauli['sigma3']))
    return family


def gamma_metric() -> List[List[Optional[object]]]:
    """g_mn with gamma_m gamma_n + gamma_n gamma_m = 2 g_mn I; None where it is no multiple of I"""
    gammas = gamma_family().ordered([f'gamma{m}' for m in range(4)])
    metric = []
    for a in gammas:
        row = []
        for b in gammas:
            scalar = exact_scalar_part(a @ b + b @ a)
            row.append(None if scalar is None else scalar * Fraction(1, 2))
        metric.append(row)
    return metric


def gamma_checks() -> List[Check]:
    metric = gamma_metric()
    off_diagonal = all(metric[m][n] == 0 for m in range(4) for n in range(4) if m != n)
    diagonal = [metric[m][m] for m in range(4)]
    signature = ''.join('+' if d == 1 else '-' if d == -1 else '?' for d in diagonal)
    return [
        Check('dirac.gamma_anticommute', off_diagonal, 'g_mn = 0 for m != n',
              str([[str(v) for v in row] for row in metric]), provenance='gamma matrices'),
        Check('dirac.gamma_signature', all(d in (1, -1) for d in diagonal), 'diagonal entries +-1',
              f'({signature})', provenance='gamma matrices', informational=True),
    ]


# -- ternary ------------------------------------------------------------------

def ternary_q_family() -> MatrixFamily:
    family = MatrixFamily(order=3, dim=3)
    for a in (1, 2, 3):
        family.add(f'Q{a}', shift_diagonal_matrix(3, a))
    return family


def ternary_eta(reverse: bool = False) -> EtaTensor:
    """
    eta_abc from Q_a Q_b Q_c + Q_b Q_c Q_a + Q_c Q_a Q_b = 3 eta_abc E_0.

    reverse=True multiplies each cyclic word right to left.
    """
    q = ternary_q_family()
    eta = EtaTensor(order=3)
    for a, b, c in itertools.product((1, 2, 3), repeat=3):
        words = ((a, b, c), (b, c, a), (c, a, b))
        total = exact_matrix([[0] * 3 for _ in range(3)])
        for word in words:
            x, y, w = (reversed(word) if reverse else word)
            total = total + q[f'Q{x}'] @ q[f'Q{y}'] @ q[f'Q{w}']
        scalar = exact_scalar_part(total)
        eta.entries[f'{a}{b}{c}'] = None if scalar is None else scalar * Fraction(1, 3)
    return eta


def _parse_root(text: str, order: int = 3):
    if text == '1':
        return 1
    power = 1 if text == 'j' else int(text.split('^')[1])
    return zeta(order, power)


def ternary_eta_checks() -> List[Check]:
    printed = {key: _parse_root(value) for key, value in load_fixture('eta_tables')['ternary'].items()}
    checks = []
    for label, reverse in (('left_to_right', False), ('right_to_left', True)):
        eta = ternary_eta(reverse)
        diff = [f'{k}: {eta.entries[k]} vs {v}' for k, v in printed.items() if eta.entries[k] != v]
        checks.append(Check(
            name=f'dirac.ternary_eta.{label}',
            passed=not diff,
            expected='printed eta list',
            actual='; '.join(diff) or 'all nine match',
            residual=float(len(diff)),
            provenance='ternary eta relation',
            informational=not reverse,
        ))
        rotated = all(eta.entries[f'{a}{b}{c}'] == eta.entries[f'{b}{c}{a}']
                      for a, b, c in itertools.product('123', repeat=3))
        checks.append(Check(f'dirac.ternary_eta_cyclic.{label}', rotated, 'eta_abc = eta_bca',
                            'cyclic rotation', provenance='ternary eta relation'))
    return checks


def ternary_structure_checks() -> List[Check]:
    q = ternary_q_family()
    identity = exact_identity(3)
    checks = []
    for name, m in q.members.items():
        checks.append(Check(f'dirac.{name}_cube', exact_equal(m @ m @ m, identity), 'I', f'{name}^3',
                            provenance='ternary Q-matrices'))
        checks.append(Check(f'dirac.{name}_generalized_permutation', _is_generalized_permutation(m),
                            'one root of unity per row and column', name, provenance='ternary Q-matrices'))
    return checks


def ternary_dirac_cube() -> List[Check]:
    q = ternary_q_family()
    operator = _contract(q.ordered(['Q1', 'Q2', 'Q3']))
    cube = matrix_power(operator, 3)
    form = expand_norm_form(3, 1).form
    total = q['Q1'] + q['Q2'] + q['Q3']
    zero = exact_matrix([[0] * 3 for _ in range(3)])
    return [
        Check('dirac.ternary_cube', cube.scalar_part() == form, render_poly(form),
              str(cube.scalar_part()), provenance='ternary Dirac operator cubed'),
        Check('dirac.ternary_cube_at_ones', exact_equal(total @ total @ total, zero), '0',
              '(Q1 + Q2 + Q3)^3', provenance='ternary Dirac operator cubed'),
    ]


# -- quaternary ---------------------------------------------------------------

def quaternary_q_family() -> MatrixFamily:
    """q1..q4 on the forward shift, q9..q12 on the inverse shift"""
    family = MatrixFamily(order=4, dim=4)
    for a in (1, 2, 3, 4):
        family.add(f'q{a}', shift_diagonal_matrix(4, a))
        family.add(f'q{a + 8}', shift_diagonal_matrix(4, a, inverse=True))
    return family


def symmetrized_product(family: MatrixFamily, names: Sequence[str]) -> np.ndarray:
    """Sum over all 24 orderings of the four factors, repeated indices included"""
    total = exact_matrix([[0] * family.dim for _ in range(family.dim)])
    for order in itertools.permutations(names):
        product = family[order[0]]
        for name in order[1:]:
            product = product @ family[name]
        total = total + product
    return total


def quaternary_eta(family: Optional[MatrixFamily] = None, offset: int = 0) -> EtaTensor:
    """Raw symmetrized sums per multiset of indices; the full 256-tuple table is their expansion"""
    family = family or quaternary_q_family()
    eta = EtaTensor(order=4)
    for combo in itertools.combinations_with_replacement((1, 2, 3, 4), 4):
        names = [f'q{a + offset}' for a in combo]
        eta.entries[''.join(map(str, combo))] = exact_scalar_part(symmetrized_product(family, names))
    return eta


def quaternary_checks(rng: random.Random) -> List[Check]:
    family = quaternary_q_family()
    eta = quaternary_eta(family)
    printed = load_fixture('eta_tables')['quaternary']
    checks = []
    for key in ('1111', '2222', '3333', '4444'):
        checks.append(Check(f'dirac.quaternary_eta[{key}]', eta.entries[key] == printed[key],
                            printed[key], str(eta.entries[key]), provenance='quaternary eta relation'))
    other = [f'{k}: {eta.entries[k]} vs {v}' for k, v in printed.items()
             if len(set(k)) > 1 and eta.entries[k] != v]
    checks.append(Check('dirac.quaternary_eta_mixed', not other, 'printed mixed-index values',
                        '; '.join(other) or 'all match', float(len(other)),
                        'quaternary eta relation', informational=True))

    names = [f'q{rng.randint(1, 4)}' for _ in range(4)]
    shuffled = list(names)
    rng.shuffle(shuffled)
    checks.append(Check('dirac.symmetrizer_permutation_invariant',
                        exact_equal(symmetrized_product(family, names), symmetrized_product(family, shuffled)),
                        'same sum', f'{names} vs {shuffled}', provenance='S4 symmetrizer'))

    for name, m in family.members.items():
        checks.append(Check(f'dirac.{name}_generalized_permutation', _is_generalized_permutation(m),
                            'one root of unity per row and column', name, provenance='quaternary q-matrices'))

    form = expand_norm_form(4, 1).form
    fourth = matrix_power(_contract(family.ordered(['q1', 'q2', 'q3', 'q4'])), 4)
    checks.append(Check('dirac.quaternary_fourth_power', fourth.scalar_part() == form, render_poly(form),
                        str(fourth.scalar_part()), provenance='quaternary Dirac operator to the fourth'))
    second = matrix_power(_contract(family.ordered(['q9', 'q10', 'q11', 'q12'])), 4)
    scalar = second.scalar_part()
    checks.append(Check('dirac.second_quartet_fourth_power', scalar is not None, 'quartic form times I',
                        render_poly(scalar) if scalar is not None else 'not a multiple of I',
                        provenance='second quartet', informational=True))
    return checks


def dirac_report_checks(order: int, rng: random.Random) -> List[Check]:
    if order == 3:
        return ternary_structure_checks() + ternary_eta_checks() + ternary_dirac_cube()
    if order == 4:
        return quaternary_checks(rng)
    if order == 2:
        return pauli_checks() + dirac_square_checks() + gamma_checks()
    raise ValueError(f"Dirac families exist for N in 2..4, got {order}")

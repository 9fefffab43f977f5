# -*- coding: utf-8 -*-
"""
Euler map
Floating-point layer of the C_N numbers: the exponential (multi-sine
functions), the ternary logarithm and polar form, the invariance matrices
and the two one-parameter limits of the ternary phase group.
"""

import cmath
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Sequence, Tuple

import numpy as np
from scipy.linalg import expm

from core.cn_algebra import (CnNumber, cn_inverse, cn_mul, conjugate, expand_norm_form,
                             regular_rep, sign_text)
from core.polyring import exact_equal, exact_matrix, parse_poly
from utils.fixtures import load_fixture
from utils.message_log import Level, log_message
from utils.report_generator import Check
from utils.settings import get_setting

J = cmath.exp(2j * math.pi / 3)
SQRT3 = math.sqrt(3.0)


class NonPositiveNorm(ValueError):
    """Ternary number outside the positive-norm domain of the logarithm"""


class SingularCombination(ValueError):
    """x0 + j x1 + j^2 x2 vanishes (point on an ideal plane)"""


class DegenerateInput(ValueError):
    """Zero norm, parallel vectors or similar degenerate arguments"""


@dataclass(frozen=True)
class PhaseVector:
    """Group parameters phi_1..phi_{N-1}"""
    order: int
    phases: Tuple[float, ...]

    def __post_init__(self):
        if len(self.phases) != self.order - 1:
            raise ValueError(f"C_{self.order} phases need {self.order - 1} entries, got {len(self.phases)}")
        if not all(math.isfinite(p) for p in self.phases):
            raise ValueError("phases must be finite")


@dataclass
class MultiSine:
    """Components m_0..m_{N-1} of exp(phi_1 q + ... + phi_{N-1} q^{N-1})"""
    order: int
    sign: int
    values: np.ndarray

    def as_number(self) -> CnNumber:
        return CnNumber(self.order, self.sign, [float(v) for v in self.values])

    def norm_value(self) -> float:
        return norm_form_value(self.order, self.sign, self.values)


@dataclass(frozen=True)
class TernaryLog:
    """(ln z)_0 and the phase pair ((ln z)_1, (ln z)_2)"""
    scalar: float
    phases: PhaseVector

    @property
    def components(self) -> Tuple[float, float, float]:
        return (self.scalar,) + self.phases.phases


@dataclass(frozen=True)
class PolarForm:
    """z = rho exp(theta (q - q^2) + phi (q + q^2)), theta in [0, 2 pi / sqrt 3)"""
    rho: float
    theta: float
    phi: float

    def phases(self) -> PhaseVector:
        return PhaseVector(3, (self.theta + self.phi, self.phi - self.theta))


@lru_cache(maxsize=None)
def _form_evaluator(order: int, sign: int):
    return expand_norm_form(order, sign).form.lambdify()


def norm_form_value(order: int, sign: int, x) -> float:
    return float(_form_evaluator(order, sign)(np.asarray(x, dtype=float)))


def _coerce_phases(order: int, phi) -> PhaseVector:
    if isinstance(phi, PhaseVector):
        values = list(phi.phases)
    else:
        values = [float(p) for p in phi]
    clamp = float(get_setting('numerics/phi_clamp', 20.0))
    clamped = [max(-clamp, min(clamp, p)) for p in values]
    if clamped != values:
        log_message(f"phases clamped to |phi| <= {clamp}: {values}", Level.WARNING)
    return PhaseVector(order, tuple(clamped))


def generator_matrix(order: int, sign: int, phi) -> np.ndarray:
    """Column convention: column c holds the coefficients of g * q^c, g = sum phi_k q^k"""
    phases = _coerce_phases(order, phi)
    g = CnNumber(order, sign, [0.0] + list(phases.phases))
    return regular_rep(g).T


def cn_exp(order: int, sign: int, phi) -> MultiSine:
    """exp(sum_k phi_k q^k) by the Pade scaling-and-squaring matrix exponential"""
    generator = generator_matrix(order, sign, phi)
    return MultiSine(order, sign, expm(generator)[:, 0].copy())


def appell_functions(phi1: float, phi2: float) -> Tuple[float, float, float]:
    """c, s, t with m_k = (1/3) sum over w in {1, j, j^2} of w^-k exp(phi1 w + phi2 w^2)"""
    roots = (1.0, J, J * J)
    out = []
    for k in range(3):
        total = sum(w ** (-k) * cmath.exp(phi1 * w + phi2 * w * w) for w in roots)
        out.append((total / 3).real)
    return tuple(out)


def _ternary_combinations(z: Sequence[float]) -> Tuple[float, complex]:
    x0, x1, x2 = (float(v) for v in z)
    return x0 + x1 + x2, x0 + J * x1 + J * J * x2


def cn_log(z: Sequence[float]) -> TernaryLog:
    """
    Logarithm of a ternary number with positive norm.

    (ln z)_k = (1/3) sum_w w^-k ln z(w), principal branch for z(j).
    """
    if len(z) != 3:
        raise ValueError("cn_log is defined for ternary numbers (three components)")
    real_part, complex_part = _ternary_combinations(z)
    scale = max(1.0, max(abs(float(v)) for v in z))
    if abs(complex_part) <= 1e-14 * scale:
        raise SingularCombination(f"x0 + j x1 + j^2 x2 vanishes for z = {list(z)}")
    norm = real_part * abs(complex_part) ** 2
    if norm <= 0.0:
        raise NonPositiveNorm(f"norm {norm} <= 0 for z = {list(z)}")
    logs = (complex(math.log(real_part)), cmath.log(complex_part), cmath.log(complex_part.conjugate()))
    roots = (1.0, J, J * J)
    components = [(sum(w ** (-k) * l for w, l in zip(roots, logs)) / 3).real for k in range(3)]
    return TernaryLog(components[0], PhaseVector(3, (components[1], components[2])))


def polar_decompose(z: Sequence[float]) -> PolarForm:
    real_part, complex_part = _ternary_combinations(z)
    log = cn_log(z)
    rho = math.exp(log.scalar)
    theta = (cmath.phase(complex_part) % (2 * math.pi)) / SQRT3
    if theta >= 2 * math.pi / SQRT3:
        theta = 0.0
    phi = (log.phases.phases[0] + log.phases.phases[1]) / 2
    return PolarForm(rho, theta, phi)


def from_polar(p: PolarForm) -> np.ndarray:
    return p.rho * cn_exp(3, 1, p.phases()).values


def tu1_element(theta: float, phi: float) -> MultiSine:
    """exp((theta + phi) q + (phi - theta) q^2)"""
    return cn_exp(3, 1, (theta + phi, phi - theta))


def invariance_matrix(order: int, sign: int, phi) -> np.ndarray:
    """Multiplication-table matrix of cn_exp(phi); rows are ordered as in regular_rep"""
    return regular_rep(cn_exp(order, sign, phi).as_number())


def so2_limit(alpha: float) -> Tuple[float, float, float]:
    """The alpha = -beta subgroup: cosine combinations of phi = sqrt(3) alpha"""
    phi = SQRT3 * alpha
    c0 = (1 + 2 * math.cos(phi)) / 3
    s0 = (1 + 2 * math.cos(phi - 2 * math.pi / 3)) / 3
    t0 = (1 + 2 * math.cos(phi + 2 * math.pi / 3)) / 3
    return c0, s0, t0


def so11_limit(alpha: float) -> Tuple[float, float]:
    """The alpha = beta subgroup"""
    grow, decay = math.exp(2 * alpha), math.exp(-alpha)
    return (grow + 2 * decay) / 3, (grow - decay) / 3


def duality_map(z: Sequence[float]) -> np.ndarray:
    """Product of the non-trivial conjugates divided by the norm"""
    number = CnNumber(len(z), 1, [float(v) for v in z])
    try:
        return np.array(cn_inverse(number).coeffs, dtype=float)
    except ZeroDivisionError as e:
        raise DegenerateInput(str(e)) from e


# -- checks used by the verification battery --------------------------------

def _random_phases(order: int, rng: random.Random, bound: float = 1.0) -> Tuple[float, ...]:
    return tuple(rng.uniform(-bound, bound) for _ in range(order - 1))


def unimodularity_check(order: int, sign: int, samples: int, rng: random.Random) -> Check:
    tol = get_setting('numerics/roundtrip_tol', 1e-9)
    worst = 0.0
    for _ in range(samples):
        m = cn_exp(order, sign, _random_phases(order, rng))
        worst = max(worst, abs(m.norm_value() - 1.0))
    return Check(
        name=f'eulermap.unimodular[{order},{sign_text(sign)}]',
        passed=worst < tol,
        expected=1.0,
        actual=f'max |form(m) - 1| over {samples} samples',
        residual=worst,
        provenance='norm of the exponential is one',
    )


def homomorphism_check(order: int, sign: int, samples: int, rng: random.Random) -> Check:
    tol = get_setting('numerics/roundtrip_tol', 1e-9)
    worst = 0.0
    for _ in range(samples):
        phi, psi = _random_phases(order, rng), _random_phases(order, rng)
        product = cn_mul(cn_exp(order, sign, phi).as_number(), cn_exp(order, sign, psi).as_number())
        joint = cn_exp(order, sign, tuple(a + b for a, b in zip(phi, psi))).values
        worst = max(worst, float(np.max(np.abs(np.array(product.coeffs) - joint))))
    return Check(
        name=f'eulermap.homomorphism[{order},{sign_text(sign)}]',
        passed=worst < tol,
        expected='exp(phi) exp(psi) = exp(phi + psi)',
        actual=f'{samples} samples',
        residual=worst,
        provenance='additive parameter group',
    )


def invariance_checks(order: int, sign: int, rng: random.Random) -> List[Check]:
    tol = get_setting('numerics/roundtrip_tol', 1e-9)
    phi = _random_phases(order, rng)
    matrix = invariance_matrix(order, sign, phi)
    det_residual = abs(float(np.linalg.det(matrix)) - 1.0)
    x = np.array([rng.uniform(-1, 1) for _ in range(order)])
    before, after = norm_form_value(order, sign, x), norm_form_value(order, sign, matrix @ x)
    preserved = abs(after - before) / max(1.0, abs(before))
    first = matrix[0]
    shift_residual = max(
        abs(matrix[i, m] - (first[m - i] if m >= i else sign * first[order + m - i]))
        for i in range(order) for m in range(order)
    )
    label = f'{order},{sign_text(sign)}'
    return [
        Check(f'eulermap.invariance_det[{label}]', det_residual < tol, 1.0, float(np.linalg.det(matrix)),
              det_residual, 'Det O = 1'),
        Check(f'eulermap.invariance_preserves_form[{label}]', preserved < 1e-8, before, after,
              preserved, 'invariance of the norm surface'),
        Check(f'eulermap.invariance_twisted_shifts[{label}]', shift_residual == 0.0, 'eps-twisted cyclic rows',
              'structure of O', float(shift_residual), 'rows are twisted shifts of the first row'),
    ]


def printed_invariance_pattern(order: int, sign: int) -> Check:
    """
    Compare the printed sextic invariance matrix with the symbolic one.

    Case A is regular_rep(m); case B is regular_rep of the conjugate with s = N/2.
    """
    name = 'invariance_a' if sign > 0 else 'invariance_b'
    entry = load_fixture('printed_matrices')[name]
    printed = exact_matrix([[parse_poly(cell, order, symbol=entry['symbol']) for cell in row]
                            for row in entry['rows']])
    m = CnNumber.symbolic(order, sign)
    source = 'regular_rep(m)'
    candidate = regular_rep(m)
    if sign < 0:
        half = conjugate(m, order // 2)
        candidate = regular_rep(CnNumber(order, sign, half.coeffs, half.ring))
        source = f'regular_rep(conjugate(m, {order // 2}))'
    mismatched = sum(1 for x, y in zip(printed.flat, candidate.flat) if not x == y)
    return Check(
        name=f'eulermap.printed_invariance[{order},{sign_text(sign)}]',
        passed=exact_equal(printed, candidate),
        expected='printed O(A)' if sign > 0 else 'printed O(B)',
        actual=source,
        residual=float(mismatched),
        provenance='printed invariance matrix',
        informational=sign < 0,
    )


def closed_form_checks(rng: random.Random) -> List[Check]:
    """Appell functions, the SO(2) and SO(1,1) limits against cn_exp"""
    tol = get_setting('numerics/identity_tol', 1e-12)
    phi1, phi2 = _random_phases(3, rng)
    appell = np.array(appell_functions(phi1, phi2))
    via_exp = cn_exp(3, 1, (phi1, phi2)).values
    appell_residual = float(np.max(np.abs(appell - via_exp)))

    so2_worst = so2_cross = 0.0
    so11_worst = so11_cross = 0.0
    for _ in range(20):
        alpha = rng.uniform(-2, 2)
        c0, s0, t0 = so2_limit(alpha)
        so2_worst = max(so2_worst,
                        abs(c0 * c0 + s0 * s0 + t0 * t0 - 1),
                        abs(c0 * s0 + s0 * t0 + t0 * c0),
                        abs(c0 ** 3 + s0 ** 3 + t0 ** 3 - 3 * c0 * s0 * t0 - 1))
        so2_cross = max(so2_cross, float(np.max(np.abs(np.array([c0, s0, t0]) - cn_exp(3, 1, (alpha, -alpha)).values))))
        cp, sp = so11_limit(alpha)
        so11_worst = max(so11_worst, abs((cp - sp) ** 2 * (cp + 2 * sp) - 1) / max(1.0, cp))
        so11_cross = max(so11_cross, float(np.max(np.abs(np.array([cp, sp, sp]) - cn_exp(3, 1, (alpha, alpha)).values))))
    return [
        Check('eulermap.appell_closed_form', appell_residual < 1e-10, list(appell), list(via_exp),
              appell_residual, 'Appell functions c, s, t'),
        Check('eulermap.so2_identities', so2_worst < tol, 'c0^2+s0^2+t0^2 = 1, c0s0+s0t0+t0c0 = 0, cubic = 1',
              'max residual', so2_worst, 'alpha = -beta limit'),
        Check('eulermap.so2_matches_exp', so2_cross < 1e-10, 'cn_exp(alpha, -alpha)', 'so2_limit(alpha)',
              so2_cross, 'alpha = -beta limit'),
        Check('eulermap.so11_identity', so11_worst < tol, '(c+ - s+)^2 (c+ + 2 s+) = 1', 'max residual',
              so11_worst, 'alpha = beta limit'),
        Check('eulermap.so11_matches_exp', so11_cross < 1e-10, 'cn_exp(alpha, alpha)', '(c+, s+, s+)',
              so11_cross, 'alpha = beta limit'),
    ]


def roundtrip_checks(samples: int, rng: random.Random) -> List[Check]:
    tol = get_setting('numerics/roundtrip_tol', 1e-9)
    log_worst = polar_worst = dual_worst = 0.0
    for _ in range(samples):
        phases = _random_phases(3, rng)
        rho = rng.uniform(0.5, 3.0)
        z = rho * cn_exp(3, 1, phases).values
        log = cn_log(z)
        recovered = np.array(log.components)
        log_worst = max(log_worst, float(np.max(np.abs(recovered - np.array((math.log(rho),) + phases)))))
        polar_worst = max(polar_worst, float(np.max(np.abs(from_polar(polar_decompose(z)) - z))))
        unit = cn_exp(3, 1, phases).values
        dual = duality_map(unit)
        dual_worst = max(dual_worst, float(np.max(np.abs(dual - cn_exp(3, 1, tuple(-p for p in phases)).values))))
    return [
        Check('eulermap.log_roundtrip', log_worst < tol, 'ln(rho exp(phi)) = (ln rho, phi)', f'{samples} samples',
              log_worst, 'ternary logarithm'),
        Check('eulermap.polar_roundtrip', polar_worst < tol, 'z', 'rho exp(theta(q-q^2) + phi(q+q^2))',
              polar_worst, 'polar form'),
        Check('eulermap.duality_flips_phases', dual_worst < tol, 'exp(-phi)', 'duality_map(exp(phi))',
              dual_worst, 'duality map'),
    ]

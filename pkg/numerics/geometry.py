# -*- coding: utf-8 -*-
"""
Ternary Pythagoras geometry
Parametrization of the cubic surface x0^3 + x1^3 + x2^3 - 3 x0 x1 x2 = rho^3,
its tangent Jacobians, the cubic area identity, the tetrahedron corollary
and the search for integer points.
"""

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import gmpy2
import numpy as np
import sympy

from utils.fixtures import load_fixture
from utils.message_log import Level, log_message
from utils.report_generator import Check
from .eulermap import DegenerateInput

SQRT3 = math.sqrt(3.0)

MAX_SEARCH_LIMIT = 2_000
TABLE_SEARCH_LIMIT = 42


def cubic_form(x: Sequence[float]) -> float:
    """x0^3 + x1^3 + x2^3 - 3 x0 x1 x2, evaluated in factored form"""
    x0, x1, x2 = x
    return (x0 + x1 + x2) * ((x0 - x1) ** 2 + (x1 - x2) ** 2 + (x2 - x0) ** 2) / 2


@dataclass(frozen=True)
class SurfacePoint:
    """Point x(a, theta) on the surface of norm rho^3, with a = x0 + x1 + x2"""
    rho: float
    a: float
    theta: float
    x: Tuple[float, float, float]

    def __post_init__(self):
        if abs(sum(self.x) - self.a) > 1e-12 * max(1.0, abs(self.a)):
            raise ValueError(f"coordinates {self.x} do not sum to a = {self.a}")
        target = self.rho ** 3
        if abs(cubic_form(self.x) - target) > 1e-9 * max(1.0, target):
            raise ValueError(f"{self.x} is off the surface of norm {target}")

    @property
    def amplitude(self) -> float:
        """rho^{3/2} / sqrt(a)"""
        return self.rho ** 1.5 / math.sqrt(self.a)


@dataclass(frozen=True)
class CubicQuadruple:
    """a^3 + b^3 + c^3 - 3abc = d^3 with 1 <= a <= b <= c"""
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not 1 <= self.a <= self.b <= self.c or self.d < 1:
            raise ValueError(f"not a canonical quadruple: {self}")
        if cubic_value(self.a, self.b, self.c) != self.d ** 3:
            raise ValueError(f"{self} does not satisfy the cubic equation")

    @property
    def primitive(self) -> bool:
        return math.gcd(self.a, self.b, self.c, self.d) == 1

    def to_dict(self) -> Dict[str, object]:
        return {'a': self.a, 'b': self.b, 'c': self.c, 'd': self.d, 'primitive': self.primitive}


def surface_point(rho: float, a: float, theta: float) -> SurfacePoint:
    if rho <= 0 or a <= 0:
        raise ValueError(f"surface points need rho > 0 and a > 0, got rho={rho}, a={a}")
    amp = rho ** 1.5 / math.sqrt(a)
    cos_t, sin_t = math.cos(theta), math.sin(theta)
    x = (
        a / 3 - 2 / 3 * amp * cos_t,
        a / 3 + amp / 3 * (cos_t + SQRT3 * sin_t),
        a / 3 + amp / 3 * (cos_t - SQRT3 * sin_t),
    )
    return SurfacePoint(rho, a, theta, x)


def tangent_vectors(p: SurfacePoint) -> Tuple[np.ndarray, np.ndarray]:
    """d x / d a and d x / d theta at fixed rho"""
    cos_t, sin_t = math.cos(p.theta), math.sin(p.theta)
    ratio = (p.rho / p.a) ** 1.5
    along_a = np.array([
        1 / 3 + ratio / 3 * cos_t,
        1 / 3 - ratio / 6 * (cos_t + SQRT3 * sin_t),
        1 / 3 - ratio / 6 * (cos_t - SQRT3 * sin_t),
    ])
    amp = p.amplitude
    along_theta = np.array([
        2 / 3 * amp * sin_t,
        amp / 3 * (-sin_t + SQRT3 * cos_t),
        amp / 3 * (-sin_t - SQRT3 * cos_t),
    ])
    return along_a, along_theta


def _plane_minors(u: np.ndarray, v: np.ndarray) -> Tuple[float, float, float]:
    """Projections of u ^ v on the (0,1), (1,2) and (2,0) planes"""
    return (
        float(u[0] * v[1] - u[1] * v[0]),
        float(u[1] * v[2] - u[2] * v[1]),
        float(u[2] * v[0] - u[0] * v[2]),
    )


def jacobians(p: SurfacePoint) -> Tuple[float, float, float, float]:
    """(J01, J12, J20, J012); J012 is the determinant with a row of ones appended"""
    u, v = tangent_vectors(p)
    j01, j12, j20 = _plane_minors(u, v)
    j012 = float(np.linalg.det(np.vstack([u, v, np.ones(3)])))
    return j01, j12, j20, j012


def closed_form_area(rho: float, a: float) -> float:
    """rho^6 / (3 sqrt(3) a^3)"""
    return rho ** 6 / (3 * SQRT3 * a ** 3)


def closed_form_j012(rho: float, a: float) -> float:
    """rho^3 / (sqrt(3) a^2); its cube equals closed_form_area only when a = rho"""
    return rho ** 3 / (SQRT3 * a ** 2)


def trisectrice_radius(p: SurfacePoint) -> float:
    """Distance from x to the line x0 = x1 = x2, as r with r^2 = sum x_i^2 - sum x_i x_k"""
    x0, x1, x2 = p.x
    r2 = x0 * x0 + x1 * x1 + x2 * x2 - x0 * x1 - x1 * x2 - x2 * x0
    return math.sqrt(max(r2, 0.0))


def pythagoras_check(rho: float = 1.0, grid: int = 20, a_range: Tuple[float, float] = (0.5, 5.0)) -> List[Check]:
    """Sweep an (a, theta) grid and compare the Jacobian cubic with its closed form"""
    if rho <= 0 or grid < 1:
        raise ValueError(f"need rho > 0 and a positive grid, got rho={rho}, grid={grid}")
    worst_rel = worst_abs = worst_radius = worst_j012 = worst_printed = 0.0
    for a in np.linspace(a_range[0], a_range[1], grid):
        expected = closed_form_area(rho, float(a))
        for theta in np.linspace(0.0, 2 * math.pi, grid, endpoint=False):
            p = surface_point(rho, float(a), float(theta))
            j01, j12, j20, j012 = jacobians(p)
            value = cubic_form((j01, j12, j20))
            worst_abs = max(worst_abs, abs(value - expected))
            worst_rel = max(worst_rel, abs(value - expected) / expected)
            j012_expected = closed_form_j012(rho, float(a))
            worst_j012 = max(worst_j012, abs(j012 - j012_expected) / j012_expected)
            worst_printed = max(worst_printed, abs(j012 ** 3 - expected) / expected)
            worst_radius = max(worst_radius, abs(p.a * trisectrice_radius(p) ** 2 - rho ** 3) / rho ** 3)
    log_message(f"pythagoras grid {grid}x{grid} at rho={rho}: max relative residual {worst_rel:.3g}")
    return [
        Check(f'geometry.pythagoras_identity[rho={rho:g}]', worst_rel < 1e-8,
              'J01^3+J12^3+J20^3-3J01J12J20 = rho^6/(3 sqrt3 a^3)',
              f'max abs residual {worst_abs:.3g} over {grid * grid} points', worst_rel,
              'ternary Pythagoras theorem'),
        Check(f'geometry.pythagoras_j012[rho={rho:g}]', worst_j012 < 1e-8, 'J012 = rho^3/(sqrt3 a^2)',
              'determinant with a row of ones', worst_j012, 'tangent vectors of the cubic surface'),
        Check(f'geometry.pythagoras_j012_printed[rho={rho:g}]', worst_printed < 1e-8,
              'J012^3 = rho^6/(3 sqrt3 a^3)', 'holds only where a = rho', worst_printed,
              'ternary Pythagoras theorem', informational=True),
        Check(f'geometry.trisectrice_radius[rho={rho:g}]', worst_radius < 1e-9, 'a r^2 = rho^3',
              'distance to the trisectrice', worst_radius, 'equation of the cubic surface'),
    ]


@dataclass(frozen=True)
class TetrahedronFaces:
    s_a: float
    s_b: float
    s_c: float
    s_d: float

    @property
    def residual(self) -> float:
        return cubic_form((self.s_a, self.s_b, self.s_c)) - self.s_d ** 3


def tetrahedron_faces(u: Sequence[float], v: Sequence[float]) -> TetrahedronFaces:
    u, v = np.asarray(u, dtype=float), np.asarray(v, dtype=float)
    if np.linalg.norm(np.cross(u, v)) <= 1e-12 * max(1.0, np.linalg.norm(u) * np.linalg.norm(v)):
        raise DegenerateInput(f"parallel vectors {list(u)} and {list(v)}")
    s_a, s_b, s_c = (m / 2 for m in _plane_minors(u, v))
    s_d = float(np.linalg.det(np.vstack([u, v, np.ones(3)]))) / 2
    return TetrahedronFaces(s_a, s_b, s_c, s_d)


def tetrahedron_check(u: Sequence[float], v: Sequence[float], label: Optional[str] = None) -> Check:
    """
    S_A^3 + S_B^3 + S_C^3 - 3 S_A S_B S_C = S_D^3 for the faces cut by u, v.

    The identity holds whenever S_D = 0 or S_A S_B + S_B S_C + S_C S_A = 0,
    which is the case for surface tangent pairs; other pairs get an honest report.
    """
    faces = tetrahedron_faces(u, v)
    scale = max(1.0, abs(faces.s_d) ** 3, max(abs(s) for s in (faces.s_a, faces.s_b, faces.s_c)) ** 3)
    return Check(
        name=f'geometry.tetrahedron[{label or describe_pair(u, v)}]',
        passed=abs(faces.residual) <= 1e-8 * scale,
        expected=f'S_D^3 = {faces.s_d ** 3:.12g}',
        actual=f'S_A={faces.s_a:.12g}, S_B={faces.s_b:.12g}, S_C={faces.s_c:.12g}',
        residual=abs(faces.residual),
        provenance='tetrahedron corollary',
    )


def describe_pair(u: Sequence[float], v: Sequence[float]) -> str:
    return f"{tuple(float(c) for c in u)},{tuple(float(c) for c in v)}"


def tetrahedron_checks() -> List[Check]:
    u, v = tangent_vectors(surface_point(1.0, 1.0, 0.0))
    counter = tetrahedron_check((1, 0, 0), (0, 1, 2), label='unconstrained')
    counter.informational = True
    return [
        tetrahedron_check(u, v, label='surface_tangents'),
        tetrahedron_check(2 * u, 2 * v, label='surface_tangents_scaled'),
        tetrahedron_check((1, 0, 0), (0, 1, 0), label='coordinate_pair'),
        counter,
    ]


def cubic_value(a: int, b: int, c: int) -> int:
    """(a + b + c)((a - b)^2 + (b - c)^2 + (c - a)^2) / 2"""
    return (a + b + c) * ((a - b) ** 2 + (b - c) ** 2 + (c - a) ** 2) // 2


def _cube_cofactor(m: int) -> int:
    """Smallest k >= 1 with k * m a perfect cube"""
    k = 1
    for p, e in sympy.factorint(m).items():
        k *= int(p) ** (-int(e) % 3)
    return k


def _search_slice(x_values: Sequence[int], limit: int) -> List[Tuple[int, int, int, int]]:
    """
    Solutions with b - a = x for each x in x_values.

    With y = c - b the cubic value factors as s * m, s = a + b + c and
    m = x^2 + x y + y^2, so s must be cofactor(m) times a cube.
    """
    found = []
    for x in x_values:
        for y in range(limit - x):
            if x == 0 and y == 0:
                continue
            m = x * x + x * y + y * y
            k = _cube_cofactor(m)
            offset = 2 * x + y
            s_max = 3 * (limit - x - y) + offset
            t = 1
            while k * t ** 3 <= s_max:
                s = k * t ** 3
                t += 1
                if s < 3 + offset or (s - offset) % 3:
                    continue
                root, exact = gmpy2.iroot(s * m, 3)
                if not exact:
                    raise ArithmeticError(f"s={s}, m={m}: product is not a cube")
                a = (s - offset) // 3
                found.append((a, a + x, a + x + y, int(root)))
    return found


def diophantine_search(limit: int, workers: int = 1) -> List[CubicQuadruple]:
    """All 1 <= a <= b <= c <= limit whose cubic value is a positive perfect cube"""
    if not isinstance(limit, int) or limit < 1 or limit > MAX_SEARCH_LIMIT:
        raise ValueError(f"search limit must be in 1..{MAX_SEARCH_LIMIT}, got {limit!r}")
    if workers > 1 and limit > 1:
        slices = [list(range(start, limit, workers)) for start in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_search_slice, slices, [limit] * len(slices)))
        rows = [row for part in parts for row in part]
    else:
        rows = _search_slice(range(limit), limit)
    rows.sort(key=lambda r: (r[2], r[1], r[0]))
    log_message(f"cubesearch up to {limit}: {len(rows)} quadruples", Level.SUCCESS)
    return [CubicQuadruple(*row) for row in rows]


def diophantine_table_check(limit: int = TABLE_SEARCH_LIMIT, workers: int = 1) -> List[Check]:
    """The printed solutions against an exhaustive search"""
    found = {(q.a, q.b, q.c): q for q in diophantine_search(limit, workers)}
    checks = []
    for row in load_fixture('diophantine_table')['rows']:
        key = (row['a'], row['b'], row['c'])
        hit = found.get(key)
        checks.append(Check(
            name=f"geometry.cubesearch_row[{row['a']},{row['b']},{row['c']}]",
            passed=hit is not None and hit.d == row['d'],
            expected=f"d = {row['d']}",
            actual=f"d = {hit.d}, primitive = {hit.primitive}" if hit else 'not found',
            residual=float(abs(cubic_value(*key) - row['d'] ** 3)),
            provenance='printed table of integer solutions',
        ))
    worst = max((abs(cubic_value(*perm) - q.d ** 3)
                 for q in found.values()
                 for perm in ((q.c, q.a, q.b), (q.b, q.c, q.a), (q.c, q.b, q.a))), default=0)
    checks.append(Check('geometry.cubesearch_symmetric', worst == 0, 'order-independent cubic value',
                        f'{len(found)} quadruples re-checked', float(worst), 'symmetry of the cubic form'))
    return checks

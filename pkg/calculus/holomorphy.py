# -*- coding: utf-8 -*-
"""
N-ary holomorphy
Derivatives along the conjugate coordinates z_s, the Cauchy-Riemann systems
of the various holomorphy types and the N-ary Laplace operator.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from core.cn_algebra import CnNumber, cn_mul, cn_pow, expand_norm_form, sign_text
from core.exactnum import Cyclotomic, zeta
from core.polyring import MultiPoly, StructureMismatch, render_poly
from utils.report_generator import Check

MAX_LAPLACIAN_ORDER = 6


@dataclass(frozen=True, eq=False)
class ComponentFunction:
    """F = f_0 + f_1 q + ... + f_{N-1} q^{N-1} with polynomial components in x_0..x_{N-1}"""
    order: int
    sign: int
    components: Tuple[MultiPoly, ...]

    def __post_init__(self):
        if len(self.components) != self.order:
            raise StructureMismatch(f"C_{self.order} function needs {self.order} components")
        if any(f.nvars != self.order for f in self.components):
            raise StructureMismatch(f"components must be polynomials in {self.order} variables")

    @classmethod
    def from_number(cls, z: CnNumber) -> 'ComponentFunction':
        return cls(z.order, z.sign, tuple(z.coeffs))

    def as_number(self) -> CnNumber:
        return CnNumber(self.order, self.sign, self.components)

    def is_zero(self) -> bool:
        return not any(self.components)

    def __mul__(self, other: 'ComponentFunction') -> 'ComponentFunction':
        return ComponentFunction.from_number(cn_mul(self.as_number(), other.as_number()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, ComponentFunction):
            return NotImplemented
        return (self.order, self.sign) == (other.order, other.sign) and \
            all(a == b for a, b in zip(self.components, other.components))

    def render(self) -> List[str]:
        return [f'f{m} = {render_poly(f)}' for m, f in enumerate(self.components)]


@dataclass(frozen=True)
class OperatorEntry:
    """coefficient * q^power"""
    coefficient: Cyclotomic
    power: int

    def render(self) -> str:
        basis = '1' if self.power == 0 else ('q' if self.power == 1 else f'q^{self.power}')
        if self.coefficient == 1:
            return basis
        if self.coefficient == -1:
            return f'-{basis}'
        return f'({self.coefficient}) {basis}'


@dataclass(frozen=True)
class DerivativeOperatorMatrix:
    """entries[s][r]: weight of d_r in d/dz_s"""
    order: int
    sign: int
    entries: Tuple[Tuple[OperatorEntry, ...], ...]

    def scaled_rows(self) -> List[List[str]]:
        """N times the table, as displayed"""
        return [[OperatorEntry(e.coefficient * self.order, e.power).render() for e in row]
                for row in self.entries]


def _check_index(order: int, s: int) -> None:
    if not isinstance(s, int) or not 0 <= s < order:
        raise IndexError(f"conjugate index must be in 0..{order - 1}, got {s!r}")


def derivative_operator_matrix(order: int, sign: int) -> DerivativeOperatorMatrix:
    """
    d/dz_s = (1/N) sum_r zeta^{-sr} q^{-r} d_r.

    q^{-r} is stored as eps * q^{N-r} for r >= 1.
    """
    rows = []
    for s in range(order):
        row = []
        for r in range(order):
            weight = zeta(order, -s * r) / order
            if r and sign < 0:
                weight = -weight
            row.append(OperatorEntry(weight, (order - r) % order))
        rows.append(tuple(row))
    return DerivativeOperatorMatrix(order, sign, tuple(rows))


def _shift(components: Sequence[MultiPoly], power: int, sign: int) -> List[MultiPoly]:
    """Components of q^power * F"""
    order = len(components)
    out = []
    for m in range(order):
        source = components[(m - power) % order]
        out.append(-source if (m < power and sign < 0) else source)
    return out


def coordinate_derivative(f: ComponentFunction, r: int) -> List[MultiPoly]:
    _check_index(f.order, r)
    return [component.partial_derivative(r) for component in f.components]


def conj_derivative(f: ComponentFunction, s: int) -> ComponentFunction:
    _check_index(f.order, s)
    table = derivative_operator_matrix(f.order, f.sign)
    total = [MultiPoly.zero(f.order) for _ in range(f.order)]
    for r, entry in enumerate(table.entries[s]):
        shifted = _shift(coordinate_derivative(f, r), entry.power, f.sign)
        total = [t + d * entry.coefficient for t, d in zip(total, shifted)]
    return ComponentFunction(f.order, f.sign, tuple(total))


def reconstruct_coordinate_derivative(f: ComponentFunction, r: int) -> ComponentFunction:
    """d_r F rebuilt as q^r sum_s zeta^{sr} dF/dz_s"""
    _check_index(f.order, r)
    total = [MultiPoly.zero(f.order) for _ in range(f.order)]
    for s in range(f.order):
        derivative = conj_derivative(f, s)
        weight = zeta(f.order, s * r)
        total = [t + d * weight for t, d in zip(total, derivative.components)]
    return ComponentFunction(f.order, f.sign, tuple(_shift(total, r, f.sign)))


def power_function(order: int, sign: int, k: int) -> ComponentFunction:
    """Components of z^k for the generic z = x_0 + x_1 q + ..."""
    if k < 0:
        raise ValueError("polynomial powers need k >= 0")
    return ComponentFunction.from_number(cn_pow(CnNumber.symbolic(order, sign), k))


def cr_chains(order: int, sign: int) -> List[List[Tuple[int, int, int]]]:
    """
    First-type Cauchy-Riemann chains.

    Chain d lists (r, m, factor) meaning d_0 f_d = factor * d_r f_m, m = d + r mod N;
    factor is eps when d + r wraps past N.
    """
    chains = []
    for d in range(order):
        chain = []
        for r in range(order):
            m = (d + r) % order
            chain.append((r, m, sign if d + r >= order else 1))
        chains.append(chain)
    return chains


def holomorphy_types(order: int) -> range:
    """Type k requires dF/dz_s = 0 for s = k..N-1; type 1 is the first type"""
    return range(1, order)


def cr_system_check(f: ComponentFunction, kind: int = 1, label: str = 'F') -> List[Check]:
    if kind not in holomorphy_types(f.order):
        raise ValueError(f"holomorphy type must be in 1..{f.order - 1} for N={f.order}, got {kind!r}")
    prefix = f'holomorphy[{f.order},{sign_text(f.sign)}].{label}'
    checks = []
    for s in range(kind, f.order):
        derivative = conj_derivative(f, s)
        checks.append(Check(
            name=f'{prefix}.type{kind}.dz{s}',
            passed=derivative.is_zero(),
            expected='0',
            actual='0' if derivative.is_zero() else '; '.join(derivative.render()),
            provenance='vanishing conjugate derivative',
        ))
    if kind == 1:
        for d, chain in enumerate(cr_chains(f.order, f.sign)):
            base = f.components[d].partial_derivative(0)
            broken = []
            for r, m, factor in chain[1:]:
                other = f.components[m].partial_derivative(r)
                if base != (other if factor > 0 else -other):
                    sign = '' if factor > 0 else '-'
                    broken.append(f'd0 f{d} != {sign}d{r} f{m}')
            checks.append(Check(
                name=f'{prefix}.chain{d}',
                passed=not broken,
                expected=' = '.join(f"{'' if fa > 0 else '-'}d{r} f{m}" for r, m, fa in chain),
                actual='; '.join(broken) or 'all equal',
                provenance='Cauchy-Riemann parity',
            ))
    return checks


def nary_laplacian(order: int, sign: int) -> MultiPoly:
    """The norm form with x_r read as d_r"""
    if not 2 <= order <= MAX_LAPLACIAN_ORDER:
        raise ValueError(f"Laplace operators are built for 2 <= N <= {MAX_LAPLACIAN_ORDER}, got {order}")
    return expand_norm_form(order, sign).form


def apply_operator(op: MultiPoly, f: MultiPoly) -> MultiPoly:
    if op.nvars != f.nvars:
        raise StructureMismatch(f"operator in {op.nvars} symbols applied to a polynomial in {f.nvars}")
    result = MultiPoly.zero(f.nvars)
    for exps, coeff in op.terms.items():
        term = f
        for var, power in enumerate(exps):
            if not term:
                break
            for _ in range(power):
                term = term.partial_derivative(var)
        if term:
            result = result + term * coeff
    return result


def factorized_laplacian(order: int, sign: int = 1) -> MultiPoly:
    """
    Product over the roots w of q^N = eps of (d_0 + w d_1 + ... + w^{N-1} d_{N-1}).

    The roots are zeta_N^s for eps = +1 and zeta_{2N}^{2s+1} for eps = -1.
    """
    d = MultiPoly.variables(order)
    product = MultiPoly.one(order)
    for s in range(order):
        root = zeta(order, s) if sign > 0 else zeta(2 * order, 2 * s + 1)
        factor = MultiPoly.zero(order)
        power = Cyclotomic.rational(1)
        for r in range(order):
            factor = factor + d[r] * power
            power = power * root
        product = product * factor
    return product


# -- checks used by the verification battery --------------------------------

def holomorphic_power_checks(order: int, sign: int, max_power: int) -> List[Check]:
    checks = []
    laplacian = nary_laplacian(order, sign)
    for k in range(1, max_power + 1):
        f = power_function(order, sign, k)
        checks.extend(cr_system_check(f, 1, label=f'z^{k}'))
        derivative = conj_derivative(f, 0)
        expected = ComponentFunction.from_number(
            cn_pow(CnNumber.symbolic(order, sign), k - 1) * Fraction(k))
        checks.append(Check(
            name=f'holomorphy[{order},{sign_text(sign)}].z^{k}.dz0',
            passed=derivative == expected,
            expected=f'{k} z^{k - 1}',
            actual='; '.join(derivative.render()),
            provenance='derivative of a power',
        ))
        residuals = [apply_operator(laplacian, component) for component in f.components]
        checks.append(Check(
            name=f'holomorphy[{order},{sign_text(sign)}].z^{k}.laplacian',
            passed=not any(residuals),
            expected='0 on every component',
            actual=', '.join(render_poly(r) for r in residuals),
            provenance='N-ary harmonicity of holomorphic components',
        ))
    return checks


def inverse_parity_check(order: int, sign: int) -> Check:
    """Coordinate derivatives rebuilt from the conjugate ones on a non-holomorphic F"""
    x = MultiPoly.variables(order)
    components = tuple(x[m] ** 2 * x[(m + 1) % order] + x[m] * (m + 1) for m in range(order))
    f = ComponentFunction(order, sign, components)
    bad = []
    for r in range(order):
        direct = ComponentFunction(order, sign, tuple(coordinate_derivative(f, r)))
        if reconstruct_coordinate_derivative(f, r) != direct:
            bad.append(r)
    return Check(
        name=f'holomorphy[{order},{sign_text(sign)}].inverse_parities',
        passed=not bad,
        expected='d_r F = q^r sum_s zeta^{sr} dF/dz_s',
        actual=f'mismatch for r in {bad}' if bad else 'all r',
        provenance='inverse parities',
    )


def product_rule_check(order: int, sign: int) -> Check:
    """Holomorphy is closed under products"""
    product = power_function(order, sign, 2) * power_function(order, sign, 3)
    passed = all(c.passed for c in cr_system_check(product, 1, label='z^2*z^3'))
    return Check(
        name=f'holomorphy[{order},{sign_text(sign)}].product_closed',
        passed=passed and product == power_function(order, sign, 5),
        expected='z^2 z^3 = z^5, first type',
        actual='first type' if passed else 'not holomorphic',
        provenance='products of holomorphic functions',
    )


def factorization_laplacian_check(order: int, sign: int) -> Check:
    factored = factorized_laplacian(order, sign)
    expanded = nary_laplacian(order, sign)
    return Check(
        name=f'holomorphy[{order},{sign_text(sign)}].laplacian_factors',
        passed=factored == expanded,
        expected=render_poly(expanded),
        actual=render_poly(factored),
        provenance='factorized Laplace operator',
    )
